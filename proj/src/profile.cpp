#include "qem/profile.hpp"

#include <algorithm>
#include <cmath>

namespace qem {

namespace {

// u^n for small nonnegative integer n
double ipow(double u, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= u;
    return r;
}

struct State {
    double u, v;
};

// one classical 4th-order step of u' = v, v' = f(u)
State rk4_step(const ProfileProblem& pr, State s, double h) {
    const double k1u = s.v, k1v = pr.rhs(s.u);
    const double k2u = s.v + 0.5 * h * k1v, k2v = pr.rhs(s.u + 0.5 * h * k1u);
    const double k3u = s.v + 0.5 * h * k2v, k3v = pr.rhs(s.u + 0.5 * h * k2u);
    const double k4u = s.v + h * k3v, k4v = pr.rhs(s.u + h * k3u);
    return {s.u + h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u),
            s.v + h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)};
}

}  // namespace

const char* profile_kind_name(ProfileKind k) {
    switch (k) {
    case ProfileKind::KobayashiP: return "kobayashi-p";
    case ProfileKind::EtaProfile: return "eta-profile";
    case ProfileKind::RadialP: return "radial-p";
    case ProfileKind::TauProfile: return "tau-profile";
    case ProfileKind::PotentialW: return "potential-w";
    }
    return "?";
}

void ProfileProblem::validate() const {
    if (m < 2) throw Error(ErrorCode::Argument, "m must be an integer >= 2");
    if (!std::isfinite(a) || !std::isfinite(rho) || !std::isfinite(lambda) || !std::isfinite(k))
        throw Error(ErrorCode::Argument, "profile parameters must be finite");
}

double ProfileProblem::c2() const {
    switch (kind) {
    case ProfileKind::KobayashiP: return rho;
    case ProfileKind::EtaProfile: return lambda / double(m + 2);
    case ProfileKind::RadialP: return lambda / double(m + 2);
    case ProfileKind::TauProfile: return k;
    case ProfileKind::PotentialW: return 0.0;
    }
    return 0.0;
}

double ProfileProblem::c3() const {
    switch (kind) {
    case ProfileKind::KobayashiP: return 2.0 * a / double(m - 1);
    case ProfileKind::EtaProfile: return 0.0;
    case ProfileKind::RadialP: return 2.0 * a / double(m);
    case ProfileKind::TauProfile: return 0.0;
    case ProfileKind::PotentialW: return 2.0 * a / double(m - 1);
    }
    return 0.0;
}

int ProfileProblem::rexp() const {
    switch (kind) {
    case ProfileKind::KobayashiP: return m - 1;
    case ProfileKind::RadialP: return m;
    case ProfileKind::PotentialW: return m - 1;
    default: return 0;
    }
}

double ProfileProblem::first_integral(double value, double slope) const {
    if (c3() != 0.0 && value <= 0.0)
        throw Error(ErrorCode::Domain, "profile value must be positive");
    double fi = slope * slope + c2() * value * value;
    if (c3() != 0.0) fi += c3() / ipow(value, rexp());
    return fi;
}

double ProfileProblem::rhs(double u) const {
    double f = -c2() * u;
    if (c3() != 0.0) {
        if (u <= 0.0) throw Error(ErrorCode::Domain, "profile value must be positive");
        f += 0.5 * rexp() * c3() / ipow(u, rexp() + 1);
    }
    return f;
}

double ProfileProblem::rhs_d(double u) const {
    double f = -c2();
    if (c3() != 0.0) f -= 0.5 * rexp() * (rexp() + 1) * c3() / ipow(u, rexp() + 2);
    return f;
}

double ProfileProblem::rhs_dd(double u) const {
    if (c3() == 0.0) return 0.0;
    return 0.5 * rexp() * (rexp() + 1) * (rexp() + 2) * c3() / ipow(u, rexp() + 3);
}

ProfileProblem ProfileProblem::kobayashi_p(double rho, double a, int m) {
    ProfileProblem p;
    p.kind = ProfileKind::KobayashiP;
    p.rho = rho;
    p.a = a;
    p.m = m;
    return p;
}
ProfileProblem ProfileProblem::eta_profile(double lambda, int m) {
    ProfileProblem p;
    p.kind = ProfileKind::EtaProfile;
    p.lambda = lambda;
    p.m = m;
    return p;
}
ProfileProblem ProfileProblem::radial_p(double lambda, double a, int m) {
    ProfileProblem p;
    p.kind = ProfileKind::RadialP;
    p.lambda = lambda;
    p.a = a;
    p.m = m;
    return p;
}
ProfileProblem ProfileProblem::tau_profile(double k, int m) {
    ProfileProblem p;
    p.kind = ProfileKind::TauProfile;
    p.k = k;
    p.m = m;
    return p;
}
ProfileProblem ProfileProblem::potential_w(double a, int m) {
    ProfileProblem p;
    p.kind = ProfileKind::PotentialW;
    p.a = a;
    p.m = m;
    return p;
}

ProfileSolution integrate(const ProfileProblem& problem, double value0, double slope0,
                          const IntegrateOptions& opts) {
    problem.validate();
    if (!(value0 > 0.0)) throw Error(ErrorCode::Argument, "initial value must be positive");
    if (!(opts.step > 0.0 && opts.step <= 0.1))
        throw Error(ErrorCode::Argument, "step must be in (0, 0.1]");
    if (!(opts.span_lo <= 0.0 && opts.span_hi >= 0.0))
        throw Error(ErrorCode::Argument, "span must contain s = 0");

    const double fi0 = problem.first_integral(value0, slope0);
    double level;
    if (problem.conserved_level) {
        level = *problem.conserved_level;
        const double tol = 1e-12 * std::max(1.0, std::abs(level));
        if (std::abs(fi0 - level) > tol)
            throw Error(ErrorCode::Argument,
                        "initial data inconsistent with the declared conserved level");
    } else {
        level = fi0;
    }

    const long n_lo = std::lround(-opts.span_lo / opts.step);
    const long n_hi = std::lround(opts.span_hi / opts.step);

    ProfileSolution sol;
    sol.problem = problem;
    sol.problem.conserved_level = level;
    sol.level = level;
    sol.step = opts.step;

    auto admissible = [&](const State& s) {
        return std::isfinite(s.u) && std::isfinite(s.v) && s.u > opts.floor_exit &&
               s.u < opts.ceiling_exit;
    };

    std::vector<State> fwd{State{value0, slope0}}, bwd;
    std::string exit_reason;
    bool early = false;
    for (long i = 0; i < n_hi; ++i) {
        State nxt = rk4_step(problem, fwd.back(), opts.step);
        if (!admissible(nxt)) {
            early = true;
            exit_reason = !std::isfinite(nxt.u) || !std::isfinite(nxt.v) ? "nonfinite"
                          : nxt.u <= opts.floor_exit ? "value-floor"
                                                     : "value-ceiling";
            break;
        }
        fwd.push_back(nxt);
    }
    for (long i = 0; i < n_lo; ++i) {
        State prev = bwd.empty() ? rk4_step(problem, State{value0, slope0}, -opts.step)
                                 : rk4_step(problem, bwd.back(), -opts.step);
        if (!admissible(prev)) {
            early = true;
            if (exit_reason.empty())
                exit_reason = !std::isfinite(prev.u) || !std::isfinite(prev.v) ? "nonfinite"
                              : prev.u <= opts.floor_exit ? "value-floor"
                                                          : "value-ceiling";
            break;
        }
        bwd.push_back(prev);
    }
    if (fwd.size() == 1 && bwd.empty() && (n_hi > 0 || n_lo > 0))
        throw Error(ErrorCode::SingularProfile,
                    "profile exits the admissible range at the first step: " + exit_reason);

    sol.s_min = -double(bwd.size()) * opts.step;
    sol.exited_early = early;
    sol.exit_reason = exit_reason;
    const long total = long(bwd.size()) + long(fwd.size());
    sol.value.reserve(total);
    sol.d1.reserve(total);
    sol.d2.reserve(total);
    sol.d3.reserve(total);
    sol.drift.reserve(total);
    double floor_v = 1e300, max_drift = 0.0, inf_d1 = 1e300;
    auto push = [&](const State& s) {
        sol.value.push_back(s.u);
        sol.d1.push_back(s.v);
        sol.d2.push_back(problem.rhs(s.u));
        sol.d3.push_back(problem.rhs_d(s.u) * s.v);
        const double dr = std::abs(problem.first_integral(s.u, s.v) - level);
        sol.drift.push_back(dr);
        floor_v = std::min(floor_v, s.u);
        max_drift = std::max(max_drift, dr);
        inf_d1 = std::min(inf_d1, std::abs(s.v));
    };
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) push(*it);
    for (const auto& s : fwd) push(s);
    sol.floor_value = floor_v;
    sol.drift_bound = max_drift;
    sol.inf_abs_d1 = inf_d1;
    return sol;
}

std::pair<double, double> ProfileSolution::state_at(double s) const {
    if (value.empty()) throw Error(ErrorCode::Domain, "empty profile solution");
    const double hi = s_max();
    if (s < s_min - 1e-12 || s > hi + 1e-12)
        throw Error(ErrorCode::Domain, "requested point outside the integrated span");
    long i = std::lround((s - s_min) / step);
    i = std::clamp(i, long(0), long(value.size()) - 1);
    State st{value[std::size_t(i)], d1[std::size_t(i)]};
    const double delta = s - s_at(std::size_t(i));
    if (delta != 0.0) st = rk4_step(problem, st, delta);
    return {st.u, st.v};
}

RootScan derivative_roots(const ProfileSolution& sol) {
    RootScan scan;
    if (sol.value.empty()) return scan;
    double scale = 0.0;
    for (double v : sol.d1) scale = std::max(scale, std::abs(v));
    if (scale < 1e-14) {
        scan.degenerate = true;  // constant solution: d1 vanishes identically
        return scan;
    }
    auto slope_at = [&](double s) { return sol.state_at(s).second; };
    const std::size_t n = sol.value.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sol.d1[i] == 0.0) {
            scan.roots.push_back(sol.s_at(i));
            continue;
        }
        if (i + 1 >= n || sol.d1[i + 1] == 0.0) continue;
        if ((sol.d1[i] < 0) == (sol.d1[i + 1] < 0)) continue;
        double lo = sol.s_at(i), hi = sol.s_at(i + 1);
        double flo = sol.d1[i];
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fm = slope_at(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        scan.roots.push_back(0.5 * (lo + hi));
    }
    return scan;
}

AxisClosure axis_closure(const ProfileSolution& sol) {
    const RootScan scan = derivative_roots(sol);
    if (scan.degenerate)
        throw Error(ErrorCode::NotAxisClosable, "constant profile has no isolated critical point");
    if (scan.roots.size() != 1)
        throw Error(ErrorCode::NotAxisClosable,
                    "axis closure needs exactly one critical point, found " +
                        std::to_string(scan.roots.size()));
    AxisClosure ax;
    ax.root = scan.roots.front();
    ax.d2_at_root = sol.problem.rhs(sol.state_at(ax.root).first);
    if (!(ax.d2_at_root > 0.0))
        throw Error(ErrorCode::ConeSingular, "nonpositive profile curvature at the axis");
    ax.period = 2.0 * M_PI / ax.d2_at_root;
    return ax;
}

std::optional<OscillationData> detect_oscillation(const ProfileSolution& sol) {
    const RootScan scan = derivative_roots(sol);
    if (scan.degenerate || scan.roots.size() < 5) return std::nullopt;
    OscillationData osc;
    double lo = 1e300, hi = -1e300;
    for (double r : scan.roots) {
        const double v = sol.state_at(r).first;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    osc.turn_lo = lo;
    osc.turn_hi = hi;
    double pmin = 1e300, pmax = 0.0, psum = 0.0;
    int cnt = 0;
    for (std::size_t i = 0; i + 2 < scan.roots.size(); ++i) {
        const double T = scan.roots[i + 2] - scan.roots[i];
        pmin = std::min(pmin, T);
        pmax = std::max(pmax, T);
        psum += T;
        ++cnt;
    }
    osc.period = psum / cnt;
    osc.period_jitter = pmax - pmin;
    osc.cycles = cnt;
    return osc;
}

CurvePtr closed_form_profile(const ProfileProblem& problem, double value0, double slope0) {
    problem.validate();
    if (problem.kind != ProfileKind::EtaProfile && problem.kind != ProfileKind::TauProfile)
        throw Error(ErrorCode::Argument,
                    "closed forms exist for the linear-restoring families only");
    // u'' = -c2 u: branch by the sign of the restoring coefficient
    const double c2 = problem.c2();
    if (problem.conserved_level) {
        const double fi0 = problem.first_integral(value0, slope0);
        if (std::abs(fi0 - *problem.conserved_level) >
            1e-12 * std::max(1.0, std::abs(*problem.conserved_level)))
            throw Error(ErrorCode::Argument,
                        "initial data inconsistent with the declared conserved level");
    }
    if (c2 < 0.0) {
        const double w = std::sqrt(-c2);
        return std::make_shared<HyperbolicCurve>(value0, slope0 / w, w);
    }
    if (c2 > 0.0) {
        const double w = std::sqrt(c2);
        return std::make_shared<TrigCurve>(value0, slope0 / w, w);
    }
    return std::make_shared<LinearCurve>(value0, slope0);
}

Jet5 OdeCurve::jet(double s) const {
    const auto [u, v] = sol_.state_at(s);
    const ProfileProblem& pr = sol_.problem;
    Jet5 j;
    j.d[0] = u;
    j.d[1] = v;
    j.d[2] = pr.rhs(u);
    j.d[3] = pr.rhs_d(u) * v;
    j.d[4] = pr.rhs_dd(u) * v * v + pr.rhs_d(u) * pr.rhs(u);
    return j;
}

}  // namespace qem
