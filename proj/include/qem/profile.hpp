#pragma once

// Profile ODE engine. Every family shares the first-integral shape
//   (u')^2 + C2 u^2 + C3 u^(-r) = level
// with second-order form u'' = -C2 u + (r/2) C3 u^(-r-1), integrated by the
// classical 4th-order one-step method at fixed step. Derivative towers come
// from the right-hand side, never from differencing.

#include <optional>
#include <string>
#include <vector>

#include "qem/curve.hpp"
#include "qem/errors.hpp"

namespace qem {

enum class ProfileKind {
    KobayashiP,  // (p')^2 + rho p^2 + 2a/(m-1) p^(1-m) = mu/(m-1)
    EtaProfile,  // (eta')^2 + lambda/(m+2) eta^2 = rho
    RadialP,     // (p')^2 + lambda/(m+2) p^2 + 2a/m p^(-m) = k
    TauProfile,  // (tau')^2 + k tau^2 = mu/(m-1)
    PotentialW,  // (w')^2 + 2a/(m-1) w^(1-m) = mu/(m-1)
};

const char* profile_kind_name(ProfileKind k);

struct ProfileProblem {
    ProfileKind kind = ProfileKind::KobayashiP;
    int m = 2;
    double a = 0.0;
    double rho = 0.0;
    double lambda = 0.0;
    double k = 0.0;
    std::optional<double> conserved_level;

    void validate() const;

    // canonical first-integral coefficients
    double c2() const;
    double c3() const;
    int rexp() const;

    double first_integral(double value, double slope) const;
    double rhs(double u) const;      // u''
    double rhs_d(double u) const;    // d(u'')/du
    double rhs_dd(double u) const;

    static ProfileProblem kobayashi_p(double rho, double a, int m);
    static ProfileProblem eta_profile(double lambda, int m);
    static ProfileProblem radial_p(double lambda, double a, int m);
    static ProfileProblem tau_profile(double k, int m);
    static ProfileProblem potential_w(double a, int m);
};

struct IntegrateOptions {
    double step = 1e-3;
    double span_lo = -10.0;  // must be <= 0 <= span_hi; init sits at s = 0
    double span_hi = 10.0;
    double floor_exit = 1e-6;
    double ceiling_exit = 1e9;
};

struct ProfileSolution {
    ProfileProblem problem;
    double level = 0.0;
    double step = 1e-3;
    double s_min = 0.0;
    std::vector<double> value, d1, d2, d3;
    std::vector<double> drift;  // |first integral - level| per sample
    double drift_bound = 0.0;
    double floor_value = 0.0;   // min of value over the stored span
    double inf_abs_d1 = 0.0;
    bool exited_early = false;
    std::string exit_reason;

    double s_max() const { return s_min + step * double(value.size() - 1); }
    double s_at(std::size_t i) const { return s_min + step * double(i); }

    // (value, slope) at arbitrary s inside the stored span: one RK4 substep
    // from the nearest stored node
    std::pair<double, double> state_at(double s) const;
};

ProfileSolution integrate(const ProfileProblem& problem, double value0, double slope0,
                          const IntegrateOptions& opts = {});

struct RootScan {
    std::vector<double> roots;
    bool degenerate = false;  // d1 identically zero (constant solution)
};

// sign-change bracketing plus bisection to 1e-12
RootScan derivative_roots(const ProfileSolution& sol);

struct AxisClosure {
    double root = 0.0;
    double d2_at_root = 0.0;
    double period = 0.0;  // 2*pi / d2_at_root
};

AxisClosure axis_closure(const ProfileSolution& sol);

struct OscillationData {
    double turn_lo = 0.0;        // minimum turning value p1
    double turn_hi = 0.0;        // maximum turning value p2
    double period = 0.0;
    double period_jitter = 0.0;  // max spread of per-cycle period estimates
    int cycles = 0;
};

// detects oscillation between two positive turning values from the roots of d1
std::optional<OscillationData> detect_oscillation(const ProfileSolution& sol);

// closed forms (EtaProfile / TauProfile only): exact derivative tower, the
// branch is fixed by the sign of the restoring coefficient
CurvePtr closed_form_profile(const ProfileProblem& problem, double value0, double slope0);

// ODE-backed curve view over a stored solution
class OdeCurve final : public Curve {
public:
    explicit OdeCurve(ProfileSolution sol) : sol_(std::move(sol)) {}
    Jet5 jet(double s) const override;
    bool ode_backed() const override { return true; }
    const ProfileSolution& solution() const { return sol_; }

private:
    ProfileSolution sol_;
};

}  // namespace qem
