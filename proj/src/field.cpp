#include "qem/field.hpp"

namespace qem {

namespace {

// derivatives 0..3 of (curve^(shift))^power at s, via truncated series
std::array<double, 4> factor_tower(const CurveFactor& fac, double s) {
    Jet5 j = fac.curve->jet(s);
    Jet5 shifted;
    for (int k = 0; k + fac.shift < 5; ++k) shifted.d[k] = j.d[k + fac.shift];
    Series5 ser = pow_int(shifted.to_series(), fac.power);
    return {ser.deriv(0), ser.deriv(1), ser.deriv(2), ser.deriv(3)};
}

// 4th-order central stencils for the finite-difference field variant
double fd_partial1(const std::function<double(const Point&)>& f, Point p, int a, double h) {
    auto at = [&](double off) {
        Point q = p;
        q[a] += off;
        return f(q);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

double fd_partial2(const std::function<double(const Point&)>& f, Point p, int a, int b, double h) {
    if (a == b) {
        auto at = [&](double off) {
            Point q = p;
            q[a] += off;
            return f(q);
        };
        return (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
    }
    static const double c[4] = {1.0, -8.0, 8.0, -1.0};
    static const double o[4] = {-2.0, -1.0, 1.0, 2.0};
    double s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Point q = p;
            q[a] += o[i] * h;
            q[b] += o[j] * h;
            s += c[i] * c[j] * f(q);
        }
    return s / (144 * h * h);
}

}  // namespace

double ScalarField::partial(const Point& p, const MultiIndex& mi) const {
    const int order = total_order(mi);
    if (fd_eval_) {
        if (order == 0) return fd_eval_(p);
        if (order == 1) {
            for (int a = 0; a < kMaxDim; ++a)
                if (mi[a] == 1) return fd_partial1(fd_eval_, p, a, fd_h_);
        }
        if (order == 2) {
            int first = -1;
            for (int a = 0; a < kMaxDim; ++a) {
                if (mi[a] == 2) return fd_partial2(fd_eval_, p, a, a, fd_h_);
                if (mi[a] == 1) {
                    if (first < 0)
                        first = a;
                    else
                        return fd_partial2(fd_eval_, p, first, a, fd_h_);
                }
            }
        }
        throw Error(ErrorCode::Capability, "finite-difference field supports order <= 2");
    }
    if (order > 3) throw Error(ErrorCode::Capability, "field partial order > 3");
    return jet(p, kMaxDim).partial(mi);
}

FieldJet ScalarField::jet(const Point& p, int dim) const {
    if (fd_eval_)
        throw Error(ErrorCode::Capability,
                    "finite-difference field has no analytic derivative tower");
    FieldJet out;
    out.dim = dim;
    for (int a = 0; a < kMaxDim; ++a) out.tower[a] = {1.0, 0.0, 0.0, 0.0};
    bool first_on_axis[kMaxDim] = {true, true, true, true};
    for (const auto& fac : factors_) {
        auto t = factor_tower(fac, p[fac.axis]);
        auto& acc = out.tower[fac.axis];
        if (first_on_axis[fac.axis]) {
            acc = t;
            first_on_axis[fac.axis] = false;
        } else {
            Jet5 a5, b5;
            for (int k = 0; k < 4; ++k) {
                a5.d[k] = acc[k];
                b5.d[k] = t[k];
            }
            Series5 prod = a5.to_series() * b5.to_series();
            acc = {prod.deriv(0), prod.deriv(1), prod.deriv(2), prod.deriv(3)};
        }
    }
    // fold the scalar coefficient into one axis; it scales the whole product
    for (int k = 0; k < 4; ++k) out.tower[0][k] *= coeff_;
    return out;
}

}  // namespace qem
