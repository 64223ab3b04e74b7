#pragma once

// One-dimensional profile functions carrying exact derivative towers to
// fourth order. Closed forms cover the linear / trigonometric / hyperbolic
// branches; ODE-backed curves live in profile.hpp.

#include <cmath>
#include <memory>

#include "qem/taylor.hpp"

namespace qem {

class Curve {
public:
    virtual ~Curve() = default;
    // derivatives of order 0..4 at s
    virtual Jet5 jet(double s) const = 0;
    virtual bool ode_backed() const { return false; }

    double value(double s) const { return jet(s).d[0]; }
};

using CurvePtr = std::shared_ptr<const Curve>;

class ConstantCurve final : public Curve {
public:
    explicit ConstantCurve(double c) : c_(c) {}
    Jet5 jet(double) const override {
        Jet5 j;
        j.d[0] = c_;
        return j;
    }

private:
    double c_;
};

// c0 + c1 s
class LinearCurve final : public Curve {
public:
    LinearCurve(double c0, double c1) : c0_(c0), c1_(c1) {}
    Jet5 jet(double s) const override {
        Jet5 j;
        j.d[0] = c0_ + c1_ * s;
        j.d[1] = c1_;
        return j;
    }

private:
    double c0_, c1_;
};

// A cosh(w s) + B sinh(w s); covers exponentials (A = ±B)
class HyperbolicCurve final : public Curve {
public:
    HyperbolicCurve(double A, double B, double omega) : A_(A), B_(B), w_(omega) {}
    Jet5 jet(double s) const override {
        const double ch = std::cosh(w_ * s), sh = std::sinh(w_ * s);
        Jet5 j;
        double even = A_ * ch + B_ * sh;   // derivative orders 0, 2, 4 pattern
        double odd = w_ * (A_ * sh + B_ * ch);
        j.d[0] = even;
        j.d[1] = odd;
        j.d[2] = w_ * w_ * even;
        j.d[3] = w_ * w_ * odd;
        j.d[4] = w_ * w_ * w_ * w_ * even;
        return j;
    }

private:
    double A_, B_, w_;
};

// A cos(w s) + B sin(w s)
class TrigCurve final : public Curve {
public:
    TrigCurve(double A, double B, double omega) : A_(A), B_(B), w_(omega) {}
    Jet5 jet(double s) const override {
        const double c = std::cos(w_ * s), sn = std::sin(w_ * s);
        Jet5 j;
        double f = A_ * c + B_ * sn;
        double f1 = w_ * (-A_ * sn + B_ * c);
        j.d[0] = f;
        j.d[1] = f1;
        j.d[2] = -w_ * w_ * f;
        j.d[3] = -w_ * w_ * f1;
        j.d[4] = w_ * w_ * w_ * w_ * f;
        return j;
    }

private:
    double A_, B_, w_;
};

// scalar multiple of another curve
class ScaledCurve final : public Curve {
public:
    ScaledCurve(CurvePtr base, double factor) : base_(std::move(base)), f_(factor) {}
    Jet5 jet(double s) const override {
        Jet5 j = base_->jet(s);
        for (auto& d : j.d) d *= f_;
        return j;
    }
    bool ode_backed() const override { return base_->ode_backed(); }

private:
    CurvePtr base_;
    double f_;
};

// solution of u'' = -K u with u(0)=0, u'(0)=1: the model warping function of
// the constant-curvature metric  dx^2 + u(x)^2 dy^2  with curvature K
inline CurvePtr model_warping(double curvature) {
    if (curvature > 0.0) {
        const double w = std::sqrt(curvature);
        return std::make_shared<TrigCurve>(0.0, 1.0 / w, w);
    }
    if (curvature < 0.0) {
        const double w = std::sqrt(-curvature);
        return std::make_shared<HyperbolicCurve>(0.0, 1.0 / w, w);
    }
    return std::make_shared<LinearCurve>(0.0, 1.0);
}

}  // namespace qem
