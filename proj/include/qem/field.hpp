#pragma once

// Scalar fields on a chart with exact partial derivatives to third order.
// Production fields are coefficient * product of one-dimensional curve
// factors, each factor living on a single coordinate axis; that shape covers
// every metric component and potential this toolkit constructs.

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "qem/chart.hpp"
#include "qem/curve.hpp"
#include "qem/taylor.hpp"

namespace qem {

enum class Provenance { ClosedForm, OdeBacked, FiniteDifference };

struct CurveFactor {
    CurvePtr curve;
    int axis = 0;
    int shift = 0;  // 0: the curve itself, 1: its derivative
    int power = 1;
};

// Per-axis derivative towers of a product field at one point; a mixed partial
// factorizes as the product of per-axis derivatives.
struct FieldJet {
    int dim = 3;
    // tower[a][k]: k-th derivative along axis a of the axis-a factor product
    std::array<std::array<double, 4>, kMaxDim> tower{};

    double partial(const MultiIndex& mi) const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) {
            if (mi[a] > 3) throw Error(ErrorCode::Capability, "field partial order > 3");
            v *= tower[a][mi[a]];
        }
        return v;
    }
    double value() const { return partial(MultiIndex{}); }
};

class ScalarField {
public:
    ScalarField() : ScalarField(constant(0.0)) {}

    static ScalarField constant(double c) {
        ScalarField f;
        f.coeff_ = c;
        f.prov_ = Provenance::ClosedForm;
        return f;
    }

    static ScalarField product(double coeff, std::vector<CurveFactor> factors) {
        ScalarField f;
        f.coeff_ = coeff;
        f.factors_ = std::move(factors);
        f.prov_ = Provenance::ClosedForm;
        for (const auto& fac : f.factors_) {
            if (fac.axis < 0 || fac.axis >= kMaxDim)
                throw Error(ErrorCode::Argument, "factor axis out of range");
            if (fac.shift < 0 || fac.shift > 1)
                throw Error(ErrorCode::Argument, "factor shift must be 0 or 1");
            if (fac.power < 1)
                throw Error(ErrorCode::Argument, "factor power must be >= 1");
            if (fac.curve->ode_backed()) f.prov_ = Provenance::OdeBacked;
        }
        return f;
    }

    // numeric-differencing field; order <= 2 partials via 4th-order stencils
    static ScalarField finite_difference(std::function<double(const Point&)> eval, double h) {
        ScalarField f;
        f.fd_eval_ = std::move(eval);
        f.fd_h_ = h;
        f.prov_ = Provenance::FiniteDifference;
        return f;
    }

    Provenance provenance() const { return prov_; }

    double eval(const Point& p) const {
        if (fd_eval_) return fd_eval_(p);
        double v = coeff_;
        for (const auto& fac : factors_) {
            Jet5 j = fac.curve->jet(p[fac.axis]);
            double base = j.d[fac.shift];
            for (int q = 0; q < fac.power; ++q) v *= base;
        }
        return v;
    }

    double partial(const Point& p, const MultiIndex& mi) const;

    // full per-axis tower; unavailable for finite-difference fields
    FieldJet jet(const Point& p, int dim) const;

private:
    double coeff_ = 0.0;
    std::vector<CurveFactor> factors_;
    Provenance prov_ = Provenance::ClosedForm;
    std::function<double(const Point&)> fd_eval_;
    double fd_h_ = 1e-3;
};

}  // namespace qem
