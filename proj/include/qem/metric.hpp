#pragma once

// Diagonal metrics with analytic derivative towers on their components.

#include <vector>

#include "qem/chart.hpp"
#include "qem/field.hpp"

namespace qem {

// All partial derivatives of the diagonal components at one point, up to the
// requested order (2 for curvature, 3 for derivatives of curvature).
struct MetricJet {
    int dim = 3;
    int order = 2;
    std::array<double, kMaxDim> g{};                                          // g_ii
    std::array<std::array<double, kMaxDim>, kMaxDim> dg{};                    // dg[i][a]
    std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxDim> ddg{};
    std::array<std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxDim>, kMaxDim> dddg{};
};

class DiagonalMetric {
public:
    DiagonalMetric(CoordChart chart, std::vector<ScalarField> components)
        : chart_(std::move(chart)), components_(std::move(components)) {
        chart_.validate();
        if (int(components_.size()) != chart_.dim)
            throw Error(ErrorCode::Argument, "need one metric component per coordinate");
    }

    const CoordChart& chart() const { return chart_; }
    int dim() const { return chart_.dim; }
    const ScalarField& component(int i) const { return components_[i]; }

    void require_inside(const Point& p) const {
        if (!chart_.contains(p))
            throw Error(ErrorCode::Domain, "point outside chart");
    }

    // component values only, no positivity check (used by FD stencils)
    std::array<double, kMaxDim> eval(const Point& p) const {
        std::array<double, kMaxDim> g{};
        for (int i = 0; i < dim(); ++i) g[i] = components_[i].eval(p);
        return g;
    }

    MetricJet jet(const Point& p, int order) const;

private:
    CoordChart chart_;
    std::vector<ScalarField> components_;
};

}  // namespace qem
