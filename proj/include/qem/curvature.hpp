#pragma once

// Curvature of diagonal metrics. Convention:
//   R_{ijkl} = < (D_i D_j - D_j D_i) d_k , d_l >
// so that sectional curvature of the round sphere is positive and
// Ric(Y,Z) = sum_i g^{ii} R_{iYZi}.

#include <array>
#include <vector>

#include "qem/field.hpp"
#include "qem/metric.hpp"

namespace qem {

using Christoffel = std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxDim>;  // [k][i][j]
using Sym2 = std::array<std::array<double, kMaxDim>, kMaxDim>;

struct CurvatureData {
    int dim = 3;
    Christoffel christoffel{};
    double riemann[kMaxDim][kMaxDim][kMaxDim][kMaxDim] = {};
    Sym2 ricci{};
    double scalar = 0.0;
};

// first derivatives of the Ricci tensor and scalar curvature
struct CurvatureDeriv {
    int dim = 3;
    double dricci[kMaxDim][kMaxDim][kMaxDim] = {};  // dricci[a][j][k] = d_a R_jk
    std::array<double, kMaxDim> dscalar{};
};

struct EigenReport {
    std::vector<double> eigenvalues;            // ascending
    std::vector<int> multiplicities;            // per distinct group
    std::vector<std::vector<int>> axes;         // coordinate directions per group
    std::vector<std::vector<bool>> distinct;    // pairwise distinctness at tol
    int distinct_count() const { return int(multiplicities.size()); }
};

// ---- operations on metric jets (building blocks, also used by the FD oracle)
Christoffel christoffel_from_jet(const MetricJet& mj);
void dchristoffel_from_jet(const MetricJet& mj,
                           double dG[kMaxDim][kMaxDim][kMaxDim][kMaxDim]);  // [a][k][i][j]
CurvatureData curvature_from_jet(const MetricJet& mj);
CurvatureDeriv curvature_deriv_from_jet(const MetricJet& mj);
// independent assembly from second derivatives of g plus Gamma*Gamma terms
void riemann_via_second_derivs(const MetricJet& mj,
                               double R[kMaxDim][kMaxDim][kMaxDim][kMaxDim]);

// ---- point operations
Christoffel christoffel_symbols(const DiagonalMetric& metric, const Point& p);
CurvatureData curvature(const DiagonalMetric& metric, const Point& p);
Sym2 hessian(const ScalarField& field, const DiagonalMetric& metric, const Point& p);
EigenReport ricci_eigenstructure(const DiagonalMetric& metric, const Point& p, double tol);

// max |analytic - finite difference| over all Riemann components, with the FD
// side built from 4th-order stencils on the component eval functions only
double fd_cross_check(const DiagonalMetric& metric, const Point& p, double h);

// FD-sourced metric jet (order 2), shared with tests
MetricJet fd_metric_jet(const DiagonalMetric& metric, const Point& p, double h);

}  // namespace qem
