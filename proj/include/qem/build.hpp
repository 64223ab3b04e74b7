#pragma once

// Assembling verified spaces from profile solutions: the classified families,
// the locally conformally flat profile system, and the associated warped
// Einstein blocks at desk scale (m = 2, sphere or flat fiber).

#include <optional>

#include "qem/classify.hpp"
#include "qem/verify.hpp"

namespace qem {

struct BuildNumerics {
    double step = 1e-3;
    double profile_margin = 1.0;   // profile span beyond the chart range
    double collar_factor = 10.0;   // collar width = collar_factor * step
    double chart_margin = 0.04;    // extra gap between collar and chart edge
    std::array<int, kMaxDim> grid{21, 21, 21, 9};
};

// builds metric, potential and chart for a family parameter tuple; chart
// ranges exclude a collar around the critical points of the profile
QESpace build_space(const FamilyParams& params, const BuildNumerics& num = {});

// variant with a caller-supplied profile solution; throws InconsistentBuild
// when the profile's conserved level does not match the parameters
QESpace build_case1_space(const Case1Params& params, const ProfileSolution& p,
                          const BuildNumerics& num = {});

struct LcfParams {
    int m = 2;
    double lambda = 0.0;
    double k_section = 0.0;  // constant curvature of the 2-d section metric
    double h0 = 1.0, dh0 = 0.0;
    double w0 = 1.0, dw0 = 0.0;
    double span = 0.25;      // s in [-span, span]
};

struct LcfProfiles {
    CurvePtr h;
    CurvePtr w;
    double k_section = 0.0;
    double lambda = 0.0;
    int m = 2;
    double span = 0.0;
    double step = 1e-3;
    double system_residual = 0.0;  // max substitution residual of both equations
};

LcfProfiles solve_lcf_profiles(const LcfParams& params, double step = 1e-3);
QESpace build_lcf_space(const LcfProfiles& profiles, const BuildNumerics& num = {});

struct EinsteinMetric {
    DiagonalMetric metric;
    double lambda_target = 0.0;
    std::string name;
};

struct StaticBlock {
    DiagonalMetric metric;
    ScalarField potential;
    double lambda_target = 0.0;
    std::string name;
};

// radial reduction data for the 1-d warp over an Einstein block:
// g = dx1^2 + eta^2 g0 is Einstein iff  -(m+2) eta''/eta = lambda  and
// lambda eta^2 + (m+1)(eta')^2 + eta eta'' = (m+1) rho  along x1
struct RadialReduction {
    CurvePtr eta;
    int m = 2;
    double lambda = 0.0;
    double rho = 0.0;
    double x1_lo = -1.0, x1_hi = 1.0;
};

struct WarpedBlockSet {
    std::optional<EinsteinMetric> einstein_block;  // case (i): 4-d g0; case (ii): 3-d section
    std::optional<StaticBlock> static_block;       // case (ii): 4-d block with potential p'
    std::optional<RadialReduction> reduction;      // case (i)
};

// p_scale != 1 builds a deliberately broken block (profile scaled by the
// factor), the negative control for einstein_residual
WarpedBlockSet build_einstein_block(const FamilyParams& params, int fiber_dim = 2,
                                    const BuildNumerics& num = {}, double p_scale = 1.0);

ResidualReport einstein_residual(const EinsteinMetric& metric, const Grid& grid,
                                 double tol = 1e-5);
// static-structure residual: max of |Rc - V^{-1} grad dV - lambda g| and
// |Lap V + lambda V| in orthonormal components; certifies the Einstein
// property of the associated one-higher-dimensional metric
ResidualReport static_einstein_residual(const StaticBlock& block, const Grid& grid,
                                        double tol = 1e-5);
// max over x1 samples of the two radial reduction identities
ResidualReport radial_reduction_residual(const RadialReduction& red, int samples = 101,
                                         double tol = 1e-6);

}  // namespace qem
