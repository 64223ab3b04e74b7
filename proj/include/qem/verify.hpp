#pragma once

// Tensor-identity verification for (lambda, 3+m)-Einstein spaces:
// the defining equation in both forms, the conserved fiber constant, the
// Codazzi tensor built from Ricci, the scalar-curvature gradient identity,
// and the adapted-frame connection coefficients.

#include <optional>
#include <string>

#include "qem/curvature.hpp"
#include "qem/metric.hpp"

namespace qem {

enum class FamilyKind { Trivial, Case1, Case2, I3, II3, Lcf, Custom };

const char* family_kind_name(FamilyKind k);

struct QESpace {
    DiagonalMetric metric;
    ScalarField w;          // potential, positive on the chart interior
    double lambda = 0.0;
    int m = 2;
    std::optional<double> mu_expected;
    FamilyKind kind = FamilyKind::Custom;
    std::string name;

    void validate() const {
        if (m < 2) throw Error(ErrorCode::Argument, "m must be an integer >= 2");
        if (metric.dim() != 3)
            throw Error(ErrorCode::Capability, "verifier handles 3-d base spaces");
    }
};

struct ResidualReport {
    std::string identity;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    long grid_points = 0;
    double tolerance = 0.0;
    bool pass = false;

    void finish(double tol) {
        tolerance = tol;
        pass = max_residual < tol;
    }
};

struct QeReport {
    ResidualReport hpw;  // grad dw - (w/m)(Rc - lambda g), orthonormal components
    ResidualReport mqe;  // Rc + grad df - (1/m) df x df - lambda g, f = -m ln w
};

struct MuScanReport {
    double mean = 0.0;
    double max_deviation = 0.0;
    long grid_points = 0;
    std::optional<double> expected;
    double expected_error = 0.0;  // |mean - expected| when expected is set
    double tolerance = 0.0;
    bool pass = false;
};

struct CodazziReport {
    ResidualReport residual;
    // eigenvalue ranges of the Codazzi tensor over the grid
    double mu1_min = 0.0, mu1_max = 0.0;
    double mu2_min = 0.0, mu2_max = 0.0;
    // max |mu_i - (phi lambda_i + psi)| over grid: pure-algebra consistency
    double eigen_relation_max = 0.0;
};

struct AdaptedFrameData {
    double H = 0.0;      // mean curvature of the x2-x3 leaf
    double alpha = 0.0;  // <D_{E1} E3, E1>
    double beta = 0.0;   // <D_{E2} E2, E3>
    double zeta = 0.0;   // level-surface shape coefficient, grad w parallel E1
    double zeta1 = 0.0;  // grad w parallel E3 case
    double zeta2 = 0.0;
    double lambda1 = 0.0;  // Ricci eigenvalue of the distinguished direction
    double lambda2 = 0.0;
    double mu1 = 0.0;  // Codazzi eigenvalues
    double mu2 = 0.0;
    double cross_check_max = 0.0;  // worst deviation among the asserted identities
};

struct VerifyOptions {
    double tol_hpw = 1e-6;
    double tol_mqe = 1e-5;
    double tol_mu = 1e-6;
    double tol_codazzi = 1e-5;
    double tol_scalar = 1e-5;
    double eigen_tol = 1e-7;
};

QeReport qe_residual(const QESpace& space, const Grid& grid, const VerifyOptions& opts = {});
MuScanReport mu_scan(const QESpace& space, const Grid& grid, const VerifyOptions& opts = {});
CodazziReport codazzi_check(const QESpace& space, const Grid& grid, const VerifyOptions& opts = {});
ResidualReport scalar_identity_residual(const QESpace& space, const Grid& grid,
                                        const VerifyOptions& opts = {});
AdaptedFrameData frame_data(const QESpace& space, const Point& p);

// pointwise value of the conserved quantity of the defining equation
double mu_pointwise(const QESpace& space, const Point& p);
// pointwise Codazzi eigenvalues (mu1: distinguished direction, mu2: plane)
std::pair<double, double> codazzi_eigenvalues(const QESpace& space, const Point& p);

}  // namespace qem
