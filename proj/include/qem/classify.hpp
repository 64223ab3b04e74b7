#pragma once

// Parameter-space classifier: maps family parameter tuples to the complete /
// incomplete taxonomy, computes the threshold constants, and backs each label
// with ODE evidence.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qem/profile.hpp"

namespace qem {

struct Case1Params {  // g = dx1^2 + eta^2 p'^2 dx2^2 + eta^2 dx3^2, w = eta p
    double lambda = 0.0;
    int m = 2;
    double a = 0.0;
    double rho = 0.0;
    double mu = 0.0;
    double p0 = 1.0;
};

struct Case2Params {  // g = p^2 dx1^2 + p'^2 dx2^2 + dx3^2, w = tau p
    double lambda = 0.0;
    int m = 2;
    double a = 0.0;
    double k = 0.0;
    double mu = 0.0;
    double p0 = 1.0;
};

struct CaseI3Params {  // g = dx1^2 + w'^2 dx2^2 + dx3^2, lambda = 0
    int m = 2;
    double a = 0.0;
    double mu = 0.0;
    double w0 = 1.0;
};

struct CaseII3Params {  // g = p^2 dx1^2 + p'^2 dx2^2 + dx3^2, w = c1 p, mu = 0
    double lambda = 0.0;
    int m = 2;
    double a = 0.0;
    double p0 = 1.0;
    double c1 = 1.0;
};

using FamilyParams = std::variant<Case1Params, Case2Params, CaseI3Params, CaseII3Params>;

void validate_params(const FamilyParams& params);

struct Thresholds {
    std::optional<double> rho0;
    std::optional<double> kappa0;
    bool defined() const { return rho0.has_value(); }
};

// rho0 = (a/rho)^(1/(m+1)), kappa0 = (m+1) rho rho0^2 for the first family;
// rho0 = (a(m+2)/lambda)^(1/(m+2)), kappa0 = (lambda/m) rho0^2 for the second.
// Undefined (not an error) when the sign precondition fails.
Thresholds thresholds(const FamilyParams& params);

struct CertificateRecord {
    int m = 0;
    double p1 = 0.0, p2 = 0.0;
    double lhs = 0.0, rhs = 0.0;
    bool exact_equal = false;  // compared in exact rational arithmetic
    double rel_error = 0.0;
    bool positive = false;     // lhs > 0, the smooth-closure obstruction
};

// lhs = m(p1^{m+1}+p2^{m+1}) - 2 sum_{j=1..m} p1^{m+1-j} p2^j,
// rhs = (p1-p2)^2 sum_{k=1..m} k(m-k+1) p1^{k-1} p2^{m-k}
CertificateRecord incompleteness_certificate(int m, double p1, double p2);

struct WitnessRecord {
    std::string profile;
    double span_lo = 0.0, span_hi = 0.0;
    int root_count = 0;
    std::vector<double> roots;
    std::optional<double> d2_at_root;
    std::optional<double> axis_period;
    double positivity_floor = 0.0;
    double inf_abs_d1 = 0.0;  // evidence for the no-root boundary sub-case
    double drift_bound = 0.0;
    bool early_exit = false;
    std::string exit_reason;
    std::optional<OscillationData> oscillation;
    std::optional<CertificateRecord> certificate;
};

struct ClassificationResult {
    std::string label;  // "(i-1)".."(ii-3)", "incomplete", "outside"
    Thresholds thr;
    std::string topology;
    std::string note;
    std::optional<std::string> warning;  // exponent discrepancy surfaced on (ii-2)
    std::optional<WitnessRecord> witness;
    bool complete() const { return !label.empty() && label[0] == '('; }
};

ClassificationResult classify(const FamilyParams& params);

// integrates the relevant profile over a span of at least 20 and checks the
// ODE facts the label asserts; throws WitnessFailure on contradiction
WitnessRecord completeness_witness(const FamilyParams& params,
                                   const IntegrateOptions& opts = witness_options());

IntegrateOptions witness_options();

}  // namespace qem
