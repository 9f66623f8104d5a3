#pragma once

#include "holodisc/criterion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holodisc {

/// Configuration of the numerical convergence probe for integrals
/// int_0^1 (1 - t^2)^e dt, sampled through shrinking cutoffs
/// eps_k = eps_base^k, k = 1..eps_levels.
struct ProbeConfig {
    int eps_levels = 20;
    double eps_base = 0.25;
    double quad_tol = 1e-10;       // per sub-integral, scaled for large magnitudes
    double slope_margin = 0.02;
    double boundary_margin = 0.05; // exact exponents this close to -1 are not judged

    void validate() const;  // throws std::invalid_argument
};

enum class Convergence { Convergent, Divergent, Inconclusive };

std::string to_string(Convergence c);

/// Outcome of probing one exponent. `values` holds the partial integrals
/// F(eps_k) = int_0^{1-eps_k} (1-t^2)^e dt in level order; slope_estimate is
/// the fitted growth rate of the increments (approximately e + 1);
/// limit_estimate extrapolates the full integral when convergent (NaN
/// otherwise).
struct ProbeResult {
    double exponent = 0.0;
    Convergence classification = Convergence::Inconclusive;
    double slope_estimate = 0.0;
    std::vector<double> values;
    double limit_estimate = 0.0;
};

/// Classifies the endpoint behavior of int_0^1 (1-t^2)^e dt numerically:
/// the increments F(eps_{k+1}) - F(eps_k) scale like eps^{e+1}, so a fitted
/// slope beyond +/- slope_margin decides convergent/divergent; a flat slope
/// with non-shrinking increments indicates logarithmic divergence.
/// Throws QuadratureFailureError if the adaptive integrator exhausts its
/// budget or overflows.
ProbeResult classify_exponent(double e, const ProbeConfig& cfg = {});

struct ExponentEntry {
    Weight weight;
    int index = 0;  // 1-based cascade index
    double exponent = 0.0;
};

/// The per-(weight, index) exponents of the criterion table, as doubles.
std::vector<ExponentEntry> exponent_set(const HermitianStructure& hs, const CascadeResult& cas,
                                        const DomainInvariants& inv, const CriterionInput& input);

struct ProbeEntry {
    Weight weight;
    int index = 0;
    double exponent = 0.0;
    Convergence classification = Convergence::Inconclusive;
};

struct ProbeCriterionReport {
    std::vector<ProbeEntry> entries;
    Convergence overall = Convergence::Inconclusive;
    /// Unset when the probe is inconclusive; otherwise whether the numeric
    /// classification matches the exact decision.
    std::optional<bool> agrees_with_decision;
    CriterionReport decision;
};

/// Probes every per-weight integral and compares the conjunction against the
/// exact criterion. The integrand over the cube factorizes, so overall
/// convergence is the conjunction of the one-dimensional classifications.
/// Exponents within boundary_margin of -1 force an inconclusive overall
/// verdict and suppress the agreement flag.
ProbeCriterionReport probe_criterion(const HermitianStructure& hs, const CascadeResult& cas,
                                     const DomainInvariants& inv, const CriterionInput& input,
                                     const ProbeConfig& cfg = {});

} // namespace holodisc
