#pragma once

#include "holodisc/repweights.hpp"

#include <cstddef>
#include <vector>

namespace holodisc {

/// Parameters of the representation pi = e^{lambda Lambda1} (x) pi0:
/// the exact scalar lambda and the highest weight of pi0.
struct CriterionInput {
    Rational lambda;
    HighestWeightSpec hw;
    std::size_t weight_limit = 1'000'000;
};

/// One per-weight convergence condition: the exponent of the reduced
/// one-dimensional integral attached to (weight, cascade index) and whether
/// it clears the integrability bound exponent > -1.
struct PerWeightRow {
    Weight weight;
    int index = 0;  // 1-based cascade index
    Rational exponent;
    bool satisfied = false;
};

/// -(Lambda0 + rho, gamma_r^vee). Internally cross-checked against the
/// equivalent form 1 - p - (Lambda0, gamma_r^vee); disagreement raises
/// InternalIdentityError.
Rational threshold(const HermitianStructure& hs, const CascadeResult& cas,
                   const DomainInvariants& inv, const HighestWeightSpec& hw);

/// Exponent table over the full weight set: for every weight mu and index i,
///   e = -(lambda (Lambda1, gamma_i^vee) + (mu, gamma_i^vee) + (2 rho_P, gamma_i^vee)),
/// satisfied iff e > -1. Rows are sorted by weight (lexicographic) then index.
std::vector<PerWeightRow> per_weight_conditions(const HermitianStructure& hs,
                                                const CascadeResult& cas,
                                                const DomainInvariants& inv,
                                                const CriterionInput& input);

struct CriterionReport {
    Rational lambda;
    Rational threshold;
    bool nonzero = false;        // lambda < threshold, strict
    std::vector<PerWeightRow> per_weight;
    bool equivalence_ok = false; // (all rows satisfied) == nonzero
};

/// Decides non-vanishing: nonzero iff lambda < threshold (strict), with the
/// materialized per-weight table and the equivalence flag.
CriterionReport decide(const HermitianStructure& hs, const CascadeResult& cas,
                       const DomainInvariants& inv, const CriterionInput& input);

} // namespace holodisc
