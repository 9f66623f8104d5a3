#pragma once

#include "holodisc/cascade.hpp"
#include "holodisc/hermitian.hpp"

#include <cstdint>
#include <vector>

namespace holodisc {

/// Highest weight of an irreducible representation of the compact subsystem,
/// given by its pairings with the compact simple coroots (Bourbaki order
/// restricted to compact nodes) plus an exact component along the
/// fundamental weight of the distinguished node.
struct HighestWeightSpec {
    std::vector<long> compact_pairings;
    Rational noncompact_pairing = 0;
};

/// The induced weight Lambda0 = sum pairing_j * omega_j (+ the central part).
/// Throws NonDominantError if any compact pairing is negative and
/// std::invalid_argument if the pairing count does not match the number of
/// compact nodes.
Weight highest_weight(const HermitianStructure& hs, const HighestWeightSpec& spec);

/// The set of weights of the irreducible compact-subsystem representation
/// with highest weight Lambda0. Multiplicities are not tracked.
///
/// Internally a weight is the integer coefficient vector c with
/// mu = Lambda0 - sum_j c_j alpha_j over the compact simple roots; rows are
/// stored flat, ordered by ascending descent depth (sum of the c_j) and then
/// lexicographically, so the first row is Lambda0 itself. The full set is
/// closed under the compact Weyl group; members materialize to ambient
/// coordinates on demand.
class WeightSet {
public:
    std::size_t size() const { return count_; }
    const Weight& lambda0() const { return lambda0_; }

    /// Number of compact simple roots (the length of each coefficient row).
    int coeff_dim() const { return m_; }
    /// Row idx of the coefficient table, in storage order.
    const std::int32_t* coeff_row(std::size_t idx) const { return flat_.data() + idx * m_; }

    /// Ambient coordinates of the weight at row idx.
    Weight materialize(std::size_t idx) const;
    /// All weights in storage order. Only sensible for small sets.
    std::vector<Weight> weights() const;

    bool contains(const Weight& mu) const;

    const std::vector<RationalVec>& compact_simples() const { return compact_simples_; }

private:
    friend WeightSet weight_set(const HermitianStructure&, const HighestWeightSpec&, std::size_t);

    Weight lambda0_;
    std::vector<RationalVec> compact_simples_;  // Bourbaki order restricted to compact nodes
    int m_ = 0;
    std::size_t count_ = 0;
    std::vector<std::int32_t> flat_;  // count_ rows of length m_
};

/// Enumerates the weight set by saturated string descent from Lambda0: from
/// a weight mu with <mu, alpha^vee> = m > 0 every mu - j alpha, j = 1..m, is
/// again a weight, and iterating from the top reaches all of them.
/// Throws SizeLimitError when the set would exceed size_limit.
WeightSet weight_set(const HermitianStructure& hs, const HighestWeightSpec& spec,
                     std::size_t size_limit = 1'000'000);

struct MaxPairing {
    Rational value;
    Weight argmax_weight;
    int argmax_index = 0;  // 1-based cascade index
};

/// max over weights mu in ws and cascade indices i of (mu, gamma_i^vee),
/// with one attaining pair. Rows are scanned from Lambda0 outward (storage
/// order) with i ascending, keeping strictly larger values, so the reported
/// pair is deterministic.
MaxPairing max_pairing(const HermitianStructure& hs, const CascadeResult& cas,
                       const WeightSet& ws);

} // namespace holodisc
