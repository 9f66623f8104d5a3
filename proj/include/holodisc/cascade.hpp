#pragma once

#include "holodisc/hermitian.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holodisc {

/// Maximal family of pairwise strongly orthogonal noncompact positive roots
/// gamma_1 .. gamma_r, listed ascending so that gamma_r is the highest root.
/// coroots[i] = 2 gamma_i / (gamma_i, gamma_i); pairing a weight with it
/// evaluates the weight on the corresponding Cartan element.
struct CascadeResult {
    std::vector<RationalVec> gammas;
    std::vector<RationalVec> coroots;

    int rank() const { return static_cast<int>(gammas.size()); }
    /// 1-based access matching the customary indexing.
    const RationalVec& gamma(int i) const { return gammas.at(i - 1); }
    const RationalVec& coroot(int i) const { return coroots.at(i - 1); }
};

/// Builds the cascade: gamma_r is the highest root; each earlier member is
/// the highest noncompact positive root strongly orthogonal to all later
/// ones. "Highest" is decided by root order (difference a nonnegative
/// combination of simple roots); incomparable candidates are ordered by
/// descending height and then descending lexicographic coordinates, which
/// picks the root-order maximum whenever one exists.
CascadeResult cascade(const HermitianStructure& hs);

enum class RestrictedClass {
    Zero,
    Gamma,      // +/- gamma_i
    HalfGamma,  // +/- gamma_i / 2
    HalfPair,   // (+/- gamma_i +/- gamma_j) / 2, i < j
    Other,
};

struct RestrictedProjection {
    RationalVec projection;  // orthogonal projection onto span(gamma_1..gamma_r)
    RestrictedClass cls = RestrictedClass::Other;
    int i = 0, j = 0;        // 1-based cascade indices involved (0 if unused)
    int sign_i = 0, sign_j = 0;
};

/// Orthogonal projection of beta onto the span of the cascade roots,
/// classified against the possible restricted values.
RestrictedProjection restricted_projection(const CascadeResult& cas, const RationalVec& beta);

/// Multiplicity data of the restricted root system together with the derived
/// constants: the common pair multiplicity a (undefined when r = 1), the
/// common half multiplicity b, and the genus p = (r-1)a + b + 2.
struct DomainInvariants {
    int r = 0;
    std::map<std::pair<int, int>, int> mult_pairs;  // (i,j), i<j -> r_ij
    std::map<int, int> mult_halves;                 // i -> r_i
    std::optional<int> a;
    int b = 0;
    int p = 0;
    std::map<std::string, int> restricted_profile;  // class name -> count over Delta_P^+
};

/// Counts restricted projections over the noncompact positive roots and
/// derives (r, a, b, p). Throws MultiplicityMismatchError if the r_ij or the
/// r_i fail to agree, if any root classifies outside the expected classes,
/// or if the dimension bookkeeping |Delta_P^+| = r + a r(r-1)/2 + r b fails;
/// all of these signal an implementation bug.
DomainInvariants domain_invariants(const HermitianStructure& hs, const CascadeResult& cas);

struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::string detail;  // offending values when !ok
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_ok = true;
};

/// Exact checks of the structural identities:
///   (2 rho_P, gamma_i^vee) = p for all i,
///   (rho, gamma_r^vee) = p - 1,
///   (Lambda1, gamma_i^vee) = 1 for all i,
///   all gamma_i share the squared length of the distinguished simple root,
///   and that length is maximal among all roots.
IdentityReport verify_domain_identities(const HermitianStructure& hs, const CascadeResult& cas,
                                        const DomainInvariants& inv);

} // namespace holodisc
