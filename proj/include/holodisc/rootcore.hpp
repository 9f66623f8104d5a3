#pragma once

#include "holodisc/rational.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace holodisc {

/// Vector with exact rational coordinates in a fixed ambient orthonormal
/// basis. Equality and ordering are coordinate-wise and exact.
struct RationalVec {
    std::vector<Rational> coords;

    RationalVec() = default;
    explicit RationalVec(std::vector<Rational> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    bool operator==(const RationalVec& other) const { return coords == other.coords; }
    /// Lexicographic order (shorter vectors first); used for deterministic sets.
    bool operator<(const RationalVec& other) const;
};

RationalVec operator+(const RationalVec& a, const RationalVec& b);
RationalVec operator-(const RationalVec& a, const RationalVec& b);
RationalVec operator-(const RationalVec& a);
RationalVec operator*(const Rational& s, const RationalVec& v);
Rational dot(const RationalVec& a, const RationalVec& b);

std::string to_string(const RationalVec& v);
std::ostream& operator<<(std::ostream& os, const RationalVec& v);

/// Weights live in the same ambient space as the roots; evaluation on a
/// coroot H_beta is realized as the normalized pairing below.
using Weight = RationalVec;

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);

/// Finite root system in its standard orthonormal-coordinate realization,
/// simple roots in Bourbaki order:
///   A_n in R^{n+1}, B_n/C_n/D_n in R^n, E6 and E7 in R^8.
/// Immutable after construction; all queries are pure.
class RootSystem {
public:
    /// Supported: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=3), E6, E7.
    /// Throws UnsupportedTypeError otherwise.
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }

    const std::vector<RationalVec>& simple_roots() const { return simple_; }
    const std::vector<RationalVec>& positive_roots() const { return positive_; }

    /// The unique positive root theta with theta - beta a nonnegative
    /// combination of simple roots for every root beta.
    const RationalVec& highest_root() const { return positive_[highest_index_]; }

    /// Membership among all roots (positive and negative).
    bool is_root(const RationalVec& v) const;

    /// Coefficients of v in the simple-root basis, or nullopt if v is not in
    /// their span. Exact.
    std::optional<std::vector<Rational>> simple_coordinates(const RationalVec& v) const;

    /// Cached simple-root coefficients of positive_roots()[idx]; these are
    /// nonnegative integers.
    const std::vector<Rational>& positive_root_coordinates(int idx) const {
        return positive_coords_[idx];
    }

    /// Sum of simple-root coefficients of positive_roots()[idx].
    const Rational& height(int idx) const { return heights_[idx]; }

    /// Entries <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
    std::vector<std::vector<Rational>> cartan_matrix() const;

    /// Fundamental weights in the span of the simple roots:
    /// <omega_i, alpha_j^vee> = delta_ij.
    const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

private:
    RootSystem() = default;
    void finalize();

    Family family_{};
    int rank_ = 0;
    int ambient_dim_ = 0;
    std::vector<RationalVec> simple_;
    std::vector<RationalVec> positive_;
    std::set<RationalVec> all_roots_;
    std::vector<std::vector<Rational>> positive_coords_;
    std::vector<Rational> heights_;
    std::vector<Weight> fundamental_;
    int highest_index_ = -1;
};

/// Coroot-normalized pairing <mu, beta^vee> = 2(mu,beta)/(beta,beta).
/// Throws ZeroRootError if beta = 0.
Rational pairing(const Weight& mu, const RationalVec& beta);

/// Reflection mu - <mu,beta^vee> beta. Throws ZeroRootError if beta = 0.
Weight reflect(const Weight& mu, const RationalVec& beta);

/// The unique conjugate of mu under the group generated by reflections in
/// the given simple roots with all pairings >= 0. Computed by repeatedly
/// reflecting at a negative-pairing simple root; iterations are capped to
/// guard against realization bugs.
Weight dominant_representative(const Weight& mu, std::span<const RationalVec> simple_subset);

/// Exact solve A x = b with columns given by `columns`. Returns nullopt when
/// b is outside the column span. Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<RationalVec>& columns,
                                                   const RationalVec& b);

} // namespace holodisc
