#pragma once

#include "holodisc/rootcore.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace holodisc {

enum class PresetKind { SU, SpR, SOStar, SOn2, E6III, E7VII, Raw };

/// Named entry point into the classification. Each preset resolves to a
/// (family, rank, noncompact node) triple:
///   su(p,q)  -> A_{p+q-1}, node p
///   sp(n,R)  -> C_n, node n
///   so*(2n)  -> D_n, node n
///   so(n,2)  -> B_{(n+1)/2} (n odd) or D_{(n+2)/2} (n even), node 1
///   e6-iii   -> E6, node 1 (node 6 gives an isomorphic structure)
///   e7-vii   -> E7, node 7
struct Preset {
    PresetKind kind = PresetKind::Raw;
    std::string name;        // canonical spelling
    Family family{};
    int rank = 0;
    int noncompact_node = 0; // 1-based Bourbaki index

    /// Accepts su(p,q), sp(n,R), so*(2n), so(n,2), e6-iii, e7-vii, and the
    /// expert form raw:<family>:<rank>:<node>. Throws std::invalid_argument
    /// on malformed text and UnsupportedTypeError when the resolved system
    /// is outside the supported catalog.
    static Preset parse(std::string_view text);

    static Preset su(int p, int q);
    static Preset sp(int n);
    static Preset so_star(int two_n);
    static Preset so_n2(int n);
    static Preset e6_iii();
    static Preset e7_vii();
    static Preset raw(Family f, int rank, int node);
};

/// The classical presets exercised by the identity table, in display order.
const std::vector<Preset>& standard_presets();

/// A root system together with the distinguished (cominuscule) simple root
/// and everything derived from it: the compact/noncompact split of the
/// positive roots, the central element H1, the fundamental weight Lambda1
/// of the distinguished node, and the half-sums rho, rho_P.
///
/// Evaluation of a functional on H1 is realized through the bilinear form:
/// H1 is stored as the vector h1 with (alpha_j, h1) = delta_{j,k} over the
/// simple roots, so gamma(H1) = (gamma, h1) for every root gamma.
class HermitianStructure {
public:
    static HermitianStructure build(const Preset& preset);
    /// node is the 1-based Bourbaki index of the noncompact simple root.
    /// Throws NotHermitianError when its coefficient in the highest root
    /// is not 1.
    static HermitianStructure build(Family family, int rank, int node);

    const RootSystem& roots() const { return rs_; }
    int noncompact_node() const { return node_; }

    /// 1-based Bourbaki indices of the compact simple roots, ascending.
    const std::vector<int>& compact_nodes() const { return compact_nodes_; }

    const std::vector<RationalVec>& compact_positive() const { return compact_pos_; }
    const std::vector<RationalVec>& noncompact_positive() const { return noncompact_pos_; }

    const RationalVec& h1() const { return h1_; }
    const Weight& lambda1() const { return lambda1_; }
    const Weight& rho() const { return rho_; }
    const Weight& rho_p() const { return rho_p_; }

    /// |Delta_P^+|, the complex dimension of the associated domain.
    int complex_dimension() const { return static_cast<int>(noncompact_pos_.size()); }

private:
    HermitianStructure(RootSystem rs, int node);

    RootSystem rs_;
    int node_;
    std::vector<int> compact_nodes_;
    std::vector<RationalVec> compact_pos_;
    std::vector<RationalVec> noncompact_pos_;
    RationalVec h1_;
    Weight lambda1_;
    Weight rho_;
    Weight rho_p_;
};

} // namespace holodisc
