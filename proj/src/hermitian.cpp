#include "holodisc/hermitian.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace holodisc {

namespace {

// Practical bound: keeps the exact linear algebra (rank^3 rational pivots)
// at interactive speed. Every classical and exceptional case of interest is
// far below it.
constexpr int kMaxRank = 128;

bool parse_int_token(std::string_view s, int& out) {
    if (s.empty() || s.size() > 6) return false;
    long value = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
    }
    out = static_cast<int>(value);
    return true;
}

std::string lowercase_trimmed(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) return {};
    std::string out(text.substr(first, last - first + 1));
    for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void malformed(std::string_view text) {
    throw std::invalid_argument("unrecognized preset '" + std::string(text) +
                                "'; expected su(p,q), sp(n,R), so*(2n), so(n,2), e6-iii, "
                                "e7-vii, or raw:<family>:<rank>:<node>");
}

} // namespace

Preset Preset::su(int p, int q) {
    if (p < 1 || q < 1) throw UnsupportedTypeError("su(p,q) requires p, q >= 1");
    Preset ps;
    ps.kind = PresetKind::SU;
    ps.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    ps.family = Family::A;
    ps.rank = p + q - 1;
    ps.noncompact_node = p;
    return ps;
}

Preset Preset::sp(int n) {
    if (n < 2)
        throw UnsupportedTypeError("sp(n,R) requires n >= 2; sp(1,R) is covered by su(1,1)");
    Preset ps;
    ps.kind = PresetKind::SpR;
    ps.name = "sp(" + std::to_string(n) + ",R)";
    ps.family = Family::C;
    ps.rank = n;
    ps.noncompact_node = n;
    return ps;
}

Preset Preset::so_star(int two_n) {
    if (two_n < 6 || two_n % 2 != 0)
        throw UnsupportedTypeError("so*(2n) requires an even argument 2n >= 6");
    Preset ps;
    ps.kind = PresetKind::SOStar;
    ps.name = "so*(" + std::to_string(two_n) + ")";
    ps.family = Family::D;
    ps.rank = two_n / 2;
    ps.noncompact_node = two_n / 2;
    return ps;
}

Preset Preset::so_n2(int n) {
    if (n < 3) throw UnsupportedTypeError("so(n,2) requires n >= 3");
    Preset ps;
    ps.kind = PresetKind::SOn2;
    ps.name = "so(" + std::to_string(n) + ",2)";
    // complexification so(n+2): odd total dimension gives B, even gives D
    if (n % 2 == 1) {
        ps.family = Family::B;
        ps.rank = (n + 1) / 2;
    } else {
        ps.family = Family::D;
        ps.rank = (n + 2) / 2;
    }
    ps.noncompact_node = 1;
    return ps;
}

Preset Preset::e6_iii() {
    Preset ps;
    ps.kind = PresetKind::E6III;
    ps.name = "e6-iii";
    ps.family = Family::E6;
    ps.rank = 6;
    // nodes 1 and 6 both satisfy the coefficient-1 condition and produce
    // isomorphic structures; node 1 is the documented default.
    ps.noncompact_node = 1;
    return ps;
}

Preset Preset::e7_vii() {
    Preset ps;
    ps.kind = PresetKind::E7VII;
    ps.name = "e7-vii";
    ps.family = Family::E7;
    ps.rank = 7;
    ps.noncompact_node = 7;
    return ps;
}

Preset Preset::raw(Family f, int rank, int node) {
    Preset ps;
    ps.kind = PresetKind::Raw;
    ps.name = "raw:" + family_name(f) + ":" + std::to_string(rank) + ":" + std::to_string(node);
    ps.family = f;
    ps.rank = rank;
    ps.noncompact_node = node;
    return ps;
}

Preset Preset::parse(std::string_view text) {
    const std::string s = lowercase_trimmed(text);

    if (s == "e6-iii") return e6_iii();
    if (s == "e7-vii") return e7_vii();

    if (s.rfind("raw:", 0) == 0) {
        auto parts = split(std::string_view(s).substr(4), ':');
        int rank = 0, node = 0;
        if (parts.size() != 3 || !parse_int_token(parts[1], rank) ||
            !parse_int_token(parts[2], node))
            malformed(text);
        Family family;
        if (parts[0] == "a") family = Family::A;
        else if (parts[0] == "b") family = Family::B;
        else if (parts[0] == "c") family = Family::C;
        else if (parts[0] == "d") family = Family::D;
        else if (parts[0] == "e6") family = Family::E6;
        else if (parts[0] == "e7") family = Family::E7;
        else if (parts[0] == "e8" || parts[0] == "f4" || parts[0] == "g2")
            throw UnsupportedTypeError("family " + std::string(parts[0]) +
                                       " has no Hermitian structure");
        else
            malformed(text);
        return raw(family, rank, node);
    }

    if (s.size() < 4 || s.back() != ')') malformed(text);

    if (s.rfind("su(", 0) == 0) {
        auto parts = split(std::string_view(s).substr(3, s.size() - 4), ',');
        int p = 0, q = 0;
        if (parts.size() != 2 || !parse_int_token(parts[0], p) || !parse_int_token(parts[1], q))
            malformed(text);
        return su(p, q);
    }
    if (s.rfind("sp(", 0) == 0) {
        auto parts = split(std::string_view(s).substr(3, s.size() - 4), ',');
        int n = 0;
        if (parts.size() != 2 || !parse_int_token(parts[0], n) || parts[1] != "r")
            malformed(text);
        return sp(n);
    }
    if (s.rfind("so*(", 0) == 0) {
        int two_n = 0;
        if (!parse_int_token(std::string_view(s).substr(4, s.size() - 5), two_n)) malformed(text);
        return so_star(two_n);
    }
    if (s.rfind("so(", 0) == 0) {
        auto parts = split(std::string_view(s).substr(3, s.size() - 4), ',');
        int n = 0, m = 0;
        if (parts.size() != 2 || !parse_int_token(parts[0], n) || !parse_int_token(parts[1], m))
            malformed(text);
        if (m != 2) throw UnsupportedTypeError("only the signature so(n,2) is supported");
        return so_n2(n);
    }

    malformed(text);
}

const std::vector<Preset>& standard_presets() {
    static const std::vector<Preset> list = {
        Preset::su(1, 1),   Preset::su(2, 1),   Preset::su(2, 2),  Preset::su(3, 1),
        Preset::su(3, 3),   Preset::sp(2),      Preset::sp(3),     Preset::so_star(6),
        Preset::so_star(8), Preset::so_star(10), Preset::so_n2(3), Preset::so_n2(4),
        Preset::so_n2(5),   Preset::so_n2(6),   Preset::so_n2(7),  Preset::e6_iii(),
        Preset::e7_vii(),
    };
    return list;
}

HermitianStructure HermitianStructure::build(const Preset& preset) {
    return build(preset.family, preset.rank, preset.noncompact_node);
}

HermitianStructure HermitianStructure::build(Family family, int rank, int node) {
    if (rank > kMaxRank)
        throw UnsupportedTypeError("rank " + std::to_string(rank) +
                                   " exceeds the supported maximum of " +
                                   std::to_string(kMaxRank));
    RootSystem rs = RootSystem::build(family, rank);
    if (node < 1 || node > rs.rank())
        throw std::invalid_argument("noncompact node " + std::to_string(node) +
                                    " out of range 1.." + std::to_string(rs.rank()));
    return HermitianStructure(std::move(rs), node);
}

HermitianStructure::HermitianStructure(RootSystem rs, int node)
    : rs_(std::move(rs)), node_(node) {
    const int k = node_ - 1;

    auto theta_coords = rs_.simple_coordinates(rs_.highest_root());
    if (!theta_coords) throw std::logic_error("highest root outside simple-root span");
    if ((*theta_coords)[k] != 1)
        throw NotHermitianError("simple root " + std::to_string(node_) + " of " +
                                family_name(rs_.family()) + "_" + std::to_string(rs_.rank()) +
                                " has coefficient " + to_string((*theta_coords)[k]) +
                                " in the highest root; a Hermitian structure needs 1");

    for (int j = 1; j <= rs_.rank(); ++j)
        if (j != node_) compact_nodes_.push_back(j);

    const auto& positive = rs_.positive_roots();
    for (std::size_t idx = 0; idx < positive.size(); ++idx) {
        const Rational& c = rs_.positive_root_coordinates(static_cast<int>(idx))[k];
        if (c == 0) compact_pos_.push_back(positive[idx]);
        else if (c == 1) noncompact_pos_.push_back(positive[idx]);
        else
            throw std::logic_error("cominuscule coefficient bound violated");
    }

    // h1 solves (alpha_j, h1) = delta_{j,node} inside the simple-root span:
    // with h1 = sum_k c_k alpha_k this is the Gram system of the simple roots.
    const auto& simple = rs_.simple_roots();
    std::vector<RationalVec> gram_columns;
    for (int col = 0; col < rs_.rank(); ++col) {
        RationalVec column;
        for (int row = 0; row < rs_.rank(); ++row)
            column.coords.push_back(dot(simple[row], simple[col]));
        gram_columns.push_back(std::move(column));
    }
    RationalVec target;
    target.coords.assign(rs_.rank(), Rational(0));
    target.coords[k] = 1;
    auto c = solve_in_span(gram_columns, target);
    if (!c) throw std::logic_error("Gram matrix of simple roots is singular");
    h1_.coords.assign(rs_.ambient_dim(), Rational(0));
    for (int col = 0; col < rs_.rank(); ++col) h1_ = h1_ + (*c)[col] * simple[col];

    lambda1_ = rs_.fundamental_weights()[k];

    Weight rho_sum, rho_p_sum;
    rho_sum.coords.assign(rs_.ambient_dim(), Rational(0));
    rho_p_sum.coords.assign(rs_.ambient_dim(), Rational(0));
    for (const auto& beta : positive) rho_sum = rho_sum + beta;
    for (const auto& beta : noncompact_pos_) rho_p_sum = rho_p_sum + beta;
    const Rational half(1, 2);
    rho_ = half * rho_sum;
    rho_p_ = half * rho_p_sum;

    // Construction-time cross-checks; all are exact consequences of the
    // coefficient-1 property, so a failure means a realization bug.
    for (const auto& gamma : noncompact_pos_)
        if (dot(gamma, h1_) != 1)
            throw InternalIdentityError("gamma(H1) != 1 on a noncompact positive root");
    for (const auto& alpha : compact_pos_)
        if (dot(alpha, h1_) != 0)
            throw InternalIdentityError("alpha(H1) != 0 on a compact positive root");
    for (int j = 0; j < rs_.rank(); ++j) {
        const Rational expected = (j == k) ? 1 : 0;
        if (pairing(lambda1_, simple[j]) != expected)
            throw InternalIdentityError("Lambda1 pairing with a simple root is off");
    }
    for (const auto& gamma : noncompact_pos_)
        for (const auto& delta : noncompact_pos_)
            if (rs_.is_root(gamma + delta))
                throw InternalIdentityError("noncompact positive roots fail to commute");
}

} // namespace holodisc
