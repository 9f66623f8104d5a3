#include "holodisc/rootcore.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holodisc {

bool RationalVec::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool RationalVec::operator<(const RationalVec& other) const {
    if (coords.size() != other.coords.size()) return coords.size() < other.coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != other.coords[i]) return coords[i] < other.coords[i];
    }
    return false;
}

namespace {

void check_same_dim(const RationalVec& a, const RationalVec& b) {
    if (a.dim() != b.dim()) throw std::logic_error("dimension mismatch in vector arithmetic");
}

} // namespace

RationalVec operator+(const RationalVec& a, const RationalVec& b) {
    check_same_dim(a, b);
    RationalVec out = a;
    for (int i = 0; i < a.dim(); ++i) out.coords[i] += b.coords[i];
    return out;
}

RationalVec operator-(const RationalVec& a, const RationalVec& b) {
    check_same_dim(a, b);
    RationalVec out = a;
    for (int i = 0; i < a.dim(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

RationalVec operator-(const RationalVec& a) {
    RationalVec out = a;
    for (auto& c : out.coords) c = -c;
    return out;
}

RationalVec operator*(const Rational& s, const RationalVec& v) {
    RationalVec out = v;
    for (auto& c : out.coords) c *= s;
    return out;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
    check_same_dim(a, b);
    Rational sum = 0;
    for (int i = 0; i < a.dim(); ++i) sum += a.coords[i] * b.coords[i];
    return sum;
}

std::string to_string(const RationalVec& v) {
    std::string out = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += to_string(v.coords[i]);
    }
    out += ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalVec& v) {
    return os << to_string(v);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    throw std::logic_error("unknown family");
}

namespace {

RationalVec unit(int dim, int idx, const Rational& value = 1) {
    RationalVec v;
    v.coords.assign(dim, Rational(0));
    v.coords[idx] = value;
    return v;
}

RationalVec from_ints(std::initializer_list<int> values) {
    RationalVec v;
    for (int x : values) v.coords.emplace_back(x);
    return v;
}

// Sign-pattern roots of E6/E7: (e8 - e7 [- e6]) / 2 plus half-integer signs
// on the leading coordinates.
RationalVec half_sign_root(int n_signs, unsigned bits, bool e6) {
    RationalVec v;
    v.coords.assign(8, Rational(0));
    const Rational half(1, 2);
    for (int i = 0; i < n_signs; ++i)
        v.coords[i] = (bits >> i) & 1u ? -half : half;
    if (e6) v.coords[5] = -half;
    v.coords[6] = -half;
    v.coords[7] = half;
    return v;
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
    auto unsupported = [&](const char* why) {
        throw UnsupportedTypeError("unsupported root system " + family_name(family) + "_" +
                                   std::to_string(rank) + ": " + why);
    };

    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;

    switch (family) {
        case Family::A: {
            if (rank < 1) unsupported("A_n requires n >= 1");
            const int d = rank + 1;
            rs.ambient_dim_ = d;
            for (int i = 0; i < rank; ++i) rs.simple_.push_back(unit(d, i) - unit(d, i + 1));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) rs.positive_.push_back(unit(d, i) - unit(d, j));
            break;
        }
        case Family::B: {
            if (rank < 2) unsupported("B_n requires n >= 2");
            const int d = rank;
            rs.ambient_dim_ = d;
            for (int i = 0; i + 1 < rank; ++i) rs.simple_.push_back(unit(d, i) - unit(d, i + 1));
            rs.simple_.push_back(unit(d, rank - 1));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_.push_back(unit(d, i) - unit(d, j));
                    rs.positive_.push_back(unit(d, i) + unit(d, j));
                }
            for (int i = 0; i < d; ++i) rs.positive_.push_back(unit(d, i));
            break;
        }
        case Family::C: {
            if (rank < 2) unsupported("C_n requires n >= 2");
            const int d = rank;
            rs.ambient_dim_ = d;
            for (int i = 0; i + 1 < rank; ++i) rs.simple_.push_back(unit(d, i) - unit(d, i + 1));
            rs.simple_.push_back(unit(d, rank - 1, 2));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_.push_back(unit(d, i) - unit(d, j));
                    rs.positive_.push_back(unit(d, i) + unit(d, j));
                }
            for (int i = 0; i < d; ++i) rs.positive_.push_back(unit(d, i, 2));
            break;
        }
        case Family::D: {
            if (rank < 3) unsupported("D_n requires n >= 3");
            const int d = rank;
            rs.ambient_dim_ = d;
            for (int i = 0; i + 1 < rank; ++i) rs.simple_.push_back(unit(d, i) - unit(d, i + 1));
            rs.simple_.push_back(unit(d, rank - 2) + unit(d, rank - 1));
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    rs.positive_.push_back(unit(d, i) - unit(d, j));
                    rs.positive_.push_back(unit(d, i) + unit(d, j));
                }
            break;
        }
        case Family::E6: {
            if (rank != 6) unsupported("E6 has rank 6");
            rs.ambient_dim_ = 8;
            rs.simple_.push_back(half_sign_root(5, 0b11110u, /*e6=*/true));  // alpha_1
            rs.simple_.push_back(from_ints({1, 1, 0, 0, 0, 0, 0, 0}));       // alpha_2
            rs.simple_.push_back(from_ints({-1, 1, 0, 0, 0, 0, 0, 0}));      // alpha_3
            rs.simple_.push_back(from_ints({0, -1, 1, 0, 0, 0, 0, 0}));      // alpha_4
            rs.simple_.push_back(from_ints({0, 0, -1, 1, 0, 0, 0, 0}));      // alpha_5
            rs.simple_.push_back(from_ints({0, 0, 0, -1, 1, 0, 0, 0}));      // alpha_6
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    RationalVec ej = unit(8, j), ei = unit(8, i);
                    rs.positive_.push_back(ej - ei);
                    rs.positive_.push_back(ej + ei);
                }
            // even number of minus signs among the first five coordinates
            for (unsigned bits = 0; bits < 32; ++bits)
                if (__builtin_popcount(bits) % 2 == 0)
                    rs.positive_.push_back(half_sign_root(5, bits, /*e6=*/true));
            break;
        }
        case Family::E7: {
            if (rank != 7) unsupported("E7 has rank 7");
            rs.ambient_dim_ = 8;
            rs.simple_.push_back(half_sign_root(6, 0b111110u, /*e6=*/false));  // alpha_1
            rs.simple_.push_back(from_ints({1, 1, 0, 0, 0, 0, 0, 0}));         // alpha_2
            rs.simple_.push_back(from_ints({-1, 1, 0, 0, 0, 0, 0, 0}));        // alpha_3
            rs.simple_.push_back(from_ints({0, -1, 1, 0, 0, 0, 0, 0}));        // alpha_4
            rs.simple_.push_back(from_ints({0, 0, -1, 1, 0, 0, 0, 0}));        // alpha_5
            rs.simple_.push_back(from_ints({0, 0, 0, -1, 1, 0, 0, 0}));        // alpha_6
            rs.simple_.push_back(from_ints({0, 0, 0, 0, -1, 1, 0, 0}));        // alpha_7
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    RationalVec ej = unit(8, j), ei = unit(8, i);
                    rs.positive_.push_back(ej - ei);
                    rs.positive_.push_back(ej + ei);
                }
            rs.positive_.push_back(unit(8, 7) - unit(8, 6));
            // odd number of minus signs among the first six coordinates
            for (unsigned bits = 0; bits < 64; ++bits)
                if (__builtin_popcount(bits) % 2 == 1)
                    rs.positive_.push_back(half_sign_root(6, bits, /*e6=*/false));
            break;
        }
    }

    rs.finalize();
    return rs;
}

void RootSystem::finalize() {
    for (const auto& beta : positive_) {
        all_roots_.insert(beta);
        all_roots_.insert(-beta);
    }
    if (all_roots_.size() != 2 * positive_.size())
        throw std::logic_error("duplicate roots in realization");

    positive_coords_.reserve(positive_.size());
    heights_.reserve(positive_.size());
    Rational best_height = -1;
    for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
        auto coeffs = solve_in_span(simple_, positive_[idx]);
        if (!coeffs) throw std::logic_error("positive root outside simple-root span");
        Rational h = 0;
        for (const auto& c : *coeffs) {
            if (c < 0 || denominator(c) != 1)
                throw std::logic_error("positive root with non-integral expansion");
            h += c;
        }
        positive_coords_.push_back(std::move(*coeffs));
        heights_.push_back(h);
        if (h > best_height) {
            best_height = h;
            highest_index_ = static_cast<int>(idx);
        }
    }

    fundamental_.reserve(rank_);
    // omega_i solves <omega_i, alpha_j^vee> = delta_ij within span(simple roots):
    // with omega_i = sum_k x_k alpha_k this is the transposed Cartan system.
    std::vector<RationalVec> cartan_rows;
    for (int j = 0; j < rank_; ++j) {
        RationalVec row;
        for (int k = 0; k < rank_; ++k) row.coords.push_back(pairing(simple_[k], simple_[j]));
        cartan_rows.push_back(std::move(row));
    }
    // columns of the system matrix indexed by k: entry j is <alpha_k, alpha_j^vee>
    std::vector<RationalVec> columns;
    for (int k = 0; k < rank_; ++k) {
        RationalVec col;
        for (int j = 0; j < rank_; ++j) col.coords.push_back(cartan_rows[j].coords[k]);
        columns.push_back(std::move(col));
    }
    for (int i = 0; i < rank_; ++i) {
        RationalVec target;
        target.coords.assign(rank_, Rational(0));
        target.coords[i] = 1;
        auto x = solve_in_span(columns, target);
        if (!x) throw std::logic_error("Cartan matrix is singular");
        RationalVec omega;
        omega.coords.assign(ambient_dim_, Rational(0));
        for (int k = 0; k < rank_; ++k) omega = omega + (*x)[k] * simple_[k];
        fundamental_.push_back(std::move(omega));
    }
}

bool RootSystem::is_root(const RationalVec& v) const {
    return all_roots_.count(v) != 0;
}

std::optional<std::vector<Rational>> RootSystem::simple_coordinates(const RationalVec& v) const {
    return solve_in_span(simple_, v);
}

std::vector<std::vector<Rational>> RootSystem::cartan_matrix() const {
    std::vector<std::vector<Rational>> m(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) m[i][j] = pairing(simple_[i], simple_[j]);
    return m;
}

Rational pairing(const Weight& mu, const RationalVec& beta) {
    if (beta.is_zero()) throw ZeroRootError("pairing with the zero root");
    return 2 * dot(mu, beta) / dot(beta, beta);
}

Weight reflect(const Weight& mu, const RationalVec& beta) {
    return mu - pairing(mu, beta) * beta;
}

Weight dominant_representative(const Weight& mu, std::span<const RationalVec> simple_subset) {
    // Each reflection at a negative-pairing simple root strictly increases the
    // pairing sum, so this terminates; the cap guards realization bugs.
    constexpr long kMaxIterations = 1'000'000;
    Weight current = mu;
    for (long iter = 0; iter < kMaxIterations; ++iter) {
        bool reflected = false;
        for (const auto& alpha : simple_subset) {
            if (pairing(current, alpha) < 0) {
                current = reflect(current, alpha);
                reflected = true;
                break;
            }
        }
        if (!reflected) return current;
    }
    throw Error("dominant_representative exceeded its iteration bound");
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<RationalVec>& columns,
                                                   const RationalVec& b) {
    const int m = b.dim();
    const int n = static_cast<int>(columns.size());
    // augmented matrix [A | b], Gaussian elimination with exact pivots
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        if (columns[j].dim() != m) throw std::logic_error("solve_in_span: dimension mismatch");
        for (int i = 0; i < m; ++i) aug[i][j] = columns[j].coords[i];
    }
    for (int i = 0; i < m; ++i) aug[i][n] = b.coords[i];

    std::vector<int> pivot_row_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(aug[row], aug[pivot]);
        const Rational lead = aug[row][col];
        for (int c = col; c <= n; ++c) aug[row][c] /= lead;
        for (int r = 0; r < m; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            const Rational factor = aug[r][col];
            for (int c = col; c <= n; ++c) aug[r][c] -= factor * aug[row][c];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    // inconsistent row => b outside the span
    for (int r = row; r < m; ++r)
        if (aug[r][n] != 0) return std::nullopt;
    for (int col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0)
            throw std::logic_error("solve_in_span: columns are linearly dependent");

    std::vector<Rational> x(n);
    for (int col = 0; col < n; ++col) x[col] = aug[pivot_row_of_col[col]][n];
    return x;
}

} // namespace holodisc
