#include "holodisc/repweights.hpp"

#include "holodisc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace holodisc {

namespace {

bool to_int64(const Integer& value, std::int64_t& out) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        return false;
    out = value.convert_to<std::int64_t>();
    return true;
}

// Open-addressing set of coefficient rows. Rows live contiguously in an
// append-only arena; the table stores 1-based row ids with linear probing
// and exact row comparison, so hash collisions cannot merge distinct rows.
class RowSet {
public:
    RowSet(int m, std::vector<std::int32_t>& arena) : m_(m), arena_(arena) {
        table_.assign(1024, 0);
    }

    std::size_t size() const { return count_; }

    /// true when the row was new (and got appended to the arena)
    bool insert(const std::int32_t* row) {
        if ((count_ + 1) * 10 >= table_.size() * 7) grow();
        std::size_t idx = probe(row);
        if (table_[idx] != 0) return false;
        arena_.insert(arena_.end(), row, row + m_);
        table_[idx] = static_cast<std::uint32_t>(++count_);
        return true;
    }

private:
    std::size_t probe(const std::int32_t* row) const {
        const std::size_t mask = table_.size() - 1;
        std::size_t idx = hash(row) & mask;
        while (table_[idx] != 0) {
            const std::int32_t* existing =
                arena_.data() + (table_[idx] - 1) * static_cast<std::size_t>(m_);
            if (std::equal(row, row + m_, existing)) return idx;
            idx = (idx + 1) & mask;
        }
        return idx;
    }

    std::uint64_t hash(const std::int32_t* row) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (int j = 0; j < m_; ++j) {
            h ^= static_cast<std::uint32_t>(row[j]);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return h;
    }

    void grow() {
        std::vector<std::uint32_t> bigger(table_.size() * 2, 0);
        const std::size_t mask = bigger.size() - 1;
        for (std::uint32_t id = 1; id <= count_; ++id) {
            const std::int32_t* row = arena_.data() + (id - 1) * static_cast<std::size_t>(m_);
            std::size_t idx = hash(row) & mask;
            while (bigger[idx] != 0) idx = (idx + 1) & mask;
            bigger[idx] = id;
        }
        table_ = std::move(bigger);
    }

    int m_;
    std::vector<std::int32_t>& arena_;
    std::vector<std::uint32_t> table_;
    std::size_t count_ = 0;
};

} // namespace

Weight highest_weight(const HermitianStructure& hs, const HighestWeightSpec& spec) {
    const auto& nodes = hs.compact_nodes();
    if (spec.compact_pairings.size() != nodes.size())
        throw std::invalid_argument("expected " + std::to_string(nodes.size()) +
                                    " compact pairings, got " +
                                    std::to_string(spec.compact_pairings.size()));
    const auto& fundamental = hs.roots().fundamental_weights();
    Weight lambda0;
    lambda0.coords.assign(hs.roots().ambient_dim(), Rational(0));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const long c = spec.compact_pairings[j];
        if (c < 0)
            throw NonDominantError("pairing with compact simple coroot " + std::to_string(j + 1) +
                                   " is " + std::to_string(c) + "; a highest weight needs >= 0");
        if (c != 0) lambda0 = lambda0 + Rational(c) * fundamental[nodes[j] - 1];
    }
    if (spec.noncompact_pairing != 0)
        lambda0 = lambda0 + spec.noncompact_pairing * fundamental[hs.noncompact_node() - 1];
    return lambda0;
}

Weight WeightSet::materialize(std::size_t idx) const {
    Weight mu = lambda0_;
    const std::int32_t* row = coeff_row(idx);
    for (int j = 0; j < m_; ++j)
        if (row[j] != 0) mu = mu - Rational(row[j]) * compact_simples_[j];
    return mu;
}

std::vector<Weight> WeightSet::weights() const {
    std::vector<Weight> out;
    out.reserve(count_);
    for (std::size_t idx = 0; idx < count_; ++idx) out.push_back(materialize(idx));
    return out;
}

bool WeightSet::contains(const Weight& mu) const {
    if (mu.dim() != lambda0_.dim()) return false;
    if (m_ == 0) return mu == lambda0_;
    auto coeffs = solve_in_span(compact_simples_, lambda0_ - mu);
    if (!coeffs) return false;
    std::vector<std::int32_t> row(m_);
    std::int64_t depth = 0;
    for (int j = 0; j < m_; ++j) {
        const Rational& c = (*coeffs)[j];
        if (denominator(c) != 1 || c < 0 || c > std::numeric_limits<std::int32_t>::max())
            return false;
        row[j] = numerator(c).convert_to<std::int32_t>();
        depth += row[j];
    }
    // rows are sorted by (descent depth, lexicographic), so binary search
    auto row_before_target = [&](std::size_t k) {
        const std::int32_t* rk = coeff_row(k);
        std::int64_t dk = 0;
        for (int j = 0; j < m_; ++j) dk += rk[j];
        if (dk != depth) return dk < depth;
        return std::lexicographical_compare(rk, rk + m_, row.data(), row.data() + m_);
    };
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (row_before_target(mid)) lo = mid + 1;
        else hi = mid;
    }
    return lo < count_ && std::equal(coeff_row(lo), coeff_row(lo) + m_, row.data());
}

WeightSet weight_set(const HermitianStructure& hs, const HighestWeightSpec& spec,
                     std::size_t size_limit) {
    if (size_limit == 0) throw SizeLimitError("size_limit must be positive");

    WeightSet ws;
    ws.lambda0_ = highest_weight(hs, spec);
    const auto& simple = hs.roots().simple_roots();
    for (int node : hs.compact_nodes()) ws.compact_simples_.push_back(simple[node - 1]);
    const int m = static_cast<int>(ws.compact_simples_.size());
    ws.m_ = m;

    if (m == 0) {
        ws.count_ = 1;
        return ws;
    }

    // integer Cartan data of the compact subsystem: cartan[j][i] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<std::int64_t>> cartan(m, std::vector<std::int64_t>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            const Rational value = pairing(ws.compact_simples_[j], ws.compact_simples_[i]);
            if (denominator(value) != 1)
                throw std::logic_error("non-integral Cartan entry in the compact subsystem");
            cartan[j][i] = numerator(value).convert_to<std::int64_t>();
        }

    RowSet set(m, ws.flat_);
    std::vector<std::int32_t> row(m, 0);
    set.insert(row.data());

    // saturated string descent: weights are closed under mu -> mu - j alpha_i
    // for j = 1..<mu, alpha_i^vee> whenever the pairing is positive
    std::vector<std::int32_t> child(m);
    for (std::size_t k = 0; k < set.size(); ++k) {
        std::copy(ws.flat_.begin() + k * m, ws.flat_.begin() + (k + 1) * m, row.begin());
        for (int i = 0; i < m; ++i) {
            std::int64_t pair = spec.compact_pairings[i];
            for (int j = 0; j < m; ++j) pair -= static_cast<std::int64_t>(row[j]) * cartan[j][i];
            if (pair <= 0) continue;
            std::copy(row.begin(), row.end(), child.begin());
            for (std::int64_t step = 1; step <= pair; ++step) {
                const std::int64_t next = static_cast<std::int64_t>(row[i]) + step;
                if (next > std::numeric_limits<std::int32_t>::max())
                    throw SizeLimitError("weight coefficients overflow the row storage");
                child[i] = static_cast<std::int32_t>(next);
                if (set.insert(child.data()) && set.size() > size_limit)
                    throw SizeLimitError("weight set exceeds the size limit of " +
                                         std::to_string(size_limit));
            }
        }
    }
    ws.count_ = set.size();

    // deterministic storage order: ascending descent depth, then lexicographic;
    // the unique depth-0 row (Lambda0) lands first
    std::vector<std::uint32_t> order(ws.count_);
    std::iota(order.begin(), order.end(), 0u);
    const std::int32_t* data = ws.flat_.data();
    std::vector<std::int64_t> depth(ws.count_);
    for (std::size_t k = 0; k < ws.count_; ++k) {
        std::int64_t s = 0;
        for (int j = 0; j < m; ++j) s += data[k * m + j];
        depth[k] = s;
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (depth[x] != depth[y]) return depth[x] < depth[y];
        const std::int32_t* rx = data + static_cast<std::size_t>(x) * m;
        const std::int32_t* ry = data + static_cast<std::size_t>(y) * m;
        return std::lexicographical_compare(rx, rx + m, ry, ry + m);
    });
    std::vector<std::int32_t> sorted;
    sorted.reserve(ws.flat_.size());
    for (std::uint32_t id : order) {
        const std::int32_t* r = data + static_cast<std::size_t>(id) * m;
        sorted.insert(sorted.end(), r, r + m);
    }
    ws.flat_ = std::move(sorted);
    return ws;
}

MaxPairing max_pairing(const HermitianStructure& hs, const CascadeResult& cas,
                       const WeightSet& ws) {
    if (static_cast<std::size_t>(ws.coeff_dim()) != hs.compact_nodes().size())
        throw std::invalid_argument("weight set does not belong to this structure");
    const int r = cas.rank();
    const int m = ws.coeff_dim();
    if (r == 0 || ws.size() == 0) throw std::logic_error("max_pairing over an empty set");

    // value_i(row) = base_i - step_i(row)/scale with integer steps sharing
    // one small scale (root pairings have tiny denominators)
    std::vector<Rational> base(r);
    for (int i = 0; i < r; ++i) base[i] = pairing(ws.lambda0(), cas.gammas[i]);
    std::vector<std::vector<Rational>> coef(m, std::vector<Rational>(r));
    Integer scale = 1;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < r; ++i) {
            coef[j][i] = pairing(ws.compact_simples()[j], cas.gammas[i]);
            scale = lcm(scale, denominator(coef[j][i]));
        }

    bool fast = m <= 2048;
    std::vector<std::int64_t> steps(static_cast<std::size_t>(m) * r, 0);
    for (int j = 0; fast && j < m; ++j)
        for (int i = 0; i < r; ++i) {
            std::int64_t s = 0;
            const Rational scaled = coef[j][i] * scale;
            if (!to_int64(numerator(scaled), s) || s > (1 << 20) || s < -(1 << 20)) {
                fast = false;
                break;
            }
            steps[static_cast<std::size_t>(j) * r + i] = s;
        }

    if (fast) {
        std::vector<std::int64_t> min_step(r, 0);
        std::vector<std::size_t> first_row(r, 0);
        std::vector<bool> seen(r, false);
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const std::int32_t* row = ws.coeff_row(k);
            for (int i = 0; i < r; ++i) {
                std::int64_t t = 0;
                for (int j = 0; j < m; ++j)
                    t += static_cast<std::int64_t>(row[j]) * steps[static_cast<std::size_t>(j) * r + i];
                if (!seen[i] || t < min_step[i]) {
                    seen[i] = true;
                    min_step[i] = t;
                    first_row[i] = k;
                }
            }
        }
        // the scan below reproduces a row-major, index-minor sweep with
        // strict improvement: max value, then earliest row, then smallest i
        MaxPairing out;
        int best_i = -1;
        std::size_t best_row = 0;
        Rational best_value;
        for (int i = 0; i < r; ++i) {
            const Rational value = base[i] - Rational(Integer(min_step[i]), scale);
            if (best_i < 0 || value > best_value ||
                (value == best_value && first_row[i] < best_row)) {
                best_value = value;
                best_i = i;
                best_row = first_row[i];
            }
        }
        out.value = best_value;
        out.argmax_weight = ws.materialize(best_row);
        out.argmax_index = best_i + 1;
        return out;
    }

    // exact fallback: direct row-major, index-minor sweep in rational arithmetic
    MaxPairing out;
    bool have = false;
    for (std::size_t k = 0; k < ws.size(); ++k) {
        const std::int32_t* row = ws.coeff_row(k);
        for (int i = 0; i < r; ++i) {
            Rational value = base[i];
            for (int j = 0; j < m; ++j)
                if (row[j] != 0) value -= Rational(row[j]) * coef[j][i];
            if (!have || value > out.value) {
                have = true;
                out.value = value;
                out.argmax_weight = ws.materialize(k);
                out.argmax_index = i + 1;
            }
        }
    }
    return out;
}

} // namespace holodisc
