#include "holodisc/repweights.hpp"

#include "holodisc/cascade.hpp"
#include "holodisc/errors.hpp"
#include "holodisc/hermitian.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace holodisc;

namespace {

RationalVec vec(std::initializer_list<int> values) {
    RationalVec v;
    for (int x : values) v.coords.emplace_back(x);
    return v;
}

HighestWeightSpec spec_of(std::vector<long> pairings, Rational central = 0) {
    HighestWeightSpec s;
    s.compact_pairings = std::move(pairings);
    s.noncompact_pairing = std::move(central);
    return s;
}

std::set<RationalVec> weight_values(const WeightSet& ws) {
    const auto all = ws.weights();
    return {all.begin(), all.end()};
}

// Independent oracle: enumerate the coefficient box 0 <= c_j <= d_j, where
// d is the coefficient vector of Lambda0 - w0(Lambda0), and keep the c whose
// weight has a dominant conjugate lying in the saturation cone, i.e. whose
// dominant representative is reachable from Lambda0 by a nonnegative
// integral descent. This is the textbook characterization of the weight set
// and shares no code with the string-descent construction under test.
std::set<RationalVec> box_oracle(const HermitianStructure& hs, const HighestWeightSpec& spec) {
    const Weight lambda0 = highest_weight(hs, spec);
    std::vector<RationalVec> simples;
    for (int node : hs.compact_nodes())
        simples.push_back(hs.roots().simple_roots()[node - 1]);
    const int m = static_cast<int>(simples.size());

    std::set<RationalVec> keep;
    if (m == 0) {
        keep.insert(lambda0);
        return keep;
    }

    // lowest weight = w0(Lambda0) = -(dominant rep of -Lambda0)
    const Weight lowest = -dominant_representative(-lambda0, simples);
    const auto span_coeffs = solve_in_span(simples, lambda0 - lowest);
    REQUIRE(span_coeffs.has_value());
    std::vector<long> box(m);
    for (int j = 0; j < m; ++j) {
        REQUIRE(denominator((*span_coeffs)[j]) == 1);
        REQUIRE((*span_coeffs)[j] >= 0);
        box[j] = static_cast<long>(numerator((*span_coeffs)[j]).convert_to<long>());
    }

    std::vector<long> c(m, 0);
    while (true) {
        Weight mu = lambda0;
        for (int j = 0; j < m; ++j) mu = mu - Rational(c[j]) * simples[j];
        // membership: the dominant conjugate nu must satisfy
        // lambda0 - nu = nonnegative integral combination of the simples
        const Weight nu = dominant_representative(mu, simples);
        const auto diff = solve_in_span(simples, lambda0 - nu);
        bool member = diff.has_value();
        if (member)
            for (const auto& x : *diff)
                if (denominator(x) != 1 || x < 0) member = false;
        if (member) keep.insert(mu);

        int j = 0;
        while (j < m && c[j] == box[j]) c[j++] = 0;
        if (j == m) break;
        ++c[j];
    }
    return keep;
}

} // namespace

TEST_SUITE("repweights") {

TEST_CASE("highest weight assembly and validation") {
    const HermitianStructure sp2 = HermitianStructure::build(Preset::sp(2));
    // one compact node; pairing 2 along it, no central shift: Lambda0 = 2 omega_1
    CHECK(highest_weight(sp2, spec_of({2})) == vec({2, 0}));
    // pure central part lies along Lambda1
    CHECK(highest_weight(sp2, spec_of({0}, Rational(3, 2))) == Rational(3, 2) * vec({1, 1}));
    CHECK(highest_weight(sp2, spec_of({0})).is_zero());

    CHECK_THROWS_AS(highest_weight(sp2, spec_of({-1})), NonDominantError);
    CHECK_THROWS_AS(highest_weight(sp2, spec_of({})), std::invalid_argument);
    CHECK_THROWS_AS(highest_weight(sp2, spec_of({1, 2})), std::invalid_argument);
}

TEST_CASE("trivial and scalar representations") {
    const HermitianStructure su11 = HermitianStructure::build(Preset::su(1, 1));
    const WeightSet ws = weight_set(su11, spec_of({}));
    CHECK(ws.size() == 1);
    CHECK(ws.coeff_dim() == 0);
    CHECK(ws.materialize(0).is_zero());
    CHECK(ws.contains(ws.lambda0()));

    const HermitianStructure sp2 = HermitianStructure::build(Preset::sp(2));
    const WeightSet scalar = weight_set(sp2, spec_of({0}));
    CHECK(scalar.size() == 1);
}

TEST_CASE("sp(2,R) with compact pairing 2: the three-element string") {
    const HermitianStructure hs = HermitianStructure::build(Preset::sp(2));
    const WeightSet ws = weight_set(hs, spec_of({2}));
    REQUIRE(ws.size() == 3);
    CHECK(weight_values(ws) ==
          std::set<RationalVec>{vec({2, 0}), vec({1, 1}), vec({0, 2})});
    // storage order: Lambda0 first, then by descent depth
    CHECK(ws.materialize(0) == vec({2, 0}));
    CHECK(ws.materialize(1) == vec({1, 1}));
    CHECK(ws.materialize(2) == vec({0, 2}));
    CHECK(ws.contains(vec({1, 1})));
    CHECK(!ws.contains(vec({2, 2})));
    CHECK(!ws.contains(Rational(1, 2) * vec({1, 1})));
}

TEST_CASE("su(2,2) product structure: size (a+1)(b+1)") {
    const HermitianStructure hs = HermitianStructure::build(Preset::su(2, 2));
    // compact subsystem A_1 x A_1
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
            const WeightSet ws = weight_set(hs, spec_of({a, b}));
            CHECK(ws.size() == static_cast<std::size_t>((a + 1) * (b + 1)));
        }
}

TEST_CASE("string-descent set equals the box-membership oracle") {
    struct Case {
        Preset preset;
        HighestWeightSpec spec;
    };
    const Case cases[] = {
        {Preset::sp(2), spec_of({3})},
        {Preset::sp(3), spec_of({1, 2})},
        {Preset::su(2, 1), spec_of({2}, Rational(1, 2))},
        {Preset::su(2, 2), spec_of({2, 1})},
        {Preset::su(3, 3), spec_of({1, 0, 0, 1}, Rational(-2))},
        {Preset::so_n2(5), spec_of({2, 1})},
        {Preset::so_star(8), spec_of({0, 1, 1})},
    };
    for (const auto& c : cases) {
        CAPTURE(c.preset.name);
        const HermitianStructure hs = HermitianStructure::build(c.preset);
        const WeightSet ws = weight_set(hs, c.spec);
        const auto oracle = box_oracle(hs, c.spec);
        CHECK(weight_values(ws) == oracle);
    }
}

TEST_CASE("weight-set invariances") {
    const HermitianStructure hs = HermitianStructure::build(Preset::sp(3));
    const WeightSet ws = weight_set(hs, spec_of({2, 1}, Rational(1, 3)));
    const auto values = ws.weights();

    // Lambda0 comes first and every other weight is strictly below it
    CHECK(values.front() == ws.lambda0());
    std::vector<RationalVec> simples;
    for (int node : hs.compact_nodes()) simples.push_back(hs.roots().simple_roots()[node - 1]);
    for (std::size_t idx = 1; idx < ws.size(); ++idx) {
        const auto diff = solve_in_span(simples, ws.lambda0() - values[idx]);
        REQUIRE(diff.has_value());
        Rational depth = 0;
        for (const auto& x : *diff) {
            CHECK(denominator(x) == 1);
            CHECK(x >= 0);
            depth += x;
        }
        CHECK(depth > 0);
    }

    // closure under the compact Weyl group (simple reflections suffice)
    const auto as_set = weight_values(ws);
    for (const auto& mu : values)
        for (const auto& alpha : simples) CHECK(as_set.count(reflect(mu, alpha)) == 1);

    // every member evaluates identically on H1 (the central direction)
    for (const auto& mu : values) CHECK(dot(mu, hs.h1()) == dot(ws.lambda0(), hs.h1()));

    // contains() agrees with the materialized set on members and non-members
    for (const auto& mu : values) CHECK(ws.contains(mu));
    CHECK(!ws.contains(ws.lambda0() + simples[0]));
}

TEST_CASE("size limit enforcement") {
    const HermitianStructure hs = HermitianStructure::build(Preset::su(3, 3));
    CHECK_THROWS_AS(weight_set(hs, spec_of({5, 5, 5, 5}), 10), SizeLimitError);
    CHECK_NOTHROW(weight_set(hs, spec_of({1, 0, 0, 0}), 10));
}

TEST_CASE("max pairing on sp(2,R), compact pairing 2") {
    const HermitianStructure hs = HermitianStructure::build(Preset::sp(2));
    const CascadeResult cas = cascade(hs);
    const WeightSet ws = weight_set(hs, spec_of({2}));
    const MaxPairing mp = max_pairing(hs, cas, ws);
    CHECK(mp.value == 2);
    CHECK(mp.argmax_weight == vec({2, 0}));
    CHECK(mp.argmax_index == 2);  // gamma_2 = 2 e_1
}

TEST_CASE("max pairing equals the highest weight against the top cascade coroot") {
    // With the dominance order generated by the compact simples and the
    // cascade ordering, the maximum is always attained at (Lambda0, gamma_r).
    struct Case {
        Preset preset;
        HighestWeightSpec spec;
    };
    const Case cases[] = {
        {Preset::su(1, 1), spec_of({}, Rational(5, 2))},
        {Preset::sp(2), spec_of({3}, Rational(-1))},
        {Preset::sp(3), spec_of({0, 2})},
        {Preset::su(2, 2), spec_of({1, 2}, Rational(1, 2))},
        {Preset::so_star(8), spec_of({2, 0, 1})},
        {Preset::so_n2(6), spec_of({1, 0, 1})},
        {Preset::e6_iii(), spec_of({1, 0, 0, 0, 0})},
    };
    for (const auto& c : cases) {
        CAPTURE(c.preset.name);
        const HermitianStructure hs = HermitianStructure::build(c.preset);
        const CascadeResult cas = cascade(hs);
        const WeightSet ws = weight_set(hs, c.spec, 5'000'000);
        const MaxPairing mp = max_pairing(hs, cas, ws);
        CHECK(mp.value == pairing(ws.lambda0(), cas.gamma(cas.rank())));

        // brute-force verification over the materialized set
        Rational best;
        bool first = true;
        for (std::size_t idx = 0; idx < ws.size(); ++idx) {
            const Weight mu = ws.materialize(idx);
            for (int i = 1; i <= cas.rank(); ++i) {
                const Rational v = pairing(mu, cas.gamma(i));
                if (first || v > best) {
                    best = v;
                    first = false;
                }
            }
        }
        CHECK(mp.value == best);
        CHECK(pairing(mp.argmax_weight, cas.gamma(mp.argmax_index)) == mp.value);
        CHECK(ws.contains(mp.argmax_weight));
    }
}

} // TEST_SUITE
