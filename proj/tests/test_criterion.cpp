#include "holodisc/criterion.hpp"

#include "holodisc/cascade.hpp"
#include "holodisc/hermitian.hpp"
#include "holodisc/repweights.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

using namespace holodisc;

namespace {

RationalVec vec(std::initializer_list<int> values) {
    RationalVec v;
    for (int x : values) v.coords.emplace_back(x);
    return v;
}

struct Bundle {
    HermitianStructure hs;
    CascadeResult cas;
    DomainInvariants inv;
};

Bundle bundle(const Preset& p) {
    HermitianStructure hs = HermitianStructure::build(p);
    CascadeResult cas = cascade(hs);
    DomainInvariants inv = domain_invariants(hs, cas);
    return {std::move(hs), std::move(cas), std::move(inv)};
}

CriterionInput input_of(Rational lambda, std::vector<long> pairings = {},
                        Rational central = 0) {
    CriterionInput in;
    in.lambda = std::move(lambda);
    in.hw.compact_pairings = std::move(pairings);
    in.hw.noncompact_pairing = std::move(central);
    return in;
}

} // namespace

TEST_SUITE("criterion") {

TEST_CASE("thresholds for the scalar case equal -(p - 1)") {
    for (const Preset& p : standard_presets()) {
        const Bundle b = bundle(p);
        CAPTURE(p.name);
        HighestWeightSpec scalar;
        scalar.compact_pairings.assign(b.hs.compact_nodes().size(), 0);
        CHECK(threshold(b.hs, b.cas, b.inv, scalar) == Rational(1 - b.inv.p));
    }
}

TEST_CASE("explicit thresholds") {
    const Bundle sp2 = bundle(Preset::sp(2));
    CHECK(threshold(sp2.hs, sp2.cas, sp2.inv, input_of(0, {0}).hw) == -2);
    CHECK(threshold(sp2.hs, sp2.cas, sp2.inv, input_of(0, {2}).hw) == -4);
    // a central shift c moves the threshold by -c
    CHECK(threshold(sp2.hs, sp2.cas, sp2.inv, input_of(0, {0}, Rational(1, 2)).hw) ==
          Rational(-5, 2));

    const Bundle su11 = bundle(Preset::su(1, 1));
    CHECK(threshold(su11.hs, su11.cas, su11.inv, input_of(0).hw) == -1);

    const Bundle e7 = bundle(Preset::e7_vii());
    HighestWeightSpec scalar;
    scalar.compact_pairings.assign(6, 0);
    CHECK(threshold(e7.hs, e7.cas, e7.inv, scalar) == -17);
}

TEST_CASE("sp(2,R) scalar family: strict inequality at the boundary") {
    const Bundle b = bundle(Preset::sp(2));
    const CriterionReport above = decide(b.hs, b.cas, b.inv, input_of(Rational(-5, 2), {0}));
    CHECK(above.threshold == -2);
    CHECK(above.nonzero);
    CHECK(above.equivalence_ok);

    const CriterionReport boundary = decide(b.hs, b.cas, b.inv, input_of(-2, {0}));
    CHECK(!boundary.nonzero);
    CHECK(boundary.equivalence_ok);
    // at the boundary the binding exponent sits exactly at -1
    bool saw_minus_one = false;
    for (const auto& row : boundary.per_weight) {
        CHECK(!row.satisfied);  // scalar case: every row is binding at once
        if (row.exponent == -1) saw_minus_one = true;
    }
    CHECK(saw_minus_one);

    const CriterionReport below = decide(b.hs, b.cas, b.inv, input_of(0, {0}));
    CHECK(!below.nonzero);
    CHECK(below.equivalence_ok);
}

TEST_CASE("sp(2,R) per-weight table at lambda = -4, scalar") {
    const Bundle b = bundle(Preset::sp(2));
    const CriterionReport rep = decide(b.hs, b.cas, b.inv, input_of(-4, {0}));
    REQUIRE(rep.per_weight.size() == 2);  // one weight, two cascade indices
    for (const auto& row : rep.per_weight) {
        CHECK(row.weight.is_zero());
        CHECK(row.exponent == 1);  // -(-4 + 0 + 3)
        CHECK(row.satisfied);
    }
    CHECK(rep.nonzero);
    CHECK(rep.equivalence_ok);
}

TEST_CASE("sp(2,R) per-weight table at lambda = -9/2, compact pairing 2") {
    const Bundle b = bundle(Preset::sp(2));
    const CriterionReport rep = decide(b.hs, b.cas, b.inv, input_of(Rational(-9, 2), {2}));
    CHECK(rep.threshold == -4);
    CHECK(rep.nonzero);
    REQUIRE(rep.per_weight.size() == 6);  // three weights x two indices

    // two rows attain the binding exponent -1/2: the extreme weights paired
    // against the cascade root they load fully
    Rational worst = rep.per_weight.front().exponent;
    for (const auto& row : rep.per_weight) {
        CHECK(row.satisfied);
        worst = std::min(worst, row.exponent);
    }
    CHECK(worst == Rational(-1, 2));
    std::vector<std::pair<RationalVec, int>> binding;
    for (const auto& row : rep.per_weight)
        if (row.exponent == worst) binding.emplace_back(row.weight, row.index);
    const std::vector<std::pair<RationalVec, int>> expected = {{vec({0, 2}), 1},
                                                               {vec({2, 0}), 2}};
    CHECK(binding == expected);

    // the slack of the binding rows is exactly threshold - lambda
    CHECK(worst + 1 == rep.threshold - rep.lambda);
}

TEST_CASE("row ordering is by weight then cascade index") {
    const Bundle b = bundle(Preset::sp(2));
    const CriterionReport rep = decide(b.hs, b.cas, b.inv, input_of(-3, {2}));
    for (std::size_t k = 1; k < rep.per_weight.size(); ++k) {
        const auto& prev = rep.per_weight[k - 1];
        const auto& cur = rep.per_weight[k];
        const bool ordered =
            prev.weight < cur.weight || (prev.weight == cur.weight && prev.index < cur.index);
        CHECK(ordered);
    }
}

TEST_CASE("binding slack identity: min(e + 1) = threshold - lambda") {
    struct Case {
        Preset preset;
        std::vector<long> pairings;
        Rational central;
    };
    const Case cases[] = {
        {Preset::su(2, 1), {1}, Rational(1, 2)},
        {Preset::su(2, 2), {2, 0}, 0},
        {Preset::sp(3), {1, 1}, 0},
        {Preset::so_star(8), {0, 0, 1}, Rational(-3, 2)},
        {Preset::so_n2(5), {1, 0}, 0},
    };
    std::mt19937 rng(424242u);
    for (const auto& c : cases) {
        CAPTURE(c.preset.name);
        const Bundle b = bundle(c.preset);
        for (int trial = 0; trial < 8; ++trial) {
            const Rational lambda(static_cast<int>(rng() % 161) - 80, 8);
            const CriterionReport rep =
                decide(b.hs, b.cas, b.inv, input_of(lambda, c.pairings, c.central));
            REQUIRE(!rep.per_weight.empty());
            Rational min_slack = rep.per_weight.front().exponent + 1;
            for (const auto& row : rep.per_weight)
                min_slack = std::min(min_slack, row.exponent + Rational(1));
            CHECK(min_slack == rep.threshold - lambda);
        }
    }
}

TEST_CASE("equivalence of the two criteria across a seeded sweep") {
    std::mt19937 rng(777u);
    for (const Preset& p : standard_presets()) {
        const Bundle b = bundle(p);
        CAPTURE(p.name);
        const int m = static_cast<int>(b.hs.compact_nodes().size());
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<long> pairings(m, 0);
            if (m > 0 && trial % 2 == 0) pairings[rng() % m] = 1 + static_cast<long>(rng() % 2);
            const Rational center = threshold(b.hs, b.cas, b.inv,
                                              input_of(0, pairings).hw);
            // lambda in [center - 5, center + 5], eighth-integer grid
            const Rational lambda = center + Rational(static_cast<int>(rng() % 81) - 40, 8);
            const CriterionReport rep = decide(b.hs, b.cas, b.inv, input_of(lambda, pairings));
            CHECK(rep.equivalence_ok);
            CHECK(rep.nonzero == (lambda < rep.threshold));
            const bool all_satisfied =
                std::all_of(rep.per_weight.begin(), rep.per_weight.end(),
                            [](const PerWeightRow& row) { return row.satisfied; });
            CHECK(all_satisfied == rep.nonzero);
        }
    }
}

} // TEST_SUITE
