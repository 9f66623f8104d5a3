#include "holodisc/rootcore.hpp"

#include "holodisc/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace holodisc;

namespace {

RationalVec vec(std::initializer_list<int> values) {
    RationalVec v;
    for (int x : values) v.coords.emplace_back(x);
    return v;
}

// Independent oracle: regenerate the whole root set from the Cartan matrix
// alone by closing the simple roots under simple reflections in coefficient
// space (s_j keeps all coordinates except c_j, which becomes
// c_j - sum_i c_i <alpha_i, alpha_j^vee>). The closed-form coordinate lists
// in the library never enter this computation.
std::set<std::vector<long>> roots_from_cartan(const std::vector<std::vector<Rational>>& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            REQUIRE(denominator(cartan[i][j]) == 1);
            a[i][j] = static_cast<long>(numerator(cartan[i][j]).convert_to<long>());
        }
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<long> c(n, 0);
        c[i] = 1;
        roots.insert(c);
        frontier.push_back(std::move(c));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& c : frontier)
            for (int j = 0; j < n; ++j) {
                long pairing = 0;
                for (int i = 0; i < n; ++i) pairing += c[i] * a[i][j];
                std::vector<long> image = c;
                image[j] -= pairing;
                if (roots.insert(image).second) next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    return roots;
}

long positive_count(Family f, int rank) {
    switch (f) {
        case Family::A: return static_cast<long>(rank) * (rank + 1) / 2;
        case Family::B:
        case Family::C: return static_cast<long>(rank) * rank;
        case Family::D: return static_cast<long>(rank) * (rank - 1);
        case Family::E6: return 36;
        case Family::E7: return 63;
    }
    return -1;
}

} // namespace

TEST_SUITE("rootcore") {

TEST_CASE("vector arithmetic and ordering") {
    const RationalVec u = vec({1, -2, 3});
    const RationalVec w = vec({0, 5, -1});
    CHECK(u + w == vec({1, 3, 2}));
    CHECK(u - w == vec({1, -7, 4}));
    CHECK(-u == vec({-1, 2, -3}));
    CHECK(Rational(1, 2) * vec({4, 2, 0}) == vec({2, 1, 0}));
    CHECK(dot(u, w) == Rational(-13));
    CHECK(vec({0, 1}) < vec({1, 0}));
    CHECK(!(vec({1, 0}) < vec({1, 0})));
    CHECK(to_string(Rational(1, 2) * vec({1, 0})) == "(1/2, 0)");
}

TEST_CASE("supported and rejected types") {
    CHECK_NOTHROW(RootSystem::build(Family::A, 1));
    CHECK_NOTHROW(RootSystem::build(Family::B, 2));
    CHECK_NOTHROW(RootSystem::build(Family::C, 2));
    CHECK_NOTHROW(RootSystem::build(Family::D, 3));
    CHECK_NOTHROW(RootSystem::build(Family::E6, 6));
    CHECK_NOTHROW(RootSystem::build(Family::E7, 7));
    CHECK_THROWS_AS(RootSystem::build(Family::A, 0), UnsupportedTypeError);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 1), UnsupportedTypeError);
    CHECK_THROWS_AS(RootSystem::build(Family::C, 1), UnsupportedTypeError);
    CHECK_THROWS_AS(RootSystem::build(Family::D, 2), UnsupportedTypeError);
    CHECK_THROWS_AS(RootSystem::build(Family::E6, 7), UnsupportedTypeError);
    CHECK_THROWS_AS(RootSystem::build(Family::E7, 6), UnsupportedTypeError);
}

TEST_CASE("positive root counts match the classical formulas") {
    const std::pair<Family, int> cases[] = {{Family::A, 1}, {Family::A, 2}, {Family::A, 5},
                                            {Family::B, 2}, {Family::B, 4}, {Family::C, 2},
                                            {Family::C, 3}, {Family::D, 3}, {Family::D, 5},
                                            {Family::E6, 6}, {Family::E7, 7}};
    for (auto [f, n] : cases) {
        const RootSystem rs = RootSystem::build(f, n);
        CAPTURE(family_name(f));
        CAPTURE(n);
        CHECK(static_cast<long>(rs.positive_roots().size()) == positive_count(f, n));
        CHECK(static_cast<int>(rs.simple_roots().size()) == n);
    }
}

TEST_CASE("coordinate realization agrees with the Cartan-matrix closure oracle") {
    const std::pair<Family, int> cases[] = {{Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                                            {Family::D, 4}, {Family::E6, 6}, {Family::E7, 7}};
    for (auto [f, n] : cases) {
        const RootSystem rs = RootSystem::build(f, n);
        CAPTURE(family_name(f));
        const auto oracle = roots_from_cartan(rs.cartan_matrix());
        CHECK(oracle.size() == 2 * rs.positive_roots().size());

        // every oracle vector must reproduce a root in ambient coordinates,
        // positive exactly when all coefficients are nonnegative
        std::set<RationalVec> from_oracle;
        for (const auto& c : oracle) {
            RationalVec root;
            root.coords.assign(rs.ambient_dim(), Rational(0));
            for (int i = 0; i < n; ++i) root = root + Rational(c[i]) * rs.simple_roots()[i];
            from_oracle.insert(root);
            CHECK(rs.is_root(root));
        }
        CHECK(from_oracle.size() == oracle.size());
        for (const auto& beta : rs.positive_roots()) CHECK(from_oracle.count(beta) == 1);
    }
}

TEST_CASE("simple-root coordinates of positive roots are nonnegative integers") {
    for (auto [f, n] : {std::pair<Family, int>{Family::B, 4}, {Family::D, 5}, {Family::E7, 7}}) {
        const RootSystem rs = RootSystem::build(f, n);
        for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
            Rational height = 0;
            RationalVec rebuilt;
            rebuilt.coords.assign(rs.ambient_dim(), Rational(0));
            const auto& coords = rs.positive_root_coordinates(static_cast<int>(idx));
            for (int i = 0; i < n; ++i) {
                CHECK(denominator(coords[i]) == 1);
                CHECK(coords[i] >= 0);
                height += coords[i];
                rebuilt = rebuilt + coords[i] * rs.simple_roots()[i];
            }
            CHECK(rebuilt == rs.positive_roots()[idx]);
            CHECK(height == rs.height(static_cast<int>(idx)));
        }
    }
}

TEST_CASE("highest roots in coordinates") {
    CHECK(RootSystem::build(Family::A, 3).highest_root() == vec({1, 0, 0, -1}));
    CHECK(RootSystem::build(Family::B, 3).highest_root() == vec({1, 1, 0}));
    CHECK(RootSystem::build(Family::C, 3).highest_root() == vec({2, 0, 0}));
    CHECK(RootSystem::build(Family::D, 4).highest_root() == vec({1, 1, 0, 0}));
    CHECK(RootSystem::build(Family::E7, 7).highest_root() ==
          vec({0, 0, 0, 0, 0, 0, -1, 1}));
    // E6: (1,2,2,3,2,1) against the simple roots
    const RootSystem e6 = RootSystem::build(Family::E6, 6);
    const auto coords = e6.simple_coordinates(e6.highest_root());
    REQUIRE(coords.has_value());
    const int expected[] = {1, 2, 2, 3, 2, 1};
    for (int i = 0; i < 6; ++i) CHECK((*coords)[i] == expected[i]);
    // E7: (2,2,3,4,3,2,1)
    const RootSystem e7 = RootSystem::build(Family::E7, 7);
    const auto coords7 = e7.simple_coordinates(e7.highest_root());
    REQUIRE(coords7.has_value());
    const int expected7[] = {2, 2, 3, 4, 3, 2, 1};
    for (int i = 0; i < 7; ++i) CHECK((*coords7)[i] == expected7[i]);
}

TEST_CASE("highest root dominates every positive root") {
    for (auto [f, n] : {std::pair<Family, int>{Family::A, 4}, {Family::C, 3}, {Family::E6, 6}}) {
        const RootSystem rs = RootSystem::build(f, n);
        const auto theta = rs.simple_coordinates(rs.highest_root());
        REQUIRE(theta.has_value());
        for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
            const auto& c = rs.positive_root_coordinates(static_cast<int>(idx));
            for (int i = 0; i < n; ++i) CHECK((*theta)[i] >= c[i]);
        }
    }
}

TEST_CASE("Cartan matrices match the standard tables") {
    auto entries = [](const RootSystem& rs) {
        std::vector<std::vector<int>> m;
        for (const auto& row : rs.cartan_matrix()) {
            std::vector<int> r;
            for (const auto& x : row) r.push_back(numerator(x).convert_to<int>());
            m.push_back(std::move(r));
        }
        return m;
    };
    CHECK(entries(RootSystem::build(Family::A, 2)) ==
          std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    // B_2: <alpha_1, alpha_2^vee> = -2 against the short coroot, -1 back
    CHECK(entries(RootSystem::build(Family::B, 2)) ==
          std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    CHECK(entries(RootSystem::build(Family::C, 2)) ==
          std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(entries(RootSystem::build(Family::D, 4)) ==
          std::vector<std::vector<int>>{
              {2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    CHECK(entries(RootSystem::build(Family::E6, 6)) ==
          std::vector<std::vector<int>>{{2, 0, -1, 0, 0, 0},
                                        {0, 2, 0, -1, 0, 0},
                                        {-1, 0, 2, -1, 0, 0},
                                        {0, -1, -1, 2, -1, 0},
                                        {0, 0, 0, -1, 2, -1},
                                        {0, 0, 0, 0, -1, 2}});
    CHECK(entries(RootSystem::build(Family::E7, 7)) ==
          std::vector<std::vector<int>>{{2, 0, -1, 0, 0, 0, 0},
                                        {0, 2, 0, -1, 0, 0, 0},
                                        {-1, 0, 2, -1, 0, 0, 0},
                                        {0, -1, -1, 2, -1, 0, 0},
                                        {0, 0, 0, -1, 2, -1, 0},
                                        {0, 0, 0, 0, -1, 2, -1},
                                        {0, 0, 0, 0, 0, -1, 2}});
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
    for (auto [f, n] : {std::pair<Family, int>{Family::A, 4}, {Family::B, 3}, {Family::C, 3},
                        {Family::D, 4}, {Family::E6, 6}, {Family::E7, 7}}) {
        const RootSystem rs = RootSystem::build(f, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(pairing(rs.fundamental_weights()[i], rs.simple_roots()[j]) ==
                      Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("pairing and reflection basics") {
    const RootSystem rs = RootSystem::build(Family::C, 2);
    const RationalVec alpha1 = vec({1, -1});
    const RationalVec alpha2 = vec({0, 2});
    CHECK(pairing(alpha1, alpha2) == Rational(-1));
    CHECK(pairing(alpha2, alpha1) == Rational(-2));
    CHECK(reflect(vec({1, 0}), alpha1) == vec({0, 1}));
    CHECK(reflect(vec({1, 0}), vec({1, 0})) == vec({-1, 0}));
    RationalVec zero;
    zero.coords.assign(2, Rational(0));
    CHECK_THROWS_AS(pairing(vec({1, 0}), zero), ZeroRootError);
    CHECK_THROWS_AS(reflect(vec({1, 0}), zero), ZeroRootError);
}

TEST_CASE("dominant representative is dominant, fixed on dominant input, and Weyl-invariant") {
    std::mt19937 rng(20240817u);
    for (auto [f, n] : {std::pair<Family, int>{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
        const RootSystem rs = RootSystem::build(f, n);
        const auto& simple = rs.simple_roots();
        for (int trial = 0; trial < 25; ++trial) {
            // random integral weight as a combination of fundamental weights
            Weight mu;
            mu.coords.assign(rs.ambient_dim(), Rational(0));
            for (int i = 0; i < n; ++i) {
                const int c = static_cast<int>(rng() % 9) - 4;
                mu = mu + Rational(c) * rs.fundamental_weights()[i];
            }
            const Weight dom = dominant_representative(mu, simple);
            for (const auto& alpha : simple) CHECK(pairing(dom, alpha) >= 0);
            CHECK(dominant_representative(dom, simple) == dom);
            // scrambling by random simple reflections must not change the result
            Weight scrambled = mu;
            for (int k = 0; k < 12; ++k)
                scrambled = reflect(scrambled, simple[rng() % n]);
            CHECK(dominant_representative(scrambled, simple) == dom);
        }
    }
}

TEST_CASE("solve_in_span answers exactly and detects off-span targets") {
    const std::vector<RationalVec> columns = {vec({1, 0, 2}), vec({0, 1, 1})};
    const auto sol = solve_in_span(columns, vec({3, -2, 4}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(3));
    CHECK((*sol)[1] == Rational(-2));
    CHECK(!solve_in_span(columns, vec({0, 0, 1})).has_value());

    // random well-conditioned exact systems round-trip
    std::mt19937 rng(901u);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<RationalVec> cols;
        for (int j = 0; j < n; ++j) {
            RationalVec c;
            c.coords.assign(n, Rational(0));
            c.coords[j] = 1 + static_cast<int>(rng() % 3); // diagonally dominant
            for (int i = 0; i < n; ++i)
                if (i != j && rng() % 2) c.coords[i] = Rational(static_cast<int>(rng() % 3) - 1, 3);
            cols.push_back(std::move(c));
        }
        std::vector<Rational> x(n);
        for (int j = 0; j < n; ++j) x[j] = Rational(static_cast<int>(rng() % 11) - 5, 2);
        RationalVec b;
        b.coords.assign(n, Rational(0));
        for (int j = 0; j < n; ++j) b = b + x[j] * cols[j];
        const auto solved = solve_in_span(cols, b);
        REQUIRE(solved.has_value());
        for (int j = 0; j < n; ++j) CHECK((*solved)[j] == x[j]);
    }
}

TEST_CASE("root lengths: at most two, ratio matching the family") {
    for (auto [f, n] : {std::pair<Family, int>{Family::B, 3}, {Family::C, 3}, {Family::A, 3},
                        {Family::D, 4}, {Family::E7, 7}}) {
        const RootSystem rs = RootSystem::build(f, n);
        std::set<Rational> lengths;
        for (const auto& beta : rs.positive_roots()) lengths.insert(dot(beta, beta));
        if (f == Family::B || f == Family::C) {
            CHECK(lengths.size() == 2);
            CHECK(*lengths.rbegin() == 2 * *lengths.begin());
        } else {
            CHECK(lengths.size() == 1);  // simply laced
        }
    }
}

} // TEST_SUITE
