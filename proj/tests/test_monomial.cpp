#include <gtest/gtest.h>

#include <random>

#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/monomial.hpp"
#include "support/oracles.hpp"

using namespace srkit;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::set<std::vector<int>> as_sets(const std::vector<MonomialPrime>& primes) {
    std::set<std::vector<int>> out;
    for (const auto& p : primes) out.insert(p.vars());
    return out;
}

}  // namespace

TEST(Monomial, SupportAndDivision) {
    auto m = mono({2, 0, 1});
    EXPECT_EQ(m.support(), (std::vector<int>{0, 2}));
    EXPECT_TRUE(mono({1, 0, 1}).divides(m));
    EXPECT_FALSE(m.divides(mono({1, 0, 1})));
    EXPECT_TRUE(mono({0, 0, 0}).is_constant());
    EXPECT_THROW(mono({-1}), InputError);
}

TEST(MonomialIdeal, Minimalize) {
    MonomialIdeal i(2, {mono({1, 1}), mono({1, 0}), mono({1, 0}), mono({0, 2})});
    auto m = i.minimalized();
    EXPECT_EQ(m.generators().size(), 2u);
}

TEST(MinimalPrimes, ProductOfTwoVariables) {
    auto primes = minimal_primes(MonomialIdeal(2, {mono({1, 1})}));
    EXPECT_EQ(as_sets(primes), (std::set<std::vector<int>>{{0}, {1}}));
}

TEST(MinimalPrimes, VariableAndProduct) {
    MonomialIdeal ideal(3, {mono({1, 0, 0}), mono({0, 1, 1})});
    const auto expected = oracle::minimal_primes_brute_force(ideal);
    EXPECT_EQ(expected, (std::set<std::vector<int>>{{0, 1}, {0, 2}}));
    EXPECT_EQ(as_sets(minimal_primes(ideal)), expected);
}

TEST(MinimalPrimes, FourVariables) {
    MonomialIdeal ideal(6, {mono({1, 0, 0, 0, 0, 0}), mono({0, 1, 0, 0, 0, 0}), mono({0, 0, 1, 0, 0, 0}),
                            mono({0, 0, 0, 1, 0, 0})});
    auto primes = minimal_primes(ideal);
    ASSERT_EQ(primes.size(), 1u);
    EXPECT_EQ(primes[0].vars(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(primes[0].dimension(), 2);
}

TEST(MinimalPrimes, UnitAndZeroIdeals) {
    EXPECT_THROW(minimal_primes(MonomialIdeal(2, {mono({0, 0}), mono({1, 0})})), UnitIdealError);
    EXPECT_THROW(minimal_primes(MonomialIdeal(2, {})), InputError);
}

TEST(MinimalPrimes, MatchesBruteForce) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const int gens = std::uniform_int_distribution<int>(1, 8)(rng);
        std::vector<Monomial> g;
        for (int i = 0; i < gens; ++i) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            // sparse supports keep the transversal lattice interesting
            const int support = std::uniform_int_distribution<int>(1, std::min(n, 3))(rng);
            for (int s = 0; s < support; ++s)
                e[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng))] =
                    std::uniform_int_distribution<int>(1, 3)(rng);
            g.emplace_back(std::move(e));
        }
        MonomialIdeal ideal(n, std::move(g));
        EXPECT_EQ(as_sets(minimal_primes(ideal)), oracle::minimal_primes_brute_force(ideal))
            << "trial " << trial;
    }
}

TEST(StanleyReisnerComponents, SimplexIsZeroPrime) {
    auto comps = stanley_reisner_components(from_facets(3, {{0, 1, 2}}));
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].first.height(), 0);
    EXPECT_EQ(comps[0].first.dimension(), 3);
}

TEST(StanleyReisnerComponents, Bowtie) {
    auto comps = stanley_reisner_components(from_facets(5, {{0, 1, 2}, {0, 3, 4}}));
    ASSERT_EQ(comps.size(), 2u);
    for (const auto& [p, f] : comps) EXPECT_EQ(p.height(), 2);
}

TEST(StanleyReisnerComponents, TorusPrimesAndComplementarity) {
    auto comps = stanley_reisner_components(torus_7());
    ASSERT_EQ(comps.size(), 14u);
    for (const auto& [p, f] : comps) {
        EXPECT_EQ(p.height(), 4);
        for (int v = 0; v < 7; ++v) EXPECT_NE(p.contains_var(v), f.contains(v));
    }
}

TEST(StanleyReisnerComponents, RejectsVoid) {
    EXPECT_THROW(stanley_reisner_components(void_complex(3)), InputError);
}
