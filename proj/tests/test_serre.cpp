#include <gtest/gtest.h>

#include <random>

#include "srkit/codim1.hpp"
#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/serre.hpp"
#include "support/oracles.hpp"

using namespace srkit;

namespace {

SimplicialComplex bowtie() { return from_facets(5, {{0, 1, 2}, {0, 3, 4}}); }

// Serre check straight from the definition, using the oracle link and
// homology; returns the first failing (face, degree) in (|F|, F, i) order.
std::optional<std::pair<oracle::VertexSet, int>> serre_oracle(const SimplicialComplex& c, int r,
                                                              std::uint32_t p) {
    auto faces = oracle::faces_by_subsets(c);
    std::vector<oracle::VertexSet> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& f : ordered) {
        auto lk = oracle::link_by_definition(faces, f);
        int dim_lk = -2;
        for (const auto& g : lk) dim_lk = std::max(dim_lk, static_cast<int>(g.size()) - 1);
        auto b = oracle::betti(lk, p);
        for (int i = -1; i < std::min(r - 1, dim_lk); ++i)
            if (oracle::betti_at(b, i) != 0) return std::pair{f, i};
    }
    return std::nullopt;
}

// Full Hochster table from the definition: (degree, face) -> h.
std::map<std::pair<int, oracle::VertexSet>, std::size_t> hochster_oracle(const SimplicialComplex& c) {
    auto faces = oracle::faces_by_subsets(c);
    std::map<std::pair<int, oracle::VertexSet>, std::size_t> out;
    for (const auto& g : faces) {
        auto b = oracle::betti(oracle::link_by_definition(faces, g), 0);
        for (int i = 0; i <= c.dimension() + 1; ++i)
            if (auto h = oracle::betti_at(b, i - static_cast<int>(g.size()) - 1)) out[{i, g}] = h;
    }
    return out;
}

std::map<std::pair<int, oracle::VertexSet>, std::size_t> flatten(const HochsterTable& t) {
    std::map<std::pair<int, oracle::VertexSet>, std::size_t> out;
    for (int i = 0; i <= t.max_degree(); ++i)
        for (const auto& [f, h] : t.row(i)) out[{i, oracle::VertexSet(f.begin(), f.end())}] = h;
    return out;
}

}  // namespace

TEST(CheckSerre, TorusIsS2NotS3) {
    EXPECT_TRUE(check_serre(torus_7(), 2).holds);
    auto r3 = check_serre(torus_7(), 3);
    ASSERT_FALSE(r3.holds);
    ASSERT_TRUE(r3.witness);
    EXPECT_EQ(r3.witness->face, Face{});
    EXPECT_EQ(r3.witness->degree, 1);
    EXPECT_EQ(r3.witness->betti, 2u);
}

TEST(CheckSerre, S1AlwaysHolds) {
    for (const auto& c : {torus_7(), rp2_6(), bowtie(), from_facets(4, {{0, 1, 2}, {2, 3}})}) {
        EXPECT_TRUE(check_serre(c, 1).holds);
        EXPECT_TRUE(check_serre(c, 1, Field::prime(2)).holds);
    }
}

TEST(CheckSerre, BowtieFailsAtWedgeVertex) {
    auto w = serre_oracle(bowtie(), 2, 0);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->first, (oracle::VertexSet{0}));
    EXPECT_EQ(w->second, 0);

    auto r = check_serre(bowtie(), 2);
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(r.witness->face, Face{0});
    EXPECT_EQ(r.witness->degree, 0);
    EXPECT_EQ(r.witness->link_dimension, 1);
}

TEST(CheckSerre, RejectsBadArguments) {
    EXPECT_THROW(check_serre(torus_7(), 0), InputError);
    EXPECT_THROW(check_serre(void_complex(3), 2), InputError);
}

TEST(CheckSerre, AtlasAndDirectAgree) {
    LinkAtlas atlas(sphere_product(2));
    for (int r = 1; r <= 4; ++r) {
        auto a = check_serre(atlas, r);
        auto b = check_serre(sphere_product(2), r);
        EXPECT_EQ(a.holds, b.holds);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(CheckSerre, MatchesOracleOnRandomComplexes) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = oracle::random_complex(rng, 7, 6);
        for (int r = 1; r <= 4; ++r) {
            for (std::uint32_t p : {0u, 2u}) {
                const Field f = p ? Field::prime(p) : Field::rationals();
                auto expected = serre_oracle(c, r, p);
                auto report = check_serre(c, r, f);
                ASSERT_EQ(report.holds, !expected.has_value()) << c << " r=" << r;
                if (expected) {
                    EXPECT_EQ(report.witness->face, Face(expected->first));
                    EXPECT_EQ(report.witness->degree, expected->second);
                }
            }
        }
    }
}

TEST(MaxSerre, Examples) {
    EXPECT_TRUE(max_serre(boundary_simplex(3)).cohen_macaulay());
    EXPECT_EQ(max_serre(rp2_6(), Field::prime(2)).max_r, 2);
    EXPECT_TRUE(max_serre(rp2_6()).cohen_macaulay());
    EXPECT_EQ(max_serre(torus_7()).max_r, 2);
    EXPECT_EQ(max_serre(sphere_product(3)).max_r, 3);
    EXPECT_EQ(max_serre(bowtie()).max_r, 1);
}

TEST(MaxSerre, ConsistentWithCheck) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = oracle::random_complex(rng);
        auto level = max_serre(c);
        const int limit = c.dimension() + 3;
        for (int r = 1; r <= limit; ++r) {
            const bool expected = level.cohen_macaulay() || r <= *level.max_r;
            EXPECT_EQ(check_serre(c, r).holds, expected) << c << " r=" << r;
        }
    }
}

TEST(CohenMacaulay, Examples) {
    EXPECT_FALSE(is_cohen_macaulay(torus_7()));
    EXPECT_TRUE(is_cohen_macaulay(boundary_simplex(4)));
    EXPECT_TRUE(is_cohen_macaulay(from_facets(3, {{0}, {1}, {2}})));  // points are CM
    EXPECT_TRUE(is_cohen_macaulay(irrelevant_complex()));
}

TEST(CohenMacaulay, ConeIffBase) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto base = oracle::random_complex(rng, 6, 5);
        const bool direct = !serre_oracle(base, base.dimension() + 3, 0).has_value();
        EXPECT_EQ(is_cohen_macaulay(base), direct);
        EXPECT_EQ(is_cohen_macaulay(cone(base)), direct) << base;
    }
}

TEST(HochsterTable, TorusRows) {
    auto t = hochster_table(torus_7());
    EXPECT_TRUE(t.row_vanishes(0));
    EXPECT_TRUE(t.row_vanishes(1));
    auto row2 = t.row(2);
    ASSERT_EQ(row2.size(), 1u);
    EXPECT_EQ(row2[0].first, Face{});
    EXPECT_EQ(row2[0].second, 2u);
    EXPECT_EQ(t.degree_zero(3), 1u);
}

TEST(HochsterTable, SphereRowsBelowTopVanish) {
    auto t = hochster_table(boundary_simplex(3));
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(t.row_vanishes(i));
    EXPECT_FALSE(t.row_vanishes(3));
}

TEST(HochsterTable, WedgeOfToriTopDegreeZero) {
    auto w = wedge(torus_7(), torus_7(), 0, 0);
    auto b = oracle::betti(oracle::faces_by_subsets(w), 0);
    EXPECT_EQ(oracle::betti_at(b, 2), 2u);
    EXPECT_EQ(hochster_table(w).degree_zero(3), 2u);
}

TEST(HochsterTable, MatchesOracle) {
    std::vector<SimplicialComplex> cs{bowtie(), torus_7(), rp2_6()};
    std::mt19937_64 rng(4);
    for (int i = 0; i < 25; ++i) cs.push_back(oracle::random_complex(rng, 7, 5));
    for (const auto& c : cs) EXPECT_EQ(flatten(hochster_table(c)), hochster_oracle(c)) << c;
}

TEST(Depth, Examples) {
    EXPECT_EQ(depth(torus_7()), 2);
    EXPECT_EQ(depth(boundary_simplex(3)), 3);

    // bowtie: the only nonzero rows come from G = {0} (row 2) and facets (row 3)
    auto expected = hochster_oracle(bowtie());
    int least = 99;
    for (const auto& [key, h] : expected) least = std::min(least, key.first);
    EXPECT_EQ(least, 2);
    EXPECT_EQ(depth(bowtie()), 2);
    auto t = hochster_table(bowtie());
    EXPECT_EQ(t.entry(2, Face{0}), 1u);
    EXPECT_EQ(t.degree_zero(2), 0u);
}

TEST(LcHilbert, TorusDegreeTwo) {
    auto h = lc_hilbert(torus_7(), 2);
    ASSERT_EQ(h.contributions.size(), 1u);
    EXPECT_EQ(h.contributions[0].first, Face{});
    EXPECT_EQ(h.coefficient(0), 2);
    for (int d : {-3, -1, 1, 4}) EXPECT_EQ(h.coefficient(d), 0);
}

TEST(LcHilbert, CohenMacaulayLowerDegreesVanish) {
    auto s = boundary_simplex(4);
    for (int i = 0; i < s.dimension() + 1; ++i) EXPECT_TRUE(lc_hilbert(s, i).is_zero());
    EXPECT_FALSE(lc_hilbert(s, s.dimension() + 1).is_zero());
}

TEST(LcHilbert, PolynomialRingSeries) {
    // K[x]: H^1 has dimension 1 in every degree <= -1.
    auto line = lc_hilbert(from_facets(1, {{0}}), 1);
    EXPECT_EQ(line.coefficient(0), 0);
    for (int n = 1; n < 6; ++n) EXPECT_EQ(line.coefficient(-n), 1);
    // K[x,y]: H^2 has dimension n - 1 in degree -n.
    auto plane = lc_hilbert(from_facets(2, {{0, 1}}), 2);
    for (int n = 1; n < 8; ++n) EXPECT_EQ(plane.coefficient(-n), n - 1);
    EXPECT_THROW(lc_hilbert(from_facets(2, {{0, 1}}), 3), InputError);
    EXPECT_THROW(lc_hilbert(from_facets(2, {{0, 1}}), -1), InputError);
}

TEST(CanonicalHilbert, TorusDegreeZero) {
    auto w = canonical_hilbert(torus_7());
    EXPECT_TRUE(w.inverted);
    EXPECT_EQ(w.cohomological_degree, 3);
    EXPECT_EQ(w.coefficient(0), 1);
    // ω ≅ K[Δ] for the torus, so its Hilbert function counts face-supported
    // monomials: 7 in degree 1, 7 squares + 21 edge products in degree 2.
    EXPECT_EQ(w.coefficient(1), 7);
    EXPECT_EQ(w.coefficient(2), 28);
    EXPECT_EQ(w.coefficient(-1), 0);
}
