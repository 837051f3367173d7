#include <gtest/gtest.h>

#include <random>

#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/io.hpp"
#include "support/oracles.hpp"

using namespace srkit;

TEST(ComplexText, ParsesWithComments) {
    auto c = io::parse_complex_text("# a bowtie\nn 5\n\n0 1 2\n  0 3 4  # second\n");
    EXPECT_EQ(c, from_facets(5, {{0, 1, 2}, {0, 3, 4}}));
}

TEST(ComplexText, EmptyFacetAndVoid) {
    EXPECT_TRUE(io::parse_complex_text("n 0\n{}\n").is_irrelevant());
    EXPECT_TRUE(io::parse_complex_text("n 3\n").is_void());
}

TEST(ComplexText, Errors) {
    EXPECT_THROW(io::parse_complex_text("0 1 2\n"), InputError);
    EXPECT_THROW(io::parse_complex_text(""), InputError);
    EXPECT_THROW(io::parse_complex_text("n 3\n0 x\n"), InputError);
    EXPECT_THROW(io::parse_complex_text("n 3\n0 5\n"), InputError);
    EXPECT_THROW(io::parse_complex_text("n -1\n"), InputError);
}

TEST(ComplexJson, ParsesAndRejects) {
    auto c = io::parse_complex(R"({"n_vertices": 4, "facets": [[0,1],[1,2],[2,3],[3,0]]})");
    EXPECT_EQ(c, cycle(4));
    EXPECT_THROW(io::parse_complex_json(R"({"facets": []})"), InputError);
    EXPECT_THROW(io::parse_complex_json(R"({"n_vertices": 2, "facets": [[0, 9]]})"), InputError);
    EXPECT_THROW(io::parse_complex_json("{not json"), InputError);
    EXPECT_THROW(io::parse_complex_json(R"({"n_vertices": "x", "facets": []})"), InputError);
}

TEST(ComplexFormats, RoundTrip) {
    std::vector<SimplicialComplex> cs = {void_complex(3), irrelevant_complex(2), torus_7(), rp2_6()};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) cs.push_back(oracle::random_complex(rng));
    for (const auto& c : cs) {
        EXPECT_EQ(io::parse_complex(io::to_text(c)), c);
        EXPECT_EQ(io::parse_complex(io::to_json(c)), c);
        EXPECT_EQ(io::to_text(io::parse_complex(io::to_text(c))), io::to_text(c));
    }
}

TEST(LatticeFormats, Quadrangle) {
    auto q = io::parse_quadrangle(R"({"n_vars": 4, "monomials": [[1,0,0,0],[0,2,0,0],[0,0,1,0],[0,0,0,1]]})");
    EXPECT_EQ(q.n_vars, 4);
    EXPECT_EQ(q.monomials[1].exponents(), (std::vector<int>{0, 2, 0, 0}));
    EXPECT_THROW(io::parse_quadrangle(R"({"n_vars": 4, "monomials": [[1,0,0,0]]})"), InputError);
}

TEST(LatticeFormats, Incidence) {
    auto inc = io::parse_incidence(R"({"quadrangles": [["a","b","c","d"],["c","d","e","f"]]})");
    ASSERT_EQ(inc.quadrangles.size(), 2u);
    EXPECT_EQ(inc.quadrangles[1][2], "e");
    EXPECT_THROW(io::parse_incidence(R"({"quadrangles": [["a","b","c"]]})"), InputError);
}

TEST(IdealFormat, Parses) {
    auto ideal = io::parse_monomial_ideal(R"({"n_vars": 3, "generators": [[1,1,0],[0,1,1]]})");
    EXPECT_EQ(ideal.n_vars(), 3);
    EXPECT_EQ(minimal_primes(ideal).size(), 2u);
}

TEST(ReadFile, MissingFileThrows) {
    EXPECT_THROW(io::read_file("/nonexistent/srkit/input.txt"), InputError);
}
