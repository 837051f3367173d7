#include <gtest/gtest.h>

#include <random>

#include "srkit/corpus.hpp"
#include "srkit/error.hpp"
#include "srkit/homology.hpp"
#include "support/oracles.hpp"

using namespace srkit;

namespace {

oracle::DenseInt to_dense(const IntegerMatrix& m) {
    oracle::DenseInt d(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) d[r][c] = v;
    return d;
}

std::vector<mpz_class> divisors(std::initializer_list<long> values) {
    std::vector<mpz_class> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

void expect_chain(const SNFResult& snf) {
    for (const auto& d : snf.elementary_divisors) EXPECT_GT(d, 0);
    for (std::size_t i = 1; i < snf.elementary_divisors.size(); ++i)
        EXPECT_TRUE(mpz_divisible_p(snf.elementary_divisors[i].get_mpz_t(),
                                    snf.elementary_divisors[i - 1].get_mpz_t()));
}

}  // namespace

TEST(Field, Parse) {
    EXPECT_TRUE(Field::parse("q").is_rational());
    EXPECT_EQ(Field::parse("f:2").characteristic(), 2u);
    EXPECT_EQ(Field::parse("f:2147483647").characteristic(), 2147483647u);
    EXPECT_THROW(Field::parse("f:4"), InputError);
    EXPECT_THROW(Field::parse("f:2147483659"), InputError);  // prime but >= 2^31
    EXPECT_THROW(Field::parse("r"), InputError);
    EXPECT_THROW(Field::parse("f:"), InputError);
}

TEST(BoundaryMatrix, Augmentation) {
    auto m = boundary_matrix(from_facets(2, {{0}, {1}}), 0);
    EXPECT_EQ(m, IntegerMatrix::from_rows({{1, 1}}));
}

TEST(BoundaryMatrix, EdgeSigns) {
    auto m = boundary_matrix(from_facets(2, {{0, 1}}), 1);
    EXPECT_EQ(m, IntegerMatrix::from_rows({{-1}, {1}}));
}

TEST(BoundaryMatrix, OutOfRangeShapes) {
    auto s = boundary_simplex(3);
    auto low = boundary_matrix(s, -1);
    EXPECT_EQ(low.rows(), 0u);
    EXPECT_EQ(low.cols(), 1u);
    auto high = boundary_matrix(s, 3);
    EXPECT_EQ(high.rows(), 4u);
    EXPECT_EQ(high.cols(), 0u);
}

TEST(BoundaryMatrix, SquaresToZero) {
    std::vector<SimplicialComplex> cs{boundary_simplex(3), torus_7(), rp2_6(), sphere_product(2)};
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) cs.push_back(oracle::random_complex(rng));
    for (const auto& c : cs)
        for (int d = 0; d <= c.dimension() + 1; ++d)
            EXPECT_TRUE((boundary_matrix(c, d) * boundary_matrix(c, d + 1)).is_zero());
}

TEST(SmithNormalForm, Identity) {
    auto snf = smith_normal_form(IntegerMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(snf.elementary_divisors, divisors({1, 1, 1}));
}

TEST(SmithNormalForm, SingleTwo) {
    auto snf = smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 0}}));
    EXPECT_EQ(snf.elementary_divisors, divisors({2}));
    EXPECT_EQ(snf.rank(), 1u);
}

TEST(SmithNormalForm, NonDiagonalChain) {
    // diag(4, 6) ~ diag(2, 12)
    auto snf = smith_normal_form(IntegerMatrix::from_rows({{4, 0}, {0, 6}}));
    EXPECT_EQ(snf.elementary_divisors, divisors({2, 12}));
    auto snf2 = smith_normal_form(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    EXPECT_EQ(snf2.elementary_divisors, divisors({2, 6, 12}));
}

TEST(SmithNormalForm, RP2TopBoundaryHasOneTwo) {
    auto m = boundary_matrix(rp2_6(), 2);
    auto expected = oracle::smith_invariants(to_dense(m));
    auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.elementary_divisors, expected);
    EXPECT_EQ(snf.torsion(), divisors({2}));
}

TEST(SmithNormalForm, MatchesTextbookOnRandomMatrices) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = std::uniform_int_distribution<int>(0, 7)(rng);
        const int cols = std::uniform_int_distribution<int>(0, 7)(rng);
        const int spread = trial % 3 == 0 ? 1 : 9;
        std::uniform_int_distribution<long> entry(-spread, spread);
        std::bernoulli_distribution keep(0.5);
        std::vector<std::vector<long>> dense(static_cast<std::size_t>(rows),
                                             std::vector<long>(static_cast<std::size_t>(cols)));
        for (auto& r : dense)
            for (auto& v : r) v = keep(rng) ? entry(rng) : 0;
        auto m = IntegerMatrix::from_rows(dense);
        if (rows == 0) m = IntegerMatrix(0, static_cast<std::size_t>(cols));
        auto snf = smith_normal_form(m);
        expect_chain(snf);
        EXPECT_EQ(snf.elementary_divisors, oracle::smith_invariants(to_dense(m))) << "trial " << trial;
        EXPECT_EQ(snf.rank(), smith_normal_form(m.transposed()).rank());
        EXPECT_EQ(snf.rank(), oracle::dense_rank(to_dense(m), 0));
        for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_EQ(snf.rank_mod(p), oracle::dense_rank(to_dense(m), p));
    }
}

TEST(ReducedBetti, TetrahedronBoundary) {
    auto b = reduced_betti(boundary_simplex(3));
    EXPECT_EQ(b.dims(), (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(ReducedBetti, RP2DependsOnField) {
    auto faces = oracle::faces_by_subsets(rp2_6());
    auto f2 = reduced_betti(rp2_6(), Field::prime(2));
    auto q = reduced_betti(rp2_6(), Field::rationals());
    EXPECT_EQ(f2.dims(), oracle::betti(faces, 2));
    EXPECT_EQ(q.dims(), oracle::betti(faces, 0));
    EXPECT_EQ(f2.dims(), (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_TRUE(q.is_zero());
    EXPECT_TRUE(reduced_betti(rp2_6(), Field::prime(3)).is_zero());
}

TEST(ReducedBetti, SphereProductThree) {
    auto b = reduced_betti(sphere_product(3));
    EXPECT_EQ(b.dims(), (std::vector<std::size_t>{0, 0, 0, 2, 0, 1}));
}

TEST(ReducedBetti, Conventions) {
    EXPECT_EQ(reduced_betti(irrelevant_complex()).dims(), (std::vector<std::size_t>{1}));
    EXPECT_TRUE(reduced_betti(void_complex(2)).dims().empty());
    EXPECT_EQ(reduced_betti(from_facets(3, {{0}, {1}, {2}})).at(0), 2u);
}

TEST(HomologyOverZ, Torus) {
    auto h = homology_over_Z(torus_7());
    ASSERT_EQ(h.size(), 4u);
    EXPECT_EQ(h[2].degree, 1);
    EXPECT_EQ(h[2].free_rank, 2u);
    EXPECT_TRUE(h[2].torsion.empty());
    EXPECT_EQ(h[3].free_rank, 1u);
}

TEST(HomologyOverZ, RP2) {
    auto h = homology_over_Z(rp2_6());
    EXPECT_EQ(h[2].free_rank, 0u);
    EXPECT_EQ(h[2].torsion, divisors({2}));
    EXPECT_EQ(h[3].free_rank, 0u);
    EXPECT_TRUE(h[3].torsion.empty());
}

TEST(HomologyOverZ, Irrelevant) {
    auto h = homology_over_Z(irrelevant_complex());
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].degree, -1);
    EXPECT_EQ(h[0].free_rank, 1u);
}

TEST(HomologyOverZ, UniversalCoefficients) {
    std::vector<SimplicialComplex> cs{rp2_6(), torus_7(), sphere_product(2)};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) cs.push_back(oracle::random_complex(rng));
    for (const auto& c : cs) {
        auto h = homology_over_Z(c);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            auto b = reduced_betti(c, Field::prime(p));
            for (std::size_t idx = 0; idx < h.size(); ++idx) {
                auto count_p = [p](const std::vector<mpz_class>& t) {
                    std::size_t n = 0;
                    for (const auto& d : t) n += mpz_divisible_ui_p(d.get_mpz_t(), p) != 0;
                    return n;
                };
                std::size_t expected = h[idx].free_rank + count_p(h[idx].torsion);
                if (idx > 0) expected += count_p(h[idx - 1].torsion);
                EXPECT_EQ(b.at(h[idx].degree), expected);
            }
        }
    }
}

TEST(ReducedBetti, MatchesDenseOracleOnRandomComplexes) {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = oracle::random_complex(rng);
        auto faces = oracle::faces_by_subsets(c);
        for (std::uint32_t p : {0u, 2u, 3u}) {
            const Field f = p == 0 ? Field::rationals() : Field::prime(p);
            EXPECT_EQ(reduced_betti(c, f).dims(), oracle::betti(faces, p)) << c;
        }
    }
}
