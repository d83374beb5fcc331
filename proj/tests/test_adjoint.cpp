#include "contactlie/suites.hpp"

#include <gtest/gtest.h>

using namespace contactlie;

namespace {

const AlgebraData& algebra(const std::string& t)
{
    static std::map<std::string, AlgebraData> cache;
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, algebra_of_type(t)).first;
    return it->second;
}

// I + tA + t^2 A^2 / 2 + ... summed until A^k = 0, using only matrix products.
ScalarMatrix series_oracle(const ScalarMatrix& a, const Scalar& t)
{
    const std::size_t n = a.rows();
    ScalarMatrix out = ScalarMatrix::identity(n);
    ScalarMatrix power = ScalarMatrix::identity(n);
    Scalar coef(1);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * a;
        coef = coef * t / Scalar(static_cast<long>(k));
        out = out + coef * power;
    }
    return out;
}

}  // namespace

TEST(ExpAd, ZeroAndInverse)
{
    const LieAlgebra& g = algebra("B2").g;
    const auto id = ScalarMatrix::identity(g.dim());
    for (const auto& a : g.roots().roots()) {
        EXPECT_EQ(exp_ad(g, a, Scalar(0)), id);
        const Scalar t = Scalar::ratio(3, 7);
        EXPECT_EQ(exp_ad(g, a, t) * exp_ad(g, a, -t), id);
    }
}

TEST(ExpAd, MatchesSeries)
{
    const LieAlgebra& g = algebra("A2").g;
    for (const auto& a : g.roots().roots()) {
        ScalarVector x(g.dim(), Scalar(0));
        x[g.root_index(a)] = Scalar(1);
        const Scalar t(Rational(2, 3), Rational(-1));
        EXPECT_EQ(exp_ad(g, a, t), series_oracle(g.ad(x), t));
    }
}

TEST(ExpAd, A1CurveIsQuadratic)
{
    const LieAlgebra& g = algebra("A1").g;
    const Root minus{-1};
    const std::size_t fm = g.root_index(minus);
    const ScalarVector p1 = orbit_sample(g, {{minus, Scalar(1)}}).vector;
    const ScalarVector p2 = orbit_sample(g, {{minus, Scalar(2)}}).vector;
    const ScalarVector p3 = orbit_sample(g, {{minus, Scalar(3)}}).vector;
    ASSERT_FALSE(p1[fm].is_zero());
    EXPECT_EQ(p2[fm], Scalar(4) * p1[fm]);
    EXPECT_EQ(p3[fm], Scalar(9) * p1[fm]);
    EXPECT_EQ(p1[g.e_rho()], Scalar(1));
    EXPECT_EQ(p3[0], Scalar(3) * p1[0]);
}

TEST(Orbit, EmptyWordIsERho)
{
    for (const char* t : {"A1", "G2"}) {
        const LieAlgebra& g = algebra(t).g;
        EXPECT_EQ(orbit_sample(g, {}).vector, g.basis_vector(g.e_rho()));
    }
}

TEST(Orbit, A2SingleReflection)
{
    const LieAlgebra& g = algebra("A2").g;
    const ScalarVector v = orbit_sample(g, {{Root{-1, 0}, Scalar(1)}}).vector;
    ScalarVector x(g.dim(), Scalar(0));
    x[g.root_index(Root{-1, 0})] = Scalar(1);
    const ScalarVector expected = series_oracle(g.ad(x), Scalar(1)) * g.basis_vector(g.e_rho());
    EXPECT_EQ(v, expected);
    EXPECT_FALSE(v[g.e_rho()].is_zero());
    EXPECT_FALSE(v[g.root_index(Root{0, 1})].is_zero());
    std::size_t nonzero = 0;
    for (const auto& c : v) nonzero += !c.is_zero();
    EXPECT_EQ(nonzero, 2u);
}

TEST(ThetaG, KernelDimensions)
{
    const std::map<std::string, std::size_t> expected{{"A1", 1}, {"A2", 4}, {"G2", 8}};
    for (const auto& [t, d] : expected) {
        const AlgebraData& a = algebra(t);
        EXPECT_EQ(a.gd.L0.dim(), d) << t;
        const Report r = theta_G_checks(a.g, a.kd, a.gd);
        for (const auto& c : r.results()) EXPECT_EQ(c.status, Status::pass) << t << " " << c.check_id << ": " << c.witness;
    }
}

TEST(Moment, ERhoPairsWithEMinusRho)
{
    for (const char* t : {"A1", "A3", "C3"}) {
        const AlgebraData& a = algebra(t);
        const ScalarVector mu = moment_map(a.kd, orbit_sample(a.g, {}));
        for (std::size_t k = 0; k < mu.size(); ++k)
            EXPECT_EQ(mu[k], k == a.g.e_minus_rho() ? Scalar(-1) : Scalar(0)) << t << " slot " << k;
        EXPECT_EQ(kappa(a.kd, mu), a.g.basis_vector(a.g.e_rho()));
    }
}

TEST(Embedding, Ranks)
{
    for (const auto& [t, expected] : std::vector<std::pair<std::string, std::size_t>>{{"A1", 2}, {"A2", 4}}) {
        const AlgebraData& a = algebra(t);
        Rng rng(31);
        std::vector<Word> words;
        for (int k = 0; k < 10; ++k) words.push_back(random_word(a.g, rng));
        const EmbeddingReport rep = embedding_check(a.g, a.gd, words);
        EXPECT_EQ(rep.expected_rank, expected);
        EXPECT_TRUE(rep.ranks_ok()) << t;
        EXPECT_TRUE(rep.proportional.empty()) << t;
    }
}

TEST(Embedding, DuplicateWordFlagged)
{
    const AlgebraData& a = algebra("A2");
    const Word w{{Root{-1, 0}, Scalar(2)}, {Root{0, -1}, Scalar::ratio(1, 3)}};
    const EmbeddingReport rep = embedding_check(a.g, a.gd, {w, w});
    ASSERT_EQ(rep.coincident.size(), 1u);
    EXPECT_TRUE(rep.proportional.empty());
    EXPECT_TRUE(rep.ranks_ok());
}

TEST(Embedding, StabilizerWordCoincidesWithERho)
{
    // exp(ad e_rho) fixes e_rho
    const AlgebraData& a = algebra("A1");
    const EmbeddingReport rep = embedding_check(a.g, a.gd, {{}, {{Root{1}, Scalar(1)}}});
    EXPECT_EQ(rep.coincident.size(), 1u);
    EXPECT_TRUE(rep.proportional.empty());
}

TEST(Embedding, SingleWordRejected)
{
    const AlgebraData& a = algebra("A1");
    EXPECT_THROW(embedding_check(a.g, a.gd, {{}}), std::invalid_argument);
}

class AdjointTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(AdjointTypes, FullSuite)
{
    Rng rng(77);
    const Report r = adjoint_full_suite(algebra(GetParam()), rng, 6);
    EXPECT_GT(r.results().size(), 10u);
    for (const auto& c : r.results()) EXPECT_NE(c.status, Status::fail) << c.check_id << ": " << c.witness;
}

TEST_P(AdjointTypes, RandomWordsAreAutomorphisms)
{
    const AlgebraData& a = algebra(GetParam());
    Rng rng(5);
    for (int k = 0; k < 3; ++k) {
        const ScalarMatrix m = word_matrix(a.g, random_word(a.g, rng, 3));
        EXPECT_TRUE(preserves_bracket(a.g, m));
        EXPECT_TRUE(preserves_killing(a.kd, m));
    }
}

INSTANTIATE_TEST_SUITE_P(All, AdjointTypes, ::testing::Values("A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"));
