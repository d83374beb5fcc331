#include "contactlie/laurent.hpp"
#include "contactlie/linalg.hpp"
#include "contactlie/poly.hpp"
#include "contactlie/random.hpp"
#include "contactlie/ratfunc.hpp"
#include "contactlie/scalar.hpp"

#include <gtest/gtest.h>

using namespace contactlie;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

const VarList xyz{"x", "y", "z"};

}  // namespace

TEST(Scalar, CanonicalRationals)
{
    EXPECT_EQ(Scalar::ratio(2, -4), Scalar::ratio(-1, 2));
    EXPECT_EQ(Scalar::ratio(2, -4).to_string(), "-1/2");
    EXPECT_THROW(Scalar::ratio(1, 0), std::domain_error);
}

TEST(Scalar, GaussianField)
{
    const Scalar i = Scalar::i();
    EXPECT_EQ(i * i, Scalar(-1));
    const Scalar a(Rational(3, 5), Rational(-2));
    EXPECT_EQ(a * a.inverse(), Scalar(1));
    EXPECT_EQ(a.conj() * a, Scalar(Rational(9, 25) + 4));
    EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).to_string(), "1/2-3i");
    EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(Scalar, IntegerPowers)
{
    EXPECT_EQ(Scalar(2).pow(-3), Scalar::ratio(1, 8));
    EXPECT_EQ(Scalar::i().pow(4), Scalar(1));
    EXPECT_EQ(Scalar(5).pow(0), Scalar(1));
}

TEST(MultiPoly, DifferenceOfSquares)
{
    const MultiPoly x = var("x"), y = var("y");
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    EXPECT_EQ(((x + y) * (x - y)).to_string(), "x^2 - y^2");
}

TEST(MultiPoly, AbsorbingAndInverse)
{
    const MultiPoly x = var("x");
    EXPECT_TRUE(((x + 1) * MultiPoly(0)).is_zero());
    EXPECT_TRUE(((x + 1) + (MultiPoly(0) - x - 1)).is_zero());
}

TEST(MultiPoly, SerializationIsIndependentOfVariableTables)
{
    const MultiPoly a = var("z1") * var("z0") * Scalar(2);
    const MultiPoly b = var("z0") * var("z1") * Scalar(2);
    EXPECT_EQ(a.to_string(), b.to_string());
    EXPECT_EQ(a.to_string(), "2*z0*z1");
    EXPECT_EQ((var("z10") + var("z2")).to_string(), "z2 + z10");
    EXPECT_EQ((Scalar(Rational(1, 2), Rational(-3)) * var("x") * var("y") + Scalar::i()).to_string(), "(1/2-3i)*x*y + i");
}

TEST(MultiPoly, Derivatives)
{
    const MultiPoly x = var("x"), y = var("y");
    EXPECT_EQ((x * x * y).derivative("x"), x * y * Scalar(2));
    EXPECT_TRUE(MultiPoly(7).derivative_or_zero("x").is_zero());
    EXPECT_EQ((x * x * x + x * y * y).derivative("y"), x * y * Scalar(2));
    EXPECT_THROW((x * x).derivative("w"), std::invalid_argument);
}

TEST(MultiPoly, Substitution)
{
    const MultiPoly x = var("x"), y = var("y"), t = var("t");
    EXPECT_EQ((x * x).substitute({{"x", t * x}}), t * t * x * x);
    EXPECT_EQ((x + y).substitute({{"x", y}, {"y", x}}), x + y);
}

TEST(Laurent, FiberInverse)
{
    // x*y with x -> 1/lam
    const LaurentPoly xy = LaurentPoly::variable("x", "lam") * LaurentPoly::variable("y", "lam");
    const LaurentPoly out = xy.substitute({{"x", LaurentPoly::fiber_power("lam", -1)}});
    EXPECT_EQ(out, LaurentPoly::fiber_power("lam", -1) * LaurentPoly::variable("y", "lam"));
    EXPECT_TRUE(out.has_negative_powers());
}

TEST(Laurent, DerivativeOfFiberPower)
{
    const LaurentPoly l3 = LaurentPoly::fiber_power("lam", -3);
    EXPECT_EQ(l3.derivative("lam"), LaurentPoly::fiber_power("lam", -4, Scalar(-3)));
    EXPECT_EQ(l3 * LaurentPoly::fiber_power("lam", 3), LaurentPoly(1));
}

TEST(RationalFunction, ReducedAndMonic)
{
    const MultiPoly x = var("x"), y = var("y");
    const RationalFunction r(x * x * Scalar(3), (x * y + x) * Scalar(6));
    EXPECT_EQ(r, RationalFunction(x, y * Scalar(2) + 2));
    EXPECT_EQ(RationalFunction(x * x, x * y + x).to_string(), "(x)/(y + 1)");
    EXPECT_THROW(RationalFunction(x, MultiPoly(0)), std::domain_error);
}

TEST(RationalFunction, FieldOperations)
{
    const RationalFunction x = RationalFunction::variable("x"), y = RationalFunction::variable("y");
    const RationalFunction a = x / (x + y);
    EXPECT_EQ(a + y / (x + y), RationalFunction(1));
    EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_EQ(x.inverse().derivative("x"), RationalFunction(-1) / (x * x));
}

TEST(Linalg, DeterminantAdjugateInverse)
{
    const ScalarMatrix m = ScalarMatrix::from_rows({{Scalar(2), Scalar(1), Scalar(0)},
                                                    {Scalar(1), Scalar(3), Scalar::i()},
                                                    {Scalar(0), Scalar(-1), Scalar(4)}});
    const Scalar det = determinant(m);
    EXPECT_EQ(m * adjugate(m), det * ScalarMatrix::identity(3));
    EXPECT_EQ(m * inverse(m), ScalarMatrix::identity(3));
}

TEST(Linalg, KernelAndSubspaces)
{
    const ScalarMatrix m = ScalarMatrix::from_rows({{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}});
    EXPECT_EQ(rank(m), 1u);
    const auto ker = kernel(m);
    ASSERT_EQ(ker.size(), 2u);
    for (const auto& v : ker) EXPECT_EQ(m * v, ScalarVector(2, Scalar(0)));
    const Subspace a = Subspace::span(ker, 3);
    const Subspace b = Subspace::span({{Scalar(1), Scalar(0), Scalar(0)}}, 3);
    EXPECT_EQ(a.sum(b).dim(), 3u);
    EXPECT_EQ(a.intersect(b).dim(), 0u);
    EXPECT_THROW(inverse(m.transpose() * m), std::domain_error);
}

// Property tests on seeded random polynomials.

class RingAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RingAxioms, AssociativeCommutativeDistributive)
{
    Rng rng(GetParam());
    for (int k = 0; k < 20; ++k) {
        const MultiPoly a = rng.polynomial(xyz, 3), b = rng.polynomial(xyz, 3), c = rng.polynomial(xyz, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST_P(RingAxioms, LeibnizRule)
{
    Rng rng(GetParam());
    for (int k = 0; k < 20; ++k) {
        const MultiPoly a = rng.polynomial(xyz, 3), b = rng.polynomial(xyz, 3);
        for (const auto& v : xyz)
            EXPECT_EQ((a * b).derivative_or_zero(v), a.derivative_or_zero(v) * b + a * b.derivative_or_zero(v));
    }
}

TEST_P(RingAxioms, SubstitutionComposes)
{
    Rng rng(GetParam());
    for (int k = 0; k < 10; ++k) {
        const MultiPoly p = rng.polynomial(xyz, 3);
        std::map<std::string, MultiPoly> s1, s2;
        for (const auto& v : xyz) {
            s1[v] = rng.polynomial(xyz, 2, 2);
            s2[v] = rng.polynomial(xyz, 2, 2);
        }
        std::map<std::string, MultiPoly> composed;
        for (const auto& [v, img] : s1) composed[v] = img.substitute(s2);
        EXPECT_EQ(p.substitute(s1).substitute(s2), p.substitute(composed));
    }
}

TEST_P(RingAxioms, SubstitutionIsAHomomorphism)
{
    Rng rng(GetParam());
    const MultiPoly a = rng.polynomial(xyz, 3), b = rng.polynomial(xyz, 3);
    std::map<std::string, MultiPoly> s;
    for (const auto& v : xyz) s[v] = rng.polynomial(xyz, 2, 2);
    EXPECT_EQ((a * b).substitute(s), a.substitute(s) * b.substitute(s));
}

TEST_P(RingAxioms, EvaluationMatchesSubstitution)
{
    Rng rng(GetParam());
    const MultiPoly a = rng.polynomial(xyz, 4);
    std::map<std::string, Scalar> pt;
    std::map<std::string, MultiPoly> s;
    for (const auto& v : xyz) {
        pt[v] = rng.gaussian();
        s[v] = MultiPoly(pt[v]);
    }
    EXPECT_EQ(a.evaluate(pt), a.substitute(s).constant_term());
}

TEST_P(RingAxioms, RationalFunctionCancellation)
{
    Rng rng(GetParam());
    const MultiPoly a = rng.polynomial(xyz, 2, 2), b = rng.polynomial(xyz, 2, 2), c = rng.polynomial(xyz, 2, 2);
    if (b.is_zero() || c.is_zero()) GTEST_SKIP();
    EXPECT_EQ(RationalFunction(a * c, b * c), RationalFunction(a, b));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingAxioms, ::testing::Values(1u, 2u, 3u, 17u, 2024u));
