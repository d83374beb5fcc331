#include "contactlie/contact.hpp"
#include "contactlie/exterior.hpp"
#include "contactlie/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace contactlie;

namespace {

LaurentPoly lp(const Chart& c, const MultiPoly& p) { return LaurentPoly(p, c->fiber_var()); }

LForm dx(const Chart& c, const std::string& v) { return LForm::differential(c, v); }

LForm random_form(const Chart& c, Rng& rng, int degree, int max_poly_degree = 4)
{
    LForm out(c, degree);
    const int n = static_cast<int>(c->dim());
    for (int t = 0; t < 3; ++t) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k;
        IndexTuple idx;
        while (static_cast<int>(idx.size()) < degree) {
            const int k = static_cast<int>(rng.uniform(0, n - 1));
            if (std::find(idx.begin(), idx.end(), k) == idx.end()) idx.push_back(k);
        }
        std::sort(idx.begin(), idx.end());
        out.add_term(idx, lp(c, rng.polynomial(c->coords(), max_poly_degree, 2)));
    }
    return out;
}

LField random_field(const Chart& c, Rng& rng)
{
    LField x(c);
    for (const auto& v : c->coords()) x.set_component(v, lp(c, rng.polynomial(c->coords(), 2, 2)));
    return x;
}

int permutation_sign(std::vector<int> v)
{
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    return sign;
}

// Coefficient of a ^ b at the sorted tuple I: sum over splits I = J u K of
// sign(J, K) a_J b_K.
LaurentPoly naive_wedge_coefficient(const LForm& a, const LForm& b, const IndexTuple& I)
{
    LaurentPoly sum;
    const std::size_t p = static_cast<std::size_t>(a.degree());
    std::vector<bool> pick(I.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(p), true);
    do {
        IndexTuple J, K;
        for (std::size_t k = 0; k < I.size(); ++k) (pick[k] ? J : K).push_back(I[k]);
        std::vector<int> order(J.begin(), J.end());
        order.insert(order.end(), K.begin(), K.end());
        const LaurentPoly c = a.coefficient(J) * b.coefficient(K);
        sum += permutation_sign(order) == 1 ? c : -c;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return sum;
}

void expect_wedge_matches_oracle(const LForm& a, const LForm& b)
{
    const LForm w = wedge(a, b);
    const int n = static_cast<int>(a.chart()->dim());
    const int deg = a.degree() + b.degree();
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    if (deg > n) {
        EXPECT_TRUE(w.is_zero());
        return;
    }
    std::fill(pick.begin(), pick.begin() + deg, true);
    do {
        IndexTuple I;
        for (int k = 0; k < n; ++k)
            if (pick[static_cast<std::size_t>(k)]) I.push_back(k);
        EXPECT_EQ(w.coefficient(I), naive_wedge_coefficient(a, b, I));
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

TEST(Wedge, Antisymmetry)
{
    const Chart c = make_chart({"z"});
    EXPECT_TRUE(wedge(dx(c, "z"), dx(c, "z")).is_zero());
}

TEST(Wedge, TranspositionSign)
{
    const Chart c = make_chart({"z0", "z1"});
    const LaurentPoly z0 = coordinate<LaurentPoly>(*c, "z0");
    const LForm lhs = wedge(z0 * dx(c, "z1"), dx(c, "z0"));
    EXPECT_EQ(lhs, (-z0) * wedge(dx(c, "z0"), dx(c, "z1")));
}

TEST(Wedge, HopfThetaWedgeDthetaAgainstNaiveSum)
{
    const ContactChart cc = ContactChart::hopf(1);
    const LForm top = wedge(cc.theta(), cc.dtheta());
    EXPECT_FALSE(top.is_zero());
    expect_wedge_matches_oracle(cc.theta(), cc.dtheta());
}

TEST(Wedge, DegreeOverflowIsZero)
{
    const Chart c = make_chart({"a", "b"});
    EXPECT_TRUE(wedge(wedge(dx(c, "a"), dx(c, "b")), dx(c, "a")).is_zero());
}

TEST(ExteriorDerivative, FiberPower)
{
    const Chart c = make_chart({"z"}, "lam");
    for (int delta : {-2, 1, 3}) {
        const LForm a = LaurentPoly::fiber_power("lam", delta) * dx(c, "z");
        const LForm expected = LaurentPoly::fiber_power("lam", delta - 1, Scalar(delta)) * wedge(dx(c, "lam"), dx(c, "z"));
        EXPECT_EQ(a.d(), expected);
    }
}

TEST(ExteriorDerivative, HopfTheta)
{
    for (int n = 0; n <= 2; ++n) {
        const ContactChart cc = ContactChart::hopf(n);
        LForm expected(cc.chart(), 2);
        for (int k = 0; k <= n; ++k)
            expected += LaurentPoly(2) * wedge(dx(cc.chart(), "z" + std::to_string(k)), dx(cc.chart(), "z" + std::to_string(k + n + 1)));
        EXPECT_EQ(cc.dtheta(), expected);
    }
}

TEST(ExteriorDerivative, Constant)
{
    const Chart c = make_chart({"x", "y"});
    EXPECT_TRUE(LForm::function(c, LaurentPoly(5)).d().is_zero());
    EXPECT_TRUE((LaurentPoly(3) * dx(c, "x")).d().is_zero());
}

TEST(Interior, DualPairing)
{
    const Chart c = make_chart({"z"}, "lam");
    const LField dl = LField::partial(c, "lam");
    EXPECT_EQ(interior(dl, wedge(dx(c, "lam"), dx(c, "z"))), dx(c, "z"));
    EXPECT_TRUE(interior(dl, LForm::function(c, LaurentPoly(4))).is_zero());
}

TEST(Interior, EulerOnHopfPlane)
{
    const ContactChart cc = ContactChart::hopf(0);
    LField e(cc.chart());
    for (const auto& v : cc.chart()->coords()) e.set_component(v, cc.coord(v));
    EXPECT_EQ(interior(e, cc.dtheta()), LaurentPoly(2) * cc.theta());
}

TEST(LieDerivative, Translation)
{
    const Chart c = make_chart({"z"});
    const LForm a = coordinate<LaurentPoly>(*c, "z") * dx(c, "z");
    EXPECT_EQ(lie_derivative(LField::partial(c, "z"), a), dx(c, "z"));
}

TEST(LieDerivative, FiberScaling)
{
    for (int delta : {-1, 2, 3}) {
        const ContactChart cc = ContactChart::fibered(0, delta);
        LField b(cc.chart());
        b.set_component("lam", cc.coord("lam"));
        EXPECT_EQ(lie_derivative(b, cc.theta()), LaurentPoly(delta) * cc.theta());
    }
}

TEST(LieDerivative, HamiltonianPreservesDtheta)
{
    Rng rng(5);
    const ContactChart cc = ContactChart::hopf(1);
    for (int k = 0; k < 10; ++k) {
        const LaurentPoly f(rng.polynomial(cc.chart()->coords(), 3));
        EXPECT_TRUE(lie_derivative(hamiltonian_field(cc, f), cc.dtheta()).is_zero());
    }
}

TEST(Pullback, HopfChartZero)
{
    const ContactChart cc = ContactChart::hopf(1);
    const Chart u = make_chart({"u1", "u2", "u3"});
    const std::vector<LaurentPoly> sigma{LaurentPoly(1), coordinate<LaurentPoly>(*u, "u1"), coordinate<LaurentPoly>(*u, "u2"),
                                         coordinate<LaurentPoly>(*u, "u3")};
    const LForm expected = dx(u, "u2") + coordinate<LaurentPoly>(*u, "u1") * dx(u, "u3") - coordinate<LaurentPoly>(*u, "u3") * dx(u, "u1");
    EXPECT_EQ(pullback(u, sigma, cc.theta()), expected);
}

TEST(Pullback, IdentityAndScaling)
{
    const ContactChart cc = ContactChart::hopf(1);
    std::vector<LaurentPoly> id;
    for (const auto& v : cc.chart()->coords()) id.push_back(cc.coord(v));
    EXPECT_EQ(pullback(cc.chart(), id, cc.theta()), cc.theta());
    const Scalar t = Scalar::ratio(-5, 3);
    EXPECT_EQ(pullback(cc.chart(), cc.scaling_images(t), cc.theta()), LaurentPoly(t * t) * cc.theta());
}

TEST(Evaluate, HopfThetaAtPoint)
{
    const ContactChart cc = ContactChart::hopf(0);
    const std::map<std::string, Scalar> pt{{"z0", Scalar(1)}, {"z1", Scalar(0)}};
    EXPECT_EQ(cc.theta().coefficient({1}).evaluate(pt), Scalar(1));
    EXPECT_EQ(cc.theta().coefficient({0}).evaluate(pt), Scalar(0));
    const ScalarMatrix m = cc.dtheta().matrix_at(pt);
    EXPECT_EQ(m(0, 1), Scalar(2));
    EXPECT_EQ(m(1, 0), Scalar(-2));
}

TEST(Evaluate, HomogeneousScaling)
{
    Rng rng(11);
    const ContactChart cc = ContactChart::hopf(1);
    const Scalar t(Rational(2), Rational(1));
    for (int k = 0; k < 5; ++k) {
        const auto pt = cc.random_point(rng);
        std::map<std::string, Scalar> scaled;
        for (const auto& [v, x] : pt) scaled[v] = t * x;
        for (const auto& [idx, c] : cc.theta().terms()) EXPECT_EQ(c.evaluate(scaled), t * c.evaluate(pt));
    }
}

TEST(TopPower, HopfDthetaIsScaledVolume)
{
    long fact = 1;
    for (int n = 0; n <= 2; ++n) {
        fact *= (n + 1);
        const ContactChart cc = ContactChart::hopf(n);
        const LForm top = cc.dtheta().power(n + 1);
        ASSERT_EQ(top.terms().size(), 1u);
        const LaurentPoly c = top.terms().begin()->second;
        const long mag = fact * (1L << (n + 1));
        EXPECT_TRUE(c == LaurentPoly(mag) || c == LaurentPoly(-mag)) << c.to_string();
    }
}

class FormProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FormProperties, DSquaredIsZero)
{
    Rng rng(GetParam());
    const Chart c = make_chart({"x", "y", "z"}, "lam");
    for (int deg = 0; deg <= 3; ++deg) EXPECT_TRUE(random_form(c, rng, deg).d().d().is_zero());
}

TEST_P(FormProperties, GradedLeibniz)
{
    Rng rng(GetParam());
    const Chart c = make_chart({"x", "y", "z", "w"});
    for (int p = 0; p <= 2; ++p) {
        const LForm a = random_form(c, rng, p, 3), b = random_form(c, rng, 1, 3);
        const LForm lhs = wedge(a, b).d();
        const LForm rhs = wedge(a.d(), b) + (p % 2 ? LaurentPoly(-1) : LaurentPoly(1)) * wedge(a, b.d());
        EXPECT_EQ(lhs, rhs);
    }
}

TEST_P(FormProperties, WedgeGradedCommutativeAssociative)
{
    Rng rng(GetParam());
    const Chart c = make_chart({"x", "y", "z", "w", "v"});
    const LForm a = random_form(c, rng, 1, 2), b = random_form(c, rng, 2, 2), e = random_form(c, rng, 1, 2);
    EXPECT_EQ(wedge(a, b), wedge(b, a));            // (-1)^{1*2}
    EXPECT_EQ(wedge(a, e), LaurentPoly(-1) * wedge(e, a));
    EXPECT_EQ(wedge(wedge(a, b), e), wedge(a, wedge(b, e)));
    expect_wedge_matches_oracle(a, b);
    expect_wedge_matches_oracle(b, e);
}

TEST_P(FormProperties, InteriorTwiceIsZeroAndIsADerivation)
{
    Rng rng(GetParam());
    const Chart c = make_chart({"x", "y", "z"}, "lam");
    const LField x = random_field(c, rng);
    const LForm a = random_form(c, rng, 2, 2), b = random_form(c, rng, 1, 2);
    EXPECT_TRUE(interior(x, interior(x, a)).is_zero());
    EXPECT_EQ(interior(x, wedge(a, b)), wedge(interior(x, a), b) + wedge(a, interior(x, b)));
}

TEST_P(FormProperties, LieDerivativeRules)
{
    Rng rng(GetParam());
    const Chart c = make_chart({"x", "y", "z"}, "lam");
    const LField x = random_field(c, rng);
    const LForm a = random_form(c, rng, 1, 2);
    const LaurentPoly f = lp(c, rng.polynomial(c->coords(), 2));
    EXPECT_EQ(lie_derivative(x, f * a), x.apply(f) * a + f * lie_derivative(x, a));
    EXPECT_EQ(lie_derivative(x, a.d()), lie_derivative(x, a).d());
    // L_X L_Y - L_Y L_X = L_[X,Y]
    const LField y = random_field(c, rng);
    EXPECT_EQ(lie_derivative(x, lie_derivative(y, a)) - lie_derivative(y, lie_derivative(x, a)), lie_derivative(lie_bracket(x, y), a));
}

TEST_P(FormProperties, PullbackCommutesWithD)
{
    Rng rng(GetParam());
    const Chart target = make_chart({"x", "y", "z"});
    const Chart source = make_chart({"s", "t"});
    std::vector<LaurentPoly> images;
    for (int k = 0; k < 3; ++k) images.push_back(LaurentPoly(rng.polynomial(source->coords(), 2, 2)));
    for (int deg = 0; deg <= 2; ++deg) {
        const LForm a = random_form(target, rng, deg, 2);
        EXPECT_EQ(pullback(source, images, a.d()), pullback(source, images, a).d());
    }
    // functoriality through a third chart
    const Chart third = make_chart({"r"});
    const std::vector<LaurentPoly> inner{LaurentPoly(rng.polynomial({"r"}, 2, 2)), LaurentPoly(rng.polynomial({"r"}, 2, 2))};
    std::vector<LaurentPoly> composed;
    for (const auto& im : images) composed.push_back(pullback_function(source, inner, im));
    const LForm a = random_form(target, rng, 1, 2);
    EXPECT_EQ(pullback(third, inner, pullback(source, images, a)), pullback(third, composed, a));
}

INSTANTIATE_TEST_SUITE_P(Seeds, FormProperties, ::testing::Values(1u, 7u, 42u, 1234u));
