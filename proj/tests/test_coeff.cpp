#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pdd/coeff.hpp"

namespace pdd {
namespace {

Scalar S(const std::string& s) { return parse_scalar(s); }

TEST(Normalize, RadicalSquaresToItsDefiningValue) {
  Scalar s2 = Scalar::sqrt(Scalar(2));
  EXPECT_EQ(s2 * s2, Scalar(2));
}

TEST(Normalize, InverseRootTimesParameterIsTheRoot) {
  Scalar lam = Scalar::symbol("lambda");
  Scalar root = Scalar::sqrt(lam);
  EXPECT_EQ(root.inverse() * lam, root);
}

TEST(Normalize, RationalsInLowestTerms) {
  EXPECT_EQ(Scalar::rational(3, 6), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::rational(3, 6).to_rational().get_den(), 2);
}

TEST(Normalize, SquareRootsPullOutSquareFactors) {
  EXPECT_EQ(Scalar::sqrt(Scalar(8)), 2 * Scalar::sqrt(Scalar(2)));
  EXPECT_EQ(Scalar::sqrt(Scalar(9)), Scalar(3));
  EXPECT_EQ(Scalar::sqrt(S("4*lambda^3")), 2 * Scalar::symbol("lambda") * Scalar::sqrt(Scalar::symbol("lambda")));
}

TEST(Normalize, Idempotent) {
  for (const char* text : {"sqrt(2)*sqrt(2) + lambda/lambda", "sqrt(lambda)^3 - 1/sqrt(lambda)", "0", "3/9*x*y"}) {
    Scalar s = S(text);
    EXPECT_EQ(normalize(normalize(s)), normalize(s)) << text;
    EXPECT_EQ(normalize(s), s) << text;
  }
}

TEST(Normalize, ZeroIsEmpty) {
  Scalar z = S("x - x");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
}

TEST(SubstituteNumeric, Examples) {
  EXPECT_DOUBLE_EQ(substitute_numeric(Scalar::sqrt(Scalar::symbol("lambda")), {{"lambda", 4.0}}), 2.0);
  EXPECT_DOUBLE_EQ(substitute_numeric(Scalar::symbol("lambda").inverse(), {{"lambda", 0.5}}), 2.0);
  Scalar eta = Scalar::sqrt(Scalar::symbol("Lambda"));
  EXPECT_NEAR(substitute_numeric(eta.inverse(), {{"Lambda", 9.0}}), 1.0 / 3.0, 1e-15);
}

TEST(SubstituteNumeric, UnboundSymbolThrows) {
  EXPECT_THROW(substitute_numeric(Scalar::symbol("q"), {}), UnboundSymbol);
}

TEST(SubstituteNumeric, NegativeRadicandThrows) {
  EXPECT_THROW(substitute_numeric(Scalar::sqrt(Scalar::symbol("lambda")), {{"lambda", -1.0}}), NegativeRadicand);
}

TEST(LaurentLeading, Examples) {
  Scalar eta = Scalar::sqrt(Scalar::symbol("Lambda"));
  EXPECT_EQ(laurent_leading(eta.inverse(), 1), Scalar(1));
  EXPECT_THROW(laurent_leading(eta.inverse() + 3 * eta, 0), Divergent);
  EXPECT_TRUE(laurent_leading(eta, 0).is_zero());
}

TEST(LaurentLeading, AntiDeSitterScale) {
  ContractionScale cs = ContractionScale::anti_de_sitter();
  Scalar zeta = Scalar::sqrt(-Scalar::symbol("Lambda"));
  EXPECT_EQ(laurent_leading(zeta.inverse() * Scalar(5), 1, cs), Scalar(5));
  EXPECT_THROW(laurent_leading(zeta.inverse(), 0, cs), Divergent);
}

TEST(Parse, Grammar) {
  EXPECT_EQ(S("2^3"), Scalar(8));
  EXPECT_EQ(S("x^-1 * x"), Scalar(1));
  EXPECT_EQ(S("(1 + 1/sqrt(2))*sqrt(2)"), S("sqrt(2) + 1"));
  EXPECT_EQ(S("0.25"), Scalar::rational(1, 4));
  EXPECT_THROW(S("2 +"), ParseError);
  EXPECT_THROW(S("(x"), ParseError);
  EXPECT_THROW(S("1/(x + y)"), ParseError);
  EXPECT_THROW(Scalar(1) / S("x + y"), InverseOfSum);
  EXPECT_EQ(S("010"), Scalar(10));
}

TEST(Parse, RoundTripThroughToString) {
  for (const char* text : {"1/2*lambda^-1 - sqrt(2)", "-3*x*y^2 + 7/5", "sqrt(lambda)*mu"}) {
    Scalar s = S(text);
    EXPECT_EQ(S(s.to_string()), s) << s.to_string();
  }
}

TEST(Derivative, PolynomialRule) {
  EXPECT_EQ(derivative(S("x^3 + 2*x*y + 5"), "x"), S("3*x^2 + 2*y"));
  EXPECT_EQ(derivative(S("x^-1"), "x"), S("-x^-2"));
}

TEST(Substitute, ExactSubstitution) {
  EXPECT_EQ(substitute(S("a*b + a"), {{"a", Scalar(2)}}), S("2*b + 2"));
  EXPECT_EQ(substitute(Scalar::sqrt(Scalar::symbol("lambda")), {{"lambda", Scalar(4)}}), Scalar(2));
}

// Random sparse scalars over two parameters and one radical.
class RingProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  Scalar random_scalar() {
    std::uniform_int_distribution<int> coef(-5, 5), pow(-2, 2), nterms(1, 3), pick(0, 1);
    Scalar out;
    for (int t = nterms(rng); t > 0; --t) {
      Scalar term = Scalar::rational(coef(rng), 1 + std::abs(coef(rng)));
      term *= Scalar::symbol("u").pow(pow(rng));
      term *= Scalar::symbol("v").pow(std::abs(pow(rng)));
      if (pick(rng)) term *= Scalar::sqrt(Scalar::symbol("u"));
      out += term;
    }
    return out;
  }
};

TEST_F(RingProperties, AssociativityAndDistributivity) {
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_F(RingProperties, NumericEvaluationIsAHomomorphism) {
  std::uniform_real_distribution<double> dom(0.25, 4.0);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(), b = random_scalar();
    Bindings bind{{"u", dom(rng)}, {"v", dom(rng)}};
    const double na = substitute_numeric(a, bind), nb = substitute_numeric(b, bind);
    auto close = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)}); };
    EXPECT_TRUE(close(substitute_numeric(a * b, bind), na * nb));
    EXPECT_TRUE(close(substitute_numeric(a + b, bind), na + nb));
  }
}

TEST_F(RingProperties, LaurentLeadingShift) {
  ContractionScale cs;
  Scalar eta = cs.scale;
  std::uniform_int_distribution<int> pw(-3, 3), cf(-4, 4);
  for (int i = 0; i < 100; ++i) {
    Scalar s;
    for (int t = 0; t < 3; ++t) s += Scalar(cf(rng)) * eta.pow(pw(rng));
    const int m = pw(rng), k = pw(rng);
    Scalar shifted = s * eta.pow(m);
    bool ok1 = true, ok2 = true;
    Scalar l1, l2;
    try { l1 = laurent_leading(shifted, k - m, cs); } catch (const Divergent&) { ok1 = false; }
    try { l2 = laurent_leading(s, k, cs); } catch (const Divergent&) { ok2 = false; }
    EXPECT_EQ(ok1, ok2);
    if (ok1 && ok2) EXPECT_EQ(l1, l2);
  }
}

}  // namespace
}  // namespace pdd
