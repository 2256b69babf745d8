#include <gtest/gtest.h>

#include <random>

#include "pdd/stachura.hpp"

namespace pdd {
namespace {

Bivector B(const std::string& s) { return parse_bivector(s, poincare21().basis(), standard_aliases()); }
LinearMap Auto(const std::vector<std::string>& images) {
  return LinearMap::from_images(poincare21(), poincare21(), images, standard_aliases());
}

TEST(Decompose, Case1) {
  RDecomposition d = decompose(catalog("P21-Case1").expected_r_bivector());
  EXPECT_EQ(d.c, B("K1^J + K1^K2"));
  EXPECT_EQ(d.b, B("-P0^J - P1^K2 + P2^K1"));
  EXPECT_TRUE(d.a.is_zero());
}

TEST(Decompose, TranslationsOnlyAndCase4) {
  RDecomposition d = decompose(B("P0^P1"));
  EXPECT_EQ(d.a, B("P0^P1"));
  EXPECT_TRUE(d.b.is_zero() && d.c.is_zero());
  RDecomposition d4 = decompose(catalog("P21-Case4").expected_r_bivector());
  EXPECT_EQ(d4.a, B("lambda*P0^P2"));
  EXPECT_TRUE(d4.c.is_zero());
}

TEST(Decompose, ReassemblyIsExactWithDisjointSupports) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-3, 3), idx(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Bivector r(6);
    for (int t = 0; t < 6; ++t) r.add(idx(rng), idx(rng), coef(rng));
    RDecomposition d = decompose(r);
    EXPECT_EQ(d.a + d.b + d.c, r);
    for (const auto& [k, v] : d.a.terms()) EXPECT_TRUE(k.first >= 3 && k.second >= 3);
    for (const auto& [k, v] : d.c.terms()) EXPECT_TRUE(k.first < 3 && k.second < 3);
    for (const auto& [k, v] : d.b.terms()) EXPECT_TRUE(k.first < 3 && k.second >= 3);
  }
}

TEST(Invariants, CanonicalClasses) {
  MuP iv = invariants_mu_p(canonical_form("IV"));
  EXPECT_EQ(iv.mu, Scalar(2));
  EXPECT_TRUE(iv.p.is_zero());
  MuP v = invariants_mu_p(canonical_form("V", 0, 0, {Scalar(1), Scalar(-1), Scalar(2)}));
  EXPECT_TRUE(v.mu.is_zero());
  EXPECT_TRUE(v.p.is_zero());
  MuP c0 = invariants_mu_p(catalog("P21-Case0").expected_r_bivector());
  EXPECT_EQ(c0.mu, Scalar::rational(1, 2));
  EXPECT_TRUE(c0.p.is_zero());
}

TEST(Invariants, MuScalesQuadratically) {
  Scalar t = Scalar::symbol("t");
  for (const auto& id : {"P21-Case0", "P21-Case1", "P21-Case3", "P21-Case6"}) {
    Bivector r = catalog(id).expected_r_bivector();
    MuP a = invariants_mu_p(r), b = invariants_mu_p(t * r);
    EXPECT_EQ(b.mu, t * t * a.mu) << id;
    EXPECT_EQ(b.p, t * t * a.p) << id;
  }
}

TEST(Invariants, NotProportionalThrows) { EXPECT_THROW(invariants_mu_p(B("J^P1")), NotProportional); }

TEST(Automorphism, Case2IntoTheTwistedSpaceLikeForm) {
  LinearMap m = Auto({"-2*J - K1 + sqrt(2)*K2", "(1 + 1/sqrt(2))*J + K1 - (1 + 1/sqrt(2))*K2",
                      "-(1 - 1/sqrt(2))*J - K1 - (1 - 1/sqrt(2))*K2", "-2*(2*P0 + sqrt(2)*P1 + P2)",
                      "(2 - sqrt(2))*P0 - (2 - sqrt(2))*P1 + 2*P2", "(2 + sqrt(2))*P0 + (2 + sqrt(2))*P1 + 2*P2"});
  Bivector out = apply_automorphism(catalog("P21-Case2").expected_r_bivector(), m);
  EXPECT_EQ(out, B("K2^P0 + J^P1 - K1^P2"));
  EXPECT_EQ(out, canonical_form("IIa", 1, 1));
}

TEST(Automorphism, IdentityAndCase6SignMap) {
  Bivector r6 = catalog("P21-Case6").expected_r_bivector();
  EXPECT_EQ(apply_automorphism(r6, Auto(poincare21().basis())), r6);
  Bivector out = apply_automorphism(r6, Auto({"J", "-K1", "-K2", "P0", "-P1", "-P2"}));
  EXPECT_EQ(out, Scalar::rational(1, 2) * canonical_form("IIIb", 0, 1));
}

TEST(Automorphism, RejectsNonAutomorphisms) {
  EXPECT_THROW(apply_automorphism(B("P0^P1"), Auto({"J", "K1", "K2", "2*P0", "P1", "P2"})), NotAutomorphism);
}

TEST(Classify, CatalogClasses) {
  const std::vector<std::pair<std::string, std::string>> want{
      {"P21-Case0", "IV"},   {"P21-Case1", "I"},    {"P21-Case2", "IIa"},  {"P21-Case3", "IIa"},
      {"P21-Case4", "IIIb"}, {"P21-Case5", "IIIb"}, {"P21-Case6", "IIIb"}, {"P21-Case7", "IIIb"}};
  for (const auto& [id, cls] : want) {
    Classification c = classify(catalog(id));
    EXPECT_EQ(c.cls, cls) << id;
    EXPECT_TRUE(c.check.ok()) << id;
  }
}

TEST(Classify, PVanishesForPoissonSubgroupAndCoisotropicRows) {
  for (const auto& id : {"P21-Case0", "P21-Case1", "P21-Case2", "P21-Case6", "P21-Case7"})
    EXPECT_TRUE(classify(catalog(id)).invariants.p.is_zero()) << id;
  for (const auto& id : {"P21-Case3", "P21-Case4", "P21-Case5"})
    EXPECT_FALSE(classify(catalog(id)).invariants.p.is_zero()) << id;
}

TEST(Classify, Case5UsesRhoMinusOneWithATranslationTerm) {
  const WitnessSpec& w = *catalog("P21-Case5").witness;
  EXPECT_EQ(w.rho, "-1");
  EXPECT_NE(w.a[0], "0");
}

TEST(Classify, Case4WitnessNeedsTheImaginaryUnit) {
  const WitnessSpec& w = *catalog("P21-Case4").witness;
  bool uses_i = false;
  for (const auto& img : w.images) uses_i = uses_i || img.find("i*") != std::string::npos;
  EXPECT_TRUE(uses_i);
  EXPECT_EQ(classify(catalog("P21-Case4")).cls, "IIIb");
}

TEST(Classify, WrongWitnessFails) {
  WitnessSpec w = *catalog("P21-Case6").witness;
  w.constant = "1";
  EXPECT_THROW(classify(catalog("P21-Case6").expected_r_bivector(), w, standard_aliases()), WitnessFailed);
}

TEST(CanonicalForm, UnknownClass) { EXPECT_THROW(canonical_form("VI"), Unclassified); }

TEST(CanonicalForm, AllClassesSatisfyTheModifiedEquation) {
  for (const char* cls : {"I", "IIa", "IIb", "IIc", "IIIa", "IIIb", "IV", "V"}) {
    Bivector r = canonical_form(cls, Scalar::rational(1, 3), Scalar(2), {Scalar(1), Scalar(0), Scalar(0)});
    EXPECT_NE(mcybe_check(poincare21(), r).verdict, Mcybe::fails) << cls;
  }
}

}  // namespace
}  // namespace pdd
