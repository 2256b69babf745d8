#include <gtest/gtest.h>

#include <random>

#include "pdd/doubles.hpp"
#include "pdd/liealg.hpp"

namespace pdd {
namespace {

Tensor2 T2(const std::string& s, const LieAlgebra& L) { return parse_tensor2(s, L.basis(), standard_aliases()); }

TEST(Jacobi, KinematicalAlgebrasSatisfyIt) {
  EXPECT_TRUE(jacobi_check(poincare21()).empty());
  EXPECT_TRUE(jacobi_check(extended11()).empty());
  EXPECT_TRUE(jacobi_check(poincare31()).empty());
}

TEST(Jacobi, AbelianAlgebra) { EXPECT_TRUE(jacobi_check(LieAlgebra({"a", "b", "c", "d"})).empty()); }

TEST(Jacobi, Case4DoubleAndItsPerturbation) {
  const CatalogEntry& e = catalog("P21-Case4");
  EXPECT_TRUE(jacobi_check(assemble_double(*e.triple).L).empty());
  const Names dual{"y0", "y1", "y2"};
  ManinTriple t = *e.triple;
  // lambda is a free parameter, so lambda -> lambda + 1 only relabels the family.
  t.dual = LieAlgebra::from_table(dual, {{"y0", "y2", "-y0"}, {"y1", "y2", "(lambda + 1)*y0 - y1"}});
  EXPECT_TRUE(jacobi_check(assemble_double(t).L).empty());
  // Perturbing a rigid constant breaks compatibility.
  t.dual = LieAlgebra::from_table(dual, {{"y0", "y2", "-y0"}, {"y1", "y2", "lambda*y0 - 2*y1"}});
  EXPECT_TRUE(jacobi_check(t.dual).empty());
  EXPECT_THROW(assemble_double(t), IncompatibleTriple);
  EXPECT_FALSE(jacobi_check(assemble_double_unchecked(t).L).empty());
}

TEST(Jacobi, BrokenTableIsReported) {
  LieAlgebra L = LieAlgebra::from_table({"a", "b", "c"}, {{"a", "b", "a"}, {"b", "c", "b"}, {"a", "c", "c"}});
  EXPECT_FALSE(jacobi_check(L).empty());
}

TEST(Adjoint, ZeroAndTranslationBivector) {
  const LieAlgebra& L = poincare21();
  EXPECT_TRUE(adjoint(L, L.index("K1"), Bivector(6)).is_zero());
  Bivector p12 = parse_bivector("P1^P2", L.basis());
  EXPECT_TRUE(adjoint(L, L.index("J"), p12).is_zero());
  EXPECT_FALSE(adjoint(L, L.index("K1"), p12).is_zero());
}

TEST(Adjoint, OmegaOfEveryDoubleIsInvariant) {
  for (const auto& id : catalog_ids()) {
    const CatalogEntry& e = catalog(id);
    if (!e.triple) continue;
    DoubleAlgebra D = assemble_double(*e.triple);
    EXPECT_TRUE(is_ad_invariant(D.L, canonical_r(D).omega)) << id;
  }
}

TEST(Adjoint, IsADerivationOnWedges) {
  const LieAlgebra& L = poincare21();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rvec = [&] {
    Vec v(6);
    for (auto& x : v) x = coef(rng);
    return v;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Vec a = rvec(), b = rvec(), c = rvec();
    for (std::size_t x = 0; x < 6; ++x) {
      Bivector ab = wedge(a, b);
      EXPECT_EQ(adjoint(L, x, ab), wedge(adjoint(L, x, a), b) + wedge(a, adjoint(L, x, b)));
      Trivector abc = wedge(ab, c);
      EXPECT_EQ(adjoint(L, x, abc), wedge(adjoint(L, x, ab), c) + wedge(ab, adjoint(L, x, c)));
    }
  }
}

TEST(InvariantForms, Poincare21HasATwoDimensionalSpace) {
  const LieAlgebra& L = poincare21();
  InvariantForms f = invariant_symmetric_forms(L);
  EXPECT_EQ(f.basis.size(), 2u);
  EXPECT_TRUE(f.some_nondegenerate);
  for (const auto& g : f.basis) EXPECT_TRUE(is_invariant_form(L, g));
  Tensor2 pairing = T2("-(J@P0 + P0@J) + (K1@P2 + P2@K1) - (K2@P1 + P1@K2)", L);
  EXPECT_TRUE(is_invariant_form(L, pairing));
  EXPECT_FALSE(determinant(pairing).is_zero());
}

TEST(InvariantForms, Iso31IsDegenerate) {
  InvariantForms f = invariant_symmetric_forms(poincare31());
  EXPECT_FALSE(f.basis.empty());
  EXPECT_TRUE(f.generic_determinant.is_zero());
  EXPECT_FALSE(f.some_nondegenerate);
  for (bool nd : f.basis_nondegenerate) EXPECT_FALSE(nd);
}

TEST(InvariantForms, AbelianAlgebraAdmitsAllSymmetricForms) {
  InvariantForms f = invariant_symmetric_forms(LieAlgebra({"a", "b", "c"}));
  EXPECT_EQ(f.basis.size(), 6u);
}

TEST(InvariantForms, ExtendedAlgebraPairing) {
  const LieAlgebra& L = extended11();
  EXPECT_TRUE(invariant_symmetric_forms(L).some_nondegenerate);
  EXPECT_TRUE(is_invariant_form(L, T2("K@F + F@K + P0@P0 - P1@P1", L)));
}

TEST(Casimir, QuadraticCasimirsOfPoincare21) {
  const LieAlgebra& L = poincare21();
  EXPECT_TRUE(casimir_check(L, T2("P0@P0 - P1@P1 - P2@P2", L)));
  EXPECT_TRUE(casimir_check(L, T2("1/2*(J@P0 + P0@J + K2@P1 + P1@K2 - K1@P2 - P2@K1)", L)));
  EXPECT_FALSE(casimir_check(L, T2("J@J", L)));
  EXPECT_EQ(invariant_symmetric_tensors(L).size(), 2u);
}

TEST(Isomorphism, IdentityAndInverse) {
  const LieAlgebra& L = poincare21();
  LinearMap id = LinearMap::from_images(L, L, L.basis());
  EXPECT_TRUE(is_isomorphism(id));
  for (const auto& key : {"P21-Case0", "P21-Case1", "P21-Case2", "P21-Case6", "EXT11-Case0"}) {
    const CatalogEntry& e = catalog(key);
    DoubleAlgebra D = realize_double(e, e.primary());
    LinearMap m{e.kinematical, D.L, e.map(e.primary(), D).matrix};
    EXPECT_TRUE(is_isomorphism(m)) << key;
    EXPECT_TRUE(is_isomorphism(m.inverse())) << key;
  }
}

TEST(Isomorphism, ScalingIsNot) {
  const LieAlgebra& L = poincare21();
  LinearMap m = LinearMap::from_images(L, L, {"2*J", "K1", "K2", "P0", "P1", "P2"});
  IsomorphismReport r = check_isomorphism(m);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.failures.empty());
}

TEST(Isomorphism, ParametricMapIsSampledNumerically) {
  const CatalogEntry& e = catalog("P21-Case5");
  for (const auto& real : e.realizations) {
    DoubleAlgebra D = realize_double(e, real);
    IsomorphismReport r = check_isomorphism({e.kinematical, D.L, e.map(real, D).matrix}, real.domains, 5);
    EXPECT_TRUE(r.ok()) << real.label;
    EXPECT_GE(r.samples, 5u);
    EXPECT_LT(r.max_numeric_residual, 1e-10);
  }
}

TEST(LinearMap, ComposeWithInverseIsIdentity) {
  const LieAlgebra& L = poincare21();
  LinearMap m = LinearMap::from_images(L, L, {"J + K1", "K1", "K2 - J", "P0 + 2*P1", "P1", "P2 - P0"});
  LinearMap c = m.compose_after(m.inverse());
  EXPECT_EQ(c.matrix, Tensor2::identity(6));
}

TEST(SampleBindings, DeterministicAndInDomain) {
  Domains d{{"a", -2.0, -1.0}, {"b", 3.0, 4.0}};
  auto s1 = sample_bindings(d, 10, 42), s2 = sample_bindings(d, 10, 42);
  ASSERT_EQ(s1.size(), 10u);
  EXPECT_EQ(s1, s2);
  for (const auto& b : s1) {
    EXPECT_GE(b.at("a"), -2.0);
    EXPECT_LE(b.at("a"), -1.0);
    EXPECT_GE(b.at("b"), 3.0);
  }
}

}  // namespace
}  // namespace pdd
