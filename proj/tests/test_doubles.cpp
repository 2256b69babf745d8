#include <gtest/gtest.h>

#include "pdd/doubles.hpp"
#include "pdd/pipeline.hpp"

namespace pdd {
namespace {

const std::vector<std::string> kDoubles{"P21-Case0", "P21-Case1", "P21-Case2", "P21-Case3", "P21-Case4",
                                        "P21-Case5", "P21-Case6", "P21-Case7", "EXT11-Case0", "EXT11-Case1"};

TEST(Catalog, Listing) {
  const auto& ids = catalog_ids();
  auto count = [&](const std::string& prefix) {
    return std::count_if(ids.begin(), ids.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
  };
  EXPECT_EQ(count("P21-"), 8);
  EXPECT_EQ(count("EXT11-"), 2);
  EXPECT_EQ(count("ADS-"), 7);
  EXPECT_EQ(count("ISO31"), 1);
  EXPECT_THROW(catalog("NOPE"), UnknownId);
}

TEST(Catalog, SelectedEntries) {
  const LieAlgebra& P = poincare21();
  EXPECT_EQ(catalog("P21-Case6").expected_r_bivector(),
            parse_bivector("P0^K2 + 1/2*(-P0^J + P1^K2 + P2^K1)", P.basis()));
  EXPECT_EQ(catalog("P21-Case0").expected_verdict, Coisotropy::poisson_subgroup);
  EXPECT_EQ(catalog("P21-Case0").expected_class, "IV");
  const LieAlgebra& X = extended11();
  Tensor2 pairing = parse_tensor2(catalog("EXT11-Case1").expected_pairing, X.basis());
  EXPECT_EQ(pairing(X.index("K"), X.index("F")), Scalar(1));
  EXPECT_EQ(pairing(X.index("P0"), X.index("P0")), Scalar(1));
  EXPECT_EQ(pairing(X.index("P1"), X.index("P1")), Scalar(-1));
}

TEST(Assemble, Case0Brackets) {
  DoubleAlgebra D = assemble_double(*catalog("P21-Case0").triple);
  ASSERT_EQ(D.L.dim(), 6u);
  const Names& n = D.L.basis();
  auto br = [&](const char* a, const char* b) { return vec_to_string(D.L.bracket(D.L.index(a), D.L.index(b)), n); };
  EXPECT_EQ(br("Y0", "Y1"), "2*Y1");
  EXPECT_EQ(br("y0", "y1"), "0");
  // [y^i, Y_j] = c^i_{jk} y^k for an Abelian dual.
  EXPECT_EQ(br("y1", "Y0"), "2*y1");
  EXPECT_EQ(br("y0", "Y1"), "y2");
}

TEST(Assemble, AbelianFactorsGiveAnAbelianDouble) {
  ManinTriple t{LieAlgebra({"Y0", "Y1"}), LieAlgebra({"y0", "y1"}), {}};
  DoubleAlgebra D = assemble_double(t);
  EXPECT_TRUE(D.L.is_abelian());
  CanonicalR c = canonical_r(D);
  EXPECT_TRUE(coboundary_delta(D.L, c.r_skew).is_zero());
}

TEST(Assemble, Case5ConstraintIsMetadataOnly) {
  const CatalogEntry& e = catalog("P21-Case5");
  DoubleAlgebra D = assemble_double(*e.triple);
  LieAlgebra bad = D.L.substitute({{"omega", Scalar::rational(1, 2)}, {"lambda", Scalar(-1)}});
  EXPECT_TRUE(jacobi_check(bad).empty());
  EXPECT_EQ(e.triple->constraints.back(), "omega*lambda > 0");
}

TEST(Assemble, EveryDoubleIsALieAlgebraWithInvariantPairing) {
  for (const auto& id : kDoubles) {
    DoubleAlgebra D = assemble_double(*catalog(id).triple);
    EXPECT_TRUE(jacobi_check(D.L).empty()) << id;
    EXPECT_TRUE(is_invariant_form(D.L, D.pairing)) << id;
    EXPECT_FALSE(determinant(D.pairing).is_zero()) << id;
    EXPECT_TRUE(duality_swap_check(*catalog(id).triple)) << id;
    EXPECT_NO_THROW(SubalgebraSpec(D.L, D.first())) << id;
    EXPECT_NO_THROW(SubalgebraSpec(D.L, D.second())) << id;
  }
}

TEST(CanonicalR, OmegaIsACasimirAndRSkewIsTheAntisymmetricPart) {
  for (const auto& id : kDoubles) {
    DoubleAlgebra D = assemble_double(*catalog(id).triple);
    CanonicalR c = canonical_r(D);
    EXPECT_TRUE(c.omega.is_symmetric()) << id;
    EXPECT_TRUE(casimir_check(D.L, c.omega)) << id;
    EXPECT_EQ(Bivector::from_tensor(c.r), c.r_skew) << id;
  }
}

TEST(Transport, Case0CanonicalR) {
  const CatalogEntry& e = catalog("P21-Case0");
  DoubleAlgebra D = realize_double(e, e.primary());
  Transported t = transport(D, e.map(e.primary(), D));
  EXPECT_EQ(t.r, parse_tensor2("-P0@J - P1@K2 + P2@K1", poincare21().basis()));
  EXPECT_FALSE(t.algebra.first_difference(poincare21()).has_value());
}

TEST(Transport, Case2PairingAndIdentity) {
  const CatalogEntry& e = catalog("P21-Case2");
  DoubleAlgebra D = realize_double(e, e.primary());
  Transported t = transport(D, e.map(e.primary(), D));
  EXPECT_EQ(t.pairing, parse_tensor2("-(J@P0 + P0@J) + (K1@P2 + P2@K1) - (K2@P1 + P1@K2)", poincare21().basis()));
  LinearMap id = LinearMap::from_images(D.L, D.L, D.L.basis());
  Transported same = transport(D, id);
  EXPECT_EQ(same.pairing, D.pairing);
  EXPECT_EQ(same.r, canonical_r(D).r);
}

TEST(Transport, NonIsomorphismIsRejected) {
  const CatalogEntry& e = catalog("P21-Case7");
  for (const auto& real : e.realizations) {
    if (real.primary) continue;
    DoubleAlgebra D = realize_double(e, real);
    EXPECT_THROW(transport(D, e.map(real, D)), NotIsomorphism);
  }
}

TEST(SkewReduce, Examples) {
  const CatalogEntry& c3 = catalog("P21-Case3");
  Tensor2 r3 = parse_tensor2(c3.expected_r_full, poincare21().basis(), c3.aliases);
  SkewReduction sr = skew_reduce(poincare21(), r3);
  EXPECT_EQ(sr.r_skew, c3.expected_r_bivector());
  EXPECT_EQ(sr.casimirs.size(), 2u);
  Bivector skew = c3.expected_r_bivector();
  EXPECT_EQ(skew_reduce(poincare21(), skew.to_tensor()).r_skew, skew);
  const CatalogEntry& x1 = catalog("EXT11-Case1");
  Tensor2 rx = parse_tensor2(x1.expected_r_full, extended11().basis(), x1.aliases);
  EXPECT_EQ(skew_reduce(extended11(), rx).r_skew, x1.expected_r_bivector());
}

TEST(SkewReduce, NonInvariantSymmetricPartIsRefused) {
  EXPECT_THROW(skew_reduce(poincare21(), parse_tensor2("J@J", poincare21().basis())), NotReducible);
}

TEST(Pipeline, RMatricesThatReproduceTheDisplays) {
  for (const auto& id : {"P21-Case0", "P21-Case2", "P21-Case3", "P21-Case5", "P21-Case6", "P21-Case7", "EXT11-Case1"})
    EXPECT_EQ(pipeline_r(catalog(id)), catalog(id).expected_r_bivector()) << id;
}

TEST(Pipeline, Case5SubcasesShareOneRMatrix) {
  const CatalogEntry& e = catalog("P21-Case5");
  ASSERT_EQ(e.realizations.size(), 2u);
  std::vector<Bivector> rs;
  for (const auto& real : e.realizations) {
    DoubleAlgebra D = realize_double(e, real);
    Transported t = transport(D, e.map(real, D), real.domains);
    rs.push_back(skew_reduce(poincare21(), t.r).r_skew);
  }
  EXPECT_EQ(rs[0], rs[1]);
}

}  // namespace
}  // namespace pdd
