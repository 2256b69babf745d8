#include <gtest/gtest.h>

#include "pdd/contraction.hpp"
#include "pdd/doubles.hpp"

namespace pdd {
namespace {

Bivector B(const std::string& s) { return parse_bivector(s, poincare21().basis(), standard_aliases()); }

TEST(Family, ZeroIsPoincare) {
  LieAlgebra L0 = family_at(Scalar(0));
  EXPECT_FALSE(L0.first_difference(poincare21()).has_value());
}

TEST(Family, UnitLambdaBrackets) {
  LieAlgebra L = family_at(Scalar(1));
  const Names& n = L.basis();
  EXPECT_EQ(vec_to_string(L.bracket(L.index("P1"), L.index("P2")), n), "J");
  EXPECT_EQ(vec_to_string(L.bracket(L.index("P0"), L.index("P1")), n), "-K1");
  EXPECT_EQ(vec_to_string(L.bracket(L.index("P0"), L.index("P2")), n), "-K2");
}

TEST(Family, JacobiHoldsSymbolically) {
  EXPECT_TRUE(jacobi_check(lambda_family()).empty());
  EXPECT_TRUE(jacobi_check(family_at(Scalar::rational(-3, 7))).empty());
}

TEST(BasisMap, RotationAndRescaling) {
  const Names& n = lambda_family().basis();
  LinearMap a = basis_map("A");
  EXPECT_EQ(vec_to_string(a.image(1), n), "-K2");
  LinearMap b = basis_map("ADS-B");
  EXPECT_EQ(b.image(1), parse_vector("1/eta*P2", n, standard_aliases()));
  EXPECT_EQ(b.image(4), parse_vector("eta*K1", n, standard_aliases()));
}

TEST(BasisMap, PulledBackBracketsMakeAnIsomorphism) {
  for (const auto& id : ads_ids()) {
    LinearMap m = basis_map(id);
    EXPECT_TRUE(jacobi_check(m.source).empty()) << id;
    EXPECT_TRUE(is_isomorphism(m)) << id;
    EXPECT_EQ(m.compose_after(m.inverse()).matrix, Tensor2::identity(6)) << id;
  }
}

TEST(Lookup, PrefixedAndUnknownIds) {
  EXPECT_EQ(&ads_r_matrix("ADS-G"), &ads_r_matrix("G"));
  EXPECT_THROW(ads_r_matrix("H"), std::invalid_argument);
  EXPECT_EQ(ads_ids().size(), 7u);
}

TEST(Contract, VanishingLambdaLimits) {
  const Bivector r0 = B("1/2*(-P0^J - P1^K2 + P2^K1)");
  EXPECT_EQ(contract(ads_r_matrix("A"), 0), r0);
  EXPECT_EQ(contract(ads_r_matrix("E"), 0), r0);
  EXPECT_THROW(contract(ads_r_matrix("B"), 0), Divergent);
  EXPECT_EQ(contract(ads_r_matrix("B"), 1), B("P2^P1"));
  EXPECT_EQ(contract(ads_r_matrix("D"), 1), B("P2^P0"));
  EXPECT_EQ(contract(ads_r_matrix("G"), 1), B("(1-rho^2)/4*P0^P1"));
}

TEST(Contract, DivergenceNamesTheComponent) {
  try {
    contract(ads_r_matrix("D"), 0);
    FAIL() << "expected Divergent";
  } catch (const Divergent& e) {
    EXPECT_NE(std::string(e.what()).find("P0"), std::string::npos) << e.what();
  }
}

TEST(Contract, RecordedLimitsAreReproduced) {
  for (const auto& id : ads_ids()) {
    const AdsRMatrix& m = ads_r_matrix(id);
    for (const auto& lim : m.limits) {
      if (lim.divergent) {
        EXPECT_THROW(contract(m, lim.k), Divergent) << id << " k=" << lim.k;
      } else {
        Bivector got = contract(m, lim.k);
        EXPECT_EQ(got, B(lim.limit)) << id << " k=" << lim.k;
        EXPECT_NE(mcybe_check(poincare21(), got).verdict, Mcybe::fails) << id;
        if (lim.k > 0) EXPECT_TRUE(schouten(poincare21(), got).is_zero()) << id;
      }
    }
  }
}

TEST(Contract, HigherPowersOfTheScaleKillEverything) {
  for (const auto& id : {"A", "C", "E", "F"}) EXPECT_TRUE(contract(ads_r_matrix(id), 1).is_zero()) << id;
}

TEST(Mcybe, EveryFamilyMemberSolvesTheModifiedEquation) {
  for (const auto& id : ads_ids()) {
    const AdsRMatrix& m = ads_r_matrix(id);
    EXPECT_NE(mcybe_check(lambda_family(), m.r).verdict, Mcybe::fails) << id;
  }
}

TEST(Catalog, AdsEntriesCarryTheSameText) {
  for (const auto& id : ads_ids()) EXPECT_EQ(catalog("ADS-" + id).expected_r_bivector(), ads_r_matrix(id).r) << id;
}

}  // namespace
}  // namespace pdd
