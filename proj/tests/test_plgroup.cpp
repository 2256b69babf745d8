#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pdd/doubles.hpp"
#include "pdd/plgroup.hpp"

namespace pdd {
namespace {

struct Group {
  const char* name;
  MatrixRep rep;
  Chart chart;
};

std::vector<Group> groups() {
  return {{"P21", MatrixRep::poincare21(), Chart::poincare21()}, {"EXT", MatrixRep::extended11(), Chart::extended11()}};
}

// r-matrix the spacetime template is written for.
Bivector template_r(const std::string& id) {
  const CatalogEntry& e = catalog(id);
  return parse_bivector(e.templ->r, e.kinematical.basis(), e.aliases);
}

Eigen::VectorXd random_point(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd q(m);
  for (auto& x : q) x = u(rng);
  return q;
}

TEST(MatrixRep, IsAFaithfulRepresentation) {
  for (const auto& g : groups()) EXPECT_LT(g.rep.fidelity_error(), 1e-12) << g.name;
}

TEST(GroupElement, OriginAndTranslations) {
  for (const auto& g : groups())
    EXPECT_TRUE(group_element(g.chart, g.rep, Eigen::VectorXd::Zero(g.chart.dim())).isIdentity(0.0)) << g.name;
  Eigen::VectorXd q(6);
  q << 0, 0, 0, 0.5, -1.5, 2.0;
  Mat4 m = group_element(Chart::poincare21(), MatrixRep::poincare21(), q);
  EXPECT_EQ(m.col(0), Eigen::Vector4d(1, 0.5, -1.5, 2.0));
  Eigen::VectorXd e(4);
  e << 1, 0, 0, 0;
  EXPECT_DOUBLE_EQ(group_element(Chart::extended11(), MatrixRep::extended11(), e)(3, 0), -2.0);
}

TEST(ChartJacobian, MatchesCentralDifferencesAndHasFullRank) {
  std::mt19937_64 rng(31);
  for (const auto& g : groups()) {
    const std::size_t m = g.chart.dim();
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd q = random_point(rng, m);
      Eigen::MatrixXd jac = chart_jacobian(g.chart, g.rep, q);
      for (std::size_t k = 0; k < m; ++k) {
        const double h = 1e-6;
        Eigen::VectorXd qp = q, qm = q;
        qp[k] += h;
        qm[k] -= h;
        Mat4 d = (group_element(g.chart, g.rep, qp) - group_element(g.chart, g.rep, qm)) / (2 * h);
        EXPECT_LT((Eigen::Map<Eigen::VectorXd>(d.data(), 16) - jac.col(k)).cwiseAbs().maxCoeff(), 1e-8) << g.name;
      }
      EXPECT_EQ(Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(jac).rank(), Eigen::Index(m)) << g.name;
    }
  }
}

TEST(InvariantFields, RightTranslationFieldIsACoordinateDirection) {
  std::mt19937_64 rng(4);
  const Chart c = Chart::poincare21();
  const MatrixRep rep = MatrixRep::poincare21();
  for (int trial = 0; trial < 10; ++trial) {
    InvariantFields f = invariant_fields(c, rep, random_point(rng, 6));
    Eigen::VectorXd unit = Eigen::VectorXd::Unit(6, c.index("x0"));
    EXPECT_LT((f.right.col(rep.algebra.index("P0")) - unit).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(InvariantFields, AtTheOriginLeftAndRightAgree) {
  for (const auto& g : groups()) {
    InvariantFields f = invariant_fields(g.chart, g.rep, Eigen::VectorXd::Zero(g.chart.dim()));
    EXPECT_LT((f.left - f.right).cwiseAbs().maxCoeff(), 1e-12) << g.name;
  }
}

// Lie bracket of the invariant fields of generators i and j by central
// differences of their components.
Eigen::VectorXd field_commutator(const Group& g, const Eigen::VectorXd& q, std::size_t i, std::size_t j, bool left) {
  const std::size_t m = g.chart.dim();
  auto field = [&](const Eigen::VectorXd& p, std::size_t gen) {
    InvariantFields f = invariant_fields(g.chart, g.rep, p);
    return Eigen::VectorXd(left ? f.left.col(gen) : f.right.col(gen));
  };
  const double h = 1e-5;
  Eigen::MatrixXd dXi(m, m), dXj(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    Eigen::VectorXd qp = q, qm = q;
    qp[b] += h;
    qm[b] -= h;
    dXi.col(b) = (field(qp, i) - field(qm, i)) / (2 * h);
    dXj.col(b) = (field(qp, j) - field(qm, j)) / (2 * h);
  }
  return dXj * field(q, i) - dXi * field(q, j);
}

TEST(InvariantFields, CommutatorsReproduceTheStructureConstants) {
  std::mt19937_64 rng(9);
  for (const auto& g : groups()) {
    const LieAlgebra& L = g.rep.algebra;
    const std::size_t n = L.dim();
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXd q = random_point(rng, g.chart.dim());
      InvariantFields f = invariant_fields(g.chart, g.rep, q);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Eigen::VectorXd cij(n);
          for (std::size_t k = 0; k < n; ++k) cij[k] = substitute_numeric(L.c(i, j, k), {});
          EXPECT_LT((field_commutator(g, q, i, j, true) - f.left * cij).cwiseAbs().maxCoeff(), 1e-6) << g.name;
          EXPECT_LT((field_commutator(g, q, i, j, false) + f.right * cij).cwiseAbs().maxCoeff(), 1e-6) << g.name;
        }
    }
  }
}

TEST(Sklyanin, Case0AtASamplePoint) {
  const Chart c = Chart::poincare21();
  const MatrixRep rep = MatrixRep::poincare21();
  Eigen::MatrixXd r = numeric_r(catalog("P21-Case0").expected_r_bivector());
  Eigen::VectorXd q(6);
  q << 0, 0, 0, 1, 2, 3;
  const std::size_t x0 = c.index("x0"), x1 = c.index("x1"), x2 = c.index("x2");
  EXPECT_NEAR(sklyanin_eval(r, c, rep, q, x1, x2), 1.0, 1e-12);
  EXPECT_NEAR(sklyanin_eval(r, c, rep, q, x0, x1), -3.0, 1e-12);
  EXPECT_NEAR(sklyanin_eval(r, c, rep, q, x2, x1), -1.0, 1e-12);
  EXPECT_EQ(sklyanin_eval(r, c, rep, q, x1, x1), 0.0);
}

TEST(Sklyanin, ZeroRGivesZeroBracket) {
  std::mt19937_64 rng(1);
  const Chart c = Chart::poincare21();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(6, 6);
  EXPECT_EQ(sklyanin_eval(r, c, MatrixRep::poincare21(), random_point(rng, 6), 3, 4), 0.0);
}

TEST(PoissonFit, Case0LorentzInvariantBrackets) {
  PoissonTable t = poisson_fit(catalog("P21-Case0").expected_r_bivector(), {}, Chart::poincare21(),
                               MatrixRep::poincare21());
  ASSERT_EQ(t.vars, (Names{"x0", "x1", "x2"}));
  EXPECT_NEAR(t.coeff(0, 1, {0, 0, 1}), -1.0, 1e-9);
  EXPECT_NEAR(t.coeff(1, 0, {0, 0, 1}), 1.0, 1e-9);
  EXPECT_NEAR(t.coeff(0, 2, {0, 1, 0}), 1.0, 1e-9);
  EXPECT_NEAR(t.coeff(1, 2, {1, 0, 0}), 1.0, 1e-9);
  EXPECT_EQ(exact_bracket(t, 0, 1), -Scalar::symbol("x2"));
  EXPECT_LT(jacobi_poisson(t), 1e-9);
}

TEST(PoissonFit, Case1QuadraticTemplate) {
  PoissonTable t = poisson_fit(template_r("P21-Case1"), {{"alpha1", 1.0}, {"beta1", 1.0}},
                               Chart::poincare21(), MatrixRep::poincare21());
  EXPECT_EQ(exact_bracket(t, 0, 1), parse_scalar("-x0*x2 - x1*x2 + 2*x2"));
  EXPECT_EQ(exact_bracket(t, 1, 2), parse_scalar("-2*x0 + x0*x1 + x0^2"));
  EXPECT_LT(jacobi_poisson(t), 1e-9);
}

TEST(PoissonFit, ExtendedCase0) {
  PoissonTable t = poisson_fit(template_r("EXT11-Case0"), {{"alpha0", 1.0}, {"beta0", 1.0}},
                               Chart::extended11(), MatrixRep::extended11());
  ASSERT_EQ(t.vars, (Names{"x0", "x1", "phi"}));
  EXPECT_TRUE(exact_bracket(t, 0, 1).is_zero());
  EXPECT_EQ(exact_bracket(t, 0, 2), parse_scalar("-x0 - x1"));
}

TEST(PoissonFit, DeterministicForAFixedSeed) {
  const Bivector r = catalog("P21-Case6").expected_r_bivector();
  PoissonTable a = poisson_fit(r, {}, Chart::poincare21(), MatrixRep::poincare21(), {50, 7});
  PoissonTable b = poisson_fit(r, {}, Chart::poincare21(), MatrixRep::poincare21(), {50, 7});
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(a.residual, b.residual);
}

TEST(PoissonFit, RefusesNonCoisotropicIsotropy) {
  EXPECT_THROW(poisson_fit(catalog("P21-Case3").expected_r_bivector(), {{"lambda", 1.0}}, Chart::poincare21(),
                           MatrixRep::poincare21()),
               NotCoisotropic);
}

TEST(PoissonFit, ZeroTableSatisfiesJacobi) {
  PoissonTable t;
  t.vars = {"a", "b", "c"};
  EXPECT_EQ(jacobi_poisson(t), 0.0);
  EXPECT_TRUE(exact_bracket(t, 0, 2).is_zero());
}

TEST(Snap, SmallDenominators) {
  EXPECT_EQ(snap(0.5), Rational(1, 2));
  EXPECT_EQ(snap(1.0 / 3.0 + 1e-10), Rational(1, 3));
  EXPECT_EQ(snap(-2.0), Rational(-2));
  EXPECT_GT(snap(M_PI).get_den(), 64);
}

TEST(PolynomialCoefficients, BindsParameters) {
  auto m = polynomial_coefficients(parse_scalar("2*x0*x1 - lambda*x2"), {"x0", "x1", "x2"}, {{"lambda", 3.0}});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_DOUBLE_EQ(m.at({1, 1, 0}), 2.0);
  EXPECT_DOUBLE_EQ(m.at({0, 0, 1}), -3.0);
}

}  // namespace
}  // namespace pdd
