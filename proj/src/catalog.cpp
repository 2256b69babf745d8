#include <algorithm>

#include "pdd/contraction.hpp"
#include "pdd/doubles.hpp"

namespace pdd {

namespace {

using Rows = std::vector<std::array<std::string, 3>>;

const Names kP21{"J", "K1", "K2", "P0", "P1", "P2"};
const Names kExt{"K", "P0", "P1", "F"};
const Names kY3{"Y0", "Y1", "Y2"};
const Names ky3{"y0", "y1", "y2"};
const Names kY2{"Y1", "Y2"};
const Names ky2{"y1", "y2"};

const std::string kPairing = "-(J@P0 + P0@J) + (K1@P2 + P2@K1) - (K2@P1 + P1@K2)";
const std::string kPairingFlipped = "(J@P0 + P0@J) - (K1@P2 + P2@K1) + (K2@P1 + P1@K2)";
const std::string kExtPairing = "K@F + F@K + P0@P0 - P1@P1";
const std::vector<std::string> kIdentity21{"J", "K1", "K2", "P0", "P1", "P2"};

ManinTriple triple(const Names& gb, const Rows& g, const Names& db, const Rows& d,
                   std::vector<std::string> constraints = {}) {
  return {LieAlgebra::from_table(gb, g), LieAlgebra::from_table(db, d), std::move(constraints)};
}

const Rows kSl2{{"Y0", "Y1", "2*Y1"}, {"Y0", "Y2", "-2*Y2"}, {"Y1", "Y2", "Y0"}};
const Rows kR3{{"Y0", "Y1", "Y1"}, {"Y0", "Y2", "Y2"}};           // cases 1, 2, 6
const Rows kR3lam{{"Y0", "Y1", "Y1"}, {"Y0", "Y2", "Y1 + Y2"}};   // cases 3, 5
const Rows kE2{{"Y0", "Y1", "-Y2"}, {"Y0", "Y2", "Y1"}};           // cases 4, 7

Realization real(std::vector<std::string> images, Domains domains = {},
                 std::map<std::string, Scalar> fixed = {}, std::string label = "") {
  Realization r;
  r.images = std::move(images);
  r.domains = std::move(domains);
  r.fixed = std::move(fixed);
  r.label = std::move(label);
  return r;
}

WitnessSpec witness_spec(std::string cls, std::vector<std::string> images, std::string constant,
                         std::string alpha = "0", std::string rho = "0",
                         std::array<std::string, 3> a = {"0", "0", "0"}) {
  WitnessSpec w;
  w.cls = std::move(cls);
  w.images = std::move(images);
  w.constant = std::move(constant);
  w.alpha = std::move(alpha);
  w.rho = std::move(rho);
  w.a = std::move(a);
  return w;
}

const Domains kLambdaPos{{"lambda", 0.25, 4.0}};
const Domains kLambdaNeg{{"lambda", -4.0, -0.25}};

CatalogEntry p21(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  e.family = Family::P21;
  e.kinematical = poincare21();
  e.aliases = standard_aliases();
  e.lorentz = {"J", "K1", "K2"};
  return e;
}

CatalogEntry ext11(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  e.family = Family::EXT11;
  e.kinematical = extended11();
  e.aliases = standard_aliases();
  e.lorentz = {"K"};
  e.expected_pairing = kExtPairing;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e = p21("P21-Case0");
    e.title = "sl(2,R) with the trivial cocommutator";
    e.triple = triple(kY3, kSl2, ky3, {});
    e.realizations = {real({"-1/2*(Y1 - Y2)", "1/2*(Y1 + Y2)", "-1/2*Y0", "y1 - y2", "2*y0", "y1 + y2"})};
    e.expected_r_full = "-P0@J - P1@K2 + P2@K1";
    e.expected_r = "1/2*(-P0^J - P1^K2 + P2^K1)";
    e.expected_delta = {{"J", "0"}, {"K1", "0"}, {"K2", "0"},
                        {"P0", "P1^P2"}, {"P1", "P0^P2"}, {"P2", "P1^P0"}};
    e.expected_pairing = kPairing;
    e.expected_verdict = Coisotropy::poisson_subgroup;
    e.expected_class = "IV";
    e.witness = witness_spec("IV", kIdentity21, "1/2");
    e.spacetime = {{"x0", "x1", "-x2"}, {"x0", "x2", "x1"}, {"x1", "x2", "x0"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case1");
    e.title = "r3(1) with the book algebra dual";
    e.triple = triple(kY3, kR3, ky3, {{"y0", "y1", "y0"}, {"y0", "y2", "y1"}, {"y1", "y2", "y2"}});
    e.realizations = {real({"y0 + y1 + y2", "y0 + y1", "-y1 - y2", "y0 + y1 + Y0 - Y1 + Y2",
                            "y0 + y1 + Y0 - Y1", "y0 - Y1 + Y2"})};
    e.expected_r_full = "K1^J + K1^K2 + J@P0 + K2@P1 - K1@P2";
    e.expected_r = "K1^J + K1^K2 + (-P0^J - P1^K2 + P2^K1)";
    e.expected_delta = {{"J", "K2^J"},
                        {"K1", "J^K1 + K2^K1"},
                        {"K2", "J^K2"},
                        {"P0", "J^P1 + P2^K1 + K2^P1 + 2*P1^P2"},
                        {"P1", "J^P0 + K2^P0 + P2^K1 + 2*P0^P2"},
                        {"P2", "P0^K1 + K1^P1 + 2*P1^P0"}};
    e.expected_pairing = kPairingFlipped;
    e.expected_verdict = Coisotropy::poisson_subgroup;
    e.expected_class = "I";
    e.witness = witness_spec("I", {"J", "K1", "K2", "sqrt(2)*P0", "sqrt(2)*P1", "sqrt(2)*P2"}, "sqrt(2)", "1");
    e.derived_witness =
        witness_spec("I", {"J", "K1", "K2", "2*sqrt(2)*P0", "2*sqrt(2)*P1", "2*sqrt(2)*P2"}, "sqrt(2)", "1");
    e.templ = ParametricTemplate{
        {"alpha1", "beta1"},
        "alpha1*(J^K1 + K2^K1) + beta1*(P0^J + P1^K2 + K1^P2)",
        {{"alpha1", "-1"}, {"beta1", "-1"}},
        {{"x0", "x1", "-alpha1*x2*(x0 + x1) + 2*beta1*x2"},
         {"x0", "x2", "alpha1*x1*(x0 + x1) - 2*beta1*x1"},
         {"x1", "x2", "alpha1*x0*(x0 + x1) - 2*beta1*x0"}}};
    e.defaults = {{"alpha1", "1"}, {"beta1", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case2");
    e.title = "r3(1) with a Heisenberg dual";
    e.triple = triple(kY3, kR3, ky3, {{"y0", "y2", "y1"}});
    e.realizations = {real({"y2 + Y0 + Y1", "-y2 - Y0", "Y0 + Y1", "y0 - y1 - Y2", "-y0 + Y2", "-y0 + y1"})};
    e.expected_r_full = "P2^J + K2^P0 + K2^P2 + P2@K1 - P1@K2 - J@P0";
    e.expected_r = "P2^J - P0^K2 - P2^K2 + 1/2*(P0^J - P1^K2 + P2^K1)";
    e.expected_pairing = kPairing;
    e.expected_verdict = Coisotropy::coisotropic;
    e.expected_class = "IIa";
    e.witness = witness_spec("IIa",
                            {"-2*J - K1 + sqrt(2)*K2", "(1 + 1/sqrt(2))*J + K1 - (1 + 1/sqrt(2))*K2",
                             "-(1 - 1/sqrt(2))*J - K1 - (1 - 1/sqrt(2))*K2",
                             "-2*(2*P0 + sqrt(2)*P1 + P2)", "(2 - sqrt(2))*P0 - (2 - sqrt(2))*P1 + 2*P2",
                             "(2 + sqrt(2))*P0 + (2 + sqrt(2))*P1 + 2*P2"},
                            "1", "1", "1");
    e.templ = ParametricTemplate{
        {"alpha2", "beta2"},
        "alpha2*(P0^K2 + P2^K2) + beta2*(J^P2 + 1/2*(J^P0 + P1^K2 + K1^P2))",
        {{"alpha2", "-1"}, {"beta2", "-1"}},
        {{"x0", "x1", "0"}, {"x0", "x2", "-alpha2*(x0 - x2)"}, {"x1", "x2", "-beta2*(x0 - x2)"}}};
    e.defaults = {{"alpha2", "1"}, {"beta2", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case3");
    e.title = "r3(1) deformed, dual with essential parameter lambda";
    e.triple = triple(kY3, kR3lam, ky3, {{"y0", "y1", "lambda*y2"}}, {"lambda != 0"});
    e.realizations = {real({"(y0 + y1)/lambda - Y0 + Y2", "-y1/lambda + Y0 - Y1", "-y2/lambda + Y0 - Y2",
                            "y0 + y2 + lambda*Y1", "y0 + lambda*Y1", "-y0 - y2"},
                           kLambdaPos)};
    e.expected_r_full =
        "J^P2 + K2^P0 + K2^P2 - P2@K1 + P1@K2 + J@P0 + 1/lambda*(P0^P1 + 2*(P0^P2 + P2^P1) + P0@P0 - P1@P1 - P2@P2)";
    e.expected_r = "-P2^J - P0^K2 - P2^K2 + 1/2*(-P0^J + P1^K2 - P2^K1) + 1/lambda*(P0^P1 + 2*(P0^P2 + P2^P1))";
    e.expected_pairing = kPairingFlipped;
    e.expected_verdict = Coisotropy::neither;
    e.pairing_lorentz_extra = "-2/lambda*J@J + 2/lambda*(K1@K1 + K2@K2)";
    e.expected_witness_generator = "J";
    e.expected_witness_terms = "1/lambda*(P0^P2 + 2*P1^P0)";
    e.expected_class = "IIa";
    WitnessSpec w = *out[2].witness;
    w.a = {"-4/lambda", "-2*(2 + sqrt(2))/lambda", "-2*(2 + sqrt(2))/lambda"};
    w.pre = {{"-J", "-K1", "K2", "P0", "-P1", "P2"}};
    e.witness = w;
    e.defaults = {{"lambda", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case4");
    e.title = "e(2)-type algebra with dual depending on lambda";
    e.triple = triple(kY3, kE2, ky3, {{"y0", "y2", "-y0"}, {"y1", "y2", "lambda*y0 - y1"}}, {"lambda != 0"});
    e.realizations = {real({"lambda*y0 - Y0", "lambda*y0 + y1 + Y0", "y2 + lambda*Y2", "y0 - Y1", "-Y2", "Y1"},
                           kLambdaPos)};
    e.expected_r_full = "P2^J - J@P0 - P1@K2 + P2@K1 + lambda*(P0@P0 - P1@P1 - P2@P2 + P0^P2)";
    e.expected_r = "P2^J + 1/2*(P0^J - P1^K2 + P2^K1) + lambda*P0^P2";
    e.expected_pairing = kPairing;
    e.pairing_lorentz_extra = "-2*lambda*J@J + 2*lambda*(K1@K1 + K2@K2)";
    e.expected_verdict = Coisotropy::neither;
    e.expected_class = "IIIb";
    const std::vector<std::string> auto4{"i*K2", "i*J", "-K1", "-i*P1", "P2", "i*P0"};
    e.witness = witness_spec("IIIb", auto4, "1/2", "0", "1", {"-2*lambda", "0", "0"});
    e.derived_witness = witness_spec("IIIb", auto4, "-1/2", "0", "1", {"-2*lambda", "0", "0"});
    e.defaults = {{"lambda", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case5");
    e.title = "r3(1) deformed, dual with parameters lambda and omega";
    e.triple = triple(kY3, kR3lam, ky3, {{"y0", "y1", "lambda*y2"}, {"y1", "y2", "2*omega*y0"}},
                      {"lambda != 0", "omega*lambda > 0"});
    e.realizations = {
        real({"(-y1 + Y1)/sqrt(lambda)", "-y0/lambda - Y0", "(y1 + Y1 - Y2)/sqrt(lambda)",
              "-sqrt(lambda)*(y2 + Y1)", "-sqrt(lambda)*y2", "y0"},
             kLambdaPos, {{"omega", Scalar::rational(1, 2)}}, "omega = 1/2, lambda > 0"),
        real({"-(y1 + Y1)/sqrt(-lambda)", "-y0/lambda - Y0", "(y1 - Y1 + Y2)/sqrt(-lambda)",
              "sqrt(-lambda)*(y2 - Y1)", "sqrt(-lambda)*y2", "y0"},
             kLambdaNeg, {{"omega", Scalar::rational(-1, 2)}}, "omega = -1/2, lambda < 0")};
    e.realizations[1].primary = false;
    e.expected_r_full = "P1^J - P2@K1 + P1@K2 + J@P0 + 1/lambda*(P1^P0 + P0@P0 - P1@P1 - P2@P2)";
    e.expected_r = "P1^J + 1/2*(-P0^J + P1^K2 - P2^K1) + 1/lambda*P1^P0";
    e.expected_pairing = kPairingFlipped;
    e.pairing_lorentz_extra = "-2/lambda*J@J + 2/lambda*(K1@K1 + K2@K2)";
    e.expected_verdict = Coisotropy::neither;
    e.expected_class = "IIIb";
    e.witness = witness_spec("IIIb", kIdentity21, "1/2", "0", "-1", {"-2/lambda", "0", "0"});
    e.defaults = {{"lambda", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case6");
    e.title = "r3(1) with a dual depending on omega";
    e.triple = triple(kY3, kR3, ky3, {{"y0", "y2", "y1"}, {"y1", "y2", "2*omega*y0"}}, {"omega > 0"});
    e.realizations = {real({"Y1 + y2", "Y0", "y2", "-y1", "-Y2 + y1", "y0"}, {},
                           {{"omega", Scalar::rational(1, 2)}}, "omega = 1/2")};
    e.expected_r_full = "P0^K2 + P2@K1 - K2@P1 - P0@J";
    e.expected_r = "P0^K2 + 1/2*(-P0^J + P1^K2 + P2^K1)";
    e.expected_pairing = kPairing;
    e.expected_verdict = Coisotropy::coisotropic;
    e.expected_class = "IIIb";
    e.witness = witness_spec("IIIb", {"J", "-K1", "-K2", "P0", "-P1", "-P2"}, "1/2", "0", "1");
    e.spacetime = {{"x0", "x1", "0"}, {"x0", "x2", "-x0 + x1"}, {"x1", "x2", "0"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = p21("P21-Case7");
    e.title = "e(2)-type algebra with a solvable dual";
    e.triple = triple(kY3, kE2, ky3, {{"y0", "y2", "-y0"}, {"y1", "y2", "-y1"}});
    Realization printed = real({"y0", "-Y2", "-Y1 - y0", "Y0 - y1", "-y1", "y2"}, {}, {}, "printed");
    printed.primary = false;
    printed.note = "images as displayed for this case";
    Realization rebuilt = real({"Y0", "Y0 + y1", "-y2", "Y1 - y0", "Y2", "Y1"}, {}, {}, "reconstructed");
    rebuilt.note = "isomorphism reproducing the displayed r-matrix and pairing";
    e.realizations = {rebuilt, printed};
    e.expected_r_full = "P2^J + K1@P2 - K2@P1 - P0@J";
    e.expected_r = "P2^J + 1/2*(-P0^J + P1^K2 - P2^K1)";
    e.expected_pairing = kPairingFlipped;
    e.expected_verdict = Coisotropy::coisotropic;
    e.expected_class = "IIIb";
    e.witness = witness_spec("IIIb", {"J", "-K2", "K1", "P0", "-P2", "P1"}, "1/2", "0", "-1");
    e.spacetime = {{"x0", "x1", "0"}, {"x0", "x2", "0"}, {"x1", "x2", "-(x0 + x2)"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = ext11("EXT11-Case0");
    e.title = "two-dimensional non-abelian algebra with the trivial cocommutator";
    e.triple = triple(kY2, {{"Y1", "Y2", "Y2"}}, ky2, {});
    e.realizations = {real({"-Y1", "(y2 + Y2)/sqrt(2)", "(y2 - Y2)/sqrt(2)", "-y1"})};
    e.expected_r_full = "K@F + 1/2*(P0@P0 - P1@P1 + P0^P1)";
    e.expected_r = "1/2*(K^F + P0^P1)";
    e.expected_delta = {{"K", "0"}, {"F", "0"}, {"P0", "-1/2*(P0^F + P1^F)"}, {"P1", "-1/2*(P0^F + P1^F)"}};
    e.expected_verdict = Coisotropy::poisson_subgroup;
    e.templ = ParametricTemplate{
        {"alpha0", "beta0"},
        "alpha0*K^F + beta0*P0^P1",
        {{"alpha0", "1/2"}, {"beta0", "1/2"}},
        {{"x0", "x1", "0"}, {"phi", "x0", "beta0*x0 + alpha0*x1"}, {"phi", "x1", "alpha0*x0 + beta0*x1"}}};
    e.defaults = {{"alpha0", "1"}, {"beta0", "1"}};
    out.push_back(e);
  }
  {
    CatalogEntry e = ext11("EXT11-Case1");
    e.title = "two-dimensional non-abelian algebra with a non-abelian dual";
    e.triple = triple(kY2, {{"Y1", "Y2", "Y2"}}, ky2, {{"y1", "y2", "y1"}});
    e.realizations = {real({"-Y1", "(y2 + Y1 + Y2)/sqrt(2)", "(y2 + Y1 - Y2)/sqrt(2)", "-y1 + Y2"})};
    e.expected_r_full = "F@K + 1/sqrt(2)*(K^P0 + P1^K) + 1/2*(P1^P0 + P0@P0 - P1@P1)";
    e.expected_r = "1/2*(F^K + P1^P0) + 1/sqrt(2)*(P1^K + K^P0)";
    e.expected_delta = {{"K", "1/sqrt(2)*(-K^P0 + K^P1)"},
                        {"F", "0"},
                        {"P0", "1/sqrt(2)*(P0^P1 + K^F) + 1/2*(P0^F + P1^F)"},
                        {"P1", "1/sqrt(2)*(P0^P1 + K^F) + 1/2*(P0^F + P1^F)"}};
    e.expected_verdict = Coisotropy::coisotropic;
    e.templ = ParametricTemplate{
        {"alpha1", "beta1"},
        "alpha1*(K^F + P0^P1) + beta1*(K^P1 + P0^K)",
        {{"alpha1", "-1/2"}, {"beta1", "-1/sqrt(2)"}},
        {{"x0", "x1", "-beta1*(x0 + x1)"},
         {"phi", "x0", "alpha1*(x0 + x1) + 1/2*beta1*(x0 + x1)^2"},
         {"phi", "x1", "alpha1*(x0 + x1) + 1/2*beta1*(x0 + x1)*(x0 - x1)"}}};
    e.defaults = {{"alpha1", "1"}, {"beta1", "1"}};
    out.push_back(e);
  }
  for (const std::string& id : ads_ids()) {
    const AdsRMatrix& m = ads_r_matrix(id);
    CatalogEntry e;
    e.id = "ADS-" + id;
    e.family = Family::ADS;
    e.title = "(anti-)de Sitter double r-matrix, " + m.sign_domain;
    e.kinematical = lambda_family();
    e.aliases = standard_aliases();
    e.expected_r = m.text;
    e.lorentz = {"J", "K1", "K2"};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "ISO31";
    e.family = Family::ISO31;
    e.title = "(3+1) Poincare algebra";
    e.kinematical = poincare31();
    out.push_back(e);
  }
  return out;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = build();
  return all;
}

}  // namespace

const LieAlgebra& poincare21() {
  static const LieAlgebra L = LieAlgebra::from_table(
      kP21, {{"J", "K1", "K2"}, {"J", "K2", "-K1"}, {"K1", "K2", "-J"}, {"J", "P1", "P2"},
             {"J", "P2", "-P1"}, {"K1", "P0", "P1"}, {"K1", "P1", "P0"}, {"K2", "P0", "P2"},
             {"K2", "P2", "P0"}});
  return L;
}

const LieAlgebra& extended11() {
  static const LieAlgebra L =
      LieAlgebra::from_table(kExt, {{"K", "P0", "P1"}, {"K", "P1", "P0"}, {"P1", "P0", "F"}});
  return L;
}

const LieAlgebra& poincare31() {
  static const LieAlgebra L = LieAlgebra::from_table(
      {"J1", "J2", "J3", "K1", "K2", "K3", "P0", "P1", "P2", "P3"},
      {{"J1", "J2", "J3"}, {"J2", "J3", "J1"}, {"J3", "J1", "J2"},
       {"J1", "K2", "K3"}, {"J1", "K3", "-K2"}, {"J2", "K3", "K1"},
       {"J2", "K1", "-K3"}, {"J3", "K1", "K2"}, {"J3", "K2", "-K1"},
       {"K1", "K2", "-J3"}, {"K2", "K3", "-J1"}, {"K3", "K1", "-J2"},
       {"J1", "P2", "P3"}, {"J1", "P3", "-P2"}, {"J2", "P3", "P1"},
       {"J2", "P1", "-P3"}, {"J3", "P1", "P2"}, {"J3", "P2", "-P1"},
       {"K1", "P0", "P1"}, {"K2", "P0", "P2"}, {"K3", "P0", "P3"},
       {"K1", "P1", "P0"}, {"K2", "P2", "P0"}, {"K3", "P3", "P0"}});
  return L;
}

const Realization& CatalogEntry::primary() const {
  for (const auto& r : realizations)
    if (r.primary) return r;
  throw std::logic_error(id + " has no realization");
}

LinearMap CatalogEntry::map(const Realization& r, const DoubleAlgebra& D) const {
  return LinearMap::from_images(kinematical, D.L, r.images, aliases);
}

Bivector CatalogEntry::expected_r_bivector() const {
  return parse_bivector(expected_r, kinematical.basis(), aliases);
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

const CatalogEntry& catalog(const std::string& id) {
  for (const auto& e : entries())
    if (e.id == id) return e;
  throw UnknownId(id);
}

DoubleAlgebra realize_double(const CatalogEntry& e, const Realization& r) {
  if (!e.triple) throw std::logic_error(e.id + " has no Manin triple");
  DoubleAlgebra D = assemble_double(*e.triple);
  if (!r.fixed.empty()) D.L = D.L.substitute(r.fixed);
  return D;
}

}  // namespace pdd
