#include "pdd/contraction.hpp"

#include <algorithm>

namespace pdd {

namespace {

const Names kKinematical{"J", "K1", "K2", "P0", "P1", "P2"};

AdsRMatrix make(const std::string& id, const std::string& text, bool de_sitter,
                Domains extra, std::vector<AdsLimit> limits) {
  AdsRMatrix m;
  m.id = id;
  m.text = text;
  m.r = parse_bivector(text, kKinematical, standard_aliases());
  m.scale = de_sitter ? ContractionScale::de_sitter() : ContractionScale::anti_de_sitter();
  m.domains.push_back(de_sitter ? ParamDomain{"Lambda", 0.25, 4.0} : ParamDomain{"Lambda", -4.0, -0.25});
  m.domains.insert(m.domains.end(), extra.begin(), extra.end());
  m.sign_domain = de_sitter ? "Lambda > 0" : "Lambda < 0";
  m.limits = std::move(limits);
  return m;
}

const std::vector<AdsRMatrix>& table() {
  static const std::vector<AdsRMatrix> t = [] {
    const std::string r0 = "1/2*(-P0^J - P1^K2 + P2^K1)";
    const std::string cf = "1/2*(P0^K2 + P1^J - P2^K1)";
    return std::vector<AdsRMatrix>{
        make("A", "eta*K1^K2 + 1/2*(-P0^J - P1^K2 + P2^K1)", true, {}, {{0, false, r0}}),
        make("B", "1/eta*P2^P1 + 1/2*(-P0^J + P1^K2 - P2^K1)", true, {},
             {{0, true, ""}, {1, false, "P2^P1"}}),
        make("C", cf, true, {}, {{0, false, cf}}),
        make("D",
             "eta*J^K1 + 1/eta*P2^P0 + (1+mu^2)/(2*mu)*P1^K2 + (mu^2-1)/(2*mu)*(-P2^J + P0^K1)",
             true, {{"mu", 0.25, 4.0}}, {{0, true, ""}, {1, false, "P2^P0"}}),
        make("E", "zeta*J^K1 + 1/2*(-P0^J - P1^K2 + P2^K1)", false, {}, {{0, false, r0}}),
        make("F", cf, false, {}, {{0, false, cf}}),
        make("G",
             "(1+rho^2)/4*(P0^K2 + P1^J) - rho/2*P2^K1 + (1-rho^2)/(4*zeta)*(Lambda*J^K2 + P0^P1)",
             false, {{"rho", -0.9, 0.9}}, {{0, true, ""}, {1, false, "(1-rho^2)/4*P0^P1"}}),
    };
  }();
  return t;
}

}  // namespace

const LieAlgebra& lambda_family() {
  static const LieAlgebra L = LieAlgebra::from_table(
      kKinematical, {{"J", "K1", "K2"},
                     {"J", "K2", "-K1"},
                     {"K1", "K2", "-J"},
                     {"J", "P1", "P2"},
                     {"J", "P2", "-P1"},
                     {"K1", "P0", "P1"},
                     {"K1", "P1", "P0"},
                     {"K2", "P0", "P2"},
                     {"K2", "P2", "P0"},
                     {"P0", "P1", "-Lambda*K1"},
                     {"P0", "P2", "-Lambda*K2"},
                     {"P1", "P2", "Lambda*J"}});
  return L;
}

LieAlgebra family_at(const Scalar& lambda) { return lambda_family().substitute({{"Lambda", lambda}}); }

const std::vector<std::string>& ads_ids() {
  static const std::vector<std::string> ids{"A", "B", "C", "D", "E", "F", "G"};
  return ids;
}

const AdsRMatrix& ads_r_matrix(const std::string& id) {
  std::string key = id.rfind("ADS-", 0) == 0 ? id.substr(4) : id;
  for (const auto& m : table())
    if (m.id == key) return m;
  throw std::invalid_argument("unknown (A)dS case: " + id);
}

LinearMap basis_map(const std::string& id) {
  const AdsRMatrix& m = ads_r_matrix(id);
  std::vector<std::string> images;
  if (m.id == "B" || m.id == "D")
    images = {"J", "1/eta*P2", "-1/eta*P1", "-P0", "eta*K1", "eta*K2"};
  else
    images = {"J", "-K2", "K1", "P0", "P1", "P2"};
  const Names source_names{"J0", "J1", "J2", "P0", "P1", "P2"};
  LieAlgebra placeholder(source_names);
  LinearMap map = LinearMap::from_images(placeholder, lambda_family(), images, standard_aliases());
  Tensor2 inv = inverse(map.matrix);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      map.source.set_bracket(a, b, inv.apply(lambda_family().bracket(map.image(a), map.image(b))));
  return map;
}

Bivector contract(const AdsRMatrix& r, int k) {
  Bivector out(r.r.dim());
  for (const auto& [key, v] : r.r.terms()) {
    try {
      Scalar lim = laurent_leading(v, k, r.scale);
      if (!lim.is_zero()) out.add(key.first, key.second, lim);
    } catch (const Divergent& e) {
      throw Divergent("coefficient of " + kKinematical[key.first] + "^" + kKinematical[key.second] +
                      " (" + v.to_string() + "): " + e.what());
    }
  }
  return out;
}

}  // namespace pdd
