#include "pdd/triple_file.hpp"

#include <cctype>
#include <fstream>

namespace pdd {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
  if (!j.contains(key)) throw TripleFileError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Scalar coeff(const std::string& s, const std::map<std::string, Scalar>& aliases, const std::string& where) {
  try {
    return parse_scalar(s, aliases);
  } catch (const std::exception& e) {
    throw TripleFileError(where + ": " + e.what());
  }
}

LieAlgebra bracket_table(const Names& basis, const json& rows, const std::map<std::string, Scalar>& aliases,
                         const std::string& field) {
  const std::size_t d = basis.size();
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets;
  std::size_t row = 0;
  for (const auto& r : rows) {
    const std::string where = field + "[" + std::to_string(row++) + "]";
    if (!r.is_array() || r.size() != 4) throw TripleFileError(where + ": expected [i, j, k, \"coeff\"]");
    std::size_t i = r[0].get<std::size_t>(), j = r[1].get<std::size_t>(), k = r[2].get<std::size_t>();
    if (i >= d || j >= d || k >= d) throw TripleFileError(where + ": index out of range");
    Scalar v = coeff(r[3].get<std::string>(), aliases, where);
    if (i == j) {
      if (!v.is_zero()) throw TripleFileError(where + ": nonzero bracket of an element with itself");
      continue;
    }
    // canonical orientation i < j
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    Vec& slot = brackets.try_emplace({i, j}, Vec(d)).first->second;
    if (!slot[k].is_zero() && slot[k] != v)
      throw TripleFileError(where + ": conflicts with an earlier entry for the same component");
    slot[k] = v;
  }
  LieAlgebra L(basis);
  for (const auto& [key, v] : brackets) L.set_bracket(key.first, key.second, v);
  return L;
}

Names default_dual(const Names& basis) {
  Names out;
  for (const auto& n : basis) {
    std::string m = n;
    m[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(m[0])));
    out.push_back(m == n ? "d" + n : m);
  }
  return out;
}

std::string str_or(const json& j, const char* key, const std::string& dflt = "") {
  return j.contains(key) ? j.at(key).get<std::string>() : dflt;
}

std::optional<Coisotropy> verdict_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (Coisotropy c : {Coisotropy::poisson_subgroup, Coisotropy::coisotropic, Coisotropy::neither})
    if (to_string(c) == s) return c;
  throw TripleFileError("unknown verdict " + s);
}

}  // namespace

CatalogEntry triple_from_json(const json& j, const std::string& fallback_name) {
  try {
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kTripleFileVersion)
      throw TripleFileError("unsupported schema_version");
    const std::size_t d = need(j, "dim").get<std::size_t>();
    Names basis = need(j, "basis").get<Names>();
    if (basis.size() != d) throw TripleFileError("basis has " + std::to_string(basis.size()) + " names, dim is " +
                                                 std::to_string(d));
    Names dual = j.contains("dual_basis") ? j.at("dual_basis").get<Names>() : default_dual(basis);
    if (dual.size() != d) throw TripleFileError("dual_basis has the wrong length");

    CatalogEntry e;
    e.id = str_or(j, "name", fallback_name);
    e.title = str_or(j, "title", "user-defined triple");
    e.aliases = standard_aliases();
    if (j.contains("radicals"))
      for (const auto& r : j.at("radicals"))
        e.aliases[need(r, "name").get<std::string>()] =
            Scalar::sqrt(coeff(need(r, "square").get<std::string>(), e.aliases, "radicals"));

    Realization real;
    std::vector<std::string> constraints;
    if (j.contains("params"))
      for (const auto& p : j.at("params")) {
        const std::string name = need(p, "name").get<std::string>();
        if (p.contains("constraints")) constraints.push_back(p.at("constraints").get<std::string>());
        if (p.contains("domain")) {
          auto dom = p.at("domain").get<std::vector<double>>();
          if (dom.size() != 2) throw TripleFileError("domain of " + name + " must be [lo, hi]");
          real.domains.push_back({name, dom[0], dom[1]});
        }
        if (p.contains("value")) real.fixed[name] = coeff(p.at("value").get<std::string>(), e.aliases, name);
      }

    e.triple = ManinTriple{bracket_table(basis, need(j, "c"), e.aliases, "c"),
                           bracket_table(dual, need(j, "f"), e.aliases, "f"), constraints};

    if (j.contains("kinematical_map")) {
      const json& km = j.at("kinematical_map");
      const std::string alg = need(km, "algebra").get<std::string>();
      if (alg == "P21") {
        e.family = Family::P21;
        e.kinematical = poincare21();
        e.lorentz = {"J", "K1", "K2"};
      } else if (alg == "EXT11") {
        e.family = Family::EXT11;
        e.kinematical = extended11();
        e.lorentz = {"K"};
      } else {
        throw TripleFileError("kinematical_map.algebra must be P21 or EXT11");
      }
      const auto rows = need(km, "matrix").get<std::vector<std::vector<std::string>>>();
      if (rows.size() != 2 * d || e.kinematical.dim() != 2 * d)
        throw TripleFileError("kinematical_map.matrix needs one row per kinematical generator");
      Names dbl = basis;
      dbl.insert(dbl.end(), dual.begin(), dual.end());
      for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != 2 * d) throw TripleFileError("kinematical_map.matrix row has the wrong length");
        std::string img;
        for (std::size_t b = 0; b < rows[a].size(); ++b) {
          if (coeff(rows[a][b], e.aliases, "kinematical_map").is_zero()) continue;
          img += (img.empty() ? "" : " + ") + ("(" + rows[a][b] + ")*" + dbl[b]);
        }
        real.images.push_back(img.empty() ? "0" : img);
      }
      if (km.contains("label")) real.label = km.at("label").get<std::string>();
      e.realizations.push_back(real);
    }

    if (j.contains("expected")) {
      const json& x = j.at("expected");
      e.expected_r = str_or(x, "r");
      e.expected_r_full = str_or(x, "r_full");
      e.expected_pairing = str_or(x, "pairing");
      e.pairing_lorentz_extra = str_or(x, "pairing_lorentz_extra");
      if (x.contains("delta"))
        for (const auto& p : x.at("delta")) e.expected_delta.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
      e.expected_verdict = verdict_from(str_or(x, "verdict"));
      e.expected_witness_generator = str_or(x, "witness_generator");
      e.expected_witness_terms = str_or(x, "witness_terms");
      e.expected_class = str_or(x, "class");
      if (x.contains("witness")) {
        const json& w = x.at("witness");
        WitnessSpec spec;
        spec.cls = need(w, "class").get<std::string>();
        spec.images = need(w, "images").get<std::vector<std::string>>();
        spec.constant = need(w, "constant").get<std::string>();
        spec.alpha = str_or(w, "alpha", "0");
        spec.rho = str_or(w, "rho", "0");
        if (w.contains("a")) {
          auto a = w.at("a").get<std::vector<std::string>>();
          if (a.size() != 3) throw TripleFileError("witness.a needs three entries");
          spec.a = {a[0], a[1], a[2]};
        }
        if (w.contains("pre")) spec.pre = w.at("pre").get<std::vector<std::vector<std::string>>>();
        e.derived_witness = spec;
      }
      if (x.contains("spacetime"))
        for (const auto& s : x.at("spacetime"))
          e.spacetime.push_back({s.at(0).get<std::string>(), s.at(1).get<std::string>(), s.at(2).get<std::string>()});
    }
    if (j.contains("defaults"))
      for (const auto& [k, v] : j.at("defaults").items()) e.defaults[k] = v.get<std::string>();
    if (!e.expected_r.empty() && e.kinematical.dim() == 0)
      throw TripleFileError("expected.r needs a kinematical_map");
    return e;
  } catch (const json::exception& ex) {
    throw TripleFileError(std::string("malformed triple file: ") + ex.what());
  }
}

CatalogEntry load_triple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TripleFileError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw TripleFileError(path + ": " + ex.what());
  }
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return triple_from_json(j, stem);
}

}  // namespace pdd
