#include "pdd/pipeline.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace pdd {

namespace {

// Runs fn, stamps the elapsed time on every check it added, and turns an
// escaping exception into a failed check named `name`.
void step(Report& rep, const std::string& name, const std::function<void()>& fn) {
  const std::size_t before = rep.checks.size();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn();
  } catch (const std::exception& ex) {
    rep.add(name, Status::fail, "", "", ex.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t i = before; i < rep.checks.size(); ++i) rep.checks[i].elapsed_ms = ms;
}

std::string str(const Bivector& b, const Names& n) { return b.to_string(n); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

const Realization* primary_of(const CatalogEntry& e) {
  for (const auto& r : e.realizations)
    if (r.primary) return &r;
  return nullptr;
}

Tensor2 expected_pairing_tensor(const CatalogEntry& e) {
  Tensor2 p = parse_tensor2(e.expected_pairing, e.kinematical.basis(), e.aliases);
  if (!e.pairing_lorentz_extra.empty())
    p = p + parse_tensor2(e.pairing_lorentz_extra, e.kinematical.basis(), e.aliases);
  return p;
}

void verify_triple_entry(const CatalogEntry& e, const RunOptions& opt, Report& rep) {
  const Names& kin = e.kinematical.basis();
  const ManinTriple& t = *e.triple;
  const Realization* prim = primary_of(e);

  step(rep, "cocycle", [&] {
    auto bad = cocycle_check(t.g, t.cocommutator());
    rep.expect("cocycle", bad.empty(), "no violations", std::to_string(bad.size()) + " violations");
  });
  step(rep, "co-Jacobi", [&] {
    auto bad = cojacobi_check(t.cocommutator());
    rep.expect("co-Jacobi", bad.empty(), "no violations", std::to_string(bad.size()) + " violations");
  });
  if (e.realizations.empty())
    step(rep, "double", [&] {
      DoubleAlgebra D = assemble_double(t);
      rep.expect("double Jacobi", jacobi_check(D.L).empty(), "no violations", "");
      rep.expect("pairing invariance", is_invariant_form(D.L, D.pairing), "invariant", "");
    });
  for (const auto& real : e.realizations) {
    const std::string tag = real.label.empty() ? "" : " [" + real.label + "]";
    step(rep, "double" + tag, [&] {
      DoubleAlgebra D = realize_double(e, real);
      auto bad = jacobi_check(D.L);
      rep.expect("double Jacobi" + tag, bad.empty(), "no violations", std::to_string(bad.size()) + " violations");
      rep.expect("pairing invariance" + tag, is_invariant_form(D.L, D.pairing), "invariant", "");
    });
    step(rep, "transport" + tag, [&] {
      DoubleAlgebra D = realize_double(e, real);
      LinearMap m = e.map(real, D);
      LinearMap full{e.kinematical, D.L, m.matrix};
      IsomorphismReport iso = check_isomorphism(full, real.domains, std::max<std::size_t>(opt.samples, 5),
                                                opt.seed, 1e-10);
      std::string actual = iso.exact ? "exact" : iso.failures.front();
      if (iso.samples) actual += ", " + std::to_string(iso.samples) + " samples, max " + fmt(iso.max_numeric_residual);
      if (!iso.numeric_note.empty()) actual += ", " + iso.numeric_note;
      rep.expect("transport" + tag, iso.ok(), "isomorphism onto the kinematical constants", actual, real.note);
    });
  }
  if (!prim) return;

  Transported tr;
  Bivector r;
  bool have_r = false;
  step(rep, "skew reduction", [&] {
    DoubleAlgebra D = realize_double(e, *prim);
    tr = transport(D, e.map(*prim, D), prim->domains);
    if (!e.expected_pairing.empty()) {
      Tensor2 exp = expected_pairing_tensor(e);
      rep.expect("pairing", tr.pairing == exp, exp.to_string(kin), tr.pairing.to_string(kin));
    }
    if (!e.expected_r_full.empty()) {
      Tensor2 exp = parse_tensor2(e.expected_r_full, kin, e.aliases);
      rep.expect("canonical r", tr.r == exp, exp.to_string(kin), tr.r.to_string(kin));
    }
    SkewReduction sr = skew_reduce(e.kinematical, tr.r);
    r = sr.r_skew;
    have_r = true;
    Bivector exp = e.expected_r_bivector();
    rep.expect("skew r", r == exp, str(exp, kin), str(r, kin));
  });
  if (!have_r) return;

  Cocommutator delta = coboundary_delta(e.kinematical, r);
  if (!e.expected_delta.empty()) {
    step(rep, "cocommutator", [&] {
      std::string exp, act;
      bool ok = true;
      for (const auto& [gen, lit] : e.expected_delta) {
        Bivector want = parse_bivector(lit, kin, e.aliases);
        const Bivector& got = delta.images[e.kinematical.index(gen)];
        ok = ok && want == got;
        exp += "d(" + gen + ") = " + str(want, kin) + "; ";
        act += "d(" + gen + ") = " + str(got, kin) + "; ";
      }
      rep.expect("cocommutator", ok, exp, act);
    });
  }

  std::optional<Coisotropy> verdict;
  step(rep, "coisotropy", [&] {
    std::vector<std::size_t> h;
    for (const auto& g : e.lorentz) h.push_back(e.kinematical.index(g));
    CoisotropyReport cr = coisotropy_classify(delta, SubalgebraSpec(e.kinematical, h));
    verdict = cr.verdict;
    std::string actual = to_string(cr.verdict);
    if (cr.witness) actual += ", witness d(" + kin[*cr.witness] + ") has " + str(cr.offending, kin);
    if (e.expected_verdict)
      rep.expect("coisotropy", cr.verdict == *e.expected_verdict, to_string(*e.expected_verdict), actual);
    else
      rep.add("coisotropy", Status::skip, "", actual, "no recorded verdict");
    if (!e.expected_witness_generator.empty()) {
      Bivector want = parse_bivector(e.expected_witness_terms, kin, e.aliases);
      bool ok = cr.witness && kin[*cr.witness] == e.expected_witness_generator && cr.offending == want;
      rep.expect("coisotropy witness", ok, e.expected_witness_generator + ": " + str(want, kin),
                 cr.witness ? kin[*cr.witness] + ": " + str(cr.offending, kin) : "none");
    }
  });

  step(rep, "mCYBE", [&] {
    McybeReport m = mcybe_check(e.kinematical, r);
    rep.expect("mCYBE", m.verdict == Mcybe::quasitriangular, "quasitriangular", to_string(m.verdict),
               "[[r,r]] = " + m.bracket.to_string(kin));
  });

  if (e.family == Family::P21 && (e.derived_witness || e.witness)) {
    step(rep, "class", [&] {
      const WitnessSpec& w = e.derived_witness ? *e.derived_witness : *e.witness;
      try {
        Classification c = classify(r, w, e.aliases, prim->domains);
        rep.expect("class", c.cls == e.expected_class, e.expected_class, c.cls,
                   "mu = " + c.invariants.mu.to_string() + ", p = " + c.invariants.p.to_string());
      } catch (const WitnessFailed& wf) {
        rep.add("class", Status::fail, e.expected_class, "witness residual " + str(wf.residual, kin), wf.what());
      }
    });
  }

  step(rep, "spacetime", [&] {
    if (!verdict || *verdict == Coisotropy::neither) {
      rep.add("spacetime", Status::skip, "", "", "projection not closed: h is not coisotropic");
      return;
    }
    std::vector<SpacetimeBracket> printed = e.spacetime;
    Bindings at;
    if (printed.empty() && e.templ) {
      printed = e.templ->spacetime;
      for (const auto& [k, v] : e.templ->dd_point) at[k] = substitute_numeric(parse_scalar(v, e.aliases), {});
    }
    if (printed.empty()) {
      rep.add("spacetime", Status::skip, "", "", "no printed spacetime");
      return;
    }
    PoissonTable table = poisson_fit(r, effective_bindings(e, opt), chart_for(e.family), rep_for(e.family),
                                     {opt.samples, opt.seed, 1e-8, 1e-8});
    SpacetimeComparison cmp = compare_spacetime(table, printed, at, e.aliases);
    rep.expect("spacetime", cmp.max_error < 1e-8, "printed brackets", table.to_string(),
               "max coefficient error " + fmt(cmp.max_error) + (cmp.worst.empty() ? "" : " at " + cmp.worst));
    double jr = jacobi_poisson(table);
    rep.expect("spacetime Jacobi", jr <= opt.tol, "0 (up to irrational coefficients left unsnapped)", fmt(jr));
  });
}

void verify_ads_entry(const CatalogEntry& e, Report& rep) {
  const AdsRMatrix& m = ads_r_matrix(e.id);
  const Names& kin = e.kinematical.basis();
  step(rep, "Jacobi", [&] {
    rep.expect("Jacobi", jacobi_check(lambda_family()).empty(), "no violations", "");
  });
  step(rep, "mCYBE", [&] {
    McybeReport mc = mcybe_check(lambda_family(), m.r);
    rep.expect("mCYBE", mc.verdict != Mcybe::fails, "quasitriangular or triangular", to_string(mc.verdict),
               "[[r,r]] = " + mc.bracket.to_string(kin));
  });
  for (const auto& lim : m.limits) {
    const std::string name = "limit k=" + std::to_string(lim.k);
    step(rep, name, [&] {
      try {
        Bivector got = contract(m, lim.k);
        if (lim.divergent) {
          rep.add(name, Status::fail, "Divergent", str(got, kin));
          return;
        }
        Bivector want = parse_bivector(lim.limit, kin, e.aliases);
        rep.expect(name, got == want, str(want, kin), str(got, kin));
      } catch (const Divergent& d) {
        rep.expect(name, lim.divergent, lim.divergent ? "Divergent" : lim.limit, "Divergent", d.what());
      }
    });
  }
}

void verify_iso31(const CatalogEntry& e, Report& rep) {
  step(rep, "Jacobi", [&] {
    rep.expect("Jacobi", jacobi_check(e.kinematical).empty(), "no violations", "");
  });
  step(rep, "invariant forms", [&] {
    InvariantForms f = invariant_symmetric_forms(e.kinematical);
    rep.expect("invariant forms degenerate", f.generic_determinant.is_zero() && !f.some_nondegenerate,
               "det identically 0", "det = " + f.generic_determinant.to_string(),
               "dimension " + std::to_string(f.basis.size()));
  });
}

}  // namespace

Bindings effective_bindings(const CatalogEntry& e, const RunOptions& opt) {
  Bindings b;
  for (const auto& [k, v] : e.defaults) b[k] = substitute_numeric(parse_scalar(v, e.aliases), {});
  for (const auto& [k, v] : opt.params) b[k] = v;
  return b;
}

const Chart& chart_for(Family f) {
  static const Chart p = Chart::poincare21(), x = Chart::extended11();
  if (f == Family::P21) return p;
  if (f == Family::EXT11) return x;
  throw std::invalid_argument("no group chart for this family");
}

const MatrixRep& rep_for(Family f) {
  static const MatrixRep p = MatrixRep::poincare21(), x = MatrixRep::extended11();
  if (f == Family::P21) return p;
  if (f == Family::EXT11) return x;
  throw std::invalid_argument("no matrix representation for this family");
}

SpacetimeComparison compare_spacetime(const PoissonTable& t, const std::vector<SpacetimeBracket>& printed,
                                      const Bindings& b, const std::map<std::string, Scalar>& aliases) {
  SpacetimeComparison out;
  auto idx = [&](const std::string& n) -> std::size_t {
    for (std::size_t i = 0; i < t.vars.size(); ++i)
      if (t.vars[i] == n) return i;
    throw std::invalid_argument("coordinate " + n + " is not homogeneous");
  };
  for (const auto& br : printed) {
    const std::size_t a = idx(br.a), c = idx(br.b);
    auto want = polynomial_coefficients(parse_scalar(br.value, aliases), t.vars, b);
    std::set<MonomialKey> keys;
    for (const auto& [k, v] : want) keys.insert(k);
    const std::size_t lo = std::min(a, c), hi = std::max(a, c);
    for (const auto& e : t.entries)
      if (e.a == lo && e.b == hi)
        for (const auto& [k, v] : e.coeffs) keys.insert(k);
    for (const auto& k : keys) {
      double w = want.count(k) ? want.at(k) : 0.0;
      double err = std::abs(t.coeff(a, c, k) - w);
      if (err > out.max_error) {
        out.max_error = err;
        out.worst = "{" + br.a + "," + br.b + "}";
      }
    }
  }
  return out;
}

Bivector pipeline_r(const CatalogEntry& e) {
  const Realization* prim = primary_of(e);
  if (!e.triple || !prim) throw std::invalid_argument(e.id + " has no double");
  DoubleAlgebra D = realize_double(e, *prim);
  Transported tr = transport(D, e.map(*prim, D), prim->domains);
  return skew_reduce(e.kinematical, tr.r).r_skew;
}

Report verify_entry(const CatalogEntry& e, const RunOptions& opt) {
  Report rep{"verify", e.id, {}, {}};
  rep.info.emplace_back("title", e.title);
  if (e.triple)
    verify_triple_entry(e, opt, rep);
  else if (e.family == Family::ADS)
    verify_ads_entry(e, rep);
  else
    verify_iso31(e, rep);
  return rep;
}

Report catalog_show(const CatalogEntry& e) {
  Report rep{"catalog show", e.id, {}, {}};
  const Names& kin = e.kinematical.basis();
  rep.info.emplace_back("title", e.title);
  rep.info.emplace_back("kinematical brackets", e.kinematical.bracket_table());
  if (e.triple) {
    rep.info.emplace_back("g brackets", e.triple->g.bracket_table());
    rep.info.emplace_back("dual brackets", e.triple->dual.bracket_table());
    for (const auto& c : e.triple->constraints) rep.info.emplace_back("constraint", c);
    for (const auto& r : e.realizations) {
      std::string images;
      for (std::size_t i = 0; i < r.images.size(); ++i)
        images += (i ? ", " : "") + kin[i] + " = " + r.images[i];
      rep.info.emplace_back("map" + (r.label.empty() ? "" : " [" + r.label + "]"), images);
    }
  }
  if (!e.expected_pairing.empty()) rep.info.emplace_back("pairing", e.expected_pairing);
  if (!e.expected_r_full.empty()) rep.info.emplace_back("r", e.expected_r_full);
  if (!e.expected_r.empty()) rep.info.emplace_back("r'", str(e.expected_r_bivector(), kin));
  if (e.expected_verdict) rep.info.emplace_back("coisotropy", to_string(*e.expected_verdict));
  if (!e.expected_class.empty()) rep.info.emplace_back("class", e.expected_class);
  for (const auto& s : e.spacetime) rep.info.emplace_back("{" + s.a + "," + s.b + "}", s.value);
  if (e.templ) {
    rep.info.emplace_back("template r", e.templ->r);
    for (const auto& s : e.templ->spacetime) rep.info.emplace_back("{" + s.a + "," + s.b + "}", s.value);
  }
  for (const auto& n : e.notes) rep.info.emplace_back("note", n);
  return rep;
}

Report contract_report(const std::string& id, int rescale) {
  const AdsRMatrix& m = ads_r_matrix(id);
  Report rep{"contract", "ADS-" + m.id, {}, {}};
  const Names& kin = lambda_family().basis();
  rep.info.emplace_back("r", m.text);
  rep.info.emplace_back("rescale", std::to_string(rescale));
  const AdsLimit* stored = nullptr;
  for (const auto& l : m.limits)
    if (l.k == rescale) stored = &l;
  step(rep, "limit", [&] {
    try {
      Bivector got = contract(m, rescale);
      rep.info.emplace_back("limit", str(got, kin));
      if (!stored)
        rep.add("limit", Status::skip, "", str(got, kin), "no stored expectation for this rescaling");
      else if (stored->divergent)
        rep.add("limit", Status::fail, "Divergent", str(got, kin));
      else {
        Bivector want = parse_bivector(stored->limit, kin, standard_aliases());
        rep.expect("limit", got == want, str(want, kin), str(got, kin));
      }
    } catch (const Divergent& d) {
      rep.info.emplace_back("limit", "Divergent");
      rep.add("limit", Status::fail, stored && !stored->divergent ? stored->limit : "finite limit", "Divergent",
              d.what());
    }
  });
  return rep;
}

Report spacetime_report(const CatalogEntry& e, const RunOptions& opt) {
  Report rep{"spacetime", e.id, {}, {}};
  if (e.family != Family::P21 && e.family != Family::EXT11)
    throw std::invalid_argument(e.id + " has no group chart");
  const Names& kin = e.kinematical.basis();
  Bindings b = effective_bindings(e, opt);
  Bivector r = e.templ ? parse_bivector(e.templ->r, kin, e.aliases) : e.expected_r_bivector();
  const auto& printed = e.templ ? e.templ->spacetime : e.spacetime;
  rep.info.emplace_back("r", str(r, kin));
  for (const auto& [k, v] : b) rep.info.emplace_back("param " + k, fmt(v));
  step(rep, "fit", [&] {
    try {
      PoissonTable t = poisson_fit(r, b, chart_for(e.family), rep_for(e.family),
                                   {opt.samples, opt.seed, std::max(opt.tol, 1e-12), 1e-8});
      for (const auto& en : t.entries)
        rep.info.emplace_back("{" + t.vars[en.a] + "," + t.vars[en.b] + "}",
                              exact_bracket(t, en.a, en.b).to_string());
      rep.expect("fit residual", true, "< " + fmt(opt.tol), fmt(t.residual));
      double jr = jacobi_poisson(t);
      rep.expect("Jacobi", jr == 0.0, "0", fmt(jr));
      if (!printed.empty()) {
        SpacetimeComparison cmp = compare_spacetime(t, printed, b, e.aliases);
        rep.expect("printed brackets", cmp.max_error < 1e-8, "max error < 1e-8", fmt(cmp.max_error), cmp.worst);
      }
    } catch (const NotCoisotropic& nc) {
      std::vector<std::size_t> h;
      for (const auto& g : e.lorentz) h.push_back(e.kinematical.index(g));
      CoisotropyReport cr = coisotropy_classify(coboundary_delta(e.kinematical, r), SubalgebraSpec(e.kinematical, h));
      rep.add("coisotropy", Status::fail, "coisotropic",
              cr.witness ? "d(" + kin[*cr.witness] + ") contains " + str(cr.offending, kin) : "neither", nc.what());
    } catch (const FitResidualExceeded& fr) {
      rep.add("fit residual", Status::fail, "< " + fmt(opt.tol), fmt(fr.table.residual), fr.what());
    }
  });
  return rep;
}

Report classify_report(const CatalogEntry& e) {
  Report rep{"classify", e.id, {}, {}};
  const Names& kin = e.kinematical.basis();
  step(rep, "class", [&] {
    try {
      Classification c = classify(e);
      rep.info.emplace_back("r'", str(e.expected_r_bivector(), kin));
      rep.info.emplace_back("mu", c.invariants.mu.to_string());
      rep.info.emplace_back("p", c.invariants.p.to_string());
      rep.info.emplace_back("transformed", str(c.check.transformed, kin));
      rep.expect("class", c.cls == e.expected_class, e.expected_class, c.cls);
    } catch (const WitnessFailed& wf) {
      rep.add("class", Status::fail, e.expected_class, "residual " + str(wf.residual, kin), wf.what());
    }
  });
  return rep;
}

Report schouten_report(const LieAlgebra& L, const Bivector& r, const std::string& subject) {
  Report rep{"schouten", subject, {}, {}};
  McybeReport m = mcybe_check(L, r);
  rep.info.emplace_back("r", str(r, L.basis()));
  rep.info.emplace_back("[[r,r]]", m.bracket.to_string(L.basis()));
  rep.info.emplace_back("mCYBE", to_string(m.verdict));
  return rep;
}

}  // namespace pdd
