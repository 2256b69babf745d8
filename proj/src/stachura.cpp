#include "pdd/stachura.hpp"

namespace pdd {

namespace {

constexpr std::size_t kN = 6;
constexpr std::size_t kJ = 0, kK1 = 1, kK2 = 2, kP0 = 3, kP1 = 4, kP2 = 5;

bool in_t(std::size_t i) { return i >= kP0; }

Bivector bv(std::initializer_list<std::tuple<std::size_t, std::size_t, Scalar>> terms) {
  Bivector out(kN);
  for (const auto& [i, j, v] : terms) out.add(i, j, v);
  return out;
}

// Returns s with t == s * ref, or throws.
Scalar proportionality(const Trivector& t, const Trivector& ref, const std::string& what) {
  if (t.is_zero()) return Scalar(0);
  const auto& [key, v0] = *ref.terms().begin();
  Scalar s = t.coeff(key[0], key[1], key[2]) / v0;
  if (!(s * ref == t)) throw NotProportional(what + " is not a multiple of the reference tensor");
  return s;
}

}  // namespace

RDecomposition decompose(const Bivector& r) {
  RDecomposition d{Bivector(r.dim()), Bivector(r.dim()), Bivector(r.dim())};
  for (const auto& [key, v] : r.terms()) {
    const int nt = int(in_t(key.first)) + int(in_t(key.second));
    (nt == 2 ? d.a : nt == 1 ? d.b : d.c).add(key.first, key.second, v);
  }
  return d;
}

const Trivector& omega_ref() {
  static const Trivector t = [] {
    Bivector b = canonical_form("IV");
    return Scalar::rational(1, 2) * schouten(poincare21(), b);
  }();
  return t;
}

MuP invariants_mu_p(const Bivector& r) {
  const LieAlgebra& L = poincare21();
  RDecomposition d = decompose(r);
  Trivector ab = schouten(L, d.a, d.b);
  Trivector eta(kN);
  eta.add(kP0, kP1, kP2, Scalar(1));
  Trivector s = Scalar(2) * schouten(L, d.a, d.c) + schouten(L, d.b);
  return {proportionality(s, omega_ref(), "2[[a,c]] + [[b,b]]"), proportionality(ab, eta, "[[a,b]]")};
}

Bivector apply_automorphism(const Bivector& r, const LinearMap& m, const Domains& domains) {
  IsomorphismReport rep = check_isomorphism(m, domains);
  if (!rep.ok())
    throw NotAutomorphism(rep.failures.empty() ? "numeric residual " + std::to_string(rep.max_numeric_residual)
                                               : rep.failures.front());
  return m.push(r);
}

Bivector canonical_form(const std::string& cls, const Scalar& alpha, const Scalar& rho,
                        const std::array<Scalar, 3>& a) {
  const Scalar one(1);
  const Scalar s2 = Scalar::sqrt(2).inverse();
  Bivector at = bv({{kP0, kP1, a[0]}, {kP0, kP2, a[1]}, {kP1, kP2, a[2]}});
  Bivector iv = bv({{kP0, kJ, -one}, {kP1, kK2, -one}, {kP2, kK1, one}});
  if (cls == "I") return bv({{kK1, kJ, s2}, {kK1, kK2, s2}}) + alpha * iv;
  if (cls == "IIa") return bv({{kP2, kK1, rho}, {kP1, kJ, -alpha}, {kP0, kK2, -alpha}}) + at;
  if (cls == "IIb") return bv({{kP0, kJ, -rho}, {kP1, kK1, -alpha}, {kP2, kK2, -alpha}}) + at;
  if (cls == "IIc") {
    Scalar h = alpha * s2;
    return bv({{kP2, kJ, -h}, {kP2, kK2, -h}, {kP0, kK1, h}, {kP1, kK1, -h}, {kP0, kJ, -rho}, {kP0, kK2, -rho},
               {kP1, kJ, rho}, {kP1, kK2, rho}}) +
           at;
  }
  if (cls == "IIIa") return bv({{kP0, kK1, s2}, {kP1, kK1, -s2}}) + at;
  if (cls == "IIIb")
    return bv({{kP0, kJ, -one}, {kP1, kJ, one - rho}, {kP0, kK2, -(rho + one)}, {kP1, kK2, one}, {kP2, kK1, rho}}) +
           at;
  if (cls == "IV") return iv;
  if (cls == "V") return at;
  throw Unclassified("unknown class " + cls);
}

ClassWitness make_witness(const WitnessSpec& spec, const std::map<std::string, Scalar>& aliases) {
  const LieAlgebra& L = poincare21();
  LinearMap m = LinearMap::from_images(L, L, spec.images, aliases);
  for (auto it = spec.pre.rbegin(); it != spec.pre.rend(); ++it)
    m = m.compose_after(LinearMap::from_images(L, L, *it, aliases));
  auto num = [&](const std::string& s) { return parse_scalar(s, aliases); };
  return {spec.cls, m, num(spec.constant), num(spec.alpha), num(spec.rho),
          {num(spec.a[0]), num(spec.a[1]), num(spec.a[2])}};
}

WitnessCheck verify_witness(const Bivector& r, const ClassWitness& w, const Domains& domains) {
  WitnessCheck c;
  c.transformed = apply_automorphism(r, w.automorphism, domains);
  c.expected = w.constant * canonical_form(w.cls, w.alpha, w.rho, w.a);
  c.residual = c.transformed - c.expected;
  return c;
}

Classification classify(const Bivector& r, const WitnessSpec& spec, const std::map<std::string, Scalar>& aliases,
                        const Domains& domains) {
  ClassWitness w = make_witness(spec, aliases);
  Classification out;
  out.cls = w.cls;
  out.check = verify_witness(r, w, domains);
  if (!out.check.ok())
    throw WitnessFailed("witness for class " + w.cls + " leaves a residual", out.check.residual);
  out.invariants = invariants_mu_p(r);
  out.canonical_invariants = invariants_mu_p(out.check.expected);
  return out;
}

Classification classify(const CatalogEntry& e) {
  if (e.family != Family::P21 || !e.witness) throw Unclassified(e.id + " carries no class witness");
  Domains domains;
  for (const auto& real : e.realizations)
    if (real.primary) domains = real.domains;
  Classification c = classify(e.expected_r_bivector(), *e.witness, e.aliases, domains);
  const bool p_must_vanish = c.cls == "I" || c.cls == "IV" || c.cls == "V" ||
                             (e.expected_verdict && *e.expected_verdict != Coisotropy::neither);
  if (p_must_vanish && !c.invariants.p.is_zero())
    throw WitnessFailed(e.id + ": p = " + c.invariants.p.to_string() + " where it must vanish", Bivector(kN));
  return c;
}

}  // namespace pdd
