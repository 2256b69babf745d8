#include "pdd/bialg.hpp"

#include <algorithm>

namespace pdd {

bool Cocommutator::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Bivector& b) { return b.is_zero(); });
}

Cocommutator Cocommutator::from_dual(const LieAlgebra& dual) {
  const std::size_t n = dual.dim();
  Cocommutator d(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (!dual.c(j, k, i).is_zero()) d.images[i].add(j, k, dual.c(j, k, i));
  return d;
}

LieAlgebra Cocommutator::dual_algebra(const Names& dual_basis) const {
  if (dual_basis.size() != dim()) throw DimensionMismatch("dual basis size");
  LieAlgebra out(dual_basis);
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = j + 1; k < dim(); ++k) {
      Vec v(dim());
      for (std::size_t i = 0; i < dim(); ++i) v[i] = f(i, j, k);
      out.set_bracket(j, k, v);
    }
  return out;
}

std::string Cocommutator::to_string(const Names& names) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i)
    out += "delta(" + names[i] + ") = " + images[i].to_string(names) + "\n";
  return out;
}

std::vector<CocycleViolation> cocycle_check(const LieAlgebra& L, const Cocommutator& delta) {
  const std::size_t n = L.dim();
  if (delta.dim() != n) throw DimensionMismatch("cocommutator and algebra differ in dimension");
  std::vector<Scalar> f(n * n * n);
  auto F = [&](std::size_t i, std::size_t l, std::size_t m) -> Scalar& { return f[(i * n + l) * n + m]; };
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [key, v] : delta.images[i].terms()) {
      F(i, key.first, key.second) = v;
      F(i, key.second, key.first) = -v;
    }
  std::vector<CocycleViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = l + 1; m < n; ++m) {
          Scalar res;
          for (std::size_t k = 0; k < n; ++k) {
            res += F(k, l, m) * L.c(i, j, k);
            res -= F(i, l, k) * L.c(k, j, m) + F(i, k, m) * L.c(k, j, l) +
                   F(j, l, k) * L.c(i, k, m) + F(j, k, m) * L.c(i, k, l);
          }
          if (!res.is_zero()) out.push_back({i, j, l, m, res});
        }
  return out;
}

std::vector<JacobiViolation> cojacobi_check(const Cocommutator& delta) {
  Names anon(delta.dim());
  for (std::size_t i = 0; i < anon.size(); ++i) anon[i] = "x" + std::to_string(i);
  return jacobi_check(delta.dual_algebra(anon));
}

Cocommutator coboundary_delta(const LieAlgebra& L, const Bivector& r) {
  Cocommutator d(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) d.images[i] = adjoint(L, i, r);
  return d;
}

namespace {

// Full three-index tensor of [[r,s]] in the polarised form, read on a<b<c.
Trivector schouten_full(const LieAlgebra& L, const Tensor2& R, const Tensor2& S) {
  const std::size_t n = L.dim();
  Trivector out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Scalar t;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k) {
            // [r12,s13] + [r12,s23] + [r13,s23]
            if (!L.c(i, k, a).is_zero() && !R(i, b).is_zero() && !S(k, c).is_zero())
              t += L.c(i, k, a) * R(i, b) * S(k, c);
            if (!L.c(i, k, b).is_zero() && !R(a, i).is_zero() && !S(k, c).is_zero())
              t += R(a, i) * S(k, c) * L.c(i, k, b);
            if (!L.c(i, k, c).is_zero() && !R(a, i).is_zero() && !S(b, k).is_zero())
              t += R(a, i) * S(b, k) * L.c(i, k, c);
          }
        if (!t.is_zero()) out.add(a, b, c, t);
      }
  return out;
}

}  // namespace

Trivector schouten(const LieAlgebra& L, const Bivector& r) {
  Tensor2 R = r.to_tensor();
  return schouten_full(L, R, R);
}

Trivector schouten(const LieAlgebra& L, const Bivector& r, const Bivector& s) {
  Tensor2 R = r.to_tensor(), S = s.to_tensor();
  return Scalar::rational(1, 2) * (schouten_full(L, R, S) + schouten_full(L, S, R));
}

std::string to_string(Mcybe m) {
  switch (m) {
    case Mcybe::triangular: return "triangular";
    case Mcybe::quasitriangular: return "quasitriangular";
    case Mcybe::fails: return "fails";
  }
  return "?";
}

McybeReport mcybe_check(const LieAlgebra& L, const Bivector& r) {
  McybeReport rep{Mcybe::triangular, schouten(L, r)};
  if (!rep.bracket.is_zero())
    rep.verdict = is_ad_invariant(L, rep.bracket) ? Mcybe::quasitriangular : Mcybe::fails;
  return rep;
}

SubalgebraSpec::SubalgebraSpec(const LieAlgebra& L, std::vector<std::size_t> indices)
    : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  for (std::size_t i : idx_)
    if (i >= L.dim()) throw NotSubalgebra("index out of range");
  for (std::size_t i : idx_)
    for (std::size_t j : idx_) {
      Vec b = L.bracket(i, j);
      for (std::size_t k = 0; k < b.size(); ++k)
        if (!b[k].is_zero() && !contains(k))
          throw NotSubalgebra("[" + L.basis()[i] + "," + L.basis()[j] + "] leaves the span");
    }
}

bool SubalgebraSpec::contains(std::size_t i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

std::string to_string(Coisotropy c) {
  switch (c) {
    case Coisotropy::poisson_subgroup: return "poisson_subgroup";
    case Coisotropy::coisotropic: return "coisotropic";
    case Coisotropy::neither: return "neither";
  }
  return "?";
}

CoisotropyReport coisotropy_classify(const Cocommutator& delta, const SubalgebraSpec& h) {
  CoisotropyReport rep;
  rep.offending = Bivector(delta.dim());
  // First pass: anything outside h^g rules out coisotropy.
  for (std::size_t i : h.indices()) {
    Bivector bad(delta.dim());
    for (const auto& [key, v] : delta.images[i].terms())
      if (!h.contains(key.first) && !h.contains(key.second)) bad.add(key.first, key.second, v);
    if (!bad.is_zero()) {
      rep.verdict = Coisotropy::neither;
      rep.witness = i;
      rep.offending = bad;
      return rep;
    }
  }
  for (std::size_t i : h.indices()) {
    Bivector mixed(delta.dim());
    for (const auto& [key, v] : delta.images[i].terms())
      if (!(h.contains(key.first) && h.contains(key.second))) mixed.add(key.first, key.second, v);
    if (!mixed.is_zero()) {
      rep.verdict = Coisotropy::coisotropic;
      rep.witness = i;
      rep.offending = mixed;
      return rep;
    }
  }
  return rep;
}

}  // namespace pdd
