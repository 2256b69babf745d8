#include "pdd/doubles.hpp"

namespace pdd {

std::vector<std::size_t> DoubleAlgebra::first() const {
  std::vector<std::size_t> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> DoubleAlgebra::second() const {
  std::vector<std::size_t> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = d + i;
  return v;
}

DoubleAlgebra assemble_double_unchecked(const ManinTriple& t) {
  const std::size_t d = t.g.dim();
  if (t.dual.dim() != d) throw DimensionMismatch("g and g* differ in dimension");
  Names names = t.g.basis();
  names.insert(names.end(), t.dual.basis().begin(), t.dual.basis().end());
  DoubleAlgebra D{LieAlgebra(names), Tensor2(2 * d), d};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec v(2 * d);
      if (i < j) {
        Vec w(2 * d);
        for (std::size_t k = 0; k < d; ++k) {
          v[k] = t.g.c(i, j, k);
          w[d + k] = t.dual.c(i, j, k);
        }
        D.L.set_bracket(i, j, v);
        D.L.set_bracket(d + i, d + j, w);
        v = Vec(2 * d);
      }
      // [y^i, Y_j] = c^i_{jk} y^k - f^{ik}_j Y_k
      for (std::size_t k = 0; k < d; ++k) {
        v[d + k] = t.g.c(j, k, i);
        v[k] = -t.dual.c(i, k, j);
      }
      D.L.set_bracket(d + i, j, v);
    }
  for (std::size_t i = 0; i < d; ++i) {
    D.pairing(d + i, i) = 1;
    D.pairing(i, d + i) = 1;
  }
  return D;
}

DoubleAlgebra assemble_double(const ManinTriple& t) {
  auto bad = cocycle_check(t.g, t.cocommutator());
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw IncompatibleTriple("cocycle condition fails at (i,j,l,m) = (" + std::to_string(v.i) +
                                 "," + std::to_string(v.j) + "," + std::to_string(v.l) + "," +
                                 std::to_string(v.m) + "), residual " + v.residual.to_string(),
                             v);
  }
  return assemble_double_unchecked(t);
}

CanonicalR canonical_r(const DoubleAlgebra& D) {
  CanonicalR out;
  out.r = Tensor2(2 * D.d);
  for (std::size_t i = 0; i < D.d; ++i) out.r(D.d + i, i) = 1;
  out.r_skew = Bivector::from_tensor(out.r);
  out.omega = out.r.symmetric_part();
  return out;
}

Transported transport(const DoubleAlgebra& D, const LinearMap& m, const Domains& domains) {
  LinearMap full{m.source, D.L, m.matrix};
  IsomorphismReport rep = check_isomorphism(full, domains);
  if (!rep.ok()) {
    std::string why = rep.failures.empty() ? "numeric residual " + std::to_string(rep.max_numeric_residual)
                                           : rep.failures.front();
    throw NotIsomorphism(why);
  }
  const std::size_t n = D.L.dim();
  Tensor2 inv = pdd::inverse(m.matrix);
  Transported out{LieAlgebra(m.source.basis()), {}, {}, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      out.algebra.set_bracket(a, b, inv.apply(D.L.bracket(m.image(a), m.image(b))));
  if (auto diff = out.algebra.first_difference(m.source)) throw TargetMismatch(*diff);
  CanonicalR c = canonical_r(D);
  out.r = inv.matmul(c.r).matmul(inv.transpose());
  out.r_skew = Bivector::from_tensor(out.r);
  out.pairing = m.matrix.transpose().matmul(D.pairing).matmul(m.matrix);
  return out;
}

SkewReduction skew_reduce(const LieAlgebra& L, const Tensor2& r) {
  SkewReduction out;
  out.casimirs = invariant_symmetric_tensors(L);
  const std::size_t n = L.dim();
  Tensor2 sym = r.symmetric_part();
  QMatrix a;
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      QRow row;
      for (const auto& t : out.casimirs) row.push_back(t(i, j).to_rational());
      a.push_back(std::move(row));
      rhs.push_back(sym(i, j));
    }
  auto sol = solve(a, rhs, out.casimirs.size());
  if (!sol) throw NotReducible("symmetric part is not a combination of invariant tensors");
  out.coefficients = *sol;
  out.r_skew = Bivector::from_tensor(r);
  return out;
}

bool duality_swap_check(const ManinTriple& t) {
  DoubleAlgebra D = assemble_double(t);
  DoubleAlgebra S = assemble_double(t.swapped());
  const std::size_t d = D.d;
  LinearMap sigma{S.L, D.L, Tensor2(2 * d)};
  for (std::size_t i = 0; i < d; ++i) {
    sigma.matrix(d + i, i) = 1;  // Y'_i = y^i
    sigma.matrix(i, d + i) = 1;  // y'^i = Y_i
  }
  if (!check_isomorphism(sigma).exact) return false;
  return sigma.matrix.transpose().matmul(D.pairing).matmul(sigma.matrix) == S.pairing;
}

}  // namespace pdd
