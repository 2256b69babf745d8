#include "pdd/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace pdd {

LieAlgebra::LieAlgebra(Names basis) : basis_(std::move(basis)) {
  c_.resize(dim() * dim() * dim());
}

LieAlgebra LieAlgebra::from_table(const Names& basis,
                                  const std::vector<std::array<std::string, 3>>& rows,
                                  const std::map<std::string, Scalar>& aliases) {
  LieAlgebra L(basis);
  for (const auto& row : rows)
    L.set_bracket(L.index(row[0]), L.index(row[1]), parse_vector(row[2], basis, aliases));
  return L;
}

std::size_t LieAlgebra::index(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) throw std::out_of_range("unknown basis element: " + name);
  return static_cast<std::size_t>(it - basis_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != dim()) throw DimensionMismatch("bracket vector has wrong dimension");
  if (i == j) {
    if (!is_zero(v)) throw std::invalid_argument("[X,X] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim(); ++k) {
    c_[(i * dim() + j) * dim() + k] = v[k];
    c_[(j * dim() + i) * dim() + k] = -v[k];
  }
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  Vec out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (i == j || y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool LieAlgebra::has_rational_constants() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

std::optional<std::string> LieAlgebra::first_difference(const LieAlgebra& other) const {
  if (other.dim() != dim()) return "dimensions differ";
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (bracket(i, j) != other.bracket(i, j))
        return "[" + basis_[i] + "," + basis_[j] + "] = " + vec_to_string(bracket(i, j), basis_) +
               " versus " + vec_to_string(other.bracket(i, j), basis_);
  return std::nullopt;
}

LieAlgebra LieAlgebra::substitute(const std::map<std::string, Scalar>& values) const {
  LieAlgebra out = *this;
  for (auto& s : out.c_) s = pdd::substitute(s, values);
  return out;
}

std::string LieAlgebra::bracket_table() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      Vec b = bracket(i, j);
      if (is_zero(b)) continue;
      out += "[" + basis_[i] + "," + basis_[j] + "] = " + vec_to_string(b, basis_) + "\n";
    }
  return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L) {
  std::vector<JacobiViolation> out;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec xi = unit_vector(n, i), xj = unit_vector(n, j), xk = unit_vector(n, k);
        Vec r = L.bracket(xi, L.bracket(j, k));
        Vec r2 = L.bracket(xj, L.bracket(k, i));
        Vec r3 = L.bracket(xk, L.bracket(i, j));
        for (std::size_t a = 0; a < n; ++a) r[a] += r2[a] + r3[a];
        if (!is_zero(r)) out.push_back({i, j, k, r});
      }
  return out;
}

Vec adjoint(const LieAlgebra& L, std::size_t x, const Vec& v) {
  return L.bracket(unit_vector(L.dim(), x), v);
}

Tensor2 adjoint(const LieAlgebra& L, std::size_t x, const Tensor2& t) {
  const std::size_t n = L.dim();
  Tensor2 out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) {
      const Scalar& c = L.c(x, k, a);
      if (c.is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!t(k, b).is_zero()) out(a, b) += c * t(k, b);
        if (!t(b, k).is_zero()) out(b, a) += c * t(b, k);
      }
    }
  return out;
}

Bivector adjoint(const LieAlgebra& L, std::size_t x, const Bivector& b) {
  Bivector out(L.dim());
  for (const auto& [key, v] : b.terms()) {
    Vec ai = adjoint(L, x, unit_vector(L.dim(), key.first));
    Vec aj = adjoint(L, x, unit_vector(L.dim(), key.second));
    out += v * (wedge(ai, unit_vector(L.dim(), key.second)) +
                wedge(unit_vector(L.dim(), key.first), aj));
  }
  return out;
}

Trivector adjoint(const LieAlgebra& L, std::size_t x, const Trivector& t) {
  const std::size_t n = L.dim();
  Trivector out(n);
  for (const auto& [key, v] : t.terms())
    for (std::size_t k = 0; k < n; ++k) {
      // [X, X_a] = sum_k c(x,a,k) X_k replaces each slot in turn
      if (!L.c(x, key[0], k).is_zero()) out.add(k, key[1], key[2], v * L.c(x, key[0], k));
      if (!L.c(x, key[1], k).is_zero()) out.add(key[0], k, key[2], v * L.c(x, key[1], k));
      if (!L.c(x, key[2], k).is_zero()) out.add(key[0], key[1], k, v * L.c(x, key[2], k));
    }
  return out;
}

bool is_ad_invariant(const LieAlgebra& L, const Tensor2& t) {
  for (std::size_t x = 0; x < L.dim(); ++x)
    if (!adjoint(L, x, t).is_zero()) return false;
  return true;
}

bool is_invariant_form(const LieAlgebra& L, const Tensor2& form) {
  const std::size_t n = L.dim();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Scalar s;
        for (std::size_t k = 0; k < n; ++k) s += L.c(z, x, k) * form(k, y) + L.c(z, y, k) * form(x, k);
        if (!s.is_zero()) return false;
      }
  return true;
}

bool is_ad_invariant(const LieAlgebra& L, const Trivector& t) {
  for (std::size_t x = 0; x < L.dim(); ++x)
    if (!adjoint(L, x, t).is_zero()) return false;
  return true;
}

namespace {

std::size_t sym_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Tensor2 sym_from_solution(const QRow& v, std::size_t n) {
  Tensor2 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = Scalar(v[sym_index(i, j, n)]);
  return t;
}

void require_rational(const LieAlgebra& L) {
  if (!L.has_rational_constants())
    throw std::domain_error("structure constants must be rational; bind the parameters first");
}

}  // namespace

InvariantForms invariant_symmetric_forms(const LieAlgebra& L) {
  require_rational(L);
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  QMatrix eqs;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        QRow row(unknowns, Rational(0));
        for (std::size_t l = 0; l < n; ++l) {
          row[sym_index(l, j, n)] += L.c(z, i, l).to_rational();
          row[sym_index(i, l, n)] += L.c(z, j, l).to_rational();
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; }))
          eqs.push_back(std::move(row));
      }
  InvariantForms out;
  Tensor2 generic(n);
  std::size_t m = 0;
  for (const QRow& v : nullspace(eqs, unknowns)) {
    Tensor2 g = sym_from_solution(v, n);
    out.basis_nondegenerate.push_back(!determinant(g).is_zero());
    generic += Scalar::symbol("t" + std::to_string(m++)) * g;
    out.basis.push_back(std::move(g));
  }
  out.generic_determinant = out.basis.empty() ? Scalar() : determinant(generic);
  out.some_nondegenerate = !out.generic_determinant.is_zero();
  return out;
}

std::vector<Tensor2> invariant_symmetric_tensors(const LieAlgebra& L) {
  require_rational(L);
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  QMatrix eqs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        QRow row(unknowns, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
          row[sym_index(k, b, n)] += L.c(x, k, a).to_rational();
          row[sym_index(a, k, n)] += L.c(x, k, b).to_rational();
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; }))
          eqs.push_back(std::move(row));
      }
  std::vector<Tensor2> out;
  for (const QRow& v : nullspace(eqs, unknowns)) out.push_back(sym_from_solution(v, n));
  return out;
}

bool casimir_check(const LieAlgebra& L, const Tensor2& tensor) {
  return tensor.is_symmetric() && is_ad_invariant(L, tensor);
}

bool casimir_check_form(const LieAlgebra& L, const Tensor2& form) {
  if (determinant(form).is_zero()) throw SingularForm("bilinear form is degenerate");
  return casimir_check(L, inverse(form));
}

std::vector<Bindings> sample_bindings(const Domains& domains, std::size_t count,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Bindings> out(count);
  for (auto& b : out)
    for (const auto& d : domains) b[d.name] = std::uniform_real_distribution<double>(d.lo, d.hi)(rng);
  return out;
}

LinearMap LinearMap::from_images(const LieAlgebra& source, const LieAlgebra& target,
                                 const std::vector<std::string>& images,
                                 const std::map<std::string, Scalar>& aliases) {
  if (images.size() != source.dim()) throw DimensionMismatch("one image per source generator");
  LinearMap m{source, target, Tensor2(target.dim())};
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  for (std::size_t a = 0; a < images.size(); ++a) {
    Vec v = parse_vector(images[a], target.basis(), aliases);
    for (std::size_t i = 0; i < v.size(); ++i) m.matrix(i, a) = v[i];
  }
  return m;
}

LinearMap LinearMap::inverse() const { return LinearMap{target, source, pdd::inverse(matrix)}; }

LinearMap LinearMap::compose_after(const LinearMap& first) const {
  if (first.target.dim() != source.dim()) throw DimensionMismatch("cannot compose");
  return LinearMap{first.source, target, matrix.matmul(first.matrix)};
}

Tensor2 LinearMap::push(const Tensor2& t) const {
  return matrix.matmul(t).matmul(matrix.transpose());
}

Bivector LinearMap::push(const Bivector& b) const {
  return Bivector::from_tensor(push(b.to_tensor()));
}

namespace {

std::set<std::string> symbols_of(const Tensor2& m) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (auto& n : m(i, j).parameters()) out.insert(n);
  return out;
}

bool needs_numeric(const LinearMap& m) {
  if (!symbols_of(m.matrix).empty()) return true;
  for (std::size_t i = 0; i < m.matrix.dim(); ++i)
    for (std::size_t j = 0; j < m.matrix.dim(); ++j)
      if (m.matrix(i, j).has_radicals()) return true;
  return !m.source.has_rational_constants() || !m.target.has_rational_constants();
}

double numeric_residual(const LinearMap& m, const Bindings& b) {
  const std::size_t n = m.matrix.dim();
  auto num = [&](const Scalar& s) { return substitute_numeric(s, b); };
  std::vector<double> M(n * n), cs(n * n * n), ct(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      M[i * n + j] = num(m.matrix(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        cs[(i * n + j) * n + k] = num(m.source.c(i, j, k));
        ct[(i * n + j) * n + k] = num(m.target.c(i, j, k));
      }
    }
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b2 = a + 1; b2 < n; ++b2)
      for (std::size_t k = 0; k < n; ++k) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t l = 0; l < n; ++l) lhs += M[k * n + l] * cs[(a * n + b2) * n + l];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            rhs += M[i * n + a] * M[j * n + b2] * ct[(i * n + j) * n + k];
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

}  // namespace

IsomorphismReport check_isomorphism(const LinearMap& m, const Domains& domains,
                                    std::size_t samples, std::uint64_t seed, double tol) {
  const std::size_t n = m.source.dim();
  if (m.target.dim() != n || m.matrix.dim() != n)
    throw DimensionMismatch("isomorphism check needs equal dimensions");
  IsomorphismReport rep;
  rep.exact = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec lhs = m.apply(m.source.bracket(a, b));
      Vec rhs = m.target.bracket(m.image(a), m.image(b));
      Vec diff(n);
      for (std::size_t k = 0; k < n; ++k) diff[k] = lhs[k] - rhs[k];
      if (!is_zero(diff)) {
        rep.exact = false;
        rep.failures.push_back("[" + m.source.basis()[a] + "," + m.source.basis()[b] +
                               "]: image " + vec_to_string(lhs, m.target.basis()) +
                               ", bracket of images " + vec_to_string(rhs, m.target.basis()));
      }
    }
  if (rep.exact && m.determinant().is_zero()) {
    rep.exact = false;
    rep.failures.push_back("map is singular");
  }
  if (needs_numeric(m)) {
    try {
      for (const Bindings& b : sample_bindings(domains, samples, seed)) {
        rep.max_numeric_residual = std::max(rep.max_numeric_residual, numeric_residual(m, b));
        ++rep.samples;
      }
      rep.numeric_ok = rep.max_numeric_residual <= tol;
    } catch (const NegativeRadicand& e) {
      rep.numeric_note = std::string("numeric check skipped: ") + e.what();
    } catch (const UnboundSymbol& e) {
      rep.numeric_note = std::string("numeric check skipped: ") + e.what();
    }
  }
  return rep;
}

bool is_isomorphism(const LinearMap& m, const Domains& domains) {
  return check_isomorphism(m, domains).ok();
}

}  // namespace pdd
