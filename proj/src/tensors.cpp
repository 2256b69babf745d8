#include "pdd/tensors.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdd/expr_parser.hpp"

namespace pdd {

namespace {

std::string term_string(const Scalar& c, const std::string& basis_part, bool first) {
  std::string out;
  std::string cs = c.to_string();
  bool neg = false;
  if (c.is_single_term() && cs[0] == '-') {
    neg = true;
    cs = cs.substr(1);
  }
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (cs == "1") return out + basis_part;
  if (!c.is_single_term()) return out + "(" + cs + ")*" + basis_part;
  return out + cs + "*" + basis_part;
}

void accumulate(std::map<Bivector::Key, Scalar>& t, const Bivector::Key& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) t.erase(it);
}

}  // namespace

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string vec_to_string(const Vec& v, const Names& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out += term_string(v[i], names.at(i), out.empty());
  }
  return out.empty() ? "0" : out;
}

Tensor2 Tensor2::transpose() const {
  Tensor2 t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Tensor2 Tensor2::symmetric_part() const {
  const Scalar half = Scalar::rational(1, 2);
  Tensor2 t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(i, j) = half * ((*this)(i, j) + (*this)(j, i));
  return t;
}

Tensor2 Tensor2::antisymmetric_part() const {
  const Scalar half = Scalar::rational(1, 2);
  Tensor2 t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(i, j) = half * ((*this)(i, j) - (*this)(j, i));
  return t;
}

bool Tensor2::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Tensor2::is_symmetric() const { return *this == transpose(); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (o.n_ != n_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (o.n_ != n_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor2 operator*(const Scalar& s, const Tensor2& t) {
  Tensor2 out = t;
  for (auto& x : out.a_) x = s * x;
  return out;
}

Tensor2 Tensor2::matmul(const Tensor2& o) const {
  if (o.n_ != n_) throw std::invalid_argument("tensor dimension mismatch");
  Tensor2 out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

Vec Tensor2::apply(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector dimension mismatch");
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec Tensor2::column(std::size_t j) const {
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

Tensor2 Tensor2::identity(std::size_t n) {
  Tensor2 t(n);
  for (std::size_t i = 0; i < n; ++i) t(i, i) = Scalar(1);
  return t;
}

Tensor2 Tensor2::outer(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Tensor2 t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) t(i, j) = a[i] * b[j];
  return t;
}

Tensor2 Tensor2::map(const std::function<Scalar(const Scalar&)>& f) const {
  Tensor2 out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f(a_[i]);
  return out;
}

std::string Tensor2::to_string(const Names& names) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Scalar& c = (*this)(i, j);
      if (c.is_zero()) continue;
      out += term_string(c, names.at(i) + "@" + names.at(j), out.empty());
    }
  return out.empty() ? "0" : out;
}

void Bivector::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("bivector index out of range");
  if (i == j) return;
  if (i < j) {
    accumulate(t_, {i, j}, v);
  } else {
    accumulate(t_, {j, i}, -v);
  }
}

Scalar Bivector::coeff(std::size_t i, std::size_t j) const {
  if (i == j) return Scalar();
  auto it = t_.find({std::min(i, j), std::max(i, j)});
  if (it == t_.end()) return Scalar();
  return i < j ? it->second : -it->second;
}

Tensor2 Bivector::to_tensor() const {
  Tensor2 t(n_);
  for (const auto& [k, v] : t_) {
    t(k.first, k.second) = v;
    t(k.second, k.first) = -v;
  }
  return t;
}

Bivector Bivector::from_tensor(const Tensor2& t) {
  const Scalar half = Scalar::rational(1, 2);
  Bivector b(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) b.add(i, j, half * (t(i, j) - t(j, i)));
  return b;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  if (o.n_ != n_) throw std::invalid_argument("bivector dimension mismatch");
  for (const auto& [k, v] : o.t_) accumulate(t_, k, v);
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& o) {
  if (o.n_ != n_) throw std::invalid_argument("bivector dimension mismatch");
  for (const auto& [k, v] : o.t_) accumulate(t_, k, -v);
  return *this;
}

Bivector operator*(const Scalar& s, const Bivector& b) {
  Bivector out(b.n_);
  for (const auto& [k, v] : b.t_) accumulate(out.t_, k, s * v);
  return out;
}

Bivector Bivector::map(const std::function<Scalar(const Scalar&)>& f) const {
  Bivector out(n_);
  for (const auto& [k, v] : t_) accumulate(out.t_, k, f(v));
  return out;
}

std::string Bivector::to_string(const Names& names) const {
  std::string out;
  for (const auto& [k, v] : t_)
    out += term_string(v, names.at(k.first) + "^" + names.at(k.second), out.empty());
  return out.empty() ? "0" : out;
}

void Trivector::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("trivector index out of range");
  if (i == j || j == k || i == k || v.is_zero()) return;
  Key key{i, j, k};
  int sign = 1;
  // three-element bubble sort tracking the permutation parity
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < 2; ++p)
      if (key[p] > key[p + 1]) {
        std::swap(key[p], key[p + 1]);
        sign = -sign;
      }
  Scalar s = sign > 0 ? v : -v;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) t_.erase(it);
}

Scalar Trivector::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) return Scalar();
  Trivector probe(n_);
  probe.add(i, j, k, Scalar(1));
  const auto& [key, sign] = *probe.t_.begin();
  auto it = t_.find(key);
  if (it == t_.end()) return Scalar();
  return sign * it->second;
}

Trivector& Trivector::operator+=(const Trivector& o) {
  if (o.n_ != n_) throw std::invalid_argument("trivector dimension mismatch");
  for (const auto& [k, v] : o.t_) add(k[0], k[1], k[2], v);
  return *this;
}

Trivector& Trivector::operator-=(const Trivector& o) {
  if (o.n_ != n_) throw std::invalid_argument("trivector dimension mismatch");
  for (const auto& [k, v] : o.t_) add(k[0], k[1], k[2], -v);
  return *this;
}

Trivector operator*(const Scalar& s, const Trivector& t) {
  Trivector out(t.n_);
  for (const auto& [k, v] : t.t_) out.add(k[0], k[1], k[2], s * v);
  return out;
}

std::string Trivector::to_string(const Names& names) const {
  std::string out;
  for (const auto& [k, v] : t_)
    out += term_string(v, names.at(k[0]) + "^" + names.at(k[1]) + "^" + names.at(k[2]),
                       out.empty());
  return out.empty() ? "0" : out;
}

Bivector wedge(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Bivector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i != j && !b[j].is_zero()) out.add(i, j, a[i] * b[j]);
  }
  return out;
}

Trivector wedge(const Bivector& a, const Vec& v) {
  if (a.dim() != v.size()) throw std::invalid_argument("dimension mismatch");
  Trivector out(v.size());
  for (const auto& [k, c] : a.terms())
    for (std::size_t l = 0; l < v.size(); ++l)
      if (!v[l].is_zero()) out.add(k.first, k.second, l, c * v[l]);
  return out;
}

namespace {

struct TensorPolicy {
  const Names& basis;
  const std::map<std::string, Scalar>& aliases;

  static TensorValue scalar(const Scalar& s) {
    TensorValue v;
    v.scalar = s;
    return v;
  }
  static bool zero_scalar(const TensorValue& v) { return v.rank == 0 && v.scalar.is_zero(); }

  TensorValue number(const Rational& q) { return scalar(Scalar(q)); }
  TensorValue ident(const std::string& name) {
    auto b = std::find(basis.begin(), basis.end(), name);
    if (b != basis.end()) {
      TensorValue v;
      v.rank = 1;
      v.vec = unit_vector(basis.size(), static_cast<std::size_t>(b - basis.begin()));
      return v;
    }
    auto it = aliases.find(name);
    return scalar(it == aliases.end() ? Scalar::symbol(name) : it->second);
  }
  TensorValue sqrt(const TensorValue& a) {
    if (a.rank != 0) throw std::invalid_argument("sqrt of a tensor");
    return scalar(Scalar::sqrt(a.scalar));
  }
  TensorValue scale(const Scalar& s, TensorValue v) {
    switch (v.rank) {
      case 0: v.scalar = s * v.scalar; break;
      case 1: for (auto& x : v.vec) x = s * x; break;
      case 2: v.t2 = s * v.t2; break;
      default: v.t3 = s * v.t3; break;
    }
    return v;
  }
  TensorValue add(const TensorValue& a, const TensorValue& b) {
    if (zero_scalar(a)) return b;
    if (zero_scalar(b)) return a;
    if (a.rank != b.rank) throw std::invalid_argument("adding tensors of different rank");
    TensorValue v = a;
    switch (a.rank) {
      case 0: v.scalar += b.scalar; break;
      case 1: for (std::size_t i = 0; i < v.vec.size(); ++i) v.vec[i] += b.vec[i]; break;
      case 2: v.t2 += b.t2; break;
      default: v.t3 += b.t3; break;
    }
    return v;
  }
  TensorValue neg(const TensorValue& a) { return scale(Scalar(-1), a); }
  TensorValue sub(const TensorValue& a, const TensorValue& b) { return add(a, neg(b)); }
  TensorValue mul(const TensorValue& a, const TensorValue& b) {
    if (a.rank == 0) return scale(a.scalar, b);
    if (b.rank == 0) return scale(b.scalar, a);
    throw std::invalid_argument("'*' between two tensors; use '^' or '@'");
  }
  TensorValue div(const TensorValue& a, const TensorValue& b) {
    if (b.rank != 0) throw std::invalid_argument("division by a tensor");
    return scale(b.scalar.inverse(), a);
  }
  TensorValue pow(const TensorValue& a, int n) {
    if (a.rank != 0) throw std::invalid_argument("power of a tensor");
    return scalar(a.scalar.pow(n));
  }
  TensorValue wedge(const TensorValue& a, const TensorValue& b) {
    TensorValue v;
    if (a.rank == 1 && b.rank == 1) {
      v.rank = 2;
      v.t2 = Tensor2::outer(a.vec, b.vec) - Tensor2::outer(b.vec, a.vec);
      return v;
    }
    if ((a.rank == 2 && b.rank == 1) || (a.rank == 1 && b.rank == 2)) {
      const Tensor2& t = a.rank == 2 ? a.t2 : b.t2;
      const Vec& x = a.rank == 1 ? a.vec : b.vec;
      if (!(t.transpose() == Scalar(-1) * t))
        throw std::invalid_argument("'^' with a non-antisymmetric 2-tensor");
      v.rank = 3;
      v.t3 = pdd::wedge(Bivector::from_tensor(t), x);
      return v;
    }
    throw std::invalid_argument("unsupported exterior product of ranks " +
                                std::to_string(a.rank) + " and " + std::to_string(b.rank));
  }
  TensorValue tensor(const TensorValue& a, const TensorValue& b) {
    if (a.rank != 1 || b.rank != 1) throw std::invalid_argument("'@' needs two vectors");
    TensorValue v;
    v.rank = 2;
    v.t2 = Tensor2::outer(a.vec, b.vec);
    return v;
  }
};

TensorValue parse_with_rank(const std::string& text, const Names& basis,
                            const std::map<std::string, Scalar>& aliases, int rank) {
  TensorPolicy policy{basis, aliases};
  detail::ExprParser<TensorValue, TensorPolicy> parser(text, policy);
  TensorValue v = parser.parse();
  if (v.rank == 0 && v.scalar.is_zero() && rank > 0) {
    v.rank = rank;
    v.vec = Vec(basis.size());
    v.t2 = Tensor2(basis.size());
    v.t3 = Trivector(basis.size());
  }
  if (rank >= 0 && v.rank != rank)
    throw ParseError("expected a rank-" + std::to_string(rank) + " expression, got rank " +
                         std::to_string(v.rank) + " in '" + text + "'",
                     0);
  return v;
}

}  // namespace

TensorValue parse_tensor(const std::string& text, const Names& basis,
                         const std::map<std::string, Scalar>& aliases) {
  return parse_with_rank(text, basis, aliases, -1);
}

Vec parse_vector(const std::string& text, const Names& basis,
                 const std::map<std::string, Scalar>& aliases) {
  return parse_with_rank(text, basis, aliases, 1).vec;
}

Tensor2 parse_tensor2(const std::string& text, const Names& basis,
                      const std::map<std::string, Scalar>& aliases) {
  return parse_with_rank(text, basis, aliases, 2).t2;
}

Bivector parse_bivector(const std::string& text, const Names& basis,
                        const std::map<std::string, Scalar>& aliases) {
  Tensor2 t = parse_with_rank(text, basis, aliases, 2).t2;
  if (!(t.transpose() == Scalar(-1) * t))
    throw ParseError("bivector literal is not antisymmetric: '" + text + "'", 0);
  return Bivector::from_tensor(t);
}

Trivector parse_trivector(const std::string& text, const Names& basis,
                          const std::map<std::string, Scalar>& aliases) {
  return parse_with_rank(text, basis, aliases, 3).t3;
}

const std::map<std::string, Scalar>& standard_aliases() {
  static const std::map<std::string, Scalar> aliases = {
      {"eta", Scalar::sqrt(Scalar::symbol("Lambda"))},
      {"zeta", Scalar::sqrt(-Scalar::symbol("Lambda"))},
      {"i", Scalar::sqrt(Scalar(-1))},
  };
  return aliases;
}

}  // namespace pdd
