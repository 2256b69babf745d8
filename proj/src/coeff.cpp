#include "pdd/coeff.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include "pdd/expr_parser.hpp"

namespace pdd {

namespace {

int floor_half(int e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }

void add_powers(PowerMap& into, const PowerMap& from, int sign = 1) {
  for (const auto& [name, e] : from) {
    int v = (into[name] += sign * e);
    if (v == 0) into.erase(name);
  }
}

// Splits |n| into s^2 * f with f squarefree (trial division; values that are
// too large to factor quickly keep an unreduced cofactor).
void square_split(const mpz_class& n, mpz_class& s, mpz_class& f) {
  s = 1;
  f = abs(n);
  for (unsigned long p = 2; p < 1000000; ++p) {
    mpz_class pp = mpz_class(p) * p;
    if (pp > f) break;
    while (f % pp == 0) {
      f /= pp;
      s *= p;
    }
  }
}

struct RadicalSplit {
  Rational outside = 1;
  PowerMap outside_powers;
  bool has_root = false;
  Radicand root;
};

RadicalSplit split_radicand(const Rational& q, const PowerMap& powers) {
  RadicalSplit out;
  mpz_class n = q.get_num() * q.get_den();
  mpz_class s, f;
  square_split(n, s, f);
  out.outside = Rational(s, q.get_den());
  out.outside.canonicalize();
  Rational inner(sgn(n) < 0 ? mpz_class(-f) : f);
  PowerMap inner_powers;
  for (const auto& [name, e] : powers) {
    int h = floor_half(e);
    if (h != 0) out.outside_powers[name] += h;
    if (e - 2 * h != 0) inner_powers[name] = 1;
  }
  if (inner != 1 || !inner_powers.empty()) {
    out.has_root = true;
    out.root = Radicand{inner, inner_powers};
  }
  return out;
}

int compare_powers(const PowerMap& a, const PowerMap& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

std::string powers_to_string(const PowerMap& p) {
  std::string s;
  for (const auto& [name, e] : p) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Product of two monomials; the returned rational collects the squares of
// radicals that occurred twice.
Rational multiply_into(const Monomial& a, const Monomial& b, Monomial& out) {
  Rational factor = 1;
  out.powers = a.powers;
  add_powers(out.powers, b.powers);
  out.radicals.clear();
  auto ia = a.radicals.begin();
  auto ib = b.radicals.begin();
  while (ia != a.radicals.end() || ib != b.radicals.end()) {
    if (ib == b.radicals.end() || (ia != a.radicals.end() && *ia < *ib)) {
      out.radicals.push_back(*ia++);
    } else if (ia == a.radicals.end() || *ib < *ia) {
      out.radicals.push_back(*ib++);
    } else {
      factor *= ia->coeff;
      add_powers(out.powers, ia->powers);
      ++ia;
      ++ib;
    }
  }
  return factor;
}

}  // namespace

std::string Radicand::to_string() const {
  std::string p = powers_to_string(powers);
  if (p.empty()) return coeff.get_str();
  if (coeff == 1) return p;
  if (coeff == -1) return "-" + p;
  return coeff.get_str() + "*" + p;
}

bool operator==(const Radicand& a, const Radicand& b) {
  return a.coeff == b.coeff && a.powers == b.powers;
}
bool operator<(const Radicand& a, const Radicand& b) {
  int c = cmp(a.coeff, b.coeff);
  if (c != 0) return c < 0;
  return compare_powers(a.powers, b.powers) < 0;
}

std::string Monomial::to_string() const {
  std::string s = powers_to_string(powers);
  for (const auto& r : radicals) {
    if (!s.empty()) s += "*";
    s += "sqrt(" + r.to_string() + ")";
  }
  return s;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.powers == b.powers && a.radicals == b.radicals;
}
bool operator<(const Monomial& a, const Monomial& b) {
  int c = compare_powers(a.powers, b.powers);
  if (c != 0) return c < 0;
  return a.radicals < b.radicals;
}

Scalar::Scalar(int v) {
  if (v != 0) terms_.emplace(Monomial{}, Rational(v));
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) {
    Rational c = q;
    c.canonicalize();
    terms_.emplace(Monomial{}, c);
  }
}

Scalar Scalar::symbol(const std::string& name) {
  Scalar s;
  Monomial m;
  m.powers[name] = 1;
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

Scalar Scalar::rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::sqrt(const Scalar& square) {
  if (square.is_zero()) return Scalar();
  if (!square.is_single_term())
    throw std::domain_error("sqrt of a multi-term scalar: " + square.to_string());
  const auto& [mono, c] = *square.terms_.begin();
  if (!mono.radicals.empty())
    throw std::domain_error("nested radical: sqrt(" + square.to_string() + ")");
  RadicalSplit sp = split_radicand(c, mono.powers);
  Monomial m;
  m.powers = sp.outside_powers;
  if (sp.has_root) m.radicals.push_back(sp.root);
  Scalar out;
  out.add_term(m, sp.outside);
  return out;
}

Scalar Scalar::from_terms(const TermMap& terms) {
  Scalar out;
  for (const auto& [m, c] : terms) {
    if (c == 0) continue;
    // Rebuild the monomial from scratch so that any non-canonical radicand or
    // repeated radical is rewritten.
    Scalar acc(c);
    for (const auto& [name, e] : m.powers) acc *= Scalar::symbol(name).pow(e);
    for (const auto& r : m.radicals) {
      Scalar sq(r.coeff);
      for (const auto& [name, e] : r.powers) sq *= Scalar::symbol(name).pow(e);
      acc *= Scalar::sqrt(sq);
    }
    out += acc;
  }
  return out;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("not a rational constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Scalar::has_radicals() const {
  for (const auto& [m, c] : terms_)
    if (!m.radicals.empty()) return true;
  return false;
}

std::vector<std::string> Scalar::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& [n, e] : m.powers) names.insert(n);
    for (const auto& r : m.radicals)
      for (const auto& [n, e] : r.powers) names.insert(n);
  }
  return {names.begin(), names.end()};
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational f = multiply_into(ma, mb, m);
      out.add_term(m, ca * cb * f);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!is_single_term()) throw InverseOfSum("inverse of a sum: " + to_string());
  const auto& [m, c] = *terms_.begin();
  Monomial inv;
  Rational coeff = 1 / c;
  for (const auto& [n, e] : m.powers) inv.powers[n] = -e;
  // 1/sqrt(r) = sqrt(r)/r
  for (const auto& r : m.radicals) {
    coeff /= r.coeff;
    add_powers(inv.powers, r.powers, -1);
    inv.radicals.push_back(r);
  }
  Scalar out;
  out.add_term(inv, coeff);
  return out;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string ms = m.to_string();
    if (ms.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += ms;
    } else {
      out += mag.get_str() + "*" + ms;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar normalize(const Scalar& s) { return Scalar::from_terms(s.terms()); }

double substitute_numeric(const Scalar& s, const Bindings& bindings) {
  auto lookup = [&](const std::string& name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw UnboundSymbol(name);
    return it->second;
  };
  auto eval_powers = [&](const PowerMap& p) {
    double v = 1.0;
    for (const auto& [name, e] : p) v *= std::pow(lookup(name), e);
    return v;
  };
  double total = 0.0;
  for (const auto& [m, c] : s.terms()) {
    double v = c.get_d() * eval_powers(m.powers);
    for (const auto& r : m.radicals) {
      double sq = r.coeff.get_d() * eval_powers(r.powers);
      if (sq < 0)
        throw NegativeRadicand("sqrt(" + r.to_string() + ") evaluates to sqrt(" +
                               std::to_string(sq) + ")");
      v *= std::sqrt(sq);
    }
    total += v;
  }
  return total;
}

Scalar substitute(const Scalar& s, const std::map<std::string, Scalar>& values) {
  auto factor = [&](const PowerMap& p) {
    Scalar v(1);
    for (const auto& [name, e] : p) {
      auto it = values.find(name);
      v *= (it == values.end() ? Scalar::symbol(name) : it->second).pow(e);
    }
    return v;
  };
  Scalar out;
  for (const auto& [m, c] : s.terms()) {
    Scalar term = Scalar(c) * factor(m.powers);
    for (const auto& r : m.radicals) term *= Scalar::sqrt(Scalar(r.coeff) * factor(r.powers));
    out += term;
  }
  return out;
}

Scalar derivative(const Scalar& s, const std::string& param) {
  Scalar out;
  for (const auto& [m, c] : s.terms()) {
    for (const auto& r : m.radicals)
      if (r.powers.count(param))
        throw std::invalid_argument("derivative through a radical in " + param);
    auto it = m.powers.find(param);
    if (it == m.powers.end()) continue;
    Monomial d = m;
    int e = it->second;
    if (e == 1) {
      d.powers.erase(param);
    } else {
      d.powers[param] = e - 1;
    }
    out += Scalar::from_terms({{d, c * e}});
  }
  return out;
}

ContractionScale ContractionScale::de_sitter() { return ContractionScale{}; }

ContractionScale ContractionScale::anti_de_sitter() {
  ContractionScale cs;
  cs.scale = Scalar::sqrt(-Scalar::symbol("Lambda"));
  return cs;
}

int contraction_degree(const Monomial& m, const std::string& param) {
  int d = 0;
  if (auto it = m.powers.find(param); it != m.powers.end()) d += 2 * it->second;
  for (const auto& r : m.radicals)
    if (auto it = r.powers.find(param); it != r.powers.end()) d += it->second;
  return d;
}

Scalar laurent_leading(const Scalar& s, int k, const ContractionScale& cs) {
  Scalar t = s * cs.scale.pow(k);
  Scalar::TermMap kept;
  for (const auto& [m, c] : t.terms()) {
    int d = contraction_degree(m, cs.param);
    if (d < 0) {
      Scalar::TermMap bad{{m, c}};
      throw Divergent("term " + Scalar::from_terms(bad).to_string() + " of " + t.to_string() +
                      " has contraction degree " + std::to_string(d));
    }
    if (d == 0) kept.emplace(m, c);
  }
  return Scalar::from_terms(kept);
}

namespace {

struct ScalarPolicy {
  const std::map<std::string, Scalar>& aliases;

  Scalar number(const Rational& q) { return Scalar(q); }
  Scalar ident(const std::string& name) {
    auto it = aliases.find(name);
    return it == aliases.end() ? Scalar::symbol(name) : it->second;
  }
  Scalar sqrt(const Scalar& a) { return Scalar::sqrt(a); }
  Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
  Scalar neg(const Scalar& a) { return -a; }
  Scalar pow(const Scalar& a, int n) { return a.pow(n); }
  Scalar wedge(const Scalar&, const Scalar&) {
    throw std::invalid_argument("'^' needs an integer exponent in a scalar");
  }
  Scalar tensor(const Scalar&, const Scalar&) {
    throw std::invalid_argument("'@' is not defined on scalars");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const std::map<std::string, Scalar>& aliases) {
  ScalarPolicy policy{aliases};
  detail::ExprParser<Scalar, ScalarPolicy> parser(text, policy);
  return parser.parse();
}

}  // namespace pdd
