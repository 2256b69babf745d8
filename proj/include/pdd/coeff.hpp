// Exact scalars: rationals times Laurent monomials in named parameters and
// square-root symbols.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdd {

using Rational = mpq_class;

struct InverseOfSum : std::domain_error {
  explicit InverseOfSum(const std::string& what) : std::domain_error(what) {}
};
struct UnboundSymbol : std::runtime_error {
  std::string symbol;
  explicit UnboundSymbol(const std::string& s)
      : std::runtime_error("unbound symbol: " + s), symbol(s) {}
};
struct NegativeRadicand : std::domain_error {
  explicit NegativeRadicand(const std::string& what) : std::domain_error(what) {}
};
struct Divergent : std::domain_error {
  explicit Divergent(const std::string& what) : std::domain_error(what) {}
};
struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)),
        position(pos) {}
};

using PowerMap = std::map<std::string, int>;

// The square of a radical symbol: a nonzero rational times a Laurent monomial in
// parameters. Kept canonical so that equal radicals compare equal: the rational
// part is a squarefree integer and parameter exponents are 0 or 1 after the
// even part has been moved outside the root.
struct Radicand {
  Rational coeff;
  PowerMap powers;

  std::string to_string() const;
};
bool operator==(const Radicand& a, const Radicand& b);
bool operator<(const Radicand& a, const Radicand& b);

struct Monomial {
  PowerMap powers;                // parameter -> nonzero integer exponent
  std::vector<Radicand> radicals; // sorted, distinct, each to the first power

  bool is_one() const { return powers.empty() && radicals.empty(); }
  std::string to_string() const;
};
bool operator==(const Monomial& a, const Monomial& b);
bool operator<(const Monomial& a, const Monomial& b);

class Scalar;
using Bindings = std::map<std::string, double>;

class Scalar {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Scalar() = default;
  Scalar(int v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)

  static Scalar symbol(const std::string& name);
  static Scalar rational(long num, long den = 1);
  // sqrt of a single-term radical-free scalar, rewritten into canonical form.
  static Scalar sqrt(const Scalar& square);
  static Scalar from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_rational() const;
  // Requires is_rational().
  Rational to_rational() const;
  bool has_radicals() const;
  std::vector<std::string> parameters() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(int n) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Canonical form of an arbitrary term map; idempotent.
Scalar normalize(const Scalar& s);

double substitute_numeric(const Scalar& s, const Bindings& bindings);

// Exact substitution of parameters by scalars. A substituted parameter inside a
// radicand must leave a single-term radicand.
Scalar substitute(const Scalar& s, const std::map<std::string, Scalar>& values);

// Partial derivative with respect to a parameter that does not occur inside any
// radicand.
Scalar derivative(const Scalar& s, const std::string& param);

// The contraction degree counts `param` with weight 2 and every radical with
// half the weight of its radicand, so sqrt(param) and sqrt(-param) have degree 1.
struct ContractionScale {
  std::string param = "Lambda";
  Scalar scale = Scalar::sqrt(Scalar::symbol("Lambda"));

  static ContractionScale de_sitter();
  static ContractionScale anti_de_sitter();
};

int contraction_degree(const Monomial& m, const std::string& param);

// The degree-0 part of scale^k * s, which is its limit as the contraction
// parameter goes to zero. Throws Divergent when negative degrees survive.
Scalar laurent_leading(const Scalar& s, int k,
                       const ContractionScale& cs = ContractionScale::de_sitter());

// Scalar literal grammar: integers, decimals, identifiers, sqrt(...), + - * /,
// ^integer and parentheses. Identifiers found in `aliases` expand to the bound
// scalar; all others become parameter symbols.
Scalar parse_scalar(const std::string& text,
                    const std::map<std::string, Scalar>& aliases = {});

}  // namespace pdd
