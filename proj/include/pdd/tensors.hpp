// Dense and sparse tensors over Scalars on a fixed basis.
//
// Exterior products follow x^y = x@y - y@x with no normalising factor, so a
// Bivector coefficient r(i,j), i<j, is also the (i,j) entry of the full
// antisymmetric matrix it represents.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdd/coeff.hpp"

namespace pdd {

using Vec = std::vector<Scalar>;
using Names = std::vector<std::string>;

Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
std::string vec_to_string(const Vec& v, const Names& names);

// Square matrix of Scalars, also used for mixed 2-tensors T = sum T(i,j) X_i@X_j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Tensor2 transpose() const;
  Tensor2 symmetric_part() const;      // (T + T^t)/2
  Tensor2 antisymmetric_part() const;  // (T - T^t)/2
  bool is_zero() const;
  bool is_symmetric() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& t);
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  // Matrix product and matrix-vector product.
  Tensor2 matmul(const Tensor2& o) const;
  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;

  static Tensor2 identity(std::size_t n);
  static Tensor2 outer(const Vec& a, const Vec& b);

  Tensor2 map(const std::function<Scalar(const Scalar&)>& f) const;

  // Rendered as a sum of X_i@X_j terms.
  std::string to_string(const Names& names) const;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

class Bivector {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  Bivector() = default;
  explicit Bivector(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }
  // Adds v * X_i^X_j; i>j flips the sign, i==j is ignored.
  void add(std::size_t i, std::size_t j, const Scalar& v);
  Scalar coeff(std::size_t i, std::size_t j) const;
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Tensor2 to_tensor() const;
  // Wedge coefficients of the antisymmetric part: (T(i,j) - T(j,i))/2.
  static Bivector from_tensor(const Tensor2& t);

  Bivector& operator+=(const Bivector& o);
  Bivector& operator-=(const Bivector& o);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator*(const Scalar& s, const Bivector& b);
  friend bool operator==(const Bivector& a, const Bivector& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const Bivector& a, const Bivector& b) { return !(a == b); }

  Bivector map(const std::function<Scalar(const Scalar&)>& f) const;
  std::string to_string(const Names& names) const;

 private:
  std::size_t n_ = 0;
  std::map<Key, Scalar> t_;
};

class Trivector {
 public:
  using Key = std::array<std::size_t, 3>;

  Trivector() = default;
  explicit Trivector(std::size_t n) : n_(n) {}

  std::size_t dim() const { return n_; }
  // Adds v * X_i^X_j^X_k in any index order; repeated indices are ignored.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Trivector& operator+=(const Trivector& o);
  Trivector& operator-=(const Trivector& o);
  friend Trivector operator+(Trivector a, const Trivector& b) { return a += b; }
  friend Trivector operator-(Trivector a, const Trivector& b) { return a -= b; }
  friend Trivector operator*(const Scalar& s, const Trivector& t);
  friend bool operator==(const Trivector& a, const Trivector& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  std::string to_string(const Names& names) const;

 private:
  std::size_t n_ = 0;
  std::map<Key, Scalar> t_;
};

Bivector wedge(const Vec& a, const Vec& b);
Trivector wedge(const Bivector& a, const Vec& v);

// Parsed tensor literal: rank 0 (scalar), 1 (vector), 2 (mixed tensor) or 3
// (totally antisymmetric, from triple exterior products).
struct TensorValue {
  int rank = 0;
  Scalar scalar;
  Vec vec;
  Tensor2 t2;
  Trivector t3;
};

// Reads literals such as "P2^J + 1/2*(-P0^J + P1^K2)" or "K@F + 1/2*P0@P0".
// Identifiers in `basis` are generators; `aliases` bind scalar names.
TensorValue parse_tensor(const std::string& text, const Names& basis,
                         const std::map<std::string, Scalar>& aliases = {});
Vec parse_vector(const std::string& text, const Names& basis,
                 const std::map<std::string, Scalar>& aliases = {});
Tensor2 parse_tensor2(const std::string& text, const Names& basis,
                      const std::map<std::string, Scalar>& aliases = {});
// Requires the parsed tensor to be antisymmetric.
Bivector parse_bivector(const std::string& text, const Names& basis,
                        const std::map<std::string, Scalar>& aliases = {});
Trivector parse_trivector(const std::string& text, const Names& basis,
                          const std::map<std::string, Scalar>& aliases = {});

// Standard aliases: eta = sqrt(Lambda), zeta = sqrt(-Lambda), i = sqrt(-1).
const std::map<std::string, Scalar>& standard_aliases();

}  // namespace pdd
