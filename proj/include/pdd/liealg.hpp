// Finite-dimensional Lie algebras over Scalars.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdd/linalg.hpp"
#include "pdd/tensors.hpp"

namespace pdd {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct SingularForm : std::domain_error {
  explicit SingularForm(const std::string& w) : std::domain_error(w) {}
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(Names basis);

  // Builds from bracket rows {"J", "K1", "K2"} meaning [J,K1] = K2; the third
  // entry is any vector literal over the basis.
  static LieAlgebra from_table(const Names& basis,
                               const std::vector<std::array<std::string, 3>>& rows,
                               const std::map<std::string, Scalar>& aliases = {});

  std::size_t dim() const { return basis_.size(); }
  const Names& basis() const { return basis_; }
  std::size_t index(const std::string& name) const;

  // Sets [X_i, X_j] = v and [X_j, X_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  // Component k of [X_i, X_j].
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  Vec bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const;
  bool has_rational_constants() const;
  // First bracket where the two tables differ, rendered for diagnostics.
  std::optional<std::string> first_difference(const LieAlgebra& other) const;
  LieAlgebra substitute(const std::map<std::string, Scalar>& values) const;
  std::string bracket_table() const;

 private:
  Names basis_;
  std::vector<Scalar> c_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vec residual;
};
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L);

// Adjoint action of basis element X extended as a derivation to tensor powers.
Vec adjoint(const LieAlgebra& L, std::size_t x, const Vec& v);
Tensor2 adjoint(const LieAlgebra& L, std::size_t x, const Tensor2& t);
Bivector adjoint(const LieAlgebra& L, std::size_t x, const Bivector& b);
Trivector adjoint(const LieAlgebra& L, std::size_t x, const Trivector& t);
bool is_ad_invariant(const LieAlgebra& L, const Tensor2& t);
bool is_ad_invariant(const LieAlgebra& L, const Trivector& t);
// B([Z,X],Y) + B(X,[Z,Y]) = 0 for all basis elements.
bool is_invariant_form(const LieAlgebra& L, const Tensor2& form);

// Symmetric bilinear forms g with g([Z,X],Y) + g(X,[Z,Y]) = 0.
struct InvariantForms {
  std::vector<Tensor2> basis;            // rational symmetric matrices
  std::vector<bool> basis_nondegenerate;  // per basis element
  // det(sum t_m g_m) as a polynomial in the combination coefficients t0, t1, ...
  Scalar generic_determinant;
  bool some_nondegenerate = false;
};
InvariantForms invariant_symmetric_forms(const LieAlgebra& L);

// Symmetric 2-tensors T^{ij} annihilated by every ad_X: the quadratic Casimirs.
std::vector<Tensor2> invariant_symmetric_tensors(const LieAlgebra& L);

// Does the symmetric tensor commute with the adjoint action?
bool casimir_check(const LieAlgebra& L, const Tensor2& tensor);
// Same for the tensor g^{ij} obtained by inverting a form; SingularForm when g
// is degenerate.
bool casimir_check_form(const LieAlgebra& L, const Tensor2& form);

// Sampling interval for a real parameter, used in numeric cross-checks.
struct ParamDomain {
  std::string name;
  double lo = 0.25;
  double hi = 4.0;
};
using Domains = std::vector<ParamDomain>;
std::vector<Bindings> sample_bindings(const Domains& domains, std::size_t count,
                                      std::uint64_t seed);

// Matrix whose column a holds the image of source basis element a in the
// target basis.
struct LinearMap {
  LieAlgebra source;
  LieAlgebra target;
  Tensor2 matrix;

  static LinearMap from_images(const LieAlgebra& source, const LieAlgebra& target,
                               const std::vector<std::string>& images,
                               const std::map<std::string, Scalar>& aliases = {});
  Vec image(std::size_t a) const { return matrix.column(a); }
  Vec apply(const Vec& v) const { return matrix.apply(v); }
  Scalar determinant() const { return pdd::determinant(matrix); }
  LinearMap inverse() const;
  LinearMap compose_after(const LinearMap& first) const;  // this o first
  Tensor2 push(const Tensor2& t) const;                    // M T M^t
  Bivector push(const Bivector& b) const;
};

struct IsomorphismReport {
  bool exact = false;
  std::vector<std::string> failures;  // brackets that are not preserved
  std::size_t samples = 0;
  double max_numeric_residual = 0.0;
  bool numeric_ok = true;
  std::string numeric_note;  // set when the samples could not be evaluated
  bool ok() const { return exact && numeric_ok; }
};

// Exact check of m([X,Y]) = [m X, m Y]; when parameters or radicals appear the
// residuals are also evaluated at `samples` bindings drawn from `domains`.
IsomorphismReport check_isomorphism(const LinearMap& m, const Domains& domains = {},
                                    std::size_t samples = 5, std::uint64_t seed = 0,
                                    double tol = 1e-10);
bool is_isomorphism(const LinearMap& m, const Domains& domains = {});

}  // namespace pdd
