// Lie bialgebra layer: cocommutators, cocycle conditions, Schouten brackets
// and coisotropy of subalgebras.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdd/liealg.hpp"

namespace pdd {

// delta(X_i) = sum_{j<k} f^{jk}_i X_j^X_k, one bivector per basis element.
struct Cocommutator {
  std::vector<Bivector> images;

  explicit Cocommutator(std::size_t n = 0) : images(n, Bivector(n)) {}
  std::size_t dim() const { return images.size(); }
  // Antisymmetric component f^{jk}_i.
  Scalar f(std::size_t i, std::size_t j, std::size_t k) const { return images[i].coeff(j, k); }
  bool is_zero() const;

  // A dual bracket [x^j, x^k] = f^{jk}_i x^i read off an algebra on the dual space.
  static Cocommutator from_dual(const LieAlgebra& dual);
  LieAlgebra dual_algebra(const Names& dual_basis) const;
  std::string to_string(const Names& names) const;

  friend bool operator==(const Cocommutator& a, const Cocommutator& b) { return a.images == b.images; }
};

struct CocycleViolation {
  std::size_t i, j, l, m;
  Scalar residual;
};
// Index form of delta([X_i,X_j]) = ad_{X_i} delta(X_j) - ad_{X_j} delta(X_i).
std::vector<CocycleViolation> cocycle_check(const LieAlgebra& L, const Cocommutator& delta);
std::vector<JacobiViolation> cojacobi_check(const Cocommutator& delta);

// delta(X) = [X@1 + 1@X, r].
Cocommutator coboundary_delta(const LieAlgebra& L, const Bivector& r);

// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] for skew r.
Trivector schouten(const LieAlgebra& L, const Bivector& r);
// Symmetric bilinear polarisation with schouten(L, r, r) == schouten(L, r).
Trivector schouten(const LieAlgebra& L, const Bivector& r, const Bivector& s);

enum class Mcybe { triangular, quasitriangular, fails };
std::string to_string(Mcybe m);
struct McybeReport {
  Mcybe verdict;
  Trivector bracket;
};
McybeReport mcybe_check(const LieAlgebra& L, const Bivector& r);

struct NotSubalgebra : std::invalid_argument {
  explicit NotSubalgebra(const std::string& w) : std::invalid_argument(w) {}
};

class SubalgebraSpec {
 public:
  // Throws NotSubalgebra unless the span is closed under the bracket.
  SubalgebraSpec(const LieAlgebra& L, std::vector<std::size_t> indices);
  const std::vector<std::size_t>& indices() const { return idx_; }
  bool contains(std::size_t i) const;

 private:
  std::vector<std::size_t> idx_;
};

enum class Coisotropy { poisson_subgroup, coisotropic, neither };
std::string to_string(Coisotropy c);

struct CoisotropyReport {
  Coisotropy verdict = Coisotropy::poisson_subgroup;
  // For anything short of poisson_subgroup: the first generator of h whose
  // cocommutator leaves the allowed space, and the offending terms.
  std::optional<std::size_t> witness;
  Bivector offending;
};
CoisotropyReport coisotropy_classify(const Cocommutator& delta, const SubalgebraSpec& h);

}  // namespace pdd
