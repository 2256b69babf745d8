// Exact linear algebra: rational elimination and Scalar determinants.
#pragma once

#include <optional>
#include <vector>

#include "pdd/tensors.hpp"

namespace pdd {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

// Basis of {x : A x = 0}; `cols` is the number of unknowns.
std::vector<QRow> nullspace(QMatrix a, std::size_t cols);

std::size_t rank(QMatrix a, std::size_t cols);

Rational determinant(QMatrix a);

// Exact solution of A x = b with rational A and Scalar right-hand side, or
// nullopt when the system is inconsistent. Free unknowns are set to zero.
std::optional<Vec> solve(const QMatrix& a, const Vec& b, std::size_t cols);

// Laplace expansion with memoised minors; works over any Scalar entries.
Scalar determinant(const Tensor2& m);

// adj(M)/det(M); throws InverseOfSum when det(M) is not a single term.
Tensor2 inverse(const Tensor2& m);

}  // namespace pdd
