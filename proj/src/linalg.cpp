#include "pdd/linalg.hpp"

#include <stdexcept>
#include <unordered_map>

namespace pdd {

namespace {

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(QMatrix& a, std::size_t cols, Vec* rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    if (rhs) (*rhs)[row] = Scalar(inv) * (*rhs)[row];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
      if (rhs) (*rhs)[r] -= Scalar(f) * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<QRow> nullspace(QMatrix a, std::size_t cols) {
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QRow v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(QMatrix a, std::size_t cols) { return rref(a, cols).size(); }

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Vec> solve(const QMatrix& a_in, const Vec& b_in, std::size_t cols) {
  QMatrix a = a_in;
  Vec b = b_in;
  std::vector<std::size_t> pivots = rref(a, cols, &b);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (!b[r].is_zero()) return std::nullopt;
  Vec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

namespace {

// Determinant of the submatrix using rows [n - popcount(mask), n) and the
// columns in `mask`, expanded along its first row.
class MinorCache {
 public:
  MinorCache(const Tensor2& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols)
      : m_(m), rows_(std::move(rows)), cols_(std::move(cols)) {}

  Scalar det() { return minor((1u << cols_.size()) - 1u); }

 private:
  Scalar minor(unsigned mask) {
    if (mask == 0) return Scalar(1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::size_t used = cols_.size() - static_cast<std::size_t>(__builtin_popcount(mask));
    std::size_t row = rows_[used];
    Scalar total;
    int sign = 1;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      if (!(mask & (1u << k))) continue;
      const Scalar& e = m_(row, cols_[k]);
      if (!e.is_zero()) {
        Scalar sub = minor(mask & ~(1u << k));
        if (!sub.is_zero()) total += sign > 0 ? e * sub : -(e * sub);
      }
      sign = -sign;
    }
    memo_.emplace(mask, total);
    return total;
  }

  const Tensor2& m_;
  std::vector<std::size_t> rows_, cols_;
  std::unordered_map<unsigned, Scalar> memo_;
};

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

}  // namespace

Scalar determinant(const Tensor2& m) {
  const std::size_t n = m.dim();
  if (n > 24) throw std::invalid_argument("determinant: dimension too large for expansion");
  return MinorCache(m, all_but(n, n), all_but(n, n)).det();
}

Tensor2 inverse(const Tensor2& m) {
  const std::size_t n = m.dim();
  Scalar det = determinant(m);
  if (det.is_zero()) throw std::domain_error("singular matrix");
  Scalar inv_det = det.inverse();
  Tensor2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (M^-1)(i,j) = (-1)^(i+j) det(M without row j, column i) / det(M)
      Scalar cof = MinorCache(m, all_but(n, j), all_but(n, i)).det();
      if (cof.is_zero()) continue;
      out(i, j) = ((i + j) % 2 == 0 ? cof : -cof) * inv_det;
    }
  return out;
}

}  // namespace pdd
