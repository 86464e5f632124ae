#include "pga/linalg.hpp"

#include <stdexcept>

#include "pga/errors.hpp"

namespace pga {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero() || v[j].is_zero()) continue;
      acc += m(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

RationalVector operator*(const RationalVector& v, const RationalMatrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("vector/matrix size mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out[j] += v[i] * m(i, j);
    }
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i] * b[i];
  }
  return acc;
}

RationalMatrix star_matrix(const RationalMatrix& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("star of a non-square matrix");
  const std::size_t dim = n.rows();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (n(i, j).is_negative())
        throw std::invalid_argument("star of a matrix with negative entries");

  // Gauss-Jordan on [I - n | I].
  RationalMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(i, j) = (i == j ? Rational(1) - n(i, j) : -n(i, j));
  RationalMatrix inv = RationalMatrix::identity(dim);

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a(pivot, col).is_zero()) ++pivot;
    if (pivot == dim)
      throw DivergentAutomatonError(
          "scalar cycles carry mass >= 1 (I - M is singular)");
    if (pivot != col) {
      for (std::size_t j = 0; j < dim; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < dim; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      Rational factor = a(row, col);
      for (std::size_t j = 0; j < dim; ++j) {
        if (!a(col, j).is_zero()) a(row, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(row, j) -= factor * inv(col, j);
      }
    }
  }

  // For nonnegative n, (I - n)^{-1} >= 0 entrywise iff the Neumann series
  // converges (M-matrix criterion); a negative entry means divergence.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (inv(i, j).is_negative())
        throw DivergentAutomatonError("scalar cycles carry mass >= 1");
  return inv;
}

RationalVector star_solve(const RationalMatrix& n, const RationalVector& rhs) {
  if (n.rows() != rhs.size()) throw std::invalid_argument("matrix/vector size mismatch");
  return star_matrix(n) * rhs;
}

}  // namespace pga
