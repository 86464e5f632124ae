#pragma once

#include <cstddef>
#include <vector>

#include "pga/rational.hpp"

namespace pga {

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t n) : e_(n) {}

  std::size_t size() const { return e_.size(); }
  Rational& operator[](std::size_t i) { return e_[i]; }
  const Rational& operator[](std::size_t i) const { return e_[i]; }

  bool operator==(const RationalVector&) const = default;

 private:
  std::vector<Rational> e_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
RationalVector operator*(const RationalVector& v, const RationalMatrix& m);
Rational dot(const RationalVector& a, const RationalVector& b);

/// (I - n)^{-1} for entrywise-nonnegative n, i.e. the value of the Neumann
/// series sum_i n^i. Computed by exact Gauss-Jordan elimination with nonzero
/// pivoting; the result is checked to be entrywise nonnegative, which for
/// nonnegative n is equivalent to spectral radius < 1. Throws
/// DivergentAutomatonError when I - n is singular or the check fails.
RationalMatrix star_matrix(const RationalMatrix& n);

/// (I - n)^{-1} · rhs with the same convergence check as star_matrix.
RationalVector star_solve(const RationalMatrix& n, const RationalVector& rhs);

}  // namespace pga
