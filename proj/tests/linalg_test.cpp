#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pga/errors.hpp"
#include "pga/linalg.hpp"

using pga::DivergentAutomatonError;
using pga::Rational;
using pga::RationalMatrix;
using pga::RationalVector;

namespace {

RationalMatrix mat1(Rational a) {
  RationalMatrix m(1, 1);
  m(0, 0) = a;
  return m;
}

RationalVector vec1(Rational a) {
  RationalVector v(1);
  v[0] = a;
  return v;
}

}  // namespace

TEST_CASE("star of a scalar contraction is the geometric series value") {
  RationalVector x = star_solve(mat1(Rational(1, 2)), vec1(1));
  CHECK(x[0] == Rational(2));  // sum (1/2)^i = 2
}

TEST_CASE("star of the zero matrix is the identity") {
  RationalMatrix n(3, 3);
  RationalVector rhs(3);
  rhs[0] = Rational(1, 7);
  rhs[1] = Rational(2);
  rhs[2] = Rational(0);
  RationalVector x = star_solve(n, rhs);
  CHECK(x == rhs);
}

TEST_CASE("weight-1 self-loop diverges") {
  CHECK_THROWS_AS(star_solve(mat1(Rational(1)), vec1(1)), DivergentAutomatonError);
  CHECK_THROWS_AS(star_solve(mat1(Rational(3, 2)), vec1(1)), DivergentAutomatonError);
}

TEST_CASE("spectral radius straddling one on 2x2 matrices") {
  // Off-diagonal 1/2: radius 1/2, converges.
  RationalMatrix half(2, 2);
  half(0, 1) = Rational(1, 2);
  half(1, 0) = Rational(1, 2);
  RationalMatrix s = star_matrix(half);
  // (I - n)^{-1} = 1/(1 - 1/4) * [[1, 1/2], [1/2, 1]]
  CHECK(s(0, 0) == Rational(4, 3));
  CHECK(s(0, 1) == Rational(2, 3));
  CHECK(s(1, 0) == Rational(2, 3));
  CHECK(s(1, 1) == Rational(4, 3));

  // Off-diagonal 1: radius exactly 1, diverges.
  RationalMatrix one(2, 2);
  one(0, 1) = Rational(1);
  one(1, 0) = Rational(1);
  CHECK_THROWS_AS(star_matrix(one), DivergentAutomatonError);

  // Slightly below 1 converges again.
  RationalMatrix below(2, 2);
  below(0, 1) = Rational(1);
  below(1, 0) = Rational(9999, 10000);
  CHECK_NOTHROW(star_matrix(below));
}

TEST_CASE("nilpotent matrices converge despite entries above one") {
  RationalMatrix n(2, 2);
  n(0, 1) = Rational(5);  // strictly upper triangular: radius 0
  RationalMatrix s = star_matrix(n);
  CHECK(s(0, 0) == Rational(1));
  CHECK(s(0, 1) == Rational(5));
  CHECK(s(1, 1) == Rational(1));
}

TEST_CASE("negative entries are rejected") {
  CHECK_THROWS_AS(star_matrix(mat1(Rational(-1, 2))), std::invalid_argument);
}

TEST_CASE("non-square and mismatched shapes are rejected") {
  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(star_matrix(rect), std::invalid_argument);
  CHECK_THROWS_AS(star_solve(RationalMatrix(2, 2), RationalVector(3)),
                  std::invalid_argument);
}

TEST_CASE("matrix-vector products") {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 1) = Rational(2);
  RationalVector v(2);
  v[0] = Rational(6);
  v[1] = Rational(3);

  RationalVector mv = m * v;
  CHECK(mv[0] == Rational(4));  // 3 + 1
  CHECK(mv[1] == Rational(6));

  RationalVector vm = v * m;
  CHECK(vm[0] == Rational(3));
  CHECK(vm[1] == Rational(8));  // 2 + 6

  CHECK(dot(v, v) == Rational(45));
}
