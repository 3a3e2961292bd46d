#include <doctest.h>

#include "invstep/linalg.hpp"
#include "support/oracles.hpp"

using namespace invstep;
using invstep::testing::RationalGen;

namespace {

Matrix swap2() { return Matrix(2, 2, {0, 1, 1, 0}); }

Matrix random_matrix(RationalGen& gen, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = gen.small();
  return m;
}

}  // namespace

TEST_CASE("mat_mul identity and involution") {
  Matrix m(2, 2, {Rational(1, 2), 3, -1, Rational(7, 5)});
  CHECK(mat_mul(Matrix::identity(2), m) == m);
  CHECK(mat_mul(swap2(), swap2()) == Matrix::identity(2));
}

TEST_CASE("mat_mul matches triple-loop oracle on random 3x3 pairs") {
  RationalGen gen(101);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(gen, 3, 3);
    Matrix b = random_matrix(gen, 3, 3);
    Matrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational dot = 0;
        for (std::size_t k = 0; k < 3; ++k) dot += a(i, k) * b(k, j);
        CHECK(c(i, j) == dot);
      }
  }
}

TEST_CASE("is_nonnegative") {
  CHECK(is_nonnegative(Matrix(2, 2)));
  CHECK_FALSE(is_nonnegative(Matrix(2, 2, {1, -1, 0, 2})));
  CHECK(is_nonnegative(Matrix(2, 2, {0, 3, 2, 0})));
}

TEST_CASE("is_offdiag_nonnegative") {
  CHECK(is_offdiag_nonnegative(Rational(-1) * Matrix::identity(2)));
  CHECK(is_offdiag_nonnegative(Matrix(2, 2, {-5, 1, 2, -7})));
  CHECK_FALSE(is_offdiag_nonnegative(Matrix(2, 2, {0, -1, 0, 0})));
}

TEST_CASE("min_diagonal_shift") {
  CHECK(min_diagonal_shift(Rational(-1) * Matrix::identity(2)) == 1);
  CHECK(min_diagonal_shift(Matrix(2, 2)) == 0);
  CHECK(min_diagonal_shift(Matrix(2, 2, {-3, 1, 0, Rational(-1, 2)})) == 3);
}

TEST_CASE("min_diagonal_shift is the least valid shift") {
  RationalGen gen(102);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = i == j ? gen.small() : gen.small_positive();
    Rational g = min_diagonal_shift(m);
    CHECK(is_nonnegative(m + g * Matrix::identity(3)));
    if (g > 0) {
      Rational smaller = g - g / 100;
      CHECK_FALSE(is_nonnegative(m + smaller * Matrix::identity(3)));
    }
  }
}

TEST_CASE("rational arithmetic is exact") {
  RationalGen gen(103);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = gen.small(1000, 999);
    Rational b = gen.small(1000, 999);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("mat_pow agrees with repeated multiplication") {
  RationalGen gen(104);
  Matrix m = random_matrix(gen, 3, 3);
  Matrix acc = Matrix::identity(3);
  for (unsigned e = 0; e <= 5; ++e) {
    CHECK(mat_pow(m, e) == acc);
    acc = mat_mul(acc, m);
  }
}

TEST_CASE("solve_linear and inverse") {
  Matrix a(2, 2, {2, 1, 1, 1});
  Matrix x = solve_linear(a, Matrix::identity(2));
  CHECK(mat_mul(a, x) == Matrix::identity(2));
  CHECK(inverse(a) == x);
  Matrix singular(2, 2, {1, 2, 2, 4});
  CHECK_THROWS(solve_linear(singular, Matrix::identity(2)));
}
