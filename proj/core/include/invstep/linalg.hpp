#pragma once

#include <cstddef>
#include <vector>

#include "invstep/rational.hpp"

namespace invstep {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_pow(const Matrix& m, unsigned e);

bool is_nonnegative(const Matrix& m);

/// True iff every entry off the diagonal is >= 0 (Metzler test).
bool is_offdiag_nonnegative(const Matrix& m);

/// Least gamma >= 0 with m + gamma*I >= 0; requires off-diagonal nonnegativity.
Rational min_diagonal_shift(const Matrix& m);

/// Solves A X = B exactly by Gaussian elimination; throws on singular A.
Matrix solve_linear(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

}  // namespace invstep
