#include "invstep/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace invstep {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix entry count does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix addition dimension mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix subtraction dimension mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size())
    throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Matrix mat_pow(const Matrix& m, unsigned e) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix power requires a square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1u) result = mat_mul(result, base);
    base = mat_mul(base, base);
    e >>= 1u;
  }
  return result;
}

bool is_nonnegative(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

bool is_offdiag_nonnegative(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("off-diagonal test requires a square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) < 0) return false;
  return true;
}

Rational min_diagonal_shift(const Matrix& m) {
  if (!is_offdiag_nonnegative(m))
    throw std::invalid_argument("min_diagonal_shift requires a Metzler matrix");
  Rational min_diag = m(0, 0);
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m(i, i) < min_diag) min_diag = m(i, i);
  Rational shift = -min_diag;
  return shift > 0 ? shift : Rational(0);
}

Matrix solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_linear requires a square matrix");
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear dimension mismatch");
  const std::size_t n = a.rows();
  Matrix lhs = a;
  Matrix rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix in solve_linear");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(col, j), lhs(pivot, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        std::swap(rhs(col, j), rhs(pivot, j));
    }
    Rational inv = 1 / lhs(col, col);
    for (std::size_t j = col; j < n; ++j) lhs(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || lhs(i, col) == 0) continue;
      Rational factor = lhs(i, col);
      for (std::size_t j = col; j < n; ++j) lhs(i, j) -= factor * lhs(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        rhs(i, j) -= factor * rhs(col, j);
    }
  }
  return rhs;
}

Matrix inverse(const Matrix& a) {
  return solve_linear(a, Matrix::identity(a.rows()));
}

}  // namespace invstep
