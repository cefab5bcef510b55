#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q. Sizes here are tiny (a few hundred rows
/// at most), so plain Gaussian elimination is all we need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& blocks);
/// Sub-matrix picking the given rows and columns.
Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column. The basis vector
/// for free column f has a 1 in position f (canonical RREF basis).
std::vector<Vector> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Solves m x = b; nullopt when inconsistent. Picks free variables = 0.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace gfrob
