#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsol/scalar.hpp"

namespace nilsol {

using Vector = std::vector<Scalar>;
/// Sorted (column, value) pairs, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t size);
/// a + factor * b
SparseVector axpy(const SparseVector& a, const Scalar& factor,
                  const SparseVector& b);
Vector unit_vector(std::size_t i, std::size_t n);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Vector diagonal_entries() const;
  /// Entries in row-major order (the n^2 coordinates of an endomorphism).
  const Vector& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, Vector data);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator-(const Matrix& a) { return a * Scalar(-1); }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Tr(A B) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);
/// [A, B] = AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);
/// Block diagonal A (+) B.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Incremental Gaussian elimination over sparse rows.
///
/// Rows are kept with a leading 1; `reduce()` brings the stored rows to
/// reduced row echelon form, after which kernel() and particular solutions
/// are read off directly.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns true if it was independent of the stored rows.
  bool insert(SparseVector row);
  bool insert(const Vector& row) { return insert(to_sparse(row)); }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  /// Remainder of v after elimination against the stored rows; zero iff v
  /// lies in the row space.
  SparseVector remainder(SparseVector v) const;
  bool in_row_space(const Vector& v) const {
    return remainder(to_sparse(v)).empty();
  }
  void reduce();
  /// Basis of {x : R x = 0}, one vector per free column in increasing order.
  std::vector<Vector> kernel();
  std::vector<std::size_t> pivot_columns() const;
  /// Rows in increasing pivot order (after reduce(), this is the RREF).
  std::vector<SparseVector> rows() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseVector> pivots_;
  bool reduced_ = true;
};

std::size_t rank(const Matrix& m);
/// Basis of the right nullspace {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// One solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);
Scalar determinant(Matrix m);
/// RREF basis of span(vectors).
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors,
                                    std::size_t dim);

/// Sylvester signature (positive, zero, negative) of a symmetric matrix,
/// computed by exact congruence diagonalization.
struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const Matrix& symmetric);
/// All leading principal minors positive.
bool is_positive_definite(const Matrix& symmetric);

}  // namespace nilsol
