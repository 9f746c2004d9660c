#include "nilsol/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilsol {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t size) {
  Vector out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& factor,
                  const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Scalar v = ia->second + factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Vector unit_vector(std::size_t i, std::size_t n) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  return from_rows(cols).transpose();
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vector data) {
  if (data.size() != rows * cols) throw std::invalid_argument("bad flat size");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return nilsol::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

Vector Matrix::diagonal_entries() const {
  Vector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix size mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).str());
  }
  return out;
}

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw std::invalid_argument("trace_of_product: size mismatch");
  }
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
    }
  }
  return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      m(a.rows() + r, a.cols() + c) = b(r, c);
    }
  }
  return m;
}

SparseVector RowEchelon::remainder(SparseVector v) const {
  // Leading-entry elimination only needs pivot rows with leading 1; entries
  // behind the lead are handled as the lead advances.
  SparseVector done;
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      done.push_back(v.front());
      v.erase(v.begin());
      continue;
    }
    v = axpy(v, -v.front().second, it->second);
  }
  return done;
}

bool RowEchelon::insert(SparseVector row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    if (lead >= cols_) throw std::out_of_range("RowEchelon: column index");
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Scalar inv = row.front().second.inverse();
      for (auto& [c, x] : row) x *= inv;
      row.front().second = Scalar(1);
      pivots_.emplace(lead, std::move(row));
      reduced_ = false;
      return true;
    }
    row = axpy(row, -row.front().second, it->second);
  }
  return false;
}

void RowEchelon::reduce() {
  if (reduced_) return;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVector& row = it->second;
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (pivots_.count(row[k].first)) hits.push_back(row[k]);
    }
    for (const auto& [c, x] : hits) row = axpy(row, -x, pivots_.at(c));
  }
  reduced_ = true;
}

std::vector<Vector> RowEchelon::kernel() {
  reduce();
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> free_index(cols_, SIZE_MAX);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!pivots_.count(c)) {
      free_index[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  std::vector<Vector> basis(free_cols.size(), Vector(cols_));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis[k][free_cols[k]] = Scalar(1);
  }
  for (const auto& [p, row] : pivots_) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      basis[free_index[row[k].first]][p] = -row[k].second;
    }
  }
  return basis;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : pivots_) out.push_back(p);
  return out;
}

std::vector<SparseVector> RowEchelon::rows() const {
  std::vector<SparseVector> out;
  for (const auto& [p, row] : pivots_) out.push_back(row);
  return out;
}

std::size_t rank(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.kernel();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  const std::size_t n = m.cols();
  RowEchelon e(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = to_sparse(m.row(r));
    if (!b[r].is_zero()) row.emplace_back(n, b[r]);
    e.insert(std::move(row));
  }
  const auto piv = e.pivot_columns();
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  e.reduce();
  Vector x(n);
  for (const auto& row : e.rows()) {
    if (!row.empty() && row.back().first == n) x[row.front().first] = row.back().second;
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  RowEchelon e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row = to_sparse(m.row(r));
    row.emplace_back(n + r, Scalar(1));
    e.insert(std::move(row));
  }
  const auto piv = e.pivot_columns();
  if (piv.size() < n || piv[n - 1] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  e.reduce();
  Matrix inv(n, n);
  const auto rows = e.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, x] : rows[r]) {
      if (c >= n) inv(r, c - n) = x;
    }
  }
  return inv;
}

Scalar determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors,
                                    std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  e.reduce();
  std::vector<Vector> out;
  for (const auto& row : e.rows()) out.push_back(to_dense(row, dim));
  return out;
}

Signature signature(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) {
    throw std::invalid_argument("signature: matrix is not symmetric");
  }
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !a(i, i).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // a_ij lets row/column j be added to i, making a_ii = 2 a_ij.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && !done[i] && !done[j] && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    done[p] = true;
    const Scalar d = a(p, p);
    (d.sign() > 0 ? sig.positive : sig.negative)++;
    const Scalar inv = d.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p).is_zero()) continue;
      const Scalar f = a(i, p) * inv;
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(p, c).is_zero()) a(i, c) -= f * a(p, c);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!a(r, p).is_zero()) a(r, i) -= f * a(r, p);
      }
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

bool is_positive_definite(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) return false;
  const std::size_t n = symmetric.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = symmetric(r, c);
    }
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

}  // namespace nilsol
