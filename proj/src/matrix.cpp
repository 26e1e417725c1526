#include "leibrack/matrix.hpp"

#include "leibrack/errors.hpp"

#include <utility>

namespace leibrack {

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  MatrixQ m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

MatrixQ MatrixQ::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::Input, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector MatrixQ::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector MatrixQ::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void MatrixQ::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::Input, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool MatrixQ::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational MatrixQ::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Input, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Input, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

void MatrixQ::axpy(const Rational& s, const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Input, "matrix shape mismatch");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += s * o.data_[i];
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Input, "matrix product shape mismatch");
  MatrixQ m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

Vector operator*(const MatrixQ& a, const Vector& x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::Input, "matrix-vector shape mismatch");
  Vector y = zero_vector(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) y[i] += a(i, j) * x[j];
  }
  return y;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ m(a.rows(), a.cols());
  m.axpy(s, a);
  return m;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ m = a;
  m += b;
  return m;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ m = a;
  m -= b;
  return m;
}

RowEchelon row_echelon(MatrixQ a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(row, c)) != 0) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const MatrixQ& a) { return row_echelon(a).rank(); }

std::vector<Vector> kernel_basis(const MatrixQ& a) {
  RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Solution solve_linear(const MatrixQ& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::Input, "solve_linear: rhs length != rows");
  MatrixQ aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = row_echelon(std::move(aug));
  Solution s;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return s;  // inconsistent row
  s.particular = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced(r, a.cols());
  s.kernel = kernel_basis(a);
  s.kind = s.kernel.empty() ? Solution::Kind::Unique : Solution::Kind::Affine;
  return s;
}

std::vector<Vector> span_basis(std::size_t dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  RowEchelon e = row_echelon(MatrixQ::from_rows(dim, vectors));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.rank(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vector> rows = basis;
  rows.push_back(v);
  return rank(MatrixQ::from_rows(v.size(), rows)) == rank(MatrixQ::from_rows(v.size(), basis));
}

}  // namespace leibrack
