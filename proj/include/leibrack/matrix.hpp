#pragma once

#include "leibrack/rational.hpp"

#include <cstddef>
#include <vector>

namespace leibrack {

/// Dense row-major matrix over Q.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static MatrixQ identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static MatrixQ from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static MatrixQ from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Rational trace() const;
  MatrixQ transpose() const;

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  /// this += s * o
  void axpy(const Rational& s, const MatrixQ& o);

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
Vector operator*(const MatrixQ& a, const Vector& x);
MatrixQ operator*(const Rational& s, const MatrixQ& a);
MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  MatrixQ reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Exact Gauss-Jordan elimination; the first nonzero entry in each column is the pivot.
RowEchelon row_echelon(MatrixQ a);
std::size_t rank(const MatrixQ& a);

/// Basis of {v : A v = 0}; one vector per free column, free variable set to 1.
std::vector<Vector> kernel_basis(const MatrixQ& a);

struct Solution {
  enum class Kind { NoSolution, Unique, Affine };
  Kind kind = Kind::NoSolution;
  Vector particular;             // valid unless kind == NoSolution
  std::vector<Vector> kernel;    // nonempty iff kind == Affine
};

/// Solves A x = b exactly. Throws Error(Input) when b.size() != A.rows().
Solution solve_linear(const MatrixQ& a, const Vector& b);

/// A linearly independent spanning set of the given vectors (echelon rows).
std::vector<Vector> span_basis(std::size_t dim, const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace leibrack
