#pragma once

#include "leibrack/algebra.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace leibrack {

/// n-linear map h^n -> h, not symmetric. Coefficients are indexed by the
/// ordered basis tuple (x_0 most significant) and the output coordinate.
class Cochain {
 public:
  Cochain(std::size_t degree, std::size_t dim);

  static Cochain from_vector(const Vector& v);
  /// Degree 1 from a matrix acting on columns.
  static Cochain from_matrix(const MatrixQ& m);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t tuple_count() const noexcept { return tuples_; }

  std::vector<std::size_t> tuple(std::size_t index) const;
  std::size_t tuple_index(std::span<const std::size_t> tuple) const;

  Rational& at(std::size_t tuple_index, std::size_t k) { return coeffs_[tuple_index * dim_ + k]; }
  const Rational& at(std::size_t tuple_index, std::size_t k) const { return coeffs_[tuple_index * dim_ + k]; }
  Vector value(std::size_t tuple_index) const;

  /// Multilinear evaluation on arbitrary vectors.
  Vector eval(std::span<const Vector> xs) const;
  /// Degree 1 only.
  MatrixQ to_matrix() const;

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t degree_;
  std::size_t dim_;
  std::size_t tuples_;
  std::vector<Rational> coeffs_;
};

/// delta(w)(x_0..x_n) = sum_{i<n} (-1)^i [x_i, w(..^x_i..)] + (-1)^(n-1) [w(x_0..x_{n-1}), x_n]
///                    + sum_{i<j} (-1)^(i+1) w(..^x_i.., [x_i,x_j], ..).
/// Degrees 0 through 3. Throws Error(Input) above that.
Cochain delta(const LeibnizAlgebra& alg, const Cochain& w);

/// Matrix of delta: C^n -> C^(n+1) in the coefficient bases.
MatrixQ delta_matrix(const LeibnizAlgebra& alg, std::size_t degree);

struct CohomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};

CohomologyDims cohomology_dims(const LeibnizAlgebra& alg);

struct CoboundarySolution {
  enum class Status { Unique, NonUnique, NotACocycle, NoSolution };
  Status status = Status::NoSolution;
  Vector b;                         // particular solution when one exists
  std::vector<Vector> family;       // kernel of b -> ad_b, for NonUnique
  bool ok() const noexcept { return status == Status::Unique; }
};

const char* to_string(CoboundarySolution::Status s);

/// Solves D(y) = [b, y] for a degree-1 cocycle D. Note delta(b) = -[b, .],
/// so b is minus the usual coboundary preimage.
CoboundarySolution solve_coboundary(const LeibnizAlgebra& alg, const Cochain& d);

}  // namespace leibrack
