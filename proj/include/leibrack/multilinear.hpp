#pragma once

#include "leibrack/algebra.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/multiset.hpp"
#include "leibrack/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace leibrack {

/// (n+1)-linear map V^n x V -> V, symmetric in the first n slots.
/// Storage is one dim x dim block per multiset mu of the symmetric slots:
/// block(mu)(k, j) = k-th coordinate of A(e_mu, e_j).
class PartSymMap {
 public:
  PartSymMap(std::size_t n, std::size_t dim);

  std::size_t n() const noexcept { return idx_->n(); }
  std::size_t dim() const noexcept { return idx_->dim(); }
  const MultisetIndex& index() const noexcept { return *idx_; }

  MatrixQ& block(std::size_t rank) { return blocks_[rank]; }
  const MatrixQ& block(std::size_t rank) const { return blocks_[rank]; }
  const MatrixQ& block(const std::vector<std::size_t>& sorted_mu) const { return blocks_[idx_->rank(sorted_mu)]; }

  /// The linear map y -> A(xs, y).
  MatrixQ eval_matrix(std::span<const Vector> xs) const;
  Vector eval(std::span<const Vector> xs, const Vector& y) const;
  /// y -> A(x, ..., x, y).
  MatrixQ eval_diag_matrix(const Vector& x) const;
  Vector eval_diag(const Vector& x, const Vector& y) const;

  bool is_zero() const;
  PartSymMap& operator+=(const PartSymMap& o);
  PartSymMap& operator-=(const PartSymMap& o);
  PartSymMap& operator*=(const Rational& s);

  friend bool operator==(const PartSymMap& a, const PartSymMap& b) {
    return a.n() == b.n() && a.dim() == b.dim() && a.blocks_ == b.blocks_;
  }

 private:
  void check_shape(const PartSymMap& o) const;

  std::shared_ptr<const MultisetIndex> idx_;
  std::vector<MatrixQ> blocks_;
};

PartSymMap operator+(PartSymMap a, const PartSymMap& b);
PartSymMap operator-(PartSymMap a, const PartSymMap& b);
PartSymMap operator*(const Rational& s, PartSymMap a);

/// Fully symmetric p-linear form, scalar- or vector-valued.
class SymForm {
 public:
  enum class Output { Scalar, Vector };

  SymForm(std::size_t p, std::size_t dim, Output out);

  std::size_t arity() const noexcept { return idx_->n(); }
  std::size_t dim() const noexcept { return idx_->dim(); }
  Output output() const noexcept { return out_; }
  bool vector_valued() const noexcept { return out_ == Output::Vector; }
  /// 1 for scalar forms, dim for vector-valued ones.
  std::size_t out_dim() const noexcept { return vector_valued() ? dim() : 1; }
  const MultisetIndex& index() const noexcept { return *idx_; }

  Rational& at(std::size_t rank, std::size_t k) { return coeffs_[rank * out_dim() + k]; }
  const Rational& at(std::size_t rank, std::size_t k) const { return coeffs_[rank * out_dim() + k]; }
  /// Value on a basis multiset, out_dim entries.
  Vector value(std::size_t rank) const;
  void set_value(std::size_t rank, const Vector& v);

  /// Output has out_dim entries.
  Vector eval(std::span<const Vector> xs) const;
  Vector eval_diag(const Vector& x) const;
  /// Scalar forms only.
  Rational eval_scalar(std::span<const Vector> xs) const;
  Rational eval_diag_scalar(const Vector& x) const;

  bool is_zero() const;
  SymForm& operator+=(const SymForm& o);
  SymForm& operator*=(const Rational& s);

  friend bool operator==(const SymForm& a, const SymForm& b) {
    return a.arity() == b.arity() && a.dim() == b.dim() && a.out_ == b.out_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const MultisetIndex> idx_;
  Output out_;
  std::vector<Rational> coeffs_;
};

SymForm operator+(SymForm a, const SymForm& b);
SymForm operator*(const Rational& s, SymForm a);

/// Polar form of a map known on the diagonal: `diag(x)` is the linear map
/// y -> D(x, y), homogeneous of degree n in x. Exact finite-difference
/// polarization over subset sums of basis vectors.
PartSymMap polarize(const std::function<MatrixQ(const Vector&)>& diag, std::size_t n, std::size_t dim);
/// Same, with the diagonal given pointwise as (x, y) -> D(x, y).
PartSymMap polarize(const std::function<Vector(const Vector&, const Vector&)>& diag, std::size_t n, std::size_t dim);
/// Polar form of a homogeneous degree-p map x -> F(x) (out_dim entries).
SymForm polarize_form(const std::function<Vector(const Vector&)>& diag, std::size_t p, std::size_t dim,
                      SymForm::Output out);

/// Re-evaluates the diagonal of `map` on every polarization grid point and
/// compares with `diag`. True when they agree exactly.
bool verify_polarization(const PartSymMap& map, const std::function<MatrixQ(const Vector&)>& diag);

/// L_x A(y_1..y_{n+1}) = [x, A(y..)] - sum_i A(.., [x,y_i], ..).
PartSymMap lie_derivative(const LeibnizAlgebra& alg, const PartSymMap& map, const Vector& x);
/// Vector forms: [x, B(y..)] - sum_i B(.., [x,y_i], ..). Scalar forms drop the bracket term.
SymForm lie_derivative(const LeibnizAlgebra& alg, const SymForm& form, const Vector& x);

bool is_invariant(const LeibnizAlgebra& alg, const PartSymMap& map);
bool is_invariant(const LeibnizAlgebra& alg, const SymForm& form);

/// The bracket as the n = 1 map A(x, y) = [x, y].
PartSymMap bracket_map(const LeibnizAlgebra& alg);
/// The trace form <x,y> as a scalar SymForm of arity 2.
SymForm trace_symform(const LeibnizAlgebra& alg);

}  // namespace leibrack
