#pragma once

#include "leibrack/matrix.hpp"
#include "leibrack/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace leibrack {

/// A linear subspace of Q^ambient_dim given by an independent basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const Vector& v) const { return in_span(basis, v); }
};

struct LeibnizViolation {
  std::array<std::size_t, 3> triple;  // (i, j, k)
  Vector residual;                    // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]
};

struct LeibnizReport {
  bool pass = true;
  std::vector<LeibnizViolation> violations;
};

/// Finite-dimensional left Leibniz algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Immutable after construction.
class LeibnizAlgebra {
 public:
  /// Validates the left Leibniz identity on all basis triples; throws
  /// Error(NotLeibniz) otherwise.
  LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<Rational> constants);

  /// Skips validation. Only for building deliberately broken inputs.
  static LeibnizAlgebra unchecked(std::vector<std::string> basis_names, std::vector<Rational> constants);

  /// Structure constants from a basis of square matrices closed under the commutator.
  static LeibnizAlgebra from_matrix_basis(std::vector<std::string> basis_names,
                                          const std::vector<MatrixQ>& matrices);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& constants() const noexcept { return c_; }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Column j is [x, e_j].
  MatrixQ ad_matrix(const Vector& x) const;
  /// Column j is [e_j, x].
  MatrixQ right_matrix(const Vector& x) const;
  /// ad(e_i), cached.
  const MatrixQ& ad_basis(std::size_t i) const { return ad_basis_[i]; }

  /// <x,y> = 1/2 tr(ad_x ad_y).
  Rational trace_form(const Vector& x, const Vector& y) const;
  /// Gram matrix of the trace form on the basis.
  const MatrixQ& trace_gram() const noexcept { return gram_; }

  /// True when [x,y] = -[y,x] on all basis pairs.
  bool is_lie() const;

 private:
  LeibnizAlgebra(std::vector<std::string> names, std::vector<Rational> constants, bool validate);

  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
  std::vector<MatrixQ> ad_basis_;
  MatrixQ gram_;
};

LeibnizReport check_left_leibniz(const LeibnizAlgebra& alg);

/// {a : [a,h] = [h,a] = 0}
Subspace center(const LeibnizAlgebra& alg);
/// span of all [e_i, e_j]
Subspace derived(const LeibnizAlgebra& alg);

/// Built-in algebras: "sl2", "so3", "gl2", "heisenberg", "nilpotent4",
/// "abelian:<d>". Throws Error(Input) on unknown names.
///
/// sl2 basis (h, e, f) with h = diag(1,-1): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
/// so3 basis (Ea, Eb, Ec): the elementary skew 3x3 matrices carrying the
/// entries (1,2), (1,3), (2,3) respectively.
/// heisenberg: [e1,e2] = e3 = -[e2,e1].
/// nilpotent4: heisenberg plus a central e4 (2-step nilpotent, dim 4).
LeibnizAlgebra builtin(const std::string& name);

}  // namespace leibrack
