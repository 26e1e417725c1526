#pragma once

#include "leibrack/algebra.hpp"
#include "leibrack/multilinear.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace leibrack {

/// Coefficients of F(u) = 1 + sum_{k>=1} a_k u^k; a[0] holds a_1.
struct FCoeffs {
  std::vector<Rational> a;

  /// a_k for k >= 1, zero beyond the stored range.
  Rational coeff(std::size_t k) const { return k >= 1 && k <= a.size() ? a[k - 1] : Rational(0); }
  friend bool operator==(const FCoeffs&, const FCoeffs&) = default;
};

/// Truncated analytic linear rack x |> y = y + sum_{n=1..N} A_n(x,..,x,y).
/// A_0(x, y) = y is implicit.
class RackSeries {
 public:
  /// terms[n-1] must have symmetric arity n.
  RackSeries(LeibnizAlgebra alg, std::vector<PartSymMap> terms);

  const LeibnizAlgebra& algebra() const noexcept { return *alg_; }
  std::shared_ptr<const LeibnizAlgebra> algebra_ptr() const noexcept { return alg_; }
  std::size_t order() const noexcept { return terms_.size(); }
  /// A_n for 1 <= n <= order().
  const PartSymMap& term(std::size_t n) const;
  const std::vector<PartSymMap>& terms() const noexcept { return terms_; }
  /// Replaces A_n; used to build perturbed series.
  void set_term(std::size_t n, PartSymMap map);

  /// y -> A_n(x,..,x,y); the identity for n = 0.
  MatrixQ diag_matrix(std::size_t n, const Vector& x) const;

 private:
  std::shared_ptr<const LeibnizAlgebra> alg_;
  std::vector<PartSymMap> terms_;
};

/// A_n(x_1..x_n, y) = 1/(n!)^2 sum_{sigma} ad_{x_sigma(1)} ... ad_{x_sigma(n)} (y).
/// Throws Error(NotLeibniz) if the algebra fails the left Leibniz identity.
RackSeries canonical_series(const LeibnizAlgebra& alg, std::size_t order);

/// Residual of a bihomogeneous identity F(x, y)(z) = 0 of degree p in x and
/// q in y, linear in z: the basis tuple whose polar value is nonzero.
struct BipolarWitness {
  std::vector<std::size_t> x_multiset;
  std::vector<std::size_t> y_multiset;
  std::size_t z = 0;
  Vector residual;
};

/// Compares the bipolar form of F with zero on all basis tuples.
/// F(x, y) returns the matrix z -> F(x, y)(z).
std::optional<BipolarWitness> find_bipolar_residual(std::size_t dim, std::size_t p, std::size_t q,
                                                    const std::function<MatrixQ(const Vector&, const Vector&)>& f);

struct EqmReport {
  std::size_t p = 0;
  std::size_t q = 0;
  bool pass = true;
  std::optional<BipolarWitness> witness;
};

/// A_p(x, A_q(y, z)) = sum_{s_1+..+s_q+k=p} A_q(A_{s_1}(x,y), .., A_{s_q}(x,y), A_k(x,z)),
/// all indices >= 0, checked as a full multilinear identity.
/// Throws Error(InsufficientOrder) unless 1 <= p, q <= order.
EqmReport check_eqm(const RackSeries& series, std::size_t p, std::size_t q);

/// All (p, q) with p, q >= 1 and p + q <= max_total, evaluated concurrently.
std::vector<EqmReport> check_eqm_all(const RackSeries& series, std::size_t max_total);

/// Self-distributivity x|>(y|>z) = (x|>y)|>(x|>z) compared degree by degree
/// through a direct truncated expansion (independent of the eqm bookkeeping).
/// One report per bidegree (a, b), a, b >= 1, a + b <= max_total; p = a, q = b.
std::vector<EqmReport> check_self_distributivity_formal(const RackSeries& series, std::size_t max_total);

struct InvarianceReport {
  std::vector<bool> invariant;            // invariant[n-1] for A_n
  std::optional<std::size_t> first_failure;
  bool pass() const noexcept { return !first_failure.has_value(); }
};

InvarianceReport check_invariance_all(const RackSeries& series);

Vector eval_truncated(const RackSeries& series, const Vector& x, const Vector& y);

/// Coefficients c[m][j] of u^j ad_x^m in exp(F(u) ad_x) = sum_m F(u)^m ad_x^m / m!,
/// for m <= max_m, j <= max_j.
std::vector<std::vector<Rational>> exp_composition_coefficients(const FCoeffs& f, std::size_t max_m,
                                                                std::size_t max_j);

/// Series of x |> y = exp(F(P(x,..,x)) ad_x)(y) truncated at total degree `order`.
/// P must be an invariant scalar form (Error(NotInvariant) otherwise).
RackSeries series_from_F(const LeibnizAlgebra& alg, const SymForm& p_form, const FCoeffs& f, std::size_t order);

}  // namespace leibrack
