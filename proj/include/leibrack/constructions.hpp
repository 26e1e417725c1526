#pragma once

#include "leibrack/multilinear.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace leibrack {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

/// Rack operation on R^dim, linear in the second argument.
struct FloatRack {
  std::size_t dim = 0;
  std::function<VecD(const VecD&, const VecD&)> op;
  std::string label;

  /// Matrix of y -> x |> y.
  MatD left_matrix(const VecD& x) const;
};

struct Sampler {
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

/// Uniform points in the closed ball of the given radius.
std::vector<VecD> sample_ball(std::size_t dim, std::size_t count, std::uint64_t seed, double radius = 1.0);

struct AxiomReport {
  double self_distributivity = 0;  // max |x|>(y|>z) - (x|>y)|>(x|>z)|
  double pointedness = 0;          // max of |x|>0| and |0|>y - y|
  double min_abs_det = 0;          // min |det L_x|
  double linearity = 0;            // max |x|>(ay+bz) - a x|>y - b x|>z|
  bool pass = false;
};

/// Pointedness is held to 1e-12 and bijectivity to |det| > 1e-12;
/// self-distributivity and linearity to sampler.tol.
AxiomReport check_axioms(const FloatRack& rack, const Sampler& sampler);

/// Central-difference derivative of t -> (t x) |> y at 0.
VecD extracted_bracket(const FloatRack& rack, const VecD& x, const VecD& y, double h = 1e-4);

/// F(u) = constant + sum_k coeffs[k-1] u^k.
struct PowerSeries {
  double constant = 1;
  std::vector<double> coeffs;
  double operator()(double u) const;
};

VecD to_float(const Vector& v);
MatD ad_float(const LeibnizAlgebra& alg, const VecD& x);
double eval_diag_float(const SymForm& p, const VecD& x);

/// x |> y = exp(F(P(x,..,x)) ad_x)(y). Throws Error(NotInvariant).
FloatRack pr1_rack(const LeibnizAlgebra& alg, const SymForm& p, const PowerSeries& f);

/// x |>_J y = J(x) |> y. Throws Error(Precondition) when
/// |J(x|>y) - x|>J(y)| >= sampler.tol on some sample.
FloatRack twist_rack(const FloatRack& rack, std::function<VecD(const VecD&)> j, const Sampler& sampler);

struct Pr22Term {
  Vector a;
  Vector b;
  Vector z;
  std::vector<Rational> f;  // polynomial coefficients by degree, f[0] = 0
};

/// x |> y = exp(ad_x) y + sum_j <y,b_j> f_j(<x,a_j>) z_j with the coordinate
/// dot product. Requires a_j, b_j orthogonal to [h,h] and Z(h), z_j central,
/// f_j(0) = 0; throws Error(Precondition) otherwise.
FloatRack pr22_rack(const LeibnizAlgebra& alg, const std::vector<Pr22Term>& terms);

struct CoReport {
  bool printed_hypotheses = false;  // [h,h] + Z != h and Z != 0
  Vector a;
  Vector z;
  Vector a_rack_a_minus_a;          // exact: |a|^6 z
  AxiomReport axioms;
  bool witness = false;
};

/// x |> y = exp(ad_x) y + <x,a>^2 <y,a> z with z central and a orthogonal to
/// [h,h] + R z, [a,a] = 0. Prefers a in [h,h]^perp and Z^perp when that is
/// nonzero. Throws Error(HypothesesFail) if Z = 0 or no such a exists.
CoReport co_counterexample(const LeibnizAlgebra& alg, const Sampler& sampler);

/// Sum over N < n <= 100 of the majorant (Frobenius norm for ad_x) |c_{m,j}| |<x,x>|^j |ad_x|^m |y|, m + 2j = n,
/// for F = 1 + sum a_k u^k with P the trace form.
double pr1_tail_bound(const LeibnizAlgebra& alg, const std::vector<Rational>& a, std::size_t order, const VecD& x,
                      const VecD& y);

}  // namespace leibrack
