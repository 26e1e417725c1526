#pragma once

#include "leibrack/rack_series.hpp"

#include <array>
#include <optional>
#include <vector>

namespace leibrack {

struct MagicReport {
  bool pass = true;
  /// Basis indices (x1, x2, z) and the polarized residual there.
  std::optional<std::array<std::size_t, 3>> tuple;
  Vector residual;
};

/// ad_x ad_x (z) = -<x,z> x + <x,x> z, checked in polarized form
/// on every basis triple.
MagicReport check_magic(const LeibnizAlgebra& alg);

/// A0_{2n+1}(x,y) = <x,x>^n [x,y] / (2n+1)!,
/// A0_{2n}(x,y) = (<x,x>^n y - <x,x>^(n-1) <x,y> x) / (2n)!.
/// Throws Error(HypothesesFail) if check_magic fails.
RackSeries canonical_closed_form(const LeibnizAlgebra& alg, std::size_t order);

/// U[n] for n = 0..N with U[0] = 1. at() is zero for negative indices.
struct USequence {
  std::vector<Rational> u;

  std::size_t order() const noexcept { return u.empty() ? 0 : u.size() - 1; }
  Rational at(long n) const { return n < 0 || static_cast<std::size_t>(n) >= u.size() ? Rational(0) : u[n]; }
  friend bool operator==(const USequence&, const USequence&) = default;
};

/// Reads U_n off A_n = U_n n! A0_n. The probe is the first basis vector,
/// replaced by the next anisotropic basis vector if needed. The shape is
/// then checked on a second probe and on the full polar form.
/// Throws Error(HypothesesFail) unless the magic identity holds and the
/// trace form is nondegenerate, Error(ShapeMismatch) if some A_n is not of
/// that shape, Error(IsotropicProbe) if no anisotropic basis vector exists.
USequence extract_U(const RackSeries& series);

struct RecurrenceRow {
  std::size_t index = 0;  // even index 2n
  Rational residual;
};

struct RecurrenceReport {
  bool base_ok = true;  // U_1 = 1 and U_2 = 1/2
  std::vector<RecurrenceRow> rows;
  std::optional<std::size_t> first_failure;
  bool pass() const noexcept { return base_ok && !first_failure; }
};

/// U_2n = 1/2 [sum_{r=0}^{n-1} U_{2r+1} U_{2(n-r)-1} - sum_{r=1}^{n-1} U_{2r} U_{2(n-r)}].
RecurrenceReport check_U_recurrence(const USequence& u);

/// Value plus first partial derivatives.
struct Jet {
  Rational value;
  std::vector<Rational> grad;

  static Jet constant(const Rational& v, std::size_t vars) { return Jet{v, std::vector<Rational>(vars, Rational(0))}; }
  static Jet variable(const Rational& v, std::size_t vars, std::size_t i) {
    Jet j = constant(v, vars);
    j.grad[i] = 1;
    return j;
  }
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Rational& s);


/// Exponent vectors (k_1..k_m) with sum_i i k_i = m and sum_i k_i <= n.
std::vector<std::vector<unsigned>> v_index_set(std::size_t n, std::size_t m);

/// V_{n,m}(a) = sum a_1^k_1 .. a_m^k_m / (k_0! k_1! .. k_m!) with k_0 = n - sum k_i.
/// a[i-1] is a_i; entries beyond a.size() count as zero.
template <class T>
T V_nm(const std::vector<T>& a, std::size_t n, std::size_t m, const T& zero, const T& one) {
  T total = zero;
  for (const auto& k : v_index_set(n, m)) {
    T term = one;
    unsigned used = 0;
    Rational denom = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (i >= a.size()) {
        vanishes = true;
        break;
      }
      for (unsigned t = 0; t < k[i]; ++t) term = term * a[i];
      denom *= factorial(k[i]);
      used += k[i];
    }
    if (vanishes) continue;
    denom *= factorial(static_cast<unsigned>(n - used));
    const Rational inv = 1 / denom;
    total = total + term * inv;
  }
  return total;
}

Rational V_nm(const FCoeffs& a, std::size_t n, std::size_t m);

struct ASolution {
  FCoeffs a;
  std::vector<RecurrenceRow> even_residuals;  // U_2n - sum_{p=1..n} V_{2p,n-p}, all zero
};

/// a_n = U_{2n+1} - sum_{p=1..n} V_{2p+1,n-p}(a_1..a_{n-p}) for 2n+1 <= N, then
/// the even equations U_2n = sum_{p=1..n} V_{2p,n-p} are verified.
/// Throws Error(RecurrenceViolation) or Error(EvenEquationResidual).
ASolution solve_a_from_U(const USequence& u);

struct RoundtripReport {
  USequence u;
  FCoeffs recovered;
  bool recurrence_ok = false;
  bool roundtrip_ok = false;
};

/// series_from_F with P = trace form, then extract_U, check_U_recurrence,
/// solve_a_from_U; compares a_k for 2k+1 <= N.
RoundtripReport rigidity_roundtrip(const LeibnizAlgebra& alg, const FCoeffs& a, std::size_t order);

/// [ad_x^2 y, ad_x^2 z] + <x,x> [[x,y],[x,z]] = 0, for all x on the degree-4
/// grid and all basis y, z.
bool check_ad2_bracket_identity(const LeibnizAlgebra& alg);

/// sum_{r=0}^n 1/((2r)!(2n-2r)!) = sum_{r=0}^{n-1} 1/((2r+1)!(2n-2r-1)!).
bool binomial_identity_holds(std::size_t n);

}  // namespace leibrack
