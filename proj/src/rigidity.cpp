#include "leibrack/rigidity.hpp"

#include "leibrack/errors.hpp"

namespace leibrack {

namespace {

Rational power(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require_rigid_setting(const LeibnizAlgebra& alg) {
  if (!check_magic(alg).pass) throw Error(ErrorKind::HypothesesFail, "the magic identity fails on this algebra");
  if (rank(alg.trace_gram()) != alg.dim()) throw Error(ErrorKind::HypothesesFail, "trace form is degenerate");
}

}  // namespace

MagicReport check_magic(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  const MatrixQ& g = alg.trace_gram();
  MagicReport rep;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      MatrixQ sym = alg.ad_basis(i) * alg.ad_basis(j) + alg.ad_basis(j) * alg.ad_basis(i);
      for (std::size_t k = 0; k < d; ++k) {
        // 1/2 (ad_i ad_j + ad_j ad_i) e_k + 1/2 (<e_i,e_k> e_j + <e_j,e_k> e_i) - <e_i,e_j> e_k
        Vector r = Rational(1, 2) * sym.column(k);
        r[j] += g(i, k) / 2;
        r[i] += g(j, k) / 2;
        r[k] -= g(i, j);
        if (!is_zero(r)) {
          rep.pass = false;
          rep.tuple = std::array<std::size_t, 3>{i, j, k};
          rep.residual = std::move(r);
          return rep;
        }
      }
    }
  return rep;
}

RackSeries canonical_closed_form(const LeibnizAlgebra& alg, std::size_t order) {
  if (!check_magic(alg).pass) throw Error(ErrorKind::HypothesesFail, "the magic identity fails on this algebra");
  if (order == 0) throw Error(ErrorKind::Input, "order must be >= 1");
  const std::size_t d = alg.dim();
  const MatrixQ& g = alg.trace_gram();
  std::vector<PartSymMap> terms;
  for (std::size_t n = 1; n <= order; ++n) {
    auto diag = [&](const Vector& x) {
      const Rational q = alg.trace_form(x, x);
      const Rational inv = 1 / factorial(static_cast<unsigned>(n));
      if (n % 2 == 1) return (power(q, (n - 1) / 2) * inv) * alg.ad_matrix(x);
      const std::size_t h = n / 2;
      MatrixQ m = (power(q, h) * inv) * MatrixQ::identity(d);
      const Vector gx = g * x;  // y -> <x,y> = gx . y
      const Rational c = power(q, h - 1) * inv;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) m(r, s) -= c * x[r] * gx[s];
      return m;
    };
    terms.push_back(polarize(std::function<MatrixQ(const Vector&)>(diag), n, d));
  }
  return RackSeries(alg, std::move(terms));
}

USequence extract_U(const RackSeries& series) {
  const LeibnizAlgebra& alg = series.algebra();
  require_rigid_setting(alg);
  const std::size_t d = alg.dim();
  std::optional<Vector> probe;
  for (std::size_t i = 0; i < d && !probe; ++i)
    if (sgn(alg.trace_form(alg.basis_vector(i), alg.basis_vector(i))) != 0) probe = alg.basis_vector(i);
  if (!probe) throw Error(ErrorKind::IsotropicProbe, "no anisotropic basis vector");
  Vector second = zero_vector(d);
  for (std::size_t i = 1; i < d; ++i) second[i] = 1;
  if (d == 1) second[0] = 2;

  const RackSeries canonical = canonical_series(alg, series.order());
  USequence out;
  out.u.assign(series.order() + 1, Rational(0));
  out.u[0] = 1;
  for (std::size_t n = 1; n <= series.order(); ++n) {
    const MatrixQ m0 = canonical.diag_matrix(n, *probe);
    const MatrixQ m = series.diag_matrix(n, *probe);
    std::optional<Rational> un;
    for (std::size_t r = 0; r < d && !un; ++r)
      for (std::size_t c = 0; c < d && !un; ++c)
        if (sgn(m0(r, c)) != 0) un = m(r, c) / (factorial(static_cast<unsigned>(n)) * m0(r, c));
    if (!un) throw Error(ErrorKind::IsotropicProbe, "canonical term vanishes at the probe");
    const Rational scale = *un * factorial(static_cast<unsigned>(n));
    if (!(m == scale * m0) || !(series.diag_matrix(n, second) == scale * canonical.diag_matrix(n, second)) ||
        !(series.term(n) == scale * canonical.term(n)))
      throw Error(ErrorKind::ShapeMismatch, "A_" + std::to_string(n) + " is not a multiple of the canonical term");
    out.u[n] = *un;
  }
  return out;
}

RecurrenceReport check_U_recurrence(const USequence& u) {
  RecurrenceReport rep;
  if (u.order() >= 1 && u.at(1) != 1) rep.base_ok = false;
  if (u.order() >= 2 && u.at(2) != Rational(1, 2)) rep.base_ok = false;
  for (std::size_t n = 1; 2 * n <= u.order(); ++n) {
    const long ln = static_cast<long>(n);
    Rational odd = 0, even = 0;
    for (long r = 0; r <= ln - 1; ++r) odd += u.at(2 * r + 1) * u.at(2 * (ln - r) - 1);
    for (long r = 1; r <= ln - 1; ++r) even += u.at(2 * r) * u.at(2 * (ln - r));
    Rational res = u.at(2 * ln) - (odd - even) / 2;
    if (sgn(res) != 0 && !rep.first_failure) rep.first_failure = 2 * n;
    rep.rows.push_back({2 * n, res});
  }
  return rep;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r = a;
  r.value += b.value;
  for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] += b.grad[i];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r{a.value * b.value, std::vector<Rational>(a.grad.size())};
  for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
  return r;
}

Jet operator*(const Jet& a, const Rational& s) {
  Jet r = a;
  r.value *= s;
  for (auto& g : r.grad) g *= s;
  return r;
}

std::vector<std::vector<unsigned>> v_index_set(std::size_t n, std::size_t m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> k(m, 0);
  // Fill k_i from the largest part down; remaining weight and count tracked.
  auto rec = [&](auto&& self, std::size_t i, std::size_t weight, std::size_t count) -> void {
    if (i == 0) {
      if (weight == 0) out.push_back(k);
      return;
    }
    for (std::size_t c = 0; c * i <= weight && count + c <= n; ++c) {
      k[i - 1] = static_cast<unsigned>(c);
      self(self, i - 1, weight - c * i, count + c);
    }
    k[i - 1] = 0;
  };
  rec(rec, m, m, 0);
  return out;
}

Rational V_nm(const FCoeffs& a, std::size_t n, std::size_t m) {
  std::vector<Rational> av(m);
  for (std::size_t i = 1; i <= m; ++i) av[i - 1] = a.coeff(i);
  return V_nm<Rational>(av, n, m, Rational(0), Rational(1));
}

ASolution solve_a_from_U(const USequence& u) {
  if (!check_U_recurrence(u).pass()) throw Error(ErrorKind::RecurrenceViolation, "U fails the even recurrence");
  ASolution out;
  const std::size_t order = u.order();
  for (std::size_t n = 1; 2 * n + 1 <= order; ++n) {
    Rational an = u.at(static_cast<long>(2 * n + 1));
    for (std::size_t p = 1; p <= n; ++p) an -= V_nm(out.a, 2 * p + 1, n - p);
    out.a.a.push_back(an);
  }
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    Rational res = u.at(static_cast<long>(2 * n));
    for (std::size_t p = 1; p <= n; ++p) res -= V_nm(out.a, 2 * p, n - p);
    out.even_residuals.push_back({2 * n, res});
    if (sgn(res) != 0)
      throw Error(ErrorKind::EvenEquationResidual, "even equation fails at index " + std::to_string(2 * n));
  }
  return out;
}

RoundtripReport rigidity_roundtrip(const LeibnizAlgebra& alg, const FCoeffs& a, std::size_t order) {
  require_rigid_setting(alg);
  RoundtripReport rep;
  const RackSeries series = series_from_F(alg, trace_symform(alg), a, order);
  rep.u = extract_U(series);
  rep.recurrence_ok = check_U_recurrence(rep.u).pass();
  if (!rep.recurrence_ok) return rep;
  rep.recovered = solve_a_from_U(rep.u).a;
  rep.roundtrip_ok = true;
  for (std::size_t k = 1; 2 * k + 1 <= order; ++k)
    if (rep.recovered.coeff(k) != a.coeff(k)) rep.roundtrip_ok = false;
  return rep;
}

bool check_ad2_bracket_identity(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  CountGrid grid(d, 4);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const Vector x = grid.point(g);
    const MatrixQ adx = alg.ad_matrix(x);
    const MatrixQ ad2 = adx * adx;
    const Rational q = alg.trace_form(x, x);
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vector r = alg.bracket(ad2.column(y), ad2.column(z));
        r += q * alg.bracket(adx.column(y), adx.column(z));
        if (!is_zero(r)) return false;
      }
  }
  return true;
}

bool binomial_identity_holds(std::size_t n) {
  Rational even = 0, odd = 0;
  for (std::size_t r = 0; r <= n; ++r) even += 1 / (factorial(2 * r) * factorial(2 * (n - r)));
  for (std::size_t r = 0; r + 1 <= n; ++r) odd += 1 / (factorial(2 * r + 1) * factorial(2 * (n - r) - 1));
  return even == odd;
}

}  // namespace leibrack
