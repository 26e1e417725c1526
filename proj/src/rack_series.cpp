#include "leibrack/rack_series.hpp"

#include "leibrack/errors.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace leibrack {

RackSeries::RackSeries(LeibnizAlgebra alg, std::vector<PartSymMap> terms)
    : alg_(std::make_shared<const LeibnizAlgebra>(std::move(alg))), terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorKind::Input, "rack series needs order >= 1");
  for (std::size_t n = 1; n <= terms_.size(); ++n) {
    if (terms_[n - 1].n() != n) throw Error(ErrorKind::Input, "A_" + std::to_string(n) + " has the wrong arity");
    if (terms_[n - 1].dim() != alg_->dim()) throw Error(ErrorKind::Input, "series term dimension mismatch");
  }
}

const PartSymMap& RackSeries::term(std::size_t n) const {
  if (n < 1 || n > terms_.size()) throw Error(ErrorKind::InsufficientOrder, "A_" + std::to_string(n) + " not in series");
  return terms_[n - 1];
}

void RackSeries::set_term(std::size_t n, PartSymMap map) {
  if (n < 1 || n > terms_.size() || map.n() != n || map.dim() != alg_->dim())
    throw Error(ErrorKind::Input, "set_term: shape mismatch");
  terms_[n - 1] = std::move(map);
}

MatrixQ RackSeries::diag_matrix(std::size_t n, const Vector& x) const {
  if (n == 0) return MatrixQ::identity(alg_->dim());
  return term(n).eval_diag_matrix(x);
}

RackSeries canonical_series(const LeibnizAlgebra& alg, std::size_t order) {
  if (!check_left_leibniz(alg).pass) throw Error(ErrorKind::NotLeibniz, "canonical_series needs a left Leibniz algebra");
  if (order == 0) throw Error(ErrorKind::Input, "order must be >= 1");
  const std::size_t d = alg.dim();
  // S(m) = sum over distinct words with letter counts m of the ad-products,
  // built from S(m) = sum_{i : m_i > 0} ad_i S(m - e_i).
  CountGrid grid(d, order);
  std::vector<MatrixQ> sym(grid.size());
  std::vector<std::size_t> by_total(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) by_total[g] = g;
  auto total = [&](std::size_t g) {
    std::size_t t = 0;
    for (auto c : grid.counts(g)) t += c;
    return t;
  };
  std::stable_sort(by_total.begin(), by_total.end(), [&](auto a, auto b) { return total(a) < total(b); });
  for (auto g : by_total) {
    const auto& m = grid.counts(g);
    MatrixQ acc(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (m[i] == 0) continue;
      std::vector<unsigned> prev = m;
      --prev[i];
      bool empty = std::all_of(prev.begin(), prev.end(), [](unsigned v) { return v == 0; });
      acc += empty ? alg.ad_basis(i) : alg.ad_basis(i) * sym[grid.find(prev)];
    }
    sym[g] = std::move(acc);
  }
  std::vector<PartSymMap> terms;
  for (std::size_t n = 1; n <= order; ++n) {
    PartSymMap a(n, d);
    const Rational nfact = factorial(static_cast<unsigned>(n));
    const auto& idx = a.index();
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Rational w = 1 / (nfact * nfact);
      for (auto c : idx.counts(r)) w *= factorial(c);
      a.block(r) = w * sym[grid.find(idx.counts(r))];
    }
    terms.push_back(std::move(a));
  }
  return RackSeries(alg, std::move(terms));
}

std::optional<BipolarWitness> find_bipolar_residual(std::size_t dim, std::size_t p, std::size_t q,
                                                    const std::function<MatrixQ(const Vector&, const Vector&)>& f) {
  CountGrid gx(dim, p), gy(dim, q);
  std::vector<std::vector<MatrixQ>> values(gx.size());
  for (std::size_t i = 0; i < gx.size(); ++i) {
    Vector x = gx.point(i);
    values[i].reserve(gy.size());
    for (std::size_t j = 0; j < gy.size(); ++j) values[i].push_back(f(x, gy.point(j)));
  }
  MultisetIndex ix(dim, p), iy(dim, q);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sy(iy.size());
  for (std::size_t s = 0; s < iy.size(); ++s) sy[s] = polar_stencil(gy, iy.counts(s));
  for (std::size_t r = 0; r < ix.size(); ++r) {
    auto sx = polar_stencil(gx, ix.counts(r));
    for (std::size_t s = 0; s < iy.size(); ++s) {
      MatrixQ acc(dim, dim);
      for (const auto& [a, wa] : sx)
        for (const auto& [b, wb] : sy[s]) acc.axpy(wa * wb, values[a][b]);
      if (acc.is_zero()) continue;
      for (std::size_t z = 0; z < dim; ++z) {
        Vector col = acc.column(z);
        if (!is_zero(col)) return BipolarWitness{ix.multiset(r), iy.multiset(s), z, std::move(col)};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Multisets {s_1..s_q} of nonnegative integers with sum <= p, each with its
// number of distinct orderings.
void collect_multisets(std::size_t q, std::size_t budget, std::size_t min_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == q) {
    out.push_back(cur);
    return;
  }
  for (std::size_t s = min_part; s <= budget; ++s) {
    cur.push_back(s);
    collect_multisets(q, budget - s, s, cur, out);
    cur.pop_back();
  }
}

Rational orderings(const std::vector<std::size_t>& parts) {
  Rational r = factorial(static_cast<unsigned>(parts.size()));
  std::map<std::size_t, unsigned> mult;
  for (auto s : parts) ++mult[s];
  for (auto& [s, m] : mult) r /= factorial(m);
  return r;
}

}  // namespace

EqmReport check_eqm(const RackSeries& series, std::size_t p, std::size_t q) {
  if (p < 1 || q < 1 || p > series.order() || q > series.order())
    throw Error(ErrorKind::InsufficientOrder, "check_eqm needs 1 <= p, q <= N");
  const std::size_t d = series.algebra().dim();
  std::vector<std::vector<std::size_t>> parts;
  {
    std::vector<std::size_t> cur;
    collect_multisets(q, p, 0, cur, parts);
  }
  std::vector<Rational> weights;
  for (const auto& ps : parts) weights.push_back(orderings(ps));

  auto residual = [&](const Vector& x, const Vector& y) {
    std::vector<MatrixQ> ax(p + 1);
    std::vector<Vector> u(p + 1);
    for (std::size_t s = 0; s <= p; ++s) {
      ax[s] = series.diag_matrix(s, x);
      u[s] = ax[s] * y;
    }
    MatrixQ lhs = ax[p] * series.diag_matrix(q, y);
    MatrixQ rhs(d, d);
    const PartSymMap& aq = series.term(q);
    std::vector<Vector> args(q);
    for (std::size_t t = 0; t < parts.size(); ++t) {
      std::size_t used = 0;
      for (std::size_t i = 0; i < q; ++i) {
        args[i] = u[parts[t][i]];
        used += parts[t][i];
      }
      rhs.axpy(weights[t], aq.eval_matrix(args) * ax[p - used]);
    }
    return lhs - rhs;
  };

  EqmReport report{p, q, true, std::nullopt};
  report.witness = find_bipolar_residual(d, p, q, residual);
  report.pass = !report.witness.has_value();
  return report;
}

std::vector<EqmReport> check_eqm_all(const RackSeries& series, std::size_t max_total) {
  std::vector<std::future<EqmReport>> jobs;
  for (std::size_t total = 2; total <= max_total; ++total)
    for (std::size_t p = 1; p < total; ++p)
      jobs.push_back(std::async(std::launch::async, [&series, p, q = total - p] { return check_eqm(series, p, q); }));
  std::vector<EqmReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

namespace {

using Poly = std::vector<Rational>;  // coefficients by degree, truncated

Poly poly_mul(const Poly& a, const Poly& b, std::size_t deg) {
  Poly r(deg + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= deg; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= deg; ++j)
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<EqmReport> check_self_distributivity_formal(const RackSeries& series, std::size_t max_total) {
  if (max_total > series.order()) throw Error(ErrorKind::InsufficientOrder, "formal check beyond truncation order");
  const std::size_t d = series.algebra().dim();
  std::vector<EqmReport> out;
  for (std::size_t total = 2; total <= max_total; ++total)
    for (std::size_t a = 1; a < total; ++a) {
      const std::size_t b = total - a;
      // Coefficient of t^a s^b: x scaled by t, y by s. The left side is
      // A_a(x, A_b(y, z)); the right side is the t^a part of
      // A_b(u(t),..,u(t), v(t)) with u(t) = sum_s t^s A_s(x,y), v(t) = sum_k t^k A_k(x,z),
      // expanded as a polynomial map in the entries of u(t).
      auto residual = [&](const Vector& x, const Vector& y) {
        std::vector<MatrixQ> ax(a + 1);
        for (std::size_t s = 0; s <= a; ++s) ax[s] = series.diag_matrix(s, x);
        std::vector<Poly> ut(d, Poly(a + 1, Rational(0)));
        for (std::size_t s = 0; s <= a; ++s) {
          Vector us = ax[s] * y;
          for (std::size_t i = 0; i < d; ++i) ut[i][s] = us[i];
        }
        const PartSymMap& ab = series.term(b);
        const auto& idx = ab.index();
        std::vector<MatrixQ> mt(a + 1, MatrixQ(d, d));
        for (std::size_t r = 0; r < idx.size(); ++r) {
          Poly w(a + 1, Rational(0));
          w[0] = idx.multinomial(r);
          for (auto i : idx.multiset(r)) w = poly_mul(w, ut[i], a);
          for (std::size_t deg = 0; deg <= a; ++deg)
            if (sgn(w[deg]) != 0) mt[deg].axpy(w[deg], ab.block(r));
        }
        MatrixQ rhs(d, d);
        for (std::size_t i = 0; i <= a; ++i) rhs += mt[i] * ax[a - i];
        return ax[a] * series.diag_matrix(b, y) - rhs;
      };
      EqmReport rep{a, b, true, std::nullopt};
      rep.witness = find_bipolar_residual(d, a, b, residual);
      rep.pass = !rep.witness.has_value();
      out.push_back(std::move(rep));
    }
  return out;
}

InvarianceReport check_invariance_all(const RackSeries& series) {
  InvarianceReport rep;
  for (std::size_t n = 1; n <= series.order(); ++n) {
    bool ok = is_invariant(series.algebra(), series.term(n));
    rep.invariant.push_back(ok);
    if (!ok && !rep.first_failure) rep.first_failure = n;
  }
  return rep;
}

Vector eval_truncated(const RackSeries& series, const Vector& x, const Vector& y) {
  const std::size_t d = series.algebra().dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorKind::Input, "eval_truncated: dimension mismatch");
  Vector out = y;
  for (std::size_t n = 1; n <= series.order(); ++n) out += series.term(n).eval_diag(x, y);
  return out;
}

std::vector<std::vector<Rational>> exp_composition_coefficients(const FCoeffs& f, std::size_t max_m,
                                                                std::size_t max_j) {
  Poly fpoly(max_j + 1, Rational(0));
  fpoly[0] = 1;
  for (std::size_t k = 1; k <= max_j; ++k) fpoly[k] = f.coeff(k);
  std::vector<std::vector<Rational>> c(max_m + 1);
  Poly power(max_j + 1, Rational(0));
  power[0] = 1;
  for (std::size_t m = 0; m <= max_m; ++m) {
    const Rational inv = 1 / factorial(static_cast<unsigned>(m));
    c[m].resize(max_j + 1);
    for (std::size_t j = 0; j <= max_j; ++j) c[m][j] = power[j] * inv;
    power = poly_mul(power, fpoly, max_j);
  }
  return c;
}

RackSeries series_from_F(const LeibnizAlgebra& alg, const SymForm& p_form, const FCoeffs& f, std::size_t order) {
  if (p_form.vector_valued() || p_form.dim() != alg.dim())
    throw Error(ErrorKind::Input, "series_from_F needs a scalar form on the algebra");
  if (p_form.arity() == 0) throw Error(ErrorKind::Input, "series_from_F needs a form of arity >= 1");
  if (!is_invariant(alg, p_form)) throw Error(ErrorKind::NotInvariant, "P is not invariant");
  if (order == 0) throw Error(ErrorKind::Input, "order must be >= 1");
  const std::size_t p = p_form.arity();
  const auto coeff = exp_composition_coefficients(f, order, order / p);
  std::vector<PartSymMap> terms;
  for (std::size_t n = 1; n <= order; ++n) {
    auto diag = [&](const Vector& x) {
      const Rational u = p_form.eval_diag_scalar(x);
      const MatrixQ adx = alg.ad_matrix(x);
      MatrixQ out(alg.dim(), alg.dim());
      MatrixQ adpow = MatrixQ::identity(alg.dim());
      for (std::size_t m = 1; m <= n; ++m) {
        adpow = adx * adpow;
        if ((n - m) % p != 0) continue;
        const std::size_t j = (n - m) / p;
        Rational upow = 1;
        for (std::size_t t = 0; t < j; ++t) upow *= u;
        out.axpy(coeff[m][j] * upow, adpow);
      }
      return out;
    };
    terms.push_back(polarize(std::function<MatrixQ(const Vector&)>(diag), n, alg.dim()));
  }
  return RackSeries(alg, std::move(terms));
}

}  // namespace leibrack
