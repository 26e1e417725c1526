#include "leibrack/invariants.hpp"

#include "leibrack/errors.hpp"

namespace leibrack {

namespace {

Vector flatten(const SymForm& f) {
  Vector v;
  v.reserve(f.index().size() * f.out_dim());
  for (std::size_t r = 0; r < f.index().size(); ++r)
    for (std::size_t k = 0; k < f.out_dim(); ++k) v.push_back(f.at(r, k));
  return v;
}

SymForm unflatten(const Vector& v, std::size_t n, std::size_t dim) {
  SymForm f(n, dim, SymForm::Output::Vector);
  for (std::size_t r = 0; r < f.index().size(); ++r)
    for (std::size_t k = 0; k < dim; ++k) f.at(r, k) = v[r * dim + k];
  return f;
}

// Sum over perfect matchings of positions of prod gram(idx[a], idx[b]).
Rational matching_sum(const MatrixQ& gram, std::vector<std::size_t>& idx, std::vector<bool>& used) {
  std::size_t first = 0;
  while (first < idx.size() && used[first]) ++first;
  if (first == idx.size()) return 1;
  used[first] = true;
  Rational total = 0;
  for (std::size_t b = first + 1; b < idx.size(); ++b) {
    if (used[b]) continue;
    const Rational& g = gram(idx[first], idx[b]);
    if (sgn(g) == 0) continue;
    used[b] = true;
    total += g * matching_sum(gram, idx, used);
    used[b] = false;
  }
  used[first] = false;
  return total;
}

Rational double_factorial_odd(std::size_t n) {  // (2n-1)!!
  Rational r = 1;
  for (std::size_t k = 1; k < 2 * n; k += 2) r *= static_cast<unsigned long>(k);
  return r;
}

Rational p_on_basis(const MatrixQ& gram, std::vector<std::size_t> idx, const Rational& norm) {
  std::vector<bool> used(idx.size(), false);
  return matching_sum(gram, idx, used) / norm;
}

}  // namespace

std::vector<SymForm> invariant_basis(const LeibnizAlgebra& alg, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Input, "invariant_basis needs arity >= 1");
  const std::size_t d = alg.dim();
  SymForm probe(n, d, SymForm::Output::Vector);
  const std::size_t unknowns = probe.index().size() * d;
  MatrixQ system(unknowns * d, unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    SymForm unit(n, d, SymForm::Output::Vector);
    unit.at(u / d, u % d) = 1;
    for (std::size_t a = 0; a < d; ++a) {
      Vector img = flatten(lie_derivative(alg, unit, alg.basis_vector(a)));
      for (std::size_t r = 0; r < unknowns; ++r) system(a * unknowns + r, u) = img[r];
    }
  }
  std::vector<SymForm> out;
  for (const auto& v : kernel_basis(system)) out.push_back(unflatten(v, n, d));
  return out;
}

SymForm build_P(const LeibnizAlgebra& alg, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Input, "build_P needs n >= 1");
  SymForm p(2 * n, alg.dim(), SymForm::Output::Scalar);
  const Rational norm = double_factorial_odd(n);
  for (std::size_t r = 0; r < p.index().size(); ++r)
    p.at(r, 0) = p_on_basis(alg.trace_gram(), p.index().multiset(r), norm);
  return p;
}

SymForm build_B_g(const LeibnizAlgebra& alg, std::size_t n) {
  const std::size_t d = alg.dim();
  SymForm b(2 * n + 1, d, SymForm::Output::Vector);
  const Rational norm = double_factorial_odd(n);
  for (std::size_t r = 0; r < b.index().size(); ++r) {
    const auto& mu = b.index().multiset(r);
    for (std::size_t k = 0; k < mu.size(); ++k) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < mu.size(); ++t)
        if (t != k) rest.push_back(mu[t]);
      b.at(r, mu[k]) += n == 0 ? Rational(1) : p_on_basis(alg.trace_gram(), rest, norm);
    }
  }
  return b;
}

std::vector<SymDimRow> verify_sym_dims(const LeibnizAlgebra& alg, std::size_t n_max) {
  std::vector<SymDimRow> rows;
  for (std::size_t m = 2; m <= 2 * n_max + 1; ++m) {
    auto basis = invariant_basis(alg, m);
    SymDimRow row{m, basis.size(), std::nullopt};
    if (m % 2 == 1) {
      Vector bg = flatten(build_B_g(alg, (m - 1) / 2));
      std::vector<Vector> vs;
      for (const auto& f : basis) vs.push_back(flatten(f));
      row.spanned_by_B_g = !vs.empty() && !is_zero(bg) && in_span(span_basis(bg.size(), vs), bg) &&
                           in_span(span_basis(bg.size(), {bg}), vs.front()) && vs.size() == 1;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace leibrack
