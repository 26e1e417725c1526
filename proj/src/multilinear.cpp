#include "leibrack/multilinear.hpp"

#include "leibrack/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace leibrack {

namespace {

std::shared_ptr<const MultisetIndex> shared_index(std::size_t dim, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const MultisetIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{dim, n}];
  if (!slot) slot = std::make_shared<const MultisetIndex>(dim, n);
  return slot;
}

// Visits every ordered tuple (i_1..i_n) with nonzero weight prod_t xs[t][i_t].
template <class Visit>
void expand_tuples(std::span<const Vector> xs, std::size_t dim, Visit&& visit) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> tuple(n);
  std::vector<Rational> weight(n + 1);
  weight[0] = 1;
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (slot == n) {
      std::vector<std::size_t> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted, weight[n]);
      return;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(xs[slot][i]) == 0) continue;
      tuple[slot] = i;
      weight[slot + 1] = weight[slot] * xs[slot][i];
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
}

Rational monomial(const Vector& x, const std::vector<unsigned>& counts) {
  Rational m = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (sgn(x[i]) == 0) return 0;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), x[i].get_num_mpz_t(), counts[i]);
    mpz_pow_ui(p.get_den_mpz_t(), x[i].get_den_mpz_t(), counts[i]);
    m *= p;
  }
  return m;
}

void check_args(std::span<const Vector> xs, std::size_t n, std::size_t dim) {
  if (xs.size() != n) throw Error(ErrorKind::Input, "arity mismatch");
  for (const auto& x : xs)
    if (x.size() != dim) throw Error(ErrorKind::Input, "argument dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------- PartSymMap

PartSymMap::PartSymMap(std::size_t n, std::size_t dim)
    : idx_(shared_index(dim, n)), blocks_(idx_->size(), MatrixQ(dim, dim)) {}

MatrixQ PartSymMap::eval_matrix(std::span<const Vector> xs) const {
  check_args(xs, n(), dim());
  MatrixQ out(dim(), dim());
  expand_tuples(xs, dim(), [&](const std::vector<std::size_t>& sorted, const Rational& w) {
    out.axpy(w, blocks_[idx_->rank(sorted)]);
  });
  return out;
}

Vector PartSymMap::eval(std::span<const Vector> xs, const Vector& y) const {
  if (y.size() != dim()) throw Error(ErrorKind::Input, "argument dimension mismatch");
  return eval_matrix(xs) * y;
}

MatrixQ PartSymMap::eval_diag_matrix(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::Input, "argument dimension mismatch");
  MatrixQ out(dim(), dim());
  for (std::size_t r = 0; r < idx_->size(); ++r) {
    Rational m = monomial(x, idx_->counts(r));
    if (sgn(m) == 0) continue;
    out.axpy(m * idx_->multinomial(r), blocks_[r]);
  }
  return out;
}

Vector PartSymMap::eval_diag(const Vector& x, const Vector& y) const {
  if (y.size() != dim()) throw Error(ErrorKind::Input, "argument dimension mismatch");
  return eval_diag_matrix(x) * y;
}

bool PartSymMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const MatrixQ& m) { return m.is_zero(); });
}

void PartSymMap::check_shape(const PartSymMap& o) const {
  if (o.n() != n() || o.dim() != dim()) throw Error(ErrorKind::Input, "PartSymMap shape mismatch");
}

PartSymMap& PartSymMap::operator+=(const PartSymMap& o) {
  check_shape(o);
  for (std::size_t r = 0; r < blocks_.size(); ++r) blocks_[r] += o.blocks_[r];
  return *this;
}

PartSymMap& PartSymMap::operator-=(const PartSymMap& o) {
  check_shape(o);
  for (std::size_t r = 0; r < blocks_.size(); ++r) blocks_[r] -= o.blocks_[r];
  return *this;
}

PartSymMap& PartSymMap::operator*=(const Rational& s) {
  for (auto& b : blocks_) b = s * b;
  return *this;
}

PartSymMap operator+(PartSymMap a, const PartSymMap& b) { return a += b; }
PartSymMap operator-(PartSymMap a, const PartSymMap& b) { return a -= b; }
PartSymMap operator*(const Rational& s, PartSymMap a) { return a *= s; }

// ---------------------------------------------------------------- SymForm

SymForm::SymForm(std::size_t p, std::size_t dim, Output out)
    : idx_(shared_index(dim, p)), out_(out), coeffs_(idx_->size() * (out == Output::Vector ? dim : 1), Rational(0)) {}

Vector SymForm::value(std::size_t rank) const {
  const std::size_t od = out_dim();
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(rank * od),
                coeffs_.begin() + static_cast<std::ptrdiff_t>((rank + 1) * od));
}

void SymForm::set_value(std::size_t rank, const Vector& v) {
  if (v.size() != out_dim()) throw Error(ErrorKind::Input, "SymForm value length mismatch");
  for (std::size_t k = 0; k < v.size(); ++k) at(rank, k) = v[k];
}

Vector SymForm::eval(std::span<const Vector> xs) const {
  check_args(xs, arity(), dim());
  Vector out = zero_vector(out_dim());
  expand_tuples(xs, dim(), [&](const std::vector<std::size_t>& sorted, const Rational& w) {
    const std::size_t r = idx_->rank(sorted);
    for (std::size_t k = 0; k < out.size(); ++k)
      if (sgn(at(r, k)) != 0) out[k] += w * at(r, k);
  });
  return out;
}

Vector SymForm::eval_diag(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::Input, "argument dimension mismatch");
  Vector out = zero_vector(out_dim());
  for (std::size_t r = 0; r < idx_->size(); ++r) {
    Rational m = monomial(x, idx_->counts(r));
    if (sgn(m) == 0) continue;
    m *= idx_->multinomial(r);
    for (std::size_t k = 0; k < out.size(); ++k)
      if (sgn(at(r, k)) != 0) out[k] += m * at(r, k);
  }
  return out;
}

Rational SymForm::eval_scalar(std::span<const Vector> xs) const {
  if (vector_valued()) throw Error(ErrorKind::Input, "eval_scalar on a vector-valued form");
  return eval(xs)[0];
}

Rational SymForm::eval_diag_scalar(const Vector& x) const {
  if (vector_valued()) throw Error(ErrorKind::Input, "eval_diag_scalar on a vector-valued form");
  return eval_diag(x)[0];
}

bool SymForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

SymForm& SymForm::operator+=(const SymForm& o) {
  if (o.arity() != arity() || o.dim() != dim() || o.out_ != out_) throw Error(ErrorKind::Input, "SymForm shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SymForm& SymForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
SymForm operator*(const Rational& s, SymForm a) { return a *= s; }

// ---------------------------------------------------------------- polarization

PartSymMap polarize(const std::function<MatrixQ(const Vector&)>& diag, std::size_t n, std::size_t dim) {
  PartSymMap out(n, dim);
  if (n == 0) {
    out.block(0) = diag(zero_vector(dim));
    return out;
  }
  CountGrid grid(dim, n);
  std::vector<MatrixQ> values;
  values.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) values.push_back(diag(grid.point(g)));
  const auto& idx = out.index();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    MatrixQ acc(dim, dim);
    for (const auto& [g, w] : polar_stencil(grid, idx.counts(r))) acc.axpy(w, values[g]);
    out.block(r) = std::move(acc);
  }
  return out;
}

PartSymMap polarize(const std::function<Vector(const Vector&, const Vector&)>& diag, std::size_t n, std::size_t dim) {
  return polarize(
      [&](const Vector& x) {
        MatrixQ m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) m.set_column(j, diag(x, unit_vector(dim, j)));
        return m;
      },
      n, dim);
}

SymForm polarize_form(const std::function<Vector(const Vector&)>& diag, std::size_t p, std::size_t dim,
                      SymForm::Output out) {
  SymForm form(p, dim, out);
  if (p == 0) {
    form.set_value(0, diag(zero_vector(dim)));
    return form;
  }
  CountGrid grid(dim, p);
  std::vector<Vector> values;
  values.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) values.push_back(diag(grid.point(g)));
  const auto& idx = form.index();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    Vector acc = zero_vector(form.out_dim());
    for (const auto& [g, w] : polar_stencil(grid, idx.counts(r))) axpy(acc, w, values[g]);
    form.set_value(r, acc);
  }
  return form;
}

bool verify_polarization(const PartSymMap& map, const std::function<MatrixQ(const Vector&)>& diag) {
  if (map.n() == 0) return map.block(0) == diag(zero_vector(map.dim()));
  CountGrid grid(map.dim(), map.n());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    Vector x = grid.point(g);
    if (!(map.eval_diag_matrix(x) == diag(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- invariance

PartSymMap lie_derivative(const LeibnizAlgebra& alg, const PartSymMap& map, const Vector& x) {
  if (alg.dim() != map.dim() || x.size() != alg.dim()) throw Error(ErrorKind::Input, "lie_derivative: dimension mismatch");
  const std::size_t d = alg.dim();
  const MatrixQ adx = alg.ad_matrix(x);
  PartSymMap out(map.n(), d);
  const auto& idx = map.index();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto& mu = idx.multiset(r);
    // [x, A(e_mu, .)] - A(e_mu, [x, .])
    MatrixQ acc = adx * map.block(r) - map.block(r) * adx;
    std::vector<Vector> args;
    for (auto i : mu) args.push_back(unit_vector(d, i));
    for (std::size_t t = 0; t < mu.size(); ++t) {
      Vector saved = args[t];
      args[t] = adx.column(mu[t]);
      acc -= map.eval_matrix(args);
      args[t] = std::move(saved);
    }
    out.block(r) = std::move(acc);
  }
  return out;
}

SymForm lie_derivative(const LeibnizAlgebra& alg, const SymForm& form, const Vector& x) {
  if (alg.dim() != form.dim() || x.size() != alg.dim()) throw Error(ErrorKind::Input, "lie_derivative: dimension mismatch");
  const std::size_t d = alg.dim();
  const MatrixQ adx = alg.ad_matrix(x);
  SymForm out(form.arity(), d, form.output());
  const auto& idx = form.index();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto& mu = idx.multiset(r);
    Vector acc = form.vector_valued() ? adx * form.value(r) : zero_vector(1);
    std::vector<Vector> args;
    for (auto i : mu) args.push_back(unit_vector(d, i));
    for (std::size_t t = 0; t < mu.size(); ++t) {
      Vector saved = args[t];
      args[t] = adx.column(mu[t]);
      acc -= form.eval(args);
      args[t] = std::move(saved);
    }
    out.set_value(r, acc);
  }
  return out;
}

bool is_invariant(const LeibnizAlgebra& alg, const PartSymMap& map) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (!lie_derivative(alg, map, alg.basis_vector(i)).is_zero()) return false;
  return true;
}

bool is_invariant(const LeibnizAlgebra& alg, const SymForm& form) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (!lie_derivative(alg, form, alg.basis_vector(i)).is_zero()) return false;
  return true;
}

PartSymMap bracket_map(const LeibnizAlgebra& alg) {
  PartSymMap m(1, alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) m.block(m.index().rank({i})) = alg.ad_basis(i);
  return m;
}

SymForm trace_symform(const LeibnizAlgebra& alg) {
  SymForm f(2, alg.dim(), SymForm::Output::Scalar);
  const auto& idx = f.index();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const auto& mu = idx.multiset(r);
    f.at(r, 0) = alg.trace_gram()(mu[0], mu[1]);
  }
  return f;
}

}  // namespace leibrack
