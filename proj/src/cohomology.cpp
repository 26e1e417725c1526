#include "leibrack/cohomology.hpp"

#include "leibrack/errors.hpp"

namespace leibrack {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

constexpr std::size_t kMaxDeltaDegree = 3;

}  // namespace

Cochain::Cochain(std::size_t degree, std::size_t dim)
    : degree_(degree), dim_(dim), tuples_(ipow(dim, degree)), coeffs_(tuples_ * dim, Rational(0)) {}

Cochain Cochain::from_vector(const Vector& v) {
  Cochain c(0, v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c.at(0, k) = v[k];
  return c;
}

Cochain Cochain::from_matrix(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "degree-1 cochain needs a square matrix");
  Cochain c(1, m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k) c.at(j, k) = m(k, j);
  return c;
}

std::vector<std::size_t> Cochain::tuple(std::size_t index) const {
  std::vector<std::size_t> t(degree_);
  for (std::size_t p = degree_; p-- > 0;) {
    t[p] = index % dim_;
    index /= dim_;
  }
  return t;
}

std::size_t Cochain::tuple_index(std::span<const std::size_t> tuple) const {
  std::size_t idx = 0;
  for (auto i : tuple) idx = idx * dim_ + i;
  return idx;
}

Vector Cochain::value(std::size_t tuple_index) const {
  return Vector(coeffs_.begin() + tuple_index * dim_, coeffs_.begin() + (tuple_index + 1) * dim_);
}

Vector Cochain::eval(std::span<const Vector> xs) const {
  if (xs.size() != degree_) throw Error(ErrorKind::ShapeMismatch, "cochain evaluated with wrong arity");
  Vector out = zero_vector(dim_);
  for (std::size_t t = 0; t < tuples_; ++t) {
    Rational w = 1;
    std::size_t idx = t;
    for (std::size_t p = degree_; p-- > 0 && sgn(w) != 0;) {
      w *= xs[p][idx % dim_];
      idx /= dim_;
    }
    if (sgn(w) == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) out[k] += w * at(t, k);
  }
  return out;
}

MatrixQ Cochain::to_matrix() const {
  if (degree_ != 1) throw Error(ErrorKind::ShapeMismatch, "to_matrix needs a degree-1 cochain");
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = at(j, k);
  return m;
}

bool Cochain::is_zero() const {
  for (const auto& v : coeffs_)
    if (sgn(v) != 0) return false;
  return true;
}

Cochain delta(const LeibnizAlgebra& alg, const Cochain& w) {
  const std::size_t n = w.degree();
  const std::size_t d = alg.dim();
  if (n > kMaxDeltaDegree) throw Error(ErrorKind::Input, "delta is implemented for degrees 0 to 3");
  if (w.dim() != d) throw Error(ErrorKind::ShapeMismatch, "cochain dimension does not match the algebra");
  Cochain out(n + 1, d);
  std::vector<std::size_t> rest(n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto x = out.tuple(t);
    Vector acc = zero_vector(d);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t p = 0; p <= n; ++p)
        if (p != i) rest[r++] = x[p];
      Vector inner = alg.ad_basis(x[i]) * w.value(w.tuple_index(rest));
      if (i % 2 == 0) acc += inner;
      else acc -= inner;
    }
    {
      Vector head = w.value(w.tuple_index(std::span<const std::size_t>(x.data(), n)));
      Vector right = alg.right_matrix(alg.basis_vector(x[n])) * head;
      if (n % 2 == 1) acc += right;  // (-1)^(n-1)
      else acc -= right;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        // w(x_0..^x_i..x_{j-1}, [x_i,x_j], x_{j+1}..x_n); [x_i,x_j] sits at slot j-1.
        std::vector<std::size_t> slots;
        for (std::size_t p = 0; p <= n; ++p)
          if (p != i) slots.push_back(x[p]);
        const std::size_t pos = j - 1;
        Vector term = zero_vector(d);
        for (std::size_t k = 0; k < d; ++k) {
          const Rational& ck = alg.c(x[i], x[j], k);
          if (sgn(ck) == 0) continue;
          slots[pos] = k;
          axpy(term, ck, w.value(w.tuple_index(slots)));
        }
        if (i % 2 == 1) acc += term;  // (-1)^(i+1)
        else acc -= term;
      }
    for (std::size_t k = 0; k < d; ++k) out.at(t, k) = acc[k];
  }
  return out;
}

MatrixQ delta_matrix(const LeibnizAlgebra& alg, std::size_t degree) {
  const std::size_t d = alg.dim();
  Cochain probe(degree, d);
  const std::size_t cols = probe.coefficients().size();
  const std::size_t rows = ipow(d, degree + 1) * d;
  MatrixQ m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Cochain unit(degree, d);
    unit.at(c / d, c % d) = 1;
    const Cochain image = delta(alg, unit);
    const auto& img = image.coefficients();
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = img[r];
  }
  return m;
}

CohomologyDims cohomology_dims(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  const std::size_t r0 = rank(delta_matrix(alg, 0));
  const std::size_t r1 = rank(delta_matrix(alg, 1));
  return CohomologyDims{d - r0, d * d - r1 - r0};
}

const char* to_string(CoboundarySolution::Status s) {
  switch (s) {
    case CoboundarySolution::Status::Unique: return "unique";
    case CoboundarySolution::Status::NonUnique: return "non_unique";
    case CoboundarySolution::Status::NotACocycle: return "not_a_cocycle";
    case CoboundarySolution::Status::NoSolution: return "no_solution";
  }
  return "unknown";
}

CoboundarySolution solve_coboundary(const LeibnizAlgebra& alg, const Cochain& d) {
  const std::size_t n = alg.dim();
  if (d.degree() != 1 || d.dim() != n) throw Error(ErrorKind::ShapeMismatch, "solve_coboundary needs a degree-1 cochain");
  CoboundarySolution out;
  if (!delta(alg, d).is_zero()) {
    out.status = CoboundarySolution::Status::NotACocycle;
    return out;
  }
  // sum_a b_a ad(e_a) = D, one equation per matrix entry.
  MatrixQ a(n * n, n);
  Vector rhs(n * n);
  const MatrixQ dm = d.to_matrix();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      rhs[k * n + j] = dm(k, j);
      for (std::size_t s = 0; s < n; ++s) a(k * n + j, s) = alg.ad_basis(s)(k, j);
    }
  Solution sol = solve_linear(a, rhs);
  switch (sol.kind) {
    case Solution::Kind::NoSolution: out.status = CoboundarySolution::Status::NoSolution; break;
    case Solution::Kind::Unique:
      out.status = CoboundarySolution::Status::Unique;
      out.b = std::move(sol.particular);
      break;
    case Solution::Kind::Affine:
      out.status = CoboundarySolution::Status::NonUnique;
      out.b = std::move(sol.particular);
      out.family = std::move(sol.kernel);
      break;
  }
  return out;
}

}  // namespace leibrack
