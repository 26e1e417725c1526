#include "leibrack/algebra.hpp"

#include "leibrack/errors.hpp"

#include <tuple>
#include <utility>

namespace leibrack {

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> names, std::vector<Rational> constants, bool validate)
    : dim_(names.size()), names_(std::move(names)), c_(std::move(constants)) {
  if (c_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorKind::Input, "structure constants must have dim^3 entries");
  ad_basis_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    MatrixQ m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    ad_basis_.push_back(std::move(m));
  }
  gram_ = MatrixQ(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) gram_(i, j) = (ad_basis_[i] * ad_basis_[j]).trace() / 2;
  if (validate) {
    auto report = check_left_leibniz(*this);
    if (!report.pass) {
      const auto& t = report.violations.front().triple;
      throw Error(ErrorKind::NotLeibniz, "left Leibniz identity fails on basis triple (" + std::to_string(t[0]) +
                                             "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
  }
}

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<Rational> constants)
    : LeibnizAlgebra(std::move(basis_names), std::move(constants), true) {}

LeibnizAlgebra LeibnizAlgebra::unchecked(std::vector<std::string> basis_names, std::vector<Rational> constants) {
  return LeibnizAlgebra(std::move(basis_names), std::move(constants), false);
}

LeibnizAlgebra LeibnizAlgebra::from_matrix_basis(std::vector<std::string> basis_names,
                                                 const std::vector<MatrixQ>& matrices) {
  const std::size_t d = matrices.size();
  if (basis_names.size() != d) throw Error(ErrorKind::Input, "one name per basis matrix");
  if (d == 0) return LeibnizAlgebra(std::move(basis_names), {});
  const std::size_t n = matrices.front().rows();
  // Coordinates are found by solving against the flattened basis.
  MatrixQ flat(n * n, d);
  for (std::size_t b = 0; b < d; ++b) {
    if (matrices[b].rows() != n || matrices[b].cols() != n) throw Error(ErrorKind::Input, "basis matrices must be n x n");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat(r * n + c, b) = matrices[b](r, c);
  }
  std::vector<Rational> consts(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      MatrixQ comm = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      Vector rhs(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = comm(r, c);
      Solution s = solve_linear(flat, rhs);
      if (s.kind != Solution::Kind::Unique)
        throw Error(ErrorKind::Input, "matrix basis is dependent or not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) consts[(i * d + j) * d + k] = s.particular[k];
    }
  return LeibnizAlgebra(std::move(basis_names), std::move(consts));
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::Input, "bracket: dimension mismatch");
  Vector r = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) r[k] += w * c(i, j, k);
    }
  }
  return r;
}

MatrixQ LeibnizAlgebra::ad_matrix(const Vector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::Input, "ad_matrix: dimension mismatch");
  MatrixQ m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.axpy(x[i], ad_basis_[i]);
  return m;
}

MatrixQ LeibnizAlgebra::right_matrix(const Vector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::Input, "right_matrix: dimension mismatch");
  MatrixQ m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(basis_vector(j), x));
  return m;
}

Rational LeibnizAlgebra::trace_form(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::Input, "trace_form: dimension mismatch");
  return dot(x, gram_ * y);
}

bool LeibnizAlgebra::is_lie() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

LeibnizReport check_left_leibniz(const LeibnizAlgebra& alg) {
  LeibnizReport report;
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector ei = alg.basis_vector(i), ej = alg.basis_vector(j), ek = alg.basis_vector(k);
        Vector r = alg.bracket(ei, alg.bracket(ej, ek)) - alg.bracket(alg.bracket(ei, ej), ek) -
                   alg.bracket(ej, alg.bracket(ei, ek));
        if (!is_zero(r)) {
          report.pass = false;
          report.violations.push_back({{i, j, k}, std::move(r)});
        }
      }
  return report;
}

Subspace center(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  // a is central iff [a,e_j] = 0 and [e_j,a] = 0 for every j; both are linear in a.
  MatrixQ sys(2 * d * d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        sys(j * d + k, a) = alg.c(a, j, k);
        sys(d * d + j * d + k, a) = alg.c(j, a, k);
      }
  return {d, kernel_basis(sys)};
}

Subspace derived(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = alg.c(i, j, k);
      if (!is_zero(v)) brackets.push_back(std::move(v));
    }
  return {d, span_basis(d, brackets)};
}

namespace {

MatrixQ mat(std::size_t n, std::initializer_list<int> entries) {
  MatrixQ m(n, n);
  std::size_t idx = 0;
  for (int v : entries) {
    m(idx / n, idx % n) = v;
    ++idx;
  }
  return m;
}

LeibnizAlgebra from_table(std::vector<std::string> names,
                          std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, int>> table) {
  const std::size_t d = names.size();
  std::vector<Rational> c(d * d * d, Rational(0));
  for (auto [i, j, k, v] : table) c[(i * d + j) * d + k] = v;
  return LeibnizAlgebra(std::move(names), std::move(c));
}

}  // namespace

LeibnizAlgebra builtin(const std::string& name) {
  if (name == "sl2")
    return LeibnizAlgebra::from_matrix_basis({"h", "e", "f"},
                                             {mat(2, {1, 0, 0, -1}), mat(2, {0, 1, 0, 0}), mat(2, {0, 0, 1, 0})});
  if (name == "so3")
    return LeibnizAlgebra::from_matrix_basis({"Ea", "Eb", "Ec"}, {mat(3, {0, 1, 0, -1, 0, 0, 0, 0, 0}),
                                                                  mat(3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
                                                                  mat(3, {0, 0, 0, 0, 0, 1, 0, -1, 0})});
  if (name == "gl2")
    return LeibnizAlgebra::from_matrix_basis(
        {"h", "e", "f", "i"},
        {mat(2, {1, 0, 0, -1}), mat(2, {0, 1, 0, 0}), mat(2, {0, 0, 1, 0}), mat(2, {1, 0, 0, 1})});
  if (name == "heisenberg") return from_table({"e1", "e2", "e3"}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
  if (name == "nilpotent4") return from_table({"e1", "e2", "e3", "e4"}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
  const std::string prefix = "abelian:";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t d = 0;
    try {
      std::size_t used = 0;
      d = std::stoul(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, "bad abelian dimension in '" + name + "'");
    }
    if (d == 0 || d > 64) throw Error(ErrorKind::Input, "abelian dimension must be in 1..64");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("e" + std::to_string(i + 1));
    return LeibnizAlgebra(std::move(names), std::vector<Rational>(d * d * d, Rational(0)));
  }
  throw Error(ErrorKind::Input, "unknown builtin algebra '" + name + "'");
}

}  // namespace leibrack
