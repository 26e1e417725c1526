#include "leibrack/constructions.hpp"

#include "leibrack/errors.hpp"
#include "leibrack/rack_series.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace leibrack {

MatD FloatRack::left_matrix(const VecD& x) const {
  MatD m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.col(j) = op(x, VecD::Unit(dim, j));
  return m;
}

std::vector<VecD> sample_ball(std::size_t dim, std::size_t count, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<VecD> out;
  out.reserve(count);
  while (out.size() < count) {
    VecD v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = normal(rng);
    const double n = v.norm();
    if (n == 0) continue;
    const double r = radius * std::pow(unif(rng), 1.0 / static_cast<double>(dim));
    out.push_back(v * (r / n));
  }
  return out;
}

AxiomReport check_axioms(const FloatRack& rack, const Sampler& sampler) {
  const std::size_t d = rack.dim;
  auto pts = sample_ball(d, 3 * sampler.samples, sampler.seed);
  std::mt19937_64 rng(sampler.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  AxiomReport rep;
  rep.min_abs_det = std::numeric_limits<double>::infinity();
  const VecD zero = VecD::Zero(d);
  for (std::size_t s = 0; s < sampler.samples; ++s) {
    const VecD& x = pts[3 * s];
    const VecD& y = pts[3 * s + 1];
    const VecD& z = pts[3 * s + 2];
    const VecD lhs = rack.op(x, rack.op(y, z));
    const VecD rhs = rack.op(rack.op(x, y), rack.op(x, z));
    rep.self_distributivity = std::max(rep.self_distributivity, (lhs - rhs).norm());
    rep.pointedness = std::max({rep.pointedness, rack.op(x, zero).norm(), (rack.op(zero, y) - y).norm()});
    rep.min_abs_det = std::min(rep.min_abs_det, std::abs(rack.left_matrix(x).determinant()));
    const double a = coef(rng), b = coef(rng);
    const VecD lin = rack.op(x, a * y + b * z) - a * rack.op(x, y) - b * rack.op(x, z);
    rep.linearity = std::max(rep.linearity, lin.norm());
  }
  rep.pass = rep.self_distributivity < sampler.tol && rep.pointedness < 1e-12 && rep.min_abs_det > 1e-12 &&
             rep.linearity < sampler.tol;
  return rep;
}

VecD extracted_bracket(const FloatRack& rack, const VecD& x, const VecD& y, double h) {
  return (rack.op(h * x, y) - rack.op(-h * x, y)) / (2 * h);
}

double PowerSeries::operator()(double u) const {
  double acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc + coeffs[k]) * u;
  return constant + acc;
}

VecD to_float(const Vector& v) {
  VecD out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

MatD ad_float(const LeibnizAlgebra& alg, const VecD& x) {
  const std::size_t d = alg.dim();
  MatD m = MatD::Zero(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const double c = alg.c(i, j, k).get_d();
        if (c != 0) m(k, j) += x[i] * c;
      }
  return m;
}

double eval_diag_float(const SymForm& p, const VecD& x) {
  if (p.vector_valued()) throw Error(ErrorKind::Input, "scalar form expected");
  const auto& idx = p.index();
  double total = 0;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const double c = p.at(r, 0).get_d();
    if (c == 0) continue;
    double term = c * idx.multinomial(r).get_d();
    for (auto i : idx.multiset(r)) term *= x[i];
    total += term;
  }
  return total;
}

FloatRack pr1_rack(const LeibnizAlgebra& alg, const SymForm& p, const PowerSeries& f) {
  if (p.vector_valued() || p.dim() != alg.dim()) throw Error(ErrorKind::Input, "P must be a scalar form on the algebra");
  if (!is_invariant(alg, p)) throw Error(ErrorKind::NotInvariant, "P is not invariant");
  auto algp = std::make_shared<const LeibnizAlgebra>(alg);
  FloatRack rack;
  rack.dim = alg.dim();
  rack.label = "exp(F(P) ad)";
  rack.op = [algp, p, f](const VecD& x, const VecD& y) -> VecD {
    const double s = f(eval_diag_float(p, x));
    const MatD m = (s * ad_float(*algp, x)).exp();
    return m * y;
  };
  return rack;
}

FloatRack twist_rack(const FloatRack& rack, std::function<VecD(const VecD&)> j, const Sampler& sampler) {
  auto pts = sample_ball(rack.dim, 2 * sampler.samples, sampler.seed + 1);
  for (std::size_t s = 0; s < sampler.samples; ++s) {
    const VecD& x = pts[2 * s];
    const VecD& y = pts[2 * s + 1];
    if ((j(rack.op(x, y)) - rack.op(x, j(y))).norm() >= sampler.tol)
      throw Error(ErrorKind::Precondition, "J does not commute with the left translations");
  }
  FloatRack out;
  out.dim = rack.dim;
  out.label = rack.label + " twisted";
  auto base = rack.op;
  out.op = [base, j](const VecD& x, const VecD& y) { return base(j(x), y); };
  return out;
}

namespace {

bool orthogonal_to(const Vector& v, const Subspace& s) {
  return std::all_of(s.basis.begin(), s.basis.end(), [&](const Vector& b) { return sgn(dot(v, b)) == 0; });
}

FloatRack canonical_float(const LeibnizAlgebra& alg) {
  auto algp = std::make_shared<const LeibnizAlgebra>(alg);
  FloatRack r;
  r.dim = alg.dim();
  r.label = "canonical";
  r.op = [algp](const VecD& x, const VecD& y) -> VecD { return ad_float(*algp, x).exp() * y; };
  return r;
}

double poly_float(const std::vector<double>& c, double t) {
  double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

}  // namespace

FloatRack pr22_rack(const LeibnizAlgebra& alg, const std::vector<Pr22Term>& terms) {
  const std::size_t d = alg.dim();
  const Subspace der = derived(alg), cen = center(alg);
  struct TermF {
    VecD a, b, z;
    std::vector<double> f;
  };
  std::vector<TermF> fterms;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    const std::string tag = "term " + std::to_string(t) + ": ";
    if (term.a.size() != d || term.b.size() != d || term.z.size() != d)
      throw Error(ErrorKind::Input, tag + "vector dimension mismatch");
    if (!orthogonal_to(term.a, der) || !orthogonal_to(term.a, cen))
      throw Error(ErrorKind::Precondition, tag + "a is not orthogonal to [h,h] and Z(h)");
    if (!orthogonal_to(term.b, der) || !orthogonal_to(term.b, cen))
      throw Error(ErrorKind::Precondition, tag + "b is not orthogonal to [h,h] and Z(h)");
    if (!cen.contains(term.z)) throw Error(ErrorKind::Precondition, tag + "z is not central");
    if (!term.f.empty() && sgn(term.f[0]) != 0) throw Error(ErrorKind::Precondition, tag + "f(0) != 0");
    TermF tf{to_float(term.a), to_float(term.b), to_float(term.z), {}};
    for (const auto& c : term.f) tf.f.push_back(c.get_d());
    fterms.push_back(std::move(tf));
  }
  FloatRack base = canonical_float(alg);
  FloatRack r;
  r.dim = d;
  r.label = "canonical + central deformation";
  r.op = [base = base.op, fterms](const VecD& x, const VecD& y) -> VecD {
    VecD out = base(x, y);
    for (const auto& t : fterms) out += y.dot(t.b) * poly_float(t.f, x.dot(t.a)) * t.z;
    return out;
  };
  return r;
}

CoReport co_counterexample(const LeibnizAlgebra& alg, const Sampler& sampler) {
  const std::size_t d = alg.dim();
  const Subspace der = derived(alg), cen = center(alg);
  if (cen.dim() == 0) throw Error(ErrorKind::HypothesesFail, "the center is zero");
  CoReport rep;
  {
    std::vector<Vector> both = der.basis;
    both.insert(both.end(), cen.basis.begin(), cen.basis.end());
    rep.printed_hypotheses = span_basis(d, both).size() < d;
  }
  rep.z = cen.basis.front();
  auto complement = [&](const std::vector<Vector>& rows) {
    MatrixQ m(rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = rows[r][c];
    if (rows.empty()) {
      std::vector<Vector> all;
      for (std::size_t i = 0; i < d; ++i) all.push_back(unit_vector(d, i));
      return all;
    }
    return kernel_basis(m);
  };
  std::vector<std::vector<Vector>> candidates;
  {
    std::vector<Vector> rows = der.basis;
    rows.insert(rows.end(), cen.basis.begin(), cen.basis.end());
    candidates.push_back(complement(rows));
    rows = der.basis;
    rows.push_back(rep.z);
    candidates.push_back(complement(rows));
  }
  std::optional<Vector> a;
  for (const auto& set : candidates) {
    for (const auto& v : set)
      if (is_zero(alg.bracket(v, v))) {
        a = v;
        break;
      }
    if (a) break;
  }
  if (!a) throw Error(ErrorKind::HypothesesFail, "no nonzero a orthogonal to [h,h] + R z with [a,a] = 0");
  rep.a = *a;
  // a |> a = exp(ad_a) a + <a,a>^3 z, and ad_a a = [a,a] = 0.
  const Rational n2 = dot(rep.a, rep.a);
  rep.a_rack_a_minus_a = (n2 * n2 * n2) * rep.z;
  rep.witness = !is_zero(rep.a_rack_a_minus_a);

  const VecD af = to_float(rep.a), zf = to_float(rep.z);
  FloatRack base = canonical_float(alg);
  FloatRack r;
  r.dim = d;
  r.label = "corollary deformation";
  r.op = [base = base.op, af, zf](const VecD& x, const VecD& y) -> VecD {
    const double xa = x.dot(af);
    return base(x, y) + xa * xa * y.dot(af) * zf;
  };
  rep.axioms = check_axioms(r, sampler);
  return rep;
}

double pr1_tail_bound(const LeibnizAlgebra& alg, const std::vector<Rational>& a, std::size_t order, const VecD& x,
                      const VecD& y) {
  constexpr std::size_t kMax = 100;
  FCoeffs major;
  for (const auto& c : a) major.a.push_back(abs(c));
  const auto c = exp_composition_coefficients(major, kMax, kMax / 2);
  const MatD g = [&] {
    const std::size_t d = alg.dim();
    MatD m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = alg.trace_gram()(i, j).get_d();
    return m;
  }();
  const double u = std::abs(x.dot(g * x));
  const double r = ad_float(alg, x).norm();
  const double ny = y.norm();
  double total = 0;
  for (std::size_t n = order + 1; n <= kMax; ++n)
    for (std::size_t j = 0; 2 * j < n; ++j) {
      const std::size_t m = n - 2 * j;
      total += c[m][j].get_d() * std::pow(u, static_cast<double>(j)) * std::pow(r, static_cast<double>(m)) * ny;
    }
  return total;
}

}  // namespace leibrack
