#include "leibrack/constructions.hpp"
#include "leibrack/errors.hpp"
#include "leibrack/rack_series.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

namespace {

double max_diff(const FloatRack& a, const FloatRack& b, std::uint64_t seed) {
  const auto pts = sample_ball(a.dim, 20, seed);
  double worst = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) worst = std::max(worst, (a.op(pts[i], pts[i + 1]) - b.op(pts[i], pts[i + 1])).norm());
  return worst;
}

}  // namespace

TEST_SUITE("constructions") {
  const Sampler sampler{100, 7, 1e-9};

  TEST_CASE("samples lie in the ball and are reproducible") {
    const auto a = sample_ball(3, 50, 9, 0.5), b = sample_ball(3, 50, 9, 0.5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].norm() <= 0.5 + 1e-15);
      CHECK(a[i] == b[i]);
    }
  }

  TEST_CASE("F = 1 gives the canonical rack") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const FloatRack r = pr1_rack(sl2, trace_symform(sl2), PowerSeries{1, {}});
    const auto pts = sample_ball(3, 10, 3);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      const MatD ad = ad_float(sl2, pts[i]);
      VecD series = pts[i + 1], term = pts[i + 1];
      for (int k = 1; k < 40; ++k) {
        term = ad * term / k;
        series += term;
      }
      CHECK((r.op(pts[i], pts[i + 1]) - series).norm() < 1e-12);
    }
    CHECK(check_axioms(r, sampler).pass);
  }

  TEST_CASE("F(u) = u has zero bracket") {
    const LeibnizAlgebra so3 = builtin("so3");
    const FloatRack r = pr1_rack(so3, trace_symform(so3), PowerSeries{0, {1}});
    CHECK(check_axioms(r, sampler).pass);
    const auto pts = sample_ball(3, 6, 4);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) CHECK(extracted_bracket(r, pts[i], pts[i + 1]).norm() < 1e-6);
  }

  TEST_CASE("heisenberg with F = 1 + u") {
    SymForm p(2, 3, SymForm::Output::Scalar);
    p.at(p.index().rank({0, 0}), 0) = 1;
    const FloatRack r = pr1_rack(builtin("heisenberg"), p, PowerSeries{1, {1}});
    CHECK(check_axioms(r, sampler).pass);
  }

  TEST_CASE("non-invariant P is refused") {
    SymForm p(2, 3, SymForm::Output::Scalar);
    p.at(0, 0) = 1;
    CHECK_THROWS_AS(pr1_rack(builtin("sl2"), p, PowerSeries{1, {1}}), Error);
  }

  TEST_CASE("twists") {
    const LeibnizAlgebra so3 = builtin("so3");
    const FloatRack canon = pr1_rack(so3, trace_symform(so3), PowerSeries{1, {}});
    const FloatRack same = twist_rack(canon, [](const VecD& x) { return x; }, sampler);
    CHECK(max_diff(same, canon, 5) == 0);
    const FloatRack trivial = twist_rack(canon, [](const VecD& x) { return VecD(VecD::Zero(x.size())); }, sampler);
    const auto pts = sample_ball(3, 4, 6);
    CHECK((trivial.op(pts[0], pts[1]) - pts[1]).norm() < 1e-15);
    const MatD g = [&] {
      MatD m(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = so3.trace_gram()(i, j).get_d();
      return m;
    }();
    const FloatRack twisted = twist_rack(canon, [g](const VecD& x) { return VecD(x.dot(g * x) * x); }, sampler);
    CHECK(check_axioms(twisted, sampler).pass);
    CHECK_THROWS_AS(twist_rack(canon, [](const VecD& x) { return VecD(x + VecD::Ones(x.size())); }, sampler), Error);
  }

  TEST_CASE("central deformation on nilpotent4") {
    const LeibnizAlgebra nil4 = builtin("nilpotent4");
    const Pr22Term t{unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 3), {rq(0), rq(0), rq(1)}};
    const FloatRack r = pr22_rack(nil4, {t});
    CHECK(check_axioms(r, sampler).pass);
    const auto pts = sample_ball(4, 6, 8);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
      CHECK((extracted_bracket(r, pts[i], pts[i + 1]) - ad_float(nil4, pts[i]) * pts[i + 1]).norm() < 1e-6);
    const Pr22Term zero_f{unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 3), {}};
    CHECK(max_diff(pr22_rack(nil4, {zero_f}), pr22_rack(nil4, {}), 9) == 0);
  }

  TEST_CASE("central deformation preconditions") {
    const LeibnizAlgebra nil4 = builtin("nilpotent4");
    const Vector e1 = unit_vector(4, 0), e2 = unit_vector(4, 1), e3 = unit_vector(4, 2), e4 = unit_vector(4, 3);
    CHECK_THROWS_AS(pr22_rack(nil4, {{e3, e2, e4, {rq(0), rq(1)}}}), Error);  // a in [h,h]
    CHECK_THROWS_AS(pr22_rack(nil4, {{e1, e4, e4, {rq(0), rq(1)}}}), Error);  // b central
    CHECK_THROWS_AS(pr22_rack(nil4, {{e1, e2, e1, {rq(0), rq(1)}}}), Error);  // z not central
    CHECK_THROWS_AS(pr22_rack(nil4, {{e1, e2, e4, {rq(1), rq(1)}}}), Error);  // f(0) != 0
  }

  TEST_CASE("non-rigidity witnesses") {
    for (const std::string name : {"abelian:3", "nilpotent4", "heisenberg"}) {
      const auto rep = co_counterexample(builtin(name), sampler);
      CHECK(rep.witness);
      CHECK(rep.axioms.pass);
      const Rational n2 = dot(rep.a, rep.a);
      CHECK(rep.a_rack_a_minus_a == (n2 * n2 * n2) * rep.z);
    }
    CHECK(co_counterexample(builtin("nilpotent4"), sampler).printed_hypotheses);
    CHECK_FALSE(co_counterexample(builtin("abelian:3"), sampler).printed_hypotheses);
    try {
      co_counterexample(builtin("sl2"), sampler);
      FAIL("expected HypothesesFail");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::HypothesesFail);
    }
  }

  TEST_CASE("sl2 exponentials are too large for an absolute tolerance") {
    // the Killing form of sl2 is indefinite, so exp(F(u) ad_x) grows like e^{F(u) sqrt(u)}
    const LeibnizAlgebra sl2 = builtin("sl2");
    const auto rep = check_axioms(pr1_rack(sl2, trace_symform(sl2), PowerSeries{1, {1}}), Sampler{100, 7, 1e-9});
    CHECK(rep.self_distributivity > 1e-9);
    CHECK(rep.pointedness < 1e-12);
    CHECK(rep.min_abs_det > 1e-12);
  }

  TEST_CASE("float rack against the truncated series") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const std::vector<Rational> a{rq(1), rq(-1, 2)};
    const RackSeries s = series_from_F(sl2, trace_symform(sl2), FCoeffs{a}, 10);
    const FloatRack r = pr1_rack(sl2, trace_symform(sl2), PowerSeries{1, {1.0, -0.5}});
    const auto pts = sample_ball(3, 10, 10, 0.5);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
      Vector x(3), y(3);
      for (int k = 0; k < 3; ++k) {
        x[k] = Rational(pts[i][k]);
        y[k] = Rational(pts[i + 1][k]);
      }
      const double diff = (r.op(pts[i], pts[i + 1]) - to_float(eval_truncated(s, x, y))).norm();
      CHECK(diff <= pr1_tail_bound(sl2, a, 10, pts[i], pts[i + 1]) + 1e-12);
    }
  }
}
