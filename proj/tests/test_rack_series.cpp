#include "leibrack/errors.hpp"
#include "leibrack/rack_series.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

namespace {

// 1/(n!)^2 sum over all orderings of ad_{x_s1} .. ad_{x_sn} y.
Vector literal_canonical(const LeibnizAlgebra& alg, const std::vector<Vector>& xs, const Vector& y) {
  Vector total = zero_vector(alg.dim());
  for (const auto& p : testutil::permutations(xs.size())) {
    Vector v = y;
    for (std::size_t i = xs.size(); i-- > 0;) v = alg.bracket(xs[p[i]], v);
    total += v;
  }
  const Rational nf = factorial(static_cast<unsigned>(xs.size()));
  return (1 / (nf * nf)) * total;
}

}  // namespace

TEST_SUITE("rack-series") {
  TEST_CASE("canonical terms match the permutation sum") {
    testutil::Rng rng(21);
    for (const std::string name : {"sl2", "heisenberg", "nilpotent4"}) {
      const LeibnizAlgebra alg = builtin(name);
      const RackSeries s = canonical_series(alg, 4);
      for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Vector> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.vector(alg.dim()));
        const Vector y = rng.vector(alg.dim());
        CHECK(s.term(n).eval(xs, y) == literal_canonical(alg, xs, y));
      }
    }
  }

  TEST_CASE("canonical term values on sl2") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const RackSeries s = canonical_series(sl2, 2);
    const Vector h = sl2.basis_vector(0), e = sl2.basis_vector(1);
    CHECK(s.term(1).eval_diag(h, e) == rq(2) * e);
    // ad_h^2 e / 2 = 2e
    CHECK(s.term(2).eval_diag(h, e) == rq(2) * e);
    CHECK(s.term(1) == bracket_map(sl2));
  }

  TEST_CASE("canonical series satisfy the rack equations") {
    for (const std::string name : {"sl2", "heisenberg", "abelian:3"}) {
      const RackSeries s = canonical_series(builtin(name), 5);
      for (const auto& r : check_eqm_all(s, 5)) CHECK(r.pass);
      CHECK(check_invariance_all(s).pass());
    }
  }

  TEST_CASE("a non-Leibniz input is refused") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    auto c = sl2.constants();
    c[5] += 1;
    CHECK_THROWS_AS(canonical_series(LeibnizAlgebra::unchecked(sl2.basis_names(), c), 3), Error);
  }

  TEST_CASE("perturbations are caught by both checks") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    RackSeries s = canonical_series(sl2, 4);
    PartSymMap a2 = s.term(2);
    a2.block(1)(0, 2) += rq(1, 3);
    s.set_term(2, a2);
    const auto eqm = check_eqm(s, 2, 1);
    CHECK_FALSE(eqm.pass);
    REQUIRE(eqm.witness.has_value());
    CHECK_FALSE(is_zero(eqm.witness->residual));
    bool formal_fails = false;
    for (const auto& r : check_self_distributivity_formal(s, 4)) {
      CHECK(r.pass == check_eqm(s, r.p, r.q).pass);
      formal_fails = formal_fails || !r.pass;
    }
    CHECK(formal_fails);
    CHECK(check_invariance_all(s).first_failure == std::optional<std::size_t>(2));
  }

  TEST_CASE("order bounds") {
    const RackSeries s = canonical_series(builtin("sl2"), 3);
    CHECK_NOTHROW(check_eqm(s, 3, 1));
    CHECK_THROWS_AS(check_eqm(s, 4, 1), Error);
    CHECK_THROWS_AS(s.term(4), Error);
  }

  TEST_CASE("exp composition coefficients") {
    // F = 1 + a u: F^m/m! has u^j coefficient C(m,j) a^j / m!
    const FCoeffs f{{rq(3)}};
    const auto c = exp_composition_coefficients(f, 4, 3);
    CHECK(c[0][0] == 1);
    CHECK(c[0][1] == 0);
    CHECK(c[2][1] == rq(2 * 3, 2));
    CHECK(c[3][2] == rq(3 * 9, 6));
    CHECK(c[4][3] == rq(4 * 27, 24));
  }

  TEST_CASE("series from F with F = 1 is canonical") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const RackSeries s = series_from_F(sl2, trace_symform(sl2), FCoeffs{}, 5);
    CHECK(s.terms() == canonical_series(sl2, 5).terms());
  }

  TEST_CASE("series from F is a rack series") {
    const LeibnizAlgebra so3 = builtin("so3");
    const RackSeries s = series_from_F(so3, trace_symform(so3), FCoeffs{{rq(1), rq(-1, 2)}}, 5);
    for (const auto& r : check_eqm_all(s, 5)) CHECK(r.pass);
    CHECK(check_invariance_all(s).pass());
  }

  TEST_CASE("series from F refuses a non-invariant P") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    SymForm p(2, 3, SymForm::Output::Scalar);
    p.at(0, 0) = 1;  // h* (x) h*
    CHECK_THROWS_AS(series_from_F(sl2, p, FCoeffs{{rq(1)}}, 3), Error);
  }

  TEST_CASE("truncated evaluation") {
    const LeibnizAlgebra heis = builtin("heisenberg");
    const RackSeries s = canonical_series(heis, 3);
    // ad^2 vanishes, so x |> y = y + [x, y]
    const Vector x{rq(1), rq(2), rq(0)}, y{rq(3), rq(-1), rq(5)};
    CHECK(eval_truncated(s, x, y) == y + heis.bracket(x, y));
  }
}
