#include "leibrack/cohomology.hpp"
#include "leibrack/errors.hpp"
#include "leibrack/invariants.hpp"
#include "leibrack/reconstruction.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

TEST_SUITE("reconstruction") {
  TEST_CASE("canonical series gives zero B") {
    for (const std::string name : {"sl2", "so3"}) {
      const auto rec = reconstruct_B(canonical_series(builtin(name), 6));
      CHECK(rec.ok());
      CHECK(rec.b.size() == 5);
      for (const auto& [l, f] : rec.b) CHECK(f.is_zero());
    }
  }

  TEST_CASE("F-series: B3(x) = a1 <x,x> x and even B vanish") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Rational a1 = rq(5, 7);
    const auto rec = reconstruct_B(series_from_F(sl2, trace_symform(sl2), FCoeffs{{a1}}, 5));
    REQUIRE(rec.ok());
    CHECK(rec.b.at(2).is_zero());
    CHECK(rec.b.at(4).is_zero());
    testutil::Rng rng(41);
    for (int s = 0; s < 3; ++s) {
      const Vector x = rng.vector(3);
      CHECK(rec.b.at(3).eval_diag(x) == (a1 * sl2.trace_form(x, x)) * x);
    }
  }

  TEST_CASE("round trip through random invariant B") {
    const LeibnizAlgebra so3 = builtin("so3");
    const SymForm b1 = build_B_g(so3, 1), b2 = build_B_g(so3, 2);
    testutil::Rng rng(42);
    for (int s = 0; s < 2; ++s) {
      BList in;
      in.emplace(3, rng.rational() * b1);
      in.emplace(5, rng.rational() * b2);
      const RackSeries series = build_series_from_B(so3, in, 6);
      for (const auto& r : check_eqm_all(series, 6)) CHECK(r.pass);
      const auto rec = reconstruct_B(series);
      REQUIRE(rec.ok());
      CHECK(rec.b.at(3) == in.at(3));
      CHECK(rec.b.at(5) == in.at(5));
      CHECK(rec.b.at(4).is_zero());
    }
  }

  TEST_CASE("distinct B lists give distinct series") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const SymForm b1 = build_B_g(sl2, 1);
    BList x, y;
    x.emplace(3, rq(1) * b1);
    y.emplace(3, rq(2) * b1);
    CHECK_FALSE(build_series_from_B(sl2, x, 4).terms() == build_series_from_B(sl2, y, 4).terms());
  }

  TEST_CASE("empty B list builds the canonical series") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    CHECK(build_series_from_B(sl2, {}, 5).terms() == canonical_series(sl2, 5).terms());
  }

  TEST_CASE("non-invariant B is refused by the checked builder") {
    testutil::Rng rng(43);
    BList b;
    b.emplace(2, rng.form(2, 3, SymForm::Output::Vector));
    CHECK_THROWS_AS(build_series_from_B(builtin("sl2"), b, 3), Error);
  }

  TEST_CASE("a perturbed A3 is reported at degree 3") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    RackSeries s = canonical_series(sl2, 4);
    testutil::Rng rng(44);
    s.set_term(3, s.term(3) + rng.partsym(3, 3));
    const auto rec = reconstruct_B(s);
    CHECK_FALSE(rec.ok());
    REQUIRE(rec.failed_degree().has_value());
    CHECK(*rec.failed_degree() == 3);
    const auto st = rec.degrees.back().status;
    CHECK((st == DegreeStatus::Status::CohomologyObstruction || st == DegreeStatus::Status::InvarianceFailure));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(reconstruct_B(canonical_series(builtin("heisenberg"), 3)), Error);
    const LeibnizAlgebra sl2 = builtin("sl2");
    RackSeries s = canonical_series(sl2, 3);
    s.set_term(1, rq(2) * s.term(1));
    CHECK_THROWS_AS(reconstruct_B(s), Error);
  }

  TEST_CASE("composition rule on the factors of the structure formula") {
    // delta(F o G) for F = A0_k(b.., .) and G = A0_m(x, .) matches the
    // composition identity on basis pairs.
    const LeibnizAlgebra sl2 = builtin("sl2");
    const RackSeries canon = canonical_series(sl2, 4);
    testutil::Rng rng(45);
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t m = 0; m + 2 * k <= 4; ++m) {
        const Vector x = rng.vector(3);
        std::vector<Vector> bs;
        for (std::size_t i = 0; i < k; ++i) bs.push_back(rng.vector(3));
        const MatrixQ f = canon.term(k).eval_matrix(bs);
        const MatrixQ g = canon.diag_matrix(m, x);
        const Cochain dfg = delta(sl2, Cochain::from_matrix(f * g));
        const Cochain df = delta(sl2, Cochain::from_matrix(f));
        const Cochain dg = delta(sl2, Cochain::from_matrix(g));
        for (std::size_t y = 0; y < 3; ++y)
          for (std::size_t z = 0; z < 3; ++z) {
            const Vector ey = sl2.basis_vector(y), ez = sl2.basis_vector(z);
            const Vector rhs = df.eval(std::vector<Vector>{ey, g * ez}) + df.eval(std::vector<Vector>{g * ey, ez}) +
                               f * dg.eval(std::vector<Vector>{ey, ez}) - sl2.bracket(f * ey, g * ez) -
                               sl2.bracket(g * ey, f * ez);
            CHECK(dfg.eval(std::vector<Vector>{ey, ez}) == rhs);
          }
      }
  }

  TEST_CASE("the q = 1 equations in coboundary form") {
    // delta(A_p(x, .))(y, z) = -sum_{r=1}^{p-1} [A_r(x,y), A_{p-r}(x,z)]
    const LeibnizAlgebra so3 = builtin("so3");
    const RackSeries s = series_from_F(so3, trace_symform(so3), FCoeffs{{rq(2), rq(-1, 3)}}, 5);
    testutil::Rng rng(46);
    for (std::size_t p = 2; p <= 5; ++p) {
      const Vector x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
      const Cochain d = delta(so3, Cochain::from_matrix(s.diag_matrix(p, x)));
      Vector expect = zero_vector(3);
      for (std::size_t r = 1; r < p; ++r)
        expect -= so3.bracket(s.diag_matrix(r, x) * y, s.diag_matrix(p - r, x) * z);
      CHECK(d.eval(std::vector<Vector>{y, z}) == expect);
    }
  }
}
