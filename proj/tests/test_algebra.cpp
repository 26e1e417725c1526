#include "leibrack/algebra.hpp"
#include "leibrack/errors.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

TEST_SUITE("leibniz-core") {
  TEST_CASE("corpus algebras are left Leibniz") {
    for (const auto& name : testutil::corpus()) {
      CAPTURE(name);
      CHECK(check_left_leibniz(builtin(name)).pass);
    }
    CHECK(check_left_leibniz(builtin("gl2")).pass);
  }

  TEST_CASE("sl2 brackets and trace form") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Vector h = sl2.basis_vector(0), e = sl2.basis_vector(1), f = sl2.basis_vector(2);
    CHECK(sl2.bracket(h, e) == rq(2) * e);
    CHECK(sl2.bracket(h, f) == rq(-2) * f);
    CHECK(sl2.bracket(e, f) == h);
    CHECK(sl2.trace_form(h, h) == 4);
    CHECK(sl2.trace_form(e, f) == 2);
    CHECK(sl2.trace_form(e, e) == 0);
    CHECK(sl2.is_lie());
  }

  TEST_CASE("so3 trace form is negative definite on the basis") {
    const LeibnizAlgebra so3 = builtin("so3");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(so3.trace_gram()(i, j) == (i == j ? -1 : 0));
  }

  TEST_CASE("perturbed constants fail with a witness") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    auto c = sl2.constants();
    c[(0 * 3 + 1) * 3 + 2] += 1;
    CHECK_THROWS_AS(LeibnizAlgebra(sl2.basis_names(), c), Error);
    const auto rep = check_left_leibniz(LeibnizAlgebra::unchecked(sl2.basis_names(), c));
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK_FALSE(is_zero(rep.violations.front().residual));
  }

  TEST_CASE("a non-Lie left Leibniz algebra") {
    // [e1,e1] = e2, all other brackets zero.
    std::vector<Rational> c(8, Rational(0));
    c[(0 * 2 + 0) * 2 + 1] = 1;
    const LeibnizAlgebra alg({"e1", "e2"}, c);
    CHECK_FALSE(alg.is_lie());
    CHECK(center(alg).dim() == 1);
    CHECK(derived(alg).dim() == 1);
  }

  TEST_CASE("center and derived algebra") {
    CHECK(center(builtin("sl2")).dim() == 0);
    CHECK(derived(builtin("sl2")).dim() == 3);
    CHECK(center(builtin("heisenberg")).dim() == 1);
    CHECK(derived(builtin("heisenberg")).dim() == 1);
    CHECK(center(builtin("nilpotent4")).dim() == 2);
    CHECK(center(builtin("abelian:3")).dim() == 3);
    CHECK(derived(builtin("abelian:3")).dim() == 0);
    CHECK(center(builtin("gl2")).dim() == 1);
  }

  TEST_CASE("ad is a derivation representation") {
    testutil::Rng rng(3);
    for (const auto& name : testutil::corpus()) {
      const LeibnizAlgebra alg = builtin(name);
      for (int s = 0; s < 5; ++s) {
        const Vector x = rng.vector(alg.dim()), y = rng.vector(alg.dim());
        // left Leibniz: ad_[x,y] = [ad_x, ad_y]
        const MatrixQ lhs = alg.ad_matrix(alg.bracket(x, y));
        const MatrixQ rhs = alg.ad_matrix(x) * alg.ad_matrix(y) - alg.ad_matrix(y) * alg.ad_matrix(x);
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("unknown builtin") { CHECK_THROWS_AS(builtin("e8"), Error); }
}
