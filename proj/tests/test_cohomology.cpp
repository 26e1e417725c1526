#include "leibrack/cohomology.hpp"
#include "leibrack/errors.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

TEST_SUITE("cohomology") {
  TEST_CASE("degree 0: delta(x)(m) = -[x,m]") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Cochain d = delta(sl2, Cochain::from_vector(sl2.basis_vector(0)));
    const Vector e = sl2.basis_vector(1);
    CHECK(d.eval(std::vector<Vector>{e}) == rq(-2) * e);
    testutil::Rng rng(31);
    for (const auto& name : testutil::corpus()) {
      const LeibnizAlgebra alg = builtin(name);
      const Vector x = rng.vector(alg.dim()), m = rng.vector(alg.dim());
      CHECK(delta(alg, Cochain::from_vector(x)).eval(std::vector<Vector>{m}) == rq(-1) * alg.bracket(x, m));
    }
  }

  TEST_CASE("degree 1: delta(F)(y,z) = [y,F z] + [F y,z] - F[y,z]") {
    testutil::Rng rng(32);
    for (const auto& name : testutil::corpus()) {
      const LeibnizAlgebra alg = builtin(name);
      const MatrixQ f = rng.matrix(alg.dim(), alg.dim());
      const Cochain d = delta(alg, Cochain::from_matrix(f));
      const Vector y = rng.vector(alg.dim()), z = rng.vector(alg.dim());
      CHECK(d.eval(std::vector<Vector>{y, z}) ==
            alg.bracket(y, f * z) + alg.bracket(f * y, z) - f * alg.bracket(y, z));
    }
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Cochain id = delta(sl2, Cochain::from_matrix(MatrixQ::identity(3)));
    const Vector y = rng.vector(3), z = rng.vector(3);
    CHECK(id.eval(std::vector<Vector>{y, z}) == sl2.bracket(y, z));
  }

  TEST_CASE("abelian coboundary vanishes") {
    testutil::Rng rng(33);
    const LeibnizAlgebra ab = builtin("abelian:3");
    for (std::size_t n = 0; n <= 3; ++n) CHECK(delta(ab, rng.cochain(n, 3)).is_zero());
  }

  TEST_CASE("delta squared is zero") {
    testutil::Rng rng(34);
    for (const auto& name : testutil::corpus()) {
      const LeibnizAlgebra alg = builtin(name);
      for (std::size_t n = 0; n <= 2; ++n)
        for (int s = 0; s < 3; ++s) CHECK(delta(alg, delta(alg, rng.cochain(n, alg.dim()))).is_zero());
    }
    // a non-Lie Leibniz algebra: [e1,e1] = e2
    std::vector<Rational> c(8, Rational(0));
    c[1] = 1;
    const LeibnizAlgebra alg({"e1", "e2"}, c);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(delta(alg, delta(alg, rng.cochain(n, 2))).is_zero());
  }

  TEST_CASE("degree bound") { CHECK_THROWS_AS(delta(builtin("sl2"), Cochain(4, 3)), Error); }

  TEST_CASE("cohomology dimensions") {
    const auto sl2 = cohomology_dims(builtin("sl2"));
    CHECK(sl2.h0 == 0);
    CHECK(sl2.h1 == 0);
    const auto so3 = cohomology_dims(builtin("so3"));
    CHECK(so3.h0 == 0);
    CHECK(so3.h1 == 0);
    CHECK(cohomology_dims(builtin("abelian:3")).h0 == 3);
    CHECK(cohomology_dims(builtin("abelian:3")).h1 == 9);
    // heisenberg: H^0 is the center
    CHECK(cohomology_dims(builtin("heisenberg")).h0 == 1);
  }

  TEST_CASE("solving D(y) = [b,y]") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Vector h = sl2.basis_vector(0);
    const auto sol = solve_coboundary(sl2, Cochain::from_matrix(sl2.ad_matrix(h)));
    CHECK(sol.status == CoboundarySolution::Status::Unique);
    CHECK(sol.b == h);

    const auto zero = solve_coboundary(sl2, Cochain(1, 3));
    CHECK(zero.ok());
    CHECK(is_zero(zero.b));

    const auto ab = solve_coboundary(builtin("abelian:3"), Cochain(1, 3));
    CHECK(ab.status == CoboundarySolution::Status::NonUnique);
    CHECK(ab.family.size() == 3);

    const auto bad = solve_coboundary(sl2, Cochain::from_matrix(MatrixQ::identity(3)));
    CHECK(bad.status == CoboundarySolution::Status::NotACocycle);
  }

  TEST_CASE("a cocycle that is not inner") {
    // On abelian(1), every linear map is a cocycle but only 0 is inner.
    const LeibnizAlgebra ab = builtin("abelian:1");
    const auto sol = solve_coboundary(ab, Cochain::from_matrix(MatrixQ::identity(1)));
    CHECK(sol.status == CoboundarySolution::Status::NoSolution);
  }
}
