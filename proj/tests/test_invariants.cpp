#include "leibrack/errors.hpp"
#include "leibrack/invariants.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

namespace {

Rational literal_P(const LeibnizAlgebra& alg, const std::vector<Vector>& xs) {
  Rational total = 0;
  for (const auto& p : testutil::permutations(xs.size())) {
    Rational term = 1;
    for (std::size_t i = 0; i < xs.size(); i += 2) term *= alg.trace_form(xs[p[i]], xs[p[i + 1]]);
    total += term;
  }
  return total / factorial(static_cast<unsigned>(xs.size()));
}

std::vector<std::size_t> dims_of(const LeibnizAlgebra& alg) {
  std::vector<std::size_t> d;
  for (const auto& r : verify_sym_dims(alg, 2)) d.push_back(r.dim);
  return d;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("invariant form dimensions on sl2 and so3") {
    CHECK(invariant_basis(builtin("sl2"), 2).empty());
    CHECK(invariant_basis(builtin("sl2"), 3).size() == 1);
    CHECK(dims_of(builtin("sl2")) == std::vector<std::size_t>{0, 1, 0, 1});
    CHECK(dims_of(builtin("so3")) == std::vector<std::size_t>{0, 1, 0, 1});
    for (const auto& r : verify_sym_dims(builtin("so3"), 2))
      if (r.arity % 2 == 1) CHECK(r.spanned_by_B_g == std::optional<bool>(true));
  }

  TEST_CASE("abelian: every symmetric map is invariant") {
    CHECK(invariant_basis(builtin("abelian:2"), 1).size() == 4);
    CHECK(invariant_basis(builtin("abelian:2"), 2).size() == 6);
  }

  TEST_CASE("basis elements are invariant") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& f : invariant_basis(builtin("heisenberg"), n)) CHECK(is_invariant(builtin("heisenberg"), f));
  }

  TEST_CASE("P_n matches the symmetrized product for n = 1, 2") {
    testutil::Rng rng(51);
    for (const std::string name : {"sl2", "so3"}) {
      const LeibnizAlgebra alg = builtin(name);
      for (std::size_t n = 1; n <= 2; ++n) {
        const SymForm p = build_P(alg, n);
        std::vector<Vector> xs;
        for (std::size_t i = 0; i < 2 * n; ++i) xs.push_back(rng.vector(3));
        CHECK(p.eval_scalar(xs) == literal_P(alg, xs));
      }
      CHECK(build_P(alg, 1) == trace_symform(alg));
    }
  }

  TEST_CASE("P_n on the diagonal") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const Vector h = sl2.basis_vector(0);
    CHECK(build_P(sl2, 2).eval_diag_scalar(h) == 16);
    testutil::Rng rng(52);
    const Vector x = rng.vector(3);
    const Rational q = sl2.trace_form(x, x);
    CHECK(build_P(sl2, 3).eval_diag_scalar(x) == q * q * q);
    CHECK(build_P(builtin("abelian:3"), 2).is_zero());
  }

  TEST_CASE("B_g formulas") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    testutil::Rng rng(53);
    const Vector x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
    CHECK(build_B_g(sl2, 0).eval(std::vector<Vector>{x}) == x);
    const Vector expect = sl2.trace_form(y, z) * x + sl2.trace_form(x, z) * y + sl2.trace_form(x, y) * z;
    CHECK(build_B_g(sl2, 1).eval(std::vector<Vector>{x, y, z}) == expect);
    CHECK(is_invariant(builtin("so3"), build_B_g(builtin("so3"), 1)));
    CHECK(is_invariant(sl2, build_B_g(sl2, 2)));
  }

  TEST_CASE("the arity-3 basis vector is a multiple of B_1") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const auto basis = invariant_basis(sl2, 3);
    REQUIRE(basis.size() == 1);
    const SymForm b1 = build_B_g(sl2, 1);
    // find the ratio on the first nonzero coefficient
    std::optional<Rational> ratio;
    for (std::size_t r = 0; r < b1.index().size() && !ratio; ++r)
      for (std::size_t k = 0; k < 3 && !ratio; ++k)
        if (sgn(b1.at(r, k)) != 0) ratio = basis[0].at(r, k) / b1.at(r, k);
    REQUIRE(ratio.has_value());
    CHECK(basis[0] == *ratio * b1);
  }

  TEST_CASE("symmetry of P_2 under permutations") {
    const LeibnizAlgebra so3 = builtin("so3");
    const SymForm p = build_P(so3, 2);
    testutil::Rng rng(54);
    std::vector<Vector> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(rng.vector(3));
    const Rational ref = p.eval_scalar(xs);
    for (const auto& perm : testutil::permutations(4)) {
      std::vector<Vector> ys;
      for (auto i : perm) ys.push_back(xs[i]);
      CHECK(p.eval_scalar(ys) == ref);
    }
  }

  TEST_CASE("arity zero is rejected") { CHECK_THROWS_AS(invariant_basis(builtin("sl2"), 0), Error); }
}
