#include "leibrack/errors.hpp"
#include "leibrack/multilinear.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

TEST_SUITE("multilinear") {
  TEST_CASE("multiset ranks are a bijection") {
    for (std::size_t dim : {1, 2, 3, 4})
      for (std::size_t n : {1, 2, 3, 5}) {
        MultisetIndex idx(dim, n);
        CHECK(idx.size() == binomial(static_cast<unsigned>(dim + n - 1), static_cast<unsigned>(n)));
        Rational total = 0;
        for (std::size_t r = 0; r < idx.size(); ++r) {
          CHECK(idx.rank(idx.multiset(r)) == r);
          total += idx.multinomial(r);
        }
        // sum of multinomials = dim^n ordered tuples
        Rational expect = 1;
        for (std::size_t i = 0; i < n; ++i) expect *= static_cast<unsigned long>(dim);
        CHECK(total == expect);
      }
    MultisetIndex idx(3, 3);
    CHECK(idx.rank_of_unsorted({2, 0, 1}) == idx.rank({0, 1, 2}));
  }

  TEST_CASE("ordered evaluation agrees with the diagonal") {
    testutil::Rng rng(11);
    for (std::size_t n = 1; n <= 4; ++n) {
      const PartSymMap a = rng.partsym(n, 3);
      const Vector x = rng.vector(3), y = rng.vector(3);
      const std::vector<Vector> xs(n, x);
      CHECK(a.eval(xs, y) == a.eval_diag(x, y));
      CHECK(a.eval_matrix(xs) * y == a.eval_diag_matrix(x) * y);
    }
  }

  TEST_CASE("evaluation is symmetric in the first slots") {
    testutil::Rng rng(12);
    const PartSymMap a = rng.partsym(3, 3);
    const Vector u = rng.vector(3), v = rng.vector(3), w = rng.vector(3), y = rng.vector(3);
    const Vector ref = a.eval(std::vector<Vector>{u, v, w}, y);
    CHECK(a.eval(std::vector<Vector>{w, u, v}, y) == ref);
    CHECK(a.eval(std::vector<Vector>{v, w, u}, y) == ref);
  }

  TEST_CASE("polarization recovers random symmetric maps") {
    testutil::Rng rng(13);
    for (std::size_t n = 1; n <= 4; ++n) {
      const PartSymMap a = rng.partsym(n, 3);
      auto diag = [&](const Vector& x) { return a.eval_diag_matrix(x); };
      const PartSymMap back = polarize(std::function<MatrixQ(const Vector&)>(diag), n, 3);
      CHECK(back == a);
      CHECK(verify_polarization(back, diag));
    }
    for (std::size_t p = 1; p <= 4; ++p) {
      const SymForm f = rng.form(p, 3, SymForm::Output::Vector);
      const SymForm back =
          polarize_form([&](const Vector& x) { return f.eval_diag(x); }, p, 3, SymForm::Output::Vector);
      CHECK(back == f);
    }
  }

  TEST_CASE("polar form of <x,x>^2") {
    const LeibnizAlgebra sl2 = builtin("sl2");
    const SymForm p = polarize_form([&](const Vector& x) { return Vector{sl2.trace_form(x, x) * sl2.trace_form(x, x)}; },
                                    4, 3, SymForm::Output::Scalar);
    const Vector h = sl2.basis_vector(0);
    CHECK(p.eval_scalar(std::vector<Vector>{h, h, h, h}) == 16);
  }

  TEST_CASE("Lie derivative against the literal formula") {
    testutil::Rng rng(14);
    const LeibnizAlgebra alg = builtin("sl2");
    const PartSymMap a = rng.partsym(2, 3);
    const Vector x = rng.vector(3), y1 = rng.vector(3), y2 = rng.vector(3), z = rng.vector(3);
    const PartSymMap l = lie_derivative(alg, a, x);
    const Vector expect = alg.bracket(x, a.eval(std::vector<Vector>{y1, y2}, z)) -
                          a.eval(std::vector<Vector>{alg.bracket(x, y1), y2}, z) -
                          a.eval(std::vector<Vector>{y1, alg.bracket(x, y2)}, z) -
                          a.eval(std::vector<Vector>{y1, y2}, alg.bracket(x, z));
    CHECK(l.eval(std::vector<Vector>{y1, y2}, z) == expect);
  }

  TEST_CASE("bracket and trace form are invariant") {
    for (const std::string name : {"sl2", "so3", "heisenberg", "gl2"}) {
      const LeibnizAlgebra alg = builtin(name);
      CHECK(is_invariant(alg, bracket_map(alg)));
      CHECK(is_invariant(alg, trace_symform(alg)));
    }
    testutil::Rng rng(15);
    CHECK_FALSE(is_invariant(builtin("sl2"), rng.partsym(2, 3)));
  }

  TEST_CASE("shape mismatches throw") {
    PartSymMap a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a += b, Error);
  }
}
