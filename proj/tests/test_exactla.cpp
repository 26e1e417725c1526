#include "leibrack/errors.hpp"
#include "leibrack/matrix.hpp"
#include "test_util.hpp"

using namespace leibrack;
using testutil::rq;

TEST_SUITE("exactla") {
  TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/2") == rq(-1, 2));
    CHECK(parse_rational("6/4") == rq(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    for (const char* bad : {"", "1/0", "a", "1/-2", "1//2", "--1"}) CHECK_THROWS_AS(parse_rational(bad), Error);
  }

  TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
  }

  TEST_CASE("rank, kernel and solve") {
    MatrixQ a = MatrixQ::from_rows(3, {{rq(1), rq(2), rq(3)}, {rq(2), rq(4), rq(6)}, {rq(1), rq(0), rq(1)}});
    CHECK(rank(a) == 2);
    const auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 1);
    CHECK(is_zero(a * ker[0]));

    const Solution none = solve_linear(a, {rq(1), rq(0), rq(0)});
    CHECK(none.kind == Solution::Kind::NoSolution);
    const Solution fam = solve_linear(a, {rq(1), rq(2), rq(0)});
    REQUIRE(fam.kind == Solution::Kind::Affine);
    CHECK(a * fam.particular == Vector{rq(1), rq(2), rq(0)});
    CHECK_THROWS_AS(solve_linear(a, {rq(1)}), Error);
  }

  TEST_CASE("random square systems solve exactly") {
    testutil::Rng rng(7);
    for (int s = 0; s < 20; ++s) {
      const MatrixQ a = rng.matrix(4, 4);
      const Vector x = rng.vector(4);
      const Solution sol = solve_linear(a, a * x);
      REQUIRE(sol.kind != Solution::Kind::NoSolution);
      CHECK(a * sol.particular == a * x);
      if (rank(a) == 4) CHECK(sol.particular == x);
    }
  }

  TEST_CASE("span membership") {
    const auto b = span_basis(3, {{rq(1), rq(1), rq(0)}, {rq(2), rq(2), rq(0)}, {rq(0), rq(1), rq(1)}});
    CHECK(b.size() == 2);
    CHECK(in_span(b, {rq(1), rq(2), rq(1)}));
    CHECK_FALSE(in_span(b, {rq(0), rq(0), rq(1)}));
  }
}
