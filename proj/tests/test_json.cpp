#include "leibrack/errors.hpp"
#include "leibrack/json_io.hpp"
#include "leibrack/rack_series.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <fstream>

using namespace leibrack;
using testutil::rq;

namespace {

void check_input_error(const std::function<void()>& f) {
  try {
    f();
    FAIL("expected an input error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("rationals") {
    CHECK(to_json(rq(-3, 4)) == "-3/4");
    CHECK(rational_from_json(Json("6/8")) == rq(3, 4));
    CHECK(rational_from_json(Json(5)) == 5);
    check_input_error([] { rational_from_json(Json(0.5)); });
    check_input_error([] { rational_from_json(Json("1/0")); });
  }

  TEST_CASE("algebra round trip") {
    for (const std::string name : {"sl2", "heisenberg", "nilpotent4", "gl2"}) {
      const LeibnizAlgebra a = builtin(name);
      const LeibnizAlgebra b = algebra_from_json(to_json(a));
      CHECK(b.constants() == a.constants());
    }
    CHECK(algebra_from_json(Json("builtin:so3")).dim() == 3);
  }

  TEST_CASE("multilinear objects round trip") {
    testutil::Rng rng(71);
    const PartSymMap a = rng.partsym(3, 2);
    CHECK(partsym_from_json(to_json(a)) == a);
    const SymForm f = rng.form(2, 3, SymForm::Output::Vector), g = rng.form(4, 2, SymForm::Output::Scalar);
    CHECK(symform_from_json(to_json(f)) == f);
    CHECK(symform_from_json(to_json(g)) == g);
    const Cochain c = rng.cochain(2, 3);
    CHECK(cochain_from_json(to_json(c)) == c);
    const BList b{{1, rng.form(2, 3, SymForm::Output::Vector)}, {3, rng.form(4, 3, SymForm::Output::Vector)}};
    CHECK(blist_from_json(to_json(b)) == b);
  }

  TEST_CASE("series round trip") {
    const RackSeries s = canonical_series(builtin("sl2"), 4);
    CHECK(series_from_json(to_json(s)).terms() == s.terms());
  }

  TEST_CASE("malformed input") {
    check_input_error([] { algebra_from_json(Json::parse(R"({"dim": 2, "c": [[1]]})")); });
    check_input_error([] { algebra_from_json(Json::parse(R"({"c": []})")); });
    check_input_error([] { algebra_from_json(Json(3)); });
    check_input_error([] { partsym_from_json(Json::parse(R"({"n": 1, "dim": 2, "entries": [{"mu": [2], "j": 0, "k": 0, "v": "1"}]})")); });
    check_input_error([] { symform_from_json(Json::parse(R"({"p": 0, "dim": 2, "entries": []})")); });
    check_input_error([] { cochain_from_json(Json::parse(R"({"n": 1, "dim": 2, "entries": [{"tuple": [0, 1], "k": 0, "v": "1"}]})")); });
    check_input_error([] { series_from_json(Json::parse(R"({"algebra": "builtin:sl2", "N": 2, "A": []})")); });
    check_input_error([] { load_algebra("sl2"); });
    check_input_error([] { load_series("builtin:sl2"); });
    check_input_error([] { read_json_file("/nonexistent/file.json"); });
  }

  TEST_CASE("files") {
    const std::string path = "leibrack_json_test.json";
    {
      std::ofstream out(path);
      out << to_json(builtin("heisenberg")).dump();
    }
    CHECK(load_algebra("@" + path).dim() == 3);
    {
      std::ofstream out(path);
      out << "{ not json";
    }
    check_input_error([&] { load_algebra("@" + path); });
    std::remove(path.c_str());
  }
}
