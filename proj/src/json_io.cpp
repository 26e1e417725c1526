#include "leibrack/json_io.hpp"

#include "leibrack/errors.hpp"

#include <algorithm>
#include <fstream>

namespace leibrack {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Input, std::string(what) + ": " + e.what());
  }
}

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw Error(ErrorKind::Input, std::string(what) + " index out of range");
  return j.get<std::size_t>();
}

std::vector<std::size_t> indices_from_json(const Json& j, std::size_t len, std::size_t bound, const char* what) {
  if (!j.is_array() || j.size() != len) throw Error(ErrorKind::Input, std::string(what) + " has the wrong length");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(index_from_json(e, bound, what));
  return out;
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    throw Error(ErrorKind::Input, std::string("missing or invalid field '") + key + "'");
  return j.at(key).get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::Input, "rational must be a string \"p/q\" or an integer");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw Error(ErrorKind::Input, "vector has the wrong length");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const LeibnizAlgebra& alg) {
  const std::size_t d = alg.dim();
  Json c = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json ci = Json::array();
    for (std::size_t j = 0; j < d; ++j) {
      Json cij = Json::array();
      for (std::size_t k = 0; k < d; ++k) cij.push_back(to_json(alg.c(i, j, k)));
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  return Json{{"dim", d}, {"basis", alg.basis_names()}, {"c", std::move(c)}};
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
    return builtin(name);
  }
  return guarded("algebra", [&] {
    if (!j.is_object()) throw Error(ErrorKind::Input, "algebra must be an object or a builtin name");
    const std::size_t d = size_field(j, "dim");
    std::vector<std::string> names;
    if (j.contains("basis")) {
      names = j.at("basis").get<std::vector<std::string>>();
      if (names.size() != d) throw Error(ErrorKind::Input, "basis names do not match dim");
    } else {
      for (std::size_t i = 0; i < d; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    const Json& c = j.at("c");
    std::vector<Rational> constants(d * d * d);
    if (!c.is_array() || c.size() != d) throw Error(ErrorKind::Input, "c must be a dim x dim x dim array");
    for (std::size_t i = 0; i < d; ++i) {
      if (!c[i].is_array() || c[i].size() != d) throw Error(ErrorKind::Input, "c must be a dim x dim x dim array");
      for (std::size_t k2 = 0; k2 < d; ++k2) {
        Vector row = vector_from_json(c[i][k2], d);
        for (std::size_t k = 0; k < d; ++k) constants[(i * d + k2) * d + k] = row[k];
      }
    }
    return LeibnizAlgebra(std::move(names), std::move(constants));
  });
}

Json to_json(const PartSymMap& a) {
  Json entries = Json::array();
  const auto& idx = a.index();
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Rational& v = a.block(r)(k, j);
        if (sgn(v) != 0) entries.push_back(Json{{"mu", idx.multiset(r)}, {"j", j}, {"k", k}, {"v", to_json(v)}});
      }
  return Json{{"n", a.n()}, {"dim", a.dim()}, {"entries", std::move(entries)}};
}

PartSymMap partsym_from_json(const Json& j) {
  return guarded("partsym", [&] {
    const std::size_t n = size_field(j, "n"), d = size_field(j, "dim");
    if (n == 0 || d == 0) throw Error(ErrorKind::Input, "n and dim must be positive");
    PartSymMap a(n, d);
    for (const auto& e : j.at("entries")) {
      auto mu = indices_from_json(e.at("mu"), n, d, "mu");
      std::sort(mu.begin(), mu.end());
      const std::size_t jj = index_from_json(e.at("j"), d, "j"), k = index_from_json(e.at("k"), d, "k");
      a.block(a.index().rank(mu))(k, jj) = rational_from_json(e.at("v"));
    }
    return a;
  });
}

Json to_json(const SymForm& f) {
  Json entries = Json::array();
  const auto& idx = f.index();
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t k = 0; k < f.out_dim(); ++k)
      if (sgn(f.at(r, k)) != 0) entries.push_back(Json{{"mu", idx.multiset(r)}, {"k", k}, {"v", to_json(f.at(r, k))}});
  return Json{{"p", f.arity()}, {"dim", f.dim()}, {"vector", f.vector_valued()}, {"entries", std::move(entries)}};
}

SymForm symform_from_json(const Json& j) {
  return guarded("symform", [&] {
    const std::size_t p = size_field(j, "p"), d = size_field(j, "dim");
    if (p == 0 || d == 0) throw Error(ErrorKind::Input, "p and dim must be positive");
    const bool vec = j.value("vector", false);
    SymForm f(p, d, vec ? SymForm::Output::Vector : SymForm::Output::Scalar);
    for (const auto& e : j.at("entries")) {
      auto mu = indices_from_json(e.at("mu"), p, d, "mu");
      std::sort(mu.begin(), mu.end());
      const std::size_t k = vec ? index_from_json(e.at("k"), d, "k") : 0;
      f.at(f.index().rank(mu), k) = rational_from_json(e.at("v"));
    }
    return f;
  });
}

Json to_json(const Cochain& c) {
  Json entries = Json::array();
  for (std::size_t t = 0; t < c.tuple_count(); ++t)
    for (std::size_t k = 0; k < c.dim(); ++k)
      if (sgn(c.at(t, k)) != 0) entries.push_back(Json{{"tuple", c.tuple(t)}, {"k", k}, {"v", to_json(c.at(t, k))}});
  return Json{{"n", c.degree()}, {"dim", c.dim()}, {"entries", std::move(entries)}};
}

Cochain cochain_from_json(const Json& j) {
  return guarded("cochain", [&] {
    const std::size_t n = size_field(j, "n"), d = size_field(j, "dim");
    if (d == 0) throw Error(ErrorKind::Input, "dim must be positive");
    Cochain c(n, d);
    for (const auto& e : j.at("entries")) {
      auto t = indices_from_json(e.at("tuple"), n, d, "tuple");
      c.at(c.tuple_index(t), index_from_json(e.at("k"), d, "k")) = rational_from_json(e.at("v"));
    }
    return c;
  });
}

Json to_json(const RackSeries& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(to_json(t));
  return Json{{"algebra", to_json(s.algebra())}, {"N", s.order()}, {"A", std::move(terms)}};
}

RackSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    LeibnizAlgebra alg = algebra_from_json(j.at("algebra"));
    const std::size_t n = size_field(j, "N");
    const Json& a = j.at("A");
    if (!a.is_array() || a.size() != n) throw Error(ErrorKind::Input, "A must hold N maps");
    std::vector<PartSymMap> terms;
    for (const auto& t : a) terms.push_back(partsym_from_json(t));
    return RackSeries(std::move(alg), std::move(terms));
  });
}

Json to_json(const BList& b) {
  Json out = Json::array();
  for (const auto& [l, f] : b) out.push_back(Json{{"l", l}, {"B", to_json(f)}});
  return out;
}

BList blist_from_json(const Json& j) {
  return guarded("B list", [&] {
    BList out;
    for (const auto& e : j) out.emplace(size_field(e, "l"), symform_from_json(e.at("B")));
    return out;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Input, path + ": " + e.what());
  }
}

LeibnizAlgebra load_algebra(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin(spec.substr(8));
  if (!spec.empty() && spec[0] == '@') return algebra_from_json(read_json_file(spec.substr(1)));
  throw Error(ErrorKind::Input, "algebra must be builtin:NAME or @file.json");
}

RackSeries load_series(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return series_from_json(read_json_file(spec.substr(1)));
  throw Error(ErrorKind::Input, "series must be @file.json");
}

}  // namespace leibrack
