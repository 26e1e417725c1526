#include "leibrack/cohomology.hpp"
#include "leibrack/constructions.hpp"
#include "leibrack/errors.hpp"
#include "leibrack/invariants.hpp"
#include "leibrack/json_io.hpp"
#include "leibrack/reconstruction.hpp"
#include "leibrack/rigidity.hpp"
#include "leibrack/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace leibrack;

namespace {

struct Options {
  std::string algebra = "builtin:sl2";
  std::string series;
  std::string cochain;
  std::string a;
  std::size_t order = 0;
  std::size_t arity_max = 2;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string json_out;
  bool timings = false;
};

FCoeffs parse_coeffs(const std::string& text) {
  FCoeffs f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) f.a.push_back(parse_rational(item));
  return f;
}

Json coeffs_json(const FCoeffs& f) {
  Json out = Json::array();
  for (const auto& c : f.a) out.push_back(to_json(c));
  return out;
}

Json cmd_check_leibniz(const Options& o) {
  const Json spec = o.algebra;
  // Load without validation so a failing algebra still yields a witness.
  LeibnizAlgebra alg = [&] {
    if (o.algebra.rfind("builtin:", 0) == 0) return load_algebra(o.algebra);
    Json j = read_json_file(o.algebra.substr(o.algebra.empty() ? 0 : 1));
    const std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Rational> c(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k2 = 0; k2 < d; ++k2) {
        Vector row = vector_from_json(j.at("c").at(i).at(k2), d);
        for (std::size_t k = 0; k < d; ++k) c[(i * d + k2) * d + k] = row[k];
      }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("e" + std::to_string(i + 1));
    if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
    return LeibnizAlgebra::unchecked(names, c);
  }();
  const auto rep = check_left_leibniz(alg);
  Json viol = Json::array();
  for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i)
    viol.push_back(Json{{"triple", rep.violations[i].triple}, {"residual", to_json(rep.violations[i].residual)}});
  return Json{{"algebra", spec},
              {"dim", alg.dim()},
              {"is_lie", alg.is_lie()},
              {"violation_count", rep.violations.size()},
              {"violations", viol},
              {"pass", rep.pass}};
}

std::size_t require_order(const Options& o) {
  if (o.order == 0) throw Error(ErrorKind::Input, "--order N is required");
  return o.order;
}

Json cmd_canonical(const Options& o) {
  const RackSeries s = canonical_series(load_algebra(o.algebra), require_order(o));
  return Json{{"series", to_json(s)}, {"pass", true}};
}

RackSeries series_for(const Options& o) {
  if (!o.series.empty()) return load_series(o.series);
  const LeibnizAlgebra alg = load_algebra(o.algebra);
  if (!o.a.empty()) return series_from_F(alg, trace_symform(alg), parse_coeffs(o.a), require_order(o));
  return canonical_series(alg, require_order(o));
}

Json cmd_check_rack(const Options& o) {
  const RackSeries s = series_for(o);
  Json eqm = Json::array();
  bool pass = true;
  for (const auto& r : check_eqm_all(s, s.order())) {
    Json row{{"p", r.p}, {"q", r.q}, {"pass", r.pass}};
    if (r.witness)
      row["witness"] = Json{{"x", r.witness->x_multiset}, {"y", r.witness->y_multiset}, {"z", r.witness->z},
                            {"residual", to_json(r.witness->residual)}};
    pass = pass && r.pass;
    eqm.push_back(std::move(row));
  }
  const auto inv = check_invariance_all(s);
  pass = pass && inv.pass();
  Json invj = Json::array();
  for (std::size_t n = 1; n <= inv.invariant.size(); ++n) invj.push_back(Json{{"n", n}, {"invariant", inv.invariant[n - 1]}});
  return Json{{"N", s.order()}, {"eqm", eqm}, {"invariance", invj}, {"pass", pass}};
}

Json cmd_cohomology(const Options& o) {
  const LeibnizAlgebra alg = load_algebra(o.algebra);
  const auto dims = cohomology_dims(alg);
  Json out{{"h0", dims.h0}, {"h1", dims.h1}, {"pass", true}};
  if (!o.cochain.empty()) {
    const Cochain d = cochain_from_json(read_json_file(o.cochain.substr(o.cochain[0] == '@' ? 1 : 0)));
    const auto sol = solve_coboundary(alg, d);
    Json s{{"status", to_string(sol.status)}, {"convention", "D(y) = [b, y]; delta(b) = -[b, .]"}};
    if (!sol.b.empty()) s["b"] = to_json(sol.b);
    Json fam = Json::array();
    for (const auto& v : sol.family) fam.push_back(to_json(v));
    s["family"] = fam;
    out["coboundary"] = s;
    out["pass"] = sol.status == CoboundarySolution::Status::Unique;
  }
  return out;
}

Json cmd_invariants(const Options& o) {
  const LeibnizAlgebra alg = load_algebra(o.algebra);
  Json rows = Json::array();
  for (const auto& r : verify_sym_dims(alg, o.arity_max)) {
    Json row{{"arity", r.arity}, {"dim", r.dim}};
    if (r.spanned_by_B_g) row["spanned_by_B_g"] = *r.spanned_by_B_g;
    rows.push_back(row);
  }
  return Json{{"rows", rows}, {"pass", true}};
}

Json cmd_reconstruct(const Options& o) {
  const RackSeries s = series_for(o);
  const auto rec = reconstruct_B(s);
  Json degrees = Json::array();
  for (const auto& st : rec.degrees) {
    Json row{{"n", st.n}, {"status", to_string(st.status)}};
    auto it = rec.b.find(st.n);
    if (it != rec.b.end()) row["B"] = to_json(it->second);
    if (st.probe) row["probe"] = to_json(*st.probe);
    degrees.push_back(std::move(row));
  }
  return Json{{"degrees", degrees}, {"pass", rec.ok()}};
}

Json cmd_rigidity(const Options& o) {
  const auto rep = rigidity_roundtrip(load_algebra(o.algebra), parse_coeffs(o.a), require_order(o));
  Json u = Json::array();
  for (std::size_t n = 1; n <= rep.u.order(); ++n) u.push_back(to_json(rep.u.u[n]));
  return Json{{"U", u},
              {"a", coeffs_json(rep.recovered)},
              {"recurrence_ok", rep.recurrence_ok},
              {"roundtrip_ok", rep.roundtrip_ok},
              {"pass", rep.recurrence_ok && rep.roundtrip_ok}};
}

Json axioms_json(const AxiomReport& r) {
  return Json{{"self_distributivity", r.self_distributivity < 1e-9 ? "below_tol" : "above_tol"},
              {"pointedness_ok", r.pointedness < 1e-12},
              {"bijective", r.min_abs_det > 1e-12},
              {"linear", r.linearity < 1e-9},
              {"pass", r.pass}};
}

Json cmd_constructions(const Options& o) {
  const LeibnizAlgebra alg = load_algebra(o.algebra);
  const Sampler sampler{100, o.seed, o.tol};
  SymForm zero(2, alg.dim(), SymForm::Output::Scalar);
  const auto canon = check_axioms(pr1_rack(alg, zero, PowerSeries{1, {}}), sampler);
  Json out{{"canonical", axioms_json(canon)}};
  bool pass = canon.pass;
  try {
    const auto co = co_counterexample(alg, sampler);
    out["counterexample"] = Json{{"a", to_json(co.a)},
                                 {"z", to_json(co.z)},
                                 {"a_rack_a_minus_a", to_json(co.a_rack_a_minus_a)},
                                 {"printed_hypotheses", co.printed_hypotheses},
                                 {"axioms", axioms_json(co.axioms)},
                                 {"witness", co.witness}};
    pass = pass && co.axioms.pass && co.witness;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesesFail) throw;
    out["counterexample"] = Json{{"error", to_string(e.kind())}, {"message", e.what()}};
  }
  out["pass"] = pass;
  return out;
}

Json cmd_selftest(const Options& o) { return selftest_report(run_acceptance(o.seed), o.seed, o.timings); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for left Leibniz algebras and linear Lie racks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json-out", o.json_out, "Also write the report to this file");
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "builtin:NAME or @file.json")->capture_default_str();
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Truncation order N (required unless --series is given)")
        ->check(CLI::PositiveNumber);
  };

  struct Entry {
    CLI::App* sub;
    std::function<Json(const Options&)> run;
  };
  std::vector<Entry> entries;

  auto* s = app.add_subcommand("check-leibniz", "Check the left Leibniz identity on all basis triples");
  add_algebra(s);
  add_common(s);
  entries.push_back({s, cmd_check_leibniz});

  s = app.add_subcommand("canonical", "Canonical rack series exp(ad_x) truncated at N");
  add_algebra(s);
  add_order(s);
  add_common(s);
  entries.push_back({s, cmd_canonical});

  s = app.add_subcommand("check-rack", "Multilinear rack equations and invariance of a series");
  add_algebra(s);
  add_order(s);
  s->add_option("--series", o.series, "@series.json (default: canonical or --a series)");
  s->add_option("--a", o.a, "F coefficients a_1,a_2,... with P the trace form");
  add_common(s);
  entries.push_back({s, cmd_check_rack});

  s = app.add_subcommand("cohomology", "H^0 and H^1 of the Leibniz complex");
  add_algebra(s);
  s->add_option("--cochain", o.cochain, "@cochain.json of degree 1 to solve D(y) = [b, y]");
  add_common(s);
  entries.push_back({s, cmd_cohomology});

  s = app.add_subcommand("invariants", "Dimensions of invariant symmetric vector-valued forms");
  add_algebra(s);
  s->add_option("--n-max", o.arity_max, "Arities 2 .. 2 n_max + 1")->capture_default_str();
  add_common(s);
  entries.push_back({s, cmd_invariants});

  s = app.add_subcommand("reconstruct", "Recover the invariant maps B_n from a rack series");
  add_algebra(s);
  add_order(s);
  s->add_option("--series", o.series, "@series.json (default: canonical or --a series)");
  s->add_option("--a", o.a, "F coefficients a_1,a_2,... with P the trace form");
  add_common(s);
  entries.push_back({s, cmd_reconstruct});

  s = app.add_subcommand("rigidity", "Round trip a -> series -> U -> a on sl2 or so3");
  add_algebra(s);
  add_order(s);
  s->add_option("--a", o.a, "F coefficients a_1,a_2,...");
  add_common(s);
  entries.push_back({s, cmd_rigidity});

  s = app.add_subcommand("constructions", "Sampled rack axioms for the float constructions");
  add_algebra(s);
  s->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
  s->add_option("--tol", o.tol, "Self-distributivity tolerance")->capture_default_str();
  add_common(s);
  entries.push_back({s, cmd_constructions});

  s = app.add_subcommand("selftest", "Run the acceptance suite");
  s->add_option("--seed", o.seed, "Seed for random inputs")->capture_default_str();
  s->add_flag("--timings", o.timings, "Include wall-clock timings (makes output run-dependent)");
  add_common(s);
  entries.push_back({s, cmd_selftest});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& e : entries) {
    if (!e.sub->parsed()) continue;
    Json report;
    int code = 0;
    try {
      report = e.run(o);
      code = report.value("pass", false) ? 0 : 1;
    } catch (const Error& err) {
      report = Json{{"error", to_string(err.kind())}, {"message", err.what()}, {"pass", false}};
      code = err.kind() == ErrorKind::Input ? 2 : 1;
    } catch (const Json::exception& err) {
      report = Json{{"error", "InputError"}, {"message", err.what()}, {"pass", false}};
      code = 2;
    }
    report["command"] = e.sub->get_name();
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!o.json_out.empty()) {
      std::ofstream out(o.json_out);
      if (!out) {
        std::cerr << "cannot write " << o.json_out << "\n";
        return 2;
      }
      out << text;
    }
    return code;
  }
  return 2;
}
