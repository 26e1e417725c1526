#include "leibrack/selftest.hpp"

#include "leibrack/cohomology.hpp"
#include "leibrack/constructions.hpp"
#include "leibrack/errors.hpp"
#include "leibrack/invariants.hpp"
#include "leibrack/reconstruction.hpp"
#include "leibrack/rigidity.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace leibrack {

namespace {

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = next();
    return v;
  }
  MatrixQ matrix(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = next();
    return m;
  }
  Cochain cochain(std::size_t degree, std::size_t dim) {
    Cochain c(degree, dim);
    for (std::size_t t = 0; t < c.tuple_count(); ++t)
      for (std::size_t k = 0; k < dim; ++k) c.at(t, k) = next();
    return c;
  }
  SymForm form(std::size_t p, std::size_t dim) {
    SymForm f(p, dim, SymForm::Output::Vector);
    for (std::size_t r = 0; r < f.index().size(); ++r)
      for (std::size_t k = 0; k < dim; ++k) f.at(r, k) = next();
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"sl2", "so3", "abelian:3", "heisenberg", "nilpotent4"};
  return names;
}

Json witness_json(const std::optional<BipolarWitness>& w) {
  if (!w) return nullptr;
  return Json{{"x", w->x_multiset}, {"y", w->y_multiset}, {"z", w->z}, {"residual", to_json(w->residual)}};
}

Json c1_leibniz() {
  Json d;
  bool pass = true;
  for (const auto& name : corpus()) {
    const auto rep = check_left_leibniz(builtin(name));
    d["algebras"][name] = rep.pass;
    pass = pass && rep.pass;
  }
  const LeibnizAlgebra sl2 = builtin("sl2");
  auto c = sl2.constants();
  c[(0 * 3 + 1) * 3 + 2] += 1;  // [h,e] gains an f component
  const auto bad = check_left_leibniz(LeibnizAlgebra::unchecked(sl2.basis_names(), c));
  d["perturbed_sl2"]["pass"] = bad.pass;
  if (!bad.violations.empty()) {
    d["perturbed_sl2"]["witness"] = Json{{"triple", bad.violations.front().triple},
                                         {"residual", to_json(bad.violations.front().residual)}};
  }
  d["pass"] = pass && !bad.pass && !bad.violations.empty();
  return d;
}

Json c2_cohomology(std::uint64_t seed) {
  RationalSource src(seed);
  Json d;
  bool pass = true;
  for (const auto& name : corpus()) {
    const LeibnizAlgebra alg = builtin(name);
    std::size_t ok = 0;
    for (std::size_t degree = 0; degree <= 1; ++degree)
      for (int s = 0; s < 20; ++s)
        if (delta(alg, delta(alg, src.cochain(degree, alg.dim()))).is_zero()) ++ok;
    d["delta_squared_zero"][name] = std::to_string(ok) + "/40";
    pass = pass && ok == 40;
  }
  const LeibnizAlgebra sl2 = builtin("sl2");
  std::size_t comp_ok = 0;
  for (int s = 0; s < 20; ++s) {
    const MatrixQ f = src.matrix(3), g = src.matrix(3);
    const Cochain dfg = delta(sl2, Cochain::from_matrix(f * g));
    const Cochain df = delta(sl2, Cochain::from_matrix(f));
    const Cochain dg = delta(sl2, Cochain::from_matrix(g));
    bool all = true;
    for (std::size_t y = 0; y < 3 && all; ++y)
      for (std::size_t z = 0; z < 3 && all; ++z) {
        const Vector ey = sl2.basis_vector(y), ez = sl2.basis_vector(z);
        const Vector gy = g * ey, gz = g * ez, fy = f * ey, fz = f * ez;
        Vector rhs = df.eval(std::vector<Vector>{ey, gz}) + df.eval(std::vector<Vector>{gy, ez}) +
                     f * dg.eval(std::vector<Vector>{ey, ez}) - sl2.bracket(fy, gz) - sl2.bracket(gy, fz);
        all = dfg.eval(std::vector<Vector>{ey, ez}) == rhs;
      }
    if (all) ++comp_ok;
  }
  d["composition_identity_sl2"] = std::to_string(comp_ok) + "/20";
  pass = pass && comp_ok == 20;
  for (const std::string name : {"sl2", "so3", "abelian:3"}) {
    const auto dims = cohomology_dims(builtin(name));
    d["cohomology"][name] = Json{{"h0", dims.h0}, {"h1", dims.h1}};
  }
  pass = pass && d["cohomology"]["sl2"] == Json{{"h0", 0}, {"h1", 0}} &&
         d["cohomology"]["so3"] == Json{{"h0", 0}, {"h1", 0}} && d["cohomology"]["abelian:3"]["h0"] == 3;
  d["pass"] = pass;
  return d;
}

Json c3_eqm() {
  Json d;
  bool pass = true;
  for (const std::string name : {"sl2", "so3"}) {
    const RackSeries s = canonical_series(builtin(name), 6);
    std::size_t ok = 0, total = 0;
    Json failures = Json::array();
    for (const auto& r : check_eqm_all(s, 6)) {
      ++total;
      if (r.pass) ++ok;
      else failures.push_back(Json{{"p", r.p}, {"q", r.q}, {"witness", witness_json(r.witness)}});
    }
    const auto inv = check_invariance_all(s);
    bool inv_ok = true;
    for (std::size_t n = 1; n <= 5; ++n) inv_ok = inv_ok && inv.invariant[n - 1];
    d[name] = Json{{"eqm", std::to_string(ok) + "/" + std::to_string(total)}, {"eqm_failures", failures},
                   {"invariant_n_le_5", inv_ok}};
    pass = pass && ok == total && total == 15 && inv_ok;
  }
  // Formal expansion of self-distributivity against the eqm family at N = 4,
  // on the canonical series and on a perturbed one.
  const LeibnizAlgebra sl2 = builtin("sl2");
  RackSeries canon = canonical_series(sl2, 4);
  RackSeries perturbed = canon;
  {
    PartSymMap a2 = perturbed.term(2);
    a2.block(0)(1, 1) += 1;
    perturbed.set_term(2, a2);
  }
  bool agree = true;
  Json rows = Json::array();
  for (const auto* s : {&canon, &perturbed}) {
    const auto formal = check_self_distributivity_formal(*s, 4);
    for (const auto& f : formal) {
      const auto e = check_eqm(*s, f.p, f.q);
      agree = agree && e.pass == f.pass;
      rows.push_back(Json{{"series", s == &canon ? "canonical" : "perturbed"}, {"p", f.p}, {"q", f.q},
                          {"formal", f.pass}, {"eqm", e.pass}});
    }
  }
  bool canon_pass = true, perturbed_fails = false;
  for (const auto& r : rows) {
    if (r["series"] == "canonical") canon_pass = canon_pass && r["formal"].get<bool>();
    else perturbed_fails = perturbed_fails || !r["formal"].get<bool>();
  }
  d["formal_vs_eqm_N4"] = rows;
  d["pass"] = pass && agree && canon_pass && perturbed_fails;
  return d;
}

Json c4_magic() {
  Json d;
  bool pass = true;
  for (const std::string name : {"sl2", "so3"}) {
    const LeibnizAlgebra alg = builtin(name);
    const bool magic = check_magic(alg).pass;
    const bool closed = canonical_closed_form(alg, 6).terms() == canonical_series(alg, 6).terms();
    d[name] = Json{{"magic", magic}, {"closed_form_equals_canonical_N6", closed}};
    pass = pass && magic && closed;
  }
  d["pass"] = pass;
  return d;
}

Json c5_invariants() {
  Json d;
  bool pass = true;
  for (const std::string name : {"sl2", "so3"}) {
    Json rows = Json::array();
    std::vector<std::size_t> dims;
    bool spanned = true;
    for (const auto& r : verify_sym_dims(builtin(name), 2)) {
      Json row{{"arity", r.arity}, {"dim", r.dim}};
      if (r.spanned_by_B_g) {
        row["spanned_by_B_g"] = *r.spanned_by_B_g;
        spanned = spanned && *r.spanned_by_B_g;
      }
      rows.push_back(row);
      dims.push_back(r.dim);
    }
    d[name] = rows;
    pass = pass && dims == std::vector<std::size_t>{0, 1, 0, 1} && spanned;
  }
  d["pass"] = pass;
  return d;
}

Json c6_reconstruction(std::uint64_t seed) {
  RationalSource src(seed + 6);
  Json d;
  const LeibnizAlgebra sl2 = builtin("sl2");
  const auto rec0 = reconstruct_B(canonical_series(sl2, 6));
  bool zeros = rec0.ok() && rec0.b.size() == 5;
  for (const auto& [l, f] : rec0.b) zeros = zeros && f.is_zero();
  d["canonical_gives_zero_B"] = zeros;

  const SymForm b1 = build_B_g(sl2, 1), b2 = build_B_g(sl2, 2);
  std::size_t roundtrips = 0;
  for (int s = 0; s < 5; ++s) {
    BList input;
    input.emplace(3, src.next() * b1);
    input.emplace(5, src.next() * b2);
    const auto rec = reconstruct_B(build_series_from_B(sl2, input, 6));
    bool same = rec.ok();
    for (std::size_t l = 2; l <= 6 && same; ++l) {
      auto it = input.find(l);
      same = it == input.end() ? rec.b.at(l).is_zero() : rec.b.at(l) == it->second;
    }
    if (same) ++roundtrips;
  }
  d["random_roundtrips"] = std::to_string(roundtrips) + "/5";

  // The remark's low-degree formulas, term for term, with arbitrary B inputs.
  BList bs;
  for (std::size_t l = 2; l <= 5; ++l) bs.emplace(l, src.form(l, 3));
  const RackSeries built = build_series_from_B_unchecked(sl2, bs, 5);
  const RackSeries canon = canonical_series(sl2, 5);
  bool remark = true;
  for (int s = 0; s < 5; ++s) {
    const Vector x = src.vector(3), y = src.vector(3);
    auto a0 = [&](std::size_t n, const Vector& v) { return n == 0 ? v : canon.term(n).eval_diag(x, v); };
    auto br = [&](const Vector& u, const Vector& v) { return sl2.bracket(u, v); };
    Vector bx[6];
    for (std::size_t l = 2; l <= 5; ++l) bx[l] = bs.at(l).eval_diag(x);
    const Rational half(1, 2);
    const Vector a3 = a0(3, y) + br(bx[2], a0(1, y)) + br(bx[3], y);
    const Vector a4 = a0(4, y) + br(bx[4], y) + br(bx[3], a0(1, y)) + br(bx[2], a0(2, y)) +
                      half * br(bx[2], br(bx[2], y));
    const Vector a5 = a0(5, y) + br(bx[5], y) + br(bx[4], a0(1, y)) + br(bx[3], a0(2, y)) + br(bx[2], a0(3, y)) +
                      half * (br(bx[2], br(bx[3], y)) + br(bx[3], br(bx[2], y))) +
                      half * br(bx[2], br(bx[2], a0(1, y)));
    remark = remark && built.term(3).eval_diag(x, y) == a3 && built.term(4).eval_diag(x, y) == a4 &&
             built.term(5).eval_diag(x, y) == a5;
  }
  d["remark_formulas_A3_A4_A5"] = remark;
  d["pass"] = zeros && roundtrips == 5 && remark;
  return d;
}

Json c7_rigidity(std::uint64_t seed) {
  RationalSource src(seed + 7);
  Json d;
  bool pass = true;
  const FCoeffs a{{Rational(1), Rational(-1, 2), Rational(1, 3)}};
  for (const std::string name : {"sl2", "so3"}) {
    const auto rep = rigidity_roundtrip(builtin(name), a, 8);
    Json u = Json::array();
    for (std::size_t n = 1; n <= rep.u.order(); ++n) u.push_back(to_json(rep.u.u[n]));
    Json rec = Json::array();
    for (const auto& c : rep.recovered.a) rec.push_back(to_json(c));
    d[name] = Json{{"U", u}, {"a", rec}, {"recurrence_ok", rep.recurrence_ok}, {"roundtrip_ok", rep.roundtrip_ok}};
    pass = pass && rep.roundtrip_ok && rep.recurrence_ok;
  }
  USequence inv_fact;
  for (unsigned n = 0; n <= 10; ++n) inv_fact.u.push_back(1 / factorial(n));
  const bool rec_ok = check_U_recurrence(inv_fact).pass();
  d["recurrence_inverse_factorials_n10"] = rec_ok;

  std::size_t jet_ok = 0, jet_total = 0;
  for (int s = 0; s < 20; ++s) {
    const Vector pt = src.vector(6);
    for (std::size_t m = 0; m <= 6; ++m) {
      std::vector<Jet> aj;
      for (std::size_t i = 0; i < m; ++i) aj.push_back(Jet::variable(pt[i], m, i));
      for (std::size_t n = 1; n <= 8; ++n) {
        const Jet v = V_nm<Jet>(aj, n, m, Jet::constant(0, m), Jet::constant(1, m));
        for (std::size_t l = 1; l <= m; ++l) {
          FCoeffs prefix;
          for (std::size_t i = 0; i < m - l; ++i) prefix.a.push_back(pt[i]);
          ++jet_total;
          if (v.grad[l - 1] == V_nm(prefix, n - 1, m - l)) ++jet_ok;
        }
      }
    }
  }
  d["jet_identity"] = std::to_string(jet_ok) + "/" + std::to_string(jet_total);
  bool binom = true;
  for (std::size_t n = 1; n <= 10; ++n) binom = binom && binomial_identity_holds(n);
  d["binomial_identity_n10"] = binom;
  d["pass"] = pass && rec_ok && jet_ok == jet_total && binom;
  return d;
}

Json axioms_json(const AxiomReport& r) {
  return Json{{"self_distributivity_below_tol", r.self_distributivity < 1e-9},
              {"pointedness_below_1e-12", r.pointedness < 1e-12},
              {"det_above_1e-12", r.min_abs_det > 1e-12},
              {"linear", r.linearity < 1e-9},
              {"pass", r.pass}};
}

Json c8_constructions(std::uint64_t seed) {
  Json d;
  bool pass = true;
  const Sampler sampler{100, seed, 1e-9};
  const LeibnizAlgebra sl2 = builtin("sl2"), heis = builtin("heisenberg"), nil4 = builtin("nilpotent4");
  const SymForm trace = trace_symform(sl2);

  auto record = [&](const std::string& key, const FloatRack& rack) {
    const auto r = check_axioms(rack, sampler);
    d[key] = axioms_json(r);
    pass = pass && r.pass;
  };

  const LeibnizAlgebra so3 = builtin("so3");
  const SymForm so3_trace = trace_symform(so3);
  record("pr1_so3_F_1_plus_u", pr1_rack(so3, so3_trace, PowerSeries{1, {1}}));
  {
    const FloatRack zero_bracket = pr1_rack(so3, so3_trace, PowerSeries{0, {1}});
    record("pr1_so3_F_u", zero_bracket);
    const auto pts = sample_ball(3, 20, seed + 3);
    double worst = 0;
    for (std::size_t s = 0; s + 1 < pts.size(); s += 2)
      worst = std::max(worst, extracted_bracket(zero_bracket, pts[s], pts[s + 1]).norm());
    d["pr1_so3_F_u"]["bracket_vanishes"] = worst < 1e-6;
    pass = pass && worst < 1e-6;
  }
  {
    SymForm p(2, 3, SymForm::Output::Scalar);
    p.at(p.index().rank({0, 0}), 0) = 1;
    record("pr1_heisenberg_F_1_plus_u", pr1_rack(heis, p, PowerSeries{1, {1}}));
  }
  {
    const FloatRack canon = pr1_rack(so3, so3_trace, PowerSeries{1, {}});
    MatD g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = so3.trace_gram()(r, c).get_d();
    auto j = [g](const VecD& x) -> VecD { return x.dot(g * x) * x; };
    record("pr2_so3_twist", twist_rack(canon, j, sampler));
  }
  {
    Pr22Term t{unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 3), {Rational(0), Rational(0), Rational(1)}};
    const FloatRack r = pr22_rack(nil4, {t});
    record("pr22_nilpotent4_t2", r);
    const auto pts = sample_ball(4, 20, seed + 22);
    double worst = 0;
    for (std::size_t s = 0; s + 1 < pts.size(); s += 2) {
      const VecD exact = ad_float(nil4, pts[s]) * pts[s + 1];
      worst = std::max(worst, (extracted_bracket(r, pts[s], pts[s + 1]) - exact).norm());
    }
    d["pr22_nilpotent4_t2"]["bracket_matches"] = worst < 1e-6;
    pass = pass && worst < 1e-6;
  }
  {
    // Float rack against the truncated exact series, inside the tail bound.
    const std::vector<Rational> a{Rational(1), Rational(-1, 2), Rational(1, 3)};
    const RackSeries series = series_from_F(sl2, trace, FCoeffs{a}, 10);
    const FloatRack rack = pr1_rack(sl2, trace, PowerSeries{1, {1.0, -0.5, 1.0 / 3.0}});
    const auto pts = sample_ball(3, 20, seed + 10, 0.5);
    bool within = true;
    for (std::size_t s = 0; s + 1 < pts.size(); s += 2) {
      Vector xq(3), yq(3);
      for (int i = 0; i < 3; ++i) {
        xq[i] = Rational(pts[s][i]);
        yq[i] = Rational(pts[s + 1][i]);
      }
      const VecD trunc = to_float(eval_truncated(series, xq, yq));
      const double diff = (rack.op(pts[s], pts[s + 1]) - trunc).norm();
      within = within && diff <= pr1_tail_bound(sl2, a, 10, pts[s], pts[s + 1]) + 1e-12;
    }
    d["pr1_truncation_consistency_N10"] = within;
    pass = pass && within;
  }
  for (const std::string name : {"abelian:3", "nilpotent4"}) {
    const auto rep = co_counterexample(builtin(name), sampler);
    d["co_" + name] = Json{{"a", to_json(rep.a)},
                           {"z", to_json(rep.z)},
                           {"a_rack_a_minus_a", to_json(rep.a_rack_a_minus_a)},
                           {"printed_hypotheses", rep.printed_hypotheses},
                           {"axioms", axioms_json(rep.axioms)},
                           {"witness", rep.witness}};
    pass = pass && rep.witness && rep.axioms.pass;
  }
  d["pass"] = pass;
  return d;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  struct Item {
    int id;
    const char* name;
    double limit;
    std::function<Json()> run;
  };
  const std::vector<Item> items{
      {1, "leibniz_gate", 1, [] { return c1_leibniz(); }},
      {2, "cohomology", 5, [seed] { return c2_cohomology(seed); }},
      {3, "canonical_eqm", 60, [] { return c3_eqm(); }},
      {4, "magic_identities", 5, [] { return c4_magic(); }},
      {5, "invariant_forms", 120, [] { return c5_invariants(); }},
      {6, "reconstruction_roundtrip", 60, [seed] { return c6_reconstruction(seed); }},
      {7, "rigidity", 60, [seed] { return c7_rigidity(seed); }},
      {8, "constructions", 10, [seed] { return c8_constructions(seed); }},
  };
  std::vector<CriterionResult> out;
  for (const auto& item : items) {
    CriterionResult r;
    r.id = item.id;
    r.name = item.name;
    r.limit_seconds = item.limit;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.details = item.run();
      r.pass = r.details.value("pass", false);
    } catch (const Error& e) {
      r.details = Json{{"error", to_string(e.kind())}, {"message", e.what()}, {"pass", false}};
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

Json selftest_report(const std::vector<CriterionResult>& results, std::uint64_t seed, bool timings) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json c{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}, {"limit_seconds", r.limit_seconds}};
    if (timings) c["seconds"] = r.seconds;
    criteria.push_back(std::move(c));
    all = all && r.pass;
  }
  return Json{{"command", "selftest"}, {"seed", seed}, {"criteria", std::move(criteria)}, {"pass", all}};
}

}  // namespace leibrack
