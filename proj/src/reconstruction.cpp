#include "leibrack/reconstruction.hpp"

#include "leibrack/cohomology.hpp"
#include "leibrack/errors.hpp"

#include <algorithm>

namespace leibrack {

namespace {

// Ordered compositions (l_1..l_k) with parts >= 2 and sum <= max_sum.
void compositions(std::size_t max_sum, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::size_t l = 2; l <= max_sum; ++l) {
    cur.push_back(l);
    compositions(max_sum - l, cur, out);
    cur.pop_back();
  }
}

struct StepFailure {
  DegreeStatus::Status status;
  Vector probe;
};

}  // namespace

MatrixQ structure_diag(const RackSeries& canonical, const BList& b, std::size_t n, const Vector& x,
                       bool include_top) {
  const std::size_t d = canonical.algebra().dim();
  if (n == 0) return MatrixQ::identity(d);
  if (canonical.order() < n) throw Error(ErrorKind::InsufficientOrder, "canonical series too short");
  std::vector<std::optional<Vector>> bx(n + 1);
  for (const auto& [l, form] : b)
    if (l >= 2 && l <= n) {
      if (form.arity() != l || form.dim() != d || !form.vector_valued())
        throw Error(ErrorKind::Input, "B_" + std::to_string(l) + " has the wrong shape");
      Vector v = form.eval_diag(x);
      if (!is_zero(v)) bx[l] = std::move(v);
    }
  std::vector<MatrixQ> a0(n + 1);
  for (std::size_t m = 0; m <= n; ++m) a0[m] = canonical.diag_matrix(m, x);

  MatrixQ out = a0[n];
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> cur;
  compositions(n, cur, comps);
  std::vector<Vector> args;
  for (const auto& ls : comps) {
    if (!include_top && ls.size() == 1 && ls[0] == n) continue;
    if (std::any_of(ls.begin(), ls.end(), [&](std::size_t l) { return !bx[l]; })) continue;
    std::size_t s = 0;
    args.clear();
    for (auto l : ls) {
      s += l;
      args.push_back(*bx[l]);
    }
    out += canonical.term(ls.size()).eval_matrix(args) * a0[n - s];
  }
  return out;
}

const char* to_string(DegreeStatus::Status s) {
  switch (s) {
    case DegreeStatus::Status::Ok: return "ok";
    case DegreeStatus::Status::CohomologyObstruction: return "obstruction";
    case DegreeStatus::Status::NoBracketForm: return "no_bracket_form";
    case DegreeStatus::Status::InvarianceFailure: return "invariance_failure";
  }
  return "unknown";
}

bool Reconstruction::ok() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeStatus& s) { return s.status == DegreeStatus::Status::Ok; });
}

std::optional<std::size_t> Reconstruction::failed_degree() const {
  for (const auto& s : degrees)
    if (s.status != DegreeStatus::Status::Ok) return s.n;
  return std::nullopt;
}

Reconstruction reconstruct_B(const RackSeries& series) {
  const LeibnizAlgebra& alg = series.algebra();
  const std::size_t d = alg.dim();
  if (!(series.term(1) == bracket_map(alg))) throw Error(ErrorKind::Precondition, "A_1 is not the bracket");
  const auto dims = cohomology_dims(alg);
  if (dims.h0 != 0 || dims.h1 != 0)
    throw Error(ErrorKind::Precondition, "reconstruction needs H^0 = H^1 = 0, got (" + std::to_string(dims.h0) + ", " +
                                             std::to_string(dims.h1) + ")");
  const RackSeries canonical = canonical_series(alg, series.order());
  Reconstruction result;
  for (std::size_t n = 2; n <= series.order(); ++n) {
    DegreeStatus status{n, DegreeStatus::Status::Ok, std::nullopt};
    auto solve_at = [&](const Vector& x) {
      MatrixQ dx = series.diag_matrix(n, x) - structure_diag(canonical, result.b, n, x, false);
      Cochain dc = Cochain::from_matrix(dx);
      if (!delta(alg, dc).is_zero()) throw StepFailure{DegreeStatus::Status::CohomologyObstruction, x};
      CoboundarySolution sol = solve_coboundary(alg, dc);
      if (!sol.ok()) throw StepFailure{DegreeStatus::Status::NoBracketForm, x};
      return sol.b;
    };
    try {
      SymForm bn = polarize_form(solve_at, n, d, SymForm::Output::Vector);
      if (!is_invariant(alg, bn)) {
        status.status = DegreeStatus::Status::InvarianceFailure;
      } else {
        result.b.emplace(n, std::move(bn));
      }
    } catch (const StepFailure& f) {
      status.status = f.status;
      status.probe = f.probe;
    }
    result.degrees.push_back(std::move(status));
    if (result.degrees.back().status != DegreeStatus::Status::Ok) break;
  }
  return result;
}

RackSeries build_series_from_B_unchecked(const LeibnizAlgebra& alg, const BList& b, std::size_t order) {
  const RackSeries canonical = canonical_series(alg, order);
  std::vector<PartSymMap> terms;
  for (std::size_t n = 1; n <= order; ++n) {
    auto diag = [&](const Vector& x) { return structure_diag(canonical, b, n, x, true); };
    terms.push_back(polarize(std::function<MatrixQ(const Vector&)>(diag), n, alg.dim()));
  }
  return RackSeries(alg, std::move(terms));
}

RackSeries build_series_from_B(const LeibnizAlgebra& alg, const BList& b, std::size_t order) {
  for (const auto& [l, form] : b) {
    if (l < 2 || form.arity() != l || form.dim() != alg.dim() || !form.vector_valued())
      throw Error(ErrorKind::Input, "B_" + std::to_string(l) + " has the wrong shape");
    if (!is_invariant(alg, form)) throw Error(ErrorKind::NotInvariant, "B_" + std::to_string(l) + " is not invariant");
  }
  return build_series_from_B_unchecked(alg, b, order);
}

}  // namespace leibrack
