#pragma once

#include "leibrack/rack_series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace leibrack {

/// B[l] for l >= 2: vector-valued symmetric forms of arity l.
using BList = std::map<std::size_t, SymForm>;

/// Right-hand side of the structure formula on the diagonal:
///   A0_n(x, .) + sum over ordered (l_1..l_k), l_i >= 2, s = sum l_i <= n of
///   A0_k(B_{l_1}(x), .., B_{l_k}(x), A0_{n-s}(x, .)).
/// `canonical` must reach order >= n. With include_top = false the single
/// term [B_n(x), .] is left out. Missing entries of `b` count as zero.
MatrixQ structure_diag(const RackSeries& canonical, const BList& b, std::size_t n, const Vector& x,
                       bool include_top = true);

struct DegreeStatus {
  enum class Status { Ok, CohomologyObstruction, NoBracketForm, InvarianceFailure };
  std::size_t n = 0;
  Status status = Status::Ok;
  std::optional<Vector> probe;  // grid point where the step failed
};

const char* to_string(DegreeStatus::Status s);

struct Reconstruction {
  BList b;
  std::vector<DegreeStatus> degrees;
  bool ok() const;
  std::optional<std::size_t> failed_degree() const;
};

/// Recovers B_2..B_N from a series. Stops at the first failing degree.
/// Throws Error(Precondition) unless A_1 is the bracket and H^0 = H^1 = 0.
Reconstruction reconstruct_B(const RackSeries& series);

/// Forward substitution into the structure formula. Throws
/// Error(NotInvariant) if some B_l is not invariant, Error(Input) on shape errors.
RackSeries build_series_from_B(const LeibnizAlgebra& alg, const BList& b, std::size_t order);
/// Same without the invariance check.
RackSeries build_series_from_B_unchecked(const LeibnizAlgebra& alg, const BList& b, std::size_t order);

}  // namespace leibrack
