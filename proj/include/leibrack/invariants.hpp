#pragma once

#include "leibrack/multilinear.hpp"

#include <optional>
#include <vector>

namespace leibrack {

/// Basis of the invariant fully symmetric vector-valued n-linear maps:
/// [y, B(x_1..x_n)] = sum_i B(x_1..[y,x_i]..x_n) for all basis y.
std::vector<SymForm> invariant_basis(const LeibnizAlgebra& alg, std::size_t n);

/// P_n(x_1..x_2n) = symmetrization of <x_1,x_2>...<x_{2n-1},x_2n>. n >= 1.
SymForm build_P(const LeibnizAlgebra& alg, std::size_t n);

/// B_n(x_1..x_{2n+1}) = sum_k P_n(x_1..^x_k..x_{2n+1}) x_k; B_0 is the identity.
SymForm build_B_g(const LeibnizAlgebra& alg, std::size_t n);

struct SymDimRow {
  std::size_t arity = 0;
  std::size_t dim = 0;
  std::optional<bool> spanned_by_B_g;  // odd arities only
};

/// Arities 2..2 n_max + 1.
std::vector<SymDimRow> verify_sym_dims(const LeibnizAlgebra& alg, std::size_t n_max);

}  // namespace leibrack
