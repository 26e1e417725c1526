#pragma once

#include "leibrack/rational.hpp"

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leibrack {

/// All multisets of size n over {0..dim-1}, stored as non-decreasing index
/// tuples and ranked in colex order through the combinatorial number system.
class MultisetIndex {
 public:
  MultisetIndex(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }

  const std::vector<std::size_t>& multiset(std::size_t rank) const { return sets_[rank]; }
  const std::vector<unsigned>& counts(std::size_t rank) const { return counts_[rank]; }
  /// n! / prod(m_i!): the number of ordered tuples sorting to this multiset.
  const Rational& multinomial(std::size_t rank) const { return multinomial_[rank]; }

  /// Rank of a non-decreasing tuple.
  std::size_t rank(const std::vector<std::size_t>& sorted) const;
  std::size_t rank_of_unsorted(std::vector<std::size_t> tuple) const;

 private:
  std::size_t choose(std::size_t a, std::size_t b) const;

  std::size_t dim_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<std::vector<std::size_t>> sets_;
  std::vector<std::vector<unsigned>> counts_;
  std::vector<Rational> multinomial_;
};

/// Count vectors c in N^dim with 1 <= |c| <= max_total. The point of c is
/// sum_i c_i e_i; these are the subset sums the polarization formula visits.
class CountGrid {
 public:
  CountGrid(std::size_t dim, std::size_t max_total);

  std::size_t size() const noexcept { return counts_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<unsigned>& counts(std::size_t i) const { return counts_[i]; }
  Vector point(std::size_t i) const;
  std::size_t find(const std::vector<unsigned>& c) const;

 private:
  std::size_t key(const std::vector<unsigned>& c) const;

  std::size_t dim_;
  std::size_t max_total_;
  std::vector<std::vector<unsigned>> counts_;
  std::unordered_map<std::size_t, std::size_t> lookup_;
};

/// Weights of the polarization formula for one multiset mu of size n:
///   P(e_mu) = (1/n!) sum_{0 != c <= m(mu)} (-1)^(n-|c|) prod_i C(m_i, c_i) f(point(c)).
/// Subsets of positions with equal sums are merged, so each grid point appears once.
std::vector<std::pair<std::size_t, Rational>> polar_stencil(const CountGrid& grid, const std::vector<unsigned>& counts);

}  // namespace leibrack
