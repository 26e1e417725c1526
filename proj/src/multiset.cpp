#include "leibrack/multiset.hpp"

#include "leibrack/errors.hpp"

#include <algorithm>

namespace leibrack {

MultisetIndex::MultisetIndex(std::size_t dim, std::size_t n) : dim_(dim), n_(n) {
  if (dim == 0) throw Error(ErrorKind::Input, "multiset index over an empty basis");
  const std::size_t top = dim + n + 1;
  binom_.assign(top + 1, std::vector<std::size_t>(n + 2, 0));
  for (std::size_t a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= n + 1 && b <= a; ++b)
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
  }
  std::vector<std::size_t> cur(n, 0);
  std::vector<std::vector<std::size_t>> all;
  while (true) {
    all.push_back(cur);
    // next non-decreasing tuple in lexicographic order
    std::size_t pos = n;
    while (pos > 0 && cur[pos - 1] == dim - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t t = pos; t < n; ++t) cur[t] = cur[pos - 1];
  }
  sets_.resize(all.size());
  for (auto& s : all) {
    std::size_t r = rank(s);
    sets_[r] = s;
  }
  counts_.resize(sets_.size());
  multinomial_.resize(sets_.size());
  const Rational nfact = factorial(static_cast<unsigned>(n));
  for (std::size_t r = 0; r < sets_.size(); ++r) {
    counts_[r].assign(dim, 0);
    for (auto i : sets_[r]) ++counts_[r][i];
    Rational denom = 1;
    for (auto m : counts_[r]) denom *= factorial(m);
    multinomial_[r] = nfact / denom;
  }
}

std::size_t MultisetIndex::choose(std::size_t a, std::size_t b) const {
  if (b > a) return 0;
  return binom_[a][b];
}

std::size_t MultisetIndex::rank(const std::vector<std::size_t>& sorted) const {
  if (sorted.size() != n_) throw Error(ErrorKind::Input, "multiset arity mismatch");
  std::size_t r = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (sorted[i] >= dim_) throw Error(ErrorKind::Input, "multiset index out of range");
    r += choose(sorted[i] + i, i + 1);
  }
  return r;
}

std::size_t MultisetIndex::rank_of_unsorted(std::vector<std::size_t> tuple) const {
  std::sort(tuple.begin(), tuple.end());
  return rank(tuple);
}

CountGrid::CountGrid(std::size_t dim, std::size_t max_total) : dim_(dim), max_total_(max_total) {
  std::vector<unsigned> c(dim, 0);
  // odometer over [0, max_total]^dim, keeping 1 <= |c| <= max_total
  while (true) {
    std::size_t total = 0;
    for (auto v : c) total += v;
    if (total >= 1 && total <= max_total) {
      lookup_.emplace(key(c), counts_.size());
      counts_.push_back(c);
    }
    std::size_t pos = 0;
    while (pos < dim && c[pos] == max_total) c[pos++] = 0;
    if (pos == dim) break;
    ++c[pos];
  }
}

std::size_t CountGrid::key(const std::vector<unsigned>& c) const {
  std::size_t k = 0;
  for (std::size_t i = dim_; i-- > 0;) k = k * (max_total_ + 1) + c[i];
  return k;
}

Vector CountGrid::point(std::size_t i) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = counts_[i][k];
  return v;
}

std::size_t CountGrid::find(const std::vector<unsigned>& c) const {
  auto it = lookup_.find(key(c));
  if (it == lookup_.end()) throw Error(ErrorKind::Input, "count vector outside grid");
  return it->second;
}

std::vector<std::pair<std::size_t, Rational>> polar_stencil(const CountGrid& grid, const std::vector<unsigned>& counts) {
  const std::size_t dim = counts.size();
  unsigned n = 0;
  for (auto m : counts) n += m;
  const Rational inv_nfact = 1 / factorial(n);
  std::vector<std::pair<std::size_t, Rational>> out;
  std::vector<unsigned> c(dim, 0);
  while (true) {
    unsigned total = 0;
    for (auto v : c) total += v;
    if (total > 0) {
      Rational w = inv_nfact;
      for (std::size_t i = 0; i < dim; ++i) w *= binomial(counts[i], c[i]);
      if ((n - total) % 2 == 1) w = -w;
      out.emplace_back(grid.find(c), std::move(w));
    }
    std::size_t pos = 0;
    while (pos < dim && c[pos] == counts[pos]) c[pos++] = 0;
    if (pos == dim) break;
    ++c[pos];
  }
  return out;
}

}  // namespace leibrack
