#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfaff/error.hpp"
#include "pfaff/ladder.hpp"
#include "pfaff/oracle/polynomial.hpp"

namespace pfaff::oracle {

namespace detail {

/// Pfaffians by cofactor expansion along the first index, memoized on the
/// index set (as a bitmask; n <= 64).
class PfaffianExpander {
 public:
  explicit PfaffianExpander(int n) : n_(n) {}

  const Polynomial& operator()(std::uint64_t mask) {
    if (auto it = cache_.find(mask); it != cache_.end()) return it->second;
    std::vector<int> idx;
    for (int i = 0; i < 64; ++i)
      if (mask >> i & 1) idx.push_back(i + 1);

    std::vector<Term> terms;
    if (idx.empty()) {
      terms.push_back({Rational(1), Monomial{}});
    } else {
      const int first = idx[0];
      for (std::size_t j = 1; j < idx.size(); ++j) {
        std::uint64_t rest = mask & ~(1ULL << (first - 1)) & ~(1ULL << (idx[j] - 1));
        const Polynomial& sub = (*this)(rest);
        // position j+1 in 1-based numbering of the subset: sign (-1)^(j+1)
        const int sign = (j % 2 == 1) ? 1 : -1;
        const Monomial x = Monomial::variable(var_index(n_, first, idx[j]));
        for (const auto& t : sub.terms()) terms.push_back({sign * t.coeff, x * t.mono});
      }
    }
    return cache_.emplace(mask, Polynomial::from_terms(std::move(terms))).first->second;
  }

 private:
  int n_;
  std::unordered_map<std::uint64_t, Polynomial> cache_;
};

inline std::uint64_t subset_mask(int n, std::span<const int> subset) {
  if (subset.size() % 2 != 0) throw Error(ErrorCode::OddSubset, "pfaffian needs an even index set");
  std::uint64_t mask = 0;
  for (int i : subset) {
    if (i < 1 || i > n || n > 64) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
    if (mask >> (i - 1) & 1) throw Error(ErrorCode::IndexOutOfRange, "repeated index " + std::to_string(i));
    mask |= 1ULL << (i - 1);
  }
  return mask;
}

}  // namespace detail

/// Pfaffian of the skew-symmetric submatrix of the generic n x n matrix on the
/// given rows/columns. Pf({i1..i2m}) = sum_{j>=2} (-1)^j x_{i1 ij} Pf(rest).
inline Polynomial pfaffian(int n, std::span<const int> subset) {
  const std::uint64_t mask = detail::subset_mask(n, subset);
  if (subset.empty()) throw Error(ErrorCode::OddSubset, "empty index set");
  detail::PfaffianExpander expand(n);
  return expand(mask);
}

inline Polynomial pfaffian(int n, std::initializer_list<int> subset) {
  std::vector<int> v(subset);
  return pfaffian(n, std::span<const int>(v));
}

struct GeneratorOptions {
  std::size_t max_generators = 5000;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// All 2t_k-pfaffians of every square block, without duplicates, in a fixed
/// order (by block, then lexicographic index set).
inline std::vector<Polynomial> generators(const LadderIdealSpec& spec, const GeneratorOptions& opts = {}) {
  std::uint64_t total = 0;
  for (const auto& bl : spec.blocks()) total += binomial(bl.corner.size(), 2 * bl.t);
  if (total > opts.max_generators) {
    throw Error(ErrorCode::TooManyGenerators,
                std::to_string(total) + " pfaffians exceed the cap of " + std::to_string(opts.max_generators));
  }

  detail::PfaffianExpander expand(spec.n());
  std::set<std::uint64_t> seen;
  std::vector<Polynomial> out;
  for (const auto& bl : spec.blocks()) {
    const int size = 2 * bl.t;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = bl.corner.a + i;
    while (true) {
      std::uint64_t mask = detail::subset_mask(spec.n(), pick);
      if (seen.insert(mask).second) out.push_back(expand(mask));
      // next combination of {a..b} in lexicographic order
      int pos = size - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == bl.corner.b - (size - 1 - pos)) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < size; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

}  // namespace pfaff::oracle
