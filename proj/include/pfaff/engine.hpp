#pragma once

// Generic recursion for multiplicity and h-vector of an arbitrary pfaffian
// ladder ideal. Each elementary biliaison of height 1 at a corner with
// t_k >= 2 expresses I through a reduced ideal I' (same height) and a
// divisor ideal J (height one less):
//
//   e(I) = e(I') + e(J)          h_I(z) = z h_{I'}(z) + h_J(z)
//
// The recursion bottoms out at ideals generated by indeterminates (all
// t_k = 1) or the zero ideal, both with h = (1).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pfaff/error.hpp"
#include "pfaff/hvector.hpp"
#include "pfaff/ladder.hpp"

namespace pfaff {

enum class CornerPolicy {
  MaxT,           // largest t_k, ties to the largest index
  SmallestIndex,  // first corner with t_k >= 2
  LargestSquare,  // largest b_k - a_k, ties to larger t_k then larger index
};

struct EngineStats {
  std::size_t steps = 0;
  std::size_t memo_hits = 0;
  std::size_t pruned_divisors = 0;  // divisor needed redundancy removal
  int max_depth = 0;
};

/// 1-based index of the corner the policy steps at, or 0 when no corner has
/// t_k >= 2. Only admissible corners (the step keeps both results monotone)
/// are candidates; a corner of maximal t_k is always admissible.
inline int choose_corner(const LadderIdealSpec& spec, CornerPolicy policy) {
  int best = 0;
  for (int k = 1; k <= static_cast<int>(spec.size()); ++k) {
    const Block& bl = spec.blocks()[static_cast<std::size_t>(k - 1)];
    if (bl.t < 2) continue;
    if (best != 0) {
      const Block& cur = spec.blocks()[static_cast<std::size_t>(best - 1)];
      bool better = false;
      switch (policy) {
        case CornerPolicy::MaxT: better = bl.t >= cur.t; break;
        case CornerPolicy::SmallestIndex: better = false; break;
        case CornerPolicy::LargestSquare:
          better = bl.corner.size() > cur.corner.size() ||
                   (bl.corner.size() == cur.corner.size() && bl.t >= cur.t);
          break;
      }
      if (!better) continue;
    }
    if (biliaison_step(spec, k).admissible) best = k;
  }
  return best;
}

namespace detail {

template <class Value>
class BiliaisonRecursion {
 public:
  using Combine = std::function<Value(const Value& reduced, const Value& divisor)>;

  BiliaisonRecursion(Value leaf, Combine combine, CornerPolicy policy, EngineStats* stats)
      : leaf_(std::move(leaf)), combine_(std::move(combine)), policy_(policy), stats_(stats) {}

  Value run(const LadderIdealSpec& spec) {
    LadderIdealSpec normal = normalize(spec);
    depth_limit_ = 10 * std::max(1, normal.ladder().upper_cell_count());
    return eval(normal, 0);
  }

 private:
  Value eval(const LadderIdealSpec& spec, int depth) {
    if (depth > depth_limit_) {
      throw Error(ErrorCode::NonTermination, "biliaison recursion exceeded depth " + std::to_string(depth_limit_));
    }
    if (stats_) stats_->max_depth = std::max(stats_->max_depth, depth);
    if (spec.empty() || spec.all_linear()) return leaf_;

    CanonicalKey key = canonical_key(spec);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }

    const int k = choose_corner(spec, policy_);
    if (k == 0) throw std::logic_error("no admissible corner in a spec with t_k >= 2");
    BiliaisonStep step = biliaison_step(spec, k);
    if (stats_) {
      ++stats_->steps;
      if (step.divisor_pruned) ++stats_->pruned_divisors;
    }
    Value reduced = eval(step.reduced, depth + 1);
    Value divisor = eval(step.divisor, depth + 1);
    Value out = combine_(reduced, divisor);
    memo_.emplace(std::move(key), out);
    return out;
  }

  Value leaf_;
  Combine combine_;
  CornerPolicy policy_;
  EngineStats* stats_;
  int depth_limit_ = 0;
  std::unordered_map<CanonicalKey, Value, CanonicalKeyHash> memo_;
};

}  // namespace detail

inline BigInt mult_generic(const LadderIdealSpec& spec, CornerPolicy policy = CornerPolicy::MaxT,
                           EngineStats* stats = nullptr) {
  detail::BiliaisonRecursion<BigInt> rec(
      BigInt(1), [](const BigInt& reduced, const BigInt& divisor) { return BigInt(reduced + divisor); },
      policy, stats);
  return rec.run(spec);
}

inline HVector hvec_generic(const LadderIdealSpec& spec, CornerPolicy policy = CornerPolicy::MaxT,
                            EngineStats* stats = nullptr) {
  detail::BiliaisonRecursion<HVector> rec(
      HVector{1}, [](const HVector& reduced, const HVector& divisor) { return reduced.shifted(1) + divisor; },
      policy, stats);
  return rec.run(spec);
}

/// Strictly upper cells shared by the tilde ladders of two specs.
inline int tilde_overlap(const LadderIdealSpec& s1, const LadderIdealSpec& s2) {
  if (s1.empty() || s2.empty()) return 0;
  const Ladder l1 = tilde(s1);
  const Ladder l2 = tilde(s2);
  const int n = std::min(s1.n(), s2.n());
  int shared = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (l1.contains(i, j) && l2.contains(i, j)) ++shared;
  return shared;
}

/// The spec whose blocks are those of both inputs, in the larger ambient
/// matrix.
inline LadderIdealSpec union_spec(const LadderIdealSpec& s1, const LadderIdealSpec& s2) {
  std::vector<Block> blocks(s1.blocks().begin(), s1.blocks().end());
  blocks.insert(blocks.end(), s2.blocks().begin(), s2.blocks().end());
  return LadderIdealSpec::from_blocks(std::max(s1.n(), s2.n()), std::move(blocks));
}

/// e(I_1 + I_2) = e(I_1) e(I_2) when the tilde ladders share no variable.
/// The product is cross-checked against the engine on the union.
inline BigInt mult_product(const LadderIdealSpec& s1, const LadderIdealSpec& s2) {
  const LadderIdealSpec n1 = normalize(s1);
  const LadderIdealSpec n2 = normalize(s2);
  if (int shared = tilde_overlap(n1, n2); shared > 0) {
    throw Error(ErrorCode::HypothesisFails,
                "tilde ladders share " + std::to_string(shared) + " indeterminate(s)");
  }
  BigInt product = mult_generic(n1) * mult_generic(n2);
  BigInt whole = mult_generic(union_spec(n1, n2));
  if (whole != product) {
    throw std::logic_error("product multiplicity " + product.get_str() + " differs from union value " +
                           whole.get_str());
  }
  return product;
}

}  // namespace pfaff
