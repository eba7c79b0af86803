#pragma once

// Ladders of a skew-symmetric matrix and pfaffian ideals on them.
//
// A ladder is stored by its upper corners (a_k, b_k); the cell set is the
// union of the squares [a_k, b_k] x [a_k, b_k]. Indices are 1-based. Cell
// membership is computed from the corners on demand.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/error.hpp"

namespace pfaff {

struct UpperCorner {
  int a = 0;
  int b = 0;

  int size() const { return b - a + 1; }
  bool contains(int i) const { return a <= i && i <= b; }

  friend auto operator<=>(const UpperCorner&, const UpperCorner&) = default;
};

/// One square subladder together with the pfaffian size 2t used on it.
struct Block {
  UpperCorner corner;
  int t = 1;

  friend auto operator<=>(const Block&, const Block&) = default;
};

class Ladder {
 public:
  Ladder() = default;

  /// Validating constructor: corners must satisfy 1 <= a < b <= n, be
  /// pairwise distinct and admit an order with both coordinates monotone.
  static Ladder make(int n, std::vector<UpperCorner> corners) {
    if (corners.empty()) throw Error(ErrorCode::EmptySpec, "ladder needs at least one corner");
    for (const auto& c : corners) check_corner(n, c);
    std::sort(corners.begin(), corners.end());
    for (std::size_t k = 1; k < corners.size(); ++k) {
      if (corners[k] == corners[k - 1]) {
        throw Error(ErrorCode::CoincidentCorners,
                    "corner (" + std::to_string(corners[k].a) + "," + std::to_string(corners[k].b) +
                        ") given twice");
      }
      if (corners[k].b < corners[k - 1].b) {
        throw Error(ErrorCode::NotSortable, "corner columns are not monotone along the rows");
      }
    }
    return Ladder(n, std::move(corners));
  }

  /// Used for ladders produced internally (biliaison steps under arbitrary
  /// corner policies may nest one square inside another). Corners are range
  /// checked, sorted and deduplicated but monotonicity is not required.
  static Ladder from_corners(int n, std::vector<UpperCorner> corners) {
    for (const auto& c : corners) check_corner(n, c);
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    return Ladder(n, std::move(corners));
  }

  int n() const { return n_; }
  std::span<const UpperCorner> corners() const { return corners_; }
  bool empty() const { return corners_.empty(); }

  bool contains(int i, int j) const {
    return std::any_of(corners_.begin(), corners_.end(),
                       [&](const UpperCorner& c) { return c.contains(i) && c.contains(j); });
  }

  /// Number of cells (i, j) with i < j, i.e. the number of indeterminates.
  int upper_cell_count() const {
    int count = 0;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (contains(i, j)) ++count;
    return count;
  }

  friend bool operator==(const Ladder&, const Ladder&) = default;

 private:
  Ladder(int n, std::vector<UpperCorner> corners) : n_(n), corners_(std::move(corners)) {}

  static void check_corner(int n, const UpperCorner& c) {
    if (!(1 <= c.a && c.a < c.b && c.b <= n)) {
      throw Error(ErrorCode::CornerOutOfRange, "corner (" + std::to_string(c.a) + "," +
                                                   std::to_string(c.b) + ") outside 1 <= a < b <= " +
                                                   std::to_string(n));
    }
  }

  int n_ = 0;
  std::vector<UpperCorner> corners_;
};

inline Ladder make_ladder(int n, const std::vector<std::pair<int, int>>& corners) {
  std::vector<UpperCorner> cs;
  cs.reserve(corners.size());
  for (auto [a, b] : corners) cs.push_back({a, b});
  return Ladder::make(n, std::move(cs));
}

/// The pair (ladder, t-vector) defining the ideal sum_k I_{2 t_k}(X_k).
/// An empty block list denotes the zero ideal.
class LadderIdealSpec {
 public:
  LadderIdealSpec() = default;

  /// Validating constructor for user input (same rules as Ladder::make, plus
  /// t_k >= 1 for every corner).
  static LadderIdealSpec make(int n, std::vector<Block> blocks) {
    for (const auto& bl : blocks) {
      if (bl.t < 1) throw Error(ErrorCode::BadParams, "t-values must be positive");
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<UpperCorner> corners;
    for (const auto& bl : blocks) corners.push_back(bl.corner);
    Ladder::make(n, corners);  // validation only
    return LadderIdealSpec(n, std::move(blocks));
  }

  static LadderIdealSpec make(int n, const std::vector<std::pair<int, int>>& corners,
                              const std::vector<int>& t) {
    if (corners.size() != t.size()) {
      throw Error(ErrorCode::BadParams, "t-vector length differs from the number of corners");
    }
    std::vector<Block> blocks;
    for (std::size_t k = 0; k < corners.size(); ++k)
      blocks.push_back({{corners[k].first, corners[k].second}, t[k]});
    return make(n, std::move(blocks));
  }

  /// Unvalidated apart from ranges; blocks are sorted and exact duplicates
  /// collapsed.
  static LadderIdealSpec from_blocks(int n, std::vector<Block> blocks) {
    for (const auto& bl : blocks) {
      if (!(1 <= bl.corner.a && bl.corner.a < bl.corner.b && bl.corner.b <= n) || bl.t < 1) {
        throw Error(ErrorCode::CornerOutOfRange, "block outside the ambient matrix");
      }
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return LadderIdealSpec(n, std::move(blocks));
  }

  int n() const { return n_; }
  std::span<const Block> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  Ladder ladder() const {
    std::vector<UpperCorner> cs;
    for (const auto& bl : blocks_) cs.push_back(bl.corner);
    return Ladder::from_corners(n_, std::move(cs));
  }

  std::vector<int> t() const {
    std::vector<int> out;
    for (const auto& bl : blocks_) out.push_back(bl.t);
    return out;
  }

  bool all_linear() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.t == 1; });
  }

  friend bool operator==(const LadderIdealSpec&, const LadderIdealSpec&) = default;

 private:
  LadderIdealSpec(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;
};

struct NormalizeInfo {
  int size_dropped = 0;       // 2t_k > b_k - a_k + 1
  int redundant_dropped = 0;  // contained in another block's ideal
};

/// Block `inner` generates a subideal of block `outer` when every 2t-subset of
/// inner's index range meets outer's range in at least t_inner + t_outer
/// indices, i.e. t_inner - t_outer >= |[a_in, b_in] \ [a_out, b_out]|. For
/// consecutive monotone corners this is exactly the negation of the usual
/// inequalities a_k - a_{k-1} > t_{k-1} - t_k and b_k - b_{k-1} > t_k - t_{k-1}.
inline bool block_redundant(const Block& inner, const Block& outer) {
  const auto& in = inner.corner;
  const auto& out = outer.corner;
  int overlap = std::max(0, std::min(in.b, out.b) - std::max(in.a, out.a) + 1);
  int outside = in.size() - overlap;
  return inner.t - outer.t >= outside;
}

inline LadderIdealSpec normalize(const LadderIdealSpec& spec, NormalizeInfo* info = nullptr) {
  NormalizeInfo local;
  std::vector<Block> sized;
  for (const auto& bl : spec.blocks()) {
    if (2 * bl.t > bl.corner.size()) {
      ++local.size_dropped;
    } else {
      sized.push_back(bl);
    }
  }
  std::sort(sized.begin(), sized.end());
  sized.erase(std::unique(sized.begin(), sized.end()), sized.end());

  // Redundancy is a strict, acyclic relation once duplicates are gone, so one
  // pass removing every dominated block preserves the ideal and is idempotent.
  std::vector<Block> kept;
  for (std::size_t k = 0; k < sized.size(); ++k) {
    bool dominated = false;
    for (std::size_t j = 0; j < sized.size() && !dominated; ++j) {
      if (j != k && block_redundant(sized[k], sized[j])) dominated = true;
    }
    if (dominated) {
      ++local.redundant_dropped;
    } else {
      kept.push_back(sized[k]);
    }
  }
  if (info) *info = local;
  return LadderIdealSpec::from_blocks(spec.n(), std::move(kept));
}

inline bool is_normalized(const LadderIdealSpec& spec) { return normalize(spec) == spec; }

/// Corners sorted by row admit nondecreasing columns as well, i.e. the spec
/// is a ladder decomposition a_1 <= ... <= a_s, b_1 <= ... <= b_s.
inline bool is_monotone(const LadderIdealSpec& spec) {
  const auto blocks = spec.blocks();
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (blocks[k].corner.b < blocks[k - 1].corner.b) return false;
    if (blocks[k].corner == blocks[k - 1].corner) return false;
  }
  return true;
}

/// Ladder with corners (a_k + t_k - 1, b_k - t_k + 1).
inline Ladder tilde(const LadderIdealSpec& spec) {
  if (spec.empty()) throw Error(ErrorCode::EmptySpec, "tilde of the zero ideal");
  std::vector<UpperCorner> cs;
  for (const auto& bl : spec.blocks()) {
    cs.push_back({bl.corner.a + bl.t - 1, bl.corner.b - bl.t + 1});
  }
  return Ladder::from_corners(spec.n(), std::move(cs));
}

/// Height of the ideal: number of strictly upper cells of the tilde ladder.
inline int height(const LadderIdealSpec& spec) {
  if (spec.empty()) return 0;
  return tilde(spec).upper_cell_count();
}

/// Translation-invariant identity of a normalized spec: blocks shifted so the
/// smallest row index is 1. The ambient size n does not enter the key.
struct CanonicalKey {
  std::vector<Block> blocks;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept {
    std::size_t h = key.blocks.size();
    for (const auto& bl : key.blocks) {
      for (int v : {bl.corner.a, bl.corner.b, bl.t}) {
        h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
    }
    return h;
  }
};

inline CanonicalKey canonical_key(const LadderIdealSpec& spec) {
  LadderIdealSpec normal = normalize(spec);
  CanonicalKey key;
  if (normal.empty()) return key;
  int shift = normal.blocks().front().corner.a - 1;
  for (const auto& bl : normal.blocks()) {
    key.blocks.push_back({{bl.corner.a - shift, bl.corner.b - shift}, bl.t});
  }
  return key;
}

/// One elementary biliaison of height 1 at a chosen corner: I is obtained
/// from `reduced` (corner k shrunk to (a+1, b-1), t_k - 1) on `divisor`
/// (corner k split into (a, b-1) and (a+1, b), both with t_k).
struct BiliaisonStep {
  LadderIdealSpec reduced;
  LadderIdealSpec divisor;
  int corner_index = 0;  // 1-based, into the source spec
  int deg_f = 0;
  int deg_g = 0;
  int height = 1;
  // Set when re-normalizing the divisor removed a block as redundant (not
  // merely too small for its pfaffian size).
  bool divisor_pruned = false;
  bool reduced_pruned = false;
  // Both results are again monotone ladders. Only admissible steps are used
  // by the recursion engines; stepping elsewhere can nest one square inside
  // another and the multiplicity relation then fails (e.g. L_3(2) at its
  // first corner followed by the first corner of the reduced ideal).
  bool admissible = false;
};

inline BiliaisonStep biliaison_step(const LadderIdealSpec& spec, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > spec.size()) {
    throw Error(ErrorCode::BadCornerIndex,
                "corner index " + std::to_string(k) + " not in 1.." + std::to_string(spec.size()));
  }
  const Block& chosen = spec.blocks()[static_cast<std::size_t>(k - 1)];
  if (chosen.t < 2) {
    throw Error(ErrorCode::StepNotApplicable, "t_k = " + std::to_string(chosen.t) + " < 2");
  }
  const auto [a, b] = chosen.corner;

  std::vector<Block> reduced;
  std::vector<Block> divisor;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Block& bl = spec.blocks()[i];
    if (static_cast<int>(i) == k - 1) {
      reduced.push_back({{a + 1, b - 1}, bl.t - 1});
      divisor.push_back({{a, b - 1}, bl.t});
      divisor.push_back({{a + 1, b}, bl.t});
    } else {
      reduced.push_back(bl);
      divisor.push_back(bl);
    }
  }

  BiliaisonStep step;
  NormalizeInfo reduced_info;
  NormalizeInfo divisor_info;
  step.reduced = normalize(LadderIdealSpec::from_blocks(spec.n(), std::move(reduced)), &reduced_info);
  step.divisor = normalize(LadderIdealSpec::from_blocks(spec.n(), std::move(divisor)), &divisor_info);
  step.corner_index = k;
  step.deg_f = chosen.t - 1;
  step.deg_g = chosen.t;
  step.height = 1;
  step.reduced_pruned = reduced_info.redundant_dropped > 0;
  step.divisor_pruned = divisor_info.redundant_dropped > 0;
  step.admissible = is_monotone(step.reduced) && is_monotone(step.divisor);
  return step;
}

}  // namespace pfaff
