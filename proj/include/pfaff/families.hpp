#pragma once

// Named families of pfaffian ladder ideals.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfaff/error.hpp"
#include "pfaff/ladder.hpp"

namespace pfaff {

enum class Family {
  I,    // 2t-pfaffians of an n x n matrix
  Ln,   // corners (1, n-1), (2, n), t = (t, t)
  M,    // maximal pfaffians, size 2t+1
  SM,   // submaximal pfaffians, size 2t+2
  N,    // corners (1, 2t-1), (1, 2t+1), t = (t-1, t)
  SN,   // corners (1, 2t-1), (1, 2t+2), t = (t-1, t)
  Lk,   // corners (i, 2t+i), i = 1..k
  Ljk,  // j corners with t-1 followed by k corners with t
  Hjk,  // as Ljk with the two groups pulled apart
};

struct FamilyParams {
  int t = 1;
  int n = 0;
  int j = 0;
  int k = 0;
};

inline constexpr std::array<Family, 9> kAllFamilies = {Family::I,  Family::Ln, Family::M,
                                                       Family::SM, Family::N,  Family::SN,
                                                       Family::Lk, Family::Ljk, Family::Hjk};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::Ln: return "Ln";
    case Family::M: return "M";
    case Family::SM: return "SM";
    case Family::N: return "N";
    case Family::SN: return "SN";
    case Family::Lk: return "Lk";
    case Family::Ljk: return "Ljk";
    case Family::Hjk: return "Hjk";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "L^n" || name == "Ltn") return Family::Ln;
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

/// Parameter names each family reads, in display order.
inline std::vector<std::string> family_param_names(Family f) {
  switch (f) {
    case Family::I:
    case Family::Ln: return {"t", "n"};
    case Family::Lk: return {"t", "k"};
    case Family::Ljk:
    case Family::Hjk: return {"t", "j", "k"};
    default: return {"t"};
  }
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

inline LadderIdealSpec build(int n, const std::vector<Block>& blocks) {
  std::vector<Block> kept;
  for (const auto& bl : blocks) {
    if (bl.t >= 1) kept.push_back(bl);
  }
  return normalize(LadderIdealSpec::from_blocks(n, std::move(kept)));
}

inline LadderIdealSpec staircase(int t, int k) {
  std::vector<Block> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({{i, 2 * t + i}, t});
  return build(2 * t + k, blocks);
}

}  // namespace detail

/// Corner and t data of the named family, normalized. Identities such as
/// L_t(1) = M_t or L_t(k) = H_t(0,k) = H_{t+1}(k,0) hold on the nose.
inline LadderIdealSpec make_family(Family f, const FamilyParams& p) {
  using detail::build;
  using detail::require;
  const int t = p.t;
  require(t >= 1, "t must be positive");
  switch (f) {
    case Family::I:
      require(2 * t <= p.n, "I_t^n needs 2t <= n");
      return build(p.n, {{{1, p.n}, t}});
    case Family::Ln:
      require(2 * t <= p.n - 1, "L_t^n needs 2t <= n - 1");
      return build(p.n, {{{1, p.n - 1}, t}, {{2, p.n}, t}});
    case Family::M: return build(2 * t + 1, {{{1, 2 * t + 1}, t}});
    case Family::SM: return build(2 * t + 2, {{{1, 2 * t + 2}, t}});
    case Family::N:
      if (t == 1) return build(3, {{{1, 3}, 1}});
      return build(2 * t + 1, {{{1, 2 * t - 1}, t - 1}, {{1, 2 * t + 1}, t}});
    case Family::SN:
      if (t == 1) return build(4, {{{1, 4}, 1}});
      return build(2 * t + 2, {{{1, 2 * t - 1}, t - 1}, {{1, 2 * t + 2}, t}});
    case Family::Lk:
      require(p.k >= 1, "L_t(k) needs k >= 1");
      return detail::staircase(t, p.k);
    case Family::Ljk: {
      require(p.j >= 0 && p.k >= 0 && p.j + p.k >= 1, "L_t(j,k) needs j, k >= 0 and j + k >= 1");
      if (p.j == 0) return detail::staircase(t, p.k);
      require(t >= 2, "L_t(j,k) with j >= 1 needs t >= 2");
      std::vector<Block> blocks;
      for (int i = 1; i <= p.j; ++i) blocks.push_back({{i, 2 * t + i - 2}, t - 1});
      for (int i = 0; i < p.k; ++i) blocks.push_back({{p.j + i, 2 * t + p.j + i}, t});
      int n = p.k >= 1 ? 2 * t + p.j + p.k - 1 : 2 * t + p.j - 2;
      return build(n, blocks);
    }
    case Family::Hjk: {
      require(p.j >= 0 && p.k >= 0 && p.j + p.k >= 1, "H_t(j,k) needs j, k >= 0 and j + k >= 1");
      require(p.j == 0 || t >= 2, "H_t(j,k) with j >= 1 needs t >= 2");
      std::vector<Block> blocks;
      for (int i = 1; i <= p.j; ++i) blocks.push_back({{i, 2 * t + i - 2}, t - 1});
      for (int i = 1; i <= p.k; ++i) blocks.push_back({{p.j + i, 2 * t + p.j + i}, t});
      int n = p.k >= 1 ? 2 * t + p.j + p.k : 2 * t + p.j - 2;
      return build(n, blocks);
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

inline LadderIdealSpec make_family(std::string_view name, const FamilyParams& p) {
  return make_family(parse_family(name), p);
}

}  // namespace pfaff
