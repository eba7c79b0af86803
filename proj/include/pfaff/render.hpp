#pragma once

// ASCII pictures of ladders. Cells of the ladder are drawn as '#', cells
// covered only by blocks of smaller pfaffian size as ':', cells outside as
// '.', and each upper corner carries its 1-based index.

#include <algorithm>
#include <string>
#include <vector>

#include "pfaff/ladder.hpp"

namespace pfaff {

namespace detail {

inline char corner_label(int k) {
  if (k <= 9) return static_cast<char>('0' + k);
  return static_cast<char>('a' + (k - 10) % 26);
}

inline std::string render_grid(int n, const std::vector<Block>& blocks) {
  int tmax = 0;
  for (const auto& bl : blocks) tmax = std::max(tmax, bl.t);
  const int width = static_cast<int>(std::to_string(n).size());
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s; };

  std::string out = std::string(static_cast<std::size_t>(width), ' ') + " ";
  for (int j = 1; j <= n; ++j) out += std::to_string(j % 10);
  out += "\n";
  for (int i = 1; i <= n; ++i) {
    out += pad(std::to_string(i)) + " ";
    for (int j = 1; j <= n; ++j) {
      int best = 0;
      char c = '.';
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& bl = blocks[k];
        if (bl.corner.a == i && bl.corner.b == j) c = corner_label(static_cast<int>(k) + 1);
        if (bl.corner.contains(i) && bl.corner.contains(j)) best = std::max(best, bl.t);
      }
      if (c == '.' && best > 0) c = best == tmax ? '#' : ':';
      out += c;
    }
    out += "\n";
  }
  return out;
}

}  // namespace detail

inline std::string render_ascii(const Ladder& ladder) {
  std::vector<Block> blocks;
  for (const auto& c : ladder.corners()) blocks.push_back({c, 1});
  return detail::render_grid(ladder.n(), blocks);
}

/// Grid plus a legend line per corner.
inline std::string render_ascii(const LadderIdealSpec& spec) {
  std::vector<Block> blocks(spec.blocks().begin(), spec.blocks().end());
  std::string out = detail::render_grid(spec.n(), blocks);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    out += std::string(1, detail::corner_label(static_cast<int>(k) + 1)) + ": (" +
           std::to_string(blocks[k].corner.a) + "," + std::to_string(blocks[k].corner.b) +
           ") t=" + std::to_string(blocks[k].t) + "\n";
  }
  return out;
}

}  // namespace pfaff
