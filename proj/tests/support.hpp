#pragma once

// Shared helpers for the test binaries.

#include <functional>
#include <vector>

#include "pfaff/ladder.hpp"

namespace pfaff::specgen {

/// Every normalized monotone spec with ambient size n and at least one corner.
inline std::vector<LadderIdealSpec> enumerate_specs(int n) {
  std::vector<LadderIdealSpec> out;
  std::vector<Block> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) out.push_back(LadderIdealSpec::from_blocks(n, cur));
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int t = 1; 2 * t <= b - a + 1; ++t) {
          if (!cur.empty()) {
            const Block& p = cur.back();
            if (a < p.corner.a || b < p.corner.b) continue;
            if (a == p.corner.a && b == p.corner.b) continue;
            if (!(a - p.corner.a > p.t - t && b - p.corner.b > t - p.t)) continue;
          }
          cur.push_back({{a, b}, t});
          rec();
          cur.pop_back();
        }
  };
  rec();
  return out;
}

inline std::vector<LadderIdealSpec> enumerate_specs_up_to(int nmax) {
  std::vector<LadderIdealSpec> all;
  for (int n = 2; n <= nmax; ++n) {
    auto v = enumerate_specs(n);
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

}  // namespace pfaff::specgen
