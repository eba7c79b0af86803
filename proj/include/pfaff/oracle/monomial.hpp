#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pfaff::oracle {

/// Index of the indeterminate x_{ij} (1 <= i < j <= n) in lexicographic order
/// of (i, j): x_12 -> 0, x_13 -> 1, ..., x_{n-1,n} -> n(n-1)/2 - 1.
inline int var_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // rows 1..i-1 contribute (n-1) + (n-2) + ... + (n-i+1) variables
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

inline std::pair<int, int> var_pair(int n, int v) {
  int i = 1;
  while (v >= n - i) {
    v -= n - i;
    ++i;
  }
  return {i, i + 1 + v};
}

inline int var_count(int n) { return n * (n - 1) / 2; }

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
/// exponents strictly positive. The total degree is cached.
class Monomial {
 public:
  using Entry = std::pair<std::uint16_t, std::uint16_t>;

  Monomial() = default;

  static Monomial variable(int v, int e = 1) {
    Monomial m;
    if (e > 0) {
      m.entries_.push_back({static_cast<std::uint16_t>(v), static_cast<std::uint16_t>(e)});
      m.degree_ = e;
    }
    return m;
  }

  /// From unsorted (variable, exponent) pairs; repeated variables add up.
  static Monomial from_pairs(std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (auto [v, e] : pairs) {
      if (e == 0) continue;
      if (!m.entries_.empty() && m.entries_.back().first == v) {
        m.entries_.back().second = static_cast<std::uint16_t>(m.entries_.back().second + e);
      } else {
        m.entries_.push_back({v, e});
      }
      m.degree_ += e;
    }
    return m;
  }

  int degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  int exponent(int v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{static_cast<std::uint16_t>(v), 0});
    return (it != entries_.end() && it->first == v) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    m.entries_.reserve(x.entries_.size() + y.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < x.entries_.size() || j < y.entries_.size()) {
      if (j == y.entries_.size() || (i < x.entries_.size() && x.entries_[i].first < y.entries_[j].first)) {
        m.entries_.push_back(x.entries_[i++]);
      } else if (i == x.entries_.size() || y.entries_[j].first < x.entries_[i].first) {
        m.entries_.push_back(y.entries_[j++]);
      } else {
        m.entries_.push_back(
            {x.entries_[i].first, static_cast<std::uint16_t>(x.entries_[i].second + y.entries_[j].second)});
        ++i;
        ++j;
      }
    }
    m.degree_ = x.degree_ + y.degree_;
    return m;
  }

  bool divides(const Monomial& y) const {
    if (degree_ > y.degree_) return false;
    std::size_t j = 0;
    for (const auto& [v, e] : entries_) {
      while (j < y.entries_.size() && y.entries_[j].first < v) ++j;
      if (j == y.entries_.size() || y.entries_[j].first != v || y.entries_[j].second < e) return false;
    }
    return true;
  }

  /// y / *this, assuming divides(y).
  Monomial quotient_of(const Monomial& y) const {
    Monomial m;
    std::size_t i = 0;
    for (const auto& [v, e] : y.entries_) {
      std::uint16_t left = e;
      if (i < entries_.size() && entries_[i].first == v) left = static_cast<std::uint16_t>(e - entries_[i++].second);
      if (left > 0) m.entries_.push_back({v, left});
    }
    m.degree_ = y.degree_ - degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial m;
    std::size_t i = 0, j = 0;
    while (i < x.entries_.size() || j < y.entries_.size()) {
      if (j == y.entries_.size() || (i < x.entries_.size() && x.entries_[i].first < y.entries_[j].first)) {
        m.entries_.push_back(x.entries_[i++]);
      } else if (i == x.entries_.size() || y.entries_[j].first < x.entries_[i].first) {
        m.entries_.push_back(y.entries_[j++]);
      } else {
        m.entries_.push_back({x.entries_[i].first, std::max(x.entries_[i].second, y.entries_[j].second)});
        ++i;
        ++j;
      }
    }
    for (const auto& e : m.entries_) m.degree_ += e.second;
    return m;
  }

  friend bool coprime(const Monomial& x, const Monomial& y) {
    std::size_t i = 0, j = 0;
    while (i < x.entries_.size() && j < y.entries_.size()) {
      if (x.entries_[i].first == y.entries_[j].first) return false;
      if (x.entries_[i].first < y.entries_[j].first) {
        ++i;
      } else {
        ++j;
      }
    }
    return true;
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.entries_ == y.entries_; }
  /// Structural order (not a term order); used for containers only.
  friend bool operator<(const Monomial& x, const Monomial& y) { return x.entries_ < y.entries_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto [v, e] : entries_) {
      h ^= (static_cast<std::size_t>(v) << 16) | e;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Degree-reverse-lexicographic order with x_12 > x_13 > ... > x_{n-1,n}
/// (variable 0 is the largest).
struct TermOrder {
  /// <0, 0, >0 as x is smaller than, equal to, or greater than y.
  static int compare(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree() ? -1 : 1;
    const auto& ex = x.entries();
    const auto& ey = y.entries();
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(ex.size()) - 1;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(ey.size()) - 1;
    while (i >= 0 && j >= 0) {
      const auto [vx, px] = ex[static_cast<std::size_t>(i)];
      const auto [vy, py] = ey[static_cast<std::size_t>(j)];
      if (vx == vy) {
        if (px != py) return px < py ? 1 : -1;
        --i;
        --j;
      } else if (vx > vy) {
        return -1;  // x carries the smaller variable, y has exponent 0 there
      } else {
        return 1;
      }
    }
    if (i >= 0) return -1;
    if (j >= 0) return 1;
    return 0;
  }

  bool operator()(const Monomial& x, const Monomial& y) const { return compare(x, y) > 0; }
};

inline std::string to_string(const Monomial& m, int n) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.entries()) {
    if (!s.empty()) s += "*";
    auto [i, j] = var_pair(n, v);
    s += "x" + std::to_string(i) + "_" + std::to_string(j);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace pfaff::oracle
