#pragma once

// Integer coefficient vectors in one variable z: h-polynomials, Hilbert
// series numerators and Hilbert function prefixes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pfaff {

using BigInt = mpz_class;

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in polynomial sum");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in polynomial product");
  return r;
}

}  // namespace detail

/// Dense polynomial sum_i coeffs[i] z^i, kept without trailing zeros (the
/// zero polynomial has no coefficients).
struct IntPoly {
  std::vector<std::int64_t> coeffs;

  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> cs) : coeffs(cs) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> cs) : coeffs(std::move(cs)) { trim(); }

  static IntPoly monomial(std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> cs(degree + 1, 0);
    cs[degree] = c;
    return IntPoly(std::move(cs));
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  std::int64_t operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

  BigInt value_at_one() const {
    BigInt s = 0;
    for (auto c : coeffs) s += static_cast<long>(c);
    return s;
  }

  IntPoly shifted(std::size_t by) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> cs(by, 0);
    cs.insert(cs.end(), coeffs.begin(), coeffs.end());
    return IntPoly(std::move(cs));
  }

  friend IntPoly operator+(const IntPoly& x, const IntPoly& y) {
    std::vector<std::int64_t> cs(std::max(x.coeffs.size(), y.coeffs.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = detail::checked_add(x[i], y[i]);
    return IntPoly(std::move(cs));
  }

  friend IntPoly operator-(const IntPoly& x, const IntPoly& y) {
    std::vector<std::int64_t> cs(std::max(x.coeffs.size(), y.coeffs.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = detail::checked_add(x[i], -y[i]);
    return IntPoly(std::move(cs));
  }

  friend IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<std::int64_t> cs(x.coeffs.size() + y.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      for (std::size_t j = 0; j < y.coeffs.size(); ++j)
        cs[i + j] = detail::checked_add(cs[i + j], detail::checked_mul(x.coeffs[i], y.coeffs[j]));
    return IntPoly(std::move(cs));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// (1 - z)^e
inline IntPoly one_minus_z_pow(int e) {
  IntPoly out{1};
  const IntPoly factor{1, -1};
  for (int i = 0; i < e; ++i) out = out * factor;
  return out;
}

/// h-vector (h(0), ..., h(s)) of a graded quotient.
using HVector = IntPoly;

inline BigInt hvector_sum(const HVector& h) { return h.value_at_one(); }

/// First difference: out(m) = H(m) - H(m-1), with H(-1) = 0.
inline std::vector<std::int64_t> delta(const std::vector<std::int64_t>& hf) {
  std::vector<std::int64_t> out(hf.size());
  for (std::size_t m = 0; m < hf.size(); ++m) {
    out[m] = detail::checked_add(hf[m], m == 0 ? 0 : -hf[m - 1]);
  }
  return out;
}

/// Whenever h_i > h_{i+1}, every later step also strictly decreases.
inline bool is_decreasing_type(const HVector& h) {
  const auto& c = h.coeffs;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] > c[i + 1]) {
      for (std::size_t j = i + 1; j + 1 < c.size(); ++j) {
        if (!(c[j] > c[j + 1])) return false;
      }
      return true;
    }
  }
  return true;
}

/// h_1 <= ... <= h_p >= h_{p+1} >= ... >= h_s for some p. The entry h_0 is
/// not part of the condition.
inline bool is_unimodal(const HVector& h) {
  const auto& c = h.coeffs;
  std::size_t i = 1;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

inline std::string to_string(const IntPoly& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.coeffs[i]);
  }
  return s + ")";
}

}  // namespace pfaff
