#pragma once

// Closed and recursive formulas for multiplicity, h-vectors, regularity and
// Betti numbers of the named pfaffian ladder families. Every value is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pfaff/error.hpp"
#include "pfaff/families.hpp"
#include "pfaff/hvector.hpp"
#include "pfaff/ladder.hpp"

namespace pfaff {

using BigRational = mpq_class;

// ---------------------------------------------------------------------------
// Multiplicity

/// prod_{1 <= i <= j <= n-2t+1} (2(t-1) + i + j) / (i + j), reduced once.
inline BigRational krattenthaler_ratio(int t, int n) {
  if (t < 1 || 2 * t > n) {
    throw Error(ErrorCode::BadParams, "closed product formula needs 1 <= 2t <= n");
  }
  const int m = n - 2 * t + 1;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      num *= 2 * (t - 1) + i + j;
      den *= i + j;
    }
  }
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// Multiplicity of I_t^n, the ideal of 2t-pfaffians of an n x n matrix.
inline BigInt mult_krattenthaler(int t, int n) {
  BigRational q = krattenthaler_ratio(t, n);
  if (q.get_den() != 1) {
    throw std::logic_error("closed product formula is not integral for t=" + std::to_string(t) +
                           ", n=" + std::to_string(n));
  }
  return q.get_num();
}

namespace detail {

/// 1 + 2^2 + ... + s^2
inline BigInt square_sum(int s) {
  BigInt out = 0;
  for (int r = 1; r <= s; ++r) out += BigInt(r) * r;
  return out;
}

/// 2s(1 + ... + s^2) - s^3, the increment e(L_s(2)) - e(L_{s-1}(2)).
inline BigInt lt2_increment(int s) {
  BigInt cube = BigInt(s) * s * s;
  return 2 * BigInt(s) * square_sum(s) - cube;
}

}  // namespace detail

inline BigInt mult_Mt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "M_t needs t >= 1");
  return detail::square_sum(t);
}

/// e(L_t^n) = e(I_t^n) - e(I_{t-1}^{n-2}), from the biliaison step at the
/// corner (1, n) of the full square.
inline BigInt mult_Ltn(int t, int n) {
  if (t < 1 || 2 * t > n - 1) throw Error(ErrorCode::BadParams, "L_t^n needs 2t <= n - 1");
  if (t == 1) return 1;
  return mult_krattenthaler(t, n) - mult_krattenthaler(t - 1, n - 2);
}

/// The factorial closed form for e(L_t^n) evaluated with product bound
/// n - 2t + 1. It reproduces mult_Ltn(t, n + 1), not mult_Ltn(t, n).
inline BigRational closed_form_Ltn(int t, int n) {
  if (t < 2 || 2 * t > n) throw Error(ErrorCode::BadParams, "closed form needs t >= 2 and 2t <= n");
  auto factorial = [](int x) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    return f;
  };
  auto ratio = [](const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
  };
  BigRational prefactor = ratio(factorial(n - 2 * t + 2), factorial(2 * n - 4 * t + 4));
  BigRational bracket = ratio(factorial(2 * n - 2 * t + 2), factorial(n)) -
                        ratio(factorial(n - 1), factorial(2 * t - 3));
  return prefactor * bracket * krattenthaler_ratio(t, n);
}

inline BigInt mult_Lt2(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "L_t(2) needs t >= 1");
  BigInt out = 1;
  for (int s = 2; s <= t; ++s) out += detail::lt2_increment(s);
  return out;
}

inline BigInt mult_Nt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "N_t needs t >= 1");
  if (t == 1) return 1;
  BigInt out = 1;
  for (int s = 2; s <= t - 1; ++s) out += detail::lt2_increment(s);
  return out + t * detail::square_sum(t - 1);
}

inline BigInt mult_SMt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "SM_t needs t >= 1");
  BigInt out = t;
  for (int r = 2; r <= t; ++r)
    for (int s = 2; s <= r; ++s) out += detail::lt2_increment(s);
  return out;
}

/// Table e[s][l] = e(L_s(l)) for 1 <= s <= tmax, 0 <= l <= kmax, with the
/// convention e(L_s(0)) = 1. Row 0 is unused.
inline std::vector<std::vector<BigInt>> ltk_table(int tmax, int kmax) {
  std::vector<std::vector<BigInt>> e(static_cast<std::size_t>(tmax + 1),
                                     std::vector<BigInt>(static_cast<std::size_t>(kmax + 1), 1));
  for (int s = 1; s <= tmax; ++s) {
    auto& row = e[static_cast<std::size_t>(s)];
    for (int l = 1; l <= kmax; ++l) {
      if (s == 1) {
        row[l] = 1;
      } else if (l == 1) {
        row[l] = mult_Mt(s);
      } else if (l == 2) {
        row[l] = mult_Lt2(s);
      } else {
        const auto& prev = e[static_cast<std::size_t>(s - 1)];
        BigInt v = prev[l] + s * (row[l - 1] + prev[l - 1]);
        for (int m = 1; m <= l - 2; ++m) v += prev[l - 1 - m] * row[m];
        row[l] = v;
      }
    }
  }
  return e;
}

inline BigInt mult_Ltk(int t, int k) {
  if (t < 1 || k < 1) throw Error(ErrorCode::BadParams, "L_t(k) needs t, k >= 1");
  return ltk_table(t, k)[t][k];
}

inline BigInt mult_Htjk(int t, int j, int k) {
  if (j < 0 || k < 0 || j + k < 1 || t < 1 || (j >= 1 && t < 2)) {
    throw Error(ErrorCode::BadParams, "H_t(j,k) needs j, k >= 0, j + k >= 1, t >= 2 when j >= 1");
  }
  auto e = ltk_table(t, std::max(j, k));
  BigInt left = j == 0 ? BigInt(1) : e[t - 1][j];
  return left * e[t][k];
}

/// Valid for j, k >= 1 only; L_t(0,k) is L_t(k) and the formula fails at k = 0.
inline BigInt mult_Ltjk(int t, int j, int k) {
  if (j < 1 || k < 1 || t < 2) throw Error(ErrorCode::BadParams, "L_t(j,k) formula needs j, k >= 1, t >= 2");
  auto e = ltk_table(t, j + k);
  const auto& lower = e[t - 1];
  BigInt out = lower[j + k] + t * lower[j + k - 1];
  for (int l = 1; l <= k - 1; ++l) out += lower[j + k - 1 - l] * e[t][l];
  return out;
}

inline BigInt mult_SNt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "SN_t needs t >= 1");
  BigInt out = 1;
  for (int s = 2; s <= t; ++s) out += mult_Ltjk(s, 1, 2);
  for (int s = 2; s <= t - 1; ++s) out += s * mult_SMt(s);
  return out;
}

/// Multiplicity of a named family from its closed or recursive formula.
inline BigInt mult_family(Family f, const FamilyParams& p) {
  make_family(f, p);  // parameter validation
  switch (f) {
    case Family::I: return mult_krattenthaler(p.t, p.n);
    case Family::Ln: return mult_Ltn(p.t, p.n);
    case Family::M: return mult_Mt(p.t);
    case Family::SM: return mult_SMt(p.t);
    case Family::N: return mult_Nt(p.t);
    case Family::SN: return mult_SNt(p.t);
    case Family::Lk: return mult_Ltk(p.t, p.k);
    case Family::Ljk:
      if (p.j == 0) return mult_Ltk(p.t, p.k);
      if (p.k == 0) return mult_Ltk(p.t - 1, p.j);  // L_t(j,0) = L_{t-1}(j)
      return mult_Ltjk(p.t, p.j, p.k);
    case Family::Hjk: return mult_Htjk(p.t, p.j, p.k);
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

// ---------------------------------------------------------------------------
// h-vectors

/// h-vector of a complete intersection of two forms of degree t.
inline HVector hvec_ci2(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "degree must be positive");
  IntPoly ones(std::vector<std::int64_t>(static_cast<std::size_t>(t), 1));
  return ones * ones;
}

/// Shifted complete intersections summed so all peaks align at t - 1.
inline HVector hvec_Mt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "M_t needs t >= 1");
  HVector h = IntPoly{1}.shifted(static_cast<std::size_t>(t - 1));
  for (int j = 2; j <= t; ++j) h = h + hvec_ci2(j).shifted(static_cast<std::size_t>(t - j));
  return h;
}

// ---------------------------------------------------------------------------
// Regularity

enum class RegFamily { M, Lt2, N, SM };

inline RegFamily parse_reg_family(std::string_view name) {
  if (name == "M") return RegFamily::M;
  if (name == "Lt2") return RegFamily::Lt2;
  if (name == "N") return RegFamily::N;
  if (name == "SM") return RegFamily::SM;
  throw Error(ErrorCode::UnknownFamily, "no closed regularity for '" + std::string(name) + "'");
}

inline int reg_closed(RegFamily f, int t) {
  switch (f) {
    case RegFamily::M:
      if (t < 1) break;
      return 2 * t - 1;
    case RegFamily::Lt2:
      if (t < 1) break;
      return 3 * t - 2;
    case RegFamily::N:
      if (t < 2) break;
      return 3 * t - 4;
    case RegFamily::SM:
      if (t < 1) break;
      return 3 * t - 2;
  }
  throw Error(ErrorCode::BadParams, "t out of range for the regularity formula");
}

inline int reg_closed(std::string_view family, int t) { return reg_closed(parse_reg_family(family), t); }

/// Closed regularity when the spec is (a translate of) M_t, L_t(2), N_t or SM_t.
inline std::optional<int> closed_regularity(const LadderIdealSpec& spec) {
  const CanonicalKey key = canonical_key(spec);
  for (int t = 1; 2 * t <= spec.n(); ++t) {
    if (key == canonical_key(make_family(Family::M, {.t = t}))) return reg_closed(RegFamily::M, t);
    if (key == canonical_key(make_family(Family::Lk, {.t = t, .k = 2}))) return reg_closed(RegFamily::Lt2, t);
    if (key == canonical_key(make_family(Family::SM, {.t = t}))) return reg_closed(RegFamily::SM, t);
    if (t >= 2 && key == canonical_key(make_family(Family::N, {.t = t}))) return reg_closed(RegFamily::N, t);
  }
  return std::nullopt;
}

/// reg(I) = reg(H) + l - 1 for I obtained from J by biliaison of height l on
/// H, provided reg(J) < reg(H).
inline int reg_biliaison(int reg_j, int reg_h, int ell) {
  if (!(reg_j < reg_h)) {
    throw Error(ErrorCode::HypothesisFails,
                "reg(J)=" + std::to_string(reg_j) + " is not below reg(H)=" + std::to_string(reg_h));
  }
  return reg_h + ell - 1;
}

/// Regularity of H + (f) for f of degree d regular modulo the CM ideal H.
inline int reg_hypersurface(int reg_h, int d) {
  if (d < 1) throw Error(ErrorCode::BadParams, "hypersurface degree must be positive");
  return reg_h + d - 1;
}

/// For a Cohen-Macaulay quotient the regularity of the ideal is deg(h) + 1.
inline int reg_from_hvector(const HVector& h) { return h.degree() + 1; }

// ---------------------------------------------------------------------------
// Betti numbers

struct BettiEntry {
  int i = 0;  // homological index, F_1 = generators
  int j = 0;  // internal degree
  long rank = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiTable {
  std::vector<BettiEntry> entries;

  /// K-polynomial 1 + sum (-1)^i rank z^j of R/I.
  IntPoly numerator() const {
    IntPoly out{1};
    for (const auto& e : entries) {
      out = out + IntPoly::monomial(e.i % 2 == 1 ? -e.rank : e.rank, static_cast<std::size_t>(e.j));
    }
    return out;
  }

  /// max{ j : beta_{last, j} != 0 } - length + 1, for a resolution of length
  /// equal to the height.
  int regularity() const {
    int last = 0;
    for (const auto& e : entries) last = std::max(last, e.i);
    int top = 0;
    for (const auto& e : entries)
      if (e.i == last) top = std::max(top, e.j);
    return top - last + 1;
  }
};

/// 0 -> R[-2t-1] -> R[-t-1]^{2t+1} -> R[-t]^{2t+1} -> M_t -> 0
inline BettiTable betti_Mt(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "M_t needs t >= 1");
  const long r = 2L * t + 1;
  return BettiTable{{{1, t, r}, {2, t + 1, r}, {3, 2 * t + 1, 1}}};
}

}  // namespace pfaff
