#pragma once

// Hilbert series numerators of monomial ideals by pivot-variable recursion,
// and extraction of height, multiplicity and h-vector from a numerator.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfaff/error.hpp"
#include "pfaff/hvector.hpp"
#include "pfaff/oracle/polynomial.hpp"

namespace pfaff::oracle {

/// Minimal monomial generators, sorted structurally.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens) : gens_(minimalize(std::move(gens))) {}

  static MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis) {
    std::vector<Monomial> lead;
    for (const auto& g : basis)
      if (!g.is_zero()) lead.push_back(g.leading_monomial());
    return MonomialIdeal(std::move(lead));
  }

  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
      if (x.degree() != y.degree()) return x.degree() < y.degree();
      return x < y;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& g : gens) {
      bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Monomial> gens_;
};

namespace detail {

class HilbertRecursion {
 public:
  IntPoly eval(std::vector<Monomial> gens) {
    gens = MonomialIdeal::minimalize(std::move(gens));
    if (gens.empty()) return IntPoly{1};

    // Generators sharing no variable with any other factor out.
    IntPoly factor{1};
    std::vector<Monomial> rest;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      bool isolated = true;
      for (std::size_t b = 0; b < gens.size() && isolated; ++b)
        if (a != b && !coprime(gens[a], gens[b])) isolated = false;
      if (isolated) {
        factor = factor * (IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(gens[a].degree())));
      } else {
        rest.push_back(gens[a]);
      }
    }
    if (rest.empty()) return factor;

    if (auto it = memo_.find(rest); it != memo_.end()) return factor * it->second;

    // Pivot on the variable occurring in the most generators.
    std::map<int, int> count;
    for (const auto& g : rest)
      for (const auto& [v, e] : g.entries()) ++count[v];
    int pivot = -1, best = 0;
    for (const auto& [v, c] : count)
      if (c > best) {
        best = c;
        pivot = v;
      }
    const Monomial x = Monomial::variable(pivot);

    std::vector<Monomial> plus{x};
    std::vector<Monomial> colon;
    for (const auto& g : rest) {
      if (!x.divides(g)) plus.push_back(g);
      colon.push_back(g.exponent(pivot) > 0 ? x.quotient_of(g) : g);
    }
    // HS(R/I) = HS(R/(I + x)) + z HS(R/(I : x))
    IntPoly value = eval(std::move(plus)) + eval(std::move(colon)).shifted(1);
    memo_.emplace(std::move(rest), value);
    return factor * value;
  }

 private:
  std::map<std::vector<Monomial>, IntPoly> memo_;
};

}  // namespace detail

/// N(z) with HS(R/mi) = N(z) / (1-z)^nvars. The numerator does not depend on
/// nvars; the argument only documents the ring.
inline IntPoly hilbert_numerator(const MonomialIdeal& mi, int /*nvars*/) {
  detail::HilbertRecursion rec;
  return rec.eval(mi.gens());
}

/// First `count` values of the Hilbert function of R/I from its numerator.
inline std::vector<std::int64_t> hilbert_function(const IntPoly& num, int nvars, int count) {
  std::vector<std::int64_t> series(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) series[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(i)];
  // multiply by 1/(1-z) nvars times: prefix sums
  for (int r = 0; r < nvars; ++r)
    for (int i = 1; i < count; ++i)
      series[static_cast<std::size_t>(i)] =
          pfaff::detail::checked_add(series[static_cast<std::size_t>(i)], series[static_cast<std::size_t>(i - 1)]);
  return series;
}

struct QuotientInvariants {
  int height = 0;
  int dim = 0;
  BigInt multiplicity;
  HVector hvector;
  int reg_cm = 0;
};

inline QuotientInvariants quotient_invariants(const IntPoly& num, int nvars) {
  if (num.is_zero()) throw Error(ErrorCode::BadParams, "zero Hilbert numerator");
  QuotientInvariants out;
  IntPoly q = num;
  while (q.value_at_one() == 0) {
    // q / (1 - z): coefficients are prefix sums; the remainder is q(1) = 0
    std::vector<std::int64_t> cs(q.coeffs.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.coeffs.size(); ++i) {
      acc = pfaff::detail::checked_add(acc, q.coeffs[i]);
      cs[i] = acc;
    }
    q = IntPoly(std::move(cs));
    ++out.height;
  }
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
    if (q.coeffs[i] < 0) {
      throw Error(ErrorCode::NegativeHEntry,
                  "h(" + std::to_string(i) + ") = " + std::to_string(q.coeffs[i]) + " in " + to_string(q));
    }
  }
  out.dim = nvars - out.height;
  out.multiplicity = q.value_at_one();
  out.hvector = q;
  out.reg_cm = q.degree() + 1;
  return out;
}

}  // namespace pfaff::oracle
