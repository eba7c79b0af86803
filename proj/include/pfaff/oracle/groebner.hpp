#pragma once

// Buchberger's algorithm over Q with normal pair selection and the
// Gebauer-Moeller installation of the first (coprime) and chain criteria.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pfaff/error.hpp"
#include "pfaff/oracle/polynomial.hpp"

namespace pfaff::oracle {

struct GroebnerOptions {
  std::size_t max_pair_reductions = 2'000'000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Remainder of p on division by the basis (full reduction, every term).
inline Polynomial reduce(const Polynomial& p, const std::vector<const Polynomial*>& basis) {
  std::vector<Term> remainder;
  Polynomial cur = p;
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term& lt = cur.terms()[head];
    const Polynomial* divisor = nullptr;
    for (const Polynomial* g : basis) {
      if (g->leading_monomial().divides(lt.mono)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    Rational c = lt.coeff / divisor->leading().coeff;
    Monomial m = divisor->leading_monomial().quotient_of(lt.mono);
    cur = cur.minus_scaled_from(head, c, m, *divisor);
    head = 0;
  }
  return Polynomial::from_sorted(std::move(remainder));
}

namespace detail {

struct Pair {
  int deg = 0;
  Monomial lcm;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct PairOrder {
  bool operator()(const Pair& x, const Pair& y) const {
    if (x.deg != y.deg) return x.deg < y.deg;
    int c = TermOrder::compare(x.lcm, y.lcm);
    if (c != 0) return c < 0;
    return std::tie(x.i, x.j) < std::tie(y.i, y.j);
  }
};

class Buchberger {
 public:
  Buchberger(const GroebnerOptions& opts, GroebnerStats* stats) : opts_(opts), stats_(stats) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      Polynomial h = reduce(g, active_basis());
      if (!h.is_zero()) install(h.monic());
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++reductions_ > opts_.max_pair_reductions) {
        throw Error(ErrorCode::BudgetExceeded,
                    "more than " + std::to_string(opts_.max_pair_reductions) + " pair reductions");
      }
      if (stats_) ++stats_->pairs_reduced;
      Polynomial h = reduce(s_polynomial(pr), active_basis());
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      install(h.monic());
    }
    return reduced_basis();
  }

 private:
  Polynomial s_polynomial(const Pair& pr) const {
    const Polynomial& f = polys_[pr.i];
    const Polynomial& g = polys_[pr.j];
    Monomial mf = f.leading_monomial().quotient_of(pr.lcm);
    Monomial mg = g.leading_monomial().quotient_of(pr.lcm);
    Polynomial scaled = Polynomial{}.minus_scaled(Rational(-1), mf, f);
    return scaled.minus_scaled(Rational(1), mg, g);
  }

  std::vector<const Polynomial*> active_basis() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  void install(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial hl = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(false);

    // New pairs (g, h), pruned by the chain criterion among themselves.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = lcm(polys_[g].leading_monomial(), hl);
      fresh.push_back({l.degree(), std::move(l), g, hi});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const bool disjoint = coprime(polys_[fresh[a].i].leading_monomial(), hl);
      if (disjoint) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm && b > a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Among pairs with equal lcm keep one, preferring a coprime one (which is
    // then dropped entirely by the first criterion).
    std::vector<Pair> survivors;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool shadowed = false;
      for (std::size_t b = 0; b < fresh.size() && !shadowed; ++b) {
        if (b == a || !keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        const bool b_coprime = coprime(polys_[fresh[b].i].leading_monomial(), hl);
        if (b_coprime || b < a) shadowed = true;
      }
      if (shadowed) continue;
      if (coprime(polys_[fresh[a].i].leading_monomial(), hl)) continue;
      survivors.push_back(fresh[a]);
    }

    // Old pairs whose lcm is strictly divisible via h are redundant.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (hl.divides(l) && !(lcm(polys_[it->i].leading_monomial(), hl) == l) &&
          !(lcm(polys_[it->j].leading_monomial(), hl) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : survivors) {
      pairs_.insert(std::move(p));
      if (stats_) ++stats_->pairs_created;
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && hl.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    active_[hi] = true;
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t q = 0; q < minimal.size(); ++q)
        if (q != k) others.push_back(&minimal[q]);
      // Leading terms are pairwise non-dividing, so only the tail changes.
      std::vector<Term> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
      Polynomial rest = reduce(Polynomial::from_sorted(std::move(tail)), others);
      std::vector<Term> terms{minimal[k].leading()};
      terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
      out.push_back(Polynomial::from_sorted(std::move(terms)).monic());
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& x, const Polynomial& y) {
      return TermOrder::compare(x.leading_monomial(), y.leading_monomial()) > 0;
    });
    return out;
  }

  GroebnerOptions opts_;
  GroebnerStats* stats_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairOrder> pairs_;
  std::size_t reductions_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis (monic, sorted by descending leading monomial).
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {},
                                          GroebnerStats* stats = nullptr) {
  detail::Buchberger alg(opts, stats);
  return alg.run(gens);
}

}  // namespace pfaff::oracle
