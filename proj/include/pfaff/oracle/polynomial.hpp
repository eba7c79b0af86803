#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pfaff/oracle/monomial.hpp"

namespace pfaff::oracle {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in canonical form: terms sorted strictly
/// descending in the term order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return TermOrder::compare(x.mono, y.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return p;
  }

  /// Terms must already be canonical.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial p = *this;
    const Rational lc = terms_.front().coeff;
    for (auto& t : p.terms_) t.coeff /= lc;
    return p;
  }

  /// this - c * m * g
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
    return minus_scaled_from(0, c, m, g);
  }

  /// (terms from index `start` on) - c * m * g
  Polynomial minus_scaled_from(std::size_t start, const Rational& c, const Monomial& m, const Polynomial& g) const {
    std::vector<Term> out;
    out.reserve(terms_.size() - start + g.terms_.size());
    std::size_t i = start, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = m * g.terms_[j].mono;
      int cmp = i < terms_.size() ? TermOrder::compare(terms_[i].mono, gm) : -1;
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.push_back({-c * g.terms_[j].coeff, std::move(gm)});
        ++j;
      } else {
        Rational v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (sgn(v) != 0) out.push_back({std::move(v), std::move(gm)});
        ++i;
        ++j;
      }
    }
    return from_sorted(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y) {
    return x.minus_scaled(Rational(-1), Monomial{}, y);
  }
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y) {
    return x.minus_scaled(Rational(1), Monomial{}, y);
  }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    std::vector<Term> out;
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) out.push_back({a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// One line per polynomial: "coeff monomial + coeff monomial ...".
inline std::string to_string(const Polynomial& p, int n) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.terms().size(); ++k) {
    if (k) s += " + ";
    s += p.terms()[k].coeff.get_str() + " " + to_string(p.terms()[k].mono, n);
  }
  return s;
}

}  // namespace pfaff::oracle
