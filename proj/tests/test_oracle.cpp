#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "pfaff/engine.hpp"
#include "pfaff/families.hpp"
#include "pfaff/formulas.hpp"
#include "pfaff/oracle/groebner.hpp"
#include "pfaff/oracle/hilbert.hpp"
#include "pfaff/oracle/pfaffian.hpp"
#include "pfaff/oracle/verify.hpp"
#include "support.hpp"

using namespace pfaff;
using namespace pfaff::oracle;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pfaff::Error thrown";
  return ErrorCode::BadParams;
}

Monomial x(int n, int i, int j, int e = 1) { return Monomial::variable(var_index(n, i, j), e); }

Polynomial poly(std::vector<std::pair<long, Monomial>> terms) {
  std::vector<Term> ts;
  for (auto& [c, m] : terms) ts.push_back({Rational(c), m});
  return Polynomial::from_terms(std::move(ts));
}

BigInt evaluate(const Polynomial& p, const std::vector<long>& values) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = t.coeff;
    for (const auto& [var, e] : t.mono.entries())
      for (int r = 0; r < e; ++r) v *= values[var];
    sum += v;
  }
  EXPECT_EQ(sum.get_den(), 1);
  return sum.get_num();
}

/// Fraction-free determinant (Bareiss).
BigInt bareiss(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// All monomials of degree d in nvars variables.
std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Entry> cur;
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (left == 0) {
      out.push_back(Monomial::from_pairs(cur));
      return;
    }
    if (v == nvars) return;
    for (int e = left; e >= 0; --e) {
      if (e > 0) cur.push_back({static_cast<std::uint16_t>(v), static_cast<std::uint16_t>(e)});
      rec(v + 1, left - e);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

/// dim_K (R/I)_d by Gaussian elimination on the span of monomial multiples.
long hilbert_function_by_rank(const std::vector<Polynomial>& gens, int nvars, int d) {
  auto monos = monomials_of_degree(nvars, d);
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    const int dg = g.leading_monomial().degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(nvars, d - dg)) {
      std::vector<mpq_class> row(monos.size(), 0);
      for (const auto& t : g.terms()) row[col.at(m * t.mono)] += t.coeff;
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < monos.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t q = c; q < monos.size(); ++q) rows[r][q] -= f * rows[rank][q];
    }
    ++rank;
  }
  return static_cast<long>(monos.size() - rank);
}

}  // namespace

TEST(VarIndex, RoundTrip) {
  for (int n = 2; n <= 9; ++n) {
    int v = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++v) {
        EXPECT_EQ(var_index(n, i, j), v);
        EXPECT_EQ(var_pair(n, v), std::make_pair(i, j));
      }
    EXPECT_EQ(v, var_count(n));
  }
}

TEST(TermOrder, Degrevlex) {
  const int n = 4;
  // x12 > x13 > ... ; degree first
  EXPECT_GT(TermOrder::compare(x(n, 1, 2), x(n, 1, 3)), 0);
  EXPECT_GT(TermOrder::compare(x(n, 3, 4) * x(n, 3, 4), x(n, 1, 2)), 0);
  // x12*x34 vs x13*x24: the one with the smaller last variable power loses
  EXPECT_GT(TermOrder::compare(x(n, 1, 3) * x(n, 2, 4), x(n, 1, 2) * x(n, 3, 4)), 0);
  EXPECT_GT(TermOrder::compare(x(n, 1, 4) * x(n, 2, 3), x(n, 1, 3) * x(n, 2, 4)), 0);
  EXPECT_EQ(TermOrder::compare(x(n, 1, 2) * x(n, 2, 3), x(n, 2, 3) * x(n, 1, 2)), 0);
}

TEST(Pfaffian, Examples) {
  EXPECT_EQ(pfaffian(5, {2, 4}), poly({{1, x(5, 2, 4)}}));
  Polynomial p4 = pfaffian(4, {1, 2, 3, 4});
  Polynomial expected = poly({{1, x(4, 1, 2) * x(4, 3, 4)}, {-1, x(4, 1, 3) * x(4, 2, 4)}, {1, x(4, 1, 4) * x(4, 2, 3)}});
  EXPECT_EQ(p4, expected);
  Polynomial p6 = pfaffian(6, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(p6.size(), 15u);
  for (const auto& t : p6.terms()) EXPECT_TRUE(t.coeff == 1 || t.coeff == -1);
  EXPECT_EQ(pfaffian(8, {1, 2, 3, 4, 5, 6, 7, 8}).size(), 105u);
}

TEST(Pfaffian, Errors) {
  EXPECT_EQ(code_of([] { pfaffian(5, {1, 2, 3}); }), ErrorCode::OddSubset);
  EXPECT_EQ(code_of([] { pfaffian(5, {1, 6}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { pfaffian(5, {0, 2}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { pfaffian(5, {2, 2}); }), ErrorCode::IndexOutOfRange);
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-9, 9);
  const int n = 7;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> values(static_cast<std::size_t>(var_count(n)));
    for (auto& v : values) v = dist(rng);
    for (int size : {2, 4, 6}) {
      std::vector<int> subset;
      std::vector<int> all{1, 2, 3, 4, 5, 6, 7};
      std::shuffle(all.begin(), all.end(), rng);
      subset.assign(all.begin(), all.begin() + size);
      std::sort(subset.begin(), subset.end());
      std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size)));
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
          int i = subset[static_cast<std::size_t>(r)], j = subset[static_cast<std::size_t>(c)];
          long v = i == j ? 0 : values[static_cast<std::size_t>(var_index(n, i, j))];
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = i < j ? v : -v;
        }
      BigInt pf = evaluate(pfaffian(n, std::span<const int>(subset)), values);
      EXPECT_EQ(pf * pf, bareiss(m)) << "size " << size;
    }
  }
}

TEST(Generators, Examples) {
  auto m1 = generators(make_family(Family::M, {.t = 1}));
  EXPECT_EQ(m1.size(), 3u);
  EXPECT_EQ(m1[0], poly({{1, x(3, 1, 2)}}));
  auto l25 = generators(make_family(Family::Ln, {.t = 2, .n = 5}));
  ASSERT_EQ(l25.size(), 2u);
  EXPECT_EQ(l25[0], pfaffian(5, {1, 2, 3, 4}));
  EXPECT_EQ(l25[1], pfaffian(5, {2, 3, 4, 5}));
  EXPECT_EQ(generators(make_family(Family::M, {.t = 2})).size(), 5u);
  // Overlapping squares share pfaffians; duplicates are removed.
  EXPECT_EQ(generators(make_family(Family::Ln, {.t = 2, .n = 6})).size(), 9u);
}

TEST(Generators, Cap) {
  GeneratorOptions opts{.max_generators = 10};
  EXPECT_EQ(code_of([&] { generators(make_family(Family::SM, {.t = 2}), opts); }), ErrorCode::TooManyGenerators);
}

TEST(Buchberger, Examples) {
  auto gens = generators(make_family(Family::M, {.t = 1}));
  auto gb = buchberger(gens);
  EXPECT_EQ(gb, gens);

  // coprime leading monomials: the normalized input
  const int n = 4;
  Polynomial f = poly({{2, x(n, 1, 2) * x(n, 1, 2)}, {4, x(n, 3, 4)}});
  Polynomial g = poly({{-3, x(n, 2, 3) * x(n, 2, 3)}, {3, x(n, 2, 4) * x(n, 1, 4)}});
  auto gb2 = buchberger({f, g});
  ASSERT_EQ(gb2.size(), 2u);
  EXPECT_TRUE(std::find(gb2.begin(), gb2.end(), f.monic()) != gb2.end());
  EXPECT_TRUE(std::find(gb2.begin(), gb2.end(), g.monic()) != gb2.end());
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  for (const auto& spec : {make_family(Family::SM, {.t = 2}), make_family(Family::N, {.t = 3}),
                           make_family(Family::Lk, {.t = 2, .k = 2})}) {
    auto gb = buchberger(generators(spec));
    std::vector<const Polynomial*> ptrs;
    for (const auto& g : gb) ptrs.push_back(&g);
    for (std::size_t i = 0; i < gb.size(); ++i) {
      EXPECT_EQ(gb[i].leading().coeff, 1);
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        Monomial l = lcm(gb[i].leading_monomial(), gb[j].leading_monomial());
        Polynomial s = Polynomial{}
                           .minus_scaled(Rational(-1), gb[i].leading_monomial().quotient_of(l), gb[i])
                           .minus_scaled(Rational(1), gb[j].leading_monomial().quotient_of(l), gb[j]);
        EXPECT_TRUE(reduce(s, ptrs).is_zero());
        EXPECT_FALSE(gb[i].leading_monomial().divides(gb[j].leading_monomial()));
      }
    }
    // generators reduce to zero modulo the basis
    for (const auto& g : generators(spec)) EXPECT_TRUE(reduce(g, ptrs).is_zero());
  }
}

TEST(Buchberger, DeterministicUnderShuffle) {
  std::mt19937 rng(7);
  for (const auto& spec : {make_family(Family::SM, {.t = 2}), make_family(Family::SN, {.t = 2}),
                           make_family(Family::Lk, {.t = 2, .k = 3}), make_family(Family::Hjk, {.t = 2, .j = 1, .k = 1})}) {
    auto gens = generators(spec);
    auto reference = buchberger(gens);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      EXPECT_EQ(buchberger(gens), reference);
    }
  }
}

TEST(Buchberger, Budget) {
  GroebnerOptions opts{.max_pair_reductions = 3};
  EXPECT_EQ(code_of([&] { buchberger(generators(make_family(Family::SM, {.t = 2})), opts); }),
            ErrorCode::BudgetExceeded);
}

TEST(HilbertNumerator, Examples) {
  Monomial a = Monomial::variable(0), b = Monomial::variable(1);
  EXPECT_EQ(hilbert_numerator(MonomialIdeal({a}), 1), (IntPoly{1, -1}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal({a * a, a * b}), 2), (IntPoly{1, 0, -2, 1}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal{}, 3), (IntPoly{1}));
  auto gb = buchberger(generators(make_family(Family::M, {.t = 2})));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal::initial_ideal(gb), 10), (IntPoly{1, 0, -5, 5, 0, -1}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal::initial_ideal(gb), 10), betti_Mt(2).numerator());
}

TEST(HilbertNumerator, Minimalize) {
  Monomial a = Monomial::variable(0), b = Monomial::variable(1);
  MonomialIdeal mi({a * b, a, a * a * b, b * b});
  EXPECT_EQ(mi.size(), 2u);
  EXPECT_TRUE(mi.contains(a * b));
  EXPECT_FALSE(mi.contains(b));
}

TEST(QuotientInvariants, Examples) {
  auto q1 = quotient_invariants(IntPoly{1, -1}, 1);
  EXPECT_EQ(q1.height, 1);
  EXPECT_EQ(q1.multiplicity, 1);
  EXPECT_EQ(q1.hvector, (HVector{1}));
  EXPECT_EQ(q1.reg_cm, 1);

  auto q2 = quotient_invariants(IntPoly{1, 0, -5, 5, 0, -1}, 10);
  EXPECT_EQ(q2.height, 3);
  EXPECT_EQ(q2.dim, 7);
  EXPECT_EQ(q2.multiplicity, 5);
  EXPECT_EQ(q2.hvector, (HVector{1, 3, 1}));
  EXPECT_EQ(q2.reg_cm, 3);

  auto spec = make_family(Family::N, {.t = 2});
  auto num = hilbert_numerator(MonomialIdeal::initial_ideal(buchberger(generators(spec))), 10);
  auto q3 = quotient_invariants(num, 10);
  EXPECT_EQ(q3.height, 5);
  EXPECT_EQ(q3.multiplicity, 3);
  EXPECT_EQ(q3.hvector, (HVector{1, 2}));
  EXPECT_EQ(q3.reg_cm, 2);

  EXPECT_EQ(code_of([] { quotient_invariants(IntPoly{1, -3, 3}, 2); }), ErrorCode::NegativeHEntry);
}

TEST(HilbertFunction, DeltaOfM2) {
  auto gb = buchberger(generators(make_family(Family::M, {.t = 2})));
  auto hf = hilbert_function(hilbert_numerator(MonomialIdeal::initial_ideal(gb), 10), 10, 4);
  // (1 + 3z + z^2) / (1-z)^7 gives 1, 10, 50, 175; the cubic value is also
  // 220 - (50 - 5) from the five linear syzygies of the resolution.
  EXPECT_EQ(hf, (std::vector<std::int64_t>{1, 10, 50, 175}));
  EXPECT_EQ(delta(hf), (std::vector<std::int64_t>{1, 9, 40, 125}));
  auto gens = generators(make_family(Family::M, {.t = 2}));
  EXPECT_EQ(hilbert_function_by_rank(gens, 10, 3), 175);
}

TEST(HilbertFunction, MatchesLinearAlgebra) {
  std::vector<LadderIdealSpec> specs{make_family(Family::M, {.t = 1}), make_family(Family::M, {.t = 2}),
                                     make_family(Family::N, {.t = 2}), make_family(Family::Ln, {.t = 2, .n = 5})};
  for (const auto& s : specgen::enumerate_specs(4)) specs.push_back(s);
  for (const auto& s : specs) {
    const int nvars = var_count(s.n());
    auto gens = generators(normalize(s));
    auto hf = hilbert_function(hilbert_numerator(MonomialIdeal::initial_ideal(buchberger(gens)), nvars), nvars, 4);
    for (int m = 0; m <= 3; ++m) EXPECT_EQ(hf[static_cast<std::size_t>(m)], hilbert_function_by_rank(gens, nvars, m));
  }
}

TEST(Oracle, HeightMatchesLadderCount) {
  for (const auto& s : specgen::enumerate_specs_up_to(7)) {
    const int nvars = var_count(s.n());
    auto num = hilbert_numerator(MonomialIdeal::initial_ideal(buchberger(generators(s))), nvars);
    auto q = quotient_invariants(num, nvars);
    ASSERT_EQ(q.height, height(s));
    ASSERT_EQ(q.multiplicity, mult_generic(s));
    ASSERT_EQ(q.hvector, hvec_generic(s));
  }
}

TEST(Oracle, NormalizationIsSound) {
  // Add every block that normalize would drop as redundant and compare the
  // reduced Groebner bases of the raw and normalized generator sets.
  int checked = 0;
  for (const auto& s : specgen::enumerate_specs_up_to(6)) {
    for (int a = 1; a <= s.n(); ++a)
      for (int b = a + 1; b <= s.n(); ++b)
        for (int t = 1; 2 * t <= b - a + 1; ++t) {
          Block extra{{a, b}, t};
          bool redundant = false;
          for (const auto& bl : s.blocks())
            if (!(bl == extra) && block_redundant(extra, bl)) redundant = true;
          if (!redundant) continue;
          std::vector<Block> blocks(s.blocks().begin(), s.blocks().end());
          blocks.push_back(extra);
          auto raw = LadderIdealSpec::from_blocks(s.n(), blocks);
          ASSERT_EQ(normalize(raw), s);
          ASSERT_EQ(buchberger(generators(raw)), buchberger(generators(s)));
          ++checked;
        }
    if (checked > 400) break;
  }
  EXPECT_GT(checked, 100);
}

TEST(Verify, Examples) {
  auto m2 = verify(make_family(Family::M, {.t = 2}));
  EXPECT_TRUE(m2.all_pass());
  auto sm2 = verify(make_family(Family::SM, {.t = 2}));
  EXPECT_TRUE(sm2.all_pass());
  EXPECT_EQ(sm2.oracle.height, 6);
  EXPECT_EQ(sm2.oracle.multiplicity, 14);
  EXPECT_EQ(sm2.oracle.reg_cm, 4);
  auto l26 = verify(make_family(Family::Ln, {.t = 2, .n = 6}));
  EXPECT_TRUE(l26.all_pass());
  EXPECT_EQ(l26.oracle.height, 5);
  EXPECT_EQ(l26.oracle.multiplicity, 13);
  EXPECT_EQ(l26.oracle.reg_cm, reg_closed(RegFamily::Lt2, 2));
}

TEST(Verify, JsonAndBasisDump) {
  VerifyOptions opts;
  opts.keep_basis = true;
  auto r = verify(make_family(Family::M, {.t = 1}), opts);
  Json j = r.to_json();
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["fields"]["multiplicity"]["expected"], "1");
  EXPECT_EQ(r.basis_text(), "1 x1_2\n1 x1_3\n1 x2_3\n");
}
