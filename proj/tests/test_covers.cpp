#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace wittlang;

namespace {

ASPoly reduce_in_random_order(ASPoly f, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> reducible;
    for (int k = f.p; k <= f.bound(); ++k) {
      if (k % f.p == 0 && f.coeffs[k] != 0) reducible.push_back(k);
    }
    if (reducible.empty()) return f;
    std::uniform_int_distribution<std::size_t> pick(0, reducible.size() - 1);
    f = as_reduce_step(std::move(f), reducible[pick(rng)]);
  }
}

}  // namespace

TEST(AsReduce, Examples) {
  EXPECT_EQ(as_reduce(make_as_poly(2, {0, 1, 1})).representative, make_as_poly(2, {0, 0, 0}));
  EXPECT_EQ(as_reduce(make_as_poly(2, {0, 0, 0, 1})).representative, make_as_poly(2, {0, 0, 0, 1}));
  EXPECT_EQ(as_reduce(make_as_poly(2, {0, 0, 0, 0, 1})).representative, make_as_poly(2, {0, 1, 0, 0, 0}));
  EXPECT_EQ(to_string(make_as_poly(3, {0, 2, 0, 1})), "t^3 + 2t");
}

TEST(AsReduce, RejectsConstantTerm) { EXPECT_THROW(make_as_poly(2, {1, 1}), DomainError); }

TEST(AsReduce, CanonicalFormHasNoPDivisibleDegree) {
  for (int p : {2, 3, 5}) {
    for (const auto& f : enumerate_as_polys(p, p == 5 ? 6 : 7)) {
      const auto r = as_reduce(f).representative;
      for (int k = p; k <= r.bound(); k += p) ASSERT_EQ(r.coeffs[k], 0);
    }
  }
}

TEST(AsReduce, IdempotentAndConstantOnCosets) {
  const int p = 2;
  for (int bound = 1; bound <= 4; ++bound) {
    const auto polys = enumerate_as_polys(p, bound);
    const auto gs = enumerate_as_polys(p, bound / p);
    for (const auto& f : polys) {
      const auto c = as_reduce(f);
      EXPECT_EQ(as_reduce(c.representative), c);
      for (const auto& g : gs) {
        ASPoly padded{p, std::vector<int>(bound + 1, 0)};
        std::copy(g.coeffs.begin(), g.coeffs.end(), padded.coeffs.begin());
        EXPECT_EQ(as_reduce(as_add(f, wp(padded, bound))), c);
      }
    }
  }
}

TEST(AsReduce, OrderIndependent) {
  std::mt19937_64 rng(12);
  for (int p : {2, 3}) {
    for (const auto& f : enumerate_as_polys(p, p == 2 ? 10 : 6)) {
      ASSERT_EQ(reduce_in_random_order(f, rng), as_reduce(f).representative);
    }
  }
}

TEST(CountAsCovers, Examples) {
  const auto c23 = count_as_covers(2, 3);
  EXPECT_EQ(c23.formula, 3u);
  EXPECT_EQ(c23.brute_force, 3u);
  EXPECT_EQ(c23.classes, 4u);
  EXPECT_EQ(count_as_covers(2, 1).brute_force, 1u);
  EXPECT_EQ(count_as_covers(3, 2).brute_force, 4u);
  EXPECT_EQ(count_as_covers(2, 0).brute_force, 0u);
}

TEST(CountAsCovers, AgreesWithCanonicalOracle) {
  for (int p : {2, 3, 5}) {
    for (int bound = 0; bound <= (p == 2 ? 12 : p == 3 ? 8 : 6); ++bound) {
      EXPECT_EQ(count_as_covers(p, bound).brute_force, oracle::cover_count_canonical(p, bound))
          << "p=" << p << " D=" << bound;
    }
  }
}

TEST(CountAsCovers, DomainAndCapErrors) {
  EXPECT_THROW(count_as_covers(7, 2), DomainError);
  EXPECT_THROW(count_as_covers(2, 13), DomainError);
  EXPECT_THROW(count_as_covers(5, 12, 1000), ResourceError);
}

TEST(CountWittIndexP, Examples) {
  const auto w23 = count_witt_index_p(2, 3);
  EXPECT_EQ(w23.count, 3u);
  EXPECT_EQ(w23.p_torsion, 4u);
  ASSERT_TRUE(w23.subgroup_tally.has_value());
  EXPECT_EQ(*w23.subgroup_tally, 3u);
  EXPECT_EQ(count_witt_index_p(2, 1).count, 1u);
  const auto w32 = count_witt_index_p(3, 2);
  EXPECT_EQ(w32.count, 4u);
  EXPECT_EQ(w32.p_torsion, 9u);
}

TEST(CountWittIndexP, AgreesWithSeriesOracle) {
  for (int p : {2, 3, 5}) {
    for (int d = 1; d <= (p == 2 ? 10 : p == 3 ? 6 : 4); ++d) {
      const auto w = count_witt_index_p(p, d, 0);
      EXPECT_EQ(w.p_torsion - 1, oracle::witt_order_p_elements(p, d)) << "p=" << p << " d=" << d;
    }
  }
}

TEST(CountWittIndexP, LatticeTallyAgreesWhenRun) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 4}, {5, 2}}) {
    const auto w = count_witt_index_p(p, d, 729);
    ASSERT_TRUE(w.subgroup_tally.has_value()) << p << " " << d;
    EXPECT_EQ(*w.subgroup_tally, w.count);
  }
}

TEST(MatchFiltrations, Examples) {
  const auto rows2 = match_filtrations(2, 4);
  ASSERT_EQ(rows2.size(), 4u);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected2 = {{1, 1}, {1, 1}, {3, 3}, {3, 3}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows2[i].degree, static_cast<int>(i) + 1);
    EXPECT_EQ(std::make_pair(rows2[i].as_count, rows2[i].witt_count), expected2[i]);
    EXPECT_TRUE(rows2[i].equal());
  }
  const auto rows3 = match_filtrations(3, 2);
  ASSERT_EQ(rows3.size(), 2u);
  EXPECT_EQ(rows3[0].as_count, 1u);
  EXPECT_EQ(rows3[1].as_count, 4u);
  EXPECT_EQ(rows3[1].witt_count, 4u);
  const auto rows0 = match_filtrations(2, 0);
  ASSERT_EQ(rows0.size(), 1u);
  EXPECT_EQ(rows0[0].as_count, 0u);
  EXPECT_EQ(rows0[0].witt_count, 0u);
  EXPECT_TRUE(rows0[0].equal());
}

TEST(MatchFiltrations, EqualOverTestedRange) {
  for (auto [p, dmax] : std::vector<std::pair<int, int>>{{2, 8}, {3, 5}, {5, 3}}) {
    for (const auto& row : match_filtrations(p, dmax)) EXPECT_TRUE(row.equal()) << "p=" << p << " D=" << row.degree;
  }
}

TEST(TameCount, Examples) {
  EXPECT_EQ(tame_count(2), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(tame_count(4), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(tame_count(9), (std::vector<std::uint64_t>{1, 2, 4, 8}));
}

TEST(TameCount, DivisorsOfQMinusOne) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 97, 121, 125, 243, 256}) {
    EXPECT_EQ(tame_count(q), oracle::divisors(q - 1)) << "q=" << q;
  }
  EXPECT_THROW(tame_count(6), DomainError);
  EXPECT_THROW(tame_count(1), DomainError);
}
