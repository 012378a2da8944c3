#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "schubert/bijection.hpp"
#include "schubert/domination.hpp"
#include "schubert/full_bijection.hpp"
#include "support.hpp"

using namespace schubert;
using testing_support::idx;
using testing_support::mono;

namespace {

const GrassmannIndex v12 = idx(4, {1, 2});

RootMonomial sq(const GrassmannIndex& v, std::vector<Root> elems) { return mono(v, std::move(elems)); }

std::vector<RootMonomial> enumerate_positive_dominated(const GrassmannIndex& v, const GrassmannIndex& w, int deg) {
  std::vector<RootMonomial> out;
  for (const auto& terms : oracle::monomials(positive_roots(v), deg)) {
    RootMonomial t(v, terms);
    if (dominates_monomial(w, v, t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST(BlockDecompose, StrataOfTheSevenBlockMonomial) {
  const auto bd = block_decompose(testing_support::seven_block_monomial());
  ASSERT_EQ(bd.strata.size(), 4u);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(bd.strata[j].size(), 2u) << "stratum " << j + 1;
  ASSERT_EQ(bd.strata[2].size(), 2u);
  EXPECT_EQ(bd.strata[2][0].elements, (std::vector<Root>{{10, 8}, {11, 8}}));
  EXPECT_EQ(bd.strata[2][0].summary(), (Root{11, 8}));
  EXPECT_EQ(bd.strata[2][1].elements, (std::vector<Root>{{21, 18}, {21, 18}, {22, 18}}));
  EXPECT_EQ(bd.strata[2][1].summary(), (Root{22, 18}));
  ASSERT_EQ(bd.strata[3].size(), 1u);
  EXPECT_EQ(bd.strata[3][0].elements, (std::vector<Root>{{10, 9}, {10, 9}, {10, 9}}));
  EXPECT_EQ(bd.strata[3][0].summary(), (Root{10, 9}));
  EXPECT_EQ(bd.block_count(), 7u);
}

TEST(BlockDecompose, RejectsEmptyAndNonPositive) {
  EXPECT_THROW(block_decompose(RootMonomial(v12)), InvalidInput);
  const auto v = idx(4, {1, 3});
  EXPECT_THROW(block_decompose(sq(v, {{2, 3}})), InvalidInput);
}

TEST(Pi, SevenBlockMonomialGivesSevenElementDistinguishedSet) {
  const auto m = testing_support::seven_block_monomial();
  const PiResult r = pi(m);
  const auto s = distinguished_of(r.w, m.ambient());
  EXPECT_EQ(std::vector<Root>(s.elements().begin(), s.elements().end()),
            (std::vector<Root>{{10, 9}, {11, 8}, {12, 4}, {13, 1}, {22, 18}, {23, 16}, {25, 14}}));
  EXPECT_EQ(v_degree(r.w, m.ambient()) + r.residual.degree(), m.degree());
}

TEST(Pi, SmallExamples) {
  const PiResult a = pi(sq(v12, {{4, 1}, {3, 2}}));
  EXPECT_EQ(a.w, idx(4, {3, 4}));
  EXPECT_TRUE(a.residual.empty());

  const PiResult b = pi(sq(v12, {{3, 1}, {3, 1}}));
  EXPECT_EQ(b.w, idx(4, {2, 3}));
  EXPECT_EQ(b.residual, sq(v12, {{3, 1}}));
}

TEST(PieceDecompose, Examples) {
  const auto p = piece_decompose(idx(4, {2, 3}), v12, sq(v12, {{3, 1}}));
  ASSERT_EQ(p.strata.size(), 1u);
  ASSERT_EQ(p.strata[0].size(), 1u);
  EXPECT_EQ(p.strata[0][0].anchor, (Root{3, 1}));
  EXPECT_EQ(p.strata[0][0].elements, (std::vector<Root>{{3, 1}}));

  const auto q = piece_decompose(idx(4, {2, 4}), v12, sq(v12, {{3, 2}}));
  ASSERT_EQ(q.strata.size(), 1u);
  EXPECT_EQ(q.strata[0][0].anchor, (Root{4, 1}));
  EXPECT_EQ(q.strata[0][0].elements, (std::vector<Root>{{3, 2}}));

  const auto e = piece_decompose(idx(4, {3, 4}), v12, RootMonomial(v12));
  for (const auto& stratum : e.strata)
    for (const auto& piece : stratum) EXPECT_TRUE(piece.elements.empty());
}

TEST(PieceDecompose, Errors) {
  EXPECT_THROW(piece_decompose(idx(4, {2, 4}), v12, sq(v12, {{4, 1}, {3, 2}})), InvalidInput);
  EXPECT_THROW(piece_decompose(v12, v12, sq(v12, {{3, 1}})), InvalidInput);
  EXPECT_THROW(piece_decompose(v12, idx(4, {2, 4}), RootMonomial(idx(4, {2, 4}))), InvalidInput);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(idx(4, {3, 4}), v12, RootMonomial(v12)), sq(v12, {{4, 1}, {3, 2}}));
  EXPECT_EQ(phi(idx(4, {2, 3}), v12, sq(v12, {{3, 1}})), sq(v12, {{3, 1}, {3, 1}}));
  EXPECT_EQ(phi(idx(4, {2, 4}), v12, sq(v12, {{3, 2}})), sq(v12, {{3, 1}, {4, 2}}));
  const PiResult back = pi(sq(v12, {{3, 1}, {4, 2}}));
  EXPECT_EQ(back.w, idx(4, {2, 4}));
  EXPECT_EQ(back.residual, sq(v12, {{3, 2}}));
}

TEST(LeastDominating, Examples) {
  EXPECT_EQ(least_dominating(RootMonomial(v12)), v12);
  EXPECT_EQ(least_dominating(sq(v12, {{4, 1}, {3, 2}})), idx(4, {3, 4}));
  EXPECT_EQ(least_dominating(sq(v12, {{3, 1}, {3, 2}, {4, 2}})), idx(4, {2, 4}));
}

TEST(PiTilde, Examples) {
  EXPECT_TRUE(pi_tilde(RootMonomial(v12)).empty());
  EXPECT_EQ(pi_tilde(sq(v12, {{4, 1}, {3, 2}})), StandardMonomial(2, 4, {idx(4, {3, 4})}));
  const StandardMonomial s = pi_tilde(sq(v12, {{3, 1}, {3, 1}}));
  EXPECT_EQ(s, StandardMonomial(2, 4, {idx(4, {2, 3}), idx(4, {2, 3})}));
  EXPECT_EQ(phi_tilde(s, v12), sq(v12, {{3, 1}, {3, 1}}));
  EXPECT_EQ(phi_tilde(StandardMonomial(2, 4, {idx(4, {3, 4})}), v12), sq(v12, {{4, 1}, {3, 2}}));
  EXPECT_TRUE(phi_tilde(StandardMonomial(2, 4), v12).empty());
}

TEST(PhiTilde, RejectsNonAntiDominated) {
  const auto v = idx(4, {2, 3});
  EXPECT_THROW(phi_tilde(StandardMonomial(2, 4, {idx(4, {3, 4}), idx(4, {1, 3})}), v), InvalidInput);
}

// All four clauses, with the least-dominator clause checked by scanning
// I(d,n); then both round trips.
TEST(Pi, ClausesAndRoundTripsExhaustivelyForSmallN) {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n)) {
        const auto pos = positive_roots(v);
        for (int deg = 1; deg <= 3; ++deg)
          for (const auto& terms : oracle::monomials(pos, deg)) {
            const RootMonomial m(v, terms);
            const PiResult r = pi(m);
            ASSERT_TRUE(bruhat_leq(v, r.w) && !(r.w == v)) << m;
            ASSERT_EQ(v_degree(r.w, v) + r.residual.degree(), m.degree()) << m;
            ASSERT_TRUE(dominates_monomial(r.w, v, r.residual)) << m;
            ASSERT_EQ(r.w, oracle::least_dominating(m)) << m;
            ASSERT_EQ(phi(r.w, v, r.residual), m) << m;
          }
      }
}

TEST(Phi, PiInvertsPhiForAllSmallPairs) {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n))
        for (const auto& w : all_indices(d, n)) {
          if (!bruhat_leq(v, w) || w == v) continue;
          for (int deg = 0; deg <= 2; ++deg)
            for (const auto& t : enumerate_positive_dominated(v, w, deg)) {
              const PiResult back = pi(phi(w, v, t));
              ASSERT_EQ(back.w, w) << t;
              ASSERT_EQ(back.residual, t) << t;
            }
        }
}

// Structural facts about the blocks: summaries of a stratum interleave as
// C_1 < R_1 < C_2 < ..., no two elements of a stratum together with its
// residual are comparable, and block elements share the depth of their
// summary.
TEST(BlockDecompose, StructuralInvariantsOnRandomMonomials) {
  std::mt19937_64 rng(4242);
  int checked = 0;
  while (checked < 1500) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const int d = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto v = oracle::random_index(rng, d, n);
    if (positive_roots(v).empty()) continue;
    const auto m = oracle::random_positive_monomial(rng, v, std::uniform_int_distribution<int>(1, 6)(rng));
    const auto bd = block_decompose(m);
    const std::vector<Root> summaries = bd.summaries();
    const auto summary_depth = oracle::depths(summaries);
    for (std::size_t j = 0; j < bd.strata.size(); ++j) {
      std::vector<Root> sums;
      std::vector<Root> both;
      for (const auto& b : bd.strata[j]) {
        sums.push_back(b.summary());
        for (const Root& x : b.elements) both.push_back(x);
        for (const Root& x : b.residual()) both.push_back(x);
        for (const Root& x : b.elements) ASSERT_EQ(oracle::depths(m.support()).at(x), summary_depth.at(b.summary()));
      }
      std::sort(sums.begin(), sums.end(), [](const Root& a, const Root& b) { return a.col < b.col; });
      for (std::size_t i = 0; i < sums.size(); ++i) {
        ASSERT_LT(sums[i].col, sums[i].row);
        if (i + 1 < sums.size()) ASSERT_LT(sums[i].row, sums[i + 1].col) << m;
      }
      for (const Root& a : both)
        for (const Root& b : both) ASSERT_FALSE(above(a, b)) << m;
    }
    ++checked;
  }
}

TEST(FullBijection, SmallExample) {
  const auto r = full_bijection(v12, idx(4, {2, 4}), 2);
  EXPECT_EQ(r.monomials, 9u);
  EXPECT_EQ(r.standard, 9u);
  EXPECT_TRUE(r.ok());
  const auto z = full_bijection(v12, idx(4, {2, 4}), 0);
  EXPECT_EQ(z.monomials, 1u);
  EXPECT_TRUE(z.ok());
}

TEST(FullBijection, SmoothPointUsesOnlyNonPositiveRoots) {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n))
        for (int m = 0; m <= 3; ++m) ASSERT_TRUE(full_bijection(v, v, m).ok()) << v << " m=" << m;
}

TEST(FullBijection, ExhaustiveUpToSixDegreeThree) {
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n))
        for (const auto& w : all_indices(d, n)) {
          if (!bruhat_leq(v, w)) continue;
          for (int m = 0; m <= 3; ++m) ASSERT_TRUE(full_bijection(v, w, m).ok()) << v << ' ' << w << " m=" << m;
        }
}
