#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/duality.hpp"
#include "schubert/grassmann.hpp"
#include "support.hpp"

using namespace schubert;
using testing_support::idx;

TEST(GrassmannIndex, RejectsMalformedEntries) {
  EXPECT_THROW(idx(4, {2, 1}), InvalidInput);
  EXPECT_THROW(idx(4, {1, 1}), InvalidInput);
  EXPECT_THROW(idx(4, {0, 2}), InvalidInput);
  EXPECT_THROW(idx(4, {1, 5}), InvalidInput);
  EXPECT_THROW(idx(2, {1, 2, 3}), InvalidInput);
  EXPECT_THROW(GrassmannIndex::parse(4, "1,x"), InvalidInput);
  EXPECT_EQ(GrassmannIndex::parse(4, " 1, 3"), idx(4, {1, 3}));
}

TEST(GrassmannIndex, AllIndicesCountsBinomial) {
  EXPECT_EQ(all_indices(2, 4).size(), 6u);
  EXPECT_EQ(all_indices(3, 7).size(), 35u);
  EXPECT_EQ(all_indices(3, 6), oracle::all(3, 6));
}

TEST(Bruhat, ComponentwiseOrder) {
  EXPECT_TRUE(bruhat_leq(idx(4, {1, 2}), idx(4, {2, 4})));
  EXPECT_FALSE(bruhat_leq(idx(4, {3, 4}), idx(4, {2, 4})));
  EXPECT_FALSE(bruhat_leq(idx(4, {1, 4}), idx(4, {2, 3})));
  EXPECT_FALSE(bruhat_leq(idx(4, {2, 3}), idx(4, {1, 4})));
  EXPECT_FALSE(bruhat_comparable(idx(4, {1, 4}), idx(4, {2, 3})));
  EXPECT_THROW(bruhat_leq(idx(4, {1, 2}), idx(5, {1, 2})), InvalidInput);
  EXPECT_THROW(bruhat_leq(idx(4, {1, 2}), idx(4, {1, 2, 3})), InvalidInput);
}

TEST(VDegree, CountsNewEntries) {
  const auto v = idx(4, {1, 2});
  EXPECT_EQ(v_degree(v, v), 0);
  EXPECT_EQ(v_degree(idx(4, {1, 3}), v), 1);
  EXPECT_EQ(v_degree(idx(4, {3, 4}), v), 2);
}

TEST(Roots, PositiveAndNonPositiveParts) {
  const auto v = idx(4, {1, 3});
  EXPECT_EQ(roots(v), (std::vector<Root>{{2, 1}, {2, 3}, {4, 1}, {4, 3}}));
  EXPECT_EQ(positive_roots(v), (std::vector<Root>{{2, 1}, {4, 1}, {4, 3}}));
  EXPECT_EQ(nonpositive_roots(v), (std::vector<Root>{{2, 3}}));
  EXPECT_FALSE(is_root_of({3, 1}, v));
}

TEST(RootMonomial, ValidatesAndCanonicalises) {
  const auto v = idx(4, {1, 2});
  EXPECT_THROW(testing_support::mono(v, std::vector<Root>{{2, 1}}), InvalidInput);
  const auto m = testing_support::mono(v, std::vector<Root>{{4, 1}, {3, 2}, {4, 1}});
  EXPECT_EQ(m.degree(), 3);
  EXPECT_FALSE(m.square_free());
  EXPECT_EQ(m.support(), (std::vector<Root>{{3, 2}, {4, 1}}));
  EXPECT_EQ(m.elements(), (std::vector<Root>{{3, 2}, {4, 1}, {4, 1}}));
  EXPECT_TRUE(RootMonomial(v).empty());
}

TEST(VChain, MustStrictlyDecrease) {
  const auto v = idx(4, {1, 2});
  EXPECT_NO_THROW(VChain(v, {{4, 1}, {3, 2}}));
  EXPECT_THROW(VChain(v, {{3, 2}, {4, 1}}), InvalidInput);
  EXPECT_THROW(VChain(v, {{3, 1}, {3, 2}}), InvalidInput);
}

TEST(ApplyChain, Substitutes) {
  EXPECT_EQ(apply_chain(idx(4, {1, 2}), VChain(idx(4, {1, 2}), {{4, 1}, {3, 2}})), idx(4, {3, 4}));
  EXPECT_EQ(apply_chain(idx(4, {1, 3}), VChain(idx(4, {1, 3}), {{4, 3}})), idx(4, {1, 4}));
  EXPECT_EQ(apply_chain(idx(4, {1, 3}), VChain(idx(4, {1, 3}), {})), idx(4, {1, 3}));
}

TEST(DominatesChain, Examples) {
  const auto v = idx(4, {1, 2});
  const auto w = idx(4, {2, 4});
  EXPECT_FALSE(dominates_chain(w, v, VChain(v, {{4, 1}, {3, 2}})));
  EXPECT_TRUE(dominates_chain(w, v, VChain(v, {{4, 1}})));
  EXPECT_TRUE(dominates_chain(w, v, VChain(v, {})));
  EXPECT_THROW(dominates_chain(v, w, VChain(w, {})), InvalidInput);
}

TEST(Distinguished, LargerWorkedExample) {
  const auto s = distinguished_of(testing_support::wide_w(), testing_support::wide_v());
  EXPECT_EQ(std::vector<Root>(s.elements().begin(), s.elements().end()),
            (std::vector<Root>{{9, 3}, {16, 11}, {17, 10}, {24, 21}, {25, 20}, {26, 18}, {27, 2}}));
  EXPECT_EQ(index_of_distinguished(s.elements(), testing_support::wide_v()), testing_support::wide_w());
}

TEST(Distinguished, SmallerWorkedExample) {
  const auto s = distinguished_of(testing_support::nine_w(), testing_support::nine_v());
  EXPECT_EQ(std::vector<Root>(s.elements().begin(), s.elements().end()),
            (std::vector<Root>{{4, 3}, {6, 2}, {7, 1}, {11, 9}, {13, 8}}));
}

TEST(Distinguished, TrivialAndErrors) {
  const auto v = idx(5, {2, 4});
  EXPECT_TRUE(distinguished_of(v, v).empty());
  EXPECT_THROW(distinguished_of(idx(5, {1, 2}), v), InvalidInput);
  EXPECT_THROW(DistinguishedSet(idx(4, {1, 2}), {{3, 1}, {3, 2}}), InvalidInput);
  // (3,2),(4,1): r=3<R=4 and C=1<c=2, fine; (3,1),(4,2) violates (B*).
  EXPECT_NO_THROW(DistinguishedSet(idx(4, {1, 2}), {{3, 2}, {4, 1}}));
  EXPECT_THROW(DistinguishedSet(idx(4, {1, 2}), {{3, 1}, {4, 2}}), InvalidInput);
}

TEST(Distinguished, MatchesExhaustiveSearchForSmallN) {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d)
      for (const auto& v : all_indices(d, n))
        for (const auto& w : all_indices(d, n)) {
          if (!bruhat_leq(v, w)) continue;
          const auto s = distinguished_of(w, v);
          ASSERT_EQ(std::vector<Root>(s.elements().begin(), s.elements().end()), oracle::distinguished(w, v))
              << v << ' ' << w;
        }
}

TEST(IndexOfDistinguished, Examples) {
  const auto v = idx(4, {1, 2});
  const std::vector<Root> s{{4, 1}, {3, 2}};
  EXPECT_EQ(index_of_distinguished(s, v), idx(4, {3, 4}));
  EXPECT_EQ(index_of_distinguished(std::vector<Root>{}, v), v);
  const std::vector<Root> bad{{3, 1}, {3, 2}};
  EXPECT_THROW(index_of_distinguished(bad, v), InvalidInput);
}

TEST(Depth, SmallExamples) {
  const std::vector<Root> s{{4, 1}, {3, 2}};
  EXPECT_EQ(depth({3, 2}, s), 2);
  EXPECT_EQ(depth({4, 1}, s), 1);
  EXPECT_EQ(depth({4, 1}, std::vector<Root>{{4, 1}}), 1);
  EXPECT_THROW(depth({3, 1}, s), InvalidInput);
}

// The chains inside this distinguished set are (7,1)>(6,2)>(4,3) and
// (13,8)>(11,9), so the 2-deep elements are the tails (6,2),(4,3),(11,9).
TEST(Depth, LayersOfSmallerWorkedExample) {
  const auto s = distinguished_of(testing_support::nine_w(), testing_support::nine_v());
  const auto layers = depth_layers(s.elements());
  ASSERT_EQ(layers.max_depth(), 3);
  EXPECT_EQ(layers.layers[0], (std::vector<Root>{{4, 3}, {6, 2}, {7, 1}, {11, 9}, {13, 8}}));
  EXPECT_EQ(layers.layers[1], (std::vector<Root>{{4, 3}, {6, 2}, {11, 9}}));
  EXPECT_EQ(layers.layers[2], (std::vector<Root>{{4, 3}}));
  EXPECT_EQ(layers.strata[0], (std::vector<Root>{{7, 1}, {13, 8}}));

  const std::vector<Root> elems(s.elements().begin(), s.elements().end());
  const auto expected = oracle::depths(elems);
  for (const Root& b : elems) EXPECT_EQ(depth(b, elems), expected.at(b)) << b;
}

TEST(Depth, EmptyAndAntichain) {
  EXPECT_EQ(depth_layers(std::vector<Root>{}).max_depth(), 0);
  const std::vector<Root> anti{{3, 1}, {4, 2}, {5, 3}};
  const auto layers = depth_layers(anti);
  EXPECT_EQ(layers.max_depth(), 1);
  EXPECT_EQ(layers.strata[0], anti);
}

TEST(Duality, MirrorsIndicesAndOrder) {
  EXPECT_EQ(dual_index(1, 4), 4);
  EXPECT_THROW(dual_index(0, 4), InvalidInput);
  EXPECT_EQ(dual_grassmann(idx(4, {1, 3})), idx(4, {2, 4}));
  for (const auto& u : all_indices(3, 6)) {
    EXPECT_EQ(dual_grassmann(dual_grassmann(u)), u);
    for (const auto& y : all_indices(3, 6))
      EXPECT_EQ(bruhat_leq(u, y), bruhat_leq(dual_grassmann(y), dual_grassmann(u)));
  }
}

TEST(Duality, SendsPositiveRootsOfDualToNonPositiveRoots) {
  const auto v = idx(6, {2, 3, 5});
  const auto vs = dual_grassmann(v);
  std::vector<Root> image;
  for (const Root& r : positive_roots(vs)) image.push_back(dual_root(r, 6));
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, nonpositive_roots(v));
}
