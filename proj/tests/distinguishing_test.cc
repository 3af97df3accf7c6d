// Copyright 2026 The nzc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nzc/distinguishing.hpp"

#include <set>
#include <vector>

#include "brute_force.hpp"
#include "gtest/gtest.h"

namespace nzc {
namespace {

Labeling colour_masks(const NzcGraph& g, const std::vector<std::uint32_t>& masks) {
  std::vector<std::uint32_t> c(g.size(), 2);
  for (auto m : masks) c[g.vertex_with_mask(m)] = 1;
  return Labeling(std::move(c), 2);
}

TEST(LabelingTest, RejectsBadColours) {
  EXPECT_THROW(Labeling({1, 3}, 2), Error);
  EXPECT_THROW(Labeling({0, 1}, 2), Error);
  EXPECT_THROW(Labeling({1, 1}, 3), Error);
  EXPECT_EQ(Labeling({1, 2, 2}, 2).colours_used(), 2u);
}

TEST(IsDistinguishingTest, TrivialLabelings) {
  for (int n = 2; n <= 5; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto grp = aut_group_structural(g);
    EXPECT_TRUE(is_distinguishing(g, grp, Labeling::all_distinct(g.size())));
    EXPECT_FALSE(is_distinguishing(g, grp, Labeling::constant(g.size())));
  }
}

TEST(IsDistinguishingTest, AllRepresentationsAgree) {
  const auto g = NzcGraph::build({4, 2});
  const auto listed = aut_group_structural(g);
  const auto lazy = AutGroup::structural(4);
  const auto chain = aut_group_oracle(g, {40, 1});
  ASSERT_EQ(chain.kind(), AutGroup::Kind::kChain);
  const std::vector<Labeling> cases{
      Labeling::constant(15), Labeling::all_distinct(15), two_colouring_q2(g),
      colour_masks(g, {1}), colour_masks(g, {1, 2}), colour_masks(g, {1, 2, 3})};
  for (const auto& f : cases) {
    const bool expected = is_distinguishing(g, listed, f);
    EXPECT_EQ(is_distinguishing(g, lazy, f), expected);
    EXPECT_EQ(is_distinguishing(g, chain, f), expected);
  }
}

TEST(IsDistinguishingTest, SizeMismatch) {
  const auto g = NzcGraph::build({3, 2});
  EXPECT_THROW(is_distinguishing(g, aut_group_structural(g), Labeling::constant(6)), Error);
}

TEST(TwoColouringTest, FourDimensions) {
  const auto g = NzcGraph::build({4, 2});
  const auto f = two_colouring_q2(g);
  EXPECT_EQ(f.t(), 2u);
  EXPECT_EQ(f[g.basis_vertex(1)], 1u);
  EXPECT_EQ(f[g.basis_vertex(2)], 1u);
  EXPECT_EQ(f[g.basis_vertex(3)], 2u);
  EXPECT_EQ(f[g.basis_vertex(4)], 2u);
  EXPECT_TRUE(is_distinguishing(g, aut_group_structural(g), f));
}

TEST(TwoColouringTest, PairsOfConsecutiveBasisVectors) {
  const auto g = NzcGraph::build({6, 2});
  const auto f = two_colouring_q2(g);
  EXPECT_EQ(f[g.vertex_with_mask(0b000011)], 1u);
  EXPECT_EQ(f[g.vertex_with_mask(0b001100)], 1u);
  EXPECT_EQ(f[g.vertex_with_mask(0b000101)], 2u);
  EXPECT_EQ(f[g.vertex_with_mask(0b100001)], 2u);
}

TEST(TwoColouringTest, ComplementRuleMarksNearlyFullSkeletons) {
  const auto g = NzcGraph::build({5, 2});
  const auto f = two_colouring_q2(g, TnMinus1Rule::kComplement);
  EXPECT_EQ(f[g.vertex_with_mask(0b11110)], 1u);
  EXPECT_EQ(f[g.vertex_with_mask(0b11011)], 1u);
  EXPECT_EQ(f[g.vertex_with_mask(0b10111)], 2u);
  const auto lit = two_colouring_q2(g);
  for (VertexIndex u : g.t_class(4)) EXPECT_EQ(lit[u], 2u);
}

TEST(TwoColouringTest, DistinguishingForBothRules) {
  for (int n = 3; n <= 8; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto grp = aut_group_structural(g);
    EXPECT_TRUE(is_distinguishing(g, grp, two_colouring_q2(g))) << n;
    EXPECT_TRUE(is_distinguishing(g, grp, two_colouring_q2(g, TnMinus1Rule::kComplement))) << n;
  }
}

TEST(TwoColouringTest, Preconditions) {
  EXPECT_THROW(two_colouring_q2(NzcGraph::build({2, 2})), Error);
  EXPECT_THROW(two_colouring_q2(NzcGraph::build({3, 3})), Error);
}

TEST(TallyTest, FourDimensions) {
  const auto g = NzcGraph::build({4, 2});
  const auto rep = destroyed_transpositions(g, two_colouring_q2(g));
  EXPECT_EQ(rep.total, 6u);
  EXPECT_EQ(rep.classes[0].tally, 4u);
  EXPECT_TRUE(rep.covers_all());
}

TEST(TallyTest, ComplementRuleMatchesClosedForms) {
  const auto g = NzcGraph::build({5, 2});
  const auto rep = destroyed_transpositions(g, two_colouring_q2(g, TnMinus1Rule::kComplement));
  EXPECT_EQ(rep.classes[0].tally, 6u);
  EXPECT_EQ(rep.classes[1].tally, 3u);
  EXPECT_EQ(rep.classes[2].tally, 1u);
  EXPECT_TRUE(rep.tallies_match());
  EXPECT_TRUE(rep.covers_all());
  for (int n = 3; n <= 10; ++n) {
    const auto gn = NzcGraph::build({n, 2});
    EXPECT_TRUE(destroyed_transpositions(gn, two_colouring_q2(gn, TnMinus1Rule::kComplement)).tallies_match())
        << n;
  }
}

TEST(TallyTest, LiteralRuleGivesNothingOnNearlyFullClass) {
  for (int n = 4; n <= 8; ++n) {
    const auto g = NzcGraph::build({n, 2});
    const auto rep = destroyed_transpositions(g, two_colouring_q2(g));
    EXPECT_EQ(rep.classes[1].tally, 0u) << n;
    EXPECT_FALSE(rep.tallies_match()) << n;
    EXPECT_TRUE(rep.covers_all()) << n;
  }
}

TEST(TallyTest, ConstantLabelingBreaksNothing) {
  const auto g = NzcGraph::build({3, 2});
  const auto rep = destroyed_transpositions(g, Labeling::constant(7));
  for (const auto& c : rep.classes) EXPECT_EQ(c.tally, 0u);
  EXPECT_EQ(rep.uncovered.size(), 3u);
}

TEST(TallyTest, ClosedForms) {
  EXPECT_EQ(expected_tally_t1(4), 4u);
  EXPECT_EQ(expected_tally_t1(5), 6u);
  EXPECT_EQ(expected_tally_tn1(5), 3u);
  EXPECT_EQ(expected_tally_t2(5), 1u);
  EXPECT_EQ(expected_tally_t2(8), 6u);
  for (int n = 3; n <= 12; ++n) {
    EXPECT_LE(expected_tally_t1(n) + expected_tally_tn1(n) + expected_tally_t2(n), binomial(n, 2)) << n;
  }
}

TEST(DiffLabelsTest, ThreeDimensions) {
  const auto g = NzcGraph::build({3, 2});
  const auto grp = aut_group_structural(g);
  const auto f = colour_masks(g, {0b101});
  EXPECT_TRUE(check_lem_diff_labels(g, grp, f, g.vertex_with_mask(0b101), g.vertex_with_mask(0b110), 1, 2));
}

TEST(DiffLabelsTest, DisjointPair) {
  const auto g = NzcGraph::build({4, 2});
  const auto grp = aut_group_structural(g);
  const auto f = colour_masks(g, {0b0011});
  EXPECT_TRUE(check_lem_diff_labels(g, grp, f, g.vertex_with_mask(0b0011), g.vertex_with_mask(0b1100), 1, 3));
}

TEST(DiffLabelsTest, ExchangeCanStillPreserveLabeling) {
  // (1 3) swaps {1,2} and {2,3}, which share colour 1, so f survives.
  const auto g = NzcGraph::build({4, 2});
  const auto grp = aut_group_structural(g);
  const auto f = colour_masks(g, {0b0011, 0b0110});
  EXPECT_FALSE(check_lem_diff_labels(g, grp, f, g.vertex_with_mask(0b0011), g.vertex_with_mask(0b1100), 1, 3));
  const auto swap13 = extend_basis_permutation(g, BasisPermutation::transposition(4, 1, 3));
  EXPECT_TRUE(preserves(swap13.perm(), f));
}

TEST(DiffLabelsTest, Preconditions) {
  const auto g = NzcGraph::build({4, 2});
  const auto grp = aut_group_structural(g);
  const auto f = colour_masks(g, {0b0011});
  const auto u = g.vertex_with_mask(0b0011);
  EXPECT_THROW(check_lem_diff_labels(g, grp, f, u, g.vertex_with_mask(0b0100), 1, 3), Error);
  EXPECT_THROW(check_lem_diff_labels(g, grp, f, u, g.vertex_with_mask(0b1100), 1, 1), Error);
  EXPECT_THROW(check_lem_diff_labels(g, grp, f, u, g.vertex_with_mask(0b1100), 3, 1), Error);
  EXPECT_THROW(check_lem_diff_labels(g, grp, Labeling::constant(15), u, g.vertex_with_mask(0b1100), 1, 3),
               Error);
}

TEST(DistNumberTest, BinarySmall) {
  for (int n : {2, 3}) {
    const auto g = NzcGraph::build({n, 2});
    const auto res = dist_number(g, aut_group_structural(g));
    EXPECT_EQ(res.method, DistResult::Method::kExact);
    EXPECT_EQ(res.value(), 2u) << n;
    EXPECT_TRUE(is_distinguishing(g, aut_group_structural(g), res.witness));
  }
}

TEST(DistNumberTest, BinaryMatchesBruteForce) {
  const auto g = NzcGraph::build({3, 2});
  const auto brute = testing::brute_force_automorphisms(testing::tiny_graph(3, 2));
  EXPECT_EQ(dist_number(g, aut_group_structural(g)).upper, testing::brute_force_dist(brute, 7));
}

TEST(DistNumberTest, TernaryPlaneExact) {
  const auto g = NzcGraph::build({2, 3});
  const auto res = dist_number(g, aut_group_oracle(g));
  EXPECT_EQ(res.method, DistResult::Method::kExact);
  const auto brute = testing::brute_force_automorphisms(testing::tiny_graph(2, 3));
  EXPECT_EQ(res.value(), testing::brute_force_dist(brute, 8));
  EXPECT_EQ(res.value(), 4u);
  EXPECT_TRUE(testing::brute_force_distinguishing(brute, res.witness.colours()));
}

TEST(DistNumberTest, TernarySpaceBounded) {
  const auto g = NzcGraph::build({3, 3});
  const auto grp = aut_group_oracle(g);
  ASSERT_EQ(grp.kind(), AutGroup::Kind::kChain);
  const auto res = dist_number(g, grp);
  EXPECT_EQ(res.method, DistResult::Method::kBounded);
  EXPECT_EQ(res.lower, 8u);
  EXPECT_EQ(res.upper, 8u);
  EXPECT_EQ(res.upper_source, "constructive");
}

TEST(DistNumberTest, LargeBinaryUsesTwoColouring) {
  const auto g = NzcGraph::build({6, 2});
  const auto res = dist_number(g, aut_group_structural(g));
  EXPECT_EQ(res.value(), 2u);
  EXPECT_EQ(res.upper_source, "two-colouring");
}

TEST(DistNumberTest, LowerNeverExceedsUpper) {
  for (auto [n, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}) {
    const auto g = NzcGraph::build({n, q});
    const auto grp = q == 2 ? aut_group_structural(g) : aut_group_oracle(g);
    const auto res = dist_number(g, grp);
    EXPECT_LE(res.lower, res.upper) << n << "," << q;
    EXPECT_TRUE(is_distinguishing(g, grp, res.witness)) << n << "," << q;
  }
}

TEST(TwinBoundTest, Examples) {
  EXPECT_EQ(twin_lower_bound(NzcGraph::build({3, 3})), 8u);
  EXPECT_EQ(twin_lower_bound(NzcGraph::build({5, 2})), 1u);
  EXPECT_EQ(twin_lower_bound(NzcGraph::build({2, 4})), 9u);
}

TEST(ConstructiveTest, TernaryPlaneIsDistinguishing) {
  const auto g = NzcGraph::build({2, 3});
  const auto f = q3_constructive_labeling(g);
  EXPECT_EQ(f.t(), 4u);
  const auto brute = testing::brute_force_automorphisms(testing::tiny_graph(2, 3));
  EXPECT_TRUE(testing::brute_force_distinguishing(brute, f.colours()));
}

TEST(ConstructiveTest, InjectiveOnTwinSets) {
  const auto g = NzcGraph::build({3, 3});
  const auto f = q3_constructive_labeling(g);
  EXPECT_EQ(f.t(), 8u);
  for (const auto& twins : g.twin_sets()) {
    std::set<std::uint32_t> seen;
    for (auto v : twins) seen.insert(f[v]);
    EXPECT_EQ(seen.size(), twins.size());
  }
  EXPECT_TRUE(is_distinguishing_by_search(g, f));
}

TEST(ConstructiveTest, RejectsBinary) {
  EXPECT_THROW(q3_constructive_labeling(NzcGraph::build({3, 2})), Error);
}

TEST(TwinBlockTest, NotDistinguishingOnTernaryPlane) {
  const auto g = NzcGraph::build({2, 3});
  const auto f = twin_block_labeling(g);
  EXPECT_EQ(f.colours(), (std::vector<std::uint32_t>{1, 2, 1, 1, 2, 2, 3, 4}));
  const auto brute = testing::brute_force_automorphisms(testing::tiny_graph(2, 3));
  EXPECT_FALSE(testing::brute_force_distinguishing(brute, f.colours()));
  EXPECT_FALSE(is_distinguishing(g, aut_group_oracle(g), f));
}

}  // namespace
}  // namespace nzc
