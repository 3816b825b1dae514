// Copyright 2026 The SNM Authors
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

#include "snm/growth.h"

#include <gtest/gtest.h>

#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "snm/metrics.h"
#include "test_support.h"

namespace snm {
namespace {

Instance ComparisonInstance(std::size_t target) {
  Instance in{.alphabet = Alphabet::Range('A', 'T')};
  in.initial = {Structure("ABCDEFGHILMN")};
  in.probs = {1, 0, 0, 0};
  in.distance = {2, 2, nullptr};
  in.target_nodes = target;
  return in;
}

Instance MixedInstance(std::size_t target, uint64_t seed) {
  Instance in{.alphabet = Alphabet("ATC")};
  in.initial = {Structure("ATCATCTCATCACT"), Structure("ATCATCTCATCACC")};
  in.probs = {0.4, 0.2, 0.1, 0.3};
  in.distance = {2, 1, std::make_shared<const MatchTable>(ParseMatchFile(
                           "AA = TT\nAT =\nCA = AC\n", 2, in.alphabet))};
  in.target_nodes = target;
  in.seed = seed;
  return in;
}

// Every pair: edge present exactly when the structures are within range.
void ExpectDistanceComplete(const Network& net, const DistanceConfig& cfg) {
  for (NodeId u = 0; u < net.num_nodes(); ++u) {
    for (NodeId v = u + 1; v < net.num_nodes(); ++v) {
      ASSERT_EQ(net.HasEdge(u, v),
                WithinMaxDistance(*net.structure(u), *net.structure(v), cfg))
          << u << " " << v;
    }
  }
}

void ExpectDistinctStructures(const Network& net) {
  std::unordered_set<Structure> seen;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    ASSERT_TRUE(seen.insert(*net.structure(v)).second);
  }
}

TEST(GrowIncrementalTest, TargetEqualToInitialDoesNothing) {
  Instance in = ComparisonInstance(1);
  Rng rng(1);
  const auto r = GrowIncremental(in, rng);
  EXPECT_EQ(r.network.num_nodes(), 1u);
  EXPECT_EQ(r.network.num_edges(), 0u);
  EXPECT_EQ(r.trace.attempts, 0u);
  EXPECT_FALSE(r.saturated);
}

TEST(GrowIncrementalTest, EdgesMirrorDistanceExhaustively) {
  for (uint64_t seed : {1, 2, 3}) {
    Instance in = MixedInstance(500, seed);
    Rng rng(seed);
    const auto r = GrowIncremental(in, rng);
    ASSERT_EQ(r.network.num_nodes(), 500u);
    ExpectDistanceComplete(r.network, in.distance);
    ExpectDistinctStructures(r.network);
  }
  Instance in = ComparisonInstance(500);
  Rng rng(9);
  const auto r = GrowIncremental(in, rng);
  ExpectDistanceComplete(r.network, in.distance);
}

TEST(GrowIncrementalTest, AttemptAccounting) {
  Instance in = MixedInstance(300, 4);
  Rng rng(4);
  const auto r = GrowIncremental(in, rng);
  const auto& t = r.trace;
  EXPECT_EQ(t.accepted + t.rejected_duplicate + t.rejected_isolated +
                t.rejected_edit_failed,
            t.attempts);
  EXPECT_EQ(t.accepted + in.initial.size(), r.network.num_nodes());
  EXPECT_LE(t.attempts, in.EffectiveMaxAttempts());
  EXPECT_GT(t.rejected_isolated, 0u);
}

TEST(GrowIncrementalTest, SingleInitialGivesConnectedNetwork) {
  Instance in = ComparisonInstance(800);
  Rng rng(5);
  const auto r = GrowIncremental(in, rng);
  EXPECT_DOUBLE_EQ(LargestComponentFraction(r.network), 1.0);
}

TEST(GrowIncrementalTest, NewNodesNeverIsolatedAtInsertion) {
  Instance in = MixedInstance(300, 6);
  Rng rng(6);
  const auto r = GrowIncremental(in, rng);
  // A node's earliest neighbors predate it, so each accepted node must have
  // a neighbor with a smaller id.
  for (NodeId v = static_cast<NodeId>(in.initial.size());
       v < r.network.num_nodes(); ++v) {
    bool older = false;
    for (NodeId w : r.network.Neighbors(v)) older |= w < v;
    ASSERT_TRUE(older) << v;
    ASSERT_TRUE(r.network.provenance(v).parent.has_value());
  }
}

TEST(GrowIncrementalTest, Deterministic) {
  const Instance in = MixedInstance(400, 8);
  const auto a = Grow(in);
  const auto b = Grow(in);
  ASSERT_EQ(a.network.num_nodes(), b.network.num_nodes());
  for (NodeId v = 0; v < a.network.num_nodes(); ++v) {
    ASSERT_EQ(a.network.structure(v), b.network.structure(v));
  }
  EXPECT_EQ(a.network.Edges(), b.network.Edges());
}

TEST(GrowIncrementalTest, SaturatesWhenEveryEditFails) {
  Instance in{.alphabet = Alphabet("AB")};
  in.initial = {Structure("A")};
  in.probs = {0, 0, 1, 0};
  in.target_nodes = 5;
  in.max_attempts = 40;
  Rng rng(1);
  const auto r = GrowIncremental(in, rng);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.network.num_nodes(), 1u);
  EXPECT_EQ(r.trace.rejected_edit_failed, 40u);
}

TEST(GrowIncrementalTest, CheckpointsEveryInterval) {
  Instance in = ComparisonInstance(1000);
  Rng rng(2);
  std::vector<std::size_t> seen;
  GrowthOptions options{.checkpoint_interval = 250,
                        .on_checkpoint = [&](const Network& net) {
                          seen.push_back(net.num_nodes());
                        }};
  const auto r = GrowIncremental(in, rng, options);
  EXPECT_EQ(seen, (std::vector<std::size_t>{250, 500, 750, 1000}));
  ASSERT_EQ(r.trace.checkpoints.size(), 4u);
  for (std::size_t i = 1; i < r.trace.checkpoints.size(); ++i) {
    EXPECT_GE(r.trace.checkpoints[i].attempts,
              r.trace.checkpoints[i - 1].attempts);
  }
}

TEST(InstanceTest, ValidationErrors) {
  Instance in = ComparisonInstance(10);
  in.initial.push_back(in.initial.front());
  EXPECT_THROW(in.Validate(), std::invalid_argument);

  in = ComparisonInstance(10);
  in.target_nodes = 0;
  EXPECT_THROW(in.Validate(), std::invalid_argument);

  in = ComparisonInstance(10);
  in.max_attempts = 5;
  EXPECT_THROW(in.Validate(), std::invalid_argument);

  in = ComparisonInstance(10);
  in.probs = {0.5, 0, 0, 0};
  EXPECT_THROW(in.Validate(), std::invalid_argument);

  in = ComparisonInstance(10);
  in.initial.clear();
  EXPECT_THROW(in.Validate(), std::invalid_argument);
}

TEST(GrowBatchTest, TargetEqualToInitialMatchesIncrementalSeeding) {
  Instance in = MixedInstance(2, 3);
  in.mode = GrowthMode::kBatch;
  Rng a(3), b(3);
  const auto batch = GrowBatch(in, a);
  const auto inc = GrowIncremental(in, b);
  EXPECT_EQ(batch.network.num_nodes(), inc.network.num_nodes());
  EXPECT_EQ(batch.network.Edges(), inc.network.Edges());
}

TEST(GrowBatchTest, FarApartInitialsWithNoDerivedNodesVanish) {
  Instance in{.alphabet = Alphabet("AB")};
  in.initial = {Structure("A"), Structure("B")};
  in.probs = {0, 0, 1, 0};  // deletion from length 1 always fails
  in.distance = {1, 0, nullptr};
  in.target_nodes = 3;
  in.max_attempts = 10;
  in.mode = GrowthMode::kBatch;
  Rng rng(1);
  const auto r = GrowBatch(in, rng);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.network.num_nodes(), 0u);
}

TEST(GrowBatchTest, RetainedNodesAreCompleteAndNotIsolated) {
  Instance in = MixedInstance(300, 12);
  in.mode = GrowthMode::kBatch;
  Rng rng(12);
  const auto r = GrowBatch(in, rng);
  ExpectDistanceComplete(r.network, in.distance);
  ExpectDistinctStructures(r.network);
  for (NodeId v = 0; v < r.network.num_nodes(); ++v) {
    ASSERT_GT(r.network.Degree(v), 0u);
  }
}

TEST(GrowBatchTest, SingleMutationTemplateSaturates) {
  // One template, mutation only: 12 positions * 19 symbols reachable.
  Instance in = ComparisonInstance(3000);
  in.mode = GrowthMode::kBatch;
  in.max_attempts = 20000;
  Rng rng(1);
  const auto r = GrowBatch(in, rng);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.network.num_nodes(), 1u + 12u * 19u);
}

TEST(PruneTest, ZeroIsIdentity) {
  const Network star = testing::Star(6);
  const Network out = PruneLowDegree(star, 0);
  EXPECT_EQ(out.Edges(), star.Edges());
  EXPECT_TRUE(out.distance_complete());
}

TEST(PruneTest, SinglePassOnStar) {
  const Network out = PruneLowDegree(testing::Star(6), 2);
  ASSERT_EQ(out.num_nodes(), 1u);
  EXPECT_EQ(out.Degree(0), 0u);
  EXPECT_FALSE(out.distance_complete());
}

TEST(PruneTest, KeepsStructuresDistinct) {
  Instance in = ComparisonInstance(600);
  in.prune_min_degree = 8;
  const auto r = Grow(in);
  ExpectDistinctStructures(r.network);
  EXPECT_LT(r.network.num_nodes(), 600u);
  EXPECT_FALSE(r.network.distance_complete());
}

}  // namespace
}  // namespace snm
