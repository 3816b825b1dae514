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

#ifndef SNM_GROWTH_H_
#define SNM_GROWTH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "snm/distance.h"
#include "snm/network.h"
#include "snm/random.h"
#include "snm/structure.h"

namespace snm {

enum class GrowthMode { kIncremental, kBatch };

// Full parameter set of one structured-node run.
struct Instance {
  Alphabet alphabet;
  std::vector<Structure> initial;
  EditProbabilities probs;
  DistanceConfig distance;
  std::size_t target_nodes = 1;
  // 0 selects the default of 50 * target_nodes.
  std::size_t max_attempts = 0;
  GrowthMode mode = GrowthMode::kIncremental;
  std::size_t prune_min_degree = 0;
  uint64_t seed = 1;
  std::size_t max_structure_length = kDefaultMaxStructureLength;

  std::size_t EffectiveMaxAttempts() const {
    return max_attempts == 0 ? 50 * target_nodes : max_attempts;
  }

  // Throws std::invalid_argument naming the violated constraint.
  void Validate() const;
};

struct Checkpoint {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  uint64_t attempts = 0;
};

struct GrowthTrace {
  std::vector<Checkpoint> checkpoints;
  uint64_t attempts = 0;
  uint64_t accepted = 0;
  uint64_t rejected_duplicate = 0;
  uint64_t rejected_isolated = 0;
  uint64_t rejected_edit_failed = 0;
};

struct GrowthResult {
  Network network;
  GrowthTrace trace;
  // The attempt budget ran out before target_nodes distinct structures
  // were reached.
  bool saturated = false;
};

struct GrowthOptions {
  // Record a checkpoint (and call on_checkpoint) each time the node count
  // reaches a multiple of this value. 0 records only the final state.
  std::size_t checkpoint_interval = 0;
  // Additional node counts at which to checkpoint.
  std::vector<std::size_t> checkpoint_at;
  std::function<void(const Network&)> on_checkpoint;

  bool IsCheckpoint(std::size_t nodes) const;
};

// Seeds the initial nodes, then repeatedly edits a uniformly chosen node's
// structure and keeps the result only if it is new and has at least one
// neighbor within the maximum distance.
GrowthResult GrowIncremental(const Instance& instance, Rng& rng,
                             const GrowthOptions& options = {});

// Derives every new structure from the initial nodes only, links all pairs
// in one pass, then drops nodes left without neighbors. With target_nodes
// equal to the number of initial nodes this is the incremental seeding.
GrowthResult GrowBatch(const Instance& instance, Rng& rng,
                       const GrowthOptions& options = {});

// Runs the instance's mode with Rng(instance.seed) and applies
// prune_min_degree.
GrowthResult Grow(const Instance& instance, const GrowthOptions& options = {});

// Single pass: degrees are taken from `net` as given and every node below
// `min_degree` is removed with its edges. Not iterated to a fixpoint.
Network PruneLowDegree(const Network& net, std::size_t min_degree);

}  // namespace snm

#endif  // SNM_GROWTH_H_
