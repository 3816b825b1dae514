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

#ifndef SNM_BA_MODEL_H_
#define SNM_BA_MODEL_H_

#include <cstddef>
#include <cstdint>

#include "snm/growth.h"
#include "snm/network.h"
#include "snm/random.h"

namespace snm {

// Barabasi-Albert preferential attachment baseline.
struct BAParams {
  std::size_t initial_clique = 6;
  std::size_t edges_per_node = 6;
  std::size_t target_nodes = 6;
  uint64_t seed = 1;

  void Validate() const;
};

// Starts from a complete graph on initial_clique nodes. Each new node picks
// edges_per_node distinct targets with probability proportional to degree,
// all drawn against the degrees before the node arrived. Nodes carry no
// structure. checkpoint_interval / on_checkpoint behave as in GrowIncremental.
Network GrowBA(const BAParams& params, Rng& rng,
               const GrowthOptions& options = {});

}  // namespace snm

#endif  // SNM_BA_MODEL_H_
