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

#include "snm/ba_model.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace snm {

void BAParams::Validate() const {
  if (initial_clique < 2) {
    throw std::invalid_argument("BAParams: initial_clique must be >= 2");
  }
  if (edges_per_node < 1) {
    throw std::invalid_argument("BAParams: edges_per_node must be >= 1");
  }
  if (edges_per_node > initial_clique) {
    throw std::invalid_argument(
        "BAParams: edges_per_node must be <= initial_clique");
  }
  if (target_nodes < initial_clique) {
    throw std::invalid_argument(
        "BAParams: target_nodes must be >= initial_clique");
  }
}

Network GrowBA(const BAParams& params, Rng& rng, const GrowthOptions& options) {
  params.Validate();
  Network net;
  // Node v appears deg(v) times, so a uniform draw is degree-proportional.
  std::vector<NodeId> tickets;
  tickets.reserve(2 * (params.initial_clique * (params.initial_clique - 1) / 2 +
                       params.edges_per_node * params.target_nodes));
  auto notify = [&] {
    if (options.on_checkpoint && options.IsCheckpoint(net.num_nodes())) {
      options.on_checkpoint(net);
    }
  };

  for (std::size_t i = 0; i < params.initial_clique; ++i) {
    const NodeId v = net.AddNode();
    for (NodeId u = 0; u < v; ++u) {
      net.AddEdge(u, v);
      tickets.push_back(u);
      tickets.push_back(v);
    }
    notify();
  }

  std::vector<NodeId> targets;
  targets.reserve(params.edges_per_node);
  while (net.num_nodes() < params.target_nodes) {
    targets.clear();
    // The ticket array is left untouched until all targets are drawn;
    // repeats are redrawn, which samples without replacement.
    while (targets.size() < params.edges_per_node) {
      const NodeId t = tickets[rng.UniformIndex(tickets.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    const NodeId v = net.AddNode();
    for (NodeId t : targets) {
      net.AddEdge(v, t);
      tickets.push_back(t);
      tickets.push_back(v);
    }
    notify();
  }
  return net;
}

}  // namespace snm
