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

#include "snm/network.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace snm {

Network::Network(std::size_t n)
    : adjacency_(n), structures_(n), provenance_(n) {}

NodeId Network::AddNode(std::optional<Structure> structure,
                        Provenance provenance) {
  if (adjacency_.size() >= std::numeric_limits<NodeId>::max()) {
    throw std::length_error("Network: too many nodes");
  }
  adjacency_.emplace_back();
  structures_.push_back(std::move(structure));
  provenance_.push_back(provenance);
  return static_cast<NodeId>(adjacency_.size() - 1);
}

bool Network::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size()
                      ? adjacency_[u]
                      : adjacency_[v];
  const NodeId other = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

bool Network::AddEdge(NodeId u, NodeId v) {
  if (u >= num_nodes() || v >= num_nodes()) {
    throw std::out_of_range("Network: edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("Network: self-loop");
  if (HasEdge(u, v)) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++num_edges_;
  return true;
}

std::vector<std::pair<NodeId, NodeId>> Network::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Network Network::InducedSubgraph(const std::vector<bool>& keep) const {
  constexpr NodeId kGone = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(num_nodes(), kGone);
  Network out;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (v < keep.size() && keep[v]) {
      Provenance p = provenance_[v];
      remap[v] = out.AddNode(structures_[v], p);
    }
  }
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (remap[v] == kGone) continue;
    auto& p = out.provenance_[remap[v]];
    if (p.parent) {
      p.parent = remap[*p.parent] == kGone ? std::nullopt
                                           : std::optional(remap[*p.parent]);
    }
    for (NodeId w : adjacency_[v]) {
      if (v < w && remap[w] != kGone) {
        out.adjacency_[remap[v]].push_back(remap[w]);
        out.adjacency_[remap[w]].push_back(remap[v]);
        ++out.num_edges_;
      }
    }
  }
  out.distance_complete_ = distance_complete_;
  return out;
}

}  // namespace snm
