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

#ifndef SNM_NETWORK_H_
#define SNM_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "snm/structure.h"

namespace snm {

using NodeId = uint32_t;

// How a node entered the network.
struct Provenance {
  std::optional<NodeId> parent;  // empty for initial nodes
  EditKind edit = EditKind::kMutate;
  uint64_t iteration = 0;  // attempt index at which the node was accepted
};

// Undirected simple graph. Nodes of generated networks carry a Structure;
// networks read from edge lists or built by the BA model do not.
class Network {
 public:
  Network() = default;
  // `n` structureless nodes and no edges.
  explicit Network(std::size_t n);

  NodeId AddNode(std::optional<Structure> structure = std::nullopt,
                 Provenance provenance = {});
  // Returns false if the edge already exists; throws on a self-loop or an
  // unknown endpoint.
  bool AddEdge(NodeId u, NodeId v);
  bool HasEdge(NodeId u, NodeId v) const;

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t Degree(NodeId v) const { return adjacency_[v].size(); }
  std::span<const NodeId> Neighbors(NodeId v) const { return adjacency_[v]; }

  const std::optional<Structure>& structure(NodeId v) const {
    return structures_[v];
  }
  void set_structure(NodeId v, std::optional<Structure> s) {
    structures_[v] = std::move(s);
  }
  const Provenance& provenance(NodeId v) const { return provenance_[v]; }

  // Set on pruned networks: edges no longer mirror the distance rule for
  // every pair of surviving nodes.
  bool distance_complete() const { return distance_complete_; }
  void set_distance_complete(bool v) { distance_complete_ = v; }

  // Every edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

  // Subgraph on nodes with keep[v] set, renumbered in increasing id order.
  // Provenance parents that do not survive are cleared.
  Network InducedSubgraph(const std::vector<bool>& keep) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::optional<Structure>> structures_;
  std::vector<Provenance> provenance_;
  std::size_t num_edges_ = 0;
  bool distance_complete_ = true;
};

}  // namespace snm

#endif  // SNM_NETWORK_H_
