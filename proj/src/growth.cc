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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace snm {

void Instance::Validate() const {
  if (initial.empty()) {
    throw std::invalid_argument("Instance: at least one initial structure");
  }
  std::unordered_set<Structure> seen;
  for (const auto& s : initial) {
    CheckSymbols(s.word(), alphabet);
    if (!seen.insert(s).second) {
      throw std::invalid_argument("Instance: initial structure \"" + s.word() +
                                  "\" is repeated");
    }
    if (s.size() > max_structure_length) {
      throw std::invalid_argument(
          "Instance: initial structure longer than max_structure_length");
    }
  }
  probs.Validate();
  distance.Validate();
  if (target_nodes < initial.size()) {
    throw std::invalid_argument(
        "Instance: target_nodes must be >= the number of initial structures");
  }
  if (EffectiveMaxAttempts() < target_nodes) {
    throw std::invalid_argument("Instance: max_attempts must be >= target_nodes");
  }
}

bool GrowthOptions::IsCheckpoint(std::size_t nodes) const {
  if (checkpoint_interval != 0 && nodes % checkpoint_interval == 0) {
    return true;
  }
  return std::find(checkpoint_at.begin(), checkpoint_at.end(), nodes) !=
         checkpoint_at.end();
}

namespace {

// Shared bookkeeping of the two growth modes.
class Recorder {
 public:
  Recorder(const GrowthOptions& options, GrowthTrace& trace)
      : options_(options), trace_(trace) {}

  void NodeAdded(const Network& net) {
    if (!options_.IsCheckpoint(net.num_nodes())) return;
    Record(net);
    if (options_.on_checkpoint) options_.on_checkpoint(net);
  }

  void Finish(const Network& net) {
    if (trace_.checkpoints.empty() ||
        trace_.checkpoints.back().nodes != net.num_nodes() ||
        trace_.checkpoints.back().attempts != trace_.attempts) {
      Record(net);
    }
  }

 private:
  void Record(const Network& net) {
    trace_.checkpoints.push_back(
        {net.num_nodes(), net.num_edges(), trace_.attempts});
  }

  const GrowthOptions& options_;
  GrowthTrace& trace_;
};

// Adds the initial nodes with their mutual edges.
void Seed(const Instance& instance, const GroupCodec& codec, Network& net,
          EncodedPool& pool, std::unordered_set<Structure>& seen,
          Recorder& recorder) {
  std::vector<NodeId> neighbors;
  for (const auto& s : instance.initial) {
    const auto encoded = codec.Encode(s);
    neighbors.clear();
    pool.ForEachWithin(encoded, [&](std::size_t i) {
      neighbors.push_back(static_cast<NodeId>(i));
    });
    const NodeId id = net.AddNode(s, Provenance{});
    for (NodeId n : neighbors) net.AddEdge(id, n);
    pool.Add(encoded);
    seen.insert(s);
    recorder.NodeAdded(net);
  }
}

}  // namespace

GrowthResult GrowIncremental(const Instance& instance, Rng& rng,
                             const GrowthOptions& options) {
  instance.Validate();
  const GroupCodec codec(instance.alphabet, instance.distance);
  GrowthResult result;
  Network& net = result.network;
  GrowthTrace& trace = result.trace;
  Recorder recorder(options, trace);
  EncodedPool pool(codec);
  std::unordered_set<Structure> seen;
  Seed(instance, codec, net, pool, seen, recorder);

  const std::size_t max_attempts = instance.EffectiveMaxAttempts();
  std::vector<NodeId> neighbors;
  while (net.num_nodes() < instance.target_nodes &&
         trace.attempts < max_attempts) {
    ++trace.attempts;
    const auto parent = static_cast<NodeId>(rng.UniformIndex(net.num_nodes()));
    auto edit =
        ApplyRandomEdit(*net.structure(parent), instance.probs,
                        instance.alphabet, rng, instance.max_structure_length);
    if (!edit.structure) {
      ++trace.rejected_edit_failed;
      continue;
    }
    if (seen.contains(*edit.structure)) {
      ++trace.rejected_duplicate;
      continue;
    }
    const auto encoded = codec.Encode(*edit.structure);
    neighbors.clear();
    pool.ForEachWithin(encoded, [&](std::size_t i) {
      neighbors.push_back(static_cast<NodeId>(i));
    });
    if (neighbors.empty()) {
      ++trace.rejected_isolated;
      continue;
    }
    seen.insert(*edit.structure);
    const NodeId id = net.AddNode(std::move(edit.structure),
                                  Provenance{parent, edit.kind, trace.attempts});
    for (NodeId n : neighbors) net.AddEdge(id, n);
    pool.Add(encoded);
    ++trace.accepted;
    recorder.NodeAdded(net);
  }
  result.saturated = net.num_nodes() < instance.target_nodes;
  recorder.Finish(net);
  return result;
}

GrowthResult GrowBatch(const Instance& instance, Rng& rng,
                       const GrowthOptions& options) {
  instance.Validate();
  const GroupCodec codec(instance.alphabet, instance.distance);
  GrowthResult result;
  GrowthTrace& trace = result.trace;

  // Candidate structures: the initial ones first, then derived ones.
  struct Candidate {
    Structure structure;
    Provenance provenance;
  };
  std::vector<Candidate> candidates;
  std::unordered_set<Structure> seen;
  for (const auto& s : instance.initial) {
    candidates.push_back({s, Provenance{}});
    seen.insert(s);
  }
  const std::size_t n_initial = instance.initial.size();
  const std::size_t max_attempts = instance.EffectiveMaxAttempts();
  while (candidates.size() < instance.target_nodes &&
         trace.attempts < max_attempts) {
    ++trace.attempts;
    const auto parent = static_cast<NodeId>(rng.UniformIndex(n_initial));
    auto edit = ApplyRandomEdit(instance.initial[parent], instance.probs,
                                instance.alphabet, rng,
                                instance.max_structure_length);
    if (!edit.structure) {
      ++trace.rejected_edit_failed;
      continue;
    }
    if (!seen.insert(*edit.structure).second) {
      ++trace.rejected_duplicate;
      continue;
    }
    candidates.push_back({std::move(*edit.structure),
                          Provenance{parent, edit.kind, trace.attempts}});
  }
  result.saturated = candidates.size() < instance.target_nodes;

  // One pairwise pass over all candidates.
  Network all;
  EncodedPool pool(codec);
  std::vector<NodeId> neighbors;
  for (auto& c : candidates) {
    const auto encoded = codec.Encode(c.structure);
    neighbors.clear();
    pool.ForEachWithin(encoded, [&](std::size_t i) {
      neighbors.push_back(static_cast<NodeId>(i));
    });
    const NodeId id = all.AddNode(std::move(c.structure), c.provenance);
    for (NodeId n : neighbors) all.AddEdge(id, n);
    pool.Add(encoded);
  }

  if (instance.target_nodes == n_initial) {
    result.network = std::move(all);
  } else {
    std::vector<bool> keep(all.num_nodes());
    for (NodeId v = 0; v < all.num_nodes(); ++v) {
      keep[v] = all.Degree(v) > 0;
      if (v >= n_initial) {
        if (keep[v]) {
          ++trace.accepted;
        } else {
          ++trace.rejected_isolated;
        }
      }
    }
    result.network = all.InducedSubgraph(keep);
  }

  // Batch networks have no intermediate states; only the final one is
  // recorded.
  Recorder recorder(options, trace);
  recorder.Finish(result.network);
  if (options.on_checkpoint) options.on_checkpoint(result.network);
  return result;
}

GrowthResult Grow(const Instance& instance, const GrowthOptions& options) {
  Rng rng(instance.seed);
  GrowthResult result = instance.mode == GrowthMode::kIncremental
                            ? GrowIncremental(instance, rng, options)
                            : GrowBatch(instance, rng, options);
  if (instance.prune_min_degree > 0) {
    result.network = PruneLowDegree(result.network, instance.prune_min_degree);
  }
  return result;
}

Network PruneLowDegree(const Network& net, std::size_t min_degree) {
  if (min_degree == 0) return net;
  std::vector<bool> keep(net.num_nodes());
  bool removed = false;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    keep[v] = net.Degree(v) >= min_degree;
    removed |= !keep[v];
  }
  Network out = net.InducedSubgraph(keep);
  if (removed) out.set_distance_complete(false);
  return out;
}

}  // namespace snm
