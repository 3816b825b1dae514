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

#include "snm/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace snm {
namespace {

// Compressed adjacency for the traversal-heavy metrics.
struct Csr {
  explicit Csr(const Network& net) : offsets(net.num_nodes() + 1, 0) {
    for (NodeId v = 0; v < net.num_nodes(); ++v) {
      offsets[v + 1] = offsets[v] + net.Degree(v);
    }
    targets.reserve(offsets.back());
    for (NodeId v = 0; v < net.num_nodes(); ++v) {
      auto nb = net.Neighbors(v);
      targets.insert(targets.end(), nb.begin(), nb.end());
    }
  }
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
};

constexpr uint32_t kUnreached = std::numeric_limits<uint32_t>::max();

// BFS from `source`; calls visit(target, distance) for each reached
// target > source.
template <typename Visit>
void BfsFrom(const Csr& g, NodeId source, std::vector<uint32_t>& dist,
             std::vector<NodeId>& queue, Visit&& visit) {
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const NodeId w = g.targets[e];
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
      if (w > source) visit(w, dist[w]);
    }
  }
  for (NodeId v : queue) dist[v] = kUnreached;
}

// Per-node triangle counts.
std::vector<uint64_t> NodeTriangles(const Network& net) {
  const std::size_t n = net.num_nodes();
  std::vector<uint64_t> tri(n, 0);
  std::vector<uint8_t> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    auto nu = net.Neighbors(u);
    for (NodeId v : nu) mark[v] = 1;
    for (NodeId v : nu) {
      if (v <= u) continue;
      for (NodeId w : net.Neighbors(v)) {
        if (w > v && mark[w]) {
          ++tri[u];
          ++tri[v];
          ++tri[w];
        }
      }
    }
    for (NodeId v : nu) mark[v] = 0;
  }
  return tri;
}

double LocalFromTriangles(uint64_t triangles, std::size_t degree) {
  if (degree < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles) /
         (static_cast<double>(degree) * static_cast<double>(degree - 1));
}

std::map<std::size_t, double> Normalize(const std::vector<uint64_t>& counts) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  std::map<std::size_t, double> out;
  if (total == 0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) {
      out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
  }
  return out;
}

}  // namespace

double AverageDegree(const Network& net) {
  if (net.num_nodes() == 0) {
    throw std::invalid_argument("AverageDegree: empty network");
  }
  return 2.0 * static_cast<double>(net.num_edges()) /
         static_cast<double>(net.num_nodes());
}

std::map<std::pair<NodeId, NodeId>, uint32_t> ShortestPathLengths(
    const Network& net) {
  const Csr g(net);
  std::vector<uint32_t> dist(net.num_nodes(), kUnreached);
  std::vector<NodeId> queue;
  std::map<std::pair<NodeId, NodeId>, uint32_t> out;
  for (NodeId s = 0; s < net.num_nodes(); ++s) {
    BfsFrom(g, s, dist, queue,
            [&](NodeId t, uint32_t d) { out.emplace(std::pair(s, t), d); });
  }
  return out;
}

std::vector<uint64_t> PathLengthCounts(const Network& net) {
  const Csr g(net);
  std::vector<uint32_t> dist(net.num_nodes(), kUnreached);
  std::vector<NodeId> queue;
  std::vector<uint64_t> counts(1, 0);
  for (NodeId s = 0; s < net.num_nodes(); ++s) {
    BfsFrom(g, s, dist, queue, [&](NodeId, uint32_t d) {
      if (d >= counts.size()) counts.resize(d + 1, 0);
      ++counts[d];
    });
  }
  return counts;
}

namespace {

std::optional<double> MeanLength(const std::vector<uint64_t>& counts) {
  uint64_t pairs = 0;
  double sum = 0.0;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    pairs += counts[l];
    sum += static_cast<double>(l) * static_cast<double>(counts[l]);
  }
  if (pairs == 0) return std::nullopt;
  return sum / static_cast<double>(pairs);
}

}  // namespace

std::optional<double> AveragePathLength(const Network& net) {
  return MeanLength(PathLengthCounts(net));
}

std::map<std::size_t, double> PathLengthDistribution(const Network& net) {
  return Normalize(PathLengthCounts(net));
}

double LocalClustering(const Network& net, NodeId v) {
  const auto nb = net.Neighbors(v);
  if (nb.size() < 2) return 0.0;
  uint64_t links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (net.HasEdge(nb[i], nb[j])) ++links;
    }
  }
  return LocalFromTriangles(links, nb.size());
}

double AverageClustering(const Network& net) {
  if (net.num_nodes() == 0) return 0.0;
  const auto tri = NodeTriangles(net);
  double sum = 0.0;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    sum += LocalFromTriangles(tri[v], net.Degree(v));
  }
  return sum / static_cast<double>(net.num_nodes());
}

std::map<std::size_t, double> ClusteringByDegree(const Network& net) {
  const auto tri = NodeTriangles(net);
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    auto& [sum, count] = acc[net.Degree(v)];
    sum += LocalFromTriangles(tri[v], net.Degree(v));
    ++count;
  }
  std::map<std::size_t, double> out;
  for (const auto& [k, sc] : acc) {
    out[k] = sc.first / static_cast<double>(sc.second);
  }
  return out;
}

uint64_t TriangleCount(const Network& net) {
  uint64_t total = 0;
  for (uint64_t t : NodeTriangles(net)) total += t;
  return total / 3;
}

MotifCensus MotifCensus3(const Network& net) {
  const auto n = static_cast<int64_t>(net.num_nodes());
  if (n < 3) throw std::invalid_argument("MotifCensus3: fewer than 3 nodes");
  const auto t = static_cast<int64_t>(TriangleCount(net));
  int64_t wedges = 0;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    const auto d = static_cast<int64_t>(net.Degree(v));
    wedges += d * (d - 1) / 2;
  }
  const auto m = static_cast<int64_t>(net.num_edges());
  const int64_t triples = n * (n - 1) * (n - 2) / 6;
  const int64_t n3 = t;
  const int64_t n2 = wedges - 3 * t;
  const int64_t n1 = m * (n - 2) - 2 * n2 - 3 * n3;
  const int64_t n0 = triples - n1 - n2 - n3;
  const auto total = static_cast<double>(triples);
  return {static_cast<double>(n0) / total, static_cast<double>(n1) / total,
          static_cast<double>(n2) / total, static_cast<double>(n3) / total};
}

double HeterogeneityIndex(const Network& net) {
  const std::size_t n = net.num_nodes();
  if (n <= 2) {
    throw std::invalid_argument("HeterogeneityIndex: needs at least 3 nodes");
  }
  double sum = 0.0;
  for (const auto& [u, v] : net.Edges()) {
    const double diff = 1.0 / std::sqrt(static_cast<double>(net.Degree(u))) -
                        1.0 / std::sqrt(static_cast<double>(net.Degree(v)));
    sum += diff * diff;
  }
  const double nd = static_cast<double>(n);
  return sum / (nd - 2.0 * std::sqrt(nd - 1.0));
}

std::map<std::size_t, double> DegreeDistribution(const Network& net) {
  std::vector<uint64_t> counts;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    const std::size_t d = net.Degree(v);
    if (d >= counts.size()) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return Normalize(counts);
}

PowerLawFit FitPowerLawSlope(const std::map<std::size_t, double>& hist,
                             std::size_t k_min) {
  std::vector<double> xs, ys;
  for (const auto& [k, p] : hist) {
    if (k == 0 || k < k_min || !(p > 0.0)) continue;
    xs.push_back(std::log10(static_cast<double>(k)));
    ys.push_back(std::log10(p));
  }
  if (xs.size() < 2) {
    throw std::invalid_argument(
        "FitPowerLawSlope: fewer than two usable histogram bins");
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  // A flat histogram is fitted exactly by a flat line.
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.k_min = k_min;
  fit.points = xs.size();
  return fit;
}

std::vector<uint32_t> ConnectedComponents(const Network& net) {
  const Csr g(net);
  std::vector<uint32_t> label(net.num_nodes(), kUnreached);
  std::vector<NodeId> stack;
  uint32_t next = 0;
  for (NodeId s = 0; s < net.num_nodes(); ++s) {
    if (label[s] != kUnreached) continue;
    label[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
        if (label[g.targets[e]] == kUnreached) {
          label[g.targets[e]] = next;
          stack.push_back(g.targets[e]);
        }
      }
    }
    ++next;
  }
  return label;
}

namespace {

// Label of the largest component (smallest label among ties) and its size.
std::pair<uint32_t, std::size_t> Largest(const std::vector<uint32_t>& labels) {
  std::vector<std::size_t> sizes;
  for (uint32_t l : labels) {
    if (l >= sizes.size()) sizes.resize(l + 1, 0);
    ++sizes[l];
  }
  if (sizes.empty()) return {0, 0};
  const auto it = std::max_element(sizes.begin(), sizes.end());
  return {static_cast<uint32_t>(it - sizes.begin()), *it};
}

}  // namespace

double LargestComponentFraction(const Network& net) {
  if (net.num_nodes() == 0) return 0.0;
  return static_cast<double>(Largest(ConnectedComponents(net)).second) /
         static_cast<double>(net.num_nodes());
}

MetricsReport ComputeMetrics(const Network& net, const MetricsOptions& options) {
  MetricsReport r;
  r.n_nodes = net.num_nodes();
  r.n_edges = net.num_edges();
  if (r.n_nodes == 0) return r;
  r.average_degree = AverageDegree(net);

  const auto tri = NodeTriangles(net);
  std::map<std::size_t, std::pair<double, std::size_t>> by_degree;
  double clustering_sum = 0.0;
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    const double c = LocalFromTriangles(tri[v], net.Degree(v));
    clustering_sum += c;
    auto& [sum, count] = by_degree[net.Degree(v)];
    sum += c;
    ++count;
  }
  r.average_clustering = clustering_sum / static_cast<double>(r.n_nodes);
  for (const auto& [k, sc] : by_degree) {
    r.clustering_by_degree[k] = sc.first / static_cast<double>(sc.second);
  }

  r.degree_distribution = DegreeDistribution(net);
  try {
    r.fitted_gamma = FitPowerLawSlope(r.degree_distribution, options.fit_k_min);
  } catch (const std::invalid_argument&) {
    // Too few degree classes for a fit.
  }

  const auto labels = ConnectedComponents(net);
  const auto [giant, giant_size] = Largest(labels);
  r.largest_component_fraction =
      static_cast<double>(giant_size) / static_cast<double>(r.n_nodes);

  if (r.n_nodes >= 3) {
    r.motif_census = MotifCensus3(net);
    r.heterogeneity = HeterogeneityIndex(net);
  }

  if (options.path_lengths) {
    const Csr g(net);
    std::vector<uint32_t> dist(net.num_nodes(), kUnreached);
    std::vector<NodeId> queue;
    std::vector<uint64_t> counts(1, 0), giant_counts(1, 0);
    for (NodeId s = 0; s < net.num_nodes(); ++s) {
      const bool in_giant = labels[s] == giant;
      BfsFrom(g, s, dist, queue, [&](NodeId, uint32_t d) {
        if (d >= counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
        if (in_giant) {
          if (d >= giant_counts.size()) giant_counts.resize(d + 1, 0);
          ++giant_counts[d];
        }
      });
    }
    r.average_path_length = MeanLength(counts);
    r.giant_average_path_length = MeanLength(giant_counts);
    r.path_length_distribution = Normalize(counts);
  }
  return r;
}

}  // namespace snm
