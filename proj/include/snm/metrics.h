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

#ifndef SNM_METRICS_H_
#define SNM_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "snm/network.h"

namespace snm {

// Least-squares line through (log10 k, log10 P(k)).
struct PowerLawFit {
  double slope = 0.0;
  double r_squared = 0.0;
  std::size_t k_min = 1;
  std::size_t points = 0;
};

// Fractions of node triples holding 0, 1, 2 and 3 edges.
using MotifCensus = std::array<double, 4>;

struct MetricsReport {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  double average_degree = 0.0;
  // Mean over connected pairs; empty when there are none or when path
  // lengths were not requested.
  std::optional<double> average_path_length;
  // Same, restricted to pairs inside the largest component.
  std::optional<double> giant_average_path_length;
  double average_clustering = 0.0;
  std::map<std::size_t, double> degree_distribution;
  std::map<std::size_t, double> clustering_by_degree;
  std::map<std::size_t, double> path_length_distribution;
  std::optional<MotifCensus> motif_census;
  std::optional<double> heterogeneity;
  std::optional<PowerLawFit> fitted_gamma;
  double largest_component_fraction = 0.0;
};

struct MetricsOptions {
  // All-pairs BFS dominates the cost on large graphs.
  bool path_lengths = true;
  std::size_t fit_k_min = 1;
};

double AverageDegree(const Network& net);

// Every connected unordered pair once, keyed (u, v) with u < v.
std::map<std::pair<NodeId, NodeId>, uint32_t> ShortestPathLengths(
    const Network& net);

// counts[l] = number of unordered pairs at distance l (counts[0] is 0).
std::vector<uint64_t> PathLengthCounts(const Network& net);

std::optional<double> AveragePathLength(const Network& net);
std::map<std::size_t, double> PathLengthDistribution(const Network& net);

// Edges among the neighbors of v over C(deg v, 2); 0 when deg v < 2.
double LocalClustering(const Network& net, NodeId v);
double AverageClustering(const Network& net);
std::map<std::size_t, double> ClusteringByDegree(const Network& net);

uint64_t TriangleCount(const Network& net);

// Closed form from edge, wedge and triangle counts. Throws when N < 3.
MotifCensus MotifCensus3(const Network& net);

// Sum over edges of (deg(u)^-1/2 - deg(v)^-1/2)^2, normalized by
// N - 2 sqrt(N - 1): 0 on regular graphs, 1 on stars. Throws when N <= 2.
double HeterogeneityIndex(const Network& net);

std::map<std::size_t, double> DegreeDistribution(const Network& net);

// Ordinary least squares on the log-log histogram for k >= k_min, skipping
// empty bins and k = 0. Throws when fewer than two points remain.
PowerLawFit FitPowerLawSlope(const std::map<std::size_t, double>& hist,
                             std::size_t k_min);

// Component id per node, ids assigned in order of smallest member.
std::vector<uint32_t> ConnectedComponents(const Network& net);
double LargestComponentFraction(const Network& net);

MetricsReport ComputeMetrics(const Network& net,
                             const MetricsOptions& options = {});

}  // namespace snm

#endif  // SNM_METRICS_H_
