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

#ifndef SNM_EXPERIMENT_H_
#define SNM_EXPERIMENT_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "snm/ba_model.h"
#include "snm/growth.h"
#include "snm/metrics.h"

namespace snm {

struct ExperimentConfig {
  std::variant<Instance, BAParams> model;
  std::size_t n_seeds = 1;
  std::size_t checkpoint_interval = 0;
  // Per-seed files go to <output_directory>/seed_<i>; empty writes nothing.
  std::filesystem::path output_directory;
  // Metrics a seed must match to count as within 10% / 20%.
  std::vector<std::string> discrepancy_metrics = {
      "average_degree", "average_path_length", "average_clustering"};
  // Reference values; a metric without one is compared to the run mean.
  std::map<std::string, double> reference;
  std::size_t fit_k_min = 1;
  bool path_lengths = true;
};

// Parses "key = value" lines ('#' comments). Keys:
//   model (sn | ba), alphabet ("A..T", "AT" or "{A, T}"), initial
//   (';'-separated), p_mutate, p_insert, p_delete, p_duplicate,
//   unit_distance, max_distance, match_file (relative to `base_dir`),
//   target_nodes, max_attempts, mode (incremental | batch),
//   prune_min_degree, max_structure_length, seed, n_seeds,
//   checkpoint_interval, initial_clique, edges_per_node, fit_k_min,
//   path_lengths (true | false), discrepancy_metrics (','-separated),
//   reference.<metric>.
// `overrides` replace file values key by key. Throws std::invalid_argument
// on unknown keys, missing required keys and invariant violations.
ExperimentConfig ParseInstanceFile(
    std::istream& in, const std::filesystem::path& base_dir,
    const std::map<std::string, std::string>& overrides = {},
    std::vector<std::string>* warnings = nullptr);
ExperimentConfig LoadInstanceFile(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& overrides = {},
    std::vector<std::string>* warnings = nullptr);

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

struct SummaryReport {
  std::size_t n_seeds = 0;
  std::map<std::string, MetricSummary> metrics;
  std::map<std::string, double> reference;
  double within_10 = 0.0;
  double within_20 = 0.0;
  std::size_t saturated_runs = 0;
  std::vector<MetricsReport> runs;
  // Degree histogram pooled over all seeds and its log-log fit.
  std::map<std::size_t, double> aggregate_degree_distribution;
  std::optional<PowerLawFit> aggregate_fit;
};

// Scalar view of a report: n_nodes, n_edges, average_degree,
// average_path_length, giant_average_path_length, average_clustering,
// heterogeneity, gamma, largest_component_fraction. Absent values are
// omitted.
std::map<std::string, double> ScalarMetrics(const MetricsReport& report);

// Runs seeds seed, seed+1, ... on up to `threads` workers (0 = hardware
// concurrency). Results do not depend on the thread count.
SummaryReport RunExperiment(const ExperimentConfig& config,
                            unsigned threads = 0);

nlohmann::json ToJson(const SummaryReport& summary);

struct CurveSeries {
  std::vector<double> average_degree;
  std::vector<double> average_path_length;
  std::vector<double> average_clustering;
};

struct ComparisonCurves {
  std::vector<std::size_t> checkpoints;
  std::size_t n_seeds = 0;
  CurveSeries sn;
  CurveSeries ba;
};

// Grows both models to the last checkpoint for each seed and averages
// <k>, L and C over seeds at every checkpoint. Seeds of the SN instance and
// of the BA parameters both advance as seed+i.
ComparisonCurves RunGrowthComparison(const Instance& sn, const BAParams& ba,
                                     const std::vector<std::size_t>& checkpoints,
                                     std::size_t n_seeds,
                                     bool path_lengths = true,
                                     unsigned threads = 0);

// average_degree.dat, average_path_length.dat, average_clustering.dat with
// columns nodes, sn, ba.
void WriteComparisonCurves(const ComparisonCurves& curves,
                           const std::filesystem::path& dir);

}  // namespace snm

#endif  // SNM_EXPERIMENT_H_
