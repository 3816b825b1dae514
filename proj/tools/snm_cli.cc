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

// snm: command-line front end for growing structured-node and BA networks,
// measuring them and running multi-seed experiments.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snm/ba_model.h"
#include "snm/experiment.h"
#include "snm/growth.h"
#include "snm/io.h"
#include "snm/metrics.h"

namespace {

namespace fs = std::filesystem;

std::map<std::string, std::string> ParseOverrides(
    const std::vector<std::string>& sets) {
  std::map<std::string, std::string> out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--set", "expected key=value, got " + s);
    }
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

snm::ExperimentConfig Load(const fs::path& config,
                           std::map<std::string, std::string> overrides) {
  std::vector<std::string> warnings;
  auto cfg = snm::LoadInstanceFile(config, overrides, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return cfg;
}

snm::Network LoadNetwork(const fs::path& edges, const fs::path& structures) {
  std::vector<std::string> warnings;
  snm::Network net = snm::ReadEdgeList(edges, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (!structures.empty()) {
    std::ifstream in(structures);
    if (!in) throw std::runtime_error("cannot open " + structures.string());
    snm::ReadStructures(in, net);
  }
  return net;
}

std::vector<std::size_t> ParseCheckpoints(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoull(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured-node network model"};
  app.require_subcommand(1);

  // generate
  fs::path gen_config, gen_out;
  std::vector<std::string> gen_sets;
  auto* generate = app.add_subcommand("generate", "Grow one network");
  generate->add_option("-c,--config", gen_config, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("-s,--set", gen_sets, "Override key=value");
  generate->add_option("-o,--out", gen_out, "Output directory")->required();

  // metrics
  fs::path met_edges, met_structures, met_out;
  std::size_t met_kmin = 1;
  bool met_no_paths = false;
  auto* metrics = app.add_subcommand("metrics", "Measure an edge list");
  metrics->add_option("-e,--edges", met_edges, "Edge list")
      ->required()
      ->check(CLI::ExistingFile);
  metrics->add_option("--structures", met_structures, "Structures file");
  metrics->add_option("-o,--out", met_out, "Write metrics files here");
  metrics->add_option("--k-min", met_kmin, "Smallest degree in the fit");
  metrics->add_flag("--no-paths", met_no_paths, "Skip all-pairs BFS");

  // experiment
  fs::path exp_config, exp_out;
  std::vector<std::string> exp_sets;
  unsigned exp_threads = 0;
  auto* experiment =
      app.add_subcommand("experiment", "Run an instance over many seeds");
  experiment->add_option("-c,--config", exp_config, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  experiment->add_option("-s,--set", exp_sets, "Override key=value");
  experiment->add_option("-o,--out", exp_out, "Output directory");
  experiment->add_option("-j,--threads", exp_threads, "Worker threads");

  // compare-ba
  fs::path cmp_config, cmp_out;
  std::vector<std::string> cmp_sets;
  std::string cmp_checkpoints;
  std::size_t cmp_clique = 6, cmp_m = 6, cmp_seeds = 0;
  bool cmp_no_paths = false;
  unsigned cmp_threads = 0;
  auto* compare = app.add_subcommand(
      "compare-ba", "Growth curves of an SN instance against the BA model");
  compare->add_option("-c,--config", cmp_config, "SN instance file")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("-s,--set", cmp_sets, "Override key=value");
  compare->add_option("--clique", cmp_clique, "BA initial clique size");
  compare->add_option("--edges-per-node", cmp_m, "BA edges per new node");
  compare->add_option("--checkpoints", cmp_checkpoints,
                      "Comma-separated node counts (default: every "
                      "checkpoint_interval up to target_nodes)");
  compare->add_option("--seeds", cmp_seeds, "Seeds (default: n_seeds)");
  compare->add_flag("--no-paths", cmp_no_paths, "Skip average path length");
  compare->add_option("-o,--out", cmp_out, "Output directory")->required();
  compare->add_option("-j,--threads", cmp_threads, "Worker threads");

  // prune
  fs::path pr_edges, pr_structures, pr_out;
  std::size_t pr_min = 0;
  auto* prune = app.add_subcommand("prune", "Drop nodes below a degree");
  prune->add_option("-e,--edges", pr_edges, "Edge list")
      ->required()
      ->check(CLI::ExistingFile);
  prune->add_option("--structures", pr_structures, "Structures file");
  prune->add_option("-k,--min-degree", pr_min, "Minimum degree kept")
      ->required();
  prune->add_option("-o,--out", pr_out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      auto cfg = Load(gen_config, ParseOverrides(gen_sets));
      snm::Network net;
      snm::GrowthOptions options{.checkpoint_interval = cfg.checkpoint_interval};
      nlohmann::json trace;
      if (auto* instance = std::get_if<snm::Instance>(&cfg.model)) {
        auto grown = snm::Grow(*instance, options);
        net = std::move(grown.network);
        trace = snm::ToJson(grown.trace);
        trace["saturated"] = grown.saturated;
        if (grown.saturated) {
          std::cerr << "warning: attempt budget exhausted at "
                    << net.num_nodes() << " nodes\n";
        }
      } else {
        const auto& ba = std::get<snm::BAParams>(cfg.model);
        snm::Rng rng(ba.seed);
        net = snm::GrowBA(ba, rng, options);
      }
      snm::WriteNetwork(net, gen_out);
      const auto report = snm::ComputeMetrics(
          net, {.path_lengths = cfg.path_lengths, .fit_k_min = cfg.fit_k_min});
      snm::WriteMetrics(report, gen_out);
      if (!trace.is_null()) {
        std::ofstream(gen_out / "trace.json") << trace.dump(2) << '\n';
      }
      std::cout << "nodes " << report.n_nodes << " edges " << report.n_edges
                << " <k> " << report.average_degree << " C "
                << report.average_clustering << '\n';
    } else if (*metrics) {
      const auto net = LoadNetwork(met_edges, met_structures);
      const auto report = snm::ComputeMetrics(
          net, {.path_lengths = !met_no_paths, .fit_k_min = met_kmin});
      if (!met_out.empty()) snm::WriteMetrics(report, met_out);
      std::cout << snm::ToJson(report).dump(2) << '\n';
    } else if (*experiment) {
      auto cfg = Load(exp_config, ParseOverrides(exp_sets));
      cfg.output_directory = exp_out;
      const auto summary = snm::RunExperiment(cfg, exp_threads);
      std::cout << snm::ToJson(summary).dump(2) << '\n';
    } else if (*compare) {
      auto cfg = Load(cmp_config, ParseOverrides(cmp_sets));
      const auto* instance = std::get_if<snm::Instance>(&cfg.model);
      if (instance == nullptr) {
        throw std::invalid_argument("compare-ba needs an sn instance");
      }
      std::vector<std::size_t> checkpoints = ParseCheckpoints(cmp_checkpoints);
      if (checkpoints.empty()) {
        const std::size_t step = cfg.checkpoint_interval == 0
                                     ? instance->target_nodes
                                     : cfg.checkpoint_interval;
        for (std::size_t n = step; n <= instance->target_nodes; n += step) {
          checkpoints.push_back(n);
        }
      }
      snm::BAParams ba{.initial_clique = cmp_clique,
                       .edges_per_node = cmp_m,
                       .target_nodes = checkpoints.back(),
                       .seed = instance->seed};
      const auto curves = snm::RunGrowthComparison(
          *instance, ba, checkpoints, cmp_seeds == 0 ? cfg.n_seeds : cmp_seeds,
          !cmp_no_paths, cmp_threads);
      snm::WriteComparisonCurves(curves, cmp_out);
      std::printf("nodes\tsn_k\tba_k\tsn_L\tba_L\tsn_C\tba_C\n");
      for (std::size_t p = 0; p < curves.checkpoints.size(); ++p) {
        std::printf("%zu\t%.4f\t%.4f\t%.4f\t%.4f\t%.4f\t%.4f\n",
                    curves.checkpoints[p], curves.sn.average_degree[p],
                    curves.ba.average_degree[p],
                    curves.sn.average_path_length[p],
                    curves.ba.average_path_length[p],
                    curves.sn.average_clustering[p],
                    curves.ba.average_clustering[p]);
      }
    } else if (*prune) {
      const auto net = LoadNetwork(pr_edges, pr_structures);
      const auto pruned = snm::PruneLowDegree(net, pr_min);
      snm::WriteNetwork(pruned, pr_out);
      std::cout << "kept " << pruned.num_nodes() << " of " << net.num_nodes()
                << " nodes, " << pruned.num_edges() << " edges\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
