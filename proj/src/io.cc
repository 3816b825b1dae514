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

#include "snm/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snm {
namespace {

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Shortest text that reads back to the same double.
std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void WriteEdgeList(const Network& net, std::ostream& out) {
  out << kEdgeListHeader << " nodes=" << net.num_nodes() << '\n';
  for (const auto& [u, v] : net.Edges()) out << u << '\t' << v << '\n';
}

void WriteStructures(const Network& net, std::ostream& out) {
  out << kStructuresHeader << '\n';
  for (NodeId v = 0; v < net.num_nodes(); ++v) {
    if (net.structure(v)) out << v << '\t' << net.structure(v)->word() << '\n';
  }
}

void WriteNetwork(const Network& net, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto edges = OpenOut(dir / "edges.tsv");
  WriteEdgeList(net, edges);
  bool any = false;
  for (NodeId v = 0; v < net.num_nodes() && !any; ++v) {
    any = net.structure(v).has_value();
  }
  if (any) {
    auto structures = OpenOut(dir / "structures.tsv");
    WriteStructures(net, structures);
  }
}

Network ReadEdgeList(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t declared_nodes = 0;
  NodeId max_id = 0;
  bool any_edge = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') {
      if (auto pos = line.find("nodes="); pos != std::string::npos) {
        declared_nodes = std::stoull(line.substr(pos + 6));
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two non-negative node ids");
    }
    if (u == v) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": self-loop on node " + std::to_string(u));
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    max_id = std::max({max_id, edges.back().first, edges.back().second});
    any_edge = true;
  }
  Network net(std::max<std::size_t>(declared_nodes, any_edge ? max_id + 1 : 0));
  for (const auto& [u, v] : edges) {
    if (!net.AddEdge(u, v) && warnings != nullptr) {
      warnings->push_back("edge list: repeated edge " + std::to_string(u) +
                          " " + std::to_string(v) + " ignored");
    }
  }
  return net;
}

Network ReadEdgeList(const std::filesystem::path& path,
                     std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path.string());
  return ReadEdgeList(in, warnings);
}

void ReadStructures(std::istream& in, Network& net) {
  std::vector<std::pair<NodeId, std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long id = -1;
    std::string word;
    if (!(fields >> id >> word) || id < 0 ||
        static_cast<std::size_t>(id) >= net.num_nodes()) {
      throw std::invalid_argument("structures line " +
                                  std::to_string(line_no) + ": malformed");
    }
    rows.emplace_back(static_cast<NodeId>(id), word);
  }
  for (auto& [id, word] : rows) net.set_structure(id, Structure(std::move(word)));
}

namespace {

// [[key, value], ...] in key order.
nlohmann::json MapJson(const std::map<std::size_t, double>& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, v] : m) j.push_back({k, v});
  return j;
}

template <typename T>
nlohmann::json OptJson(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json ToJson(const MetricsReport& r) {
  nlohmann::json j;
  j["format"] = "snm metrics v1";
  j["n_nodes"] = r.n_nodes;
  j["n_edges"] = r.n_edges;
  j["average_degree"] = r.average_degree;
  j["average_path_length"] = OptJson(r.average_path_length);
  j["giant_average_path_length"] = OptJson(r.giant_average_path_length);
  j["average_clustering"] = r.average_clustering;
  j["heterogeneity"] = OptJson(r.heterogeneity);
  j["largest_component_fraction"] = r.largest_component_fraction;
  j["degree_distribution"] = MapJson(r.degree_distribution);
  j["clustering_by_degree"] = MapJson(r.clustering_by_degree);
  j["path_length_distribution"] = MapJson(r.path_length_distribution);
  j["motif_census"] = OptJson(r.motif_census);
  if (r.fitted_gamma) {
    j["fitted_gamma"] = {{"slope", r.fitted_gamma->slope},
                         {"r_squared", r.fitted_gamma->r_squared},
                         {"k_min", r.fitted_gamma->k_min},
                         {"points", r.fitted_gamma->points}};
  } else {
    j["fitted_gamma"] = nullptr;
  }
  return j;
}

nlohmann::json ToJson(const GrowthTrace& t) {
  nlohmann::json j;
  j["attempts"] = t.attempts;
  j["accepted"] = t.accepted;
  j["rejected_duplicate"] = t.rejected_duplicate;
  j["rejected_isolated"] = t.rejected_isolated;
  j["rejected_edit_failed"] = t.rejected_edit_failed;
  j["checkpoints"] = nlohmann::json::array();
  for (const auto& c : t.checkpoints) {
    j["checkpoints"].push_back(
        {{"nodes", c.nodes}, {"edges", c.edges}, {"attempts", c.attempts}});
  }
  return j;
}

void WriteDistribution(const std::map<std::size_t, double>& dist,
                       std::string_view name, std::ostream& out) {
  out << kDistributionHeader << ' ' << name << '\n';
  for (const auto& [k, v] : dist) out << k << '\t' << Num(v) << '\n';
}

void WriteMetrics(const MetricsReport& report,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  OpenOut(dir / "metrics.json") << ToJson(report).dump(2) << '\n';
  auto degree = OpenOut(dir / "degree_distribution.dat");
  WriteDistribution(report.degree_distribution, "degree", degree);
  auto clustering = OpenOut(dir / "clustering_by_degree.dat");
  // Not a distribution: mean local clustering per degree.
  clustering << "# snm clustering-by-degree v1\n";
  for (const auto& [k, v] : report.clustering_by_degree) {
    clustering << k << '\t' << Num(v) << '\n';
  }
  auto paths = OpenOut(dir / "path_length_distribution.dat");
  WriteDistribution(report.path_length_distribution, "path_length", paths);
  if (report.motif_census) {
    std::map<std::size_t, double> census;
    for (std::size_t i = 0; i < 4; ++i) census[i] = (*report.motif_census)[i];
    auto motifs = OpenOut(dir / "motif_census.dat");
    WriteDistribution(census, "motif_edges", motifs);
  }
}

}  // namespace snm
