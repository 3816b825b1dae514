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

#include "snm/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "snm/distance.h"
#include "snm/io.h"

namespace snm {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    auto item = Trim(s.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const std::set<std::string, std::less<>> kKnownKeys = {
    "model",          "alphabet",         "initial",
    "p_mutate",       "p_insert",         "p_delete",
    "p_duplicate",    "unit_distance",    "max_distance",
    "match_file",     "target_nodes",     "max_attempts",
    "mode",           "prune_min_degree", "max_structure_length",
    "seed",           "n_seeds",          "checkpoint_interval",
    "initial_clique", "edges_per_node",   "fit_k_min",
    "path_lengths",   "discrepancy_metrics"};

class KeyValues {
 public:
  explicit KeyValues(std::map<std::string, std::string> values)
      : values_(std::move(values)) {}

  bool Has(const std::string& key) const { return values_.contains(key); }

  const std::string& Required(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      throw std::invalid_argument("instance: missing required key '" + key +
                                  "'");
    }
    return it->second;
  }

  std::size_t Size(const std::string& key, std::size_t fallback) const {
    return Has(key) ? ParseSize(key, Required(key)) : fallback;
  }
  std::size_t RequiredSize(const std::string& key) const {
    return ParseSize(key, Required(key));
  }

  double Real(const std::string& key, double fallback) const {
    if (!Has(key)) return fallback;
    const std::string& text = Required(key);
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("instance: '" + key +
                                  "' is not a number: " + text);
    }
  }

  bool Bool(const std::string& key, bool fallback) const {
    if (!Has(key)) return fallback;
    const std::string& v = Required(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("instance: '" + key + "' must be true/false");
  }

  const std::map<std::string, std::string>& all() const { return values_; }

 private:
  static std::size_t ParseSize(const std::string& key,
                               const std::string& text) {
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("instance: '" + key +
                                  "' must be a non-negative integer: " + text);
    }
    return std::stoull(text);
  }

  std::map<std::string, std::string> values_;
};

Alphabet ParseAlphabet(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::string first = Trim(text.substr(0, dots));
    const std::string last = Trim(text.substr(dots + 2));
    if (first.size() != 1 || last.size() != 1) {
      throw std::invalid_argument("instance: alphabet range must be X..Y");
    }
    return Alphabet::Range(first[0], last[0]);
  }
  std::string symbols;
  for (char c : text) {
    if (c == '{' || c == '}' || c == ',' || c == ' ' || c == '\t') continue;
    symbols.push_back(c);
  }
  return Alphabet(symbols);
}

ExperimentConfig Build(const KeyValues& kv,
                       const std::filesystem::path& base_dir,
                       std::vector<std::string>* warnings) {
  ExperimentConfig config{.model = BAParams{}};
  const std::string model = kv.Has("model") ? kv.Required("model") : "sn";
  const uint64_t seed = kv.Size("seed", 1);
  if (model == "ba") {
    BAParams ba;
    ba.initial_clique = kv.RequiredSize("initial_clique");
    ba.edges_per_node = kv.RequiredSize("edges_per_node");
    ba.target_nodes = kv.RequiredSize("target_nodes");
    ba.seed = seed;
    ba.Validate();
    config.model = ba;
  } else if (model == "sn") {
    Instance in{.alphabet = ParseAlphabet(kv.Required("alphabet"))};
    for (const auto& word : Split(kv.Required("initial"), ';')) {
      in.initial.emplace_back(word, in.alphabet);
    }
    in.probs.mutate = kv.Real("p_mutate", 0.0);
    in.probs.insert = kv.Real("p_insert", 0.0);
    in.probs.remove = kv.Real("p_delete", 0.0);
    in.probs.duplicate = kv.Real("p_duplicate", 0.0);
    in.distance.unit_distance = kv.RequiredSize("unit_distance");
    in.distance.max_distance = kv.RequiredSize("max_distance");
    if (kv.Has("match_file")) {
      std::filesystem::path path = kv.Required("match_file");
      if (path.is_relative()) path = base_dir / path;
      in.distance.match_table = std::make_shared<const MatchTable>(
          LoadMatchFile(path, in.distance.unit_distance, in.alphabet,
                        warnings));
    }
    in.target_nodes = kv.RequiredSize("target_nodes");
    in.max_attempts = kv.Size("max_attempts", 0);
    if (kv.Has("mode")) {
      const std::string& mode = kv.Required("mode");
      if (mode == "incremental") {
        in.mode = GrowthMode::kIncremental;
      } else if (mode == "batch") {
        in.mode = GrowthMode::kBatch;
      } else {
        throw std::invalid_argument("instance: mode must be incremental or "
                                    "batch");
      }
    }
    in.prune_min_degree = kv.Size("prune_min_degree", 0);
    in.max_structure_length =
        kv.Size("max_structure_length", kDefaultMaxStructureLength);
    in.seed = seed;
    in.Validate();
    config.model = std::move(in);
  } else {
    throw std::invalid_argument("instance: model must be sn or ba");
  }

  config.n_seeds = kv.Size("n_seeds", 1);
  if (config.n_seeds < 1) {
    throw std::invalid_argument("instance: n_seeds must be >= 1");
  }
  config.checkpoint_interval = kv.Size("checkpoint_interval", 0);
  config.fit_k_min = kv.Size("fit_k_min", 1);
  config.path_lengths = kv.Bool("path_lengths", true);
  if (kv.Has("discrepancy_metrics")) {
    config.discrepancy_metrics = Split(kv.Required("discrepancy_metrics"), ',');
  }
  for (const auto& [key, value] : kv.all()) {
    if (key.starts_with("reference.")) {
      config.reference[key.substr(10)] = kv.Real(key, 0.0);
    }
  }
  return config;
}

template <typename Fn>
void ParallelFor(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

void WriteJson(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace

ExperimentConfig ParseInstanceFile(
    std::istream& in, const std::filesystem::path& base_dir,
    const std::map<std::string, std::string>& overrides,
    std::vector<std::string>* warnings) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  auto check_key = [](const std::string& key, const std::string& where) {
    if (!kKnownKeys.contains(key) && !key.starts_with("reference.")) {
      throw std::invalid_argument(where + "unknown key '" + key + "'");
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "instance line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + "expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    check_key(key, where);
    if (!values.emplace(key, Trim(line.substr(eq + 1))).second) {
      throw std::invalid_argument(where + "repeated key '" + key + "'");
    }
  }
  for (const auto& [key, value] : overrides) {
    check_key(key, "override: ");
    values[key] = value;
  }
  return Build(KeyValues(std::move(values)), base_dir, warnings);
}

ExperimentConfig LoadInstanceFile(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& overrides,
    std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance " + path.string());
  return ParseInstanceFile(in, path.parent_path(), overrides, warnings);
}

std::map<std::string, double> ScalarMetrics(const MetricsReport& r) {
  std::map<std::string, double> out;
  out["n_nodes"] = static_cast<double>(r.n_nodes);
  out["n_edges"] = static_cast<double>(r.n_edges);
  out["average_degree"] = r.average_degree;
  out["average_clustering"] = r.average_clustering;
  out["largest_component_fraction"] = r.largest_component_fraction;
  if (r.average_path_length) {
    out["average_path_length"] = *r.average_path_length;
  }
  if (r.giant_average_path_length) {
    out["giant_average_path_length"] = *r.giant_average_path_length;
  }
  if (r.heterogeneity) out["heterogeneity"] = *r.heterogeneity;
  if (r.fitted_gamma) out["gamma"] = r.fitted_gamma->slope;
  return out;
}

SummaryReport RunExperiment(const ExperimentConfig& config, unsigned threads) {
  if (config.n_seeds < 1) throw std::invalid_argument("n_seeds must be >= 1");
  struct SeedResult {
    MetricsReport metrics;
    std::vector<uint64_t> degree_counts;
    bool saturated = false;
  };
  std::vector<SeedResult> results(config.n_seeds);
  const MetricsOptions metric_options{.path_lengths = config.path_lengths,
                                      .fit_k_min = config.fit_k_min};

  ParallelFor(config.n_seeds, threads, [&](std::size_t i) {
    Network net;
    GrowthTrace trace;
    SeedResult& out = results[i];
    GrowthOptions options{.checkpoint_interval = config.checkpoint_interval};
    if (const auto* instance = std::get_if<Instance>(&config.model)) {
      Instance run = *instance;
      run.seed = instance->seed + i;
      GrowthResult grown = Grow(run, options);
      net = std::move(grown.network);
      trace = std::move(grown.trace);
      out.saturated = grown.saturated;
    } else {
      BAParams run = std::get<BAParams>(config.model);
      run.seed += i;
      Rng rng(run.seed);
      net = GrowBA(run, rng, options);
    }
    out.metrics = ComputeMetrics(net, metric_options);
    for (NodeId v = 0; v < net.num_nodes(); ++v) {
      if (net.Degree(v) >= out.degree_counts.size()) {
        out.degree_counts.resize(net.Degree(v) + 1, 0);
      }
      ++out.degree_counts[net.Degree(v)];
    }
    if (!config.output_directory.empty()) {
      const auto dir = config.output_directory / ("seed_" + std::to_string(i));
      WriteNetwork(net, dir);
      WriteMetrics(out.metrics, dir);
      if (std::holds_alternative<Instance>(config.model)) {
        nlohmann::json j = ToJson(trace);
        j["saturated"] = out.saturated;
        WriteJson(j, dir / "trace.json");
      }
    }
  });

  SummaryReport summary;
  summary.n_seeds = config.n_seeds;
  std::map<std::string, std::vector<double>> values;
  std::vector<std::map<std::string, double>> scalars;
  std::vector<uint64_t> pooled;
  for (auto& r : results) {
    scalars.push_back(ScalarMetrics(r.metrics));
    for (const auto& [name, v] : scalars.back()) values[name].push_back(v);
    summary.saturated_runs += r.saturated;
    if (r.degree_counts.size() > pooled.size()) {
      pooled.resize(r.degree_counts.size(), 0);
    }
    for (std::size_t k = 0; k < r.degree_counts.size(); ++k) {
      pooled[k] += r.degree_counts[k];
    }
    summary.runs.push_back(std::move(r.metrics));
  }
  for (const auto& [name, vs] : values) {
    MetricSummary m;
    m.count = vs.size();
    for (double v : vs) m.mean += v;
    m.mean /= static_cast<double>(vs.size());
    for (double v : vs) m.stddev += (v - m.mean) * (v - m.mean);
    m.stddev = std::sqrt(m.stddev / static_cast<double>(vs.size()));
    summary.metrics[name] = m;
  }

  for (const auto& name : config.discrepancy_metrics) {
    if (auto it = config.reference.find(name); it != config.reference.end()) {
      summary.reference[name] = it->second;
    } else if (auto m = summary.metrics.find(name);
               m != summary.metrics.end()) {
      summary.reference[name] = m->second.mean;
    }
  }
  auto within = [&](double tolerance) {
    std::size_t hits = 0;
    for (const auto& s : scalars) {
      bool ok = true;
      for (const auto& name : config.discrepancy_metrics) {
        auto ref = summary.reference.find(name);
        auto v = s.find(name);
        if (ref == summary.reference.end() || v == s.end() ||
            std::abs(v->second - ref->second) >
                tolerance * std::abs(ref->second)) {
          ok = false;
          break;
        }
      }
      hits += ok;
    }
    return static_cast<double>(hits) / static_cast<double>(scalars.size());
  };
  summary.within_10 = within(0.10);
  summary.within_20 = within(0.20);

  uint64_t total = 0;
  for (uint64_t c : pooled) total += c;
  for (std::size_t k = 0; k < pooled.size(); ++k) {
    if (pooled[k] != 0) {
      summary.aggregate_degree_distribution[k] =
          static_cast<double>(pooled[k]) / static_cast<double>(total);
    }
  }
  try {
    summary.aggregate_fit = FitPowerLawSlope(
        summary.aggregate_degree_distribution, config.fit_k_min);
  } catch (const std::invalid_argument&) {
  }

  if (!config.output_directory.empty()) {
    std::filesystem::create_directories(config.output_directory);
    WriteJson(ToJson(summary), config.output_directory / "summary.json");
  }
  return summary;
}

nlohmann::json ToJson(const SummaryReport& s) {
  nlohmann::json j;
  j["format"] = "snm summary v1";
  j["n_seeds"] = s.n_seeds;
  j["saturated_runs"] = s.saturated_runs;
  j["within_10_percent"] = s.within_10;
  j["within_20_percent"] = s.within_20;
  j["reference"] = s.reference;
  for (const auto& [name, m] : s.metrics) {
    j["metrics"][name] = {
        {"mean", m.mean}, {"stddev", m.stddev}, {"count", m.count}};
  }
  nlohmann::json dist = nlohmann::json::array();
  for (const auto& [k, v] : s.aggregate_degree_distribution) {
    dist.push_back({k, v});
  }
  j["aggregate_degree_distribution"] = dist;
  if (s.aggregate_fit) {
    j["aggregate_fit"] = {{"slope", s.aggregate_fit->slope},
                          {"r_squared", s.aggregate_fit->r_squared},
                          {"k_min", s.aggregate_fit->k_min},
                          {"points", s.aggregate_fit->points}};
  } else {
    j["aggregate_fit"] = nullptr;
  }
  return j;
}

ComparisonCurves RunGrowthComparison(const Instance& sn, const BAParams& ba,
                                     const std::vector<std::size_t>& checkpoints,
                                     std::size_t n_seeds, bool path_lengths,
                                     unsigned threads) {
  if (checkpoints.empty() ||
      !std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      std::adjacent_find(checkpoints.begin(), checkpoints.end()) !=
          checkpoints.end()) {
    throw std::invalid_argument(
        "RunGrowthComparison: checkpoints must be non-empty and ascending");
  }
  if (n_seeds < 1) throw std::invalid_argument("n_seeds must be >= 1");
  const std::size_t points = checkpoints.size();
  // Per seed, per model, per checkpoint: (k, L, C); NaN when unreached.
  struct Sample {
    double k = NAN, l = NAN, c = NAN;
  };
  std::vector<std::vector<Sample>> sn_samples(n_seeds), ba_samples(n_seeds);

  ParallelFor(n_seeds, threads, [&](std::size_t i) {
    auto record = [&](std::vector<Sample>& row) {
      return [&row, &checkpoints, path_lengths](const Network& net) {
        const auto at = std::find(checkpoints.begin(), checkpoints.end(),
                                  net.num_nodes());
        if (at == checkpoints.end()) return;
        Sample& s = row[static_cast<std::size_t>(at - checkpoints.begin())];
        s.k = AverageDegree(net);
        s.c = AverageClustering(net);
        if (path_lengths) s.l = AveragePathLength(net).value_or(NAN);
      };
    };
    sn_samples[i].resize(points);
    ba_samples[i].resize(points);

    Instance run = sn;
    run.seed = sn.seed + i;
    run.target_nodes = checkpoints.back();
    if (run.max_attempts != 0 && run.max_attempts < run.target_nodes) {
      run.max_attempts = run.target_nodes;
    }
    run.mode = GrowthMode::kIncremental;
    run.prune_min_degree = 0;
    Rng sn_rng(run.seed);
    GrowIncremental(run, sn_rng,
                    GrowthOptions{.checkpoint_at = checkpoints,
                                  .on_checkpoint = record(sn_samples[i])});

    BAParams ba_run = ba;
    ba_run.seed = ba.seed + i;
    ba_run.target_nodes = checkpoints.back();
    Rng ba_rng(ba_run.seed);
    GrowBA(ba_run, ba_rng,
           GrowthOptions{.checkpoint_at = checkpoints,
                         .on_checkpoint = record(ba_samples[i])});
  });

  ComparisonCurves curves;
  curves.checkpoints = checkpoints;
  curves.n_seeds = n_seeds;
  auto average = [&](const std::vector<std::vector<Sample>>& samples,
                     CurveSeries& series) {
    for (std::size_t p = 0; p < points; ++p) {
      double sum[3] = {0, 0, 0};
      std::size_t count[3] = {0, 0, 0};
      for (const auto& row : samples) {
        const double v[3] = {row[p].k, row[p].l, row[p].c};
        for (int m = 0; m < 3; ++m) {
          if (!std::isnan(v[m])) {
            sum[m] += v[m];
            ++count[m];
          }
        }
      }
      auto mean = [&](int m) {
        return count[m] == 0 ? NAN : sum[m] / static_cast<double>(count[m]);
      };
      series.average_degree.push_back(mean(0));
      series.average_path_length.push_back(mean(1));
      series.average_clustering.push_back(mean(2));
    }
  };
  average(sn_samples, curves.sn);
  average(ba_samples, curves.ba);
  return curves;
}

void WriteComparisonCurves(const ComparisonCurves& curves,
                           const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::vector<double>& sn,
                   const std::vector<double>& ba) {
    std::ofstream out(dir / (name + ".dat"));
    if (!out) throw std::runtime_error("cannot write curves to " + dir.string());
    out << "# snm growth-comparison v1 " << name << " seeds="
        << curves.n_seeds << "\n# nodes\tsn\tba\n";
    char buf[64];
    for (std::size_t p = 0; p < curves.checkpoints.size(); ++p) {
      std::snprintf(buf, sizeof buf, "%.17g\t%.17g", sn[p], ba[p]);
      out << curves.checkpoints[p] << '\t' << buf << '\n';
    }
  };
  write("average_degree", curves.sn.average_degree, curves.ba.average_degree);
  write("average_path_length", curves.sn.average_path_length,
        curves.ba.average_path_length);
  write("average_clustering", curves.sn.average_clustering,
        curves.ba.average_clustering);
}

}  // namespace snm
