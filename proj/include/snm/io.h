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

#ifndef SNM_IO_H_
#define SNM_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "snm/growth.h"
#include "snm/metrics.h"
#include "snm/network.h"

namespace snm {

// First line of every file this module writes; readers skip '#' lines.
inline constexpr std::string_view kEdgeListHeader = "# snm edge-list v1";
inline constexpr std::string_view kStructuresHeader = "# snm structures v1";
inline constexpr std::string_view kDistributionHeader = "# snm distribution v1";

// "<header> nodes=N" followed by one "u<TAB>v" line per edge, u < v.
void WriteEdgeList(const Network& net, std::ostream& out);
// One "id<TAB>structure" line per node that has a structure.
void WriteStructures(const Network& net, std::ostream& out);

// Writes edges.tsv and, when any node has a structure, structures.tsv.
void WriteNetwork(const Network& net, const std::filesystem::path& dir);

// Reads whitespace-separated 0-based id pairs. The node count is the larger
// of max id + 1 and a "nodes=N" header value. Repeated edges are kept once
// with a warning; self-loops and malformed lines throw std::invalid_argument
// naming the line.
Network ReadEdgeList(std::istream& in,
                     std::vector<std::string>* warnings = nullptr);
Network ReadEdgeList(const std::filesystem::path& path,
                     std::vector<std::string>* warnings = nullptr);

// Attaches structures from a structures file to `net`.
void ReadStructures(std::istream& in, Network& net);

nlohmann::json ToJson(const MetricsReport& report);
nlohmann::json ToJson(const GrowthTrace& trace);

// Two-column "key<TAB>fraction" text with a header naming `name`.
void WriteDistribution(const std::map<std::size_t, double>& dist,
                       std::string_view name, std::ostream& out);

// metrics.json plus degree_distribution.dat, clustering_by_degree.dat,
// path_length_distribution.dat and motif_census.dat.
void WriteMetrics(const MetricsReport& report,
                  const std::filesystem::path& dir);

}  // namespace snm

#endif  // SNM_IO_H_
