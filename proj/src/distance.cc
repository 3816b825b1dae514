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

#include "snm/distance.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snm {

MatchTable::MatchTable(std::size_t unit) : unit_(unit) {
  if (unit < 2) {
    throw std::invalid_argument("MatchTable: unit distance must exceed 1");
  }
}

void MatchTable::CheckTuple(std::string_view tuple) const {
  if (tuple.size() != unit_) {
    throw std::invalid_argument("MatchTable: tuple \"" + std::string(tuple) +
                                "\" does not have length " +
                                std::to_string(unit_));
  }
}

void MatchTable::Declare(std::string_view tuple) {
  CheckTuple(tuple);
  entries_.try_emplace(std::string(tuple));
}

void MatchTable::AddPair(std::string_view a, std::string_view b) {
  CheckTuple(a);
  CheckTuple(b);
  entries_[std::string(a)].emplace(b);
  entries_[std::string(b)].emplace(a);
}

bool MatchTable::Declares(std::string_view tuple) const {
  return entries_.find(tuple) != entries_.end();
}

bool MatchTable::Matches(std::string_view a, std::string_view b) const {
  auto it = entries_.find(a);
  if (it == entries_.end()) return false;
  return it->second.find(std::string(b)) != it->second.end();
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

MatchTable ParseMatchFile(std::istream& in, std::size_t unit,
                          const Alphabet& alphabet,
                          std::vector<std::string>* warnings) {
  MatchTable table(unit);
  // Directed pairs as written, to detect missing reverse directions.
  std::set<std::pair<std::string, std::string>> declared;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("match file line " + std::to_string(line_no) +
                                ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) fail("missing '='");
    const std::string lhs(Trim(text.substr(0, eq)));
    if (lhs.empty() || lhs.find_first_of(" \t") != std::string::npos) {
      fail("left side must be a single tuple");
    }
    try {
      CheckSymbols(lhs, alphabet);
      table.Declare(lhs);
      std::istringstream rhs{std::string(text.substr(eq + 1))};
      std::string tuple;
      while (rhs >> tuple) {
        CheckSymbols(tuple, alphabet);
        table.AddPair(lhs, tuple);
        declared.emplace(lhs, tuple);
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (warnings != nullptr) {
    for (const auto& [a, b] : declared) {
      if (!declared.contains({b, a})) {
        warnings->push_back("match file: \"" + a + " = " + b +
                            "\" has no reverse rule; added \"" + b + " = " +
                            a + "\"");
      }
    }
  }
  return table;
}

MatchTable ParseMatchFile(std::string_view text, std::size_t unit,
                          const Alphabet& alphabet,
                          std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return ParseMatchFile(in, unit, alphabet, warnings);
}

MatchTable LoadMatchFile(const std::filesystem::path& path, std::size_t unit,
                         const Alphabet& alphabet,
                         std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open match file " + path.string());
  }
  return ParseMatchFile(in, unit, alphabet, warnings);
}

void DistanceConfig::Validate() const {
  if (unit_distance < 1) {
    throw std::invalid_argument("DistanceConfig: unit_distance must be >= 1");
  }
  if (match_table != nullptr) {
    if (unit_distance < 2) {
      throw std::invalid_argument(
          "DistanceConfig: a match table requires unit_distance > 1");
    }
    if (match_table->unit() != unit_distance) {
      throw std::invalid_argument(
          "DistanceConfig: match table unit differs from unit_distance");
    }
  }
}

bool GroupsEqual(std::string_view g1, std::string_view g2,
                 const MatchTable* table) {
  if (g1.size() != g2.size()) {
    throw std::invalid_argument("GroupsEqual: groups differ in length");
  }
  if (g1 == g2) return true;
  if (table != nullptr && (table->Declares(g1) || table->Declares(g2))) {
    return table->Matches(g1, g2);
  }
  std::string a(g1), b(g2);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::size_t StructureDistance(const Structure& a, const Structure& b,
                              const DistanceConfig& cfg) {
  const std::size_t unit = cfg.unit_distance;
  if (unit == 0) throw std::invalid_argument("unit_distance must be >= 1");
  const std::size_t groups = std::min(a.size(), b.size()) / unit;
  const std::string_view wa = a.word(), wb = b.word();
  std::size_t distance = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    if (!GroupsEqual(wa.substr(g * unit, unit), wb.substr(g * unit, unit),
                     cfg.match_table.get())) {
      ++distance;
    }
  }
  return distance;
}

bool WithinMaxDistance(const Structure& a, const Structure& b,
                       const DistanceConfig& cfg) {
  return StructureDistance(a, b, cfg) <= cfg.max_distance;
}

GroupCodec::GroupCodec(const Alphabet& alphabet, const DistanceConfig& cfg)
    : alphabet_(&alphabet),
      unit_(cfg.unit_distance),
      max_distance_(cfg.max_distance) {
  cfg.Validate();
  tuple_count_ = 1;
  for (std::size_t i = 0; i < unit_; ++i) {
    tuple_count_ *= alphabet.size();
    if (tuple_count_ > (uint64_t{1} << 32)) {
      throw std::invalid_argument(
          "GroupCodec: alphabet size ^ unit_distance exceeds 2^32");
    }
  }
  if (cfg.match_table != nullptr && !cfg.match_table->empty()) {
    has_table_ = true;
    auto code = [&](std::string_view tuple) {
      uint64_t c = 0;
      for (char s : tuple) {
        c = c * alphabet.size() + static_cast<uint64_t>(alphabet.IndexOf(s));
      }
      return c;
    };
    for (const auto& [a, partners] : cfg.match_table->entries()) {
      CheckSymbols(a, alphabet);
      declared_.insert(code(a));
      for (const auto& b : partners) {
        CheckSymbols(b, alphabet);
        table_pairs_.insert(code(a) * tuple_count_ + code(b));
      }
    }
  }
}

GroupCodec::Encoded GroupCodec::Encode(const Structure& s) const {
  Encoded out;
  const std::size_t groups = s.size() / unit_;
  out.canonical.reserve(groups);
  if (has_table()) out.literal.reserve(groups);
  std::vector<uint64_t> digits(unit_);
  for (std::size_t g = 0; g < groups; ++g) {
    uint64_t literal = 0;
    for (std::size_t i = 0; i < unit_; ++i) {
      digits[i] = static_cast<uint64_t>(alphabet_->IndexOf(s[g * unit_ + i]));
      literal = literal * alphabet_->size() + digits[i];
    }
    uint64_t canonical;
    if (has_table_ && declared_.contains(literal)) {
      // Declared tuples match only themselves and their table partners;
      // the offset keeps them apart from multiset codes.
      canonical = tuple_count_ + literal;
    } else {
      std::sort(digits.begin(), digits.end());
      canonical = 0;
      for (uint64_t d : digits) canonical = canonical * alphabet_->size() + d;
    }
    out.canonical.push_back(canonical);
    if (has_table_) out.literal.push_back(literal);
  }
  return out;
}

std::size_t GroupCodec::Distance(const Encoded& a, const Encoded& b,
                                 std::size_t stop_above) const {
  const std::size_t groups = std::min(a.canonical.size(), b.canonical.size());
  std::size_t mismatches = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const bool match =
        has_table() ? GroupsMatch(a.canonical[g], b.canonical[g],
                                  a.literal[g], b.literal[g])
                    : a.canonical[g] == b.canonical[g];
    if (!match && ++mismatches > stop_above) break;
  }
  return mismatches;
}

}  // namespace snm
