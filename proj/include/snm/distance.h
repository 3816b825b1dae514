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

#ifndef SNM_DISTANCE_H_
#define SNM_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "snm/structure.h"

namespace snm {

// Declared equivalences between symbol tuples of one fixed length. The table
// is kept symmetric: AddPair(a, b) records both a->b and b->a.
class MatchTable {
 public:
  explicit MatchTable(std::size_t unit);

  std::size_t unit() const { return unit_; }
  bool empty() const { return entries_.empty(); }

  // Registers `tuple` with no equivalences (an "AB =" line).
  void Declare(std::string_view tuple);
  void AddPair(std::string_view a, std::string_view b);
  bool Declares(std::string_view tuple) const;
  bool Matches(std::string_view a, std::string_view b) const;

  const std::map<std::string, std::set<std::string>, std::less<>>& entries()
      const {
    return entries_;
  }

 private:
  void CheckTuple(std::string_view tuple) const;

  std::size_t unit_;
  std::map<std::string, std::set<std::string>, std::less<>> entries_;
};

// Reads the match-file format: one rule per line, "TUPLE = [TUPLE ...]",
// '#' starts a comment, blank lines ignored. Missing reverse directions are
// filled in and reported through `warnings`. Throws std::invalid_argument
// with the line number on a malformed line, a tuple of the wrong length, or
// a symbol outside `alphabet`.
MatchTable ParseMatchFile(std::istream& in, std::size_t unit,
                          const Alphabet& alphabet,
                          std::vector<std::string>* warnings = nullptr);
MatchTable ParseMatchFile(std::string_view text, std::size_t unit,
                          const Alphabet& alphabet,
                          std::vector<std::string>* warnings = nullptr);
MatchTable LoadMatchFile(const std::filesystem::path& path, std::size_t unit,
                         const Alphabet& alphabet,
                         std::vector<std::string>* warnings = nullptr);

struct DistanceConfig {
  std::size_t unit_distance = 1;
  std::size_t max_distance = 0;
  // Immutable once built; shared read-only between runs.
  std::shared_ptr<const MatchTable> match_table;

  // unit_distance >= 1; a match table only with unit_distance > 1 and of
  // the same unit. Throws std::invalid_argument.
  void Validate() const;
};

// Identical tuples are always equal. A tuple that appears in `table` equals
// exactly the partners listed for it there; two tuples the table does not
// mention are equal when they hold the same multiset of symbols. Throws on a
// length mismatch.
bool GroupsEqual(std::string_view g1, std::string_view g2,
                 const MatchTable* table);

// Number of mismatching groups among the first floor(min(|a|,|b|) / unit)
// groups. Symbols past the last whole common group are ignored.
std::size_t StructureDistance(const Structure& a, const Structure& b,
                              const DistanceConfig& cfg);

bool WithinMaxDistance(const Structure& a, const Structure& b,
                       const DistanceConfig& cfg);

// Integer group codes for the growth loops. A structure becomes one code per
// whole group: a canonical code (sorted symbols for tuples the table does not
// mention, so multiset-equal groups share it; a private code for declared
// tuples) and, when a match table is present, a literal code used to look up
// declared pairs. Requires |alphabet|^unit <= 2^32.
class GroupCodec {
 public:
  struct Encoded {
    std::vector<uint64_t> canonical;
    std::vector<uint64_t> literal;
  };

  GroupCodec(const Alphabet& alphabet, const DistanceConfig& cfg);

  Encoded Encode(const Structure& s) const;

  bool has_table() const { return has_table_; }
  std::size_t max_distance() const { return max_distance_; }

  bool GroupsMatch(uint64_t canon_a, uint64_t canon_b, uint64_t lit_a,
                   uint64_t lit_b) const {
    if (canon_a == canon_b) return true;
    return has_table() && table_pairs_.contains(lit_a * tuple_count_ + lit_b);
  }

  // Group mismatch count, stopping early once it exceeds `stop_above`.
  std::size_t Distance(const Encoded& a, const Encoded& b,
                       std::size_t stop_above) const;

  bool Within(const Encoded& a, const Encoded& b) const {
    return Distance(a, b, max_distance_) <= max_distance_;
  }

 private:
  const Alphabet* alphabet_;
  std::size_t unit_;
  std::size_t max_distance_;
  uint64_t tuple_count_;
  bool has_table_ = false;
  std::unordered_set<uint64_t> declared_;
  std::unordered_set<uint64_t> table_pairs_;
};

// Flat storage of encoded structures with a linear neighbor scan.
class EncodedPool {
 public:
  explicit EncodedPool(const GroupCodec& codec) : codec_(&codec) {}

  void Add(const GroupCodec::Encoded& e) {
    offsets_.push_back(canonical_.size());
    canonical_.insert(canonical_.end(), e.canonical.begin(),
                      e.canonical.end());
    if (codec_->has_table()) {
      literal_.insert(literal_.end(), e.literal.begin(), e.literal.end());
    }
    lengths_.push_back(static_cast<uint32_t>(e.canonical.size()));
  }

  std::size_t size() const { return offsets_.size(); }

  // Calls fn(i) for each stored entry i within max distance of `probe`.
  template <typename Fn>
  void ForEachWithin(const GroupCodec::Encoded& probe, Fn&& fn) const {
    const std::size_t limit = codec_->max_distance();
    const bool table = codec_->has_table();
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      const std::size_t groups =
          std::min<std::size_t>(lengths_[i], probe.canonical.size());
      const uint64_t* canon = canonical_.data() + offsets_[i];
      std::size_t mismatches = 0;
      for (std::size_t g = 0; g < groups; ++g) {
        if (canon[g] == probe.canonical[g]) continue;
        if (table && codec_->GroupsMatch(canon[g], probe.canonical[g],
                                         literal_[offsets_[i] + g],
                                         probe.literal[g])) {
          continue;
        }
        if (++mismatches > limit) break;
      }
      if (mismatches <= limit) fn(i);
    }
  }

 private:
  const GroupCodec* codec_;
  std::vector<std::size_t> offsets_;
  std::vector<uint32_t> lengths_;
  std::vector<uint64_t> canonical_;
  std::vector<uint64_t> literal_;
};

}  // namespace snm

#endif  // SNM_DISTANCE_H_
