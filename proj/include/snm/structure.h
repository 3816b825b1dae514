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

#ifndef SNM_STRUCTURE_H_
#define SNM_STRUCTURE_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "snm/random.h"

namespace snm {

// Ordered set of distinct single-character symbols.
class Alphabet {
 public:
  // Throws std::invalid_argument when `symbols` is empty or has repeats.
  explicit Alphabet(std::string_view symbols);

  // Every character from `first` to `last` inclusive, e.g. Range('A', 'T').
  static Alphabet Range(char first, char last);

  bool Contains(char c) const { return index_[Byte(c)] >= 0; }
  // Position of `c` in the alphabet, or -1.
  int IndexOf(char c) const { return index_[Byte(c)]; }
  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  static std::size_t Byte(char c) { return static_cast<unsigned char>(c); }

  std::string symbols_;
  std::array<int16_t, 256> index_;
};

// The word attached to a node. Always non-empty.
class Structure {
 public:
  // Throws std::invalid_argument on an empty word.
  explicit Structure(std::string word);
  // Additionally checks every symbol against `alphabet`.
  Structure(std::string word, const Alphabet& alphabet);

  const std::string& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  char operator[](std::size_t i) const { return word_[i]; }

  friend auto operator<=>(const Structure&, const Structure&) = default;
  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::string word_;
};

// Throws std::invalid_argument naming the first symbol outside `alphabet`.
void CheckSymbols(std::string_view word, const Alphabet& alphabet);

enum class EditKind : uint8_t { kMutate, kInsert, kDelete, kDuplicate };

std::string_view EditKindName(EditKind kind);

struct EditProbabilities {
  double mutate = 0.0;
  double insert = 0.0;
  double remove = 0.0;
  double duplicate = 0.0;

  // Each value in [0, 1] and the four summing to 1 within 1e-9; throws
  // std::invalid_argument otherwise.
  void Validate() const;
};

Structure Mutate(const Structure& s, std::size_t index, char symbol,
                 const Alphabet& alphabet);
Structure InsertSymbol(const Structure& s, std::size_t index, char symbol,
                       const Alphabet& alphabet);
// Fails on a length-1 structure, which would become empty.
Structure DeleteSymbol(const Structure& s, std::size_t index);
// Copies s[start, start + length) and places the copy right after the
// original segment.
Structure DuplicateSegment(const Structure& s, std::size_t start,
                           std::size_t length);

inline constexpr std::size_t kDefaultMaxStructureLength = 10000;

struct EditOutcome {
  EditKind kind;
  // Empty when the drawn edit cannot be applied: deletion from a length-1
  // word, mutation over a one-symbol alphabet, or a result longer than the
  // length cap.
  std::optional<Structure> structure;
};

// Draws an edit kind from `probs`, then its parameters uniformly:
//   mutate     position in [0,|s|), symbol from the alphabet minus the
//              current one;
//   insert     position in [0,|s|], any symbol;
//   delete     position in [0,|s|);
//   duplicate  one of the |s|(|s|+1)/2 contiguous segments.
EditOutcome ApplyRandomEdit(const Structure& s, const EditProbabilities& probs,
                            const Alphabet& alphabet, Rng& rng,
                            std::size_t max_length = kDefaultMaxStructureLength);

}  // namespace snm

template <>
struct std::hash<snm::Structure> {
  std::size_t operator()(const snm::Structure& s) const noexcept {
    return std::hash<std::string>()(s.word());
  }
};

#endif  // SNM_STRUCTURE_H_
