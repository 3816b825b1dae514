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

#include "snm/structure.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace snm {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw std::invalid_argument("Alphabet: empty");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[Byte(symbols_[i])];
    if (slot >= 0) {
      throw std::invalid_argument(std::string("Alphabet: repeated symbol '") +
                                  symbols_[i] + "'");
    }
    slot = static_cast<int16_t>(i);
  }
}

Alphabet Alphabet::Range(char first, char last) {
  if (first > last) throw std::invalid_argument("Alphabet: empty range");
  std::string symbols;
  for (int c = first; c <= last; ++c) symbols.push_back(static_cast<char>(c));
  return Alphabet(symbols);
}

Structure::Structure(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("Structure: empty word");
}

Structure::Structure(std::string word, const Alphabet& alphabet)
    : Structure(std::move(word)) {
  CheckSymbols(word_, alphabet);
}

void CheckSymbols(std::string_view word, const Alphabet& alphabet) {
  for (char c : word) {
    if (!alphabet.Contains(c)) {
      throw std::invalid_argument(std::string("symbol '") + c +
                                  "' is not in alphabet \"" +
                                  alphabet.symbols() + "\"");
    }
  }
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMutate:
      return "mutate";
    case EditKind::kInsert:
      return "insert";
    case EditKind::kDelete:
      return "delete";
    case EditKind::kDuplicate:
      return "duplicate";
  }
  return "unknown";
}

void EditProbabilities::Validate() const {
  for (double p : {mutate, insert, remove, duplicate}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "EditProbabilities: each probability must lie in [0, 1]");
    }
  }
  const double sum = mutate + insert + remove + duplicate;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "EditProbabilities: p_mutate + p_insert + p_delete + p_duplicate "
        "must equal 1 (got " +
        std::to_string(sum) + ")");
  }
}

Structure Mutate(const Structure& s, std::size_t index, char symbol,
                 const Alphabet& alphabet) {
  if (index >= s.size()) throw std::out_of_range("Mutate: index out of range");
  CheckSymbols(std::string_view(&symbol, 1), alphabet);
  std::string word = s.word();
  word[index] = symbol;
  return Structure(std::move(word));
}

Structure InsertSymbol(const Structure& s, std::size_t index, char symbol,
                       const Alphabet& alphabet) {
  if (index > s.size()) {
    throw std::out_of_range("InsertSymbol: index out of range");
  }
  CheckSymbols(std::string_view(&symbol, 1), alphabet);
  std::string word = s.word();
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(index), symbol);
  return Structure(std::move(word));
}

Structure DeleteSymbol(const Structure& s, std::size_t index) {
  if (index >= s.size()) {
    throw std::out_of_range("DeleteSymbol: index out of range");
  }
  if (s.size() < 2) {
    throw std::invalid_argument(
        "DeleteSymbol: cannot delete from a length-1 structure");
  }
  std::string word = s.word();
  word.erase(index, 1);
  return Structure(std::move(word));
}

Structure DuplicateSegment(const Structure& s, std::size_t start,
                           std::size_t length) {
  if (length == 0 || start >= s.size() || length > s.size() - start) {
    throw std::out_of_range("DuplicateSegment: segment out of range");
  }
  std::string word = s.word();
  word.insert(start + length, s.word(), start, length);
  return Structure(std::move(word));
}

namespace {

EditKind DrawKind(const EditProbabilities& probs, Rng& rng) {
  const std::array<std::pair<EditKind, double>, 4> table = {{
      {EditKind::kMutate, probs.mutate},
      {EditKind::kInsert, probs.insert},
      {EditKind::kDelete, probs.remove},
      {EditKind::kDuplicate, probs.duplicate},
  }};
  const double u = rng.UniformReal();
  double cumulative = 0.0;
  EditKind last_nonzero = EditKind::kMutate;
  for (const auto& [kind, p] : table) {
    if (p <= 0.0) continue;
    cumulative += p;
    last_nonzero = kind;
    if (u < cumulative) return kind;
  }
  // Rounding left u above the cumulative sum.
  return last_nonzero;
}

}  // namespace

EditOutcome ApplyRandomEdit(const Structure& s, const EditProbabilities& probs,
                            const Alphabet& alphabet, Rng& rng,
                            std::size_t max_length) {
  const EditKind kind = DrawKind(probs, rng);
  const std::size_t n = s.size();
  EditOutcome out{kind, std::nullopt};
  switch (kind) {
    case EditKind::kMutate: {
      if (alphabet.size() < 2) return out;
      const std::size_t pos = rng.UniformIndex(n);
      const auto current = static_cast<uint64_t>(alphabet.IndexOf(s[pos]));
      uint64_t pick = rng.UniformIndex(alphabet.size() - 1);
      if (pick >= current) ++pick;
      out.structure = Mutate(s, pos, alphabet[pick], alphabet);
      break;
    }
    case EditKind::kInsert: {
      if (n + 1 > max_length) return out;
      const std::size_t pos = rng.UniformIndex(n + 1);
      const char symbol = alphabet[rng.UniformIndex(alphabet.size())];
      out.structure = InsertSymbol(s, pos, symbol, alphabet);
      break;
    }
    case EditKind::kDelete: {
      if (n < 2) return out;
      out.structure = DeleteSymbol(s, rng.UniformIndex(n));
      break;
    }
    case EditKind::kDuplicate: {
      // Each of the n(n+1)/2 contiguous segments is equally likely.
      uint64_t r = rng.UniformIndex(n * (n + 1) / 2);
      std::size_t start = 0;
      while (r >= n - start) {
        r -= n - start;
        ++start;
      }
      const std::size_t length = static_cast<std::size_t>(r) + 1;
      if (n + length > max_length) return out;
      out.structure = DuplicateSegment(s, start, length);
      break;
    }
  }
  return out;
}

}  // namespace snm
