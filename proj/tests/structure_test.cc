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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "test_support.h"

namespace snm {
namespace {

const Alphabet kABC("ABC");
const Alphabet kAB("AB");

TEST(AlphabetTest, RejectsEmptyAndRepeats) {
  EXPECT_THROW(Alphabet(""), std::invalid_argument);
  EXPECT_THROW(Alphabet("ABA"), std::invalid_argument);
}

TEST(AlphabetTest, RangeIsInclusive) {
  const Alphabet a = Alphabet::Range('A', 'T');
  EXPECT_EQ(a.size(), 20u);
  EXPECT_TRUE(a.Contains('T'));
  EXPECT_FALSE(a.Contains('U'));
  EXPECT_EQ(a.IndexOf('C'), 2);
}

TEST(StructureTest, RejectsEmptyWordAndForeignSymbols) {
  EXPECT_THROW(Structure(""), std::invalid_argument);
  EXPECT_THROW(Structure("ABD", kABC), std::invalid_argument);
  EXPECT_NO_THROW(Structure("CAB", kABC));
}

TEST(EditTest, MutateWorkedExamples) {
  EXPECT_EQ(Mutate(Structure("ABCABC"), 2, 'B', kABC).word(), "ABBABC");
  EXPECT_EQ(Mutate(Structure("A"), 0, 'B', kAB).word(), "B");
  EXPECT_EQ(Mutate(Structure("ABAB"), 3, 'A', kAB).word(), "ABAA");
}

TEST(EditTest, MutateErrors) {
  EXPECT_THROW(Mutate(Structure("AB"), 2, 'A', kAB), std::out_of_range);
  EXPECT_THROW(Mutate(Structure("AB"), 0, 'C', kAB), std::invalid_argument);
}

TEST(EditTest, InsertWorkedExamples) {
  EXPECT_EQ(InsertSymbol(Structure("ABBABC"), 5, 'B', kABC).word(), "ABBABBC");
  EXPECT_EQ(InsertSymbol(Structure("A"), 1, 'B', kAB).word(), "AB");
  EXPECT_EQ(InsertSymbol(Structure("A"), 0, 'B', kAB).word(), "BA");
  EXPECT_THROW(InsertSymbol(Structure("A"), 2, 'B', kAB), std::out_of_range);
  EXPECT_THROW(InsertSymbol(Structure("A"), 0, 'Z', kAB),
               std::invalid_argument);
}

TEST(EditTest, DeleteWorkedExamples) {
  EXPECT_EQ(DeleteSymbol(Structure("ABCABC"), 3).word(), "ABCBC");
  EXPECT_EQ(DeleteSymbol(Structure("AB"), 1).word(), "A");
  EXPECT_EQ(DeleteSymbol(Structure("AAB"), 0).word(), "AB");
  EXPECT_THROW(DeleteSymbol(Structure("AB"), 2), std::out_of_range);
  EXPECT_THROW(DeleteSymbol(Structure("A"), 0), std::invalid_argument);
}

TEST(EditTest, DuplicateWorkedExamples) {
  EXPECT_EQ(DuplicateSegment(Structure("ABBABBC"), 1, 2).word(), "ABBBBABBC");
  EXPECT_EQ(DuplicateSegment(Structure("A"), 0, 1).word(), "AA");
  EXPECT_EQ(DuplicateSegment(Structure("ABC"), 0, 3).word(), "ABCABC");
  EXPECT_THROW(DuplicateSegment(Structure("ABC"), 1, 3), std::out_of_range);
  EXPECT_THROW(DuplicateSegment(Structure("ABC"), 0, 0), std::out_of_range);
  EXPECT_THROW(DuplicateSegment(Structure("ABC"), 3, 1), std::out_of_range);
}

TEST(EditProbabilitiesTest, MustSumToOne) {
  EXPECT_NO_THROW((EditProbabilities{0.4, 0, 0, 0.6}.Validate()));
  EXPECT_THROW((EditProbabilities{0.4, 0, 0, 0.5}.Validate()),
               std::invalid_argument);
  EXPECT_THROW((EditProbabilities{1.5, -0.5, 0, 0}.Validate()),
               std::invalid_argument);
  EXPECT_NO_THROW((EditProbabilities{0.1, 0.2, 0.3, 0.4}.Validate()));
}

TEST(RandomEditTest, MutationAlwaysChangesExactlyOnePosition) {
  Rng rng(7);
  const Structure s("ABCABC");
  for (int i = 0; i < 2000; ++i) {
    auto out = ApplyRandomEdit(s, {1, 0, 0, 0}, kABC, rng);
    ASSERT_EQ(out.kind, EditKind::kMutate);
    ASSERT_TRUE(out.structure);
    ASSERT_EQ(out.structure->size(), 6u);
    ASSERT_EQ(testing::PrefixHamming(s.word(), out.structure->word()), 1u);
  }
}

TEST(RandomEditTest, DuplicationOfSingleSymbol) {
  Rng rng(1);
  auto out = ApplyRandomEdit(Structure("A"), {0, 0, 0, 1}, kAB, rng);
  ASSERT_TRUE(out.structure);
  EXPECT_EQ(out.structure->word(), "AA");
}

// The six (position, symbol) draws for inserting into "AB" over {A, B}
// give {AAB, BAB, AAB, ABB, ABA, ABB}.
TEST(RandomEditTest, InsertionReachesExactlyTheEnumeratedOutcomes) {
  std::set<std::string> expected;
  const std::string base = "AB";
  for (std::size_t pos = 0; pos <= base.size(); ++pos) {
    for (char c : std::string("AB")) {
      std::string w = base;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), c);
      expected.insert(w);
    }
  }
  ASSERT_EQ(expected, (std::set<std::string>{"AAB", "BAB", "ABB", "ABA"}));

  Rng rng(3);
  std::set<std::string> seen;
  for (int i = 0; i < 500; ++i) {
    auto out = ApplyRandomEdit(Structure("AB"), {0, 1, 0, 0}, kAB, rng);
    ASSERT_TRUE(out.structure);
    seen.insert(out.structure->word());
  }
  EXPECT_EQ(seen, expected);
}

TEST(RandomEditTest, DeleteOnSingleSymbolFails) {
  Rng rng(5);
  auto out = ApplyRandomEdit(Structure("A"), {0, 0, 1, 0}, kAB, rng);
  EXPECT_EQ(out.kind, EditKind::kDelete);
  EXPECT_FALSE(out.structure);
}

TEST(RandomEditTest, LengthCapFailsTheAttempt) {
  Rng rng(5);
  auto out = ApplyRandomEdit(Structure("ABAB"), {0, 1, 0, 0}, kAB, rng, 4);
  EXPECT_FALSE(out.structure);
}

TEST(RandomEditTest, DuplicationSegmentsAreUniform) {
  // "ABC" has 6 segments; each gives a distinct result.
  Rng rng(11);
  std::map<std::string, int> hits;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    auto out = ApplyRandomEdit(Structure("ABC"), {0, 0, 0, 1}, kABC, rng);
    ++hits[out.structure->word()];
  }
  ASSERT_EQ(hits.size(), 6u);
  for (const auto& [word, n] : hits) {
    EXPECT_NEAR(n, draws / 6, 500) << word;
  }
}

// Length effects and alphabet closure over random inputs.
TEST(RandomEditTest, LengthAndAlphabetProperties) {
  Rng rng(42);
  for (int i = 0; i < 5000; ++i) {
    const Structure s(testing::RandomWord(rng, "ABC", 1, 12));
    auto out = ApplyRandomEdit(s, {0.25, 0.25, 0.25, 0.25}, kABC, rng);
    if (!out.structure) {
      ASSERT_EQ(out.kind, EditKind::kDelete);
      ASSERT_EQ(s.size(), 1u);
      continue;
    }
    const auto& r = *out.structure;
    ASSERT_NO_THROW(CheckSymbols(r.word(), kABC));
    switch (out.kind) {
      case EditKind::kMutate:
        ASSERT_EQ(r.size(), s.size());
        break;
      case EditKind::kInsert:
        ASSERT_EQ(r.size(), s.size() + 1);
        break;
      case EditKind::kDelete:
        ASSERT_EQ(r.size() + 1, s.size());
        break;
      case EditKind::kDuplicate:
        ASSERT_GT(r.size(), s.size());
        ASSERT_LE(r.size(), 2 * s.size());
        break;
    }
  }
}

TEST(RandomEditTest, SameSeedSameOutput) {
  Rng a(99), b(99);
  const Structure s("ABCABCABC");
  for (int i = 0; i < 200; ++i) {
    auto x = ApplyRandomEdit(s, {0.1, 0.2, 0.3, 0.4}, kABC, a);
    auto y = ApplyRandomEdit(s, {0.1, 0.2, 0.3, 0.4}, kABC, b);
    ASSERT_EQ(x.kind, y.kind);
    ASSERT_EQ(x.structure, y.structure);
  }
}

TEST(RngTest, FixedStream) {
  // mt19937_64 output is pinned by the standard.
  Rng rng(5489);
  EXPECT_EQ(rng.NextU64(), 14514284786278117030ull);
}

}  // namespace
}  // namespace snm
