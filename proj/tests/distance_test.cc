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

#include <gtest/gtest.h>

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "test_support.h"

namespace snm {
namespace {

const Alphabet kABC("ABC");
const Alphabet kAB("AB");
constexpr std::string_view kExampleMatches = "AB =\nBA =\nAA = BB\nBB = AA\n";

DistanceConfig Unit(std::size_t unit, std::size_t max = 0,
                    std::shared_ptr<const MatchTable> table = nullptr) {
  return DistanceConfig{unit, max, std::move(table)};
}

TEST(DistanceTest, GroupSizeWorkedExamples) {
  const Structure a("ABBABC"), b("BABCAB");
  EXPECT_EQ(StructureDistance(a, b, Unit(1)), 5u);
  EXPECT_EQ(StructureDistance(a, b, Unit(2)), 2u);
  EXPECT_EQ(StructureDistance(a, b, Unit(3)), 0u);
}

TEST(DistanceTest, LongerStructureTailIsIgnored) {
  EXPECT_EQ(
      StructureDistance(Structure("ABBABBC"), Structure("ABCABC"), Unit(1)),
      2u);
}

TEST(DistanceTest, MatchTableWorkedExample) {
  auto table =
      std::make_shared<const MatchTable>(ParseMatchFile(kExampleMatches, 2, kAB));
  const Structure a("ABBB"), b("ABAA");
  EXPECT_EQ(StructureDistance(a, b, Unit(2, 0, table)), 0u);
  EXPECT_EQ(StructureDistance(a, b, Unit(2)), 1u);
}

TEST(DistanceTest, TrailingPartialGroupIgnored) {
  // Common prefix of 5 symbols holds two whole pairs; the fifth symbol
  // differs but does not count.
  EXPECT_EQ(StructureDistance(Structure("ABABA"), Structure("BABAB"), Unit(2)),
            0u);
  EXPECT_EQ(StructureDistance(Structure("A"), Structure("B"), Unit(2)), 0u);
}

TEST(DistanceTest, WithinMaxDistanceBoundaries) {
  EXPECT_TRUE(
      WithinMaxDistance(Structure("AB"), Structure("AA"), Unit(1, 1)));
  EXPECT_TRUE(WithinMaxDistance(Structure("ABBABBC"), Structure("ABBABC"),
                                Unit(1, 1)));
  EXPECT_FALSE(WithinMaxDistance(Structure("ABCBC"), Structure("ABCABC"),
                                 Unit(1, 1)));
}

TEST(GroupsEqualTest, MultisetRule) {
  EXPECT_TRUE(GroupsEqual("AB", "BA", nullptr));
  EXPECT_FALSE(GroupsEqual("BB", "AA", nullptr));
  EXPECT_TRUE(GroupsEqual("ABC", "CAB", nullptr));
  EXPECT_THROW(GroupsEqual("AB", "ABC", nullptr), std::invalid_argument);
}

TEST(GroupsEqualTest, TableDeclaresEquivalences) {
  const MatchTable table = ParseMatchFile(kExampleMatches, 2, kAB);
  EXPECT_TRUE(GroupsEqual("BB", "AA", &table));
  EXPECT_TRUE(GroupsEqual("AB", "AB", &table));
  // Declared tuples compare by the table: "AB =" lists no partner.
  EXPECT_FALSE(GroupsEqual("AB", "BA", &table));
}

TEST(GroupsEqualTest, UndeclaredTuplesKeepMultisetRule) {
  const MatchTable table = ParseMatchFile("AA = BB\n", 2, kABC);
  EXPECT_TRUE(GroupsEqual("AC", "CA", &table));
  EXPECT_TRUE(GroupsEqual("AA", "BB", &table));
  EXPECT_FALSE(GroupsEqual("AA", "CC", &table));
}

TEST(MatchFileTest, ExampleFileParses) {
  std::vector<std::string> warnings;
  const MatchTable t = ParseMatchFile(kExampleMatches, 2, kAB, &warnings);
  EXPECT_TRUE(warnings.empty());
  ASSERT_EQ(t.entries().size(), 4u);
  EXPECT_TRUE(t.entries().at("AB").empty());
  EXPECT_TRUE(t.entries().at("BA").empty());
  EXPECT_EQ(t.entries().at("AA"), std::set<std::string>({"BB"}));
  EXPECT_EQ(t.entries().at("BB"), std::set<std::string>({"AA"}));
}

TEST(MatchFileTest, EmptyInputGivesEmptyTable) {
  EXPECT_TRUE(ParseMatchFile("", 2, kAB).empty());
  EXPECT_TRUE(ParseMatchFile("# only a comment\n\n", 2, kAB).empty());
}

TEST(MatchFileTest, OneDirectionIsClosedWithWarning) {
  std::vector<std::string> warnings;
  const MatchTable t = ParseMatchFile("AA = BB", 2, kAB, &warnings);
  EXPECT_TRUE(t.Matches("AA", "BB"));
  EXPECT_TRUE(t.Matches("BB", "AA"));
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(MatchFileTest, Errors) {
  EXPECT_THROW(ParseMatchFile("AAA = BBB", 2, kAB), std::invalid_argument);
  EXPECT_THROW(ParseMatchFile("AC = CA", 2, kAB), std::invalid_argument);
  EXPECT_THROW(ParseMatchFile("AA BB", 2, kAB), std::invalid_argument);
  EXPECT_THROW(ParseMatchFile("AA = B", 2, kAB), std::invalid_argument);
  EXPECT_THROW(MatchTable(1), std::invalid_argument);
  try {
    ParseMatchFile("AA = BB\nAB\n", 2, kAB);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(DistanceConfigTest, TableRequiresUnitAboveOne) {
  auto table = std::make_shared<const MatchTable>(2);
  EXPECT_THROW(Unit(1, 0, table).Validate(), std::invalid_argument);
  EXPECT_THROW(Unit(3, 0, table).Validate(), std::invalid_argument);
  EXPECT_NO_THROW(Unit(2, 0, table).Validate());
  EXPECT_THROW(Unit(0).Validate(), std::invalid_argument);
}

// Random symmetric table over {A,B,C} tuples of `unit`.
std::shared_ptr<const MatchTable> RandomTable(Rng& rng, std::size_t unit) {
  auto table = std::make_shared<MatchTable>(unit);
  const int rules = static_cast<int>(rng.UniformIndex(6));
  for (int i = 0; i < rules; ++i) {
    const auto a = testing::RandomWord(rng, "ABC", unit, unit);
    if (rng.UniformIndex(3) == 0) {
      table->Declare(a);
    } else {
      table->AddPair(a, testing::RandomWord(rng, "ABC", unit, unit));
    }
  }
  return table;
}

TEST(DistancePropertyTest, SymmetryIdentityBound) {
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t unit = 1 + rng.UniformIndex(3);
    DistanceConfig cfg = Unit(unit);
    if (unit > 1 && rng.UniformIndex(2) == 0) {
      cfg.match_table = RandomTable(rng, unit);
    }
    const Structure a(testing::RandomWord(rng, "ABC", 1, 15));
    const Structure b(testing::RandomWord(rng, "ABC", 1, 15));
    const std::size_t d = StructureDistance(a, b, cfg);
    ASSERT_EQ(d, StructureDistance(b, a, cfg));
    ASSERT_EQ(StructureDistance(a, a, cfg), 0u);
    ASSERT_LE(d, std::min(a.size(), b.size()) / unit);
  }
}

TEST(DistancePropertyTest, UnitOneIsPrefixHamming) {
  Rng rng(17);
  for (int i = 0; i < 5000; ++i) {
    const auto a = testing::RandomWord(rng, "ABC", 1, 20);
    const auto b = testing::RandomWord(rng, "ABC", 1, 20);
    ASSERT_EQ(StructureDistance(Structure(a), Structure(b), Unit(1)),
              testing::PrefixHamming(a, b));
  }
}

// Adding a partner between two tuples that are already declared can only
// turn mismatches into matches.
TEST(DistancePropertyTest, AddingPartnersNeverIncreasesDistance) {
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    auto base = std::make_shared<MatchTable>(2);
    for (const char* t : {"AA", "AB", "BA", "BB", "AC", "CA", "BC", "CB", "CC"}) {
      base->Declare(t);
    }
    auto bigger = std::make_shared<MatchTable>(*base);
    bigger->AddPair(testing::RandomWord(rng, "ABC", 2, 2),
                    testing::RandomWord(rng, "ABC", 2, 2));
    const Structure a(testing::RandomWord(rng, "ABC", 2, 12));
    const Structure b(testing::RandomWord(rng, "ABC", 2, 12));
    ASSERT_LE(StructureDistance(a, b, Unit(2, 0, bigger)),
              StructureDistance(a, b, Unit(2, 0, base)));
  }
}

// The integer codec used by growth must agree with the string definition.
TEST(GroupCodecTest, AgreesWithStructureDistance) {
  Rng rng(31);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t unit = 1 + rng.UniformIndex(3);
    DistanceConfig cfg = Unit(unit, rng.UniformIndex(4));
    if (unit > 1 && rng.UniformIndex(2) == 0) {
      cfg.match_table = RandomTable(rng, unit);
    }
    const GroupCodec codec(kABC, cfg);
    const Structure a(testing::RandomWord(rng, "ABC", 1, 15));
    const Structure b(testing::RandomWord(rng, "ABC", 1, 15));
    const auto ea = codec.Encode(a), eb = codec.Encode(b);
    ASSERT_EQ(codec.Distance(ea, eb, SIZE_MAX), StructureDistance(a, b, cfg))
        << a.word() << " " << b.word();
    ASSERT_EQ(codec.Within(ea, eb), WithinMaxDistance(a, b, cfg));
  }
}

TEST(GroupCodecTest, PoolScanMatchesPairwiseRule) {
  Rng rng(37);
  auto table = std::make_shared<const MatchTable>(
      ParseMatchFile("AA = BB\nAB =\nCC = AB\n", 2, kABC));
  const DistanceConfig cfg = Unit(2, 1, table);
  const GroupCodec codec(kABC, cfg);
  EncodedPool pool(codec);
  std::vector<Structure> stored;
  for (int i = 0; i < 200; ++i) {
    stored.emplace_back(testing::RandomWord(rng, "ABC", 2, 10));
    pool.Add(codec.Encode(stored.back()));
  }
  for (int i = 0; i < 100; ++i) {
    const Structure probe(testing::RandomWord(rng, "ABC", 2, 10));
    std::vector<std::size_t> hits;
    pool.ForEachWithin(codec.Encode(probe),
                       [&](std::size_t j) { hits.push_back(j); });
    std::vector<std::size_t> expected;
    for (std::size_t j = 0; j < stored.size(); ++j) {
      if (WithinMaxDistance(probe, stored[j], cfg)) expected.push_back(j);
    }
    ASSERT_EQ(hits, expected);
  }
}

}  // namespace
}  // namespace snm
