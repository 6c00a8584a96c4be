// Copyright 2026 The verbpattern Authors.
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

#include "verbpattern/pattern_store.h"

#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

PatternStore EatStore() {
  auto f = testing::LoadEatFixture();
  PatternStore store;
  store.AddVerb(
      MakePatternRecords(testing::EatReferenceAssignment(), f.corpus));
  return store;
}

TEST(PatternStoreTest, RecordsAreOrdered) {
  PatternStore store = EatStore();
  const auto *records = store.PatternsOf("eat");
  ASSERT_NE(records, nullptr);
  ASSERT_EQ(records->size(), 3u);
  EXPECT_EQ((*records)[0].pattern, VerbPattern::Concept("eat", "meal"));
  EXPECT_NEAR((*records)[0].probability, 2.0 / 3.0, 1e-15);
  EXPECT_EQ((*records)[0].phrases[0].object, "dinner");
  EXPECT_EQ((*records)[0].phrases[0].count, 12u);
  EXPECT_EQ((*records)[1].pattern, VerbPattern::Concept("eat", "food"));
  EXPECT_EQ((*records)[1].phrases[0].object, "apple");
  EXPECT_EQ((*records)[2].pattern, VerbPattern::Idiom("eat", "humble_pie"));
  EXPECT_EQ(store.num_patterns(), 3u);
}

TEST(PatternStoreTest, Lookup) {
  PatternStore store = EatStore();
  const VerbPattern *p = store.Lookup("eat", "lunch");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(*p, VerbPattern::Concept("eat", "meal"));
  EXPECT_EQ(store.Lookup("eat", "crow"), nullptr);
  EXPECT_EQ(store.Lookup("drink", "tea"), nullptr);
  EXPECT_EQ(store.PatternsOf("drink"), nullptr);
}

TEST(PatternStoreTest, DuplicateVerbIsRejected) {
  PatternStore store = EatStore();
  auto f = testing::LoadEatFixture();
  EXPECT_THROW(store.AddVerb(MakePatternRecords(
                   testing::EatReferenceAssignment(), f.corpus)),
               ConsistencyError);
}

TEST(PatternStoreTest, JsonlRoundTrip) {
  PatternStore store = EatStore();
  std::ostringstream out;
  WritePatternsJsonl(out, store);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(text.rfind("{\"kind\":\"concept\",\"label\":\"meal\"", 0), 0u)
      << text;

  std::istringstream in(text);
  PatternStore back = ReadPatternsJsonl(in);
  EXPECT_EQ(*back.PatternsOf("eat"), *store.PatternsOf("eat"));

  std::ostringstream again;
  WritePatternsJsonl(again, back);
  EXPECT_EQ(again.str(), text);
}

TEST(PatternStoreTest, BadJsonNamesItsLine) {
  std::istringstream in(
      "{\"verb\":\"eat\",\"kind\":\"idiom\",\"label\":\"crow\","
      "\"probability\":1.0,\"phrases\":[]}\n{not json\n");
  try {
    ReadPatternsJsonl(in, "p.jsonl");
    FAIL();
  } catch (const LoadError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace verbpattern
