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

#include "verbpattern/corpus.h"

#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

TEST(CorpusTest, FixtureLoads) {
  PhraseCorpus c = testing::LoadEatFixture().corpus;
  ASSERT_TRUE(c.Contains("eat"));
  const VerbPhrases &eat = c.Phrases("eat");
  EXPECT_EQ(eat.total, 45u);
  ASSERT_EQ(eat.objects.size(), 6u);
  EXPECT_EQ(eat.objects.front().object, "apple");
}

TEST(CorpusTest, DuplicatesAggregateBeforeFiltering) {
  std::istringstream in("eat\tcrow\t3\neat\tcrow\t3\neat\tpie\t4\n");
  PhraseCorpus c = LoadCorpus(in, 5);
  const VerbPhrases &eat = c.Phrases("eat");
  ASSERT_EQ(eat.objects.size(), 1u);
  EXPECT_EQ(eat.objects[0], (ObjectCount{"crow", 6}));
  EXPECT_EQ(eat.total, 6u);
}

TEST(CorpusTest, VerbsWithoutSurvivorsAreDropped) {
  std::istringstream in("eat\tcrow\t9\ndrink\ttea\t1\n");
  PhraseCorpus c = LoadCorpus(in, 5);
  EXPECT_EQ(c.Verbs(), std::vector<std::string>{"eat"});
  EXPECT_THROW(c.Phrases("drink"), NotFoundError);
}

TEST(CorpusTest, MalformedLines) {
  std::istringstream in("eat\tcrow\t9\neat\tcrow\tnine\n");
  try {
    LoadCorpus(in, 1, "c.tsv");
    FAIL();
  } catch (const LoadError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream zero("eat\tcrow\t9\n");
  EXPECT_THROW(LoadCorpus(zero, 0), ConfigError);
}

TEST(CorpusTest, PhraseDistribution) {
  PhraseCorpus c = testing::LoadEatFixture().corpus;
  PhraseDistribution d = ComputePhraseDistribution(c, "eat");
  EXPECT_DOUBLE_EQ(d.at("dinner"), 12.0 / 45.0);
  double sum = 0.0;
  for (const auto &[o, p] : d) sum += p;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_THROW(ComputePhraseDistribution(c, "drink"), NotFoundError);
}

}  // namespace
}  // namespace verbpattern
