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

#include "verbpattern/patterns.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

using testing::EatReferenceAssignment;
using testing::LoadEatFixture;

TEST(PatternsTest, KindNames) {
  EXPECT_EQ(PatternKindName(PatternKind::kIdiom), "idiom");
  EXPECT_EQ(ParsePatternKind("concept"), PatternKind::kConcept);
  EXPECT_THROW(ParsePatternKind("phrase"), ConfigError);
}

TEST(PatternsTest, ToString) {
  EXPECT_EQ(VerbPattern::Concept("eat", "food").ToString(), "eat $_C food");
  EXPECT_EQ(VerbPattern::Idiom("eat", "crow").ToString(), "eat $_I crow");
}

TEST(PatternsTest, CandidateOrder) {
  Taxonomy t = LoadEatFixture().taxonomy;
  EXPECT_EQ(CandidatePatterns({"eat", "breakfast"}, t),
            (std::vector<VerbPattern>{VerbPattern::Idiom("eat", "breakfast"),
                                      VerbPattern::Concept("eat", "activity"),
                                      VerbPattern::Concept("eat", "meal")}));
  EXPECT_EQ(CandidatePatterns({"eat", "humble_pie"}, t),
            std::vector<VerbPattern>{VerbPattern::Idiom("eat", "humble_pie")});
  EXPECT_EQ(CandidatePatterns({"eat", "apple"}, t),
            (std::vector<VerbPattern>{VerbPattern::Idiom("eat", "apple"),
                                      VerbPattern::Concept("eat", "food")}));
}

TEST(PatternsTest, PatternDistribution) {
  auto f = LoadEatFixture();
  PhraseDistribution dist = ComputePhraseDistribution(f.corpus, "eat");
  auto pd = ComputePatternDistribution(EatReferenceAssignment(), dist);
  EXPECT_NEAR(pd.at(VerbPattern::Concept("eat", "meal")), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(pd.at(VerbPattern::Idiom("eat", "humble_pie")), 1.0 / 9.0, 1e-15);
  EXPECT_EQ(pd.size(), 3u);

  auto idiom =
      ComputePatternDistribution(AllIdiomAssignment("eat", dist), dist);
  for (const auto &[object, p] : dist) {
    EXPECT_EQ(idiom.at(VerbPattern::Idiom("eat", object)), p);
  }
}

TEST(PatternsTest, PatternDistributionNeedsEveryPhrase) {
  PhraseDistribution dist = {{"apple", 1.0}};
  Assignment a = EatReferenceAssignment();
  EXPECT_THROW(ComputePatternDistribution(a, dist), ConsistencyError);
}

TEST(PatternsTest, Validation) {
  auto f = LoadEatFixture();
  PhraseDistribution dist = ComputePhraseDistribution(f.corpus, "eat");
  EXPECT_TRUE(
      ValidateAssignment(EatReferenceAssignment(), f.taxonomy, dist).empty());

  Assignment bad = EatReferenceAssignment();
  bad.patterns["breakfast"] = VerbPattern::Concept("eat", "food");
  auto v = ValidateAssignment(bad, f.taxonomy, dist);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].object, "breakfast");

  Assignment swapped = EatReferenceAssignment();
  swapped.patterns["apple"] = VerbPattern::Idiom("eat", "hot_dog");
  v = ValidateAssignment(swapped, f.taxonomy, dist);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].object, "apple");

  Assignment partial = EatReferenceAssignment();
  partial.patterns.erase("lunch");
  EXPECT_FALSE(ValidateAssignment(partial, f.taxonomy, dist).empty());
}

TEST(PatternsTest, CandidatesAreValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = testing::MakeRandomInstance(seed);
    for (const auto &oc : inst.corpus.Phrases("v").objects) {
      for (const auto &pat :
           CandidatePatterns({"v", oc.object}, inst.taxonomy)) {
        EXPECT_TRUE(IsValidPatternFor(pat, "v", oc.object, inst.taxonomy));
      }
    }
  }
}

TEST(PatternsTest, DistributionSumsToOne) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = testing::MakeRandomInstance(seed);
    PhraseDistribution dist = ComputePhraseDistribution(inst.corpus, "v");
    Assignment a =
        testing::RandomAssignment("v", inst.corpus, inst.taxonomy, rng);
    double sum = 0.0;
    for (const auto &[pat, p] : ComputePatternDistribution(a, dist)) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(PatternsTest, SerializeIsSortedByObject) {
  Assignment a;
  a.verb = "eat";
  a.patterns["b"] = VerbPattern::Idiom("eat", "b");
  a.patterns["a"] = VerbPattern::Concept("eat", "food");
  EXPECT_EQ(a.Serialize(), "a\tconcept\tfood\nb\tidiom\tb\n");
  EXPECT_THROW(a.at("c"), NotFoundError);
}

}  // namespace
}  // namespace verbpattern
