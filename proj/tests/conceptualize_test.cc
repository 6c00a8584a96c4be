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

#include "verbpattern/conceptualize.h"

#include "gtest/gtest.h"
#include "test_util.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

using testing::DataPath;

class PitayaTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto f = testing::LoadEatFixture();
    taxonomy_ = LoadTaxonomyFile(DataPath("fixture_eat/taxonomy_pitaya.tsv"));
    store_.AddVerb(
        MakePatternRecords(testing::EatReferenceAssignment(), f.corpus));
    priors_ = BuildVerbPriors(store_);
  }
  Taxonomy taxonomy_;
  PatternStore store_;
  VerbPriorStore priors_;
};

TEST_F(PitayaTest, EntityOnlyPrefersCompany) {
  auto r = RankConcepts("pitaya", {}, std::nullopt, taxonomy_, priors_);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].concept_name, "company");
  EXPECT_NEAR(r[0].score, 0.75, 1e-12);
  EXPECT_EQ(r[1].concept_name, "food");
}

TEST_F(PitayaTest, VerbPriorPrefersFood) {
  auto r = RankConcepts("pitaya", {}, std::string("eat"), taxonomy_, priors_);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].concept_name, "food");
  EXPECT_DOUBLE_EQ(r[0].score, 1.0);
}

TEST_F(PitayaTest, SmoothingKeepsCompany) {
  RankOptions options;
  options.smoothing = 1e-3;
  auto r = RankConcepts("pitaya", {}, std::string("eat"), taxonomy_, priors_,
                        options);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].concept_name, "food");
  double sum = r[0].score + r[1].score;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST_F(PitayaTest, UnknownVerbAndEntity) {
  EXPECT_TRUE(
      RankConcepts("pitaya", {}, std::string("drink"), taxonomy_, priors_)
          .empty());
  EXPECT_TRUE(
      RankConcepts("durian", {}, std::nullopt, taxonomy_, priors_).empty());
}

TEST_F(PitayaTest, ContextAndTop) {
  // breakfast shares meal and activity but not food or company with pitaya,
  // so no concept survives.
  EXPECT_TRUE(
      RankConcepts("pitaya", {"breakfast"}, std::nullopt, taxonomy_, priors_)
          .empty());
  // lunch shares meal and activity with breakfast; the context favours meal.
  auto r =
      RankConcepts("breakfast", {"lunch"}, std::nullopt, taxonomy_, priors_);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].concept_name, "meal");
  RankOptions top;
  top.top = 1;
  EXPECT_EQ(RankConcepts("breakfast", {"lunch"}, std::nullopt, taxonomy_,
                         priors_, top)
                .size(),
            1u);
}

TEST_F(PitayaTest, TiesAreLexicographic) {
  Taxonomy t;
  t.Add("zeta", "x", 2);
  t.Add("alpha", "x", 2);
  t.Add("zeta", "y", 2);
  t.Add("alpha", "y", 2);
  auto r = RankConcepts("x", {}, std::nullopt, t, {});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].concept_name, "alpha");
  EXPECT_EQ(r[0].score, r[1].score);
}

TEST_F(PitayaTest, Prior) {
  const VerbConceptPrior &eat = priors_.at("eat");
  EXPECT_NEAR(eat.Prior("meal"), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(eat.Prior("food"), 2.0 / 9.0, 1e-15);
  EXPECT_EQ(eat.Prior("company"), 0.0);
  EXPECT_NEAR(eat.idiom_mass, 1.0 / 9.0, 1e-15);
  EXPECT_THROW(ComputeVerbConceptPrior(store_, "drink"), NotFoundError);
}

TEST_F(PitayaTest, KnownPhrases) {
  EXPECT_EQ(ConceptualizeKnownPhrase("eat", "humble_pie", store_).kind,
            KnownPhraseKind::kIdiomStop);
  KnownPhraseResult apple = ConceptualizeKnownPhrase("eat", "apple", store_);
  EXPECT_EQ(apple.kind, KnownPhraseKind::kConcept);
  EXPECT_EQ(apple.concept_name, "food");
  EXPECT_EQ(ConceptualizeKnownPhrase("eat", "pitaya", store_).kind,
            KnownPhraseKind::kUnknown);
  EXPECT_EQ(KnownPhraseKindName(KnownPhraseKind::kIdiomStop), "idiom_stop");
}

}  // namespace
}  // namespace verbpattern
