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

// Context-aware conceptualization of an entity.
//
// Without a verb, concepts are ranked naive-Bayes style by
//
//   score(c) = P(e,c) * prod_i P_T(e_i|c)
//
// over the context entities e_i. When the entity is the object of a verb v,
// the learned verb prior P(c|v) joins in:
//
//   score(c) = P_T(e|c) * P(c|v) * prod_i P_T(e_i|c)
//
// P(c|v) is the probability mass of the verb's conceptualized patterns with
// concept c. Zeros are hard: a concept any factor rules out is dropped.

#ifndef VERBPATTERN_CONCEPTUALIZE_H_
#define VERBPATTERN_CONCEPTUALIZE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verbpattern/corpus.h"
#include "verbpattern/pattern_store.h"
#include "verbpattern/patterns.h"
#include "verbpattern/solver.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern {

struct VerbConceptPrior {
  std::string verb;
  std::map<std::string, double, std::less<>> concepts;  // P(c|v)
  double idiom_mass = 0.0;

  double Prior(std::string_view concept_name) const;
};

VerbConceptPrior ComputeVerbConceptPrior(const Assignment &assignment,
                                         const PhraseDistribution &dist);
VerbConceptPrior ComputeVerbConceptPrior(const SolveResult &result,
                                         const PhraseDistribution &dist);
// From stored pattern probabilities. Throws NotFoundError for an unknown verb.
VerbConceptPrior ComputeVerbConceptPrior(const PatternStore &store,
                                         std::string_view verb);

using VerbPriorStore = std::map<std::string, VerbConceptPrior, std::less<>>;
VerbPriorStore BuildVerbPriors(const PatternStore &store);

struct RankOptions {
  // Added to every context and verb-prior factor. 0 keeps hard zeros.
  double smoothing = 0.0;
  // Keep only the first `top` concepts; 0 keeps all.
  std::size_t top = 0;
};

struct RankedConcept {
  std::string concept_name;
  double score = 0.0;  // normalised over the full ranking

  bool operator==(const RankedConcept &) const = default;
};

// Candidates are the entity's own concepts. Zero-score concepts are omitted;
// the rest are sorted by score descending, ties lexicographic. An entity with
// no concepts, or with every score zero, yields an empty ranking. A verb with
// no stored prior has P(c|v) = 0 everywhere.
std::vector<RankedConcept> RankConcepts(std::string_view entity,
                                        const std::vector<std::string> &context,
                                        const std::optional<std::string> &verb,
                                        const Taxonomy &taxonomy,
                                        const VerbPriorStore &priors,
                                        const RankOptions &options = {});

enum class KnownPhraseKind { kConcept, kIdiomStop, kUnknown };

std::string_view KnownPhraseKindName(KnownPhraseKind kind);

struct KnownPhraseResult {
  KnownPhraseKind kind = KnownPhraseKind::kUnknown;
  std::string concept_name;  // set for kConcept

  bool operator==(const KnownPhraseResult &) const = default;
};

// Shortcut for a verb+object pair that already has a learned pattern: its
// concept, or IdiomStop when the phrase is idiomatic. Unknown otherwise.
KnownPhraseResult ConceptualizeKnownPhrase(std::string_view verb,
                                           std::string_view object,
                                           const PatternStore &store);

}  // namespace verbpattern

#endif  // VERBPATTERN_CONCEPTUALIZE_H_
