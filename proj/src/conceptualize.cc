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

#include <algorithm>

#include "verbpattern/errors.h"

namespace verbpattern {

double VerbConceptPrior::Prior(std::string_view concept_name) const {
  auto it = concepts.find(concept_name);
  return it == concepts.end() ? 0.0 : it->second;
}

VerbConceptPrior ComputeVerbConceptPrior(const Assignment &assignment,
                                         const PhraseDistribution &dist) {
  VerbConceptPrior prior;
  prior.verb = assignment.verb;
  for (const auto &[pattern, p] :
       ComputePatternDistribution(assignment, dist)) {
    if (pattern.is_concept()) {
      prior.concepts[pattern.label] += p;
    } else {
      prior.idiom_mass += p;
    }
  }
  return prior;
}

VerbConceptPrior ComputeVerbConceptPrior(const SolveResult &result,
                                         const PhraseDistribution &dist) {
  return ComputeVerbConceptPrior(result.assignment, dist);
}

VerbConceptPrior ComputeVerbConceptPrior(const PatternStore &store,
                                         std::string_view verb) {
  const auto *records = store.PatternsOf(verb);
  if (records == nullptr) {
    throw NotFoundError("no patterns for verb: " + std::string(verb));
  }
  VerbConceptPrior prior;
  prior.verb = std::string(verb);
  for (const auto &r : *records) {
    if (r.pattern.is_concept()) {
      prior.concepts[r.pattern.label] += r.probability;
    } else {
      prior.idiom_mass += r.probability;
    }
  }
  return prior;
}

VerbPriorStore BuildVerbPriors(const PatternStore &store) {
  VerbPriorStore priors;
  for (const auto &verb : store.Verbs()) {
    priors.emplace(verb, ComputeVerbConceptPrior(store, verb));
  }
  return priors;
}

std::vector<RankedConcept> RankConcepts(std::string_view entity,
                                        const std::vector<std::string> &context,
                                        const std::optional<std::string> &verb,
                                        const Taxonomy &taxonomy,
                                        const VerbPriorStore &priors,
                                        const RankOptions &options) {
  std::vector<RankedConcept> ranking;
  const auto *concepts = taxonomy.ConceptCounts(entity);
  if (concepts == nullptr) return ranking;

  const VerbConceptPrior *prior = nullptr;
  if (verb) {
    auto it = priors.find(*verb);
    if (it != priors.end()) prior = &it->second;
  }
  const double eps = options.smoothing;

  double total = 0.0;
  for (const auto &[name, count] : *concepts) {
    ConceptProbabilities target = taxonomy.Probabilities(entity, name);
    double score = verb ? target.entity_given_concept : target.joint;
    if (verb) score *= (prior ? prior->Prior(name) : 0.0) + eps;
    for (const auto &e : context) {
      score *= taxonomy.EntityGivenConcept(e, name) + eps;
    }
    if (score > 0.0) {
      ranking.push_back({name, score});
      total += score;
    }
  }
  for (auto &r : ranking) r.score /= total;
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedConcept &a, const RankedConcept &b) {
                     return a.score > b.score;
                   });
  if (options.top > 0 && ranking.size() > options.top) {
    ranking.resize(options.top);
  }
  return ranking;
}

std::string_view KnownPhraseKindName(KnownPhraseKind kind) {
  switch (kind) {
    case KnownPhraseKind::kConcept:
      return "concept";
    case KnownPhraseKind::kIdiomStop:
      return "idiom_stop";
    case KnownPhraseKind::kUnknown:
      break;
  }
  return "unknown";
}

KnownPhraseResult ConceptualizeKnownPhrase(std::string_view verb,
                                           std::string_view object,
                                           const PatternStore &store) {
  const VerbPattern *pattern = store.Lookup(verb, object);
  if (pattern == nullptr) return {};
  if (pattern->is_idiom()) return {KnownPhraseKind::kIdiomStop, ""};
  return {KnownPhraseKind::kConcept, pattern->label};
}

}  // namespace verbpattern
