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

#include "verbpattern/mdl.h"

#include <algorithm>
#include <cmath>

#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

double ConditionalBits(const VerbPhrase &phrase, const VerbPattern &pattern,
                       const Taxonomy &taxonomy) {
  if (pattern.is_idiom()) return 0.0;
  double p = taxonomy.EntityGivenConcept(phrase.object, pattern.label);
  if (p <= 0.0) {
    throw InvalidAssignmentError("P_T(" + phrase.object + " | " +
                                 pattern.label + ") is zero");
  }
  return -std::log2(p);
}

}  // namespace

PhraseCodeLength CodeLengthsForPhrase(const VerbPhrase &phrase,
                                      const Assignment &assignment,
                                      const PhraseDistribution &dist,
                                      const Taxonomy &taxonomy) {
  const VerbPattern &pattern = assignment.at(phrase.object);
  auto pattern_dist = ComputePatternDistribution(assignment, dist);
  double mass = pattern_dist[pattern];
  if (mass <= 0.0) {
    throw InvalidAssignmentError("pattern '" + pattern.ToString() +
                                 "' has zero probability");
  }
  return {-std::log2(mass), ConditionalBits(phrase, pattern, taxonomy)};
}

DescriptionLength ComputeDescriptionLength(const Assignment &assignment,
                                           const PhraseDistribution &dist,
                                           const Taxonomy &taxonomy,
                                           double theta) {
  if (!(theta >= 0.0)) throw ConfigError("theta must be >= 0");
  auto pattern_dist = ComputePatternDistribution(assignment, dist);

  DescriptionLength length;
  length.theta = theta;
  for (const auto &[object, pattern] : assignment.patterns) {
    const double p = dist.find(object)->second;
    const double mass = std::min(pattern_dist[pattern], 1.0);
    if (mass <= 0.0) {
      throw InvalidAssignmentError("pattern '" + pattern.ToString() +
                                   "' has zero probability");
    }
    length.l_patterns -= p * std::log2(mass);
    length.l_conditional +=
        p * ConditionalBits({assignment.verb, object}, pattern, taxonomy);
  }
  length.total = length.l_patterns + theta * length.l_conditional;
  return length;
}

double EntropyBits(const PhraseDistribution &dist) {
  double h = 0.0;
  for (const auto &[key, p] : dist) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double EntropyBits(const std::map<VerbPattern, double> &dist) {
  double h = 0.0;
  for (const auto &[key, p] : dist) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace verbpattern
