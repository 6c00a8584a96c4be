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

// Verb patterns and pattern assignments.
//
// A pattern is either an idiom pattern "verb $_I object", which only the
// phrase "verb object" may map to, or a conceptualized pattern
// "verb $_C concept", which a phrase may map to only when the taxonomy
// records its object under that concept.

#ifndef VERBPATTERN_PATTERNS_H_
#define VERBPATTERN_PATTERNS_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "verbpattern/corpus.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern {

// Idiom sorts before Concept; candidate lists rely on it.
enum class PatternKind { kIdiom = 0, kConcept = 1 };

std::string_view PatternKindName(PatternKind kind);   // "idiom" | "concept"
PatternKind ParsePatternKind(std::string_view name);  // throws ConfigError

struct VerbPattern {
  std::string verb;
  PatternKind kind = PatternKind::kIdiom;
  std::string label;  // the object for idioms, the concept otherwise

  static VerbPattern Idiom(std::string verb, std::string object) {
    return {std::move(verb), PatternKind::kIdiom, std::move(object)};
  }
  static VerbPattern Concept(std::string verb, std::string concept_name) {
    return {std::move(verb), PatternKind::kConcept, std::move(concept_name)};
  }

  bool is_idiom() const { return kind == PatternKind::kIdiom; }
  bool is_concept() const { return kind == PatternKind::kConcept; }

  // "eat $_C food" / "eat $_I humble_pie"
  std::string ToString() const;

  auto operator<=>(const VerbPattern &) const = default;
};

// f: object -> pattern, total over one verb's retained phrases.
struct Assignment {
  std::string verb;
  std::map<std::string, VerbPattern, std::less<>> patterns;

  const VerbPattern &at(std::string_view object) const;

  // One "object\tkind\tlabel\n" line per phrase in object order. Used as the
  // deterministic tie-breaker between equal-length assignments.
  std::string Serialize() const;

  bool operator==(const Assignment &) const = default;
};

// {Idiom(o_p)} followed by Conceptualized(c) for every c in concepts_of(o_p),
// concepts in lexicographic order.
std::vector<VerbPattern> CandidatePatterns(const VerbPhrase &phrase,
                                           const Taxonomy &taxonomy);

// Every phrase mapped to its own idiom pattern.
Assignment AllIdiomAssignment(std::string_view verb,
                              const PhraseDistribution &dist);

// P(a) = sum of P(p) over phrases with f(p) = a. Throws ConsistencyError when
// the assignment references a phrase missing from `dist`.
std::map<VerbPattern, double> ComputePatternDistribution(
    const Assignment &assignment, const PhraseDistribution &dist);

struct Violation {
  std::string object;
  std::string message;
};

// Every Definition-style constraint violation: idiom pattern with a foreign
// object, conceptualized pattern the object does not belong to, pattern of a
// different verb, and phrases missing from or extra to `dist`.
std::vector<Violation> ValidateAssignment(const Assignment &assignment,
                                          const Taxonomy &taxonomy,
                                          const PhraseDistribution &dist);

// True when `pattern` may be used for the phrase `verb object`.
bool IsValidPatternFor(const VerbPattern &pattern, std::string_view verb,
                       std::string_view object, const Taxonomy &taxonomy);

}  // namespace verbpattern

#endif  // VERBPATTERN_PATTERNS_H_
