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

#include "verbpattern/errors.h"

namespace verbpattern {

std::string_view PatternKindName(PatternKind kind) {
  return kind == PatternKind::kIdiom ? "idiom" : "concept";
}

PatternKind ParsePatternKind(std::string_view name) {
  if (name == "idiom") return PatternKind::kIdiom;
  if (name == "concept") return PatternKind::kConcept;
  throw ConfigError("unknown pattern kind '" + std::string(name) +
                    "' (expected idiom or concept)");
}

std::string VerbPattern::ToString() const {
  return verb + (is_idiom() ? " $_I " : " $_C ") + label;
}

const VerbPattern &Assignment::at(std::string_view object) const {
  auto it = patterns.find(object);
  if (it == patterns.end()) {
    throw NotFoundError("phrase not in assignment: " + verb + " " +
                        std::string(object));
  }
  return it->second;
}

std::string Assignment::Serialize() const {
  std::string out;
  for (const auto &[object, pattern] : patterns) {
    out += object;
    out += '\t';
    out += PatternKindName(pattern.kind);
    out += '\t';
    out += pattern.label;
    out += '\n';
  }
  return out;
}

std::vector<VerbPattern> CandidatePatterns(const VerbPhrase &phrase,
                                           const Taxonomy &taxonomy) {
  std::vector<VerbPattern> out;
  out.push_back(VerbPattern::Idiom(phrase.verb, phrase.object));
  for (auto &concept_name : taxonomy.ConceptsOf(phrase.object)) {
    out.push_back(VerbPattern::Concept(phrase.verb, std::move(concept_name)));
  }
  return out;
}

Assignment AllIdiomAssignment(std::string_view verb,
                              const PhraseDistribution &dist) {
  Assignment f;
  f.verb = std::string(verb);
  for (const auto &[object, p] : dist) {
    f.patterns.emplace(object, VerbPattern::Idiom(f.verb, object));
  }
  return f;
}

std::map<VerbPattern, double> ComputePatternDistribution(
    const Assignment &assignment, const PhraseDistribution &dist) {
  std::map<VerbPattern, double> out;
  for (const auto &[object, pattern] : assignment.patterns) {
    auto it = dist.find(object);
    if (it == dist.end()) {
      throw ConsistencyError("assignment references phrase '" +
                             assignment.verb + " " + object +
                             "' missing from the phrase distribution");
    }
    out[pattern] += it->second;
  }
  return out;
}

bool IsValidPatternFor(const VerbPattern &pattern, std::string_view verb,
                       std::string_view object, const Taxonomy &taxonomy) {
  if (pattern.verb != verb || pattern.label.empty()) return false;
  if (pattern.is_idiom()) return pattern.label == object;
  return taxonomy.Count(object, pattern.label) > 0;
}

std::vector<Violation> ValidateAssignment(const Assignment &assignment,
                                          const Taxonomy &taxonomy,
                                          const PhraseDistribution &dist) {
  std::vector<Violation> violations;
  for (const auto &[object, pattern] : assignment.patterns) {
    if (dist.find(object) == dist.end()) {
      violations.push_back({object, "phrase is not in the distribution"});
    }
    if (pattern.verb != assignment.verb) {
      violations.push_back({object, "pattern '" + pattern.ToString() +
                                        "' has a different verb"});
    } else if (pattern.label.empty()) {
      violations.push_back({object, "pattern label is empty"});
    } else if (pattern.is_idiom() && pattern.label != object) {
      violations.push_back({object, "idiom pattern '" + pattern.ToString() +
                                        "' belongs to another object"});
    } else if (pattern.is_concept() &&
               taxonomy.Count(object, pattern.label) == 0) {
      violations.push_back({object, "object is not an instance of concept '" +
                                        pattern.label + "'"});
    }
  }
  for (const auto &[object, p] : dist) {
    if (assignment.patterns.find(object) == assignment.patterns.end()) {
      violations.push_back({object, "phrase has no pattern"});
    }
  }
  return violations;
}

}  // namespace verbpattern
