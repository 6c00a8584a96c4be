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

// Extracted patterns as stored on disk, one JSON object per line:
//
//   {"verb":"eat","kind":"concept","label":"meal","probability":0.666...,
//    "phrases":[{"object":"dinner","count":12,"p":0.266...}, ...]}
//
// Lines are grouped by verb (ascending). Within a verb, patterns are ordered
// by probability descending, then kind, then label; phrases by count
// descending, then object.

#ifndef VERBPATTERN_PATTERN_STORE_H_
#define VERBPATTERN_PATTERN_STORE_H_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "verbpattern/corpus.h"
#include "verbpattern/patterns.h"

namespace verbpattern {

struct PhraseRecord {
  std::string object;
  std::uint64_t count = 0;
  double p = 0.0;

  bool operator==(const PhraseRecord &) const = default;
};

struct PatternRecord {
  VerbPattern pattern;
  double probability = 0.0;
  std::vector<PhraseRecord> phrases;

  bool operator==(const PatternRecord &) const = default;
};

// Groups an assignment into records, using the verb's counts from `corpus`.
std::vector<PatternRecord> MakePatternRecords(const Assignment &assignment,
                                              const PhraseCorpus &corpus);

class PatternStore {
 public:
  PatternStore() = default;

  // Records must all share one verb; they are re-sorted into file order.
  void AddVerb(std::vector<PatternRecord> records);

  // nullptr for an unknown verb.
  const std::vector<PatternRecord> *PatternsOf(std::string_view verb) const;
  // The pattern learned for `verb object`, or nullptr.
  const VerbPattern *Lookup(std::string_view verb,
                            std::string_view object) const;

  std::vector<std::string> Verbs() const;
  std::size_t num_patterns() const;
  bool empty() const { return by_verb_.empty(); }

 private:
  std::map<std::string, std::vector<PatternRecord>, std::less<>> by_verb_;
  std::map<std::pair<std::string, std::string>, VerbPattern, std::less<>>
      by_phrase_;
};

void WritePatternsJsonl(std::ostream &out, const PatternStore &store);

// Throws LoadError (with line number) on malformed JSON or missing fields.
PatternStore ReadPatternsJsonl(std::istream &in,
                               const std::string &source_name = "<patterns>");
PatternStore ReadPatternsJsonlFile(const std::string &path);

}  // namespace verbpattern

#endif  // VERBPATTERN_PATTERN_STORE_H_
