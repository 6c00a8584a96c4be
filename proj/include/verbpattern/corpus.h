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

#ifndef VERBPATTERN_CORPUS_H_
#define VERBPATTERN_CORPUS_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace verbpattern {

// A verb + object pair, e.g. "eat apple".
struct VerbPhrase {
  std::string verb;
  std::string object;

  auto operator<=>(const VerbPhrase &) const = default;
};

struct ObjectCount {
  std::string object;
  std::uint64_t count = 0;

  bool operator==(const ObjectCount &) const = default;
};

// Retained phrases of one verb, sorted by object.
struct VerbPhrases {
  std::vector<ObjectCount> objects;
  std::uint64_t total = 0;

  bool operator==(const VerbPhrases &) const = default;
};

// object -> P(p) for one verb.
using PhraseDistribution = std::map<std::string, double, std::less<>>;

class PhraseCorpus {
 public:
  PhraseCorpus() = default;
  explicit PhraseCorpus(std::map<std::string, VerbPhrases, std::less<>> verbs)
      : verbs_(std::move(verbs)) {}

  bool Contains(std::string_view verb) const {
    return verbs_.find(verb) != verbs_.end();
  }
  // Throws NotFoundError for an unknown verb.
  const VerbPhrases &Phrases(std::string_view verb) const;

  std::vector<std::string> Verbs() const;
  const std::map<std::string, VerbPhrases, std::less<>> &verbs() const {
    return verbs_;
  }
  bool empty() const { return verbs_.empty(); }

  bool operator==(const PhraseCorpus &) const = default;

 private:
  std::map<std::string, VerbPhrases, std::less<>> verbs_;
};

// Reads `verb<TAB>object<TAB>count` lines, sums duplicate rows, then drops
// phrases whose summed count is below `min_count` and verbs left empty.
PhraseCorpus LoadCorpus(std::istream &in, std::uint64_t min_count = 5,
                        const std::string &source_name = "<corpus>");
PhraseCorpus LoadCorpusFile(const std::string &path,
                            std::uint64_t min_count = 5);

// P(p) = n(p) / sum of the verb's retained counts.
PhraseDistribution ComputePhraseDistribution(const PhraseCorpus &corpus,
                                             std::string_view verb);

}  // namespace verbpattern

#endif  // VERBPATTERN_CORPUS_H_
