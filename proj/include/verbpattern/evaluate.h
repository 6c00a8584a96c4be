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

// Baseline assignments and the coverage/precision harness.

#ifndef VERBPATTERN_EVALUATE_H_
#define VERBPATTERN_EVALUATE_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verbpattern/corpus.h"
#include "verbpattern/pattern_store.h"
#include "verbpattern/patterns.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern {

enum class Baseline {
  kIdiom,    // IB: every phrase is its own idiom
  kConcept,  // CB: argmax_c P_T(c|o_p), idiom when the object has no concept
};

Baseline ParseBaseline(std::string_view name);  // "ib" | "cb"
std::string_view BaselineName(Baseline baseline);

// Throws NotFoundError for an unknown verb.
Assignment AssignBaseline(std::string_view verb, const PhraseCorpus &corpus,
                          const Taxonomy &taxonomy, Baseline mode);

// Baseline assignments of every corpus verb as a store.
PatternStore BaselineStore(const PhraseCorpus &corpus, const Taxonomy &taxonomy,
                           Baseline mode);

// nullopt marks a phrase whose pattern was not judged.
using GoldLabels = std::map<VerbPhrase, std::optional<VerbPattern>>;

// `verb<TAB>object` per line; each line is one test occurrence.
std::vector<VerbPhrase> LoadTestPhrases(
    std::istream &in, const std::string &source_name = "<test>");
std::vector<VerbPhrase> LoadTestPhrasesFile(const std::string &path);

// `verb<TAB>object<TAB>kind<TAB>label`, kind in {idiom, concept, unjudged};
// the label column may be omitted for unjudged rows.
GoldLabels LoadGoldLabels(std::istream &in,
                          const std::string &source_name = "<gold>");
GoldLabels LoadGoldLabelsFile(const std::string &path);

struct EvaluationReport {
  std::size_t n_all = 0;
  std::size_t n_cover = 0;
  std::size_t n_judged = 0;         // covered occurrences with a gold judgment
  std::size_t n_correct = 0;        // of those, structurally equal to gold
  double coverage = 0.0;            // n_cover / n_all, 0 when n_all = 0
  std::optional<double> precision;  // n_correct / n_judged when n_judged > 0
};

// A phrase is covered when the store holds a pattern for its verb+object.
// Throws ConsistencyError when `gold` mentions a phrase outside `test`.
EvaluationReport CoveragePrecision(const std::vector<VerbPhrase> &test,
                                   const PatternStore &patterns,
                                   const GoldLabels &gold);

// Fixed-field, tab-separated report, one field per line.
std::string FormatReport(const EvaluationReport &report,
                         std::string_view method);

}  // namespace verbpattern

#endif  // VERBPATTERN_EVALUATE_H_
