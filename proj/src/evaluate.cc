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

#include "verbpattern/evaluate.h"

#include <cstdio>
#include <set>

#include "tsv.h"
#include "verbpattern/errors.h"

namespace verbpattern {

Baseline ParseBaseline(std::string_view name) {
  if (name == "ib") return Baseline::kIdiom;
  if (name == "cb") return Baseline::kConcept;
  throw ConfigError("unknown baseline '" + std::string(name) +
                    "' (expected ib or cb)");
}

std::string_view BaselineName(Baseline baseline) {
  return baseline == Baseline::kIdiom ? "IB" : "CB";
}

Assignment AssignBaseline(std::string_view verb, const PhraseCorpus &corpus,
                          const Taxonomy &taxonomy, Baseline mode) {
  const VerbPhrases &phrases = corpus.Phrases(verb);
  Assignment f;
  f.verb = std::string(verb);
  for (const auto &oc : phrases.objects) {
    VerbPattern pattern = VerbPattern::Idiom(f.verb, oc.object);
    if (mode == Baseline::kConcept) {
      // P_T(c|o) is proportional to n(o,c); strict > keeps the
      // lexicographically first concept on ties.
      if (const auto *concepts = taxonomy.ConceptCounts(oc.object)) {
        std::uint64_t best = 0;
        for (const auto &[name, count] : *concepts) {
          if (count > best) {
            best = count;
            pattern = VerbPattern::Concept(f.verb, name);
          }
        }
      }
    }
    f.patterns.emplace(oc.object, std::move(pattern));
  }
  return f;
}

PatternStore BaselineStore(const PhraseCorpus &corpus, const Taxonomy &taxonomy,
                           Baseline mode) {
  PatternStore store;
  for (const auto &verb : corpus.Verbs()) {
    store.AddVerb(MakePatternRecords(
        AssignBaseline(verb, corpus, taxonomy, mode), corpus));
  }
  return store;
}

std::vector<VerbPhrase> LoadTestPhrases(std::istream &in,
                                        const std::string &source_name) {
  std::vector<VerbPhrase> out;
  internal::ForEachRow(
      in, [&](const std::vector<std::string_view> &fields, std::size_t line) {
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
          throw LoadError(source_name, line, "expected verb<TAB>object");
        }
        out.push_back({std::string(fields[0]), std::string(fields[1])});
      });
  return out;
}

std::vector<VerbPhrase> LoadTestPhrasesFile(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return LoadTestPhrases(in, path);
}

GoldLabels LoadGoldLabels(std::istream &in, const std::string &source_name) {
  GoldLabels gold;
  internal::ForEachRow(
      in, [&](const std::vector<std::string_view> &fields, std::size_t line) {
        if (fields.size() < 3 || fields.size() > 4 || fields[0].empty() ||
            fields[1].empty()) {
          throw LoadError(source_name, line,
                          "expected verb<TAB>object<TAB>kind<TAB>label");
        }
        VerbPhrase phrase{std::string(fields[0]), std::string(fields[1])};
        std::optional<VerbPattern> label;
        if (fields[2] != "unjudged") {
          if (fields.size() != 4 || fields[3].empty()) {
            throw LoadError(source_name, line, "missing pattern label");
          }
          try {
            label = VerbPattern{phrase.verb, ParsePatternKind(fields[2]),
                                std::string(fields[3])};
          } catch (const ConfigError &e) {
            throw LoadError(source_name, line, e.what());
          }
        }
        if (!gold.emplace(std::move(phrase), std::move(label)).second) {
          throw LoadError(source_name, line, "duplicate gold phrase");
        }
      });
  return gold;
}

GoldLabels LoadGoldLabelsFile(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return LoadGoldLabels(in, path);
}

EvaluationReport CoveragePrecision(const std::vector<VerbPhrase> &test,
                                   const PatternStore &patterns,
                                   const GoldLabels &gold) {
  const std::set<VerbPhrase> test_set(test.begin(), test.end());
  for (const auto &[phrase, label] : gold) {
    if (!test_set.count(phrase)) {
      throw ConsistencyError("gold label for '" + phrase.verb + " " +
                             phrase.object + "' is not in the test set");
    }
  }

  EvaluationReport report;
  report.n_all = test.size();
  for (const auto &phrase : test) {
    const VerbPattern *learned = patterns.Lookup(phrase.verb, phrase.object);
    if (learned == nullptr) continue;
    ++report.n_cover;
    auto it = gold.find(phrase);
    if (it == gold.end() || !it->second.has_value()) continue;
    ++report.n_judged;
    if (*it->second == *learned) ++report.n_correct;
  }
  if (report.n_all > 0) {
    report.coverage =
        static_cast<double>(report.n_cover) / static_cast<double>(report.n_all);
  }
  if (report.n_judged > 0) {
    report.precision = static_cast<double>(report.n_correct) /
                       static_cast<double>(report.n_judged);
  }
  return report;
}

std::string FormatReport(const EvaluationReport &report,
                         std::string_view method) {
  char buf[64];
  std::string out;
  out += "method\t" + std::string(method) + "\n";
  out += "n_all\t" + std::to_string(report.n_all) + "\n";
  out += "n_cover\t" + std::to_string(report.n_cover) + "\n";
  out += "n_judged\t" + std::to_string(report.n_judged) + "\n";
  out += "n_correct\t" + std::to_string(report.n_correct) + "\n";
  std::snprintf(buf, sizeof(buf), "%.6f", report.coverage);
  out += "coverage\t" + std::string(buf) + "\n";
  if (report.precision) {
    std::snprintf(buf, sizeof(buf), "%.6f", *report.precision);
    out += "precision\t" + std::string(buf) + "\n";
  } else {
    out += "precision\tn/a\n";
  }
  return out;
}

}  // namespace verbpattern
