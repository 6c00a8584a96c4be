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

#include "verbpattern/pattern_store.h"

#include <algorithm>

#include "json.hpp"
#include "tsv.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

using nlohmann::json;

void SortRecords(std::vector<PatternRecord> &records) {
  for (auto &r : records) {
    std::sort(r.phrases.begin(), r.phrases.end(),
              [](const PhraseRecord &a, const PhraseRecord &b) {
                if (a.count != b.count) return a.count > b.count;
                return a.object < b.object;
              });
  }
  std::sort(records.begin(), records.end(),
            [](const PatternRecord &a, const PatternRecord &b) {
              if (a.probability != b.probability) {
                return a.probability > b.probability;
              }
              if (a.pattern.kind != b.pattern.kind) {
                return a.pattern.kind < b.pattern.kind;
              }
              return a.pattern.label < b.pattern.label;
            });
}

}  // namespace

std::vector<PatternRecord> MakePatternRecords(const Assignment &assignment,
                                              const PhraseCorpus &corpus) {
  const VerbPhrases &phrases = corpus.Phrases(assignment.verb);
  const PhraseDistribution dist =
      ComputePhraseDistribution(corpus, assignment.verb);
  const auto pattern_dist = ComputePatternDistribution(assignment, dist);

  std::map<VerbPattern, PatternRecord> grouped;
  for (const auto &[pattern, probability] : pattern_dist) {
    grouped[pattern] = {pattern, probability, {}};
  }
  for (const auto &oc : phrases.objects) {
    const VerbPattern &pattern = assignment.at(oc.object);
    grouped[pattern].phrases.push_back(
        {oc.object, oc.count, dist.find(oc.object)->second});
  }
  std::vector<PatternRecord> records;
  records.reserve(grouped.size());
  for (auto &[pattern, record] : grouped) records.push_back(std::move(record));
  SortRecords(records);
  return records;
}

void PatternStore::AddVerb(std::vector<PatternRecord> records) {
  if (records.empty()) return;
  const std::string verb = records.front().pattern.verb;
  for (const auto &r : records) {
    if (r.pattern.verb != verb) {
      throw ConsistencyError("records of one verb mix '" + verb + "' and '" +
                             r.pattern.verb + "'");
    }
  }
  if (by_verb_.count(verb)) {
    throw ConsistencyError("verb '" + verb + "' added twice");
  }
  SortRecords(records);
  for (const auto &r : records) {
    for (const auto &phrase : r.phrases) {
      auto [it, inserted] =
          by_phrase_.emplace(std::make_pair(verb, phrase.object), r.pattern);
      if (!inserted) {
        throw ConsistencyError("phrase '" + verb + " " + phrase.object +
                               "' appears under two patterns");
      }
    }
  }
  by_verb_.emplace(verb, std::move(records));
}

const std::vector<PatternRecord> *PatternStore::PatternsOf(
    std::string_view verb) const {
  auto it = by_verb_.find(verb);
  return it == by_verb_.end() ? nullptr : &it->second;
}

const VerbPattern *PatternStore::Lookup(std::string_view verb,
                                        std::string_view object) const {
  auto it =
      by_phrase_.find(std::make_pair(std::string(verb), std::string(object)));
  return it == by_phrase_.end() ? nullptr : &it->second;
}

std::vector<std::string> PatternStore::Verbs() const {
  std::vector<std::string> out;
  for (const auto &[verb, records] : by_verb_) out.push_back(verb);
  return out;
}

std::size_t PatternStore::num_patterns() const {
  std::size_t n = 0;
  for (const auto &[verb, records] : by_verb_) n += records.size();
  return n;
}

void WritePatternsJsonl(std::ostream &out, const PatternStore &store) {
  for (const auto &verb : store.Verbs()) {
    for (const auto &r : *store.PatternsOf(verb)) {
      json line = json::object();
      line["verb"] = r.pattern.verb;
      line["kind"] = std::string(PatternKindName(r.pattern.kind));
      line["label"] = r.pattern.label;
      line["probability"] = r.probability;
      json phrases = json::array();
      for (const auto &p : r.phrases) {
        phrases.push_back(
            {{"object", p.object}, {"count", p.count}, {"p", p.p}});
      }
      line["phrases"] = std::move(phrases);
      out << line.dump() << '\n';
    }
  }
}

PatternStore ReadPatternsJsonl(std::istream &in,
                               const std::string &source_name) {
  std::map<std::string, std::vector<PatternRecord>> by_verb;
  std::string text;
  std::size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    try {
      const json line = json::parse(text);
      PatternRecord r;
      r.pattern.verb = line.at("verb").get<std::string>();
      r.pattern.kind = ParsePatternKind(line.at("kind").get<std::string>());
      r.pattern.label = line.at("label").get<std::string>();
      r.probability = line.at("probability").get<double>();
      if (r.pattern.verb.empty() || r.pattern.label.empty()) {
        throw LoadError(source_name, line_number, "empty verb or label");
      }
      for (const auto &p : line.at("phrases")) {
        r.phrases.push_back({p.at("object").get<std::string>(),
                             p.at("count").get<std::uint64_t>(),
                             p.at("p").get<double>()});
      }
      by_verb[r.pattern.verb].push_back(std::move(r));
    } catch (const json::exception &e) {
      throw LoadError(source_name, line_number, e.what());
    } catch (const ConfigError &e) {
      throw LoadError(source_name, line_number, e.what());
    }
  }
  PatternStore store;
  for (auto &[verb, records] : by_verb) {
    try {
      store.AddVerb(std::move(records));
    } catch (const ConsistencyError &e) {
      throw LoadError(source_name, 0, e.what());
    }
  }
  return store;
}

PatternStore ReadPatternsJsonlFile(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return ReadPatternsJsonl(in, path);
}

}  // namespace verbpattern
