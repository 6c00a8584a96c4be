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

#include "verbpattern/corpus.h"

#include "tsv.h"
#include "verbpattern/errors.h"

namespace verbpattern {

const VerbPhrases &PhraseCorpus::Phrases(std::string_view verb) const {
  auto it = verbs_.find(verb);
  if (it == verbs_.end()) {
    throw NotFoundError("verb not in corpus: " + std::string(verb));
  }
  return it->second;
}

std::vector<std::string> PhraseCorpus::Verbs() const {
  std::vector<std::string> out;
  out.reserve(verbs_.size());
  for (const auto &[verb, phrases] : verbs_) out.push_back(verb);
  return out;
}

PhraseCorpus LoadCorpus(std::istream &in, std::uint64_t min_count,
                        const std::string &source_name) {
  if (min_count == 0) throw ConfigError("min_count must be >= 1");

  // Aggregate first so the threshold applies to summed counts.
  std::map<std::string, std::map<std::string, std::uint64_t>, std::less<>>
      counts;
  internal::ForEachRow(
      in, [&](const std::vector<std::string_view> &fields, std::size_t line) {
        if (fields.size() != 3) {
          throw LoadError(source_name, line,
                          "expected 3 tab-separated columns, got " +
                              std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
          throw LoadError(source_name, line, "empty verb or object");
        }
        std::uint64_t count = 0;
        if (!internal::ParsePositiveCount(fields[2], &count)) {
          throw LoadError(source_name, line,
                          "count must be a positive integer, got '" +
                              std::string(fields[2]) + "'");
        }
        counts[std::string(fields[0])][std::string(fields[1])] += count;
      });

  std::map<std::string, VerbPhrases, std::less<>> verbs;
  for (auto &[verb, objects] : counts) {
    VerbPhrases phrases;
    for (auto &[object, count] : objects) {
      if (count < min_count) continue;
      phrases.objects.push_back({object, count});
      phrases.total += count;
    }
    if (!phrases.objects.empty()) verbs.emplace(verb, std::move(phrases));
  }
  return PhraseCorpus(std::move(verbs));
}

PhraseCorpus LoadCorpusFile(const std::string &path, std::uint64_t min_count) {
  std::ifstream in = internal::OpenInput(path);
  return LoadCorpus(in, min_count, path);
}

PhraseDistribution ComputePhraseDistribution(const PhraseCorpus &corpus,
                                             std::string_view verb) {
  const VerbPhrases &phrases = corpus.Phrases(verb);
  PhraseDistribution dist;
  const double total = static_cast<double>(phrases.total);
  for (const auto &oc : phrases.objects) {
    dist.emplace(oc.object, static_cast<double>(oc.count) / total);
  }
  return dist;
}

}  // namespace verbpattern
