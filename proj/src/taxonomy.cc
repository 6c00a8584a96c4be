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

#include "verbpattern/taxonomy.h"

#include "tsv.h"
#include "verbpattern/errors.h"

namespace verbpattern {

void Taxonomy::Add(const std::string &concept_name, const std::string &entity,
                   std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("taxonomy count must be > 0");
  auto &slot = by_entity_[entity][concept_name];
  if (slot == 0) ++num_records_;
  slot += count;
  concept_totals_[concept_name] += count;
  entity_totals_[entity] += count;
  grand_total_ += count;
}

std::uint64_t Taxonomy::Count(std::string_view entity,
                              std::string_view concept_name) const {
  const auto *concepts = ConceptCounts(entity);
  if (concepts == nullptr) return 0;
  auto it = concepts->find(concept_name);
  return it == concepts->end() ? 0 : it->second;
}

std::uint64_t Taxonomy::ConceptTotal(std::string_view concept_name) const {
  auto it = concept_totals_.find(concept_name);
  return it == concept_totals_.end() ? 0 : it->second;
}

std::uint64_t Taxonomy::EntityTotal(std::string_view entity) const {
  auto it = entity_totals_.find(std::string(entity));
  return it == entity_totals_.end() ? 0 : it->second;
}

const std::map<std::string, std::uint64_t, std::less<>> *
Taxonomy::ConceptCounts(std::string_view entity) const {
  auto it = by_entity_.find(std::string(entity));
  return it == by_entity_.end() ? nullptr : &it->second;
}

ConceptProbabilities Taxonomy::Probabilities(
    std::string_view entity, std::string_view concept_name) const {
  ConceptProbabilities p;
  std::uint64_t n = Count(entity, concept_name);
  if (n == 0) return p;
  const double count = static_cast<double>(n);
  p.entity_given_concept =
      count / static_cast<double>(ConceptTotal(concept_name));
  p.concept_given_entity = count / static_cast<double>(EntityTotal(entity));
  p.joint = count / static_cast<double>(grand_total_);
  return p;
}

double Taxonomy::EntityGivenConcept(std::string_view entity,
                                    std::string_view concept_name) const {
  std::uint64_t n = Count(entity, concept_name);
  if (n == 0) return 0.0;
  return static_cast<double>(n) /
         static_cast<double>(ConceptTotal(concept_name));
}

double Taxonomy::ConceptGivenEntity(std::string_view entity,
                                    std::string_view concept_name) const {
  std::uint64_t n = Count(entity, concept_name);
  if (n == 0) return 0.0;
  return static_cast<double>(n) / static_cast<double>(EntityTotal(entity));
}

std::vector<std::string> Taxonomy::ConceptsOf(std::string_view entity) const {
  std::vector<std::string> out;
  if (const auto *concepts = ConceptCounts(entity)) {
    out.reserve(concepts->size());
    for (const auto &[name, count] : *concepts) out.push_back(name);
  }
  return out;
}

Taxonomy LoadTaxonomy(std::istream &in, const std::string &source_name) {
  Taxonomy taxonomy;
  internal::ForEachRow(
      in, [&](const std::vector<std::string_view> &fields, std::size_t line) {
        if (fields.size() != 3) {
          throw LoadError(source_name, line,
                          "expected 3 tab-separated columns, got " +
                              std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
          throw LoadError(source_name, line, "empty concept or entity");
        }
        std::uint64_t count = 0;
        if (!internal::ParsePositiveCount(fields[2], &count)) {
          throw LoadError(source_name, line,
                          "count must be a positive integer, got '" +
                              std::string(fields[2]) + "'");
        }
        taxonomy.Add(std::string(fields[0]), std::string(fields[1]), count);
      });
  return taxonomy;
}

Taxonomy LoadTaxonomyFile(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return LoadTaxonomy(in, path);
}

ConceptProbabilities ConditionalProbabilities(const Taxonomy &taxonomy,
                                              std::string_view entity,
                                              std::string_view concept_name) {
  return taxonomy.Probabilities(entity, concept_name);
}

std::vector<std::string> ConceptsOf(const Taxonomy &taxonomy,
                                    std::string_view entity) {
  return taxonomy.ConceptsOf(entity);
}

}  // namespace verbpattern
