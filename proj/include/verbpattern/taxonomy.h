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

// isA taxonomy: concept/entity co-occurrence counts n(e,c) and the
// probabilities derived from them.
//
//   P_T(e|c) = n(e,c) / sum_e' n(e',c)
//   P_T(c|e) = n(e,c) / sum_c' n(e,c')
//   P(e,c)   = n(e,c) / sum of all counts
//
// Only direct records count; there is no transitive closure and no
// smoothing, so a zero is a real zero.

#ifndef VERBPATTERN_TAXONOMY_H_
#define VERBPATTERN_TAXONOMY_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace verbpattern {

struct ConceptProbabilities {
  double entity_given_concept = 0.0;
  double concept_given_entity = 0.0;
  double joint = 0.0;
};

class Taxonomy {
 public:
  Taxonomy() = default;

  // Adds n(entity, concept) += count. count must be positive.
  void Add(const std::string &concept_name, const std::string &entity,
           std::uint64_t count);

  std::uint64_t Count(std::string_view entity,
                      std::string_view concept_name) const;
  std::uint64_t ConceptTotal(std::string_view concept_name) const;
  std::uint64_t EntityTotal(std::string_view entity) const;
  std::uint64_t GrandTotal() const { return grand_total_; }

  ConceptProbabilities Probabilities(std::string_view entity,
                                     std::string_view concept_name) const;
  double EntityGivenConcept(std::string_view entity,
                            std::string_view concept_name) const;
  double ConceptGivenEntity(std::string_view entity,
                            std::string_view concept_name) const;

  // Concepts with n(entity, c) > 0, in lexicographic order.
  std::vector<std::string> ConceptsOf(std::string_view entity) const;

  // Per-concept counts for an entity; nullptr for an unknown entity.
  const std::map<std::string, std::uint64_t, std::less<>> *ConceptCounts(
      std::string_view entity) const;

  std::size_t num_records() const { return num_records_; }
  std::size_t num_entities() const { return by_entity_.size(); }
  std::size_t num_concepts() const { return concept_totals_.size(); }
  bool empty() const { return num_records_ == 0; }

 private:
  // entity -> (concept -> count). The inner map is ordered so ConceptsOf is
  // lexicographic for free.
  std::unordered_map<std::string,
                     std::map<std::string, std::uint64_t, std::less<>>>
      by_entity_;
  std::map<std::string, std::uint64_t, std::less<>> concept_totals_;
  std::unordered_map<std::string, std::uint64_t> entity_totals_;
  std::uint64_t grand_total_ = 0;
  std::size_t num_records_ = 0;
};

// Reads `concept<TAB>entity<TAB>count` lines. Lines starting with '#' and
// blank lines are skipped; duplicate pairs are summed. `source_name` is used
// in error messages. Throws LoadError naming the offending line.
Taxonomy LoadTaxonomy(std::istream &in,
                      const std::string &source_name = "<taxonomy>");
Taxonomy LoadTaxonomyFile(const std::string &path);

// Free-function spellings of the query surface.
ConceptProbabilities ConditionalProbabilities(const Taxonomy &taxonomy,
                                              std::string_view entity,
                                              std::string_view concept_name);
std::vector<std::string> ConceptsOf(const Taxonomy &taxonomy,
                                    std::string_view entity);

}  // namespace verbpattern

#endif  // VERBPATTERN_TAXONOMY_H_
