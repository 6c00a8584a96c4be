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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "verbpattern/conceptualize.h"
#include "verbpattern/corpus.h"
#include "verbpattern/errors.h"
#include "verbpattern/evaluate.h"
#include "verbpattern/mdl.h"
#include "verbpattern/pattern_store.h"
#include "verbpattern/patterns.h"
#include "verbpattern/solver.h"
#include "verbpattern/taxonomy.h"

namespace py = pybind11;
using namespace verbpattern;

namespace {

Taxonomy TaxonomyFromText(const std::string &text) {
  std::istringstream in(text);
  return LoadTaxonomy(in);
}

PhraseCorpus CorpusFromText(const std::string &text, std::uint64_t min_count) {
  std::istringstream in(text);
  return LoadCorpus(in, min_count);
}

IdiomDictionary IdiomsFromPairs(
    const std::vector<std::pair<std::string, std::string>> &pairs) {
  IdiomDictionary idioms;
  for (const auto &[verb, object] : pairs) idioms.insert({verb, object});
  return idioms;
}

}  // namespace

PYBIND11_MODULE(_verbpattern, m) {
  m.doc() = "MDL verb pattern extraction and verb-aware conceptualization";

  py::register_exception<LoadError>(m, "LoadError", PyExc_ValueError);
  py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_KeyError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError",
                                           PyExc_ValueError);
  py::register_exception<InvalidAssignmentError>(m, "InvalidAssignmentError",
                                                 PyExc_ValueError);
  py::register_exception<InstanceSizeError>(m, "InstanceSizeError",
                                            PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Taxonomy>(m, "Taxonomy")
      .def(py::init<>())
      .def_static("from_tsv", &TaxonomyFromText, py::arg("text"))
      .def_static("load", &LoadTaxonomyFile, py::arg("path"))
      .def("add", &Taxonomy::Add, py::arg("concept"), py::arg("entity"),
           py::arg("count"))
      .def("count", &Taxonomy::Count, py::arg("entity"), py::arg("concept"))
      .def("concepts_of", &Taxonomy::ConceptsOf, py::arg("entity"))
      .def(
          "conditional_probabilities",
          [](const Taxonomy &t, const std::string &e, const std::string &c) {
            auto p = t.Probabilities(e, c);
            return py::make_tuple(p.entity_given_concept,
                                  p.concept_given_entity, p.joint);
          },
          py::arg("entity"), py::arg("concept"), "(P_T(e|c), P_T(c|e), P(e,c))")
      .def_property_readonly("num_records", &Taxonomy::num_records)
      .def_property_readonly("grand_total", &Taxonomy::GrandTotal);

  py::class_<PhraseCorpus>(m, "PhraseCorpus")
      .def_static("from_tsv", &CorpusFromText, py::arg("text"),
                  py::arg("min_count") = 5)
      .def_static("load", &LoadCorpusFile, py::arg("path"),
                  py::arg("min_count") = 5)
      .def("verbs", &PhraseCorpus::Verbs)
      .def(
          "counts",
          [](const PhraseCorpus &c, const std::string &verb) {
            std::map<std::string, std::uint64_t> out;
            for (const auto &oc : c.Phrases(verb).objects) {
              out.emplace(oc.object, oc.count);
            }
            return out;
          },
          py::arg("verb"))
      .def(
          "phrase_distribution",
          [](const PhraseCorpus &c, const std::string &verb) {
            auto d = ComputePhraseDistribution(c, verb);
            return std::map<std::string, double>(d.begin(), d.end());
          },
          py::arg("verb"));

  py::class_<VerbPattern>(m, "VerbPattern")
      .def_static("idiom", &VerbPattern::Idiom, py::arg("verb"),
                  py::arg("object"))
      .def_static("concept", &VerbPattern::Concept, py::arg("verb"),
                  py::arg("concept"))
      .def_readonly("verb", &VerbPattern::verb)
      .def_readonly("label", &VerbPattern::label)
      .def_property_readonly("kind",
                             [](const VerbPattern &p) {
                               return std::string(PatternKindName(p.kind));
                             })
      .def("__repr__",
           [](const VerbPattern &p) { return "<" + p.ToString() + ">"; })
      .def("__str__", &VerbPattern::ToString)
      .def("__eq__",
           [](const VerbPattern &a, const VerbPattern &b) { return a == b; })
      .def("__lt__",
           [](const VerbPattern &a, const VerbPattern &b) { return a < b; })
      .def("__hash__", [](const VerbPattern &p) {
        return py::hash(
            py::make_tuple(p.verb, static_cast<int>(p.kind), p.label));
      });

  py::class_<Assignment>(m, "Assignment")
      .def(py::init([](std::string verb,
                       const std::map<std::string, VerbPattern> &patterns) {
             Assignment f;
             f.verb = std::move(verb);
             f.patterns.insert(patterns.begin(), patterns.end());
             return f;
           }),
           py::arg("verb"), py::arg("patterns"))
      .def_readonly("verb", &Assignment::verb)
      .def_property_readonly("patterns",
                             [](const Assignment &f) {
                               return std::map<std::string, VerbPattern>(
                                   f.patterns.begin(), f.patterns.end());
                             })
      .def("__eq__",
           [](const Assignment &a, const Assignment &b) { return a == b; })
      .def("serialize", &Assignment::Serialize);

  py::class_<DescriptionLength>(m, "DescriptionLength")
      .def_readonly("l_patterns", &DescriptionLength::l_patterns)
      .def_readonly("l_conditional", &DescriptionLength::l_conditional)
      .def_readonly("theta", &DescriptionLength::theta)
      .def_readonly("total", &DescriptionLength::total)
      .def("__repr__", [](const DescriptionLength &l) {
        return "<DescriptionLength total=" + std::to_string(l.total) + ">";
      });

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("theta", &SolverConfig::theta)
      .def_readwrite("gamma", &SolverConfig::gamma)
      .def_readwrite("t0", &SolverConfig::t0)
      .def_readwrite("cooling_a", &SolverConfig::cooling_a)
      .def_readwrite("beta", &SolverConfig::beta)
      .def_readwrite("seed", &SolverConfig::seed)
      .def_readwrite("restarts", &SolverConfig::restarts)
      .def_readwrite("max_iterations", &SolverConfig::max_iterations)
      .def_property(
          "cooling_schedule",
          [](const SolverConfig &c) {
            return std::string(CoolingScheduleName(c.schedule));
          },
          [](SolverConfig &c, const std::string &name) {
            c.schedule = ParseCoolingSchedule(name);
          });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("assignment", &SolveResult::assignment)
      .def_readonly("length", &SolveResult::length)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("total_iterations", &SolveResult::total_iterations)
      .def_readonly("best_restart", &SolveResult::best_restart);

  m.def(
      "candidate_patterns",
      [](const std::string &verb, const std::string &object,
         const Taxonomy &t) { return CandidatePatterns({verb, object}, t); },
      py::arg("verb"), py::arg("object"), py::arg("taxonomy"));

  m.def(
      "pattern_distribution",
      [](const Assignment &f, const PhraseCorpus &c) {
        return ComputePatternDistribution(f,
                                          ComputePhraseDistribution(c, f.verb));
      },
      py::arg("assignment"), py::arg("corpus"));

  m.def(
      "validate_assignment",
      [](const Assignment &f, const Taxonomy &t, const PhraseCorpus &c) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto &v :
             ValidateAssignment(f, t, ComputePhraseDistribution(c, f.verb))) {
          out.emplace_back(std::move(v.object), std::move(v.message));
        }
        return out;
      },
      py::arg("assignment"), py::arg("taxonomy"), py::arg("corpus"),
      "List of (object, message) violations; empty when valid.");

  m.def(
      "description_length",
      [](const Assignment &f, const PhraseCorpus &c, const Taxonomy &t,
         double theta) {
        return ComputeDescriptionLength(f, ComputePhraseDistribution(c, f.verb),
                                        t, theta);
      },
      py::arg("assignment"), py::arg("corpus"), py::arg("taxonomy"),
      py::arg("theta"));

  m.def(
      "typicality",
      [](const std::string &verb, const std::string &object,
         const VerbPattern &pattern, const Taxonomy &t, double gamma) {
        return Typicality({verb, object}, pattern, t, gamma);
      },
      py::arg("verb"), py::arg("object"), py::arg("pattern"),
      py::arg("taxonomy"), py::arg("gamma"));

  m.def(
      "solve",
      [](const std::string &verb, const PhraseCorpus &c, const Taxonomy &t,
         const std::vector<std::pair<std::string, std::string>> &idioms,
         const SolverConfig &config) {
        py::gil_scoped_release release;
        return Solve(verb, c, t, IdiomsFromPairs(idioms), config);
      },
      py::arg("verb"), py::arg("corpus"), py::arg("taxonomy"),
      py::arg("idioms") = std::vector<std::pair<std::string, std::string>>{},
      py::arg("config") = SolverConfig{});

  m.def(
      "brute_force_optimum",
      [](const std::string &verb, const PhraseCorpus &c, const Taxonomy &t,
         const std::vector<std::pair<std::string, std::string>> &idioms,
         double theta) {
        OptimumResult r;
        {
          py::gil_scoped_release release;
          r = BruteForceOptimum(verb, c, t, IdiomsFromPairs(idioms), theta);
        }
        return py::make_tuple(r.assignment, r.length);
      },
      py::arg("verb"), py::arg("corpus"), py::arg("taxonomy"),
      py::arg("idioms") = std::vector<std::pair<std::string, std::string>>{},
      py::arg("theta") = 0.25);

  m.def(
      "assign_baseline",
      [](const std::string &verb, const PhraseCorpus &c, const Taxonomy &t,
         const std::string &mode) {
        return AssignBaseline(verb, c, t, ParseBaseline(mode));
      },
      py::arg("verb"), py::arg("corpus"), py::arg("taxonomy"), py::arg("mode"));

  m.def(
      "verb_concept_prior",
      [](const Assignment &f, const PhraseCorpus &c) {
        auto prior =
            ComputeVerbConceptPrior(f, ComputePhraseDistribution(c, f.verb));
        return py::make_tuple(std::map<std::string, double>(
                                  prior.concepts.begin(), prior.concepts.end()),
                              prior.idiom_mass);
      },
      py::arg("assignment"), py::arg("corpus"),
      "(concept -> P(c|v), idiom mass)");

  m.def(
      "rank_concepts",
      [](const std::string &entity, const Taxonomy &t,
         const std::vector<std::string> &context,
         const std::optional<std::string> &verb,
         const std::vector<Assignment> &learned,
         const std::optional<PhraseCorpus> &c, std::size_t top,
         double smoothing) {
        VerbPriorStore priors;
        for (const auto &f : learned) {
          if (!c) throw ConfigError("learned assignments need a corpus");
          priors[f.verb] =
              ComputeVerbConceptPrior(f, ComputePhraseDistribution(*c, f.verb));
        }
        std::vector<std::pair<std::string, double>> out;
        for (auto &r :
             RankConcepts(entity, context, verb, t, priors, {smoothing, top})) {
          out.emplace_back(std::move(r.concept_name), r.score);
        }
        return out;
      },
      py::arg("entity"), py::arg("taxonomy"),
      py::arg("context") = std::vector<std::string>{},
      py::arg("verb") = std::nullopt,
      py::arg("learned") = std::vector<Assignment>{},
      py::arg("corpus") = std::nullopt, py::arg("top") = 0,
      py::arg("smoothing") = 0.0,
      "Ranked (concept, score) pairs; verb priors come from `learned`.");
}
