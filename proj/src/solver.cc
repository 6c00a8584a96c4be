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

#include "verbpattern/solver.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "tsv.h"
#include "verbpattern/errors.h"

namespace verbpattern {
namespace {

// Lengths closer than this are treated as equal when picking a winner.
constexpr double kTieTolerance = 1e-12;

// True when (length, serialized) should replace the current best.
bool Improves(double length, const Assignment &candidate, double best_length,
              const Assignment &best) {
  if (length < best_length - kTieTolerance) return true;
  if (length > best_length + kTieTolerance) return false;
  return candidate.Serialize() < best.Serialize();
}

}  // namespace

IdiomDictionary LoadIdiomDictionary(std::istream &in,
                                    const std::string &source_name) {
  IdiomDictionary idioms;
  internal::ForEachRow(
      in, [&](const std::vector<std::string_view> &fields, std::size_t line) {
        if (fields.size() != 2) {
          throw LoadError(source_name, line,
                          "expected 2 tab-separated columns, got " +
                              std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
          throw LoadError(source_name, line, "empty verb or object");
        }
        idioms.insert({std::string(fields[0]), std::string(fields[1])});
      });
  return idioms;
}

IdiomDictionary LoadIdiomDictionaryFile(const std::string &path) {
  std::ifstream in = internal::OpenInput(path);
  return LoadIdiomDictionary(in, path);
}

std::string_view CoolingScheduleName(CoolingSchedule schedule) {
  return schedule == CoolingSchedule::kCooling ? "cooling" : "literal";
}

CoolingSchedule ParseCoolingSchedule(std::string_view name) {
  if (name == "cooling") return CoolingSchedule::kCooling;
  if (name == "literal") return CoolingSchedule::kLiteral;
  throw ConfigError("unknown cooling schedule '" + std::string(name) +
                    "' (expected cooling or literal)");
}

void SolverConfig::Validate() const {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw ConfigError("theta must be a finite value >= 0");
  }
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  if (!(t0 > 0.0)) throw ConfigError("t0 must be > 0");
  if (!(cooling_a > 0.0)) throw ConfigError("cooling_a must be > 0");
  if (beta < 1) throw ConfigError("beta must be >= 1");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
}

double SolverConfig::Temperature(std::size_t step) const {
  const double s = static_cast<double>(step);
  if (schedule == CoolingSchedule::kLiteral) return std::pow(s, cooling_a);
  return t0 * std::pow(s, -cooling_a);
}

std::size_t Rng::NextIndex(std::size_t n) {
  // Modulo bias is below 2^-50 for any realistic universe size.
  return static_cast<std::size_t>(engine_() % n);
}

double Rng::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Typicality(const VerbPhrase &phrase, const VerbPattern &pattern,
                  const Taxonomy &taxonomy, double gamma) {
  if (!IsValidPatternFor(pattern, phrase.verb, phrase.object, taxonomy)) {
    return 0.0;
  }
  if (pattern.is_idiom()) return gamma;
  return taxonomy.EntityGivenConcept(phrase.object, pattern.label) *
         taxonomy.ConceptGivenEntity(phrase.object, pattern.label);
}

VerbProblem::VerbProblem(std::string verb, const PhraseDistribution &dist,
                         const Taxonomy &taxonomy,
                         const std::set<std::string> &locked, double gamma)
    : verb_(std::move(verb)), dist_(dist) {
  objects_.reserve(dist.size());
  for (const auto &[object, p] : dist) {
    objects_.push_back(object);
    probability_.push_back(p);
    locked_.push_back(locked.count(object) ? 1 : 0);
  }

  // Universe: distinct concepts of all objects, then one idiom per phrase.
  std::map<std::string, std::uint32_t, std::less<>> concept_index;
  for (const auto &object : objects_) {
    for (auto &c : taxonomy.ConceptsOf(object)) concept_index.emplace(c, 0);
  }
  for (auto &[name, index] : concept_index) {
    index = static_cast<std::uint32_t>(universe_.size());
    universe_.push_back(VerbPattern::Concept(verb_, name));
  }
  const std::uint32_t first_idiom =
      static_cast<std::uint32_t>(universe_.size());
  for (const auto &object : objects_) {
    universe_.push_back(VerbPattern::Idiom(verb_, object));
  }
  members_.resize(universe_.size());
  mass_scratch_.assign(universe_.size(), 0.0);

  candidates_.resize(objects_.size());
  for (std::uint32_t i = 0; i < objects_.size(); ++i) {
    const std::string &object = objects_[i];
    auto &cands = candidates_[i];
    cands.push_back({first_idiom + i, gamma, 0.0});
    members_[first_idiom + i].push_back({i, 0});
    if (const auto *concepts = taxonomy.ConceptCounts(object)) {
      const double entity_total =
          static_cast<double>(taxonomy.EntityTotal(object));
      for (const auto &[name, count] : *concepts) {
        const double n = static_cast<double>(count);
        const double e_given_c =
            n / static_cast<double>(taxonomy.ConceptTotal(name));
        const double c_given_e = n / entity_total;
        const std::uint32_t pattern = concept_index.find(name)->second;
        members_[pattern].push_back(
            {i, static_cast<std::uint32_t>(cands.size())});
        cands.push_back(
            {pattern, e_given_c * c_given_e, -std::log2(e_given_c)});
      }
    }
  }
}

namespace {

std::set<std::string> LockedObjects(std::string_view verb,
                                    const VerbPhrases &phrases,
                                    const IdiomDictionary &idioms) {
  std::set<std::string> locked;
  for (const auto &oc : phrases.objects) {
    if (idioms.count({std::string(verb), oc.object})) locked.insert(oc.object);
  }
  return locked;
}

}  // namespace

VerbProblem::VerbProblem(std::string_view verb, const PhraseCorpus &corpus,
                         const Taxonomy &taxonomy,
                         const IdiomDictionary &idioms, double gamma)
    : VerbProblem(std::string(verb), ComputePhraseDistribution(corpus, verb),
                  taxonomy, LockedObjects(verb, corpus.Phrases(verb), idioms),
                  gamma) {}

long VerbProblem::PatternIndex(const VerbPattern &pattern) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), pattern,
                             [](const VerbPattern &a, const VerbPattern &b) {
                               // Concepts precede idioms in the universe;
                               // within a kind the order is lexicographic by
                               // label.
                               if (a.kind != b.kind)
                                 return a.kind == PatternKind::kConcept;
                               return a.label < b.label;
                             });
  if (it == universe_.end() || *it != pattern) return -1;
  return static_cast<long>(it - universe_.begin());
}

DescriptionLength VerbProblem::Length(const State &state, double theta) const {
  std::fill(mass_scratch_.begin(), mass_scratch_.end(), 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    mass_scratch_[candidates_[i][state[i]].pattern] += probability_[i];
  }
  DescriptionLength length;
  length.theta = theta;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Candidate &c = candidates_[i][state[i]];
    // Rounding can push a pattern's mass a hair above 1.
    length.l_patterns -=
        probability_[i] * std::log2(std::min(mass_scratch_[c.pattern], 1.0));
    length.l_conditional += probability_[i] * c.phrase_bits;
  }
  length.total = length.l_patterns + theta * length.l_conditional;
  return length;
}

Assignment VerbProblem::ToAssignment(const State &state) const {
  Assignment f;
  f.verb = verb_;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    f.patterns.emplace_hint(f.patterns.end(), objects_[i],
                            universe_[candidates_[i][state[i]].pattern]);
  }
  return f;
}

VerbProblem::State VerbProblem::FromAssignment(
    const Assignment &assignment) const {
  if (assignment.verb != verb_) {
    throw InvalidAssignmentError("assignment is for verb '" + assignment.verb +
                                 "', expected '" + verb_ + "'");
  }
  if (assignment.patterns.size() != objects_.size()) {
    throw InvalidAssignmentError("assignment does not cover every phrase");
  }
  State state(objects_.size(), 0);
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const VerbPattern &pattern = assignment.at(objects_[i]);
    long index = PatternIndex(pattern);
    bool found = false;
    for (std::uint32_t slot = 0; index >= 0 && slot < candidates_[i].size();
         ++slot) {
      if (candidates_[i][slot].pattern == static_cast<std::uint32_t>(index)) {
        state[i] = slot;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InvalidAssignmentError("pattern '" + pattern.ToString() +
                                   "' is not valid for '" + objects_[i] + "'");
    }
  }
  return state;
}

StepOutcome AnnealStep(const VerbProblem &problem, VerbProblem::State &state,
                       double length, std::uint32_t proposal,
                       const SolverConfig &config, std::size_t step, Rng &rng) {
  StepOutcome outcome;
  outcome.length = length;

  // Phrases that prefer the proposal, with their previous slot for revert.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> moves;
  for (const auto &member : problem.members(proposal)) {
    if (problem.locked(member.phrase)) continue;
    const auto &cands = problem.candidates(member.phrase);
    if (cands[member.slot].typicality >
        cands[state[member.phrase]].typicality) {
      moves.emplace_back(member.phrase, state[member.phrase]);
      state[member.phrase] = member.slot;
    }
  }
  outcome.moved = moves.size();
  if (moves.empty()) return outcome;

  const double next = problem.Length(state, config.theta).total;
  bool accept = next < length;
  if (!accept) {
    const double p = std::exp(
        (length - next) / config.Temperature(std::max<std::size_t>(step, 1)));
    accept = rng.NextUniform() < p;
  }
  if (accept) {
    outcome.accepted = true;
    outcome.length = next;
  } else {
    for (const auto &[phrase, slot] : moves) state[phrase] = slot;
  }
  return outcome;
}

AnnealStepResult AnnealStep(const Assignment &state,
                            const VerbPattern &proposal,
                            const SolverConfig &config, std::size_t step,
                            Rng &rng, const std::set<std::string> &locked,
                            const PhraseDistribution &dist,
                            const Taxonomy &taxonomy) {
  VerbProblem problem(state.verb, dist, taxonomy, locked, config.gamma);
  VerbProblem::State indexed = problem.FromAssignment(state);
  AnnealStepResult result;
  long index = problem.PatternIndex(proposal);
  if (index < 0) {
    result.state = state;
    return result;
  }
  const double length = problem.Length(indexed, config.theta).total;
  StepOutcome outcome =
      AnnealStep(problem, indexed, length, static_cast<std::uint32_t>(index),
                 config, step, rng);
  result.state = problem.ToAssignment(indexed);
  result.accepted = outcome.accepted;
  result.moved = outcome.accepted ? outcome.moved : 0;
  return result;
}

namespace {

struct ChainResult {
  VerbProblem::State best;
  double best_length = 0.0;
  std::size_t iterations = 0;
};

ChainResult RunChain(const VerbProblem &problem, const SolverConfig &config,
                     std::size_t restart, std::size_t max_iterations,
                     std::vector<TraceStep> *trace) {
  Rng rng(config.seed + restart);
  VerbProblem::State state = problem.AllIdiomState();
  double length = problem.Length(state, config.theta).total;

  ChainResult chain{state, length, 0};
  const std::size_t universe = problem.universe().size();
  std::size_t unchanged = 0;
  for (std::size_t step = 1; step <= max_iterations; ++step) {
    const auto proposal = static_cast<std::uint32_t>(rng.NextIndex(universe));
    StepOutcome outcome =
        AnnealStep(problem, state, length, proposal, config, step, rng);
    chain.iterations = step;
    if (outcome.accepted) {
      length = outcome.length;
      unchanged = 0;
      if (length < chain.best_length) {
        chain.best = state;
        chain.best_length = length;
      }
    } else {
      ++unchanged;
    }
    if (trace != nullptr) {
      trace->push_back({restart, step, problem.universe()[proposal],
                        outcome.moved, outcome.accepted, length,
                        problem.ToAssignment(state)});
    }
    if (unchanged >= config.beta) break;
  }
  return chain;
}

}  // namespace

SolveResult Solve(const VerbProblem &problem, const SolverConfig &config) {
  config.Validate();
  SolveResult result;
  if (problem.num_phrases() == 0) {
    throw NotFoundError("verb has no phrases: " + problem.verb());
  }
  if (problem.num_phrases() == 1) {
    result.assignment = problem.ToAssignment(problem.AllIdiomState());
    result.length = problem.Length(problem.AllIdiomState(), config.theta);
    return result;
  }

  const std::size_t max_iterations = config.max_iterations > 0
                                         ? config.max_iterations
                                         : 20 * problem.universe().size();
  std::vector<TraceStep> *trace = config.record_trace ? &result.trace : nullptr;

  VerbProblem::State best;
  double best_length = 0.0;
  Assignment best_assignment;
  for (std::size_t restart = 0; restart < config.restarts; ++restart) {
    ChainResult chain =
        RunChain(problem, config, restart, max_iterations, trace);
    result.total_iterations += chain.iterations;
    Assignment candidate = problem.ToAssignment(chain.best);
    if (restart == 0 ||
        Improves(chain.best_length, candidate, best_length, best_assignment)) {
      best = std::move(chain.best);
      best_length = chain.best_length;
      best_assignment = std::move(candidate);
      result.best_restart = restart;
      result.iterations = chain.iterations;
    }
  }
  result.assignment = std::move(best_assignment);
  result.length = problem.Length(best, config.theta);
  return result;
}

SolveResult Solve(std::string_view verb, const PhraseCorpus &corpus,
                  const Taxonomy &taxonomy, const IdiomDictionary &idioms,
                  const SolverConfig &config) {
  config.Validate();
  VerbProblem problem(verb, corpus, taxonomy, idioms, config.gamma);
  return Solve(problem, config);
}

std::vector<SolveResult> SolveAll(const PhraseCorpus &corpus,
                                  const Taxonomy &taxonomy,
                                  const IdiomDictionary &idioms,
                                  const SolverConfig &config,
                                  std::size_t workers) {
  config.Validate();
  const std::vector<std::string> verbs = corpus.Verbs();
  std::vector<SolveResult> results(verbs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= verbs.size()) return;
      try {
        results[i] = Solve(verbs[i], corpus, taxonomy, idioms, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1,
                                    std::max<std::size_t>(verbs.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

OptimumResult BruteForceOptimum(const VerbProblem &problem, double theta,
                                std::uint64_t limit) {
  if (!(theta >= 0.0)) throw ConfigError("theta must be >= 0");
  const std::size_t n = problem.num_phrases();
  std::vector<std::uint32_t> radix(n);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    radix[i] = problem.locked(i)
                   ? 1
                   : static_cast<std::uint32_t>(problem.candidates(i).size());
    if (space > limit / radix[i]) {
      throw InstanceSizeError("verb '" + problem.verb() + "' has more than " +
                              std::to_string(limit) + " candidate assignments");
    }
    space *= radix[i];
  }

  OptimumResult result;
  VerbProblem::State state = problem.AllIdiomState();
  VerbProblem::State best = state;
  double best_length = problem.Length(state, theta).total;
  Assignment best_assignment = problem.ToAssignment(best);
  while (true) {
    ++result.evaluated;
    const double length = problem.Length(state, theta).total;
    if (length <= best_length + kTieTolerance) {
      Assignment candidate = problem.ToAssignment(state);
      if (Improves(length, candidate, best_length, best_assignment)) {
        best = state;
        best_length = length;
        best_assignment = std::move(candidate);
      }
    }
    // Odometer increment over the mixed radix.
    std::size_t i = 0;
    while (i < n && ++state[i] == radix[i]) state[i++] = 0;
    if (i == n) break;
  }
  result.assignment = std::move(best_assignment);
  result.length = problem.Length(best, theta);
  return result;
}

OptimumResult BruteForceOptimum(std::string_view verb,
                                const PhraseCorpus &corpus,
                                const Taxonomy &taxonomy,
                                const IdiomDictionary &idioms, double theta,
                                std::uint64_t limit) {
  // gamma does not affect the objective; any positive value will do.
  VerbProblem problem(verb, corpus, taxonomy, idioms, 1.0);
  return BruteForceOptimum(problem, theta, limit);
}

}  // namespace verbpattern
