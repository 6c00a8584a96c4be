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

// Pattern assignment search for one verb.
//
// Solve() runs typicality-guided simulated annealing:
//
//   1. Start with every phrase on its own idiom pattern.
//   2. Draw a pattern a uniformly from the verb's pattern universe and move
//      every unlocked phrase p with t(p,a) > t(p,f(p)) onto it.
//   3. Keep the move if L drops; otherwise keep it with probability
//      exp((L(f) - L(f')) / T(S)). A rejected move reverts as a whole.
//   4. Stop after beta consecutive iterations without a change, or at
//      max_iterations.
//
// where t(p,a) = gamma for the phrase's idiom pattern and
// P_T(o_p|c_a) * P_T(c_a|o_p) for a conceptualized one. Phrases in the idiom
// dictionary stay on their idiom pattern throughout.
//
// BruteForceOptimum() enumerates every valid assignment and is the
// reference the annealer is tested against on small instances.

#ifndef VERBPATTERN_SOLVER_H_
#define VERBPATTERN_SOLVER_H_

#include <cstdint>
#include <istream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "verbpattern/corpus.h"
#include "verbpattern/mdl.h"
#include "verbpattern/patterns.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern {

// (verb, object) pairs known to be idioms.
using IdiomDictionary = std::set<VerbPhrase>;

// Reads `verb<TAB>object` lines; '#' comments and blank lines are skipped.
IdiomDictionary LoadIdiomDictionary(
    std::istream &in, const std::string &source_name = "<idioms>");
IdiomDictionary LoadIdiomDictionaryFile(const std::string &path);

enum class CoolingSchedule {
  // T(S) = t0 * S^-A: the acceptance probability of a worse move shrinks.
  kCooling,
  // T(S) = S^A, the exponent exactly as usually written; it grows with S.
  kLiteral,
};

std::string_view CoolingScheduleName(CoolingSchedule schedule);
CoolingSchedule ParseCoolingSchedule(std::string_view name);

struct SolverConfig {
  double theta = 0.25;
  double gamma = 0.01;
  double t0 = 1.0;
  double cooling_a = 0.5;
  std::size_t beta = 200;
  std::uint64_t seed = 1;
  std::size_t restarts = 4;
  // 0 selects 20 * (number of distinct candidate patterns).
  std::size_t max_iterations = 0;
  CoolingSchedule schedule = CoolingSchedule::kCooling;
  bool record_trace = false;

  // Throws ConfigError on theta < 0, gamma <= 0, t0 <= 0, cooling_a <= 0,
  // beta < 1 or restarts < 1.
  void Validate() const;
  double Temperature(std::size_t step) const;
};

// Seeded 64-bit generator with platform-independent index and uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t NextIndex(std::size_t n);  // uniform in [0, n)
  double NextUniform();                  // uniform in [0, 1)

 private:
  std::mt19937_64 engine_;
};

// Typicality of pattern `a` for phrase `p`: gamma for its own idiom pattern,
// P_T(o|c) * P_T(c|o) for a conceptualized pattern it belongs to, 0 when the
// pattern is not valid for the phrase.
double Typicality(const VerbPhrase &phrase, const VerbPattern &pattern,
                  const Taxonomy &taxonomy, double gamma);

// One verb's assignment problem compiled to integer form. A state holds, per
// phrase (object order), the slot of its pattern in that phrase's candidate
// list; slot 0 is always the idiom pattern.
//
// Length() reuses an internal buffer, so one instance must not be evaluated
// from two threads at once.
class VerbProblem {
 public:
  struct Candidate {
    std::uint32_t pattern = 0;  // index into universe()
    double typicality = 0.0;
    double phrase_bits = 0.0;  // r(p, a)
  };
  struct Member {
    std::uint32_t phrase = 0;
    std::uint32_t slot = 0;
  };
  using State = std::vector<std::uint32_t>;

  VerbProblem(std::string verb, const PhraseDistribution &dist,
              const Taxonomy &taxonomy, const std::set<std::string> &locked,
              double gamma);
  VerbProblem(std::string_view verb, const PhraseCorpus &corpus,
              const Taxonomy &taxonomy, const IdiomDictionary &idioms,
              double gamma);

  const std::string &verb() const { return verb_; }
  std::size_t num_phrases() const { return objects_.size(); }
  const std::vector<std::string> &objects() const { return objects_; }
  const std::vector<double> &probabilities() const { return probability_; }
  const PhraseDistribution &distribution() const { return dist_; }
  bool locked(std::size_t phrase) const { return locked_[phrase] != 0; }
  const std::vector<Candidate> &candidates(std::size_t phrase) const {
    return candidates_[phrase];
  }
  // Concept patterns (lexicographic) followed by idiom patterns (object
  // order).
  const std::vector<VerbPattern> &universe() const { return universe_; }
  const std::vector<Member> &members(std::size_t pattern) const {
    return members_[pattern];
  }
  // Index of `pattern` in universe(), or -1.
  long PatternIndex(const VerbPattern &pattern) const;

  State AllIdiomState() const { return State(objects_.size(), 0); }
  double Typicality(std::size_t phrase, const State &state) const {
    return candidates_[phrase][state[phrase]].typicality;
  }
  // L_L, L_R and total for `state`; O(phrases + universe).
  DescriptionLength Length(const State &state, double theta) const;

  Assignment ToAssignment(const State &state) const;
  // Throws InvalidAssignmentError if the assignment is not expressible.
  State FromAssignment(const Assignment &assignment) const;

 private:
  std::string verb_;
  PhraseDistribution dist_;
  std::vector<std::string> objects_;
  std::vector<double> probability_;
  std::vector<char> locked_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<VerbPattern> universe_;
  std::vector<std::vector<Member>> members_;
  mutable std::vector<double> mass_scratch_;
};

struct StepOutcome {
  bool accepted = false;
  std::size_t moved = 0;  // phrases reassigned by the proposal
  double length = 0.0;    // total length of the state after the step
};

// One annealing iteration on an indexed state. `length` is L(state) on entry;
// `state` is left unchanged when the step is rejected or moves nothing.
StepOutcome AnnealStep(const VerbProblem &problem, VerbProblem::State &state,
                       double length, std::uint32_t proposal,
                       const SolverConfig &config, std::size_t step, Rng &rng);

struct AnnealStepResult {
  Assignment state;
  bool accepted = false;
  std::size_t moved = 0;
};

// Assignment-level wrapper over the indexed step. `locked` holds objects
// pinned to their idiom pattern.
AnnealStepResult AnnealStep(const Assignment &state,
                            const VerbPattern &proposal,
                            const SolverConfig &config, std::size_t step,
                            Rng &rng, const std::set<std::string> &locked,
                            const PhraseDistribution &dist,
                            const Taxonomy &taxonomy);

struct TraceStep {
  std::size_t restart = 0;
  std::size_t iteration = 0;  // S, 1-based
  VerbPattern proposal;
  std::size_t moved = 0;
  bool accepted = false;
  double length = 0.0;  // after the step
  Assignment state;     // after the step
};

struct SolveResult {
  Assignment assignment;
  DescriptionLength length;
  std::size_t iterations = 0;        // of the winning chain
  std::size_t total_iterations = 0;  // across all restarts
  std::size_t best_restart = 0;
  std::vector<TraceStep> trace;  // filled when config.record_trace
};

// Throws NotFoundError for a verb absent from the corpus.
SolveResult Solve(std::string_view verb, const PhraseCorpus &corpus,
                  const Taxonomy &taxonomy, const IdiomDictionary &idioms,
                  const SolverConfig &config);
SolveResult Solve(const VerbProblem &problem, const SolverConfig &config);

// Solves every verb of the corpus on up to `workers` threads. Results are in
// corpus verb order and do not depend on `workers`.
std::vector<SolveResult> SolveAll(const PhraseCorpus &corpus,
                                  const Taxonomy &taxonomy,
                                  const IdiomDictionary &idioms,
                                  const SolverConfig &config,
                                  std::size_t workers);

struct OptimumResult {
  Assignment assignment;
  DescriptionLength length;
  std::uint64_t evaluated = 0;  // assignments enumerated
};

inline constexpr std::uint64_t kBruteForceLimit = 1'000'000;

// Exhaustive minimiser of L over valid assignments honouring the idiom
// dictionary. Ties within 1e-12 go to the lexicographically smallest
// serialised assignment. Throws InstanceSizeError when the number of
// assignments exceeds `limit`.
OptimumResult BruteForceOptimum(std::string_view verb,
                                const PhraseCorpus &corpus,
                                const Taxonomy &taxonomy,
                                const IdiomDictionary &idioms, double theta,
                                std::uint64_t limit = kBruteForceLimit);
OptimumResult BruteForceOptimum(const VerbProblem &problem, double theta,
                                std::uint64_t limit = kBruteForceLimit);

}  // namespace verbpattern

#endif  // VERBPATTERN_SOLVER_H_
