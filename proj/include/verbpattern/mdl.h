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

// Two-part description length of a pattern assignment, in bits.
//
// Each phrase p is encoded as its pattern f(p) followed by p given f(p):
//
//   l(p,f) = -log2 P(f(p))
//   r(p,f) = 0                            if f(p) is an idiom pattern
//          = -log2 P_T(o_p | c_f(p))      if f(p) is conceptualized
//
//   L_L(f) = sum_p P(p) l(p,f)    (entropy of the pattern distribution)
//   L_R(f) = sum_p P(p) r(p,f)    (cross entropy against the taxonomy)
//   L(f)   = L_L(f) + theta * L_R(f)

#ifndef VERBPATTERN_MDL_H_
#define VERBPATTERN_MDL_H_

#include <map>

#include "verbpattern/corpus.h"
#include "verbpattern/patterns.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern {

struct DescriptionLength {
  double l_patterns = 0.0;     // L_L
  double l_conditional = 0.0;  // L_R
  double theta = 0.0;
  double total = 0.0;
};

struct PhraseCodeLength {
  double pattern_bits = 0.0;  // l(p,f)
  double phrase_bits = 0.0;   // r(p,f)
};

// Throws InvalidAssignmentError if f(p) is conceptualized and P_T(o_p|c) = 0,
// or if P(f(p)) = 0.
PhraseCodeLength CodeLengthsForPhrase(const VerbPhrase &phrase,
                                      const Assignment &assignment,
                                      const PhraseDistribution &dist,
                                      const Taxonomy &taxonomy);

// theta must be >= 0 (ConfigError otherwise).
DescriptionLength ComputeDescriptionLength(const Assignment &assignment,
                                           const PhraseDistribution &dist,
                                           const Taxonomy &taxonomy,
                                           double theta);

// Shannon entropy in bits; zero-mass entries contribute nothing.
double EntropyBits(const PhraseDistribution &dist);
double EntropyBits(const std::map<VerbPattern, double> &dist);

}  // namespace verbpattern

#endif  // VERBPATTERN_MDL_H_
