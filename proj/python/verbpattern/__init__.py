# Copyright 2026 The verbpattern Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""MDL verb pattern extraction and verb-aware conceptualization."""

from ._verbpattern import (
    Assignment,
    ConfigError,
    ConsistencyError,
    DescriptionLength,
    InstanceSizeError,
    InvalidAssignmentError,
    LoadError,
    NotFoundError,
    PhraseCorpus,
    SolveResult,
    SolverConfig,
    Taxonomy,
    VerbPattern,
    assign_baseline,
    brute_force_optimum,
    candidate_patterns,
    description_length,
    pattern_distribution,
    rank_concepts,
    solve,
    typicality,
    validate_assignment,
    verb_concept_prior,
)

__version__ = "0.1.0"
