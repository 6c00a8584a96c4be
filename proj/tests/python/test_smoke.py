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

import math
import os
import pathlib

import pytest

import verbpattern as vp

DATA = pathlib.Path(
    os.environ.get(
        "VERBPATTERN_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"
    )
) / "fixture_eat"


@pytest.fixture(scope="module")
def eat():
    corpus = vp.PhraseCorpus.load(str(DATA / "corpus.tsv"))
    taxonomy = vp.Taxonomy.load(str(DATA / "taxonomy.tsv"))
    return corpus, taxonomy


def reference():
    food = vp.VerbPattern.concept("eat", "food")
    meal = vp.VerbPattern.concept("eat", "meal")
    return vp.Assignment(
        "eat",
        {
            "apple": food,
            "hot_dog": food,
            "breakfast": meal,
            "lunch": meal,
            "dinner": meal,
            "humble_pie": vp.VerbPattern.idiom("eat", "humble_pie"),
        },
    )


def test_taxonomy_queries(eat):
    _, taxonomy = eat
    assert taxonomy.concepts_of("breakfast") == ["activity", "meal"]
    assert taxonomy.count("apple", "food") == 20
    assert taxonomy.concepts_of("humble_pie") == []


def test_description_length(eat):
    corpus, taxonomy = eat
    length = vp.description_length(reference(), corpus, taxonomy, 0.25)
    assert length.total == pytest.approx(1.6368840289396402, abs=1e-12)
    assert length.l_patterns == pytest.approx(1.2243944454059859, abs=1e-12)


def test_solve_matches_brute_force(eat):
    corpus, taxonomy = eat
    idioms = [("eat", "humble_pie")]
    result = vp.solve("eat", corpus, taxonomy, idioms)
    best, length = vp.brute_force_optimum("eat", corpus, taxonomy, idioms, 0.25)
    assert result.assignment == reference()
    assert best == reference()
    assert result.length.total == pytest.approx(length.total, abs=1e-12)
    assert str(result.assignment.patterns["lunch"]) == "eat $_C meal"


def test_typicality(eat):
    _, taxonomy = eat
    meal = vp.VerbPattern.concept("eat", "meal")
    t = vp.typicality("eat", "breakfast", meal, taxonomy, 0.01)
    assert math.isclose(t, (8 / 24) * (8 / 9), rel_tol=1e-12)


def test_config_errors(eat):
    corpus, taxonomy = eat
    config = vp.SolverConfig()
    config.theta = -1.0
    with pytest.raises(vp.ConfigError):
        vp.solve("eat", corpus, taxonomy, config=config)
    with pytest.raises(vp.NotFoundError):
        vp.solve("drink", corpus, taxonomy)


def test_rank_concepts_flip(eat):
    corpus, _ = eat
    taxonomy = vp.Taxonomy.load(str(DATA / "taxonomy_pitaya.tsv"))
    plain = vp.rank_concepts("pitaya", taxonomy)
    assert plain[0][0] == "company"
    with_verb = vp.rank_concepts(
        "pitaya", taxonomy, verb="eat", learned=[reference()], corpus=corpus
    )
    assert [c for c, _ in with_verb] == ["food"]


def test_load_error_reports_line():
    with pytest.raises(vp.LoadError, match="2"):
        vp.Taxonomy.from_tsv("food\tapple\t1\nfood\tapple\t-1\n")
