"""Seeded random generators and the Cohen-Macaulay expansion search."""

import json
import random

import pytest

from complexpand import (
    GF32003,
    Graph,
    SimplicialComplex,
    child_seed,
    is_cohen_macaulay,
    is_shelling,
    random_complex,
    random_copies,
    random_graph,
    random_pure_complex,
    random_shellable_complex,
    search_expansion_cm,
)


# ---------------------------------------------------------------- generators


def test_child_seed_layout():
    assert child_seed(10, 3) == 10 * 1_000_003 + 3
    assert child_seed(10, 3) != child_seed(3, 10)


def test_random_complex_is_reproducible():
    a = random_complex(random.Random(5))
    b = random_complex(random.Random(5))
    assert a == b
    assert isinstance(a, SimplicialComplex)


def test_random_complex_respects_vertex_cap():
    for seed in range(30):
        sc = random_complex(random.Random(seed), max_vertices=4)
        assert 1 <= sc.num_vertices <= 4
        assert sc.facet_count >= 1


def test_random_pure_complex_is_pure():
    for seed in range(30):
        sc = random_pure_complex(random.Random(seed), max_vertices=5)
        assert sc.is_pure()


def test_random_graph_is_a_graph():
    for seed in range(20):
        g = random_graph(random.Random(seed), max_vertices=5)
        assert isinstance(g, Graph)
        assert g.num_vertices <= 5


def test_random_copies_respects_caps():
    rng = random.Random(11)
    for _ in range(200):
        copies = random_copies(rng, 5, max_copy=3, total_cap=9)
        assert len(copies) == 5
        assert all(1 <= s <= 3 for s in copies)
        assert sum(copies) <= 9


def test_random_copies_all_above_one():
    rng = random.Random(12)
    for _ in range(50):
        copies = random_copies(rng, 4, all_above_one=True, total_cap=12)
        assert all(s >= 2 for s in copies)
        assert sum(copies) <= 12


def test_random_copies_impossible_cap():
    with pytest.raises(ValueError):
        random_copies(random.Random(1), 7, all_above_one=True, total_cap=12)


def test_random_shellable_complex_comes_with_its_shelling():
    for seed in range(15):
        sc, order = random_shellable_complex(random.Random(seed), max_vertices=5)
        assert is_shelling(sc, order)


def test_random_shellable_complex_pure_mode():
    for seed in range(10):
        sc, order = random_shellable_complex(
            random.Random(seed), max_vertices=5, pure=True
        )
        assert sc.is_pure()
        assert is_shelling(sc, order)


# ---------------------------------------------------------------- search


def test_zero_trials_report_is_empty():
    report = search_expansion_cm(trials=0, seed=5)
    assert report["trials"] == 0
    assert report["bases_tested"] == 0
    assert report["bases_skipped_not_cm"] == 0
    assert report["counterexamples"] == []
    assert report["conjecture_held"] is True


def test_report_is_reproducible_byte_for_byte():
    a = search_expansion_cm(trials=10, seed=42, max_vertices=4)
    b = search_expansion_cm(trials=10, seed=42, max_vertices=4)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_different_seeds_differ():
    a = search_expansion_cm(trials=8, seed=1, max_vertices=4)
    b = search_expansion_cm(trials=8, seed=2, max_vertices=4)
    assert json.dumps(a, sort_keys=True) != json.dumps(b, sort_keys=True)


def test_report_schema():
    report = search_expansion_cm(trials=5, seed=3, max_vertices=4)
    assert report["engine"] == "expansion-cm-search"
    assert report["mode"] == "cm"
    assert report["field"] == "q"
    assert report["seed"] == 3
    assert report["trials"] == 5
    assert report["params"] == {
        "max_vertices": 4,
        "max_copy": 3,
        "total_copy_cap": 12,
    }
    assert report["bases_tested"] + report["bases_skipped_not_cm"] == 5
    assert report["conjecture_held"] == (not report["counterexamples"])


def test_counterexamples_carry_double_checked_verdicts():
    report = search_expansion_cm(trials=40, seed=77, max_vertices=5)
    for ce in report["counterexamples"]:
        base = SimplicialComplex.from_dict(ce["base"])
        assert is_cohen_macaulay(base)
        assert ce["confirmed_over_gf32003"] == (
            ce["base_cm_gf32003"] and not ce["expanded_cm_gf32003"]
        )
        assert ce["base_cm_gf32003"] == is_cohen_macaulay(base, GF32003)


def test_pure_shellable_mode_never_finds_counterexamples():
    report = search_expansion_cm(trials=12, seed=9, mode="pure-shellable", max_vertices=4)
    assert report["mode"] == "pure-shellable"
    assert report["counterexamples"] == []
    assert report["conjecture_held"] is True


def test_gf_field_is_recorded():
    report = search_expansion_cm(trials=2, seed=1, field=GF32003, max_vertices=4)
    assert report["field"] == "gf:32003"


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        search_expansion_cm(trials=1, seed=0, mode="bogus")
