"""End-to-end command line tests: exit codes, JSON payloads, witnesses."""

import io
import json
import subprocess
import sys

import pytest

from complexpand import SimplicialComplex, is_shelling
from complexpand.cli import main

DELTA0 = {
    "vertices": ["x1", "x2", "x3", "x4", "x5"],
    "facets": [["x1", "x2", "x3"], ["x1", "x2", "x4"], ["x4", "x5"]],
}
G0 = {
    "vertices": ["x1", "x2", "x3", "x4", "x5"],
    "edges": [
        ["x1", "x2"],
        ["x1", "x4"],
        ["x1", "x5"],
        ["x2", "x3"],
        ["x2", "x4"],
        ["x2", "x5"],
        ["x3", "x4"],
    ],
}
SQUARE = {
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]],
}
FOUR_CYCLE_COMPLEX = {
    "vertices": ["x1", "x2", "x3", "x4"],
    "facets": [["x1", "x3"], ["x1", "x4"], ["x2", "x3"], ["x2", "x4"]],
}
DISJOINT_EDGES = {
    "vertices": ["a", "b", "c", "d"],
    "facets": [["a", "b"], ["c", "d"]],
}
RP2 = {
    "vertices": ["v1", "v2", "v3", "v4", "v5", "v6"],
    "facets": [
        ["v1", "v2", "v3"],
        ["v1", "v2", "v4"],
        ["v1", "v3", "v5"],
        ["v1", "v4", "v6"],
        ["v1", "v5", "v6"],
        ["v2", "v3", "v6"],
        ["v2", "v4", "v5"],
        ["v2", "v5", "v6"],
        ["v3", "v4", "v5"],
        ["v3", "v4", "v6"],
    ],
}


@pytest.fixture
def complex_file(tmp_path):
    path = tmp_path / "delta0.json"
    path.write_text(json.dumps(DELTA0))
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g0.json"
    path.write_text(json.dumps(G0))
    return str(path)


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- expand


def test_expand_complex(capsys, complex_file):
    code, out, _ = run_cli(capsys, "expand", complex_file, "--s", "1,2,1,1,2")
    assert code == 0
    data = json.loads(out)
    assert sorted(map(sorted, data["facets"])) == [
        ["x1_1", "x2_1", "x3_1"],
        ["x1_1", "x2_1", "x4_1"],
        ["x1_1", "x2_2", "x3_1"],
        ["x1_1", "x2_2", "x4_1"],
        ["x4_1", "x5_1"],
        ["x4_1", "x5_2"],
    ]


def test_expand_requires_copy_counts(capsys, complex_file):
    code, _, err = run_cli(capsys, "expand", complex_file)
    assert code == 3
    assert "--s" in err


def test_expand_graph(capsys, tmp_path):
    diamond = {
        "vertices": ["x1", "x2", "x3", "x4", "x5"],
        "edges": [
            ["x1", "x2"],
            ["x1", "x4"],
            ["x2", "x3"],
            ["x2", "x4"],
            ["x2", "x5"],
            ["x3", "x4"],
        ],
    }
    path = write_json(tmp_path, "diamond.json", diamond)
    code, out, _ = run_cli(capsys, "expand", path, "--expand", "1,1,2,1,2")
    assert code == 0
    data = json.loads(out)
    assert len(data["edges"]) == 11
    assert ["x3_1", "x3_2"] in data["edges"]
    assert ["x5_1", "x5_2"] in data["edges"]


def test_expand_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(DELTA0)))
    code, out, _ = run_cli(capsys, "expand", "--s", "1,1,1,1,1")
    assert code == 0
    assert json.loads(out)["vertices"] == ["x1_1", "x2_1", "x3_1", "x4_1", "x5_1"]


def test_expand_bad_vector(capsys, complex_file):
    code, _, err = run_cli(capsys, "expand", complex_file, "--s", "1,2")
    assert code == 3
    code, _, err = run_cli(capsys, "expand", complex_file, "--s", "1,x,1,1,1")
    assert code == 3


# ---------------------------------------------------------------- check


def test_check_vd_true(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "vd", complex_file)
    assert code == 0
    assert out.strip() == "true"


def test_check_vd_witness_tree(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "vd", complex_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["check"] == "vd"
    assert payload["result"] is True
    assert "vertex" in payload["witness"]


def test_check_cm_false_for_nonpure(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "cm", complex_file)
    assert code == 1
    assert out.strip() == "false"


def test_check_cm_field_dependence(capsys, tmp_path):
    path = write_json(tmp_path, "rp2.json", RP2)
    assert run_cli(capsys, "check", "cm", path)[0] == 0
    assert run_cli(capsys, "check", "cm", path, "--field", "gf:2")[0] == 1


def test_check_connected_and_pure(capsys, complex_file):
    assert run_cli(capsys, "check", "connected", complex_file)[0] == 0
    assert run_cli(capsys, "check", "pure", complex_file)[0] == 1


def test_check_shellable_witness(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "shellable", complex_file, "--json")
    assert code == 0
    payload = json.loads(out)
    order = payload["witness"]
    sc = SimplicialComplex.from_dict(DELTA0)
    assert is_shelling(sc, order)


def test_check_vd_budget_exhaustion_is_undecided(capsys, complex_file):
    code, _, err = run_cli(capsys, "check", "vd", "--budget", "1", complex_file)
    assert code == 2
    assert "undecided" in err


def test_check_chordal(capsys, graph_file, tmp_path):
    assert run_cli(capsys, "check", "chordal", graph_file)[0] == 0
    square = write_json(tmp_path, "square.json", SQUARE)
    assert run_cli(capsys, "check", "chordal", square)[0] == 1


def test_check_chordal_of_expansion(capsys, graph_file):
    code, out, _ = run_cli(capsys, "check", "chordal", graph_file, "--s", "2,2,3,2,3")
    assert code == 0


def test_check_chordal_rejects_complex_input(capsys, complex_file):
    code, _, err = run_cli(capsys, "check", "chordal", complex_file)
    assert code == 3
    assert "graph" in err


def test_check_on_graph_uses_independence_complex(capsys, graph_file):
    # the independence complex of g0 has an isolated vertex, so it is
    # disconnected
    code, out, _ = run_cli(capsys, "check", "connected", graph_file)
    assert code == 1


def test_check_property_flag_spelling(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "--property", "vd", complex_file)
    assert code == 0
    assert out.strip() == "true"


def test_check_conflicting_properties(capsys, complex_file):
    code, _, err = run_cli(
        capsys, "check", "cm", complex_file, "--property", "vd"
    )
    assert code == 3
    assert "conflicting" in err


def test_check_unknown_property(capsys, complex_file):
    code, _, err = run_cli(capsys, "check", "bogus", complex_file)
    assert code == 3


def test_check_flags_before_file(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "vd", "--budget", "100000", complex_file)
    assert code == 0
    assert out.strip() == "true"


def test_two_stray_arguments_are_an_error(capsys, complex_file):
    with pytest.raises(SystemExit) as exc:
        main(["check", "vd", complex_file, complex_file])
    assert exc.value.code == 3


def test_check_expansion_preserves_vd(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "vd", complex_file, "--s", "2,1,1,2,1")
    assert code == 0


# ---------------------------------------------------------------- invariants


def test_invariants_default(capsys, complex_file):
    code, out, _ = run_cli(capsys, "invariants", complex_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["pd"] == 3
    assert payload["depth"] == 2
    assert payload["reg"] == 1
    assert payload["dim"] == 3
    assert payload["via"] == "hochster"
    assert payload["field"] == "q"


def test_invariants_bight_and_betti(capsys, complex_file):
    code, out, _ = run_cli(
        capsys, "invariants", complex_file, "--what", "bight,betti,betti-quotient"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["bight"] == 3
    assert payload["betti"] == {"0,2": 4, "1,3": 4, "2,4": 1}
    assert payload["betti-quotient"] == {"0,0": 1, "1,2": 4, "2,3": 4, "3,4": 1}


def test_invariants_via_both_cross_checks(capsys, complex_file):
    code, out, _ = run_cli(capsys, "invariants", complex_file, "--via", "both")
    assert code == 0
    assert json.loads(out)["pd"] == 3


def test_invariants_via_lq_route_inapplicable(capsys, tmp_path):
    path = write_json(tmp_path, "square_complex.json", FOUR_CYCLE_COMPLEX)
    code, out, err = run_cli(capsys, "invariants", path, "--via", "lq")
    assert code == 1
    assert "linear quotients" in err
    code, out, _ = run_cli(capsys, "invariants", path, "--via", "hochster")
    assert code == 0
    assert json.loads(out)["pd"] == 2


def test_invariants_of_expansion(capsys, complex_file):
    code, out, _ = run_cli(
        capsys, "invariants", complex_file, "--s", "1,1,2,1,2", "--what", "pd,depth"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pd"] == 5
    assert payload["depth"] == 2


def test_invariants_unknown_what(capsys, complex_file):
    code, _, err = run_cli(capsys, "invariants", complex_file, "--what", "rank")
    assert code == 3


def test_invariants_var_cap(capsys, complex_file):
    code, _, err = run_cli(capsys, "invariants", complex_file, "--var-cap", "3")
    assert code == 2
    assert "undecided" in err


# ---------------------------------------------------------------- dual


def test_dual(capsys, complex_file):
    code, out, _ = run_cli(capsys, "dual", complex_file)
    assert code == 0
    data = json.loads(out)
    assert sorted(map(sorted, data["facets"])) == [
        ["x1", "x2", "x4"],
        ["x1", "x2", "x5"],
        ["x1", "x3", "x4"],
        ["x2", "x3", "x4"],
    ]


# ---------------------------------------------------------------- shelling


def test_shelling_found(capsys, complex_file):
    code, out, _ = run_cli(capsys, "shelling", complex_file, "--json")
    assert code == 0
    payload = json.loads(out)
    sc = SimplicialComplex.from_dict(DELTA0)
    assert is_shelling(sc, payload["shelling"])


def test_shelling_of_expansion_is_induced(capsys, complex_file):
    code, out, _ = run_cli(
        capsys, "shelling", complex_file, "--s", "1,2,1,1,2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["induced_from_base"] is True
    expanded = SimplicialComplex.from_dict(
        json.loads(run_cli(capsys, "expand", complex_file, "--s", "1,2,1,1,2")[1])
    )
    assert is_shelling(expanded, payload["shelling"])


def test_shelling_none(capsys, tmp_path):
    path = write_json(tmp_path, "disjoint.json", DISJOINT_EDGES)
    code, out, _ = run_cli(capsys, "shelling", path)
    assert code == 1
    assert out.strip() == "none"


# ---------------------------------------------------------------- search


def test_search_zero_trials(capsys):
    code, out, _ = run_cli(capsys, "search-conjecture", "--trials", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["trials"] == 0
    assert payload["counterexamples"] == []


def test_search_reports_are_reproducible(capsys):
    args = ("search-conjecture", "--trials", "8", "--seed", "42", "--max-vertices", "4")
    first = run_cli(capsys, *args)
    second = run_cli(capsys, *args)
    assert first == second
    assert first[0] in (0, 1)


def test_search_pure_shellable_mode(capsys):
    code, out, _ = run_cli(
        capsys,
        "search-conjecture",
        "--trials",
        "5",
        "--seed",
        "3",
        "--mode",
        "pure-shellable",
        "--max-vertices",
        "4",
    )
    assert code == 0
    assert json.loads(out)["mode"] == "pure-shellable"


# ---------------------------------------------------------------- input plumbing


def test_complex_flag_alias(capsys, complex_file):
    code, out, _ = run_cli(capsys, "check", "vd", "--complex", complex_file)
    assert code == 0


def test_graph_flag_alias(capsys, graph_file):
    code, out, _ = run_cli(capsys, "check", "chordal", "--graph", graph_file)
    assert code == 0


def test_complex_flag_rejects_graph_file(capsys, graph_file):
    code, _, err = run_cli(capsys, "check", "vd", "--complex", graph_file)
    assert code == 3


def test_graph_flag_rejects_complex_file(capsys, complex_file):
    code, _, err = run_cli(capsys, "check", "chordal", "--graph", complex_file)
    assert code == 3


def test_both_input_flags_rejected(capsys, complex_file, graph_file):
    code, _, err = run_cli(
        capsys, "check", "vd", "--complex", complex_file, "--graph", graph_file
    )
    assert code == 3


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "check", "vd", "/nonexistent/path.json")
    assert code == 3


def test_invalid_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, err = run_cli(capsys, "check", "vd", str(path))
    assert code == 3


def test_json_without_facets_or_edges(capsys, tmp_path):
    path = write_json(tmp_path, "odd.json", {"something": 1})
    code, _, err = run_cli(capsys, "check", "vd", path)
    assert code == 3


def test_console_entry_point(tmp_path):
    path = tmp_path / "delta0.json"
    path.write_text(json.dumps(DELTA0))
    proc = subprocess.run(
        [sys.executable, "-m", "complexpand.cli", "check", "vd", str(path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "true"
