import json

import pytest

from maxdepth.cli import main
from maxdepth.ideals import DEFAULT_COLON_SEARCH_CAP, set_colon_search_cap
from maxdepth.complexes import DEFAULT_MAX_VERTICES, set_max_vertices

C8 = "--edges=n=8; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8,1-8"


@pytest.fixture(autouse=True)
def restore_caps():
    yield
    set_colon_search_cap(DEFAULT_COLON_SEARCH_CAP)
    set_max_vertices(DEFAULT_MAX_VERTICES)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, "--format=json", *argv)
    assert code == 0, err
    return json.loads(out)


class TestAnalyze:
    def test_c8_table(self, capsys):
        code, out, err = run_cli(capsys, "analyze", C8)
        assert code == 0
        assert "depth: 3" in out and "dim: 4" in out
        assert "maximal_depth: true" in out

    def test_c8_json(self, capsys):
        doc = run_json(capsys, "analyze", C8)
        assert doc["dim"] == 4 and doc["depth"] == 3 and doc["mdepth"] == 3
        assert doc["maximal_depth"] is True
        assert doc["field"] == "QQ"
        assert len(doc["ass"]) == 10
        assert [row["i"] for row in doc["h_table"]] == [0, 1, 2, 3, 4]

    def test_gens_input(self, capsys):
        doc = run_json(capsys, "analyze", "--gens=x1*x3,x1*x4,x2*x3,x2*x4")
        assert doc["depth"] == 1 and doc["generalized_cm"] is True
        assert doc["h_table"][1]["k_dim"] == 1

    def test_field_flag(self, capsys, tmp_path):
        facets = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 6], [1, 5, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ]
        path = tmp_path / "rp2.json"
        path.write_text(json.dumps({"vertices": 6, "facets": facets}))
        rp2 = f"--facets-json={path}"
        q = run_json(capsys, "analyze", rp2)
        f2 = run_json(capsys, "--field=f2", "analyze", rp2)
        assert q["depth"] == 3 and f2["depth"] == 2
        assert f2["field"] == "GF(2)"

    def test_facets_json_input(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"vertices": 3, "facets": [[1, 2], [2, 3], [1, 3]]}))
        doc = run_json(capsys, "analyze", f"--facets-json={path}")
        assert doc["dim"] == 2 and doc["depth"] == 2

    def test_two_sources_rejected(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "--gens=x1", "--edges=n=2; edges=1-2")
        assert code == 2 and "error kind=" in err


class TestOtherCommands:
    def test_filtration(self, capsys):
        doc = run_json(capsys, "filtration", C8)
        assert doc["t"] == 3
        assert doc["levels"][3]["depth_interval"] == [2, 2]
        assert doc["levels"][4]["ideal_gens"] == ["1"]

    def test_seqcm_false_with_witness(self, capsys):
        doc = run_json(capsys, "seqcm", C8)
        assert doc["sequentially_cm"] == "false"
        assert "witness" in doc

    def test_seqcm_true(self, capsys):
        doc = run_json(capsys, "seqcm", "--edges=n=5; edges=1-2,2-3,3-4,4-5,1-5")
        assert doc == {"sequentially_cm": "true"}

    def test_att(self, capsys):
        doc = run_json(capsys, "att", C8)
        assert doc["claims"][4]["kind"] == "full"
        assert sorted(doc["claims"][4]["primes"]) == [
            ["x1", "x3", "x5", "x7"],
            ["x2", "x4", "x6", "x8"],
        ]
        assert doc["notes"]

    def test_psupp(self, capsys):
        doc = run_json(capsys, "psupp", C8, "--degree=3")
        assert doc["degree"] == 3 and [] in doc["faces"]

    def test_polarize(self, capsys):
        doc = run_json(capsys, "polarize", "--gens=x1^2,x1*x2")
        assert doc["added_vars"] == 1
        assert doc["vars"] == ["x1_1", "x1_2", "x2"]

    def test_localize(self, capsys):
        doc = run_json(capsys, "localize", C8, "--face=2,4,6,8")
        assert doc["face"] == [2, 4, 6, 8]
        assert doc["profile"]["maximal_depth"] is True

    def test_tensor(self, capsys):
        doc = run_json(capsys, "tensor", "--gens=x1*x2", "--gens2=x1*x2")
        assert doc["vars"] == ["x1", "x2", "x3", "x4"]
        assert doc["profile"]["depth"] == 2

    def test_directsum(self, capsys):
        doc = run_json(
            capsys,
            "directsum",
            "--gens=x1*x3,x1*x4,x2*x3,x2*x4",
            "--gens=",
            "--nvars=4",
        )
        assert doc["depth"] == 1 and doc["dim"] == 4
        assert doc["maximal_depth"] is False

    def test_probe(self, capsys):
        doc = run_json(
            capsys, "--samples=25", "--seed=7", "--max-vertices=6", "probe"
        )
        assert doc["samples"] == 25 and doc["hits"] == []

    def test_regress(self, capsys):
        code, out, err = run_cli(capsys, "regress")
        assert code == 0
        assert "all checks passed" in out
        assert "FAIL" not in out


class TestExitCodes:
    def test_malformed_input_is_2(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "--gens=y1+y2")
        assert code == 2 and 'error kind="malformed-input"'.split("=")[0] in err

    def test_cap_exceeded_is_3(self, capsys):
        code, out, err = run_cli(
            capsys, "--search-cap=50", "analyze", "--gens=x1^9,x2^9,x3^9"
        )
        assert code == 3

    def test_precondition_is_4(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "--gens=x1,x2", "--nvars=2")
        assert code == 0
        code, out, err = run_cli(capsys, "seqcm", "--gens=1")
        assert code in (2, 4)

    def test_unit_ideal_is_4(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "--gens=x1^0")
        assert code == 4 and "error kind=" in err

    def test_vertex_cap_is_3(self, capsys):
        # a graph not analyzed elsewhere, so no cached profile bypasses the cap
        c9 = "--edges=n=9; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-9,1-9"
        code, out, err = run_cli(capsys, "--max-vertices=4", "analyze", c9)
        assert code == 3


class TestDeterminism:
    def test_byte_identical_rerun(self, capsys):
        first = run_cli(capsys, "--format=json", "analyze", C8)
        second = run_cli(capsys, "--format=json", "analyze", C8)
        assert first == second

    def test_probe_byte_identical(self, capsys):
        args = ("--format=json", "--samples=20", "--seed=3", "probe")
        assert run_cli(capsys, *args) == run_cli(capsys, *args)
