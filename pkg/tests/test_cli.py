import io
import json
import subprocess
import sys

import pytest

from morgan_unify.cli import run_cli
from morgan_unify.documents import dumps, loads, structure_document

GOLDENS = [
    "diamond.json",
    "crown.json",
    "empty.json",
    "antichain2.json",
    "antichain2_swap.json",
    "fm1.json",
    "k1_pattern.json",
    "k2_pattern.json",
    "m1_pattern.json",
    "m2_pattern.json",
]


@pytest.fixture()
def cli(capsys, monkeypatch):
    def invoke(argv, stdin_text=None):
        if stdin_text is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
        code = run_cli(argv)
        out = capsys.readouterr().out
        return code, out

    return invoke


class TestGoldens:
    @pytest.mark.parametrize("name", GOLDENS)
    def test_round_trip_byte_identical(self, name, data_dir):
        text = (data_dir / name).read_text(encoding="utf-8")
        assert dumps(structure_document(loads(text))) == text

    @pytest.mark.parametrize("name", GOLDENS)
    def test_validate_echoes_canonical_form(self, name, data_dir, cli):
        code, out = cli(["validate", str(data_dir / name)])
        assert code == 0
        assert out == (data_dir / name).read_text(encoding="utf-8")


class TestClassifyCommand:
    def test_crown_matches_reference_output(self, data_dir, cli):
        code, out = cli(["classify", str(data_dir / "crown.json"), "--variety", "bdl"])
        assert code == 0
        assert json.loads(out) == {
            "solvable": True,
            "type": "nullary",
            "certificate": {"family": "bdl", "tuple": ["x", "a", "b", "c", "d", "y"]},
        }

    def test_empty_is_unsolvable_exit_two(self, data_dir, cli):
        code, out = cli(["classify", str(data_dir / "empty.json"), "--variety", "bdl"])
        assert code == 2
        assert json.loads(out) == {"solvable": False}

    def test_kleene_on_non_kleene_exit_three(self, data_dir, cli):
        code, out = cli(
            ["classify", str(data_dir / "antichain2_swap.json"), "--variety", "kleene"]
        )
        assert code == 3
        assert "error" in json.loads(out)

    @pytest.mark.parametrize(
        "name,variety,expected_type,family",
        [
            ("k1_pattern.json", "kleene", "nullary", "k1"),
            ("k2_pattern.json", "kleene", "nullary", "k2"),
            ("m1_pattern.json", "dm", "nullary", "m1"),
            ("m2_pattern.json", "dm", "nullary", "m2"),
            ("diamond.json", "dm", "unitary", None),
        ],
    )
    def test_pattern_goldens(self, name, variety, expected_type, family, data_dir, cli):
        code, out = cli(["classify", str(data_dir / name), "--variety", variety])
        assert code == 0
        report = json.loads(out)
        assert report["type"] == expected_type
        if family is not None:
            assert report["certificate"]["family"] == family


class TestFreeCommand:
    def test_dm_one_is_diamond(self, cli, data_dir):
        code, out = cli(["free", "--variety", "dm", "--n", "1"])
        assert code == 0
        assert out == (data_dir / "diamond.json").read_text(encoding="utf-8")

    def test_dm_two_has_sixteen_points(self, cli):
        code, out = cli(["free", "--variety", "dm", "--n", "2"])
        assert code == 0
        assert len(json.loads(out)["elements"]) == 16

    def test_kleene_two_drops_the_incomparable_pair(self, cli):
        code, out = cli(["free", "--variety", "kleene", "--n", "2"])
        elements = json.loads(out)["elements"]
        assert len(elements) == 14
        assert "23" not in elements and "32" not in elements

    def test_cap_exceeded_exit_four(self, cli):
        code, out = cli(["free", "--variety", "dm", "--n", "9"])
        assert code == 4


class TestOtherCommands:
    def test_dualize_fm1_to_dual(self, data_dir, cli):
        code, out = cli(["dualize", str(data_dir / "fm1.json"), "--direction", "to-dual"])
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "invposet" and len(doc["elements"]) == 4

    def test_dualize_diamond_to_algebra(self, data_dir, cli):
        code, out = cli(
            ["dualize", str(data_dir / "diamond.json"), "--direction", "to-algebra"]
        )
        doc = json.loads(out)
        assert doc["kind"] == "algebra" and len(doc["elements"]) == 6

    def test_projective_report_carries_witnesses(self, data_dir, cli):
        code, out = cli(
            ["projective", str(data_dir / "antichain2_swap.json"), "--variety", "dm"]
        )
        report = json.loads(out)
        assert code == 0 and report["projective"] is False
        assert report["witnesses"]["m1"] == ["a", "b"]

    def test_core_command(self, data_dir, cli):
        code, out = cli(["core", str(data_dir / "k2_pattern.json"), "--variety", "kleene"])
        assert code == 0
        assert len(json.loads(out)["elements"]) == 17

    def test_embed_prune_identity(self, data_dir, cli):
        code, out = cli(["embed", str(data_dir / "diamond.json"), "--prune"])
        doc = json.loads(out)
        assert doc == {"n": 1, "map": {"2": "2", "0": "0", "1": "1", "3": "3"}}

    def test_retract_non_projective_exit_three(self, data_dir, cli):
        code, out = cli(
            ["retract", str(data_dir / "antichain2_swap.json"), "--variety", "dm"]
        )
        assert code == 3

    def test_retract_diamond(self, data_dir, cli):
        code, out = cli(
            ["retract", str(data_dir / "diamond.json"), "--variety", "dm", "--prune"]
        )
        doc = json.loads(out)
        assert code == 0
        assert doc["n"] == 1
        assert doc["retraction"] == {x: x for x in "2013"}

    def test_oracle_retraction(self, data_dir, cli):
        code, out = cli(
            ["oracle", str(data_dir / "diamond.json"), "--check", "retraction"]
        )
        assert code == 0
        assert json.loads(out)["found"] is True

    def test_oracle_unifier_count(self, data_dir, cli):
        code, out = cli(
            ["oracle", str(data_dir / "antichain2.json"), "--check", "unifiers",
             "--bound", "1"]
        )
        assert json.loads(out)["count"] == 2

    def test_witness_with_anchors(self, cli):
        code, out = cli(["witness", "--family", "bdl", "--n", "5", "--anchors"])
        doc = json.loads(out)
        assert len(doc["elements"]) == 13
        assert doc["anchors"]["bot"] == "x"

    def test_malformed_document_exit_one(self, tmp_path, cli):
        bad = tmp_path / "bad.json"
        bad.write_text('{"kind": "poset", "elements": ["a", "a"]}')
        code, out = cli(["validate", str(bad)])
        assert code == 1
        assert "duplicate" in json.loads(out)["error"]

    def test_missing_file_exit_one(self, cli):
        code, _ = cli(["validate", "no-such-file.json"])
        assert code == 1


class TestPipelines:
    @pytest.mark.parametrize(
        "family,n,variety",
        [("bdl", 4, "bdl"), ("k1", 2, "kleene"), ("k2", 2, "kleene"),
         ("m1", 2, "dm"), ("m2", 3, "dm")],
    )
    def test_witness_into_classify_is_unitary(self, family, n, variety, cli):
        _, doc = cli(["witness", "--family", family, "--n", str(n)])
        code, out = cli(["classify", "-", "--variety", variety], stdin_text=doc)
        assert code == 0
        assert json.loads(out)["type"] == "unitary"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "morgan_unify.cli", "free", "--variety", "dm", "--n", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "invposet"
