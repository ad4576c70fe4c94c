import json
from pathlib import Path
import sys

sys.path.append(str(Path(__file__).resolve().parents[1]))

from torusdash.cli import run  # noqa: E402
from torusdash.config import RECORD_FIELDS  # noqa: E402


GOLDEN_DIR = Path(__file__).resolve().parent / "golden"
TABLE_NAMES = ["f_sizes", "rep_dims", "max_rank", "elementary", "codim_one", "two_factor", "four_dim"]


def test_classify_prints_one_row_table(capsys):
    assert run(["classify", "SU(2)xSU(2)"]) == 0
    out = capsys.readouterr().out
    assert out == "spec\ttuple\tname\nSU(2)xSU(2)\t(const, pt, ({},{}), {}, {})\tCP^1 x CP^1\n"


def test_classify_json_records(capsys):
    assert run(["classify", "SO(3)xT^1", "--json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    records = [json.loads(line) for line in lines]
    assert len(records) == 4
    assert all(list(r) == RECORD_FIELDS for r in records)
    assert [r["name"] for r in records] == [
        "S^2 x S^2", "S^2_1 x_{Z2} S^2_1", "S^2_1 x_{Z2} S^2_2", "S^4",
    ]
    assert records[-1]["B"] == "S^1"
    assert {r["source"] for r in records} == {"tabulated"}


def test_classify_psi_bound_flag(capsys):
    assert run(["classify", "SU(2)xT^1", "--psi-bound", "0"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 2
    assert "S^2-bundle over CP^1" in out


def test_classify_family(capsys):
    assert run(["classify", "SO(4)xSO(4)", "--family"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "spec\tk\tname\tchi\n"
        "SO(4)xSO(4)\tk>=1\t#_k(S^4 x S^4)\t2*k + 2\n"
        "SO(4)xSO(4)\t0\tS^8\t2\n"
    )


def test_family_flag_falls_back_to_enumeration(capsys):
    assert run(["classify", "SO(4)", "--family"]) == 0
    assert capsys.readouterr().out.endswith("\tS^4\n")


def test_tables_matches_golden(capsys):
    assert run(["tables", "--paper"]) == 0
    out = capsys.readouterr().out
    expected = "\n".join(f"# {name}\n" + (GOLDEN_DIR / f"{name}.tsv").read_text() for name in TABLE_NAMES)
    assert out == expected


def test_tables_json(capsys):
    assert run(["tables", "--paper", "--json"]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert {r["table"] for r in records} == set(TABLE_NAMES)
    assert sum(1 for r in records if r["table"] == "four_dim") == 13


def test_tables_reference_alias(capsys):
    assert run(["tables", "--reference"]) == 0
    aliased = capsys.readouterr().out
    assert run(["tables", "--paper"]) == 0
    assert capsys.readouterr().out == aliased


def test_tables_needs_the_flag(capsys):
    assert run(["tables"]) == 2


def test_usage_errors_exit_2(capsys):
    assert run(["classify", "SU(3)x"]) == 2
    assert "position 5" in capsys.readouterr().err
    assert run(["classify", "G2"]) == 2
    assert run(["classify", "Sp(3)"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["tables"]) == 2


def test_classification_errors_exit_1(capsys):
    assert run(["classify", "SU(2)xT^3"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert "l0=3" in err
    assert run(["classify", "SO(4)xT^1"]) == 1
    assert "--family" in capsys.readouterr().err
