from pathlib import Path
import json
import sys

import pandas as pd

sys.path.append(str(Path(__file__).resolve().parents[1]))

from torusdash import frame_to_json_lines, frame_to_tsv  # noqa: E402
from torusdash.utils import read_tsv  # noqa: E402


def test_frame_to_tsv_selects_columns():
    df = pd.DataFrame({"spec": ["SU(3)"], "tuple": ["(const, pt, {}, {}, {})"], "chi": [3]})
    assert frame_to_tsv(df, ["spec", "tuple"]) == "spec\ttuple\nSU(3)\t(const, pt, {}, {}, {})\n"


def test_frame_to_json_lines():
    df = pd.DataFrame({"spec": ["SU(3)", "SO(5)"], "chi": [3, 2]})
    lines = frame_to_json_lines(df).splitlines()
    assert [json.loads(line) for line in lines] == [
        {"spec": "SU(3)", "chi": 3},
        {"spec": "SO(5)", "chi": 2},
    ]
    assert frame_to_json_lines(df).endswith("\n")
    assert frame_to_json_lines(df.iloc[0:0]) == ""


def test_read_tsv_keeps_braces_and_strings(tmp_path):
    path = tmp_path / "table.tsv"
    path.write_text("spec\tA\tchi\nSU(2)xT^1\t{}\t3\n")
    table = read_tsv(path)
    assert table.loc[0, "A"] == "{}"
    assert table.loc[0, "chi"] == "3"
