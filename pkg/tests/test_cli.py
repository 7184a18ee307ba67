from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from crossgeo.catalog import bundled_catalog_path
from crossgeo.cli import main

SPEC_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--pd", SPEC_PD)
    assert code == 0
    rep = json.loads(out)
    assert rep["writhe"] == -3 and rep["sigma"] == 2 and rep["alternating"]


def test_info_by_name(capsys):
    code, out, _ = run(capsys, "info", "--name", "T(4,3)")
    assert code == 0 and json.loads(out)["sigma"] == -6


@pytest.mark.parametrize(
    "argv,code",
    [
        (("info", "--pd", "X(1,2,3)"), 2),
        (("info", "--name", "no-such-knot"), 2),
        (("pinch", "3", "3"), 2),
        (("pinch", "5", "3"), 3),
        (("geography", "--name", "T(8,7)"), 4),
        (("batch", "/nonexistent/file.jsonl"), 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code and out == "" and err.startswith("error:")


def test_geography_and_svg(capsys, tmp_path):
    svg = tmp_path / "g.svg"
    code, out, _ = run(capsys, "geography", "--name", "trefoil", "--svg", str(svg))
    assert code == 0
    rep = json.loads(out)
    assert rep["apexes"] == [[-6, 1], [2, 3]] and rep["bound_kind"] == "exact"
    assert svg.read_text().startswith("<!-- generator: crossgeo")


def test_gamma_with_upsilon(capsys):
    code, out, _ = run(capsys, "gamma", "--name", "T(4,3)")
    rep = json.loads(out)
    assert code == 0
    assert rep["gamma4_hat_lower"] == {"plus": 0, "minus": 2}
    assert rep["gamma4_lower"] == 1


def test_turaev(capsys):
    _, out, _ = run(capsys, "turaev", "--name", "P(-3,3,5)")
    assert json.loads(out)["turaev_genus_diagram"] == 1


def test_states(capsys):
    _, out, _ = run(capsys, "states", "--basic", "--name", "trefoil")
    assert len(json.loads(out)) == 2


def test_edgepaths_table(capsys):
    code, out, _ = run(capsys, "edgepaths", "-3,3,5", "--table")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 18
    assert rows[1] == ["I", "-4/3", "4", "14/3", "10/3"]


def test_byte_identical(capsys, tmp_path):
    lines = bundled_catalog_path().read_text().splitlines()
    small = tmp_path / "small.jsonl"
    small.write_text("\n".join(l for l in lines if '"T(4,3)"' in l or '"trefoil"' in l) + "\n")
    outs = {run(capsys, "batch", str(small))[1] for _ in range(2)}
    assert len(outs) == 1
    assert [r["name"] for r in json.loads(outs.pop())] == ["trefoil", "T(4,3)"]


def test_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "crossgeo.cli", "pinch", "4", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(res.stdout)["f4"] == {"e": -10, "b1": 1}
