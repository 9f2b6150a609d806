"""Command-line interface: parsing, serialization, exit codes, batch mode."""

import io
import json
from fractions import Fraction

import pytest

from hypsurf import cli
from hypsurf.lattice import DivisorClass


def run(argv):
    """Run the CLI capturing stdout; returns (parsed json, exit status)."""
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = cli.run_single(argv)
    text = buf.getvalue().strip()
    return (json.loads(text) if text else None), status


def test_format_parse_rational_roundtrip():
    assert cli.format_rational(Fraction(3)) == "3"
    assert cli.format_rational(Fraction(-7, 2)) == "-7/2"
    assert cli.parse_rational("5/3") == Fraction(5, 3)
    with pytest.raises(cli.InputError):
        cli.parse_rational("x")


def test_parse_bundle_shapes():
    assert cli.parse_bundle("4,6", None) == DivisorClass(4, 6)
    assert cli.parse_bundle("4,6,1", 3) == DivisorClass(4, 6, (1, 1, 1))
    assert cli.parse_bundle("4,6,1,2,3", None) == DivisorClass(4, 6, (1, 2, 3))
    assert cli.parse_bundle("4,6,1,2,3", 3) == DivisorClass(4, 6, (1, 2, 3))
    with pytest.raises(cli.InputError):
        cli.parse_bundle("4", None)
    with pytest.raises(cli.InputError):
        cli.parse_bundle("4,6,1", None)  # uniform shorthand needs --r
    with pytest.raises(cli.InputError):
        cli.parse_bundle("4,6,1,2", 3)  # conflicting r
    with pytest.raises(cli.InputError):
        cli.parse_bundle("4,x", None)


def test_catalog_command():
    doc, status = run(["catalog", "show"])
    assert status == 0 and len(doc) == 7
    doc, status = run(["catalog", "show", "--type", "7"])
    assert status == 0
    assert doc == {"type": 7, "group": "Z6", "gamma": 6,
                   "multiplicities": [2, 3, 6], "mu": 6, "gamma_over_mu": 1}


def test_intersect_command():
    doc, status = run(["intersect", "--type", "1", "--lhs", "1,1", "--rhs", "1,1"])
    assert status == 0 and doc == {"value": 2}
    doc, status = run(["intersect", "--type", "1", "--r", "8",
                       "--lhs", "4,6,1", "--rhs", "4,6,1"])
    assert doc == {"value": 40}


def test_ample_command():
    doc, status = run(["ample", "--type", "1", "--r", "10", "--bundle", "3,3,1"])
    assert status == 0 and doc["status"] == "proven"
    doc, status = run(["ample", "--type", "1", "--bundle", "0,5"])
    assert status == 0 and doc["status"] == "refuted"
    assert doc["witness"] is not None


def test_seshadri_commands():
    doc, status = run(["seshadri", "global", "--type", "1", "--r", "8", "--bundle", "4,6,1"])
    assert status == 0 and doc["status"] == "exact" and doc["value"] == "3"
    assert doc["certificate"]["verified"] is True

    doc, status = run(["seshadri", "point", "--type", "1", "--r", "8",
                       "--bundle", "4,6,1", "--locus", "smooth-a"])
    assert status == 0 and doc["value"] == "4"

    doc, status = run(["seshadri", "multi", "--type", "1", "--bundle", "5,5", "--r", "8"])
    assert status == 0 and doc["value"] == "5/2"

    doc, status = run(["seshadri", "multi", "--type", "5", "--bundle", "6,10",
                       "--config", "6,2,3,3,2", "--singular-a"])
    assert status == 0 and doc["value"] == "2"

    doc, status = run(["seshadri", "multi", "--type", "1", "--bundle", "4,6", "--r", "8"])
    assert doc["status"] == "bounds"
    assert doc["upper"] == {"kind": "sqrt", "q": "6"}


def test_oracle_command_exit_codes():
    doc, status = run(["oracle", "verify", "--prop", "multipoint", "--type", "3",
                       "--grid-max", "3", "--box", "6"])
    assert status == 0 and doc["violations"] == []


def test_input_error_exit_code(capsys):
    status = cli.run_single(["seshadri", "global", "--type", "9", "--r", "8",
                             "--bundle", "4,6,1"])
    assert status == cli.EXIT_INPUT_ERROR
    err = json.loads(capsys.readouterr().err)
    assert "error" in err


def test_unmet_hypotheses_still_exit_zero():
    doc, status = run(["seshadri", "multi", "--type", "1", "--bundle", "3,3", "--r", "7"])
    assert status == 0 and doc["status"] == "hypotheses_not_met"
    doc, status = run(["ample", "--type", "1", "--r", "8", "--bundle", "2,9,1"])
    assert status == 0 and doc["status"] == "unknown"


def test_text_format(tmp_path):
    out = tmp_path / "out.txt"
    status = cli.run_single(["--format", "text", "--output", str(out),
                             "catalog", "show", "--type", "1"])
    assert status == 0
    text = out.read_text()
    assert "type: 1" in text and "gamma: 2" in text


def test_batch_mode(tmp_path):
    lines = [
        json.dumps({"id": 1, "command": "intersect",
                    "payload": {"type": 1, "lhs": "1,1", "rhs": "1,1"}}),
        "this is not json",
        json.dumps({"id": 3, "command": "seshadri-global",
                    "payload": {"type": 1, "bundle": "4,6,1", "r": 8}}),
        json.dumps({"id": 4, "command": "bogus", "payload": {}}),
    ]
    path = tmp_path / "batch.jsonl"
    path.write_text("\n".join(lines) + "\n")
    out = io.StringIO()
    with open(path) as fh:
        status = cli.run_batch(fh, out)
    results = [json.loads(l) for l in out.getvalue().splitlines()]
    assert status == cli.EXIT_INPUT_ERROR  # at least one line failed
    assert len(results) == 4
    assert results[0] == {"id": 1, "result": {"value": 2}}
    assert "error" in results[1]
    assert results[2]["result"]["value"] == "3"
    assert results[3]["id"] == 4 and "error" in results[3]


def test_batch_mode_all_good(tmp_path):
    path = tmp_path / "ok.jsonl"
    path.write_text(json.dumps({"id": "a", "command": "catalog", "payload": {"type": 2}}) + "\n")
    out = io.StringIO()
    with open(path) as fh:
        status = cli.run_batch(fh, out)
    assert status == 0
    assert json.loads(out.getvalue())["result"]["group"] == "Z2 x Z2"


def test_batch_class_object_payload():
    out = io.StringIO()
    line = json.dumps({"id": 9, "command": "ample",
                       "payload": {"type": 1, "bundle": {"a": 4, "b": 6, "d": [1] * 8}}})
    status = cli.run_batch([line], out)
    assert status == 0
    assert json.loads(out.getvalue())["result"]["status"] == "proven"
