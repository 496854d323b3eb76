"""Input grammar, report emission, and the command-line contract."""

from __future__ import annotations

import json
import pathlib
import subprocess
import sys
from fractions import Fraction

import pytest

from frustgraph import (
    DimensionMismatch,
    ExponentOutOfRange,
    ParseError,
    PauliOperator,
)
from frustgraph.cli import (
    CommandFlags,
    Report,
    document_from_stabilizer,
    emit_report,
    parse_document,
    rational_dict,
    real_str,
    run_command,
    serialize_document,
)
from frustgraph.stabilizer import builtin_code

DOCS_DIR = pathlib.Path(__file__).resolve().parent.parent / "docs" / "inputs"

GHZ3_TEXT = "d=2 n=3\ng1: X X X\ng2: Z Z I\ng3: I Z Z\n"
XZ3_TEXT = "d=3 n=1\ng1: X\ng2: Z\n"


def test_parse_ghz_document():
    doc = parse_document(GHZ3_TEXT)
    assert (doc.d, doc.n_sites, len(doc.generators)) == (2, 3, 3)
    assert doc.generators[0] == PauliOperator(2, (1, 1, 1), (0, 0, 0))
    assert doc.generators[1] == PauliOperator(2, (0, 0, 0), (1, 1, 0))
    assert doc.mode is None


def test_parse_group_document():
    doc = parse_document(XZ3_TEXT)
    assert doc.generators == (PauliOperator.x(3), PauliOperator.z(3))


def test_parse_exponent_out_of_range():
    with pytest.raises(ExponentOutOfRange):
        parse_document("d=2 n=1\ng1: X^5\n")


def test_parse_bad_token_has_location():
    with pytest.raises(ParseError) as err:
        parse_document("d=3 n=2\ng1: X Q\n")
    assert err.value.line == 2
    assert err.value.column == 7


def test_parse_header_required():
    with pytest.raises(ParseError):
        parse_document("g1: X\n")
    with pytest.raises(ParseError):
        parse_document("# only a comment\n")


def test_parse_token_count_mismatch():
    with pytest.raises(DimensionMismatch):
        parse_document("d=2 n=3\ng1: X X\n")


def test_parse_comments_blanks_crlf():
    text = "# heading\r\nd=2 n=2 mode=stabilizer\r\n\r\ng1: X X  # trailing\r\ng2: Z Z\r\n"
    doc = parse_document(text)
    assert doc.mode == "stabilizer"
    assert doc.generators[0] == PauliOperator(2, (1, 1), (0, 0))


def test_parse_phase_tokens():
    doc = parse_document("d=3 n=1\ng1: w^2 X\n")
    assert doc.generators[0].phase_exp == 2
    doc = parse_document("d=2 n=1\ng1: w^1/2 X^1Z^1\n")
    assert doc.generators[0].phase_exp == 1
    with pytest.raises(ParseError):
        parse_document("d=3 n=1\ng1: w^1/2 X\n")


def test_parse_compound_token():
    doc = parse_document("d=5 n=2\ng1: X^2Z^3 I\n")
    assert doc.generators[0] == PauliOperator(5, (2, 0), (3, 0))


def test_serialize_round_trip():
    for text in (GHZ3_TEXT, XZ3_TEXT, "d=2 n=1\ng1: w^1/2 X^1Z^1\n"):
        doc = parse_document(text)
        again = parse_document(serialize_document(doc))
        assert again.generators == doc.generators
        assert (again.d, again.n_sites, again.mode) == (doc.d, doc.n_sites, doc.mode)


def test_docs_examples_parse_and_round_trip():
    paths = sorted(DOCS_DIR.glob("*.txt"))
    assert paths, "docs/inputs should ship grammar examples"
    for path in paths:
        doc = parse_document(path.read_text())
        again = parse_document(serialize_document(doc))
        assert again.generators == doc.generators


def test_analyze_pauli_pair():
    report = run_command("analyze", parse_document("d=2 n=1\ng1: X\ng2: Z\n"), CommandFlags())
    assert report.result["sos_bound"] == 2
    assert report.result["clique_number"] == 2
    assert report.result["rank"] == 2
    assert report.result["sum_bound"] is None


def test_analyze_includes_energy_bound_for_odd_d():
    report = run_command("analyze", parse_document(XZ3_TEXT), CommandFlags())
    assert report.result["sum_bound"] == "8.19615242271"


def test_canonical_command():
    report = run_command("canonical", parse_document(XZ3_TEXT), CommandFlags())
    assert report.result["pair_blocks"] == 1
    assert report.result["residual_dim"] == 0


def test_entanglement_builtin_five_qudit():
    doc = document_from_stabilizer(builtin_code("five_qudit", 2, 5))
    report = run_command("entanglement", doc, CommandFlags())
    assert report.result["is_gme"] is True
    assert report.result["ggm"] == {"num": 1, "den": 2, "real": "0.500000000000"}
    first = report.result["bipartitions"][0]
    assert first["Q"] == [1]
    assert first["gm"]["num"] == 1 and first["gm"]["den"] == 2


def test_verify_swap_report():
    report = run_command("verify", None, CommandFlags(checks=("swap",), d=3))
    entry = report.result["checks"][0]
    assert entry["name"] == "swap"
    assert entry["pass"] is True
    assert float(entry["deviation"]) < 1e-12


def test_verify_document_checks():
    doc = parse_document(XZ3_TEXT)
    report = run_command("verify", doc, CommandFlags(restarts=8))
    assert report.result["all_pass"] is True
    names = [entry["name"] for entry in report.result["checks"]]
    assert names == ["sos", "sum"]


def test_verify_document_checks_need_a_document():
    from frustgraph import InvalidMode

    with pytest.raises(InvalidMode):
        run_command("verify", None, CommandFlags(checks=("sos",)))


def test_emit_report_rational_rendering():
    report = Report(
        command="entanglement",
        input_digest="x",
        result={"gm": rational_dict(Fraction(1, 2)), "bipartitions": []},
    )
    payload = json.loads(emit_report(report, "json"))
    assert payload["result"]["gm"] == {"num": 1, "den": 2, "real": "0.500000000000"}
    assert payload["result"]["bipartitions"] == []
    assert list(payload) == ["schema", "command", "input_digest", "result", "version"]


def test_emit_report_integer_fields_stay_integers():
    report = Report(command="analyze", input_digest="x", result={"clique_number": 4})
    assert json.loads(emit_report(report, "json"))["result"]["clique_number"] == 4


def test_real_str_significant_digits():
    assert real_str(0.5) == "0.500000000000"
    assert real_str(0.0) == "0.000000000000"
    assert real_str(8.196152422706632) == "8.19615242271"


def _run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "frustgraph", *argv],
        capture_output=True,
        text=True,
        input=stdin,
    )


def test_cli_exit_codes(tmp_path):
    good = tmp_path / "xz.txt"
    good.write_text("d=2 n=1 mode=group\ng1: X\ng2: Z\n")
    proc = _run_cli("analyze", str(good), "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["result"]["sos_bound"] == 2

    bad = tmp_path / "bad.txt"
    bad.write_text("d=2 n=1\ng1: X^7\n")
    proc = _run_cli("analyze", str(bad))
    assert proc.returncode == 2
    assert "exponent-out-of-range" in proc.stderr

    noncommuting = tmp_path / "nc.txt"
    noncommuting.write_text("d=2 n=1\ng1: X\ng2: Z\n")
    proc = _run_cli("entanglement", str(noncommuting))
    assert proc.returncode == 2
    assert "non-commuting" in proc.stderr

    proc = _run_cli("analyze", str(tmp_path / "missing.txt"))
    assert proc.returncode == 2


def test_cli_reports_are_deterministic(tmp_path):
    doc = tmp_path / "ghz.txt"
    doc.write_text("d=2 n=3 mode=stabilizer\ng1: X X X\ng2: Z Z I\ng3: I Z Z\n")
    first = _run_cli("entanglement", str(doc), "--format", "json", "--seed", "5")
    second = _run_cli("entanglement", str(doc), "--format", "json", "--seed", "5")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout

    swap1 = _run_cli("verify", "--swap", "--d", "3", "--format", "json")
    swap2 = _run_cli("verify", "--swap", "--d", "3", "--format", "json")
    assert swap1.stdout == swap2.stdout
    assert swap1.returncode == 0


def test_cli_builtin_entanglement():
    proc = _run_cli(
        "entanglement", "--builtin", "five_qudit", "--d", "2", "--format", "json"
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["result"]["ggm"]["real"] == "0.500000000000"
