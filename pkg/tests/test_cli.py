"""Command-line interface: outputs, exit codes, and determinism."""
import json
from pathlib import Path

import pytest

from bettipowers.cli import main
from bettipowers.monomial_core import parse_ideal, power
from bettipowers.resolution_engine import CoefficientField, betti_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _fixture(name: str) -> str:
    return str(FIXTURES / f"{name}.ideal")


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_betti_matches_library_csv(capsys):
    code, out, _ = _run(capsys, ["betti", _fixture("maximal2")])
    assert code == 0
    ideal = parse_ideal(Path(_fixture("maximal2")).read_text())
    assert out == betti_table(ideal).to_csv()


def test_betti_power_and_field_flags(capsys):
    code, out, _ = _run(capsys, ["betti", _fixture("msquare2"), "--power", "2", "--field", "2"])
    assert code == 0
    ideal = parse_ideal(Path(_fixture("msquare2")).read_text())
    expected = betti_table(power(ideal, 2), CoefficientField.parse("2")).to_csv()
    assert out == expected


def test_profile_json_shape_and_determinism(capsys):
    argv = ["profile", _fixture("purepowers2"), "--kmax", "6"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"ideal", "field", "kmax", "guard", "profile", "verdicts"}
    assert payload["kmax"] == 6
    assert payload["guard"] == 3
    assert payload["profile"]["status"] == "ok"
    assert payload["profile"]["multiplicities"] == [1, 1]
    statements = {s["id"]: s["status"] for s in payload["verdicts"]["statements"]}
    assert statements["euler-alternating-sum"] == "holds"
    code2, out2, _ = _run(capsys, argv)
    assert code2 == 0 and out2 == out


def test_profile_reports_not_stabilized(capsys):
    # Tight window with a large guard: still exit 0, verdicts withheld.
    code, out, _ = _run(
        capsys, ["profile", _fixture("edges5"), "--kmax", "6", "--guard", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["profile"]["status"] == "not-stabilized"
    assert payload["verdicts"] is None


def test_roots_regular_sequence_stdout(capsys):
    code, out, _ = _run(capsys, ["roots", "--regular-sequence", "3", "--kmax", "8"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,root_index,re,im,trajectory_id,is_escape"
    assert len(lines) == 1 + 3 * 8


def test_roots_writes_csv_and_svg(tmp_path, capsys):
    csv_path = tmp_path / "locus.csv"
    svg_path = tmp_path / "locus.svg"
    argv = [
        "roots",
        _fixture("maximal2"),
        "--kmax",
        "6",
        "--fit-kmax",
        "8",
        "--csv",
        str(csv_path),
        "--svg",
        str(svg_path),
    ]
    code, out, _ = _run(capsys, argv)
    assert code == 0 and out == ""
    first_csv = csv_path.read_text()
    first_svg = svg_path.read_text()
    assert first_csv.startswith("k,root_index,re,im,trajectory_id,is_escape")
    assert first_svg.startswith("<svg") and "polyline" in first_svg
    code, _, _ = _run(capsys, argv)
    assert code == 0
    assert csv_path.read_text() == first_csv
    assert svg_path.read_text() == first_svg


def test_roots_requires_exactly_one_source(capsys):
    code, _, err = _run(capsys, ["roots"])
    assert code == 1 and "exactly one" in err
    code, _, err = _run(
        capsys, ["roots", _fixture("maximal2"), "--regular-sequence", "3"]
    )
    assert code == 1 and "exactly one" in err


def test_roots_unstabilized_profile_is_an_error(capsys):
    code, _, err = _run(
        capsys,
        ["roots", _fixture("edges5"), "--fit-kmax", "6", "--guard", "4", "--kmax", "4"],
    )
    assert code == 2
    assert "did not stabilize" in err


def test_scan_jsonl_determinism(tmp_path, capsys):
    out_path = tmp_path / "scan.jsonl"
    argv = [
        "scan",
        "--vars", "2",
        "--gens", "2",
        "--max-exp", "2",
        "--count", "5",
        "--seed", "7",
        "--out", str(out_path),
    ]
    code, _, err = _run(capsys, argv)
    assert code == 0
    assert "wrote 5 records" in err
    first = out_path.read_bytes()
    records = [json.loads(line) for line in first.decode().splitlines()]
    assert [r["index"] for r in records if r["type"] == "record"] == list(range(5))
    assert all("timing_seconds" not in r for r in records)
    code, _, _ = _run(capsys, argv)
    assert code == 0
    assert out_path.read_bytes() == first


def test_scan_timing_flag_adds_field(tmp_path, capsys):
    out_path = tmp_path / "scan.jsonl"
    code, _, _ = _run(
        capsys,
        ["scan", "--vars", "2", "--gens", "2", "--max-exp", "2", "--count", "2",
         "--seed", "7", "--timing", "--out", str(out_path)],
    )
    assert code == 0
    records = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert all("timing_seconds" in r for r in records if r["type"] == "record")


def test_scan_count_zero_and_stdout_mode(capsys):
    code, out, _ = _run(
        capsys, ["scan", "--vars", "2", "--gens", "2", "--max-exp", "2",
                 "--count", "0", "--seed", "1"]
    )
    assert code == 0 and out == ""
    code, out, _ = _run(
        capsys, ["scan", "--vars", "2", "--gens", "1", "--max-exp", "1",
                 "--count", "1", "--seed", "1"]
    )
    assert code == 0
    record = json.loads(out.strip())
    assert record["type"] == "record" and record["seed"] == 1


def test_oracle_check_agreement(capsys):
    code, out, _ = _run(
        capsys, ["oracle-check", _fixture("msquare2"), "--kmax", "2", "--fields", "q,2"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["engines_agree"] is True
    assert payload["findings"] == []
    rows = payload["results"]["QQ"] if "QQ" in payload["results"] else None
    assert rows is None or all(r["agree"] for r in rows)
    for per_field in payload["results"].values():
        assert all(r["agree"] for r in per_field)


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["betti"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_computation_errors_exit_two(capsys, tmp_path):
    code, _, err = _run(capsys, ["betti", str(tmp_path / "missing.ideal")])
    assert code == 2 and "error:" in err
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: x\ngens: y\n")
    code, _, err = _run(capsys, ["betti", str(bad)])
    assert code == 2
    code, _, err = _run(capsys, ["betti", _fixture("maximal2"), "--field", "zz"])
    assert code == 2
