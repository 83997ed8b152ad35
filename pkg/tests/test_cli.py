import json

import pytest

from cuboidcurves import __version__, cli
from cuboidcurves.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, main
from cuboidcurves.errors import VerificationError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_report(capsys):
    code, out, _ = _run(capsys, "report", "--b", "1", "--c", "3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["profile"]["E10"] == "-1/2"
    assert payload["branches"][0]["Q"] == "33/2"
    assert payload["branches"][0]["conic_rational"] is False


def test_report_singular_point(capsys):
    code, out, _ = _run(capsys, "report", "--b", "1", "--c", "2")
    assert code == EXIT_OK
    assert json.loads(out)["singular_factors"] == ["E-denominator", "bc-1-b"]


def test_report_rejects_bad_rational(capsys):
    code, _, err = _run(capsys, "report", "--b", "1/0", "--c", "3")
    assert code == EXIT_USAGE
    assert "zero denominator" in err


@pytest.mark.parametrize(
    "witness, classification",
    [
        ("1,0,0,0,1,1,1", "factor-only"),
        ("3/5,4/5,0,4/5,3/5,1,1", "factor-only"),
        ("1,1,1,1,1,1,1", "non-solution"),
    ],
)
def test_verify(capsys, witness, classification):
    code, out, _ = _run(capsys, "verify", "--witness", witness)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["classification"] == classification
    assert len(payload["factor_equations"]) == 8


def test_verify_rejects_malformed_witness(capsys):
    code, _, err = _run(capsys, "verify", "--witness", "1,2")
    assert code == EXIT_USAGE
    assert "comma-separated" in err


@pytest.mark.parametrize(
    "mn, solvable, solution",
    [(1, True, [1, 2, 1]), (3, True, [3, 2, 1]), (66, False, None), (-3, False, None)],
)
def test_legendre(capsys, mn, solvable, solution):
    code, out, _ = _run(capsys, "legendre", "--mn", str(mn))
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["solvable"] is solvable
    assert payload["solution"] == solution


def test_legendre_rejects_non_square_free(capsys):
    code, _, _ = _run(capsys, "legendre", "--mn", "4")
    assert code == EXIT_USAGE


def test_conic(capsys):
    code, out, _ = _run(capsys, "conic", "--q", "4", "--t", "1", "--t", "0")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["rational"] is True
    assert payload["point"] == ["1", "1"]
    assert payload["parametrized"][0] == {"t": "1", "w": "-13/3", "alpha": "-7/3"}
    assert payload["parametrized"][1]["w"] == "1"


def test_conic_without_points(capsys):
    code, out, _ = _run(capsys, "conic", "--q", "33/2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["rational"] is False
    assert payload["legendre"]["MN"] == 66
    code, _, _ = _run(capsys, "conic", "--q", "33/2", "--t", "1")
    assert code == EXIT_USAGE


def test_conic_degenerate_parameter(capsys):
    code, _, err = _run(capsys, "conic", "--q", "4", "--t", "1/2")
    assert code == EXIT_USAGE
    assert "1 - Q*t**2" in err


def test_scan_to_stdout(capsys):
    code, out, _ = _run(capsys, "scan", "--b-range", "0:2", "--c-range", "2:4")
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 11
    assert lines[-1]["kind"] == "summary"
    assert lines[-1]["rows"] == 9


def test_scan_csv_to_file(capsys, tmp_path):
    target = tmp_path / "rows.csv"
    code, out, _ = _run(
        capsys, "scan", "--b-range", "1", "--c-range", "2,3", "--format", "csv", "-o", str(target)
    )
    assert code == EXIT_OK
    assert out == ""
    text = target.read_text()
    assert text.startswith(f"# cuboidcurves {__version__} variant=printed\n")


def test_scan_usage_errors(capsys):
    assert _run(capsys, "scan", "--b-range", "0:1:0", "--c-range", "0:1")[0] == EXIT_USAGE
    assert _run(capsys, "scan", "--b-range", "0:1", "--c-range", "0:1", "--workers", "0")[0] == EXIT_USAGE
    assert _run(capsys, "scan", "--b-range", "0:1")[0] == EXIT_USAGE
    assert _run(capsys, "scan", "--b-range", "0:1", "--c-range", "0:1", "--format", "xml")[0] == EXIT_USAGE


def test_sample(capsys):
    code, out, _ = _run(capsys, "sample", "--count", "3", "--height", "5", "--seed", "1")
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.splitlines()]
    assert [line["kind"] for line in lines] == ["header", "row", "row", "row", "summary"]
    assert lines[0]["config"]["seed"] == 1
    assert all(line["status"] == "ok" for line in lines[1:-1])


def test_sample_is_seeded(capsys):
    first = _run(capsys, "sample", "--count", "2", "--height", "20", "--seed", "5")[1]
    second = _run(capsys, "sample", "--count", "2", "--height", "20", "--seed", "5")[1]
    assert first == second


def test_missing_command_and_version(capsys):
    assert _run(capsys)[0] == EXIT_USAGE
    code, out, _ = _run(capsys, "--version")
    assert code == EXIT_OK
    assert __version__ in out


def test_verification_failure_exit_code(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise VerificationError("identity fails")

    monkeypatch.setattr(cli, "report_point", broken)
    code, _, _ = _run(capsys, "report", "--b", "1", "--c", "3")
    assert code == EXIT_VERIFICATION


def test_scan_output_is_independent_of_worker_count(tmp_path, capsys):
    outputs = []
    for workers in ("1", "8"):
        target = tmp_path / f"scan-{workers}.jsonl"
        code, _, _ = _run(
            capsys,
            "scan",
            "--b-range",
            "-9:10",
            "--c-range",
            "-9:10",
            "--workers",
            workers,
            "-o",
            str(target),
        )
        assert code == EXIT_OK
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    rows = outputs[0].decode().splitlines()
    assert len(rows) == 20 * 20 + 2


def test_attach_negative_values():
    assert cli.attach_negative_values(["report", "--b", "-1/2", "--c", "3"]) == [
        "report",
        "--b=-1/2",
        "--c",
        "3",
    ]
    assert cli.attach_negative_values(["scan", "--b-range", "-9:10", "-v"]) == [
        "scan",
        "--b-range=-9:10",
        "-v",
    ]
    assert cli.attach_negative_values(["report", "--b", "-v"]) == ["report", "--b", "-v"]
    assert cli.attach_negative_values(["report", "--b"]) == ["report", "--b"]


def test_report_negative_rational(capsys):
    code, out, _ = _run(capsys, "report", "--b", "-1/2", "--c", "3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["b"] == "-1/2"
    assert payload["c"] == "3"


def test_conic_negative_rational(capsys):
    code, out, _ = _run(capsys, "conic", "--q", "-3/2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["Q"] == "-3/2"
    assert payload["legendre"]["MN"] == -6
    assert payload["rational"] is False
    assert payload["point"] is None


def test_conic_negative_parameter(capsys):
    code, out, _ = _run(capsys, "conic", "--q", "1", "--t", "-1/3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["rational"] is True
    assert payload["parametrized"][0]["t"] == "-1/3"


@pytest.mark.parametrize("b_values", ["-2:2", "-2,-1,0,1,2"])
def test_scan_negative_range(capsys, b_values):
    code, out, _ = _run(capsys, "scan", "--b-range", b_values, "--c-range", "3:3")
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert [row["b"] for row in rows if row["kind"] == "row"] == ["-2", "-1", "0", "1", "2"]
