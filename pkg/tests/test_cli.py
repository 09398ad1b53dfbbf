import io
import json
import sys
from pathlib import Path

import pytest

# Add project root to sys.path
project_root = Path(__file__).resolve().parent.parent
sys.path.append(str(project_root))

from bezout import __version__
from bezout.cli import main
from bezout.config import settings
from bezout.errors import VerificationError
from bezout.reduction import ALGORITHMS


def write_matrix(tmp_path, entries, ring=None, name="m.json"):
    doc = {"rows": len(entries), "cols": len(entries[0]) if entries else 0, "entries": entries}
    if ring:
        doc["ring"] = ring
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_reduce_integer_matrix(tmp_path, capsys):
    # 1. Reduce [[2, 4], [6, 8]] over Z
    path = write_matrix(tmp_path, [[2, 4], [6, 8]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path)
    assert code == 0

    # 2. Check the emitted document
    doc = json.loads(out)
    assert doc["chain"] == ["2", "4"]
    assert doc["D"] == [["2", "0"], ["0", "4"]]
    assert doc["verified"] is True
    assert doc["algorithm"] == "diagonal"
    assert "transcript" not in doc
    assert "pivot_chain" not in doc


def test_reduce_reads_ring_from_document(tmp_path, capsys):
    path = write_matrix(tmp_path, [["j", "0"], ["0", "0"]], ring="quat")
    code, out = run(capsys, "reduce", "--input", path)
    assert code == 0
    assert json.loads(out)["chain"] == ["1", "0"]


def test_reduce_from_stdin(monkeypatch, capsys):
    payload = json.dumps({"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]})
    monkeypatch.setattr(sys, "stdin", io.StringIO(payload))
    code, out = run(capsys, "reduce")
    assert code == 0
    doc = json.loads(out)
    assert doc["chain"] == ["1", "1"]
    assert doc["P"] == [["1", "0"], ["0", "1"]]


def test_reduce_emits_transcript(tmp_path, capsys):
    path = write_matrix(tmp_path, [[2, 4], [6, 8]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path, "--emit-transcript")
    assert code == 0
    transcript = json.loads(out)["transcript"]
    kinds = [op["kind"] for op in transcript["left_ops"] + transcript["right_ops"]]
    assert kinds
    assert set(kinds) <= {
        "add_left_multiple", "add_right_multiple", "swap_rows", "swap_cols",
        "scale_row_left", "scale_col_right", "row_block", "col_block",
    }


def test_reduce_pivot_loop(tmp_path, capsys):
    path = write_matrix(tmp_path, [[4, 6], [8, 10]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path, "--algorithm", "mspec-loop")
    assert code == 0
    doc = json.loads(out)
    assert doc["pivot_chain"] == ["4", "2"]
    assert doc["chain"] == ["2", "4"]


def test_reduce_mod_jacobson(tmp_path, capsys):
    path = write_matrix(tmp_path, [["2", "0"], ["0", "3"]])
    code, out = run(capsys, "reduce", "--ring", "zloc23", "--input", path, "--algorithm", "mod-jacobson")
    assert code == 0
    assert json.loads(out)["chain"] == ["1", "6"]


def test_reduce_output_is_byte_stable(tmp_path, capsys):
    path = write_matrix(tmp_path, [["x", "1+x"], ["x^2", "3"]])
    _, first = run(capsys, "reduce", "--ring", "poly:5", "--input", path, "--emit-transcript")
    _, second = run(capsys, "reduce", "--ring", "poly:5", "--input", path, "--emit-transcript")
    assert first == second


def test_unsupported_algorithm_for_ring(tmp_path, capsys):
    path = write_matrix(tmp_path, [[2, 0], [0, 3]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path, "--algorithm", "mod-jacobson")
    assert code == 3
    assert json.loads(out)["error"] == "UnsupportedRingError"


def test_bad_inputs_exit_2(tmp_path, capsys):
    # 1. Malformed JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _ = run(capsys, "reduce", "--ring", "int", "--input", str(bad))
    assert code == 2

    # 2. Entries that do not parse in the ring
    path = write_matrix(tmp_path, [["1/2"]], name="half.json")
    code, out = run(capsys, "reduce", "--ring", "zloc23", "--input", path)
    assert code == 2
    assert json.loads(out)["error"] == "ParseError"

    # 3. Conflicting ring descriptors
    path = write_matrix(tmp_path, [[1]], ring="int", name="conflict.json")
    code, out = run(capsys, "reduce", "--ring", "quat", "--input", path)
    assert code == 2
    assert json.loads(out)["error"] == "DescriptorMismatchError"

    # 4. Missing ring
    path = write_matrix(tmp_path, [[1]], name="noring.json")
    code, _ = run(capsys, "reduce", "--input", path)
    assert code == 2

    # 5. Missing file
    code, _ = run(capsys, "reduce", "--ring", "int", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_size_cap(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(settings, "MAX_SIZE", 2)
    path = write_matrix(tmp_path, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path)
    assert code == 2
    assert json.loads(out)["error"] == "BudgetExceededError"


def test_verification_failure_exit_4(tmp_path, capsys, monkeypatch):
    def broken(matrix):
        raise VerificationError("forged")

    monkeypatch.setitem(ALGORITHMS, "diagonal", broken)
    path = write_matrix(tmp_path, [[1]])
    code, out = run(capsys, "reduce", "--ring", "int", "--input", path)
    assert code == 4
    assert json.loads(out) == {"error": "VerificationError", "message": "forged"}


def test_check_adequate(capsys):
    code, out = run(capsys, "check", "adequate", "12", "2")
    assert code == 0
    doc = json.loads(out)
    assert (doc["r"], doc["s"]) == ("3", "4")
    assert doc["audit"] == [{"prime": "2", "gcd": "2"}]


def test_check_pm_split_and_witness(capsys):
    code, out = run(capsys, "check", "pm-split", "12", "5", "2")
    assert code == 0
    assert (json.loads(out)["r"], json.loads(out)["s"]) == ("4", "3")

    code, out = run(capsys, "check", "pm-witness", "6", "3", "4")
    assert code == 0
    assert (json.loads(out)["r"], json.loads(out)["s"]) == ("1", "2")


def test_check_stable_range(capsys):
    code, out = run(capsys, "check", "stable-range", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert doc["modulus"] == 6


def test_check_element_conditions(capsys):
    code, out = run(capsys, "check", "stable-element", "12/5", "--ring", "zloc23")
    assert code == 0
    assert json.loads(out)["modulus"] == 12

    code, out = run(capsys, "check", "locally-stable", "0", "1")
    assert code == 0
    assert (json.loads(out)["y"], json.loads(out)["modulus"]) == ("1", 1)

    code, out = run(capsys, "check", "locally-stable", "0", "5")
    assert code == 2

    code, out = run(capsys, "check", "gelfand", "4", "7")
    assert code == 0
    assert json.loads(out)["y"] == "0"

    code, out = run(capsys, "check", "pm-element", "12")
    assert code == 0
    assert json.loads(out)["pairs_checked"] == 12


def test_check_feckly_clean(capsys):
    code, out = run(capsys, "check", "feckly-clean", "3")
    assert code == 0
    doc = json.loads(out)
    assert (doc["e"], doc["unit"]) == ("4", "-1")
    assert doc["ring"] == "zloc23"


def test_check_lam_over_quaternions(capsys):
    code, out = run(capsys, "check", "lam", "1,2,3,4", "--ring", "quat")
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_check_errors(capsys):
    # 1. Wrong arity
    code, _ = run(capsys, "check", "adequate", "12")
    assert code == 2

    # 2. Not comaximal
    code, out = run(capsys, "check", "pm-split", "12", "2", "4")
    assert code == 2
    assert json.loads(out)["error"] == "NotComaximalError"

    # 3. Wrong ring for the condition
    code, _ = run(capsys, "check", "feckly-clean", "3", "--ring", "int")
    assert code == 3


def test_selftest_single_suite(capsys):
    code, out = run(capsys, "selftest", "--suite", "minors", "--seed", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("PASS minors (")
    assert lines[-1] == "1/1 suites passed"


@pytest.mark.slow
def test_selftest_all_suites(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert out.strip().splitlines()[-1] == "7/7 suites passed"


def test_info(capsys):
    code, out = run(capsys, "info", "poly:5")
    assert code == 0
    assert json.loads(out) == {
        "descriptor": "poly:5",
        "instance": "PolyOverPrimeField",
        "commutative": True,
        "domain": True,
        "euclidean": True,
    }

    code, out = run(capsys, "info", "quat")
    doc = json.loads(out)
    assert doc["commutative"] is False and doc["euclidean"] is False

    code, _ = run(capsys, "info", "poly:4")
    assert code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
