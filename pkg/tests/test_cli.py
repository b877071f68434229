import io
import json
from fractions import Fraction as F

from exactgamma.cli import dispatch

GAMMA_39 = "0.577215664901532860606512090082402431042"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_eq69_text_golden():
    code, out, _ = run(["eq69", "--terms", "5", "--format", "text"])
    assert code == 0
    assert out.splitlines() == ["1/12", "5/144", "247/12960", "77/6400", "25027/3024000"]


def test_coeffs_invalid_argument():
    code, _, err = run(["coeffs", "--max-k", "0"])
    assert code == 2
    assert "error" in err


def test_unknown_subcommand():
    code, _, _ = run(["frobnicate"])
    assert code == 2


def test_gamma_oracle_digits():
    code, out, _ = run(["gamma", "oracle", "--digits", "39"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == GAMMA_39
    assert lines[1].startswith("lo ") and lines[2].startswith("hi ")


def test_gamma_oracle_precision_unreachable():
    code, _, err = run(["gamma", "oracle", "--digits", "200"])
    assert code == 3
    assert "error" in err


def test_coeffs_note_on_diagnostic_stream():
    code, out, err = run(["coeffs", "--max-k", "7", "--format", "json"])
    assert code == 0
    assert "863/60480" in err
    assert "note" not in out
    # below k = 6 there is nothing to annotate
    _, _, err5 = run(["coeffs", "--max-k", "5"])
    assert err5 == ""


def test_coeffs_json_round_trip():
    code, out_json, _ = run(["coeffs", "--max-k", "10", "--format", "json"])
    code2, out_text, _ = run(["coeffs", "--max-k", "10", "--format", "text"])
    assert code == code2 == 0
    records = json.loads(out_json)
    text_rows = [line.split() for line in out_text.splitlines()]
    assert len(records) == len(text_rows) == 10
    for rec, row in zip(records, text_rows):
        assert rec["k"] == int(row[0])
        assert F(rec["a"]) == F(row[1])
        assert F(rec["A"]) == F(row[2])


def test_goldbach_stream_round_trip_and_dup():
    code, out_json, _ = run(["goldbach", "stream", "--count", "8", "--format", "json"])
    code2, out_text, _ = run(["goldbach", "stream", "--count", "8"])
    assert code == code2 == 0
    records = json.loads(out_json)
    assert records[0] == {"k": 2, "n": 3, "value": "1/8"}
    lines = out_text.splitlines()
    assert lines[4] == "2 6 1/64 dup"
    assert lines[5] == "4 3 1/64 dup"
    for rec, line in zip(records, lines):
        parts = line.split()
        assert [rec["k"], rec["n"]] == [int(parts[0]), int(parts[1])]
        assert F(rec["value"]) == F(parts[2])


def test_eq69_json_round_trip():
    _, out_json, _ = run(["eq69", "--terms", "5", "--format", "json"])
    _, out_text, _ = run(["eq69", "--terms", "5"])
    records = json.loads(out_json)
    assert [F(r["t"]) for r in records] == [F(s) for s in out_text.splitlines()]


def test_determinism():
    for argv in (
        ["gamma", "bracket", "--terms", "7", "--digits", "20"],
        ["coeffs", "--max-k", "12", "--format", "json"],
        ["goldbach", "check", "--max-n", "10", "--digits", "10"],
    ):
        assert run(argv) == run(argv)


def test_gamma_kluyver():
    code, out, _ = run(["gamma", "kluyver", "--terms", "3"])
    assert code == 0
    assert out.splitlines() == ["1/2", "1/24", "1/72", "sum 5/9"]


def test_gamma_bracket_output_shape():
    code, out, _ = run(["gamma", "bracket", "--terms", "5", "--digits", "20"])
    assert code == 0
    lines = out.splitlines()
    assert [l.split()[0] for l in lines] == ["lower", "upper_lo", "upper_hi"]
    lower = F(lines[0].split()[1])
    upper_lo = F(lines[1].split()[1])
    assert lower < upper_lo


def test_liouville_and_digits_of():
    code, out, _ = run(["liouville", "--digits", "25"])
    assert code == 0
    assert out.strip() == "0.1100010000000000000000010"
    code, out, _ = run(["digits-of", "--c", "2", "--digits", "6"])
    assert code == 0
    assert out.strip() == "0.355065"
    code, _, err = run(["digits-of", "--c", "3/2", "--digits", "6"])
    assert code == 2
    assert "error" in err


def test_const_commands():
    code, out, _ = run(["const", "pi", "--digits", "10"])
    assert code == 0
    assert out.splitlines()[0] == "3.1415926535"
    code, out, _ = run(["const", "zeta2", "--digits", "10"])
    assert code == 0
    assert out.splitlines()[0] == "1.6449340668"


def test_eq65_command():
    code, out, _ = run(["eq65", "--families", "3"])
    assert code == 0
    assert out.splitlines() == ["0 1 0", "1 1/2 -1/2", "2 -1/24 0"]


def test_ascii_output():
    for argv in (
        ["coeffs", "--max-k", "7", "--format", "json"],
        ["gamma", "bracket", "--terms", "5", "--digits", "20"],
    ):
        _, out, err = run(argv)
        (out + err).encode("ascii")
