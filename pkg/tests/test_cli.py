from __future__ import annotations

import json
import subprocess
import sys

import pytest

from toricodes import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def _table(text):
    rows = {}
    for line in text.splitlines():
        key, _, val = line.partition("  ")
        rows[key.strip()] = val.strip()
    return rows


def test_params_xab(capsys):
    rec = run_json(capsys, "params", "--family", "xab", "--q", "5", "--a", "2", "--b", "1")
    assert (rec["n"], rec["k"], rec["d"]["lower"], rec["d"]["exact"]) == (16, 9, 2, None)
    code, out, _ = run(capsys, "params", "--family", "xab", "--q", "5", "--a", "2", "--b", "1")
    t = _table(out)
    assert (t["n"], t["k"], t["d.lower"], t["d.exact"]) == ("16", "9", "2", "-")


def test_params_exact_and_points(capsys):
    rec = run_json(capsys, "params", "--family", "xab", "--q", "5", "--a", "2", "--b", "1", "--exact")
    assert rec["d"]["exact"] == 3 and rec["d"]["source"] == "exhaustive"
    rec = run_json(capsys, "params", "--family", "rs", "--q", "5", "--k", "2", "--exact")
    assert (rec["n"], rec["k"], rec["d"]["exact"]) == (4, 2, 3)
    rec = run_json(capsys, "params", "--q", "3", "--points", "[[0,0]]", "--exact")
    assert (rec["n"], rec["k"], rec["d"]["exact"]) == (4, 1, 4)


def test_table_and_json_carry_same_numbers(capsys):
    argv = ["quantum", "--q", "4", "--a1", "1", "--b1", "1", "--a2", "2", "--b2", "1"]
    rec = run_json(capsys, *argv)
    _, out, _ = run(capsys, *argv)
    t = _table(out)
    flat = dict(cli._flatten(rec))
    assert set(flat) == set(t)
    for k, v in flat.items():
        assert t[k] == cli._cell(v), k


def test_quantum_example(capsys):
    rec = run_json(capsys, "quantum", "--q", "7", "--a1", "4", "--b1", "4", "--a2", "4", "--b2", "4")
    assert rec["label"] == "[[36,24,dz=2/dx=2]]_7"
    assert (rec["dz_bound"], rec["dx_bound"]) == (2, 2)


def test_quantum_not_nested(capsys):
    code, _, err = run(capsys, "quantum", "--q", "5", "--a1", "2", "--b1", "1", "--a2", "2", "--b2", "1")
    assert code == 40 and "NestingFailed" in err


def test_matrix_export(capsys, tmp_path):
    code, out, _ = run(capsys, "matrix", "--family", "triangle", "--q", "5", "--a", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# ") and len(lines) == 4
    head = json.loads(lines[0][2:])
    assert head["exponents"] == [[0, 0], [0, 1], [1, 0]]
    path = tmp_path / "dual.txt"
    rec = run_json(capsys, "matrix", "--family", "triangle", "--q", "5", "--a", "1", "--dual", "--out", str(path))
    assert rec == {"written": str(path), "rows": 13, "cols": 16}
    assert len(path.read_text().splitlines()) == 14


def test_encode(capsys):
    rec = run_json(capsys, "encode", "--q", "3", "--points", "[[0,0]]", "--message", "2")
    assert rec["codeword"] == [2, 2, 2, 2]


def test_decode_fixture(capsys):
    rec = run_json(capsys, "decode", "--fixture", "q8")
    assert rec["status"] == "ok" and rec["message"] == [5, 2, 3]
    assert rec["error_positions"] == [24, 25, 29, 36, 43]


def test_decode_config_file(capsys, tmp_path):
    from importlib import resources

    root = resources.files("toricodes") / "fixtures"
    cfg = tmp_path / "cfg.json"
    cfg.write_text((root / "q8_config.json").read_text())
    rx = tmp_path / "rx.txt"
    rx.write_text((root / "q8_received.txt").read_text())
    rec = run_json(capsys, "decode", "--config", str(cfg), "--received", "@" + str(rx))
    assert rec["message"] == [5, 2, 3]
    rec = run_json(capsys, "decode", "--q", "8", "--a", "1", "--b", "2", "--t", "5",
                   "--received", "@" + str(rx))
    assert rec["message"] == [5, 2, 3]


def test_decode_failures(capsys):
    code, _, err = run(capsys, "decode", "--q", "8", "--a", "1", "--b", "2", "--t", "6", "--received", "0")
    assert code == 20 and "AssumptionFailed" in err
    code, out, _ = run(capsys, "decode", "--q", "8", "--a", "1", "--b", "2", "--t", "5", "--received", "0 1",
                       "--format", "json")
    assert code == 13 and json.loads(out)["status"] == "LengthMismatch"


def test_decode_refusal_report(capsys):
    # a word far from the code: the decoder refuses and still prints a report
    word = " ".join(str((i * 5 + 1) % 8) for i in range(49))
    code, out, _ = run(capsys, "decode", "--q", "8", "--a", "1", "--b", "2", "--t", "5",
                       "--received", word, "--format", "json")
    rep = json.loads(out)
    assert code in (21, 22) and rep["message"] is None and rep["status"] in ("NoLocator", "InconsistentRecovery")


def test_share_reconstruct_product(capsys, tmp_path):
    base = ["--family", "xab", "--q", "8", "--a", "2", "--b", "2"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_json(capsys, "share", *base, "--secret", "3", "--seed", "1", "--out", str(a))
    run_json(capsys, "share", *base, "--secret", "6", "--seed", "2", "--out", str(b))
    rec = run_json(capsys, "reconstruct", "--shares", str(a))
    assert rec["secret"] == 3 and rec["shares_used"] == 48
    subset = ";".join(f"{i},{j}" for i in range(7) for j in range(7) if (i, j) not in ((0, 0), (1, 1), (2, 2)))
    rec = run_json(capsys, "reconstruct", "--shares", str(b), "--players", subset)
    assert rec == {"secret": 6, "shares_used": 46}
    rec = run_json(capsys, "product", "--shares", str(a), str(b), "--remove", "1,1")
    from toricodes.gf import field_for_order

    assert rec["product"] == field_for_order(8).mul(3, 6) and rec["shares_used"] == 47


def test_reconstruct_insufficient(capsys, tmp_path):
    a = tmp_path / "a.json"
    run_json(capsys, "share", "--family", "xab", "--q", "5", "--a", "2", "--b", "1",
             "--secret", "1", "--seed", "4", "--out", str(a))
    code, _, err = run(capsys, "reconstruct", "--shares", str(a), "--players", "0,1")
    assert code == 31 and "Insufficient" in err


def test_share_is_deterministic(capsys):
    argv = ["share", "--family", "xab", "--q", "5", "--a", "2", "--b", "1", "--secret", "2", "--seed", "9"]
    _, first, _ = run(capsys, *argv, "--format", "json")
    _, second, _ = run(capsys, *argv, "--format", "json")
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"scheme_hash", "scheme", "entries"}


def test_share_needs_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["share", "--family", "xab", "--q", "5", "--a", "2", "--b", "1", "--secret", "2"])
    assert exc.value.code == 2
    assert "--seed" in capsys.readouterr().err


def test_usage_errors_name_the_flag(capsys):
    with pytest.raises(SystemExit):
        cli.main(["params", "--family", "xab", "--q", "5", "--a", "2"])
    assert "--b" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        cli.main(["params", "--q", "5"])
    assert "--family" in capsys.readouterr().err


def test_module_error_codes(capsys):
    code, _, err = run(capsys, "params", "--family", "xab", "--q", "5", "--a", "1", "--b", "2")
    assert code == 12 and "RangeViolation" in err
    code, _, err = run(capsys, "params", "--family", "xab", "--q", "6", "--a", "1", "--b", "0")
    assert code == 11 and "NonPrime" in err


def test_check_suites(capsys):
    rec = run_json(capsys, "check", "character-sums", "--q", "5")
    assert rec["ok"] and rec["failed"] == 0
    argv = ["check", "duality", "--q", "4", "--seed", "3", "--samples", "5", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and json.loads(first)["checks"] == 5
    with pytest.raises(SystemExit):
        cli.main(["check", "schur", "--q", "4"])


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "toricodes", "params", "--family", "triangle", "--q", "16",
                          "--a", "4", "--format", "json"], capture_output=True, text=True, check=True)
    rec = json.loads(out.stdout)
    assert (rec["n"], rec["k"], rec["d"]["exact"]) == (225, 15, 165)
