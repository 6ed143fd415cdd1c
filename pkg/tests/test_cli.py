import json
import os
import subprocess
import sys

import numpy as np
import pytest

from atto.cli import (EXIT_INCONSISTENT, EXIT_NUMERIC, EXIT_OK, EXIT_PARSE,
                      EXIT_PROPERTY, main, parse_config)

SQUARE = {"constant": [1.0, 0.0], "zeros": [[0.0, 0.0], [0.0, 0.0]]}
Z_SYMBOL = {"g_plus": {"num": [[0.0, 0.0], [1.0, 0.0]]}}


def _write(tmp_path, data, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data) if isinstance(data, dict) else data)
    return str(path)


ZERO_CLASS = {
    "alpha": {"constant": [0.6, 0.8], "zeros": [[0.3, -0.2], [0.0, 0.5]]},
    "beta": {"constant": [1.0, 0.0], "zeros": [[-0.4, 0.1], [0.2, 0.2], [0.0, 0.0]]},
    "symbol": {"builder": "zero_class",
               "h1": {"num": [[1.0, 0.5], [0.2, -0.3]]},
               "h2": {"num": [[-0.7, 0.0], [0.0, 0.0], [0.4, 0.4]]}},
}


def _zero_class(tmp_path, noise=0.0):
    data = dict(ZERO_CLASS)
    if noise:
        # expand the builder so a coefficient can be perturbed
        sym = parse_config(ZERO_CLASS).symbol.to_json()
        sym["g_plus"]["num"][1][0] += noise
        data["symbol"] = sym
    return _write(tmp_path, data)


def _run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_shift(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    out_path = tmp_path / "m.json"
    code, _, _ = _run(["matrix", cfg, "--out", str(out_path)], capsys)
    assert code == EXIT_OK
    data = json.loads(out_path.read_text())
    entries = np.array([[complex(*v) for v in row] for row in data["entries"]])
    assert np.allclose(entries, [[0, 0], [1, 0]], atol=1e-15)
    assert data["norm"] == pytest.approx(1.0)


def test_matrix_csv(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    csv_path = tmp_path / "m.csv"
    code, out, _ = _run(["matrix", "--config", cfg, "--csv", str(csv_path)], capsys)
    assert code == EXIT_OK
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "row,col,re,im"
    assert len(lines) == 5
    assert json.loads(out)["norm"] == pytest.approx(1.0)


def test_matrix_zero_class(tmp_path, capsys):
    code, out, _ = _run(["matrix", _zero_class(tmp_path)], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["norm"] < 1e-9


def test_bad_zero_names_index(tmp_path, capsys):
    bad = {"alpha": {"constant": [1, 0], "zeros": [[0.1, 0], [1.2, 0]]}, "symbol": Z_SYMBOL}
    out_path = tmp_path / "m.json"
    code, _, err = _run(["matrix", _write(tmp_path, bad), "--out", str(out_path)], capsys)
    assert code == EXIT_PARSE
    assert "alpha.zeros[1]" in err
    assert not out_path.exists()


@pytest.mark.parametrize("config, field", [
    ("{not json", "config.json"),
    ({"symbol": Z_SYMBOL}, "config.alpha"),
    ({"alpha": {"constant": [2, 0], "zeros": [[0, 0]]}, "symbol": Z_SYMBOL}, "alpha.constant"),
    ({"alpha": SQUARE, "symbol": {"g_plus": {"num": [[1, 0]], "den": [[1, 0], [-2, 0]]}}},
     "symbol.g_plus.den"),
    ({"alpha": SQUARE, "symbol": {"builder": "nope"}}, "symbol.builder"),
    ({"alpha": SQUARE, "symbol": {"builder": "rank_one_a", "w": [1.5, 0]}}, "symbol.w"),
    ({"alpha": SQUARE, "symbol": {"builder": "rank_one_boundary", "eta": [0.5, 0]}}, "symbol.eta"),
    ({"alpha": SQUARE, "symbol": Z_SYMBOL, "tolerances": {"matrix": -1}}, "tolerances.matrix"),
    ({"alpha": SQUARE, "symbol": {"g_plus": {"num": [[1, 0, 3]]}}}, "symbol.g_plus.num[0]"),
])
def test_parse_errors_are_field_addressed(tmp_path, capsys, config, field):
    code, _, err = _run(["check-zero", _write(tmp_path, config)], capsys)
    assert code == EXIT_PARSE
    assert field in err


def test_missing_config_file(tmp_path, capsys):
    code, _, err = _run(["matrix", str(tmp_path / "absent.json")], capsys)
    assert code == EXIT_PARSE
    assert "absent.json" in err


def test_config_required():
    with pytest.raises(SystemExit) as exc:
        main(["matrix"])
    assert exc.value.code == EXIT_PARSE


def test_toml_config(tmp_path, capsys):
    toml = """
[alpha]
constant = [1.0, 0.0]
zeros = [[0.0, 0.0], [0.0, 0.0]]

[symbol.g_plus]
num = [[0.0, 0.0], [1.0, 0.0]]
"""
    cfg = _write(tmp_path, toml, "config.toml")
    code, out, _ = _run(["matrix", cfg], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["norm"] == pytest.approx(1.0)


def test_check_zero_true(tmp_path, capsys):
    code, out, _ = _run(["check-zero", _zero_class(tmp_path)], capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["is_zero"] is True
    assert data["matrix_norm"] < 1e-9
    assert len(data["c"]) == 2


def test_check_zero_false(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    code, out, _ = _run(["check-zero", cfg], capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["is_zero"] is False
    assert data["c"] is None
    assert data["matrix_norm"] == pytest.approx(1.0)


def test_check_zero_tiny_perturbation(tmp_path, capsys):
    code, out, _ = _run(["check-zero", _zero_class(tmp_path, noise=1e-12)], capsys)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["is_zero"] == (data["matrix_norm"] < 1e-9)


def test_check_zero_inconsistency_flag(tmp_path, capsys, monkeypatch):
    from atto import cli
    original = cli.is_zero_symbol
    monkeypatch.setattr(cli, "is_zero_symbol", lambda *a, **k: (True, original(*a, **k)[1]))
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    code, _, err = _run(["check-zero", cfg], capsys)
    assert code == EXIT_INCONSISTENT
    assert "inconsistent" in err


def _crofoot_config(tmp_path):
    return _write(tmp_path, {
        "alpha": {"constant": [1, 0], "zeros": [[0.3, 0]]},
        "beta": {"constant": [1, 0], "zeros": [[0.2, 0], [-0.4, 0]]},
        "symbol": {"g_plus": {"num": [[1, 0.5], [0.3, 0]], "den": [[1, 0], [-0.4, 0]]},
                   "g_minus": {"num": [[0, 0], [0.2, -1]]}}})


def test_crofoot_origin(tmp_path, capsys):
    code, out, _ = _run(["crofoot", _crofoot_config(tmp_path), "--a", "0", "--b", "0"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["residual"] < 1e-10


def test_crofoot_auto_moves_zero_to_origin(tmp_path, capsys):
    code, out, _ = _run(["crofoot", _crofoot_config(tmp_path), "--a", "auto", "--b", "auto"],
                        capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert abs(complex(*data["alpha_a_at_0"])) < 1e-14
    assert abs(complex(*data["beta_b_at_0"])) < 1e-14
    assert data["residual"] < 1e-9


def test_crofoot_random_points(tmp_path, capsys):
    code, out, _ = _run(["crofoot", _crofoot_config(tmp_path), "--a", "0.2-0.5j",
                         "--b=-0.6+0.1j"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["residual"] < 1e-9


def test_crofoot_bad_point(tmp_path, capsys):
    code, _, err = _run(["crofoot", _crofoot_config(tmp_path), "--a", "2"], capsys)
    assert code == EXIT_PARSE
    assert "--a" in err


@pytest.mark.parametrize("symbol", [
    {"builder": "rank_one_a", "w": [0.37, 0.1]},
    {"builder": "rank_one_b", "w": [-0.2, 0.5]},
    {"builder": "rank_one_boundary", "eta": [0.6, 0.8]},
])
def test_rank_one(tmp_path, capsys, symbol):
    cfg = _write(tmp_path, {"alpha": {"constant": [1, 0], "zeros": [[0.1, 0.2], [0.0, -0.5]]},
                            "beta": {"constant": [0, 1], "zeros": [[0.3, 0], [0, 0], [-0.2, 0.1]]},
                            "symbol": symbol})
    code, out, _ = _run(["rank-one", cfg], capsys)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["residual"] < (1e-8 if "eta" in symbol else 1e-9)
    assert data["matrix"]["norm"] > 0


def test_rank_one_boundary_square(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE,
                            "symbol": {"builder": "rank_one_boundary", "eta": [1, 0]}})
    code, out, _ = _run(["rank-one", cfg], capsys)
    entries = json.loads(out)["matrix"]["entries"]
    assert code == EXIT_OK
    assert np.allclose([[complex(*v) for v in row] for row in entries], [[1, 1], [1, 1]])


def test_rank_one_needs_builder(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    code, _, err = _run(["rank-one", cfg], capsys)
    assert code == EXIT_PARSE
    assert "symbol.builder" in err


def test_numeric_failure_exit_code(tmp_path, capsys, monkeypatch):
    from atto import cli
    from atto.errors import QuadratureNotConverged

    def fail(*args, **kwargs):
        raise QuadratureNotConverged("forced")

    monkeypatch.setattr(cli, "atto_matrix", fail)
    out_path = tmp_path / "m.json"
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    code, _, err = _run(["matrix", cfg, "--out", str(out_path)], capsys)
    assert code == EXIT_NUMERIC
    assert "QuadratureNotConverged" in err
    assert not out_path.exists()


def test_outputs_are_byte_stable(tmp_path, capsys):
    cfg = _crofoot_config(tmp_path)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    _run(["crofoot", cfg, "--a", "auto", "--b", "auto", "--out", str(a)], capsys)
    _run(["crofoot", cfg, "--a", "auto", "--b", "auto", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_atomic_write_leaves_no_temp_files(tmp_path, capsys):
    cfg = _write(tmp_path, {"alpha": SQUARE, "symbol": Z_SYMBOL})
    _run(["matrix", cfg, "--out", str(tmp_path / "m.json")], capsys)
    assert sorted(os.listdir(tmp_path)) == ["config.json", "m.json"]


def test_verify_zero_trials(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = _run(["verify", "--trials", "0", "--report", str(report)], capsys)
    assert code == EXIT_OK
    data = json.loads(report.read_text())
    assert data["passed"] is True
    assert all(r["max_residual"] is None and r["trials"] == 0 for r in data["properties"])


def test_verify_negative_trials(capsys):
    code, _, err = _run(["verify", "--trials", "-1"], capsys)
    assert code == EXIT_PARSE


def test_verify_reports_failures(capsys, monkeypatch):
    from atto import verify
    monkeypatch.setattr(verify, "PROPERTIES", [("always_bad", lambda rng: 1.0, 0.5)])
    code, out, err = _run(["verify", "--trials", "2"], capsys)
    assert code == EXIT_PROPERTY
    assert "always_bad" in err


def _payload(path):
    data = json.loads(path.read_text())
    data.pop("metadata")
    return data


def test_verify_deterministic_and_seed_independent(tmp_path, capsys):
    verdicts = []
    for seed in range(5):
        report = tmp_path / f"r{seed}.json"
        code, _, _ = _run(["verify", "--seed", str(seed), "--trials", "10",
                           "--report", str(report)], capsys)
        assert code == EXIT_OK
        verdicts.append([r["passed"] for r in _payload(report)["properties"]])
    assert all(v == verdicts[0] for v in verdicts)
    again = tmp_path / "again.json"
    _run(["verify", "--seed", "3", "--trials", "10", "--report", str(again)], capsys)
    assert _payload(again) == _payload(tmp_path / "r3.json")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "atto", "verify", "--trials", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
