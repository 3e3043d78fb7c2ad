import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slantlab.cli import InputError, main, parse_inner, parse_symbol
from slantlab.circle import CircleFunction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _matrix(rec):
    e = np.array([complex(a, b) for a, b in rec["entries"]])
    return e.reshape(rec["rows"], rec["cols"])


def test_build_op_monomial_example(capsys):
    code, out, err = run(capsys, "build-op", "--alpha", "z^4", "--beta", "z^2", "--k", "2",
                         "--phi", "z")
    assert code == 0 and err == ""
    np.testing.assert_allclose(_matrix(json.loads(out)), [[0, 0, 0, 0], [0, 1, 0, 0]], atol=1e-14)


def test_build_op_identity(capsys):
    code, out, _ = run(capsys, "build-op", "--alpha", "z^3", "--beta", "z^3", "--phi", "1")
    assert code == 0
    np.testing.assert_allclose(_matrix(json.loads(out)), np.eye(3), atol=1e-14)


@pytest.mark.parametrize("argv", [
    ["build-op", "--alpha", "z^0", "--beta", "z^2", "--phi", "1"],
    ["build-op", "--alpha", "z^2", "--beta", "z^2", "--phi", "z^^2"],
    ["build-op", "--alpha", "w", "--beta", "z^2", "--phi", "1"],
    ["build-op", "--alpha", "z^2", "--beta", "z^2", "--phi", "1", "--k", "0"],
    ["verify", "nope"],
    ["product", "--analytic", "--alpha", "z^3", "--beta", "z^4", "--gamma", "z^2",
     "--k", "2", "--m", "2"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_inner_json_file(tmp_path, capsys):
    p = tmp_path / "alpha.json"
    p.write_text(json.dumps({"zeros": [[0.3, 0.1], [0.0, 0.0]], "constant": [1, 0]}))
    b = parse_inner(str(p))
    assert b.degree == 2
    code, out, _ = run(capsys, "build-op", "--alpha", str(p), "--beta", "z", "--phi", "conj(z)")
    assert code == 0 and json.loads(out)["cols"] == 2


def test_symbol_grammar():
    f = parse_symbol("2 - 1.5i*conj(z) + (1+2i)*z^2 - conj(z)^3 + i*z - (2-i)z^4", 8)
    assert {n: f.coeff(n) for n in range(-4, 5) if f.coeff(n)} == {
        -3: -1, -1: -1.5j, 0: 2, 1: 1j, 2: 1 + 2j, 4: -2 + 1j}
    assert parse_symbol("1e-3*z", 4).coeff(1) == 1e-3
    with pytest.raises(InputError):
        parse_symbol("z^9", 4)
    with pytest.raises(InputError):
        parse_symbol("", 4)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.integers(-6, 6),
                       st.complex_numbers(max_magnitude=1e3, allow_nan=False,
                                          allow_infinity=False),
                       min_size=1, max_size=5))
def test_symbol_grammar_round_trip(terms):
    def lit(c):
        return f"({c.real!r}{c.imag:+.17g}i)"

    def mono(n):
        if n == 0:
            return ""
        return f"*z^{n}" if n > 0 else f"*conj(z)^{-n}"

    text = " + ".join(lit(c) + mono(n) for n, c in terms.items())
    f = parse_symbol(text, 8)
    for n, c in terms.items():
        assert f.coeff(n) == pytest.approx(c, abs=1e-9)


def test_symbol_json_file(tmp_path):
    g = CircleFunction.from_terms({-1: 2.0, 3: 1j}, 8)
    p = tmp_path / "phi.json"
    p.write_text(json.dumps(g.to_dict()))
    assert parse_symbol(str(p), 16).allclose(g.with_band(16))


def test_verify_example3(capsys):
    for k in ("2", "3"):
        code, out, _ = run(capsys, "verify", "example3", "--k", k)
        assert code == 0
        lines = [json.loads(l) for l in out.splitlines()]
        assert lines[-1]["summary"] and lines[-1]["pass"]
        assert lines[0]["residual"] <= 1e-12


def test_verify_unattainable_tolerance(capsys, caplog, monkeypatch):
    monkeypatch.setenv("SLANTLAB_TOL", "1e-30")
    code, out, _ = run(capsys, "verify", "lemma22", "--trials", "3")
    assert code == 1
    assert json.loads(out.splitlines()[-1])["tol"] == 1e-30
    assert any("FAIL" in r.getMessage() for r in caplog.records)


def test_verify_bad_env(capsys, monkeypatch):
    monkeypatch.setenv("SLANTLAB_TOL", "tiny")
    code, _, err = run(capsys, "verify", "lemma22")
    assert code == 2 and "SLANTLAB_TOL" in err


def test_verify_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for p in (a, b):
        assert main(["verify", "thm21", "--seed", "7", "--trials", "5", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.jsonl"
    main(["verify", "thm21", "--seed", "8", "--trials", "5", "--out", str(c)])
    assert c.read_bytes() != a.read_bytes()


def test_product_analytic(capsys):
    code, out, _ = run(capsys, "product", "--analytic", "--alpha", "z^8", "--beta", "z^4",
                       "--gamma", "z^2", "--k", "2", "--m", "2", "--phi", "1+z-0.5*z^3",
                       "--psi", "2i+z^2")
    rec = json.loads(out)
    assert code == 0 and rec["member"]
    assert len(rec["residuals"]) == 3
    assert max(rec["residuals"].values()) <= 1e-7


def test_product_mixed_and_l2(capsys):
    code, out, _ = run(capsys, "product", "--mixed", "a", "--alpha", "z^4", "--beta", "z^2",
                       "--gamma", "z^2", "--k", "2", "--phi", "z", "--psi", "z")
    assert code == 0 and json.loads(out)["details"]["case"] == "a"
    code, out, _ = run(capsys, "product", "--l2", "--alpha", "z^5", "--beta", "z^3",
                       "--gamma", "z^2", "--k", "2", "--phi", "conj(z)+z^2",
                       "--psi", "z-conj(z)^2")
    assert code == 0 and json.loads(out)["details"]["membership_test_agrees"]


def test_symbol_recover(capsys, tmp_path):
    code, out, _ = run(capsys, "symbol", "--recover", "--alpha", "z^3", "--beta", "z^2",
                       "--k", "2", "--phi", "conj(z) + 2*z^3 - 0.5i*z^5")
    rec = json.loads(out)
    assert code == 0 and rec["member"] and rec["round_trip"] <= 1e-6
    op = tmp_path / "op.json"
    main(["build-op", "--alpha", "z^3", "--beta", "z^2", "--k", "2", "--phi", "z^2",
          "--out", str(op)])
    code, out, _ = run(capsys, "symbol", "--recover", "--alpha", "z^3", "--beta", "z^2",
                       "--k", "2", "--op", str(op))
    assert code == 0 and json.loads(out)["round_trip"] <= 1e-6


def test_symbol_canonical_zero(capsys):
    # conj(z)^3 lies in conj(alpha H^2); z^3 = conj(z) * (W_2^* z^2) * 1
    code, out, _ = run(capsys, "symbol", "--canonical", "--alpha", "z^3", "--beta", "z^2",
                       "--k", "2", "--phi", "conj(z)^3 + 2*z^3")
    rec = json.loads(out)
    assert code == 0 and rec["parts_norm"] == 0
    assert all(a == 0 and b == 0 for p in rec["parts"] for a, b in p["coords"])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "slantlab", "build-op", "--alpha", "z^2",
                        "--beta", "z", "--phi", "1"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["rows"] == 1
