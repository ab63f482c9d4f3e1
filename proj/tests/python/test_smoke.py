"""Smoke tests for the python module and the CLI."""

import json
import math
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.environ["LEVYMIX_PYDIR"])

import _levymix as lm  # noqa: E402

CLI = os.environ.get("LEVYMIX_CLI")


def test_special_functions():
    assert lm.bessel_k_half(0, 1.0) == pytest.approx(
        math.sqrt(math.pi / 2) * math.exp(-1.0), rel=1e-14
    )
    assert lm.bessel_k(0.5, 2.0) == pytest.approx(lm.bessel_k_half(0, 2.0), rel=1e-12)
    g = lm.upper_gamma(1.0, 0.5 + 1.5j)
    want = complex(math.e ** -0.5 * math.cos(1.5), -math.e ** -0.5 * math.sin(1.5))
    assert abs(g - want) < 1e-13
    assert lm.sin_integral(0.0) == pytest.approx(-math.pi / 2, rel=1e-15)
    assert lm.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)


def test_laws_and_process():
    assert lm.student_pdf(3.0, 1.0, 0.0) == pytest.approx(2 / math.pi, rel=1e-14)
    assert lm.vg_chf(1.0, math.sqrt(2.0), 1.0) == pytest.approx(2 / 3, rel=1e-14)
    assert lm.student3_transition_pdf(0.0, 2.0) == pytest.approx(
        1.25 / math.pi, rel=1e-12
    )
    assert lm.vg_transition_pdf(1.0, 0.0, 2.0) == pytest.approx(0.25, rel=1e-13)
    with pytest.raises(ValueError):
        lm.vg_transition_pdf(1.0, 0.0, 0.25)  # singular at the origin
    assert lm.student3_tail_coefficient(2.0) == pytest.approx(4 / math.pi, rel=1e-15)


def test_mixture_weights():
    vals, rats = lm.mixture_weights(2)
    assert rats == ["0/1", "1/4", "3/4"]
    assert vals == [0.0, 0.25, 0.75]
    assert lm.mixture_pdf(0.0, 2) == pytest.approx(1.25 / math.pi, rel=1e-14)


def test_triplet():
    assert lm.w_vg(1.0, 1.0) == pytest.approx(math.exp(-1.0), rel=1e-14)
    # numeric extraction through python callables
    w = lm.numeric_w(
        lambda u: math.exp(-abs(u)),
        lambda u: -math.copysign(1.0, u) * math.exp(-abs(u)),
        1.0,
        600.0,
    )
    assert w == pytest.approx(1 / math.pi, abs=1e-4)


def test_simulation_determinism():
    a, _ = lm.ou_path("student", 0.1, 8.0, 1000, 0.0, 42)
    b, _ = lm.ou_path("student", 0.1, 8.0, 1000, 0.0, 42)
    assert a == b
    stats = lm.escape_stats("vg", 0.1, 8.0, 200, 500, 7)
    assert set(stats) == {
        "noise", "k", "q", "n_paths", "steps", "escape_fraction",
        "mean_first_escape", "seed",
    }
    assert 0.0 <= stats["escape_fraction"] <= 1.0


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_byte_identical_runs(tmp_path):
    def run(args, out):
        subprocess.run([CLI, *args, "--out", str(out)], check=True)
        return out.read_bytes()

    w1 = run(["weights", "--n", "5"], tmp_path / "w1.csv")
    w2 = run(["weights", "--n", "5"], tmp_path / "w2.csv")
    assert w1 == w2
    assert b"5,0,0,0/1" in w1  # structural zero row

    s1 = run(
        ["simulate", "--noise", "vg", "--paths", "300", "--steps", "400",
         "--q", "8", "--seed", "11"],
        tmp_path / "s1.json",
    )
    s2 = run(
        ["simulate", "--noise", "vg", "--paths", "300", "--steps", "400",
         "--q", "8", "--seed", "11"],
        tmp_path / "s2.json",
    )
    assert s1 == s2
    stats = json.loads(s1)
    assert stats["noise"] == "vg"
    assert stats["n_paths"] == 300


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_pdf_grid(tmp_path):
    out = tmp_path / "pdf.csv"
    subprocess.run(
        [CLI, "pdf", "--law", "student3", "--t", "2", "--grid", "-10:10:401",
         "--out", str(out)],
        check=True,
    )
    rows = [r for r in out.read_text().splitlines() if not r.startswith("#")]
    assert rows[0] == "x,pdf"
    mid = rows[1 + 200].split(",")
    assert float(mid[0]) == 0.0
    assert float(mid[1]) == pytest.approx(1.25 / math.pi, rel=1e-12)


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    r = subprocess.run(
        [CLI, "pdf", "--law", "vg", "--lambda", "-1", "--t", "1"],
        capture_output=True,
    )
    assert r.returncode == 1  # domain error
    r = subprocess.run([CLI, "nonsense"], capture_output=True)
    assert r.returncode != 0
