"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import io
import os
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest

from beatty_lab import beatty, sequences, walk
from beatty_lab.cli import main
from beatty_lab.exact import floor_n_sqrt2_oracle, isqrt

from conftest import ACCEPTANCE_LINES

N_MAX = 10**6
BFILE_DIR_ENV = "BEATTY_LAB_BFILE_DIR"

# frozen from the first verified run; cross-checked in test_walk.py
GOLDEN_ENDPOINT = (4206, 2178)
GOLDEN_BBOX = (0, 0, 4209, 2911)


@contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {label}  ({time.perf_counter() - start:.2f}s)")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label}  ({time.perf_counter() - start:.2f}s)")
    print(ACCEPTANCE_LINES[-1])


def test_c01_equivalence_sweep():
    with criterion("C1 six conditions unanimous on [2, 10^6]"):
        t0 = time.perf_counter()
        report = beatty.check_equivalence(2, N_MAX, jobs=1)
        single = time.perf_counter() - t0
        assert report.checked_count == N_MAX - 1
        assert report.counterexamples == []
        assert single < 60

        t0 = time.perf_counter()
        pooled = beatty.check_equivalence(2, N_MAX, jobs=8)
        assert time.perf_counter() - t0 < 15
        assert pooled == report


def test_c02_boundary_n1():
    with criterion("C2 n=1: (d) holds, (b) fails"):
        cv = beatty.condition_vector(1)
        assert cv.d is True
        assert cv.b is False


def test_c03_eq1_residue():
    with criterion("C3 floor(n*sqrt2) - 2*floor(n/sqrt2) in {0,1}, zero iff (a), n in [0, 10^6]"):
        for n in range(0, N_MAX + 1):
            n2 = n * n
            p = isqrt(2 * n2)
            r = p - 2 * isqrt(n2 >> 1)
            assert r == 0 or r == 1, n
            assert (r == 0) == (p % 2 == 0), n


def test_c04_b_c_separation():
    with criterion("C4 2n^2 != (2q+1)^2 for n in [1, 10^6]"):
        for n in range(1, N_MAX + 1):
            q = isqrt(n * n >> 1)
            assert 2 * n * n != (2 * q + 1) ** 2, n


def test_c05_shift_identity():
    with criterion("C5 A090892 minus two leading terms == A120752, 10^4 terms"):
        d_terms = sequences.satisfying_indices(sequences.SequenceSpec("a090892", 0), 10**4 + 2)
        b_terms = sequences.satisfying_indices(sequences.SequenceSpec("a120752", 1), 10**4)
        assert d_terms[2:] == b_terms
        assert sequences.shift_identity_check(10**4)


def test_c06_lemma1_random_rationals():
    with criterion("C6 lemma holds on 10^4 random rationals (components <= 10^9)"):
        rng = random.Random(10**9 + 7)
        for _ in range(10**4):
            x = Fraction(rng.randint(0, 10**9), rng.randint(1, 10**9))
            assert beatty.lemma1_holds(x), x


def test_c07_complementarity():
    with criterion("C7 Beatty complement partitions [1, 10^6]"):
        t0 = time.perf_counter()
        report = beatty.complementarity_check(N_MAX, jobs=1)
        assert time.perf_counter() - t0 < 10
        assert report.duplicates == []
        assert report.gaps == []
        assert report.covered


def test_c08_oracle_agreement():
    with criterion("C8 fixed-point oracle == isqrt(2n^2) for n <= 10^5"):
        for n in range(0, 10**5 + 1):
            assert floor_n_sqrt2_oracle(n, 32) == isqrt(2 * n * n), n


def test_c09_walk_regeneration(tmp_path, monkeypatch):
    with criterion("C9 Cloitre walk of 10^5 parity bits: deterministic SVG/PGM + golden stats"):
        t0 = time.perf_counter()
        bits = sequences.parity_bits(10**5)
        w = walk.cloitre_walk(bits)
        stats = walk.walk_stats(w)
        assert stats.endpoint == GOLDEN_ENDPOINT
        assert stats.bbox == GOLDEN_BBOX
        assert walk.walk_stats(w, chunks=8) == stats
        svg = walk.render_svg(w)
        pgm = walk.render_pgm(w)
        w2 = walk.cloitre_walk(sequences.parity_bits(10**5))
        assert walk.render_svg(w2) == svg
        assert walk.render_pgm(w2) == pgm
        assert time.perf_counter() - t0 < 5

        for jobs in ("1", "8"):
            monkeypatch.setenv("BEATTY_LAB_JOBS", jobs)
            for fmt, expected in (("svg", svg.encode()), ("pgm", pgm)):
                out = tmp_path / f"walk-{jobs}.{fmt}"
                code = main(["walk", "--count", str(10**5), "--format", fmt, "-o", str(out)], io.StringIO())
                assert code == 0
                assert out.read_bytes() == expected


def _bfile_path(name):
    root = os.environ.get(BFILE_DIR_ENV)
    if not root:
        return None
    path = Path(root) / name
    return path if path.is_file() else None


@pytest.mark.parametrize(
    "seq_id, filename",
    [("a083035", "b083035.txt"), ("a090892", "b090892.txt"), ("a120752", "b120752.txt")],
)
def test_c10_bfile_cross_check(seq_id, filename):
    path = _bfile_path(filename)
    if path is None:
        ACCEPTANCE_LINES.append(f"SKIP  C10 {seq_id} b-file ({BFILE_DIR_ENV}/{filename} not provided)")
        pytest.skip(f"set {BFILE_DIR_ENV} to a directory containing {filename}")
    with criterion(f"C10 {seq_id} matches {path}"):
        entries = sequences.parse_bfile(path.read_text(encoding="ascii"))
        result = sequences.compare_with_bfile(entries, sequences.SequenceSpec(seq_id))
        assert result.match, result.first_mismatch
