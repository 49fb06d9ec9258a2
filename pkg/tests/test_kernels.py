"""Backend-equivalence and dispatch tests for the jit kernels."""

import os
import subprocess
import sys

import numpy as np
import pytest

from vnumber import kernels
from vnumber.core import canonical_rows

from conftest import ref_minimal_rows


def _random_rows(rng, max_n=5, max_m=12, max_e=4):
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(0, max_m + 1))
    return rng.integers(0, max_e, size=(m, n)).astype(np.int64)


def test_antichain_mask_matches_reference(rng):
    # the mask expects canonical input: unique rows, ascending total degree
    for _ in range(60):
        rows = canonical_rows(_random_rows(rng))
        mask = kernels.antichain_mask(rows)
        kept = {tuple(int(e) for e in r) for r in rows[np.asarray(mask, bool)]}
        assert kept == ref_minimal_rows(rows)


def test_backends_agree_on_antichain(rng):
    for _ in range(80):
        rows = canonical_rows(_random_rows(rng))
        a = np.asarray(kernels._antichain_mask_numpy(rows), bool)
        b = np.asarray(kernels._antichain_mask_loops(rows), bool)
        assert (a == b).all()
        if kernels._antichain_mask_numba is not None:
            c = np.asarray(kernels._antichain_mask_numba(rows), bool)
            assert (a == c).all()


def test_backends_agree_on_member_mask(rng):
    for _ in range(80):
        gens = _random_rows(rng, max_n=4)
        pts = rng.integers(0, 5, size=(10, gens.shape[1])).astype(np.int64)
        a = np.asarray(kernels._member_mask_numpy(gens, pts), bool)
        b = np.asarray(kernels._member_mask_loops(gens, pts), bool)
        assert (a == b).all()
        if kernels._member_mask_numba is not None:
            c = np.asarray(kernels._member_mask_numba(gens, pts), bool)
            assert (a == c).all()
        for point, hit in zip(pts, a):
            assert hit == any((g <= point).all() for g in gens)


def test_backends_agree_on_any_divides(rng):
    for _ in range(80):
        gens = _random_rows(rng, max_n=4)
        f = rng.integers(0, 5, size=gens.shape[1]).astype(np.int64)
        a = bool(kernels._any_divides_numpy(gens, f))
        b = bool(kernels._any_divides_loops(gens, f))
        assert a == b
        assert a == any((g <= f).all() for g in gens)
        if kernels._any_divides_numba is not None:
            assert a == bool(kernels._any_divides_numba(gens, f))


def test_empty_inputs():
    empty = np.zeros((0, 3), dtype=np.int64)
    row = np.array([[1, 0, 2]], dtype=np.int64)
    assert kernels.antichain_mask(empty).shape == (0,)
    assert kernels.member_mask(empty, row).tolist() == [False]
    assert not kernels.any_divides(empty, row[0])
    kernels.warmup()


def _backend_in_subprocess(flag):
    env = dict(os.environ, VNUMBER_KERNELS=flag)
    return subprocess.run(
        [sys.executable, "-c", "import vnumber.kernels as k; print(k.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_env_flag_selects_numpy():
    proc = _backend_in_subprocess("numpy")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "numpy"


def test_env_flag_selects_numba():
    pytest.importorskip("numba")
    proc = _backend_in_subprocess("numba")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "numba"


def test_env_flag_rejects_unknown_value():
    proc = _backend_in_subprocess("gpu")
    assert proc.returncode != 0
    assert "VNUMBER_KERNELS" in proc.stderr
