"""Backend parity: the compiled kernels and the pure-Python fallback must be
interchangeable."""

import os
import subprocess
import sys

import numpy as np
import pytest

from stemcert import _kernels
from stemcert._kernels import fallback
from stemcert.hopf import fiber_curve, unlinked_control

compiled = pytest.importorskip(
    "stemcert._kernels._core", reason="compiled kernels unavailable"
)


def segment_data(seed=0, samples=200):
    rng = np.random.default_rng(seed)
    a = fiber_curve([0.0, 0.0, 1.0], samples=samples)
    b = fiber_curve([0.0, 0.0, -1.0], samples=samples)
    # project both to R^3 by dropping the last coordinate and separating
    pts_a = a.points[:, :3] + rng.normal(scale=1e-3, size=a.points[:, :3].shape)
    pts_a[-1] = pts_a[0]
    pts_b = b.points[:, :3] + np.array([3.0, 0.0, 0.0])
    mids_a = np.ascontiguousarray(0.5 * (pts_a[:-1] + pts_a[1:]))
    segs_a = np.ascontiguousarray(pts_a[1:] - pts_a[:-1])
    mids_b = np.ascontiguousarray(0.5 * (pts_b[:-1] + pts_b[1:]))
    segs_b = np.ascontiguousarray(pts_b[1:] - pts_b[:-1])
    return mids_a, segs_a, mids_b, segs_b


def test_active_backend_reports_itself():
    if os.environ.get("STEMCERT_PURE", "0") not in ("", "0"):
        assert _kernels.get_backend() == "python"
    else:
        assert _kernels.get_backend() == "compiled"  # the extension built here


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_linking_sum_parity(seed):
    data = segment_data(seed)
    fast = compiled.gauss_linking_sum(*data)
    slow = fallback.gauss_linking_sum(*data)
    assert abs(fast - slow) <= 1e-12


def test_linking_sum_parity_on_control_circles():
    a, b = unlinked_control(samples=128)
    mids_a, segs_a = a.segments()
    mids_b, segs_b = b.segments()
    fast = compiled.gauss_linking_sum(mids_a, segs_a, mids_b, segs_b)
    slow = fallback.gauss_linking_sum(mids_a, segs_a, mids_b, segs_b)
    assert abs(fast - slow) <= 1e-12


@pytest.mark.parametrize(
    "m00,c,m11,bound",
    [
        (2, 0, 4, 3),
        (2, 2, 4, 5),
        (2, 14, 4, 7),
        (4, 12, 16, 10),
        (2, 1, 4, 20),  # no witness: modulus 2 does not divide 1
        (4, 6, 16, 20),  # no witness: modulus 12 does not divide 6
    ],
)
def test_search_parity_identical_witnesses(m00, c, m11, bound):
    fast = compiled.search_diagonalizer(m00, c, m11, bound)
    slow = fallback.search_diagonalizer(m00, c, m11, bound)
    assert fast == slow  # both the existence and the exact first witness


def test_search_witness_is_lexicographic_first():
    # Determinism contract: the first (p, q, r, s) in lexicographic order.
    # For the diagonal matrix diag(2, 4) with bound 2, off-diagonals vanish
    # iff q = 0 and r = 0 (given p, s nonzero); |det| = 1 then forces
    # p, s in {-1, 1}, so the scan finds (-1, 0, 0, -1) first.
    witness = fallback.search_diagonalizer(2, 0, 4, 2)
    assert witness == (-1, 0, 0, -1)
    assert witness == compiled.search_diagonalizer(2, 0, 4, 2)


def test_pure_python_override_via_environment():
    code = (
        "from stemcert._kernels import get_backend; print(get_backend())"
    )
    env = dict(os.environ, STEMCERT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


def test_override_disabled_values():
    for value in ("", "0"):
        env = dict(os.environ, STEMCERT_PURE=value)
        out = subprocess.run(
            [
                sys.executable,
                "-c",
                "from stemcert._kernels import get_backend; print(get_backend())",
            ],
            env=env,
            capture_output=True,
            text=True,
        )
        assert out.stdout.strip() == "compiled"
