"""Pure-Python (NumPy) implementations of the hot kernels.

These mirror ``_core.pyx`` exactly: the same deterministic segment order for
the Gauss double sum (results agree with the compiled kernel within 1e-12;
tiny differences come only from floating-point summation order) and the same
lexicographic first-witness rule for the conjugacy search.
"""

from __future__ import annotations

from typing import Optional

import numpy as np


def gauss_linking_sum(
    mid_a: np.ndarray,
    seg_a: np.ndarray,
    mid_b: np.ndarray,
    seg_b: np.ndarray,
) -> float:
    """Midpoint-rule double sum of the Gauss linking integrand.

    ``mid_*`` are segment midpoints, ``seg_*`` the segment vectors; the
    caller divides by ``4*pi``.
    """
    diff = mid_a[:, None, :] - mid_b[None, :, :]
    cross = np.cross(seg_a[:, None, :], seg_b[None, :, :])
    dist2 = np.einsum("ijk,ijk->ij", diff, diff)
    triple = np.einsum("ijk,ijk->ij", cross, diff)
    return float(np.sum(triple / (dist2 * np.sqrt(dist2))))


def search_diagonalizer(
    m00: int, c: int, m11: int, bound: int
) -> Optional[tuple]:
    """First unit-determinant integral base change making
    ``[[m00, 0], [c, m11]]`` diagonal, scanning ``(p, q, r, s)`` in
    lexicographic order over ``[-bound, bound]^4``; ``None`` if none exists.
    """
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    # Lexicographic (r, s) grid: r varies slowest.
    r_grid, s_grid = np.meshgrid(rng, rng, indexing="ij")
    r_flat = r_grid.ravel()
    s_flat = s_grid.ravel()
    # Off-diagonal of P*M*adj(P) below the diagonal depends only on (r, s).
    u10 = (r_flat * m00 + s_flat * c) * s_flat - s_flat * m11 * r_flat
    for p in rng:
        for q in rng:
            # Off-diagonal above the diagonal depends only on (p, q).
            u01 = -(p * m00 + q * c) * q + q * m11 * p
            if u01 != 0:
                continue
            det = p * s_flat - q * r_flat
            ok = (np.abs(det) == 1) & (u10 == 0)
            hits = np.nonzero(ok)[0]
            if hits.size:
                i = int(hits[0])
                return (int(p), int(q), int(r_flat[i]), int(s_flat[i]))
    return None
