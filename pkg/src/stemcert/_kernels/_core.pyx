# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Semantics match ``fallback.py``: identical deterministic segment order for
the Gauss double sum and identical lexicographic first-witness rule for the
conjugacy search.
"""

from libc.math cimport sqrt


def gauss_linking_sum(double[:, ::1] mid_a, double[:, ::1] seg_a,
                      double[:, ::1] mid_b, double[:, ::1] seg_b):
    """Midpoint-rule double sum of the Gauss linking integrand."""
    cdef Py_ssize_t na = mid_a.shape[0]
    cdef Py_ssize_t nb = mid_b.shape[0]
    cdef Py_ssize_t i, j
    cdef double dx, dy, dz, cx, cy, cz, d2, total
    total = 0.0
    for i in range(na):
        for j in range(nb):
            dx = mid_a[i, 0] - mid_b[j, 0]
            dy = mid_a[i, 1] - mid_b[j, 1]
            dz = mid_a[i, 2] - mid_b[j, 2]
            cx = seg_a[i, 1] * seg_b[j, 2] - seg_a[i, 2] * seg_b[j, 1]
            cy = seg_a[i, 2] * seg_b[j, 0] - seg_a[i, 0] * seg_b[j, 2]
            cz = seg_a[i, 0] * seg_b[j, 1] - seg_a[i, 1] * seg_b[j, 0]
            d2 = dx * dx + dy * dy + dz * dz
            total += (cx * dx + cy * dy + cz * dz) / (d2 * sqrt(d2))
    return total


def search_diagonalizer(long long m00, long long c, long long m11, int bound):
    """First unit-determinant integral base change making
    ``[[m00, 0], [c, m11]]`` diagonal, scanning ``(p, q, r, s)`` in
    lexicographic order over ``[-bound, bound]^4``; ``None`` if none exists.
    """
    cdef long long p, q, r, s, det, u01, u10
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            u01 = -(p * m00 + q * c) * q + q * m11 * p
            if u01 != 0:
                continue
            for r in range(-bound, bound + 1):
                for s in range(-bound, bound + 1):
                    det = p * s - q * r
                    if det != 1 and det != -1:
                        continue
                    u10 = (r * m00 + s * c) * s - s * m11 * r
                    if u10 == 0:
                        return (p, q, r, s)
    return None
