"""Hot-loop kernels with import-time backend selection.

The compiled Cython extension is used when present; otherwise (or when the
environment variable ``STEMCERT_PURE`` is set to a non-empty value other
than ``0``) the NumPy fallback is selected.  Both backends implement the
same contracts: Gauss double sums agree within 1e-12 and the conjugacy
search returns the identical lexicographic-first witness.
"""

from __future__ import annotations

import os

_force_pure = os.environ.get("STEMCERT_PURE", "").strip() not in ("", "0")

if not _force_pure:
    try:
        from ._core import gauss_linking_sum, search_diagonalizer

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build toolchain
        from .fallback import gauss_linking_sum, search_diagonalizer

        BACKEND = "python"
else:
    from .fallback import gauss_linking_sum, search_diagonalizer

    BACKEND = "python"

__all__ = ["BACKEND", "gauss_linking_sum", "search_diagonalizer", "get_backend"]


def get_backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"python"``."""
    return BACKEND
