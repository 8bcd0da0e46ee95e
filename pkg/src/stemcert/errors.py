"""Exception types shared across the package."""

from __future__ import annotations


class VerificationError(Exception):
    """A mechanically checked invariant failed.

    Raised when independently computed quantities that must agree do not
    (for example the three J-order methods returning different values), or
    when replaying a recorded derivation step fails to reproduce its claim.
    Distinct from ``ValueError``, which signals a caller-side contract
    violation; the CLI maps the two to different exit codes.
    """


class ResamplePole(Exception):
    """Stereographic projection was attempted too close to the pole.

    Callers should pick a different pole (or resample the curve) and retry;
    the projection is singular at the pole itself.
    """
