"""Complex truncated Taylor series on the closed unit disk.

Every analytic building block in the package is a finite coefficient list
c0..cN evaluated by Horner recurrence.  Series are immutable; operations
return new values.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError

#: Default truncation degree for series built from closed forms whose
#: coefficients decay geometrically (tail below 1e-15 at |z| <= 0.99).
DEFAULT_DEGREE = 64

_DISK_SLACK = 1e-9  # tolerate boundary roundoff in |z| <= 1 checks


def _require_in_disk(z: complex) -> complex:
    z = complex(z)
    if abs(z) > 1.0 + _DISK_SLACK:
        raise DomainError(f"evaluation point must satisfy |z| <= 1, got |z| = {abs(z):.6g}")
    return z


@dataclass(frozen=True)
class TruncatedTaylorSeries:
    """Coefficients c0..cN of an analytic function, degree N >= 1."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise DomainError("a series needs degree >= 1 (at least coefficients c0 and c1)")
        if not all(cmath.isfinite(c) for c in coeffs):
            raise DomainError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def series_eval(s: TruncatedTaylorSeries, z: complex) -> complex:
    """Evaluate sum c_n z^n by Horner recurrence; requires |z| <= 1."""
    z = _require_in_disk(z)
    acc = 0j
    for c in reversed(s.coeffs):
        acc = acc * z + c
    return acc


def series_derivative(s: TruncatedTaylorSeries) -> TruncatedTaylorSeries:
    """Coefficientwise derivative [c1, 2*c2, ...], zero-padded to degree >= 1."""
    coeffs = [n * c for n, c in enumerate(s.coeffs)][1:]
    if len(coeffs) < 2:
        coeffs.append(0j)
    return TruncatedTaylorSeries(tuple(coeffs))


def principal_log(z: complex) -> complex:
    """Principal-branch logarithm, log|z| + i*arg(z) with arg(z) in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("principal_log is undefined at z = 0")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # force arg(-x) = +pi, never -pi
    return cmath.log(z)
