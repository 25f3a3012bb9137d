"""Poly-analytic function values and Wirtinger-calculus functionals.

An order-p function is stored as its p analytic components A_0..A_{p-1};
the value at z is sum_k conj(z)^k A_k(z).  The structural derivatives

    F_z    = sum_k conj(z)^k A_k'(z)
    F_zbar = sum_k k conj(z)^(k-1) A_k(z)

come straight from the component series; numerical differencing exists
only as a test oracle.  Sense preservation is exposed through the sign of
the Jacobian |F_z|^2 - |F_zbar|^2.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError
from .series import TruncatedTaylorSeries, _require_in_disk, series_derivative, series_eval


@dataclass(frozen=True)
class PolyAnalyticFn:
    components: tuple[TruncatedTaylorSeries, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if not comps:
            raise DomainError("a poly-analytic function needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def order(self) -> int:
        return len(self.components)

    def __call__(self, z: complex) -> complex:
        return poly_eval(self, z)

    @classmethod
    def normalized(cls, components) -> "PolyAnalyticFn":
        """Constructor enforcing A_k(0) = 0 for every k and A_0'(0) = 1."""
        fn = cls(tuple(components))
        for k, comp in enumerate(fn.components):
            if comp.coeffs[0] != 0:
                raise DomainError(f"component {k} must vanish at the origin (c0 = 0)")
        if fn.components[0].coeffs[1] != 1:
            raise DomainError("leading component must have unit derivative at the origin (c1 = 1)")
        return fn


@dataclass(frozen=True)
class LogPAnalyticFn:
    """Product function f = exp(F) for a poly-analytic F with F(0) = 0."""

    log_part: PolyAnalyticFn

    def __post_init__(self) -> None:
        if poly_eval(self.log_part, 0j) != 0:
            raise DomainError("log part must vanish at the origin so the product equals 1 there")

    @property
    def order(self) -> int:
        return self.log_part.order

    def __call__(self, z: complex) -> complex:
        return logp_eval(self, z)


def poly_eval(F: PolyAnalyticFn, z: complex) -> complex:
    z = _require_in_disk(z)
    zbar = z.conjugate()
    acc = 0j
    power = 1 + 0j  # conj(z)^k by running product
    for comp in F.components:
        acc += power * series_eval(comp, z)
        power *= zbar
    return acc


def wirtinger_z(F: PolyAnalyticFn, z: complex) -> complex:
    """d/dz derivative: differentiates components, leaves conj(z)^k alone."""
    z = _require_in_disk(z)
    zbar = z.conjugate()
    acc = 0j
    power = 1 + 0j
    for comp in F.components:
        acc += power * series_eval(series_derivative(comp), z)
        power *= zbar
    return acc


def wirtinger_zbar(F: PolyAnalyticFn, z: complex) -> complex:
    """d/dzbar derivative: kills the analytic parts, lowers conj(z) powers."""
    z = _require_in_disk(z)
    zbar = z.conjugate()
    acc = 0j
    power = 1 + 0j  # conj(z)^(k-1), starting at k = 1
    for k, comp in enumerate(F.components):
        if k >= 1:
            acc += k * power * series_eval(comp, z)
            power *= zbar
    return acc


def _wirtinger_pair(F: PolyAnalyticFn, z: complex) -> tuple[float, float]:
    return abs(wirtinger_z(F, z)), abs(wirtinger_zbar(F, z))


def jacobian(F: PolyAnalyticFn, z: complex) -> float:
    """|F_z|^2 - |F_zbar|^2; positive exactly where F is sense-preserving."""
    fz, fzb = _wirtinger_pair(F, z)
    return fz * fz - fzb * fzb


def lambda_big(F: PolyAnalyticFn, z: complex) -> float:
    fz, fzb = _wirtinger_pair(F, z)
    return fz + fzb


def lambda_small(F: PolyAnalyticFn, z: complex) -> float:
    fz, fzb = _wirtinger_pair(F, z)
    return abs(fz - fzb)


def logp_eval(f: LogPAnalyticFn, z: complex) -> complex:
    return cmath.exp(poly_eval(f.log_part, z))
