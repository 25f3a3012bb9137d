"""Extremal functions and sharpness witnesses for the radius bounds.

Closed forms are evaluated exactly; series materializations exist so the
verification oracles can inspect coefficients and component derivatives.
``collision_pair`` reproduces the boundary-crossing argument that breaks
univalence just past rho: the real-axis profile of the derivative-family
extremal increases to sigma at rho and decreases afterwards, so a point
x1 slightly beyond rho shares its value with a mirror point x2 < rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketError, DomainError
from .polyfunc import PolyAnalyticFn
from .radii import DerivAll, DerivNormalized, _bisect_decreasing, deriv_radii
from .series import DEFAULT_DEGREE, TruncatedTaylorSeries, principal_log

FAMILIES = ("deriv", "normalized", "unit_modulus", "classical", "coeff")

_DEGENERATE_TOL = 1e-13
_SERIES_CAP = 4096


@dataclass(frozen=True)
class ExtremalSpec:
    """Selector for one extremal family plus its parameters.

    family          parameters
    --------------  -------------------------------------------
    deriv           profile: DerivAll
    normalized      profile: DerivNormalized
    unit_modulus    order: p >= 2 (all modulus bounds equal 1)
    classical       bound: M > 1
    coeff           bound: M > 1 and power: n >= 2
    """

    family: str
    profile: DerivAll | DerivNormalized | None = None
    order: int | None = None
    bound: float | None = None
    power: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown extremal family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "deriv" and not isinstance(self.profile, DerivAll):
            raise DomainError("the deriv family needs a DerivAll profile")
        if self.family == "normalized" and not isinstance(self.profile, DerivNormalized):
            raise DomainError("the normalized family needs a DerivNormalized profile")
        if self.family == "unit_modulus" and (self.order is None or self.order < 2):
            raise DomainError("the unit_modulus family needs an order p >= 2")
        if self.family in ("classical", "coeff"):
            if self.bound is None or not self.bound > 1.0:
                raise DomainError("bounded-ratio extremals need a modulus bound M > 1")
        if self.family == "coeff" and (self.power is None or self.power < 2):
            raise DomainError("the coeff family needs a power n >= 2")


def _check_disk(z: complex) -> complex:
    z = complex(z)
    if abs(z) > 1.0 + 1e-9:
        raise DomainError(f"evaluation point must satisfy |z| <= 1, got |z| = {abs(z):.6g}")
    return z


def _deriv_value(b: DerivAll, z: complex) -> complex:
    lam0 = b.lambda0
    acc = lam0 * lam0 * z + (lam0**3 - lam0) * principal_log(1.0 - z / lam0)
    zbar = z.conjugate()
    power = zbar
    for lam in b.lambdas:
        acc -= lam * power * z
        power *= zbar
    return acc


def _normalized_value(b: DerivNormalized, z: complex) -> complex:
    acc = complex(z)
    zbar = z.conjugate()
    power = zbar
    for lam in b.lambdas:
        acc -= lam * power * z
        power *= zbar
    return acc


def _unit_modulus_value(p: int, z: complex) -> complex:
    acc = complex(z)
    zbar = z.conjugate()
    power = zbar
    for _ in range(1, p):
        acc += power * z
        power *= zbar
    return acc


def _bounded_ratio_value(m: float, n: int, z: complex) -> complex:
    u = z ** (n - 1)
    return m * z * (1.0 - m * u) / (m - u)


def extremal_eval(spec: ExtremalSpec, z: complex) -> complex:
    """Closed-form value of the selected extremal at z, |z| <= 1."""
    z = _check_disk(z)
    if spec.family == "deriv":
        return _deriv_value(spec.profile, z)
    if spec.family == "normalized":
        return _normalized_value(spec.profile, z)
    if spec.family == "unit_modulus":
        return _unit_modulus_value(spec.order, z)
    if spec.family == "classical":
        return _bounded_ratio_value(spec.bound, 2, z)
    return _bounded_ratio_value(spec.bound, spec.power, z)


def _deriv_component_degree(lam0: float, radius: float = 1.0 - 1e-3, tol: float = 1e-13) -> int:
    q = radius / lam0
    scale = lam0**3 - lam0
    degree = DEFAULT_DEGREE
    while degree < _SERIES_CAP:
        tail = scale * q ** (degree + 1) / ((degree + 1) * (1.0 - q))
        if tail < tol:
            break
        degree *= 2
    return min(degree, _SERIES_CAP)


def bounded_deriv_component(lam0: float, tol: float = 1e-13) -> TruncatedTaylorSeries:
    """Series of the leading extremal component: unit derivative at 0, |A'| < L0 on U.

    Closed form L0^2 z + (L0^3 - L0) log(1 - z/L0); the truncation degree
    grows as L0 approaches 1 so the tail stays below tol at |z| = 1 - 1e-3.
    """
    if not lam0 > 1.0:
        raise DomainError(f"the component needs a derivative bound above 1, got {lam0:g}")
    degree = _deriv_component_degree(lam0, tol=tol)
    scale = lam0**3 - lam0
    coeffs = [0j, 1 + 0j]
    power = 1.0 / (lam0 * lam0)  # (1/L0)^n, running product
    for n in range(2, degree + 1):
        coeffs.append(complex(-scale * power / n))
        power /= lam0
    return TruncatedTaylorSeries(tuple(coeffs))


def deriv_extremal_fn(b: DerivAll, tol: float = 1e-13) -> PolyAnalyticFn:
    """Series materialization of the deriv-family extremal."""
    comps = [bounded_deriv_component(b.lambda0, tol=tol)]
    comps.extend(TruncatedTaylorSeries((0j, complex(-lam))) for lam in b.lambdas)
    return PolyAnalyticFn.normalized(comps)


def normalized_extremal_fn(b: DerivNormalized) -> PolyAnalyticFn:
    """Series materialization of the Schwarz-case extremal z - sum L_k conj(z)^k z."""
    comps = [TruncatedTaylorSeries((0j, 1 + 0j))]
    comps.extend(TruncatedTaylorSeries((0j, complex(-lam))) for lam in b.lambdas)
    return PolyAnalyticFn.normalized(comps)


def unit_modulus_extremal_fn(p: int) -> PolyAnalyticFn:
    """Series materialization of z + |z|^2 (1 + conj(z) + ... + conj(z)^(p-2))."""
    if p < 1:
        raise DomainError(f"order must be a positive integer, got {p}")
    comps = [TruncatedTaylorSeries((0j, 1 + 0j)) for _ in range(p)]
    return PolyAnalyticFn.normalized(comps)


def coeff_extremal_series(m: float, n: int, degree: int = DEFAULT_DEGREE) -> TruncatedTaylorSeries:
    """Taylor series of the bounded map attaining the coefficient bound at z^n.

    The expansion is z - (M - 1/M) z^n - sum_{j>=2} (M^2-1)/M^j z^((n-1)j+1);
    coefficients decay like M^(1-j), so the default degree keeps the tail
    below 1e-15 on |z| <= 0.99 for M >= 2.
    """
    if not m > 1.0:
        raise DomainError(f"the coefficient extremal needs a modulus bound M > 1, got {m:g}")
    if n < 2:
        raise DomainError(f"the coefficient extremal needs n >= 2, got {n}")
    coeffs = [0j] * (degree + 1)
    coeffs[1] = 1 + 0j
    j = 1
    power = m  # M^j
    while (n - 1) * j + 1 <= degree:
        idx = (n - 1) * j + 1
        if j == 1:
            coeffs[idx] = complex(-(m - 1.0 / m))
        else:
            coeffs[idx] = complex(-(m * m - 1.0) / power)
        j += 1
        power *= m
    return TruncatedTaylorSeries(tuple(coeffs))


def classical_extremal_series(m: float, degree: int = DEFAULT_DEGREE) -> TruncatedTaylorSeries:
    """Taylor series of the classical extremal M z (1 - M z)/(M - z)."""
    return coeff_extremal_series(m, 2, degree)


def real_profile(x: float, b: DerivAll) -> float:
    """Real-axis restriction of the deriv-family extremal.

    Shares the complex evaluation path, so it agrees with
    ``extremal_eval`` on real arguments exactly.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"profile argument must lie in [0, 1], got {x:g}")
    return _deriv_value(b, complex(x)).real


def real_profile_derivative(x: float, b: DerivAll) -> float:
    """Closed-form derivative of the real-axis profile; zero exactly at rho."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"profile argument must lie in [0, 1], got {x:g}")
    lam0 = b.lambda0
    total = lam0 * lam0 - (lam0**3 - lam0) / (lam0 - x)
    for k, lam in enumerate(b.lambdas, start=1):
        total -= (k + 1) * lam * x**k
    return total


def _second_profile_zero(b: DerivAll, rho: float) -> float:
    # the profile decreases from sigma > 0 at rho to a nonpositive value at 1
    zero, _ = _bisect_decreasing(lambda x: real_profile(x, b), rho, 1.0, 0.0)
    return zero


def collision_pair(b: DerivAll, r: float) -> tuple[float, float]:
    """Two abscissae x2 < rho < x1 < r where the extremal takes one value.

    eps starts at half the distance from rho to r, capped at half the
    distance to the profile's second zero when the profile dips
    nonpositive at 1.  A bracket that still lands at the second zero
    within tolerance is degenerate; eps shrinks by half, at most ten
    times, before giving up.
    """
    result = deriv_radii(b)
    rho = result.rho
    if not rho < r <= 1.0:
        raise DomainError(f"collision window needs rho < r <= 1; rho = {rho:.12g}, r = {r:.12g}")
    sigma = real_profile(rho, b)
    eps = 0.5 * (r - rho)
    if real_profile(1.0, b) <= 0.0:
        eps = min(eps, 0.5 * (_second_profile_zero(b, rho) - rho))
    x1 = rho + eps
    gx1 = real_profile(x1, b)
    for _ in range(10):
        if gx1 > _DEGENERATE_TOL:
            break
        eps *= 0.5  # x1 fell at or past the second zero; pull it toward rho
        x1 = rho + eps
        gx1 = real_profile(x1, b)
    if not _DEGENERATE_TOL < gx1 < sigma:
        raise BracketError(
            f"collision bracket degenerate: g(x1) = {gx1:.6g} outside (0, {sigma:.6g}) with eps = {eps:.6g}"
        )
    x2, _ = _bisect_decreasing(lambda x: gx1 - real_profile(x, b), 0.0, rho, 0.0)
    return x1, x2
