"""Independent numerical checks for the radius computations.

Everything here re-derives its verdict from function evaluations on
grids or random samples; nothing consults the closed-form margin
functions or root finders, so a bug there cannot vouch for itself.
Only the parameter dataclasses are shared, as plain data.

All checks are necessary-condition tests: a pass means no counterexample
was found at the sampled resolution, not a proof.  A failed report
always carries a concrete witness point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .polyfunc import PolyAnalyticFn
from .radii import BoundProfile, DerivAll, DerivNormalized, MixedDerivModulus, ModulusAll
from .series import TruncatedTaylorSeries

_PAIR_BLOCK = 256


@dataclass(frozen=True)
class GridSpec:
    """Polar sampling resolution for disk-based checks."""

    radial_count: int = 32
    angular_count: int = 64
    margin: float = 1e-9

    def __post_init__(self) -> None:
        if self.radial_count < 8 or self.angular_count < 8:
            raise DomainError("grid needs at least 8 radial and 8 angular samples")
        if not self.margin >= 0.0:
            raise DomainError(f"grid margin must be nonnegative, got {self.margin:g}")


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    passed: bool
    measured_margin: float
    witness: tuple[complex, ...] | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise DomainError("a failed report must carry a witness")


def _disk_grid(r: float, grid: GridSpec) -> np.ndarray:
    radii = r * np.arange(1, grid.radial_count + 1) / grid.radial_count
    angles = 2.0 * np.pi * np.arange(grid.angular_count) / grid.angular_count
    pts = radii[:, None] * np.exp(1j * angles)[None, :]
    return pts.ravel()


def _eval_at(fn: Callable[[complex], complex], pts: np.ndarray) -> np.ndarray:
    return np.array([fn(complex(z)) for z in pts], dtype=complex)


def univalence_grid_check(
    fn: Callable[[complex], complex],
    r: float,
    grid: GridSpec = GridSpec(),
    extra_points: Sequence[complex] = (),
) -> VerificationReport:
    """Pairwise injectivity scan on a polar grid inside |z| < r.

    Measures min |F(z) - F(w)| / |z - w| over all grid pairs; passes iff
    that ratio stays at or above the grid margin.  extra_points join the
    grid, which lets a caller plant a suspected collision.
    """
    if not 0.0 < r:
        raise DomainError(f"univalence check needs r > 0, got {r:g}")
    pts = _disk_grid(r, grid)
    if extra_points:
        pts = np.concatenate([pts, np.asarray(list(extra_points), dtype=complex)])
    vals = _eval_at(fn, pts)
    n = len(pts)
    best = np.inf
    best_pair = (pts[0], pts[0])
    for start in range(0, n, _PAIR_BLOCK):
        stop = min(start + _PAIR_BLOCK, n)
        dz = np.abs(pts[start:stop, None] - pts[None, :])
        dv = np.abs(vals[start:stop, None] - vals[None, :])
        # keep the global upper triangle only, and skip near-coincident nodes
        cols = np.arange(n)[None, :]
        rows = np.arange(start, stop)[:, None]
        mask = (cols > rows) & (dz > 1e-15)
        if not mask.any():
            continue
        ratio = np.where(mask, dv / np.where(dz > 0, dz, 1.0), np.inf)
        idx = np.unravel_index(np.argmin(ratio), ratio.shape)
        if ratio[idx] < best:
            best = float(ratio[idx])
            best_pair = (complex(pts[start + idx[0]]), complex(pts[idx[1]]))
    passed = bool(best >= grid.margin)
    return VerificationReport(
        check_name="univalence-grid",
        passed=passed,
        measured_margin=best,
        witness=None if passed else best_pair,
        note=f"min difference quotient over {n} nodes",
    )


def schlicht_coverage_check(
    fn: Callable[[complex], complex],
    rho: float,
    sigma: float,
    boundary_samples: int = 512,
    margin: float = 1e-9,
) -> VerificationReport:
    """Checks the image of |z| < rho covers the disk of radius sigma.

    For a univalent map with fn(0) = 0 the image boundary is the image of
    the circle |z| = rho, so coverage holds iff min |fn| on that circle
    is at least sigma.  Requires fn(0) = 0 up to 1e-12.
    """
    if not (0.0 < rho and 0.0 < sigma):
        raise DomainError(f"coverage check needs rho > 0 and sigma > 0, got {rho:g}, {sigma:g}")
    origin = abs(fn(0j))
    if origin > 1e-12:
        raise DomainError(f"coverage check needs fn(0) = 0, got |fn(0)| = {origin:.3g}")
    angles = 2.0 * np.pi * np.arange(boundary_samples) / boundary_samples
    pts = rho * np.exp(1j * angles)
    vals = np.abs(_eval_at(fn, pts))
    k = int(np.argmin(vals))
    measured = float(vals[k]) - sigma
    passed = bool(measured >= -margin)
    return VerificationReport(
        check_name="schlicht-coverage",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(pts[k]),),
        note=f"min boundary modulus {float(vals[k]):.12g} against target {sigma:.12g}",
    )


def deriv_bound_check(
    series: TruncatedTaylorSeries,
    bound: float,
    grid: GridSpec = GridSpec(),
) -> VerificationReport:
    """Checks |series'(z)| < bound on a grid approaching |z| = 1."""
    if not bound > 0.0:
        raise DomainError(f"derivative bound must be positive, got {bound:g}")
    from .series import series_derivative, series_eval

    deriv = series_derivative(series)
    pts = _disk_grid(1.0 - 1e-3, grid)
    vals = np.abs(np.array([series_eval(deriv, complex(z)) for z in pts]))
    k = int(np.argmax(vals))
    worst = float(vals[k])
    measured = bound - worst
    passed = bool(measured >= 0.0)
    return VerificationReport(
        check_name="deriv-bound",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(pts[k]),),
        note=f"max |derivative| {worst:.12g} against bound {bound:.12g}",
    )


def coefficient_bound_check(
    series: TruncatedTaylorSeries,
    m: float,
    margin: float = 1e-9,
) -> VerificationReport:
    """Checks |c_n| <= M - 1/M for n >= 2 on a normalized bounded map's series."""
    if not m >= 1.0:
        raise DomainError(f"modulus bound must satisfy M >= 1, got {m:g}")
    c = series.coeffs
    if abs(c[0]) > 1e-12 or abs(c[1] - 1.0) > 1e-12:
        raise DomainError("coefficient check needs a normalized series: c0 = 0, c1 = 1")
    limit = m - 1.0 / m
    worst = -np.inf
    worst_n = 2
    for n in range(2, len(c)):
        excess = abs(c[n]) - limit
        if excess > worst:
            worst = excess
            worst_n = n
    if len(c) <= 2:
        worst = -limit
    measured = -worst
    passed = bool(measured >= -margin)
    return VerificationReport(
        check_name="coefficient-bound",
        passed=passed,
        measured_margin=float(measured),
        witness=None if passed else (complex(worst_n),),
        note=f"limit M - 1/M = {limit:.12g}",
    )


def distortion_check(
    h: Callable[[complex], complex],
    lam: float,
    r: float,
    pair_samples: int = 2000,
    seed: int = 0,
    margin: float = 1e-6,
) -> VerificationReport:
    """Checks difference quotients of h inside |z| < r against the distortion floor.

    For a holomorphic h with |h'(0)| = 1 and |h'| < lam on the unit disk,
    difference quotients in |z| < r stay at or above
    lam (1 - lam r)/(lam - r).  Quotients are sampled at seeded random pairs.
    """
    if not lam > 1.0:
        raise DomainError(f"distortion check needs lam > 1, got {lam:g}")
    if not 0.0 < r < 1.0 / lam:
        raise DomainError(f"distortion check needs 0 < r < 1/lam, got r = {r:g}")
    h1 = (h(complex(1e-7)) - h(complex(-1e-7))) / 2e-7
    if abs(h1 - 1.0) > 1e-5:
        raise DomainError(f"distortion check needs h'(0) = 1, measured {h1:.6g}")
    rng = np.random.default_rng(seed)
    u = np.sqrt(rng.uniform(size=2 * pair_samples))
    t = rng.uniform(0.0, 2.0 * np.pi, size=2 * pair_samples)
    pts = r * u * np.exp(1j * t)
    a, bpts = pts[:pair_samples], pts[pair_samples:]
    keep = np.abs(a - bpts) > 1e-12
    a, bpts = a[keep], bpts[keep]
    quot = np.abs(_eval_at(h, a) - _eval_at(h, bpts)) / np.abs(a - bpts)
    bound = lam * (1.0 - lam * r) / (lam - r)
    k = int(np.argmin(quot))
    measured = float(quot[k]) - bound
    passed = bool(measured >= -margin)
    return VerificationReport(
        check_name="distortion",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(a[k]), complex(bpts[k])),
        note=f"min quotient {float(quot[k]):.12g} against floor {bound:.12g}",
    )


def min_boundary_modulus_check(
    h: Callable[[complex], complex],
    lam: float,
    r: float,
    samples: int = 512,
    margin: float = 1e-9,
) -> VerificationReport:
    """Checks min |h| on |z| = r against the growth floor for derivative-bounded maps."""
    if not lam > 1.0:
        raise DomainError(f"boundary-modulus check needs lam > 1, got {lam:g}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"boundary-modulus check needs 0 < r < 1, got {r:g}")
    floor = lam * lam * r + (lam**3 - lam) * np.log1p(-r / lam)
    angles = 2.0 * np.pi * np.arange(samples) / samples
    pts = r * np.exp(1j * angles)
    vals = np.abs(_eval_at(h, pts))
    k = int(np.argmin(vals))
    measured = float(vals[k]) - floor
    passed = bool(measured >= -margin)
    return VerificationReport(
        check_name="min-boundary-modulus",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(pts[k]),),
        note=f"min modulus {float(vals[k]):.12g} against floor {floor:.12g}",
    )


def exp_disk_check(sigma: float, samples: int = 10000, seed: int = 0) -> VerificationReport:
    """Checks the disk centered at cosh(sigma) of radius sinh(sigma) sits in exp of |w| < sigma.

    Draws uniform samples from that disk and requires every principal
    logarithm to land strictly inside |w| < sigma.  Meaningful only for
    0 < sigma < 1, where the disk stays in the right half plane.
    """
    if not 0.0 < sigma < 1.0:
        raise DomainError(f"exp-disk check needs 0 < sigma < 1, got {sigma:g}")
    rng = np.random.default_rng(seed)
    u = np.sqrt(rng.uniform(size=samples))
    t = rng.uniform(0.0, 2.0 * np.pi, size=samples)
    w = np.cosh(sigma) + np.sinh(sigma) * u * np.exp(1j * t)
    logs = np.abs(np.log(w))
    k = int(np.argmax(logs))
    measured = sigma - float(logs[k])
    passed = bool(measured > 0.0)
    return VerificationReport(
        check_name="exp-disk",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(w[k]),),
        note=f"max |log w| {float(logs[k]):.12g} against sigma {sigma:.12g}",
    )


def monotonicity_check(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    samples: int = 1000,
) -> VerificationReport:
    """Checks g decreases strictly at consecutive sample points on [lo, hi]."""
    if not lo < hi:
        raise DomainError(f"monotonicity check needs lo < hi, got [{lo:g}, {hi:g}]")
    xs = np.linspace(lo, hi, samples)
    vals = np.array([g(float(x)) for x in xs])
    drops = vals[:-1] - vals[1:]
    k = int(np.argmin(drops))
    measured = float(drops[k])
    passed = bool(measured > 0.0)
    return VerificationReport(
        check_name="monotonicity",
        passed=passed,
        measured_margin=measured,
        witness=None if passed else (complex(xs[k]), complex(xs[k + 1])),
        note=f"smallest consecutive drop over {samples} samples",
    )


def _component_checks(b: BoundProfile, fn: PolyAnalyticFn, grid: GridSpec) -> list[str]:
    from .series import series_eval

    problems: list[str] = []
    if isinstance(b, DerivAll):
        for k, (comp, bound) in enumerate(zip(fn.components, (b.lambda0, *b.lambdas))):
            if bound == 0.0:
                worst = max(abs(series_eval(comp, complex(z))) for z in _disk_grid(1.0 - 1e-3, grid))
                if worst > grid.margin:
                    problems.append(f"component {k} should vanish, max modulus {worst:.3g}")
                continue
            report = deriv_bound_check(comp, bound, grid)
            if not report.passed:
                problems.append(f"component {k} derivative exceeds {bound:g} by {-report.measured_margin:.3g}")
    elif isinstance(b, DerivNormalized):
        lead = fn.components[0].coeffs
        expected = (0j, 1 + 0j)
        if lead[: len(expected)] != expected or any(c != 0j for c in lead[2:]):
            problems.append("leading component is not the identity series")
        for k, (comp, bound) in enumerate(zip(fn.components[1:], b.lambdas), start=1):
            report = deriv_bound_check(comp, bound, grid) if bound > 0.0 else None
            if report is not None and not report.passed:
                problems.append(f"component {k} derivative exceeds {bound:g} by {-report.measured_margin:.3g}")
    elif isinstance(b, (ModulusAll, MixedDerivModulus)):
        bounds = b.ms if isinstance(b, ModulusAll) else (b.lam, *b.ms)
        for k, (comp, bound) in enumerate(zip(fn.components, bounds)):
            if isinstance(b, MixedDerivModulus) and k == 0:
                report = deriv_bound_check(comp, bound, grid)
                if not report.passed:
                    problems.append(f"component 0 derivative exceeds {bound:g} by {-report.measured_margin:.3g}")
                continue
            worst = max(abs(series_eval(comp, complex(z))) for z in _disk_grid(1.0 - 1e-3, grid))
            if worst > bound + grid.margin:
                problems.append(f"component {k} modulus exceeds {bound:g} by {worst - bound:.3g}")
    return problems


def hypothesis_audit(fn: PolyAnalyticFn, b: BoundProfile, grid: GridSpec = GridSpec()) -> VerificationReport:
    """Checks fn satisfies the normalization and bound hypotheses encoded in b.

    Every variant requires each component to vanish at 0 and the
    relevant normalization of the leading coefficient; the per-component
    bound checks depend on the profile type.
    """
    expected_order = b.order if isinstance(b, (DerivAll, DerivNormalized)) else len(b.ms) + (
        1 if isinstance(b, MixedDerivModulus) else 0
    )
    if fn.order != expected_order:
        raise DomainError(f"profile expects order {expected_order}, function has order {fn.order}")
    problems: list[str] = []
    for k, comp in enumerate(fn.components):
        if abs(comp.coeffs[0]) > 1e-12:
            problems.append(f"component {k} does not vanish at 0")
    if isinstance(b, (ModulusAll, MixedDerivModulus)):
        for k, comp in enumerate(fn.components):
            if abs(comp.coeffs[1] - 1.0) > 1e-12:
                problems.append(f"component {k} linear coefficient is not 1")
    else:
        if abs(fn.components[0].coeffs[1] - 1.0) > 1e-12:
            problems.append("leading component linear coefficient is not 1")
    problems.extend(_component_checks(b, fn, grid))
    passed = not problems
    return VerificationReport(
        check_name="hypothesis-audit",
        passed=passed,
        measured_margin=0.0 if passed else -float(len(problems)),
        witness=None if passed else (complex(len(problems)),),
        note="; ".join(problems) if problems else "all hypotheses hold at the sampled resolution",
    )
