"""Boundary-circle extrema, geometric radius search, and the disc automorphism.

Circle extrema are located in two stages: a uniform angular grid (default
4096 points, never fewer than 256) followed by golden-section refinement
inside the bracket around the best sample.  The grid value is a guaranteed
lower bound on a supremum (upper bound on a minimum); refinement only ever
improves it.  Exact ties on the grid resolve to the smallest angle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .funcrep import AnalyticFunction, omega_functional, u_functional

__all__ = [
    "CircleExtremum",
    "RadiusResult",
    "EvaluationFailure",
    "DomainError",
    "NonMonotoneWarning",
    "MIN_GRID",
    "DEFAULT_GRID",
    "PROPERTIES",
    "circle_sup_modulus",
    "circle_min_real",
    "q_map",
    "radius_of_property",
]

MIN_GRID = 256
DEFAULT_GRID = 4096
# golden-section iterations: bracket of width ~2*(2pi/grid) shrinks below 1e-12
REFINE_STEPS = 48
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

# properties understood by radius_of_property; criterion must be >= 0
PROPERTIES = ("starlike", "convex", "close_to_convex", "omega_bound", "u_bound")


class EvaluationFailure(RuntimeError):
    """The functional raised or returned NaN at a sample point."""


class DomainError(ValueError):
    """Argument outside the operation's domain (radius, moebius data)."""


class NonMonotoneWarning(UserWarning):
    """Radius criterion changed sign more than once across the sweep."""


@dataclass(frozen=True)
class CircleExtremum:
    """Extremum of a functional over one circle |z| = radius."""

    radius: float
    angle: float
    value: float
    grid: int
    refined: bool


@dataclass(frozen=True)
class RadiusResult:
    """Largest certified radius for a geometric property, with its bracket."""

    radius: float
    property: str
    bracket: tuple[float, float]
    evaluations: int


def _check_circle_args(r: float, grid: int) -> None:
    if not (0.0 < r <= 1.0):
        raise DomainError(f"circle radius must lie in (0, 1], got {r}")
    if grid < MIN_GRID:
        raise DomainError(f"grid must be >= {MIN_GRID}, got {grid}")


def _sample_circle(g: Callable, r: float, grid: int) -> tuple[np.ndarray, np.ndarray]:
    """Values of g on the uniform angle grid; scalar-only callables get a loop."""
    theta = 2.0 * np.pi * np.arange(grid) / grid
    z = r * np.exp(1j * theta)
    vals = None
    try:
        cand = np.asarray(g(z), dtype=complex)
        if cand.shape == z.shape:
            vals = cand
    except EvaluationFailure:
        raise
    except ArithmeticError as exc:  # pole / zero hit during vector evaluation
        raise EvaluationFailure(f"functional raised on |z| = {r}: {exc}") from exc
    except Exception:
        vals = None  # g is not vectorized; fall through to the loop
    if vals is None:
        vals = np.empty(grid, dtype=complex)
        for k in range(grid):
            try:
                vals[k] = complex(g(complex(z[k])))
            except Exception as exc:  # pole, domain error, ...
                raise EvaluationFailure(
                    f"functional raised at z = {z[k]:.6g}: {exc}"
                ) from exc
    if np.any(np.isnan(vals.real) | np.isnan(vals.imag)):
        k = int(np.argmax(np.isnan(vals.real) | np.isnan(vals.imag)))
        raise EvaluationFailure(f"functional returned NaN at z = {z[k]:.6g}")
    return theta, vals


def _eval_point(g: Callable, z: complex) -> complex:
    try:
        v = complex(g(z))
    except Exception as exc:
        raise EvaluationFailure(f"functional raised at z = {z:.6g}: {exc}") from exc
    if math.isnan(v.real) or math.isnan(v.imag):
        raise EvaluationFailure(f"functional returned NaN at z = {z:.6g}")
    return v


def _golden_max(h: Callable[[float], float], lo: float, hi: float,
                steps: int) -> tuple[float, float]:
    """Golden-section maximizer on [lo, hi]; returns (argmax, max)."""
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = h(x1), h(x2)
    for _ in range(steps):
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = h(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = h(x2)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def _circle_extremum(g: Callable, r: float, grid: int, refine: bool,
                     score: Callable[[np.ndarray], np.ndarray],
                     point_score: Callable[[complex], float],
                     sense: float) -> CircleExtremum:
    """Shared grid+refine driver.  score maps values to the quantity being
    MAXIMIZED after multiplying by sense (+1 max, -1 min)."""
    _check_circle_args(r, grid)
    theta, vals = _sample_circle(g, r, grid)
    target = sense * score(vals)
    k = int(np.argmax(target))  # first occurrence = smallest angle on ties
    best_angle = float(theta[k])
    best = float(target[k])
    refined = False
    if refine:
        dth = 2.0 * np.pi / grid

        def h(t: float) -> float:
            return sense * point_score(_eval_point(g, r * np.exp(1j * t)))

        t_ref, v_ref = _golden_max(h, best_angle - dth, best_angle + dth,
                                   REFINE_STEPS)
        if v_ref > best:
            best_angle, best, refined = t_ref % (2.0 * np.pi), v_ref, True
    return CircleExtremum(radius=r, angle=best_angle, value=sense * best,
                          grid=grid, refined=refined)


def circle_sup_modulus(g: Callable, r: float, grid: int = DEFAULT_GRID,
                       refine: bool = True) -> CircleExtremum:
    """Largest |g| over the circle |z| = r (grid max, golden-refined)."""
    return _circle_extremum(
        g, r, grid, refine,
        score=lambda v: np.abs(v),
        point_score=abs,
        sense=+1.0,
    )


def circle_min_real(g: Callable, r: float, grid: int = DEFAULT_GRID,
                    refine: bool = True) -> CircleExtremum:
    """Smallest Re g over the circle |z| = r (grid min, golden-refined)."""
    return _circle_extremum(
        g, r, grid, refine,
        score=lambda v: v.real,
        point_score=lambda v: v.real,
        sense=-1.0,
    )


def q_map(M: float, a: complex, z):
    """The disc automorphism scaled to |w| = M circles: M(Mz + a)/(M + conj(a) z).

    Maps the closed unit disc onto |w| <= M and the unit circle onto
    |w| = M; q(0) = a.  Needs |a| < M.
    """
    if not (M > 0):
        raise DomainError(f"q_map needs M > 0, got {M}")
    a = complex(a)
    if abs(a) >= M:
        raise DomainError(f"q_map needs |a| < M, got |a| = {abs(a)} >= {M}")
    if np.any(np.abs(z) > 1.0 + 1e-12):
        raise DomainError("q_map argument must satisfy |z| <= 1")
    if isinstance(z, np.ndarray):
        return M * (M * z + a) / (M + np.conj(a) * z)
    w = complex(z)
    return M * (M * w + a) / (M + a.conjugate() * w)


# -- radius search ------------------------------------------------------------


def _criterion(f: AnalyticFunction, prop: str, grid: int) -> Callable[[float], float]:
    """Per-circle criterion m(r); the property holds on |z| < r iff m >= 0
    for all radii up to r (monotone criteria; a sweep cross-checks)."""

    def starlike(z):
        j = f.jet(z)
        return z * j.fp / j.f

    def convex(z):
        j = f.jet(z)
        return 1.0 + z * j.fpp / j.fp

    def ctc(z):
        return f.jet(z).fp

    if prop == "starlike":
        return lambda r: circle_min_real(starlike, r, grid).value
    if prop == "convex":
        return lambda r: circle_min_real(convex, r, grid).value
    if prop == "close_to_convex":
        return lambda r: circle_min_real(ctc, r, grid).value
    if prop == "omega_bound":
        return lambda r: 0.5 - circle_sup_modulus(
            lambda z: omega_functional(f, z), r, grid).value
    if prop == "u_bound":
        return lambda r: 1.0 - circle_sup_modulus(
            lambda z: u_functional(f, z), r, grid).value
    raise DomainError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


def radius_of_property(f: AnalyticFunction, prop: str, tol: float = 1e-6,
                       grid: int = 1024) -> RadiusResult:
    """Largest radius on which a geometric property is certified.

    Bisection on (0, 1) against the per-circle criterion; the returned
    bracket (lo, hi) has the criterion nonnegative at lo, negative at hi,
    and width <= tol.  If the criterion stays nonnegative out to 1 - tol
    the radius is reported as exactly 1.  A closing sweep over 32 radii
    warns (NonMonotoneWarning) when the criterion's sign flips more than
    once, which would make a bisection answer untrustworthy.
    """
    if not (0 < tol < 0.1):
        raise DomainError(f"tol must lie in (0, 0.1), got {tol}")
    m = _criterion(f, prop, grid)
    evals = 0

    def crit(r: float) -> float:
        nonlocal evals
        evals += 1
        return m(r)

    top = 1.0 - tol
    if crit(top) >= 0.0:
        radius, bracket = 1.0, (top, 1.0)
    else:
        lo = tol
        if crit(lo) < 0.0:
            radius, bracket = 0.0, (0.0, lo)
        else:
            hi = top
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                if crit(mid) >= 0.0:
                    lo = mid
                else:
                    hi = mid
            radius, bracket = lo, (lo, hi)

    # sign-structure sweep: one contiguous nonnegative run is expected
    sweep = np.linspace(tol, top, 32)
    signs = [crit(float(r)) >= 0.0 for r in sweep]
    flips = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    if flips > 1:
        warnings.warn(
            f"criterion for {prop!r} changes sign {flips} times across (0,1); "
            "the reported radius assumes a single crossing",
            NonMonotoneWarning,
            stacklevel=2,
        )
    return RadiusResult(radius=radius, property=prop, bracket=bracket,
                        evaluations=evals)
