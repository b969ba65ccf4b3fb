"""Randomized exploration of the class through its generator representation.

Candidates are polynomials phi with boundary sup at most 1; each encodes
the member f = z + (1/2) z * integral phi, whose low coefficients are
closed-form functions of phi's coefficients.  Hill climbing perturbs the
phi coefficients with Gaussian noise, renormalizes, and keeps improving
steps, one coefficient per step; once a quarter-budget drought of accepted
moves sets in, the step width halves on every further rejection until an
acceptance ends the drought.  Restart seeds are spawned from the master
seed, so a run is reproducible and independent of restart scheduling.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .coeffbounds import (
    INVERSE_BOUNDS,
    bound_an,
    bound_fs,
    bound_fs_kroot,
    _toeplitz_bound,
    inverse_b234,
)
from .funcrep import SeriesFunction
from .omega import BoundedAnalytic, from_phi
from .series import ComplexSeries, format_complex

__all__ = [
    "SearchConfig",
    "SearchResult",
    "UnknownTarget",
    "random_member",
    "maximize_functional",
    "parse_target",
]

# a best value this far above the class bound is a soundness finding
VIOLATION_TOL = 1e-9


class UnknownTarget(ValueError):
    """Search target id not recognized."""


@dataclass(frozen=True)
class SearchConfig:
    """Search budget and target; defaults give the standard desk-scale run."""

    target: str = "a2"
    seed: int = 0
    restarts: int = 32
    steps_per_restart: int = 2000
    phi_degree: int = 8
    step_scale: float = 0.15

    def __post_init__(self):
        if not (0.0 < self.step_scale <= 1.0):
            raise ValueError(f"step_scale must lie in (0, 1], got {self.step_scale}")
        if self.restarts < 1 or self.steps_per_restart < 1 or self.phi_degree < 0:
            raise ValueError("restarts, steps_per_restart must be >= 1; "
                             "phi_degree >= 0")


@dataclass(frozen=True)
class SearchResult:
    """Best functional value found, the class bound, and the winning phi."""

    target: str
    best_value: float
    paper_bound: float
    best_phi: ComplexSeries
    trace: list[tuple[int, float]] = field(repr=False)

    def gap(self) -> float:
        return self.paper_bound - self.best_value


def _coeff_a(phi: np.ndarray, n: int) -> complex:
    """a_n of the generated member: phi_{n-2} / (2(n-1)), zero beyond phi."""
    j = n - 2
    if j < 0 or j >= len(phi):
        return 0j
    return phi[j] / (2.0 * (n - 1))


def parse_target(text: str):
    """Resolve a target id to (name, bound, evaluator over phi coefficients).

    Ids: aN / an:N, fs:MU, fsk:K,MU, b2, b3, b4, t2:N, t3:1, t3:2.
    MU accepts a complex literal like 0.5 or 1-0.5i.
    """
    from .series import _parse_complex

    t = text.strip().lower()
    head, _, rest = t.partition(":")

    def a234(phi):
        return _coeff_a(phi, 2), _coeff_a(phi, 3), _coeff_a(phi, 4)

    if head in ("a2", "a3", "a4") and not rest:
        head, rest = "an", head[1:]
    if head == "an":
        try:
            n = int(rest)
        except ValueError:
            raise UnknownTarget(f"bad coefficient target {text!r}") from None
        if n < 2:
            raise UnknownTarget(f"coefficient target needs n >= 2, got {n}")
        return f"an:{n}", bound_an(n), lambda phi: abs(_coeff_a(phi, n))
    if head == "fs":
        try:
            mu = _parse_complex(rest)
        except ValueError:
            raise UnknownTarget(f"fs needs a complex mu, got {text!r}") from None
        return (f"fs:{format_complex(mu)}", bound_fs(mu),
                lambda phi: abs(_coeff_a(phi, 3) - mu * _coeff_a(phi, 2) ** 2))
    if head == "fsk":
        parts = [p for p in rest.split(",") if p.strip()]
        if len(parts) not in (2, 3):
            raise UnknownTarget(f"fsk needs 'k,mu' or 'k,re,im', got {text!r}")
        try:
            k = int(parts[0])
        except ValueError:
            raise UnknownTarget(f"bad root-transform target {text!r}") from None
        if k < 1:
            raise UnknownTarget(f"fsk needs k >= 1, got {k}")
        try:
            if len(parts) == 2:
                mu = _parse_complex(parts[1])
            else:
                mu = complex(_parse_complex(parts[1]).real,
                             _parse_complex(parts[2]).real)
        except ValueError:
            raise UnknownTarget(f"bad mu in root-transform target {text!r}") from None

        def fsk_val(phi, k=k, mu=mu):
            a2, a3, _ = a234(phi)
            bk1 = a2 / k
            b2k1 = a3 / k - (k - 1) * a2 * a2 / (2.0 * k * k)
            return abs(b2k1 - mu * bk1 * bk1)

        return f"fsk:{k}:{format_complex(mu)}", bound_fs_kroot(k, mu), fsk_val
    if head in ("b2", "b3", "b4") and not rest:
        idx = int(head[1])

        def inv_val(phi, idx=idx):
            b = inverse_b234(*a234(phi))
            return abs(b[idx - 2])

        return head, INVERSE_BOUNDS[idx], inv_val
    if head == "t2":
        try:
            n = int(rest)
        except ValueError:
            raise UnknownTarget(f"bad toeplitz target {text!r}") from None
        bound = _toeplitz_bound(2, n)
        return (f"t2:{n}", bound,
                lambda phi: abs(_coeff_a(phi, n) ** 2 - _coeff_a(phi, n + 1) ** 2))
    if head == "t3":
        if rest == "1":
            def t31(phi):
                a2, a3, _ = a234(phi)
                return abs(1.0 - 2.0 * a2**2 + 2.0 * a3 * a2**2 - a3**2)

            return "t3:1", _toeplitz_bound(3, 1), t31
        if rest == "2":
            def t32(phi):
                a2, a3, a4 = a234(phi)
                return abs((a2 - a4) * (a2**2 - 2.0 * a3**2 + a2 * a4))

            return "t3:2", _toeplitz_bound(3, 2), t32
    raise UnknownTarget(f"unknown search target {text!r}")


def _draw_phi(rng: np.random.Generator, degree: int) -> np.ndarray:
    """Coefficients uniform over the complex square, scaled by 1/(degree+1)."""
    scale = 1.0 / (degree + 1)
    re = rng.uniform(-1.0, 1.0, degree + 1)
    im = rng.uniform(-1.0, 1.0, degree + 1)
    return scale * (re + 1j * im)


def _sup_bound(coeffs: np.ndarray) -> float:
    """Certified upper bound for the circle sup of a polynomial.

    |p|^2 is a trigonometric polynomial of degree d, so its maximum over
    N uniform samples undershoots the true one by at most the Riesz factor
    cos(pi d / N); dividing by candidates' _sup_bound therefore never
    leaves a candidate with boundary sup above 1.
    """
    d = max(len(coeffs) - 1, 1)
    n = 4096
    while n < 512 * d:
        n *= 2
    m = float(np.abs(np.fft.fft(coeffs, n=n)).max())
    return m / float(np.cos(np.pi * d / n)) ** 0.5


def _normalized(coeffs: np.ndarray) -> np.ndarray:
    sup = _sup_bound(coeffs)
    return coeffs / sup if sup > 1.0 else coeffs


def random_member(seed: int, phi_degree: int = 8) -> SeriesFunction:
    """One random certified member via a normalized random phi."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    phi = BoundedAnalytic.normalize(ComplexSeries(_draw_phi(rng, phi_degree)))
    return from_phi(phi, order=phi_degree + 2)


def maximize_functional(config: SearchConfig) -> SearchResult:
    """Random-restart hill climbing over normalized phi polynomials."""
    name, bound, evaluate = parse_target(config.target)
    children = np.random.SeedSequence(config.seed).spawn(config.restarts)
    drought_limit = max(1, config.steps_per_restart // 4)

    best_value = -1.0
    best_phi: np.ndarray | None = None
    best_trace: list[tuple[int, float]] = []

    for ss in children:
        rng = np.random.Generator(np.random.PCG64(ss))
        x = _normalized(_draw_phi(rng, config.phi_degree))
        v = evaluate(x)
        width = config.step_scale
        drought = 0
        trace = [(0, float(v))]
        for step in range(1, config.steps_per_restart + 1):
            # one coefficient per step: isotropic full-vector moves are
            # nearly always rejected on the flat-modulus ridge, while
            # single-coordinate moves keep a workable acceptance rate
            j = int(rng.integers(len(x)))
            cand = x.copy()
            cand[j] += width * complex(rng.standard_normal(),
                                       rng.standard_normal())
            cand = _normalized(cand)
            cv = evaluate(cand)
            if cv > v:
                x, v = cand, cv
                trace.append((step, float(cv)))
                drought = 0
            else:
                # a drought persists until an accepted move ends it, so once
                # past the limit the width keeps halving each rejected step
                drought += 1
                if drought >= drought_limit:
                    width = max(width * 0.5, 1e-12)
        if v > best_value:
            best_value, best_phi, best_trace = float(v), x, trace

    if best_value > bound + VIOLATION_TOL:
        warnings.warn(
            f"search exceeded the class bound for {name}: "
            f"{best_value} > {bound} (soundness finding)",
            stacklevel=2,
        )
    return SearchResult(target=name, best_value=best_value, paper_bound=bound,
                        best_phi=ComplexSeries(best_phi), trace=best_trace)
