"""Membership verdicts for the two function classes and sufficient conditions.

The defining inequality |z f'(z) - f(z)| < 1/2 lives on the open disc, so a
strict pointwise check can never certify membership numerically.  Instead
the boundary supremum is measured: by the maximum principle, boundary sup
<= threshold certifies the strict inequality inside (boundary equality is
fine, the extremal family sits exactly there).  Non-membership needs an
interior witness, a sampled point whose functional modulus clears the
threshold; the scan reports the worst violator it finds.  Everything in
between is an honest Inconclusive.

The sufficient-condition tests are one-directional: they return Member or
Inconclusive, never NonMember.  The four strict tests require a margin
below the threshold (a statistic exactly at threshold is Inconclusive);
the two second-derivative tests are stated non-strictly and accept
equality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .funcrep import (
    AnalyticFunction,
    BadIndex,
    SeriesFunction,
    ZeroOfF,
    omega_functional,
    u_functional,
)
from .disc import DEFAULT_GRID, circle_sup_modulus, _golden_max
from .series import DEFAULT_ORDER, ComplexSeries

__all__ = [
    "MEMBER",
    "NONMEMBER",
    "INCONCLUSIVE",
    "OMEGA_THRESHOLD",
    "U_THRESHOLD",
    "DEFAULT_TOL",
    "Verdict",
    "BoundedAnalytic",
    "is_member_omega",
    "is_member_u",
    "subordination_check",
    "sufficient_fz_derivative",
    "sufficient_coeff_sum",
    "sufficient_monomial",
    "sufficient_gamma_beta",
    "obradovic_peng_tests",
    "from_phi",
]

MEMBER = "Member"
NONMEMBER = "NonMember"
INCONCLUSIVE = "Inconclusive"

OMEGA_THRESHOLD = 0.5
U_THRESHOLD = 1.0
DEFAULT_TOL = 1e-9
# a witness must clear the threshold by at least this much
WITNESS_MARGIN = 1e-12

# interior scan layout: radii x angles, capped strictly inside the disc
_SCAN_RADII = 64
_SCAN_ANGLES = 512
_INTERIOR_CAP = 1.0 - 1e-6


@dataclass(frozen=True)
class Verdict:
    """Outcome of a membership or sufficiency check."""

    decision: str
    witness: complex | None
    sup_found: float
    margin: float
    threshold: float

    def to_json_dict(self) -> dict:
        w = None if self.witness is None else [self.witness.real, self.witness.imag]
        return {
            "decision": self.decision,
            "witness": w,
            "sup_found": self.sup_found,
            "margin": self.margin,
            "threshold": self.threshold,
        }


def _verdict(decision: str, witness: complex | None, sup_found: float,
             threshold: float) -> Verdict:
    return Verdict(decision=decision, witness=witness, sup_found=float(sup_found),
                   margin=float(threshold - sup_found), threshold=float(threshold))


def _interior_points(cap: float) -> np.ndarray:
    radii = cap * np.arange(1, _SCAN_RADII + 1) / _SCAN_RADII
    angles = np.exp(2j * np.pi * np.arange(_SCAN_ANGLES) / _SCAN_ANGLES)
    return np.outer(radii, angles).ravel()


def _membership(f: AnalyticFunction, functional, threshold: float, tol: float,
                grid: int) -> Verdict:
    r_eval = f.boundary_radius
    ext = circle_sup_modulus(lambda z: functional(f, z), r_eval, grid)
    bsup = ext.value
    if bsup <= threshold + tol:
        return _verdict(MEMBER, None, bsup, threshold)
    pts = _interior_points(min(r_eval, _INTERIOR_CAP))
    vals = np.abs(functional(f, pts))
    k = int(np.argmax(vals))
    sup_found = max(bsup, float(vals[k]))
    if vals[k] > threshold + WITNESS_MARGIN:
        return _verdict(NONMEMBER, complex(pts[k]), sup_found, threshold)
    return _verdict(INCONCLUSIVE, None, sup_found, threshold)


def is_member_omega(f: AnalyticFunction, tol: float = DEFAULT_TOL,
                    grid: int = DEFAULT_GRID) -> Verdict:
    """Certify |zf' - f| < 1/2 on the disc, or exhibit an interior witness."""
    return _membership(f, omega_functional, OMEGA_THRESHOLD, tol, grid)


def is_member_u(f: AnalyticFunction, tol: float = DEFAULT_TOL,
                grid: int = DEFAULT_GRID) -> Verdict:
    """Certify |(z/f)^2 f' - 1| < 1 on the disc, or exhibit a witness.

    f must be zero-free on the punctured disc; the evaluation grid doubles
    as the zero screen (ZeroOfF surfaces from the functional itself).
    """
    pts = _interior_points(min(f.boundary_radius, _INTERIOR_CAP))
    m = np.abs(f.f_over_z(pts))
    if np.any(m <= 1e-12):
        bad = pts[int(np.argmin(m))]
        raise ZeroOfF(f"f vanishes inside the disc near z = {bad:.6g}")
    return _membership(f, u_functional, U_THRESHOLD, tol, grid)


def subordination_check(f: AnalyticFunction, tol: float = DEFAULT_TOL,
                        grid: int = DEFAULT_GRID) -> Verdict:
    """Range-inclusion formulation of the omega test: zf' - f must map the
    disc into the disc of radius 1/2.  Decision-identical to is_member_omega."""
    return is_member_omega(f, tol, grid)


# -- sufficient conditions ---------------------------------------------------


def sufficient_fz_derivative(f: AnalyticFunction, tol: float = DEFAULT_TOL,
                             grid: int = DEFAULT_GRID) -> Verdict:
    """|(f/z)'| < 1/2 on the punctured disc implies membership.

    (f/z)' = (zf' - f)/z^2, so the statistic is the boundary sup of the
    omega functional divided by |z|^2.  Member needs a strict margin:
    a sup exactly at 1/2 (the extremal f with constant (f/z)') stays
    Inconclusive because the open-disc inequality is strict.
    """
    r = f.boundary_radius
    ext = circle_sup_modulus(lambda z: omega_functional(f, z) / (z * z), r, grid)
    if ext.value <= OMEGA_THRESHOLD - tol:
        return _verdict(MEMBER, None, ext.value, OMEGA_THRESHOLD)
    return _verdict(INCONCLUSIVE, None, ext.value, OMEGA_THRESHOLD)


def sufficient_coeff_sum(f: AnalyticFunction, order: int | None = None) -> Verdict:
    """sum of n |c_n| < 1/2 for f = z(1 + sum c_n z^n) implies membership.

    c_n is the (n+1)-st series coefficient of f, so the statistic is
    sum (m-1)|a_m| over the truncated range.  Strict: equality (the
    extremal coefficients) is Inconclusive.
    """
    s = f.series(order if order is not None else DEFAULT_ORDER)
    a = s.asarray()
    stat = float(np.sum((np.arange(len(a)) - 1)[2:] * np.abs(a[2:])))
    if stat < OMEGA_THRESHOLD:
        return _verdict(MEMBER, None, stat, OMEGA_THRESHOLD)
    return _verdict(INCONCLUSIVE, None, stat, OMEGA_THRESHOLD)


def sufficient_monomial(n: int, an: complex) -> Verdict:
    """For f = z + a_n z^n: membership iff |a_n| < 1/(2(n-1)) (strict here)."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise BadIndex(f"monomial degree must be an integer >= 2, got {n!r}")
    bound = 1.0 / (2.0 * (n - 1))
    stat = abs(complex(an))
    if stat < bound:
        return _verdict(MEMBER, None, stat, bound)
    return _verdict(INCONCLUSIVE, None, stat, bound)


def sufficient_gamma_beta(gamma: complex, beta: complex) -> Verdict:
    """For f = z + gamma z^2 + beta z^3: |gamma| + 2|beta| < 1/2 suffices."""
    stat = abs(complex(gamma)) + 2.0 * abs(complex(beta))
    if stat < OMEGA_THRESHOLD:
        return _verdict(MEMBER, None, stat, OMEGA_THRESHOLD)
    return _verdict(INCONCLUSIVE, None, stat, OMEGA_THRESHOLD)


def obradovic_peng_tests(f: AnalyticFunction, tol: float = DEFAULT_TOL,
                         grid: int = DEFAULT_GRID) -> tuple[Verdict, Verdict]:
    """Two second-derivative sufficient conditions, both stated non-strictly:
    |f''| <= 1 on the disc, and |z^2 f'' + zf' - f| <= 3/2 on the disc."""
    r = f.boundary_radius

    ext1 = circle_sup_modulus(lambda z: f.jet(z).fpp, r, grid)
    v1 = (_verdict(MEMBER, None, ext1.value, 1.0)
          if ext1.value <= 1.0 + tol
          else _verdict(INCONCLUSIVE, None, ext1.value, 1.0))

    def g2(z):
        j = f.jet(z)
        return z * z * j.fpp + z * j.fp - j.f

    ext2 = circle_sup_modulus(g2, r, grid)
    v2 = (_verdict(MEMBER, None, ext2.value, 1.5)
          if ext2.value <= 1.5 + tol
          else _verdict(INCONCLUSIVE, None, ext2.value, 1.5))
    return v1, v2


# -- the generator ------------------------------------------------------------


def _poly_circle_sup(coeffs: np.ndarray, grid: int = 512) -> float:
    """Boundary sup of a polynomial: FFT over the grid + golden refinement."""
    c = np.asarray(coeffs, dtype=complex)
    vals = np.abs(np.fft.fft(c, n=max(grid, 2 * len(c))))
    k = int(np.argmax(vals))
    n = len(vals)
    # FFT bin k is the point exp(-2i pi k / n)
    theta0 = -2.0 * np.pi * k / n
    rev = c[::-1]

    def h(t: float) -> float:
        return abs(np.polyval(rev, np.exp(1j * t)))

    dth = 2.0 * np.pi / n
    _, refined = _golden_max(h, theta0 - dth, theta0 + dth, 40)
    return max(float(vals[k]), float(refined))


@dataclass(frozen=True)
class BoundedAnalytic:
    """Polynomial phi with boundary sup normalized to at most 1.

    Construction measures the boundary sup and divides it out when it
    exceeds 1, so every instance satisfies sup |phi| <= 1 (+1e-9 of
    measurement slack).
    """

    phi: ComplexSeries
    sup_norm_estimate: float

    @classmethod
    def normalize(cls, phi: ComplexSeries | np.ndarray | list,
                  grid: int = 512) -> "BoundedAnalytic":
        s = phi if isinstance(phi, ComplexSeries) else ComplexSeries(phi)
        sup = _poly_circle_sup(s.asarray(), grid)
        if sup > 1.0:
            return cls(phi=s.scale(1.0 / sup), sup_norm_estimate=1.0)
        return cls(phi=s, sup_norm_estimate=sup)


def from_phi(phi: BoundedAnalytic | ComplexSeries,
             order: int | None = None) -> SeriesFunction:
    """Build the member f = z + (1/2) z * integral_0^z phi(t) dt.

    Coefficient law: a_n = phi_{n-2} / (2(n-1)) for n >= 2.  With
    sup |phi| <= 1 the omega functional is z^2 phi(z)/2, so every
    generated function is a certified member.
    """
    if isinstance(phi, ComplexSeries):
        phi = BoundedAnalytic.normalize(phi)
    p = phi.phi.asarray()
    n = order if order is not None else max(DEFAULT_ORDER, len(p) + 1)
    c = np.zeros(n + 1, dtype=complex)
    c[1] = 1.0
    top = min(len(p), n - 1)
    if top > 0:
        c[2 : top + 2] = p[:top] / (2.0 * np.arange(1, top + 1))
    return SeriesFunction(c, label="from_phi", omega_certified=True)
