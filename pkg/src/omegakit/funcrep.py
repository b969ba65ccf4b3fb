"""Function representations, the named catalog, jets, and the two functionals.

Three representations cover everything the toolkit handles: a normalized
truncated series z + a2 z^2 + ..., a reciprocal-polynomial form z/f = d(z),
and the Koebe function kept as a closed form because truncating it would
hide the blow-up of its functionals near z = 1.

The two functionals of interest are

    omega functional:  z f'(z) - f(z)         (class threshold 1/2)
    u functional:      (z/f)^2 f'(z) - 1      (class threshold 1)

Both accept scalar or ndarray arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import (
    DEFAULT_ORDER,
    ComplexSeries,
    NotNormalized,
    format_complex,
    parse_series_literal,
)

__all__ = [
    "JetValue",
    "AnalyticFunction",
    "SeriesFunction",
    "ReciprocalPolyFunction",
    "KoebeFunction",
    "BadIndex",
    "UnknownId",
    "PoleAtPoint",
    "ZeroOfF",
    "make_extremal",
    "catalog",
    "catalog_entries",
    "parse_function",
    "omega_functional",
    "u_functional",
]

# a denominator or function value this small counts as a zero
POLE_TOL = 1e-12
# normalized-series constant/linear coefficient tolerance
NORM_TOL = 1e-12
# reciprocal-poly zero check runs on this circle (the open disc, just inside)
INNER_RADIUS = 1.0 - 1e-6


class BadIndex(ValueError):
    """Extremal index below 2."""


class UnknownId(KeyError):
    """Catalog id not recognized."""


class PoleAtPoint(ArithmeticError):
    """Denominator vanished (within 1e-12) at an evaluation point."""


class ZeroOfF(ArithmeticError):
    """f vanished at a nonzero point where z/f was needed."""


@dataclass(frozen=True)
class JetValue:
    """Function value and first two derivatives at a point."""

    f: complex
    fp: complex
    fpp: complex
    at: complex


def _is_array(z) -> bool:
    return isinstance(z, np.ndarray)


class AnalyticFunction:
    """Base for normalized analytic functions on the unit disc (f(0)=0, f'(0)=1)."""

    label: str = ""
    # True: known member of the omega class; False: known non-member; None: unknown
    omega_certified: bool | None = None
    # circle radius safe for boundary-supremum evaluation
    boundary_radius: float = 1.0

    def jet(self, z) -> JetValue:
        raise NotImplementedError

    def f_over_z(self, z):
        """f(z)/z with the removable singularity at 0 filled in."""
        raise NotImplementedError

    def series(self, order: int = DEFAULT_ORDER) -> ComplexSeries:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"


class SeriesFunction(AnalyticFunction):
    """Polynomial / truncated-series representation z + a2 z^2 + ..."""

    def __init__(self, coeffs, label: str | None = None,
                 omega_certified: bool | None = None):
        s = coeffs if isinstance(coeffs, ComplexSeries) else ComplexSeries(coeffs)
        if abs(s.coeffs[0]) > NORM_TOL or abs(s.coeffs[1] - 1) > NORM_TOL:
            raise NotNormalized(
                f"series must start z + ..., got constant {s.coeffs[0]}, "
                f"linear {s.coeffs[1]}"
            )
        c = (0j, 1 + 0j) + s.coeffs[2:]  # snap the normalized head exactly
        self._s = ComplexSeries(c)
        self._d1 = self._s.derivative()
        self._d2 = self._d1.derivative()
        self._over_z = ComplexSeries(c[1:])  # f/z, constant term 1
        self.label = label if label is not None else _series_label(self._s)
        self.omega_certified = omega_certified

    def jet(self, z) -> JetValue:
        return JetValue(self._s.eval(z), self._d1.eval(z), self._d2.eval(z), z)

    def f_over_z(self, z):
        return self._over_z.eval(z)

    def series(self, order: int = DEFAULT_ORDER) -> ComplexSeries:
        return self._s.truncated(order)


def _series_label(s: ComplexSeries) -> str:
    from .series import format_series_literal

    return format_series_literal(s)


class ReciprocalPolyFunction(AnalyticFunction):
    """f given through z/f(z) = d(z), d a polynomial with d(0) = 1.

    Construction verifies d has no zeros on the sampled open disc: 4096
    points on the circle r = 1 - 1e-6 plus a 16 x 256 interior grid.  A
    denominator zero on that sample set rejects the representation.
    """

    boundary_radius = INNER_RADIUS

    def __init__(self, denom, label: str | None = None,
                 omega_certified: bool | None = None):
        d = denom if isinstance(denom, ComplexSeries) else ComplexSeries(denom)
        if abs(d.coeffs[0] - 1) > NORM_TOL:
            raise NotNormalized(f"denominator must have d(0) = 1, got {d.coeffs[0]}")
        self.denom = d
        self._d1 = d.derivative()
        self._d2 = self._d1.derivative()
        self._check_zero_free()
        self.label = label if label is not None else f"z/({_series_label(d)})"
        self.omega_certified = omega_certified

    def _check_zero_free(self) -> None:
        # d is a polynomial, so its zeros are computable exactly; reject
        # zeros strictly inside the disc (f would have a pole there) but
        # allow zeros on the circle itself, where f is still analytic on
        # the open disc and evaluation stays behind INNER_RADIUS
        c = np.array(self.denom.coeffs, dtype=complex)
        c = np.trim_zeros(c, "b")
        if len(c) < 2:
            return
        roots = np.roots(c[::-1])
        inside = roots[np.abs(roots) < 1.0 - POLE_TOL]
        if len(inside):
            k = int(np.argmin(np.abs(inside)))
            raise PoleAtPoint(
                f"denominator vanishes at z = {inside[k]:.6g} inside the disc"
            )

    def _dvals(self, z):
        dv = self.denom.eval(z)
        bad = np.abs(dv) <= POLE_TOL
        if np.any(bad):
            zz = np.asarray(z)[bad] if _is_array(z) else z
            raise PoleAtPoint(f"denominator vanishes at z = {zz}")
        return dv

    def jet(self, z) -> JetValue:
        dv = self._dvals(z)
        d1 = self._d1.eval(z)
        d2 = self._d2.eval(z)
        f = z / dv
        fp = (dv - z * d1) / dv**2
        fpp = (-z * d2 * dv - 2 * d1 * (dv - z * d1)) / dv**3
        return JetValue(f, fp, fpp, z)

    def f_over_z(self, z):
        return 1.0 / self._dvals(z)

    def series(self, order: int = DEFAULT_ORDER) -> ComplexSeries:
        one = ComplexSeries([1]).truncated(max(order - 1, 1))
        recip = one.div(self.denom.truncated(max(order - 1, 1)))
        return recip.mul_z().truncated(order)


class KoebeFunction(AnalyticFunction):
    """z/(1-z)^2 in closed form; functionals blow up toward z = 1."""

    label = "koebe"
    omega_certified = False
    boundary_radius = INNER_RADIUS

    def _guard(self, z):
        w = 1.0 - np.asarray(z) if _is_array(z) else 1.0 - z
        if np.any(np.abs(w) <= POLE_TOL):
            raise PoleAtPoint("koebe pole at z = 1")
        return w

    def jet(self, z) -> JetValue:
        w = self._guard(z)  # w = 1 - z
        f = z / w**2
        fp = (1 + z) / w**3
        fpp = 2 * (2 + z) / w**4
        return JetValue(f, fp, fpp, z)

    def f_over_z(self, z):
        w = self._guard(z)
        return 1.0 / w**2

    def series(self, order: int = DEFAULT_ORDER) -> ComplexSeries:
        return ComplexSeries(np.arange(order + 1, dtype=complex))


# -- catalog ----------------------------------------------------------------


def make_extremal(n: int) -> SeriesFunction:
    """z + z^n / (2(n-1)), the coefficient-bound extremal; n >= 2."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise BadIndex(f"extremal index must be an integer >= 2, got {n!r}")
    c = [0j] * (n + 1)
    c[1] = 1.0
    c[n] = 1.0 / (2 * (n - 1))
    return SeriesFunction(c, label=f"ftilde:{n}", omega_certified=True)


def _make_fhat(lam: complex) -> SeriesFunction:
    cert: bool | None
    if abs(lam) <= 0.5:
        cert = True
    else:
        cert = False  # sup of the omega functional is exactly |lam|
    return SeriesFunction([0, 1, lam], label=f"fhat:{format_complex(lam)}",
                          omega_certified=cert)


def _make_fgb(gamma: complex, beta: complex) -> SeriesFunction:
    cert = True if abs(gamma) + 2 * abs(beta) < 0.5 else None
    return SeriesFunction(
        [0, 1, gamma, beta],
        label=f"fgb:{format_complex(gamma)},{format_complex(beta)}",
        omega_certified=cert,
    )


def _parse_params(text: str) -> list[complex]:
    from .series import _parse_complex

    return [_parse_complex(t) for t in text.split(",")]


def catalog_entries() -> list[dict]:
    """Machine-readable listing of the catalog ids."""
    return [
        {"id": "koebe", "label": "z/(1-z)^2"},
        {"id": "ftilde:n", "label": "z + z^n/(2(n-1)), n >= 2"},
        {"id": "ell", "label": "z + z^2/5 + z^3/8"},
        {"id": "phi1fun", "label": "z - z^2/5 - z^3/8"},
        {"id": "f1", "label": "z/(1 + z/2 + z^3/2)"},
        {"id": "fhat:lam", "label": "z + lam*z^2 (lam complex, 're,im' or one literal)"},
        {"id": "fgb:gamma,beta", "label": "z + gamma*z^2 + beta*z^3"},
    ]


def catalog(spec: str) -> AnalyticFunction:
    """Look up a named function: 'koebe', 'ftilde:3', 'fhat:0.4', ..."""
    text = spec.strip()
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head == "koebe":
        return KoebeFunction()
    if head == "ell":
        return SeriesFunction([0, 1, 0.2, 0.125], label="ell", omega_certified=True)
    if head == "phi1fun":
        return SeriesFunction([0, 1, -0.2, -0.125], label="phi1fun",
                              omega_certified=True)
    if head == "f1":
        return ReciprocalPolyFunction([1, 0.5, 0, 0.5], label="f1",
                                      omega_certified=False)
    if head == "ftilde":
        try:
            n = int(rest)
        except ValueError as exc:
            raise BadIndex(f"ftilde needs an integer index, got {rest!r}") from exc
        return make_extremal(n)
    if head == "fhat":
        p = _parse_params(rest)
        lam = p[0] if len(p) == 1 else complex(p[0].real, p[1].real)
        return _make_fhat(lam)
    if head == "fgb":
        p = _parse_params(rest)
        if len(p) == 2:
            gamma, beta = p
        elif len(p) == 4:
            gamma = complex(p[0].real, p[1].real)
            beta = complex(p[2].real, p[3].real)
        else:
            raise UnknownId(f"fgb takes 2 or 4 parameters, got {rest!r}")
        return _make_fgb(gamma, beta)
    raise UnknownId(f"unknown catalog id {spec!r}")


_CATALOG_HEADS = {"koebe", "ell", "phi1fun", "f1", "ftilde", "fhat", "fgb"}


def parse_function(spec: str) -> AnalyticFunction:
    """Catalog id or series literal ('0, 1, 0.5' is z + 0.5 z^2)."""
    head = spec.strip().partition(":")[0].strip().lower()
    if head in _CATALOG_HEADS:
        return catalog(spec)
    return SeriesFunction(parse_series_literal(spec))


# -- functionals -------------------------------------------------------------


def omega_functional(f: AnalyticFunction, z):
    """z f'(z) - f(z); scalar or ndarray argument."""
    if isinstance(f, ReciprocalPolyFunction):
        dv = f._dvals(z)
        return -(z * z) * f._d1.eval(z) / dv**2
    j = f.jet(z)
    return z * j.fp - j.f


def u_functional(f: AnalyticFunction, z):
    """(z/f)^2 f'(z) - 1, with the removable value 0 at z = 0."""
    if isinstance(f, ReciprocalPolyFunction):
        # (z/f)^2 f' - 1 collapses to d - z d' - 1, a polynomial
        return f.denom.eval(z) - z * f._d1.eval(z) - 1.0
    m = f.f_over_z(z)
    if np.any(np.abs(m) <= POLE_TOL):
        if _is_array(z):
            bad = np.asarray(z)[np.abs(m) <= POLE_TOL]
            raise ZeroOfF(f"f vanishes at z = {bad[0]:.6g}")
        raise ZeroOfF(f"f vanishes at z = {z:.6g}")
    return f.jet(z).fp / m**2 - 1.0
