"""Coefficient-functional bounds: Taylor, Fekete-Szego, k-th root transform,
inverse coefficients, and small Toeplitz determinants.

Every check returns a BoundReport pairing the computed |functional| with
the class bound and the slack between them.  The bounds hold for members
of the omega class; reports for inputs without a membership certificate
carry uncertified=True rather than being refused.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .funcrep import AnalyticFunction
from .series import DEFAULT_ORDER, ComplexSeries, format_complex

__all__ = [
    "BoundReport",
    "RootTransformCoeffs",
    "UnsupportedShape",
    "coeff_bound_check",
    "fekete_szego",
    "kth_root_transform",
    "fs_kroot",
    "inverse_coeff_check",
    "toeplitz_det",
    "bound_an",
    "bound_fs",
    "bound_fs_kroot",
    "INVERSE_BOUNDS",
    "TOEPLITZ_BOUNDS",
    "inverse_b234",
]

# slack at or below this counts as bound attainment
ATTAIN_TOL = 1e-12


class UnsupportedShape(ValueError):
    """Toeplitz shape outside the supported (q, n) set."""


@dataclass(frozen=True)
class BoundReport:
    """One functional against its class bound."""

    functional: str
    value: float
    bound: float
    slack: float
    attained_by: str | None
    uncertified: bool = False

    def to_json_dict(self) -> dict:
        out = {
            "functional": self.functional,
            "value": self.value,
            "bound": self.bound,
            "slack": self.slack,
            "attained_by": self.attained_by,
        }
        if self.uncertified:
            out["uncertified"] = True
        return out

    @staticmethod
    def csv_header() -> str:
        return "functional,value,bound,slack,attained_by"

    def to_csv_row(self) -> str:
        name = self.attained_by if self.attained_by is not None else ""
        return (f"{self.functional},{self.value:.17g},{self.bound:.17g},"
                f"{self.slack:.17g},{name}")


@dataclass(frozen=True)
class RootTransformCoeffs:
    """Nonzero coefficients of F_k(z) = (f(z^k))^(1/k), keyed by exponent.

    Only exponents congruent to 1 mod k appear; b[1] = 1.
    """

    k: int
    b: dict[int, complex]


# -- bound formulas (shared with the search module) ---------------------------


def bound_an(n: int) -> float:
    """|a_n| <= 1/(2(n-1)) for members, sharp for the extremal family."""
    if n < 2:
        raise UnsupportedShape(f"coefficient bound needs n >= 2, got {n}")
    return 1.0 / (2.0 * (n - 1))


def bound_fs(mu: complex) -> float:
    """|a3 - mu a2^2| <= max(1, |mu|)/4."""
    return max(1.0, abs(complex(mu))) / 4.0


def bound_fs_kroot(k: int, mu: complex) -> float:
    """|b_{2k+1} - mu b_{k+1}^2| <= (1/(4k)) max(1, |2mu+k-1|/(2k))."""
    if k < 1:
        raise UnsupportedShape(f"root transform needs k >= 1, got {k}")
    mu = complex(mu)
    return max(1.0, abs(2.0 * mu + k - 1.0) / (2.0 * k)) / (4.0 * k)


INVERSE_BOUNDS = {2: 0.5, 3: 0.5, 4: 19.0 / 24.0}

TOEPLITZ_BOUNDS = {(3, 1): 13.0 / 8.0, (3, 2): 329.0 / 549.0}


def _toeplitz_bound(q: int, n: int) -> float:
    if q == 2 and n >= 2:
        return 1.0 / (4.0 * (n - 1) ** 2) + 1.0 / (4.0 * n**2)
    try:
        return TOEPLITZ_BOUNDS[(q, n)]
    except KeyError:
        raise UnsupportedShape(
            f"toeplitz determinant supported for (2, n>=2), (3,1), (3,2); "
            f"got ({q}, {n})"
        ) from None


def inverse_b234(a2: complex, a3: complex, a4: complex) -> tuple[complex, complex, complex]:
    """First inverse coefficients of z + a2 z^2 + ... in closed form."""
    b2 = -a2
    b3 = 2.0 * a2 * a2 - a3
    b4 = -(5.0 * a2**3 - 5.0 * a2 * a3 + a4)
    return b2, b3, b4


# -- checks -------------------------------------------------------------------


def _uncertified(f: AnalyticFunction) -> bool:
    return f.omega_certified is not True


def _coeffs(f: AnalyticFunction, order: int) -> np.ndarray:
    return f.series(order).asarray()


def coeff_bound_check(f: AnalyticFunction, n_max: int = 16) -> list[BoundReport]:
    """|a_n| against 1/(2(n-1)) for n = 2..n_max."""
    if n_max < 2:
        raise UnsupportedShape(f"n_max must be >= 2, got {n_max}")
    a = _coeffs(f, n_max)
    flag = _uncertified(f)
    out = []
    for n in range(2, n_max + 1):
        value = abs(a[n])
        bound = bound_an(n)
        slack = bound - value
        attained = f"ftilde:{n}" if slack <= ATTAIN_TOL else None
        out.append(BoundReport(functional=f"an:{n}", value=float(value),
                               bound=bound, slack=float(slack),
                               attained_by=attained, uncertified=flag))
    return out


def fekete_szego(f: AnalyticFunction, mu: complex) -> BoundReport:
    """|a3 - mu a2^2| against max(1, |mu|)/4."""
    a = _coeffs(f, 3)
    mu = complex(mu)
    value = abs(a[3] - mu * a[2] * a[2])
    bound = bound_fs(mu)
    slack = bound - value
    attained = None
    if slack <= ATTAIN_TOL:
        attained = "ftilde:2" if abs(mu) >= 1.0 else "ftilde:3"
    return BoundReport(functional=f"fs:{format_complex(mu)}", value=float(value),
                       bound=bound, slack=float(slack), attained_by=attained,
                       uncertified=_uncertified(f))


def kth_root_transform(f: AnalyticFunction, k: int,
                       order: int = DEFAULT_ORDER) -> RootTransformCoeffs:
    """Coefficients of the k-th root transform (f(z^k))^(1/k).

    `order` is the order of the series taken from f; the transform then
    carries exponents up to (order-1)k + 1.  k = 1 is the identity.
    """
    if k < 1 or not isinstance(k, (int, np.integer)):
        raise UnsupportedShape(f"root transform needs integer k >= 1, got {k!r}")
    s = f.series(order)
    if k == 1:
        b = {n: s.coeffs[n] for n in range(1, s.order + 1) if s.coeffs[n] != 0}
        b[1] = 1 + 0j
        return RootTransformCoeffs(k=1, b=b)
    t = s.compose(ComplexSeries.monomial(k))  # f(z^k), order = order*k
    u = t
    for _ in range(k):
        u = u.shift_div_z()  # f(z^k)/z^k, constant term exactly 1
    v = u.pow(1.0 / k)
    fk = v.mul_z()
    b: dict[int, complex] = {}
    for e in range(1, fk.order + 1, k):
        c = fk.coeffs[e]
        if e == 1 or c != 0:
            b[e] = c
    return RootTransformCoeffs(k=int(k), b=b)


def fs_kroot(f: AnalyticFunction, k: int, mu: complex) -> BoundReport:
    """Fekete-Szego functional of the k-th root transform against its bound."""
    t = kth_root_transform(f, k, order=3)
    mu = complex(mu)
    bk1 = t.b.get(k + 1, 0j)
    b2k1 = t.b.get(2 * k + 1, 0j)
    value = abs(b2k1 - mu * bk1 * bk1)
    bound = bound_fs_kroot(k, mu)
    slack = bound - value
    return BoundReport(functional=f"fsk:{k}:{format_complex(mu)}",
                       value=float(value), bound=bound, slack=float(slack),
                       attained_by=None, uncertified=_uncertified(f))


def inverse_coeff_check(f: AnalyticFunction) -> list[BoundReport]:
    """|b_2|, |b_3|, |b_4| of the inverse function against 1/2, 1/2, 19/24."""
    a = _coeffs(f, 4)
    b2, b3, b4 = inverse_b234(a[2], a[3], a[4])
    flag = _uncertified(f)
    out = []
    for n, bn in ((2, b2), (3, b3), (4, b4)):
        bound = INVERSE_BOUNDS[n]
        value = abs(bn)
        slack = bound - value
        attained = "ftilde:2" if (n in (2, 3) and slack <= ATTAIN_TOL) else None
        out.append(BoundReport(functional=f"b{n}", value=float(value),
                               bound=bound, slack=float(slack),
                               attained_by=attained, uncertified=flag))
    return out


def toeplitz_det(f: AnalyticFunction, q: int, n: int) -> BoundReport:
    """Toeplitz determinant T_q(n) of the coefficient sequence (a_1 = 1).

    Supported shapes: q = 2 with n >= 2, and q = 3 with n in {1, 2}.
    """
    bound = _toeplitz_bound(q, n)  # validates the shape
    a = _coeffs(f, max(4, n + q))
    if q == 2:
        det = a[n] ** 2 - a[n + 1] ** 2
    elif n == 1:
        det = 1.0 - 2.0 * a[2] ** 2 + 2.0 * a[3] * a[2] ** 2 - a[3] ** 2
    else:
        det = (a[2] - a[4]) * (a[2] ** 2 - 2.0 * a[3] ** 2 + a[2] * a[4])
    value = abs(det)
    return BoundReport(functional=f"t{q}:{n}", value=float(value), bound=bound,
                       slack=float(bound - value), attained_by=None,
                       uncertified=_uncertified(f))
