"""Truncated complex power series: ring ops, calculus, composition, reversion.

A series of order N stores exactly N+1 complex coefficients by ascending
degree and stands for sum(c[j] * z**j, j = 0..N), i.e. a function known
modulo O(z**(N+1)).  Binary arithmetic truncates to the shorter operand,
so an operation never pretends to know more orders than its inputs.
Coefficients are complex floats throughout; nothing here is exact
rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "ComplexSeries",
    "DivisionByZeroConstantTerm",
    "NonzeroConstantTerm",
    "InnerConstantTermNonzero",
    "BadConstantTerm",
    "NotNormalized",
    "DEFAULT_ORDER",
    "parse_series_literal",
    "format_series_literal",
]

# default working order for series built from closed forms
DEFAULT_ORDER = 32

# constant-term checks on computed series allow this much float noise
CONST_TOL = 1e-12
# log/pow accept a constant term this close to 1 (values arrive via division)
UNIT_TOL = 1e-9


class DivisionByZeroConstantTerm(ZeroDivisionError):
    """div() needs a divisor with nonzero constant term."""


class NonzeroConstantTerm(ValueError):
    """shift_div_z() needs a vanishing constant term."""


class InnerConstantTermNonzero(ValueError):
    """compose() needs inner(0) = 0."""


class BadConstantTerm(ValueError):
    """Transcendental op applied to a series with the wrong constant term."""


class NotNormalized(ValueError):
    """Operation needs a series of the form z + c2 z^2 + ..."""


Scalar = Union[int, float, complex]


def _coerce(values: Iterable[Scalar]) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in values)
    if len(out) < 2:
        out = out + (0j,) * (2 - len(out))
    return out


@dataclass(frozen=True)
class ComplexSeries:
    """Immutable truncated power series with complex coefficients."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[Scalar]):
        object.__setattr__(self, "coeffs", _coerce(coeffs))

    # -- basics ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> complex:
        return self.coeffs[j]

    def asarray(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def truncated(self, order: int) -> "ComplexSeries":
        """Copy with the given order: drops high terms or zero-pads."""
        n = order + 1
        c = self.coeffs[:n] + (0j,) * max(0, n - len(self.coeffs))
        return ComplexSeries(c)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 if all vanish)."""
        for j, c in enumerate(self.coeffs):
            if c != 0:
                return j
        return self.order + 1

    @classmethod
    def identity(cls, order: int = 1) -> "ComplexSeries":
        """The series z."""
        return cls((0, 1)).truncated(max(order, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1, order: int | None = None) -> "ComplexSeries":
        c = [0j] * (degree + 1)
        c[degree] = complex(coeff)
        return cls(c).truncated(order if order is not None else max(degree, 1))

    def __repr__(self) -> str:
        return f"ComplexSeries({format_series_literal(self)!r})"

    # -- ring arithmetic (result order = min of operand orders) ----------

    def _binary_order(self, other: "ComplexSeries") -> int:
        return min(self.order, other.order)

    def add(self, other: "ComplexSeries") -> "ComplexSeries":
        n = self._binary_order(other) + 1
        a, b = self.asarray()[:n], other.asarray()[:n]
        return ComplexSeries(a + b)

    def sub(self, other: "ComplexSeries") -> "ComplexSeries":
        n = self._binary_order(other) + 1
        a, b = self.asarray()[:n], other.asarray()[:n]
        return ComplexSeries(a - b)

    def mul(self, other: "ComplexSeries") -> "ComplexSeries":
        n = self._binary_order(other) + 1
        prod = np.convolve(self.asarray(), other.asarray())[:n]
        return ComplexSeries(prod)

    def div(self, other: "ComplexSeries") -> "ComplexSeries":
        """Series quotient; divisor must have a nonzero constant term."""
        b0 = other.coeffs[0]
        if b0 == 0:
            raise DivisionByZeroConstantTerm(
                "divisor constant term is zero; shift_div_z first"
            )
        n = self._binary_order(other)
        a = self.asarray()
        b = other.asarray()
        q = np.zeros(n + 1, dtype=complex)
        for k in range(n + 1):
            acc = a[k] if k < len(a) else 0j
            m = min(k, other.order)
            if k:
                acc -= np.dot(b[1 : m + 1], q[k - 1 :: -1][:m])
            q[k] = acc / b0
        return ComplexSeries(q)

    def scale(self, s: Scalar) -> "ComplexSeries":
        return ComplexSeries(self.asarray() * complex(s))

    def hadamard(self, other: "ComplexSeries") -> "ComplexSeries":
        """Coefficientwise product, truncated to the shorter operand."""
        n = self._binary_order(other) + 1
        return ComplexSeries(self.asarray()[:n] * other.asarray()[:n])

    def __add__(self, other):
        return self.add(other) if isinstance(other, ComplexSeries) else NotImplemented

    def __sub__(self, other):
        return self.sub(other) if isinstance(other, ComplexSeries) else NotImplemented

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, ComplexSeries):
            return self.mul(other)
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ComplexSeries):
            return self.div(other)
        if isinstance(other, (int, float, complex)):
            return self.scale(1 / complex(other))
        return NotImplemented

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> "ComplexSeries":
        """Termwise derivative; order drops by one (floor at 1)."""
        c = self.asarray()
        d = c[1:] * np.arange(1, len(c))
        return ComplexSeries(d)

    def integrate(self) -> "ComplexSeries":
        """Termwise antiderivative with zero constant; order rises by one."""
        c = self.asarray()
        out = np.zeros(len(c) + 1, dtype=complex)
        out[1:] = c / np.arange(1, len(c) + 1)
        return ComplexSeries(out)

    def shift_div_z(self) -> "ComplexSeries":
        """Divide by z; requires a vanishing constant term.  Order drops by one."""
        if abs(self.coeffs[0]) > CONST_TOL:
            raise NonzeroConstantTerm(
                f"constant term {self.coeffs[0]} prevents division by z"
            )
        return ComplexSeries(self.coeffs[1:])

    def mul_z(self) -> "ComplexSeries":
        """Multiply by z; order rises by one."""
        return ComplexSeries((0j,) + self.coeffs)

    # -- composition and reversion ---------------------------------------

    def compose(self, inner: "ComplexSeries") -> "ComplexSeries":
        """self(inner(z)) with inner(0) = 0.

        Output order is self.order * valuation(inner): the largest order the
        operands can fill exactly when inner starts at z**v.  Evaluation is
        Horner in the truncated-series ring.
        """
        if abs(inner.coeffs[0]) > CONST_TOL:
            raise InnerConstantTermNonzero(
                f"inner constant term {inner.coeffs[0]} is nonzero"
            )
        val = max(1, min(inner.valuation(), inner.order + 1))
        out_order = max(1, self.order * val)
        n = out_order + 1
        g = np.zeros(n, dtype=complex)
        g[0] = inner.coeffs[0] * 0  # inner term forced to exact zero
        m = min(inner.order, out_order)
        g[1 : m + 1] = inner.coeffs[1 : m + 1]
        acc = np.zeros(n, dtype=complex)
        acc[0] = self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            acc = np.convolve(acc, g)[:n]
            acc[0] += c
        return ComplexSeries(acc)

    def reversion(self) -> "ComplexSeries":
        """Compositional inverse of z + c2 z^2 + ...

        Fixed-point iteration g <- z - H(g) with H the tail of self; each
        pass fixes one further order, so order-many passes converge.
        """
        c = self.coeffs
        if abs(c[0]) > CONST_TOL or abs(c[1] - 1) > CONST_TOL:
            raise NotNormalized("reversion needs a series z + c2 z^2 + ...")
        n = self.order
        tail = ComplexSeries((0j, 0j) + c[2:])  # self - z, same order
        g = ComplexSeries.identity(n)
        z = ComplexSeries.identity(n)
        for _ in range(max(n - 1, 1)):
            g = z.sub(tail.compose(g).truncated(n))
        return g

    # -- transcendental ----------------------------------------------------

    def log(self) -> "ComplexSeries":
        """log(self) for constant term 1: integrate(self'/self)."""
        if abs(self.coeffs[0] - 1) > UNIT_TOL:
            raise BadConstantTerm(f"log needs constant term 1, got {self.coeffs[0]}")
        n = max(self.order - 1, 1)
        return self.derivative().div(self.truncated(n)).integrate().truncated(self.order)

    def exp(self) -> "ComplexSeries":
        """exp(self) for constant term 0, by the standard recurrence."""
        if abs(self.coeffs[0]) > CONST_TOL:
            raise BadConstantTerm(f"exp needs constant term 0, got {self.coeffs[0]}")
        a = self.asarray()
        n = self.order
        g = np.zeros(n + 1, dtype=complex)
        g[0] = 1
        ka = a * np.arange(len(a))  # k * a_k
        for m in range(1, n + 1):
            g[m] = np.dot(ka[1 : m + 1], g[m - 1 :: -1][:m]) / m
        return ComplexSeries(g)

    def pow(self, alpha: Scalar) -> "ComplexSeries":
        """self**alpha for constant term 1, via exp(alpha * log(self))."""
        if abs(self.coeffs[0] - 1) > UNIT_TOL:
            raise BadConstantTerm(f"pow needs constant term 1, got {self.coeffs[0]}")
        return self.log().scale(alpha).exp().truncated(self.order)

    # -- evaluation ---------------------------------------------------------

    def eval(self, z):
        """Horner evaluation; z may be a scalar or ndarray."""
        if isinstance(z, np.ndarray):
            acc = np.full(z.shape, self.coeffs[-1], dtype=complex)
            for c in self.coeffs[-2::-1]:
                acc = acc * z + c
            return acc
        w = complex(z)
        acc = self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            acc = acc * w + c
        return acc

    __call__ = eval

    def tail_bound(self, z) -> float:
        """Crude truncation-tail bound max|c| * |z|^(N+1) / (1-|z|) for |z| < 1."""
        r = abs(z)
        if r >= 1.0:
            return math.inf
        big = max(abs(c) for c in self.coeffs)
        return big * r ** (self.order + 1) / (1.0 - r)


# -- text form -------------------------------------------------------------
#
# A series literal is a comma-separated list of complex numbers in
# ascending degree, written with "i": "0, 1, 0.5" is z + 0.5 z^2 and
# "0, 1, 0.25-0.1i" has a complex z^2 coefficient.


def _parse_complex(token: str) -> complex:
    t = token.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    if not t:
        raise ValueError("empty coefficient in series literal")
    try:
        return complex(t)
    except ValueError as exc:
        raise ValueError(f"bad coefficient {token!r} in series literal") from exc


def parse_series_literal(text: str) -> ComplexSeries:
    """Parse 're+imi' coefficients by ascending degree, comma separated."""
    tokens = text.split(",")
    return ComplexSeries(_parse_complex(t) for t in tokens)


def _fmt_real(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def format_complex(c: complex) -> str:
    if c.imag == 0:
        return _fmt_real(c.real)
    if c.real == 0:
        return f"{_fmt_real(c.imag)}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"{_fmt_real(c.real)}{sign}{_fmt_real(abs(c.imag))}i"


def format_series_literal(s: ComplexSeries) -> str:
    return ", ".join(format_complex(c) for c in s.coeffs)
