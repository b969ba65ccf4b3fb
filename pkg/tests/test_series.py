"""Truncated series ring: arithmetic, calculus, compose/revert, literals."""

import math
from fractions import Fraction

import numpy as np
import pytest

from omegakit.series import (
    BadConstantTerm,
    ComplexSeries,
    DivisionByZeroConstantTerm,
    InnerConstantTermNonzero,
    NonzeroConstantTerm,
    NotNormalized,
    format_complex,
    format_series_literal,
    parse_series_literal,
)

EXACT = 1e-12
LOOPS = 60


def close(a, b, tol=EXACT):
    return abs(complex(a) - complex(b)) <= tol


def rand_series(rng, order, lead=None):
    re = rng.uniform(-1.0, 1.0, order + 1)
    im = rng.uniform(-1.0, 1.0, order + 1)
    c = re + 1j * im
    if lead is not None:
        c[0] = lead
    return ComplexSeries(c)


# -- construction and literals ---------------------------------------------


def test_literal_roundtrip():
    s = parse_series_literal("0, 1, 0.5")
    assert s.coeffs == (0j, 1 + 0j, 0.5 + 0j)
    assert s.order == 2
    text = format_series_literal(s)
    assert parse_series_literal(text).coeffs == s.coeffs


def test_literal_accepts_i_suffix():
    s = parse_series_literal("1+2i, -0.5i, 3")
    assert s.coeffs == (1 + 2j, -0.5j, 3 + 0j)


def test_literal_rejects_garbage():
    with pytest.raises(ValueError):
        parse_series_literal("1, spam")
    with pytest.raises(ValueError):
        parse_series_literal("")


def test_format_complex_real_axis():
    assert format_complex(0.5 + 0j) == "0.5"
    assert format_complex(2j) == "2i"
    assert format_complex(1 - 0.5j) == "1-0.5i"


def test_min_order_is_one():
    s = ComplexSeries([3.0])
    assert s.order >= 1
    assert s.coeffs[0] == 3.0


def test_truncated_pads_and_cuts():
    s = parse_series_literal("1, 2, 3")
    assert s.truncated(1).coeffs == (1 + 0j, 2 + 0j)
    assert s.truncated(4).coeffs == (1 + 0j, 2 + 0j, 3 + 0j, 0j, 0j)


def test_monomial_and_identity():
    z = ComplexSeries.identity(4)
    assert z.coeffs == (0j, 1 + 0j, 0j, 0j, 0j)
    m = ComplexSeries.monomial(3, 2.0, 5)
    assert m.coeffs[3] == 2.0 and m.valuation() == 3


# -- ring arithmetic ---------------------------------------------------------


def test_mul_example():
    a = parse_series_literal("0, 1, 1")
    b = parse_series_literal("0, 1, -1")
    assert (a * b).coeffs == (0j, 0j, 1 + 0j)  # truncated at min order 2


def test_div_geometric():
    one = parse_series_literal("1").truncated(6)
    dens = parse_series_literal("1, -1").truncated(6)
    g = one.div(dens)
    assert all(close(c, 1.0) for c in g.coeffs)


def test_div_rejects_zero_constant():
    z = ComplexSeries.identity(4)
    with pytest.raises(DivisionByZeroConstantTerm):
        z.div(ComplexSeries.identity(4))


def test_ring_laws_seeded():
    rng = np.random.default_rng(101)
    for _ in range(LOOPS):
        n = int(rng.integers(2, 9))
        a = rand_series(rng, n)
        b = rand_series(rng, n)
        c = rand_series(rng, n)
        lhs = a.mul(b.add(c))
        rhs = a.mul(b).add(a.mul(c))
        assert max(abs(x - y) for x, y in zip(lhs.coeffs, rhs.coeffs)) < EXACT
        comm = a.mul(b).sub(b.mul(a))
        assert max(abs(x) for x in comm.coeffs) < EXACT


def test_div_inverts_mul_seeded():
    rng = np.random.default_rng(102)
    for _ in range(LOOPS):
        n = int(rng.integers(2, 9))
        lead = 0.5 + rng.uniform(0.0, 1.0)  # keep the constant term away from 0
        b = rand_series(rng, n, lead=lead)
        a = rand_series(rng, n)
        q = a.mul(b).div(b)
        assert max(abs(x - y) for x, y in zip(q.coeffs, a.coeffs)) < 1e-10


def test_operators_match_methods():
    rng = np.random.default_rng(103)
    a = rand_series(rng, 5)
    b = rand_series(rng, 5)
    assert (a + b).coeffs == a.add(b).coeffs
    assert (a - b).coeffs == a.sub(b).coeffs
    assert (a * b).coeffs == a.mul(b).coeffs
    assert (2.0 * a).coeffs == a.scale(2.0).coeffs
    assert (-a).coeffs == a.scale(-1.0).coeffs


def test_hadamard():
    a = parse_series_literal("1, 2, 3")
    b = parse_series_literal("4, 5, 6")
    assert a.hadamard(b).coeffs == (4 + 0j, 10 + 0j, 18 + 0j)


def test_min_order_binary_rule():
    a = parse_series_literal("1, 1, 1, 1")  # order 3
    b = parse_series_literal("1, 1")        # order 1
    assert a.add(b).order == 1
    assert a.mul(b).order == 1


# -- calculus ----------------------------------------------------------------


def test_derivative_drops_order():
    s = parse_series_literal("1, 2, 3, 4")
    d = s.derivative()
    assert d.coeffs == (2 + 0j, 6 + 0j, 12 + 0j)
    assert d.order == s.order - 1


def test_integrate_raises_order():
    s = parse_series_literal("1, 2, 3")
    v = s.integrate()
    assert v.coeffs == (0j, 1 + 0j, 1 + 0j, 1 + 0j)
    assert v.order == s.order + 1


def test_derivative_integrate_roundtrip_seeded():
    rng = np.random.default_rng(104)
    for _ in range(LOOPS):
        s = rand_series(rng, int(rng.integers(2, 10)))
        back = s.integrate().derivative()
        assert back.order == s.order
        assert max(abs(x - y) for x, y in zip(back.coeffs, s.coeffs)) < EXACT


def test_shift_div_z_and_mul_z():
    s = parse_series_literal("0, 1, 0.5")
    t = s.shift_div_z()
    assert t.coeffs == (1 + 0j, 0.5 + 0j)
    assert t.mul_z().coeffs == (0j, 1 + 0j, 0.5 + 0j)


def test_shift_div_z_requires_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        parse_series_literal("1, 1").shift_div_z()


# -- composition and reversion -----------------------------------------------


def test_compose_monomial_example():
    outer = parse_series_literal("0, 1, 1")          # z + z^2
    inner = ComplexSeries.monomial(2, 1.0, 4)        # z^2
    out = outer.compose(inner)
    assert out.coeffs == (0j, 0j, 1 + 0j, 0j, 1 + 0j)
    assert out.order == outer.order * 2


def test_compose_rejects_nonzero_inner_constant():
    outer = parse_series_literal("0, 1")
    with pytest.raises(InnerConstantTermNonzero):
        outer.compose(parse_series_literal("1, 1"))


def test_exp_log_inverse():
    a = parse_series_literal("1, 1").truncated(8)   # 1 + z
    back = a.log().exp()
    assert max(abs(x - y) for x, y in zip(back.coeffs, a.coeffs)) < EXACT


def test_log_exp_inverse_seeded():
    rng = np.random.default_rng(105)
    for _ in range(LOOPS):
        n = int(rng.integers(2, 9))
        a = rand_series(rng, n, lead=1.0)
        back = a.log().exp()
        assert back.order == a.order
        assert max(abs(x - y) for x, y in zip(back.coeffs, a.coeffs)) < 1e-10


def binomial_coeffs(alpha, order):
    """Fraction-exact coefficients of (1+z)^alpha, alpha rational."""
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * (alpha - (k - 1)) / k)
    return out


def test_pow_binomial_oracle():
    a = parse_series_literal("1, 1").truncated(10)
    got = a.pow(0.5)
    want = binomial_coeffs(Fraction(1, 2), 10)
    for g, w in zip(got.coeffs, want):
        assert abs(g - float(w)) < 1e-12


def test_pow_even_series_oracle():
    # (1 + z^2/2)^(1/2): substitute z^2/2 into the binomial series
    a = parse_series_literal("1, 0, 0.5").truncated(6)
    got = a.pow(0.5)
    b = binomial_coeffs(Fraction(1, 2), 3)
    want = [b[0], 0, b[1] / 2, 0, b[2] / 4, 0, b[3] / 8]
    for g, w in zip(got.coeffs, want):
        assert abs(g - float(w)) < 1e-12


def test_pow_integer_matches_mul():
    rng = np.random.default_rng(106)
    for _ in range(20):
        a = rand_series(rng, 6, lead=1.0)
        sq = a.pow(2.0)
        ref = a.mul(a)
        assert max(abs(x - y) for x, y in zip(sq.coeffs, ref.coeffs)) < 1e-10


def test_pow_requires_unit_constant():
    with pytest.raises(BadConstantTerm):
        parse_series_literal("2, 1").pow(0.5)


def test_reversion_closed_form():
    # g = z + a2 z^2 + a3 z^3 + a4 z^4 has inverse z - a2 z^2
    # + (2 a2^2 - a3) z^3 - (5 a2^3 - 5 a2 a3 + a4) z^4
    rng = np.random.default_rng(107)
    for _ in range(LOOPS):
        a2, a3, a4 = (complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                      for _ in range(3))
        g = ComplexSeries([0, 1, a2, a3, a4])
        inv = g.reversion()
        assert close(inv.coeffs[1], 1)
        assert close(inv.coeffs[2], -a2, 1e-10)
        assert close(inv.coeffs[3], 2 * a2 * a2 - a3, 1e-10)
        assert close(inv.coeffs[4], -(5 * a2 ** 3 - 5 * a2 * a3 + a4), 1e-10)


def test_reversion_roundtrip():
    rng = np.random.default_rng(108)
    for _ in range(20):
        n = int(rng.integers(3, 8))
        c = rng.uniform(-0.5, 0.5, n + 1) + 1j * rng.uniform(-0.5, 0.5, n + 1)
        c[0], c[1] = 0.0, 1.0
        g = ComplexSeries(c)
        h = g.reversion()
        ident = g.compose(h).truncated(n)
        want = ComplexSeries.identity(n)
        assert max(abs(x - y) for x, y in zip(ident.coeffs, want.coeffs)) < 1e-9


def test_reversion_requires_normalized():
    with pytest.raises(NotNormalized):
        parse_series_literal("0, 2").reversion()
    with pytest.raises(NotNormalized):
        parse_series_literal("1, 1").reversion()


# -- evaluation ---------------------------------------------------------------


def naive_eval(coeffs, z):
    return sum(c * z ** k for k, c in enumerate(coeffs))


def test_eval_matches_naive_sum():
    rng = np.random.default_rng(109)
    for _ in range(LOOPS):
        s = rand_series(rng, int(rng.integers(2, 12)))
        z = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
        want = naive_eval(s.coeffs, z)
        got = s.eval(z)
        assert abs(got - want) <= 1e-13 * max(1.0, abs(want))


def test_eval_known_point():
    s = parse_series_literal("0, 1, 0, 0.25")
    z = -2.0 / 3.0
    assert close(s.eval(z), z + 0.25 * z ** 3)
    assert close(s(z), s.eval(z))


def test_eval_vectorized():
    s = parse_series_literal("0, 1, 0.5")
    z = np.array([0.1, 0.2j, -0.3])
    got = s.eval(z)
    assert isinstance(got, np.ndarray)
    for zi, gi in zip(z, got):
        assert close(gi, naive_eval(s.coeffs, complex(zi)))


def test_tail_bound_dominates_remainder():
    rng = np.random.default_rng(110)
    for _ in range(LOOPS):
        full = rand_series(rng, 24)
        cut = full.truncated(8)
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        actual_tail = abs(full.eval(z) - cut.eval(z))
        # the bound is stated for coefficients capped by the truncation's
        # largest modulus, so rescale the dropped part before comparing
        cap = max(abs(c) for c in cut.coeffs)
        worst = max(abs(c) for c in full.coeffs[9:])
        if worst <= cap:
            assert cut.tail_bound(z) + 1e-15 >= actual_tail


def test_tail_bound_formula():
    s = parse_series_literal("0, 1, 0.5")
    z = 0.5
    cap = 1.0
    want = cap * abs(z) ** 3 / (1 - abs(z))
    assert math.isclose(s.tail_bound(z), want, rel_tol=1e-12)
