"""Circle extrema, golden refinement, disc automorphisms, radius search."""

import warnings

import numpy as np
import pytest

from omegakit.disc import (
    DomainError,
    EvaluationFailure,
    MIN_GRID,
    NonMonotoneWarning,
    circle_min_real,
    circle_sup_modulus,
    q_map,
    radius_of_property,
)
from omegakit.funcrep import catalog, make_extremal, omega_functional

EXACT = 1e-12


# -- circle extrema ------------------------------------------------------------


def test_sup_modulus_squares():
    ext = circle_sup_modulus(lambda z: z * z, 0.5, grid=512)
    assert abs(ext.value - 0.25) < 1e-12
    assert ext.radius == 0.5
    assert ext.grid == 512


def test_sup_modulus_exact_tie_prefers_smallest_angle():
    ext = circle_sup_modulus(lambda z: 1.0 + 0.0 * z, 0.7, grid=256)
    assert ext.value == 1.0
    assert ext.angle == 0.0
    assert not ext.refined


def test_sup_modulus_peak_location():
    # |1 + z| peaks at angle 0
    ext = circle_sup_modulus(lambda z: 1.0 + z, 0.5, grid=1024)
    assert abs(ext.value - 1.5) < 1e-10
    assert min(ext.angle, 2 * np.pi - ext.angle) < 1e-3


def test_extremal_functional_boundary_sup():
    f = make_extremal(2)
    ext = circle_sup_modulus(lambda z: omega_functional(f, z), 1.0, grid=2048)
    assert abs(ext.value - 0.5) < 1e-9


def test_koebe_functional_sup_at_09():
    k = catalog("koebe")
    ext = circle_sup_modulus(lambda z: omega_functional(k, z), 0.9, grid=2048)
    assert abs(ext.value - 1620.0) < 1e-6 * 1620.0
    assert min(ext.angle, 2 * np.pi - ext.angle) < 1e-6


def test_min_real_extremal_starlike_kernel():
    # Re zf'/f for ftilde:2 at radius r has minimum (1-r)/(1-r/2) at z=-r
    ext = circle_min_real(lambda z: (1 + z) / (1 + z / 2), 0.99, grid=2048)
    want = (1 - 0.99) / (1 - 0.495)
    assert abs(ext.value - want) < 1e-10
    assert abs(ext.angle - np.pi) < 1e-5


def test_min_real_convex_kernel_touches_zero():
    # Re(1 + zf''/f') for ftilde:2 at r=1/2 attains exactly 0 at z=-1/2
    ext = circle_min_real(lambda z: 1 + z / (1 + z), 0.5, grid=2048)
    assert abs(ext.value) < 1e-10


def test_refinement_never_loses_to_grid():
    rng = np.random.default_rng(301)
    for _ in range(50):
        c = rng.uniform(-1, 1, 6) + 1j * rng.uniform(-1, 1, 6)

        def g(z, c=c):
            out = np.zeros_like(np.asarray(z, dtype=complex))
            for ck in c[::-1]:
                out = out * z + ck
            return out

        coarse = circle_sup_modulus(g, 0.8, grid=MIN_GRID, refine=False)
        fine = circle_sup_modulus(g, 0.8, grid=MIN_GRID)
        assert fine.value >= coarse.value - 1e-15


def test_sup_monotone_in_radius():
    # maximum modulus principle on a seeded batch of polynomials
    rng = np.random.default_rng(302)
    for _ in range(50):
        c = rng.uniform(-1, 1, 5) + 1j * rng.uniform(-1, 1, 5)

        def g(z, c=c):
            out = np.zeros_like(np.asarray(z, dtype=complex))
            for ck in c[::-1]:
                out = out * z + ck
            return out

        r1, r2 = sorted(rng.uniform(0.1, 0.99, 2))
        if r2 - r1 < 1e-3:
            continue
        v1 = circle_sup_modulus(g, r1, grid=512).value
        v2 = circle_sup_modulus(g, r2, grid=512).value
        assert v2 >= v1 - 1e-9


def test_grid_doubling_stability():
    f = make_extremal(3)
    a = circle_sup_modulus(lambda z: omega_functional(f, z), 1.0, grid=2048)
    b = circle_sup_modulus(lambda z: omega_functional(f, z), 1.0, grid=4096)
    assert abs(a.value - b.value) < 1e-8


def test_scalar_fallback_for_unvectorized_functional():
    def g(z):
        if isinstance(z, np.ndarray):
            raise TypeError("scalar only")
        return complex(z) ** 2

    ext = circle_sup_modulus(g, 0.5, grid=MIN_GRID)
    assert abs(ext.value - 0.25) < 1e-12


def test_nan_wraps_into_evaluation_failure():
    with pytest.raises(EvaluationFailure):
        circle_sup_modulus(lambda z: z * float("nan"), 0.5, grid=MIN_GRID)


def test_bad_args_rejected():
    with pytest.raises(DomainError):
        circle_sup_modulus(lambda z: z, 0.0, grid=512)
    with pytest.raises(DomainError):
        circle_sup_modulus(lambda z: z, 0.5, grid=7)


# -- disc automorphism -----------------------------------------------------------


def test_q_map_values():
    assert abs(q_map(0.5, 0.0, 0.5) - 0.25) < EXACT  # M(Mz+a)/(M+a
    assert abs(q_map(1.0, 0.0, 0.5) - 0.5) < EXACT
    assert abs(q_map(2.0, 0.0, 0.5) - 2.0 * (2 * 0.5) / 2.0) < EXACT


def test_q_map_circle_to_circle():
    rng = np.random.default_rng(303)
    for _ in range(40):
        m = rng.uniform(0.2, 3.0)
        a = (m - 1e-9) * rng.uniform(0, 0.99) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        th = rng.uniform(0, 2 * np.pi, 16)
        w = q_map(m, a, np.exp(1j * th))
        assert np.max(np.abs(np.abs(w) - m)) < 1e-9


def test_q_map_fixes_scaled_origin():
    # q(0) = a: the map carries 0 to the prescribed interior point
    assert abs(q_map(1.0, 0.3 + 0.1j, 0.0) - (0.3 + 0.1j)) < EXACT


def test_q_map_domain_errors():
    with pytest.raises(DomainError):
        q_map(-1.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        q_map(1.0, 2.0, 0.5)
    with pytest.raises(DomainError):
        q_map(1.0, 0.0, 1.5)


# -- radius of properties ---------------------------------------------------------


def test_convexity_radius_extremal2():
    f = make_extremal(2)
    res = radius_of_property(f, "convex", tol=1e-6, grid=1024)
    assert abs(res.radius - 0.5) < 1e-5
    assert res.bracket[1] - res.bracket[0] <= 1e-6 + 1e-12
    assert res.radius == res.bracket[0]


def test_convexity_radius_extremal3():
    f = make_extremal(3)
    res = radius_of_property(f, "convex", tol=1e-6, grid=1024)
    assert abs(res.radius - (4.0 / 9.0) ** 0.5) < 1e-5


def test_starlike_and_ctc_radius_full_disc():
    f = make_extremal(2)
    assert radius_of_property(f, "starlike", tol=1e-6, grid=512).radius == 1.0
    assert radius_of_property(f, "close_to_convex", tol=1e-6, grid=512).radius == 1.0


def test_omega_bound_radius_koebe():
    k = catalog("koebe")
    res = radius_of_property(k, "omega_bound", tol=1e-6, grid=512)
    # 2r^2/(1-r)^3 = 1/2 at the critical radius
    r = res.radius
    assert abs(2 * r * r / (1 - r) ** 3 - 0.5) < 1e-4


def test_radius_rejects_unknown_property():
    f = make_extremal(2)
    with pytest.raises(DomainError):
        radius_of_property(f, "bounded_turning", tol=1e-6, grid=512)


def test_radius_evaluation_counter_positive():
    f = make_extremal(2)
    res = radius_of_property(f, "convex", tol=1e-4, grid=512)
    assert res.evaluations > 0


def test_radius_no_warning_for_monotone_case():
    f = make_extremal(2)
    with warnings.catch_warnings():
        warnings.simplefilter("error", NonMonotoneWarning)
        radius_of_property(f, "convex", tol=1e-5, grid=512)
