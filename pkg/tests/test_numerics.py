import math

import pytest
from hypothesis import given, strategies as st

from kscolour.numerics import (
    QuadratureConfig,
    QuadratureError,
    erf,
    integrate,
    simplex_circumradius,
    sin_power_integral,
    surface_ratio,
)


def test_integrate_sine_half_period():
    assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)


def test_integrate_smooth_gaussian():
    value = integrate(lambda t: math.exp(-t * t), 0.0, 2.0)
    # 0.5*sqrt(pi)*erf(2)
    assert value == pytest.approx(0.5 * math.sqrt(math.pi) * math.erf(2.0), abs=1e-12)


def test_integrate_endpoint_singularity():
    # Integrable singularity at 0; nodes stay strictly interior.
    value = integrate(lambda t: 0.5 / math.sqrt(t), 0.0, 1.0)
    assert value == pytest.approx(1.0, abs=1e-9)


def test_integrate_empty_interval_is_exact_zero():
    assert integrate(math.sin, 1.25, 1.25) == 0.0


def test_integrate_reversed_bounds_rejected():
    with pytest.raises(ValueError):
        integrate(math.sin, 1.0, 0.0)


def test_integrate_non_finite_bounds_rejected():
    with pytest.raises(ValueError):
        integrate(math.sin, 0.0, math.inf)


def test_integrate_divergent_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda t: 1.0 / t, 0.0, 1.0)


def test_integrate_nan_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda t: math.nan, 0.0, 1.0)


def test_integrate_subdivision_budget_respected():
    cfg = QuadratureConfig(abs_tol=1e-300, rel_tol=1e-300, max_subdivisions=50)
    with pytest.raises(QuadratureError):
        integrate(math.sin, 0.0, math.pi, cfg)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=-1e-8)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)


def test_config_tightened():
    cfg = QuadratureConfig(abs_tol=1e-10, rel_tol=1e-8).tightened(0.5)
    assert cfg.abs_tol == 5e-11 and cfg.rel_tol == 5e-9


@given(
    coeffs=st.tuples(*[st.floats(-3.0, 3.0) for _ in range(4)]),
    a=st.floats(-4.0, 4.0),
    width=st.floats(0.0, 5.0),
)
def test_integrate_matches_cubic_antiderivative(coeffs, a, width):
    c0, c1, c2, c3 = coeffs
    b = a + width

    def f(t: float) -> float:
        return c0 + t * (c1 + t * (c2 + t * c3))

    def antider(t: float) -> float:
        return t * (c0 + t * (c1 / 2 + t * (c2 / 3 + t * c3 / 4)))

    scale = 1.0 + abs(antider(b) - antider(a))
    assert integrate(f, a, b) == pytest.approx(antider(b) - antider(a), abs=1e-10 * scale)


@given(a=st.floats(0.0, 2.0), mid=st.floats(0.0, 2.0), b=st.floats(0.0, 2.0))
def test_integrate_additive_over_splits(a, mid, b):
    lo, m, hi = sorted((a, mid, b))
    whole = integrate(math.exp, lo, hi)
    parts = integrate(math.exp, lo, m) + integrate(math.exp, m, hi)
    assert whole == pytest.approx(parts, abs=1e-10 * (1.0 + abs(whole)))


def test_sin_power_zero_exponent_is_length():
    assert sin_power_integral(0, 0.2, 1.7) == 1.7 - 0.2


def test_sin_power_one():
    assert sin_power_integral(1, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)


def test_sin_power_two_quarter():
    expected = math.pi / 8.0 - 0.25
    assert sin_power_integral(2, 0.0, math.pi / 4.0) == pytest.approx(expected, abs=1e-12)


def test_sin_power_validation():
    with pytest.raises(ValueError):
        sin_power_integral(-1, 0.0, 1.0)
    with pytest.raises(ValueError):
        sin_power_integral(1.5, 0.0, 1.0)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        sin_power_integral(2, -0.1, 1.0)
    with pytest.raises(ValueError):
        sin_power_integral(2, 0.0, math.pi + 0.1)
    with pytest.raises(ValueError):
        sin_power_integral(2, 1.0, 0.5)


@given(
    p=st.integers(min_value=2, max_value=40),
    lo=st.floats(0.0, math.pi),
    hi=st.floats(0.0, math.pi),
)
def test_sin_power_reduction_identity(p, lo, hi):
    # integral(sin^p) = [-sin^(p-1) cos / p] + (p-1)/p * integral(sin^(p-2))
    a, b = sorted((lo, hi))
    boundary = (
        math.sin(b) ** (p - 1) * math.cos(b) - math.sin(a) ** (p - 1) * math.cos(a)
    ) / p
    lhs = sin_power_integral(p, a, b)
    rhs = -boundary + (p - 1) / p * sin_power_integral(p - 2, a, b)
    assert lhs == pytest.approx(rhs, abs=1e-10)


def test_sin_power_large_exponent_stays_finite():
    p = 10**6
    edge = math.asin(math.sqrt((p + 1) / (p + 2)))
    val = sin_power_integral(p, edge, math.pi / 2.0)
    assert 0.0 < val < math.pi / 2.0


def test_surface_ratio_small_dimensions():
    assert surface_ratio(2) == pytest.approx(1.0 / math.pi, abs=1e-14)
    assert surface_ratio(3) == pytest.approx(0.5, abs=1e-14)
    assert surface_ratio(4) == pytest.approx(2.0 / math.pi, abs=1e-14)


def test_surface_ratio_rebuilds_sphere_volumes():
    # vol(S^(n-1)) follows from vol(S^0)=2 by dividing out the ratios.
    vol = 2.0
    expected = {2: 2.0 * math.pi, 3: 4.0 * math.pi, 4: 2.0 * math.pi**2}
    for n in range(2, 5):
        vol = vol / surface_ratio(n)
        assert vol == pytest.approx(expected[n], abs=1e-12)


def test_surface_ratio_asymptotics():
    n = 10**6
    assert surface_ratio(n) == pytest.approx(math.sqrt(n / (2.0 * math.pi)), rel=1e-5)
    assert math.isfinite(surface_ratio(10**7))


def test_surface_ratio_validation():
    with pytest.raises(ValueError):
        surface_ratio(1)
    with pytest.raises(ValueError):
        surface_ratio(3.0)  # type: ignore[arg-type]


def test_simplex_circumradius_values():
    assert simplex_circumradius(1) == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert simplex_circumradius(2) == pytest.approx(math.sqrt(2.0 / 3.0), abs=1e-15)
    assert simplex_circumradius(3) == pytest.approx(math.sqrt(0.75), abs=1e-15)


def test_simplex_circumradius_monotone_to_one():
    values = [simplex_circumradius(n) for n in range(1, 60)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < 1.0


def test_simplex_circumradius_complements_belt_bound():
    # cos(arcsin(R_(N-1))) = 1/sqrt(N): the belt edge in dimension N.
    for n_dim in (3, 4, 7, 25):
        edge = math.asin(simplex_circumradius(n_dim - 1))
        assert math.cos(edge) == pytest.approx(1.0 / math.sqrt(n_dim), abs=1e-12)


def test_simplex_circumradius_validation():
    with pytest.raises(ValueError):
        simplex_circumradius(0)


def test_erf_zero_and_symmetry():
    assert erf(0.0) == 0.0
    assert erf(0.7) == -erf(-0.7)


def test_erf_against_direct_quadrature():
    # Independent route: integrate the Gaussian directly.
    for z in (0.25, 0.5, 1.0 / math.sqrt(2.0), 1.0, 2.0, 3.0):
        direct = 2.0 / math.sqrt(math.pi) * integrate(lambda t: math.exp(-t * t), 0.0, z)
        assert erf(z) == pytest.approx(direct, abs=1e-13)


@given(a=st.floats(-5.0, 5.0), b=st.floats(-5.0, 5.0))
def test_erf_monotone(a, b):
    lo, hi = sorted((a, b))
    assert erf(lo) <= erf(hi)
