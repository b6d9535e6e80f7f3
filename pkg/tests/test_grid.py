import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rabipackets.errors import InvalidParameterError
from rabipackets.grid import build_grid, integrate


def test_build_grid_examples():
    g = build_grid(0, 10, 2001)
    assert g.p_min == -10 and g.dp == pytest.approx(0.01, rel=1e-14)
    g = build_grid(5, 0, 1)
    assert g.is_definite and list(g.points) == [5.0]
    g = build_grid(0, 20, 4096)
    assert g.dp == 40 / 4095


@pytest.mark.parametrize("args", [(0, 1, 0), (0, 1, 1), (0, -1, 10), (0, 0, 10), (0, 1, 2.5)])
def test_build_grid_rejects(args):
    with pytest.raises(InvalidParameterError):
        build_grid(*args)


def test_integrate_constant():
    g = build_grid(0, 10, 2001)
    assert abs(integrate(np.ones(2001), g) - 20.0) <= 1e-12


def test_integrate_gaussian_against_sqrt_pi():
    g = build_grid(0, 8, 4096)
    value = integrate(np.exp(-g.points**2), g)
    assert abs(value / math.sqrt(math.pi) - 1) <= 1e-10


def test_single_point_weight():
    assert integrate(np.array([0.25]), build_grid(3, 0, 1)) == 0.25


def test_length_mismatch():
    with pytest.raises(InvalidParameterError):
        integrate(np.ones(3), build_grid(0, 1, 4))


@settings(max_examples=50)
@given(st.floats(-5, 5), st.floats(-5, 5), st.integers(0, 2**32 - 1))
def test_linearity(alpha, beta, seed):
    rng = np.random.default_rng(seed)
    g = build_grid(0, 3, 301)
    f, h = rng.normal(size=(2, 301))
    lhs = integrate(alpha * f + beta * h, g)
    rhs = alpha * integrate(f, g) + beta * integrate(h, g)
    scale = abs(alpha) * integrate(abs(f), g) + abs(beta) * integrate(abs(h), g)
    assert abs(lhs - rhs) <= 1e-13 * max(scale, 1e-300) + 1e-300


def test_second_order_convergence():
    # exp(p) on [0, 1] does not vanish at the ends, so the trapezoid error is O(dp^2)
    exact = math.e - 1
    errors = []
    for n in (101, 201, 401):
        g = build_grid(0.5, 0.5, n)
        errors.append(abs(integrate(np.exp(g.points), g) - exact))
    assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.01)
    assert errors[1] / errors[2] == pytest.approx(4.0, rel=0.01)


def test_bit_reproducible():
    rng = np.random.default_rng(7)
    g = build_grid(0, 10, 4096)
    f = rng.normal(size=4096)
    values = {integrate(f, g) for _ in range(5)}
    assert len(values) == 1
