import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from setsize.dimension import estimate_dimension, fit_dimension, geometric_sweep, least_squares
from setsize.errors import InsufficientSamples
from setsize.pair import SizePair
from setsize.sets import CANTOR, SIERPINSKI, Box

F = Fraction


def test_geometric_sweep_is_exact():
    assert geometric_sweep("1/3", "1/3", 3) == [F(1, 3), F(1, 9), F(1, 27)]
    assert geometric_sweep(1, F(1, 2), 1) == [1]
    for bad in ((0, F(1, 2), 3), (1, 1, 3), (1, F(1, 2), 0)):
        with pytest.raises(ValueError):
            geometric_sweep(*bad)


@given(st.floats(-5, 5), st.floats(-5, 5), st.lists(st.integers(-50, 50), min_size=2, max_size=20, unique=True))
def test_least_squares_recovers_lines(a, b, xs):
    ys = [a * x + b for x in xs]
    slope, intercept, r2 = least_squares(xs, ys)
    assert slope == pytest.approx(a, abs=1e-9)
    assert intercept == pytest.approx(b, abs=1e-8)
    assert 0.0 <= r2 <= 1.0


def test_least_squares_noisy():
    slope, intercept, r2 = least_squares([0, 1, 2, 3], [0, 1, 1, 3])
    assert slope == pytest.approx(0.9)
    assert intercept == pytest.approx(-0.1)
    assert r2 == pytest.approx(0.81 * 5 / 4.75)


@pytest.mark.parametrize("model, r0, expected", [
    (CANTOR, F(1, 3), math.log(2) / math.log(3)),
    (SIERPINSKI, F(1, 2), math.log(3) / math.log(2)),
    (Box((0, 0), (1, 1)), F(1, 2), 2.0),
])
def test_exact_models(model, r0, expected):
    fit = estimate_dimension(model, geometric_sweep(r0, r0, 12))
    assert fit.slope == pytest.approx(expected, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    for d in fit.per_scale():
        assert d == pytest.approx(fit.slope, abs=1e-9)


def test_fit_skips_degenerate_counts():
    pairs = [SizePair(1, 1), SizePair(F(1, 2), 2), SizePair(F(1, 4), 4)]
    fit = fit_dimension(pairs)
    assert fit.used == (1, 2)
    assert fit.slope == pytest.approx(1.0)
    assert fit.per_scale() == [None, 1.0, 1.0]
    with pytest.raises(InsufficientSamples):
        fit_dimension(pairs[:2])
    with pytest.raises(InsufficientSamples):
        fit_dimension([SizePair(F(1, 2), 4), SizePair(F(1, 2), 5)])
