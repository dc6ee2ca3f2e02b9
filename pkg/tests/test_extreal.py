import math

import pytest

from clspaces.extreal import INF, ExtReal, ZeroTimesInfinityError


def test_addition_with_infinity():
    assert ExtReal(2.0) + INF == INF
    assert INF + 3 == INF
    assert float(ExtReal(1.5) + 2.5) == 4.0


def test_positive_scaling_of_infinity():
    assert 2.0 * INF == INF
    assert INF * 0.5 == INF


def test_zero_times_infinity_raises():
    with pytest.raises(ZeroTimesInfinityError):
        _ = 0.0 * INF
    with pytest.raises(ZeroTimesInfinityError):
        _ = ExtReal(0.0) * INF


def test_zero_times_finite_is_fine():
    assert float(ExtReal(0.0) * 5.0) == 0.0


def test_comparisons_against_numbers():
    assert ExtReal(2.0) < 3
    assert ExtReal(2.0) <= 2.0
    assert INF > 1e300
    assert ExtReal(4.0) == 4
    assert INF == math.inf


def test_domain_validation():
    with pytest.raises(ValueError):
        ExtReal(-1.0)
    with pytest.raises(ValueError):
        ExtReal(math.nan)


def test_float_conversion_and_flags():
    assert float(INF) == math.inf
    assert INF.is_inf and not INF.is_finite
    assert ExtReal(0.0).is_finite
