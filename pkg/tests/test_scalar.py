from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from elchi.scalar import (
    HM, HP, I, K, ONE, Z, ZERO,
    GaussianRational, ParamScalar, PoleAtZeroError, as_scalar, scalar_eval_z0,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(lambda a, b: GaussianRational(str(a), str(b)), rationals, rationals)
exps = st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
scalars = st.dictionaries(exps, gaussians, max_size=4).map(ParamScalar)


@given(scalars, scalars, scalars)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(scalars, scalars)
@settings(max_examples=40, deadline=None)
def test_conjugation_is_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


def test_gaussian_arithmetic():
    g = GaussianRational("1/2", "-3")
    assert g * g.inverse() == GaussianRational(1)
    assert str(I * I) == "-1"
    assert GaussianRational(Fraction(2, 4)) == GaussianRational("1/2")


def test_units_and_inverse():
    assert Z * Z ** -1 == ONE
    assert (I * Z ** 3).inverse() == -I * Z ** -3
    with pytest.raises(ZeroDivisionError):
        K.inverse()
    with pytest.raises(ZeroDivisionError):
        (ONE + Z).inverse()


def test_eval_z0():
    assert scalar_eval_z0(3 * ONE + Z * HP) == 3 * ONE
    assert scalar_eval_z0(K + Z ** 2) == K
    with pytest.raises(PoleAtZeroError):
        scalar_eval_z0(Z ** -1 + ONE)


def test_printing():
    assert str(ONE) == "1"
    assert str(ZERO) == "0"
    assert str(as_scalar(1) - Z * HP / 2) == "1 - 1/2*z*h+"
    assert str(GaussianRational(1, 2)) == "(1 + 2*i)"


def test_scale_params():
    a = HP * HM + K
    assert a.scale_params(hp=GaussianRational(0, -1)) == -I * HP * HM + K
