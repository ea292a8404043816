import pytest
from hypothesis import given, strategies as st

from matlift.errors import BadTarget, InsufficientValuation, NonUnit, SpecMismatch
from matlift.ring import (Family, RingElement, RingSpec, add, divide_by_pi_power, invert_unit, is_unit,
                          mul, reduce, sub, valuation)


def Z(p, ell, x):
    return RingSpec(p, ell)(x)


def test_add_sub_mul_examples():
    assert add(Z(3, 3, 20), Z(3, 3, 10)) == Z(3, 3, 3)
    assert 55 == 2 * 27 + 1
    assert mul(Z(3, 3, 5), Z(3, 3, 11)) == Z(3, 3, 1)
    assert sub(Z(5, 2, 0), Z(5, 2, 1)) == Z(5, 2, 24)


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        Z(3, 3, 1) + Z(3, 2, 1)


def test_is_unit_examples():
    assert is_unit(Z(3, 2, 5))
    assert not is_unit(Z(3, 2, 6))
    assert not is_unit(Z(5, 3, 0))


def test_invert_unit_examples():
    assert invert_unit(Z(3, 3, 5)) == Z(3, 3, 11)
    assert (2 * 13) % 25 == 1
    assert invert_unit(Z(5, 2, 2)) == Z(5, 2, 13)
    assert invert_unit(Z(3, 1, 2)) == Z(3, 1, 2)
    with pytest.raises(NonUnit):
        invert_unit(Z(3, 2, 6))


def test_valuation_examples():
    assert valuation(Z(3, 3, 18)) == 2
    assert valuation(Z(3, 3, 0)) == 3
    assert valuation(Z(5, 2, 7)) == 0


def test_divide_by_pi_power_examples():
    assert divide_by_pi_power(Z(3, 3, 18), 2) == Z(3, 3, 2)
    assert divide_by_pi_power(Z(5, 2, 0), 1) == Z(5, 2, 0)
    with pytest.raises(InsufficientValuation):
        divide_by_pi_power(Z(3, 3, 5), 1)


def test_reduce_examples():
    assert reduce(Z(3, 3, 25), 2) == Z(3, 2, 7)
    assert reduce(Z(5, 2, 24), 1) == Z(5, 1, 4)
    x = Z(7, 3, 123)
    assert reduce(x, 3) == x
    with pytest.raises(BadTarget):
        reduce(x, 4)
    with pytest.raises(BadTarget):
        reduce(x, 0)


def test_spec_validation_and_json():
    for bad in [(2, 3), (9, 2), (1, 1), (5, 0)]:
        with pytest.raises(ValueError):
            RingSpec(*bad)
    spec = RingSpec(5, 3, "series")
    assert spec.family is Family.SERIES
    assert RingSpec.from_json(spec.to_json()) == spec
    assert spec.to_json() == {"p": 5, "ell": 3, "family": "series"}


def test_series_family_basics():
    S = RingSpec(3, 3, Family.SERIES)
    u = RingElement(S, S.pi)
    assert u * u * u == RingElement(S, S.zero)
    x = S([1, 2, 0])          # 1 + 2u
    assert x.is_unit()
    assert x * x.inverse() == S(1)
    assert S([0, 0, 2]).valuation() == 2
    assert S([0, 1, 2]).divide_by_pi_power(1) == S([1, 2, 0])
    assert S([1, 2, 2]).reduce(2) == RingSpec(3, 2, Family.SERIES)([1, 2])
    # p = 0 in equal characteristic
    assert S(3) == S(0)


def test_elements_enumeration_matches_index():
    for spec in [RingSpec(3, 2), RingSpec(3, 2, Family.SERIES)]:
        elems = list(spec.elements())
        assert len(elems) == spec.order == 9
        assert [spec.index_of(x) for x in elems] == list(range(9))
        assert [spec.element_at(i) for i in range(9)] == elems


# --------------------------------------------------------------- properties

@st.composite
def ring_and_elements(draw, count=2):
    p = draw(st.sampled_from([3, 5, 7]))
    ell = draw(st.integers(1, 5))
    fam = draw(st.sampled_from(list(Family)))
    spec = RingSpec(p, ell, fam)
    xs = [spec.element_at(draw(st.integers(0, spec.order - 1))) for _ in range(count)]
    return spec, [RingElement(spec, x) for x in xs]


@given(ring_and_elements(), st.integers(1, 5))
def test_reduction_is_ring_map(data, m):
    spec, (x, y) = data
    m = min(m, spec.ell)
    assert (x * y).reduce(m) == x.reduce(m) * y.reduce(m)
    assert (x + y).reduce(m) == x.reduce(m) + y.reduce(m)
    assert (x - y).reduce(m) == x.reduce(m) - y.reduce(m)


@given(ring_and_elements(count=1))
def test_units_detected_in_residue_field(data):
    spec, (x,) = data
    assert x.is_unit() == x.reduce(1).is_unit()
    if x.is_unit():
        assert x * x.inverse() == RingElement(spec, spec.one)


@given(ring_and_elements(), st.integers(0, 5))
def test_divide_by_pi_power_inverts_multiplication(data, v):
    spec, (x, y) = data
    v = min(v, spec.ell)
    z = RingElement(spec, spec.pi_power(v)) * y
    q = z.divide_by_pi_power(v)
    if v < spec.ell:
        assert q.reduce(spec.ell - v) == y.reduce(spec.ell - v)
    assert RingElement(spec, spec.pi_power(v)) * q == z


@given(ring_and_elements())
def test_valuation_is_additive(data):
    spec, (x, y) = data
    assert (x * y).valuation() == min(spec.ell, x.valuation() + y.valuation())
