import pytest

from moyclock.laurent import (
    HalfPoly,
    box,
    is_trapezoidal,
    is_unimodal,
    parse,
    quantum_integer,
    render,
    strict_positive,
)


def test_quantum_integers():
    assert quantum_integer(1) == HalfPoly.one()
    # [2] = t^(1/2) + t^(-1/2)
    assert quantum_integer(2) == HalfPoly({1: 1, -1: 1})
    assert quantum_integer(3) == HalfPoly({-2: 1, 0: 1, 2: 1})
    assert quantum_integer(4).evaluate_at_one() == 4
    with pytest.raises(ValueError):
        quantum_integer(0)


def test_box():
    assert box(2, 4) == HalfPoly.from_int_coeffs([1, 1, 1], low=2)
    assert box(0, 0) == HalfPoly.one()
    with pytest.raises(ValueError):
        box(3, 2)


def test_arithmetic_and_shift():
    p = HalfPoly({0: 1, 2: 2})
    q = HalfPoly({2: -2, 4: 1})
    assert (p + q) == HalfPoly({0: 1, 4: 1})
    assert (p - p).is_zero()
    assert p * HalfPoly.monomial(2) == p.shift(2)
    assert (p * q).coeff(2) == -2


def test_canonicalize_and_doteq():
    p = HalfPoly({4: 1, 6: 2})
    assert p.canonicalize() == HalfPoly({0: 1, 2: 2})
    assert p.doteq(p.shift(-7))
    assert not p.doteq(p + HalfPoly.one())
    assert HalfPoly.zero().doteq(HalfPoly.zero())
    assert not HalfPoly.zero().doteq(p)
    with pytest.raises(ValueError):
        HalfPoly.zero().canonicalize()


def test_coeff_seq():
    assert HalfPoly({0: 1, 4: 3}).coeff_seq() == [1, 0, 3]
    assert quantum_integer(3).coeff_seq() == [1, 1, 1]
    with pytest.raises(ValueError):
        HalfPoly({0: 1, 1: 1}).coeff_seq()  # mixed parity


@pytest.mark.parametrize(
    "seq,expect",
    [
        ([1, 2, 3, 2, 1], True),
        ([1, 2, 2, 3], True),
        ([2, 1, 2], False),
        ([1], True),
    ],
)
def test_unimodal(seq, expect):
    assert is_unimodal(seq) is expect


@pytest.mark.parametrize(
    "seq,expect",
    [
        ([1, 2, 2, 1], True),
        ([1, 2, 3, 2, 1], True),
        ([1, 1, 2, 1, 1], False),  # plateau off the top
        ([1, 2, 1, 2, 1], False),
        ([1, 2, 2, 2, 1], True),
        ([], False),
    ],
)
def test_trapezoidal(seq, expect):
    assert is_trapezoidal(seq) is expect


def test_strict_positive():
    assert strict_positive([1, 2, 1])
    assert not strict_positive([1, 0, 1])  # gap
    assert not strict_positive([1, -1, 1])
    assert not strict_positive([0, 0])


def test_render_parse_roundtrip():
    cases = [
        HalfPoly.one(),
        quantum_integer(4),
        HalfPoly({-3: 2, 0: -1, 2: 5}),
        HalfPoly.from_int_coeffs([1, 2, 3, 3, 2, 1]),
        HalfPoly.zero(),
    ]
    for p in cases:
        assert parse(render(p)) == p


def test_render_examples():
    assert render(HalfPoly.from_int_coeffs([1, 2, 1])) == "1 + 2*t + t^2"
    assert render(HalfPoly({1: 1})) == "t^(1/2)"
    assert render(HalfPoly.zero()) == "0"
