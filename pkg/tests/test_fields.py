from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nullgrid import FieldMismatchError, FieldSpec, is_probable_prime


def xgcd(a, b):
    """Independent extended-Euclid oracle for inverse checks."""
    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_r, old_s


@st.composite
def spec_and_elements(draw, count=3):
    if draw(st.booleans()):
        p = draw(st.sampled_from([2, 3, 5, 7, 13, 101]))
        spec = FieldSpec.prime(p)
        elems = [spec.element(draw(st.integers(0, p - 1))) for _ in range(count)]
    else:
        spec = FieldSpec.rationals()
        elems = [
            spec.element(Fraction(draw(st.integers(-40, 40)), draw(st.integers(1, 12))))
            for _ in range(count)
        ]
    return spec, elems


def test_spec_construction():
    assert FieldSpec.prime(2).characteristic == 2
    assert FieldSpec.prime(101).characteristic == 101
    assert FieldSpec.rationals().characteristic == 0
    with pytest.raises(ValueError):
        FieldSpec.prime(6)
    with pytest.raises(ValueError):
        FieldSpec.prime(1)
    with pytest.raises(ValueError):
        FieldSpec("prime", None)
    with pytest.raises(ValueError):
        FieldSpec("weird")


def test_primality_check():
    assert is_probable_prime(2) and is_probable_prime(3) and is_probable_prime(97)
    assert is_probable_prime(2**61 - 1)
    assert not is_probable_prime(1)
    assert not is_probable_prime(561)  # Carmichael
    assert not is_probable_prime(2**61 + 1)


def test_add_examples():
    f5 = FieldSpec.prime(5)
    assert (f5.element(3) + f5.element(4)).value == 2
    for x in range(5):
        assert (f5.zero + f5.element(x)) == f5.element(x)
    q = FieldSpec.rationals()
    assert (q.element(Fraction(1, 2)) * q.element(Fraction(2, 3))).value == Fraction(1, 3)


def test_inverse_examples():
    f7 = FieldSpec.prime(7)
    assert f7.element(3).inv().value == 5
    assert FieldSpec.prime(5).element(4).inv().value == 4
    for p in (2, 3, 5, 7, 13):
        spec = FieldSpec.prime(p)
        assert spec.one.inv() == spec.one
        for a in range(1, p):
            g, s = xgcd(a, p)
            assert g == 1
            assert spec.element(a).inv().value == s % p
    with pytest.raises(ZeroDivisionError):
        FieldSpec.prime(5).zero.inv()
    with pytest.raises(ZeroDivisionError):
        FieldSpec.rationals().zero.inv()


def test_pow_examples():
    f3 = FieldSpec.prime(3)
    assert (f3.element(2) ** 2).value == 1
    assert (f3.zero**0).value == 1  # empty product convention
    assert (FieldSpec.rationals().zero ** 0).value == 1
    f7 = FieldSpec.prime(7)
    assert (f7.element(3) ** 6).value == 1  # Fermat
    with pytest.raises(ValueError):
        f7.element(3) ** -1


def test_mismatched_specs():
    a = FieldSpec.prime(5).element(1)
    b = FieldSpec.prime(7).element(1)
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * FieldSpec.rationals().element(1)


def test_canonical_strings_round_trip():
    q = FieldSpec.rationals()
    for text in ("3/4", "-3/4", "7", "0"):
        assert str(q.element(text)) == text
    f11 = FieldSpec.prime(11)
    assert f11.element("-1").value == 10
    with pytest.raises(ValueError):
        f11.element("1/2")


def test_coercions_rejected():
    f5 = FieldSpec.prime(5)
    with pytest.raises(TypeError):
        f5.element(0.5)
    with pytest.raises(TypeError):
        f5.element(True)
    with pytest.raises(TypeError):
        f5.element(Fraction(1, 2))
    assert f5.element(Fraction(4, 1)).value == 4


@given(spec_and_elements())
def test_field_axioms(data):
    spec, (a, b, c) = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + spec.zero == a
    assert a * spec.one == a
    assert a + (-a) == spec.zero
    if not a.is_zero():
        assert a * a.inv() == spec.one


@given(spec_and_elements(count=1))
def test_unique_zero_representative(data):
    spec, (a,) = data
    z = a - a
    assert z == spec.zero
    assert z.value == spec.zero.value
    assert hash(z) == hash(spec.zero)


@given(spec_and_elements(count=2))
def test_sub_is_add_neg(data):
    _, (a, b) = data
    assert a - b == a + (-b)
