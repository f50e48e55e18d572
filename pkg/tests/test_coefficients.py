from fractions import Fraction

import pytest

from pointres.coefficients import QQ, RationalFunctionField, genericity_log, make_field


def test_rational_field_basics():
    assert QQ(3) == Fraction(3)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)
    assert QQ.format(Fraction(-3, 4)) == "-3/4"
    assert QQ.latex(Fraction(-3, 4)) == r"-\frac{3}{4}"
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_make_field_dispatch():
    assert make_field(()) is QQ
    K = make_field(("t",))
    assert isinstance(K, RationalFunctionField)
    assert K == make_field(["t"])
    with pytest.raises(ValueError):
        make_field(("t", "t"))


def test_integral_scale_primitive_and_sign():
    s = QQ.integral_scale([Fraction(3, 2), Fraction(-9, 4)], sign_ref=Fraction(-1))
    assert s * Fraction(3, 2) == -2 and s * Fraction(-9, 4) == 3


def test_ratfunc_canonical_and_format():
    K = make_field(("t",))
    t = K.gen("t")
    a = (t ** 2 - 1) / (t - 1)
    assert a == t + 1
    assert K.format(K.inv(t + 1)) == "(1)/(t+1)"
    assert K.format(-t ** 22 * Fraction(5, 3)) == "-5/3*t^22"
    assert K.is_constant(K(Fraction(1, 2))) and not K.is_constant(t)
    assert K.constant_value(K(Fraction(1, 2))) == Fraction(1, 2)


def test_genericity_log_records_divisors():
    K = make_field(("s", "t"))
    s, t = K.gen("s"), K.gen("t")
    with genericity_log() as outer:
        K.inv(s * t ** 2)
        with genericity_log() as inner:
            K.inv(s + t)
    assert set(outer) >= {"s", "t", "s+t"}
    assert "s+t" in inner and "s" not in inner
    K.inv(t)  # no active log: nothing recorded, nothing raised


def test_ratfunc_zero_division():
    K = make_field(("t",))
    with pytest.raises(ZeroDivisionError):
        K.inv(K(0))
