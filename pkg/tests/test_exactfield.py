import pytest
from hypothesis import given, strategies as st

from quasihopf.exactfield import (
    DivisionByZero,
    Field,
    FieldError,
    ScalarParseError,
    fourth_root_of_unity,
    gaussian,
    prime_field,
    rationals,
)


def scalars(field, max_num=30):
    ints = st.integers(-max_num, max_num)
    dens = st.integers(1, 12)
    if field.kind == "fp":
        return st.builds(field.from_int, ints)
    if field.kind == "rationals":
        return st.builds(lambda a, b: field.from_int(a) / field.from_int(b), ints, dens)
    return st.builds(
        lambda a, b, c, d: field.from_int(a) / field.from_int(b)
        + field.i() * (field.from_int(c) / field.from_int(d)),
        ints, dens, ints, dens,
    )


def test_basic_arithmetic_examples(QI, QQ, F5):
    i = QI.i()
    one = QI.one()
    assert (one + i) * (one - i) == QI.from_int(2)
    half = QQ.from_int(1) / QQ.from_int(2)
    assert half + half == QQ.one()
    # brute-force oracle in F5: 2*k = 1 mod 5 at k = 3
    inv2 = next(k for k in range(5) if (2 * k) % 5 == 1)
    assert inv2 == 3
    assert F5.from_int(2).inv() == F5.from_int(3)


def test_division_by_zero(QI):
    with pytest.raises(DivisionByZero):
        QI.zero().inv()
    with pytest.raises(DivisionByZero):
        QI.one() / QI.zero()


def test_fourth_roots(QI, QQ, F5):
    assert fourth_root_of_unity(QI) == QI.i()
    assert fourth_root_of_unity(QI) ** 2 == -QI.one()
    assert fourth_root_of_unity(QQ) is None
    # brute force over F5: the least residue squaring to -1
    expected = next(w for w in range(2, 5) if (w * w) % 5 == 4)
    assert expected == 2
    assert fourth_root_of_unity(F5) == F5.from_int(2)
    assert fourth_root_of_unity(prime_field(7)) is None
    assert fourth_root_of_unity(prime_field(2)) is None
    assert fourth_root_of_unity(prime_field(13)) ** 2 == -prime_field(13).one()


def test_characteristic(QI, QQ, F5):
    assert QI.characteristic() == 0
    assert QQ.characteristic() == 0
    assert prime_field(7).characteristic() == 7


def test_field_headers_round_trip(QI, QQ, F5):
    for f in (QI, QQ, F5):
        assert Field.from_header(f.header()) == f
    with pytest.raises(FieldError):
        Field.from_header("septic")
    with pytest.raises(FieldError):
        prime_field(6)


@pytest.mark.parametrize("fieldname", ["gaussian", "rationals", "fp"])
def test_scalar_text_round_trip(fieldname, QI, QQ, F5):
    field = {"gaussian": QI, "rationals": QQ, "fp": F5}[fieldname]
    samples = ["0", "1", "-1", "7", "2"]
    if field.kind != "fp":
        samples += ["1/2", "-3/4", "17/12"]
    if field.kind == "gaussian":
        samples += ["i", "-i", "1/2+1/2*i", "-3/4-7/8*i", "2*i", "1-i", "3+i"]
    for text in samples:
        s = field.parse(text)
        assert field.parse(field.format(s)) == s


def test_parse_rejects_garbage(QI, QQ):
    for bad in ["", "x", "1/?", "i*i"]:
        with pytest.raises(ScalarParseError):
            QI.parse(bad)
    with pytest.raises(ScalarParseError):
        QQ.parse("1+2*i")


def test_sqrt(QI, QQ, F5):
    four = QI.from_int(4)
    assert QI.sqrt(four) in (QI.from_int(2), QI.from_int(-2))
    assert QI.sqrt(-QI.one()) ** 2 == -QI.one()
    assert QQ.sqrt(-QQ.one()) is None
    assert QQ.sqrt(QQ.from_int(2)) is None
    # 2i = (1+i)^2
    s = QI.sqrt(QI.i() * QI.from_int(2))
    assert s is not None and s * s == QI.i() * QI.from_int(2)
    r = F5.sqrt(F5.from_int(4))
    assert r is not None and r * r == F5.from_int(4)


def test_roots_of_unity(QI, QQ, F5):
    assert len(QI.roots_of_unity(4)) == 4
    assert len(QQ.roots_of_unity(4)) == 2
    assert len(F5.roots_of_unity(4)) == 4
    assert len(prime_field(3).roots_of_unity(3)) == 1
    for z in QI.roots_of_unity(4):
        assert z ** 4 == QI.one()


@pytest.mark.parametrize("make", [gaussian, rationals, lambda: prime_field(7)])
def test_field_axioms_random(make):
    field = make()

    @given(scalars(field), scalars(field), scalars(field))
    def inner(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == field.zero()
        if b:
            assert (a / b) * b == a
            assert b * b.inv() == field.one()

    inner()


def test_mixed_field_arithmetic_rejected(QI, QQ):
    with pytest.raises(FieldError):
        QI.one() + QQ.one()
