import pytest

from quasihopf.doublebos import quantum_double
from quasihopf.dualside import dualize
from quasihopf.exactfield import prime_field
from quasihopf.fixtures import c4_hopf, group_hopf, h2, klein
from quasihopf.quasihopf import structures_equal, verify_quasihopf
from quasihopf.repcat import regular_module, trivial_module
from quasihopf.serialize import (
    ParseError,
    emit_dual,
    emit_module,
    emit_structure,
    is_dual_file,
    parse_dual,
    parse_module,
    parse_structure,
)


def test_structure_round_trips(QI):
    H = h2(QI)
    fixtures = [H, klein(QI, "x"), klein(QI, "x_and_y"), klein(QI, "xy"),
                c4_hopf(QI), quantum_double(H).double,
                h2(prime_field(5)), group_hopf([3], prime_field(3))]
    for K in fixtures:
        text = emit_structure(K)
        back = parse_structure(text)
        assert structures_equal(K, back)
        assert emit_structure(back) == text
        assert verify_quasihopf(back).passed


def test_emitted_unit_is_rederived(QI):
    # the format stores no unit row; it is recovered by an exact solve
    H = klein(QI, "xy")
    back = parse_structure(emit_structure(H))
    assert back.algebra.unit == H.algebra.unit


def test_dual_round_trip(QI):
    A = dualize(h2(QI))
    text = emit_dual(A)
    assert is_dual_file(text)
    back = parse_dual(text)
    assert emit_dual(back) == text
    assert back.phi == A.phi and back.alpha == A.alpha


def test_module_round_trip(QI):
    H = h2(QI)
    for M in (trivial_module(H), regular_module(H)):
        text = emit_module(M)
        back = parse_module(text)
        assert back.dim == M.dim and back.mats == M.mats
        assert emit_module(back) == text


def test_parse_errors_carry_line_numbers(QI):
    good = emit_structure(h2(QI))
    lines = good.splitlines()
    # corrupt a scalar on a known line
    idx = next(i for i, l in enumerate(lines) if l.startswith("0 0 0 "))
    lines[idx] = "0 0 0 zebra"
    with pytest.raises(ParseError) as err:
        parse_structure("\n".join(lines))
    assert err.value.line == idx + 1

    with pytest.raises(ParseError) as err:
        parse_structure("field gaussian\ndim 2\nbasis 1 g\n7 7 7 1\n")
    assert "section" in str(err.value)

    with pytest.raises(ParseError):
        parse_structure("")

    with pytest.raises(ParseError):
        parse_structure("field quaternions\ndim 1\nbasis 1\n")


def test_parse_rejects_out_of_range_indices(QI):
    good = emit_structure(h2(QI))
    bad = good.replace("mult\n0 0 0 1", "mult\n0 0 5 1", 1)
    with pytest.raises(ParseError) as err:
        parse_structure(bad)
    assert "out of range" in str(err.value)


def test_module_parse_errors(QI):
    with pytest.raises(ParseError):
        parse_module("module dim x\nfield gaussian\n")
    with pytest.raises(ParseError):
        parse_module("module dim 1\nfield gaussian\nmat 0\n1 2\n")


def test_unitless_table_rejected(QI):
    text = (
        "field gaussian\ndim 2\nbasis a b\n"
        "mult\n"  # the zero algebra has no unit
        "comult\n0 0 0 1\n1 1 1 1\n"
        "counit\n0 1\n1 1\n"
        "phi\n0 0 0 1\n"
        "antipode\n0 0 1\n1 1 1\n"
        "alpha\n0 1\n"
        "beta\n0 1\n"
    )
    with pytest.raises(ParseError) as err:
        parse_structure(text)
    assert "unit" in str(err.value)
