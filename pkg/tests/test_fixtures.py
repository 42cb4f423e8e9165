import pytest

from quasihopf.exactfield import prime_field, rationals
from quasihopf.fixtures import (
    CharTwo,
    FIXTURES,
    build_fixture,
    c4_hopf,
    group_hopf,
    h2,
    klein,
)
from quasihopf.involutory import is_involutory
from quasihopf.quasihopf import structures_equal, verify_quasihopf
from quasihopf.tensorcore import TensorElement, outer


def test_h2_structure(QI):
    H = h2(QI)
    assert H.dim == 2
    assert H.names == ["1", "g"]
    g = TensorElement.basis(H.algebra, (1,))
    assert g * g == H.unit_t(1)
    assert H.delta(g) == g.outer(g)
    assert H.alpha == g
    assert H.beta == H.unit_t(1)
    assert H.phi == H.phi_inv
    assert is_involutory(H).holds


def test_h2_char_two_rejected():
    with pytest.raises(CharTwo):
        h2(prime_field(2))


def test_h2_over_rationals_valid():
    assert verify_quasihopf(h2(rationals())).passed


def test_klein_variants(QI):
    Kx = klein(QI, "x")
    Kxy = klein(QI, "x_and_y")
    Kd = klein(QI, "xy")
    for K in (Kx, Kxy, Kd):
        assert K.dim == 4
        assert K.names == ["1", "x", "y", "xy"]
        assert verify_quasihopf(K).passed
    x = TensorElement.basis(Kx.algebra, (1,))
    xy = TensorElement.basis(Kx.algebra, (3,))
    assert Kx.alpha == x
    assert Kxy.alpha == xy
    assert Kd.alpha == xy
    # the product cocycle multiplies the two single-generator ones
    half = QI.from_int(2).inv()
    u = Kx.unit_t(1)
    px = (u - x).scale(half)
    y = TensorElement.basis(Kx.algebra, (2,))
    py = (u - y).scale(half)
    cx = Kx.unit_t(3) - outer(px, px, px).scale(2)
    cy = Kx.unit_t(3) - outer(py, py, py).scale(2)
    assert Kxy.phi == cx * cy
    assert Kx.phi == cx


def test_klein_rejects_unknown_cocycle(QI):
    with pytest.raises(ValueError):
        klein(QI, "z")


def test_c4(QI):
    C = c4_hopf(QI)
    assert C.dim == 4
    Y = TensorElement.basis(C.algebra, (1,))
    assert C.s_vec(Y) == TensorElement.basis(C.algebra, (3,))
    assert C.phi == C.unit_t(3)
    assert verify_quasihopf(C).passed


def test_group_hopf(QI):
    C2 = group_hopf([2], QI)
    assert C2.dim == 2
    assert is_involutory(C2).holds
    from quasihopf.quasihopf import drinfeld_twist

    assert drinfeld_twist(C2).F == C2.unit_t(2)
    K = group_hopf([2, 2], QI)
    assert K.dim == 4
    C6 = group_hopf([2, 3], QI)
    assert C6.dim == 6
    assert verify_quasihopf(C6).passed


def test_registry(QI):
    for name in FIXTURES:
        H = build_fixture(name, QI)
        assert verify_quasihopf(H).passed
    with pytest.raises(KeyError):
        build_fixture("nope", QI)


def test_h2h2_matches_tensor_square(QI):
    from quasihopf.quasihopf import tensor_product

    H = h2(QI)
    assert structures_equal(build_fixture("h2h2", QI), tensor_product(H, H))
