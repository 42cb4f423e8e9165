import pytest

from quasihopf.exactfield import prime_field
from quasihopf.fixtures import c4_hopf, group_hopf, h2, klein
from quasihopf.quasihopf import (
    InvalidTwist,
    QuasiHopfAlgebra,
    TwistData,
    antipode_transform,
    drinfeld_twist,
    gauge_twist,
    is_semisimple,
    left_integrals,
    normalized_integral,
    pq_elements,
    right_integrals,
    structures_equal,
    tensor_product,
    variants,
    verify_quasibialgebra,
    verify_quasihopf,
)
from quasihopf.tensorcore import TensorElement, outer


@pytest.fixture(scope="module")
def H(QI):
    return h2(QI)


def vec(H, i):
    return TensorElement.basis(H.algebra, (i,))


def p_pm(H):
    half = H.field.from_int(2).inv()
    u, g = H.unit_t(1), vec(H, 1)
    return (u - g).scale(half), (u + g).scale(half)


def test_fixture_axioms(QI):
    for make in (lambda: h2(QI), lambda: klein(QI, "x"), lambda: klein(QI, "x_and_y"),
                 lambda: klein(QI, "xy"), lambda: c4_hopf(QI),
                 lambda: group_hopf([2], QI)):
        H = make()
        assert verify_quasihopf(H).passed


def test_trivial_reassociator_hopf(QI):
    # an ordinary group Hopf algebra seen with the trivial reassociator
    C2 = group_hopf([2], QI)
    assert verify_quasibialgebra(C2).passed
    assert C2.phi == C2.unit_t(3)


def test_perturbed_reassociator_fails(QI):
    # dropping the factor two breaks invertibility (the candidate is a projection)
    H = h2(QI)
    p, _ = p_pm(H)
    bad_phi = H.unit_t(3) - outer(p, p, p)
    broken = QuasiHopfAlgebra(H.algebra, H.coalgebra, bad_phi, None,
                              H.antipode, H.alpha, H.beta)
    rep = verify_quasibialgebra(broken)
    assert not rep.passed
    assert any(e.check_id == "reassociator-invertible" and not e.passed
               for e in rep.entries)


def test_wrong_alpha_fails_zigzag(QI):
    H = h2(QI)
    broken = H.replace(alpha=H.unit_t(1))
    rep = verify_quasihopf(broken)
    failed = {e.check_id for e in rep.failures()}
    assert "antipode-zigzag" in failed
    # the offending value is 1 - 2 p_- (direct evaluation of the zigzag word)
    p, _ = p_pm(H)
    zig = TensorElement.zero(H.algebra, 1)
    for (a, b, c), coef in H.phi.coeffs.items():
        zig = zig + coef * H.mul(vec(H, a), vec(H, b), vec(H, c))
    assert zig == H.unit_t(1) - p.scale(2)


def test_drinfeld_twist_value(H):
    f = drinfeld_twist(H)
    p, pp = p_pm(H)
    expected = vec(H, 1).outer(p) + H.unit_t(1).outer(pp)
    assert f.F == expected
    assert f.F_inv == expected


def test_drinfeld_twist_trivial_for_hopf(QI):
    C4 = c4_hopf(QI)
    f = drinfeld_twist(C4)
    assert f.F == C4.unit_t(2)
    assert f.F_inv == C4.unit_t(2)


def test_pq_elements_values(H):
    pq = pq_elements(H)
    p, pp = p_pm(H)
    g, u = vec(H, 1), H.unit_t(1)
    assert pq.q_r == u.outer(pp) - g.outer(p)
    assert pq.p_l == u.outer(pp) + g.outer(p)  # equals the canonical twist
    assert pq.p_l == drinfeld_twist(H).F
    assert pq.report.passed


def test_pq_elements_hopf_collapse(QI):
    C4 = c4_hopf(QI)
    pq = pq_elements(C4)
    u2 = C4.unit_t(2)
    assert pq.p_r == u2 and pq.q_r == u2 and pq.p_l == u2 and pq.q_l == u2


def test_pq_identities_hold_on_all_fixtures(QI):
    # construction raises if any of the eight translation identities fails
    for make in (lambda: h2(QI), lambda: klein(QI, "x"),
                 lambda: klein(QI, "x_and_y"), lambda: klein(QI, "xy"),
                 lambda: c4_hopf(QI), lambda: group_hopf([2, 3], QI)):
        assert pq_elements(make()).report.passed


def test_gauge_twist_identity(H):
    F = TwistData(H.unit_t(2), H.unit_t(2))
    assert structures_equal(gauge_twist(H, F), H)


def test_gauge_twist_round_trip(H):
    f = drinfeld_twist(H)
    out = gauge_twist(gauge_twist(H, f), TwistData(f.F_inv, f.F))
    assert structures_equal(out, H)


def test_gauge_twist_rejects_bad_twist(H):
    g = vec(H, 1)
    with pytest.raises(InvalidTwist):
        gauge_twist(H, TwistData(g.outer(g), g.outer(g)))


def test_antipode_transform_identity(H):
    out = antipode_transform(H, H.unit_t(1))
    assert structures_equal(out, H)


def test_antipode_transform_alpha_inverse(H):
    # transforming along the inverse of alpha trivializes it
    from quasihopf.involutory import is_involutory

    cert = is_involutory(H)
    out = antipode_transform(H, cert.alpha_inv)
    assert out.alpha == H.unit_t(1)
    assert out.beta == H.beta * H.alpha
    assert verify_quasihopf(out).passed


def test_variants(H):
    for w in ("op", "cop", "opcop"):
        assert verify_quasihopf(variants(H, w)).passed
    assert structures_equal(variants(variants(H, "op"), "op"), H)
    # the base structure is cocommutative with a symmetric reassociator
    assert structures_equal(variants(H, "cop"), H)


def test_tensor_product_klein(QI):
    H = h2(QI)
    T = tensor_product(H, H)
    K = klein(QI, "x_and_y")
    assert structures_equal(T, K)
    assert T.dim == H.dim * H.dim
    # alpha is the product of the two generators
    assert T.alpha == TensorElement.basis(T.algebra, (3,))


def test_tensor_product_with_trivial(QI):
    H = h2(QI)
    E = group_hopf([1], QI)
    T = tensor_product(H, E)
    assert structures_equal(T, H)


def test_integrals(H):
    one = H.field.one()
    t = TensorElement.vector(H.algebra, {0: one, 1: one})
    basis = left_integrals(H)
    assert len(basis) == 1
    assert right_integrals(H)[0] == basis[0]
    lam = normalized_integral(H)
    p, pp = p_pm(H)
    assert lam == pp
    assert H.eps(lam).is_one()


def test_semisimplicity(QI):
    assert is_semisimple(h2(QI))
    C3 = group_hopf([3], prime_field(3))
    assert not is_semisimple(C3)
    assert normalized_integral(C3) is None
    # counit of the full group sum vanishes in characteristic three
    t = C3.unit_t(1)
    total = left_integrals(C3)[0]
    assert C3.eps(total) == C3.field.zero()


def test_normalization_rescales(QI):
    H = h2(QI)
    two = QI.from_int(2)
    scaled = QuasiHopfAlgebra(
        H.algebra, H.coalgebra, H.phi, H.phi_inv, H.antipode,
        H.alpha.scale(two), H.beta.scale(two.inv()))
    assert scaled.normalization_note is not None
    assert scaled.alpha == H.alpha
    assert verify_quasihopf(scaled).passed


def test_char_two_rejected(QI):
    from quasihopf.fixtures import CharTwo

    with pytest.raises(CharTwo):
        h2(prime_field(2))
    with pytest.raises(CharTwo):
        klein(prime_field(2), "x")


def test_h2_over_f5(QI):
    H5 = h2(prime_field(5))
    assert verify_quasihopf(H5).passed
    assert is_semisimple(H5)
