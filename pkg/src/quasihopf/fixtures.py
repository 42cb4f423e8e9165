"""Canonical small quasi-Hopf algebras, built from generators and relations.

All structure constants are expanded in code and validated at construction,
so nothing is hand-transcribed.  The two-dimensional instance `h2` (group
algebra of C_2 with the nontrivial reassociator supported on the rank-one
idempotent) is the seed for every derived example in the test corpus.
"""

from __future__ import annotations

import itertools

from .exactfield import Field, Scalar  # Scalar appears in signatures via helpers
from .quasihopf import QuasiHopfAlgebra, tensor_product, verify_quasihopf
from .tensorcore import AlgebraData, CoalgebraData, LinMap, TensorElement, outer


class CharTwo(ValueError):
    """The construction divides by two."""


class FieldUnsuitable(ValueError):
    """The field lacks an element the construction needs."""


def _group_algebra(field: Field, elements, op, names) -> tuple[AlgebraData, CoalgebraData]:
    """Group algebra on an explicit element list; group-like coproduct."""
    n = len(elements)
    index = {g: i for i, g in enumerate(elements)}
    one = field.one()
    mult = [[{index[op(a, b)]: one} for b in elements] for a in elements]
    unit = {0: one}
    algebra = AlgebraData(field, n, mult, unit, names)
    comult = [{(i, i): one} for i in range(n)]
    counit = [one] * n
    coalgebra = CoalgebraData(field, n, comult, counit)
    return algebra, coalgebra


def _half(field: Field) -> Scalar:
    two = field.from_int(2)
    if not two:
        raise CharTwo("construction requires characteristic != 2")
    return two.inv()


def _projector_minus(algebra: AlgebraData, g_index: int) -> TensorElement:
    """(1 - g)/2 for an order-two group-like g."""
    h = _half(algebra.field)
    return TensorElement.vector(algebra, {0: h, g_index: -h})


def _cocycle_phi(algebra: AlgebraData, p_minus: TensorElement) -> TensorElement:
    """1 - 2 p⊗p⊗p on the given rank-one idempotent."""
    u3 = TensorElement.unit(algebra, 3)
    return u3 - outer(p_minus, p_minus, p_minus).scale(2)


def h2(field: Field) -> QuasiHopfAlgebra:
    """The two-dimensional quasi-Hopf algebra on k[C_2].

    Basis {1, g}; reassociator 1 - 2 p_-⊗p_-⊗p_- with p_- = (1-g)/2;
    identity antipode; distinguished elements α = g, β = 1.
    """
    if field.characteristic() == 2:
        raise CharTwo("h2 is undefined in characteristic 2")
    algebra, coalgebra = _group_algebra(
        field, [0, 1], lambda a, b: a ^ b, ["1", "g"]
    )
    p = _projector_minus(algebra, 1)
    phi = _cocycle_phi(algebra, p)
    S = LinMap.identity(field, 2)
    alpha = TensorElement.basis(algebra, (1,))
    beta = TensorElement.unit(algebra, 1)
    H = QuasiHopfAlgebra(algebra, coalgebra, phi, phi, S, alpha, beta)
    verify_quasihopf(H).require("h2 fixture")
    return H


KLEIN_COCYCLES = ("x", "x_and_y", "xy")


def klein(field: Field, cocycle: str = "x") -> QuasiHopfAlgebra:
    """k[C_2 x C_2] with one of three inequivalent reassociators.

    `cocycle` picks the supporting group-like: "x" (single generator,
    α = x), "x_and_y" (product of both single-generator cocycles, α = xy),
    or "xy" (the diagonal, α = xy).
    """
    if cocycle not in KLEIN_COCYCLES:
        raise ValueError(f"cocycle must be one of {KLEIN_COCYCLES}")
    if field.characteristic() == 2:
        raise CharTwo("klein fixtures are undefined in characteristic 2")
    elements = [(0, 0), (1, 0), (0, 1), (1, 1)]  # exponents of (x, y)
    names = ["1", "x", "y", "xy"]
    algebra, coalgebra = _group_algebra(
        field, elements, lambda a, b: (a[0] ^ b[0], a[1] ^ b[1]), names
    )
    px = _projector_minus(algebra, 1)
    py = _projector_minus(algebra, 2)
    pxy = _projector_minus(algebra, 3)
    if cocycle == "x":
        phi = _cocycle_phi(algebra, px)
        alpha = TensorElement.basis(algebra, (1,))
    elif cocycle == "x_and_y":
        phi = _cocycle_phi(algebra, px) * _cocycle_phi(algebra, py)
        alpha = TensorElement.basis(algebra, (3,))
    else:
        phi = _cocycle_phi(algebra, pxy)
        alpha = TensorElement.basis(algebra, (3,))
    phi_inv = phi if cocycle != "x_and_y" else (
        _cocycle_phi(algebra, py) * _cocycle_phi(algebra, px)
    )
    S = LinMap.identity(field, 4)
    beta = TensorElement.unit(algebra, 1)
    H = QuasiHopfAlgebra(algebra, coalgebra, phi, phi_inv, S, alpha, beta)
    verify_quasihopf(H).require(f"klein fixture ({cocycle})")
    return H


def c4_hopf(field: Field) -> QuasiHopfAlgebra:
    """k[C_4] as an ordinary Hopf algebra (trivial reassociator)."""
    algebra, coalgebra = _group_algebra(
        field, [0, 1, 2, 3], lambda a, b: (a + b) % 4, ["1", "Y", "Y2", "Y3"]
    )
    phi = TensorElement.unit(algebra, 3)
    cols = [{(-i) % 4: field.one()} for i in range(4)]
    S = LinMap(field, 4, 4, cols)
    one = TensorElement.unit(algebra, 1)
    H = QuasiHopfAlgebra(algebra, coalgebra, phi, phi, S, one, one)
    verify_quasihopf(H).require("c4 fixture")
    return H


def group_hopf(orders: list[int], field: Field) -> QuasiHopfAlgebra:
    """Ordinary group Hopf algebra of a product of cyclic groups."""
    elements = list(itertools.product(*[range(m) for m in orders]))

    def op(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, orders))

    def name(e):
        parts = []
        for i, v in enumerate(e):
            if v == 1:
                parts.append(f"g{i}")
            elif v > 1:
                parts.append(f"g{i}^{v}")
        return "*".join(parts) if parts else "1"

    algebra, coalgebra = _group_algebra(field, elements, op, [name(e) for e in elements])
    index = {e: i for i, e in enumerate(elements)}
    cols = [{index[tuple((-v) % m for v, m in zip(e, orders))]: field.one()}
            for e in elements]
    S = LinMap(field, len(elements), len(elements), cols)
    phi = TensorElement.unit(algebra, 3)
    one = TensorElement.unit(algebra, 1)
    H = QuasiHopfAlgebra(algebra, coalgebra, phi, phi, S, one, one)
    verify_quasihopf(H).require("group fixture")
    return H


def h2_tensor_square(field: Field) -> QuasiHopfAlgebra:
    """h2 ⊗ h2: k[C_2 x C_2] carrying the product of the two pulled-back cocycles."""
    H = h2(field)
    return tensor_product(H, H)


FIXTURES = {
    "h2": h2,
    "klein_x": lambda f: klein(f, "x"),
    "klein_xandy": lambda f: klein(f, "x_and_y"),
    "klein_xy": lambda f: klein(f, "xy"),
    "c4": c4_hopf,
    "h2h2": h2_tensor_square,
    "c2": lambda f: group_hopf([2], f),
    "c3": lambda f: group_hopf([3], f),
    "c2c2": lambda f: group_hopf([2, 2], f),
}


def build_fixture(name: str, field: Field) -> QuasiHopfAlgebra:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {sorted(FIXTURES)}")
    return FIXTURES[name](field)
