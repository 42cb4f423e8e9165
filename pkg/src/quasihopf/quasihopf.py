"""Quasi-Hopf algebras with exact axiom verification and the canonical derived data.

The central type couples a structure-constant algebra with a quasi-coassociative
coalgebra, a reassociator, and an antipode triple (S, alpha, beta).  Everything
the rest of the package builds (twists, doubles, bosonizations, duals) starts
from here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .exactfield import Scalar
from .tensorcore import (
    AlgebraData,
    CoalgebraData,
    LinMap,
    NotInvertible,
    TensorElement,
    apply_legs,
    flip,
    invert_in_tensor_power,
    leg_product,
    permute_legs,
    place,
    solve_linear,
)


class FieldMismatch(ValueError):
    pass


class InvalidTwist(ValueError):
    pass


class InternalInconsistency(AssertionError):
    """A derived identity that must hold by theory failed; indicates a bug or
    an invalid input structure."""


class AntipodeNotInvertible(ValueError):
    pass


# -- verification reports -------------------------------------------------------


@dataclass
class CheckResult:
    check_id: str
    statement: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        tail = "" if self.passed else (f" {self.witness}" if self.witness else "")
        return f"CHECK {self.check_id} {'PASS' if self.passed else 'FAIL'}{tail}"


@dataclass
class VerificationReport:
    entries: list = dc_field(default_factory=list)

    def add(self, check_id: str, statement: str, passed: bool, witness=None):
        if witness is not None and not isinstance(witness, str):
            witness = str(witness)
        self.entries.append(CheckResult(check_id, statement, bool(passed), witness))

    def merge(self, other: "VerificationReport"):
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]

    def lines(self):
        return [e.line() for e in self.entries]

    def __str__(self):
        return "\n".join(self.lines())

    def require(self, context: str):
        if not self.passed:
            bad = ", ".join(e.check_id for e in self.failures())
            raise InternalInconsistency(f"{context}: failed checks: {bad}")
        return self


# -- the structure types ----------------------------------------------------------


class QuasiBialgebra:
    """Algebra + coalgebra + invertible reassociator, quasi-coassociative."""

    def __init__(self, algebra: AlgebraData, coalgebra: CoalgebraData,
                 phi: TensorElement, phi_inv: TensorElement | None):
        self.field = algebra.field
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.phi = phi
        self.phi_inv = phi_inv
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def names(self):
        return self.algebra.names

    # -- small element helpers -----------------------------------------------

    def vec(self, i: int) -> TensorElement:
        return TensorElement.basis(self.algebra, (i,))

    def unit_t(self, arity: int = 1) -> TensorElement:
        return TensorElement.unit(self.algebra, arity)

    def mul(self, *elems: TensorElement) -> TensorElement:
        out = elems[0]
        for e in elems[1:]:
            out = out * e
        return out

    def apply(self, elem: TensorElement, ops) -> TensorElement:
        return apply_legs(elem, ops, self.coalgebra)

    def delta(self, v: TensorElement) -> TensorElement:
        """Coproduct of an arity-1 element."""
        return self.apply(v, ["comult"])

    def delta_basis(self, i: int) -> TensorElement:
        return TensorElement(self.algebra, 2, dict(self.coalgebra.comult[i]))

    def delta2_basis(self, i: int) -> TensorElement:
        """(Δ ⊗ id)Δ on a basis element: legs h_(1,1), h_(1,2), h_2."""
        return self.apply(self.delta_basis(i), ["comult", None])

    def eps(self, v: TensorElement) -> Scalar:
        out = self.field.zero()
        for (i,), c in v.coeffs.items():
            out = out + c * self.coalgebra.counit[i]
        return out


class QuasiHopfAlgebra(QuasiBialgebra):
    """Quasi-bialgebra with antipode S and distinguished elements alpha, beta.

    On construction, alpha and beta are rescaled to have counit one whenever
    their counits multiply to one; the adjustment is kept in
    `normalization_note` so reports can surface it.
    """

    def __init__(self, algebra, coalgebra, phi, phi_inv, antipode: LinMap,
                 alpha: TensorElement, beta: TensorElement, normalize=True):
        super().__init__(algebra, coalgebra, phi, phi_inv)
        self.antipode = antipode
        self.alpha = alpha
        self.beta = beta
        self.normalization_note = None
        if normalize:
            ea, eb = self.eps(alpha), self.eps(beta)
            if ea * eb == self.field.one() and not ea.is_one():
                self.alpha = alpha.scale(ea.inv())
                self.beta = beta.scale(eb.inv())
                self.normalization_note = (
                    f"rescaled distinguished elements by {ea.inv()} / {eb.inv()} "
                    "to normalize their counits"
                )

    # -- antipode helpers -------------------------------------------------------

    def s_vec(self, v: TensorElement) -> TensorElement:
        return self.antipode.apply_tensor(v)

    @property
    def antipode_inverse(self) -> LinMap:
        inv = self._cache.get("antipode_inverse")
        if inv is None:
            try:
                inv = self.antipode.inverse()
            except NotInvertible as exc:
                raise AntipodeNotInvertible(str(exc)) from exc
            self._cache["antipode_inverse"] = inv
        return inv

    def sinv_vec(self, v: TensorElement) -> TensorElement:
        return self.antipode_inverse.apply_tensor(v)

    def replace(self, *, coalgebra=None, phi=None, phi_inv=None, antipode=None,
                alpha=None, beta=None, normalize=True) -> "QuasiHopfAlgebra":
        return QuasiHopfAlgebra(
            self.algebra,
            coalgebra if coalgebra is not None else self.coalgebra,
            phi if phi is not None else self.phi,
            phi_inv if phi_inv is not None else self.phi_inv,
            antipode if antipode is not None else self.antipode,
            alpha if alpha is not None else self.alpha,
            beta if beta is not None else self.beta,
            normalize=normalize,
        )


def structures_equal(h: QuasiHopfAlgebra, k: QuasiHopfAlgebra) -> bool:
    """Structure-for-structure equality of all defining data."""
    return (
        h.field == k.field
        and h.algebra.equal_structure(k.algebra)
        and h.coalgebra.equal_structure(k.coalgebra)
        and h.phi.coeffs == k.phi.coeffs
        and (h.phi_inv is None) == (k.phi_inv is None)
        and (h.phi_inv is None or h.phi_inv.coeffs == k.phi_inv.coeffs)
        and h.antipode.cols == k.antipode.cols
        and h.alpha.coeffs == k.alpha.coeffs
        and h.beta.coeffs == k.beta.coeffs
    )


@dataclass
class TwistData:
    """An invertible counit-normalized element of H ⊗ H and its inverse."""

    F: TensorElement
    F_inv: TensorElement

    def validate(self, H: QuasiBialgebra) -> VerificationReport:
        rep = VerificationReport()
        u1, u2 = H.unit_t(1), H.unit_t(2)
        rep.add("twist-counit", "(eps⊗id)(F) = (id⊗eps)(F) = 1",
                H.apply(self.F, ["counit", None]) == u1
                and H.apply(self.F, [None, "counit"]) == u1)
        rep.add("twist-invertible", "F F^{-1} = F^{-1} F = 1⊗1",
                self.F * self.F_inv == u2 and self.F_inv * self.F == u2)
        return rep


# -- axiom verification -------------------------------------------------------------


def _first_basis_witness(H, pairs):
    """pairs: iterable of (label, lhs, rhs) with TensorElement values."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return f"{label}: lhs={lhs.pretty()} rhs={rhs.pretty()}"
    return None


def verify_quasibialgebra(H: QuasiBialgebra) -> VerificationReport:
    """Check every defining identity of a quasi-bialgebra, exactly."""
    rep = VerificationReport()
    alg, co = H.algebra, H.coalgebra
    n = H.dim
    one = H.field.one()

    w = alg.check_associativity()
    rep.add("algebra-associativity", "(ab)c = a(bc) on basis triples", w is None,
            None if w is None else f"triple {w}")
    w = alg.check_unit()
    rep.add("algebra-unit", "1·a = a·1 = a", w is None,
            None if w is None else f"basis {w}")

    w = co.check_counit()
    rep.add("counit", "(id⊗eps)Δ = id = (eps⊗id)Δ", w is None,
            None if w is None else f"basis {w}")

    bad = None
    for i in range(n):
        for j in range(n):
            lhs = H.delta(H.vec(i) * H.vec(j))
            rhs = H.delta_basis(i) * H.delta_basis(j)
            if lhs != rhs:
                bad = f"pair ({i},{j})"
                break
        if bad:
            break
    unital = H.delta(H.unit_t(1)) == H.unit_t(2)
    rep.add("comult-multiplicative", "Δ(ab) = Δ(a)Δ(b) and Δ(1) = 1⊗1",
            bad is None and unital, bad or (None if unital else "unit"))

    bad = None
    for i in range(n):
        for j in range(n):
            if H.eps(H.vec(i) * H.vec(j)) != co.counit[i] * co.counit[j]:
                bad = f"pair ({i},{j})"
                break
        if bad:
            break
    rep.add("counit-multiplicative", "eps(ab) = eps(a)eps(b) and eps(1) = 1",
            bad is None and H.eps(H.unit_t(1)) == one, bad)

    u3 = H.unit_t(3)
    inv_ok = H.phi_inv is not None and H.phi * H.phi_inv == u3 and H.phi_inv * H.phi == u3
    rep.add("reassociator-invertible", "Φ Φ^{-1} = Φ^{-1} Φ = 1⊗1⊗1", inv_ok)

    if inv_ok:
        pairs = []
        for i in range(n):
            d = H.delta_basis(i)
            lhs = H.apply(d, [None, "comult"])
            rhs = H.phi * H.apply(d, ["comult", None]) * H.phi_inv
            pairs.append((f"basis {i}", lhs, rhs))
        w = _first_basis_witness(H, pairs)
        rep.add("quasi-coassociativity", "(id⊗Δ)Δ(h) = Φ (Δ⊗id)Δ(h) Φ^{-1}",
                w is None, w)

        lhs = (place(H.phi, 4, (1, 2, 3))
               * H.apply(H.phi, [None, "comult", None])
               * place(H.phi, 4, (0, 1, 2)))
        rhs = H.apply(H.phi, [None, None, "comult"]) * H.apply(H.phi, ["comult", None, None])
        rep.add("pentagon", "(1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)",
                lhs == rhs,
                None if lhs == rhs else f"lhs={lhs.pretty()} rhs={rhs.pretty()}")

    u2 = H.unit_t(2)
    mid = H.apply(H.phi, [None, "counit", None]) == u2
    left = H.apply(H.phi, ["counit", None, None]) == u2
    right = H.apply(H.phi, [None, None, "counit"]) == u2
    rep.add("reassociator-counit",
            "(id⊗eps⊗id)(Φ) = (eps⊗id⊗id)(Φ) = (id⊗id⊗eps)(Φ) = 1⊗1",
            mid and left and right,
            None if (mid and left and right) else f"mid={mid} left={left} right={right}")
    return rep


def verify_quasihopf(H: QuasiHopfAlgebra, include_base: bool = True) -> VerificationReport:
    """Antipode axioms on top of the quasi-bialgebra ones."""
    rep = verify_quasibialgebra(H) if include_base else VerificationReport()
    n = H.dim
    one = H.field.one()
    S = H.antipode

    bad = None
    for i in range(n):
        for j in range(n):
            if H.s_vec(H.vec(i) * H.vec(j)) != H.s_vec(H.vec(j)) * H.s_vec(H.vec(i)):
                bad = f"pair ({i},{j})"
                break
        if bad:
            break
    unital = H.s_vec(H.unit_t(1)) == H.unit_t(1)
    rep.add("antipode-antimultiplicative", "S(ab) = S(b)S(a) and S(1) = 1",
            bad is None and unital, bad or (None if unital else "unit"))

    bad = None
    for i in range(n):
        if H.eps(H.s_vec(H.vec(i))) != H.coalgebra.counit[i]:
            bad = f"basis {i}"
            break
    rep.add("antipode-counit", "eps∘S = eps", bad is None, bad)

    pairs_l, pairs_r = [], []
    for i in range(n):
        d = H.delta_basis(i)
        lhs_l = TensorElement.zero(H.algebra, 1)
        lhs_r = TensorElement.zero(H.algebra, 1)
        for (a, b), c in d.coeffs.items():
            lhs_l = lhs_l + c * H.mul(H.s_vec(H.vec(a)), H.alpha, H.vec(b))
            lhs_r = lhs_r + c * H.mul(H.vec(a), H.beta, H.s_vec(H.vec(b)))
        eps_i = H.coalgebra.counit[i]
        pairs_l.append((f"basis {i}", lhs_l, H.alpha.scale(eps_i)))
        pairs_r.append((f"basis {i}", lhs_r, H.beta.scale(eps_i)))
    w = _first_basis_witness(H, pairs_l)
    rep.add("antipode-left", "S(h_1) α h_2 = eps(h) α", w is None, w)
    w = _first_basis_witness(H, pairs_r)
    rep.add("antipode-right", "h_1 β S(h_2) = eps(h) β", w is None, w)

    if H.phi_inv is not None:
        zig = TensorElement.zero(H.algebra, 1)
        for (a, b, c), coef in H.phi.coeffs.items():
            zig = zig + coef * H.mul(H.vec(a), H.beta, H.s_vec(H.vec(b)), H.alpha, H.vec(c))
        zag = TensorElement.zero(H.algebra, 1)
        for (a, b, c), coef in H.phi_inv.coeffs.items():
            zag = zag + coef * H.mul(H.s_vec(H.vec(a)), H.alpha, H.vec(b), H.beta,
                                     H.s_vec(H.vec(c)))
        ok = zig == H.unit_t(1) and zag == H.unit_t(1)
        rep.add("antipode-zigzag",
                "X^1 β S(X^2) α X^3 = 1 and S(x^1) α x^2 β S(x^3) = 1", ok,
                None if ok else f"zig={zig.pretty()} zag={zag.pretty()}")

    ok = H.eps(H.alpha).is_one() and H.eps(H.beta).is_one()
    rep.add("distinguished-counits", "eps(α) = eps(β) = 1", ok,
            None if ok else f"eps(α)={H.eps(H.alpha)} eps(β)={H.eps(H.beta)}"
            + (f"; {H.normalization_note}" if H.normalization_note else ""))
    return rep


# -- Drinfeld twist ------------------------------------------------------------------


def drinfeld_twist(H: QuasiHopfAlgebra) -> TwistData:
    """The canonical gauge element f making S an anti-coalgebra morphism up to
    conjugation, with all of its defining identities re-verified exactly."""
    cached = H._cache.get("drinfeld_twist")
    if cached is not None:
        return cached
    S = H.antipode
    alg = H.algebra

    A = place(H.phi, 4, (0, 1, 2)) * H.apply(H.phi_inv, ["comult", None, None])
    B = H.apply(H.phi, ["comult", None, None]) * place(H.phi_inv, 4, (0, 1, 2))
    AS = apply_legs(A, [S, S, None, None], H.coalgebra)
    BS = apply_legs(B, [None, None, S, S], H.coalgebra)
    gamma = leg_product(alg, 2, "A2.u1.A3 | A1.v1.A4", A=AS, u=H.alpha, v=H.alpha)
    delta = leg_product(alg, 2, "B1.u1.B4 | B2.v1.B3", B=BS, u=H.beta, v=H.beta)

    f = TensorElement.zero(alg, 2)
    f_inv = TensorElement.zero(alg, 2)
    for (x1, x2, x3), c in H.phi_inv.coeffs.items():
        t1 = apply_legs(flip(H.delta_basis(x1)), [S, S], H.coalgebra)
        w = H.mul(H.vec(x2), H.beta, H.s_vec(H.vec(x3)))
        f = f + c * (t1 * gamma * H.delta(w))
        w2 = H.mul(H.s_vec(H.vec(x1)), H.alpha, H.vec(x2))
        t3 = apply_legs(flip(H.delta_basis(x3)), [S, S], H.coalgebra)
        f_inv = f_inv + c * (H.delta(w2) * delta * t3)

    rep = VerificationReport()
    u2 = H.unit_t(2)
    rep.add("twist-invertible", "f f^{-1} = f^{-1} f = 1⊗1",
            f * f_inv == u2 and f_inv * f == u2)
    pairs = []
    for i in range(H.dim):
        lhs = f * H.delta(H.s_vec(H.vec(i))) * f_inv
        rhs = apply_legs(flip(H.delta_basis(i)), [S, S], H.coalgebra)
        pairs.append((f"basis {i}", lhs, rhs))
    w = _first_basis_witness(H, pairs)
    rep.add("twist-anticoalgebra", "f Δ(S(h)) f^{-1} = (S⊗S)(Δ^{cop}(h))", w is None, w)
    rep.add("twist-gamma-delta", "f Δ(α) = γ and Δ(β) f^{-1} = δ",
            f * H.delta(H.alpha) == gamma and H.delta(H.beta) * f_inv == delta)
    lhs = (place(f, 3, (1, 2)) * H.apply(f, [None, "comult"]) * H.phi
           * H.apply(f_inv, ["comult", None]) * place(f_inv, 3, (0, 1)))
    rhs = apply_legs(permute_legs(H.phi, (2, 1, 0)), [S, S, S], H.coalgebra)
    rep.add("twist-pentagon",
            "(1⊗f)(id⊗Δ)(f) Φ (Δ⊗id)(f^{-1})(f^{-1}⊗1) = (S⊗S⊗S)(X^3⊗X^2⊗X^1)",
            lhs == rhs)
    rep.require("drinfeld twist construction")

    out = TwistData(F=f, F_inv=f_inv)
    H._cache["drinfeld_twist"] = out
    return out


# -- the p/q translation elements -----------------------------------------------------


@dataclass
class PQElements:
    p_r: TensorElement
    q_r: TensorElement
    p_l: TensorElement
    q_l: TensorElement
    report: VerificationReport


def pq_elements(H: QuasiHopfAlgebra) -> PQElements:
    """The four elements translating between Δ-conjugated and plain actions."""
    cached = H._cache.get("pq_elements")
    if cached is not None:
        return cached
    alg = H.algebra
    S = H.antipode
    Sinv = H.antipode_inverse

    xS = apply_legs(H.phi_inv, [None, None, S], H.coalgebra)
    p_r = leg_product(alg, 2, "x1 | x2.b1.x3", x=xS, b=H.beta)
    Xs = apply_legs(H.phi, [None, None, Sinv], H.coalgebra)
    q_r = leg_product(alg, 2, "X1 | X3.a1.X2", X=Xs, a=H.sinv_vec(H.alpha))
    XL = apply_legs(H.phi, [Sinv, None, None], H.coalgebra)
    p_l = leg_product(alg, 2, "X2.b1.X1 | X3", X=XL, b=H.sinv_vec(H.beta))
    xL = apply_legs(H.phi_inv, [S, None, None], H.coalgebra)
    q_l = leg_product(alg, 2, "x1.a1.x2 | x3", x=xL, a=H.alpha)

    rep = VerificationReport()
    u2 = H.unit_t(2)

    def svec(i):
        return H.s_vec(H.vec(i))

    def sinvvec(i):
        return H.sinv_vec(H.vec(i))

    pairs = [[], [], [], []]
    for h in range(H.dim):
        d = H.delta_basis(h)
        lhs = [TensorElement.zero(alg, 2) for _ in range(4)]
        for (a, b), c in d.coeffs.items():
            da, db = H.delta_basis(a), H.delta_basis(b)
            lhs[0] = lhs[0] + c * (da * p_r * place(svec(b), 2, (1,)))
            lhs[1] = lhs[1] + c * (place(sinvvec(b), 2, (1,)) * q_r * da)
            lhs[2] = lhs[2] + c * (db * p_l * place(sinvvec(a), 2, (0,)))
            lhs[3] = lhs[3] + c * (place(svec(a), 2, (0,)) * q_l * db)
        hv = H.vec(h)
        pairs[0].append((f"basis {h}", lhs[0], p_r * place(hv, 2, (0,))))
        pairs[1].append((f"basis {h}", lhs[1], place(hv, 2, (0,)) * q_r))
        pairs[2].append((f"basis {h}", lhs[2], p_l * place(hv, 2, (1,))))
        pairs[3].append((f"basis {h}", lhs[3], place(hv, 2, (1,)) * q_l))
    for cid, stmt, ps in (
        ("pq-right-shift", "Δ(h_1) p_R (1⊗S(h_2)) = p_R (h⊗1)", pairs[0]),
        ("pq-right-shift-q", "(1⊗S^{-1}(h_2)) q_R Δ(h_1) = (h⊗1) q_R", pairs[1]),
        ("pq-left-shift", "Δ(h_2) p_L (S^{-1}(h_1)⊗1) = p_L (1⊗h)", pairs[2]),
        ("pq-left-shift-q", "(S(h_1)⊗1) q_L Δ(h_2) = (1⊗h) q_L", pairs[3]),
    ):
        w = _first_basis_witness(H, ps)
        rep.add(cid, stmt, w is None, w)

    acc = TensorElement.zero(alg, 2)
    for (i, j), c in p_r.coeffs.items():
        acc = acc + c * (place(sinvvec(j), 2, (1,)) * q_r * H.delta_basis(i))
    rep.add("pq-right-cancel", "(1⊗S^{-1}(p^2)) q_R Δ(p^1) = 1⊗1", acc == u2)
    acc = TensorElement.zero(alg, 2)
    for (i, j), c in q_r.coeffs.items():
        acc = acc + c * (H.delta_basis(i) * p_r * place(svec(j), 2, (1,)))
    rep.add("pq-right-cancel-q", "Δ(q^1) p_R (1⊗S(q^2)) = 1⊗1", acc == u2)
    acc = TensorElement.zero(alg, 2)
    for (i, j), c in p_l.coeffs.items():
        acc = acc + c * (place(svec(i), 2, (0,)) * q_l * H.delta_basis(j))
    rep.add("pq-left-cancel", "(S(p̃^1)⊗1) q_L Δ(p̃^2) = 1⊗1", acc == u2)
    acc = TensorElement.zero(alg, 2)
    for (i, j), c in q_l.coeffs.items():
        acc = acc + c * (H.delta_basis(j) * p_l * place(sinvvec(i), 2, (0,)))
    rep.add("pq-left-cancel-q", "Δ(q̃^2) p_L (S^{-1}(q̃^1)⊗1) = 1⊗1", acc == u2)
    rep.require("p/q element construction")

    out = PQElements(p_r, q_r, p_l, q_l, rep)
    H._cache["pq_elements"] = out
    return out


# -- structural constructors ----------------------------------------------------------


def gauge_twist(H: QuasiHopfAlgebra, FD: TwistData, validate: str = "full") -> QuasiHopfAlgebra:
    """Deform by a gauge transformation: new coproduct, reassociator, alpha, beta."""
    twist_rep = FD.validate(H)
    if not twist_rep.passed:
        raise InvalidTwist("; ".join(e.line() for e in twist_rep.failures()))
    F, G = FD.F, FD.F_inv
    alg = H.algebra
    comult = []
    for i in range(H.dim):
        comult.append({idx: c for idx, c in (F * H.delta_basis(i) * G).coeffs.items()})
    coalgebra = CoalgebraData(H.field, H.dim, comult, H.coalgebra.counit)
    phi_f = (place(F, 3, (1, 2)) * H.apply(F, [None, "comult"]) * H.phi
             * H.apply(G, ["comult", None]) * place(G, 3, (0, 1)))
    phi_f_inv = (place(F, 3, (0, 1)) * H.apply(F, ["comult", None]) * H.phi_inv
                 * H.apply(G, [None, "comult"]) * place(G, 3, (1, 2)))
    alpha_f = TensorElement.zero(alg, 1)
    for (i, j), c in G.coeffs.items():
        alpha_f = alpha_f + c * H.mul(H.s_vec(H.vec(i)), H.alpha, H.vec(j))
    beta_f = TensorElement.zero(alg, 1)
    for (i, j), c in F.coeffs.items():
        beta_f = beta_f + c * H.mul(H.vec(i), H.beta, H.s_vec(H.vec(j)))
    out = QuasiHopfAlgebra(alg, coalgebra, phi_f, phi_f_inv, H.antipode, alpha_f, beta_f)
    if validate == "full":
        verify_quasihopf(out).require("gauge twist")
    return out


def antipode_transform(H: QuasiHopfAlgebra, u: TensorElement,
                       validate: str = "full") -> QuasiHopfAlgebra:
    """Replace (S, α, β) by the transform along an invertible element."""
    u_inv = invert_in_tensor_power(u)
    cols = []
    for i in range(H.dim):
        cols.append(H.mul(u, H.s_vec(H.vec(i)), u_inv).as_vector())
    s_u = LinMap(H.field, H.dim, H.dim, cols)
    out = H.replace(antipode=s_u, alpha=u * H.alpha, beta=H.beta * u_inv)
    if validate == "full":
        verify_quasihopf(out).require("antipode transform")
    return out


def _rehome(elem: TensorElement, alg: AlgebraData) -> TensorElement:
    return TensorElement(alg, elem.arity, dict(elem.coeffs))


def variants(H: QuasiHopfAlgebra, which: str, validate: str = "full") -> QuasiHopfAlgebra:
    """Opposite multiplication / comultiplication / both."""
    if which not in ("op", "cop", "opcop"):
        raise ValueError(f"unknown variant {which!r}")
    n = H.dim
    field = H.field
    sinv = H.antipode_inverse if which in ("op", "cop") else None

    if which in ("op", "opcop"):
        mult = [[dict(H.algebra.mult[j][i]) for j in range(n)] for i in range(n)]
        algebra = AlgebraData(field, n, mult, dict(H.algebra.unit), H.algebra.names)
    else:
        algebra = H.algebra

    if which in ("cop", "opcop"):
        comult = [{(k, j): c for (j, k), c in row.items()} for row in H.coalgebra.comult]
        coalgebra = CoalgebraData(field, n, comult, H.coalgebra.counit)
    else:
        coalgebra = H.coalgebra

    if which == "op":
        phi, phi_inv = H.phi_inv, H.phi
        S = sinv
        alpha = H.sinv_vec(H.beta)
        beta = H.sinv_vec(H.alpha)
    elif which == "cop":
        phi = permute_legs(H.phi_inv, (2, 1, 0))
        phi_inv = permute_legs(H.phi, (2, 1, 0))
        S = sinv
        alpha = H.sinv_vec(H.alpha)
        beta = H.sinv_vec(H.beta)
    else:
        phi = permute_legs(H.phi, (2, 1, 0))
        phi_inv = permute_legs(H.phi_inv, (2, 1, 0))
        S = H.antipode
        alpha, beta = H.beta, H.alpha

    out = QuasiHopfAlgebra(
        algebra, coalgebra, _rehome(phi, algebra), _rehome(phi_inv, algebra),
        S, _rehome(alpha, algebra), _rehome(beta, algebra),
    )
    if validate == "full":
        verify_quasihopf(out).require(f"variant {which}")
    return out


def tensor_product(H: QuasiHopfAlgebra, K: QuasiHopfAlgebra,
                   validate: str = "full") -> QuasiHopfAlgebra:
    """Componentwise structure on H ⊗ K with interleaved reassociator."""
    if H.field != K.field:
        raise FieldMismatch("tensor factors over different fields")
    field = H.field
    nh, nk = H.dim, K.dim
    n = nh * nk

    def fl(i, j):
        return i * nk + j

    names = []
    for i in range(nh):
        for j in range(nk):
            na, nb = H.names[i], K.names[j]
            if na == "1" and nb == "1":
                names.append("1")
            elif na == "1":
                names.append(nb)
            elif nb == "1":
                names.append(na)
            else:
                names.append(f"{na}{nb}")
    mult = [[dict() for _ in range(n)] for _ in range(n)]
    for i1, j1, i2, j2 in itertools.product(range(nh), range(nk), range(nh), range(nk)):
        row: dict = {}
        for a, ca in H.algebra.mult[i1][i2].items():
            for b, cb in K.algebra.mult[j1][j2].items():
                row[fl(a, b)] = ca * cb
        mult[fl(i1, j1)][fl(i2, j2)] = row
    unit: dict = {}
    for a, ca in H.algebra.unit.items():
        for b, cb in K.algebra.unit.items():
            unit[fl(a, b)] = ca * cb
    algebra = AlgebraData(field, n, mult, unit, names)

    comult = []
    counit = []
    for i in range(nh):
        for j in range(nk):
            row = {}
            for (a1, a2), ca in H.coalgebra.comult[i].items():
                for (b1, b2), cb in K.coalgebra.comult[j].items():
                    row[(fl(a1, b1), fl(a2, b2))] = ca * cb
            comult.append(row)
            counit.append(H.coalgebra.counit[i] * K.coalgebra.counit[j])
    coalgebra = CoalgebraData(field, n, comult, counit)

    def interleave3(a: TensorElement, b: TensorElement) -> TensorElement:
        out = {}
        for (x1, x2, x3), ca in a.coeffs.items():
            for (y1, y2, y3), cb in b.coeffs.items():
                out[(fl(x1, y1), fl(x2, y2), fl(x3, y3))] = ca * cb
        return TensorElement(algebra, 3, out)

    phi = interleave3(H.phi, K.phi)
    phi_inv = interleave3(H.phi_inv, K.phi_inv)

    cols = []
    for i in range(nh):
        for j in range(nk):
            col = {}
            for a, ca in H.antipode.cols[i].items():
                for b, cb in K.antipode.cols[j].items():
                    col[fl(a, b)] = ca * cb
            cols.append(col)
    S = LinMap(field, n, n, cols)

    def pairvec(u: TensorElement, v: TensorElement) -> TensorElement:
        out = {}
        for (a,), ca in u.coeffs.items():
            for (b,), cb in v.coeffs.items():
                out[(fl(a, b),)] = ca * cb
        return TensorElement(algebra, 1, out)

    out = QuasiHopfAlgebra(algebra, coalgebra, phi, phi_inv, S,
                           pairvec(H.alpha, K.alpha), pairvec(H.beta, K.beta))
    if validate == "full":
        verify_quasihopf(out).require("tensor product")
    return out


# -- integrals ---------------------------------------------------------------------


def _integral_rows(H: QuasiBialgebra, side: str):
    n = H.dim
    z = H.field.zero()
    rows = []
    for b in range(n):
        eps_b = H.coalgebra.counit[b]
        prods = [
            H.algebra.mul_basis(b, i) if side == "left" else H.algebra.mul_basis(i, b)
            for i in range(n)
        ]
        for k in range(n):
            row = [prods[i].get(k, z) for i in range(n)]
            row[k] = row[k] - eps_b
            rows.append(row)
    return rows


def _kernel_vectors(H: QuasiBialgebra, rows) -> list[TensorElement]:
    z = H.field.zero()
    _, kernel = solve_linear(rows, [z] * len(rows))
    return [TensorElement.vector(H.algebra, {i: c for i, c in enumerate(vec) if c})
            for vec in kernel]


def left_integrals(H: QuasiBialgebra) -> list[TensorElement]:
    """Basis of {t : h t = eps(h) t}."""
    return _kernel_vectors(H, _integral_rows(H, "left"))


def right_integrals(H: QuasiBialgebra) -> list[TensorElement]:
    return _kernel_vectors(H, _integral_rows(H, "right"))


def normalized_integral(H: QuasiBialgebra):
    """A two-sided integral with counit one, or None."""
    rows = _integral_rows(H, "left") + _integral_rows(H, "right")
    for t in _kernel_vectors(H, rows):
        e = H.eps(t)
        if e:
            return t.scale(e.inv())
    return None


def is_semisimple(H: QuasiBialgebra) -> bool:
    """True iff some left integral has nonzero counit (Maschke criterion)."""
    return any(H.eps(t) for t in left_integrals(H))
