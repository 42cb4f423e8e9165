"""Quasitriangular structures, the quantum double, factorizability, the
isomorphism onto the twisted tensor square, and bosonization.

The double lives on H* ⊗ H with basis pairs (dual index, algebra index),
flattened as i*n + j.  Functionals on H are handled as coordinate dicts
against the dual basis; their convolution product and the two translation
actions are implemented directly from the structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quasihopf import (
    QuasiHopfAlgebra,
    TwistData,
    VerificationReport,
    drinfeld_twist,
    gauge_twist,
    antipode_transform,
    pq_elements,
    tensor_product,
    verify_quasihopf,
)
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
    place,
)


class NotFactorizable(ValueError):
    pass


@dataclass
class QTStructure:
    """An R-matrix with (lazily computed) inverse."""

    R: TensorElement
    _R_inv: TensorElement | None = None

    @property
    def R_inv(self) -> TensorElement:
        if self._R_inv is None:
            self._R_inv = invert_in_tensor_power(self.R)
        return self._R_inv


class DoubleBasisTag:
    """Bookkeeping for the (dual index, algebra index) basis of the double."""

    def __init__(self, n: int):
        self.n = n

    def flat(self, dual_index: int, algebra_index: int) -> int:
        return dual_index * self.n + algebra_index

    def pair(self, flat: int) -> tuple[int, int]:
        return divmod(flat, self.n)


@dataclass
class MorphismCertificate:
    map: LinMap
    checks: VerificationReport

    @property
    def valid(self) -> bool:
        return self.checks.passed


@dataclass
class DoubleResult:
    double: QuasiHopfAlgebra
    R: QTStructure
    embedding: LinMap
    tag: DoubleBasisTag
    report: VerificationReport


@dataclass
class DoubleIso:
    F_big: TwistData
    U_big: TensorElement
    zeta: LinMap
    pi: LinMap
    pi_tilde: LinMap
    target: QuasiHopfAlgebra
    square: QuasiHopfAlgebra
    certificate: MorphismCertificate


# -- quasitriangularity ---------------------------------------------------------


def verify_qt(H: QuasiHopfAlgebra, R) -> VerificationReport:
    """Check the braiding axioms for a candidate R-matrix, exactly."""
    if isinstance(R, QTStructure):
        qt, R = R, R.R
    else:
        qt = QTStructure(R)
    rep = VerificationReport()
    u1, u2 = H.unit_t(1), H.unit_t(2)
    try:
        rinv = qt.R_inv
        rep.add("qt-invertible", "R is invertible in H⊗H", True)
    except NotInvertible as exc:
        rep.add("qt-invertible", "R is invertible in H⊗H", False, str(exc))

    # both coproduct identities are evaluated as ordered products of placed
    # factors; enumerating the five-fold entry product would blow up on doubles
    from .tensorcore import permute_legs

    lhs = H.apply(R, ["comult", None])
    rhs = (permute_legs(H.phi, (1, 2, 0))
           * place(R, 3, (0, 2))
           * permute_legs(H.phi_inv, (0, 2, 1))
           * place(R, 3, (1, 2))
           * H.phi)
    rep.add("qt-coproduct-left", "(Δ⊗id)(R) = X^2R^1x^1Y^1 ⊗ X^3x^3r^1Y^2 ⊗ X^1R^2x^2r^2Y^3",
            lhs == rhs)

    lhs = H.apply(R, [None, "comult"])
    rhs = (permute_legs(H.phi_inv, (2, 0, 1))
           * place(R, 3, (0, 2))
           * permute_legs(H.phi, (1, 0, 2))
           * place(R, 3, (0, 1))
           * H.phi_inv)
    rep.add("qt-coproduct-right", "(id⊗Δ)(R) = x^3R^1X^2r^1y^1 ⊗ x^1X^1r^2y^2 ⊗ x^2R^2X^3y^3",
            lhs == rhs)

    bad = None
    for i in range(H.dim):
        d = H.delta_basis(i)
        if flip(d) * R != R * d:
            bad = f"basis {i}"
            break
    rep.add("qt-intertwines", "Δ^{cop}(h) R = R Δ(h)", bad is None, bad)

    ok = H.apply(R, ["counit", None]) == u1 and H.apply(R, [None, "counit"]) == u1
    rep.add("qt-counit", "(eps⊗id)(R) = (id⊗eps)(R) = 1", ok)
    return rep


def _check_h2_shape(H: QuasiHopfAlgebra):
    one = H.field.one()
    if H.dim != 2:
        raise ValueError("R-matrix enumeration targets the two-dimensional fixture")
    if H.algebra.mul_basis(1, 1) != {0: one} or H.coalgebra.comult[1] != {(1, 1): one}:
        raise ValueError("input is not the order-two group-like fixture")


def enumerate_rmatrices_h2(H: QuasiHopfAlgebra) -> list[QTStructure]:
    """All R-matrices of the two-dimensional fixture.

    The counit constraint forces R = 1 - w p⊗p on the rank-one idempotent
    p = (1-g)/2, and the coproduct axioms reduce to w^2 - 2w + 2 = 0; the
    roots are 1 ± i, so the list is empty over fields without a fourth root
    of unity.  Every returned structure is re-certified by `verify_qt`.
    """
    _check_h2_shape(H)
    field = H.field
    ii = field.i()
    if ii is None:
        return []
    one = field.one()
    half = field.from_int(2).inv()
    p = TensorElement.vector(H.algebra, {0: half, 1: -half})
    pp = p.outer(p)
    u2 = H.unit_t(2)
    roots = [one + ii, one - ii]
    out = []
    for w in roots:
        other = [r for r in roots if r != w][0]
        qt = QTStructure(u2 - pp.scale(w), u2 - pp.scale(other))
        verify_qt(H, qt).require(f"R-matrix candidate w={w}")
        out.append(qt)
    return out


# -- covector calculus for the double ----------------------------------------------


def _act_cov(alg: AlgebraData, phi: dict, u: dict, v: dict) -> dict:
    """(u ⇀ φ ↼ v) as coordinates: value at e_m is φ(v · e_m · u)."""
    out = {}
    one = alg.field.one()
    for m in range(alg.dim):
        vm = alg.vec_mul(v, {m: one}) if v else None
        vmu = alg.vec_mul(vm, u)
        s = None
        for t, c in vmu.items():
            ph = phi.get(t)
            if ph:
                s = c * ph if s is None else s + c * ph
        if s:
            out[m] = s
    return out


def _convolve(co: CoalgebraData, phi: dict, psi: dict) -> dict:
    """Convolution product of functionals: value at e_m is φ(m_1) ψ(m_2)."""
    out = {}
    for m in range(co.dim):
        s = None
        for (r, t), c in co.comult[m].items():
            a = phi.get(r)
            if not a:
                continue
            b = psi.get(t)
            if not b:
                continue
            v = c * a * b
            s = v if s is None else s + v
        if s:
            out[m] = s
    return out


def _u_element(H: QuasiHopfAlgebra) -> TensorElement:
    """g^1 S(q^2) ⊗ g^2 S(q^1), the antipode-side companion of the twist."""
    cached = H._cache.get("u_element")
    if cached is None:
        f = drinfeld_twist(H)
        pq = pq_elements(H)
        qs = apply_legs(pq.q_r, [H.antipode, H.antipode], H.coalgebra)
        cached = leg_product(H.algebra, 2, "G1.q2 | G2.q1", G=f.F_inv, q=qs)
        H._cache["u_element"] = cached
    return cached


def omega_element(H: QuasiHopfAlgebra) -> TensorElement:
    """The five-leg tensor driving the double's multiplication."""
    cached = H._cache.get("omega_element")
    if cached is not None:
        return cached
    f = drinfeld_twist(H)
    Sinv = H.antipode_inverse
    phi_e5 = H.apply(H.apply(H.phi, ["comult", None, None]), ["comult", None, None, None])
    xe4 = H.apply(H.phi_inv, [None, "comult", None])
    stage = leg_product(
        H.algebra, 5,
        "X1.y1.x1 | X2.y2.x2 | X3.y3.x3 | X4.x4 | X5",
        X=phi_e5, y=H.phi_inv, x=xe4,
    )
    om = place(f.F, 5, (3, 4)) * stage
    om = apply_legs(om, [None, None, None, Sinv, Sinv], H.coalgebra)
    H._cache["omega_element"] = om
    return om


def quantum_double(H: QuasiHopfAlgebra, validate: str = "full") -> DoubleResult:
    """The quantum double on H* ⊗ H, with its canonical R-matrix and embedding."""
    n = H.dim
    field = H.field
    alg = H.algebra
    co = H.coalgebra
    one, zero = field.one(), field.zero()
    tag = DoubleBasisTag(n)
    fl = tag.flat

    f = drinfeld_twist(H)
    pq = pq_elements(H)
    S = H.antipode
    Sinv = H.antipode_inverse
    om = omega_element(H)
    sinv_cols = [dict(Sinv.cols[i]) for i in range(n)]
    s_cols = [dict(S.cols[i]) for i in range(n)]
    eps = {i: co.counit[i] for i in range(n) if co.counit[i]}

    n2 = n * n
    names = [f"P{alg.names[i]}|{alg.names[j]}" for i in range(n) for j in range(n)]

    # multiplication: the two functional factors convolve, the algebra legs chain
    mult = [[dict() for _ in range(n2)] for _ in range(n2)]
    act_all_cache: dict = {}

    def act_all(u_key, u, v_key, v):
        got = act_all_cache.get((u_key, v_key))
        if got is None:
            got = []
            for m in range(n):
                vm = alg.vec_mul(v, {m: one})
                got.append(alg.vec_mul(vm, u))
            act_all_cache[(u_key, v_key)] = got
        return got

    for b in range(n):
        Tb = H.delta2_basis(b)
        for (t1, t2, t3), ct in Tb.coeffs.items():
            for (w1, w2, w3, w4, w5), cw in om.coeffs.items():
                c0 = ct * cw
                u2 = alg.vec_mul({w2: one}, {t1: one})
                v2 = alg.vec_mul(sinv_cols[t3], {w4: one})
                mid = alg.vec_mul({w3: one}, {t2: one})
                outer1 = act_all(("b", w1), {w1: one}, ("b", w5), {w5: one})
                inner = [alg.vec_mul(alg.vec_mul(v2, {m: one}), u2) for m in range(n)]
                for a in range(n):
                    cov1 = {m: vec[a] for m, vec in enumerate(outer1) if a in vec}
                    if not cov1:
                        continue
                    for c in range(n):
                        cov2 = {m: vec[c] for m, vec in enumerate(inner) if c in vec}
                        if not cov2:
                            continue
                        cov = _convolve(co, cov1, cov2)
                        if not cov:
                            continue
                        for d in range(n):
                            right = alg.vec_mul(mid, {d: one})
                            row = mult[fl(a, b)][fl(c, d)]
                            for m, cm in cov.items():
                                cc = c0 * cm
                                for k, ck in right.items():
                                    key = fl(m, k)
                                    s = row.get(key)
                                    s = cc * ck if s is None else s + cc * ck
                                    if s:
                                        row[key] = s
                                    elif key in row:
                                        del row[key]

    unit_d = {}
    for i, ci in eps.items():
        for j, cj in alg.unit.items():
            unit_d[fl(i, j)] = ci * cj
    dalg = AlgebraData(field, n2, mult, unit_d, names)

    def embed(vec: dict) -> dict:
        out = {}
        for j, cj in vec.items():
            for i, ci in eps.items():
                out[fl(i, j)] = ci * cj
        return out

    # coproduct: a fixed seven-leg tensor carries all reassociator bookkeeping
    P3 = H.apply(pq.p_r, ["comult", None])
    P3p = apply_legs(P3, [None, None, Sinv], co)
    Xe = H.apply(H.phi, [None, "comult", None])
    Xp = apply_legs(Xe, [None, None, None, Sinv], co)
    W = leg_product(
        alg, 7,
        "X1.Y1 | P1.x1 | Y2.P3 | P2.x2 | X2 | X4 | X3.Y3.x3",
        X=Xp, Y=H.phi, P=P3p, x=H.phi_inv,
    )

    dual_comult = [[] for _ in range(n)]  # dual_comult[a] = [(i, j, coeff)]
    for i in range(n):
        for j in range(n):
            for a, c in alg.mul_basis(i, j).items():
                dual_comult[a].append((i, j, c))

    comult_d = []
    for a in range(n):
        for b in range(n):
            row: dict = {}
            for (w1, w2, w3, w4, w5, w6, w7), cw in W.coeffs.items():
                for (i, j, cda) in dual_comult[a]:
                    cov_b = _act_cov(alg, {j: one}, {w2: one}, {w3: one})
                    if not cov_b:
                        continue
                    cov_a = _act_cov(alg, {i: one}, {w5: one}, {w6: one})
                    if not cov_a:
                        continue
                    for (r, s_), cdb in co.comult[b].items():
                        vec4 = alg.vec_mul({w4: one}, {r: one})
                        vec7 = alg.vec_mul({w7: one}, {s_: one})
                        first = {}
                        for m, cm in cov_b.items():
                            for k, ck in vec4.items():
                                first[fl(m, k)] = cm * ck
                        first = dalg.vec_mul(embed({w1: one}), first)
                        c0 = cw * cda * cdb
                        for df, cf in first.items():
                            for m, cm in cov_a.items():
                                for k, ck in vec7.items():
                                    key = (df, fl(m, k))
                                    v = c0 * cf * cm * ck
                                    s = row.get(key)
                                    s = v if s is None else s + v
                                    if s:
                                        row[key] = s
                                    elif key in row:
                                        del row[key]
            comult_d.append(row)

    sinv_alpha = TensorElement.vector(alg, Sinv.apply_vec(H.alpha.as_vector()))
    counit_d = []
    for a in range(n):
        va = sinv_alpha.as_vector().get(a, zero)
        for b in range(n):
            counit_d.append(co.counit[b] * va)
    dco = CoalgebraData(field, n2, comult_d, counit_d)

    def embed_tensor(t: TensorElement) -> TensorElement:
        out: dict = {}
        for idx, c in t.coeffs.items():
            partial = [((), c)]
            for leg in idx:
                emb = embed({leg: one})
                nxt = []
                for pref, cc in partial:
                    for q, cq in emb.items():
                        nxt.append((pref + (q,), cc * cq))
                partial = nxt
            for nidx, cc in partial:
                out[nidx] = out.get(nidx, zero) + cc
        return TensorElement(dalg, t.arity, {k: v for k, v in out.items() if v})

    # the embedded reassociator inverse is correct because the embedding is an
    # algebra map (certified below); full validation re-checks the product
    phi_d = embed_tensor(H.phi)
    phi_d_inv = embed_tensor(H.phi_inv)

    # antipode
    V = leg_product(alg, 4, "F1 | P1.U1 | F2.P3 | P2.U2",
                    F=f.F, P=P3p, U=_u_element(H))
    s_cols_d = [dict() for _ in range(n2)]
    for a in range(n):
        sbar_inv_a = {m: sinv_cols[m][a] for m in range(n) if a in sinv_cols[m]}
        for b in range(n):
            col: dict = {}
            sb = s_cols[b]
            for (v1, v2, v3, v4), cv in V.coeffs.items():
                cov = _act_cov(alg, sbar_inv_a, {v2: one}, {v3: one})
                if not cov:
                    continue
                second = {}
                for m, cm in cov.items():
                    second[fl(m, v4)] = cm
                left = embed(alg.vec_mul(sb, {v1: one}))
                prod = dalg.vec_mul(left, second)
                for k, ck in prod.items():
                    s = col.get(k)
                    s = cv * ck if s is None else s + cv * ck
                    if s:
                        col[k] = s
                    elif k in col:
                        del col[k]
            s_cols_d[fl(a, b)] = col
    s_d = LinMap(field, n2, n2, s_cols_d)

    alpha_d = TensorElement.vector(dalg, embed(H.alpha.as_vector()))
    beta_d = TensorElement.vector(dalg, embed(H.beta.as_vector()))

    D = QuasiHopfAlgebra(dalg, dco, phi_d, phi_d_inv, s_d, alpha_d, beta_d)

    # canonical R-matrix
    r_coeffs: dict = {}
    for i in range(n):
        for (r1, r2, r3), cp in P3.coeffs.items():
            vecl = alg.vec_chain([sinv_cols[r3], {i: one}, {r1: one}])
            lefts = embed(vecl)
            for dfl, cl in lefts.items():
                key = (dfl, fl(i, r2))
                v = cp * cl
                s = r_coeffs.get(key)
                s = v if s is None else s + v
                if s:
                    r_coeffs[key] = s
                elif key in r_coeffs:
                    del r_coeffs[key]
    R_D = QTStructure(TensorElement(dalg, 2, r_coeffs))

    i_d = LinMap(field, n, n2, [embed({j: one}) for j in range(n)])

    rep = VerificationReport()
    bad = None
    for i in range(n):
        for j in range(n):
            lhs = dalg.vec_mul(i_d.cols[i], i_d.cols[j])
            rhs = i_d.apply_vec(alg.mul_basis(i, j))
            if lhs != rhs:
                bad = f"pair ({i},{j})"
                break
        if bad:
            break
    rep.add("double-embedding-multiplicative", "i_D(h) i_D(h') = i_D(hh')", bad is None, bad)
    rep.add("double-embedding-unital", "i_D(1) = eps ⋈ 1",
            i_d.apply_vec(alg.unit) == unit_d)
    rep.add("double-embedding-injective", "i_D has full rank", i_d.rank() == n)
    bad = None
    for j in range(n):
        got = sum((c * counit_d[k] for k, c in i_d.cols[j].items()), zero)
        if got != co.counit[j]:
            bad = f"basis {j}"
            break
    rep.add("double-embedding-counit", "eps_D ∘ i_D = eps", bad is None, bad)

    if validate == "full":
        rep.merge(verify_quasihopf(D))
        rep.merge(verify_qt(D, R_D))
        rep.require("quantum double construction")
    elif validate == "basic":
        w = dalg.check_associativity()
        rep.add("double-associative", "double multiplication is associative", w is None,
                None if w is None else f"triple {w}")
        w = dalg.check_unit()
        rep.add("double-unit", "eps ⋈ 1 is a two-sided unit", w is None)
        rep.require("quantum double construction")

    return DoubleResult(D, R_D, i_d, tag, rep)


# -- factorizability and the twisted tensor square ------------------------------------


def factorizability_map(H: QuasiHopfAlgebra, R: QTStructure):
    """The linear map H* → H attached to a braiding, and whether it is bijective."""
    f = drinfeld_twist(H)
    pq = pq_elements(H)
    S = H.antipode
    Xe = H.apply(H.phi, [None, "comult", None])
    XS = apply_legs(Xe, [None, S, S, None], H.coalgebra)
    pS = apply_legs(pq.p_l, [S, S], H.coalgebra)
    M = leg_product(
        H.algebra, 2,
        "P2.X3.F1.R2.r1.U1.X4 | X1.P1.X2.F2.R1.r2.U2",
        X=XS, P=pS, F=f.F, R=R.R, r=R.R, U=_u_element(H),
    )
    cols = [dict() for _ in range(H.dim)]
    for (a, j), c in M.coeffs.items():
        cols[a][j] = cols[a].get(j, H.field.zero()) + c
    Q = LinMap(H.field, H.dim, H.dim, cols)
    return Q, Q.is_bijective()


def double_iso(H: QuasiHopfAlgebra, R: QTStructure,
               double: DoubleResult | None = None) -> DoubleIso:
    """Certify the double as a transformed gauge twist of H ⊗ H.

    Requires factorizability; the returned certificate checks that the
    projection-pair map is a bijection preserving every piece of structure
    of the explicitly constructed target.
    """
    Q, ok = factorizability_map(H, R)
    if not ok:
        raise NotFactorizable("the braiding pairing map is singular")
    if double is None:
        double = quantum_double(H)
    D = double.double
    tag = double.tag
    n = H.dim
    field = H.field
    alg = H.algebra
    one = field.one()

    f = drinfeld_twist(H)
    pq = pq_elements(H)
    r_inv = R.R_inv

    N = leg_product(alg, 2, "q2.R1 | q1.R2", q=pq.q_r, R=R.R)
    Nt = leg_product(alg, 2, "q2.T2 | q1.T1", q=pq.q_r, T=r_inv)

    def projection(tbl: TensorElement) -> LinMap:
        cols = []
        for a in range(n):
            for b in range(n):
                out: dict = {}
                for (u, v), c in tbl.coeffs.items():
                    if u != a:
                        continue
                    prod = alg.vec_mul({v: one}, {b: one})
                    for k, ck in prod.items():
                        out[k] = out.get(k, field.zero()) + c * ck
                cols.append({k: v for k, v in out.items() if v})
        return LinMap(field, n * n, n, cols)

    pi = projection(N)
    pi_t = projection(Nt)

    T = tensor_product(H, H)

    # the braiding slots of the four-leg twist take the inverse braiding, and
    # the companion element takes the braiding itself; this orientation is the
    # one under which the projection pair below certifies (the opposite choice
    # produces the same target with the roles of the two roots exchanged)
    Ye = H.apply(H.phi, ["comult", None, None])
    ye = H.apply(H.phi_inv, ["comult", None, None])
    F4 = leg_product(
        alg, 4,
        "Y1.x1.X1.z1 | Y2.x2.R2.X3.z3 | Y3.x3.R1.X2.z2 | Y4.z4",
        Y=Ye, x=H.phi_inv, R=r_inv, X=H.phi, z=ye,
    )

    def fl2(i, j):
        return i * n + j

    F_big = TensorElement(T.algebra, 2, {
        (fl2(i1, i2), fl2(i3, i4)): c for (i1, i2, i3, i4), c in F4.coeffs.items()
    })
    F_big_inv = invert_in_tensor_power(F_big)

    U4 = leg_product(alg, 2, "T1.G2 | T2.G1", T=R.R, G=f.F_inv)
    U_big = TensorElement(T.algebra, 1, {(fl2(i, j),): c for (i, j), c in U4.coeffs.items()})

    target = antipode_transform(gauge_twist(T, TwistData(F_big, F_big_inv)), U_big)

    zeta_cols = []
    for dflat in range(n * n):
        d2 = D.delta_basis(dflat)
        out: dict = {}
        for (u, v), c in d2.coeffs.items():
            left = pi.cols[u]
            right = pi_t.cols[v]
            for i, ci in left.items():
                for j, cj in right.items():
                    key = fl2(i, j)
                    out[key] = out.get(key, field.zero()) + c * ci * cj
        zeta_cols.append({k: v for k, v in out.items() if v})
    zeta = LinMap(field, n * n, n * n, zeta_cols)

    cert = is_quasihopf_morphism(zeta, D, target)
    return DoubleIso(TwistData(F_big, F_big_inv), U_big, zeta, pi, pi_t, target, T, cert)


def is_quasihopf_morphism(nu: LinMap, H: QuasiHopfAlgebra,
                          K: QuasiHopfAlgebra) -> MorphismCertificate:
    """Certify a linear map as an isomorphism of quasi-Hopf algebras."""
    rep = VerificationReport()
    n = H.dim
    field = H.field

    bad = None
    for i in range(n):
        for j in range(n):
            lhs = K.algebra.vec_mul(nu.cols[i], nu.cols[j])
            rhs = nu.apply_vec(H.algebra.mul_basis(i, j))
            if lhs != rhs:
                bad = f"pair ({i},{j})"
                break
        if bad:
            break
    rep.add("morphism-multiplicative", "ν(ab) = ν(a)ν(b)", bad is None, bad)
    rep.add("morphism-unital", "ν(1) = 1", nu.apply_vec(H.algebra.unit) == K.algebra.unit)

    def nu2(t: TensorElement) -> TensorElement:
        out: dict = {}
        for (i, j), c in t.coeffs.items():
            for a, ca in nu.cols[i].items():
                for b, cb in nu.cols[j].items():
                    key = (a, b)
                    out[key] = out.get(key, field.zero()) + c * ca * cb
        return TensorElement(K.algebra, 2, {k: v for k, v in out.items() if v})

    bad = None
    for i in range(n):
        lhs = nu2(H.delta_basis(i))
        rhs = K.delta(TensorElement.vector(K.algebra, nu.cols[i]))
        if lhs != rhs:
            bad = f"basis {i}"
            break
    rep.add("morphism-comultiplicative", "(ν⊗ν)Δ = Δ ν", bad is None, bad)

    bad = None
    for i in range(n):
        got = sum((c * K.coalgebra.counit[k] for k, c in nu.cols[i].items()), field.zero())
        if got != H.coalgebra.counit[i]:
            bad = f"basis {i}"
            break
    rep.add("morphism-counital", "eps ∘ ν = eps", bad is None, bad)

    out: dict = {}
    for (i, j, k), c in H.phi.coeffs.items():
        for a, ca in nu.cols[i].items():
            for b, cb in nu.cols[j].items():
                for d, cd in nu.cols[k].items():
                    key = (a, b, d)
                    out[key] = out.get(key, field.zero()) + c * ca * cb * cd
    nu3phi = TensorElement(K.algebra, 3, {k: v for k, v in out.items() if v})
    rep.add("morphism-reassociator", "(ν⊗ν⊗ν)(Φ_H) = Φ_K", nu3phi == K.phi)

    rep.add("morphism-antipode", "ν ∘ S_H = S_K ∘ ν",
            nu.compose(H.antipode) == K.antipode.compose(nu))
    rep.add("morphism-alpha", "ν(α_H) = α_K",
            nu.apply_vec(H.alpha.as_vector()) == K.alpha.as_vector())
    rep.add("morphism-beta", "ν(β_H) = β_K",
            nu.apply_vec(H.beta.as_vector()) == K.beta.as_vector())
    rep.add("morphism-bijective", "ν is bijective", nu.is_bijective())
    return MorphismCertificate(nu, rep)


# -- bosonization -----------------------------------------------------------------


def adjoint_action_table(H: QuasiHopfAlgebra):
    """The table of h ▷ h' = h_1 h' S(h_2) on basis pairs."""
    n = H.dim
    one, zero = H.field.one(), H.field.zero()
    s_cols = [dict(H.antipode.cols[i]) for i in range(n)]
    tbl = [[None] * n for _ in range(n)]
    for b in range(n):
        for y in range(n):
            out: dict = {}
            for (i, j), c in H.coalgebra.comult[b].items():
                prod = H.algebra.vec_chain([{i: one}, {y: one}, s_cols[j]])
                for k, ck in prod.items():
                    out[k] = out.get(k, zero) + c * ck
            tbl[b][y] = {k: v for k, v in out.items() if v}
    return tbl


def transmuted_product_table(H: QuasiHopfAlgebra):
    """The braided-module product on basis pairs:
    b ∘ b' = X^1 b S(x^1 X^2) α x^2 X^3_1 b' S(x^3 X^3_2)."""
    n = H.dim
    S = H.antipode
    Xe = H.apply(H.phi, [None, None, "comult"])
    XeS = apply_legs(Xe, [None, S, None, S], H.coalgebra)
    xS = apply_legs(H.phi_inv, [S, None, S], H.coalgebra)
    tbl = [[None] * n for _ in range(n)]
    for b in range(n):
        for y in range(n):
            t = leg_product(
                H.algebra, 1, "P1.B1.P2.q1.A1.q2.P3.C1.P4.q3",
                P=XeS, q=xS, A=H.alpha,
                B=TensorElement.basis(H.algebra, (b,)),
                C=TensorElement.basis(H.algebra, (y,)),
            )
            tbl[b][y] = t.as_vector()
    return tbl


def _bilinear_from_table(tbl):
    def apply(u: dict, w: dict) -> dict:
        out: dict = {}
        for b, cb in u.items():
            for y, cy in w.items():
                for k, ck in tbl[b][y].items():
                    s = out.get(k)
                    v = cb * cy * ck
                    s = v if s is None else s + v
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    return apply


def bosonization(H: QuasiHopfAlgebra, R: QTStructure,
                 validate: str = "full") -> QuasiHopfAlgebra:
    """The quasi-Hopf algebra on H ⊗ H transmuted along a braiding."""
    n = H.dim
    field = H.field
    alg = H.algebra
    co = H.coalgebra
    one, zero = field.one(), field.zero()
    S = H.antipode
    f = drinfeld_twist(H)
    pq = pq_elements(H)
    Rm = R.R

    s_cols = [dict(S.cols[i]) for i in range(n)]

    def svec(v: dict) -> dict:
        return S.apply_vec(v)

    act_vec = _bilinear_from_table(adjoint_action_table(H))
    circ_vec = _bilinear_from_table(transmuted_product_table(H))
    Xe = H.apply(H.phi, [None, None, "comult"])  # X^1 (x) X^2 (x) X^3_1 (x) X^3_2

    n2 = n * n

    def fl(b, h):
        return b * n + h

    names = []
    for i in range(n):
        for j in range(n):
            na, nb = alg.names[i], alg.names[j]
            names.append(na + "x" + nb if (na != "1" or nb != "1") else "1")

    mult = [[dict() for _ in range(n2)] for _ in range(n2)]
    for b in range(n):
        for h in range(n):
            for bp in range(n):
                for hp in range(n):
                    row = mult[fl(b, h)][fl(bp, hp)]
                    for (x1, x2, x3), cx in H.phi_inv.coeffs.items():
                        for (h1, h2), ch in co.comult[h].items():
                            c0 = cx * ch
                            a_part = circ_vec(
                                act_vec({x1: one}, {b: one}),
                                act_vec(alg.vec_mul({x2: one}, {h1: one}), {bp: one}),
                            )
                            h_part = alg.vec_chain([{x3: one}, {h2: one}, {hp: one}])
                            for k1, c1 in a_part.items():
                                for k2, c2 in h_part.items():
                                    key = fl(k1, k2)
                                    s = row.get(key)
                                    v = c0 * c1 * c2
                                    s = v if s is None else s + v
                                    if s:
                                        row[key] = s
                                    elif key in row:
                                        del row[key]

    beta_vec = H.beta.as_vector()
    unit_b: dict = {}
    for i, ci in beta_vec.items():
        for j, cj in alg.unit.items():
            unit_b[fl(i, j)] = ci * cj
    balg = AlgebraData(field, n2, mult, unit_b, names)

    # transmuted coproduct on the first factor
    ye = H.apply(H.phi_inv, [None, None, "comult"])
    und_tbl = []
    for b in range(n):
        acc: dict = {}
        for (b1, b2), cb in co.comult[b].items():
            for (x1, x2, x3), cx in H.phi_inv.coeffs.items():
                for (y1, y2, y3a, y3b), cy in ye.coeffs.items():
                    for (X1, X2, X3a, X3b), cX in Xe.coeffs.items():
                        for (g1, g2), cg in f.F_inv.coeffs.items():
                            for (R1, R2), cR in Rm.coeffs.items():
                                c0 = cb * cx * cy * cX * cg * cR
                                v1 = alg.vec_chain([
                                    {x1: one}, {X1: one}, {b1: one}, {g1: one},
                                    s_cols[X3b], s_cols[y3b], s_cols[R2], s_cols[x2],
                                ])
                                if not v1:
                                    continue
                                w_in = alg.vec_chain([
                                    {y1: one}, {X2: one}, {b2: one}, {g2: one},
                                    s_cols[X3a], s_cols[y2],
                                ])
                                if not w_in:
                                    continue
                                u = alg.vec_mul({x3: one}, {R1: one})
                                second = act_vec(u, w_in)
                                for k1, c1 in v1.items():
                                    for k2, c2 in second.items():
                                        key = (k1, k2)
                                        s = acc.get(key)
                                        v = c0 * c1 * c2
                                        s = v if s is None else s + v
                                        if s:
                                            acc[key] = s
                                        elif key in acc:
                                            del acc[key]
        und_tbl.append(acc)

    comult_b = []
    counit_b = []
    for b in range(n):
        for h in range(n):
            row: dict = {}
            for (u1, u2), cu in und_tbl[b].items():
                for (h1, h2), ch in co.comult[h].items():
                    for (y1, y2, y3a, y3b), cy in ye.coeffs.items():
                        for (X1, X2, X3a, X3b), cX in Xe.coeffs.items():
                            for (Y1, Y2, Y3), cY in H.phi.coeffs.items():
                                for (x1, x2, x3), cx in H.phi_inv.coeffs.items():
                                    for (R1, R2), cR in Rm.coeffs.items():
                                        c0 = cu * ch * cy * cX * cY * cx * cR
                                        a1 = act_vec(
                                            alg.vec_mul({y1: one}, {X1: one}), {u1: one})
                                        if not a1:
                                            continue
                                        h1v = alg.vec_chain([
                                            {y2: one}, {Y1: one}, {R2: one},
                                            {x2: one}, {X3a: one}, {h1: one},
                                        ])
                                        a2 = act_vec(
                                            alg.vec_chain([
                                                {y3a: one}, {Y2: one}, {R1: one},
                                                {x1: one}, {X2: one},
                                            ]),
                                            {u2: one},
                                        )
                                        if not a2:
                                            continue
                                        h2v = alg.vec_chain([
                                            {y3b: one}, {Y3: one}, {x3: one},
                                            {X3b: one}, {h2: one},
                                        ])
                                        for p1, cp1 in a1.items():
                                            for q1, cq1 in h1v.items():
                                                left = fl(p1, q1)
                                                cl = c0 * cp1 * cq1
                                                for p2, cp2 in a2.items():
                                                    for q2, cq2 in h2v.items():
                                                        key = (left, fl(p2, q2))
                                                        v = cl * cp2 * cq2
                                                        s = row.get(key)
                                                        s = v if s is None else s + v
                                                        if s:
                                                            row[key] = s
                                                        elif key in row:
                                                            del row[key]
            comult_b.append(row)
            counit_b.append(co.counit[b] * co.counit[h])
    bco = CoalgebraData(field, n2, comult_b, counit_b)

    def beta_pair(vec: dict) -> dict:
        out = {}
        for i, ci in beta_vec.items():
            for j, cj in vec.items():
                out[fl(i, j)] = ci * cj
        return out

    phi_b_coeffs: dict = {}
    phi_b_inv_coeffs: dict = {}
    for src, dst in ((H.phi.coeffs, phi_b_coeffs), (H.phi_inv.coeffs, phi_b_inv_coeffs)):
        for (i, j, k), c in src.items():
            for (bi, ci_) in beta_pair({i: one}).items():
                for (bj, cj_) in beta_pair({j: one}).items():
                    for (bk, ck_) in beta_pair({k: one}).items():
                        key = (bi, bj, bk)
                        dst[key] = dst.get(key, zero) + c * ci_ * cj_ * ck_
    phi_b = TensorElement(balg, 3, {k: v for k, v in phi_b_coeffs.items() if v})
    phi_b_inv = TensorElement(balg, 3, {k: v for k, v in phi_b_inv_coeffs.items() if v})
    u3 = TensorElement.unit(balg, 3)
    if phi_b * phi_b_inv != u3 or phi_b_inv * phi_b != u3:
        phi_b_inv = invert_in_tensor_power(phi_b)

    # antipode on the transmuted factor, then on the smash product
    sh0_cols = []
    for b in range(n):
        acc: dict = {}
        for (X1, X2, X3), cX in H.phi.coeffs.items():
            for (R1, R2), cR in Rm.coeffs.items():
                for (p1, p2), cp in pq.p_r.coeffs.items():
                    for (q1, q2), cq in pq.q_r.coeffs.items():
                        c0 = cX * cR * cp * cq
                        w = act_vec(alg.vec_chain([{X2: one}, {R1: one}, {p1: one}]),
                                    {b: one})
                        if not w:
                            continue
                        inner = alg.vec_chain([{q1: one}, w, svec({q2: one}), {X3: one}])
                        out_v = alg.vec_chain([{X1: one}, {R2: one}, {p2: one},
                                               svec(inner)])
                        for k, ck in out_v.items():
                            s = acc.get(k)
                            v = c0 * ck
                            s = v if s is None else s + v
                            if s:
                                acc[k] = s
                            elif k in acc:
                                del acc[k]
        sh0_cols.append(acc)

    def sh0_vec(u: dict) -> dict:
        out: dict = {}
        for b, cb in u.items():
            for k, ck in sh0_cols[b].items():
                out[k] = out.get(k, zero) + cb * ck
        return {k: v for k, v in out.items() if v}

    xe1 = H.apply(H.phi_inv, ["comult", None, None])
    s_cols_b = []
    for b in range(n):
        for h in range(n):
            col: dict = {}
            for (X1, X2, X3), cX in H.phi.coeffs.items():
                for (x1a, x1b, x2, x3), cx in xe1.coeffs.items():
                    for (R1, R2), cR in Rm.coeffs.items():
                        c0 = cX * cx * cR
                        v1 = alg.vec_mul(
                            svec(alg.vec_chain([{X1: one}, {x1a: one}, {R2: one},
                                                {h: one}])),
                            H.alpha.as_vector(),
                        )
                        first = beta_pair(v1)
                        a2 = act_vec(alg.vec_chain([{X2: one}, {x1b: one}, {R1: one}]),
                                     sh0_vec({b: one}))
                        v2 = alg.vec_chain([{X3: one}, {x2: one}, beta_vec,
                                            svec({x3: one})])
                        second = {}
                        for p, cp_ in a2.items():
                            for q, cq_ in v2.items():
                                second[fl(p, q)] = second.get(fl(p, q), zero) + cp_ * cq_
                        prod = balg.vec_mul(first, second)
                        for k, ck in prod.items():
                            s = col.get(k)
                            v = c0 * ck
                            s = v if s is None else s + v
                            if s:
                                col[k] = s
                            elif k in col:
                                del col[k]
            s_cols_b.append(col)
    s_b = LinMap(field, n2, n2, s_cols_b)

    alpha_b = TensorElement.vector(balg, beta_pair(H.alpha.as_vector()))
    beta_b = TensorElement.vector(balg, beta_pair(beta_vec))

    out = QuasiHopfAlgebra(balg, bco, phi_b, phi_b_inv, s_b, alpha_b, beta_b)
    if validate == "full":
        verify_quasihopf(out).require("bosonization")
    return out
