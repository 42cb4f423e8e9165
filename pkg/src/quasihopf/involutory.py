"""The involutory property and its consequences: inverses of the distinguished
elements, pivotal elements, categorical dimensions, the trace functional, and
the sufficient condition for the double to stay involutory."""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import Scalar
from .quasihopf import (
    QuasiHopfAlgebra,
    VerificationReport,
    drinfeld_twist,
    normalized_integral,
    pq_elements,
)
from .tensorcore import (
    NotInvertible,
    TensorElement,
    apply_legs,
    flip,
    invert_in_tensor_power,
    solve_linear,
)


class NotInvolutory(ValueError):
    pass


class NoNormalizedIntegral(ValueError):
    pass


class SolutionSpaceTooLarge(ValueError):
    """The commutation space for pivotal candidates has dimension > 2; the
    quadratic solve is refused rather than attempted heuristically."""


@dataclass
class InvolutoryCertificate:
    holds: bool
    u: TensorElement
    v: TensorElement
    alpha_inv: TensorElement | None
    beta_inv: TensorElement | None
    report: VerificationReport


@dataclass
class PivotalElement:
    g: TensorElement
    g_inv: TensorElement
    report: VerificationReport


def is_involutory(H: QuasiHopfAlgebra) -> InvolutoryCertificate:
    """Decide S^2(h) = S(β)α h βS(α) and, when it holds, certify the inverse
    identities it forces on α and β."""
    rep = VerificationReport()
    u = H.mul(H.s_vec(H.beta), H.alpha)
    v = H.mul(H.beta, H.s_vec(H.alpha))
    holds = True
    witness = None
    for i in range(H.dim):
        hv = H.vec(i)
        if H.s_vec(H.s_vec(hv)) != H.mul(u, hv, v):
            holds = False
            witness = f"basis {i}"
            break
    rep.add("involutory", "S^2(h) = S(β)α h βS(α)", holds, witness)
    if not holds:
        return InvolutoryCertificate(False, u, v, None, None, rep)

    one = H.unit_t(1)
    rep.add("involutory-inverse-pair", "S(β)α and βS(α) are mutually inverse",
            u * v == one and v * u == one)

    alpha_inv_a = H.mul(H.sinv_vec(H.alpha * H.beta), H.beta)
    alpha_inv_b = H.mul(H.beta, H.s_vec(H.beta * H.alpha))
    beta_inv_a = H.mul(H.s_vec(H.beta * H.alpha), H.alpha)
    beta_inv_b = H.mul(H.alpha, H.sinv_vec(H.alpha * H.beta))
    rep.add("involutory-alpha-inverse",
            "α^{-1} = S^{-1}(αβ)β = βS(βα), a two-sided inverse",
            alpha_inv_a == alpha_inv_b
            and alpha_inv_a * H.alpha == one and H.alpha * alpha_inv_a == one)
    rep.add("involutory-beta-inverse",
            "β^{-1} = S(βα)α = αS^{-1}(αβ), a two-sided inverse",
            beta_inv_a == beta_inv_b
            and beta_inv_a * H.beta == one and H.beta * beta_inv_a == one)

    bad = None
    for i in range(H.dim):
        hv = H.vec(i)
        if H.mul(v, H.s_vec(H.s_vec(hv)), u) != hv:
            bad = f"basis {i}"
            break
    rep.add("involutory-inner-form", "βS(α) S^2(h) S(β)α = h", bad is None, bad)
    return InvolutoryCertificate(True, u, v, alpha_inv_a, beta_inv_a, rep)


def antipode_swap_identities(H: QuasiHopfAlgebra) -> VerificationReport:
    """S(h_2) β^{-1} h_1 = eps(h) β^{-1} and h_2 α^{-1} S(h_1) = eps(h) α^{-1}."""
    cert = is_involutory(H)
    if not cert.holds:
        raise NotInvolutory("identities require the involutory property")
    rep = VerificationReport()
    bad_l = bad_r = None
    for i in range(H.dim):
        eps_i = H.coalgebra.counit[i]
        lhs_l = TensorElement.zero(H.algebra, 1)
        lhs_r = TensorElement.zero(H.algebra, 1)
        for (a, b), c in H.delta_basis(i).coeffs.items():
            lhs_l = lhs_l + c * H.mul(H.s_vec(H.vec(b)), cert.beta_inv, H.vec(a))
            lhs_r = lhs_r + c * H.mul(H.vec(b), cert.alpha_inv, H.s_vec(H.vec(a)))
        if bad_l is None and lhs_l != cert.beta_inv.scale(eps_i):
            bad_l = f"basis {i}"
        if bad_r is None and lhs_r != cert.alpha_inv.scale(eps_i):
            bad_r = f"basis {i}"
    rep.add("swap-beta", "S(h_2) β^{-1} h_1 = eps(h) β^{-1}", bad_l is None, bad_l)
    rep.add("swap-alpha", "h_2 α^{-1} S(h_1) = eps(h) α^{-1}", bad_r is None, bad_r)
    return rep


def _pivot_constraint_tensor(H: QuasiHopfAlgebra) -> TensorElement:
    """(S⊗S)(f_{21}^{-1}) f, the correction relating Δ(g) to g⊗g."""
    f = drinfeld_twist(H)
    return apply_legs(flip(f.F_inv), [H.antipode, H.antipode], H.coalgebra) * f.F


def _certify_pivotal(H: QuasiHopfAlgebra, g: TensorElement, K: TensorElement):
    try:
        g_inv = invert_in_tensor_power(g)
    except NotInvertible:
        return None
    rep = VerificationReport()
    bad = None
    for i in range(H.dim):
        hv = H.vec(i)
        if g * H.s_vec(H.s_vec(hv)) != hv * g:
            bad = f"basis {i}"
            break
    rep.add("pivot-conjugates", "g S^2(h) = h g", bad is None, bad)
    rep.add("pivot-comultiplication", "Δ(g) = (g⊗g)(S⊗S)(f_{21}^{-1})f",
            H.delta(g) == (g.outer(g)) * K)
    rep.add("pivot-counit", "eps(g) = 1", H.eps(g).is_one())
    if not rep.passed:
        return None
    return PivotalElement(g, g_inv, rep)


def pivotal_elements(H: QuasiHopfAlgebra, canonical: bool = False,
                     modules=None) -> list[PivotalElement]:
    """All invertible g with g S^2(h) = h g, Δ(g) = (g⊗g)(S⊗S)(f_{21}^{-1})f
    and eps(g) = 1.

    The commutation condition is linear; inside its solution space the
    comultiplication condition is quadratic and is solved exactly when the
    space has dimension at most two (all bundled instances qualify), else
    `SolutionSpaceTooLarge` is raised.  With `canonical=True` the list is
    filtered to the elements whose categorical dimension matches the linear
    dimension on the probe modules (the regular module by default), which
    pins the distinguished pivotal structure of a split-semisimple instance.
    """
    n = H.dim
    field = H.field
    zero = field.zero()
    S2 = H.antipode.compose(H.antipode)

    rows = []
    for b in range(n):
        s2b = S2.cols[b]
        for k in range(n):
            row = []
            for i in range(n):
                # coefficient of e_k in e_i * S^2(e_b) - e_b * e_i
                acc = zero
                for m, cm in s2b.items():
                    acc = acc + cm * H.algebra.mul_basis(i, m).get(k, zero)
                acc = acc - H.algebra.mul_basis(b, i).get(k, zero)
                row.append(acc)
            rows.append(row)
    _, kernel = solve_linear(rows, [zero] * len(rows))
    dim_space = len(kernel)
    if dim_space == 0:
        return []
    if dim_space > 2:
        raise SolutionSpaceTooLarge(
            f"commutation space has dimension {dim_space}; quadratic reduction "
            "is only attempted up to dimension 2"
        )

    K = _pivot_constraint_tensor(H)
    basis_vecs = [TensorElement.vector(H.algebra, {i: c for i, c in enumerate(vec) if c})
                  for vec in kernel]
    candidates: list[TensorElement] = []

    if dim_space == 1:
        v1 = basis_vecs[0]
        # g = s v1 with Δ(g) - (g⊗g)K = 0: each coordinate reads s*a = s^2*b
        lin = H.delta(v1)
        quad = (v1.outer(v1)) * K
        ratios = set()
        consistent = True
        for idx in set(lin.coeffs) | set(quad.coeffs):
            a = lin.coeffs.get(idx, zero)
            b = quad.coeffs.get(idx, zero)
            if not b:
                if a:
                    consistent = False
                    break
                continue
            ratios.add(a / b)
        if consistent:
            for s in ratios:
                if s:
                    candidates.append(v1.scale(s))
    else:
        v1, v2 = basis_vecs
        e1, e2 = H.eps(v1), H.eps(v2)
        # use eps(g)=1 to eliminate one coordinate, then solve the quadratics
        if not e1 and not e2:
            return []
        if not e1:
            v1, v2 = v2, v1
            e1, e2 = e2, e1
        # g = ((1 - e2 t)/e1) v1 + t v2 =: a(t) v1 + t v2
        lin1, lin2 = H.delta(v1), H.delta(v2)
        q11 = (v1.outer(v1)) * K
        q12 = ((v1.outer(v2)) + (v2.outer(v1))) * K
        q22 = (v2.outer(v2)) * K
        one = field.one()
        inv_e1 = e1.inv()
        polys = []
        keys = (set(lin1.coeffs) | set(lin2.coeffs) | set(q11.coeffs)
                | set(q12.coeffs) | set(q22.coeffs))
        for idx in keys:
            l1 = lin1.coeffs.get(idx, zero)
            l2 = lin2.coeffs.get(idx, zero)
            a11 = q11.coeffs.get(idx, zero)
            a12 = q12.coeffs.get(idx, zero)
            a22 = q22.coeffs.get(idx, zero)
            # a(t) = (1 - e2 t) / e1; expand a(t) l1 + t l2 = a^2 a11 + a t a12 + t^2 a22
            # multiply through by e1^2
            c2 = e2 * e2 * a11 - e1 * e2 * a12 + e1 * e1 * a22
            c1 = -(e1 * e1) * l2 + e1 * e2 * l1 - (e2 + e2) * a11 + e1 * a12
            c0 = a11 - e1 * l1
            polys.append((c2, c1, c0))
        roots = set()
        have_nontrivial = False
        for (c2, c1, c0) in polys:
            if not c2 and not c1:
                continue
            have_nontrivial = True
            if not c2:
                roots.add(-c0 / c1)
                continue
            disc = c1 * c1 - field.from_int(4) * c2 * c0
            r = field.sqrt(disc)
            if r is not None:
                two_a = c2 + c2
                roots.add((-c1 + r) / two_a)
                roots.add((-c1 - r) / two_a)
            break
        if not have_nontrivial:
            raise SolutionSpaceTooLarge(
                "comultiplication constraint is degenerate on the pivot plane"
            )
        for t in roots:
            a = (one - e2 * t) * inv_e1
            g = v1.scale(a) + v2.scale(t)
            ok = True
            for (c2, c1, c0) in polys:
                if c2 * t * t + c1 * t + c0:
                    ok = False
                    break
            if ok and not g.is_zero():
                candidates.append(g)

    out = []
    seen = set()
    for g in candidates:
        key = tuple(sorted(g.coeffs.items()))
        if key in seen:
            continue
        seen.add(key)
        piv = _certify_pivotal(H, g, K)
        if piv is not None:
            out.append(piv)
    out.sort(key=lambda p: sorted(p.g.coeffs.items()))

    if canonical:
        from .repcat import regular_module

        probes = modules if modules is not None else [regular_module(H)]
        filtered = []
        for piv in out:
            good = True
            for M in probes:
                want = field.from_int(M.dim)
                if categorical_dimension(H, piv.g, M) != want:
                    good = False
                    break
            if good:
                filtered.append(piv)
        return filtered
    return out


def pivotal_from_integral(H: QuasiHopfAlgebra) -> TensorElement:
    """g = q^2 Λ_2 p^2 S(q^1 Λ_1 p^1) for a normalized two-sided integral Λ."""
    lam = normalized_integral(H)
    if lam is None:
        raise NoNormalizedIntegral("no two-sided integral with counit one")
    pq = pq_elements(H)
    out = TensorElement.zero(H.algebra, 1)
    dl = H.delta(lam)
    for (q1, q2), cq in pq.q_r.coeffs.items():
        for (l1, l2), cl in dl.coeffs.items():
            for (p1, p2), cp in pq.p_r.coeffs.items():
                c = cq * cl * cp
                inner = H.mul(H.vec(q1), H.vec(l1), H.vec(p1))
                out = out + c * H.mul(H.vec(q2), H.vec(l2), H.vec(p2),
                                      H.s_vec(inner))
    cert = is_involutory(H)
    if cert.holds and out != cert.v:
        raise NotInvolutory(
            "integral formula disagrees with βS(α) on an involutory input"
        )
    return out


def categorical_dimension(H: QuasiHopfAlgebra, g: TensorElement, M) -> Scalar:
    """Trace of the module action of g^{-1} βS(α); checked against the second
    form g S(β)α."""
    g_inv = invert_in_tensor_power(g)
    u = H.mul(H.s_vec(H.beta), H.alpha)
    v = H.mul(H.beta, H.s_vec(H.alpha))
    z1 = (g_inv * v).as_vector()
    z2 = (g * u).as_vector()
    tr1 = M.trace_of(z1)
    tr2 = M.trace_of(z2)
    if tr1 != tr2:
        raise NotInvolutory("the two dimension formulas disagree (g is not pivotal)")
    return tr1


def trace_operator(H: QuasiHopfAlgebra) -> Scalar:
    """Trace of h ↦ S^{-2}(S(β)α h βS(α)) on H."""
    u = H.mul(H.s_vec(H.beta), H.alpha)
    v = H.mul(H.beta, H.s_vec(H.alpha))
    sinv = H.antipode_inverse
    total = H.field.zero()
    for b in range(H.dim):
        w = H.mul(u, H.vec(b), v)
        w = sinv.apply_tensor(sinv.apply_tensor(w))
        total = total + w.as_vector().get(b, H.field.zero())
    return total


def double_involutory_condition(H: QuasiHopfAlgebra) -> VerificationReport:
    """Δ(S(β)α) = f^{-1}(S⊗S)(f_{21})(S(β)α ⊗ S(β)α): sufficient for the
    double of an involutory algebra to be involutory."""
    cert = is_involutory(H)
    if not cert.holds:
        raise NotInvolutory("condition is stated for involutory inputs")
    f = drinfeld_twist(H)
    u = cert.u
    lhs = H.delta(u)
    rhs = f.F_inv * apply_legs(flip(f.F), [H.antipode, H.antipode], H.coalgebra) \
        * u.outer(u)
    rep = VerificationReport()
    rep.add("double-involutory-condition",
            "Δ(S(β)α) = f^{-1}(S⊗S)(f_{21})(S(β)α⊗S(β)α)", lhs == rhs,
            None if lhs == rhs else f"lhs={lhs.pretty()} rhs={rhs.pretty()}")
    return rep


def verify_involutory_double(H: QuasiHopfAlgebra, double_validate: str = "basic"):
    """Check the sufficient condition, build the double, and certify that the
    double is involutory; returns (condition report, double certificate)."""
    from .doublebos import quantum_double

    rep = double_involutory_condition(H)
    dr = quantum_double(H, validate=double_validate)
    cert = is_involutory(dr.double)
    return rep, cert, dr
