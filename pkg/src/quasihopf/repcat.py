"""Finite-dimensional modules: duals, tensor products, evaluation and
coevaluation, intertwiner spaces, the freeness isomorphism for the diagonal
action on H ⊗ H, and dimension-divisibility reporting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exactfield import Field, Scalar
from .quasihopf import (
    QuasiHopfAlgebra,
    VerificationReport,
    is_semisimple,
    pq_elements,
)
from .tensorcore import LinMap, TensorElement, solve_linear


@dataclass
class HModule:
    """A left module given by one matrix per basis element of the algebra.

    mats[b][r][c] is the coefficient of v_r in e_b · v_c.
    """

    dim: int
    mats: list
    field: Field
    label: str = ""

    def act_matrix(self, vec: dict):
        """Matrix of the action of an algebra element (coordinate dict)."""
        z = self.field.zero()
        out = [[z] * self.dim for _ in range(self.dim)]
        for b, c in vec.items():
            mb = self.mats[b]
            for r in range(self.dim):
                row = mb[r]
                for s in range(self.dim):
                    if row[s]:
                        out[r][s] = out[r][s] + c * row[s]
        return out

    def trace_of(self, vec: dict) -> Scalar:
        total = self.field.zero()
        for b, c in vec.items():
            mb = self.mats[b]
            for r in range(self.dim):
                total = total + c * mb[r][r]
        return total


def _mat_mul(field, a, b):
    n, m, k = len(a), len(b[0]), len(b)
    z = field.zero()
    out = [[z] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if a[i][t]:
                ait = a[i][t]
                for j in range(m):
                    if b[t][j]:
                        out[i][j] = out[i][j] + ait * b[t][j]
    return out


def verify_module(H: QuasiHopfAlgebra, M: HModule) -> VerificationReport:
    rep = VerificationReport()
    z = H.field.zero()
    bad = None
    for a in range(H.dim):
        for b in range(H.dim):
            lhs = _mat_mul(H.field, M.mats[a], M.mats[b])
            rhs = [[z] * M.dim for _ in range(M.dim)]
            for k, c in H.algebra.mul_basis(a, b).items():
                mk = M.mats[k]
                for r in range(M.dim):
                    for s in range(M.dim):
                        if mk[r][s]:
                            rhs[r][s] = rhs[r][s] + c * mk[r][s]
            if lhs != rhs:
                bad = f"pair ({a},{b})"
                break
        if bad:
            break
    rep.add("module-multiplicative", "ρ(a)ρ(b) = ρ(ab)", bad is None, bad)
    ident = [[H.field.one() if r == s else z for s in range(M.dim)] for r in range(M.dim)]
    rep.add("module-unital", "ρ(1) = id", M.act_matrix(H.algebra.unit) == ident)
    return rep


def trivial_module(H: QuasiHopfAlgebra) -> HModule:
    return HModule(1, [[[H.coalgebra.counit[b]]] for b in range(H.dim)],
                   H.field, label="trivial")


def regular_module(H: QuasiHopfAlgebra) -> HModule:
    z = H.field.zero()
    mats = []
    for b in range(H.dim):
        m = [[z] * H.dim for _ in range(H.dim)]
        for c in range(H.dim):
            for r, v in H.algebra.mul_basis(b, c).items():
                m[r][c] = v
        mats.append(m)
    return HModule(H.dim, mats, H.field, label="regular")


def dual_module(H: QuasiHopfAlgebra, M: HModule) -> HModule:
    """Transpose action through the antipode: <h·φ, v> = <φ, S(h)·v>."""
    z = H.field.zero()
    mats = []
    for b in range(H.dim):
        sb = H.antipode.cols[b]
        m = [[z] * M.dim for _ in range(M.dim)]
        for t, c in sb.items():
            mt = M.mats[t]
            for r in range(M.dim):
                for s in range(M.dim):
                    if mt[r][s]:
                        m[s][r] = m[s][r] + c * mt[r][s]
        mats.append(m)
    return HModule(M.dim, mats, H.field, label=f"{M.label}^*" if M.label else "dual")


def tensor_module(H: QuasiHopfAlgebra, M: HModule, N: HModule) -> HModule:
    z = H.field.zero()
    dim = M.dim * N.dim
    mats = []
    for b in range(H.dim):
        m = [[z] * dim for _ in range(dim)]
        for (i, j), c in H.delta_basis(b).coeffs.items():
            mi, nj = M.mats[i], N.mats[j]
            for r1 in range(M.dim):
                for s1 in range(M.dim):
                    if not mi[r1][s1]:
                        continue
                    a = c * mi[r1][s1]
                    for r2 in range(N.dim):
                        row = nj[r2]
                        for s2 in range(N.dim):
                            if row[s2]:
                                m[r1 * N.dim + r2][s1 * N.dim + s2] = (
                                    m[r1 * N.dim + r2][s1 * N.dim + s2] + a * row[s2]
                                )
        mats.append(m)
    return HModule(dim, mats, H.field,
                   label=f"{M.label}(x){N.label}" if M.label and N.label else "tensor")


def ev_coev(H: QuasiHopfAlgebra, M: HModule):
    """Evaluation form ev(φ_i ⊗ v_j) = φ_i(α·v_j) and coevaluation vector
    Σ β·v_i ⊗ φ_i, both certified to be module maps."""
    ev = M.act_matrix(H.alpha.as_vector())
    rho_beta = M.act_matrix(H.beta.as_vector())
    z = H.field.zero()
    coev = {}
    for r in range(M.dim):
        for i in range(M.dim):
            if rho_beta[r][i]:
                coev[(r, i)] = rho_beta[r][i]

    rep = VerificationReport()
    Mstar = dual_module(H, M)
    bad = None
    for b in range(H.dim):
        # ev is a map M* ⊗ M -> k (trivial): ev(h·(φ⊗v)) = eps(h) ev(φ⊗v)
        for i in range(M.dim):
            for j in range(M.dim):
                acc = z
                for (h1, h2), c in H.delta_basis(b).coeffs.items():
                    m1, m2 = Mstar.mats[h1], M.mats[h2]
                    for r in range(M.dim):
                        if not m1[r][i]:
                            continue
                        for s in range(M.dim):
                            if m2[s][j]:
                                acc = acc + c * m1[r][i] * m2[s][j] * ev[r][s]
                if acc != H.coalgebra.counit[b] * ev[i][j]:
                    bad = f"basis {b} at ({i},{j})"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("evaluation-linear", "ev is a module map to the trivial module",
            bad is None, bad)

    bad = None
    for b in range(H.dim):
        out = {}
        for (h1, h2), c in H.delta_basis(b).coeffs.items():
            m1, m2 = M.mats[h1], Mstar.mats[h2]
            for (r, i), cv in coev.items():
                for r2 in range(M.dim):
                    if not m1[r2][r]:
                        continue
                    a = c * cv * m1[r2][r]
                    for i2 in range(M.dim):
                        if m2[i2][i]:
                            key = (r2, i2)
                            out[key] = out.get(key, z) + a * m2[i2][i]
        want = {k: H.coalgebra.counit[b] * v for k, v in coev.items()
                if H.coalgebra.counit[b] * v}
        if {k: v for k, v in out.items() if v} != want:
            bad = f"basis {b}"
            break
    rep.add("coevaluation-linear", "coev is a module map from the trivial module",
            bad is None, bad)
    return ev, coev, rep


def hom_space(H: QuasiHopfAlgebra, M: HModule, N: HModule):
    """Basis of module maps M -> N, plus the dimension comparison with
    maps from the trivial module into N ⊗ M*."""
    field = H.field
    z = field.zero()
    nm = N.dim * M.dim
    rows = []
    for b in range(H.dim):
        mb, nb = M.mats[b], N.mats[b]
        for r in range(N.dim):
            for c in range(M.dim):
                row = [z] * nm
                # (ρ_N(b) T - T ρ_M(b))[r][c]
                for t in range(N.dim):
                    if nb[r][t]:
                        row[t * M.dim + c] = row[t * M.dim + c] + nb[r][t]
                for t in range(M.dim):
                    if mb[t][c]:
                        row[r * M.dim + t] = row[r * M.dim + t] - mb[t][c]
                rows.append(row)
    _, kernel = solve_linear(rows, [z] * len(rows))
    basis = []
    for vec in kernel:
        mat = [[vec[r * M.dim + c] for c in range(M.dim)] for r in range(N.dim)]
        basis.append(mat)

    W = tensor_module(H, N, dual_module(H, M))
    rows = []
    for b in range(H.dim):
        wb = W.mats[b]
        eps_b = H.coalgebra.counit[b]
        for r in range(W.dim):
            row = [wb[r][c] - eps_b if c == r else wb[r][c] for c in range(W.dim)]
            rows.append(row)
    _, invariants = solve_linear(rows, [z] * len(rows))
    if len(invariants) != len(basis):
        from .quasihopf import InternalInconsistency

        raise InternalInconsistency(
            f"hom-space dimensions disagree: {len(basis)} maps vs "
            f"{len(invariants)} invariants in N⊗M*"
        )
    return basis, len(invariants)


def diagonal_free_isomorphism(H: QuasiHopfAlgebra):
    """The explicit intertwiner showing H ⊗ H with the diagonal action is free:
    μ(h⊗h') = q̃^2 h'_2 ⊗ S^{-1}(q̃^1 h'_1) h with inverse h_1 p̃^1 h' ⊗ h_2 p̃^2."""
    pq = pq_elements(H)
    sinv = H.antipode_inverse
    n = H.dim
    field = H.field
    z = field.zero()

    def fl(a, b):
        return a * n + b

    mu_cols = [dict() for _ in range(n * n)]
    mu_inv_cols = [dict() for _ in range(n * n)]
    for h in range(n):
        for hp in range(n):
            out: dict = {}
            for (h1, h2), c in H.delta_basis(hp).coeffs.items():
                for (q1, q2), cq in pq.q_l.coeffs.items():
                    left = H.algebra.vec_mul({q2: field.one()}, {h2: field.one()})
                    inner = H.algebra.vec_mul({q1: field.one()}, {h1: field.one()})
                    right = H.algebra.vec_mul(sinv.apply_vec(inner), {h: field.one()})
                    for a, ca in left.items():
                        for b, cb in right.items():
                            key = fl(a, b)
                            out[key] = out.get(key, z) + c * cq * ca * cb
            mu_cols[fl(h, hp)] = {k: v for k, v in out.items() if v}

            out = {}
            for (h1, h2), c in H.delta_basis(h).coeffs.items():
                for (p1, p2), cp in pq.p_l.coeffs.items():
                    left = H.algebra.vec_chain(
                        [{h1: field.one()}, {p1: field.one()}, {hp: field.one()}])
                    right = H.algebra.vec_mul({h2: field.one()}, {p2: field.one()})
                    for a, ca in left.items():
                        for b, cb in right.items():
                            key = fl(a, b)
                            out[key] = out.get(key, z) + c * cp * ca * cb
            mu_inv_cols[fl(h, hp)] = {k: v for k, v in out.items() if v}

    mu = LinMap(field, n * n, n * n, mu_cols, 2, 2)
    mu_inv = LinMap(field, n * n, n * n, mu_inv_cols, 2, 2)

    rep = VerificationReport()
    ident = LinMap.identity(field, n * n)
    rep.add("mu-inverse", "μ∘μ^{-1} = μ^{-1}∘μ = id",
            mu.compose(mu_inv) == ident and mu_inv.compose(mu) == ident)

    bad = None
    for b in range(n):
        db = H.delta_basis(b)
        for i in range(n):
            for j in range(n):
                src: dict = {}
                for (h1, h2), c in db.coeffs.items():
                    li = H.algebra.vec_mul({h1: field.one()}, {i: field.one()})
                    rj = H.algebra.vec_mul({h2: field.one()}, {j: field.one()})
                    for a, ca in li.items():
                        for bb, cb in rj.items():
                            key = fl(a, bb)
                            src[key] = src.get(key, z) + c * ca * cb
                lhs = mu.apply_vec({k: v for k, v in src.items() if v})
                base = mu.apply_vec({fl(i, j): field.one()})
                rhs: dict = {}
                for key, cv in base.items():
                    a, bb = divmod(key, n)
                    for a2, ca in H.algebra.mul_basis(b, a).items():
                        k2 = fl(a2, bb)
                        rhs[k2] = rhs.get(k2, z) + cv * ca
                if lhs != {k: v for k, v in rhs.items() if v}:
                    bad = f"basis {b} on ({i},{j})"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("mu-linear",
            "μ intertwines the diagonal action with left multiplication on the first leg",
            bad is None, bad)
    return mu, mu_inv, rep


def one_dimensional_characters(H: QuasiHopfAlgebra, generators) -> list[HModule]:
    """All one-dimensional modules obtained by sending each listed generator to
    a root of unity of its order.

    `generators` is a list of (vector, order) pairs whose power products span
    the algebra; candidates failing the algebra-map equations are discarded.
    """
    field = H.field
    gens = [(TensorElement.vector(H.algebra, dict(v.as_vector())), order)
            for v, order in generators]
    monomials = []
    for exps in itertools.product(*[range(order) for _, order in gens]):
        m = H.unit_t(1)
        for (g, _), e in zip(gens, exps):
            for _ in range(e):
                m = m * g
        monomials.append((exps, m))
    n = H.dim
    z = field.zero()
    rows = []
    for _, m in monomials:
        vec = m.as_vector()
        rows.append([vec.get(i, z) for i in range(n)])
    if len(rows) != n:
        return []
    out = []
    root_lists = [field.roots_of_unity(order) for _, order in gens]
    for values in itertools.product(*root_lists):
        rhs = []
        for exps, _ in monomials:
            val = field.one()
            for lam, e in zip(values, exps):
                val = val * lam ** e
            rhs.append(val)
        # solve for chi on the basis from its values on the monomials
        sol, kernel = solve_linear(rows, rhs)
        if sol is None or kernel:
            continue
        M = HModule(1, [[[sol[b]]] for b in range(n)], field,
                    label="chi(" + ",".join(str(v) for v in values) + ")")
        if verify_module(H, M).passed:
            out.append(M)
    return out


@dataclass
class ModuleFacts:
    module: HModule
    dim: int
    end_dim: int
    absolutely_simple: bool
    char_divides_dim: bool
    is_projective_regular: bool


@dataclass
class DivisibilityReport:
    semisimple: bool
    involutory: bool
    characteristic: int
    facts: list
    consistent: bool
    violations: list


def divisibility_report(H: QuasiHopfAlgebra, modules) -> DivisibilityReport:
    """Check the dimension-divisibility phenomena on a module list.

    For a semisimple involutory algebra no absolutely simple module may have
    dimension divisible by the characteristic; for a non-semisimple involutory
    algebra every projective module (the regular one is the certified case)
    must have dimension divisible by the characteristic.
    """
    from .involutory import is_involutory

    semi = is_semisimple(H)
    invol = is_involutory(H).holds
    p = H.field.characteristic()
    facts = []
    violations = []
    for M in modules:
        basis, _ = hom_space(H, M, M)
        end_dim = len(basis)
        abs_simple = end_dim == 1
        divides = p > 0 and M.dim % p == 0
        projective_regular = M.label == "regular"
        facts.append(ModuleFacts(M, M.dim, end_dim, abs_simple, divides,
                                 projective_regular))
        if semi and invol and abs_simple and divides:
            violations.append(
                f"absolutely simple module {M.label!r} of dimension {M.dim} "
                f"divisible by char {p}")
        if (not semi) and invol and projective_regular and p > 0 and M.dim % p != 0:
            violations.append(
                f"projective module {M.label!r} of dimension {M.dim} "
                f"not divisible by char {p}")
    return DivisibilityReport(semi, invol, p, facts, not violations, violations)
