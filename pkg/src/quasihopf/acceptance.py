"""The full acceptance corpus: every headline computation on the bundled
two-dimensional family, run end to end at exact equality.

Each criterion is a method returning (passed, detail); `run_suite` aggregates
them under stable check ids for CI-friendly output.  The pytest acceptance
module and the command line `suite paper` both drive this code.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from . import doublebos as db
from . import dualside as ds
from . import involutory as iv
from . import repcat as rc
from . import serialize
from .exactfield import Field, gaussian, prime_field
from .fixtures import c4_hopf, group_hopf, h2, klein
from .quasihopf import (
    TwistData,
    VerificationReport,
    drinfeld_twist,
    gauge_twist,
    is_semisimple,
    structures_equal,
    tensor_product,
    variants,
    verify_quasihopf,
)
from .tensorcore import LinMap, TensorElement, outer, rehome

CHECK_IDS = [
    "axioms",
    "drinfeld-twist",
    "rmatrix-classification",
    "qt-nonisomorphism",
    "quantum-double",
    "factorizability",
    "zeta-isomorphism",
    "c4-composite",
    "bosonization",
    "involutory-suite",
    "pivotal",
    "double-involutory",
    "trace-dimension",
    "representations",
    "dual-side",
    "roundtrip",
]


class PaperSuite:
    """Caches the fixtures and derived objects the criteria share."""

    def __init__(self, field: Field | None = None):
        self.field = field if field is not None else gaussian()

    # -- shared objects -------------------------------------------------------

    @cached_property
    def h2(self):
        return h2(self.field)

    @cached_property
    def klein_x(self):
        return klein(self.field, "x")

    @cached_property
    def klein_xandy(self):
        return klein(self.field, "x_and_y")

    @cached_property
    def klein_xy(self):
        return klein(self.field, "xy")

    @cached_property
    def c4(self):
        return c4_hopf(self.field)

    @cached_property
    def h2h2(self):
        return tensor_product(self.h2, self.h2)

    @cached_property
    def rmatrices(self):
        return db.enumerate_rmatrices_h2(self.h2)

    @cached_property
    def double(self):
        return db.quantum_double(self.h2)

    @cached_property
    def double_klein(self):
        # full axiom verification of this 16-dimensional object lives in the
        # slow test tier; the fast path certifies the embedding and unit laws
        return db.quantum_double(self.klein_x, validate="basic")

    @cached_property
    def bos_plus(self):
        return db.bosonization(self.h2, self.rmatrices[0])

    @cached_property
    def bos_minus(self):
        return db.bosonization(self.h2, self.rmatrices[1])

    @cached_property
    def iso_plus(self):
        return db.double_iso(self.h2, self.rmatrices[0], double=self.double)

    @cached_property
    def iso_minus(self):
        return db.double_iso(self.h2, self.rmatrices[1], double=self.double)

    @cached_property
    def half(self):
        return self.field.from_int(2).inv()

    def double_generators(self):
        """X = eps ⋈ g and Y = μ ⋈ 1 in the double's pair basis."""
        one = self.field.one()
        D = self.double.double
        X = TensorElement(D.algebra, 1, {(1,): one, (3,): one})
        Y = TensorElement(D.algebra, 1, {(0,): one, (2,): -one})
        return X, Y

    def involutory_fixtures(self):
        return [
            ("h2", self.h2),
            ("klein_x", self.klein_x),
            ("klein_xandy", self.klein_xandy),
            ("klein_xy", self.klein_xy),
            ("h2h2", self.h2h2),
            ("double", self.double.double),
            ("bos", self.bos_plus),
        ]

    # -- criteria ----------------------------------------------------------------

    def criterion_axioms(self):
        fixtures = [
            ("h2", self.h2),
            ("klein_x", self.klein_x),
            ("klein_xandy", self.klein_xandy),
            ("klein_xy", self.klein_xy),
            ("c4", self.c4),
            ("h2h2", self.h2h2),
            ("double", self.double.double),
            ("bos_plus", self.bos_plus),
            ("bos_minus", self.bos_minus),
        ]
        bad = []
        for name, H in fixtures:
            rep = verify_quasihopf(H)
            if not rep.passed:
                bad.append(f"{name}: {[e.check_id for e in rep.failures()]}")
        return not bad, "; ".join(bad) or f"{len(fixtures)} structures verified"

    def criterion_drinfeld_twist(self):
        H = self.h2
        f = drinfeld_twist(H)  # construction re-verifies its identities
        g = TensorElement.basis(H.algebra, (1,))
        u = H.unit_t(1)
        p_minus = (u - g).scale(self.half)
        p_plus = (u + g).scale(self.half)
        expected = g.outer(p_minus) + u.outer(p_plus)
        ok = f.F == expected and f.F_inv == expected
        return ok, "f = g⊗p_- + 1⊗p_+ and f = f^{-1}" if ok else "twist mismatch"

    def criterion_rmatrices(self):
        rs = self.rmatrices
        if len(rs) != 2:
            return False, f"expected 2 braidings, found {len(rs)}"
        H = self.h2
        ii = self.field.i()
        one = self.field.one()
        u2 = H.unit_t(2)
        g = TensorElement.basis(H.algebra, (1,))
        p = (H.unit_t(1) - g).scale(self.half)
        pp = p.outer(p)
        expected = {0: u2 - pp.scale(one + ii), 1: u2 - pp.scale(one - ii)}
        if rs[0].R != expected[0] or rs[1].R != expected[1]:
            return False, "braidings differ from 1 - (1±i) p⊗p"
        for qt in rs:
            if not db.verify_qt(H, qt).passed:
                return False, "a certified braiding failed re-verification"
        for w in (0, 1, 2, 4):
            cand = u2 - pp.scale(self.field.from_int(w))
            if db.verify_qt(H, cand).passed:
                return False, f"spurious braiding at w={w}"
        return True, "exactly two braidings; four non-roots rejected"

    def criterion_qt_nonisomorphism(self):
        # unital algebra endomorphisms send g to s + t g with s^2+t^2 = 1 and
        # 2st = 0; enumerate the exact solutions and test the braiding swap
        H = self.h2
        field = self.field
        one = field.one()
        g = TensorElement.basis(H.algebra, (1,))
        u = H.unit_t(1)
        candidates = []
        for s_is_zero in (True, False):
            r = field.sqrt(one)
            if r is None:
                continue
            for sign in (r, -r):
                if s_is_zero:
                    candidates.append((field.zero(), sign))
                else:
                    candidates.append((sign, field.zero()))
        rp, rm = self.rmatrices
        automorphisms = 0
        for s, t in candidates:
            img = u.scale(s) + g.scale(t)
            if img * img != u:
                return False, f"candidate ({s},{t}) fails the relation check"
            cols = [dict(u.as_vector()), dict(img.as_vector())]
            nu = LinMap(field, 2, 2, cols)
            if not nu.is_bijective():
                continue
            automorphisms += 1
            # (nu ⊗ nu)(R+) expanded through both legs
            out = {}
            for (i, j), c in rp.R.coeffs.items():
                for a, ca in nu.cols[i].items():
                    for b, cb in nu.cols[j].items():
                        out[(a, b)] = out.get((a, b), field.zero()) + c * ca * cb
            moved = TensorElement(H.algebra, 2, {k: v for k, v in out.items() if v})
            if moved == rm.R:
                return False, f"automorphism with ({s},{t}) transports R+ to R-"
        return (automorphisms == 2,
                f"{automorphisms} algebra automorphisms, none transports R+ to R-")

    def criterion_quantum_double(self):
        D = self.double.double
        if not self.double.report.passed:
            return False, "double construction report failed"
        one = self.field.one()
        X, Y = self.double_generators()
        u = D.unit_t(1)
        XY = X * Y
        checks = {
            "X^2=1": X * X == u,
            "Y^2=X": Y * Y == X,
            "XY=YX": X * Y == Y * X,
            "Delta(X)": D.delta(X) == X.outer(X),
            "Delta(Y)": D.delta(Y) == (Y.outer(Y) + XY.outer(Y) + Y.outer(XY)
                                       - XY.outer(XY)).scale(-self.half),
            "eps(X)": D.eps(X) == one,
            "eps(Y)": D.eps(Y) == -one,
            "S=id": D.antipode == LinMap.identity(self.field, 4),
            "alpha=X": D.alpha == X,
            "beta=1": D.beta == u,
        }
        pX = (u - X).scale(self.half)
        checks["Phi=Phi_X"] = D.phi == D.unit_t(3) - outer(pX, pX, pX).scale(2)
        pXp = (u + X).scale(self.half)
        checks["R_D"] = self.double.R.R == pXp.outer(u) - pX.outer(XY)
        checks["R_D certified"] = db.verify_qt(D, self.double.R).passed
        bad = [k for k, v in checks.items() if not v]
        return not bad, "presentation matches" if not bad else f"failed: {bad}"

    def criterion_factorizability(self):
        H = self.h2
        g = TensorElement.basis(H.algebra, (1,))
        u = H.unit_t(1)
        pm = ((u - g).scale(self.half)).as_vector()
        pp = ((u + g).scale(self.half)).as_vector()
        for qt in self.rmatrices:
            Q, ok = db.factorizability_map(H, qt)
            if not ok:
                return False, "pairing map not bijective"
            if Q.cols[0] != pm or Q.cols[1] != pp:
                return False, "pairing map differs from χ ↦ χ(1)p_- + χ(g)p_+"
        return True, "both braidings give the idempotent-swap pairing, bijective"

    def criterion_zeta(self):
        one = self.field.one()
        ii = self.field.i()
        X, Y = self.double_generators()
        for iso, wx, wy in ((self.iso_plus, one + ii, one - ii),
                            (self.iso_minus, one - ii, one + ii)):
            if not iso.certificate.valid:
                return False, "morphism certificate failed"
            T = iso.square
            xv = TensorElement.basis(T.algebra, (1,))
            yv = TensorElement.basis(T.algebra, (2,))
            xy = TensorElement.basis(T.algebra, (3,))
            zX = TensorElement.vector(T.algebra, iso.zeta.apply_vec(X.as_vector()))
            zY = TensorElement.vector(T.algebra, iso.zeta.apply_vec(Y.as_vector()))
            if zX != xy:
                return False, "image of X is not xy"
            if zY != (xv.scale(wx) + yv.scale(wy)).scale(-self.half):
                return False, "image of Y mismatches -1/2(w x + w' y)"
            # reassociator transport lands on the diagonal cocycle
            D = self.double.double
            out = {}
            z = self.field.zero()
            for (a, b, c), co in D.phi.coeffs.items():
                for p, cp in iso.zeta.cols[a].items():
                    for q, cq in iso.zeta.cols[b].items():
                        for r, cr in iso.zeta.cols[c].items():
                            key = (p, q, r)
                            out[key] = out.get(key, z) + co * cp * cq * cr
            zphi = TensorElement(T.algebra, 3, {k: v for k, v in out.items() if v})
            u1 = T.unit_t(1)
            pxy = (u1 - xy).scale(self.half)
            phixy = T.unit_t(3) - outer(pxy, pxy, pxy).scale(2)
            if zphi != phixy:
                return False, "transported reassociator is not the diagonal cocycle"
            if iso.target.phi != phixy:
                return False, "target reassociator is not the diagonal cocycle"
            # and the same cocycle arises by twisting the componentwise one
            F_home = TwistData(rehome(iso.F_big.F, self.h2h2.algebra),
                               rehome(iso.F_big.F_inv, self.h2h2.algebra))
            tw = gauge_twist(self.h2h2, F_home, validate="off")
            if tw.phi != phixy:
                return False, "gauge twist of the componentwise cocycle mismatches"
        return True, "certified isomorphisms with the stated generator images"

    def criterion_c4_composite(self):
        field = self.field
        ii = field.i()
        if ii is None:
            return False, "field lacks a fourth root of unity"
        one = field.one()
        z = field.zero()
        C = self.c4
        K = self.klein_xy  # as an algebra this is just the Klein group algebra
        T = self.iso_plus.square

        # step one: k[C4] -> k^4 diagonalization determined by Y ↦ (1,i,-1,-i)
        diag = [one, ii, -one, -ii]
        # step two: k^4 -> k[C2xC2] via the four orthogonal idempotents
        u1 = T.unit_t(1)
        xv = TensorElement.basis(T.algebra, (1,))
        yv = TensorElement.basis(T.algebra, (2,))
        px_p = (u1 + xv).scale(self.half)
        px_m = (u1 - xv).scale(self.half)
        py_p = (u1 + yv).scale(self.half)
        py_m = (u1 - yv).scale(self.half)
        idem = [px_p * py_p, px_m * py_p, px_p * py_m, px_m * py_m]
        # step three: the algebra automorphism x ↦ xy, y ↦ -x of k[C2xC2]
        xyv = TensorElement.basis(T.algebra, (3,))
        gamma_images = {0: u1, 1: xyv, 2: -xv, 3: -yv}
        gamma_cols = [dict(gamma_images[i].as_vector()) for i in range(4)]
        gamma = LinMap(field, 4, 4, gamma_cols)

        composite_cols = []
        for k in range(4):
            acc = TensorElement.zero(T.algebra, 1)
            for e in range(4):
                acc = acc + (diag[e] ** k) * idem[e]
            composite_cols.append(gamma.apply_vec(acc.as_vector()))
        composite = LinMap(field, 4, 4, composite_cols)

        # zeta composed with Y^k ↦ Y_D^k identifies the cyclic group algebra
        X, Y = self.double_generators()
        D = self.double.double
        power = D.unit_t(1)
        ok = True
        for k in range(4):
            via_zeta = self.iso_plus.zeta.apply_vec(power.as_vector())
            if via_zeta != composite.cols[k]:
                ok = False
                break
            power = power * Y
        # both maps are algebra maps on the cyclic group algebra by construction;
        # verify multiplicativity of the composite explicitly
        if ok:
            for a in range(4):
                for b in range(4):
                    lhs = T.algebra.vec_mul(composite.cols[a], composite.cols[b])
                    rhs = composite.cols[(a + b) % 4]
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
        return ok, "diagonalize, reindex by idempotents, relabel: equals ζ_+"

    def criterion_bosonization(self):
        ok = structures_equal(self.bos_plus, self.bos_minus)
        if not ok:
            return False, "the two bosonizations differ"
        if not structures_equal(self.bos_plus, self.klein_x):
            return False, "bosonization differs from the single-cocycle structure"
        return True, "both braidings give the single-cocycle Klein structure"

    def criterion_involutory(self):
        bad = []
        for name, H in self.involutory_fixtures():
            cert = iv.is_involutory(H)
            if not (cert.holds and cert.report.passed):
                bad.append(f"{name}: certificate")
                continue
            if not iv.antipode_swap_identities(H).passed:
                bad.append(f"{name}: swap identities")
            for w in ("op", "cop", "opcop"):
                V = variants(H, w, validate="off")
                if not iv.is_involutory(V).holds:
                    bad.append(f"{name}: variant {w}")
        return not bad, "; ".join(bad) or "involutory with certified inverses, stable under variants"

    def criterion_pivotal(self):
        H = self.h2
        g = TensorElement.basis(H.algebra, (1,))
        pivs = iv.pivotal_elements(H, canonical=True)
        if len(pivs) != 1 or pivs[0].g != g:
            return False, "canonical pivotal element of the base structure is not g"
        if not all(p.report.passed for p in iv.pivotal_elements(H)):
            return False, "a returned pivotal element fails its own certificate"
        bad = []
        for name, K in self.involutory_fixtures():
            if not is_semisimple(K):
                bad.append(f"{name}: not semisimple")
                continue
            got = iv.pivotal_from_integral(K)
            want = iv.is_involutory(K).v
            if got != want:
                bad.append(f"{name}: integral formula != βS(α)")
        return not bad, "; ".join(bad) or "integral formula equals βS(α) on all involutory structures"

    def criterion_double_involutory(self):
        rep, cert, _ = iv.verify_involutory_double(self.h2)
        if not rep.passed:
            return False, "sufficient condition fails on the base structure"
        # the condition reduces to group-likeness of the distinguished element
        H = self.h2
        g = TensorElement.basis(H.algebra, (1,))
        if H.delta(iv.is_involutory(H).u) != g.outer(g):
            return False, "condition does not reduce to Δ(g) = g⊗g"
        if not (cert.holds and cert.report.passed):
            return False, "double is not certified involutory"
        return True, "condition holds and the double is involutory"

    def criterion_trace_dimension(self):
        field = self.field
        expected = [
            ("h2", self.h2, 2),
            ("klein_x", self.klein_x, 4),
            ("double", self.double.double, 4),
            ("double_klein", self.double_klein.double, 16),
        ]
        for name, H, dim in expected:
            if iv.trace_operator(H) != field.from_int(dim):
                return False, f"trace on {name} differs from {dim}"
        bad = []
        for name, H in self.involutory_fixtures():
            v = iv.is_involutory(H).v
            reg = rc.regular_module(H)
            if iv.categorical_dimension(H, v, reg) != field.from_int(reg.dim):
                bad.append(f"{name}: regular module")
            for M in self._characters_for(name, H):
                if iv.categorical_dimension(H, v, M) != field.one():
                    bad.append(f"{name}: character {M.label}")
        return not bad, "; ".join(bad) or "traces equal dimensions throughout"

    def _characters_for(self, name, H):
        one = self.field.one()
        if name == "double":
            _, Y = self.double_generators()
            return rc.one_dimensional_characters(H, [(Y, 4)])
        if name == "h2":
            return rc.one_dimensional_characters(
                H, [(TensorElement.basis(H.algebra, (1,)), 2)])
        if name in ("klein_x", "klein_xandy", "klein_xy", "bos"):
            return rc.one_dimensional_characters(
                H, [(TensorElement.basis(H.algebra, (1,)), 2),
                    (TensorElement.basis(H.algebra, (2,)), 2)])
        if name == "h2h2":
            return rc.one_dimensional_characters(
                H, [(TensorElement.basis(H.algebra, (1,)), 2),
                    (TensorElement.basis(H.algebra, (2,)), 2)])
        return []

    def criterion_representations(self):
        field = self.field
        H = self.h2
        D = self.double.double
        for name, K in (("h2", H), ("double", D)):
            mu, mu_inv, rep = rc.diagonal_free_isomorphism(K)
            if not rep.passed:
                return False, f"freeness intertwiner fails on {name}"
        for name, K in self.involutory_fixtures():
            mods = [rc.trivial_module(K), rc.regular_module(K)] + \
                self._characters_for(name, K)
            for M, N in itertools.product(mods, repeat=2):
                rc.hom_space(K, M, N)  # raises on dimension mismatch
            drep = rc.divisibility_report(K, mods)
            if not drep.consistent:
                return False, f"divisibility violations on {name}: {drep.violations}"
        # positive characteristic probes
        H5 = h2(prime_field(5))
        mods5 = [rc.trivial_module(H5), rc.regular_module(H5)] + \
            rc.one_dimensional_characters(
                H5, [(TensorElement.basis(H5.algebra, (1,)), 2)])
        drep5 = rc.divisibility_report(H5, mods5)
        if not (drep5.semisimple and drep5.consistent):
            return False, "char-5 base fixture inconsistent"
        C3 = group_hopf([3], prime_field(3))
        drep3 = rc.divisibility_report(
            C3, [rc.trivial_module(C3), rc.regular_module(C3)])
        if drep3.semisimple or not drep3.consistent:
            return False, "char-3 non-semisimple probe inconsistent"
        return True, "freeness, hom dimensions, and divisibility all consistent"

    def criterion_dual(self):
        bad = []
        duals = {}
        for name, H in self.involutory_fixtures() + [("c4", self.c4)]:
            A = ds.dualize(H)
            duals[name] = A
            if not ds.verify_dual(A).passed:
                bad.append(f"{name}: dual axioms")
                continue
            ok, _ = ds.is_involutory_dual(A)
            if ok != iv.is_involutory(H).holds:
                bad.append(f"{name}: involutory mismatch across duality")
            ints = ds.dual_integrals(A)
            if len(ints) != 1:
                bad.append(f"{name}: integral space dimension {len(ints)}")
                continue
            if not A.eval_fn(ints[0], A.unit):
                bad.append(f"{name}: integral vanishes at the unit")
            if not ds.cosemisimple_check(A):
                bad.append(f"{name}: not cosemisimple")
        for name in ("h2", "double"):
            A = duals[name]
            T = ds.dual_integrals(A)[0]
            if not ds.integral_form_identity(A, T).passed:
                bad.append(f"{name}: integral pairing identity")
        return not bad, "; ".join(bad) or "dual axioms, involutivity, integrals, pairing all verified"

    def criterion_roundtrip(self):
        objs = [
            ("h2", self.h2),
            ("klein_x", self.klein_x),
            ("klein_xandy", self.klein_xandy),
            ("klein_xy", self.klein_xy),
            ("c4", self.c4),
            ("h2h2", self.h2h2),
            ("double", self.double.double),
            ("bos", self.bos_plus),
        ]
        bad = []
        for name, H in objs:
            text = serialize.emit_structure(H)
            back = serialize.parse_structure(text)
            if not structures_equal(H, back):
                bad.append(f"{name}: structure round trip")
            if serialize.emit_structure(back) != text:
                bad.append(f"{name}: text round trip")
        A = ds.dualize(self.h2)
        dt = serialize.emit_dual(A)
        backd = serialize.parse_dual(dt)
        if serialize.emit_dual(backd) != dt:
            bad.append("dual: text round trip")
        M = rc.regular_module(self.h2)
        mt = serialize.emit_module(M)
        backm = serialize.parse_module(mt)
        if backm.mats != M.mats or serialize.emit_module(backm) != mt:
            bad.append("module: round trip")
        return not bad, "; ".join(bad) or "all emissions reload bit-exactly"

    # -- aggregation -----------------------------------------------------------

    def run_suite(self) -> VerificationReport:
        rep = VerificationReport()
        table = {
            "axioms": self.criterion_axioms,
            "drinfeld-twist": self.criterion_drinfeld_twist,
            "rmatrix-classification": self.criterion_rmatrices,
            "qt-nonisomorphism": self.criterion_qt_nonisomorphism,
            "quantum-double": self.criterion_quantum_double,
            "factorizability": self.criterion_factorizability,
            "zeta-isomorphism": self.criterion_zeta,
            "c4-composite": self.criterion_c4_composite,
            "bosonization": self.criterion_bosonization,
            "involutory-suite": self.criterion_involutory,
            "pivotal": self.criterion_pivotal,
            "double-involutory": self.criterion_double_involutory,
            "trace-dimension": self.criterion_trace_dimension,
            "representations": self.criterion_representations,
            "dual-side": self.criterion_dual,
            "roundtrip": self.criterion_roundtrip,
        }
        for cid in CHECK_IDS:
            try:
                passed, detail = table[cid]()
            except Exception as exc:  # a crash is a failure with a witness
                passed, detail = False, f"exception: {exc}"
            rep.add(cid, detail, passed, None if passed else detail)
        return rep
