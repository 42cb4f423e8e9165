"""Elements of H^{⊗k} over a structure-constant algebra, plus exact linear algebra.

Tensor elements carry dense semantics (a coefficient for every multi-index)
but store only nonzero entries; all fixtures are small (dim <= 16, arity <= 7)
and very sparse in their natural bases.  Multi-indices are tuples with leg 1
first; flattening is row-major with leg 1 most significant.
"""

from __future__ import annotations

import itertools
import re as _re

from .exactfield import Field, Scalar


class ArityMismatch(ValueError):
    """Tensor operands with incompatible arities or algebras."""


class NotInvertible(ValueError):
    """Element has no two-sided inverse; `.witness` names the failing side."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AlgebraData:
    """An associative unital algebra given by structure constants.

    mult[i][j] is the sparse vector of e_i * e_j; unit is a sparse vector.
    """

    __slots__ = ("field", "dim", "mult", "unit", "names")

    def __init__(self, field: Field, dim: int, mult, unit, names=None):
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = {i: c for i, c in unit.items() if c}
        self.names = list(names) if names else [f"e{i}" for i in range(dim)]

    def mul_basis(self, i: int, j: int) -> dict:
        return self.mult[i][j]

    def vec_mul(self, u: dict, v: dict) -> dict:
        """Product of two sparse vectors."""
        out: dict = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                ab = a * b
                for k, c in row[j].items():
                    s = out.get(k)
                    s = ab * c if s is None else s + ab * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def vec_chain(self, vecs) -> dict:
        """Left-to-right product of a sequence of sparse vectors."""
        out = None
        for v in vecs:
            out = dict(v) if out is None else self.vec_mul(out, v)
        if out is None:
            return dict(self.unit)
        return out

    def check_associativity(self):
        """First failing basis triple (i, j, k), or None."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult[i][j]
                for k in range(self.dim):
                    lhs = self.vec_mul(ij, {k: self.field.one()})
                    rhs = self.vec_mul({i: self.field.one()}, self.mult[j][k])
                    if lhs != rhs:
                        return (i, j, k)
        return None

    def check_unit(self):
        """First basis index where the stored unit fails, or None."""
        for i in range(self.dim):
            e = {i: self.field.one()}
            if self.vec_mul(self.unit, e) != e or self.vec_mul(e, self.unit) != e:
                return i
        return None

    def equal_structure(self, other: "AlgebraData") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.unit == other.unit
            and all(
                self.mult[i][j] == other.mult[i][j]
                for i in range(self.dim)
                for j in range(self.dim)
            )
        )


class CoalgebraData:
    """A coalgebra given by structure constants.

    comult[i] maps (j, k) to the coefficient of e_j ⊗ e_k in the coproduct of
    e_i; counit is a list of scalars.  Coassociativity is an invariant only
    where genuinely required (dual-side structures); quasi-bialgebras check
    the conjugated version against their reassociator instead.
    """

    __slots__ = ("field", "dim", "comult", "counit")

    def __init__(self, field: Field, dim: int, comult, counit):
        self.field = field
        self.dim = dim
        self.comult = [{jk: c for jk, c in row.items() if c} for row in comult]
        self.counit = list(counit)

    def check_counit(self):
        """First basis index violating (eps ⊗ id)Δ = id = (id ⊗ eps)Δ, or None."""
        for i in range(self.dim):
            left: dict = {}
            right: dict = {}
            for (j, k), c in self.comult[i].items():
                s = left.get(k, None)
                v = c * self.counit[j]
                left[k] = v if s is None else s + v
                s = right.get(j, None)
                v = c * self.counit[k]
                right[j] = v if s is None else s + v
            want = {i: self.field.one()}
            if {k: v for k, v in left.items() if v} != want:
                return i
            if {k: v for k, v in right.items() if v} != want:
                return i
        return None

    def check_coassociativity(self):
        """First basis index where (Δ ⊗ id)Δ != (id ⊗ Δ)Δ, or None."""
        for i in range(self.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (j, k), c in self.comult[i].items():
                for (a, b), d in self.comult[j].items():
                    key = (a, b, k)
                    lhs[key] = lhs.get(key, self.field.zero()) + c * d
                for (a, b), d in self.comult[k].items():
                    key = (j, a, b)
                    rhs[key] = rhs.get(key, self.field.zero()) + c * d
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return i
        return None

    def equal_structure(self, other: "CoalgebraData") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.counit == other.counit
            and all(self.comult[i] == other.comult[i] for i in range(self.dim))
        )


class TensorElement:
    """An element of H^{⊗k}; arity 0 holds a single scalar at the empty index."""

    __slots__ = ("algebra", "arity", "coeffs")

    def __init__(self, algebra: AlgebraData, arity: int, coeffs: dict):
        self.algebra = algebra
        self.arity = arity
        self.coeffs = {idx: c for idx, c in coeffs.items() if c}

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(algebra: AlgebraData, arity: int) -> "TensorElement":
        return TensorElement(algebra, arity, {})

    @staticmethod
    def unit(algebra: AlgebraData, arity: int) -> "TensorElement":
        out = TensorElement(algebra, 0, {(): algebra.field.one()})
        for _ in range(arity):
            out = out.outer(TensorElement.vector(algebra, algebra.unit))
        return out

    @staticmethod
    def basis(algebra: AlgebraData, idx) -> "TensorElement":
        idx = tuple(idx) if not isinstance(idx, int) else (idx,)
        return TensorElement(algebra, len(idx), {idx: algebra.field.one()})

    @staticmethod
    def vector(algebra: AlgebraData, coeffs: dict) -> "TensorElement":
        return TensorElement(algebra, 1, {(i,): c for i, c in coeffs.items()})

    @staticmethod
    def scalar(algebra: AlgebraData, value: Scalar) -> "TensorElement":
        return TensorElement(algebra, 0, {(): value})

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def entries(self):
        return sorted(self.coeffs.items())

    def as_vector(self) -> dict:
        if self.arity != 1:
            raise ArityMismatch("not an arity-1 element")
        return {i: c for (i,), c in self.coeffs.items()}

    def as_scalar(self) -> Scalar:
        if self.arity != 0:
            raise ArityMismatch("not an arity-0 element")
        return self.coeffs.get((), self.algebra.field.zero())

    def __eq__(self, other):
        # equality as tensors: same shape over the same field, same coefficients
        # (the ambient algebras need not be the same object)
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and self.algebra.dim == other.algebra.dim
            and self.algebra.field == other.algebra.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.algebra), self.arity, tuple(sorted(self.coeffs.items()))))

    # -- linear structure --------------------------------------------------------

    def _compat(self, other: "TensorElement"):
        if self.algebra is not other.algebra:
            raise ArityMismatch("operands live over different algebras")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx)
            s = c if s is None else s + c
            if s:
                out[idx] = s
            elif idx in out:
                del out[idx]
        return TensorElement(self.algebra, self.arity, out)

    def __neg__(self):
        return TensorElement(self.algebra, self.arity, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "TensorElement":
        if isinstance(s, int):
            s = self.algebra.field.from_int(s)
        return TensorElement(self.algebra, self.arity, {i: s * c for i, c in self.coeffs.items()})

    def __rmul__(self, s):
        if isinstance(s, (int, Scalar)):
            return self.scale(s)
        return NotImplemented

    def outer(self, other: "TensorElement") -> "TensorElement":
        """Tensor-product placement a ⊗ b (arities add)."""
        if self.algebra is not other.algebra:
            raise ArityMismatch("operands live over different algebras")
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = a * b
        return TensorElement(self.algebra, self.arity + other.arity, out)

    # -- the algebra structure on H^{⊗k} ------------------------------------------

    def __mul__(self, other):
        """Componentwise product in the tensor-power algebra.

        Evaluated as a staged contraction: first merge the coefficient outer
        product on concatenated multi-indices, then contract one leg at a
        time, merging after each stage.  This keeps intermediates bounded by
        the flat dimension instead of exploding per entry pair.
        """
        self._compat(other)
        mult = self.algebra.mult
        k = self.arity
        cur: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                key = i + j
                ab = a * b
                s = cur.get(key)
                s = ab if s is None else s + ab
                if s:
                    cur[key] = s
                elif key in cur:
                    del cur[key]
        # key layout at stage t: (out_0..out_{t-1}, i_t..i_{k-1}, j_t..j_{k-1});
        # the pending j-leg always sits at position k
        for t in range(k):
            nxt: dict = {}
            for key, c in cur.items():
                row = mult[key[t]][key[k]]
                head = key[:t]
                tail = key[t + 1:k] + key[k + 1:]
                for m, d in row.items():
                    nk = head + (m,) + tail
                    v = c * d
                    s = nxt.get(nk)
                    s = v if s is None else s + v
                    if s:
                        nxt[nk] = s
                    elif nk in nxt:
                        del nxt[nk]
            cur = nxt
        return TensorElement(self.algebra, k, cur)

    def pretty(self) -> str:
        names = self.algebra.names
        if self.is_zero():
            return "0"
        terms = []
        for idx, c in self.entries():
            mono = "(x)".join(names[t] for t in idx) if idx else "1"
            terms.append(f"{c}*{mono}" if idx else str(c))
        return " + ".join(terms)

    def __repr__(self):
        return f"TensorElement[{self.arity}]({self.pretty()})"


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    return a * b


def rehome(a: TensorElement, algebra: AlgebraData) -> TensorElement:
    """The same coefficient array read over another algebra of equal dimension."""
    if algebra.dim != a.algebra.dim or algebra.field != a.algebra.field:
        raise ArityMismatch("cannot rehome across different dimensions or fields")
    return TensorElement(algebra, a.arity, dict(a.coeffs))


def outer(*elems: TensorElement) -> TensorElement:
    out = elems[0]
    for e in elems[1:]:
        out = out.outer(e)
    return out


def permute_legs(a: TensorElement, perm) -> TensorElement:
    """Leg permutation: result leg t carries the source leg perm[t] (0-based)."""
    perm = tuple(perm)
    if sorted(perm) != list(range(a.arity)):
        raise ArityMismatch(f"bad permutation {perm} for arity {a.arity}")
    out = {}
    for idx, c in a.coeffs.items():
        out[tuple(idx[p] for p in perm)] = c
    return TensorElement(a.algebra, a.arity, out)


def flip(a: TensorElement) -> TensorElement:
    """a^{21} on arity-2 elements."""
    return permute_legs(a, (1, 0))


def apply_legs(a: TensorElement, ops, coalgebra: CoalgebraData | None = None) -> TensorElement:
    """Apply one action per leg: None (identity), "comult", "counit", or a LinMap.

    "comult" extends the leg to two (needs `coalgebra`); "counit" removes it;
    a LinMap replaces the leg by its image.  Leg permutations are handled
    separately by `permute_legs`.
    """
    if len(ops) != a.arity:
        raise ArityMismatch(f"{len(ops)} actions for arity {a.arity}")
    field = a.algebra.field
    out: dict = {}
    for idx, c in a.coeffs.items():
        partial = [((), c)]
        for t, op in enumerate(ops):
            leg = idx[t]
            if op is None:
                partial = [(pref + (leg,), cc) for pref, cc in partial]
            elif op == "counit":
                w = coalgebra.counit[leg]
                partial = [(pref, cc * w) for pref, cc in partial if cc * w]
            elif op == "comult":
                row = coalgebra.comult[leg]
                nxt = []
                for pref, cc in partial:
                    for (r, s), d in row.items():
                        nxt.append((pref + (r, s), cc * d))
                partial = nxt
            else:  # LinMap acting on a single leg
                col = op.cols[leg]
                nxt = []
                for pref, cc in partial:
                    for r, d in col.items():
                        nxt.append((pref + (r,), cc * d))
                partial = nxt
            if not partial:
                break
        for nidx, cc in partial:
            s = out.get(nidx)
            s = cc if s is None else s + cc
            if s:
                out[nidx] = s
            elif nidx in out:
                del out[nidx]
    new_arity = a.arity
    for op in ops:
        if op == "comult":
            new_arity += 1
        elif op == "counit":
            new_arity -= 1
    return TensorElement(a.algebra, new_arity, out)


def place(a: TensorElement, arity: int, legs) -> TensorElement:
    """Embed `a` into H^{⊗arity} at the given target legs (0-based), unit elsewhere."""
    legs = tuple(legs)
    if len(legs) != a.arity or len(set(legs)) != len(legs):
        raise ArityMismatch("placement legs must match arity and be distinct")
    alg = a.algebra
    unit_items = list(alg.unit.items())
    free = [t for t in range(arity) if t not in legs]
    out: dict = {}
    for idx, c in a.coeffs.items():
        base = [None] * arity
        for s, t in enumerate(legs):
            base[t] = idx[s]
        for combo in itertools.product(unit_items, repeat=len(free)):
            full = list(base)
            cc = c
            for (t, (u, d)) in zip(free, combo):
                full[t] = u
                cc = cc * d
            key = tuple(full)
            s = out.get(key)
            s = cc if s is None else s + cc
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return TensorElement(a.algebra, arity, out)


_ATOM = _re.compile(r"([A-Za-z]+)(\d+)$")


def leg_product(algebra: AlgebraData, arity: int, spec: str, **sources) -> TensorElement:
    """Evaluate a multi-leg product written in component notation.

    `spec` lists the target legs separated by '|'; inside a leg, atoms are
    dot-separated `name<leg>` references into the keyword sources, multiplied
    left to right.  Every source leg must be consumed exactly once; sources
    are summed over independently, so passing the same element under two
    names gives two independent copies.  An empty leg is the unit.

    Example: the coproduct-versus-braiding comparison tensor
        leg_product(A, 3, "X2.R1.x1.Y1 | X3.x3.r1.Y2 | X1.R2.x2.r2.Y3",
                    X=phi, R=R, x=phi_inv, r=R, Y=phi)
    """
    legs_spec = [s.strip() for s in spec.split("|")]
    if len(legs_spec) != arity:
        raise ArityMismatch(f"spec has {len(legs_spec)} legs, expected {arity}")
    parsed: list[list[tuple[str, int]]] = []
    used: dict[str, set[int]] = {name: set() for name in sources}
    for leg in legs_spec:
        atoms = []
        if leg:
            for tok in leg.split("."):
                m = _ATOM.fullmatch(tok.strip())
                if not m or m.group(1) not in sources:
                    raise ValueError(f"bad atom {tok!r} in leg spec")
                name, comp = m.group(1), int(m.group(2)) - 1
                src = sources[name]
                if comp < 0 or comp >= src.arity:
                    raise ValueError(f"atom {tok!r} out of range for {name}")
                if comp in used[name]:
                    raise ValueError(f"component {tok!r} used twice")
                used[name].add(comp)
                atoms.append((name, comp))
        parsed.append(atoms)
    for name, src in sources.items():
        if used[name] != set(range(src.arity)):
            raise ValueError(f"source {name!r} not fully consumed by spec")

    names = sorted(sources)
    entry_lists = [sorted(sources[n].coeffs.items()) for n in names]
    pos = {n: i for i, n in enumerate(names)}
    out = TensorElement.zero(algebra, arity)
    field = algebra.field
    acc: dict = {}
    for combo in itertools.product(*entry_lists):
        coeff = field.one()
        for (_, c) in combo:
            coeff = coeff * c
        if not coeff:
            continue
        legs_vecs = []
        for atoms in parsed:
            vec = None
            for (name, comp) in atoms:
                basis_idx = combo[pos[name]][0][comp]
                b = {basis_idx: field.one()}
                vec = b if vec is None else algebra.vec_mul(vec, b)
            legs_vecs.append(vec if vec is not None else dict(algebra.unit))
        partial = [((), coeff)]
        for vec in legs_vecs:
            nxt = []
            for pref, cc in partial:
                for m, d in vec.items():
                    nxt.append((pref + (m,), cc * d))
            partial = nxt
            if not partial:
                break
        for idx, cc in partial:
            s = acc.get(idx)
            s = cc if s is None else s + cc
            if s:
                acc[idx] = s
            elif idx in acc:
                del acc[idx]
    return TensorElement(algebra, arity, acc)


# -- flattening ---------------------------------------------------------------


def flatten_index(idx, n: int) -> int:
    out = 0
    for t in idx:
        out = out * n + t
    return out


def unflatten_index(flat: int, n: int, arity: int):
    idx = []
    for _ in range(arity):
        idx.append(flat % n)
        flat //= n
    return tuple(reversed(idx))


def tensor_to_flat(a: TensorElement) -> dict:
    n = a.algebra.dim
    return {flatten_index(i, n): c for i, c in a.coeffs.items()}


def tensor_from_flat(algebra: AlgebraData, arity: int, flat: dict) -> TensorElement:
    n = algebra.dim
    return TensorElement(
        algebra, arity, {unflatten_index(f, n, arity): c for f, c in flat.items()}
    )


class LinMap:
    """An exact linear map between flat spaces; cols[j] is the image of e_j."""

    __slots__ = ("field", "src_dim", "dst_dim", "cols", "src_arity", "dst_arity")

    def __init__(self, field: Field, src_dim: int, dst_dim: int, cols, src_arity=1, dst_arity=1):
        self.field = field
        self.src_dim = src_dim
        self.dst_dim = dst_dim
        self.cols = [{i: c for i, c in col.items() if c} for col in cols]
        self.src_arity = src_arity
        self.dst_arity = dst_arity

    @staticmethod
    def identity(field: Field, dim: int) -> "LinMap":
        return LinMap(field, dim, dim, [{j: field.one()} for j in range(dim)])

    @staticmethod
    def from_rows(field: Field, rows) -> "LinMap":
        dst = len(rows)
        src = len(rows[0]) if rows else 0
        cols = [dict() for _ in range(src)]
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    cols[c][r] = v
        return LinMap(field, src, dst, cols)

    def to_rows(self):
        z = self.field.zero()
        rows = [[z] * self.src_dim for _ in range(self.dst_dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def apply_vec(self, vec: dict) -> dict:
        out: dict = {}
        for j, c in vec.items():
            for i, v in self.cols[j].items():
                s = out.get(i)
                s = c * v if s is None else s + c * v
                if s:
                    out[i] = s
                elif i in out:
                    del out[i]
        return out

    def apply_tensor(self, a: TensorElement) -> TensorElement:
        """Apply to an arity-1 element over an algebra of matching dimension."""
        return TensorElement.vector(a.algebra, self.apply_vec(a.as_vector()))

    def compose(self, inner: "LinMap") -> "LinMap":
        """self ∘ inner."""
        cols = [self.apply_vec(col) for col in inner.cols]
        return LinMap(self.field, inner.src_dim, self.dst_dim, cols,
                      inner.src_arity, self.dst_arity)

    def transpose(self) -> "LinMap":
        cols = [dict() for _ in range(self.dst_dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return LinMap(self.field, self.dst_dim, self.src_dim, cols,
                      self.dst_arity, self.src_arity)

    def rank(self) -> int:
        rows = self.to_rows()
        _, kernel = solve_linear(rows, [self.field.zero()] * self.dst_dim)
        return self.src_dim - len(kernel)

    def is_bijective(self) -> bool:
        return self.src_dim == self.dst_dim and self.rank() == self.src_dim

    def inverse(self) -> "LinMap":
        if self.src_dim != self.dst_dim:
            raise NotInvertible("non-square map")
        inv_rows = _invert_rows(self.field, self.to_rows())
        if inv_rows is None:
            raise NotInvertible("singular linear map")
        return LinMap.from_rows(self.field, inv_rows)

    def __eq__(self, other):
        return (
            isinstance(other, LinMap)
            and self.src_dim == other.src_dim
            and self.dst_dim == other.dst_dim
            and self.cols == other.cols
        )


def _invert_rows(field: Field, rows):
    """Matrix inverse by Gauss-Jordan; None when singular."""
    n = len(rows)
    z, one = field.zero(), field.one()
    aug = [list(rows[i]) + [one if j == i else z for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col].inv()
        aug[col] = [x * pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_linear(rows, rhs):
    """Exact Gaussian elimination for A x = b.

    Returns (particular, kernel_basis); `particular` is None when the system
    has no solution (distinct from a unique solution with empty kernel).
    """
    if not rows:
        return [], []
    field = None
    for row in rows:
        for v in row:
            field = v.field
            break
        if field is not None:
            break
    if field is None:
        field = rhs[0].field if rhs else None
    m = len(rows)
    n = len(rows[0])
    z = field.zero()
    a = [list(r) for r in rows]
    b = list(rhs)
    piv_cols = []
    r = 0
    for c in range(n):
        piv = None
        for rr in range(r, m):
            if a[rr][c]:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        b[r], b[piv] = b[piv], b[r]
        pv = a[r][c].inv()
        a[r] = [x * pv for x in a[r]]
        b[r] = b[r] * pv
        for rr in range(m):
            if rr != r and a[rr][c]:
                f = a[rr][c]
                a[rr] = [x - f * y for x, y in zip(a[rr], a[r])]
                b[rr] = b[rr] - f * b[r]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for rr in range(r, m):
        if b[rr]:
            kernel = _kernel_from_echelon(field, a, piv_cols, n)
            return None, kernel
    sol = [z] * n
    for i, c in enumerate(piv_cols):
        sol[c] = b[i]
    kernel = _kernel_from_echelon(field, a, piv_cols, n)
    return sol, kernel


def _kernel_from_echelon(field, a, piv_cols, n):
    z, one = field.zero(), field.one()
    free = [c for c in range(n) if c not in piv_cols]
    basis = []
    for fc in free:
        vec = [z] * n
        vec[fc] = one
        for i, pc in enumerate(piv_cols):
            vec[pc] = -a[i][fc]
        basis.append(vec)
    return basis


def nullspace(rows, field: Field):
    z = field.zero()
    _, kernel = solve_linear(rows, [z] * len(rows))
    return kernel


def solve_map(A: LinMap, b: dict):
    """Solve A x = b for a LinMap and a sparse vector; same contract as
    `solve_linear` with dict-shaped inputs and outputs."""
    z = A.field.zero()
    rhs = [b.get(i, z) for i in range(A.dst_dim)]
    sol, kernel = solve_linear(A.to_rows(), rhs)
    part = None if sol is None else {i: c for i, c in enumerate(sol) if c}
    basis = [{i: c for i, c in enumerate(vec) if c} for vec in kernel]
    return part, basis


def left_mult_map(a: TensorElement) -> LinMap:
    """Matrix of x ↦ a·x on the flattened tensor power."""
    alg = a.algebra
    n = alg.dim
    N = n ** a.arity
    cols = []
    for flat in range(N):
        basis = TensorElement.basis(alg, unflatten_index(flat, n, a.arity))
        cols.append(tensor_to_flat(a * basis))
    return LinMap(alg.field, N, N, cols, a.arity, a.arity)


def invert_in_tensor_power(a: TensorElement) -> TensorElement:
    """Two-sided inverse in H^{⊗k}, via one linear solve plus both-sided checks."""
    alg = a.algebra
    unit = TensorElement.unit(alg, a.arity)
    L = left_mult_map(a)
    rhs_flat = tensor_to_flat(unit)
    z = alg.field.zero()
    rhs = [rhs_flat.get(i, z) for i in range(L.dst_dim)]
    sol, _ = solve_linear(L.to_rows(), rhs)
    if sol is None:
        raise NotInvertible("no right inverse", witness="right")
    b = tensor_from_flat(alg, a.arity, {i: c for i, c in enumerate(sol) if c})
    if a * b != unit:
        raise NotInvertible("right inverse verification failed", witness="right")
    if b * a != unit:
        raise NotInvertible("left inverse check failed", witness="left")
    return b
