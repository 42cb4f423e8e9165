"""Structure-constant file formats: primal structures, dual structures, and
modules.  Emission is deterministic (sorted indices, canonical scalar text) so
emit/parse round trips are bit-exact."""

from __future__ import annotations

from .exactfield import Field, ScalarParseError
from .quasihopf import QuasiHopfAlgebra
from .dualside import DualQuasiHopf
from .repcat import HModule
from .tensorcore import (
    AlgebraData,
    CoalgebraData,
    LinMap,
    NotInvertible,
    TensorElement,
    invert_in_tensor_power,
    solve_linear,
)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


PRIMAL_SECTIONS = ("mult", "comult", "counit", "phi", "antipode", "alpha", "beta")
DUAL_SECTIONS = ("comult", "counit", "mult", "unit", "phi", "phiinv",
                 "antipode", "alpha", "beta")


def _fmt(field: Field, s) -> str:
    return field.format(s)


def emit_structure(H: QuasiHopfAlgebra) -> str:
    field = H.field
    lines = [f"field {field.header()}", f"dim {H.dim}",
             "basis " + " ".join(H.names)]
    lines.append("mult")
    for i in range(H.dim):
        for j in range(H.dim):
            for k, c in sorted(H.algebra.mul_basis(i, j).items()):
                lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("comult")
    for i in range(H.dim):
        for (j, k), c in sorted(H.coalgebra.comult[i].items()):
            lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("counit")
    for i, c in enumerate(H.coalgebra.counit):
        if c:
            lines.append(f"{i} {_fmt(field, c)}")
    lines.append("phi")
    for (i, j, k), c in H.phi.entries():
        lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("antipode")
    for col in range(H.dim):
        for row, c in sorted(H.antipode.cols[col].items()):
            lines.append(f"{row} {col} {_fmt(field, c)}")
    lines.append("alpha")
    for (i,), c in H.alpha.entries():
        lines.append(f"{i} {_fmt(field, c)}")
    lines.append("beta")
    for (i,), c in H.beta.entries():
        lines.append(f"{i} {_fmt(field, c)}")
    return "\n".join(lines) + "\n"


def _read_header(lines, pos, want_dual=False):
    """Returns (field, dim, names, next_pos)."""
    def nonempty(p):
        while p < len(lines) and not lines[p][1].strip():
            p += 1
        return p

    pos = nonempty(pos)
    if pos >= len(lines):
        raise ParseError(0, "empty file")
    no, text = lines[pos]
    toks = text.split()
    if want_dual:
        if toks != ["dual"]:
            raise ParseError(no, "expected 'dual' header")
        pos = nonempty(pos + 1)
        no, text = lines[pos]
        toks = text.split()
    if not toks or toks[0] != "field":
        raise ParseError(no, "expected 'field <kind>'")
    try:
        field = Field.from_header(" ".join(toks[1:]))
    except Exception as exc:
        raise ParseError(no, str(exc))
    pos = nonempty(pos + 1)
    no, text = lines[pos]
    toks = text.split()
    if len(toks) != 2 or toks[0] != "dim" or not toks[1].isdigit():
        raise ParseError(no, "expected 'dim <n>'")
    dim = int(toks[1])
    pos = nonempty(pos + 1)
    no, text = lines[pos]
    toks = text.split()
    if not toks or toks[0] != "basis":
        raise ParseError(no, "expected 'basis <names...>'")
    names = toks[1:]
    if len(names) != dim:
        raise ParseError(no, f"expected {dim} basis names, got {len(names)}")
    return field, dim, names, pos + 1


def _read_sections(lines, pos, section_names):
    sections = {name: [] for name in section_names}
    current = None
    for p in range(pos, len(lines)):
        no, text = lines[p]
        t = text.strip()
        if not t or t.startswith("#"):
            continue
        if t in sections:
            if sections[t] and current != t:
                raise ParseError(no, f"duplicate section {t!r}")
            current = t
            continue
        if current is None:
            raise ParseError(no, f"data before any section: {t!r}")
        sections[current].append((no, t))
    return sections


def _entries(field, rows, n_indices, dim, what):
    out = []
    for no, text in rows:
        toks = text.split()
        if len(toks) != n_indices + 1:
            raise ParseError(no, f"{what}: expected {n_indices} indices and a value")
        try:
            idx = tuple(int(t) for t in toks[:n_indices])
        except ValueError:
            raise ParseError(no, f"{what}: bad index in {text!r}")
        for t in idx:
            if t < 0 or t >= dim:
                raise ParseError(no, f"{what}: index {t} out of range")
        try:
            val = field.parse(toks[n_indices])
        except ScalarParseError as exc:
            raise ParseError(no, f"{what}: {exc}")
        out.append((idx, val))
    return out


def _derive_unit(field, dim, mult):
    """Solve for the two-sided unit of a structure-constant algebra."""
    z = field.zero()
    rows = []
    rhs = []
    for j in range(dim):
        for k in range(dim):
            rows.append([mult[i][j].get(k, z) for i in range(dim)])
            rhs.append(field.one() if j == k else z)
            rows.append([mult[j][i].get(k, z) for i in range(dim)])
            rhs.append(field.one() if j == k else z)
    sol, _ = solve_linear(rows, rhs)
    if sol is None:
        raise ParseError(0, "multiplication table has no two-sided unit")
    return {i: c for i, c in enumerate(sol) if c}


def parse_structure(text: str) -> QuasiHopfAlgebra:
    lines = [(i + 1, raw) for i, raw in enumerate(text.splitlines())]
    field, dim, names, pos = _read_header(lines, 0)
    sections = _read_sections(lines, pos, PRIMAL_SECTIONS)

    z = field.zero()
    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), v in _entries(field, sections["mult"], 3, dim, "mult"):
        mult[i][j][k] = mult[i][j].get(k, z) + v
    unit = _derive_unit(field, dim, mult)
    algebra = AlgebraData(field, dim, mult, unit, names)

    comult = [dict() for _ in range(dim)]
    for (i, j, k), v in _entries(field, sections["comult"], 3, dim, "comult"):
        comult[i][(j, k)] = comult[i].get((j, k), z) + v
    counit = [z] * dim
    for (i,), v in _entries(field, sections["counit"], 1, dim, "counit"):
        counit[i] = counit[i] + v
    coalgebra = CoalgebraData(field, dim, comult, counit)

    phi_coeffs = {}
    for (i, j, k), v in _entries(field, sections["phi"], 3, dim, "phi"):
        phi_coeffs[(i, j, k)] = phi_coeffs.get((i, j, k), z) + v
    phi = TensorElement(algebra, 3, phi_coeffs)
    try:
        phi_inv = invert_in_tensor_power(phi)
    except NotInvertible:
        phi_inv = None

    cols = [dict() for _ in range(dim)]
    for (r, c), v in _entries(field, sections["antipode"], 2, dim, "antipode"):
        cols[c][r] = cols[c].get(r, z) + v
    antipode = LinMap(field, dim, dim, cols)

    alpha = {}
    for (i,), v in _entries(field, sections["alpha"], 1, dim, "alpha"):
        alpha[i] = alpha.get(i, z) + v
    beta = {}
    for (i,), v in _entries(field, sections["beta"], 1, dim, "beta"):
        beta[i] = beta.get(i, z) + v

    return QuasiHopfAlgebra(
        algebra, coalgebra, phi, phi_inv, antipode,
        TensorElement.vector(algebra, alpha), TensorElement.vector(algebra, beta),
        normalize=False,
    )


def emit_dual(A: DualQuasiHopf) -> str:
    field = A.field
    lines = ["dual", f"field {field.header()}", f"dim {A.dim}",
             "basis " + " ".join(A.names)]
    lines.append("comult")
    for i in range(A.dim):
        for (j, k), c in sorted(A.coalgebra.comult[i].items()):
            lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("counit")
    for i, c in enumerate(A.coalgebra.counit):
        if c:
            lines.append(f"{i} {_fmt(field, c)}")
    lines.append("mult")
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.mult[i][j].items()):
                lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("unit")
    for i, c in sorted(A.unit.items()):
        lines.append(f"{i} {_fmt(field, c)}")
    lines.append("phi")
    for (i, j, k), c in sorted(A.phi.items()):
        lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("phiinv")
    for (i, j, k), c in sorted(A.phi_inv.items()):
        lines.append(f"{i} {j} {k} {_fmt(field, c)}")
    lines.append("antipode")
    for col in range(A.dim):
        for row, c in sorted(A.antipode.cols[col].items()):
            lines.append(f"{row} {col} {_fmt(field, c)}")
    lines.append("alpha")
    for i, c in sorted(A.alpha.items()):
        lines.append(f"{i} {_fmt(field, c)}")
    lines.append("beta")
    for i, c in sorted(A.beta.items()):
        lines.append(f"{i} {_fmt(field, c)}")
    return "\n".join(lines) + "\n"


def parse_dual(text: str) -> DualQuasiHopf:
    lines = [(i + 1, raw) for i, raw in enumerate(text.splitlines())]
    field, dim, names, pos = _read_header(lines, 0, want_dual=True)
    sections = _read_sections(lines, pos, DUAL_SECTIONS)
    z = field.zero()

    comult = [dict() for _ in range(dim)]
    for (i, j, k), v in _entries(field, sections["comult"], 3, dim, "comult"):
        comult[i][(j, k)] = comult[i].get((j, k), z) + v
    counit = [z] * dim
    for (i,), v in _entries(field, sections["counit"], 1, dim, "counit"):
        counit[i] = counit[i] + v
    coalgebra = CoalgebraData(field, dim, comult, counit)

    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), v in _entries(field, sections["mult"], 3, dim, "mult"):
        mult[i][j][k] = mult[i][j].get(k, z) + v
    unit = {}
    for (i,), v in _entries(field, sections["unit"], 1, dim, "unit"):
        unit[i] = unit.get(i, z) + v

    phi = {}
    for (i, j, k), v in _entries(field, sections["phi"], 3, dim, "phi"):
        phi[(i, j, k)] = phi.get((i, j, k), z) + v
    phi_inv = {}
    for (i, j, k), v in _entries(field, sections["phiinv"], 3, dim, "phiinv"):
        phi_inv[(i, j, k)] = phi_inv.get((i, j, k), z) + v

    cols = [dict() for _ in range(dim)]
    for (r, c), v in _entries(field, sections["antipode"], 2, dim, "antipode"):
        cols[c][r] = cols[c].get(r, z) + v
    antipode = LinMap(field, dim, dim, cols)

    alpha = {}
    for (i,), v in _entries(field, sections["alpha"], 1, dim, "alpha"):
        alpha[i] = alpha.get(i, z) + v
    beta = {}
    for (i,), v in _entries(field, sections["beta"], 1, dim, "beta"):
        beta[i] = beta.get(i, z) + v

    return DualQuasiHopf(field, coalgebra, mult, unit,
                         {k: v for k, v in phi.items() if v},
                         {k: v for k, v in phi_inv.items() if v},
                         antipode,
                         {k: v for k, v in alpha.items() if v},
                         {k: v for k, v in beta.items() if v},
                         names)


def emit_module(M: HModule) -> str:
    field = M.field
    lines = [f"module dim {M.dim}", f"field {field.header()}"]
    for b, mat in enumerate(M.mats):
        lines.append(f"mat {b}")
        for row in mat:
            lines.append(" ".join(_fmt(field, c) for c in row))
    return "\n".join(lines) + "\n"


def parse_module(text: str) -> HModule:
    lines = [(i + 1, raw) for i, raw in enumerate(text.splitlines())]
    idx = 0
    while idx < len(lines) and not lines[idx][1].strip():
        idx += 1
    if idx >= len(lines):
        raise ParseError(0, "empty module file")
    no, head = lines[idx]
    toks = head.split()
    if len(toks) != 3 or toks[0] != "module" or toks[1] != "dim" or not toks[2].isdigit():
        raise ParseError(no, "expected 'module dim <m>'")
    m = int(toks[2])
    idx += 1
    no, fline = lines[idx]
    toks = fline.split()
    if not toks or toks[0] != "field":
        raise ParseError(no, "expected 'field <kind>'")
    field = Field.from_header(" ".join(toks[1:]))
    idx += 1
    mats = []
    while idx < len(lines):
        no, t = lines[idx]
        t = t.strip()
        if not t:
            idx += 1
            continue
        toks = t.split()
        if toks[0] != "mat" or len(toks) != 2 or int(toks[1]) != len(mats):
            raise ParseError(no, f"expected 'mat {len(mats)}'")
        idx += 1
        mat = []
        for _ in range(m):
            if idx >= len(lines):
                raise ParseError(no, "truncated matrix block")
            rno, row = lines[idx]
            vals = row.split()
            if len(vals) != m:
                raise ParseError(rno, f"expected {m} entries")
            try:
                mat.append([field.parse(v) for v in vals])
            except ScalarParseError as exc:
                raise ParseError(rno, str(exc))
            idx += 1
        mats.append(mat)
    return HModule(m, mats, field, label="file")


def is_dual_file(text: str) -> bool:
    for raw in text.splitlines():
        t = raw.strip()
        if t:
            return t == "dual"
    return False
