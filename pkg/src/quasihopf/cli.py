"""Command-line front end: load structures from files or the fixture catalog,
run verification suites, construct derived objects, and emit reports.

Exit codes: 0 all checks pass, 1 check failures, 2 usage errors, 3 parse
errors (with line numbers).  The machine format is one line per check,
`CHECK <id> <PASS|FAIL> [witness]`, sorted by check id.
"""

from __future__ import annotations

import argparse
import sys

from . import doublebos as db
from . import dualside as ds
from . import involutory as iv
from . import repcat as rc
from . import serialize
from .acceptance import PaperSuite
from .exactfield import Field, FieldError, gaussian, prime_field, rationals
from .fixtures import FIXTURES, build_fixture
from .quasihopf import (
    QuasiHopfAlgebra,
    TwistData,
    VerificationReport,
    drinfeld_twist,
    gauge_twist,
    is_semisimple,
    verify_quasihopf,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _parse_field(text: str) -> Field:
    if text == "rationals":
        return rationals()
    if text == "gaussian":
        return gaussian()
    if text.startswith("fp:"):
        return prime_field(int(text[3:]))
    raise FieldError(f"unknown field {text!r} (use rationals|gaussian|fp:<p>)")


def _load_structure(args) -> QuasiHopfAlgebra:
    if args.fixture and args.input:
        raise UsageError("give exactly one input source (fixture or file)")
    if args.fixture:
        return build_fixture(args.fixture, _parse_field(args.field))
    if args.input:
        with open(args.input) as fh:
            return serialize.parse_structure(fh.read())
    raise UsageError("an input source is required (--fixture NAME or a file)")


class UsageError(ValueError):
    pass


def _print_report(rep: VerificationReport, fmt: str, verbose: bool):
    entries = sorted(rep.entries, key=lambda e: e.check_id)
    if fmt == "machine":
        for e in entries:
            print(e.line())
    else:
        for e in entries:
            status = "ok" if e.passed else "FAILED"
            line = f"  {e.check_id:32s} {status}"
            if verbose or not e.passed:
                if e.witness:
                    line += f"  [{e.witness}]"
                elif verbose:
                    line += f"  ({e.statement})"
            print(line)
    return EXIT_OK if rep.passed else EXIT_CHECK_FAILED


def _maybe_emit(args, H: QuasiHopfAlgebra):
    if getattr(args, "emit", None):
        with open(args.emit, "w") as fh:
            fh.write(serialize.emit_structure(H))
        print(f"wrote {args.emit}")


def cmd_verify(args):
    H = _load_structure(args)
    rep = verify_quasihopf(H)
    _maybe_emit(args, H)
    return _print_report(rep, args.format, args.verbose)


def cmd_analyze(args):
    H = _load_structure(args)
    rep = VerificationReport()
    cert = iv.is_involutory(H)
    rep.merge(cert.report)
    semi = is_semisimple(H)
    rep.add("semisimple", "some left integral has nonzero counit", semi)
    info = []
    info.append(("involutory", "yes" if cert.holds else "no"))
    info.append(("u = S(beta)alpha", cert.u.pretty()))
    info.append(("v = beta S(alpha)", cert.v.pretty()))
    if cert.holds:
        info.append(("alpha inverse", cert.alpha_inv.pretty()))
        info.append(("beta inverse", cert.beta_inv.pretty()))
        rep.merge(iv.antipode_swap_identities(H))
        try:
            rep.merge(iv.double_involutory_condition(H))
        except iv.NotInvolutory:
            pass
    info.append(("trace", str(iv.trace_operator(H))))
    info.append(("semisimple", "yes" if semi else "no"))
    try:
        pivots = iv.pivotal_elements(H)
        info.append(("pivotal elements", "; ".join(p.g.pretty() for p in pivots) or "none"))
        canon = iv.pivotal_elements(H, canonical=True)
        info.append(("canonical pivotal", "; ".join(p.g.pretty() for p in canon) or "none"))
        for p in pivots:
            rep.merge(p.report)
    except iv.SolutionSpaceTooLarge as exc:
        info.append(("pivotal elements", f"not computed: {exc}"))
    if args.format == "machine":
        for k, v in info:
            print(f"INFO {k.replace(' ', '-')} {v}")
    else:
        for k, v in info:
            print(f"  {k}: {v}")
    return _print_report(rep, args.format, args.verbose)


def cmd_double(args):
    H = _load_structure(args)
    result = db.quantum_double(H, validate=args.validate)
    _maybe_emit(args, result.double)
    return _print_report(result.report, args.format, args.verbose)


def _braiding_for(args, H):
    structures = db.enumerate_rmatrices_h2(H)
    if not structures:
        raise UsageError(
            "no braiding available: the field needs a primitive fourth root of unity"
        )
    return structures[0] if args.r == "plus" else structures[1]


def cmd_bosonize(args):
    H = _load_structure(args)
    R = _braiding_for(args, H)
    B = db.bosonization(H, R)
    _maybe_emit(args, B)
    rep = verify_quasihopf(B)
    return _print_report(rep, args.format, args.verbose)


def cmd_zeta(args):
    H = _load_structure(args)
    R = _braiding_for(args, H)
    iso = db.double_iso(H, R)
    if getattr(args, "emit", None):
        with open(args.emit, "w") as fh:
            fh.write(serialize.emit_structure(iso.target))
        print(f"wrote {args.emit}")
    return _print_report(iso.certificate.checks, args.format, args.verbose)


def cmd_twist(args):
    H = _load_structure(args)
    if args.by == "drinfeld":
        F = drinfeld_twist(H)
    else:
        raise UsageError("only the canonical twist source 'drinfeld' is supported")
    if args.inverse:
        F = TwistData(F.F_inv, F.F)
    out = gauge_twist(H, F)
    _maybe_emit(args, out)
    return _print_report(verify_quasihopf(out), args.format, args.verbose)


def cmd_dual(args):
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
        if serialize.is_dual_file(text):
            A = serialize.parse_dual(text)
        else:
            A = ds.dualize(serialize.parse_structure(text))
    elif args.fixture:
        A = ds.dualize(build_fixture(args.fixture, _parse_field(args.field)))
    else:
        raise UsageError("an input source is required")
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(serialize.emit_dual(A))
        print(f"wrote {args.emit}")
    if args.dual_action == "verify":
        return _print_report(ds.verify_dual(A), args.format, args.verbose)
    if args.dual_action == "integrals":
        ints = ds.dual_integrals(A)
        print(f"integral space dimension: {len(ints)}")
        for T in ints:
            vals = " ".join(
                f"{A.names[i]}:{A.field.format(c)}" for i, c in sorted(T.items()))
            print(f"  T = {vals}   T(1) = {A.eval_fn(T, A.unit)}")
        return EXIT_OK
    # cosemisimple
    try:
        flag = ds.cosemisimple_check(A)
    except ds.NoIntegral:
        print("no nonzero integrals")
        return EXIT_CHECK_FAILED
    print(f"cosemisimple: {'yes' if flag else 'no'}")
    return EXIT_OK if flag else EXIT_CHECK_FAILED


def cmd_rep(args):
    H = _load_structure(args)
    with open(args.module) as fh:
        M = serialize.parse_module(fh.read())
    if args.rep_action == "verify":
        return _print_report(rc.verify_module(H, M), args.format, args.verbose)
    if args.rep_action == "hom":
        if not args.module2:
            raise UsageError("hom needs --module2")
        with open(args.module2) as fh:
            N = serialize.parse_module(fh.read())
        basis, inv_dim = rc.hom_space(H, M, N)
        print(f"hom dimension: {len(basis)} (invariants: {inv_dim})")
        return EXIT_OK
    # dims
    drep = rc.divisibility_report(H, [M])
    fact = drep.facts[0]
    print(f"dimension {fact.dim}; endomorphism dimension {fact.end_dim}; "
          f"absolutely simple: {fact.absolutely_simple}; "
          f"char divides dim: {fact.char_divides_dim}")
    print(f"ambient: semisimple={drep.semisimple} involutory={drep.involutory} "
          f"char={drep.characteristic}")
    if drep.violations:
        for v in drep.violations:
            print(f"  VIOLATION: {v}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_fixture(args):
    H = build_fixture(args.name, _parse_field(args.field))
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(serialize.emit_structure(H))
        print(f"wrote {args.emit}")
    else:
        sys.stdout.write(serialize.emit_structure(H))
    return EXIT_OK


def cmd_suite(args):
    if args.name != "paper":
        raise UsageError("the only bundled suite is 'paper'")
    suite = PaperSuite(_parse_field(args.field))
    rep = suite.run_suite()
    return _print_report(rep, args.format, args.verbose)


def _add_io_args(p, with_emit=True):
    p.add_argument("input", nargs="?", help="structure-constant file")
    p.add_argument("--fixture", choices=sorted(FIXTURES), help="bundled instance")
    p.add_argument("--field", default="gaussian",
                   help="rationals | gaussian | fp:<p> (fixtures only)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--verbose", action="store_true")
    if with_emit:
        p.add_argument("--emit", help="write the (constructed) structure to a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quasihopf",
        description="exact verification and construction kernel for "
                    "finite-dimensional quasi-Hopf algebras",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full axiom suite on a structure")
    _add_io_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="involutory/pivotal/trace analysis")
    _add_io_args(p, with_emit=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("double", help="construct and verify the quantum double")
    _add_io_args(p)
    p.add_argument("--validate", choices=("full", "basic", "off"), default="full")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("bosonize", help="bosonization along a braiding")
    _add_io_args(p)
    p.add_argument("--r", choices=("plus", "minus"), default="plus")
    p.set_defaults(func=cmd_bosonize)

    p = sub.add_parser("zeta", help="certify the double against the twisted tensor square")
    _add_io_args(p)
    p.add_argument("--r", choices=("plus", "minus"), default="plus")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("twist", help="apply a gauge transformation")
    _add_io_args(p)
    p.add_argument("--by", default="drinfeld", help="twist source")
    p.add_argument("--inverse", action="store_true", help="use the inverse twist")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("dual", help="dual-side verification and integrals")
    p.add_argument("dual_action", choices=("verify", "integrals", "cosemisimple"))
    _add_io_args(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("rep", help="module-level checks")
    p.add_argument("rep_action", choices=("verify", "hom", "dims"))
    _add_io_args(p, with_emit=False)
    p.add_argument("--module", required=True, help="module file")
    p.add_argument("--module2", help="second module file (hom)")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("fixture", help="emit a bundled instance")
    p.add_argument("name", choices=sorted(FIXTURES))
    p.add_argument("--field", default="gaussian")
    p.add_argument("--emit", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("suite", help="run an aggregated check suite")
    p.add_argument("name", help="suite name (paper)")
    p.add_argument("--field", default="gaussian")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_suite)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except serialize.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
