#!/usr/bin/env python3
"""Run the aggregated acceptance suite with per-criterion timing.

    python scripts/run_paper_suite.py [--field gaussian]
"""

import argparse
import sys
import time

from quasihopf.acceptance import CHECK_IDS, PaperSuite
from quasihopf.exactfield import gaussian, prime_field, rationals


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--field", default="gaussian")
    args = ap.parse_args()
    if args.field == "gaussian":
        field = gaussian()
    elif args.field == "rationals":
        field = rationals()
    else:
        field = prime_field(int(args.field.split(":")[1]))

    suite = PaperSuite(field)
    table = {
        "axioms": suite.criterion_axioms,
        "drinfeld-twist": suite.criterion_drinfeld_twist,
        "rmatrix-classification": suite.criterion_rmatrices,
        "qt-nonisomorphism": suite.criterion_qt_nonisomorphism,
        "quantum-double": suite.criterion_quantum_double,
        "factorizability": suite.criterion_factorizability,
        "zeta-isomorphism": suite.criterion_zeta,
        "c4-composite": suite.criterion_c4_composite,
        "bosonization": suite.criterion_bosonization,
        "involutory-suite": suite.criterion_involutory,
        "pivotal": suite.criterion_pivotal,
        "double-involutory": suite.criterion_double_involutory,
        "trace-dimension": suite.criterion_trace_dimension,
        "representations": suite.criterion_representations,
        "dual-side": suite.criterion_dual,
        "roundtrip": suite.criterion_roundtrip,
    }
    t_all = time.time()
    ok = True
    for cid in CHECK_IDS:
        t0 = time.time()
        try:
            passed, detail = table[cid]()
        except Exception as exc:
            passed, detail = False, f"exception: {exc}"
        ok &= passed
        print(f"CHECK {cid:26s} {'PASS' if passed else 'FAIL':4s} "
              f"[{time.time() - t0:6.2f}s]  {detail}")
    print(f"\ntotal {time.time() - t_all:.1f}s; "
          f"{'all criteria pass' if ok else 'FAILURES PRESENT'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
