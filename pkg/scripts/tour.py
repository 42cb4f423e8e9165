#!/usr/bin/env python3
"""A guided tour: build the two-dimensional instance, derive everything the
package can derive from it, and print the headline values.

Run from the repository root after an editable install:

    python scripts/tour.py [--field gaussian|fp:<p>]
"""

import argparse
import sys

from quasihopf import (
    TensorElement,
    drinfeld_twist,
    gaussian,
    normalized_integral,
    pq_elements,
    prime_field,
    tensor_product,
)
from quasihopf.doublebos import (
    bosonization,
    double_iso,
    enumerate_rmatrices_h2,
    quantum_double,
)
from quasihopf.dualside import dual_integrals, dualize
from quasihopf.fixtures import h2, klein
from quasihopf.involutory import (
    is_involutory,
    pivotal_elements,
    pivotal_from_integral,
    trace_operator,
)
from quasihopf.repcat import one_dimensional_characters


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--field", default="gaussian")
    args = ap.parse_args()
    field = gaussian() if args.field == "gaussian" else prime_field(int(args.field[3:]))

    H = h2(field)
    print(f"base structure: dim {H.dim}, basis {H.names}, field {field.header()}")
    print(f"  reassociator: {H.phi.pretty()}")
    print(f"  canonical twist f = {drinfeld_twist(H).F.pretty()}")
    print(f"  q_R = {pq_elements(H).q_r.pretty()}")
    print(f"  normalized integral: {normalized_integral(H).pretty()}")
    print(f"  trace functional: {trace_operator(H)}")
    print(f"  pivotal elements: {[p.g.pretty() for p in pivotal_elements(H)]}"
          f" (canonical: {[p.g.pretty() for p in pivotal_elements(H, canonical=True)]})")
    print(f"  pivot from the integral: {pivotal_from_integral(H).pretty()}")

    braidings = enumerate_rmatrices_h2(H)
    print(f"\nbraidings: {len(braidings)}")
    for qt in braidings:
        print(f"  R = {qt.R.pretty()}")
    if not braidings:
        print("  (the field has no primitive fourth root of unity; stopping)")
        return 0

    dr = quantum_double(H)
    D = dr.double
    one = field.one()
    X = TensorElement(D.algebra, 1, {(1,): one, (3,): one})
    Y = TensorElement(D.algebra, 1, {(0,): one, (2,): -one})
    print(f"\nquantum double: dim {D.dim}; X^2 = 1: {X * X == D.unit_t(1)}, "
          f"Y^2 = X: {Y * Y == X}")
    print(f"  eps(Y) = {D.eps(Y)}; involutory: {is_involutory(D).holds}; "
          f"trace = {trace_operator(D)}")
    chars = one_dimensional_characters(D, [(Y, 4)])
    print(f"  one-dimensional characters: {[m.label for m in chars]}")

    iso = double_iso(H, braidings[0], double=dr)
    zy = TensorElement.vector(iso.square.algebra, iso.zeta.apply_vec(Y.as_vector()))
    print(f"\ntwisted tensor square: certificate valid: {iso.certificate.valid}")
    print(f"  zeta(Y) = {zy.pretty()}")

    B = bosonization(H, braidings[0])
    K = klein(field, "x")
    from quasihopf.quasihopf import structures_equal

    print(f"\nbosonization equals the single-cocycle Klein structure: "
          f"{structures_equal(B, K)}")

    A = dualize(D)
    ints = dual_integrals(A)
    print(f"\ndual of the double: integrals {len(ints)}, "
          f"T(1) = {A.eval_fn(ints[0], A.unit)}")
    T2 = tensor_product(H, H)
    print(f"tensor square trace: {trace_operator(T2)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
