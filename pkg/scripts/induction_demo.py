#!/usr/bin/env python3
"""Build the induced module of two trivial rank-1 modules and inspect it.

Prints the generator matrices, the commuting y-matrices, the relation
report, and the rational irreducibility probes.

Usage: python scripts/induction_demo.py [--probes 2 3 5/7]
"""

import argparse
from fractions import Fraction

from affine_hecke import (
    common_eigenvector_exists,
    induce,
    module_check_relations,
    module_y,
    specialize,
    trivial_module,
)


def show(name, mat):
    rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in mat]
    print(f"  [{name}] = " + "; ".join(rows))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--probes", nargs="*", default=["2", "3", "5/7"])
    args = parser.parse_args()

    v = trivial_module(1)
    w = induce(v, v)
    print(f"induced module: rank {w.n}, dimension {w.dim}")
    show("rho", w.rho_mat)
    show("T1", w.t_mats[0])
    show("T0", w.t(0))
    show("b1", w.b(1))
    show("b0", w.b(0))
    show("y1", module_y(w, 1))
    show("y2", module_y(w, 2))

    print("relations:")
    for name, ok in module_check_relations(w):
        print(f"  {'ok ' if ok else 'FAIL'} {name}")

    for probe in args.probes:
        q0 = Fraction(probe)
        has = common_eigenvector_exists(specialize(w, q0))
        verdict = "common eigenvector (reducible)" if has else "no common eigenvector"
        print(f"specialized at q = {q0}: {verdict}")


if __name__ == "__main__":
    main()
