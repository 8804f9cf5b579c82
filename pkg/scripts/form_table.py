#!/usr/bin/env python3
"""Print the Gram table of the sesquilinear form on KL basis elements.

The diagonal entries start at 1 and everything else lives in qZ[q], which
is the asymptotic-orthonormality picture; equal-length pairs with both
boundary letters swapped start at 2q^2 instead.

Usage: python scripts/form_table.py [--max-len 4] [--rho 0]
"""

import argparse

from affine_hecke import KLLabel, alt_word, form, kl_to_std


def labels(max_len, m):
    out = [KLLabel(m, ())]
    for l in range(1, max_len + 1):
        out.append(KLLabel(m, alt_word(l, first=0)))
        out.append(KLLabel(m, alt_word(l, first=1)))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-len", type=int, default=4)
    parser.add_argument("--rho", type=int, default=0, help="common rho-power of both arguments")
    args = parser.parse_args()

    lbls = labels(args.max_len, args.rho)
    elts = {l: kl_to_std(l) for l in lbls}
    width = max(len(str(l)) for l in lbls)
    for u in lbls:
        for v in lbls:
            value = form(elts[u], elts[v])
            print(f"({str(u):>{width}}, {str(v):<{width}}) = {value}")
        print()


if __name__ == "__main__":
    main()
