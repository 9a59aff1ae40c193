"""Generator for the shipped default table of certified upper bounds.

Every entry is the minimum of independently certified bounds computed by this
package itself:

* closed packing forms (weight 0, d > 2w, d = 2w, d <= 2) and the exact
  weight-3 distance-4 packing formula,
* Johnson-style recursions in the weight and the complement direction, for
  both the constant-weight and the split-weight quantity (all four coordinate
  reductions for the latter, plus the half-projections),
* the exact-rational Delsarte LP over the Johnson scheme, optionally
  sharpened by split-weight caps on the distribution coefficients, and over
  products of two Johnson schemes for the split-weight quantity.

Run ``python -m codebounds.tablegen --out src/codebounds/data/default_tables.csv``
to regenerate; the output is deterministic.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache

from . import lp as lpmod
from .delsarte import build_johnson_lp, delsarte_cw_bound, delsarte_t_bound
from .schemes import binomial

A_RANGE = {4: (7, 25, 3), 6: (7, 25, 4)}  # d -> (n_min, n_max, w_min)

# (n, w, d) triples whose record evaluations consume split-weight caps: the
# shipped table carries T(i, w, i, n-w, d) for every live coefficient index
T_CAP_FAMILIES = [
    (19, 7, 6),
    (22, 11, 6),
    (26, 11, 6),
    (23, 9, 10),
    (24, 9, 10),
    (25, 9, 10),
    (27, 9, 10),
    (28, 10, 10),
]

# constant-weight entries re-tightened with split-weight caps inside the LP;
# these feed the record reproductions at strict precision
REFINED_CW = {(4, 20), (4, 21), (4, 22), (6, 22), (6, 23), (6, 24)}

_LP_GRID_LIMIT = 50


def _closed(n, d, w):
    w = min(w, n - w)
    if w < 0:
        return None
    if w == 0:
        return 1
    if d > 2 * w:
        return 1
    if d <= 2:
        return binomial(n, w)
    if d == 2 * w:
        return n // w
    return None


def w3_exact(n):
    """Exact A(n, 4, 3): the packing-of-triples formula with the residue
    correction at n = 5 (mod 6)."""
    value = (n * ((n - 1) // 2)) // 3
    if n % 6 == 5:
        value -= 1
    return value


@lru_cache(maxsize=None)
def cw_best(n, d, w):
    """Certified upper bound on A(n, d, w): closed forms, both recursions and
    the plain Delsarte LP."""
    w = min(w, n - w)
    closed = _closed(n, d, w)
    if closed is not None:
        return closed
    values = []
    if d == 4 and w == 3:
        values.append(w3_exact(n))
    values.append((n * cw_best(n - 1, d, w - 1)) // w)
    values.append((n * cw_best(n - 1, d, w)) // (n - w))
    values.append(delsarte_cw_bound(n, d, w)[0])
    return min(values)


@lru_cache(maxsize=None)
def _t_lp(w1, n1, w2, n2, d):
    return delsarte_t_bound(w1, n1, w2, n2, d)[0]


@lru_cache(maxsize=None)
def t_best(w1, n1, w2, n2, d):
    """Certified upper bound on T(w1, n1, w2, n2, d): closed forms, the four
    coordinate recursions, half projections, and the product-scheme LP."""
    w1, w2 = min(w1, n1 - w1), min(w2, n2 - w2)
    (w1, n1), (w2, n2) = sorted(((w1, n1), (w2, n2)))
    if d > 2 * (w1 + w2):
        return 1
    if d <= 2:
        return binomial(n1, w1) * binomial(n2, w2)
    if w1 == 0:
        return cw_best(n2, d, w2)
    values = []
    if d - 2 * w2 >= 2:
        values.append(cw_best(n1, d - 2 * w2, w1))
    if d - 2 * w1 >= 2:
        values.append(cw_best(n2, d - 2 * w1, w2))
    values.append((n1 * t_best(w1 - 1, n1 - 1, w2, n2, d)) // w1)
    values.append((n2 * t_best(w1, n1, w2 - 1, n2 - 1, d)) // w2)
    if n1 > w1:
        values.append((n1 * t_best(w1, n1 - 1, w2, n2, d)) // (n1 - w1))
    if n2 > w2:
        values.append((n2 * t_best(w1, n1, w2, n2 - 1, d)) // (n2 - w2))
    if (w1 + 1) * (w2 + 1) <= _LP_GRID_LIMIT:
        values.append(_t_lp(w1, n1, w2, n2, d))
    return min(values)


def cw_capped_lp(n, d, w):
    """Delsarte LP on A(n, d, w) with per-coefficient split-weight caps."""
    w = min(w, n - w)
    ds = (d + (d & 1)) // 2
    if w == 0 or ds > w:
        return 1
    program = build_johnson_lp(n, w, 0)
    for i in range(1, ds):
        program.add_constraint(_unit(w + 1, i), lpmod.EQ, Fraction(0))
    for i in range(ds, w + 1):
        program.upper[i] = Fraction(t_best(i, w, i, n - w, d))
    program.objective = [Fraction(1)] * (w + 1)
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("capped constant-weight LP came back %s" % sol.status)
    return sol.value.numerator // sol.value.denominator


def _unit(nv, i):
    row = [Fraction(0)] * nv
    row[i] = Fraction(1)
    return row


def generate(out=sys.stdout, verbose=False):
    table = {}
    rows = []
    for d, (n_min, n_max, w_min) in sorted(A_RANGE.items()):
        for n in range(n_min, n_max + 1):
            for w in range(w_min, n // 2 + 1):
                value = _final_cw(n, d, w)
                table[(n, d, w)] = value
                rows.append("A,%d,%d,%d,%d,%s" % (n, d, w, value, "certified-min"))
                if verbose:
                    print("A(%d,%d,%d) = %d" % (n, d, w, value), file=sys.stderr)
    t_keys = []
    seen = set()
    for n, w, d in T_CAP_FAMILIES:
        e_s = (d - 2) // 4  # scheme packing radius for distance d = 4e+2 (2 for d = 10)
        for i in range(e_s + 1, w + 1):
            key = (i, w, i, n - w, d)
            if key not in seen:
                seen.add(key)
                t_keys.append(key)
    for key in t_keys:
        value = t_best(*key)
        rows.append("T,%d,%d,%d,%d,%d,%d,%s" % (*key, value, "certified-min"))
        if verbose:
            print("T%s = %d" % (key, value), file=sys.stderr)
    out.write("# Certified upper bounds on constant-weight and split-weight code sizes.\n")
    out.write("# Generated by `python -m codebounds.tablegen`; every value is the minimum\n")
    out.write("# of independently certified bounds computed by this package: closed packing\n")
    out.write("# forms, the exact weight-3 distance-4 formula, Johnson-type recursions in\n")
    out.write("# all coordinate directions, and exact-rational Delsarte LPs over Johnson\n")
    out.write("# schemes and their products (with split-weight coefficient caps where they\n")
    out.write("# sharpen the optimum).  Formats: A,n,d,w,value,source and\n")
    out.write("# T,w1,n1,w2,n2,d,value,source.\n")
    for row in rows:
        out.write(row + "\n")


@lru_cache(maxsize=None)
def _final_cw(n, d, w):
    value = cw_best(n, d, w)
    if (d, n) in REFINED_CW:
        capped = cw_capped_lp(n, d, w)
        value = min(value, capped)
    return value


def main(argv=None):
    import argparse

    parser = argparse.ArgumentParser(description="regenerate the default bound tables")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            generate(fh, verbose=args.verbose)
    else:
        generate(sys.stdout, verbose=args.verbose)
    return 0


if __name__ == "__main__":
    sys.exit(main())
