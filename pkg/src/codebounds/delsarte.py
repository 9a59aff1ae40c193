"""Builders for Delsarte-type linear programs over distance distributions.

build_lp_odd / build_lp_even emit the constraint systems for a binary code of
odd minimum distance and for its even-weight extension; build_johnson_lp does
the same for constant-weight codes in the Johnson scheme.  Objectives are left
at zero for the caller to set.  The module also carries the length-reduction
inequality ``transfer_bound`` and two self-contained LP bounds on A(n, d, w)
and on doubly-constant-weight codes that are used to generate table entries.
"""

from __future__ import annotations

from fractions import Fraction

from .lp import EQ, GE, LinearProgram, solve
from .schemes import binomial, eigen_tables, johnson, krawtchouk


def build_lp_odd(n, e, caps, extra_constraints=()):
    """Delsarte system for an (n, M, 2e+1) code.

    Variables A_0..A_n; Krawtchouk constraints for every degree; A_0 = 1 and
    A_i = 0 below the minimum distance; 0 <= A_i <= caps.cw_upper(n, 2e+2, i)
    above it.  ``extra_constraints`` are appended verbatim (same format as
    LinearProgram rows) for callers that know sharper restrictions.
    """
    if e < 1 or 2 * e + 1 > n:
        raise ValueError("need 1 <= e and 2e+1 <= n")
    nv = n + 1
    program = LinearProgram(nv)
    for k in range(n + 1):
        program.add_constraint([Fraction(krawtchouk(n, k, i)) for i in range(nv)], GE, Fraction(0))
    program.add_constraint(_unit(nv, 0), EQ, Fraction(1))
    for i in range(1, 2 * e + 1):
        program.add_constraint(_unit(nv, i), EQ, Fraction(0))
    for i in range(2 * e + 1, n + 1):
        value, _src = caps.cw_upper(n, 2 * e + 2, i)
        program.upper[i] = Fraction(value)
    for row in extra_constraints:
        program.add_constraint(*row)
    return program


def build_lp_even(n_tilde, e, caps, extra_constraints=()):
    """Delsarte system for an even-weight (n_tilde, M, 2e+2) code.

    Odd-indexed variables are fixed to zero, so only Krawtchouk degrees up to
    floor(n_tilde/2) are needed; even coefficients at and above the minimum
    distance get constant-weight caps.
    """
    if e < 1 or 2 * e + 2 > n_tilde:
        raise ValueError("need 1 <= e and 2e+2 <= n_tilde")
    nv = n_tilde + 1
    half = n_tilde // 2
    program = LinearProgram(nv)
    for k in range(half + 1):
        program.add_constraint([Fraction(krawtchouk(n_tilde, k, i)) for i in range(nv)], GE, Fraction(0))
    program.add_constraint(_unit(nv, 0), EQ, Fraction(1))
    for i in range(1, 2 * e + 2):
        program.add_constraint(_unit(nv, i), EQ, Fraction(0))
    for i in range(2 * e + 3, n_tilde + 1, 2):
        program.add_constraint(_unit(nv, i), EQ, Fraction(0))
    for i in range(2 * e + 2, 2 * half + 1, 2):
        value, _src = caps.cw_upper(n_tilde, 2 * e + 2, i)
        program.upper[i] = Fraction(value)
    for row in extra_constraints:
        program.add_constraint(*row)
    return program


def build_johnson_lp(n, w, e, extra_constraints=()):
    """Delsarte system for a weight-w code with scheme distance >= 2e+1.

    Variables A_0..A_w over the Johnson scheme; constraints use the dual
    eigenvalues, with A_0 = 1 and A_i = 0 for 1 <= i <= 2e.
    """
    scheme = johnson(n, w)
    tables = eigen_tables(scheme)
    nv = w + 1
    program = LinearProgram(nv)
    for k in range(w + 1):
        program.add_constraint([Fraction(tables.q[k][i]) for i in range(nv)], GE, Fraction(0))
    program.add_constraint(_unit(nv, 0), EQ, Fraction(1))
    for i in range(1, min(2 * e, w) + 1):
        program.add_constraint(_unit(nv, i), EQ, Fraction(0))
    for row in extra_constraints:
        program.add_constraint(*row)
    return program


def transfer_bound(n, p, shorter_cap):
    """Cap on sum_i (n-i) p_i A_i over length-n codes, given a cap on
    sum_i p_i A'_i over all length-(n-1) codes of the same distance.

    The transfer multiplies the shorter-code cap by n; the weight vector p is
    taken for interface symmetry with the quantities being transferred.
    """
    if len(p) != n + 1:
        raise ValueError("weight vector must have length n+1")
    return n * Fraction(shorter_cap)


def _unit(nv, i):
    row = [Fraction(0)] * nv
    row[i] = Fraction(1)
    return row


# --- standalone LP bounds used for table generation --------------------------

def delsarte_cw_bound(n, d, w):
    """Certified LP upper bound on A(n, d, w): maximize sum(A_i) over the
    Johnson-scheme Delsarte constraints.  Returns (bound, solution)."""
    w = min(w, n - w)
    if w < 0:
        raise ValueError("need 0 <= w <= n")
    d = d + (d & 1)
    ds = d // 2
    if w == 0 or ds > w:
        return 1, None
    program = build_johnson_lp(n, w, 0)
    # reuse the builder's A_0 = 1 pin, then zero everything below distance ds
    for i in range(1, ds):
        program.add_constraint(_unit(w + 1, i), EQ, Fraction(0))
    program.objective = [Fraction(1)] * (w + 1)
    sol = solve(program)
    if sol.status != "optimal":
        raise RuntimeError("constant-weight Delsarte LP came back %s" % sol.status)
    return _floor(sol.value), sol


def delsarte_t_bound(w1, n1, w2, n2, d):
    """Certified LP upper bound on doubly-constant-weight codes: Delsarte in
    the product of two Johnson schemes.  Returns (bound, solution)."""
    w1, w2 = min(w1, n1 - w1), min(w2, n2 - w2)
    if min(w1, w2) < 0:
        raise ValueError("need 0 <= w_i <= n_i")
    d = d + (d & 1)
    if d > 2 * (w1 + w2):
        return 1, None
    t1 = eigen_tables(johnson(n1, w1)) if w1 else None
    t2 = eigen_tables(johnson(n2, w2)) if w2 else None
    nv = (w1 + 1) * (w2 + 1)

    def var(i, j):
        return i * (w2 + 1) + j

    program = LinearProgram(nv)
    for k in range(w1 + 1):
        for l in range(w2 + 1):
            row = [Fraction(0)] * nv
            for i in range(w1 + 1):
                qi = t1.q[k][i] if t1 else 1
                for j in range(w2 + 1):
                    qj = t2.q[l][j] if t2 else 1
                    row[var(i, j)] = Fraction(qi) * qj
            program.add_constraint(row, GE, Fraction(0))
    program.add_constraint(_unit(nv, var(0, 0)), EQ, Fraction(1))
    for i in range(w1 + 1):
        for j in range(w2 + 1):
            if 0 < 2 * (i + j) < d:
                program.add_constraint(_unit(nv, var(i, j)), EQ, Fraction(0))
    program.objective = [Fraction(1)] * nv
    sol = solve(program)
    if sol.status != "optimal":
        raise RuntimeError("split-weight Delsarte LP came back %s" % sol.status)
    return _floor(sol.value), sol


def _floor(x):
    return x.numerator // x.denominator
