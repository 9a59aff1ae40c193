"""Exact rational linear programming with self-verifying dual certificates.

Programs are stated as ``maximize c.x`` subject to rows ``(a, rel, b)`` with
rel in {"<=", ">=", "="} plus optional per-variable lower/upper bounds.  All
arithmetic is exact (gmpy2.mpq when available, fractions.Fraction otherwise);
results are always returned as Fractions.

Every Optimal solution carries dual multipliers that prove optimality:
``check_certificate`` re-verifies primal feasibility, dual sign feasibility,
stationarity and the strong-duality value equality constraint by constraint,
and ``solve`` runs that check before returning.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _mpq = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LE, GE, EQ = "<=", ">=", "="
_RELS = (LE, GE, EQ)

# entering-rule switch: Dantzig until this many consecutive degenerate pivots,
# then Bland (which guarantees termination)
_DEGENERACY_LIMIT = 24


class CertificateError(AssertionError):
    """An LP solution failed its own optimality certificate."""


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass
class LinearProgram:
    """maximize objective . x subject to constraints and variable bounds.

    ``lower`` defaults to 0 for every variable; use None for a free variable.
    ``upper`` defaults to None (unbounded above).
    """

    num_vars: int
    objective: list = None
    constraints: list = field(default_factory=list)
    lower: list = None
    upper: list = None

    def __post_init__(self):
        if self.objective is None:
            self.objective = [Fraction(0)] * self.num_vars
        if self.lower is None:
            self.lower = [Fraction(0)] * self.num_vars
        if self.upper is None:
            self.upper = [None] * self.num_vars

    def add_constraint(self, coeffs, rel, rhs):
        self.constraints.append((list(coeffs), rel, rhs))

    def validate(self):
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        for name, vec in (("objective", self.objective), ("lower", self.lower), ("upper", self.upper)):
            if len(vec) != self.num_vars:
                raise ValueError("%s has length %d, expected %d" % (name, len(vec), self.num_vars))
        for idx, (coeffs, rel, _rhs) in enumerate(self.constraints):
            if len(coeffs) != self.num_vars:
                raise ValueError("constraint %d has %d coefficients, expected %d" % (idx, len(coeffs), self.num_vars))
            if rel not in _RELS:
                raise ValueError("constraint %d has unknown relation %r" % (idx, rel))
        for j in range(self.num_vars):
            lo, up = self.lower[j], self.upper[j]
            if lo is not None and up is not None and lo > up:
                raise ValueError("variable %d has lower bound above upper bound" % j)


@dataclass
class LPSolution:
    """Result of ``solve``: exact optimum plus a dual certificate when Optimal.

    ``dual`` has one multiplier per constraint of the original program;
    ``lower_duals``/``upper_duals`` hold the active-bound multipliers.
    """

    status: str
    value: Fraction = None
    primal: list = None
    dual: list = None
    lower_duals: list = None
    upper_duals: list = None


def solve(program):
    """Exact simplex over the rationals; deterministic for identical input."""
    program.validate()
    reduced = _Presolved(program)
    if reduced.infeasible:
        return LPSolution(INFEASIBLE)
    status, x_red, duals_red = _simplex(reduced)
    if status != OPTIMAL:
        return LPSolution(status)
    solution = reduced.lift(x_red, duals_red)
    check_certificate(program, solution)
    return solution


class _Presolved:
    """Substitutes fixed variables out of a program before the simplex runs.

    A variable is fixed either by lower == upper or by a single-variable
    equality row; the paper-style Delsarte programs pin many coefficients this
    way and removing them keeps phase 1 trivial.
    """

    def __init__(self, program):
        self.program = program
        nv = program.num_vars
        self.infeasible = False
        self.fixed = {}
        rows = [(list(c), rel, rhs) for (c, rel, rhs) in program.constraints]
        self.bound_fixed = set()
        for j in range(nv):
            lo, up = program.lower[j], program.upper[j]
            if lo is not None and up is not None and lo == up:
                self.fixed[j] = lo
                self.bound_fixed.add(j)
        # sweep single-variable equality rows until nothing changes
        changed = True
        self.row_state = [None] * len(rows)  # None=live, ("fixes", var) , ("redundant",)
        self.elim_order = []
        while changed:
            changed = False
            for ridx, (coeffs, rel, rhs) in enumerate(rows):
                if self.row_state[ridx] is not None or rel != EQ:
                    continue
                live = [j for j, a in enumerate(coeffs) if a != 0 and j not in self.fixed]
                if len(live) > 1:
                    continue
                shifted = rhs - sum(coeffs[j] * self.fixed[j] for j in self.fixed if coeffs[j] != 0)
                if not live:
                    if shifted != 0:
                        self.infeasible = True
                        return
                    self.row_state[ridx] = ("redundant",)
                    changed = True
                    continue
                j = live[0]
                value = Fraction(shifted, 1) / coeffs[j]
                lo, up = program.lower[j], program.upper[j]
                if (lo is not None and value < lo) or (up is not None and value > up):
                    self.infeasible = True
                    return
                self.fixed[j] = value
                self.row_state[ridx] = ("fixes", j)
                self.elim_order.append(ridx)
                changed = True
        self.keep = [j for j in range(nv) if j not in self.fixed]
        self.col_of = {j: t for t, j in enumerate(self.keep)}
        self.obj_constant = sum(program.objective[j] * v for j, v in self.fixed.items())
        self.objective = [program.objective[j] for j in self.keep]
        self.live_rows = []
        for ridx, (coeffs, rel, rhs) in enumerate(rows):
            if self.row_state[ridx] is not None:
                continue
            shifted = rhs - sum(coeffs[j] * self.fixed[j] for j in self.fixed if coeffs[j] != 0)
            vec = [coeffs[j] for j in self.keep]
            if all(a == 0 for a in vec):
                sat = (shifted == 0) if rel == EQ else (shifted >= 0 if rel == LE else shifted <= 0)
                if not sat:
                    self.infeasible = True
                    return
                self.row_state[ridx] = ("redundant",)
                continue
            self.live_rows.append((ridx, vec, rel, shifted))
        self.lower = [program.lower[j] for j in self.keep]
        self.upper = [program.upper[j] for j in self.keep]

    def lift(self, x_red, duals_red):
        """Rebuild the full primal vector and per-constraint duals."""
        program = self.program
        row_duals, lo_duals, up_duals = duals_red
        x = [None] * program.num_vars
        for j, v in self.fixed.items():
            x[j] = _frac(v)
        for t, j in enumerate(self.keep):
            x[j] = _frac(x_red[t])
        dual = [Fraction(0)] * len(program.constraints)
        for (ridx, _vec, _rel, _rhs), y in zip(self.live_rows, row_duals):
            dual[ridx] = _frac(y)
        lower_duals = [Fraction(0)] * program.num_vars
        upper_duals = [Fraction(0)] * program.num_vars
        for t, j in enumerate(self.keep):
            lower_duals[j] = _frac(lo_duals[t])
            upper_duals[j] = _frac(up_duals[t])
        # each eliminated single-variable equality row absorbs the reduced
        # cost of its variable so stationarity holds over the original
        # program; reverse elimination order, because a row fixed earlier may
        # be touched by rows that were substituted later
        for ridx in reversed(self.elim_order):
            j = self.row_state[ridx][1]
            coeffs = program.constraints[ridx][0]
            acc = program.objective[j]
            for sidx, (scoeffs, _r, _b) in enumerate(program.constraints):
                if sidx != ridx and scoeffs[j] != 0:
                    acc -= dual[sidx] * scoeffs[j]
            dual[ridx] = Fraction(acc, 1) / coeffs[j]
        # variables pinned by lower == upper take the stationarity residual
        # on their (coincident) bound multipliers
        for j in self.bound_fixed:
            residual = program.objective[j] - sum(
                dual[i] * c[j] for i, (c, _r, _b) in enumerate(program.constraints) if c[j] != 0
            )
            if residual >= 0:
                upper_duals[j] = Fraction(residual)
            else:
                lower_duals[j] = Fraction(-residual)
        value = sum(program.objective[j] * x[j] for j in range(program.num_vars))
        return LPSolution(OPTIMAL, value, x, dual, lower_duals, upper_duals)


def _simplex(reduced):
    """Two-phase dense simplex over the presolved rows.

    Returns (status, x, (row_duals, lower_duals, upper_duals)) where the duals
    refer to ``reduced.live_rows`` order and the reduced variables.
    """
    R = _mpq
    nv = len(reduced.keep)
    if nv == 0:
        return OPTIMAL, [], ([R(0)] * len(reduced.live_rows), [], [])

    # columns: one per reduced variable after shifting to x' >= 0; free
    # variables are split into a difference of two nonnegative columns
    col_homes = []  # per reduced var: ("shift", col, lo) or ("split", pos_col, neg_col)
    ncols_struct = 0
    for t in range(nv):
        lo = reduced.lower[t]
        if lo is None:
            col_homes.append(("split", ncols_struct, ncols_struct + 1))
            ncols_struct += 2
        else:
            col_homes.append(("shift", ncols_struct, _to_q(lo, R)))
            ncols_struct += 1

    def expand(vec):
        out = [R(0)] * ncols_struct
        shift_amount = R(0)
        for t, a in enumerate(vec):
            if a == 0:
                continue
            aq = _to_q(a, R)
            home = col_homes[t]
            if home[0] == "shift":
                out[home[1]] += aq
                shift_amount += aq * home[2]
            else:
                out[home[1]] += aq
                out[home[2]] -= aq
        return out, shift_amount

    # rows: structural part, relation, rhs shifted by the lower bounds
    raw_rows = []
    row_meta = []  # ("con", live_index) or ("ub", t)
    for li, (_ridx, vec, rel, rhs) in enumerate(reduced.live_rows):
        coeffs, shift_amount = expand(vec)
        raw_rows.append((coeffs, rel, _to_q(rhs, R) - shift_amount))
        row_meta.append(("con", li))
    for t in range(nv):
        up = reduced.upper[t]
        if up is None:
            continue
        coeffs = [R(0)] * ncols_struct
        home = col_homes[t]
        if home[0] == "shift":
            coeffs[home[1]] = R(1)
            rhs = _to_q(up, R) - home[2]
        else:
            coeffs[home[1]], coeffs[home[2]] = R(1), R(-1)
            rhs = _to_q(up, R)
        raw_rows.append((coeffs, LE, rhs))
        row_meta.append(("ub", t))

    obj, _ = expand(reduced.objective)

    tab = _Tableau(R, ncols_struct, raw_rows, obj)
    status = tab.run()
    if status != OPTIMAL:
        return status, None, None

    # primal in reduced-variable terms
    xcols = tab.primal_columns()
    x_red = []
    for t in range(nv):
        home = col_homes[t]
        if home[0] == "shift":
            x_red.append(xcols[home[1]] + home[2])
        else:
            x_red.append(xcols[home[1]] - xcols[home[2]])

    y = tab.row_duals()
    row_duals = [R(0)] * len(reduced.live_rows)
    up_duals = [R(0)] * nv
    for meta, yk in zip(row_meta, y):
        if meta[0] == "con":
            row_duals[meta[1]] = yk
        else:
            up_duals[meta[1]] = yk
    lo_duals = [R(0)] * nv
    for t in range(nv):
        if reduced.lower[t] is None:
            continue
        acc = _to_q(reduced.objective[t], R)
        for (_ridx, vec, _rel, _rhs), yk in zip(reduced.live_rows, row_duals):
            if vec[t] != 0:
                acc -= yk * _to_q(vec[t], R)
        acc -= up_duals[t]
        lo_duals[t] = -acc
    return OPTIMAL, x_red, (row_duals, lo_duals, up_duals)


def _to_q(a, R):
    if isinstance(a, Fraction):
        return a if R is Fraction else R(a.numerator) / R(a.denominator)
    return R(a)


class _Tableau:
    """Dense two-phase simplex tableau with Dantzig/Bland entering rule."""

    def __init__(self, R, n_struct, rows, objective):
        self.R = R
        self.n_struct = n_struct
        self.m = len(rows)
        zero, one = R(0), R(1)
        ncols = n_struct + self.m  # one slot per row for slack/artificial
        self.matrix = []
        self.rhs = []
        self.basis = []
        self.slack_kind = []  # per row: "slack", "surplus", "eq"
        self.row_sign = []
        art_rows = []
        for k, (coeffs, rel, b) in enumerate(rows):
            row = list(coeffs) + [zero] * self.m
            sign = one
            if b < 0:
                row = [-a for a in row]
                b = -b
                sign = -one
            if rel == LE:
                row[n_struct + k] = sign
                self.slack_kind.append("slack")
            elif rel == GE:
                row[n_struct + k] = -sign
                self.slack_kind.append("surplus")
            else:
                self.slack_kind.append("eq")
            self.matrix.append(row)
            self.rhs.append(b)
            self.row_sign.append(sign)
            if rel == LE and sign == one:
                self.basis.append(n_struct + k)
            else:
                art_rows.append(k)
                self.basis.append(None)
        self.art_cols = {}
        for k in art_rows:
            col = len(self.matrix[0])
            for i, row in enumerate(self.matrix):
                row.append(one if i == k else zero)
            self.basis[k] = col
            self.art_cols[col] = k
        self.ncols = len(self.matrix[0]) if self.matrix else n_struct
        self.objective = list(objective) + [zero] * (self.ncols - n_struct)
        # keep pristine copies for the independent dual recomputation
        self.matrix0 = [list(r) for r in self.matrix]
        self.rhs0 = list(self.rhs)

    def run(self):
        R = self.R
        zero = R(0)
        if self.art_cols:
            # maximize -(sum of artificials); its value is 0 exactly when the
            # program is feasible
            phase1 = [zero] * self.ncols
            p1val = zero
            for col, k in self.art_cols.items():
                for j in range(self.ncols):
                    if j not in self.art_cols:
                        phase1[j] += self.matrix[k][j]
                p1val -= self.rhs[k]
            for col in self.art_cols:
                phase1[col] = zero
            status, p1val = self._optimize(phase1, p1val, allow_artificial=False)
            if status == UNBOUNDED:  # cannot happen for the phase-1 objective
                raise RuntimeError("phase 1 reported unbounded")
            if p1val != 0:
                return INFEASIBLE
            self._evict_artificials()
        obj = list(self.objective)
        objval = zero
        for i, b in enumerate(self.basis):
            if obj[b] != 0:
                coef = obj[b]
                row = self.matrix[i]
                for j in range(self.ncols):
                    obj[j] -= coef * row[j]
                objval += coef * self.rhs[i]
        status, objval = self._optimize(obj, objval, allow_artificial=False, maximize_real=True)
        self.final_obj_value = objval
        return status

    def _optimize(self, obj, objval, allow_artificial, maximize_real=False):
        # phase 1 maximizes -sum(artificials); here obj holds reduced costs with
        # the sign convention "positive entry = improving column" in both phases
        R = self.R
        zero = R(0)
        degenerate_streak = 0
        bland = False
        art = self.art_cols
        while True:
            enter = -1
            if bland:
                for j in range(self.ncols):
                    if j in art and not allow_artificial:
                        continue
                    if obj[j] > 0:
                        enter = j
                        break
            else:
                best = zero
                for j in range(self.ncols):
                    if j in art and not allow_artificial:
                        continue
                    if obj[j] > best:
                        best = obj[j]
                        enter = j
            if enter < 0:
                return OPTIMAL, objval
            leave = -1
            best_ratio = None
            for i in range(self.m):
                a = self.matrix[i][enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best_ratio is None or ratio < best_ratio or (
                        ratio == best_ratio and self.basis[i] < self.basis[leave]
                    ):
                        best_ratio = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED, None
            if best_ratio == 0:
                degenerate_streak += 1
                if degenerate_streak > _DEGENERACY_LIMIT:
                    bland = True
            else:
                degenerate_streak = 0
            objval = self._pivot(leave, enter, obj, objval)

    def _pivot(self, leave, enter, obj, objval):
        row = self.matrix[leave]
        piv = row[enter]
        if piv != 1:
            inv = 1 / piv
            self.matrix[leave] = row = [a * inv for a in row]
            self.rhs[leave] *= inv
        for i in range(self.m):
            if i == leave:
                continue
            f = self.matrix[i][enter]
            if f == 0:
                continue
            target = self.matrix[i]
            self.matrix[i] = [t - f * r for t, r in zip(target, row)]
            self.rhs[i] -= f * self.rhs[leave]
        f = obj[enter]
        if f != 0:
            for j in range(self.ncols):
                obj[j] -= f * row[j]
            objval += f * self.rhs[leave]
        self.basis[leave] = enter
        return objval

    def _evict_artificials(self):
        # pivot basic artificials (all at value 0 after phase 1) onto real
        # columns; rows that cannot be pivoted are redundant and neutralized
        for i in range(self.m):
            b = self.basis[i]
            if b not in self.art_cols:
                continue
            pivot_col = -1
            for j in range(self.ncols):
                if j in self.art_cols:
                    continue
                if self.matrix[i][j] != 0:
                    pivot_col = j
                    break
            if pivot_col >= 0:
                self._pivot(i, pivot_col, [self.R(0)] * self.ncols, self.R(0))
            # else: dependent row; the artificial stays basic at value 0,
            # which is harmless because artificial columns never re-enter

    def primal_columns(self):
        vals = [self.R(0)] * self.ncols
        for i, b in enumerate(self.basis):
            vals[b] = self.rhs[i]
        return vals

    def row_duals(self):
        """Recompute y from c_B B^{-1} on the pristine matrix (independent of
        pivot arithmetic), then translate to the as-given row orientation."""
        R = self.R
        m = self.m
        cb = [self.objective[b] for b in self.basis]
        # solve y^T B = c_B with B columns taken from the untouched matrix
        aug = [[self.matrix0[i][self.basis[k]] for i in range(m)] + [cb[k]] for k in range(m)]
        y = _gauss_solve(aug, R)
        return [y[i] * self.row_sign[i] for i in range(m)]


def _gauss_solve(aug, R):
    """Solve the square system carried in augmented rows, exactly."""
    m = len(aug)
    perm = list(range(m))
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if piv is None:
            raise RuntimeError("singular basis while extracting duals")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][m] for i in range(m)]


def check_certificate(program, solution):
    """Re-verify an Optimal solution against its program, or raise.

    Checks, all in exact arithmetic: the primal satisfies every constraint and
    bound; dual multipliers have the right signs (>= 0 for "<=" rows, <= 0 for
    ">=" rows, free for "="); bound duals are nonnegative and vanish where no
    bound exists; stationarity c_j = sum_i y_i a_ij + mu_j - lambda_j holds per
    variable; and the primal and dual objective values agree.
    """
    if solution.status != OPTIMAL:
        raise CertificateError("no certificate for status %r" % solution.status)
    x = solution.primal
    for idx, (coeffs, rel, rhs) in enumerate(program.constraints):
        lhs = sum(a * xi for a, xi in zip(coeffs, x) if a != 0)
        ok = lhs == rhs if rel == EQ else (lhs <= rhs if rel == LE else lhs >= rhs)
        if not ok:
            raise CertificateError("primal violates constraint %d" % idx)
    for j in range(program.num_vars):
        lo, up = program.lower[j], program.upper[j]
        if lo is not None and x[j] < lo:
            raise CertificateError("primal below lower bound on variable %d" % j)
        if up is not None and x[j] > up:
            raise CertificateError("primal above upper bound on variable %d" % j)
    y = solution.dual
    lam, mu = solution.lower_duals, solution.upper_duals
    for idx, (_c, rel, _b) in enumerate(program.constraints):
        if rel == LE and y[idx] < 0:
            raise CertificateError("dual sign on <= constraint %d" % idx)
        if rel == GE and y[idx] > 0:
            raise CertificateError("dual sign on >= constraint %d" % idx)
    for j in range(program.num_vars):
        if lam[j] < 0 or mu[j] < 0:
            raise CertificateError("negative bound dual on variable %d" % j)
        if program.lower[j] is None and lam[j] != 0:
            raise CertificateError("lower dual on free-below variable %d" % j)
        if program.upper[j] is None and mu[j] != 0:
            raise CertificateError("upper dual on unbounded-above variable %d" % j)
    for j in range(program.num_vars):
        acc = sum(program.constraints[i][0][j] * y[i] for i in range(len(y)) if program.constraints[i][0][j] != 0)
        if program.objective[j] != acc + mu[j] - lam[j]:
            raise CertificateError("stationarity fails on variable %d" % j)
    dual_value = sum(yi * rhs for yi, (_c, _r, rhs) in zip(y, program.constraints))
    dual_value += sum(mu[j] * program.upper[j] for j in range(program.num_vars) if program.upper[j] is not None)
    dual_value -= sum(lam[j] * program.lower[j] for j in range(program.num_vars) if program.lower[j] is not None)
    primal_value = sum(c * xi for c, xi in zip(program.objective, x))
    if primal_value != dual_value or primal_value != solution.value:
        raise CertificateError("strong duality equality fails")


def brute_force_optimum(program, box=True):
    """Vertex-enumeration oracle for small programs, used to audit the simplex.

    Enumerates every choice of num_vars active constraints/bounds, solves the
    square system exactly, filters feasible points and returns
    (status, value).  Assumes a bounded feasible region (e.g. box bounds on
    every variable), under which the optimum is attained at a vertex.
    """
    program.validate()
    nv = program.num_vars
    planes = []
    for coeffs, _rel, rhs in program.constraints:
        planes.append((list(coeffs), rhs))
    for j in range(nv):
        if program.lower[j] is not None:
            planes.append(([Fraction(1) if t == j else Fraction(0) for t in range(nv)], program.lower[j]))
        if program.upper[j] is not None:
            planes.append(([Fraction(1) if t == j else Fraction(0) for t in range(nv)], program.upper[j]))
    best = None
    for combo in itertools.combinations(range(len(planes)), nv):
        aug = [[_frac(a) for a in planes[i][0]] + [_frac(planes[i][1])] for i in combo]
        try:
            x = _gauss_solve(aug, Fraction)
        except RuntimeError:
            continue
        if not _feasible(program, x):
            continue
        val = sum(c * xi for c, xi in zip(program.objective, x))
        if best is None or val > best:
            best = val
    if best is None:
        return INFEASIBLE, None
    return OPTIMAL, best


def _feasible(program, x):
    for coeffs, rel, rhs in program.constraints:
        lhs = sum(a * xi for a, xi in zip(coeffs, x) if a != 0)
        if rel == LE and lhs > rhs:
            return False
        if rel == GE and lhs < rhs:
            return False
        if rel == EQ and lhs != rhs:
            return False
    for j in range(program.num_vars):
        lo, up = program.lower[j], program.upper[j]
        if lo is not None and x[j] < lo:
            return False
        if up is not None and x[j] > up:
            return False
    return True


# --- text round trip ---------------------------------------------------------

def format_rational(x):
    """Lossless decimal-free text form: "p" for integers, else "p/q"."""
    x = _frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(text):
    return Fraction(text)


def program_to_json(program):
    return {
        "variables": program.num_vars,
        "objective": [format_rational(c) for c in program.objective],
        "constraints": [
            {"coeffs": [format_rational(a) for a in coeffs], "rel": rel, "rhs": format_rational(rhs)}
            for coeffs, rel, rhs in program.constraints
        ],
        "lower": [None if lo is None else format_rational(lo) for lo in program.lower],
        "upper": [None if up is None else format_rational(up) for up in program.upper],
    }


def program_from_json(data):
    nv = int(data["variables"])
    program = LinearProgram(nv)
    program.objective = [parse_rational(c) for c in data.get("objective", ["0"] * nv)]
    for con in data.get("constraints", []):
        if con["rel"] not in _RELS:
            raise ValueError("unknown relation %r" % (con["rel"],))
        program.add_constraint([parse_rational(a) for a in con["coeffs"]], con["rel"], parse_rational(con["rhs"]))
    if "lower" in data:
        program.lower = [None if lo is None else parse_rational(lo) for lo in data["lower"]]
    if "upper" in data:
        program.upper = [None if up is None else parse_rational(up) for up in data["upper"]]
    program.validate()
    return program


def solution_to_json(solution):
    out = {"status": solution.status}
    if solution.status == OPTIMAL:
        out["value"] = format_rational(solution.value)
        out["primal"] = [format_rational(v) for v in solution.primal]
        out["dual"] = {
            "constraints": [format_rational(v) for v in solution.dual],
            "lower": [format_rational(v) for v in solution.lower_duals],
            "upper": [format_rational(v) for v in solution.upper_duals],
        }
    return out


def solution_from_json(data):
    if data["status"] != OPTIMAL:
        return LPSolution(data["status"])
    return LPSolution(
        OPTIMAL,
        parse_rational(data["value"]),
        [parse_rational(v) for v in data["primal"]],
        [parse_rational(v) for v in data["dual"]["constraints"]],
        [parse_rational(v) for v in data["dual"]["lower"]],
        [parse_rational(v) for v in data["dual"]["upper"]],
    )


def dump_program(program, fh):
    json.dump(program_to_json(program), fh, indent=1, sort_keys=True)
    fh.write("\n")


def load_program(fh):
    return program_from_json(json.load(fh))
