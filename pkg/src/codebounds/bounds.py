"""Upper-bound computations on A(n, d) and A(n, d, w), one per method.

Every operation returns a BoundRecord carrying the exact rational value, its
floor (the integer bound), the table entries consumed (with provenance), and
an LP certificate when a linear program was involved.  No floating point
anywhere; final bounds are floors of exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp as lpmod
from .delsarte import build_johnson_lp, build_lp_even, build_lp_odd, transfer_bound
from .holes import VacuousBoundError, r_coefficients
from .schemes import binomial, hamming, johnson, sphere_volume
from .tables import RecordingProvider


@dataclass
class BoundRecord:
    """A computed bound: method id, parameters, exact value, floor, inputs.

    ``inputs`` lists every external table value consumed as (key, value,
    provenance); ``reproducing`` is False when any input came from a
    recursion/projection fallback rather than a pinned table entry or closed
    form.  ``certificate`` holds (program, solution) for LP-backed methods.
    """

    method: str
    n: int
    d: int
    exact: Fraction
    bound: int
    w: int = None
    scheme_distance: int = None
    inputs: tuple = ()
    certificate: tuple = None
    reproducing: bool = True

    def params(self):
        out = {"n": self.n, "d": self.d}
        if self.w is not None:
            out["w"] = self.w
        if self.scheme_distance is not None:
            out["scheme_distance"] = self.scheme_distance
        return out


def _floor(x):
    x = Fraction(x)
    return x.numerator // x.denominator


def _record(method, n, e, exact, rec=None, w=None, scheme_distance=None, certificate=None):
    exact = Fraction(exact)
    return BoundRecord(
        method=method,
        n=n,
        d=2 * e + 1 if scheme_distance is None else 2 * scheme_distance,
        exact=exact,
        bound=_floor(exact),
        w=w,
        scheme_distance=scheme_distance,
        inputs=rec.recorded() if rec else (),
        certificate=certificate,
        reproducing=not rec.any_fallback() if rec else True,
    )


def _check_positive(denominator):
    if denominator <= 0:
        raise VacuousBoundError("bound denominator is not positive")


# --- sphere packing and its refinements ---------------------------------------

def sphere_packing(n, e):
    """2^n over the volume of a radius-e sphere, floored."""
    if 2 * e + 1 > n or e < 1:
        raise ValueError("need 1 <= e and 2e+1 <= n")
    exact = Fraction(2 ** n, sphere_volume(n, e))
    return _record("sphere", n, e, exact)


def johnson_bound(n, e, caps):
    """Sphere packing sharpened by the fractional-covering term built from
    constant-weight code sizes at distance 2e+2."""
    if 2 * e + 1 > n or e < 1:
        raise ValueError("need 1 <= e and 2e+1 <= n")
    rec = RecordingProvider(caps)
    a_far, _ = rec.cw_upper(n, 2 * e + 2, 2 * e + 1)
    a_near, _ = rec.cw_upper(n, 2 * e + 2, e + 1)
    extra = Fraction(binomial(n, e + 1) - binomial(2 * e + 1, e + 1) * a_far, a_near)
    denominator = sphere_volume(n, e) + extra
    _check_positive(denominator)
    return _record("johnson", n, e, Fraction(2 ** n) / denominator, rec)


def improved_johnson(n, e, caps):
    """Johnson-style bound through the parity-extended length n+1."""
    if 2 * e + 2 > n + 1 or e < 1:
        raise ValueError("need 1 <= e and 2e+2 <= n+1")
    rec = RecordingProvider(caps)
    a_far, _ = rec.cw_upper(n + 1, 2 * e + 2, 2 * e + 2)
    a_near, _ = rec.cw_upper(n + 1, 2 * e + 2, e + 2)
    extra = Fraction(binomial(n + 1, e + 2) - binomial(2 * e + 2, e + 2) * a_far, a_near)
    denominator = sphere_volume(n, e) + extra
    _check_positive(denominator)
    return _record("improved-johnson", n, e, Fraction(2 ** n) / denominator, rec)


def lp_improved_johnson(n, e, caps):
    """improved_johnson with the extended-distribution coefficient replaced by
    its LP maximum over the even-extension Delsarte system."""
    if 2 * e + 2 > n + 1 or e < 1:
        raise ValueError("need 1 <= e and 2e+2 <= n+1")
    rec = RecordingProvider(caps)
    program = build_lp_even(n + 1, e, rec)
    program.objective[2 * e + 2] = Fraction(1)
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("even-extension LP unexpectedly %s" % sol.status)
    a_near, _ = rec.cw_upper(n + 1, 2 * e + 2, e + 2)
    extra = Fraction(binomial(n + 1, e + 2) - binomial(2 * e + 2, e + 2) * sol.value, a_near)
    denominator = sphere_volume(n, e) + extra
    _check_positive(denominator)
    exact = Fraction(2 ** n) / denominator
    return _record("lp-improved-johnson", n, e, exact, rec, certificate=(program, sol))


# --- closed forms for d = 3 ----------------------------------------------------

def closed_form_mod12_9(n):
    """A(n, 3) <= 2^n / (n + 3 + 4/(n^2 - 3)) for n = 9 mod 12."""
    if n % 12 != 9:
        raise ValueError("closed form needs n = 9 (mod 12)")
    exact = Fraction(2 ** n) / (n + 3 + Fraction(4, n * n - 3))
    return _record("mod12-9", n, 1, exact)


def closed_form_mod12_10(n):
    """A(n, 3) <= 2^n / (n + 2 + 8/(n + 3)) for n = 10 mod 12."""
    if n % 12 != 10:
        raise ValueError("closed form needs n = 10 (mod 12)")
    exact = Fraction(2 ** n) / (n + 2 + Fraction(8, n + 3))
    return _record("mod12-10", n, 1, exact)


def vroedt_cap(n_tilde, caps=None):
    """Cap on the distance-4 coefficient of an even-weight distance-4 code.

    Closed forms at n_tilde = 1, 2 (mod 4) (the second derived through the
    length-reduction transfer); the LP optimum otherwise, which needs a caps
    provider.
    """
    if n_tilde < 4:
        raise ValueError("length must be at least 4")
    if n_tilde % 4 == 1:
        return Fraction((n_tilde - 1) * (n_tilde - 2) * (n_tilde - 3), 24)
    if n_tilde % 4 == 2:
        shorter = vroedt_cap(n_tilde - 1)
        weights = [Fraction(0)] * (n_tilde + 1)
        weights[4] = Fraction(1)
        return transfer_bound(n_tilde, weights, shorter) / (n_tilde - 4)
    if caps is None:
        raise ValueError("LP branch needs a caps provider")
    program = build_lp_even(n_tilde, 1, caps)
    program.objective[4] = Fraction(1)
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("even-extension LP unexpectedly %s" % sol.status)
    return sol.value


# --- hole-pair bounds at the largest distances ---------------------------------

def _tail_sum_coefficients(scheme, e, t):
    """Vector of coefficients (indexed by distribution entry) of the sum
    sum_{i=0}^{e+t} A_{n-i} sum_{j=0}^{e} p_{n-t, j}^{n-i}."""
    n = scheme.n
    out = [Fraction(0)] * (n + 1)
    for i in range(e + t + 1):
        out[n - i] = Fraction(sum(scheme.intersection(n - t, j, n - i) for j in range(e + 1)))
    return out


def large_indices_two(n, e, caps):
    """Hole-pair bound with weight on the two largest distances."""
    if 2 * e + 1 > n or e < 1:
        raise ValueError("need 1 <= e and 2e+1 <= n")
    rec = RecordingProvider(caps)
    scheme = hamming(n)
    gamma = n + 1 - (e + 1) * (n // (e + 1))
    delta = (e + 1) * (1 + (n - e) // (e + 1) - n // (e + 1))
    objective = [Fraction(a + b) for a, b in zip(r_coefficients(scheme, e, n - 1), r_coefficients(scheme, e, n))]
    for t in range(e):
        for k, c in enumerate(_tail_sum_coefficients(scheme, e, t)):
            objective[k] -= gamma * c
    for k, c in enumerate(_tail_sum_coefficients(scheme, e, e)):
        objective[k] -= delta * c
    program = build_lp_odd(n, e, rec)
    program.objective = objective
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("distance-distribution LP unexpectedly %s" % sol.status)
    shortfall = binomial(n, e) * ((n - e) - (e + 1) * ((n - e) // (e + 1)))
    denominator = 2 * sphere_volume(n, e) + Fraction(shortfall - sol.value, (e + 1) * (n // (e + 1)))
    _check_positive(denominator)
    exact = Fraction(2 ** n) / denominator
    return _record("large2", n, e, exact, rec, certificate=(program, sol))


def large_indices_two_even(n, caps):
    """Even length, distance 3: the large-index bound through the
    even-weight extension system."""
    if n % 2 or n < 4:
        raise ValueError("need even n >= 4")
    rec = RecordingProvider(caps)
    n_tilde = n + 1
    program = build_lp_even(n_tilde, 1, rec)
    program.objective[n_tilde - 3] = Fraction(6)
    program.objective[n_tilde - 1] = Fraction(3 * n)
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("even-extension LP unexpectedly %s" % sol.status)
    denominator = 2 * n + 3 - Fraction(sol.value, n)
    _check_positive(denominator)
    exact = Fraction(2 ** n) / denominator
    return _record("large2-even", n, 1, exact, rec, certificate=(program, sol))


def large_indices_three(n, e, caps):
    """Hole-pair bound with weight on the three largest distances."""
    if 2 * e + 1 > n or e < 1:
        raise ValueError("need 1 <= e and 2e+1 <= n")
    rec = RecordingProvider(caps)
    scheme = hamming(n)
    a_plus, _ = rec.cw_upper(n + 1, 2 * e + 2, e + 2)
    a_minus, _ = rec.cw_upper(n + 1 - e, 2 * e + 2, e + 2)
    pair = binomial(e + 2, 2)
    phi = Fraction(
        binomial(n + 1, e) * (binomial(n + 1 - e, 2) - pair * a_minus),
        pair * a_plus,
    )
    mult_small = 1 + binomial(n + 1, 2) - pair * a_plus
    mult_large = 1 + e * (n - e) + binomial(e + 1, 2) - pair * (a_plus - a_minus)
    objective = [Fraction(0)] * (n + 1)
    for i in range(n - 2, n + 1):
        for k, c in enumerate(r_coefficients(scheme, e, i)):
            objective[k] += c
    for t in range(e - 1):
        for k, c in enumerate(_tail_sum_coefficients(scheme, e, t)):
            objective[k] -= mult_small * c
    for t in range(max(e - 1, 0), e + 1):
        for k, c in enumerate(_tail_sum_coefficients(scheme, e, t)):
            objective[k] -= mult_large * c
    program = build_lp_odd(n, e, rec)
    program.objective = objective
    sol = lpmod.solve(program)
    if sol.status != lpmod.OPTIMAL:
        raise RuntimeError("distance-distribution LP unexpectedly %s" % sol.status)
    denominator = 2 * sphere_volume(n, e) + phi - Fraction(sol.value, pair * a_plus)
    _check_positive(denominator)
    exact = Fraction(2 ** n) / denominator
    return _record("large3", n, e, exact, rec, certificate=(program, sol))


# --- constant-weight bounds over the Johnson scheme ----------------------------

def johnson_scheme_bound(n, w, e, caps):
    """Bound on A(n, 4e+2, w): hole counting inside the Johnson scheme with
    the distance coefficient capped by its Delsarte LP maximum.

    The LP carries split-weight caps A_i <= T(i, w, i, n-w, 4e+2) on every
    live coefficient: codewords at scheme distance i from a fixed codeword
    differ from it in i positions inside its support and i outside, and those
    difference patterns pairwise keep the full Hamming distance.
    """
    if not e + 1 <= w <= n - e - 1:
        raise ValueError("need e+1 <= w <= n-e-1")
    rec = RecordingProvider(caps)
    wc = min(w, n - w)
    scheme = johnson(n, wc)
    certificate = None
    if 2 * e + 1 <= wc:
        program = build_johnson_lp(n, wc, e)
        program.objective[2 * e + 1] = Fraction(1)
        for i in range(2 * e + 1, wc + 1):
            cap, _src = rec.t_upper(i, wc, i, n - wc, 4 * e + 2)
            program.upper[i] = Fraction(cap)
        sol = lpmod.solve(program)
        if sol.status != lpmod.OPTIMAL:
            raise RuntimeError("Johnson-scheme LP unexpectedly %s" % sol.status)
        u_max = sol.value
        certificate = (program, sol)
    else:
        u_max = Fraction(0)
    t_value, _ = rec.t_upper(e + 1, w, e + 1, n - w, 4 * e + 2)
    numerator = scheme.valency(e + 1) - binomial(2 * e + 1, e) ** 2 * u_max
    denominator = scheme.sphere_size(e) + Fraction(numerator, t_value)
    _check_positive(denominator)
    exact = Fraction(scheme.point_count, 1) / denominator
    return _record(
        "cw-johnson", n, e, exact, rec, w=w, scheme_distance=2 * e + 1, certificate=certificate
    )


def centering_spheres_bound(n, w, caps):
    """Bound on A(n, 10, w): sphere-centering count over the Johnson scheme
    with an LP cap on the two leading distance coefficients.

    As in johnson_scheme_bound, the LP is sharpened by split-weight caps on
    every live distribution coefficient.
    """
    if not 4 <= w <= n - 4:
        raise ValueError("need 4 <= w <= n-4")
    rec = RecordingProvider(caps)
    wc = min(w, n - w)
    scheme = johnson(n, wc)
    t3, _ = rec.t_upper(3, w, 3, n - w, 10)
    t4, _ = rec.t_upper(4, w, 4, n - w, 10)
    certificate = None
    if wc >= 5:
        program = build_johnson_lp(n, wc, 2)
        program.objective[5] = Fraction(100, t3) + Fraction(50 * n - 475, t4)
        if wc >= 6:
            program.objective[6] = Fraction(225, t4)
        for i in range(5, wc + 1):
            cap, _src = rec.t_upper(i, wc, i, n - wc, 10)
            program.upper[i] = Fraction(cap)
        sol = lpmod.solve(program)
        if sol.status != lpmod.OPTIMAL:
            raise RuntimeError("Johnson-scheme LP unexpectedly %s" % sol.status)
        u_max = sol.value
        certificate = (program, sol)
    else:
        u_max = Fraction(0)
    denominator = (
        scheme.sphere_size(2)
        + Fraction(scheme.valency(3), t3)
        + Fraction(scheme.valency(4), t4)
        - u_max
    )
    _check_positive(denominator)
    exact = Fraction(scheme.point_count, 1) / denominator
    return _record(
        "cw-centering", n, 2, exact, rec, w=w, scheme_distance=5, certificate=certificate
    )


# --- method registry (shared by the CLI and the table generator) ---------------

METHODS = {
    "sphere": (sphere_packing, "n e"),
    "johnson": (johnson_bound, "n e caps"),
    "improved-johnson": (improved_johnson, "n e caps"),
    "lp-improved-johnson": (lp_improved_johnson, "n e caps"),
    "mod12-9": (closed_form_mod12_9, "n"),
    "mod12-10": (closed_form_mod12_10, "n"),
    "large2": (large_indices_two, "n e caps"),
    "large2-even": (large_indices_two_even, "n caps"),
    "large3": (large_indices_three, "n e caps"),
    "cw-johnson": (johnson_scheme_bound, "n w e caps"),
    "cw-centering": (centering_spheres_bound, "n w caps"),
}

ALIASES = {
    "thm5": "lp-improved-johnson",
    "thm7": "mod12-9",
    "thm8": "large2",
    "thm9": "large2-even",
    "thm10": "mod12-10",
    "thm11": "large3",
    "thm12": "cw-johnson",
    "thm13": "cw-centering",
}


def run_method(method, n, d, caps, w=None):
    """Dispatch a method by name for the given Hamming parameters."""
    method = ALIASES.get(method, method)
    if method not in METHODS:
        raise ValueError("unknown method %r" % method)
    func, signature = METHODS[method]
    if method in ("cw-johnson", "cw-centering"):
        if w is None:
            raise ValueError("method %s needs a weight" % method)
        if method == "cw-centering":
            if d != 10:
                raise ValueError("cw-centering is defined for d = 10 only")
            return func(n, w, caps)
        if d % 4 != 2:
            raise ValueError("cw-johnson needs d = 4e+2")
        return func(n, w, (d - 2) // 4, caps)
    if d % 2 == 0:
        raise ValueError("method %s takes odd d" % method)
    e = (d - 1) // 2
    if method == "mod12-9" or method == "mod12-10":
        if d != 3:
            raise ValueError("closed forms are for d = 3")
        return func(n)
    if method == "sphere":
        return func(n, e)
    if method == "large2-even":
        if d != 3:
            raise ValueError("large2-even is for d = 3")
        return func(n, caps)
    return func(n, e, caps)
