"""Exact combinatorics of the binary Hamming and Johnson association schemes.

Everything here is integer/rational arithmetic: binomials, valencies,
intersection numbers, sphere volumes and the first/second eigenvalue
matrices (Krawtchouk for Hamming, Eberlein for Johnson).  No floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

HAMMING = "hamming"
JOHNSON = "johnson"


class SchemeError(ValueError):
    """A scheme identity failed; signals a transcription bug, not bad user input."""


def binomial(n, k):
    """C(n, k) as an exact integer; 0 whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def sphere_volume(n, e):
    """Number of binary words within Hamming distance e of a fixed word."""
    return sum(binomial(n, j) for j in range(e + 1))


def krawtchouk(n, k, i):
    """Krawtchouk polynomial P_k(i) = sum_j (-1)^j C(i,j) C(n-i,k-j), exact."""
    return sum((-1) ** j * binomial(i, j) * binomial(n - i, k - j) for j in range(k + 1))


def eberlein(n, w, k, i):
    """Eberlein polynomial E_k(i) = sum_j (-1)^j C(i,j) C(w-i,k-j) C(n-w-i,k-j)."""
    return sum(
        (-1) ** j * binomial(i, j) * binomial(w - i, k - j) * binomial(n - w - i, k - j)
        for j in range(k + 1)
    )


@dataclass(frozen=True)
class Scheme:
    """A metric association scheme on binary words: Hamming(n) or Johnson(n, w).

    For Johnson(n, w) the points are the weight-w words and distance is half
    the Hamming distance, so there are w+1 relations.
    """

    kind: str
    n: int
    w: int = 0

    def __post_init__(self):
        if self.kind not in (HAMMING, JOHNSON):
            raise ValueError("unknown scheme kind %r" % (self.kind,))
        if self.n < 1:
            raise ValueError("scheme length must be positive")
        if self.kind == JOHNSON and not 0 <= self.w <= self.n:
            raise ValueError("johnson weight must satisfy 0 <= w <= n")

    @property
    def class_count(self):
        return self.n if self.kind == HAMMING else self.w

    @property
    def point_count(self):
        return 2 ** self.n if self.kind == HAMMING else binomial(self.n, self.w)

    def _check_index(self, *indices):
        for i in indices:
            if not 0 <= i <= self.class_count:
                raise IndexError("relation index %d out of range 0..%d" % (i, self.class_count))

    def valency(self, i):
        """Number of points at scheme distance i from any fixed point."""
        self._check_index(i)
        if self.kind == HAMMING:
            return binomial(self.n, i)
        return binomial(self.w, i) * binomial(self.n - self.w, i)

    def intersection(self, i, j, k):
        """p_{i,j}^k: points at distance i from x and j from y when d(x,y) = k."""
        self._check_index(i, j, k)
        if self.kind == HAMMING:
            if (i + j - k) % 2 != 0:
                return 0
            return binomial(k, (i - j + k) // 2) * binomial(self.n - k, (i + j - k) // 2)
        n, w = self.n, self.w
        return sum(
            binomial(w - k, l)
            * binomial(k, w - i - l)
            * binomial(k, w - j - l)
            * binomial(n - w - k, i + j + l - w)
            for l in range(w - k + 1)
        )

    def sphere_size(self, e):
        """Points within scheme distance e of a fixed point (sum of valencies)."""
        self._check_index(e)
        return sum(self.valency(j) for j in range(e + 1))


def hamming(n):
    return Scheme(HAMMING, n)


def johnson(n, w):
    return Scheme(JOHNSON, n, w)


@dataclass(frozen=True)
class EigenTables:
    """First/second eigenvalue matrices and multiplicities of a scheme.

    p[k][i] is the eigenvalue of relation k on eigenspace i, q[k][i] the dual
    eigenvalue, m[k] the multiplicity of eigenspace k.  Validated so that
    p[k][0] = valency(k), q[k][0] = m[k] and P*Q = point_count * Identity hold
    exactly; construction fails otherwise.
    """

    scheme: Scheme
    p: tuple
    q: tuple
    m: tuple


def eigen_tables(scheme):
    """Build and validate the eigenvalue tables for a Hamming or Johnson scheme."""
    c = scheme.class_count
    if scheme.kind == HAMMING:
        p = tuple(tuple(krawtchouk(scheme.n, k, i) for i in range(c + 1)) for k in range(c + 1))
        q = p
        m = tuple(binomial(scheme.n, k) for k in range(c + 1))
    else:
        n, w = scheme.n, scheme.w
        if w > n - w:
            raise SchemeError(
                "eigen tables need w <= n - w (use the isomorphic Johnson(%d, %d))" % (n, n - w)
            )
        p = tuple(tuple(eberlein(n, w, k, i) for i in range(c + 1)) for k in range(c + 1))
        m = tuple(binomial(n, k) - binomial(n, k - 1) for k in range(c + 1))
        # dual eigenvalues q_k(i) = m_k * p_i(k) / v_i
        q = tuple(
            tuple(Fraction(m[k] * p[i][k], scheme.valency(i)) for i in range(c + 1))
            for k in range(c + 1)
        )
    tables = EigenTables(scheme, p, q, m)
    _validate_tables(scheme, tables)
    return tables


def _validate_tables(scheme, tables):
    c = scheme.class_count
    v = scheme.point_count
    for k in range(c + 1):
        if tables.p[k][0] != scheme.valency(k):
            raise SchemeError("first-eigenvalue anchor failed at relation %d" % k)
        if tables.q[k][0] != tables.m[k]:
            raise SchemeError("dual-eigenvalue anchor failed at eigenspace %d" % k)
    for k in range(c + 1):
        for j in range(c + 1):
            entry = sum(tables.p[k][i] * tables.q[i][j] for i in range(c + 1))
            if entry != (v if k == j else 0):
                raise SchemeError("duality P*Q = %d*I failed at (%d, %d)" % (v, k, j))
