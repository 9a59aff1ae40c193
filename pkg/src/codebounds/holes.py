"""Hole counting for packings in metric association schemes.

Given an (n, M, 2e+1) code, the words at distance more than e from every
codeword are its holes.  The number of ordered hole pairs at each distance is
a linear function of the code's distance distribution; this module carries
those linear forms (r_coefficients / holes_distribution / weighted_hole_sum),
the generic bound they imply (hdi_bound), and a brute-force enumerator that
recomputes everything from an explicit code to validate the identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .schemes import HAMMING, Scheme


class CodeFormatError(ValueError):
    """An explicit-code file or word list violates the format or invariants."""


class VacuousBoundError(ArithmeticError):
    """The bound denominator is not positive, so no conclusion follows."""


@dataclass(frozen=True)
class ExplicitCode:
    """A set of binary words of length n with packing radius e.

    Words are ints; pairwise Hamming distance at least 2e+1 is enforced at
    construction.
    """

    n: int
    words: tuple
    e: int

    @classmethod
    def from_words(cls, n, words, e=None):
        raw = [int(w) for w in words]
        if len(raw) != len(set(raw)):
            raise CodeFormatError("duplicate codewords")
        words = tuple(sorted(raw))
        if not words:
            raise CodeFormatError("empty code")
        if any(w < 0 or w >> n for w in words):
            raise CodeFormatError("codeword out of range for length %d" % n)
        dmin = min(
            ((a ^ b).bit_count() for i, a in enumerate(words) for b in words[i + 1 :]),
            default=None,
        )
        if e is None:
            if dmin is None:
                raise CodeFormatError("packing radius must be given for a one-word code")
            e = (dmin - 1) // 2
        if dmin is not None and dmin < 2 * e + 1:
            raise CodeFormatError("minimum distance %d below 2e+1 = %d" % (dmin, 2 * e + 1))
        return cls(n, words, e)

    @classmethod
    def from_file(cls, path, e=None):
        """One word per line as 0/1 characters; blank lines and '#' comments ignored."""
        words = []
        n = None
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if set(line) - {"0", "1"}:
                    raise CodeFormatError("line %d: not a binary word" % lineno)
                if n is None:
                    n = len(line)
                elif len(line) != n:
                    raise CodeFormatError("line %d: length %d, expected %d" % (lineno, len(line), n))
                word = int(line[::-1], 2)  # bit i of the int is character i
                if word in words:
                    raise CodeFormatError("line %d: duplicate word" % lineno)
                words.append(word)
        if n is None:
            raise CodeFormatError("no words in %s" % path)
        return cls.from_words(n, words, e)

    def __len__(self):
        return len(self.words)

    def min_distance(self):
        return min((a ^ b).bit_count() for i, a in enumerate(self.words) for b in self.words[i + 1 :])

    def distance_distribution(self):
        """Normalized distribution A_i = (# ordered pairs at distance i) / M."""
        counts = [0] * (self.n + 1)
        for a in self.words:
            for b in self.words:
                counts[(a ^ b).bit_count()] += 1
        m = len(self.words)
        return tuple(Fraction(c, m) for c in counts)


@dataclass
class HoleReport:
    """Everything the brute-force enumerator knows about a code's holes.

    ``d`` counts ordered hole pairs by distance.  ``nc_histogram`` maps
    (distance, multiplicity) to the number of holes with exactly that many
    codewords at that distance; ``e_sizes[t]`` is the number of holes whose
    unique codeword at distance n-t exists (t = 0..e).
    """

    hole_count: int
    d: tuple
    nc_histogram: dict
    e_sizes: tuple


def r_coefficients(scheme, e, i):
    """Coefficients c_k with R(code, i) = sum_k c_k A_k for the given scheme.

    R(code, i) counts, per codeword, the ordered (codeword, word-in-sphere)
    incidences that land at distance i; it is linear in the code's distance
    distribution with purely combinatorial coefficients.
    """
    c = scheme.class_count
    if not 0 <= i <= c:
        raise IndexError("distance index %d out of range" % i)
    if e < 1:
        raise ValueError("packing radius must be at least 1")
    w = _sphere_shell_sums(scheme, e)
    coeffs = []
    for k in range(c + 1):
        total = (1 if i == k else 0) + 2 * w[i][k]
        total += sum(w[l][k] * w[i][l] for l in range(1, c + 1) if w[i][l])
        coeffs.append(total)
    return tuple(coeffs)


def _sphere_shell_sums(scheme, e):
    """w[l][k] = sum_{m=1..e} p_{l,m}^k, the inner sums of the hole forms."""
    c = scheme.class_count
    return [
        [sum(scheme.intersection(l, m, k) for m in range(1, e + 1)) for k in range(c + 1)]
        for l in range(c + 1)
    ]


def holes_distribution(scheme, e, code_size, dist):
    """Ordered hole pairs at each distance, from the code's distribution alone."""
    c = scheme.class_count
    if len(dist) != c + 1 or dist[0] != 1:
        raise ValueError("distribution must have length %d with A_0 = 1" % (c + 1))
    v = scheme.point_count
    volume = scheme.sphere_size(e)
    out = []
    for i in range(c + 1):
        coeffs = r_coefficients(scheme, e, i)
        r_i = sum(ck * ak for ck, ak in zip(coeffs, dist) if ak)
        out.append(v * scheme.valency(i) + code_size * (r_i - 2 * volume * scheme.valency(i)))
    return tuple(out)


def weighted_hole_sum(scheme, e, code_size, dist, q):
    """sum_i q_i D_i evaluated through the distribution identities."""
    c = scheme.class_count
    if len(q) != c + 1:
        raise ValueError("weight sequence must have length %d" % (c + 1))
    d = holes_distribution(scheme, e, code_size, dist)
    return sum(qi * di for qi, di in zip(q, d) if qi)


def hdi_bound(scheme, e, q, xi_upper, dist_caps=None, caps_provider=None):
    """Generic hole-pair bound on the code size, exact rational (not floored).

    ``q`` weights the hole-pair counts; ``xi_upper`` must upper-bound the
    per-hole weighted codeword-incidence maximum (positive).  ``dist_caps``
    caps the unknown distribution coefficients: a mapping index -> cap, or an
    iterable of (indices, cap) budget groups sharing one cap; indices not
    covered default to caps_provider lookups A(n, 2e+2, k) when a provider is
    given.  Caps only weaken the bound, so any valid upper bounds are sound.
    """
    c = scheme.class_count
    if len(q) != c + 1:
        raise ValueError("weight sequence must have length %d" % (c + 1))
    xi_upper = Fraction(xi_upper)
    if xi_upper <= 0:
        raise ValueError("xi upper bound must be positive")
    volume = scheme.sphere_size(e)
    coeff_rows = {i: r_coefficients(scheme, e, i) for i in range(c + 1) if q[i]}
    # numerator sum_i q_i (V v_i - R(code, i)) with A_0 = 1, A_1..A_2e = 0 and
    # free coefficients replaced so the R terms are maximized
    base = sum(q[i] * (volume * scheme.valency(i) - coeff_rows[i][0]) for i in coeff_rows)
    t = {k: sum(q[i] * coeff_rows[i][k] for i in coeff_rows) for k in range(2 * e + 1, c + 1)}
    budgets = []
    covered = set()
    if dist_caps is not None:
        items = dist_caps.items() if hasattr(dist_caps, "items") else dist_caps
        for indices, cap in items:
            group = (indices,) if isinstance(indices, int) else tuple(indices)
            budgets.append((group, Fraction(cap)))
            covered.update(group)
    for k in sorted(t):
        if k in covered:
            continue
        if caps_provider is not None:
            value, _src = caps_provider.cw_upper(scheme.n, 2 * e + 2, k)
            budgets.append(((k,), Fraction(value)))
        elif t[k] > 0:
            raise ValueError("no cap supplied for coefficient %d with positive weight" % k)
    numerator = base
    for group, cap in budgets:
        worst = max(t.get(k, 0) for k in group)
        if worst > 0:
            numerator -= worst * cap
    denominator = volume + Fraction(numerator, 1) / xi_upper
    if denominator <= 0:
        raise VacuousBoundError("bound denominator is not positive")
    return Fraction(scheme.point_count, 1) / denominator


# --- brute force over explicit codes -----------------------------------------

def brute_force_holes(code, with_nc=True):
    """Enumerate all words, classify holes, and tabulate their pair distances.

    Exact integers throughout; the transform-based pair count stays within
    int64 because its intermediate values are bounded by hole_count * 2^n.
    """
    n = code.n
    if n > 22:
        raise ValueError("word enumeration guarded at n <= 22")
    size = 1 << n
    covered = np.zeros(size, dtype=bool)
    words = np.asarray(code.words, dtype=np.int64)
    for mask in _ball_masks(n, code.e):
        covered[words ^ mask] = True
    holes = np.nonzero(~covered)[0]
    hole_count = int(holes.size)
    expected = size - len(code.words) * _volume(n, code.e)
    if hole_count != expected:
        raise AssertionError("hole census disagrees with the sphere count")

    # ordered pair distances via the Walsh-Hadamard autocorrelation
    f = np.zeros(size, dtype=np.int64)
    f[holes] = 1
    spec = _fwht(f)
    auto = _fwht(spec * spec)
    assert np.all(auto % size == 0)
    auto //= size
    weights = _weight_table(n)
    d = np.zeros(n + 1, dtype=np.int64)
    np.add.at(d, weights, auto)

    nc_histogram = {}
    e_sizes = tuple()
    if with_nc:
        lut = _popcount16()
        for start in range(0, hole_count, 1 << 16):
            chunk = holes[start : start + (1 << 16)]
            x = chunk[:, None] ^ words[None, :]
            dist = lut[x & 0xFFFF].astype(np.int16)
            dist += lut[(x >> 16) & 0xFFFF]
            for delta in range(n + 1):
                counts = (dist == delta).sum(axis=1)
                vals, reps = np.unique(counts[counts > 0], return_counts=True)
                for m, r in zip(vals, reps):
                    key = (delta, int(m))
                    nc_histogram[key] = nc_histogram.get(key, 0) + int(r)
        e_sizes = tuple(nc_histogram.get((n - t, 1), 0) for t in range(code.e + 1))
    return HoleReport(hole_count, tuple(int(x) for x in d), nc_histogram, e_sizes)


def _volume(n, e):
    from .schemes import sphere_volume

    return sphere_volume(n, e)


def _ball_masks(n, e):
    masks = [0]
    frontier = [0]
    for _ in range(e):
        nxt = []
        for m in frontier:
            top = (m & -m).bit_length() - 1 if m else n
            for b in range(top):
                nxt.append(m | (1 << b))
        frontier = nxt
        masks.extend(frontier)
    return masks


def _fwht(a):
    a = a.copy()
    h = 1
    size = len(a)
    while h < size:
        a = a.reshape(-1, 2, h)
        x, y = a[:, 0, :].copy(), a[:, 1, :].copy()
        a[:, 0, :] = x + y
        a[:, 1, :] = x - y
        a = a.reshape(size)
        h *= 2
    return a


def _weight_table(n):
    w = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        w = np.concatenate([w, w + 1])
    return w


_POP16 = None


def _popcount16():
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    return _POP16


def greedy_code(n, d, seed=0):
    """Deterministic pseudorandom greedy code of length n, min distance d."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(1 << n)
    chosen = []
    for x in order:
        x = int(x)
        if all(((x ^ c).bit_count()) >= d for c in chosen):
            chosen.append(x)
    return ExplicitCode.from_words(n, chosen, (d - 1) // 2)


def hamming_code_words():
    """The perfect one-error-correcting code of length 7 (16 words)."""
    words = []
    for x in range(128):
        syndrome = 0
        for i in range(7):
            if (x >> i) & 1:
                syndrome ^= i + 1
        if syndrome == 0:
            words.append(x)
    return words


def scheme_for(code):
    return Scheme(HAMMING, code.n)
