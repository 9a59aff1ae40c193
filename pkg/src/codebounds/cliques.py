"""Ground-truth packing numbers by exact maximum-clique search.

Vertices are binary words (optionally weight- or split-weight-restricted) and
two words are compatible when their Hamming distance is at least d; the
maximum clique of the compatibility graph is then exactly A(n, d),
A(n, d, w) or T(w1, n1, w2, n2, d).  Desk scale only: budgets guard the
vertex counts, and the search is a deterministic suffix-incremental branch
and bound with a greedy colouring bound.

The distance graphs are vertex transitive (coordinate permutations act on
weight classes, translations act on the full space), so the top-level searches
fix one canonical codeword per orbit and recurse on its neighbourhood; this
is an exact reduction, not a heuristic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

_HARD_VERTEX_CEILING = 20000
_POPCOUNT16 = None


class BudgetError(ValueError):
    """A requested instance exceeds the configured search budget."""


@dataclass
class CompatGraph:
    """Words plus bitset adjacency: bit u of adjacency[v] means d(word_u, word_v) >= d."""

    words: list
    adjacency: list


def _popcount_table():
    global _POPCOUNT16
    if _POPCOUNT16 is None:
        _POPCOUNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    return _POPCOUNT16


def build_graph(words, d):
    """Compatibility graph over words (ints) with threshold distance d."""
    m = len(words)
    arr = np.asarray(words, dtype=np.int64)
    lut = _popcount_table()
    adjacency = []
    block = max(1, (1 << 22) // max(m, 1))
    for start in range(0, m, block):
        x = arr[start : start + block, None] ^ arr[None, :]
        dist = lut[x & 0xFFFF].astype(np.int16)
        dist += lut[(x >> 16) & 0xFFFF]
        dist += lut[(x >> 32) & 0xFFFF]
        ok = dist >= d
        for r in range(ok.shape[0]):
            row = ok[r].copy()
            row[start + r] = False
            adjacency.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return CompatGraph(list(words), adjacency)


def greedy_clique(graph):
    """Deterministic greedy clique in vertex order."""
    chosen = []
    allowed = (1 << len(graph.words)) - 1
    while allowed:
        v = (allowed & -allowed).bit_length() - 1
        chosen.append(v)
        allowed &= graph.adjacency[v]
    return chosen


def max_clique(graph):
    """Exact maximum clique size by suffix-incremental branch and bound.

    suffix[i] is the exact clique number of the subgraph on vertices i..m-1,
    computed for i = m-1 down to 0; it can grow by at most one per step, so
    each root search stops at the first improving clique.  Inside the tree,
    candidates are branched in descending greedy-colour order, which turns
    the colour count into a prune for the whole remaining tail.

    A JIT-compiled kernel carries the identical algorithm when numba is
    importable; the pure-Python big-int version is the fallback.
    """
    m = len(graph.words)
    if m == 0:
        return 0
    kernel = _jit_kernel()
    if kernel is not None:
        words = (m + 63) // 64
        adj = np.zeros((m, words), dtype=np.uint64)
        for v, mask in enumerate(graph.adjacency):
            for wi in range(words):
                adj[v, wi] = (mask >> (64 * wi)) & 0xFFFFFFFFFFFFFFFF
        return int(kernel(adj, m))
    return _max_clique_python(graph)


def _max_clique_python(graph):
    adjacency = graph.adjacency
    m = len(graph.words)
    suffix = [0] * (m + 1)
    full = (1 << m) - 1
    # complement adjacency without the self bit, for the colouring sweeps
    notadj = [(full ^ a) & ~(1 << v) for v, a in enumerate(adjacency)]
    state = [0, False]  # best, found

    def extend(candidates, size):
        if not candidates:
            if size > state[0]:
                state[0] = size
                state[1] = True
            return
        if size + candidates.bit_count() <= state[0]:
            return
        vmin = (candidates & -candidates).bit_length() - 1
        if size + suffix[vmin] <= state[0]:
            return
        order = []
        colors = []
        append_o = order.append
        append_c = colors.append
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                append_o(v)
                append_c(color)
                avail &= notadj[v]
                uncolored ^= low
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= state[0]:
                return
            v = order[idx]
            rest = candidates & adjacency[v]
            if rest:
                extend(rest, size + 1)
            elif size + 1 > state[0]:
                state[0] = size + 1
                state[1] = True
            if state[1]:
                return
            candidates &= ~(1 << v)

    for i in range(m - 1, -1, -1):
        state[0] = suffix[i + 1]
        state[1] = False
        later = full ^ ((1 << (i + 1)) - 1)
        extend(adjacency[i] & later, 1)
        suffix[i] = suffix[i + 1] + 1 if state[1] else suffix[i + 1]
    return suffix[0]


_KERNEL = None
_KERNEL_TRIED = False


def _jit_kernel():
    global _KERNEL, _KERNEL_TRIED
    if _KERNEL_TRIED:
        return _KERNEL
    _KERNEL_TRIED = True
    try:
        from numba import njit
    except ImportError:
        return None

    debruijn = np.uint64(0x03F79D71B4CB0A89)
    ctz_table = np.zeros(64, dtype=np.int32)
    for shift in range(64):
        slot = (((1 << shift) * 0x03F79D71B4CB0A89) & 0xFFFFFFFFFFFFFFFF) >> 58
        ctz_table[slot] = shift

    @njit(cache=True)
    def kernel(adj, m):  # pragma: no cover - exercised through max_clique
        words = adj.shape[1]
        one = np.uint64(1)
        zero = np.uint64(0)
        m5 = np.uint64(0x5555555555555555)
        m3 = np.uint64(0x3333333333333333)
        mf = np.uint64(0x0F0F0F0F0F0F0F0F)
        m1 = np.uint64(0x0101010101010101)
        suffix = np.zeros(m + 2, dtype=np.int32)
        max_depth = m + 2
        cand = np.zeros((max_depth, words), dtype=np.uint64)
        order = np.zeros((max_depth, m), dtype=np.int32)
        colors = np.zeros((max_depth, m), dtype=np.int32)
        cursor = np.zeros(max_depth, dtype=np.int32)
        scratch = np.zeros(words, dtype=np.uint64)
        avail = np.zeros(words, dtype=np.uint64)
        for root in range(m - 1, -1, -1):
            best = suffix[root + 1]
            found = False
            # candidates: neighbours of root with index above root
            empty = True
            for wi in range(words):
                cand[0, wi] = adj[root, wi]
            base = (root + 1) // 64
            for wi in range(base):
                cand[0, wi] = zero
            rem = (root + 1) % 64
            if rem:
                cand[0, base] &= ~((one << np.uint64(rem)) - one)
            for wi in range(words):
                if cand[0, wi]:
                    empty = False
            depth = 0
            if not empty:
                entered = True
                cursor[0] = -2
            else:
                entered = False
                if 1 > best:
                    best = 1
                    found = True
            while entered and depth >= 0:
                size = depth + 1
                if cursor[depth] == -2:
                    # fresh frame: prune checks + colour sort
                    total = 0
                    vmin = -1
                    for wi in range(words):
                        x = cand[depth, wi]
                        if x and vmin < 0:
                            low = x & (~x + one)
                            vmin = 64 * wi + ctz_table[(low * debruijn) >> np.uint64(58)]
                        x = x - ((x >> one) & m5)
                        x = (x & m3) + ((x >> np.uint64(2)) & m3)
                        x = (x + (x >> np.uint64(4))) & mf
                        total += int((x * m1) >> np.uint64(56))
                    if size + total <= best or size + suffix[vmin] <= best:
                        depth -= 1
                        continue
                    cnt = 0
                    color = 0
                    for wi in range(words):
                        scratch[wi] = cand[depth, wi]
                    for wi in range(words):
                        while scratch[wi]:
                            color += 1
                            for wj in range(wi, words):
                                avail[wj] = scratch[wj]
                            for wj in range(wi, words):
                                x = avail[wj]
                                while x:
                                    low = x & (~x + one)
                                    v = 64 * wj + ctz_table[(low * debruijn) >> np.uint64(58)]
                                    order[depth, cnt] = v
                                    colors[depth, cnt] = color
                                    cnt += 1
                                    scratch[wj] &= ~low
                                    x &= ~low
                                    for wk in range(wj, words):
                                        avail[wk] &= ~adj[v, wk]
                                    x &= avail[wj]
                    cursor[depth] = cnt - 1
                idx = cursor[depth]
                if idx < 0 or size + colors[depth, idx] <= best:
                    depth -= 1
                    continue
                v = order[depth, idx]
                child_empty = True
                for wi in range(words):
                    cand[depth + 1, wi] = cand[depth, wi] & adj[v, wi]
                    if cand[depth + 1, wi]:
                        child_empty = False
                cand[depth, v // 64] &= ~(one << np.uint64(v % 64))
                cursor[depth] = idx - 1
                if child_empty:
                    if size + 1 > best:
                        best = size + 1
                        found = True
                        break
                else:
                    cursor[depth + 1] = -2
                    depth += 1
            if found:
                suffix[root] = suffix[root + 1] + 1
            else:
                suffix[root] = suffix[root + 1]
        return suffix[0]

    _KERNEL = kernel
    return _KERNEL


def _check_budget(count, budget, ceiling=_HARD_VERTEX_CEILING):
    if budget > ceiling:
        raise BudgetError("budget %d above hard ceiling %d" % (budget, ceiling))
    if count > budget:
        raise BudgetError("instance needs %d vertices, budget is %d" % (count, budget))


def _neighbourhood_words(words, rep, d):
    lut = _popcount_table()
    arr = np.asarray(words, dtype=np.int64) ^ np.int64(rep)
    dist = lut[arr & 0xFFFF].astype(np.int16)
    dist += lut[(arr >> 16) & 0xFFFF]
    dist += lut[(arr >> 32) & 0xFFFF]
    keep = np.nonzero(dist >= d)[0]
    return [words[int(i)] for i in keep]


def exact_A(n, d, budget=512):
    """Exact A(n, d) for word-enumeration scale n.

    Odd distances are converted to even ones on the parity-extended length
    (an exact identity).  Translations then fix one codeword to zero;
    coordinate permutations fix the minimum-weight second codeword to a
    prefix word, and the next-lightest third codeword to one canonical word
    per overlap pattern.  Each step peels a clique level off exactly.
    """
    _check_budget(2 ** n, budget, ceiling=1 << 16)
    if d > n:
        return 1
    if d <= 1:
        return 2 ** n
    if d % 2:
        n, d, even_only = n + 1, d + 1, True
    else:
        even_only = False
    step = 2 if even_only else 1
    space = [x for x in range(2 ** n) if not (even_only and x.bit_count() % 2)]
    best = 2  # the zero word and a weight-d word
    for k in range(d, n + 1, step):
        rep = (1 << k) - 1
        # codewords besides 0 and rep have weight >= k; the lightest of them,
        # weight l with a ones inside rep, is canonical per (l, a)
        for l in range(k, n + 1, step):
            for a in range(max(0, k + l - n), min(k, l) + 1):
                if k + l - 2 * a < d:
                    continue
                z = ((1 << a) - 1) | (((1 << (l - a)) - 1) << k)
                words = [x for x in space if x.bit_count() >= l]
                words = _neighbourhood_words(words, rep, d)
                words = _neighbourhood_words(words, z, d)
                best = max(best, 3 + max_clique(build_graph(words, d)))
    return best


def exact_cw(n, d, w, budget=5000):
    """Exact A(n, d, w) by maximum clique over the weight-w words.

    The weight-w words are a single orbit under coordinate permutations, so
    the first codeword is fixed to a prefix word; the second is canonical per
    overlap count with the first.
    """
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    w = min(w, n - w)
    d = d + (d & 1)
    _check_budget(math.comb(n, w), budget)
    if w == 0:
        return 1
    if d > 2 * w:
        return 1
    rep = (1 << w) - 1
    base = [sum(1 << i for i in c) for c in itertools.combinations(range(n), w)]
    best = 1
    for a in range(max(0, 2 * w - n), w - d // 2 + 1):
        z = ((1 << a) - 1) | (((1 << (w - a)) - 1) << w)
        words = _neighbourhood_words(base, rep, d)
        words = _neighbourhood_words(words, z, d)
        best = max(best, 2 + max_clique(build_graph(words, d)))
    return best


def exact_T(w1, n1, w2, n2, d, budget=5000):
    """Exact T(w1, n1, w2, n2, d) by maximum clique over the split-weight words."""
    if not (0 <= w1 <= n1 and 0 <= w2 <= n2):
        raise ValueError("need 0 <= w_i <= n_i")
    d = d + (d & 1)
    _check_budget(math.comb(n1, w1) * math.comb(n2, w2), budget)
    if d > 2 * (min(w1, n1 - w1) + min(w2, n2 - w2)):
        return 1
    firsts = [sum(1 << i for i in c) for c in itertools.combinations(range(n1), w1)]
    seconds = [sum(1 << (n1 + i) for i in c) for c in itertools.combinations(range(n2), w2)]
    words = [a | b for a in firsts for b in seconds]
    rep = ((1 << w1) - 1) | (((1 << w2) - 1) << n1)
    words = _neighbourhood_words(words, rep, d)
    return 1 + max_clique(build_graph(words, d))
