"""Upper-bound tables for constant-weight and split-weight code sizes.

CWProvider serves upper bounds on A(n, d, w) and on the split-weight quantity
T(w1, n1, w2, n2, d) with a strict precedence: user-loaded override entries,
then proven closed forms, then recursive/projection fallbacks.  Every value
comes back with a provenance string.  In strict mode a query that would fall
through to a recursion or projection raises MissingTableEntryError instead,
so that record reproduction fails loudly rather than silently degrading.

Override file format (text, comma separated)::

    A,n,d,w,value,source
    T,w1,n1,w2,n2,d,value,source

with '#' comments; duplicate keys within a load are rejected.
"""

from __future__ import annotations

from importlib import resources

from .schemes import binomial

_FALLBACK_SOURCES = ("johnson-recursion", "projection", "trivial-product")


class MissingTableEntryError(KeyError):
    """Strict mode: a bound would need a table entry that is not loaded."""

    def __init__(self, key):
        super().__init__(key)
        self.key = key

    def __str__(self):
        return "no table entry for %s (strict mode forbids fallback bounds)" % (self.key,)


class TableFormatError(ValueError):
    pass


def _canon_d(d):
    if d < 1:
        raise ValueError("distance must be positive")
    return d + (d & 1)  # constant-weight distances are even


class CWProvider:
    """Immutable-after-load provider of constant-weight upper bounds."""

    def __init__(self, strict=False, exact_t_cliques=False, clique_budget=5000):
        self.strict = strict
        self.exact_t_cliques = exact_t_cliques
        self.clique_budget = clique_budget
        self.overrides = {}
        self.t_overrides = {}
        self._entries = []  # (kind, key, value, source) in load order, for dump
        self._memo = {}

    # -- loading ---------------------------------------------------------

    def load(self, path):
        """Load an override file; later loads override earlier ones."""
        seen = set()
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                kind, rest = line.split(",", 1)
                kind = kind.strip()
                try:
                    if kind == "A":
                        n, d, w, value, source = self._split(rest, 4)
                        key = (n, _canon_d(d), w)
                        if ("A", key) in seen:
                            raise TableFormatError("duplicate A entry at %s line %d" % (path, lineno))
                        seen.add(("A", key))
                        self.overrides[key] = (value, source)
                        self._entries.append(("A", (n, d, w), value, source))
                    elif kind == "T":
                        w1, n1, w2, n2, d, value, source = self._split(rest, 6)
                        key = _t_canon(w1, n1, w2, n2, _canon_d(d))
                        if ("T", key) in seen:
                            raise TableFormatError("duplicate T entry at %s line %d" % (path, lineno))
                        seen.add(("T", key))
                        self.t_overrides[key] = (value, source)
                        self._entries.append(("T", (w1, n1, w2, n2, d), value, source))
                    else:
                        raise TableFormatError("unknown record kind %r at %s line %d" % (kind, path, lineno))
                except TableFormatError:
                    raise
                except ValueError as exc:
                    raise TableFormatError("bad line %d of %s: %s" % (lineno, path, exc)) from exc
        self._memo.clear()
        return self

    @staticmethod
    def _split(rest, numeric):
        parts = rest.split(",", numeric)
        if len(parts) != numeric + 1:
            raise ValueError("expected %d numeric fields then a source" % numeric)
        nums = [int(p) for p in parts[:numeric]]
        return (*nums, parts[-1].strip())

    def dump(self, fh):
        """Write every loaded entry back out, byte-preserving field values."""
        for kind, key, value, source in self._entries:
            fh.write("%s,%s,%d,%s\n" % (kind, ",".join(str(k) for k in key), value, source))

    # -- A(n, d, w) ------------------------------------------------------

    def cw_upper(self, n, d, w):
        """Upper bound on A(n, d, w) with provenance."""
        if not 0 <= w <= n:
            raise ValueError("need 0 <= w <= n")
        d = _canon_d(d)
        hit = self.overrides.get((n, d, w)) or self.overrides.get((n, d, n - w))
        if hit is not None:
            return hit[0], "table:" + hit[1]
        wc = min(w, n - w)
        if wc == 0:
            return 1, "closed:w=0"
        if d > 2 * wc:
            return 1, "closed:d>2w"
        if d <= 2:
            return binomial(n, wc), "closed:d<=2"
        if d == 2 * wc:
            return n // wc, "closed:d=2w"
        if d == 4 and wc == 3 and n % 12 == 10:
            return ((n - 1) ** 2 - 3) // 6, "closed:w3-mod12"
        if self.strict:
            raise MissingTableEntryError("A(%d,%d,%d)" % (n, d, w))
        return self._recursive(n, d, wc), "johnson-recursion"

    def _recursive(self, n, d, w):
        key = (n, d, w)
        if key in self._memo:
            return self._memo[key]
        inner, _src = self.cw_upper(n - 1, d, w - 1)
        value = (n * inner) // w
        self._memo[key] = value
        return value

    # -- T(w1, n1, w2, n2, d) ---------------------------------------------

    def t_upper(self, w1, n1, w2, n2, d):
        """Upper bound on the split-weight quantity T(w1,n1,w2,n2,d)."""
        if not (0 <= w1 <= n1 and 0 <= w2 <= n2):
            raise ValueError("need 0 <= w_i <= n_i")
        d = _canon_d(d)
        hit = self.t_overrides.get(_t_canon(w1, n1, w2, n2, d))
        if hit is not None:
            return hit[0], "table:" + hit[1]
        a1, a2 = min(w1, n1 - w1), min(w2, n2 - w2)
        if d > 2 * (a1 + a2):
            return 1, "closed:d>2(w1+w2)"
        if d <= 2:
            return binomial(n1, a1) * binomial(n2, a2), "closed:d<=2"
        if self.exact_t_cliques and binomial(n1, a1) * binomial(n2, a2) <= self.clique_budget:
            from .cliques import exact_T

            return exact_T(w1, n1, w2, n2, d, budget=self.clique_budget), "exact-clique"
        if self.strict:
            raise MissingTableEntryError("T(%d,%d,%d,%d,%d)" % (w1, n1, w2, n2, d))
        candidates = []
        if d - 2 * a2 >= 2:
            v, _src = self.cw_upper(n1, d - 2 * a2, a1)
            candidates.append((v, "projection:first-half"))
        if d - 2 * a1 >= 2:
            v, _src = self.cw_upper(n2, d - 2 * a1, a2)
            candidates.append((v, "projection:second-half"))
        candidates.append((binomial(n1, a1) * binomial(n2, a2), "trivial-product"))
        return min(candidates)

    # -- bookkeeping -------------------------------------------------------

    def is_fallback(self, provenance):
        return any(provenance.startswith(s) for s in _FALLBACK_SOURCES)


def _t_canon(w1, n1, w2, n2, d):
    """Canonical key under half-swap and within-half complement symmetries."""
    a = (min(w1, n1 - w1), n1)
    b = (min(w2, n2 - w2), n2)
    return (*min(a, b), *max(a, b), d)


def default_table_path():
    return resources.files("codebounds").joinpath("data/default_tables.csv")


def default_provider(strict=False, **kwargs):
    """Provider preloaded with the shipped table of certified entries."""
    provider = CWProvider(strict=strict, **kwargs)
    path = default_table_path()
    with resources.as_file(path) as real:
        provider.load(str(real))
    return provider


class RecordingProvider:
    """Wrapper that logs every served value so bound records can list their
    external inputs and be re-evaluated from them alone."""

    def __init__(self, inner):
        self.inner = inner
        self.inputs = {}

    @property
    def strict(self):
        return self.inner.strict

    def cw_upper(self, n, d, w):
        value, src = self.inner.cw_upper(n, d, w)
        self.inputs.setdefault("A(%d,%d,%d)" % (n, _canon_d(d), w), (value, src))
        return value, src

    def t_upper(self, w1, n1, w2, n2, d):
        value, src = self.inner.t_upper(w1, n1, w2, n2, d)
        self.inputs.setdefault("T(%d,%d,%d,%d,%d)" % (w1, n1, w2, n2, _canon_d(d)), (value, src))
        return value, src

    def recorded(self):
        return tuple((key, value, src) for key, (value, src) in self.inputs.items())

    def any_fallback(self):
        return any(self.inner.is_fallback(src) for _k, (_v, src) in self.inputs.items())


def provider_from_inputs(inputs):
    """Rebuild a provider that pins exactly the recorded inputs of a record."""
    provider = CWProvider(strict=False)
    for key, value, _src in inputs:
        kind = key[0]
        nums = [int(x) for x in key[key.index("(") + 1 : -1].split(",")]
        if kind == "A":
            n, d, w = nums
            provider.overrides[(n, _canon_d(d), w)] = (value, "pinned")
        else:
            w1, n1, w2, n2, d = nums
            provider.t_overrides[_t_canon(w1, n1, w2, n2, _canon_d(d))] = (value, "pinned")
    return provider
