"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable ``DESSIN_NUMBA`` is not set to ``0``. Every public kernel takes an
optional ``backend`` argument (``"numba"`` or ``"numpy"``) so both paths can
be exercised and benchmarked side by side.

Permutations are 0-based ``int64`` image arrays here; the Python layer
converts from the 1-based labels.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a soft dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("DESSIN_NUMBA", "1") != "0"


def _resolve(backend):
    if backend is None:
        return "numba" if USE_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def default_backend() -> str:
    return _resolve(None)


def _njit(func):
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


@lru_cache(maxsize=None)
def all_permutations(n: int) -> np.ndarray:
    """All of S_n as an ``(n!, n)`` array in lexicographic order."""
    arr = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def _factorials(n: int) -> np.ndarray:
    return np.array([1] + list(itertools.accumulate(range(1, n + 1), lambda a, b: a * b)), dtype=np.int64)


# ---------------------------------------------------------------------------
# numba kernels


@_njit
def _nb_rank(p, fact):
    n = p.shape[0]
    r = 0
    for i in range(n):
        c = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                c += 1
        r += c * fact[n - 1 - i]
    return r


@_njit
def _nb_transitive(s, a):
    n = s.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    stack = np.empty(n, dtype=np.int64)
    seen[0] = True
    stack[0] = 0
    top = 1
    count = 1
    while top > 0:
        top -= 1
        i = stack[top]
        for j in (s[i], a[i]):
            if not seen[j]:
                seen[j] = True
                stack[top] = j
                top += 1
                count += 1
    return count == n


@_njit
def _nb_conjugate(p, g, out):
    for i in range(p.shape[0]):
        out[g[i]] = g[p[i]]


@_njit
def _nb_canonical_pair(s, a, perms):
    n = s.shape[0]
    best_s = s.copy()
    best_a = a.copy()
    cs = np.empty(n, dtype=np.int64)
    ca = np.empty(n, dtype=np.int64)
    for k in range(perms.shape[0]):
        g = perms[k]
        _nb_conjugate(s, g, cs)
        _nb_conjugate(a, g, ca)
        # lexicographic comparison of the concatenation (cs, ca)
        cmp = 0
        for i in range(n):
            if cs[i] != best_s[i]:
                cmp = -1 if cs[i] < best_s[i] else 1
                break
        if cmp == 0:
            for i in range(n):
                if ca[i] != best_a[i]:
                    cmp = -1 if ca[i] < best_a[i] else 1
                    break
        if cmp < 0:
            best_s[:] = cs
            best_a[:] = ca
    return best_s, best_a


@_njit
def _nb_enumerate(perms, fact, rows):
    N = perms.shape[0]
    n = perms.shape[1]
    visited = np.zeros(N * N, dtype=np.bool_)
    reps = []
    sizes = []
    cs = np.empty(n, dtype=np.int64)
    ca = np.empty(n, dtype=np.int64)
    for si in rows:
        for ai in range(N):
            if visited[si * N + ai]:
                continue
            s = perms[si]
            a = perms[ai]
            transitive = _nb_transitive(s, a)
            size = 0
            for k in range(N):
                g = perms[k]
                _nb_conjugate(s, g, cs)
                _nb_conjugate(a, g, ca)
                idx = _nb_rank(cs, fact) * N + _nb_rank(ca, fact)
                if not visited[idx]:
                    visited[idx] = True
                    size += 1
            if transitive:
                reps.append(si * N + ai)
                sizes.append(size)
    out = np.empty((len(reps), 2), dtype=np.int64)
    for k in range(len(reps)):
        out[k, 0] = reps[k]
        out[k, 1] = sizes[k]
    return out


@_njit
def _nb_associativity_failures(table):
    d = table.shape[0]
    bad = 0
    for x in range(d):
        for y in range(d):
            xy = table[x, y]
            for z in range(d):
                yz = table[y, z]
                left = -1 if xy < 0 else table[xy, z]
                right = -1 if yz < 0 else table[x, yz]
                if left != right:
                    bad += 1
    return bad


# ---------------------------------------------------------------------------
# numpy fallbacks


def _np_conjugate_all(p, perms):
    # out[k, g_k[i]] = g_k[p[i]]
    out = np.empty_like(perms)
    np.put_along_axis(out, perms, perms[:, p], axis=1)
    return out


def _np_ranks(ps, fact):
    n = ps.shape[1]
    inv = (ps[:, :, None] > ps[:, None, :]) & np.triu(np.ones((n, n), dtype=bool), 1)[None]
    codes = inv.sum(axis=2)
    return codes @ fact[n - 1 :: -1][:n]


def _np_transitive(s, a):
    n = len(s)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        i = stack.pop()
        for j in (s[i], a[i]):
            if not seen[j]:
                seen[j] = True
                stack.append(j)
    return bool(seen.all())


def _np_canonical_pair(s, a, perms):
    cs = _np_conjugate_all(s, perms)
    ca = _np_conjugate_all(a, perms)
    keys = np.concatenate([cs, ca], axis=1)
    order = np.lexsort(keys.T[::-1])
    best = keys[order[0]]
    n = len(s)
    return best[:n].copy(), best[n:].copy()


def _np_enumerate(perms, fact, rows):
    N = perms.shape[0]
    visited = np.zeros(N * N, dtype=bool)
    out = []
    for si in rows:
        row = visited[si * N : (si + 1) * N]
        s_ranks = None
        for ai in np.flatnonzero(~row):
            if visited[si * N + ai]:
                continue
            s = perms[si]
            a = perms[ai]
            transitive = _np_transitive(s, a)
            cs = _np_conjugate_all(s, perms)
            ca = _np_conjugate_all(a, perms)
            if s_ranks is None:
                s_ranks = _np_ranks(cs, fact)
            idx = np.unique(s_ranks * N + _np_ranks(ca, fact))
            fresh = idx[~visited[idx]]
            visited[fresh] = True
            if transitive:
                out.append((si * N + ai, len(fresh)))
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def _np_associativity_failures(table):
    d = table.shape[0]
    # append a zero element at index d that absorbs everything
    ext = np.full((d + 1, d + 1), d, dtype=np.int64)
    t = np.asarray(table, dtype=np.int64)
    ext[:d, :d] = np.where(t < 0, d, t)
    idx = np.arange(d + 1)
    xy = ext[:d, :d]
    left = ext[xy[:, :, None], idx[None, None, :d]]
    yz = ext[:d, :d]
    right = ext[idx[:d, None, None], yz[None, :, :]]
    return int(np.count_nonzero(left != right))


# ---------------------------------------------------------------------------
# dispatch


def canonical_pair(sigma0, alpha0, backend=None):
    """Lexicographically least ``(sigma, alpha)`` over all simultaneous conjugates.

    Brute force over every ``g`` in S_n; intended for n <= 7.
    """
    s = np.asarray(sigma0, dtype=np.int64)
    a = np.asarray(alpha0, dtype=np.int64)
    perms = all_permutations(len(s))
    if _resolve(backend) == "numba":
        return _nb_canonical_pair(s, a, perms)
    return _np_canonical_pair(s, a, perms)


def enumerate_transitive_pairs(n: int, backend=None, rows=None):
    """Canonical representatives of transitive pairs in S_n up to conjugation.

    Returns ``(reps, sizes)``: ``reps`` is an ``(m, 2, n)`` array of 0-based
    ``(sigma, alpha)`` images in increasing lexicographic order and ``sizes``
    the number of labelled pairs in each conjugacy class.

    ``rows`` restricts the search to pairs whose sigma has one of the given
    lexicographic ranks; it must be closed under conjugation (a union of
    cycle types) for the result to be complete on that slice.
    """
    perms = all_permutations(n)
    fact = _factorials(n)
    rows = np.arange(perms.shape[0], dtype=np.int64) if rows is None else np.asarray(rows, dtype=np.int64)
    rows = np.sort(rows)
    if _resolve(backend) == "numba":
        raw = _nb_enumerate(perms, fact, rows)
    else:
        raw = _np_enumerate(perms, fact, rows)
    N = perms.shape[0]
    si, ai = raw[:, 0] // N, raw[:, 0] % N
    reps = np.stack([perms[si], perms[ai]], axis=1)
    return reps, raw[:, 1].copy()


def associativity_failures(table, backend=None) -> int:
    """Count triples with ``(xy)z != x(yz)`` in a monomial multiplication table.

    ``table[x, y]`` is the index of the basis element ``x*y`` or ``-1`` for zero.
    """
    t = np.ascontiguousarray(table, dtype=np.int64)
    if _resolve(backend) == "numba":
        return int(_nb_associativity_failures(t))
    return _np_associativity_failures(t)


def is_transitive(sigma0, alpha0, backend=None) -> bool:
    s = np.asarray(sigma0, dtype=np.int64)
    a = np.asarray(alpha0, dtype=np.int64)
    if _resolve(backend) == "numba":
        return bool(_nb_transitive(s, a))
    return _np_transitive(s, a)
