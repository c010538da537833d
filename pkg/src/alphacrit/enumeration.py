"""Canonical forms and isomorphism-reduced enumeration of small connected graphs.

Canonical form: the lexicographically smallest upper-triangle adjacency
bitstring (row-major pair order) over all vertex orderings, found by plain
factorial search. Enumeration of connected graphs up to n = 7 dedupes all
2^C(n,2) labeled graphs by marking whole isomorphism orbits at once; the
permutation action on edge slots is precomputed as a numpy table so orbit
marking is a vectorized sum per class.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from itertools import permutations
from typing import Iterator

import numpy as np

from .graphs import Graph, SizeLimitError, is_connected, parse_graph6

CANONICAL_MAX_N = 9
ENUMERATE_MAX_N = 7


def _pairs_row_major(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(_pairs_row_major(n))}


def _graph_key(g: Graph) -> int:
    """Upper-triangle adjacency bits of g packed into an int, pair 0 as MSB."""
    key = 0
    for i, j in _pairs_row_major(g.n):
        key = key << 1 | (g.adj[i] >> j & 1)
    return key


def _graph_from_key(n: int, key: int) -> Graph:
    m = n * (n - 1) // 2
    rows = [0] * n
    for k, (i, j) in enumerate(_pairs_row_major(n)):
        if key >> (m - 1 - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def canonical_form(g: Graph) -> str:
    """Minimal adjacency bitstring over all n! orderings, prefixed by "n:"."""
    n = g.n
    if n > CANONICAL_MAX_N:
        raise SizeLimitError(f"canonical_form does factorial search; n={n} exceeds {CANONICAL_MAX_N}")
    m = n * (n - 1) // 2
    pairs = _pairs_row_major(n)
    best = None
    for perm in permutations(range(n)):
        key = 0
        for i, j in pairs:
            key = key << 1 | (g.adj[perm[i]] >> perm[j] & 1)
        if best is None or key < best:
            best = key
    if best is None or m == 0:
        return f"{n}:"
    return f"{n}:" + format(best, f"0{m}b")


@lru_cache(maxsize=None)
def _perm_bit_table(n: int) -> np.ndarray:
    """table[p, k] = bit value of the slot that pair k lands on under permutation p."""
    pairs = _pairs_row_major(n)
    index = _pair_index(n)
    m = len(pairs)
    perms = list(permutations(range(n)))
    table = np.zeros((len(perms), m), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            table[pi, k] = 1 << (m - 1 - index[(a, b)])
    return table


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    m = n * (n - 1) // 2
    table = _perm_bit_table(n)
    seen = np.zeros(1 << m, dtype=bool)
    canon_keys = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        cols = [k for k in range(m) if mask >> (m - 1 - k) & 1]
        keys = table[:, cols].sum(axis=1) if cols else np.zeros(len(table), dtype=np.int64)
        seen[keys] = True
        rep = _graph_from_key(n, int(keys.min()))
        if is_connected(rep):
            canon_keys.append(int(keys.min()))
    return tuple(_graph_from_key(n, key) for key in sorted(canon_keys))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Representatives are labeled canonically and stream in sorted canonical-form
    order. Bounded at n = 7; larger corpora come from graph6 files.
    """
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise SizeLimitError(
            f"built-in enumeration covers 1..{ENUMERATE_MAX_N}; for n={n} ingest a graph6 file instead"
        )
    yield from _connected_classes(n)


def connected_graphs_upto(n: int) -> Iterator[Graph]:
    """All built-in corpus graphs with 1..n vertices, smaller sizes first."""
    for k in range(1, n + 1):
        yield from enumerate_connected(k)


@lru_cache(maxsize=None)
def packaged_corpus(name: str) -> tuple[Graph, ...]:
    """Load a graph6 corpus shipped with the package (data/<name>.g6)."""
    path = resources.files("alphacrit").joinpath(f"data/{name}.g6")
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise SizeLimitError(f"packaged corpus data/{name}.g6 is missing") from None
    return tuple(parse_graph6(line) for line in text.splitlines() if line.strip())
