"""Exact stable-set machinery: alpha, critical edges, critical subgraphs,
the deleted-vertex critical graph, and the peeling construction.

alpha(g) is branch and bound over availability bitmasks: branch on a vertex of
maximum remaining degree (exclude it, or include it and drop its closed
neighborhood), seeded with a greedy lower bound and pruned with the
degree-based bound alpha <= |R| - ceil(m_R / Delta_R). Once the remainder has
maximum degree <= 2 it is a disjoint union of paths and cycles and is scored
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Edge,
    Graph,
    GraphError,
    SizeLimitError,
    VertexSet,
    delete_edge,
    delete_vertex,
    is_connected,
    iter_bits,
)

ALL_STABLE_MAX_N = 16


class CriticalityError(GraphError):
    """An operation required an alpha-critical connected input and did not get one."""


class EquationMismatchError(RuntimeError):
    """The two constructions of the deleted-vertex critical graph disagreed.

    This would falsify the identity they restate; it exists to fail loudly.
    """


@dataclass(frozen=True)
class CriticalEdgeSet:
    host: Graph
    edges: frozenset[Edge]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class StableSetCertificate:
    host: Graph
    set: VertexSet
    claimed_alpha: int

    def __post_init__(self):
        bits = self.set.bits
        if bits & ~self.host.vertex_mask():
            raise GraphError("stable-set certificate names vertices outside the host")
        for v in iter_bits(bits):
            if self.host.adj[v] & bits:
                raise GraphError(f"claimed stable set contains the edge at vertex {v}")
        if len(self.set) != self.claimed_alpha:
            raise GraphError(f"certificate size {len(self.set)} != claimed alpha {self.claimed_alpha}")


def _greedy_stable(adj: tuple[int, ...], avail: int) -> int:
    count = 0
    while avail:
        best_v, best_d = -1, 99
        for v in iter_bits(avail):
            d = (adj[v] & avail).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        count += 1
        avail &= ~(adj[best_v] | 1 << best_v)
    return count


def _alpha_paths_cycles(adj: tuple[int, ...], avail: int) -> int:
    # every component here is a path, cycle, or isolated vertex
    total = 0
    left = avail
    while left:
        comp = left & -left
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            frontier = grow & left & ~comp
            comp |= frontier
        k = comp.bit_count()
        deg_sum = sum((adj[v] & comp).bit_count() for v in iter_bits(comp))
        total += k // 2 if deg_sum == 2 * k else (k + 1) // 2
        left &= ~comp
    return total


def _alpha_mask(adj: tuple[int, ...], full: int) -> int:
    if full == 0:
        return 0
    best = _greedy_stable(adj, full)

    def rec(avail: int, count: int):
        nonlocal best
        pc = avail.bit_count()
        if count + pc <= best:
            return
        deg_sum = 0
        v, maxdeg = -1, -1
        for u in iter_bits(avail):
            d = (adj[u] & avail).bit_count()
            deg_sum += d
            if d > maxdeg:
                v, maxdeg = u, d
        if maxdeg <= 2:
            total = count + _alpha_paths_cycles(adj, avail)
            if total > best:
                best = total
            return
        # alpha(R) <= |R| - ceil(m/Delta): any stable set misses a vertex cover
        if count + pc - (deg_sum // 2 + maxdeg - 1) // maxdeg <= best:
            return
        rec(avail & ~(adj[v] | 1 << v), count + 1)
        rec(avail & ~(1 << v), count)

    rec(full, 0)
    return best


@lru_cache(maxsize=1 << 16)
def alpha(g: Graph) -> int:
    """Maximum stable-set size, exact."""
    return _alpha_mask(g.adj, g.vertex_mask())


def all_max_stable_sets(g: Graph) -> list[VertexSet]:
    """Every maximum stable set, as bitmask values in increasing order."""
    if g.n > ALL_STABLE_MAX_N:
        raise SizeLimitError(f"exhaustive stable-set scan capped at n={ALL_STABLE_MAX_N}, got {g.n}")
    target = alpha(g)
    out = []
    for bits in range(1 << g.n):
        if bits.bit_count() != target:
            continue
        if any(g.adj[v] & bits for v in iter_bits(bits)):
            continue
        out.append(VertexSet(bits))
    return out


def critical_edges(g: Graph) -> CriticalEdgeSet:
    """Edges whose deletion raises alpha."""
    base = alpha(g)
    crit = frozenset(e for e in g.edges() if alpha(delete_edge(g, e)) > base)
    return CriticalEdgeSet(host=g, edges=crit)


def is_alpha_critical(g: Graph) -> bool:
    """True iff deleting any single edge raises alpha; edgeless graphs qualify."""
    base = alpha(g)
    for e in g.edges():
        if alpha(delete_edge(g, e)) == base:
            return False
    return True


def critical_subgraph(g: Graph) -> Graph:
    """Alpha-preserving alpha-critical spanning subgraph.

    Deletes the lexicographically smallest currently non-critical edge until
    every remaining edge is critical. Keeps all critical edges of g.
    """
    current = g
    base = alpha(g)
    while True:
        for e in sorted(current.edges()):
            if alpha(delete_edge(current, e)) == base:
                current = delete_edge(current, e)
                break
        else:
            return current


def critical_edges_avoiding(g: Graph, u: int) -> frozenset[Edge]:
    """Critical edges e of g such that some maximum stable set of g - e misses u.

    The existential is evaluated by exhaustive stable-set enumeration, kept
    deliberately separate from the branch-and-bound path.
    """
    g._check_vertex(u)
    out = []
    for e in critical_edges(g).sorted_edges():
        reduced = delete_edge(g, e)
        if any(u not in s for s in all_max_stable_sets(reduced)):
            out.append(e)
    return frozenset(out)


def g_minus_c(g: Graph, u: int) -> Graph:
    """The graph on V(g - u) whose edges are the critical edges of g - u.

    Requires g connected and alpha-critical with at least 2 vertices, so that
    alpha(g - u) = alpha(g). The result is cross-checked against the
    characterization via critical edges of g with a maximum stable set of
    g - e avoiding u; a mismatch raises EquationMismatchError.
    """
    g._check_vertex(u)
    if g.n < 2:
        raise CriticalityError("needs at least 2 vertices: deleting the only vertex changes alpha")
    if not is_connected(g):
        raise CriticalityError("input graph is not connected")
    if not is_alpha_critical(g):
        raise CriticalityError("input graph is not alpha-critical")
    reduced, vmap = delete_vertex(g, u)
    crit = critical_edges(reduced).edges
    alt = critical_edges_avoiding(g, u)
    back = frozenset(Edge(vmap[e.u], vmap[e.v]) for e in crit)
    if back != alt:
        raise EquationMismatchError(
            f"critical edges of g-{u} disagree with the avoiding-set characterization: "
            f"{sorted(back)} vs {sorted(alt)}"
        )
    return Graph.from_edges(reduced.n, crit)


def peel_max_stable_set(g: Graph) -> StableSetCertificate:
    """Delete the smallest vertex whose removal keeps alpha, until none exists.

    The survivors are a maximum stable set of g.
    """
    target = alpha(g)
    current = g
    labels = tuple(range(g.n))
    while True:
        base = alpha(current)
        for v in range(current.n):
            reduced, vmap = delete_vertex(current, v)
            if alpha(reduced) == base:
                current = reduced
                labels = tuple(labels[old] for old in vmap)
                break
        else:
            break
    return StableSetCertificate(host=g, set=VertexSet.of(labels), claimed_alpha=target)
