"""Covers of V(G) by vertices, edges, and odd cycles.

Costs: a vertex or an edge costs 1, an odd cycle C costs (|C| - 1)/2. All
arithmetic uses doubled costs so everything stays integral. rho_tilde is an
exact subset DP; cover_from_theorem reads the cover off a critical subgraph,
which is the constructive content of the min-max equality for graphs with no
totally odd K4-subdivision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Edge,
    Graph,
    GraphError,
    SizeLimitError,
    components,
    iter_bits,
    mask_of,
)
from .stability import StableSetCertificate, alpha, critical_subgraph, peel_max_stable_set
from .subdivisions import Tok4Certificate, find_tok4

ODD_CYCLE_MAX_N = 10
RHO_MAX_N = 9


class CoverError(ValueError):
    """A cover family failed verification; `violation` tags the first bad invariant."""

    def __init__(self, violation: str, message: str):
        super().__init__(f"{violation}: {message}")
        self.violation = violation


class Tok4PresentError(GraphError):
    """The theorem-driven cover was asked for a graph containing a TOK4."""

    def __init__(self, certificate: Tok4Certificate):
        super().__init__("graph contains a totally odd K4-subdivision; no theorem cover exists")
        self.certificate = certificate


class TheoremViolationError(RuntimeError):
    """A critical-subgraph component was not a vertex, an edge, or an odd cycle.

    Raising this would falsify the structure theorem; it exists to fail loudly.
    """

    def __init__(self, message: str, component: Graph):
        super().__init__(message)
        self.component = component


@dataclass(frozen=True)
class CoverFamily:
    host: Graph
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    odd_cycles: tuple[tuple[int, ...], ...]
    doubled_cost: int

    def to_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[e.u, e.v] for e in self.edges],
            "odd_cycles": [list(c) for c in self.odd_cycles],
            "cost_times_2": self.doubled_cost,
        }


def verify_cover(g: Graph, f: CoverFamily) -> int:
    """Check all CoverFamily invariants against g; return the doubled cost."""
    if f.host != g:
        raise CoverError("host-mismatch", "family was built for a different graph")
    covered = 0
    for v in f.vertices:
        if not 0 <= v < g.n:
            raise CoverError("bad-vertex", f"vertex {v} outside range 0..{g.n - 1}")
        covered |= 1 << v
    for e in f.edges:
        if e.v >= g.n:
            raise CoverError("bad-edge", f"edge ({e.u},{e.v}) outside the vertex range")
        if not g.has_edge(e.u, e.v):
            raise CoverError("bad-edge", f"({e.u},{e.v}) is not an edge of the host")
        covered |= 1 << e.u | 1 << e.v
    for cyc in f.odd_cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise CoverError("non-cycle", f"{cyc} is not a simple cycle")
        if any(not 0 <= v < g.n for v in cyc):
            raise CoverError("non-cycle", f"{cyc} leaves the vertex range")
        for x, y in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            if not g.has_edge(x, y):
                raise CoverError("non-cycle", f"{cyc} misses the edge ({x},{y})")
        if len(cyc) % 2 == 0:
            raise CoverError("even-cycle", f"{cyc} has even length {len(cyc)}")
        covered |= mask_of(cyc)
    if covered != g.vertex_mask():
        missing = next(iter_bits(g.vertex_mask() & ~covered))
        raise CoverError("uncovered-vertex", f"vertex {missing} is not covered")
    doubled = 2 * len(f.vertices) + 2 * len(f.edges) + sum(len(c) - 1 for c in f.odd_cycles)
    if doubled != f.doubled_cost:
        raise CoverError("cost-mismatch", f"stored doubled cost {f.doubled_cost}, recomputed {doubled}")
    return doubled


def enumerate_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All odd cycles, one orientation each: smallest vertex first, smaller
    second entry than last entry. Sorted."""
    if g.n > ODD_CYCLE_MAX_N:
        raise SizeLimitError(f"odd-cycle enumeration capped at n={ODD_CYCLE_MAX_N}, got {g.n}")
    out: list[tuple[int, ...]] = []
    adj = g.adj
    for s in range(g.n):
        path = [s]
        above = ~((1 << (s + 1)) - 1)  # only vertices > s may appear after s

        def dfs(v: int, visited: int):
            for w in iter_bits(adj[v] & above & ~visited):
                path.append(w)
                if len(path) >= 3 and len(path) % 2 == 1 and adj[w] >> s & 1 and path[1] < path[-1]:
                    out.append(tuple(path))
                dfs(w, visited | 1 << w)
                path.pop()

        dfs(s, 1 << s)
    out.sort()
    return out


def rho_tilde(g: Graph) -> tuple[int, CoverFamily]:
    """Exact minimum doubled cover cost with one optimal family, by subset DP."""
    if g.n > RHO_MAX_N:
        raise SizeLimitError(f"cover DP capped at n={RHO_MAX_N}, got {g.n}")
    cycles = enumerate_odd_cycles(g)
    cyc_masks = [mask_of(c) for c in cycles]
    through: list[list[int]] = [[] for _ in range(g.n)]
    for idx, c in enumerate(cycles):
        for v in c:
            through[v].append(idx)
    memo: dict[int, int] = {0: 0}

    def solve(left: int) -> int:
        got = memo.get(left)
        if got is not None:
            return got
        v = (left & -left).bit_length() - 1
        best = 2 + solve(left & ~(1 << v))
        for u in iter_bits(g.adj[v]):
            cand = 2 + solve(left & ~(1 << v | 1 << u))
            if cand < best:
                best = cand
        for idx in through[v]:
            cand = (len(cycles[idx]) - 1) + solve(left & ~cyc_masks[idx])
            if cand < best:
                best = cand
        memo[left] = best
        return best

    total = solve(g.vertex_mask())

    # deterministic reconstruction: prefer vertex, then edges, then cycles
    verts: list[int] = []
    edges: list[Edge] = []
    cycs: list[tuple[int, ...]] = []
    left = g.vertex_mask()
    while left:
        v = (left & -left).bit_length() - 1
        here = memo[left]
        if memo[left & ~(1 << v)] + 2 == here:
            verts.append(v)
            left &= ~(1 << v)
            continue
        chosen = False
        for u in iter_bits(g.adj[v]):
            rest = left & ~(1 << v | 1 << u)
            if memo.get(rest, -1) + 2 == here:
                edges.append(Edge(v, u))
                left = rest
                chosen = True
                break
        if chosen:
            continue
        for idx in through[v]:
            rest = left & ~cyc_masks[idx]
            if memo.get(rest, -1) + (len(cycles[idx]) - 1) == here:
                cycs.append(cycles[idx])
                left = rest
                chosen = True
                break
        if not chosen:  # pragma: no cover - would mean the DP table is corrupt
            raise RuntimeError("cover reconstruction desynchronized from the DP table")
    family = CoverFamily(
        host=g,
        vertices=tuple(verts),
        edges=tuple(sorted(edges)),
        odd_cycles=tuple(cycs),
        doubled_cost=total,
    )
    verify_cover(g, family)
    return total, family


def _cycle_sequence(comp: Graph, vmap: tuple[int, ...]) -> tuple[int, ...]:
    # comp is a connected 2-regular graph: walk it starting at the smallest
    # original label, stepping first to its smaller-labeled neighbor
    start = 0  # comp labels are ordered by original label, so 0 maps to the min
    first = min(comp.neighbors(start), key=lambda x: vmap[x])
    seq = [start, first]
    while True:
        a, b = comp.neighbors(seq[-1])
        nxt = b if a == seq[-2] else a
        if nxt == start:
            break
        seq.append(nxt)
    return tuple(vmap[x] for x in seq)


def cover_from_theorem(g: Graph) -> CoverFamily:
    """Cover of cost alpha(g) read off the components of a critical subgraph.

    Only valid when g has no totally odd K4-subdivision; each component of the
    critical subgraph is then a vertex, an edge, or an odd cycle.
    """
    cert = find_tok4(g)
    if cert is not None:
        raise Tok4PresentError(cert)
    skeleton = critical_subgraph(g)
    verts: list[int] = []
    edges: list[Edge] = []
    cycs: list[tuple[int, ...]] = []
    for comp, vmap in components(skeleton):
        if comp.n == 1:
            verts.append(vmap[0])
        elif comp.n == 2 and comp.m == 1:
            edges.append(Edge(vmap[0], vmap[1]))
        elif comp.n % 2 == 1 and comp.m == comp.n and all(comp.degree(v) == 2 for v in range(comp.n)):
            cycs.append(_cycle_sequence(comp, vmap))
        else:
            raise TheoremViolationError(
                f"critical-subgraph component on vertices {vmap} is not a vertex, edge, or odd cycle",
                component=comp,
            )
    doubled = 2 * len(verts) + 2 * len(edges) + sum(len(c) - 1 for c in cycs)
    family = CoverFamily(
        host=g,
        vertices=tuple(verts),
        edges=tuple(sorted(edges)),
        odd_cycles=tuple(sorted(cycs)),
        doubled_cost=doubled,
    )
    verify_cover(g, family)
    if doubled != 2 * alpha(g):
        raise TheoremViolationError(
            f"theorem cover has doubled cost {doubled}, expected {2 * alpha(g)}",
            component=skeleton,
        )
    return family


def minmax_certificate(g: Graph) -> tuple[StableSetCertificate, CoverFamily]:
    """Matching stable set and cover: each certifies the other's optimality."""
    family = cover_from_theorem(g)
    stable = peel_max_stable_set(g)
    if 2 * stable.claimed_alpha != family.doubled_cost:  # pragma: no cover
        raise TheoremViolationError("stable set and theorem cover disagree on the optimum", component=g)
    return stable, family
