"""Slow, independent reference implementations the tests compare against.

Everything here is deliberately naive: exhaustive subset scans and
generate-and-test searches with no pruning, memoization, or shared code
paths with the library. Usable only at toy sizes, which is the point.
"""

from itertools import combinations, permutations

from alphacrit.graphs import Graph


def brute_alpha(g: Graph) -> int:
    """Largest stable set by scanning all 2^n vertex subsets."""
    best = 0
    for mask in range(1 << g.n):
        ok = True
        for v in range(g.n):
            if mask >> v & 1 and g.adj[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


def _odd_paths_between(g: Graph, x: int, y: int, pool: tuple[int, ...]):
    """All x..y paths with an odd number of edges whose interior comes from pool."""
    for r in range(len(pool) + 1):
        for interior in permutations(pool, r):
            seq = (x, *interior, y)
            if len(seq) % 2 != 0:
                continue  # even vertex count <=> odd edge count
            if all(g.adj[a] >> b & 1 for a, b in zip(seq, seq[1:])):
                yield seq


def brute_contains_tok4(g: Graph) -> bool:
    """Totally odd K4-subdivision test by trying every branch quadruple and
    every ordered choice of interior vertices for the six paths."""
    vertices = range(g.n)
    for quad in combinations(vertices, 4):
        a, b, c, d = quad
        rest = tuple(v for v in vertices if v not in quad)
        pairs = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]

        def assign(idx: int, pool: tuple[int, ...]) -> bool:
            if idx == len(pairs):
                return True
            x, y = pairs[idx]
            for path in _odd_paths_between(g, x, y, pool):
                remaining = tuple(v for v in pool if v not in path)
                if assign(idx + 1, remaining):
                    return True
            return False

        if assign(0, rest):
            return True
    return False


def brute_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every odd cycle, one orientation per cycle, by checking all circular
    arrangements of all vertex subsets."""
    found = set()
    for k in range(3, g.n + 1, 2):
        for subset in combinations(range(g.n), k):
            first = subset[0]
            for order in permutations(subset[1:]):
                seq = (first, *order)
                closed = all(g.adj[a] >> b & 1 for a, b in zip(seq, seq[1:]))
                if closed and g.adj[seq[-1]] >> first & 1:
                    found.add(min(seq, seq[0:1] + seq[:0:-1]))
    return sorted(found)


def brute_rho(g: Graph) -> int:
    """Doubled minimum cover cost by plain recursion over the lowest
    uncovered vertex, no memoization."""
    odd_cycles = brute_odd_cycles(g)
    full = (1 << g.n) - 1

    def rec(covered: int) -> int:
        if covered == full:
            return 0
        v = ((~covered) & -(~covered)).bit_length() - 1
        best = 2 + rec(covered | 1 << v)
        for u in range(g.n):
            if g.adj[v] >> u & 1:
                best = min(best, 2 + rec(covered | 1 << v | 1 << u))
        for cyc in odd_cycles:
            if v in cyc:
                cyc_mask = 0
                for w in cyc:
                    cyc_mask |= 1 << w
                best = min(best, len(cyc) - 1 + rec(covered | cyc_mask))
        return best

    return rec(0)
