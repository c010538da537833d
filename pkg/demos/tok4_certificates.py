"""Finding and checking totally odd K4-subdivisions.

A certificate names four branch vertices and six internally disjoint paths,
every path of odd length. verify_tok4 re-checks all of that from scratch, so
a certificate is portable evidence, not a trust-me flag.
"""

from alphacrit.graphs import Graph, complete_graph, cycle_graph, delete_vertex, to_graph6
from alphacrit.stability import alpha, is_alpha_critical
from alphacrit.subdivisions import find_tok4, verify_tok4


def subdivide(g, u, v, times):
    """Replace edge uv by a path with `times` fresh interior vertices."""
    edges = [(e.u, e.v) for e in g.edges() if (e.u, e.v) != (min(u, v), max(u, v))]
    inner = list(range(g.n, g.n + times))
    chain = [u] + inner + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + times, edges)


print("== the smallest case: K4 itself ==")
k4 = complete_graph(4)
cert = find_tok4(k4)
print(f"find_tok4(K4) -> branch {cert.branch}, all six paths single edges")
print(f"verify_tok4 agrees: {verify_tok4(k4, cert)}")
print()

print("== subdividing keeps it totally odd only in even steps ==")
once = subdivide(k4, 0, 1, 1)   # path of length 2: even, parity broken
twice = subdivide(k4, 0, 1, 2)  # path of length 3: odd again
print(f"one new vertex on edge (0,1):  contains TOK4? {find_tok4(once) is not None}")
cert = find_tok4(twice)
print(f"two new vertices on edge (0,1): contains TOK4? {cert is not None}")
print(f"  the long way around: path ab = {cert.to_obj()['paths']['ab']}")
print()

print("== a certificate is checkable without the search ==")
bad = cert.to_obj()
host = twice
print(f"tampering with the certificate: drop the last path vertex")
from alphacrit.subdivisions import PAIR_KEYS, Tok4Certificate

paths = [list(bad["paths"][k]) for k in PAIR_KEYS]
paths[0] = paths[0][:-1]
try:
    mangled = Tok4Certificate(branch=tuple(bad["branch"]),
                              paths=tuple(tuple(p) for p in paths))
    print(f"  verify_tok4 says: {verify_tok4(host, mangled)}")
except Exception as exc:
    print(f"  rejected outright: {exc}")
print()

print("== exactly two of three deletions, live ==")
# the n=7 witness: alpha-critical, one triangle up to symmetry, and deleting
# its corners gives TOK4, TOK4, nothing
w = Graph.from_edges(7, [(0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 6),
                         (2, 3), (2, 6), (3, 5), (4, 5), (4, 6)])
print(f"witness {to_graph6(w)}: alpha={alpha(w)}, alpha-critical={is_alpha_critical(w)}")
for x in (0, 4, 5):
    reduced, _ = delete_vertex(w, x)
    cert = find_tok4(reduced)
    if cert is None:
        print(f"  delete {x}: no TOK4 anywhere in the remainder")
    else:
        assert verify_tok4(reduced, cert)
        print(f"  delete {x}: TOK4 with branch {cert.branch}")
print()
print("So 'at least two deletions' is the most the triangle statement can")
print("promise: this graph refuses the third.")

print()
print("== odd cycles never contain one ==")
for k in (5, 7, 9):
    print(f"  C{k}: {find_tok4(cycle_graph(k)) is not None}")
