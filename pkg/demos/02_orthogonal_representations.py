"""
Orthogonal representations of line graphs
=========================================

The protocol construction needs, for each hyperedge, an integer vector
c_e in dimension d = |E| - lambda(H), such that vectors of disjoint
edges are orthogonal and the family is in general position.  These are
orthogonal representations of the complement of the line graph, found
here by seeding a vector per edge and running a single orthogonalizing
sweep.
"""

from fractions import Fraction

from ghzcert import (
    cycle_hypergraph,
    edge_connectivity,
    find_gpor,
    graph,
    line_graph,
    orthogonalize_map,
    verify_orthrep,
)

# C_4: four edges, lambda = 2, so the vectors live in dimension 2.
c4 = cycle_hypergraph(4)
lam = edge_connectivity(c4)
d = c4.l - lam
rep = find_gpor(line_graph(c4), d, seed=0)
print(f"C_4: lambda={lam}, d={d}")
for e, v in enumerate(rep.vectors):
    print(f"  c[{e}] = {list(v)}")

# Opposite edges of the cycle are disjoint; their vectors multiply to zero.
print("c0 . c2 =", sum(a * b for a, b in zip(rep.vectors[0], rep.vectors[2])))
print("c1 . c3 =", sum(a * b for a, b in zip(rep.vectors[1], rep.vectors[3])))

# The verifier replays orthogonality, general position, and nonzeroness.
report = verify_orthrep(rep)
print("verified:", report.ok)

# The sweep itself is usable directly: project each vertex's vector away
# from the span of earlier non-neighbors.  One pass is enough, and reps
# that already verify do not move.
g = graph(3, [(0, 1), (1, 2)])  # a path; 0 and 2 are non-adjacent
f = {0: (Fraction(1), Fraction(0)), 1: (Fraction(1), Fraction(1)), 2: (Fraction(1), Fraction(1))}
out = orthogonalize_map(g, f)
print("sweep:", {v: tuple(str(x) for x in vec) for v, vec in out.items()})
print("0 . 2 after sweep:", sum(a * b for a, b in zip(out[0], out[2])))
