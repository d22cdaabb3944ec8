"""
EPR pairs between two chosen parties
====================================

From level-2 hypergraph states one can also distill EPR pairs between a
fixed pair of vertices a and b.  The rate is 1/t where t is the length
of the longest path in a maximum family of edge-disjoint a-b paths; the
family itself is the protocol (entanglement swapping along each path).
"""

from ghzcert import cycle_hypergraph, epr_rate, path_hypergraph

# Endpoints of a path: a single chain of teleportations, rate 1.
p5 = path_hypergraph(5)
res = epr_rate(p5, 1, 5)
print(f"path_5 endpoints: t={res.t}, rate {res.rate} EPR per copy")
for p in res.paths:
    print("  path via edges", list(p))

# On a cycle there are two edge-disjoint routes between any two vertices,
# so two swapping chains run in parallel; the longer one sets t.
c4 = cycle_hypergraph(4)
for a, b in [(1, 3), (1, 2)]:
    res = epr_rate(c4, a, b)
    print(f"C_4 vertices {a},{b}: t={res.t}, rate {res.rate}")
    for p in res.paths:
        print("  path via edges", list(p))

# The triangle gives rate 1/2 for every pair: the direct edge plus the
# two-hop detour.
res = epr_rate(cycle_hypergraph(3), 1, 2)
print(f"K_3 vertices 1,2: t={res.t}, rate {res.rate}")
for p in res.paths:
    print("  path via edges", list(p))
