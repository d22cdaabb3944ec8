"""
Twelve GHZ levels from three GHZ_4 pairs
========================================

The classic degeneration: three parties on a triangle, each pair sharing
a GHZ_4, can reach a single GHZ_12 by local diagonal operators whose
exponents are the local shares of ||i0 + i1 + i2 - g||^2.  Terms with
positive exponent vanish as eps -> 0; the 12 grid points with
i0 + i1 + i2 = 4 survive with exponent zero.
"""

from ghzcert import (
    apply_local_diagonal,
    build_exponent_assignment,
    check_ghz_structure,
    choose_g,
    cycle_hypergraph,
    dump,
    enumerate_solutions,
    find_gpor,
    ghz_state,
    leading_term,
    line_graph,
)

k3 = cycle_hypergraph(3)
n = 4

# All three edge vectors are the scalar 1, so c . i = i0 + i1 + i2.
rep = find_gpor(line_graph(k3), d=1, seed=0)
print("c =", [list(v) for v in rep.vectors])

# Pick g to maximize the number of grid points with c . i = g.
g, m = choose_g(rep, n)
print(f"g = {g[0]}, M = {m} solutions out of {n ** 3} grid points")
sols = enumerate_solutions(rep, n, g)
print("solutions:", sols)

# Split the quadratic into per-vertex shares; every monomial i_e * i_f
# lands on a vertex both edges touch, so each party only needs to read
# its own labels.
qa = build_exponent_assignment(k3, rep, g)
for j in (1, 2, 3):
    print(f"vertex {j}: quad={qa.quad[j - 1]} lin={qa.lin[j - 1]} const={qa.const[j - 1]}")

# Apply the diagonal eps-power operators and let eps -> 0.
t = ghz_state(k3, n)
print("start:", len(t.entries), "terms")
for j in (1, 2, 3):
    t = apply_local_diagonal(t, j, qa.site_function(k3, j))
lead = leading_term(t)
print("leading term:", len(lead.entries), "terms")

# Every site sees each of its labels exactly once, so this is a GHZ_12
# up to local diagonal rescaling.
print("GHZ levels:", check_ghz_structure(lead))
print()
print(dump(lead))
