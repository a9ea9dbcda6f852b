"""
Chromatic symmetric functions of small graphs
=============================================

Compute X_G for a few graphs and look at it in three bases.
"""

from chromsym import Graph, complete_graph, csf_e, csf_m, csf_mtilde, stable_partition_census
from chromsym.graph import build_pattern

# the claw: one centre joined to three leaves
claw = build_pattern("claw")
print(claw.edges())

# census of stable partitions, grouped by block sizes
census = stable_partition_census(claw)
for lam, count in census.counts.items():
    print(lam, count)

# the same data as augmented monomials, plain monomials and elementary functions
print(csf_mtilde(claw).render())
print(csf_m(claw).render())
f = csf_e(claw)
print(f.render())

# the claw is the smallest graph that is not e-positive
print("first negative term:", f.first_negative())

# complete graphs give n! e_n
for n in range(1, 6):
    print(n, csf_e(complete_graph(n)).render())

# any edge list works; here a 5-cycle
c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
print(csf_e(c5).render())
