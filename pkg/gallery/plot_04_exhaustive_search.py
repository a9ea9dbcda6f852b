"""
Exhaustive search over small graphs
===================================

Scan every labeled graph up to a few vertices and count the ones whose
e-expansion has a negative coefficient.
"""

from chromsym.graph import parse_edge_list
from chromsym.search import search

# all graphs on at most 4 vertices; only the labeled claws fail
for totals in search(4):
    print(totals.n, totals.checked, totals.positive, totals.negative)

(four,) = search(4, min_n=4)
for text in four.negatives:
    print(parse_edge_list(text).edges())

# co-triangle-free graphs never fail
for totals in search(6, "co-triangle-free"):
    print("co-triangle-free", totals.n, totals.in_class, totals.negative)

# connected 2K2-free unit interval graphs, each certified by the classifier
for totals in search(6, "2k2-unit-interval", connected=True, workers=2):
    print("2k2-unit-interval", totals.n, totals.in_class, totals.certified, totals.negative)

# the same numbers from the shell:
#   cst search --max-n 6 --class 2k2-unit-interval --connected --workers 4
