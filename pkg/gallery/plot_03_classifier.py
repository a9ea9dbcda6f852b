"""
Certificates for 2K2-free unit interval graphs
==============================================

Every component gets a certificate: either it has no stable set of size
three, or it is a generalized bull under an explicit relabeling.
"""

from chromsym import Graph, build_gb, path_graph
from chromsym.theorems import ClassificationError, classify, find_structural_root

# a bull-shaped graph with its vertices shuffled
bull = build_gb(2, 1, 1)
perm = [4, 0, 5, 2, 1, 3]
shuffled = Graph(bull.n, [(perm[u], perm[v]) for u, v in bull.edges()])

result = classify(shuffled)
for cert in result.certificates:
    print(cert.variant.value, "case", cert.case, "root", cert.root)
    print("  layers", cert.layers)
    print("  GB params", cert.gb_params, "mapping", cert.mapping)
print(result.e_expansion.render())

# root and distance layers used by the case analysis
layers = find_structural_root(shuffled)
print(layers.root, layers.layers)

# a co-triangle-free shape: N(0) = {1, 2, 4} with a pendant 3 on vertex 1
g = Graph(5, [(0, 1), (0, 2), (0, 4), (1, 4), (2, 4), (1, 3)])
(cert,) = classify(g).certificates
print(cert.variant.value, cert.case, cert.structure)

# disconnected input: certificates per component, expansions multiply.
# two components with an edge each would contain 2K2, so the extra
# components here are isolated vertices
g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3)])
result = classify(g)
for cert in result.certificates:
    print(cert.vertices, cert.e_expansion.render())
print(result.e_expansion.render())

two = Graph(7, [(0, 1), (1, 2), (3, 4), (3, 5), (4, 5), (5, 6)])
try:
    classify(two)
except ClassificationError as exc:
    print("rejected:", exc.predicate, exc.witness)

# P5 contains 2K2, so it is outside the classifier's domain
try:
    classify(path_graph(5))
except ClassificationError as exc:
    print("rejected:", exc.predicate, exc.witness)
