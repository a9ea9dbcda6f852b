from itertools import combinations, product

import pytest

from chromsym.graph import Graph


def all_graphs(n):
    """Every labeled graph on n vertices, indexed by edge subsets."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_01_count(rows, cols):
    """Count 0/1 matrices by listing every matrix of the right shape."""
    rows, cols = list(rows), list(cols)
    total = 0
    for cells in product((0, 1), repeat=len(rows) * len(cols)):
        mat = [cells[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
        if [sum(r) for r in mat] == rows and [sum(c) for c in zip(*mat)] == cols:
            total += 1
    return total


def brute_elementary_monomial(lam, mu):
    """Coefficient of x^mu in e_lam, expanding the product in len(mu) variables."""
    k = len(mu)
    poly = {(0,) * k: 1}
    for part in lam:
        nxt = {}
        for subset in combinations(range(k), part):
            for expo, c in poly.items():
                e = list(expo)
                for j in subset:
                    e[j] += 1
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c
        poly = nxt
    return poly.get(tuple(mu), 0)


def brute_has_path_avoiding(g, a, b, banned):
    """DFS over simple paths from a to b that never touch `banned`."""
    stack = [(a, {a})]
    while stack:
        v, seen = stack.pop()
        if v == b:
            return True
        for u in g.neighbors(v):
            if u not in seen and u not in banned:
                stack.append((u, seen | {u}))
    return False


def brute_asteroidal_triples(g):
    out = []
    for x, y, z in combinations(range(g.n), 3):
        if g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z):
            continue
        ok = True
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            if not brute_has_path_avoiding(g, a, b, set(g.neighbors(c)) | {c}):
                ok = False
                break
        if ok:
            out.append((x, y, z))
    return out


@pytest.fixture
def case_five_at_graph():
    """Case-5 shape with A1, A2 both nonempty: p=0, x=1, y=2, w=3, A1={4}, A2={5}, A3={6}.

    {p, x, y} is then an asteroidal triple.
    """
    return Graph(7, [
        (0, 4), (0, 5), (4, 5),
        (3, 1), (3, 2), (3, 4), (3, 5), (3, 6),
        (1, 4), (1, 6), (4, 6),
        (2, 5), (2, 6), (5, 6),
    ])
