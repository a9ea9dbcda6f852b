"""Finite simple graphs on vertices ``0..n-1``.

Adjacency is stored as one bitmask per vertex.  Besides the usual
predicates this module builds the generalized pyramid ``GP(r,s,t)``, the
generalized bull ``GB(r,s,t)`` and the named four-vertex patterns, and
reads/writes the edge-list and graph6 text formats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence


class Graph:
    """Immutable labeled simple graph."""

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        g._hash = None
        return g

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def degree_sequence(self) -> list[int]:
        return sorted((m.bit_count() for m in self._adj), reverse=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# Constructors


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_gp(r: int, s: int, t: int) -> Graph:
    """Generalized pyramid on ``r+s+t+3`` vertices.

    Labels: ``a=0, b=1, c=2``, then ``S_ab`` (r vertices), ``S_ac`` (s),
    ``S_bc`` (t).  ``a, b, c`` are pairwise nonadjacent, the three S-blocks
    together form a clique, and each vertex of ``S_xy`` is adjacent to
    everything except the third apex.
    """
    if min(r, s, t) < 0:
        raise ValueError("GP parameters must be nonnegative")
    n = r + s + t + 3
    blocks = [(3, 3 + r, 2), (3 + r, 3 + r + s, 1), (3 + r + s, n, 0)]
    edges = set()
    for lo, hi, missing in blocks:
        for v in range(lo, hi):
            for u in range(n):
                if u != v and u != missing:
                    edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def build_gb(r: int, s: int, t: int) -> Graph:
    """Generalized bull on ``r+s+t+2`` vertices.

    Labels: ``a=0, b=1``, then the clique blocks ``K_r``, ``K_s``, ``K_t``.
    ``a`` is adjacent exactly to ``K_r`` and ``b`` exactly to ``K_s``.
    """
    if min(r, s, t) < 0:
        raise ValueError("GB parameters must be nonnegative")
    n = r + s + t + 2
    edges = list(combinations(range(2, n), 2))
    edges += [(0, v) for v in range(2, 2 + r)]
    edges += [(1, v) for v in range(2 + r, 2 + r + s)]
    return Graph(n, edges)


_PATTERNS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "K4": (4, list(combinations(range(4), 2))),
    "diamond": (4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "4K1": (4, []),
    "co-diamond": (4, [(0, 1)]),
    "2K2": (4, [(0, 1), (2, 3)]),
    "co-paw": (4, [(0, 1), (1, 2)]),
    "co-claw": (4, [(0, 1), (1, 2), (0, 2)]),
    "co-triangle": (3, []),
}

PATTERN_NAMES = tuple(_PATTERNS) + ("K_n",)


def build_pattern(name: str, size: int | None = None) -> Graph:
    """Named pattern graph.

    The eleven four-vertex graphs, ``co-triangle`` (three isolated
    vertices) and ``K_n`` (needs ``size``; ``"K5"`` also works).  Labelings:
    the claw centre is 0, paths run 0-1-2-..., the 2K2 edges are 01 and 23,
    and the isolated vertex of co-paw / co-claw is 3.
    """
    if name in _PATTERNS:
        n, edges = _PATTERNS[name]
        return Graph(n, edges)
    if name in ("K_n", "K"):
        if size is None:
            raise ValueError("K_n needs a size")
        return complete_graph(size)
    if name.startswith("K") and name[1:].isdigit():
        return complete_graph(int(name[1:]))
    raise ValueError(f"unknown pattern {name!r}; known: {', '.join(PATTERN_NAMES)}")


# ---------------------------------------------------------------------------
# Subgraphs and isomorphism


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, relabeled so ``vertices[i]`` becomes ``i``."""
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for u in _bits(g.masks[v]):
            if u in index:
                m |= 1 << index[u]
        masks.append(m)
    return Graph.from_masks(masks)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_masks(list(g.masks) + [m << shift for m in h.masks])


def component_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = _reach(g, v, (1 << g.n) - 1)
        seen |= comp
        out.append(_bits(comp))
    return out


def connected_components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, vs) for vs in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or _reach(g, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def _reach(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Some isomorphism ``g -> h`` as a vertex map, or None.

    Backtracking with degree filtering; intended for graphs of at most a
    dozen or so vertices.
    """
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    # assign high-degree, well-connected vertices first
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda x: ((g.masks[x] & placed).bit_count(), gdeg[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    fwd: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, fu) for u, fu in fwd.items()):
                fwd[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                del fwd[v]
                used &= ~(1 << w)
        return False

    return dict(sorted(fwd.items())) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


@lru_cache(maxsize=256)
def _pattern_codes(h: Graph) -> frozenset[int]:
    """Edge codes of every relabeling of ``h`` over the pair order of ``combinations``."""
    k = h.n
    pairs = list(combinations(range(k), 2))
    codes = set()
    for perm in permutations(range(k)):
        code = 0
        for bit, (i, j) in enumerate(pairs):
            if h.has_edge(perm[i], perm[j]):
                code |= 1 << bit
        codes.add(code)
    return frozenset(codes)


_SMALL_PATTERN = 7


def find_induced(g: Graph, h: Graph) -> list[int] | None:
    """First vertex subset (lexicographic order) inducing a copy of ``h``."""
    k = h.n
    if k > g.n:
        return None
    if k == 0:
        return []
    if k <= _SMALL_PATTERN:
        codes = _pattern_codes(h)
        pairs = list(combinations(range(k), 2))
        adj = g.masks
        for subset in combinations(range(g.n), k):
            code = 0
            for bit, (i, j) in enumerate(pairs):
                if adj[subset[i]] >> subset[j] & 1:
                    code |= 1 << bit
            if code in codes:
                return list(subset)
        return None
    m = h.num_edges
    for subset in combinations(range(g.n), k):
        sub = induced_subgraph(g, subset)
        if sub.num_edges == m and are_isomorphic(sub, h):
            return list(subset)
    return None


def is_h_free(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is None


# ---------------------------------------------------------------------------
# Stable sets


def max_stable_set(g: Graph, within: int | None = None) -> list[int]:
    """A maximum stable set of ``g`` (restricted to the bitmask ``within``)."""
    full = (1 << g.n) - 1 if within is None else within
    adj = g.masks

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = _lowest(mask)
        rest = mask & ~(1 << v)
        if not adj[v] & rest:
            return best(rest) | (1 << v)
        without = best(rest)
        with_v = best(rest & ~adj[v]) | (1 << v)
        return with_v if with_v.bit_count() >= without.bit_count() else without

    return _bits(best(full))


def max_stable_set_size(g: Graph, within: int | None = None) -> int:
    return len(max_stable_set(g, within))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# Distances


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers ``N_0(w) = {w}, N_1(w), N_2(w), ...`` around a root."""

    root: int
    layers: tuple[tuple[int, ...], ...]
    unreachable: tuple[int, ...] = ()

    def layer(self, i: int) -> tuple[int, ...]:
        return self.layers[i] if 0 <= i < len(self.layers) else ()

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


def distance_layers(g: Graph, w: int) -> LayerDecomposition:
    if not 0 <= w < g.n:
        raise ValueError(f"vertex {w} not in graph")
    seen = frontier = 1 << w
    layers = []
    while frontier:
        layers.append(tuple(_bits(frontier)))
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    unreachable = tuple(v for v in range(g.n) if not seen >> v & 1)
    return LayerDecomposition(w, tuple(layers), unreachable)


# ---------------------------------------------------------------------------
# Chordality, asteroidal triples, unit interval graphs


def is_chordal(g: Graph) -> bool:
    """Repeatedly delete a simplicial vertex; chordal iff everything goes."""
    alive = (1 << g.n) - 1
    adj = g.masks
    while alive:
        for v in _bits(alive):
            nb = adj[v] & alive
            if all((adj[u] | (1 << u)) & nb == nb for u in _bits(nb)):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """Vertex set of a shortest induced cycle of length >= 4, if any."""
    for k in range(4, g.n + 1):
        hit = find_induced(g, cycle_graph(k))
        if hit is not None:
            return hit
    return None


def find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """First asteroidal triple in lexicographic order, or None.

    For each co-triangle and each choice of the third vertex ``z``, the
    other two must be joined by a path avoiding ``N(z) ∪ {z}``.  Removing
    ``z`` itself changes nothing: the endpoints are not adjacent to ``z``,
    so any path through ``z`` already meets ``N(z)``.
    """
    full = (1 << g.n) - 1
    adj = g.masks
    for x, y, z in combinations(range(g.n), 3):
        if adj[x] >> y & 1 or adj[x] >> z & 1 or adj[y] >> z & 1:
            continue
        if all(
            _reach(g, a, full & ~(adj[c] | 1 << c)) >> b & 1
            for a, b, c in ((x, y, z), (x, z, y), (y, z, x))
        ):
            return (x, y, z)
    return None


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


CLAW = build_pattern("claw")
TWO_K2 = build_pattern("2K2")
CO_TRIANGLE = build_pattern("co-triangle")


def unit_interval_violation(g: Graph) -> tuple[str, list[int] | None] | None:
    """Name and witness of the first failing unit-interval condition, or None."""
    hit = find_induced(g, CLAW)
    if hit is not None:
        return "claw-free", hit
    if not is_chordal(g):
        return "chordal", find_chordless_cycle(g)
    at = find_asteroidal_triple(g)
    if at is not None:
        return "at-free", list(at)
    return None


def is_unit_interval(g: Graph) -> bool:
    """Claw-free, chordal and AT-free."""
    return unit_interval_violation(g) is None


def is_co_triangle_free(g: Graph) -> bool:
    return max_stable_set_size(g) <= 2


# ---------------------------------------------------------------------------
# Text formats


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise GraphFormatError(f"expected vertex count, got {line!r}", lineno)
            n = int(tokens[0])
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        if not 0 <= u < v < n:
            raise GraphFormatError(f"need 0 <= u < v < {n}, got {u} {v}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing vertex count")
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) + 63
        for i in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"not a graph6 string: {text.strip()!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise GraphFormatError("truncated graph6 header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Auto-detect graph6 (a single whitespace-free token) or edge-list text."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if text.strip().startswith(">>graph6<<") or (
        len(lines) == 1 and len(lines[0].split()) == 1 and not lines[0].isdigit()
    ):
        return parse_graph6(lines[0] if lines else text)
    return parse_edge_list(text)
