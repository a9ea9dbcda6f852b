"""Chromatic symmetric functions.

``X_G`` is computed from the census of stable partitions: if ``a_lam``
counts the partitions of ``V`` into stable blocks with block sizes
``lam``, then ``X_G = sum a_lam m~_lam``.  :func:`coloring_count_oracle`
counts proper colorings directly and shares no code with the census.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .graph import Graph, _lowest
from .partition import Partition, canonical_sort
from .symfunc import Basis, SymPoly, m_to_e, mtilde_to_m

MAX_CENSUS_VERTICES = 16
MAX_ORACLE_VERTICES = 9


class ResourceError(RuntimeError):
    """Input exceeds a configured size bound."""


@dataclass(frozen=True)
class StableCensus:
    degree: int
    counts: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ordered = {Partition(k): int(self.counts[k]) for k in canonical_sort(map(Partition, self.counts))}
        object.__setattr__(self, "counts", MappingProxyType(ordered))

    def __getitem__(self, lam) -> int:
        return self.counts.get(Partition(lam), 0)


def stable_partition_census(g: Graph, max_vertices: int = MAX_CENSUS_VERTICES) -> StableCensus:
    """Count stable partitions of ``g`` by type.

    The lowest unplaced vertex always opens the next block; the block is
    completed by a stable set of later vertices.  Results are memoized on
    the set of unplaced vertices, so each remaining vertex set is expanded
    once.
    """
    if g.n > max_vertices:
        raise ResourceError(f"census limited to {max_vertices} vertices, graph has {g.n}")
    adj = g.masks

    def stable_sets_with(v: int, candidates: int):
        # candidates must already exclude v and its neighbours
        def grow(chosen: int, cand: int):
            yield chosen
            while cand:
                u = _lowest(cand)
                cand &= ~(1 << u)
                yield from grow(chosen | (1 << u), cand & ~adj[u])

        return grow(1 << v, candidates)

    @lru_cache(maxsize=None)
    def census(mask: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        if not mask:
            return (((), 1),)
        v = _lowest(mask)
        rest = mask & ~(1 << v)
        out: Counter = Counter()
        for block in stable_sets_with(v, rest & ~adj[v]):
            size = block.bit_count()
            for typ, c in census(mask & ~block):
                out[_insert(typ, size)] += c
        return tuple(out.items())

    counts = {Partition(typ): c for typ, c in census((1 << g.n) - 1)}
    census.cache_clear()
    return StableCensus(g.n, counts)


def _insert(typ: tuple[int, ...], size: int) -> tuple[int, ...]:
    i = 0
    while i < len(typ) and typ[i] >= size:
        i += 1
    return typ[:i] + (size,) + typ[i:]


def csf_mtilde(g: Graph, max_vertices: int = MAX_CENSUS_VERTICES) -> SymPoly:
    census = stable_partition_census(g, max_vertices)
    return SymPoly(Basis.MTILDE, g.n, census.counts)


def csf_m(g: Graph, max_vertices: int = MAX_CENSUS_VERTICES) -> SymPoly:
    return mtilde_to_m(csf_mtilde(g, max_vertices))


def csf_e(g: Graph, max_vertices: int = MAX_CENSUS_VERTICES) -> SymPoly:
    return m_to_e(csf_m(g, max_vertices))


def coloring_count_oracle(g: Graph, lam, max_vertices: int = MAX_ORACLE_VERTICES) -> int:
    """Number of proper colorings using color ``i`` exactly ``lam[i]`` times.

    This is the coefficient of ``m_lam`` in ``X_G``.  Plain backtracking
    over vertices; slow on purpose and kept independent of the census.
    """
    lam = Partition(lam)
    if lam.weight != g.n:
        raise ValueError(f"partition weight {lam.weight} != vertex count {g.n}")
    if g.n > max_vertices:
        raise ResourceError(f"oracle limited to {max_vertices} vertices, graph has {g.n}")
    remaining = list(lam)
    color = [-1] * g.n

    def place(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c, left in enumerate(remaining):
            if left == 0:
                continue
            if any(color[u] == c for u in g.neighbors(v) if u < v):
                continue
            remaining[c] -= 1
            color[v] = c
            total += place(v + 1)
            color[v] = -1
            remaining[c] += 1
        return total

    return place(0)


@dataclass(frozen=True)
class EposVerdict:
    e_expansion: SymPoly
    positive: bool
    witness: Partition | None = None
    graph_id: str | None = None

    def __post_init__(self) -> None:
        if self.positive != (self.witness is None):
            raise ValueError("witness must be present exactly when the verdict is negative")


def e_positivity(g: Graph, graph_id: str | None = None, max_vertices: int = MAX_CENSUS_VERTICES) -> EposVerdict:
    """Decide e-positivity; the witness is the first negative term in canonical order."""
    f = csf_e(g, max_vertices)
    witness = f.first_negative()
    return EposVerdict(f, witness is None, witness, graph_id)


__all__ = [
    "MAX_CENSUS_VERTICES",
    "MAX_ORACLE_VERTICES",
    "EposVerdict",
    "ResourceError",
    "StableCensus",
    "coloring_count_oracle",
    "csf_e",
    "csf_m",
    "csf_mtilde",
    "e_positivity",
    "stable_partition_census",
]
