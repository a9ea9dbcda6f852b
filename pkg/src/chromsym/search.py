"""Exhaustive e-positivity checks over all labeled graphs on few vertices.

Graphs on ``n`` vertices are indexed by an integer whose bits select edges
in ``itertools.combinations(range(n), 2)`` order.  Work is split into
index ranges; per-range counters are summed, so totals do not depend on
the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .csf import MAX_CENSUS_VERTICES, csf_e
from .graph import Graph, format_edge_list, is_connected, max_stable_set_size
from .theorems import classification_violation, classify

CLASSES = ("all", "co-triangle-free", "2k2-unit-interval")
CHUNK = 2048


@dataclass
class SearchTotals:
    n: int
    checked: int = 0
    in_class: int = 0
    positive: int = 0
    negative: int = 0
    certified: int = 0
    negatives: list[str] = field(default_factory=list)

    def merge(self, other: "SearchTotals") -> None:
        self.checked += other.checked
        self.in_class += other.in_class
        self.positive += other.positive
        self.negative += other.negative
        self.certified += other.certified
        self.negatives.extend(other.negatives)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "in_class": self.in_class,
            "positive": self.positive,
            "negative": self.negative,
            "certified": self.certified,
            "negatives": self.negatives,
        }


def graph_from_index(n: int, index: int) -> Graph:
    masks = [0] * n
    bit = 0
    for u, v in combinations(range(n), 2):
        if index >> bit & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        bit += 1
    return Graph.from_masks(masks)


def in_class(g: Graph, graph_class: str) -> bool:
    if graph_class == "all":
        return True
    if graph_class == "co-triangle-free":
        return max_stable_set_size(g) <= 2
    if graph_class == "2k2-unit-interval":
        return classification_violation(g) is None
    raise ValueError(f"unknown class {graph_class!r}; expected one of {CLASSES}")


def _scan(task: tuple[int, int, int, str, bool, int]) -> SearchTotals:
    n, lo, hi, graph_class, connected, max_census = task
    out = SearchTotals(n)
    for index in range(lo, hi):
        g = graph_from_index(n, index)
        if connected and not is_connected(g):
            continue
        out.checked += 1
        if not in_class(g, graph_class):
            continue
        out.in_class += 1
        if graph_class == "2k2-unit-interval":
            # classify re-validates every certificate and raises on failure
            result = classify(g)
            f = result.e_expansion
            out.certified += 1
        else:
            f = csf_e(g, max_census)
        if f.is_nonnegative():
            out.positive += 1
        else:
            out.negative += 1
            out.negatives.append(format_edge_list(g))
    return out


def search(
    max_n: int,
    graph_class: str = "all",
    connected: bool = False,
    workers: int = 1,
    min_n: int = 1,
    max_census: int = MAX_CENSUS_VERTICES,
) -> list[SearchTotals]:
    """Scan every labeled graph with ``min_n <= n <= max_n`` vertices.

    Returns one :class:`SearchTotals` per ``n``.  Negative instances are
    kept as edge-list text, sorted.
    """
    if graph_class not in CLASSES:
        raise ValueError(f"unknown class {graph_class!r}; expected one of {CLASSES}")
    tasks = []
    for n in range(min_n, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, CHUNK):
            tasks.append((n, lo, min(total, lo + CHUNK), graph_class, connected, max_census))
    if workers <= 1:
        parts = map(_scan, tasks)
        return _merge(parts, min_n, max_n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _merge(pool.map(_scan, tasks), min_n, max_n)


def _merge(parts, min_n: int, max_n: int) -> list[SearchTotals]:
    totals = {n: SearchTotals(n) for n in range(min_n, max_n + 1)}
    for part in parts:
        totals[part.n].merge(part)
    for t in totals.values():
        t.negatives.sort()
    return [totals[n] for n in sorted(totals)]
