"""Closed-form expansions for GP(r,s,t) and GB(r,s,t), and a structural
classifier for 2K2-free unit interval graphs.

The closed forms are only stated for positive parameters; callers with a
zero parameter should go through ``csf_m(build_gp(...))`` instead.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations
from math import comb, factorial

from .csf import csf_e, csf_m
from .graph import (
    CLAW,
    TWO_K2,
    Graph,
    LayerDecomposition,
    build_gb,
    build_gp,
    component_vertex_sets,
    distance_layers,
    find_asteroidal_triple,
    find_induced,
    find_isomorphism,
    induced_subgraph,
    is_clique,
    is_connected,
    mask_of,
    max_stable_set_size,
    unit_interval_violation,
)
from .partition import Partition
from .symfunc import Basis, SymPoly, mtilde_to_m, multiply_e


class DomainError(ValueError):
    """Closed form requested outside ``r, s, t >= 1``."""


class ClassificationError(ValueError):
    """Input is not a 2K2-free unit interval graph."""

    def __init__(self, predicate: str, witness):
        self.predicate = predicate
        self.witness = witness
        super().__init__(f"input fails {predicate}; witness {witness}")


class ConsistencyError(AssertionError):
    """A structural fact that must hold for valid inputs did not."""


def _positive(r: int, s: int, t: int) -> None:
    if min(r, s, t) < 1:
        raise DomainError(
            f"closed forms assume r, s, t >= 1 (got {r}, {s}, {t}); "
            "use csf_m/csf_e on the constructed graph instead"
        )


def _ones(k: int) -> tuple[int, ...]:
    return (1,) * k


# ---------------------------------------------------------------------------
# Generalized pyramids


def gp_mtilde_closed(r: int, s: int, t: int) -> SymPoly:
    _positive(r, s, t)
    i = r + s + t
    return SymPoly(Basis.MTILDE, i + 3, {
        (3,) + _ones(i): 1,
        (2, 2, 2) + _ones(i - 3): r * s * t,
        (2, 2) + _ones(i - 1): r * t + r * s + s * t + r + s + t,
        (2,) + _ones(i + 1): i + 3,
        _ones(i + 3): 1,
    })


def gp_m_closed(r: int, s: int, t: int) -> SymPoly:
    return mtilde_to_m(gp_mtilde_closed(r, s, t))


def d_groups(r: int, s: int, t: int) -> list[int]:
    """The bracketed polynomial of the ``e_{(i+2,1)}`` coefficient, summand by summand.

    The first six entries are the grouped binomials that are each
    nonnegative for positive arguments; the rest are monomials with
    positive coefficients.
    """
    return [
        r**4 + r**3 - 2 * r**2,
        3 * r**2 * s - 2 * r * s,
        3 * r * s**2 - 2 * s**2,
        3 * r**2 * t - 2 * r * t,
        9 * r * s * t - 2 * s * t,
        3 * r * t**2 - 2 * t**2,
        3 * s**2 * t,
        5 * r * s**2 * t,
        2 * s**3 * t,
        5 * r**2 * s * t,
        2 * r**3 * t,
        2 * r**2 * t**2,
        3 * s * t**2,
        5 * r * s * t**2,
        2 * s**2 * t**2,
        t**3,
        2 * r * t**3,
        2 * s * t**3,
        t**4,
        2 * r**3 * s,
        2 * r**2 * s**2,
        s**3,
        2 * r * s**3,
        s**4,
    ]


def c_groups(r: int, s: int, t: int) -> list[int]:
    return [
        r**2 * s + r * s**2 - 2 * r * s,
        r * t**2 + r**2 * t - 2 * r * t,
        s**2 * t + s * t**2 - 2 * s * t,
    ]


@dataclass(frozen=True)
class GPCoefficients:
    r: int
    s: int
    t: int
    A: int
    B: int
    C: int
    D: int
    E: int

    def expansion(self) -> SymPoly:
        i = self.r + self.s + self.t
        return SymPoly(Basis.E, i + 3, {
            (i + 1, 1, 1): self.A,
            (i, 3): self.B,
            (i + 1, 2): self.C,
            (i + 2, 1): self.D,
            (i + 3,): self.E,
        })


def gp_coefficients(r: int, s: int, t: int) -> GPCoefficients:
    _positive(r, s, t)
    i = r + s + t
    A = factorial(i)
    B = factorial(i - 3) * 6 * r * s * t
    C = factorial(i - 3) * 2 * (i - 1) * sum(c_groups(r, s, t))
    D = factorial(i - 2) * sum(d_groups(r, s, t))
    E = factorial(i - 1) * (3 + i) * (r + s) * (r + t) * (s + t)
    return GPCoefficients(r, s, t, A, B, C, D, E)


def gp_e_closed(r: int, s: int, t: int) -> tuple[GPCoefficients, SymPoly]:
    coeffs = gp_coefficients(r, s, t)
    return coeffs, coeffs.expansion()


# ---------------------------------------------------------------------------
# Generalized bulls


def gb_mtilde_closed(r: int, s: int, t: int) -> SymPoly:
    _positive(r, s, t)
    i = r + s + t
    return SymPoly(Basis.MTILDE, i + 2, {
        (3,) + _ones(i - 1): t,
        (2, 2) + _ones(i - 2): t * (t - 1) + t * r + s * r + s * t,
        (2,) + _ones(i): 1 + 2 * t + s + r,
        _ones(i + 2): 1,
    })


def gb_m_closed(r: int, s: int, t: int) -> SymPoly:
    return mtilde_to_m(gb_mtilde_closed(r, s, t))


def gb_e_closed(r: int, s: int, t: int) -> SymPoly:
    _positive(r, s, t)
    i = r + s + t
    scale = factorial(i - 2)
    middle = (
        r**3 + r**2 * s + r * s**2 + s**3 + 2 * r**2 * t + 2 * r * s * t
        + 2 * s**2 * t + r * t**2 + s * t**2 - r - s
    )
    return SymPoly(Basis.E, i + 2, {
        (i, 1, 1): scale * (i - 1) * t,
        (i, 2): scale * 2 * r * s,
        (i + 1, 1): scale * middle,
        (i + 2,): scale * (i + 2) * (i - 1) * r * s,
    })


def transition_identities(i: int) -> dict[Partition, SymPoly]:
    """The five printed m-expansions of ``e_{(i,3)}, e_{(i+1,1,1)}, e_{(i+1,2)}, e_{(i+2,1)}, e_{(i+3)}``."""
    n = i + 3
    m = lambda d: SymPoly(Basis.M, n, d)  # noqa: E731
    return {
        Partition((i, 3)): m({
            (2, 2, 2) + _ones(i - 3): 1,
            (2, 2) + _ones(i - 1): i - 1,
            (2,) + _ones(i + 1): comb(i + 1, 2),
            _ones(i + 3): comb(i + 3, 3),
        }),
        Partition((i + 1, 1, 1)): m({
            (3,) + _ones(i): 1,
            (2,) + _ones(i + 1): 2 * i + 3,
            (2, 2) + _ones(i - 1): 2,
            _ones(i + 3): 2 * comb(i + 3, 2),
        }),
        Partition((i + 1, 2)): m({
            (2, 2) + _ones(i - 1): 1,
            (2,) + _ones(i + 1): i + 1,
            _ones(i + 3): comb(i + 3, 2),
        }),
        Partition((i + 2, 1)): m({
            (2,) + _ones(i + 1): 1,
            _ones(i + 3): i + 3,
        }),
        Partition((i + 3,)): m({_ones(i + 3): 1}),
    }


# ---------------------------------------------------------------------------
# Structural root


def _alpha_of(g: Graph, vertices) -> int:
    return max_stable_set_size(g, mask_of(vertices))


def _induced_connected(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return is_connected(induced_subgraph(g, vs))


def find_structural_root(g: Graph, check: bool = True, refined: bool | None = None) -> LayerDecomposition:
    """Least vertex ``w`` whose neighbourhood has no stable triple and whose
    farther distance layers are cliques.

    ``g`` must be connected, claw-free and AT-free (checked unless
    ``check`` is false).  When ``g`` is also 2K2-free and unit interval,
    the finer layer bounds are asserted as well; pass ``refined`` to skip
    re-testing that.
    """
    if check:
        if not is_connected(g):
            raise ClassificationError("connected", None)
        hit = find_induced(g, CLAW)
        if hit is not None:
            raise ClassificationError("claw-free", hit)
        at = find_asteroidal_triple(g)
        if at is not None:
            raise ClassificationError("at-free", list(at))
    for w in range(g.n):
        layers = distance_layers(g, w)
        if _alpha_of(g, layers.layer(1)) > 2:
            continue
        if all(is_clique(g, layers.layer(i)) for i in range(2, len(layers.layers))):
            if refined is None:
                refined = find_induced(g, TWO_K2) is None and unit_interval_violation(g) is None
            if refined:
                _check_layer_bounds(g, layers)
            return layers
    raise ConsistencyError("no vertex has a 2-bounded neighbourhood and clique layers")


def _check_layer_bounds(g: Graph, layers: LayerDecomposition) -> None:
    if len(layers.layer(3)) > 1 or len(layers.layers) > 4:
        raise ConsistencyError(f"layer bounds violated around {layers.root}: {layers.layers}")
    nw = layers.layer(1)
    if _induced_connected(g, nw) and not layers.layer(3) and _alpha_of(g, nw) == 2:
        if len(layers.layer(2)) > 2:
            raise ConsistencyError(f"|N_2({layers.root})| > 2")
        for p in layers.layer(2):
            common = [a for a in nw if g.has_edge(a, p)]
            if not is_clique(g, common):
                raise ConsistencyError(f"N({p}) ∩ N({layers.root}) is not a clique")


# ---------------------------------------------------------------------------
# Classification


class Variant(str, Enum):
    CO_TRIANGLE_FREE = "CoTriangleFree"
    GENERALIZED_BULL = "GeneralizedBull"
    UNRESOLVED = "Unresolved"


@dataclass
class Certificate:
    """Outcome for one connected component.

    ``vertices`` are labels in the input graph and every vertex reference
    in ``structure``/``mapping`` uses those labels.  ``case`` is the case
    number 1-6 of the neighbourhood analysis around ``root``.  For the
    generalized bull variant, ``mapping`` sends each vertex to its label
    in ``build_gb(*gb_params)``.
    """

    variant: Variant
    case: int
    vertices: list[int]
    root: int
    layers: list[list[int]]
    e_expansion: SymPoly
    structure: dict = field(default_factory=dict)
    gb_params: tuple[int, int, int] | None = None
    mapping: dict[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "case": self.case,
            "vertices": self.vertices,
            "root": self.root,
            "layers": self.layers,
            "structure": self.structure,
            "gb_params": list(self.gb_params) if self.gb_params else None,
            "mapping": {str(k): v for k, v in self.mapping.items()} if self.mapping else None,
            "e_expansion": self.e_expansion.to_dict(),
        }

    def validate(self, g: Graph) -> None:
        """Re-check the structural claim against ``g``; raise on any mismatch."""
        sub = induced_subgraph(g, self.vertices)
        if self.e_expansion != csf_e(sub):
            raise ConsistencyError("attached e-expansion differs from csf_e")
        if self.variant == Variant.CO_TRIANGLE_FREE:
            if max_stable_set_size(sub) > 2:
                raise ConsistencyError("claimed co-triangle-free but has a stable triple")
        elif self.variant == Variant.GENERALIZED_BULL:
            target = build_gb(*self.gb_params)
            if not _is_isomorphism(g, self.vertices, target, self.mapping):
                raise ConsistencyError(f"mapping is not an isomorphism onto GB{self.gb_params}")


def _is_isomorphism(g: Graph, vertices: list[int], target: Graph, mapping: dict[int, int] | None) -> bool:
    if mapping is None or sorted(mapping) != sorted(vertices) or target.n != len(vertices):
        return False
    if sorted(mapping.values()) != list(range(target.n)):
        return False
    return all(
        g.has_edge(u, v) == target.has_edge(mapping[u], mapping[v])
        for u, v in combinations(vertices, 2)
    )


@dataclass
class Classification:
    certificates: list[Certificate]
    e_expansion: SymPoly

    def to_dict(self) -> dict:
        return {
            "components": [c.to_dict() for c in self.certificates],
            "e_expansion": self.e_expansion.to_dict(),
        }


def classification_violation(g: Graph) -> tuple[str, list[int] | None] | None:
    hit = find_induced(g, TWO_K2)
    if hit is not None:
        return "2k2-free", hit
    return unit_interval_violation(g)


def classify(g: Graph) -> Classification:
    """Certify each component of a 2K2-free unit interval graph as
    co-triangle-free or as a generalized bull."""
    bad = classification_violation(g)
    if bad is not None:
        raise ClassificationError(*bad)
    certs = []
    total = SymPoly(Basis.E, 0, {(): 1})
    for vs in component_vertex_sets(g):
        cert = _classify_component(g, vs)
        cert.validate(g)
        if not cert.e_expansion.is_nonnegative() and cert.variant != Variant.UNRESOLVED:
            raise ConsistencyError(f"certified component {vs} has a negative e-coefficient")
        certs.append(cert)
        total = multiply_e(total, cert.e_expansion)
    return Classification(certs, total)


def _classify_component(g: Graph, vertices: list[int]) -> Certificate:
    sub = induced_subgraph(g, vertices)
    label = vertices  # local index -> input label
    layers = find_structural_root(sub, check=False, refined=True)
    lab = lambda xs: [label[x] for x in xs]  # noqa: E731
    w = layers.root
    nw, n2, n3 = layers.layer(1), layers.layer(2), layers.layer(3)
    e_exp = csf_e(sub)
    base = dict(
        vertices=list(vertices),
        root=label[w],
        layers=[lab(layer) for layer in layers.layers],
        e_expansion=e_exp,
    )

    nw_connected = _induced_connected(sub, nw)
    alpha_nw = _alpha_of(sub, nw)
    if not nw_connected:
        case = 1
    elif len(n3) == 1:
        case = 2
    elif alpha_nw <= 1:
        case = 3
    else:
        case = {2: 4, 1: 5, 0: 6}.get(len(n2))
        if case is None:
            raise ConsistencyError(f"|N_2| = {len(n2)} in a component with connected N(w) and alpha 2")

    if case in (1, 2, 3):
        return _generic_certificate(sub, case, base)

    if case == 6:
        return Certificate(Variant.CO_TRIANGLE_FREE, 6, **base)

    p = n2[0]
    A = [a for a in nw if sub.has_edge(a, p)]
    B = [b for b in nw if b not in A]
    if not is_clique(sub, A):
        raise ConsistencyError("A = N(p) ∩ N(w) is not a clique")

    if case == 4:
        q = n2[1]
        if not all(sub.has_edge(b, q) for b in B) or not is_clique(sub, B):
            raise ConsistencyError("case 4: B must be a clique fully joined to q")
        structure = {"p": label[p], "q": label[q], "A": lab(A), "B": lab(B)}
        return Certificate(Variant.CO_TRIANGLE_FREE, 4, structure=structure, **base)

    # case 5
    for a in A:
        nab = [b for b in B if sub.has_edge(a, b)]
        if len(nab) < len(B) - 1 or not is_clique(sub, nab):
            raise ConsistencyError(f"case 5: neighbourhood of {label[a]} in B is too small or not a clique")
    structure = {"p": label[p], "A": lab(A), "B": lab(B)}
    if is_clique(sub, B):
        return Certificate(Variant.CO_TRIANGLE_FREE, 5, structure=structure, **base)

    x, y = next((u, v) for u, v in combinations(B, 2) if not sub.has_edge(u, v))
    A1 = [a for a in A if sub.has_edge(a, x)]
    A2 = [a for a in A if sub.has_edge(a, y)]
    if A1 and A2:
        raise ConsistencyError(
            f"case 5: both A1 and A2 nonempty; {{x, y, p}} = {lab([x, y, p])} should be asteroidal"
        )
    if A1:
        x, y, A1, A2 = y, x, A2, A1
    A3 = [b for b in B if b not in (x, y)]
    rest = [v for v in nw if v != x]
    if not is_clique(sub, rest):
        raise ConsistencyError("case 5: N(w) minus x is not a clique")
    B1 = [b for b in B if b != x and sub.has_edge(b, x)]
    B2 = [b for b in B if b != x and b not in B1]
    r, s, t = len(A), len(B1) + 1, len(B2)
    blocks = [p, x] + A + sorted(B1 + [w]) + B2
    mapping = {label[v]: i for i, v in enumerate(blocks)}
    structure.update({
        "x": label[x], "y": label[y], "A1": lab(A1), "A2": lab(A2), "A3": lab(A3),
        "B1": lab(B1), "B2": lab(B2),
    })
    return Certificate(
        Variant.GENERALIZED_BULL, 5, structure=structure, gb_params=(r, s, t), mapping=mapping, **base
    )


def _generic_certificate(sub: Graph, case: int, base: dict) -> Certificate:
    """Cases 1-3: try co-triangle-freeness, then a GB(r,s,t) isomorphism."""
    if max_stable_set_size(sub) <= 2:
        return Certificate(Variant.CO_TRIANGLE_FREE, case, **base)
    found = find_gb_isomorphism(sub)
    if found is not None:
        params, local_map = found
        label = base["vertices"]
        mapping = {label[v]: image for v, image in local_map.items()}
        return Certificate(Variant.GENERALIZED_BULL, case, gb_params=params, mapping=mapping, **base)
    return Certificate(Variant.UNRESOLVED, case, **base)


def find_gb_isomorphism(g: Graph) -> tuple[tuple[int, int, int], dict[int, int]] | None:
    """Search ``r + s + t = n - 2`` (all positive) for a GB isomorphic to ``g``."""
    k = g.n - 2
    # GB(r,s,t) and GB(s,r,t) coincide; larger r first reports r >= s
    for r in range(k, 0, -1):
        for s in range(1, k - r + 1):
            t = k - r - s
            if t < 1:
                continue
            target = build_gb(r, s, t)
            if target.num_edges != g.num_edges:
                continue
            iso = find_isomorphism(g, target)
            if iso is not None:
                return (r, s, t), iso
    return None


# ---------------------------------------------------------------------------
# Sweeps


@dataclass
class SweepEntry:
    family: str
    r: int
    s: int
    t: int
    m_match: bool
    e_match: bool
    e_nonneg: bool
    millis: float

    @property
    def passed(self) -> bool:
        return self.m_match and self.e_match and self.e_nonneg


_FAMILIES = {
    "GP": (build_gp, gp_m_closed, lambda r, s, t: gp_e_closed(r, s, t)[1]),
    "GB": (build_gb, gb_m_closed, gb_e_closed),
}


def _sweep_one(args: tuple[str, int, int, int]) -> SweepEntry:
    family, r, s, t = args
    build, m_closed, e_closed = _FAMILIES[family]
    start = time.perf_counter()
    g = build(r, s, t)
    m_cf, e_cf = m_closed(r, s, t), e_closed(r, s, t)
    m_match = m_cf == csf_m(g)
    e_match = e_cf == csf_e(g)
    millis = (time.perf_counter() - start) * 1000
    return SweepEntry(family, r, s, t, m_match, e_match, e_cf.is_nonnegative(), round(millis, 3))


def verify_sweep(family: str, max_param: int, workers: int = 1) -> list[SweepEntry]:
    """Compare closed forms with the census pipeline for ``1 <= r, s, t <= max_param``."""
    family = family.upper()
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if max_param < 1:
        raise ValueError("max_param must be at least 1")
    triples = [
        (family, r, s, t)
        for r in range(1, max_param + 1)
        for s in range(1, max_param + 1)
        for t in range(1, max_param + 1)
    ]
    if workers <= 1:
        return [_sweep_one(x) for x in triples]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_one, triples))


def sweep_report_json(entries: list[SweepEntry]) -> str:
    return json.dumps([asdict(e) for e in entries])


__all__ = [
    "Certificate",
    "Classification",
    "ClassificationError",
    "ConsistencyError",
    "DomainError",
    "GPCoefficients",
    "SweepEntry",
    "Variant",
    "c_groups",
    "classification_violation",
    "classify",
    "d_groups",
    "find_gb_isomorphism",
    "find_structural_root",
    "gb_e_closed",
    "gb_m_closed",
    "gb_mtilde_closed",
    "gp_coefficients",
    "gp_e_closed",
    "gp_m_closed",
    "gp_mtilde_closed",
    "sweep_report_json",
    "transition_identities",
    "verify_sweep",
]
