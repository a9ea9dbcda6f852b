"""Homogeneous symmetric functions with exact integer coefficients.

Three bases are supported: monomial ``m``, augmented monomial ``m~``
(``m~_lam = r_1! r_2! ... m_lam``) and elementary ``e``.  The change of
basis between ``e`` and ``m`` goes through the number of 0/1 matrices with
prescribed row and column sums.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .partition import (
    Partition,
    canonical_sort,
    conjugate,
    dominance_leq,
    multiplicity_product,
    partitions_of,
)


class Basis(str, Enum):
    M = "M"
    MTILDE = "MTILDE"
    E = "E"

    @property
    def symbol(self) -> str:
        return {"M": "m", "MTILDE": "mt", "E": "e"}[self.value]


class BasisError(ValueError):
    """Operation applied to a polynomial in the wrong basis."""


class IntegralityError(ArithmeticError):
    """A coefficient failed an exact-divisibility requirement."""


@dataclass(frozen=True, eq=False)
class SymPoly:
    """Coefficient map ``Partition -> int`` in a single basis and degree.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when basis, degree and the stored maps agree.
    """

    basis: Basis
    degree: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        basis = Basis(self.basis)
        clean: dict[Partition, int] = {}
        for key, value in self.coeffs.items():
            lam = Partition(key)
            if lam.weight != self.degree:
                raise ValueError(f"{lam!r} has weight {lam.weight}, expected degree {self.degree}")
            value = int(value)
            if value:
                clean[lam] = clean.get(lam, 0) + value
        ordered = {lam: clean[lam] for lam in canonical_sort(clean) if clean[lam]}
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", MappingProxyType(ordered))

    @classmethod
    def zero(cls, basis: Basis, degree: int) -> "SymPoly":
        return cls(basis, degree, {})

    @classmethod
    def single(cls, basis: Basis, lam: Iterable[int], coeff: int = 1) -> "SymPoly":
        lam = Partition(lam)
        return cls(basis, lam.weight, {lam: coeff})

    def __getitem__(self, lam: Iterable[int]) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and dict(self.coeffs) == dict(other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.basis, self.degree, frozenset(self.coeffs.items())))

    def _check_compatible(self, other: "SymPoly") -> None:
        if self.basis != other.basis or self.degree != other.degree:
            raise BasisError(
                f"cannot combine {self.basis.value}/deg {self.degree} "
                f"with {other.basis.value}/deg {other.degree}"
            )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_compatible(other)
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return SymPoly(self.basis, self.degree, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.basis, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, scalar: int) -> "SymPoly":
        if not isinstance(scalar, int):
            return NotImplemented
        return SymPoly(self.basis, self.degree, {k: scalar * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.coeffs.values())

    def first_negative(self) -> Partition | None:
        for lam, v in self.coeffs.items():
            if v < 0:
                return lam
        return None

    def render(self) -> str:
        """Text form such as ``2·e[3,1,1] + 2·e[3,2] - 4·e[4]``; ``0`` for the zero polynomial."""
        if not self.coeffs:
            return "0"
        sym = self.basis.symbol
        pieces = []
        for i, (lam, v) in enumerate(self.coeffs.items()):
            term = f"{abs(v)}·{sym}[{','.join(map(str, lam))}]"
            if i == 0:
                pieces.append(term if v > 0 else "-" + term)
            else:
                pieces.append(("+ " if v > 0 else "- ") + term)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def to_dict(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": str(v)} for lam, v in self.coeffs.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "SymPoly":
        coeffs: dict[Partition, int] = {}
        for term in data["terms"]:
            lam = Partition(term["partition"])
            if lam in coeffs:
                raise ValueError(f"duplicate term for {lam!r}")
            coeffs[lam] = int(term["coeff"])
        return cls(Basis(data["basis"]), int(data["degree"]), coeffs)

    @classmethod
    def from_json(cls, text: str) -> "SymPoly":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# 0/1 matrices and e -> m

_SHARED_CACHE: dict = {}


def count_01_matrices(
    rows: Iterable[int], cols: Iterable[int], cache: dict | None = None
) -> int:
    """Number of 0/1 matrices with row sums ``rows`` and column sums ``cols``.

    Columns are filled one at a time; the state is the multiset of remaining
    row capacities.  Pass ``cache`` to share memo entries between calls
    (keys include the remaining columns, so sharing is always sound).
    """
    lam, mu = Partition(rows), Partition(cols)
    if lam.weight != mu.weight:
        raise ValueError(f"row and column sums differ: {lam.weight} != {mu.weight}")
    memo = {} if cache is None else cache
    return _count(tuple(lam), tuple(mu), memo)


def _count(caps: tuple[int, ...], cols: tuple[int, ...], memo: dict) -> int:
    if not cols:
        return 1 if not caps else 0
    key = (caps, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    need, rest = cols[0], cols[1:]
    total = 0
    if need <= len(caps):
        groups = sorted(Counter(caps).items(), reverse=True)
        for choice, ways in _distribute(groups, need):
            new_caps: list[int] = []
            for (value, size), take in zip(groups, choice):
                new_caps.extend([value] * (size - take))
                if value > 1:
                    new_caps.extend([value - 1] * take)
            new_caps.sort(reverse=True)
            total += ways * _count(tuple(new_caps), rest, memo)
    memo[key] = total
    return total


def _distribute(groups: list[tuple[int, int]], need: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Ways to pick ``need`` rows across capacity groups, with binomial weights."""
    if not groups:
        if need == 0:
            yield (), 1
        return
    (_, size), tail = groups[0], groups[1:]
    room = sum(s for _, s in tail)
    for take in range(max(0, need - room), min(size, need) + 1):
        for choice, ways in _distribute(tail, need - take):
            yield (take,) + choice, comb(size, take) * ways


@lru_cache(maxsize=None)
def _e_to_m_terms(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for mu in partitions_of(lam.weight):
        if dominance_leq(lam, conjugate(mu)):
            c = count_01_matrices(lam, mu, _SHARED_CACHE)
            if c:
                out.append((mu, c))
    return tuple(out)


def e_to_m(lam: Iterable[int]) -> SymPoly:
    """Monomial expansion of ``e_lam``."""
    lam = Partition(lam)
    return SymPoly(Basis.M, lam.weight, dict(_e_to_m_terms(lam)))


def _require(f: SymPoly, basis: Basis) -> None:
    if f.basis != basis:
        raise BasisError(f"expected basis {basis.value}, got {f.basis.value}")


def sympoly_e_expand(f: SymPoly) -> SymPoly:
    _require(f, Basis.E)
    out: Counter = Counter()
    for lam, c in f:
        for mu, v in _e_to_m_terms(lam):
            out[mu] += c * v
    return SymPoly(Basis.M, f.degree, out)


def m_to_e(f: SymPoly) -> SymPoly:
    """Invert ``sympoly_e_expand`` by back-substitution.

    ``e_lam`` has leading monomial ``m_{lam'}`` with coefficient 1 and every
    other monomial below it in dominance order, so peeling off the
    lexicographically largest remaining monomial always terminates.
    """
    _require(f, Basis.M)
    rest: dict[Partition, int] = dict(f.coeffs)
    out: dict[Partition, int] = {}
    while rest:
        mu = max(rest, key=tuple)
        c = rest[mu]
        lam = conjugate(mu)
        terms = dict(_e_to_m_terms(lam))
        lead = terms.get(mu)
        if lead != 1:
            raise IntegralityError(f"leading coefficient of e{tuple(lam)} at m{tuple(mu)} is {lead}, not 1")
        out[lam] = c
        for nu, v in terms.items():
            value = rest.get(nu, 0) - c * v
            if value:
                rest[nu] = value
            else:
                rest.pop(nu, None)
        if mu in rest:
            raise IntegralityError(f"elimination failed to clear m{tuple(mu)}")
    return SymPoly(Basis.E, f.degree, out)


def mtilde_to_m(f: SymPoly) -> SymPoly:
    _require(f, Basis.MTILDE)
    return SymPoly(Basis.M, f.degree, {lam: c * multiplicity_product(lam) for lam, c in f})


def m_to_mtilde(f: SymPoly) -> SymPoly:
    _require(f, Basis.M)
    out = {}
    for lam, c in f:
        q, r = divmod(c, multiplicity_product(lam))
        if r:
            raise IntegralityError(
                f"coefficient {c} of m{tuple(lam)} is not divisible by {multiplicity_product(lam)}"
            )
        out[lam] = q
    return SymPoly(Basis.MTILDE, f.degree, out)


def multiply_e(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product in the e basis: ``e_lam * e_mu = e_{lam ∪ mu}``."""
    _require(f, Basis.E)
    _require(g, Basis.E)
    out: Counter = Counter()
    for lam, a in f:
        for mu, b in g:
            out[Partition(sorted(lam + mu, reverse=True))] += a * b
    return SymPoly(Basis.E, f.degree + g.degree, out)


def to_basis(f: SymPoly, basis: Basis) -> SymPoly:
    """Convert between any two of the supported bases."""
    basis = Basis(basis)
    if f.basis == basis:
        return f
    if f.basis == Basis.MTILDE:
        f = mtilde_to_m(f)
    elif f.basis == Basis.E:
        f = sympoly_e_expand(f)
    if basis == Basis.M:
        return f
    if basis == Basis.MTILDE:
        return m_to_mtilde(f)
    return m_to_e(f)
