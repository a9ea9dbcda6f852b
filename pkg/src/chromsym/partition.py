"""Integer partitions: conjugation, dominance order, multiplicities.

Partitions are immutable tuples of positive parts in weakly decreasing
order.  Lists of partitions are always produced in reverse-lexicographic
order, so ``(n)`` comes first and ``(1^n)`` last.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, anything else that is not
    a partition raises ``ValueError``.

    >>> Partition([3, 1, 0])
    Partition(3, 1)
    >>> Partition([3, 1]).conjugate()
    Partition(2, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        """Build from ``{part: multiplicity}``, i.e. the <1^r1 2^r2 ...> view."""
        parts: list[int] = []
        for part in sorted(mult, reverse=True):
            if mult[part] < 0 or part <= 0:
                raise ValueError(f"bad multiplicity entry {part}^{mult[part]}")
            parts.extend([part] * mult[part])
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part ``i`` to ``r_i``, the number of parts equal to it."""
        return dict(sorted(Counter(self).items()))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "+".join(map(str, self)) if self else "0"

    def multiplicity_str(self) -> str:
        return "<" + " ".join(f"{i}^{r}" for i, r in self.multiplicities().items()) + ">"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def _check_same_weight(mu: Partition, lam: Partition) -> None:
    if mu.weight != lam.weight:
        raise ValueError(
            f"dominance compares partitions of equal weight, got {mu.weight} and {lam.weight}"
        )


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff every prefix sum of ``mu`` is at most the matching prefix sum of ``lam``."""
    mu, lam = Partition(mu), Partition(lam)
    _check_same_weight(mu, lam)
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def multiplicity_product(lam: Iterable[int]) -> int:
    """r_1! r_2! ... for the multiplicities r_i of ``lam``."""
    out = 1
    for r in Counter(Partition(lam)).values():
        out *= factorial(r)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def canonical_sort(parts: Iterable[Partition]) -> list[Partition]:
    """Sort partitions into the canonical (reverse-lexicographic) order."""
    return sorted(parts, key=tuple, reverse=True)


_MULT_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse_partition(text: str) -> Partition:
    """Parse either ``"3+2+1"`` or ``"<1^1 2^1 3^1>"`` (``"0"`` and ``"<>"`` give the empty partition)."""
    text = text.strip()
    if text.startswith("<") and text.endswith(">"):
        mult: dict[int, int] = {}
        for token in text[1:-1].split():
            m = _MULT_TOKEN.match(token)
            if not m:
                raise ValueError(f"bad multiplicity token {token!r}")
            part, r = int(m.group(1)), int(m.group(2))
            if part in mult:
                raise ValueError(f"part {part} listed twice")
            mult[part] = r
        return Partition.from_multiplicities(mult)
    if text == "0":
        return Partition()
    try:
        parts = [int(tok) for tok in text.split("+")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)
