"""Partitions, Ferrers diagrams and symmetric-group numerology.

Cells follow the French convention: ``(i, j)`` lies in the diagram of ``mu``
iff ``j < mu[i]`` (rows ``i`` counted from 0, bottom to top).
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

Cell = tuple[int, int]


class CellError(ValueError):
    """Raised when a cell does not belong to the diagram."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Plain tuple comparison is lexicographic, which refines the dominance
    order; ``partitions_of`` lists partitions in decreasing lex order.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def n(self) -> int:
        return sum(self)

    def transpose(self) -> Partition:
        return transpose(self)

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self):
            for j in range(row):
                yield (i, j)

    def multiplicities(self) -> dict[int, int]:
        mult: dict[int, int] = {}
        for p in self:
            mult[p] = mult.get(p, 0) + 1
        return mult


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


@lru_cache(maxsize=None)
def transpose(mu: Partition) -> Partition:
    if not mu:
        return Partition()
    return Partition(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def _check_cell(mu: Partition, x: Cell) -> None:
    i, j = x
    if i < 0 or j < 0 or i >= len(mu) or j >= mu[i]:
        raise CellError(f"cell {x} is not in the diagram of {list(mu)}")


def arm(mu: Partition, x: Cell) -> int:
    """Number of cells strictly to the right of ``x``."""
    _check_cell(mu, x)
    i, j = x
    return mu[i] - j - 1


def leg(mu: Partition, x: Cell) -> int:
    """Number of cells strictly above ``x``."""
    _check_cell(mu, x)
    i, j = x
    return transpose(mu)[j] - i - 1


def hook(mu: Partition, x: Cell) -> int:
    return arm(mu, x) + leg(mu, x) + 1


def n_stat(mu: Partition) -> int:
    """The statistic sum_i mu_i (i - 1), rows indexed from 1."""
    return sum(i * p for i, p in enumerate(mu))


class Dominance(enum.Enum):
    GREATER_OR_EQUAL = "greater-or-equal"
    LESS_OR_EQUAL = "less-or-equal"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominance_compare(a: Partition, b: Partition) -> Dominance:
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{list(a)}| != |{list(b)}|")
    if tuple(a) == tuple(b):
        return Dominance.EQUAL
    ge = le = True
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge:
        return Dominance.GREATER_OR_EQUAL
    if le:
        return Dominance.LESS_OR_EQUAL
    return Dominance.INCOMPARABLE


def dominates(a: Partition, b: Partition) -> bool:
    """True iff ``a >= b`` in dominance order."""
    return dominance_compare(a, b) in (Dominance.GREATER_OR_EQUAL, Dominance.EQUAL)


@lru_cache(maxsize=None)
def dim_irrep(mu: Partition) -> int:
    """Hook-length formula for the dimension of the irreducible S_n-module."""
    mu = Partition(mu)
    hooks = prod(hook(mu, x) for x in mu.cells())
    n_fact = factorial(mu.n)
    assert n_fact % hooks == 0
    return n_fact // hooks


def young_subgroup_order(lam: Partition) -> int:
    return prod(factorial(p) for p in lam)


def is_linear_extension(order) -> bool:
    """True iff ``order`` never lists a partition before one it dominates."""
    order = list(order)
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            if dominance_compare(a, b) is Dominance.GREATER_OR_EQUAL:
                return False
    return True
