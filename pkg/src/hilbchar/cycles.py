"""Characteristic cycles of standard modules as formal sums of components Z_lam.

A cycle of degree n is an integer combination of the components [Z_lam],
lam a partition of n. Standard modules have the Kostka row of their label as
cycle; the map xi sends [Z_lam] to m_lam.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .limits import check_degree
from .partitions import Partition, dim_irrep, partitions_of
from .symfun import PartitionMatrix, SymFunc, change_basis, invert, kostka_classical


class Cycle:
    """Integer combination of [Z_lam] for lam partitions of ``n``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping | None = None):
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.n != n:
                raise ValueError(f"{list(lam)} is not a partition of {n}")
            if not isinstance(c, int):
                raise TypeError("cycle coefficients are integers")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.n = n
        self.coeffs = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def component(cls, lam) -> Cycle:
        lam = Partition(lam)
        return cls(lam.n, {lam: 1})

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def items(self):
        """Nonzero components in the fixed partition order."""
        return [(lam, self.coeffs[lam]) for lam in partitions_of(self.n) if lam in self.coeffs]

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def __add__(self, other):
        return cycle_add(self, other)

    def __sub__(self, other):
        return cycle_sub(self, other)

    def __neg__(self):
        return Cycle(self.n, {lam: -c for lam, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"Cycle(n={self.n}, 0)"
        body = " + ".join(
            (f"{c}" if c != 1 else "") + f"[Z{list(lam)}]" for lam, c in self.items()
        )
        return f"Cycle(n={self.n}, {body})"


def _check_same_degree(a: Cycle, b: Cycle) -> None:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")


def cycle_add(a: Cycle, b: Cycle) -> Cycle:
    _check_same_degree(a, b)
    out = dict(a.coeffs)
    for lam, c in b.coeffs.items():
        out[lam] = out.get(lam, 0) + c
    return Cycle(a.n, out)


def cycle_sub(a: Cycle, b: Cycle) -> Cycle:
    _check_same_degree(a, b)
    return cycle_add(a, -b)


def ch_standard(mu) -> Cycle:
    """Cycle of the standard module labelled by mu: sum_lam K[mu, lam] [Z_lam]."""
    mu = Partition(mu)
    return Cycle(mu.n, kostka_classical(mu.n).row(mu))


def finite_dimensional_triv_cycle(n: int) -> Cycle:
    """The cycle [Z_(n)] of the finite-dimensional simple module L(triv)."""
    return Cycle.component((n,))


def xi_to_symfunc(c: Cycle) -> SymFunc:
    return SymFunc(c.n, "m", dict(c.coeffs))


def symfunc_to_cycle(f: SymFunc) -> Cycle:
    """Read m-basis coefficients of f as a cycle; they must be integers."""
    coeffs = {}
    for lam, c in change_basis(f, "m").coeffs.items():
        if c != int(c):
            raise ValueError(f"non-integral coefficient {c} at {list(lam)}")
        coeffs[lam] = int(c)
    return Cycle(f.n, coeffs)


@dataclass(frozen=True)
class CycleMatrix(PartitionMatrix):
    """Matrix of the map [Delta(mu)] -> Ch(Delta(mu)) in the bases indexed by
    partitions; rows are standard modules, columns components."""

    def inverse(self) -> CycleMatrix:
        inv = invert(self.rows)
        return CycleMatrix(self.n, self.order, tuple(tuple(r) for r in inv))

    def has_integral_inverse(self) -> bool:
        return all(isinstance(x, int) for r in self.inverse().rows for x in r)


def grothendieck_matrix(n: int) -> CycleMatrix:
    if n < 1:
        raise ValueError("n must be positive")
    check_degree(n)
    order = tuple(partitions_of(n))
    rows = tuple(tuple(ch_standard(mu)[lam] for lam in order) for mu in order)
    return CycleMatrix(n, order, rows)


def fiber_decomposition(lam) -> dict[Partition, int]:
    """Multiplicities of irreducibles mu in the fiber at I_lam: K[mu, lam]."""
    lam = Partition(lam)
    column = kostka_classical(lam.n).column(lam)
    return {mu: k for mu, k in column.items() if k}


def fiber_dimension(lam) -> int:
    return sum(k * dim_irrep(mu) for mu, k in fiber_decomposition(lam).items())
