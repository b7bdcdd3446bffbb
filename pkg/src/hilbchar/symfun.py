"""Degree-n symmetric functions in the m, e, h, p, s and big-S(t) bases.

Coefficients are exact rationals or :class:`~hilbchar.exact.RationalFn` in
the two variables ``(q, t)``. The power-sum basis is the hub for conversions,
except that s <-> m goes straight through the Kostka matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from .exact import LaurentPoly, RationalFn
from .partitions import Partition, partitions_of, transpose

BASES = ("m", "e", "h", "p", "s", "S")

Q = (1, 0)
T = (0, 1)


@dataclass(frozen=True)
class PartitionMatrix:
    """Square matrix indexed by partitions of n in ``order``."""

    n: int
    order: tuple[Partition, ...]
    rows: tuple[tuple, ...]

    def __getitem__(self, key):
        row, col = key
        return self.rows[self.index(row)][self.index(col)]

    def index(self, mu) -> int:
        return self.order.index(Partition(mu))

    def row(self, mu) -> dict[Partition, object]:
        return dict(zip(self.order, self.rows[self.index(mu)]))

    def column(self, lam) -> dict[Partition, object]:
        j = self.index(lam)
        return {mu: r[j] for mu, r in zip(self.order, self.rows)}

    def is_unitriangular(self) -> bool:
        """Ones on the diagonal, zero unless row dominates column."""
        from .partitions import dominates

        for i, mu in enumerate(self.order):
            for j, lam in enumerate(self.order):
                v = self.rows[i][j]
                if i == j and v != 1:
                    return False
                if i != j and v != 0 and not dominates(mu, lam):
                    return False
        return True

    def determinant(self) -> Fraction:
        return determinant(self.rows)


def determinant(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def invert(rows) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a rational matrix."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [[_as_int(x) for x in r[n:]] for r in a]


def _as_int(x):
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


# -- classical combinatorics -------------------------------------------------


def _horizontal_strips(kappa: tuple, size: int, bound: tuple):
    """Shapes nu containing kappa with nu/kappa a horizontal strip of ``size``
    cells, nu contained in ``bound``."""
    rows = len(bound)
    kap = tuple(kappa) + (0,) * (rows - len(kappa))

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        hi = bound[i] if i == 0 else min(bound[i], kap[i - 1])
        for v in range(min(hi, kap[i] + left), kap[i] - 1, -1):
            yield from rec(i + 1, left - (v - kap[i]), acc + [v])

    yield from rec(0, size, [])


def count_ssyt(shape: Partition, content) -> int:
    """Semistandard tableaux of ``shape`` and ``content`` by backtracking over
    successive horizontal strips."""
    shape = tuple(shape)
    content = tuple(c for c in content if c)
    if sum(shape) != sum(content):
        return 0

    @lru_cache(maxsize=None)
    def rec(kappa, k):
        if k == len(content):
            return 1 if kappa == shape else 0
        return sum(rec(nu, k + 1) for nu in _horizontal_strips(kappa, content[k], shape))

    return rec((0,) * len(shape), 0)


@lru_cache(maxsize=None)
def kostka_classical(n: int) -> PartitionMatrix:
    """K[mu, lam] = number of SSYT of shape mu and content lam."""
    if n < 1:
        raise ValueError("n must be positive")
    order = tuple(partitions_of(n))
    rows = tuple(tuple(count_ssyt(mu, lam) for lam in order) for mu in order)
    return PartitionMatrix(n, order, rows)


def z_lambda(lam: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in Partition(lam).multiplicities().items())


@lru_cache(maxsize=None)
def mn_character(mu: Partition, lam: Partition) -> int:
    """chi^mu evaluated on cycle type lam (Murnaghan-Nakayama).

    Rim hooks are removed through the beta-set of ``mu``: a hook of length r
    moves one bead from b to b - r, with sign (-1)^(beads jumped over).
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.n != lam.n:
        raise ValueError(f"size mismatch: {list(mu)} vs {list(lam)}")
    if not lam:
        return 1
    r, rest = lam[0], Partition(lam[1:])
    ell = len(mu)
    beta = [mu[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        new = sorted((beads - {b}) | {b - r}, reverse=True)
        nu = Partition(p for p in (x - (ell - 1 - i) for i, x in enumerate(new)) if p > 0)
        total += (-1) ** height * mn_character(nu, rest)
    return total


@lru_cache(maxsize=None)
def character_table(n: int) -> PartitionMatrix:
    """Rows: irreducibles mu; columns: cycle types lam."""
    order = tuple(partitions_of(n))
    return PartitionMatrix(n, order, tuple(tuple(mn_character(mu, lam) for lam in order) for mu in order))


def _power_sum_monomial_count(lam: tuple, mu: tuple) -> int:
    """Functions from parts of lam to rows of mu with row sums equal to mu."""

    @lru_cache(maxsize=None)
    def rec(i, caps):
        if i == len(lam):
            return 1 if not any(caps) else 0
        total = 0
        for j, c in enumerate(caps):
            if c >= lam[i]:
                total += rec(i + 1, caps[:j] + (c - lam[i],) + caps[j + 1:])
        return total

    return rec(0, tuple(mu))


# -- transition matrices (hub: power sums) -----------------------------------


@lru_cache(maxsize=None)
def _p_to_m(n: int):
    """p_lam = sum_mu R[lam][mu] m_mu."""
    order = partitions_of(n)
    return [[_power_sum_monomial_count(lam, mu) for mu in order] for lam in order]


@lru_cache(maxsize=None)
def _to_p(n: int, basis: str):
    """Matrix M with X_lam = sum_mu M[lam][mu] p_mu."""
    order = partitions_of(n)
    chi = character_table(n).rows
    zs = [z_lambda(lam) for lam in order]
    if basis == "p":
        return [[int(i == j) for j in range(len(order))] for i in range(len(order))]
    if basis == "s":
        return [[Fraction(chi[i][j], zs[j]) for j in range(len(order))] for i in range(len(order))]
    if basis == "m":
        return invert(_p_to_m(n))
    if basis in ("h", "e"):
        K = kostka_classical(n)
        s_to_p = _to_p(n, "s")
        rows = []
        for lam in order:
            # h_lam = sum_nu K[nu, lam] s_nu;  e_lam = sum_nu K[nu', lam] s_nu
            coeffs = [K[(transpose(nu) if basis == "e" else nu), lam] for nu in order]
            rows.append([sum(c * s_to_p[a][j] for a, c in enumerate(coeffs)) for j in range(len(order))])
        return rows
    if basis == "S":
        ones = [_one_minus_t_product(mu) for mu in order]
        return [[ones[j] * Fraction(chi[i][j], zs[j]) for j in range(len(order))] for i in range(len(order))]
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_p(n: int, basis: str):
    """Matrix M with p_mu = sum_lam M[mu][lam] X_lam."""
    order = partitions_of(n)
    chi = character_table(n).rows
    if basis == "p":
        return _to_p(n, "p")
    if basis == "s":
        return [[chi[j][i] for j in range(len(order))] for i in range(len(order))]
    if basis == "m":
        return _p_to_m(n)
    if basis in ("h", "e"):
        return invert(_to_p(n, basis))
    if basis == "S":
        return [
            [RationalFn(LaurentPoly.constant(chi[j][i]), [_t_power(r) for r in mu]) for j in range(len(order))]
            for i, mu in enumerate(order)
        ]
    raise ValueError(f"unknown basis {basis!r}")


def _t_power(r: int):
    return (0, r)


def _one_minus_t_product(mu) -> LaurentPoly:
    out = LaurentPoly.constant(1)
    for r in mu:
        out = out.times_binomial(_t_power(r))
    return out


# -- SymFunc -----------------------------------------------------------------


def _is_zero(c) -> bool:
    if isinstance(c, (RationalFn, LaurentPoly)):
        return c.is_zero()
    return c == 0


class SymFunc:
    """A homogeneous symmetric function of degree ``n`` in one basis."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for mu, c in (coeffs or {}).items():
            mu = Partition(mu)
            if mu.n != n:
                raise ValueError(f"{list(mu)} is not a partition of {n}")
            if not _is_zero(c):
                clean[mu] = c
        self.n = n
        self.basis = basis
        self.coeffs = clean

    @classmethod
    def basis_element(cls, basis: str, mu) -> SymFunc:
        mu = Partition(mu)
        return cls(mu.n, basis, {mu: 1})

    def __getitem__(self, mu):
        return self.coeffs.get(Partition(mu), 0)

    def _same(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return other if other.basis == self.basis else change_basis(other, self.basis)

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymFunc(self.n, self.basis, out)

    def __neg__(self):
        return SymFunc(self.n, self.basis, {mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, SymFunc):
            return NotImplemented
        return SymFunc(self.n, self.basis, {mu: c * scalar for mu, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.n != self.n:
            return False
        other = self._same(other)
        for mu in set(self.coeffs) | set(other.coeffs):
            a, b = self[mu], other[mu]
            if isinstance(b, RationalFn) and not isinstance(a, RationalFn):
                a, b = b, a
            if not a == b:
                return False
        return True

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis}{list(mu)}" for mu, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc(n={self.n}, {body or '0'})"


def _apply(vec: dict, matrix, n: int) -> dict:
    order = partitions_of(n)
    out = {}
    for lam, c in vec.items():
        row = matrix[order.index(lam)]
        for j, mu in enumerate(order):
            m = row[j]
            if _is_zero(m):
                continue
            term = c * m if not isinstance(m, RationalFn) else m * c
            out[mu] = out[mu] + term if mu in out else term
    return out


def change_basis(f: SymFunc, target: str) -> SymFunc:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    n = f.n
    if {f.basis, target} == {"s", "m"}:
        K = kostka_classical(n).rows
        matrix = K if f.basis == "s" else _kostka_inverse(n)
        return SymFunc(n, target, _apply(f.coeffs, matrix, n))
    in_p = _apply(f.coeffs, _to_p(n, f.basis), n)
    return SymFunc(n, target, _apply(in_p, _from_p(n, target), n))


@lru_cache(maxsize=None)
def _kostka_inverse(n: int):
    return invert(kostka_classical(n).rows)


# -- plethysm and scalar products ---------------------------------------------


def plethysm_one_minus_t(f: SymFunc) -> SymFunc:
    """The substitution p_r -> (1 - t^r) p_r, returned in the p basis."""
    in_p = change_basis(f, "p")
    out = {}
    for mu, c in in_p.coeffs.items():
        out[mu] = RationalFn(_one_minus_t_product(mu)) * c
    return SymFunc(f.n, "p", out)


def _weight(mu, q_exp, t_exp) -> RationalFn:
    return RationalFn.from_atoms(
        [tuple(r * x for x in q_exp) for r in mu],
        [tuple(r * x for x in t_exp) for r in mu],
    )


def hall_inner_qt(f: SymFunc, g: SymFunc, q=Q, t=T) -> RationalFn:
    """<p_lam, p_mu> = delta z_lam prod (1 - q^lam_i)/(1 - t^lam_i).

    ``q`` and ``t`` are exponent vectors of the monomials substituted for
    the two parameters; ``q=t`` collapses to the Hall product.
    """
    if f.n != g.n:
        raise ValueError("degree mismatch")
    a, b = change_basis(f, "p").coeffs, change_basis(g, "p").coeffs
    total = RationalFn(LaurentPoly.constant(0))
    for mu in a.keys() & b.keys():
        total = total + _weight(mu, q, t) * (a[mu] * z_lambda(mu)) * b[mu]
    return total


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Classical Hall inner product for rational coefficients."""
    if f.n != g.n:
        raise ValueError("degree mismatch")
    a, b = change_basis(f, "p").coeffs, change_basis(g, "p").coeffs
    return _as_int(sum((Fraction(a[mu]) * b[mu] * z_lambda(mu) for mu in a.keys() & b.keys()), Fraction(0)))
