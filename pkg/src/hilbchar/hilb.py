"""Torus-fixed-point sums on the punctual Hilbert scheme, fake degrees and the
graded module series built from them.

Fixed points are the monomial ideals I_mu. Each one contributes a rational
function whose individual poles cancel only in the full sum, so sums are
accumulated over the union denominator and divided out once at the end.

Variable order is ``(s, t)`` throughout. A cell (i, j) of d(mu) carries the
weight s^i t^j.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

from .exact import LaurentPoly, RationalFn, q_factorial, rational_sum
from .limits import check_degree
from .macdonald import kostka_macdonald
from .partitions import (
    Partition,
    arm,
    dim_irrep,
    hook,
    leg,
    n_stat,
    partitions_of,
    transpose,
)
from .symfun import mn_character, z_lambda

ONE = LaurentPoly.constant(1)
S_GEN, T_GEN = LaurentPoly.gens(2)

# s -> s t, t -> s t^-1
ORDER_TO_TOTAL = ((1, 1), (1, -1))


def omega_atoms(mu: Partition) -> list[tuple[int, int]]:
    """Atoms of Omega(mu): (1 - s^(1+l) t^-a)(1 - s^-l t^(1+a)) per cell."""
    out = []
    for x in mu.cells():
        a, l = arm(mu, x), leg(mu, x)
        out.append((1 + l, -a))
        out.append((-l, 1 + a))
    return out


def _product_of_binomials(atoms) -> LaurentPoly:
    out = ONE
    for atom in atoms:
        out = out.times_binomial(atom)
    return out


@dataclass(frozen=True)
class FixedPointData:
    """Localization data at the fixed point I_mu."""

    mu: Partition
    B: LaurentPoly
    Pi: LaurentPoly
    omega_inverse: RationalFn = field(repr=False)

    @property
    def omega(self) -> LaurentPoly:
        return _product_of_binomials(self.omega_factors)

    @property
    def omega_factors(self) -> list[tuple[int, int]]:
        return omega_atoms(self.mu)

    @property
    def pi_factors(self) -> list[tuple[int, int]]:
        return [x for x in self.mu.cells() if x != (0, 0)]

    @cached_property
    def P(self) -> LaurentPoly:
        """sum_lam s^n(mu) K[lam, mu](t, s^-1) dim(lam)."""
        return procesi_fiber(self.mu)


def fixed_point_data(mu) -> FixedPointData:
    mu = Partition(mu)
    check_degree(mu.n)
    cells = list(mu.cells())
    B = LaurentPoly({(i, j): 1 for i, j in cells})
    Pi = _product_of_binomials([x for x in cells if x != (0, 0)])
    return FixedPointData(mu, B, Pi, RationalFn(ONE, omega_atoms(mu)))


# K(q, t) -> K(t, s^-1): q -> t, t -> s^-1
_KOSTKA_TO_FIBER = ((0, 1), (-1, 0))


def procesi_fiber(mu) -> LaurentPoly:
    mu = Partition(mu)
    check_degree(mu.n)
    return _procesi_fiber(mu)


@lru_cache(maxsize=None)
def _procesi_fiber(mu: Partition) -> LaurentPoly:
    table = kostka_macdonald(mu.n)
    shift = LaurentPoly.monomial((n_stat(mu), 0))
    total = LaurentPoly.constant(0)
    for lam in partitions_of(mu.n):
        total = total + table[lam, mu].substitute_monomial(_KOSTKA_TO_FIBER) * dim_irrep(lam)
    return total * shift


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    check_degree(n)


def _twist(mu: Partition, k: int) -> LaurentPoly:
    """s^(k n(mu)) t^(k n(mu^t))."""
    return LaurentPoly.monomial((k * n_stat(mu), k * n_stat(transpose(mu))))


_ONE_MINUS_S_T = ONE.times_binomial((1, 0)).times_binomial((0, 1))


def catalan_term(mu: Partition, k: int) -> RationalFn:
    d = fixed_point_data(mu)
    num = _twist(mu, k) * _ONE_MINUS_S_T * d.Pi * d.B
    return d.omega_inverse * num


def catalan_qt(n: int, k: int) -> LaurentPoly:
    """C_n^(k)(s, t) as the fixed-point sum over all mu of n."""
    _check_nk(n, k)
    return _catalan_qt(n, k)


@lru_cache(maxsize=None)
def _catalan_qt(n: int, k: int) -> LaurentPoly:
    total = rational_sum(catalan_term(mu, k) for mu in partitions_of(n))
    return total.force_polynomial()


def haiman_denominator_pairs(mu: Partition):
    """Pairs (a, b) for the factors x^a - x^b = (t^arm - s^(1+leg)), (s^leg - t^(1+arm))."""
    pairs = []
    for x in mu.cells():
        a, l = arm(mu, x), leg(mu, x)
        pairs.append(((0, a), (1 + l, 0)))
        pairs.append(((l, 0), (0, 1 + a)))
    return pairs


def haiman_denominator(mu: Partition) -> LaurentPoly:
    """The expanded product of (t^arm - s^(1+leg))(s^leg - t^(1+arm))."""
    out = ONE
    for a, b in haiman_denominator_pairs(mu):
        out = out * (LaurentPoly.monomial(a) - LaurentPoly.monomial(b))
    return out


def procesi_term(mu: Partition, k: int) -> RationalFn:
    d = fixed_point_data(mu)
    num = d.P * _ONE_MINUS_S_T * _twist(mu, k) * d.Pi * d.B
    return RationalFn.inverse_binomial_differences(haiman_denominator_pairs(mu)) * num


def procesi_series(n: int, k: int) -> LaurentPoly:
    """Poincare series of sections of the Procesi bundle twisted by L^(k-1)."""
    _check_nk(n, k)
    return _procesi_series(n, k)


@lru_cache(maxsize=None)
def _procesi_series(n: int, k: int) -> LaurentPoly:
    total = rational_sum(procesi_term(mu, k) for mu in partitions_of(n))
    return total.force_polynomial()


def regrade_order_to_total(f: LaurentPoly) -> LaurentPoly:
    """Weight (i, j) becomes (i + j, i - j)."""
    return f.substitute_monomial(ORDER_TO_TOTAL)


def rational_catalan(n: int, k: int) -> int:
    num = comb((k + 1) * n, n)
    assert num % (k * n + 1) == 0
    return num // (k * n + 1)


# -- fake degrees ------------------------------------------------------------


def fake_degree(mu) -> LaurentPoly:
    """v^n(mu) [n]_v! / prod over cells [hook]_v."""
    mu = Partition(mu)
    if not mu:
        return LaurentPoly.constant(1, 1)
    n = mu.n
    f = RationalFn.from_atoms(
        [(i,) for i in range(1, n + 1)],
        [(hook(mu, x),) for x in mu.cells()],
        nvars=1,
    )
    return f.force_polynomial().shift((n_stat(mu),))


def fake_degree_oracle(n: int) -> dict:
    """Graded multiplicities in the coinvariant algebra of the reflection
    representation, from Molien series and characters.

    The graded trace of a permutation of cycle type lam on C[h] is
    (1 - v) / prod (1 - v^lam_i); multiplying by prod_{i>=2} (1 - v^i)
    divides out the invariants.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_degree(n)
    return dict(_fake_degree_oracle(n))


@lru_cache(maxsize=None)
def _fake_degree_oracle(n: int) -> dict:
    order = partitions_of(n)
    out = {}
    for mu in order:
        terms = []
        for lam in order:
            chi = mn_character(mu, lam)
            if chi:
                trace = RationalFn.from_atoms(
                    [(i,) for i in range(1, n + 1)], [(r,) for r in lam], nvars=1
                )
                terms.append(trace * Fraction(chi, z_lambda(lam)))
        out[mu] = rational_sum(terms).force_polynomial()
    return out


# -- graded module series ----------------------------------------------------


@dataclass(frozen=True)
class GradedSeries:
    """A rational series in v with denominator a product of (1 - v^i)."""

    n: int
    k: int
    variant: str
    value: RationalFn
    extension: bool = False

    @property
    def numerator(self) -> LaurentPoly:
        return self.value.num

    @property
    def denominator(self) -> Counter:
        return Counter(self.value.den)

    @property
    def N(self) -> int:
        return self.n * (self.n - 1) // 2

    def expand(self, order: int) -> dict[int, object]:
        """Laurent coefficients of every power v^e with e <= order."""
        return series_expand(self.value, order)


def series_expand(f: RationalFn, order: int) -> dict[int, object]:
    if f.nvars != 1:
        raise ValueError("series expansion needs a one-variable function")
    if f.is_zero():
        return {}
    lo = f.num.min_exponents()[0]
    if order < lo:
        return {}
    coeffs = [0] * (order - lo + 1)
    for (e,), c in f.num.items():
        if e <= order:
            coeffs[e - lo] += c
    for (i,), mult in f.den.items():
        for _ in range(mult):
            # multiply by 1 / (1 - v^i) = sum_j v^(i j)
            for e in range(i, len(coeffs)):
                coeffs[e] += coeffs[e - i]
    return {lo + j: c for j, c in enumerate(coeffs) if c}


def inverse_q_factorial(n: int) -> LaurentPoly:
    """[n]_{v^-1}!"""
    return q_factorial(n).substitute_monomial(((-1,),))


def graded_module_series(n: int, k: int, variant: str = "P1") -> GradedSeries:
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0:
        raise ValueError("k must be non-negative")
    if variant not in ("P1", "P2"):
        raise ValueError("variant must be P1 or P2")
    N = n * (n - 1) // 2
    total = LaurentPoly.constant(0, 1)
    for mu in partitions_of(n):
        f = fake_degree(mu)
        total = total + f * f.evaluate((1,)) * LaurentPoly.monomial(
            (k * (n_stat(mu) - n_stat(transpose(mu))),)
        )
    if variant == "P1":
        total = total.shift((N * k,))
    else:
        total = total * inverse_q_factorial(n)
    value = RationalFn(total, [(i,) for i in range(2, n + 1)])
    return GradedSeries(n, k, variant, value, extension=(k == 0))
