"""Macdonald polynomials by Gram-Schmidt and the (q, t)-Kostka table.

Polynomials live in the two-variable ring with variables ``(q, t)``. The
Gram-Schmidt normalization uses the closed-form norm
``<P_mu, P_mu> = prod (1 - q^(a+1) t^l) / (1 - q^a t^(l+1))`` so that every
division stays inside binomial-atom denominators; each norm is first checked
against the inner product actually computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .limits import check_degree
from .exact import LaurentPoly, NonExactDivision, RationalFn
from .partitions import Partition, arm, is_linear_extension, leg, partitions_of
from .symfun import SymFunc, _from_p, _to_p, z_lambda

QT_NAMES = ("q", "t")


def _qt(a: int, b: int):
    return (a, b)


def c_mu(mu) -> LaurentPoly:
    """prod over cells of (1 - q^arm t^(leg+1)); J_mu = c_mu P_mu."""
    mu = Partition(mu)
    out = LaurentPoly.constant(1)
    for x in mu.cells():
        out = out.times_binomial(_qt(arm(mu, x), leg(mu, x) + 1))
    return out


def norm_closed_form(mu) -> RationalFn:
    mu = Partition(mu)
    cells = list(mu.cells())
    return RationalFn.from_atoms(
        [_qt(arm(mu, x) + 1, leg(mu, x)) for x in cells],
        [_qt(arm(mu, x), leg(mu, x) + 1) for x in cells],
    )


def _inverse_norm(mu) -> RationalFn:
    mu = Partition(mu)
    cells = list(mu.cells())
    return RationalFn.from_atoms(
        [_qt(arm(mu, x), leg(mu, x) + 1) for x in cells],
        [_qt(arm(mu, x) + 1, leg(mu, x)) for x in cells],
    )


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> tuple:
    """z_lam prod (1 - q^r)/(1 - t^r), one per partition in default order."""
    return tuple(
        RationalFn.from_atoms([(r, 0) for r in lam], [(0, r) for r in lam]) * z_lambda(lam)
        for lam in partitions_of(n)
    )


def _inner(a: list, b: list, weights) -> RationalFn:
    total = RationalFn(LaurentPoly.constant(0))
    for x, y, w in zip(a, b, weights):
        if _nz(x) and _nz(y):
            total = total + w * x * y
    return total


def _nz(c) -> bool:
    return not c.is_zero() if isinstance(c, (RationalFn, LaurentPoly)) else c != 0


class GramSchmidtError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _family(n: int, order: tuple | None):
    """P_mu for every mu of n, as (m-basis vector, p-basis vector) pairs."""
    default = partitions_of(n)
    if order is None:
        order = tuple(reversed(default))
    elif sorted(order) != sorted(default) or not is_linear_extension(order):
        raise ValueError("order must list every partition of n, increasing along dominance")
    idx = {mu: i for i, mu in enumerate(default)}
    m_to_p = _to_p(n, "m")
    weights = _pair_weights(n)
    size = len(default)
    zero = RationalFn(LaurentPoly.constant(0))
    family: dict = {}
    done = []
    for mu in order:
        m_vec = [zero] * size
        m_vec[idx[mu]] = RationalFn(LaurentPoly.constant(1))
        p_vec = [RationalFn(LaurentPoly.constant(c)) for c in m_to_p[idx[mu]]]
        m_mu_p = list(p_vec)
        for nu in done:
            nu_m, nu_p = family[nu]
            coeff = _inner(m_mu_p, nu_p, weights) * _inverse_norm(nu)
            if coeff.is_zero():
                continue
            m_vec = [a - coeff * b if _nz(b) else a for a, b in zip(m_vec, nu_m)]
            p_vec = [a - coeff * b if _nz(b) else a for a, b in zip(p_vec, nu_p)]
        # <P_mu, P_mu> = <m_mu, P_mu> since P_mu - m_mu lies in the earlier span
        norm = _inner(m_mu_p, p_vec, weights)
        if not norm == norm_closed_form(mu):
            raise GramSchmidtError(f"norm of P_{list(mu)} disagrees with the closed form")
        family[mu] = (m_vec, p_vec)
        done.append(mu)
    return default, family


def macdonald_P(mu, order=None) -> SymFunc:
    """P_mu in the monomial basis, coefficients RationalFn in (q, t)."""
    mu = Partition(mu)
    check_degree(mu.n)
    default, family = _family(mu.n, tuple(Partition(p) for p in order) if order else None)
    m_vec, _ = family[mu]
    return SymFunc(mu.n, "m", dict(zip(default, m_vec)))


def macdonald_J(mu, order=None) -> SymFunc:
    mu = Partition(mu)
    return macdonald_P(mu, order) * RationalFn(c_mu(mu))


@dataclass(frozen=True)
class MacdonaldKostkaTable:
    """K[lam, mu](q, t): coefficient of S_lam(x; t) in J_mu."""

    n: int
    order: tuple[Partition, ...]
    entries: dict

    def __getitem__(self, key) -> LaurentPoly:
        lam, mu = key
        return self.entries[(Partition(lam), Partition(mu))]

    def specialize(self, q, t) -> dict:
        return {k: v.evaluate((q, t)) for k, v in self.entries.items()}


def kostka_macdonald(n: int) -> MacdonaldKostkaTable:
    if n < 1:
        raise ValueError("n must be positive")
    # checked outside the cache so a lowered cap applies to cached tables too
    check_degree(n)
    return _kostka_macdonald(n)


@lru_cache(maxsize=None)
def _kostka_macdonald(n: int) -> MacdonaldKostkaTable:
    default, family = _family(n, None)
    p_to_S = _from_p(n, "S")
    entries = {}
    for mu in default:
        _, p_vec = family[mu]
        cmu = RationalFn(c_mu(mu))
        for j, lam in enumerate(default):
            total = RationalFn(LaurentPoly.constant(0))
            for i, c in enumerate(p_vec):
                if _nz(c):
                    total = total + c * p_to_S[i][j]
            total = total * cmu
            try:
                entries[(lam, mu)] = total.force_polynomial()
            except NonExactDivision as exc:
                raise NonExactDivision(exc.atom, f"K[{list(lam)}, {list(mu)}] is not a polynomial") from exc
    return MacdonaldKostkaTable(n, tuple(default), entries)
