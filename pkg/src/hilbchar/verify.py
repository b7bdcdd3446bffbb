"""The identity suite behind ``hilbchar verify``.

Every check is a pure function of its parameters and returns an
(expected, actual) pair of strings; a check passes when the two agree. The
report lists checks in registration order and, within a check, in increasing
(n, k), so the emitted report is identical from run to run. Wall times are
recorded on the report object but left out of the canonical serialization.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .cycles import Cycle, ch_standard, finite_dimensional_triv_cycle, grothendieck_matrix, xi_to_symfunc
from .exact import LaurentPoly, RationalFn, q_factorial
from .hilb import (
    catalan_qt,
    fake_degree,
    fake_degree_oracle,
    fixed_point_data,
    graded_module_series,
    haiman_denominator,
    inverse_q_factorial,
    procesi_series,
    rational_catalan,
    regrade_order_to_total,
)
from .limits import check_degree
from .macdonald import kostka_macdonald
from .partitions import (
    Dominance,
    dim_irrep,
    dominance_compare,
    n_stat,
    partitions_of,
    transpose,
    young_subgroup_order,
)
from .symfun import PartitionMatrix, SymFunc, change_basis, count_ssyt, kostka_classical

# Macdonald Gram-Schmidt grows quickly with n; checks that need the
# (q, t)-Kostka table stop here even when n_max is larger.
MACDONALD_CHECK_CAP = 6
SERIES_K_CAP = 2


class VerifyParameterError(ValueError):
    pass


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    params: dict
    expected: str
    actual: str
    status: str
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        return {
            "check": self.check_id,
            "params": dict(self.params),
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
        }


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    k_max: int
    records: tuple[CheckRecord, ...]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.records)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def by_check(self) -> dict[str, list[CheckRecord]]:
        out: dict[str, list[CheckRecord]] = {}
        for r in self.records:
            out.setdefault(r.check_id, []).append(r)
        return out

    def to_json_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "k_max": self.k_max,
            "summary": {"total": len(self.records), "pass": self.passed, "fail": self.failed},
            "checks": [r.to_json_obj() for r in self.records],
        }

    @classmethod
    def from_json_obj(cls, d: dict) -> VerifyReport:
        records = tuple(
            CheckRecord(c["check"], c["params"], c["expected"], c["actual"], c["status"]) for c in d["checks"]
        )
        return cls(d["n_max"], d["k_max"], records)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "n", "k", "expected", "actual", "status"])
        for r in self.records:
            w.writerow([r.check_id, r.params.get("n", ""), r.params.get("k", ""), r.expected, r.actual, r.status])
        return buf.getvalue()


KostkaHook = Callable[[PartitionMatrix], PartitionMatrix]


def _kostka(n: int, hook: KostkaHook | None) -> PartitionMatrix:
    K = kostka_classical(n)
    return hook(K) if hook else K


def _fmt_matrix(rows) -> str:
    return ";".join(",".join(str(x) for x in r) for r in rows)


# -- individual checks --------------------------------------------------------
# each returns (expected, actual)


def check_catalan_dimension(n, k, **_):
    return str(rational_catalan(n, k)), str(catalan_qt(n, k).evaluate((1, 1)))


def check_procesi_dimension(n, k, **_):
    return str((k * n + 1) ** (n - 1)), str(procesi_series(n, k).evaluate((1, 1)))


def check_small_values(**_):
    s, t = LaurentPoly.gens(2)
    expected = f"{s + t} | {1 + s + t}"
    return expected, f"{catalan_qt(2, 1)} | {procesi_series(2, 1)}"


def check_macdonald_specializations(n, kostka_hook=None, **_):
    table = kostka_macdonald(n)
    K = _kostka(n, kostka_hook)
    order = table.order
    at01 = [[table[lam, mu].evaluate((0, 1)) for lam in order] for mu in order]
    at11 = [[table[lam, mu].evaluate((1, 1)) for lam in order] for mu in order]
    # row mu of K[lam, mu](0, 1) should be the Kostka column of mu, i.e. K[lam, mu] classical
    expect01 = [[K[lam, mu] for lam in order] for mu in order]
    expect11 = [[dim_irrep(lam) for lam in order] for _ in order]
    return (
        _fmt_matrix(expect01) + " / " + _fmt_matrix(expect11),
        _fmt_matrix(at01) + " / " + _fmt_matrix(at11),
    )


def check_denominator_form(n, **_):
    bad = []
    for mu in partitions_of(n):
        d = fixed_point_data(mu)
        rhs = d.omega * LaurentPoly.monomial((n_stat(mu), n_stat(transpose(mu))))
        if haiman_denominator(mu) != rhs:
            bad.append(list(mu))
    return "mismatches=[]", f"mismatches={bad}"


def check_fake_degrees(n, **_):
    oracle = fake_degree_oracle(n)
    bad = [list(mu) for mu in partitions_of(n) if fake_degree(mu) != oracle[mu]]
    total = LaurentPoly.constant(0, 1)
    for mu in partitions_of(n):
        total = total + fake_degree(mu) * dim_irrep(mu)
    return (
        f"mismatches=[] sum={q_factorial(n)}",
        f"mismatches={bad} sum={total}",
    )


def check_series_relation(n, k, **_):
    p1 = graded_module_series(n, k, "P1").value
    p2 = graded_module_series(n, k, "P2").value
    N = n * (n - 1) // 2
    # P1 = v^(Nk) / [n]_{v^-1}! * P2, cross-multiplied
    lhs = p1 * RationalFn(inverse_q_factorial(n))
    rhs = p2 * RationalFn(LaurentPoly.monomial((N * k,)))
    return "equal", "equal" if lhs == rhs else "different"


def check_cycles_schur(n, kostka_hook=None, **_):
    bad = []
    for mu in partitions_of(n):
        f = change_basis(xi_to_symfunc(ch_standard(mu)), "s")
        if f != SymFunc.basis_element("s", mu):
            bad.append(list(mu))
    G = grothendieck_matrix(n)
    K = _kostka(n, kostka_hook)
    return (
        "mismatches=[] unitriangular=True det=1 equals_kostka=True",
        f"mismatches={bad} unitriangular={G.is_unitriangular()} det={G.determinant()} "
        f"equals_kostka={G.rows == K.rows}",
    )


def check_multiplicity_identity(n, kostka_hook=None, **_):
    K = _kostka(n, kostka_hook)
    order = partitions_of(n)
    expected = [factorial(n) // young_subgroup_order(lam) for lam in order]
    actual = [sum(K[nu, lam] * dim_irrep(nu) for nu in order) for lam in order]
    return str(expected), str(actual)


def check_regrading(n, k, **_):
    c = catalan_qt(n, k)
    r = regrade_order_to_total(c)
    expected = str(rational_catalan(n, k))
    actual = str(r.evaluate((1, 1)))
    if (n, k) == (2, 1):
        s, t = LaurentPoly.gens(2)
        expected += f" {s * t + s * t ** -1}"
        actual += f" {r}"
    return expected, actual


def check_catalan_symmetry(n, k, **_):
    c = catalan_qt(n, k)
    swapped = c.substitute_monomial(((0, 1), (1, 0)))
    return "symmetric", "symmetric" if swapped == c else "asymmetric"


def check_nonnegative_integrality(n, k, **_):
    polys = {"catalan": catalan_qt(n, k)}
    if n <= MACDONALD_CHECK_CAP:
        polys["procesi"] = procesi_series(n, k)
    if k == 1:
        polys.update({f"fake{list(mu)}": fake_degree(mu) for mu in partitions_of(n)})
        if n <= MACDONALD_CHECK_CAP:
            table = kostka_macdonald(n)
            polys.update({f"K{list(a)}{list(b)}": v for (a, b), v in table.entries.items()})
    bad = sorted(name for name, p in polys.items() if not p.has_nonnegative_integer_coefficients())
    return "violations=[]", f"violations={bad}"


def check_kostka_dominance(n, kostka_hook=None, **_):
    K = _kostka(n, kostka_hook)
    order = partitions_of(n)
    bad = []
    for mu in order:
        for lam in order:
            rel = dominance_compare(mu, lam)
            ok = (K[mu, lam] == 0) if rel not in (Dominance.GREATER_OR_EQUAL, Dominance.EQUAL) else K[mu, lam] >= 1
            if not ok:
                bad.append((list(mu), list(lam)))
    return "violations=[]", f"violations={bad}"


def check_kostka_oracle(n, kostka_hook=None, **_):
    K = _kostka(n, kostka_hook)
    order = partitions_of(n)
    expected = [[count_ssyt(mu, lam) for lam in order] for mu in order]
    return _fmt_matrix(expected), _fmt_matrix(K.rows)


def check_transpose_reversal(n, seed=0, **_):
    order = partitions_of(n)
    pairs = [(a, b) for a in order for b in order]
    rng = random.Random(seed * 1009 + n)
    # exhaustive when small, a seeded sample otherwise
    if len(pairs) > 400:
        pairs = rng.sample(pairs, 400)
    flip = {
        Dominance.GREATER_OR_EQUAL: Dominance.LESS_OR_EQUAL,
        Dominance.LESS_OR_EQUAL: Dominance.GREATER_OR_EQUAL,
        Dominance.EQUAL: Dominance.EQUAL,
        Dominance.INCOMPARABLE: Dominance.INCOMPARABLE,
    }
    bad = [
        (list(a), list(b))
        for a, b in pairs
        if dominance_compare(transpose(a), transpose(b)) != flip[dominance_compare(a, b)]
    ]
    return "violations=[]", f"violations={bad}"


def check_n2_fixture(**_):
    expected = Cycle(2, {(2,): 1, (1, 1): 1})
    return f"{expected!r} L(triv)={Cycle.component((2,))!r}", (
        f"{ch_standard((2,))!r} L(triv)={finite_dimensional_triv_cycle(2)!r}"
    )


# -- registry -------------------------------------------------------------------


def _grid(n_lo, n_hi, k_hi=None):
    for n in range(n_lo, n_hi + 1):
        if k_hi is None:
            yield {"n": n}
        else:
            for k in range(1, k_hi + 1):
                yield {"n": n, "k": k}


def _plan(n_max: int, k_max: int):
    mac = min(n_max, MACDONALD_CHECK_CAP)
    return [
        ("catalan-dimension", check_catalan_dimension, _grid(2, n_max, k_max)),
        ("procesi-dimension", check_procesi_dimension, _grid(2, mac, k_max)),
        ("small-values", check_small_values, [{}]),
        ("macdonald-specializations", check_macdonald_specializations, _grid(1, mac)),
        ("denominator-form", check_denominator_form, _grid(1, n_max)),
        ("fake-degrees", check_fake_degrees, _grid(1, n_max)),
        ("series-relation", check_series_relation, _grid(2, n_max, min(k_max, SERIES_K_CAP))),
        ("cycles-schur", check_cycles_schur, _grid(1, n_max)),
        ("multiplicity-identity", check_multiplicity_identity, _grid(1, n_max)),
        ("regrading", check_regrading, _grid(2, n_max, k_max)),
        ("catalan-symmetry", check_catalan_symmetry, _grid(2, n_max, k_max)),
        ("nonnegative-integrality", check_nonnegative_integrality, _grid(2, n_max, k_max)),
        ("kostka-oracle", check_kostka_oracle, _grid(1, n_max)),
        ("kostka-dominance", check_kostka_dominance, _grid(1, n_max)),
        ("transpose-reversal", check_transpose_reversal, _grid(1, n_max)),
        ("n2-fixture", check_n2_fixture, [{}]),
    ]


CHECK_IDS = tuple(name for name, _, _ in _plan(2, 1))


def run_verify(n_max: int, k_max: int, kostka_hook: KostkaHook | None = None, seed: int = 0) -> VerifyReport:
    """Run every registered identity for 2 <= n <= n_max, 1 <= k <= k_max.

    ``kostka_hook`` lets tests tamper with the classical Kostka matrix the
    checks compare against; ``seed`` only drives sampled property checks.
    """
    if not (isinstance(n_max, int) and 2 <= n_max <= 8):
        raise VerifyParameterError(f"n_max must be between 2 and 8, got {n_max}")
    if not (isinstance(k_max, int) and 1 <= k_max <= 3):
        raise VerifyParameterError(f"k_max must be between 1 and 3, got {k_max}")
    check_degree(n_max)
    records = []
    for check_id, fn, grid in _plan(n_max, k_max):
        for params in grid:
            start = time.perf_counter()
            try:
                expected, actual = fn(**params, kostka_hook=kostka_hook, seed=seed)
            except ArithmeticError as exc:
                expected, actual = "no error", f"{type(exc).__name__}: {exc}"
            status = "pass" if expected == actual else "fail"
            records.append(
                CheckRecord(check_id, params, expected, actual, status, time.perf_counter() - start)
            )
    return VerifyReport(n_max, k_max, tuple(records))
