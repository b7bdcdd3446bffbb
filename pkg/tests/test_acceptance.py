"""Acceptance criteria, one test each. Every test prints a single
``[criterion NN] PASS|FAIL`` line with its wall time, measured with cold
caches so the runtime budgets are honest.

Run alone with ``pytest tests/test_acceptance.py`` (lines appear even without -s)
or ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import hilbchar.cycles
import hilbchar.exact
import hilbchar.hilb
import hilbchar.macdonald
import hilbchar.partitions
import hilbchar.symfun
from hilbchar.cycles import Cycle, ch_standard, grothendieck_matrix, xi_to_symfunc
from hilbchar.exact import LaurentPoly, RationalFn, q_factorial
from hilbchar.hilb import (
    catalan_qt,
    fake_degree,
    fake_degree_oracle,
    fixed_point_data,
    graded_module_series,
    haiman_denominator,
    procesi_series,
    regrade_order_to_total,
)
from hilbchar.macdonald import kostka_macdonald
from hilbchar.partitions import (
    dim_irrep,
    dominates,
    n_stat,
    partitions_of,
    transpose,
    young_subgroup_order,
)
from hilbchar.symfun import SymFunc, change_basis, kostka_classical

s, t = LaurentPoly.gens(2)
(v,) = LaurentPoly.gens(1)


def _clear_caches():
    for mod in (hilbchar.partitions, hilbchar.exact, hilbchar.symfun, hilbchar.macdonald, hilbchar.hilb, hilbchar.cycles):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def _criterion(capsys, number, title, budget, body):
    _clear_caches()
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        detail = body() or ""
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
        ok = True
    except AssertionError as exc:
        detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s){'  ' + detail if detail else ''}")


# 1 -------------------------------------------------------------------------------


def test_criterion_01_catalan_dimension(capsys):
    def body():
        count = 0
        for n in range(2, 7):
            for k in range(1, 4):
                got = catalan_qt(n, k).evaluate((1, 1))
                expected = comb((k + 1) * n, n)
                assert expected % (k * n + 1) == 0
                assert got == expected // (k * n + 1), (n, k, got)
                count += 1
        return f"{count} (n, k) cells exact"

    _criterion(capsys, 1, "Catalan dimension identity", 30, body)


# 2 -------------------------------------------------------------------------------


def test_criterion_02_procesi_dimension(capsys):
    def body():
        count = 0
        for n in range(2, 6):
            for k in range(1, 4):
                got = procesi_series(n, k).evaluate((1, 1))
                assert got == (k * n + 1) ** (n - 1), (n, k, got)
                count += 1
        return f"{count} (n, k) cells exact"

    _criterion(capsys, 2, "Procesi dimension identity", 60, body)


# 3 -------------------------------------------------------------------------------


def test_criterion_03_small_values(capsys):
    def body():
        assert catalan_qt(2, 1) == s + t
        assert procesi_series(2, 1) == 1 + s + t
        return "C_2 = s + t, P_2 = 1 + s + t"

    _criterion(capsys, 3, "hand-verified n=2 values", None, body)


# 4 -------------------------------------------------------------------------------


def test_criterion_04_macdonald_specializations(capsys):
    def body():
        for n in range(1, 7):
            K = kostka_macdonald(n)
            classical = kostka_classical(n)
            for lam in K.order:
                for mu in K.order:
                    assert K[lam, mu].evaluate((0, 1)) == classical[lam, mu], (lam, mu)
                    assert K[lam, mu].evaluate((1, 1)) == dim_irrep(lam), (lam, mu)
        return "n = 1..6"

    _criterion(capsys, 4, "(q,t)-Kostka at (0,1) and (1,1)", 120, body)


# 5 -------------------------------------------------------------------------------


def test_criterion_05_denominator_forms(capsys):
    def body():
        count = 0
        for n in range(1, 8):
            for mu in partitions_of(n):
                rhs = fixed_point_data(mu).omega * LaurentPoly.monomial((n_stat(mu), n_stat(transpose(mu))))
                assert haiman_denominator(mu) == rhs, mu
                count += 1
        return f"{count} partitions"

    _criterion(capsys, 5, "denominator-form equivalence", None, body)


# 6 -------------------------------------------------------------------------------


def test_criterion_06_fake_degrees(capsys):
    def body():
        for n in range(1, 7):
            oracle = fake_degree_oracle(n)
            total = LaurentPoly.constant(0, 1)
            for mu in partitions_of(n):
                assert fake_degree(mu) == oracle[mu], mu
                total = total + fake_degree(mu) * dim_irrep(mu)
            assert total == q_factorial(n), n
        return "n = 1..6"

    _criterion(capsys, 6, "fake-degree oracle agreement", None, body)


# 7 -------------------------------------------------------------------------------


def test_criterion_07_series_relation(capsys):
    def body():
        for n in range(2, 6):
            N = n * (n - 1) // 2
            inv_fact = RationalFn.from_atoms([(-i,) for i in range(1, n + 1)], [(-1,)] * n, nvars=1)
            for k in (1, 2):
                p1 = graded_module_series(n, k, "P1").value
                p2 = graded_module_series(n, k, "P2").value
                # P1 = v^(Nk) / [n]_{v^-1}! * P2, cross-multiplied
                assert p1 * inv_fact == p2 * RationalFn(v ** (N * k)), (n, k)
        return "n = 2..5, k = 1..2"

    _criterion(capsys, 7, "graded-series relation", None, body)


# 8 -------------------------------------------------------------------------------


def test_criterion_08_characteristic_cycles(capsys):
    def body():
        for n in range(1, 8):
            for mu in partitions_of(n):
                assert change_basis(xi_to_symfunc(ch_standard(mu)), "s") == SymFunc.basis_element("s", mu), mu
            G = grothendieck_matrix(n)
            assert G.is_unitriangular(), n
            assert G.determinant() == 1, n
        return "n = 1..7"

    _criterion(capsys, 8, "xi(Ch standard) = Schur; unitriangular, det 1", None, body)


# 9 -------------------------------------------------------------------------------


def test_criterion_09_multiplicity_identity(capsys):
    def body():
        for n in range(1, 8):
            K = kostka_classical(n)
            order = partitions_of(n)
            for lam in order:
                total = sum(K[nu, lam] * dim_irrep(nu) for nu in order)
                assert total == factorial(n) // young_subgroup_order(lam), lam
        return "n = 1..7"

    _criterion(capsys, 9, "multiplicity identity", None, body)


# 10 ------------------------------------------------------------------------------


def test_criterion_10_regrading(capsys):
    def body():
        for n in range(2, 7):
            for k in range(1, 4):
                r = regrade_order_to_total(catalan_qt(n, k))
                assert r.evaluate((1, 1)) == catalan_qt(n, k).evaluate((1, 1)), (n, k)
                assert r.evaluate((1, 1)) == comb((k + 1) * n, n) // (k * n + 1), (n, k)
        assert regrade_order_to_total(catalan_qt(2, 1)) == s * t + s * t ** -1
        return "C_2 -> st + st^-1"

    _criterion(capsys, 10, "total-degree regrading", None, body)


# 11 ------------------------------------------------------------------------------


@settings(max_examples=200, deadline=None, derandomize=True)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))))
def _random_dominance_properties(pair):
    a, b = pair
    assert dominates(a, b) == dominates(transpose(b), transpose(a))
    K = kostka_classical(a.n)
    if not dominates(a, b):
        assert K[a, b] == 0


def test_criterion_11_property_suites(capsys):
    def body():
        swap = ((0, 1), (1, 0))
        emitted = 0
        for n in range(2, 7):
            for k in range(1, 4):
                c = catalan_qt(n, k)
                assert c.substitute_monomial(swap) == c, (n, k)
                assert c.has_nonnegative_integer_coefficients()
                emitted += 1
        for n in range(2, 6):
            for k in range(1, 4):
                assert procesi_series(n, k).has_nonnegative_integer_coefficients(), (n, k)
                emitted += 1
        for n in range(1, 6):
            for p in kostka_macdonald(n).entries.values():
                assert p.has_nonnegative_integer_coefficients()
                emitted += 1
        for n in range(1, 9):
            for mu in partitions_of(n):
                assert fake_degree(mu).has_nonnegative_integer_coefficients()
                emitted += 1
        for n in range(2, 6):
            for k in range(0, 3):
                for variant in ("P1", "P2"):
                    coeffs = graded_module_series(n, k, variant).expand(30).values()
                    assert all(isinstance(x, int) and x >= 0 for x in coeffs), (n, k, variant)
                    emitted += 1
        # exhaustive at small n
        for n in range(1, 9):
            K = kostka_classical(n)
            for a in partitions_of(n):
                for b in partitions_of(n):
                    assert dominates(a, b) == dominates(transpose(b), transpose(a))
                    if not dominates(a, b):
                        assert K[a, b] == 0
        _random_dominance_properties()
        return f"{emitted} emitted polynomials/series checked"

    _criterion(capsys, 11, "property suites", 60, body)


# 12 ------------------------------------------------------------------------------


def test_criterion_12_n2_fixture(capsys):
    def body():
        assert ch_standard((2,)) == Cycle(2, {(2,): 1, (1, 1): 1})
        return "[Z(2)] + [Z(1,1)]"

    _criterion(capsys, 12, "n=2 fixture", None, body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
