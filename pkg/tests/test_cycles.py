from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbchar.cycles import (
    Cycle,
    ch_standard,
    cycle_add,
    cycle_sub,
    fiber_decomposition,
    fiber_dimension,
    finite_dimensional_triv_cycle,
    grothendieck_matrix,
    symfunc_to_cycle,
    xi_to_symfunc,
)
from hilbchar.partitions import dim_irrep, dominates, partitions_of, young_subgroup_order
from hilbchar.symfun import SymFunc, change_basis, kostka_classical
from oracles import count_semistandard


def _cycles(n):
    return st.dictionaries(st.sampled_from(partitions_of(n)), st.integers(-6, 6), max_size=5).map(
        lambda d: Cycle(n, d)
    )


def test_sign_standard_module():
    for n in range(1, 7):
        assert ch_standard((1,) * n) == Cycle.component((1,) * n)


def test_trivial_standard_module():
    for n in range(1, 7):
        assert ch_standard((n,)) == Cycle(n, {lam: 1 for lam in partitions_of(n)})


def test_standard_two_one():
    assert ch_standard((2, 1)) == Cycle(3, {(2, 1): 1, (1, 1, 1): 2})


def test_standard_rows_from_tableau_counts():
    for n in range(1, 6):
        for mu in partitions_of(n):
            c = ch_standard(mu)
            assert c.is_nonnegative()
            for lam in partitions_of(n):
                assert c[lam] == count_semistandard(mu, lam)


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_cycle_leading_term(n):
    for mu in partitions_of(n):
        c = ch_standard(mu)
        assert c[mu] == 1
        for lam, k in c.items():
            assert dominates(mu, lam)


def test_n2_fixture():
    assert ch_standard((2,)) == Cycle(2, {(2,): 1, (1, 1): 1})
    assert finite_dimensional_triv_cycle(2) == Cycle.component((2,))


def test_cycle_difference_example():
    assert ch_standard((2, 1)) - Cycle.component((2, 1)) == Cycle(3, {(1, 1, 1): 2})


@given(_cycles(4))
def test_zero_is_neutral(a):
    assert a + Cycle(4) == a
    assert cycle_sub(a, a) == Cycle(4)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        cycle_add(Cycle.component((2,)), Cycle.component((3,)))
    with pytest.raises(ValueError):
        cycle_sub(Cycle.component((2,)), Cycle.component((1,)))
    with pytest.raises(ValueError):
        Cycle(3, {(2,): 1})


def test_integer_coefficients_only():
    with pytest.raises(TypeError):
        Cycle(2, {(2,): 0.5})


@pytest.mark.parametrize("n", range(1, 8))
def test_xi_of_standard_is_schur(n):
    for mu in partitions_of(n):
        f = xi_to_symfunc(ch_standard(mu))
        assert change_basis(f, "s") == SymFunc.basis_element("s", mu)


def test_xi_examples():
    assert xi_to_symfunc(Cycle(3)).coeffs == {}
    for n in range(1, 6):
        assert xi_to_symfunc(Cycle.component((1,) * n)) == SymFunc.basis_element("e", (n,))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(_cycles(n), _cycles(n))))
def test_xi_is_linear(pair):
    a, b = pair
    assert xi_to_symfunc(a + b) == xi_to_symfunc(a) + xi_to_symfunc(b)


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_round_trip_to_cycle(n):
    for mu in partitions_of(n):
        assert symfunc_to_cycle(SymFunc.basis_element("s", mu)) == ch_standard(mu)


def test_symfunc_to_cycle_rejects_fractions():
    from fractions import Fraction

    with pytest.raises(ValueError):
        symfunc_to_cycle(SymFunc(2, "m", {(2,): Fraction(1, 2)}))


@pytest.mark.parametrize("n", range(1, 9))
def test_grothendieck_matrix(n):
    G = grothendieck_matrix(n)
    assert len(G.order) == len(partitions_of(n))
    assert G.rows == kostka_classical(n).rows
    assert G.is_unitriangular()
    assert G.determinant() == 1
    assert G.has_integral_inverse()


def test_grothendieck_matrix_size_four():
    assert len(grothendieck_matrix(4).rows) == 5


def test_inverse_is_inverse():
    G = grothendieck_matrix(5)
    inv = G.inverse()
    size = len(G.order)
    for i in range(size):
        for j in range(size):
            assert sum(G.rows[i][k] * inv.rows[k][j] for k in range(size)) == (1 if i == j else 0)


def test_fiber_examples():
    for n in range(1, 7):
        assert fiber_decomposition((n,)) == {(n,): 1}
        assert fiber_dimension((n,)) == 1
        assert fiber_decomposition((1,) * n) == {mu: dim_irrep(mu) for mu in partitions_of(n)}
        assert fiber_dimension((1,) * n) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_fiber_dimension_identity(n):
    for lam in partitions_of(n):
        assert fiber_dimension(lam) == factorial(n) // young_subgroup_order(lam)
