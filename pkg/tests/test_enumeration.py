import pytest
from hypothesis import given, settings, strategies as st

from circuitsplit.enumeration import (CountSeries, catalan, composition_count, count_series,
                                      double_factorial_odd, enumerate_cells, enumerate_ptolemy,
                                      enumeration_table, fixed_point_counts, format_table, lagrange_count,
                                      noncrossing_partitions, omega_count, ptolemy_formula, weak_compositions,
                                      xi_image_count)
from circuitsplit.errors import SizeGuardError


def base(name, n):
    return count_series(name, n)


@pytest.mark.parametrize("n, value", [(3, 8), (4, 52), (5, 464)])
def test_omega_recursion(n, value):
    assert omega_count(n) == value


def test_composition_examples():
    assert composition_count(base("psi", 4), 4) == 117
    assert composition_count(base("omega", 4), 4) == 105
    xi_base = CountSeries("xi", (1, 1, 2, 8, 49))
    assert composition_count(xi_base, 4) == 102


def test_lagrange_examples():
    assert lagrange_count(base("psi", 5), 5) == 1565
    assert lagrange_count(CountSeries("any", (1, 7, 9)), 0) == 1


def test_psi_base_power_coefficient():
    # [x^4] (1 + x + 2x^2 + 8x^3 + 64x^4)^5
    from circuitsplit.enumeration import _power
    assert _power([1, 1, 2, 8, 64], 5, 4)[4] == 585


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=7, max_size=7))
def test_random_integer_bases_divide_exactly(tail):
    # rotations of a composition of n into n+1 parts are all distinct, so the
    # sum always splits into whole orbits of size n+1
    b = CountSeries("random", (1,) + tuple(tail))
    for n in range(7):
        assert composition_count(b, n) == lagrange_count(b, n)


def test_weak_compositions():
    comps = list(weak_compositions(3, 3))
    assert len(comps) == 10 and all(sum(c) == 3 for c in comps)


@pytest.mark.parametrize("name", ["omega", "psi", "xiImage"])
def test_three_routes_agree(name):
    b = base(name, 8)
    fixed = fixed_point_counts(b, 8)
    for n in range(9):
        assert composition_count(b, n) == lagrange_count(b, n) == fixed[n]


def test_omega_bar_is_double_factorial():
    b = base("omega", 8)
    assert [lagrange_count(b, n) for n in range(1, 9)] == [double_factorial_odd(n) for n in range(1, 9)]


def test_ptolemy_four_gon():
    diagrams = enumerate_ptolemy(4)
    assert sorted(t for _, t in diagrams) == [0, 4, 4, 4]
    assert sum(2 ** t for _, t in diagrams) == 49


def test_ptolemy_counts_match_formula():
    for n in range(3, 10):
        assert len(enumerate_ptolemy(n)) == ptolemy_formula(n)
    assert ptolemy_formula(5) == 17


def test_ptolemy_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_ptolemy(10)


@pytest.mark.parametrize("n, value", [(1, 1), (2, 2), (3, 8), (4, 49), (5, 373)])
def test_xi_image_counts(n, value):
    assert xi_image_count(n) == value


def test_enumeration_table():
    rows = {r.name: r.terms[1:] for r in enumeration_table(5)}
    assert rows == {
        "omega": (1, 2, 8, 52, 464),
        "omegaBar": (1, 3, 15, 105, 945),
        "psi": (1, 2, 8, 64, 1024),
        "psiBar": (1, 3, 15, 117, 1565),
        "xiImage": (1, 2, 8, 49, 373),
        "faithfulBar": (1, 3, 15, 102, 839),
    }
    text = format_table(enumeration_table(3))
    assert text.splitlines()[0].split() == ["n", "1", "2", "3"]


def test_noncrossing_partitions_are_catalan():
    for n in range(8):
        parts = list(noncrossing_partitions(n))
        assert len(parts) == catalan(n) == len(set(parts))


def test_cell_f_vectors():
    assert enumerate_cells("psiBar", 4).f_vector == (14, 28, 29, 24, 15, 6, 1)
    assert enumerate_cells("faithfulBar", 4).f_vector == (14, 28, 28, 20, 9, 2, 1)
    assert enumerate_cells("psi", 4).f_vector == (1, 6, 15, 20, 15, 6, 1)
    report = enumerate_cells("psiBar", 3)
    assert report.total == 15 and report.f_vector[0] == 5


def test_cell_totals_match_counts():
    for n in range(1, 7):
        assert enumerate_cells("psiBar", n).total == lagrange_count(base("psi", n), n)
        assert enumerate_cells("faithfulBar", n).total == composition_count(base("xiImage", n), n)
        assert enumerate_cells("psiBar", n).f_vector[0] == catalan(n)
        assert enumerate_cells("psi", n).total == 2 ** (n * (n - 1) // 2)


def test_cells_guard_and_unknown_space():
    with pytest.raises(SizeGuardError):
        enumerate_cells("psi", 7)
    with pytest.raises(ValueError):
        enumerate_cells("omega", 3)
