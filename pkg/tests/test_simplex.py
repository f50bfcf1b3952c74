import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from harmful_rum._simplex import feasible_point

F = Fraction


def _solves(A, b, x):
    return all(v >= 0 for v in x) and all(
        sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b)
    )


def test_trivial_systems():
    assert feasible_point([[F(1), F(1)]], [F(1)]) is not None
    assert feasible_point([[F(1), F(1)]], [F(-1)]) is None
    assert feasible_point([[F(1)], [F(1)]], [F(1), F(2)]) is None


def test_redundant_rows_are_fine():
    A = [[F(1), F(1), F(1)], [F(1), F(1), F(1)], [F(1), F(0), F(0)]]
    b = [F(1), F(1), F(1, 3)]
    x = feasible_point(A, b)
    assert x is not None and _solves(A, b, x)


def test_boundary_solution_with_zero_weight():
    # only x = (1, 0) satisfies both rows
    A = [[F(1), F(1)], [F(1), F(2)]]
    b = [F(1), F(1)]
    assert feasible_point(A, b) == [F(1), F(0)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(1, 8))
def test_planted_solution_is_found(seed, m, nv):
    rng = random.Random(seed)
    A = [[F(rng.randint(-3, 3)) for _ in range(nv)] for _ in range(m)]
    planted = [F(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(nv)]
    b = [sum(a * v for a, v in zip(row, planted)) for row in A]
    x = feasible_point(A, b)
    assert x is not None and _solves(A, b, x)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_certified_infeasibility(seed, nv):
    # a row with nonnegative coefficients and a negative target cannot be met
    rng = random.Random(seed)
    A = [[F(rng.randint(-3, 3)) for _ in range(nv)] for _ in range(2)]
    A.append([F(rng.randint(0, 3)) for _ in range(nv)])
    b = [F(rng.randint(-5, 5)) for _ in range(2)] + [F(-1)]
    assert feasible_point(A, b) is None
