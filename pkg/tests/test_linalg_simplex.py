from fractions import Fraction as Fr

from hypothesis import given, settings, strategies as st

from seqsavage import linalg
from seqsavage.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible_point, linprog


def dense_to_sparse(rows):
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


def test_rank_and_dependency():
    rows = dense_to_sparse([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(rows) == 2
    dep = linalg.dependency(rows)
    assert dep
    combo = [sum(dep.get(i, 0) * rows[i].get(j, 0) for i in range(3)) for j in range(3)]
    assert combo == [0, 0, 0]


def test_solve_and_inconsistency():
    rows = dense_to_sparse([[1, 1], [1, -1]])
    x = linalg.solve(rows, [3, 1])
    assert (x[0], x[1]) == (2, 1)
    try:
        linalg.solve(dense_to_sparse([[1, 1], [2, 2]]), [1, 3])
    except linalg.Inconsistent:
        pass
    else:
        raise AssertionError("expected inconsistency")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_left_kernel_annihilates(rows):
    sparse = dense_to_sparse(rows)
    kernel = linalg.left_kernel(sparse)
    assert len(kernel) == len(rows) - linalg.rank(sparse)
    for y in kernel:
        assert [sum(y.get(i, 0) * r.get(j, 0) for i, r in enumerate(sparse)) for j in range(4)] == [0] * 4


def test_linprog_basic():
    # min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    res = linprog([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert res.status == OPTIMAL and res.value == Fr(-14, 5)
    assert res.x[:2] == [Fr(8, 5), Fr(6, 5)]


def test_linprog_infeasible_and_unbounded():
    assert linprog([0, 0], [[1, 1]], [-1]).status == INFEASIBLE
    assert linprog([-1, 0], [[1, -1]], [0]).status == UNBOUNDED
    assert feasible_point([[1, 1]], [2]) is not None


def test_linprog_redundant_rows():
    res = linprog([1, 1], [[1, 1], [2, 2]], [2, 4])
    assert res.status == OPTIMAL and res.value == 2
