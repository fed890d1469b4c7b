import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primexp import (
    ALL_TAGS,
    BooleanMatrix,
    ImprimitiveError,
    exp_pair,
    exp_vertex,
    exponent_oracle_bfs,
    exponent_oracle_power,
    graph,
    graph_from_int,
    is_primitive,
    parity_distances,
    wielandt_bound,
)
from primexp import fixtures as fx


def _numpy_exponent(a: np.ndarray):
    """Independent reference: integer matrix powers of the explicit 0/1 matrix."""
    n = len(a)
    m = (a > 0).astype(np.int64)
    p = m.copy()
    for k in range(1, wielandt_bound(n) + 1):
        if (p > 0).all():
            return k
        p = ((p @ m) > 0).astype(np.int64)
    return None


def test_wielandt_bound_attained():
    for n in range(3, 9):
        assert exponent_oracle_power(fx.wielandt(n)) == wielandt_bound(n) == (n - 1) ** 2 + 1


def test_boolean_matrix_algebra():
    a = BooleanMatrix.from_array(np.array([[0, 1], [1, 1]]))
    assert (a @ BooleanMatrix.identity(2)).rows == a.rows
    assert not a.is_positive() and (a ** 2).is_positive()
    assert a.entry(1, 2) == 1 and a.entry(1, 1) == 0


def test_power_oracle_rejects_imprimitive():
    with pytest.raises(ImprimitiveError):
        exponent_oracle_power(fx.imprimitive_even())
    with pytest.raises(ImprimitiveError):
        exponent_oracle_bfs(fx.imprimitive_odd())


def test_parity_distances_on_triangle_with_tail():
    g = fx.lollipop(5)  # path 1-2-3-4-5 plus edge 3-5
    d = parity_distances(g)
    assert d.distance(1, 1) == 0
    assert d.d_odd[0][0] == 7  # out to the triangle and back
    assert d.d_even[0][4] == 4


def test_local_exponents_of_lollipop():
    g = fx.lollipop(6)
    assert exp_vertex(g, 1) == max(exp_pair(g, 1, j) for j in range(1, 7))
    assert exponent_oracle_bfs(g) == 8


@pytest.mark.parametrize("n", range(3, 10))
def test_oracles_agree_with_numpy_reference(n):
    for tag in ALL_TAGS:
        for y in range(1 << (n - 3)):
            g = graph_from_int(n, tag, y)
            ref = _numpy_exponent(g.adjacency())
            if ref is None:
                assert not is_primitive(g)
                continue
            assert exponent_oracle_bfs(g) == exponent_oracle_power(g) == ref


@settings(max_examples=60, deadline=None)
@given(n=st.integers(11, 18), tag=st.sampled_from(ALL_TAGS), data=st.data())
def test_bfs_equals_power_random(n, tag, data):
    y = data.draw(st.integers(0, (1 << (n - 3)) - 1))
    g = graph_from_int(n, tag, y)
    if is_primitive(g):
        assert exponent_oracle_bfs(g) == exponent_oracle_power(g)


def test_exponent_of_loop_only_graph():
    assert exponent_oracle_bfs(graph(3, "0,1", "")) == 4
