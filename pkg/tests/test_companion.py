import numpy as np
import pytest

from primexp import (
    ALL_TAGS,
    ClassTag,
    InvalidOrderError,
    LastRowSpec,
    build_graph,
    enumerate_class,
    graph,
    graph_from_int,
    is_primitive,
    is_primitive_formula,
    symmetric_companion_matrix,
)
from primexp.companion import int_to_y, y_to_int


def test_tag_parse_and_str():
    assert ClassTag.parse("1,0") == ClassTag(1, 0)
    assert ClassTag.parse("01") == ClassTag(0, 1)
    assert str(ClassTag(0, 0)) == "0,0"
    with pytest.raises(InvalidOrderError):
        ClassTag.parse("1,0,1")
    with pytest.raises(InvalidOrderError):
        ClassTag(2, 0)


@pytest.mark.parametrize("n,y", [(2, ""), (5, "1"), (5, "012"), (5, "1x")])
def test_spec_rejects_bad_input(n, y):
    with pytest.raises(InvalidOrderError):
        LastRowSpec(n, ClassTag(1, 1), y)


def test_spec_rejects_bad_heavy_entry():
    with pytest.raises(InvalidOrderError):
        LastRowSpec(5, ClassTag(1, 1), "00", heavy=3)


def test_from_row():
    spec = LastRowSpec.from_row("0101", loop=True)
    assert spec == LastRowSpec(5, ClassTag(0, 1), "10")
    with pytest.raises(InvalidOrderError):
        LastRowSpec.from_row("0110")


def test_y_roundtrip():
    for v in range(64):
        assert y_to_int(int_to_y(v, 6)) == v
    assert y_to_int("100") == 1


@pytest.mark.parametrize("heavy", [1, 2])
def test_symmetric_matrix_support_matches_graph(heavy):
    for tag in ALL_TAGS:
        for y in ("0000", "1010", "1111"):
            spec = LastRowSpec(7, tag, y, heavy)
            f = symmetric_companion_matrix(spec)
            assert (f == f.T).all()
            assert f[6, 5] == heavy
            assert np.array_equal(f > 0, build_graph(spec).adjacency() > 0)


def test_graph_edges():
    g = graph(8, "1,0", "00100")
    assert g.neighbors(8) == [1, 4, 7]
    assert g.has_edge(4, 8) and not g.has_edge(3, 8)
    assert not g.has_loop
    assert g.y == "00100" and g.y_int == 4
    assert graph(5, "0,1", "00").has_loop
    assert "n=8" in str(g)


def test_enumerate_class_counts():
    items = list(enumerate_class(6, ClassTag(0, 0)))
    assert len(items) == 8
    assert {g.y for g, _ in items} == {int_to_y(v, 3) for v in range(8)}
    assert all(mult == 2 for _, mult in items)


def test_primitivity_rules_agree_with_two_colouring():
    for n in range(3, 13):
        for tag in ALL_TAGS:
            for y in range(1 << (n - 3)):
                g = graph_from_int(n, tag, y)
                assert is_primitive(g) == is_primitive_formula(g), (n, tag, g.y)


def test_imprimitive_counts_small():
    # order 4: (0,0) has V2 in {3} or {2,3}; only {2,3} gives a triangle
    prim = [is_primitive(g) for g, _ in enumerate_class(4, ClassTag(0, 0))]
    assert prim == [False, True]
    assert not any(is_primitive(g) for g, _ in enumerate_class(3, ClassTag(0, 0)))
