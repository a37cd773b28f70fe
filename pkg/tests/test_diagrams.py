"""Grid diagrams: edge bookkeeping, equality closure into faces, simple
vertices as path systems, and the edge-to-root dictionary."""

import itertools

import pytest

from gzpoly.diagrams import (
    Edge,
    adjacent_vertices,
    all_edges,
    check_edges,
    close_face,
    diagram_of_sigma,
    edge_endpoints,
    edge_of_facet,
    edge_roots,
    face_contains,
    face_has_point,
    facet_of_edge,
    format_diagram,
    grid_points,
    is_simple,
    parse_diagram,
    sigma_of,
    simple_diagrams,
    switch_edge,
    tight_facets,
    tree_edge_root,
    tree_paths,
    vertex_point,
)
from gzpoly.polytope import Facet, GZShape, contains
from gzpoly.weyl import act_weight, all_perms, length, negate, pairing

D_ID3 = frozenset({Edge("R", 2, 1), Edge("R", 2, 2), Edge("R", 3, 1)})
D_W03 = frozenset({Edge("L", 2, 1), Edge("L", 2, 2), Edge("L", 3, 1)})


def all_subsets(n):
    es = all_edges(n)
    for r in range(len(es) + 1):
        for combo in itertools.combinations(es, r):
            yield frozenset(combo)


def test_grid_and_edges():
    assert grid_points(3) == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
    assert len(all_edges(3)) == 6
    assert len(all_edges(4)) == 12
    assert edge_endpoints(Edge("L", 2, 1)) == ((2, 1), (1, 1))
    assert edge_endpoints(Edge("R", 2, 1)) == ((2, 1), (1, 2))
    check_edges(3, D_ID3)
    with pytest.raises(ValueError):
        check_edges(3, {Edge("R", 1, 1)})
    with pytest.raises(ValueError):
        check_edges(3, {Edge("X", 2, 1)})


def test_edge_facet_dictionary():
    assert facet_of_edge(Edge("L", 2, 1)) == Facet("L", 1, 1)
    assert edge_of_facet(Facet("R", 2, 1)) == Edge("R", 3, 1)
    for e in all_edges(4):
        assert edge_of_facet(facet_of_edge(e)) == e


def test_switch_edge():
    d = switch_edge(D_ID3, Edge("R", 2, 1))
    assert d == frozenset({Edge("L", 2, 1), Edge("R", 2, 2), Edge("R", 3, 1)})
    assert sigma_of(3, d) == (2, 1, 3)
    assert sigma_of(3, switch_edge(D_ID3, Edge("R", 3, 1))) == (1, 3, 2)
    with pytest.raises(ValueError):
        switch_edge(D_ID3, Edge("L", 2, 1))


def test_close_face_whole_polytope():
    f = close_face(3, frozenset())
    assert not f.empty
    assert f.dim == 3
    assert len(f.blocks) == 6  # all singletons
    assert f.anchors.count(None) == 3


def test_close_face_simple_vertex():
    f = close_face(3, D_ID3)
    assert f.dim == 0
    assert not f.empty
    assert tight_facets(f) == frozenset(facet_of_edge(e) for e in D_ID3)


def test_close_face_empty_by_order_violation():
    # closing these three merges blocks anchored at different weight slots
    bad = frozenset({Edge("L", 3, 1), Edge("R", 3, 1), Edge("R", 2, 2)})
    f = close_face(3, bad)
    assert f.empty
    assert f.dim == -1


def test_close_face_nonsimple_vertex():
    ns = frozenset({Edge("R", 2, 1), Edge("L", 2, 2), Edge("L", 3, 1)})
    f = close_face(3, ns)
    assert f.dim == 0
    assert f.blocks == (((1, 1),), ((1, 2), (2, 1), (2, 2), (3, 1)), ((1, 3),))
    assert f.anchors == (1, 2, 3)
    assert len(tight_facets(f)) == 4  # more than d = 3 facets meet here
    assert face_has_point(f, (0, 1, 3), ((1, 1), (1,)))
    assert not face_has_point(f, (0, 1, 3), ((0, 1), (0,)))


def test_close_face_monotone_and_contains():
    whole = close_face(3, frozenset())
    for d in all_subsets(3):
        f = close_face(3, d)
        if f.empty:
            continue
        assert face_contains(whole, f)
        for e in all_edges(3):
            g = close_face(3, d | {e})
            if not g.empty:
                assert face_contains(f, g)
        assert face_contains(f, f)


def test_face_contains_is_a_partial_order_on_vertices():
    v_id = close_face(3, D_ID3)
    v_w0 = close_face(3, D_W03)
    assert not face_contains(v_id, v_w0)
    assert not face_contains(v_w0, v_id)


def test_is_simple_census():
    for n in (2, 3):
        count = sum(1 for d in all_subsets(n) if is_simple(n, d))
        assert count == [2, 6][n - 2]
    assert is_simple(3, D_ID3)
    assert not is_simple(3, frozenset())
    assert not is_simple(3, frozenset({Edge("L", 2, 1), Edge("R", 2, 1), Edge("R", 3, 1)}))


def test_is_simple_second_characterization():
    # one up-edge per grid point below row 1, and in each row every L sits
    # strictly left of every R
    for n in (3, 4):
        for d in (all_subsets(n) if n == 3 else map(frozenset, itertools.combinations(all_edges(4), 6))):
            per_point = {}
            for e in d:
                per_point.setdefault((e.row, e.col), []).append(e.kind)
            rows_ok = all(
                per_point.get((r, c)) is not None and len(per_point[(r, c)]) == 1
                for r in range(2, n + 1)
                for c in range(1, n - r + 2)
            )
            split_ok = all(
                max((e.col for e in d if e.row == r and e.kind == "L"), default=-1)
                < min((e.col for e in d if e.row == r and e.kind == "R"), default=n + 1)
                for r in range(2, n + 1)
            )
            assert is_simple(n, d) == (rows_ok and split_ok)


def test_sigma_roundtrip():
    for n in (2, 3, 4, 5):
        for w in all_perms(n):
            d = diagram_of_sigma(n, w)
            assert is_simple(n, d)
            assert sigma_of(n, d) == w
        assert len(simple_diagrams(n)) == len(all_perms(n))
    assert diagram_of_sigma(3, (1, 2, 3)) == D_ID3
    assert diagram_of_sigma(3, (3, 2, 1)) == D_W03


def test_tree_paths_structure():
    paths = tree_paths(3, D_ID3)
    # n paths starting on row 1, lengths 0..n-1 in some order
    assert sorted(len(p) for p in paths) == [1, 2, 3]
    assert all(p[0][0] == 1 for p in paths)
    with pytest.raises(ValueError):
        tree_paths(3, frozenset())


def test_vertex_points():
    lam = (0, 1, 3)
    assert vertex_point(lam, D_ID3) == ((1, 3), (3,))
    assert vertex_point(lam, D_W03) == ((0, 1), (0,))
    shape = GZShape((0, 1, 3, 7))
    for w in all_perms(4):
        assert contains(shape, vertex_point(shape.lam, diagram_of_sigma(4, w)))


def test_tree_edge_roots_are_negative_at_the_vertex():
    for n, lam in ((3, (0, 1, 3)), (4, (0, 1, 3, 7))):
        for w in all_perms(n):
            d = diagram_of_sigma(n, w)
            mu = act_weight(w, lam)
            roots = edge_roots(n, d)
            assert len(roots) == len(d)
            assert len(set(roots.values())) == len(d)
            for e, alpha in roots.items():
                assert tree_edge_root(n, d, e) == alpha
                assert pairing(mu, alpha) < 0
            # the dictionary is exactly the set of roots negative at p(v)
            assert set(roots.values()) == {
                (i, j)
                for i in range(1, n + 1)
                for j in range(1, n + 1)
                if i != j and pairing(mu, (i, j)) < 0
            }


def test_edge_root_values_at_identity():
    roots = edge_roots(3, D_ID3)
    assert roots[Edge("R", 2, 1)] == (2, 1)
    assert roots[Edge("R", 2, 2)] == (3, 1)
    assert roots[Edge("R", 3, 1)] == (3, 2)
    roots0 = edge_roots(3, D_W03)
    assert roots0[Edge("L", 2, 1)] == (1, 3)
    assert roots0[Edge("L", 2, 2)] == (1, 2)
    assert roots0[Edge("L", 3, 1)] == (2, 3)


def test_adjacent_vertices():
    d_s1 = diagram_of_sigma(3, (2, 1, 3))
    d_s2 = diagram_of_sigma(3, (1, 3, 2))
    d_12 = diagram_of_sigma(3, (2, 3, 1))
    assert adjacent_vertices(3, D_ID3, d_s1) == (2, 1)
    assert adjacent_vertices(3, d_s1, D_ID3) == (1, 2)
    assert adjacent_vertices(3, D_ID3, d_s2) == (3, 2)
    # reflection-related vertices need not be neighbors on the polytope
    assert adjacent_vertices(3, d_s2, d_12) is None
    assert adjacent_vertices(3, D_ID3, D_ID3) is None


def test_adjacent_pair_counts():
    for n, expect in ((3, 7), (4, 46)):
        ds = simple_diagrams(n)
        pairs = 0
        for i, dv in enumerate(ds):
            for du in ds[i + 1:]:
                a = adjacent_vertices(n, dv, du)
                b = adjacent_vertices(n, du, dv)
                assert (a is None) == (b is None)
                if a is not None:
                    assert b == negate(a)
                    pairs += 1
        assert pairs == expect


def test_diagram_serialization():
    text = format_diagram(D_ID3)
    assert text == "R:2,1;R:2,2;R:3,1"
    assert parse_diagram(text) == D_ID3
    assert parse_diagram("") == frozenset()
    for w in all_perms(4):
        d = diagram_of_sigma(4, w)
        assert parse_diagram(format_diagram(d)) == d
    with pytest.raises(ValueError):
        parse_diagram("Q:2,1")
