import itertools

import pytest
from hypothesis import given, settings

from conftest import antichain, chain, posets
from ocpkit.oracle import (
    FacetInequality,
    OracleCapExceeded,
    affine_rank,
    brute_edges,
    brute_triangles,
    chain_polytope_model,
    is_edge_geometric,
    is_triangle_geometric,
    order_polytope_model,
    rho,
    smallest_face,
)
from ocpkit.poset import enumerate_antichains, enumerate_ideals, to_mask

A, B, C, D, E = range(5)


def pt(P, *items):
    return rho(to_mask(items), P.d)


def test_rho():
    assert rho(0b101, 3) == (1, 0, 1)
    assert rho(0, 2) == (0, 0)


def test_single_point_models():
    P = chain(1)
    for M in (order_polytope_model(P), chain_polytope_model(P)):
        assert sorted(M.vertices) == [(0,), (1,)]
    assert set(order_polytope_model(P).facets) == {
        FacetInequality((1,), 1), FacetInequality((-1,), 0)
    }


def test_order_model_x_poset(xposet):
    M = order_polytope_model(xposet)
    assert len(M.vertices) == 8
    assert len(M.facets) == 8
    assert FacetInequality((0, 0, 0, -1, 0), 0) in M.facets
    assert FacetInequality((1, 0, 0, 0, 0), 1) in M.facets
    # a below c gives x_c - x_a <= 0
    assert FacetInequality((-1, 0, 1, 0, 0), 0) in M.facets


def test_order_model_two_chain():
    M = order_polytope_model(chain(2))
    assert sorted(M.vertices) == [(0, 0), (1, 0), (1, 1)]
    assert set(M.facets) == {
        FacetInequality((1, 0), 1),
        FacetInequality((0, -1), 0),
        FacetInequality((-1, 1), 0),
    }


def test_chain_model(xposet):
    M = chain_polytope_model(xposet)
    assert len(M.vertices) == 8 and len(M.facets) == 9
    sq = chain_polytope_model(antichain(2))
    assert sorted(sq.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(sq.facets) == 4


@settings(max_examples=40, deadline=None)
@given(posets())
def test_model_invariants(P):
    for M, sets in ((order_polytope_model(P), enumerate_ideals(P)),
                    (chain_polytope_model(P), enumerate_antichains(P))):
        assert sorted(M.sources) == sets
        assert all(M.vertices[k] == rho(W, P.d) for k, W in enumerate(M.sources))
        for h in M.facets:
            assert any(h.normal)
            assert max(h.value(v) for v in M.vertices) == h.rhs
        for v in M.vertices:
            assert smallest_face(M, [v]) == [v]


def test_smallest_face(xposet):
    M = order_polytope_model(xposet)
    empty, a, b, ab = pt(xposet), pt(xposet, A), pt(xposet, B), pt(xposet, A, B)
    assert sorted(smallest_face(M, [empty, a])) == sorted([empty, a])
    assert sorted(smallest_face(M, [empty, ab])) == sorted([empty, a, b, ab])
    assert sorted(smallest_face(M, list(M.vertices))) == sorted(M.vertices)
    with pytest.raises(ValueError):
        smallest_face(M, [pt(xposet, C)])  # {c} is not an ideal


@settings(max_examples=30, deadline=None)
@given(posets(max_d=5))
def test_smallest_face_monotone(P):
    M = order_polytope_model(P)
    n = len(M.vertices)
    for S in itertools.combinations(range(n), 2):
        for extra in range(n):
            small = smallest_face(M, [M.vertices[k] for k in S])
            big = smallest_face(M, [M.vertices[k] for k in S + (extra,)])
            assert set(small) <= set(big)


def test_affine_rank():
    assert affine_rank([(0, 0), (1, 0), (1, 1)]) == 2
    assert affine_rank([(3, 4)]) == 0
    assert affine_rank([(0, 0), (1, 0), (0, 1), (1, 1)]) == 2
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(1, 2, 3), (4, 5, 6), (7, 8, 10), (2, 4, 7)]) == 3
    assert affine_rank([(0, 0, 0), (2, 4, 6), (3, 6, 9)]) == 1


def test_edge_oracle(xposet):
    O = order_polytope_model(xposet)
    Cm = chain_polytope_model(xposet)
    assert is_edge_geometric(O, [pt(xposet), pt(xposet, A)])
    assert not is_edge_geometric(O, [pt(xposet), pt(xposet, A, B)])
    assert not is_edge_geometric(Cm, [pt(xposet, D), pt(xposet, E)])


def test_triangle_oracle(xposet):
    O = order_polytope_model(xposet)
    Cm = chain_polytope_model(xposet)
    assert is_triangle_geometric(O, [pt(xposet), pt(xposet, A), pt(xposet, A, B, C)])
    assert not is_triangle_geometric(O, [pt(xposet), pt(xposet, A), pt(xposet, B)])
    assert not is_triangle_geometric(O, [pt(xposet), pt(xposet, A, B), pt(xposet, A, B, C)])
    assert is_triangle_geometric(Cm, [pt(xposet, C), pt(xposet, D), pt(xposet, D, E)])


def test_brute_counts(xposet):
    O = order_polytope_model(xposet)
    Cm = chain_polytope_model(xposet)
    assert (len(brute_edges(O)), len(brute_triangles(O))) == (24, 32)
    assert (len(brute_edges(Cm)), len(brute_triangles(Cm))) == (24, 33)
    seg = order_polytope_model(chain(1))
    assert (len(brute_edges(seg)), len(brute_triangles(seg))) == (1, 0)


@settings(max_examples=25, deadline=None)
@given(posets(max_d=5))
def test_pruned_triangle_scan_equals_exhaustive(P):
    for M in (order_polytope_model(P), chain_polytope_model(P)):
        assert brute_triangles(M) == brute_triangles(M, exhaustive=True)


def test_caps():
    M = order_polytope_model(antichain(5))
    with pytest.raises(OracleCapExceeded):
        brute_edges(M, max_pairs=100)
    with pytest.raises(OracleCapExceeded):
        brute_triangles(M, max_triples=100, exhaustive=True)
