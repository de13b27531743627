import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cpog.groups import AbelianSpec, DihedralSpec, enumerate_abelian_groups_of_order, is_prime
from cpog.graph import (
    adjacent,
    brute_degree,
    build_graph,
    exact_spectrum,
    export_graph,
    laplacian,
    twin_reduction,
)
from cpog.linalg import char_poly, integer_roots, rank

import oracles

small_groups = st.one_of(
    st.lists(st.integers(2, 10), min_size=1, max_size=3)
    .filter(lambda f: np.prod(f) <= 200).map(lambda f: AbelianSpec(tuple(f))),
    st.integers(3, 60).map(DihedralSpec),
)


@pytest.mark.parametrize("u, v, expected", [
    (1, 12, True),
    (4, 6, True),
    (6, 6, False),
    (4, 4, False),
    (2, 2, True),
    (9, 27, False),
    (5, 7, True),
])
def test_adjacent(u, v, expected):
    assert adjacent(u, v) is expected


def test_complete_examples():
    k4 = build_graph(AbelianSpec((2, 2)))
    assert k4.adjacency.sum() == 12
    assert all(brute_degree(k4, i) == 3 for i in range(4))
    k6 = build_graph(DihedralSpec(3))
    assert k6.edge_count == 15


def test_z4_z2_graph():
    g = build_graph(AbelianSpec((4, 2)))
    assert g.degrees.tolist() == [7, 7, 7, 7, 4, 4, 4, 4]
    assert [o for _, o in g.vertices] == [1, 2, 2, 2, 4, 4, 4, 4]
    assert brute_degree(g, 0) == 7
    assert brute_degree(g, 5) == 4
    assert int(np.trace(laplacian(g))) == 44
    with pytest.raises(IndexError):
        brute_degree(g, 8)


@given(small_groups)
@settings(max_examples=60, deadline=None)
def test_graph_invariants(spec):
    g = build_graph(spec)
    A = g.adjacency
    assert (A == A.T).all()
    assert not A.diagonal().any()
    assert g.degrees.tolist() == A.sum(axis=1).tolist()
    assert g.vertices[0][1] == 1
    assert g.degrees[0] == g.n - 1
    assert g.degrees.sum() % 2 == 0
    for (_, o), d in zip(g.vertices, g.degrees):
        if is_prime(o):
            assert d == g.n - 1
    L = laplacian(g)
    assert (L == L.T).all()
    assert not L.sum(axis=1).any()


@given(small_groups)
@settings(max_examples=40, deadline=None)
def test_degrees_match_pairwise_oracle(spec):
    kind, param = ("abelian", spec.factors) if isinstance(spec, AbelianSpec) else ("dihedral", spec.n)
    expected = oracles.degrees(kind, param)
    g = build_graph(spec)
    for (el, _), d in zip(g.vertices, g.degrees.tolist()):
        assert d == expected[tuple(el)]


@pytest.mark.parametrize("m", [8, 12, 30, 36, 64])
def test_laplacian_connected(m):
    for spec in enumerate_abelian_groups_of_order(m):
        L = laplacian(build_graph(spec))
        assert L.shape[0] - rank(L) == 1


def test_laplacian_k2_k4():
    # Z2 is K_2; Z2xZ2 is K_4
    assert laplacian(build_graph(AbelianSpec((2,)))).tolist() == [[1, -1], [-1, 1]]
    L = laplacian(build_graph(AbelianSpec((2, 2))))
    assert (np.diagonal(L) == 3).all()
    assert ((L == -1) == ~np.eye(4, dtype=bool)).all()


@given(small_groups)
@settings(max_examples=25, deadline=None)
def test_twin_reduction_matches_full_charpoly(spec):
    g = build_graph(spec)
    if g.n > 40:
        return
    assert exact_spectrum(g, reduce=True) == exact_spectrum(g, reduce=False)


def test_twin_reduction_shape():
    g = build_graph(AbelianSpec((4, 2)))
    Q, twins = twin_reduction(g)
    assert Q.shape == (3, 3)
    # order-2 class is a clique of 3 (deg 7 -> 8), order-4 class independent (deg 4)
    assert twins == [(8, 2), (4, 3)]
    roots, rem = integer_roots(char_poly(Q))
    assert rem == (1,)
    assert roots == [(8, 2), (0, 1)]


def test_exact_spectrum_non_family():
    # Z2xZ3xZ5: no closed form, spectrum still fully integral
    roots, rem = exact_spectrum(build_graph(AbelianSpec((6, 5))))
    assert rem == (1,)
    assert sum(m for _, m in roots) == 30


def test_export_csv():
    data = export_graph(build_graph(AbelianSpec((2,))), "csv").decode()
    assert data == "source,target\n0,1\n"
    rows = export_graph(build_graph(AbelianSpec((4, 2))), "csv").decode().splitlines()
    assert rows[0] == "source,target"
    assert len(rows) - 1 == 22
    assert all(int(a) < int(b) for a, b in (r.split(",") for r in rows[1:]))


def test_export_dot():
    text = export_graph(build_graph(DihedralSpec(3)), "dot").decode()
    assert text.startswith('graph "D3" {')
    assert text.count(" -- ") == 15
    assert '0 [label="r^0/1"];' in text
    assert '1 [label="fr^0/2"];' in text


def test_export_json():
    g = build_graph(DihedralSpec(3))
    doc = json.loads(export_graph(g, "json"))
    assert doc["group"] == "D3" and doc["order"] == 6
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 15
    assert doc["vertices"][0] == {"element": "r^0", "order": 1, "degree": 5}
    assert "spectrum" not in doc
    doc = json.loads(export_graph(g, "json", spectrum={"closed_form": [[6, 5], [0, 1]], "certified": True}))
    assert doc["spectrum"]["certified"] is True


def test_export_deterministic_and_format_check():
    g = build_graph(AbelianSpec((4, 2)))
    assert export_graph(g, "json") == export_graph(build_graph(AbelianSpec((4, 2))), "json")
    with pytest.raises(ValueError):
        export_graph(g, "xml")
