import math
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import bounded_degree_graphs
from oracles import random_bounded_degree_edges
from unilabel.deg2 import build_deg2_universal
from unilabel.degd import (
    DEFAULT_RETRY_CAP,
    ProductVertex,
    build_product_universal,
    embed_degD,
    embedding_to_ids,
    neighbour_cap,
    parse_product_label,
    parse_rand_label,
    product_adjacent,
    product_label_bits,
    product_label_max_bits,
    product_vertex_count,
    product_vertex_from_id,
    product_vertex_id,
    rand_decode,
    rand_encode,
    rand_label_bits,
    rand_label_max_bits,
)
from unilabel.embedding import is_induced_embedding
from unilabel.enumerate import enumerate_bounded_degree
from unilabel.errors import DegreeExceeded, RetryExhausted, SchemeMismatch, SizeGuard
from unilabel.graph import Graph, complete_graph, cycle_graph


def test_counts():
    assert product_vertex_count(3, 2) == 5
    assert product_vertex_count(3, 3) == 30
    assert product_vertex_count(3, 4) == 30


def test_k1_collapses_to_u3():
    g = build_product_universal(3, 2)
    assert g == build_deg2_universal(3)


@pytest.mark.parametrize("n,D", [(1, 1), (2, 3), (3, 5), (4, 6), (3, 7)])
def test_ids_are_a_bijection(n, D):
    total = product_vertex_count(n, D)
    seen = set()
    for i in range(total):
        v = product_vertex_from_id(i, n, D)
        assert product_vertex_id(v, n, D) == i
        assert list(v.A) == sorted(set(v.A)) and len(v.A) < -(-D // 2)
        seen.add(v)
    assert len(seen) == total


def test_adjacency_rule():
    assert product_adjacent(ProductVertex(0, (5,)), ProductVertex(5, ()))
    assert product_adjacent(ProductVertex(0, ()), ProductVertex(1, ()))
    assert not product_adjacent(ProductVertex(2, ()), ProductVertex(4, ()))
    assert not product_adjacent(ProductVertex(3, (1,)), ProductVertex(3, (1,)))


@pytest.mark.parametrize("n,D", [(2, 3), (3, 3), (3, 5)])
def test_materialised_graph_follows_rule(n, D):
    g = build_product_universal(n, D)
    vs = [product_vertex_from_id(i, n, D) for i in range(g.n)]
    for i in range(g.n):
        for j in range(i + 1, g.n):
            assert g.has_edge(i, j) == product_adjacent(vs[i], vs[j])


def test_size_guard():
    with pytest.raises(SizeGuard):
        build_product_universal(40, 8, cap=1000)


def test_c3_with_d2():
    emb = embed_degD(cycle_graph(3), 2)
    assert {v.x for v in emb.assignments} == {0, 1, 4}
    assert all(v.A == () for v in emb.assignments)


def test_k4_with_d3():
    emb = embed_degD(complete_graph(4), 3)
    assert all(len(v.A) <= 1 for v in emb.assignments)
    vs = emb.assignments
    assert all(product_adjacent(vs[a], vs[b]) for a in range(4) for b in range(a + 1, 4))


def test_empty_pair():
    a, b = embed_degD(Graph.empty(2), 2).assignments
    assert a != b and not product_adjacent(a, b)


def test_degree_guard():
    with pytest.raises(DegreeExceeded):
        embed_degD(complete_graph(5), 3)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("D", [3, 4])
def test_exhaustive_small(n, D):
    host = build_product_universal(n, D)
    for g in enumerate_bounded_degree(n, D):
        assert is_induced_embedding(g, host, embedding_to_ids(embed_degD(g, D), n, D).assignments)


@given(bounded_degree_graphs(max_n=25, max_degree=8, min_n=1))
def test_embedding_is_induced_by_rule(case):
    g, d = case
    D = max(d, 1)
    vs = embed_degD(g, D).assignments
    assert len(set(vs)) == g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert product_adjacent(vs[u], vs[v]) == g.has_edge(u, v)


def test_product_size_under_closed_form():
    for n in range(2, 40):
        for D in range(1, min(n, 12) + 1):
            k = -(-D // 2)
            base = 2 * n - 1
            exact = product_vertex_count(n, D)
            assert exact == base * sum(comb(base, i) for i in range(k))
            assert exact <= 2 ** (k + 1) * n**k / math.factorial(k - 1)


def test_rand_single_edge_identity():
    g = Graph.from_edges(5, [(0, 1)])
    scheme, labels = rand_encode(g, 1, permutation=range(5))
    assert scheme.attempts == 1
    assert labels[0].diffs == (1,) and labels[1].diffs == ()
    assert rand_decode(labels[0], labels[1])
    assert not rand_decode(labels[0], labels[0])


def test_rand_empty_graph():
    scheme, labels = rand_encode(Graph.empty(7), 2, seed=1)
    assert scheme.attempts == 1 and all(l.diffs == () for l in labels)


def test_rand_c5_offsets_count_each_edge_once():
    scheme, labels = rand_encode(cycle_graph(5), 2, seed=4)
    assert sum(len(l.diffs) for l in labels) == 5
    assert not rand_decode(labels[0], labels[2])


def test_rand_even_n_is_padded():
    scheme, labels = rand_encode(cycle_graph(6), 2, seed=0)
    assert scheme.n_padded == 7 and len(labels) == 6


def test_rand_mismatch():
    _, a = rand_encode(cycle_graph(5), 2, seed=0)
    _, b = rand_encode(cycle_graph(7), 2, seed=0)
    with pytest.raises(SchemeMismatch):
        rand_decode(a[0], b[0])


def test_rand_retry_exhausted():
    # one permutation that overloads a vertex; the cap is one offset here
    g = Graph.from_edges(5, [(0, 1), (0, 2)])
    assert neighbour_cap(5, 2, c=0.0) == 1
    with pytest.raises(RetryExhausted):
        rand_encode(g, 2, permutation=range(5), c=0.0)


def test_rand_deterministic_given_seed():
    g = Graph.from_edges(9, random_bounded_degree_edges(9, 3, random.Random(1)))
    assert rand_encode(g, 3, seed=42) == rand_encode(g, 3, seed=42)


@pytest.mark.parametrize("seed", range(20))
def test_rand_round_trip(seed):
    rng = random.Random(seed)
    n, D = rng.randint(2, 60), rng.randint(1, 8)
    g = Graph.from_edges(n, random_bounded_degree_edges(n, D, rng))
    scheme, labels = rand_encode(g, D, seed=seed)
    assert scheme.attempts <= DEFAULT_RETRY_CAP
    for u in range(n):
        assert len(labels[u].diffs) <= scheme.D_cap
        for v in range(n):
            assert rand_decode(labels[u], labels[v]) == g.has_edge(u, v)


def test_product_label_layout():
    assert product_label_bits(ProductVertex(4, ()), 3, 2) == "100"
    assert product_label_max_bits(3, 2) == 3


@given(st.integers(1, 12), st.integers(1, 9), st.data())
def test_product_label_round_trip(n, D, data):
    total = product_vertex_count(n, D)
    v = product_vertex_from_id(data.draw(st.integers(0, total - 1)), n, D)
    bits = product_label_bits(v, n, D)
    assert len(bits) <= product_label_max_bits(n, D)
    assert parse_product_label(bits, n, D) == v


def test_rand_label_round_trip():
    scheme, labels = rand_encode(cycle_graph(11), 2, seed=3)
    for lab in labels:
        bits = rand_label_bits(lab)
        assert len(bits) <= rand_label_max_bits(scheme.n_padded, scheme.D_cap)
        assert parse_rand_label(bits, scheme.n_padded) == lab
