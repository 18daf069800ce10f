import random

import pytest

from oracles import random_bounded_degree_edges
from unilabel.cycles import build_cycle_oblivious
from unilabel.enumerate import enumerate_bounded_degree, enumerate_deg2_family
from unilabel.errors import FamilyMismatch, MissingContext
from unilabel.graph import Graph, complete_graph, cycle_graph, path_graph
from unilabel.labeling import (
    SCHEME_NAMES,
    LabeledGraph,
    Scheme,
    check_obliviousness,
    decode,
    encode,
    scheme_label_bits,
    scheme_name,
)


def _round_trip(scheme, g):
    lg = encode(scheme, g)
    assert len(set(lg.labels)) == g.n
    budget = scheme_label_bits(lg.scheme)
    for u in range(g.n):
        assert len(lg.labels[u]) <= budget
        for v in range(g.n):
            got = decode(lg.scheme.name, lg.labels[u], lg.labels[v], n=lg.scheme.n, D=lg.scheme.D)
            assert got == g.has_edge(u, v), (u, v)
    return lg


def _shuffle(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_names_and_aliases():
    assert scheme_name("degd-det") == "degD_det"
    assert scheme_name("cycles-oblivious") == "cycles_oblivious"
    with pytest.raises(ValueError):
        scheme_name("nope")
    assert Scheme("degd-rand").size_aware
    assert not Scheme("deg2").size_aware


def test_deg2_triangle_labels():
    lg = encode(Scheme("deg2"), cycle_graph(3))
    assert sorted(int(l, 2) for l in lg.labels) == [0, 1, 4]


def test_paths_single_vertex():
    lg = encode(Scheme("paths"), Graph.empty(1))
    assert [int(l, 2) for l in lg.labels] == [0]


def test_decode_examples():
    assert decode("deg2", "100", "000")
    for name in ("paths", "deg2", "cycles_oblivious"):
        assert not decode(name, "101", "101")


def test_size_aware_decode_needs_n():
    with pytest.raises(MissingContext):
        decode("cycles_aware", "0", "1")
    with pytest.raises(MissingContext):
        decode("degD_rand", "0", "1")
    with pytest.raises(MissingContext):
        encode(Scheme("degD_det"), path_graph(3))


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        encode(Scheme("paths"), cycle_graph(3))
    with pytest.raises(FamilyMismatch):
        encode(Scheme("deg2"), complete_graph(4))
    with pytest.raises(FamilyMismatch):
        encode(Scheme("cycles_aware"), path_graph(4))
    with pytest.raises(FamilyMismatch):
        encode(Scheme("degD_det", D=2), complete_graph(4))
    with pytest.raises(FamilyMismatch):
        encode(Scheme("cycles_oblivious", n=4), cycle_graph(5))


def test_label_bits():
    assert scheme_label_bits(Scheme("deg2", 3)) == 3
    assert scheme_label_bits(Scheme("paths", 11)) == 4
    assert scheme_label_bits(Scheme("degD_det", 3, 2)) == 3


def test_deg2_budget_is_logarithmic():
    for n in range(1, 300):
        assert scheme_label_bits(Scheme("deg2", n)) <= max(1, (2 * n - 2).bit_length())


def test_unique_labels_enforced():
    with pytest.raises(ValueError):
        LabeledGraph(Scheme("deg2"), ("0", "0"))


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_deg2_and_paths(n):
    for g in enumerate_deg2_family(n, acyclic=False):
        _round_trip(Scheme("deg2"), g)
    for g in enumerate_deg2_family(n, acyclic=True):
        _round_trip(Scheme("paths"), g)


@pytest.mark.parametrize("n", range(1, 5))
def test_round_trip_degd(n):
    for D in (1, 2, 3, 4):
        for g in enumerate_bounded_degree(n, D):
            _round_trip(Scheme("degD_det", D=D), g)
            _round_trip(Scheme("degD_rand", D=D, seed=n), g)


def test_round_trip_random_larger_graphs():
    rng = random.Random(5)
    for _ in range(15):
        n, D = rng.randint(5, 40), rng.randint(2, 7)
        g = Graph.from_edges(n, random_bounded_degree_edges(n, D, rng))
        _round_trip(Scheme("degD_det", D=D), g)
        _round_trip(Scheme("degD_rand", D=D, seed=rng.randrange(1000)), g)


@pytest.mark.parametrize("name", ["cycles_aware", "cycles_oblivious"])
def test_round_trip_cycles(name):
    rng = random.Random(1)
    for n in (3, 5, 9, 17, 30):
        for ell in range(3, n + 1):
            _round_trip(Scheme(name, n), _shuffle(cycle_graph(ell), rng))


def test_c5_oblivious():
    lg = _round_trip(Scheme("cycles_oblivious"), cycle_graph(5))
    assert len(lg.labels) == 5


def test_oblivious_labels_survive_growth():
    # labels made for size n decode against labels made for size n+1
    for n in range(5, 60):
        small = encode(Scheme("cycles_oblivious", n), cycle_graph(n)).labels
        big = encode(Scheme("cycles_oblivious", n + 1), cycle_graph(n + 1)).labels
        host = build_cycle_oblivious(n + 1)
        for a in small:
            for b in big:
                assert decode("cycles_oblivious", a, b) == host.has_edge(int(a, 2), int(b, 2))


def test_obliviousness_reports():
    assert check_obliviousness("deg2", range(1, 201)).verdict == "PASS"
    assert check_obliviousness("paths", range(1, 201)).verdict == "PASS"
    assert check_obliviousness("cycles_oblivious", range(3, 120)).verdict == "PASS"
    assert check_obliviousness("cycles_aware", range(3, 10)).verdict == "NOT-OBLIVIOUS"


def test_every_scheme_is_named():
    assert len(SCHEME_NAMES) == 6
