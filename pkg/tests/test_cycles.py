import math

import pytest

from oracles import is_single_induced_cycle
from unilabel.cycles import (
    anchor,
    aware_layout,
    aware_size,
    build_cycle_aware,
    build_cycle_oblivious,
    embed_cycle_aware,
    embed_cycle_oblivious,
    hub_positions,
    oblivious_adjacent,
    oblivious_layout,
    oblivious_level,
    oblivious_size,
    window,
)
from unilabel.embedding import is_prefix_induced
from unilabel.errors import LengthOutOfRange


def _cycle_ok(host, order):
    adj = [set(s) for s in host.adjacency]
    consecutive = all(order[i - 1] in adj[order[i]] for i in range(len(order)))
    return consecutive and is_single_induced_cycle(adj, order)


def test_anchors():
    assert [anchor(i) for i in range(1, 7)] == [1, 4, 8, 14, 24, 42]


def test_hub_positions():
    assert hub_positions(4) == [1, 2, 4, 7, 11, 16, 22]


def test_aware_n24():
    lay = aware_layout(24)
    assert lay.x == (1, 4, 8, 14, 24)
    assert lay.k == 4
    assert lay.hubs == ((3, (1, 2, 4, 7, 11, 16, 22)),)
    assert embed_cycle_aware(5, 24) == [28, 3, 4, 5, 6]


def test_aware_full_and_base_lengths():
    assert embed_cycle_aware(24, 24) == list(range(24))
    lay = aware_layout(24)
    out = embed_cycle_aware(lay.base_length, 24)
    assert {lay.w(i) for i in range(1, lay.k + 1)} <= set(out)


def test_aware_small_n():
    for n in (3, 4, 5):
        g = build_cycle_aware(n)
        for ell in range(3, n + 1):
            assert _cycle_ok(g, embed_cycle_aware(ell, n))


def test_length_range_errors():
    with pytest.raises(LengthOutOfRange):
        embed_cycle_aware(2, 10)
    with pytest.raises(LengthOutOfRange):
        embed_cycle_oblivious(11, 10)
    with pytest.raises(ValueError):
        aware_layout(2)


@pytest.mark.parametrize("n", list(range(3, 70)) + [100, 128, 200, 255])
def test_aware_every_length(n):
    g = build_cycle_aware(n)
    assert g.n == aware_size(n)
    for ell in range(3, n + 1):
        assert _cycle_ok(g, embed_cycle_aware(ell, n))


def test_aware_overhead_is_logarithmic():
    worst = max(aware_size(n) - n - math.log2(n) for n in range(64, 2049))
    assert worst <= 4


def test_oblivious_levels():
    assert [oblivious_level(n) for n in (3, 5, 6, 10, 11, 17, 18, 37)] == [2, 2, 3, 3, 4, 4, 5, 6]
    for n in range(3, 200):
        K = oblivious_level(n)
        assert (K - 1) ** 2 + 1 < n <= K * K + 1


def test_oblivious_n37():
    lay = oblivious_layout(6)
    assert len(lay.v_ids) == 36
    assert sorted(lay.u_ids) == [2, 3, 4, 5, 6]
    assert sorted(lay.w_ids) == [1, 2, 3, 4]
    ell5 = embed_cycle_oblivious(5, 37)
    assert ell5 == [lay.v(j) for j in range(1, 5)] + [lay.u_ids[2]]
    assert embed_cycle_oblivious(37, 37) == [lay.v(j) for j in range(1, 37)] + [lay.u_ids[6]]
    assert set(embed_cycle_oblivious(3, 37)) == set(lay.triangle)


def test_oblivious_windows():
    # v_1, w_1, v_4, u_2 is the shortest cycle through u_2
    assert window(2) == (2, 4, 5)
    assert window(5) == (5, 11, 26)
    for p in range(3, 30):
        r, lo, hi = window(p)
        assert anchor(r) <= p * p < anchor(r + 1)
        assert lo <= hi


def test_oblivious_ids_are_prefix_stable():
    small, big = oblivious_layout(5), oblivious_layout(9)
    assert big.v_ids[: len(small.v_ids)] == small.v_ids
    assert all(big.u_ids[p] == u for p, u in small.u_ids.items())
    assert all(big.w_ids[i] == w for i, w in small.w_ids.items())
    assert big.triangle == small.triangle


def test_oblivious_adjacent_matches_levels():
    g = build_cycle_oblivious(50)
    for a in range(g.n):
        for b in range(g.n):
            assert oblivious_adjacent(a, b) == g.has_edge(a, b)


@pytest.mark.parametrize("n", list(range(3, 70)) + [101, 145, 200, 256])
def test_oblivious_every_length(n):
    g = build_cycle_oblivious(n)
    assert g.n == oblivious_size(n)
    for ell in range(3, n + 1):
        assert _cycle_ok(g, embed_cycle_oblivious(ell, n))


def test_oblivious_prefix_chain():
    for n in range(3, 150):
        assert is_prefix_induced(build_cycle_oblivious(n), build_cycle_oblivious(n + 1))


def test_oblivious_overhead_grows_like_sqrt():
    ratios = [(oblivious_size(n) - n) / math.sqrt(n) for n in range(16, 4097)]
    assert max(ratios) < 5
