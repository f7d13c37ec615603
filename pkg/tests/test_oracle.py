import random
from itertools import combinations

import pytest

from potk2s import (
    DegreeSequence,
    InvalidInput,
    SimpleGraph,
    contains_k1s,
    contains_k2s,
    enumerate_realizations,
    enumerate_graphic_sequences,
    is_potentially_subgraph,
    normalize,
    parse_sequence,
    realization_exists,
)


def complete_bipartite(a, b):
    return SimpleGraph.from_edges(
        a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return SimpleGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def contains_k2s_by_subsets(G, s):
    """Reference definition: try every choice of 2 centers and s leaves."""
    vertices = range(G.n)
    for centers in combinations(vertices, 2):
        rest = [v for v in vertices if v not in centers]
        for leaves in combinations(rest, s):
            if all(G.has_edge(c, w) for c in centers for w in leaves):
                return True
    return False


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph.from_edges(
            n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])


def test_enumerate_forced_realizations():
    for terms, expected in [((2, 2, 2), 1), ((1, 1), 1), ((3, 3, 3, 3), 1)]:
        result = enumerate_realizations(DegreeSequence(terms), lambda G: False)
        assert result.status == "complete"
        assert result.realizations == expected


def test_enumerate_four_cycle_count():
    # labeled graphs on 4 vertices with all degrees 2: the three 4-cycles
    result = enumerate_realizations(DegreeSequence((2, 2, 2, 2)),
                                    lambda G: False)
    assert result.realizations == 3


def test_enumerate_matches_brute_force_filter():
    # bucket all labeled graphs by degree vector and compare counts
    for n in range(2, 6):
        buckets = {}
        for G in all_graphs(n):
            buckets[G.degrees()] = buckets.get(G.degrees(), 0) + 1
        seen_desc = {vec for vec in buckets if vec == tuple(sorted(vec, reverse=True))}
        for vec in sorted(seen_desc, reverse=True):
            result = enumerate_realizations(DegreeSequence(vec),
                                            lambda G: False)
            assert result.realizations == buckets[vec], vec


def test_enumerate_rejects_non_graphic_and_large():
    with pytest.raises(InvalidInput):
        enumerate_realizations(normalize([3, 3, 3, 1]), lambda G: False)
    with pytest.raises(InvalidInput):
        enumerate_realizations(DegreeSequence(tuple([2] * 13)), lambda G: False)


def test_visitor_degree_vectors():
    pi = DegreeSequence((3, 2, 2, 2, 1))
    seen = []
    enumerate_realizations(pi, lambda G: seen.append(G.degrees()) and False)
    assert seen and all(vec == pi.terms for vec in seen)


def test_contains_k2s_examples():
    assert contains_k2s(complete_bipartite(2, 5), 5)
    assert not contains_k2s(cycle(6), 2)
    assert contains_k2s(complete(4), 2)


def test_contains_k1s_examples():
    assert contains_k1s(complete_bipartite(2, 5), 5)
    assert not contains_k1s(cycle(6), 3)
    assert contains_k1s(complete_bipartite(1, 5), 5)


def test_contains_k2s_matches_subset_enumeration():
    rng = random.Random(42)
    for _ in range(500):
        n = rng.randint(2, 9)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < rng.choice((0.3, 0.5, 0.7))]
        G = SimpleGraph.from_edges(n, edges)
        for s in range(1, 6):
            assert contains_k2s(G, s) == contains_k2s_by_subsets(G, s)


def test_oracle_spec_queries():
    r = is_potentially_subgraph(parse_sequence("5^2,2^6"), "k2s", 5)
    assert r.status == "exhausted_no_witness" and r.witness is None
    r = is_potentially_subgraph(parse_sequence("5,5,2,2,2,2,2"), "k2s", 5)
    assert r.status == "found_witness"
    assert r.witness.degree_sequence() == (5, 5, 2, 2, 2, 2, 2)
    assert contains_k2s(r.witness, 5)
    r = is_potentially_subgraph(parse_sequence("6^4,5,3^3"), "k2s", 5)
    assert r.status == "found_witness"


def test_oracle_k1s_equals_max_degree_rule():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(2, 8)
        pi = normalize([rng.randint(1, n - 1) for _ in range(n)])
        if not pi.n or not realization_exists(pi):
            continue
        for s in (1, 2, 3, 5):
            r = is_potentially_subgraph(pi, "k1s", s)
            assert r.found == (pi.n >= s + 1 and pi.terms[0] >= s), (pi, s)


def test_strategies_agree_exhaustively_n7():
    for pi in enumerate_graphic_sequences(7):
        a = is_potentially_subgraph(pi, "k2s", 5)
        b = is_potentially_subgraph(pi, "k2s", 5, strategy="enumerate")
        assert a.found == b.found, pi
        for s in (2, 3, 4):
            a = is_potentially_subgraph(pi, "k2s", s)
            b = is_potentially_subgraph(pi, "k2s", s, strategy="enumerate")
            assert a.found == b.found, (pi, s)


def test_strategies_agree_sampled_n8():
    rng = random.Random(77)
    pool = list(enumerate_graphic_sequences(8))
    for pi in rng.sample(pool, 120):
        a = is_potentially_subgraph(pi, "k2s", 5)
        b = is_potentially_subgraph(pi, "k2s", 5, strategy="enumerate")
        assert a.found == b.found, pi


def test_witness_uses_top_degrees():
    # whenever a witness exists, one exists on the largest degree values
    for n in (7, 8):
        for pi in enumerate_graphic_sequences(n):
            r = is_potentially_subgraph(pi, "k2s", 5)
            if r.found:
                top = is_potentially_subgraph(pi, "k2s", 5,
                                              top_degrees_only=True)
                assert top.found, pi


def test_budget_exceeded_is_reported():
    r = is_potentially_subgraph(parse_sequence("5^2,2^6"), "k2s", 5,
                                strategy="enumerate", budget=10)
    assert r.status == "budget_exceeded" and r.witness is None


def test_graphic_sequences_have_realizations():
    # a complete enumeration of a graphic sequence never comes up empty
    for pi in enumerate_graphic_sequences(6):
        result = enumerate_realizations(pi, lambda G: False)
        assert result.status == "complete" and result.realizations >= 1
