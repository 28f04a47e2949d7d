import random
from itertools import combinations, product

import pytest
from hypothesis import given

from mdsenum import (
    BicoloredGraph,
    ClassViolation,
    Graph,
    InputError,
    enum_maximal_independent_sets,
    enum_mds_diamond_free,
    enum_mds_general,
    enum_mds_kt_plus_k2,
    enum_mds_paw_free,
    enum_mds_triangle_free,
    oracle_mds,
)
from mdsenum.instances import complete_multipartite, disjoint_cliques, random_bipartite, random_rejection

from helpers import bicolored, complete, complete_bipartite, cycle, gnp, naive_mds, path


def run(stream):
    out = list(stream)
    assert len(out) == len(set(out)), "duplicate output"
    return set(out)


def pairs(n):
    return {frozenset(p) for p in combinations(range(n), 2)}


def test_triangle_free_examples():
    assert run(enum_mds_triangle_free(cycle(4))) == pairs(4)
    out = run(enum_mds_triangle_free(complete_bipartite(3, 3)))
    assert len(out) == 11
    assert out == oracle_mds(complete_bipartite(3, 3))


def test_triangle_free_rejects_triangle_with_witness():
    with pytest.raises(ClassViolation) as exc:
        enum_mds_triangle_free(complete(3))
    assert exc.value.cls == "triangle" and exc.value.witness == (0, 1, 2)


def test_triangle_free_only_needs_target_triangle_free():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    bg = BicoloredGraph.of(g, [0, 3, 4])
    assert run(enum_mds_triangle_free(bg)) == oracle_mds(bg)


def test_bipartite_exhaustive_small():
    for p_ in range(1, 5):
        for q in range(0, 8 - p_):
            cross = [(a, p_ + b) for a in range(p_) for b in range(q)]
            if len(cross) > 10:
                continue
            for bits in product((0, 1), repeat=len(cross)):
                g = Graph(p_ + q, [e for e, on in zip(cross, bits) if on])
                assert run(enum_mds_triangle_free(g)) == oracle_mds(g)


def test_bipartite_random_up_to_eight():
    rng = random.Random(1)
    for _ in range(200):
        g = random_bipartite(rng.randint(1, 8), rng.random(), rng)
        assert run(enum_mds_triangle_free(g)) == oracle_mds(g)


def test_general_examples():
    assert run(enum_mds_general(BicoloredGraph(path(4), 0))) == {frozenset()}
    assert run(enum_mds_general(complete(4))) == {frozenset({v}) for v in range(4)}


@given(bicolored(max_n=7))
def test_general_matches_reference(gb):
    g, a = gb
    bg = BicoloredGraph(g, a)
    out = run(enum_mds_general(bg))
    assert out == naive_mds(g, bg.prescribed)


@given(bicolored(max_n=7))
def test_general_with_triangle_free_base(gb):
    g, a = gb
    bg = BicoloredGraph(g, a)
    assert run(enum_mds_general(bg, triangle_free_base=True)) == oracle_mds(bg)


def test_mis_examples():
    assert run(enum_maximal_independent_sets(complete(3))) == {frozenset({v}) for v in range(3)}
    assert run(enum_maximal_independent_sets(path(4))) == {frozenset(s) for s in ({0, 2}, {0, 3}, {1, 3})}
    assert run(enum_maximal_independent_sets(Graph(4))) == {frozenset(range(4))}
    assert run(enum_maximal_independent_sets(Graph(0))) == {frozenset()}


def _brute_mis(g):
    found = set()
    for m in range(1 << g.n):
        if g.is_independent(m) and g.closed_of(m) == g.full:
            found.add(frozenset(i for i in range(g.n) if m >> i & 1))
    return found


@given(bicolored(max_n=8))
def test_mis_matches_brute_force(gb):
    g, _ = gb
    assert run(enum_maximal_independent_sets(g)) == _brute_mis(g)


def test_kt_plus_k2_examples():
    assert run(enum_mds_kt_plus_k2(Graph(3))) == {frozenset(range(3))}
    assert run(enum_mds_kt_plus_k2(complete(3))) == {frozenset({v}) for v in range(3)}
    with pytest.raises(InputError):
        enum_mds_kt_plus_k2(BicoloredGraph(path(3), 0b011))


def test_kt_plus_k2_random():
    rng = random.Random(6)
    for _ in range(150):
        n = rng.randint(0, 8)
        g = random_bipartite(n, rng.random(), rng) if rng.random() < 0.5 else gnp(rng, n, 0.5)
        assert run(enum_mds_kt_plus_k2(g)) == oracle_mds(g)


def _random_tree(rng, n):
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def test_diamond_free_examples():
    rng = random.Random(8)
    for _ in range(50):
        t = _random_tree(rng, rng.randint(1, 8))
        assert run(enum_mds_diamond_free(t)) == oracle_mds(t)
    g = disjoint_cliques([2, 3, 1])
    out = run(enum_mds_diamond_free(g))
    assert len(out) == 6 and all(len(d) == 3 for d in out)


def test_diamond_free_random_and_bicolored():
    rng = random.Random(12)
    for _ in range(150):
        n = rng.randint(1, 8)
        g = random_rejection("diamond", n, rng.choice((0.3, 0.5, 0.7)), rng)
        bg = BicoloredGraph(g, rng.getrandbits(n))
        assert run(enum_mds_diamond_free(bg)) == oracle_mds(bg)


def test_diamond_free_rejects_diamond():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(ClassViolation) as exc:
        enum_mds_diamond_free(g)
    assert exc.value.witness == (0, 1, 2, 3)


def test_paw_free_examples():
    for sizes in ([2, 2], [1, 2, 3], [3, 3], [1, 1, 1, 1], [2, 3, 2], [4, 4]):
        g = complete_multipartite(sizes)
        assert run(enum_mds_paw_free(g)) == oracle_mds(g)
    c5 = cycle(5)
    assert run(enum_mds_paw_free(c5)) == oracle_mds(c5)


def test_paw_free_agrees_with_triangle_free():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = random_rejection("triangle", n, 0.4, rng)
        bg = BicoloredGraph(g, rng.getrandbits(n))
        assert run(enum_mds_paw_free(bg)) == run(enum_mds_triangle_free(bg)) == oracle_mds(bg)


def test_paw_free_rejects_paw():
    with pytest.raises(ClassViolation):
        enum_mds_paw_free(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))


def test_cross_algorithm_agreement():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = random_rejection("triangle", n, 0.5, rng)
        results = [
            run(enum_mds_general(g)),
            run(enum_mds_triangle_free(g)),
            run(enum_mds_paw_free(g)),
            run(enum_mds_diamond_free(g)),
            run(enum_mds_kt_plus_k2(g)),
        ]
        assert all(r == results[0] for r in results)
