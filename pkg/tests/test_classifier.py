import itertools
import random

import networkx as nx
import pytest

from corrhom.classifier import (
    BY_SIDE,
    BY_SIDE_LIST,
    COMPLETE_BIPARTITE,
    DOUBLE_STAR,
    GENERAL,
    IRREFLEXIVE_K22,
    IRREFLEXIVE_MATCHING,
    LIST,
    LOOPED_CENTER_STAR,
    MATCHING_PLUS_REFLEXIVE,
    NP_COMPLETE,
    POLYNOMIAL,
    REFLEXIVE_2K2,
    REFLEXIVE_CLIQUE,
    REFLEXIVE_CO_CLIQUE,
    STANDARD,
    TWO_K12,
    TWO_K22,
    classify,
    detect_shape,
    strip_isolated_loopless,
)
from corrhom.errors import NotApplicable, ValidationError
from corrhom.model import TargetGraph
from corrhom.oracle import solve_exact
from corrhom import targets

from conftest import all_reflexive_graphs


def bip(black, white, edges):
    side = {v: "black" for v in black}
    side.update({v: "white" for v in white})
    return TargetGraph(tuple(black) + tuple(white), tuple(edges), side)


POSITIVE = [
    (targets.reflexive_clique(4), REFLEXIVE_CLIQUE),
    (targets.reflexive_coclique(3), REFLEXIVE_CO_CLIQUE),
    (targets.reflexive_2k2(), REFLEXIVE_2K2),
    (targets.irreflexive_matching(3, 2), IRREFLEXIVE_MATCHING),
    (targets.irreflexive_k22(), IRREFLEXIVE_K22),
    (targets.looped_star(2), LOOPED_CENTER_STAR),
    (targets.matching_plus_reflexive(2, 1), MATCHING_PLUS_REFLEXIVE),
    (targets.complete_bipartite(2, 3, 1, 1), COMPLETE_BIPARTITE),
    (targets.double_star(2, 2, 0, 1), DOUBLE_STAR),
    (targets.two_k12(2), TWO_K12),
    (targets.two_k22(), TWO_K22),
]

NEGATIVE = [
    targets.k1_union_k2(),  # reflexive but not clique/co-clique/2K2
    targets.reflexive_path(3),
    targets.clique_union((2, 2, 1)),
    TargetGraph(("a", "b", "c"), (("a", "b"), ("b", "c"), ("a", "c"))),  # irreflexive triangle
    TargetGraph(("a", "b", "c"), (("a", "a"), ("b", "b"), ("a", "b"), ("b", "c"))),  # two loops, mixed
    bip(("a", "b"), ("c", "d", "e"), (("a", "c"), ("a", "d"), ("b", "d"), ("b", "e"))),  # path P5
]


@pytest.mark.parametrize("H,tag", POSITIVE, ids=[t for _, t in POSITIVE])
def test_positive_shapes(H, tag):
    assert detect_shape(H).tag == tag


@pytest.mark.parametrize("H", NEGATIVE)
def test_negative_shapes(H):
    assert detect_shape(H).tag == GENERAL


def test_matching_parameters():
    shape = detect_shape(targets.irreflexive_matching(3, 2))
    assert shape.params == {"p": 3, "q": 2}


def test_double_star_with_isolated_white():
    # centres u1 (black) and v1 (white); two white leaves on u1, two black leaves on v1
    H = bip(
        ("u1", "b1", "b2"),
        ("v1", "w1", "w2", "iso"),
        (("u1", "v1"), ("u1", "w1"), ("u1", "w2"), ("b1", "v1"), ("b2", "v1")),
    )
    shape = detect_shape(H)
    assert shape.tag == DOUBLE_STAR
    assert shape.params == {"black_center": "u1", "white_center": "v1"}


def test_reflexive_k1_prefers_clique():
    assert detect_shape(targets.reflexive_clique(1)).tag == REFLEXIVE_CLIQUE


def test_two_k12_with_black_leaves_also_accepted():
    H = bip(("l1", "l2", "l3", "l4"), ("c1", "c2"), (("l1", "c1"), ("l2", "c1"), ("l3", "c2"), ("l4", "c2")))
    shape = detect_shape(H)
    assert shape.tag == TWO_K12
    assert shape.params["center_side"] == "white"


def test_two_k12_rejects_leaf_side_isolated():
    H = bip(("c1", "c2"), ("l1", "l2", "l3", "l4", "iso"),
            (("c1", "l1"), ("c1", "l2"), ("c2", "l3"), ("c2", "l4")))
    assert detect_shape(H).tag == GENERAL


def test_classify_examples():
    r2k2 = targets.reflexive_2k2()
    assert classify(r2k2, STANDARD).complexity == POLYNOMIAL
    assert classify(r2k2, STANDARD).engine == "xor"
    assert classify(r2k2, LIST).complexity == NP_COMPLETE
    k22 = targets.irreflexive_k22()
    assert classify(k22, STANDARD).engine == "xor"
    assert classify(k22, LIST).complexity == NP_COMPLETE
    c = classify(targets.k1_union_k2(), STANDARD)
    assert c.complexity == NP_COMPLETE
    assert "1-IN-3-SAT" in c.reason


TABLE = {
    STANDARD: {1, 2, 3, 4, 5, 6, 7},
    LIST: {1, 2, 4, 6, 7},
    BY_SIDE: {4, 8, 9, 10, 11},
    BY_SIDE_LIST: {4, 8, 9},
}


@pytest.mark.parametrize("variant", [STANDARD, LIST])
def test_table_standard_side(variant):
    for case, (H, _tag) in enumerate(POSITIVE[:7], start=1):
        assert classify(H, variant).polynomial == (case in TABLE[variant])


@pytest.mark.parametrize("variant", [BY_SIDE, BY_SIDE_LIST])
def test_table_by_side(variant):
    matching = bip(("a", "b"), ("c", "d", "e"), (("a", "c"), ("b", "d")))
    cases = {4: matching, 8: POSITIVE[7][0], 9: POSITIVE[8][0], 10: POSITIVE[9][0], 11: POSITIVE[10][0]}
    for case, H in cases.items():
        assert classify(H, variant).polynomial == (case in TABLE[variant])


def test_by_side_needs_bipartition():
    with pytest.raises(ValidationError):
        classify(targets.reflexive_2k2(), BY_SIDE)


def test_strip_isolated_loopless():
    star = targets.looped_star(2)
    H = TargetGraph(star.vertices + ("z",), star.edges)
    assert strip_isolated_loopless(H) == star
    assert classify(H, STANDARD).shape.tag == LOOPED_CENTER_STAR
    k3 = targets.reflexive_clique(3)
    assert strip_isolated_loopless(k3) == k3
    with pytest.raises(NotApplicable):
        strip_isolated_loopless(targets.irreflexive_matching(2, 1))


def test_stripping_preserves_answers():
    star = targets.looped_star(2)
    H = TargetGraph(star.vertices + ("z",), star.edges)
    rng = random.Random(4)
    for _ in range(100):
        inst = targets.random_instance(H, rng, rng.randint(1, 5), rng.randint(1, 6))
        stripped_target = strip_isolated_loopless(H)
        # map every label through a restriction only when it fixes z; otherwise compare via oracle directly
        if all(e.pi("z") == "z" and e.rho("z") == "z" for e in inst.edges):
            from corrhom.model import Edge, Instance, Permutation

            def cut(p):
                return Permutation({k: v for k, v in p.mapping.items() if k != "z"})

            small = Instance(stripped_target, inst.g_vertices,
                             tuple(Edge(e.u, e.v, cut(e.pi), cut(e.rho)) for e in inst.edges))
            assert solve_exact(inst).answer == solve_exact(small).answer


def _relabel(H, rng):
    names = list(H.vertices)
    image = [f"r{i}" for i in range(len(names))]
    rng.shuffle(image)
    mapping = dict(zip(names, image))
    relabelled = H.relabel(mapping)
    order = sorted(relabelled.vertices)
    return TargetGraph(tuple(order), relabelled.edges, relabelled.side)


def test_isomorphism_invariance():
    rng = random.Random(11)
    for H, _tag in POSITIVE + [(h, None) for h in NEGATIVE]:
        variants = [BY_SIDE, BY_SIDE_LIST] if H.side else [STANDARD, LIST]
        for _ in range(10):
            G = _relabel(H, rng)
            for variant in variants:
                a, b = classify(H, variant), classify(G, variant)
                assert (a.shape.tag, a.complexity) == (b.shape.tag, b.complexity)


def _nx_graph(H):
    g = nx.Graph()
    g.add_nodes_from(H.vertices)
    g.add_edges_from(H.non_loop_edges())
    return g


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reflexive_table_against_networkx(n):
    two_k2 = nx.disjoint_union(nx.complete_graph(2), nx.complete_graph(2))
    for H in all_reflexive_graphs(n):
        g = _nx_graph(H)
        clique = g.number_of_edges() == n * (n - 1) // 2
        coclique = g.number_of_edges() == 0
        is_2k2 = nx.is_isomorphic(g, two_k2)
        assert classify(H, STANDARD).polynomial == (clique or coclique or is_2k2)
        assert classify(H, LIST).polynomial == (clique or coclique)


def _expected_standard_tag(H):
    """Independent predicates, one per standard family, via networkx."""
    g = _nx_graph(H)
    n = len(H)
    loops = set(H.looped)
    m = g.number_of_edges()
    if len(loops) == n:
        if m == n * (n - 1) // 2:
            return REFLEXIVE_CLIQUE
        if m == 0:
            return REFLEXIVE_CO_CLIQUE
        two_k2 = nx.disjoint_union(nx.complete_graph(2), nx.complete_graph(2))
        return REFLEXIVE_2K2 if nx.is_isomorphic(g, two_k2) else GENERAL
    if not loops:
        if all(d <= 1 for _, d in g.degree()):
            return IRREFLEXIVE_MATCHING
        return IRREFLEXIVE_K22 if nx.is_isomorphic(g, nx.cycle_graph(4)) else GENERAL
    if len(loops) == 1:
        (c,) = loops
        if set(map(frozenset, g.edges())) == {frozenset((c, v)) for v in H.vertices if v != c}:
            return LOOPED_CENTER_STAR
    loopless = [v for v in H.vertices if v not in loops]
    if all(g.degree(v) == 0 for v in loops) and all(g.degree(v) == 1 for v in loopless):
        return MATCHING_PLUS_REFLEXIVE
    return GENERAL


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_standard_tags_exhaustive(n):
    V = tuple("abcd"[:n])
    pairs = list(itertools.combinations_with_replacement(V, 2))
    for mask in range(1 << len(pairs)):
        H = TargetGraph(V, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
        assert detect_shape(H, by_side=False).tag == _expected_standard_tag(H), H
