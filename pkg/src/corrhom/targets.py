"""Named target graphs and random instance generation."""

from __future__ import annotations

import random
import string
from typing import Callable, Optional, Sequence

from .errors import ValidationError
from .model import BLACK, BY_SIDE, STANDARD, WHITE, Edge, Instance, Permutation, TargetGraph


def _names(n: int, offset: int = 0) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < 26 else f"v{i}" for i in range(offset, offset + n))


def _loops(vertices: Sequence[str]) -> list[tuple[str, str]]:
    return [(v, v) for v in vertices]


def _clique_edges(vertices: Sequence[str]) -> list[tuple[str, str]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def reflexive_clique(n: int) -> TargetGraph:
    V = _names(n)
    return TargetGraph(V, tuple(_loops(V) + _clique_edges(V)))


def reflexive_coclique(n: int) -> TargetGraph:
    V = _names(n)
    return TargetGraph(V, tuple(_loops(V)))


def clique_union(sizes: Sequence[int]) -> TargetGraph:
    """Disjoint union of reflexive cliques, vertices named consecutively."""
    V = _names(sum(sizes))
    edges = _loops(V)
    start = 0
    for s in sizes:
        edges += _clique_edges(V[start:start + s])
        start += s
    return TargetGraph(V, tuple(edges))


def reflexive_2k2() -> TargetGraph:
    return clique_union((2, 2))


def k1_union_k2() -> TargetGraph:
    return clique_union((1, 2))


def k1_union_k3() -> TargetGraph:
    return clique_union((1, 3))


def reflexive_path(n: int) -> TargetGraph:
    V = _names(n)
    return TargetGraph(V, tuple(_loops(V) + [(V[i], V[i + 1]) for i in range(n - 1)]))


def irreflexive_matching(p: int, q: int = 0) -> TargetGraph:
    """``p`` disjoint edges plus ``q`` isolated vertices, no loops."""
    V = _names(2 * p + q)
    return TargetGraph(V, tuple((V[2 * i], V[2 * i + 1]) for i in range(p)))


def irreflexive_k22() -> TargetGraph:
    V = _names(4)
    return TargetGraph(V, ((V[0], V[2]), (V[0], V[3]), (V[1], V[2]), (V[1], V[3])))


def looped_star(leaves: int) -> TargetGraph:
    """Star whose centre (the first vertex) alone carries a loop."""
    V = _names(leaves + 1)
    return TargetGraph(V, tuple([(V[0], V[0])] + [(V[0], v) for v in V[1:]]))


def matching_plus_reflexive(p: int, q: int) -> TargetGraph:
    """``p`` irreflexive edges plus ``q`` looped isolated vertices."""
    V = _names(2 * p + q)
    edges = [(V[2 * i], V[2 * i + 1]) for i in range(p)] + _loops(V[2 * p:])
    return TargetGraph(V, tuple(edges))


def _bipartite(black: Sequence[str], white: Sequence[str], edges) -> TargetGraph:
    side = {v: BLACK for v in black}
    side.update({v: WHITE for v in white})
    return TargetGraph(tuple(black) + tuple(white), tuple(edges), side)


def complete_bipartite(p: int, q: int, isolated_black: int = 0, isolated_white: int = 0) -> TargetGraph:
    B = _names(p + isolated_black)
    W = _names(q + isolated_white, offset=len(B))
    return _bipartite(B, W, [(u, v) for u in B[:p] for v in W[:q]])


def double_star(black_leaves: int, white_leaves: int, isolated_black: int = 0, isolated_white: int = 0) -> TargetGraph:
    """Adjacent centres (first black, first white vertex), each with its own leaves."""
    B = _names(1 + white_leaves + isolated_black)
    W = _names(1 + black_leaves + isolated_white, offset=len(B))
    edges = [(B[0], W[0])]
    edges += [(B[0], w) for w in W[1:1 + black_leaves]]
    edges += [(b, W[0]) for b in B[1:1 + white_leaves]]
    return _bipartite(B, W, edges)


def two_k12(isolated_black: int = 0) -> TargetGraph:
    """Two K1,2 with black centres and white leaves, plus isolated black vertices."""
    B = _names(2 + isolated_black)
    W = _names(4, offset=len(B))
    edges = [(B[0], W[0]), (B[0], W[1]), (B[1], W[2]), (B[1], W[3])]
    return _bipartite(B, W, edges)


def two_k22() -> TargetGraph:
    B = _names(4)
    W = _names(4, offset=4)
    edges = [(B[i], W[j]) for k in (0, 2) for i in (k, k + 1) for j in (k, k + 1)]
    return _bipartite(B, W, edges)


NAMED_TARGETS: dict[str, Callable[[], TargetGraph]] = {
    "reflexive-k3": lambda: reflexive_clique(3),
    "reflexive-coclique-3": lambda: reflexive_coclique(3),
    "reflexive-2k2": reflexive_2k2,
    "k1-union-k2": k1_union_k2,
    "k1-union-k3": k1_union_k3,
    "reflexive-path-3": lambda: reflexive_path(3),
    "matching-2-1": lambda: irreflexive_matching(2, 1),
    "k22": irreflexive_k22,
    "looped-star-3": lambda: looped_star(3),
    "matching-plus-reflexive-1-2": lambda: matching_plus_reflexive(1, 2),
    "complete-bipartite-2-2": lambda: complete_bipartite(2, 2, 1, 0),
    "double-star-2-1": lambda: double_star(2, 1),
    "two-k12": lambda: two_k12(1),
    "two-k22": two_k22,
}


def named_target(name: str) -> TargetGraph:
    try:
        return NAMED_TARGETS[name]()
    except KeyError:
        raise ValidationError(f"unknown target {name!r}; known: {', '.join(sorted(NAMED_TARGETS))}") from None


def random_permutation(domain: Sequence[str], rng: random.Random) -> Permutation:
    image = list(domain)
    rng.shuffle(image)
    return Permutation(dict(zip(domain, image)))


def random_instance(
    target: TargetGraph,
    rng: random.Random,
    n_vertices: int,
    n_edges: int,
    loops: bool = True,
    parallel: bool = True,
    lists: bool = False,
    by_side: Optional[bool] = None,
    list_prob: float = 0.5,
) -> Instance:
    """Random labelled ``G`` over ``target``.

    ``by_side`` defaults to whether the target carries a bipartition.  G
    vertices are ``x0, x1, ...``; in by-side mode they get random sides and
    edges only join opposite sides (so G-loops never occur there).
    """
    if by_side is None:
        by_side = target.side is not None
    names = tuple(f"x{i}" for i in range(n_vertices))
    g_side = None
    if by_side:
        g_side = {x: rng.choice((BLACK, WHITE)) for x in names}

    def label_domain(x: str) -> tuple[str, ...]:
        return target.side_vertices(g_side[x]) if g_side else target.vertices

    edges: list[Edge] = []
    seen: set[frozenset[str]] = set()
    attempts = 0
    while len(edges) < n_edges and n_vertices and attempts < 50 * (n_edges + 1):
        attempts += 1
        u, v = rng.choice(names), rng.choice(names)
        if u == v and (not loops or by_side):
            continue
        if g_side and g_side[u] == g_side[v]:
            continue
        key = frozenset((u, v))
        if key in seen and not parallel:
            continue
        seen.add(key)
        edges.append(Edge(u, v, random_permutation(label_domain(u), rng), random_permutation(label_domain(v), rng)))

    list_map = None
    if lists:
        list_map = {}
        for x in names:
            if rng.random() < list_prob:
                base = label_domain(x)
                k = rng.randint(1, len(base)) if base else 0
                list_map[x] = tuple(rng.sample(list(base), k))
    return Instance(target, names, tuple(edges), list_map, BY_SIDE if by_side else STANDARD, g_side)
