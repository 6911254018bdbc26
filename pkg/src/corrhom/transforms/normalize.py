"""Removing G-loops and parallel edges over a reflexive target.

Both constructions replace a vertex by several copies that inherit its
edges and use a majority argument to recover a solution of the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..errors import NotApplicable, ShapeMismatch
from ..model import Edge, Instance, Permutation
from .expander import sample_verified_expander


def fresh_ids(base: str, count: int, used: set[str]) -> list[str]:
    """``base#0 .. base#(count-1)``, primed until none collides with ``used``."""
    stem = base
    while True:
        names = [f"{stem}#{i}" for i in range(count)]
        if not any(name in used for name in names):
            used.update(names)
            return names
        stem += "'"


def _require_reflexive(instance: Instance) -> None:
    if not instance.target.is_reflexive():
        raise ShapeMismatch("loop and parallel-edge elimination needs a reflexive target")
    if instance.by_side:
        raise ShapeMismatch("by-side instances have no reflexive target")


def _inherit_lists(instance: Instance, replaced: dict[str, list[str]]):
    if instance.lists is None:
        return None
    out = {}
    for x, allowed in instance.lists.items():
        for name in replaced.get(x, [x]):
            out[name] = allowed
    return out


def _replace_vertices(instance: Instance, replaced: dict[str, list[str]]) -> tuple[str, ...]:
    out: list[str] = []
    for x in instance.g_vertices:
        out.extend(replaced.get(x, [x]))
    return tuple(out)


def eliminate_loops(instance: Instance) -> Instance:
    """Replace each looped vertex by a clique of ``|V(H)| + 1`` copies.

    Every pair of copies gets one edge per distinct loop label at the
    vertex, and each copy inherits the vertex's other edges.  Two copies
    must share an image, so all loop constraints still bite on it; handling
    every loop of a vertex in one step avoids re-copying leftover loops.
    """
    _require_reflexive(instance)
    n = len(instance.target)
    loop_labels: dict[str, list[tuple[Permutation, Permutation]]] = {}
    for e in instance.edges:
        if e.is_loop:
            labels = loop_labels.setdefault(e.u, [])
            if (e.pi, e.rho) not in labels:
                labels.append((e.pi, e.rho))
    if not loop_labels:
        return instance
    used = set(instance.g_vertices)
    replaced = {x: fresh_ids(x, n + 1, used) for x in instance.g_vertices if x in loop_labels}
    edges: list[Edge] = []
    for x, copies in replaced.items():
        for a in range(len(copies)):
            for b in range(a + 1, len(copies)):
                edges.extend(Edge(copies[a], copies[b], pi, rho) for pi, rho in loop_labels[x])
    for e in instance.edges:
        if e.is_loop:
            continue
        us, vs = replaced.get(e.u, [e.u]), replaced.get(e.v, [e.v])
        edges.extend(Edge(u, v, e.pi, e.rho) for u in us for v in vs)
    return Instance(
        instance.target,
        _replace_vertices(instance, replaced),
        tuple(edges),
        _inherit_lists(instance, replaced),
        instance.mode,
    )


def _edge_groups(instance: Instance) -> dict[tuple[str, str], list[tuple[Permutation, Permutation]]]:
    """Distinct labels per unordered vertex pair, oriented to G's vertex order."""
    groups: dict[tuple[str, str], list[tuple[Permutation, Permutation]]] = {}
    for e in instance.edges:
        if instance.gindex(e.u) > instance.gindex(e.v):
            e = e.reversed()
        labels = groups.setdefault((e.u, e.v), [])
        if (e.pi, e.rho) not in labels:
            labels.append((e.pi, e.rho))
    return groups


@dataclass(frozen=True)
class BlowupStats:
    loops_removed: int
    parallel_pairs: int
    copies_per_vertex: Optional[int]
    vertices_before: int
    vertices_after: int
    edges_before: int
    edges_after: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def eliminate_parallel_edges(instance: Instance, seed: int = 0) -> Instance:
    """Make a loop-free instance simple.

    Identical parallel labels collapse.  Every vertex touching a pair with
    two distinct labels is replaced by ``N`` copies at once; such a pair is
    laid out over the copies by a verified mask (1 -> first label, 0 ->
    second), and every single-label pair joins all copies of its ends.
    """
    _require_reflexive(instance)
    if any(e.is_loop for e in instance.edges):
        raise NotApplicable("instance has G-loops; eliminate them first")
    groups = _edge_groups(instance)
    if sum(len(v) for v in groups.values()) == len(instance.edges):
        if all(len(v) == 1 for v in groups.values()):
            return instance
    wide = [pair for pair, labels in groups.items() if len(labels) > 2]
    if wide:
        u, v = wide[0]
        raise NotApplicable(
            f"{len(groups[wide[0]])} distinct labels between {u!r} and {v!r}; "
            "a two-label mask cannot realise more than two"
        )
    blown = {x for pair, labels in groups.items() if len(labels) == 2 for x in pair}
    replaced: dict[str, list[str]] = {}
    mask = None
    if blown:
        mask = sample_verified_expander(len(instance.target), seed)
        used = set(instance.g_vertices)
        for x in instance.g_vertices:
            if x in blown:
                replaced[x] = fresh_ids(x, mask.N, used)
    edges: list[Edge] = []
    for (a, b), labels in groups.items():
        xs, ys = replaced.get(a, [a]), replaced.get(b, [b])
        if len(labels) == 1:
            pi, rho = labels[0]
            edges.extend(Edge(xi, yj, pi, rho) for xi in xs for yj in ys)
        else:
            assert mask is not None
            for i, xi in enumerate(xs):
                for j, yj in enumerate(ys):
                    pi, rho = labels[0] if mask.bit(i, j) else labels[1]
                    edges.append(Edge(xi, yj, pi, rho))
    return Instance(
        instance.target,
        _replace_vertices(instance, replaced),
        tuple(edges),
        _inherit_lists(instance, replaced),
        instance.mode,
    )


def normalize(instance: Instance, loops: bool = True, parallel: bool = True, seed: int = 0) -> tuple[Instance, BlowupStats]:
    """Loop elimination then parallel-edge elimination, with statistics."""
    out = instance
    if loops:
        out = eliminate_loops(out)
    groups = _edge_groups(out)
    pairs = sum(1 for labels in groups.values() if len(labels) == 2)
    copies = None
    if parallel:
        if pairs:
            copies = sample_verified_expander(len(out.target), seed).N
        out = eliminate_parallel_edges(out, seed)
    stats = BlowupStats(
        loops_removed=sum(1 for e in instance.edges if e.is_loop) if loops else 0,
        parallel_pairs=pairs if parallel else 0,
        copies_per_vertex=copies,
        vertices_before=len(instance.g_vertices),
        vertices_after=len(out.g_vertices),
        edges_before=len(instance.edges),
        edges_after=len(out.edges),
    )
    return out, stats


def majority_witness(original: Instance, copies: dict[str, Iterable[str]], witness: dict[str, str]) -> dict[str, str]:
    """Collapse a witness of a blown-up instance back to ``original``.

    ``copies`` maps an original vertex to the ids that replaced it; the
    most frequent image wins (ties broken by target vertex order).
    """
    order = {v: i for i, v in enumerate(original.target.vertices)}
    out = {}
    for x in original.g_vertices:
        names = list(copies.get(x, [x]))
        counts: dict[str, int] = {}
        for name in names:
            counts[witness[name]] = counts.get(witness[name], 0) + 1
        out[x] = min(counts, key=lambda v: (-counts[v], order[v]))
    return out
