"""Gadgets that rewrite instances between related targets."""

from __future__ import annotations

from ..errors import TargetMismatch
from ..model import Edge, Instance, Permutation, TargetGraph
from .normalize import fresh_ids


def _plain(instance: Instance) -> None:
    if instance.by_side:
        raise TargetMismatch("gadgets are defined for standard-mode instances only")


def subdivide_for_square(instance: Instance, H: TargetGraph) -> Instance:
    """Turn an instance over ``H.square()`` into an equivalent one over ``H``.

    Each edge ``(x, y, pi, rho)`` becomes ``x - z - y`` with labels
    ``(pi, id)`` and ``(id, rho)``: the midpoint ``z`` witnesses a walk of
    length two between ``pi(f(x))`` and ``rho(f(y))``.
    """
    _plain(instance)
    if instance.target != H.square():
        raise TargetMismatch("instance target is not the square of the supplied graph")
    identity = Permutation.identity(H.vertices)
    used = set(instance.g_vertices)
    vertices = list(instance.g_vertices)
    edges: list[Edge] = []
    for k, e in enumerate(instance.edges):
        (z,) = fresh_ids(f"{e.u}~{e.v}@{k}", 1, used)
        vertices.append(z)
        edges.append(Edge(e.u, z, e.pi, identity))
        edges.append(Edge(z, e.v, identity, e.rho))
    return Instance(H, tuple(vertices), tuple(edges), instance.lists, instance.mode)


def restricted_domain(H: TargetGraph, pi: Permutation, rho: Permutation) -> frozenset[str]:
    """Images that survive a G-loop labelled ``(pi, rho)``."""
    return frozenset(u for u in H.vertices if H.has_edge(pi(u), rho(u)))


def add_restriction_loop(instance: Instance, x: str, pi: Permutation, rho: Permutation) -> Instance:
    return instance.with_changes(edges=instance.edges + (Edge(x, x, pi, rho),))


def three_path_target(H: TargetGraph) -> tuple[TargetGraph, tuple[str, str, str, str]]:
    """Check ``H`` is a reflexive K1 + K3 and build the K1 + K1 + K2 target.

    Returns the new target and ``(a, b, c, d)`` with ``a`` the isolated
    vertex and ``b, c, d`` the triangle in H's vertex order; the new target
    keeps every loop and the single edge ``c - d``.
    """
    comps = sorted(H.components(), key=len)
    if (
        len(H) != 4
        or not H.is_reflexive()
        or H.side is not None
        or [len(c) for c in comps] != [1, 3]
        or len(H.non_loop_edges()) != 3
    ):
        raise TargetMismatch("three-path gadget needs a reflexive K1 + K3 target")
    (a,) = comps[0]
    b, c, d = sorted(comps[1], key=H.index)
    loops = tuple((v, v) for v in H.vertices)
    return TargetGraph(H.vertices, loops + ((c, d),)), (a, b, c, d)


def gadget_three_path(instance: Instance) -> Instance:
    """Replace every edge by a three-edge path over K1 + K1 + K2.

    With ``tau = (b c)`` the path ``x - p - q - y`` gets labels
    ``(pi, tau pi)``, ``(pi, tau pi)``, ``(pi, tau rho)``; writing ``S`` for
    ``{(s, t) : s ~ tau(t)}`` in the new target, ``S^3`` is exactly the
    adjacency of K1 + K3, so endpoint images behave as before.
    """
    _plain(instance)
    H = instance.target
    new_target, (_a, b, c, _d) = three_path_target(H)
    tau = Permutation.transposition(H.vertices, b, c)
    used = set(instance.g_vertices)
    vertices = list(instance.g_vertices)
    edges: list[Edge] = []
    for k, e in enumerate(instance.edges):
        p, q = fresh_ids(f"{e.u}~{e.v}@{k}", 2, used)
        vertices.extend((p, q))
        tau_pi = tau.compose(e.pi)
        edges.append(Edge(e.u, p, e.pi, tau_pi))
        edges.append(Edge(p, q, e.pi, tau_pi))
        edges.append(Edge(q, e.v, e.pi, tau.compose(e.rho)))
    return Instance(new_target, tuple(vertices), tuple(edges), instance.lists, instance.mode)
