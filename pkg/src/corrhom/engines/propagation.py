"""Forced-value propagation for targets where each vertex has at most one
neighbour (itself when looped, its partner when matched).

Choosing the image of one vertex fixes the image of every vertex in its
G-component, so each component is solved by trying every root image.
"""

from __future__ import annotations

from collections import deque

from ..classifier import IRREFLEXIVE_MATCHING, MATCHING_PLUS_REFLEXIVE, REFLEXIVE_CO_CLIQUE
from ..errors import ShapeMismatch
from ..model import Compiled, Instance
from ..oracle import Verdict
from .common import bits_of, finish, require_shape

ENGINE = "propagate"


def partner_map(c: Compiled) -> list[int]:
    """The unique neighbour of each H-vertex, or -1 when it has none."""
    out = []
    for a in range(c.n):
        nb = bits_of(c.adj[a])
        if len(nb) > 1:
            raise ShapeMismatch("propagation needs every H-vertex to have at most one neighbour")
        out.append(nb[0] if nb else -1)
    return out


def _inverse(perm: tuple[int, ...]) -> list[int]:
    inv = [-1] * len(perm)
    for a, b in enumerate(perm):
        if b >= 0:
            inv[b] = a
    return inv


def _g_components(c: Compiled) -> list[list[int]]:
    seen = [False] * c.m
    comps = []
    for root in range(c.m):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for k in c.incident[x]:
                ex, ey, _, _ = c.edges[k]
                for z in (ex, ey):
                    if not seen[z]:
                        seen[z] = True
                        comp.append(z)
                        queue.append(z)
        comps.append(comp)
    return comps


def _propagate(c: Compiled, partner, inverses, root: int, value: int, out: list[int]) -> bool:
    """Extend ``root -> value`` over its component into ``out``; False on conflict."""
    out[root] = value
    queue = deque([root])
    while queue:
        x = queue.popleft()
        fx = out[x]
        for k in c.incident[x]:
            ex, ey, pi, rho = c.edges[k]
            pi_inv, rho_inv = inverses[k]
            ends = [(pi, rho_inv, ey)] if ex == x else []
            if ey == x:
                ends.append((rho, pi_inv, ex))
            for here, there_inv, y in ends:
                img = here[fx]
                if img < 0 or partner[img] < 0:
                    return False
                forced = there_inv[partner[img]]
                if forced < 0 or not c.domains[y] >> forced & 1:
                    return False
                if out[y] == -1:
                    out[y] = forced
                    queue.append(y)
                elif out[y] != forced:
                    return False
    return True


def solve_propagation(instance: Instance) -> Verdict:
    require_shape(instance, (REFLEXIVE_CO_CLIQUE, IRREFLEXIVE_MATCHING, MATCHING_PLUS_REFLEXIVE), ENGINE)
    c = instance.compiled
    partner = partner_map(c)
    inverses = [(_inverse(pi), _inverse(rho)) for _, _, pi, rho in c.edges]
    values = [-1] * c.m
    for comp in _g_components(c):
        root = comp[0]
        for a in bits_of(c.domains[root]):
            if _propagate(c, partner, inverses, root, a, values):
                break
            for z in comp:
                values[z] = -1
        else:
            return finish(instance, ENGINE, None)
    return finish(instance, ENGINE, values)
