"""Helpers shared by the polynomial engines."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ..classifier import ShapeCase, detect_shape, effective_target
from ..errors import ShapeMismatch
from ..model import Compiled, Instance
from ..oracle import NO, YES, Verdict, certify


def instance_shape(instance: Instance) -> ShapeCase:
    """Shape of the instance's target under the instance's mode."""
    core = effective_target(instance.target, instance.by_side)
    return detect_shape(core, instance.by_side)


def require_shape(instance: Instance, tags: Iterable[str], engine: str) -> ShapeCase:
    shape = instance_shape(instance)
    tags = tuple(tags)
    if shape.tag not in tags:
        raise ShapeMismatch(
            f"engine {engine!r} handles {', '.join(tags)}; target has shape {shape.tag}"
        )
    return shape


def core_mask(c: Compiled) -> int:
    """H-vertices with at least one edge (loops count)."""
    return sum(1 << a for a in range(c.n) if c.adj[a])


def preimage_mask(perm: Sequence[int], target_mask: int) -> int:
    return sum(1 << a for a, b in enumerate(perm) if b >= 0 and target_mask >> b & 1)


def unary_domains(c: Compiled, core: Optional[int] = None) -> list[int]:
    """Allowed values per G-vertex after requiring every incident label to
    send the vertex into the non-isolated part of H."""
    if core is None:
        core = core_mask(c)
    dom = list(c.domains)
    for x, y, pi, rho in c.edges:
        dom[x] &= preimage_mask(pi, core)
        dom[y] &= preimage_mask(rho, core)
    return dom


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def finish(instance: Instance, engine: str, values: Optional[Sequence[int]]) -> Verdict:
    """Build (and certify) a verdict from per-G-vertex H indices."""
    if values is None:
        return Verdict(NO, engine=engine)
    H = instance.target
    witness = {x: H.vertices[a] for x, a in zip(instance.g_vertices, values)}
    return certify(instance, Verdict(YES, witness, engine=engine))
