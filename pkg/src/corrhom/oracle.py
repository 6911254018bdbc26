"""Exact backtracking solver, the ground truth for every other engine.

Variables are G-vertices in input order, values H-vertices in input order.
Domains start from lists/sides filtered by G-loops; assigning a vertex
prunes the domains of its unassigned neighbours (forward checking).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import InternalError
from .model import Compiled, Instance, check_assignment

YES = "yes"
NO = "no"
RESOURCE_EXCEEDED = "resource-exceeded"


@dataclass(frozen=True)
class SearchLimits:
    """Budget for the exact search; ``None`` means unlimited."""

    max_nodes: Optional[int] = None
    max_millis: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_millis"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class Verdict:
    answer: str
    witness: Optional[Mapping[str, str]] = None
    engine: str = "oracle"
    fallback: bool = False
    nodes: int = 0
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if (self.answer == YES) != (self.witness is not None):
            raise InternalError("a witness must accompany exactly the yes answers")

    @property
    def is_yes(self) -> bool:
        return self.answer == YES

    def to_dict(self) -> dict:
        out: dict = {"answer": self.answer}
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        out["engine"] = self.engine
        if self.fallback:
            out["fallback"] = True
        return out


def certify(instance: Instance, verdict: Verdict) -> Verdict:
    """Re-check a yes-witness; raise :class:`InternalError` if it is wrong."""
    if verdict.witness is not None:
        bad = check_assignment(instance, verdict.witness)
        if bad is not None:
            raise InternalError(f"{verdict.engine} produced a rejected witness: {bad}")
    return verdict


class _Budget(Exception):
    pass


def _neighbour_tables(c: Compiled):
    """Per G-vertex: ``(y, table)`` with ``table[a]`` = values of ``y`` compatible with ``a``."""
    nbrs: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(c.m)]
    start = list(c.domains)
    for x, y, pi, rho in c.edges:
        if x == y:
            keep = 0
            for a in range(c.n):
                if pi[a] >= 0 and rho[a] >= 0 and c.adj[pi[a]] >> rho[a] & 1:
                    keep |= 1 << a
            start[x] &= keep
            continue
        fwd = [0] * c.n
        back = [0] * c.n
        for a in range(c.n):
            if pi[a] < 0:
                continue
            row = c.adj[pi[a]]
            for b in range(c.n):
                if rho[b] >= 0 and row >> rho[b] & 1:
                    fwd[a] |= 1 << b
                    back[b] |= 1 << a
        nbrs[x].append((y, tuple(fwd)))
        nbrs[y].append((x, tuple(back)))
    return nbrs, start


class _Search:
    def __init__(self, instance: Instance, limits: Optional[SearchLimits], cap: Optional[int]):
        self.c = instance.compiled
        self.nbrs, self.start = _neighbour_tables(self.c)
        self.limits = limits or SearchLimits()
        self.cap = cap
        self.nodes = 0
        self.count = 0
        self.deadline = (
            None
            if self.limits.max_millis is None
            else time.monotonic() + self.limits.max_millis / 1000.0
        )
        self.first: Optional[list[int]] = None

    def _tick(self) -> None:
        self.nodes += 1
        lim = self.limits
        if lim.max_nodes is not None and self.nodes > lim.max_nodes:
            raise _Budget
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Budget

    def run(self) -> None:
        m = self.c.m
        dom = list(self.start)
        if any(d == 0 for d in dom):
            return
        value = [-1] * m
        self._extend(0, dom, value)

    def _extend(self, i: int, dom: list[int], value: list[int]) -> bool:
        """Return True to stop the whole search."""
        if i == self.c.m:
            self.count += 1
            if self.first is None:
                self.first = list(value)
            return self.cap is not None and self.count >= self.cap
        bits = dom[i]
        while bits:
            low = bits & -bits
            a = low.bit_length() - 1
            bits ^= low
            self._tick()
            saved = []
            ok = True
            for y, table in self.nbrs[i]:
                if y <= i:
                    continue
                new = dom[y] & table[a]
                if new != dom[y]:
                    saved.append((y, dom[y]))
                    dom[y] = new
                    if not new:
                        ok = False
                        break
            if ok:
                value[i] = a
                if self._extend(i + 1, dom, value):
                    return True
                value[i] = -1
            for y, old in reversed(saved):
                dom[y] = old
        return False


def solve_exact(instance: Instance, limits: Optional[SearchLimits] = None) -> Verdict:
    """Decide the instance exactly.

    Returns ``yes`` with a witness, ``no`` only after the whole space is
    exhausted, and ``resource-exceeded`` when the budget runs out.
    """
    search = _Search(instance, limits, cap=1)
    try:
        search.run()
    except _Budget:
        return Verdict(RESOURCE_EXCEEDED, nodes=search.nodes)
    if search.first is None:
        return Verdict(NO, nodes=search.nodes)
    H = instance.target
    witness = {x: H.vertices[a] for x, a in zip(instance.g_vertices, search.first)}
    return certify(instance, Verdict(YES, witness, nodes=search.nodes))


def count_solutions(instance: Instance, cap: Optional[int] = None) -> int:
    """Number of accepted assignments, saturating at ``cap``."""
    if cap is not None and cap <= 0:
        return 0
    search = _Search(instance, None, cap=cap)
    search.run()
    return search.count
