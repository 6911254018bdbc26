"""2-SAT via strongly connected components of the implication graph."""

from __future__ import annotations

from typing import Optional, Sequence

Literal = tuple[int, bool]  # (variable, polarity)


def _node(lit: Literal) -> int:
    var, positive = lit
    return 2 * var + (0 if positive else 1)


def _tarjan(graph: list[list[int]]) -> list[int]:
    """Iterative Tarjan; component ids are assigned in completion order,
    i.e. reverse topological order of the condensation."""
    n = len(graph)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            edges = graph[v]
            while i < len(edges):
                w = edges[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def solve_2sat(nvars: int, clauses: Sequence[tuple[Literal, Literal]]) -> Optional[list[bool]]:
    """Satisfying assignment for clauses ``(l1 or l2)``, or ``None``.

    A unit clause is written ``(l, l)``.  Deterministic for a fixed clause order.
    """
    graph: list[list[int]] = [[] for _ in range(2 * nvars)]
    for a, b in clauses:
        na, nb = _node(a), _node(b)
        # not a -> b, not b -> a
        graph[na ^ 1].append(nb)
        graph[nb ^ 1].append(na)
    comp = _tarjan(graph)
    out = []
    for v in range(nvars):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        # the literal whose component finishes first (is later in topological order) is true
        out.append(pos < neg)
    return out
