"""2-SAT engine for targets whose adjacency is "one end is a centre".

For a star whose centre alone is looped, and for a double star (by-side),
two non-isolated vertices ``a, b`` are adjacent iff ``a`` or ``b`` is a
centre.  With ``X(x, u)`` meaning ``f(x) = u`` an edge ``(x, y, pi, rho)``
becomes the clause ``X(x, pi^-1(c)) or X(y, rho^-1(c'))`` and each vertex
gets at-most-one clauses over its relevant values.  Vertices left unforced
take their first value that survives the unary filter.
"""

from __future__ import annotations

from ..classifier import DOUBLE_STAR, LOOPED_CENTER_STAR
from ..model import Instance
from ..oracle import Verdict
from .common import finish, lowest, preimage_mask, require_shape, unary_domains
from .twosat import solve_2sat

ENGINE = "two-sat"


def solve_center_two_sat(instance: Instance) -> Verdict:
    shape = require_shape(instance, (LOOPED_CENTER_STAR, DOUBLE_STAR), ENGINE)
    H = instance.target
    c = instance.compiled
    if shape.tag == LOOPED_CENTER_STAR:
        centres = [shape.params["center"]]
    else:
        centres = [shape.params["black_center"], shape.params["white_center"]]
    centre_mask = sum(1 << H.index(v) for v in centres)

    dom = unary_domains(c)
    if any(d == 0 for d in dom):
        return finish(instance, ENGINE, None)

    var_of: dict[tuple[int, int], int] = {}

    def literal(x: int, u_mask: int):
        """Positive literal for ``f(x)`` in ``u_mask`` (at most one value), or None."""
        u_mask &= dom[x]
        if not u_mask:
            return None
        u = lowest(u_mask)
        key = (x, u)
        if key not in var_of:
            var_of[key] = len(var_of)
        return (var_of[key], True)

    clauses = []
    for x, y, pi, rho in c.edges:
        lx = literal(x, preimage_mask(pi, centre_mask))
        ly = literal(y, preimage_mask(rho, centre_mask))
        if lx is None and ly is None:
            return finish(instance, ENGINE, None)
        clauses.append((lx or ly, ly or lx))

    per_vertex: dict[int, list[int]] = {}
    for (x, _u), v in var_of.items():
        per_vertex.setdefault(x, []).append(v)
    for vs in per_vertex.values():
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                clauses.append(((vs[i], False), (vs[j], False)))

    solution = solve_2sat(len(var_of), clauses)
    if solution is None:
        return finish(instance, ENGINE, None)
    values = [lowest(d) for d in dom]
    for (x, u), v in var_of.items():
        if solution[v]:
            values[x] = u
    return finish(instance, ENGINE, values)
