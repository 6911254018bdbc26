"""Targets where only unary constraints matter.

On a reflexive clique any two non-isolated images are adjacent; on a
complete bipartite core (by-side) any black/white pair of core vertices is.
So an edge only demands that both endpoints land, after relabelling, in
the non-isolated part of ``H``.
"""

from __future__ import annotations

from ..classifier import COMPLETE_BIPARTITE, REFLEXIVE_CLIQUE
from ..model import Instance
from ..oracle import Verdict
from .common import finish, lowest, require_shape, unary_domains

ENGINE = "unary"


def solve_unary(instance: Instance) -> Verdict:
    require_shape(instance, (REFLEXIVE_CLIQUE, COMPLETE_BIPARTITE), ENGINE)
    dom = unary_domains(instance.compiled)
    if any(d == 0 for d in dom):
        return finish(instance, ENGINE, None)
    return finish(instance, ENGINE, [lowest(d) for d in dom])
