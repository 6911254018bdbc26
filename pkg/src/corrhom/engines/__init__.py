"""Polynomial-time engines and the dispatcher that picks one."""

from __future__ import annotations

from typing import Callable, Optional

from ..classifier import POLYNOMIAL_CASES, classify
from ..errors import NonAffineList
from ..model import Instance
from ..oracle import SearchLimits, Verdict, solve_exact
from .center import solve_center_two_sat
from .gf2 import (
    AffineForm,
    LinearSystem,
    count_solutions_gf2,
    partition_to_affine,
    solve_linear_gf2,
)
from .linear import encode_double_k12, encode_xor, solve_double_k12, solve_xor
from .propagation import solve_propagation
from .twosat import solve_2sat
from .unary import solve_unary

ENGINES: dict[str, Callable[[Instance], Verdict]] = {
    "unary": solve_unary,
    "propagate": solve_propagation,
    "xor": solve_xor,
    "two-sat": solve_center_two_sat,
    "double-k12": solve_double_k12,
}

# engines that accept lists only when they are affine; others take any list
_AFFINE_LIST_ENGINES = {"xor", "double-k12"}


def solve_auto(instance: Instance, limits: Optional[SearchLimits] = None) -> Verdict:
    """Route the instance to the engine its target's shape calls for.

    NP-complete variants go to the exact oracle.  A list instance over a
    shape whose engine encodes affine lists is tried on that engine first;
    a non-affine list falls back to the oracle.  Fallbacks are flagged.
    """
    variant = instance.variant
    result = classify(instance.target, variant)
    engine = result.engine
    if engine is None and variant in ("list", "by-side-list"):
        base = classify(instance.target, "standard" if variant == "list" else "by-side")
        if base.engine in _AFFINE_LIST_ENGINES:
            engine = base.engine
    if engine is not None:
        try:
            return ENGINES[engine](instance)
        except NonAffineList as exc:
            note = f"{engine}: {exc}"
    else:
        note = f"{result.shape.tag} is NP-complete for variant {variant}"
    v = solve_exact(instance, limits)
    return Verdict(v.answer, v.witness, engine="oracle", fallback=True, nodes=v.nodes, notes=(note,))


__all__ = [
    "AffineForm",
    "ENGINES",
    "LinearSystem",
    "POLYNOMIAL_CASES",
    "count_solutions_gf2",
    "encode_double_k12",
    "encode_xor",
    "partition_to_affine",
    "solve_2sat",
    "solve_auto",
    "solve_center_two_sat",
    "solve_double_k12",
    "solve_linear_gf2",
    "solve_propagation",
    "solve_unary",
    "solve_xor",
]
