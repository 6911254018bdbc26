"""Randomised cross-checks: every engine and transform against the oracle."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import targets
from .engines import ENGINES
from .errors import NotApplicable
from .model import TargetGraph
from .oracle import SearchLimits, solve_exact
from .transforms import (
    eliminate_loops,
    eliminate_parallel_edges,
    gadget_three_path,
    subdivide_for_square,
)


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    skipped: int = 0
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "skipped": self.skipped,
            "disagreements": len(self.disagreements),
        }


def random_reflexive(rng: random.Random, n: int, p: float = 0.5) -> TargetGraph:
    V = tuple("abcdefgh"[:n])
    edges = [(v, v) for v in V] + [e for e in itertools.combinations(V, 2) if rng.random() < p]
    return TargetGraph(V, tuple(edges))


# engine name -> (target sampler, lists allowed)
FAMILIES: dict[str, list[tuple[Callable[[random.Random], TargetGraph], bool]]] = {
    "unary": [
        (lambda r: targets.reflexive_clique(r.randint(2, 4)), True),
        (lambda r: targets.complete_bipartite(r.randint(1, 3), r.randint(2, 3), r.randint(0, 2), r.randint(0, 2)), True),
    ],
    "propagate": [
        (lambda r: targets.reflexive_coclique(r.randint(2, 4)), True),
        (lambda r: targets.irreflexive_matching(r.randint(1, 2), r.randint(0, 2)), True),
        (lambda r: targets.matching_plus_reflexive(r.randint(1, 2), r.randint(1, 2)), True),
    ],
    "two-sat": [
        (lambda r: targets.looped_star(r.randint(1, 4)), True),
        (lambda r: targets.double_star(r.randint(1, 2), r.randint(1, 2), r.randint(0, 1), r.randint(0, 1)), True),
    ],
    "xor": [
        (lambda r: targets.reflexive_2k2(), False),
        (lambda r: targets.irreflexive_k22(), False),
        (lambda r: targets.two_k22(), False),
    ],
    "double-k12": [
        (lambda r: targets.two_k12(r.randint(0, 2)), False),
    ],
}


def engine_suite(engine: str, trials: int, max_g: int, rng: random.Random,
                 limits: Optional[SearchLimits] = None) -> SuiteResult:
    result = SuiteResult(f"engine:{engine}")
    samplers = FAMILIES[engine]
    for i in range(trials):
        sample, lists = samplers[i % len(samplers)]
        H = sample(rng)
        inst = targets.random_instance(
            H, rng, rng.randint(1, max_g), rng.randint(0, 2 * max_g), lists=lists and rng.random() < 0.5
        )
        expected = solve_exact(inst, limits)
        if expected.answer not in ("yes", "no"):
            result.skipped += 1
            continue
        got = ENGINES[engine](inst)
        result.trials += 1
        if got.answer != expected.answer:
            result.disagreements.append({"instance": inst.to_dict(), "engine": got.answer, "oracle": expected.answer})
    return result


def _loops_case(rng: random.Random, max_g: int):
    H = random_reflexive(rng, rng.randint(2, 4))
    inst = targets.random_instance(H, rng, rng.randint(1, min(max_g, 4)), rng.randint(1, 5),
                                   lists=rng.random() < 0.3)
    return inst, eliminate_loops(inst)


def _parallel_case(rng: random.Random, max_g: int):
    H = random_reflexive(rng, rng.randint(2, 4))
    inst = targets.random_instance(H, rng, rng.randint(2, min(max_g, 4)), rng.randint(1, 4), loops=False)
    return inst, eliminate_parallel_edges(inst, seed=rng.randrange(1 << 16))


def _square_case(rng: random.Random, max_g: int):
    H = random_reflexive(rng, rng.randint(2, 4))
    inst = targets.random_instance(H.square(), rng, rng.randint(1, max_g), rng.randint(0, max_g))
    return inst, subdivide_for_square(inst, H)


def _three_path_case(rng: random.Random, max_g: int):
    inst = targets.random_instance(targets.k1_union_k3(), rng, rng.randint(1, max_g), rng.randint(0, max_g))
    return inst, gadget_three_path(inst)


TRANSFORM_CASES = {
    "eliminate_loops": _loops_case,
    "eliminate_parallel_edges": _parallel_case,
    "subdivide_for_square": _square_case,
    "gadget_three_path": _three_path_case,
}


def transform_suite(name: str, trials: int, max_g: int, rng: random.Random,
                    limits: Optional[SearchLimits] = None) -> SuiteResult:
    result = SuiteResult(f"transform:{name}")
    make = TRANSFORM_CASES[name]
    attempts = 0
    while result.trials < trials and attempts < 20 * trials:
        attempts += 1
        try:
            before, after = make(rng, max_g)
        except NotApplicable:
            result.skipped += 1
            continue
        a = solve_exact(before, limits)
        b = solve_exact(after, limits)
        if "resource-exceeded" in (a.answer, b.answer):
            result.skipped += 1
            continue
        result.trials += 1
        if a.answer != b.answer:
            result.disagreements.append({"instance": before.to_dict(), "before": a.answer, "after": b.answer})
    return result


def run_all(trials: int, max_g: int, seed: int, limits: Optional[SearchLimits] = None) -> list[SuiteResult]:
    out = []
    for engine in FAMILIES:
        out.append(engine_suite(engine, trials, max_g, random.Random(f"{seed}:{engine}"), limits))
    for name in TRANSFORM_CASES:
        out.append(transform_suite(name, trials, max_g, random.Random(f"{seed}:{name}"), limits))
    return out


__all__ = ["FAMILIES", "SuiteResult", "engine_suite", "random_reflexive", "run_all", "transform_suite"]
