"""Complexity classification of correspondence H-homomorphism problems.

The complexity depends only on the shape of the target ``H`` and on the
problem variant:

=============  ==========================================
variant        polynomial shape cases
=============  ==========================================
standard       1 2 3 4 5 6 7
list           1 2 4 6 7
by-side        4 8 9 10 11
by-side-list   4 8 9
=============  ==========================================

Every other (shape, variant) pair is NP-complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from .errors import NotApplicable, ValidationError
from .model import BLACK, WHITE, TargetGraph

STANDARD = "standard"
LIST = "list"
BY_SIDE = "by-side"
BY_SIDE_LIST = "by-side-list"
VARIANTS = (STANDARD, LIST, BY_SIDE, BY_SIDE_LIST)

POLYNOMIAL = "polynomial"
NP_COMPLETE = "np-complete"

REFLEXIVE_CLIQUE = "ReflexiveClique"
REFLEXIVE_CO_CLIQUE = "ReflexiveCoClique"
REFLEXIVE_2K2 = "Reflexive2K2"
IRREFLEXIVE_MATCHING = "IrreflexiveMatchingPlusIsolated"
IRREFLEXIVE_K22 = "IrreflexiveK22"
LOOPED_CENTER_STAR = "LoopedCenterStar"
MATCHING_PLUS_REFLEXIVE = "MatchingPlusReflexiveIsolated"
COMPLETE_BIPARTITE = "CompleteBipartitePlusIsolated"
DOUBLE_STAR = "DoubleStarPlusIsolated"
TWO_K12 = "TwoK12WhiteLeavesPlusBlackIsolated"
TWO_K22 = "TwoK22"
GENERAL = "General"

CASE_NUMBER = {
    REFLEXIVE_CLIQUE: 1,
    REFLEXIVE_CO_CLIQUE: 2,
    REFLEXIVE_2K2: 3,
    IRREFLEXIVE_MATCHING: 4,
    IRREFLEXIVE_K22: 5,
    LOOPED_CENTER_STAR: 6,
    MATCHING_PLUS_REFLEXIVE: 7,
    COMPLETE_BIPARTITE: 8,
    DOUBLE_STAR: 9,
    TWO_K12: 10,
    TWO_K22: 11,
}

POLYNOMIAL_CASES = {
    STANDARD: {1, 2, 3, 4, 5, 6, 7},
    LIST: {1, 2, 4, 6, 7},
    BY_SIDE: {4, 8, 9, 10, 11},
    BY_SIDE_LIST: {4, 8, 9},
}

ENGINE = {
    REFLEXIVE_CLIQUE: "unary",
    REFLEXIVE_CO_CLIQUE: "propagate",
    REFLEXIVE_2K2: "xor",
    IRREFLEXIVE_MATCHING: "propagate",
    IRREFLEXIVE_K22: "xor",
    LOOPED_CENTER_STAR: "two-sat",
    MATCHING_PLUS_REFLEXIVE: "propagate",
    COMPLETE_BIPARTITE: "unary",
    DOUBLE_STAR: "two-sat",
    TWO_K12: "double-k12",
    TWO_K22: "xor",
}

REASONS = {
    "k1-k2": "reduction from 1-IN-3-SAT to the reflexive K1 ∪ K2",
    "clique-union": (
        "union of reflexive cliques: pair-deletion loops reduce from K1 ∪ K2 "
        "(1-IN-3-SAT), K1 ∪ K1 ∪ K2 (indicator path from K1 ∪ K3) or 2K3"
    ),
    "reflexive-path": "reflexive path of length two: reduction from 3-colourability with parallel edges",
    "square": (
        "reflexive non-clique-union: the square reduces to H by edge subdivision, "
        "and diameter-two targets lose a vertex to a cyclic restriction loop"
    ),
    "list-2k2": "lists confine reflexive 2K2 to K1 ∪ K2, which is hard by the 1-IN-3-SAT reduction",
    "list-k22": "lists on K2,2 make the square's two reflexive K2 components hard",
    "irreflexive": "irreflexive target whose square contains a hard reflexive component",
    "mixed": "mixed target whose associated bipartite graph is hard as a by-side problem",
    "by-side": "bipartite target outside the polynomial by-side shapes: its square or an induced path gives hardness",
    "by-side-list": "lists (or isolated vertices) make this by-side shape hard",
}


@dataclass(frozen=True)
class ShapeCase:
    tag: str
    params: Mapping[str, Any] = field(default_factory=dict)

    @property
    def case(self) -> Optional[int]:
        return CASE_NUMBER.get(self.tag)

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.params:
            out["params"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params.items()}
        return out


@dataclass(frozen=True)
class Classification:
    variant: str
    shape: ShapeCase
    complexity: str
    engine: Optional[str] = None
    reason: Optional[str] = None

    @property
    def polynomial(self) -> bool:
        return self.complexity == POLYNOMIAL

    def to_dict(self) -> dict:
        out: dict = {
            "variant": self.variant,
            "shape": self.shape.tag,
            "complexity": self.complexity,
            "engine": self.engine,
        }
        if self.shape.params:
            out["params"] = self.shape.to_dict()["params"]
        if self.reason:
            out["reason"] = self.reason
        return out


# ---------------------------------------------------------------------------
# Preprocessing
# ---------------------------------------------------------------------------


def strip_isolated_loopless(H: TargetGraph) -> TargetGraph:
    """Remove degree-0 loopless vertices from a target that has a loop."""
    if not H.looped:
        raise NotApplicable("target has no loops; isolated loopless vertices are meaningful")
    return H.induced(v for v in H.vertices if not H.is_isolated(v))


def effective_target(H: TargetGraph, by_side: bool = False) -> TargetGraph:
    """The graph the shape predicates look at for ``H``."""
    if not by_side and H.looped:
        return strip_isolated_loopless(H)
    return H


# ---------------------------------------------------------------------------
# Shape predicates
# ---------------------------------------------------------------------------


def _is_complete(H: TargetGraph) -> bool:
    n = len(H)
    return len(H.non_loop_edges()) == n * (n - 1) // 2


def _standard_shape(H: TargetGraph) -> ShapeCase:
    n = len(H)
    looped = set(H.looped)
    nonloop = H.non_loop_edges()

    if len(looped) == n:
        if _is_complete(H):
            return ShapeCase(REFLEXIVE_CLIQUE, {"size": n})
        if not nonloop:
            return ShapeCase(REFLEXIVE_CO_CLIQUE, {"size": n})
        if n == 4 and len(nonloop) == 2 and len({v for e in nonloop for v in e}) == 4:
            return ShapeCase(REFLEXIVE_2K2, {"components": tuple(tuple(e) for e in nonloop)})
        return ShapeCase(GENERAL)

    if not looped:
        if all(H.degree(v) <= 1 for v in H.vertices):
            p = len(nonloop)
            return ShapeCase(IRREFLEXIVE_MATCHING, {"p": p, "q": n - 2 * p})
        if n == 4 and len(nonloop) == 4 and all(H.degree(v) == 2 for v in H.vertices):
            # 4-cycle: 2-regular on 4 vertices and connected
            if len(H.components()) == 1:
                a = H.vertices[0]
                part0 = (a,) + tuple(w for w in H.vertices if w != a and w not in H.neighbours(a))
                return ShapeCase(IRREFLEXIVE_K22, {"parts": (part0, H.neighbours(a))})
        return ShapeCase(GENERAL)

    # mixed
    if len(looped) == 1:
        (c,) = looped
        leaves = [v for v in H.vertices if v != c]
        if leaves and all(H.neighbours(v) == (c,) for v in leaves):
            return ShapeCase(LOOPED_CENTER_STAR, {"center": c, "leaves": tuple(leaves)})
    if all(H.degree(v) == 0 for v in looped) and all(
        H.degree(v) == 1 and not set(H.neighbours(v)) & looped
        for v in H.vertices
        if v not in looped
    ):
        p = len(nonloop)
        if p >= 1:
            return ShapeCase(MATCHING_PLUS_REFLEXIVE, {"p": p, "q": len(looped)})
    return ShapeCase(GENERAL)


def _nontrivial_components(H: TargetGraph) -> list[tuple[str, ...]]:
    return [c for c in H.components() if len(c) > 1]


def _by_side_shape(H: TargetGraph) -> ShapeCase:
    if H.side is None:
        raise ValidationError("by-side classification needs a bipartitioned target")
    side = H.side
    nonloop = H.non_loop_edges()
    if all(H.degree(v) <= 1 for v in H.vertices):
        p = len(nonloop)
        return ShapeCase(IRREFLEXIVE_MATCHING, {"p": p, "q": len(H) - 2 * p})

    comps = _nontrivial_components(H)
    isolated = [v for v in H.vertices if H.is_isolated(v)]

    if len(comps) == 1:
        (comp,) = comps
        black = [v for v in comp if side[v] == BLACK]
        white = [v for v in comp if side[v] == WHITE]
        if len(nonloop) == len(black) * len(white):
            return ShapeCase(COMPLETE_BIPARTITE, {"black": tuple(black), "white": tuple(white)})
        # tree of diameter 3 = double star: two adjacent centres, every other vertex a leaf
        if len(nonloop) == len(comp) - 1:
            centres = [v for v in comp if H.degree(v) > 1]
            if len(centres) == 2 and H.has_edge(*centres):
                cb = next(v for v in centres if side[v] == BLACK)
                cw = next(v for v in centres if side[v] == WHITE)
                if all(H.degree(v) == 1 for v in comp if v not in centres):
                    return ShapeCase(DOUBLE_STAR, {"black_center": cb, "white_center": cw})
        return ShapeCase(GENERAL)

    if len(comps) == 2:
        # two K1,2 with leaves on one side; isolated vertices only on the centre side
        stars = []
        for comp in comps:
            centres = [v for v in comp if H.degree(v) == 2]
            if len(comp) == 3 and len(centres) == 1:
                stars.append((centres[0], tuple(v for v in comp if v != centres[0])))
        if len(stars) == 2:
            centre_colour = side[stars[0][0]]
            if side[stars[1][0]] == centre_colour and all(side[v] == centre_colour for v in isolated):
                return ShapeCase(
                    TWO_K12,
                    {
                        "center_side": centre_colour,
                        "centers": (stars[0][0], stars[1][0]),
                        "leaves": (stars[0][1], stars[1][1]),
                    },
                )
        if not isolated and all(
            len(c) == 4 and all(H.degree(v) == 2 for v in c) for c in comps
        ):
            return ShapeCase(TWO_K22, {"components": tuple(comps)})
    return ShapeCase(GENERAL)


def detect_shape(H: TargetGraph, by_side: Optional[bool] = None) -> ShapeCase:
    """Return the shape tag of ``H`` (``General`` when no polynomial family matches).

    ``by_side`` selects the bipartite families; by default they are used
    exactly when ``H`` carries a bipartition.  ``H`` is matched as given:
    callers wanting the isolated-loopless stripping use :func:`effective_target`.
    """
    if by_side is None:
        by_side = H.side is not None
    return _by_side_shape(H) if by_side else _standard_shape(H)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def _is_clique_union(H: TargetGraph) -> bool:
    return all(_is_complete(H.induced(c)) for c in H.components())


def _np_reason(H: TargetGraph, variant: str, shape: ShapeCase) -> str:
    if variant in (BY_SIDE, BY_SIDE_LIST):
        if shape.tag in (TWO_K12, TWO_K22):
            return REASONS["by-side-list"]
        return REASONS["by-side"]
    if shape.tag == REFLEXIVE_2K2:
        return REASONS["list-2k2"]
    if shape.tag == IRREFLEXIVE_K22:
        return REASONS["list-k22"]
    if H.is_reflexive():
        comps = H.components()
        if _is_clique_union(H):
            if sorted(len(c) for c in comps) == [1, 2]:
                return REASONS["k1-k2"]
            return REASONS["clique-union"]
        if len(H) == 3 and len(comps) == 1 and len(H.non_loop_edges()) == 2:
            return REASONS["reflexive-path"]
        return REASONS["square"]
    if H.is_irreflexive():
        return REASONS["irreflexive"]
    return REASONS["mixed"]


def classify(H: TargetGraph, variant: str = STANDARD) -> Classification:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    by_side = variant in (BY_SIDE, BY_SIDE_LIST)
    if by_side and H.side is None:
        raise ValidationError(f"variant {variant!r} needs a bipartitioned target")
    core = effective_target(H, by_side)
    shape = detect_shape(core, by_side)
    if shape.case in POLYNOMIAL_CASES[variant]:
        return Classification(variant, shape, POLYNOMIAL, engine=ENGINE[shape.tag])
    return Classification(variant, shape, NP_COMPLETE, reason=_np_reason(core, variant, shape))
