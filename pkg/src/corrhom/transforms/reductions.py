"""Hardness reductions from 1-in-3-SAT and 3-colouring."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Optional

from ..errors import ParseError, ValidationError
from ..model import Edge, Instance, Permutation, TargetGraph, make_instance


@dataclass(frozen=True)
class CnfFormula:
    """Positive 3-CNF read with exactly-one-true semantics per clause."""

    variables: tuple[str, ...]
    clauses: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self) -> None:
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValidationError("duplicate variable name")
        known = set(variables)
        clauses = []
        for j, clause in enumerate(self.clauses):
            clause = tuple(clause)
            if len(clause) != 3 or len(set(clause)) != 3:
                raise ValidationError(f"clause #{j} must list exactly three distinct variables")
            for v in clause:
                if v not in known:
                    raise ValidationError(f"clause #{j} uses unknown variable {v!r}")
            clauses.append(clause)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "clauses", tuple(clauses))

    def satisfied_by(self, true_vars: Iterable[str]) -> bool:
        true_set = set(true_vars)
        return all(sum(v in true_set for v in clause) == 1 for clause in self.clauses)

    def brute_force(self) -> Optional[frozenset[str]]:
        """A set of true variables making every clause exactly-one, or None."""
        for bits in itertools.product((False, True), repeat=len(self.variables)):
            chosen = frozenset(v for v, b in zip(self.variables, bits) if b)
            if self.satisfied_by(chosen):
                return chosen
        return None

    def to_dict(self) -> dict[str, Any]:
        return {"variables": list(self.variables), "clauses": [list(c) for c in self.clauses]}


def formula_from_dict(obj: Any) -> CnfFormula:
    if not isinstance(obj, dict):
        raise ParseError("formula must be a JSON object")
    variables = obj.get("variables")
    clauses = obj.get("clauses", [])
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise ParseError("formula needs a list of variable names")
    if not isinstance(clauses, list) or not all(isinstance(c, list) for c in clauses):
        raise ParseError("clauses must be a list of lists")
    return CnfFormula(tuple(variables), tuple(tuple(c) for c in clauses))


def parse_formula(text: str) -> CnfFormula:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return formula_from_dict(obj)


def load_formula(path: str | Path) -> CnfFormula:
    return parse_formula(Path(path).read_text())


def emit_formula(formula: CnfFormula) -> str:
    return json.dumps(formula.to_dict(), indent=2)


def one_in_three_target() -> TargetGraph:
    """Reflexive K1 + K2 on ``a; b - c``."""
    return TargetGraph(("a", "b", "c"), (("a", "a"), ("b", "b"), ("c", "c"), ("b", "c")))


def variable_vertex(name: str) -> str:
    return f"v:{name}"


def clause_vertex(j: int) -> str:
    return f"T{j}"


def reduce_one_in_three_sat(formula: CnfFormula) -> Instance:
    """Instance over reflexive K1 + K2 solvable iff the formula is.

    A variable is true when its vertex maps to ``a``.  The clause vertex's
    image selects which of its three variables is the one mapped to ``a``.
    """
    H = one_in_three_target()
    identity = Permutation.identity(H.vertices)
    labels = (
        identity,
        Permutation.transposition(H.vertices, "a", "b"),
        Permutation.transposition(H.vertices, "a", "c"),
    )
    vertices = [variable_vertex(v) for v in formula.variables]
    edges = []
    for j, clause in enumerate(formula.clauses):
        vertices.append(clause_vertex(j))
        for v, rho in zip(clause, labels):
            edges.append(Edge(variable_vertex(v), clause_vertex(j), identity, rho))
    return make_instance(H, vertices, edges)


def decode_one_in_three(formula: CnfFormula, witness: dict[str, str]) -> frozenset[str]:
    return frozenset(v for v in formula.variables if witness[variable_vertex(v)] == "a")


def reflexive_path_target() -> TargetGraph:
    """Reflexive path ``a - b - c``."""
    return TargetGraph(
        ("a", "b", "c"),
        (("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")),
    )


def three_colouring_labels() -> tuple[tuple[Permutation, Permutation], tuple[Permutation, Permutation]]:
    """Two labels whose parallel pair on the reflexive path forbids exactly ``f(x) = f(y)``.

    ``(id, (a c))`` forbids ``aa`` and ``cc``; ``((a b), a->b->c->a)``
    forbids ``bb`` and ``cc``.
    """
    V = ("a", "b", "c")
    return (
        (Permutation.identity(V), Permutation.transposition(V, "a", "c")),
        (Permutation.transposition(V, "a", "b"), Permutation.cycle(V, "a", "b", "c")),
    )


def reduce_three_colouring(graph: TargetGraph) -> Instance:
    """Instance over the reflexive path solvable iff ``graph`` is 3-colourable."""
    if graph.looped or graph.side is not None:
        raise ValidationError("3-colouring input must be a loopless graph without sides")
    H = reflexive_path_target()
    first, second = three_colouring_labels()
    edges = []
    for u, v in graph.non_loop_edges():
        edges.append(Edge(u, v, *first))
        edges.append(Edge(u, v, *second))
    return make_instance(H, graph.vertices, edges)


def is_three_colourable(graph: TargetGraph) -> bool:
    """Brute force over all ``3^n`` colourings."""
    pairs = [(graph.index(u), graph.index(v)) for u, v in graph.non_loop_edges()]
    for colours in itertools.product(range(3), repeat=len(graph)):
        if all(colours[i] != colours[j] for i, j in pairs):
            return True
    return False
