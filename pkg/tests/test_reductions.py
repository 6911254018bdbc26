import itertools

import networkx as nx
import pytest

from corrhom.errors import ParseError, ValidationError
from corrhom.model import TargetGraph, check_assignment
from corrhom.oracle import solve_exact
from corrhom.transforms import (
    CnfFormula,
    decode_one_in_three,
    is_three_colourable,
    parse_formula,
    reduce_one_in_three_sat,
    reduce_three_colouring,
)

from conftest import DATA


def _formulas(n_vars, max_clauses):
    names = tuple(f"x{i}" for i in range(n_vars))
    triples = list(itertools.permutations(names, 3))
    for k in range(max_clauses + 1):
        for clauses in itertools.combinations_with_replacement(triples, k):
            yield CnfFormula(names, clauses)


def _colourable(graph: TargetGraph) -> bool:
    # independent check via networkx: a graph is 3-colourable iff some colouring exists
    G = nx.Graph()
    G.add_nodes_from(graph.vertices)
    G.add_edges_from(graph.non_loop_edges())
    nodes = list(G)
    for cols in itertools.product(range(3), repeat=len(nodes)):
        c = dict(zip(nodes, cols))
        if all(c[u] != c[v] for u, v in G.edges):
            return True
    return False


def test_single_clause_instance_shape():
    f = CnfFormula(("p", "q", "r"), (("p", "q", "r"),))
    inst = reduce_one_in_three_sat(f)
    assert len(inst.g_vertices) == 4
    assert len(inst.edges) == 3
    v = solve_exact(inst)
    assert v.is_yes
    assert len(decode_one_in_three(f, v.witness)) == 1


def test_empty_formula():
    f = CnfFormula(("p",))
    assert solve_exact(reduce_one_in_three_sat(f)).is_yes


def test_witness_decodes_to_exactly_one():
    f = CnfFormula(("p", "q", "r", "s"), (("p", "q", "r"), ("q", "r", "s")))
    inst = reduce_one_in_three_sat(f)
    found = 0
    for imgs in itertools.product("abc", repeat=len(inst.g_vertices)):
        witness = dict(zip(inst.g_vertices, imgs))
        if check_assignment(inst, witness) is None:
            found += 1
            assert f.satisfied_by(decode_one_in_three(f, witness))
    assert found


@pytest.mark.parametrize("n_vars", [3, 4])
def test_one_in_three_exhaustive_small(n_vars):
    for f in _formulas(n_vars, 2):
        expected = any(
            f.satisfied_by(c) for k in range(n_vars + 1) for c in itertools.combinations(f.variables, k)
        )
        assert solve_exact(reduce_one_in_three_sat(f)).is_yes == expected


def test_data_formulas():
    for name in ("sat.json", "unsat.json"):
        f = parse_formula((DATA / name).read_text())
        inst = reduce_one_in_three_sat(f)
        assert solve_exact(inst).is_yes == (f.brute_force() is not None)


@pytest.mark.parametrize(
    "text",
    ['{"variables": ["a", "a"]}', '{"variables": ["a", "b"], "clauses": [["a", "b", "c"]]}',
     '{"variables": ["a", "b", "c"], "clauses": [["a", "a", "b"]]}'],
)
def test_formula_validation(text):
    with pytest.raises(ValidationError):
        parse_formula(text)


def test_formula_parse_errors():
    with pytest.raises(ParseError):
        parse_formula("[]")
    with pytest.raises(ParseError):
        parse_formula("{")


def _graph(n, edges):
    return TargetGraph(tuple(f"g{i}" for i in range(n)), tuple((f"g{i}", f"g{j}") for i, j in edges))


def test_triangle_yes_k4_no():
    K3 = _graph(3, itertools.combinations(range(3), 2))
    K4 = _graph(4, itertools.combinations(range(4), 2))
    v = solve_exact(reduce_three_colouring(K3))
    assert v.is_yes
    assert len(set(v.witness.values())) == 3
    assert solve_exact(reduce_three_colouring(K4)).answer == "no"


def test_single_vertex():
    assert solve_exact(reduce_three_colouring(_graph(1, []))).is_yes


def test_each_edge_forbids_only_equal_images():
    inst = reduce_three_colouring(_graph(2, [(0, 1)]))
    allowed = {
        (p, q)
        for p, q in itertools.product("abc", repeat=2)
        if check_assignment(inst, {"g0": p, "g1": q}) is None
    }
    assert allowed == {(p, q) for p, q in itertools.product("abc", repeat=2) if p != q}


def test_three_colouring_exhaustive_four_vertices():
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(1 << len(pairs)):
        g = _graph(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
        expected = _colourable(g)
        assert is_three_colourable(g) == expected
        assert solve_exact(reduce_three_colouring(g)).is_yes == expected


def test_three_colouring_rejects_loops():
    g = TargetGraph(("u",), (("u", "u"),))
    with pytest.raises(ValidationError):
        reduce_three_colouring(g)
