"""Acceptance gate: one test per criterion, each reporting PASS or FAIL."""

import contextlib
import itertools
import random
import time

import networkx as nx

from corrhom import targets
from corrhom.classifier import LIST, STANDARD, classify
from corrhom.engines import count_solutions_gf2
from corrhom.engines.linear import encode_xor
from corrhom.model import Permutation, TargetGraph, make_instance
from corrhom.oracle import count_solutions, solve_exact
from corrhom.selfcheck import engine_suite, transform_suite
from corrhom.transforms import (
    CnfFormula,
    blowup_size,
    reduce_one_in_three_sat,
    reduce_three_colouring,
    restricted_domain,
    sample_verified_expander,
)

from conftest import ACCEPTANCE, all_reflexive_graphs


@contextlib.contextmanager
def criterion(n, title, budget_s=None):
    start = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget_s is not None and elapsed >= budget_s:
            detail = f" (over budget: {elapsed:.1f}s >= {budget_s}s)"
            raise AssertionError(f"criterion {n} took {elapsed:.1f}s, budget {budget_s}s")
        status = "PASS"
        detail = f" ({elapsed:.2f}s)"
    except Exception as exc:
        detail = detail or f" ({type(exc).__name__}: {exc})"[:200]
        raise
    finally:
        line = f"{status} criterion {n}: {title}{detail}"
        ACCEPTANCE[n] = line
        print(line)


def _nx(H):
    g = nx.Graph()
    g.add_nodes_from(H.vertices)
    g.add_edges_from(H.non_loop_edges())
    return g


def test_criterion_1_classifier_table():
    two_k2 = nx.disjoint_union(nx.complete_graph(2), nx.complete_graph(2))
    with criterion(1, "reflexive H up to 5 vertices classified exactly", budget_s=60):
        checked = 0
        for n in range(1, 6):
            for H in all_reflexive_graphs(n):
                g = _nx(H)
                m = g.number_of_edges()
                clique = m == n * (n - 1) // 2
                coclique = m == 0
                is_2k2 = n == 4 and nx.is_isomorphic(g, two_k2)
                assert classify(H, STANDARD).polynomial == (clique or coclique or is_2k2), H
                assert classify(H, LIST).polynomial == (clique or coclique), H
                checked += 1
        assert checked == 1 + 2 + 8 + 64 + 1024


def test_criterion_2_xor_edge_equation():
    with criterion(2, "xor encoding of the two-vertex example"):
        bits = ("00", "01", "10", "11")
        H = TargetGraph(bits, tuple((v, v) for v in bits) + (("00", "01"), ("10", "11")))
        rho = Permutation({"00": "10", "01": "00", "10": "01", "11": "11"})
        inst = make_instance(H, ["x", "y"], [("x", "y", Permutation.identity(bits), rho)])
        eqs = encode_xor(inst).equations()
        assert eqs == [(frozenset({("x", "a"), ("y", "a"), ("y", "b")}), 1)]


def test_criterion_3_xor_equivalence():
    with criterion(3, "xor counts on all label pairs plus 500 random instances", budget_s=60):
        for H in (targets.reflexive_2k2(), targets.irreflexive_k22()):
            perms = [Permutation(dict(zip(H.vertices, img))) for img in itertools.permutations(H.vertices)]
            cases = 0
            for pi, rho in itertools.product(perms, repeat=2):
                inst = make_instance(H, ["x", "y"], [("x", "y", pi, rho)])
                assert count_solutions_gf2(encode_xor(inst)) == count_solutions(inst)
                cases += 1
            assert cases == 576
        result = engine_suite("xor", 500, 8, random.Random("acceptance:xor"))
        assert result.trials == 500 and result.skipped == 0
        assert result.disagreements == []


def test_criterion_4_engine_families():
    with criterion(4, "propagation, 2-SAT, unary and double-K12 engines vs oracle", budget_s=120):
        for engine in ("propagate", "two-sat", "unary", "double-k12"):
            result = engine_suite(engine, 500, 8, random.Random(f"acceptance:{engine}"))
            assert result.trials == 500 and result.skipped == 0, engine
            assert result.disagreements == [], (engine, result.disagreements[:1])


def test_criterion_5_transforms():
    with criterion(5, "four transforms preserve the oracle verdict"):
        assert all(blowup_size(n) <= 9 for n in range(2, 5))
        for name in ("eliminate_loops", "eliminate_parallel_edges", "subdivide_for_square", "gadget_three_path"):
            result = transform_suite(name, 200, 6, random.Random(f"acceptance:{name}"))
            assert result.trials == 200, (name, result.summary())
            assert result.disagreements == [], (name, result.disagreements[:1])


def _formulas():
    for n_vars in range(0, 5):
        names = tuple(f"x{i}" for i in range(n_vars))
        triples = list(itertools.permutations(names, 3))
        for k in range(4):
            for clauses in itertools.combinations_with_replacement(triples, k):
                yield CnfFormula(names, clauses)


def _three_colourable(n, edges):
    return any(all(c[i] != c[j] for i, j in edges) for c in itertools.product(range(3), repeat=n))


def test_criterion_6_reductions():
    with criterion(6, "1-in-3-SAT and 3-colouring reductions exhaustive", budget_s=300):
        formulas = 0
        for f in _formulas():
            truth = any(
                all(sum(v in chosen for v in cl) == 1 for cl in f.clauses)
                for k in range(len(f.variables) + 1)
                for chosen in map(set, itertools.combinations(f.variables, k))
            )
            assert solve_exact(reduce_one_in_three_sat(f)).is_yes == truth, f
            formulas += 1
        graphs = 0
        for n in range(1, 6):
            V = tuple(f"g{i}" for i in range(n))
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
                G = TargetGraph(V, tuple((V[i], V[j]) for i, j in edges))
                assert solve_exact(reduce_three_colouring(G)).is_yes == _three_colourable(n, edges), edges
                graphs += 1
        assert formulas > 2900 and graphs == 1 + 2 + 8 + 64 + 1024


def _has_bichromatic_blocks(matrix, t):
    N = len(matrix)
    for R in itertools.combinations(range(N), t):
        for C in itertools.combinations(range(N), t):
            seen = {matrix[i][j] for i in R for j in C}
            if len(seen) < 2:
                return False
    return True


def test_criterion_7_expanders():
    with criterion(7, "verified expander masks for n in 2..5"):
        for n in (2, 3, 4, 5):
            mask = sample_verified_expander(n, seed=0, max_retries=1000)
            assert mask.n == n
            assert mask.t == -(-mask.N // n)
            assert _has_bichromatic_blocks(mask.matrix, mask.t), n


def test_criterion_8_restriction_loops():
    with criterion(8, "restriction loops agree with oracle filtering"):
        checked = 0
        for n in range(1, 5):
            for H in all_reflexive_graphs(n):
                V = H.vertices
                identity = Permutation.identity(V)
                for img in itertools.permutations(V):
                    rho = Permutation(dict(zip(V, img)))
                    # every permutation of at most 4 points is tested, covering involutions and cycles
                    inst = make_instance(H, ["x"], [("x", "x", identity, rho)])
                    by_oracle = {
                        u for u in V if solve_exact(inst.with_changes(lists={"x": (u,)})).is_yes
                    }
                    assert restricted_domain(H, identity, rho) == by_oracle
                    checked += 1
        assert checked == 1 + 2 * 2 + 8 * 6 + 64 * 24
