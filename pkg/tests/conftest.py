import itertools
from pathlib import Path

import pytest

from corrhom.model import TargetGraph, check_assignment

DATA = Path(__file__).parent / "data"


def brute_force_count(instance):
    """Count accepted assignments by plain enumeration (independent of the oracle)."""
    H = instance.target
    names = instance.g_vertices
    total = 0
    for images in itertools.product(H.vertices, repeat=len(names)):
        if check_assignment(instance, dict(zip(names, images))) is None:
            total += 1
    return total


def edge_images(instance, x, y):
    """Pairs ``(f(x), f(y))`` over all accepted assignments."""
    H = instance.target
    names = instance.g_vertices
    out = set()
    for images in itertools.product(H.vertices, repeat=len(names)):
        f = dict(zip(names, images))
        if check_assignment(instance, f) is None:
            out.add((f[x], f[y]))
    return out


def all_reflexive_graphs(n):
    V = tuple("abcde"[:n])
    pairs = list(itertools.combinations(V, 2))
    for mask in range(1 << len(pairs)):
        edges = [(v, v) for v in V] + [p for k, p in enumerate(pairs) if mask >> k & 1]
        yield TargetGraph(V, tuple(edges))


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
