"""Engines that reduce to linear equations modulo two.

``xor`` covers the reflexive 2K2, the irreflexive K2,2 and (by-side) two
disjoint copies of K2,2.  In each case the four candidate images of a
G-vertex split into two pairs, and an edge only asks which pair each end
lands in: the same pair for the clique-like targets, opposite parts for
K2,2.  Labelling the four candidates ``00, 01, 10, 11`` turns "which pair"
into an affine function of two bits, so every edge becomes one equation.

``double-k12`` covers two disjoint K1,2 whose leaves lie on one side (plus
isolated vertices on the centre side).  A centre-side vertex with an edge
must map onto a centre, leaving at most two candidates: one bit.  A
leaf-side vertex has exactly the four leaves as candidates: two bits, and
"which centre's leaves" is again affine in them.  Every edge asks that the
centre chosen at one end owns the leaf chosen at the other, i.e. one
equation between the two indicators.
"""

from __future__ import annotations

from typing import Sequence

from ..classifier import IRREFLEXIVE_K22, REFLEXIVE_2K2, TWO_K12, TWO_K22
from ..errors import NonAffineList
from ..model import Compiled, Instance
from ..oracle import Verdict
from .common import bits_of, finish, lowest, preimage_mask, require_shape
from .gf2 import (
    LABELS,
    AffineForm,
    LinearSystem,
    partition_to_affine,
    solve_linear_gf2,
    subset_equations,
)

XOR_ENGINE = "xor"
DOUBLE_K12_ENGINE = "double-k12"


def indicator_form(candidates: Sequence[int], indicator: Sequence[int], perm: Sequence[int]) -> AffineForm:
    """Affine form of ``label(u) -> indicator[perm[u]]`` on four labelled candidates."""
    values = {LABELS[k]: indicator[perm[u]] for k, u in enumerate(candidates)}
    part0 = [p for p in LABELS if values[p] == values[(0, 0)]]
    part1 = [p for p in LABELS if values[p] != values[(0, 0)]]
    form = partition_to_affine(part0, part1)
    if values[(0, 0)]:
        form = AffineForm(form.coeff_a, form.coeff_b, form.constant ^ 1)
    return form


class _Builder:
    """Accumulates a LinearSystem for one instance."""

    def __init__(self, instance: Instance):
        self.instance = instance
        self.c: Compiled = instance.compiled
        self.H = instance.target
        self.system = LinearSystem()
        self.candidates: dict[int, list[int]] = {}
        self.bitvars: dict[int, tuple[int, int]] = {}

    def contradiction(self) -> None:
        self.system.add_row((), 1)

    def fix(self, x: int, domain: int) -> None:
        """Vertex decided without variables: its first allowed value."""
        name = self.instance.g_vertices[x]
        if domain:
            self.system.fixed[name] = self.H.vertices[lowest(domain)]
        else:
            self.system.fixed[name] = self.H.vertices[0] if self.H.vertices else ""
            self.contradiction()

    def two_bits(self, x: int, four: int, domain: int) -> None:
        """Give ``x`` two bits labelling the 4-set ``four``; restrict to ``domain``."""
        name = self.instance.g_vertices[x]
        cand = bits_of(four)
        assert len(cand) == 4
        ia = self.system.add_variable((name, "a"))
        ib = self.system.add_variable((name, "b"))
        self.candidates[x] = cand
        self.bitvars[x] = (ia, ib)
        self.system.decoders[name] = ((ia, ib), {LABELS[k]: self.H.vertices[u] for k, u in enumerate(cand)})
        allowed = [LABELS[k] for k, u in enumerate(cand) if domain >> u & 1]
        eqs = subset_equations(allowed)
        if eqs is None:
            kept = [self.H.vertices[u] for u in cand if domain >> u & 1]
            raise NonAffineList(f"allowed set {kept} of {name!r} is not affine in its bit labelling")
        for ca, cb, rhs in eqs:
            self.system.add_row([i for i, c in ((ia, ca), (ib, cb)) if c], rhs)

    def form_terms(self, x: int, form: AffineForm) -> tuple[list[int], int]:
        ia, ib = self.bitvars[x]
        return [i for i, c in ((ia, form.coeff_a), (ib, form.coeff_b)) if c], form.constant


def _side_candidates(c: Compiled, core: int) -> tuple[dict[int, int], set[int]]:
    """Per G-vertex the common preimage of ``core`` under its incident labels."""
    common: dict[int, int] = {}
    clash: set[int] = set()
    for x, y, pi, rho in c.edges:
        for z, perm in ((x, pi), (y, rho)):
            pre = preimage_mask(perm, core)
            if z in common and common[z] != pre:
                clash.add(z)
            common[z] = pre
    return common, clash


def encode_xor(instance: Instance) -> LinearSystem:
    """Build the GF(2) system whose solutions are exactly the accepted assignments."""
    shape = require_shape(instance, (REFLEXIVE_2K2, IRREFLEXIVE_K22, TWO_K22), XOR_ENGINE)
    H = instance.target
    c = instance.compiled
    indicator = [-1] * c.n
    if shape.tag == IRREFLEXIVE_K22:
        groups = shape.params["parts"]
        rhs = 1
    else:
        groups = shape.params["components"]
        rhs = 0
    for k, group in enumerate(groups):
        for v in group:
            indicator[H.index(v)] = k
    core = sum(1 << a for a in range(c.n) if indicator[a] >= 0)

    b = _Builder(instance)
    common, clash = _side_candidates(c, core)
    if clash:
        name = instance.g_vertices[min(clash)]
        raise NonAffineList(f"labels at {name!r} disagree on which vertices reach the core")
    for x in range(c.m):
        if x not in common:
            b.fix(x, c.domains[x])
            continue
        if bin(common[x]).count("1") != 4:
            raise NonAffineList(f"{instance.g_vertices[x]!r} does not have four candidates")
        b.two_bits(x, common[x], c.domains[x] & common[x])
    for x, y, pi, rho in c.edges:
        g = indicator_form(b.candidates[x], indicator, pi)
        h = indicator_form(b.candidates[y], indicator, rho)
        gx, g0 = b.form_terms(x, g)
        hy, h0 = b.form_terms(y, h)
        b.system.add_row(gx + hy, rhs ^ g0 ^ h0)
    return b.system


def _solve_system(instance: Instance, system: LinearSystem, engine: str) -> Verdict:
    bits = solve_linear_gf2(system)
    if bits is None:
        return finish(instance, engine, None)
    assignment = system.decode(bits)
    H = instance.target
    return finish(instance, engine, [H.index(assignment[x]) for x in instance.g_vertices])


def solve_xor(instance: Instance) -> Verdict:
    return _solve_system(instance, encode_xor(instance), XOR_ENGINE)


def encode_double_k12(instance: Instance) -> LinearSystem:
    shape = require_shape(instance, (TWO_K12,), DOUBLE_K12_ENGINE)
    H = instance.target
    c = instance.compiled
    centre_colour = shape.params["center_side"]
    centres = [H.index(v) for v in shape.params["centers"]]
    which_leaf = [-1] * c.n
    for k, leaves in enumerate(shape.params["leaves"]):
        for v in leaves:
            which_leaf[H.index(v)] = k
    leaf_core = sum(1 << a for a in range(c.n) if which_leaf[a] >= 0)
    centre_core = sum(1 << a for a in centres)

    g_side = instance.g_side
    names = instance.g_vertices

    # orient every edge as (centre-side end, leaf-side end)
    oriented = []
    for x, y, pi, rho in c.edges:
        if g_side[names[x]] == centre_colour:  # type: ignore[index]
            oriented.append((x, pi, y, rho))
        else:
            oriented.append((y, rho, x, pi))

    pairs = {x: c.domains[x] for x, _, _, _ in oriented}
    for x, px, _, _ in oriented:
        pairs[x] &= preimage_mask(px, centre_core)
    leaf_side = {y for _, _, y, _ in oriented}

    b = _Builder(instance)
    centre_bit: dict[int, int] = {}
    centre_vals: dict[int, list[int]] = {}
    for x in range(c.m):
        if x in pairs:
            vals = bits_of(pairs[x])
            centre_vals[x] = vals
            if len(vals) == 2:
                i = b.system.add_variable((names[x], "c"))
                centre_bit[x] = i
                b.system.decoders[names[x]] = ((i,), {(0,): H.vertices[vals[0]], (1,): H.vertices[vals[1]]})
            else:
                b.fix(x, pairs[x])
        elif x in leaf_side:
            b.two_bits(x, leaf_core, c.domains[x])
        else:
            b.fix(x, c.domains[x])

    for x, px, y, py in oriented:
        vals = centre_vals[x]
        if not vals:
            continue  # already contradicted by fix()
        k = [0 if px[v] == centres[0] else 1 for v in vals]
        terms: list[int] = []
        const = k[0]
        if len(vals) == 2 and k[0] != k[1]:
            terms.append(centre_bit[x])
        h = indicator_form(b.candidates[y], which_leaf, py)
        hy, h0 = b.form_terms(y, h)
        b.system.add_row(terms + hy, const ^ h0)
    return b.system


def solve_double_k12(instance: Instance) -> Verdict:
    return _solve_system(instance, encode_double_k12(instance), DOUBLE_K12_ENGINE)
