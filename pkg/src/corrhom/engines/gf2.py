"""Linear algebra over GF(2): affine forms on bit-labelled 4-sets and
Gaussian elimination for the resulting systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Optional, Sequence

from ..errors import InternalError

LABELS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class AffineForm:
    """``(u_a, u_b) -> coeff_a*u_a + coeff_b*u_b + constant`` over GF(2)."""

    coeff_a: int
    coeff_b: int
    constant: int

    def __call__(self, bits: tuple[int, int]) -> int:
        return (self.coeff_a & bits[0]) ^ (self.coeff_b & bits[1]) ^ self.constant


def fit_affine(values: Mapping[tuple[int, int], int]) -> AffineForm:
    """Fit the affine form through all four labelled points; raise if none exists."""
    c = values[(0, 0)]
    form = AffineForm(values[(1, 0)] ^ c, values[(0, 1)] ^ c, c)
    if any(form(p) != values[p] for p in LABELS):
        raise InternalError(f"values {dict(values)} are not affine on GF(2)^2")
    return form


def partition_to_affine(part0: Sequence[tuple[int, int]], part1: Sequence[tuple[int, int]]) -> AffineForm:
    """Affine form that is 0 on the part containing ``00`` and 1 on the other.

    Every split of GF(2)^2 into two pairs is a coset pair, so the fit exists
    unless the labels are corrupt.
    """
    if sorted(list(part0) + list(part1)) != list(LABELS) or len(part0) != 2:
        raise InternalError(f"{part0} | {part1} is not a 2+2 partition of the labels")
    zero = part0 if (0, 0) in part0 else part1
    form = fit_affine({p: 0 if p in zero else 1 for p in LABELS})
    if form.coeff_a == 0 and form.coeff_b == 0:
        raise InternalError("partition produced a constant form")
    return form


def subset_equations(subset: Sequence[tuple[int, int]]) -> Optional[list[tuple[int, int, int]]]:
    """Equations ``(ca, cb, rhs)`` cutting ``subset`` out of GF(2)^2.

    Returns ``None`` for a 3-element set (not an affine subspace) and a
    single contradiction ``(0, 0, 1)`` for the empty set.
    """
    s = sorted(set(subset))
    if len(s) == 4:
        return []
    if len(s) == 0:
        return [(0, 0, 1)]
    if len(s) == 1:
        (a, b), = s
        return [(1, 0, a), (0, 1, b)]
    if len(s) == 2:
        (p, q) = s
        d = (p[0] ^ q[0], p[1] ^ q[1])
        # normal vector orthogonal to the direction d
        w = {(1, 0): (0, 1), (0, 1): (1, 0), (1, 1): (1, 1)}[d]
        return [(w[0], w[1], (w[0] & p[0]) ^ (w[1] & p[1]))]
    return None


@dataclass
class LinearSystem:
    """Rows over GF(2) plus the recipe for turning bits back into H-vertices.

    ``rows`` are ``(mask, rhs)`` with bit ``i`` of ``mask`` standing for
    ``variables[i]``.  ``decoders[x] = (var_indices, table)`` maps the bits
    of G-vertex ``x`` to its image; ``fixed`` holds vertices decided without
    variables.
    """

    variables: list[Hashable] = field(default_factory=list)
    rows: list[tuple[int, int]] = field(default_factory=list)
    decoders: dict[str, tuple[tuple[int, ...], dict[tuple[int, ...], str]]] = field(default_factory=dict)
    fixed: dict[str, str] = field(default_factory=dict)

    def add_variable(self, name: Hashable) -> int:
        self.variables.append(name)
        return len(self.variables) - 1

    def add_row(self, coeffs: Sequence[int], rhs: int) -> None:
        mask = 0
        for i in coeffs:
            mask ^= 1 << i
        self.rows.append((mask, rhs & 1))

    def equations(self) -> list[tuple[frozenset, int]]:
        """Rows as ``(set of variable names, rhs)`` for inspection."""
        out = []
        for mask, rhs in self.rows:
            names = frozenset(v for i, v in enumerate(self.variables) if mask >> i & 1)
            out.append((names, rhs))
        return out

    def satisfied_by(self, bits: Sequence[int]) -> bool:
        for mask, rhs in self.rows:
            acc = 0
            for i, b in enumerate(bits):
                if b and mask >> i & 1:
                    acc ^= 1
            if acc != rhs:
                return False
        return True

    def decode(self, bits: Sequence[int]) -> dict[str, str]:
        out = dict(self.fixed)
        for x, (idx, table) in self.decoders.items():
            out[x] = table[tuple(bits[i] for i in idx)]
        return out


def _eliminate(nvars: int, rows: Sequence[tuple[int, int]]):
    """Reduced row echelon form; returns ``(pivots, consistent)``."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        for col, (pmask, prhs) in pivots.items():
            if mask >> col & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                return pivots, False
            continue
        col = (mask & -mask).bit_length() - 1
        for c, (pmask, prhs) in list(pivots.items()):
            if pmask >> col & 1:
                pivots[c] = (pmask ^ mask, prhs ^ rhs)
        pivots[col] = (mask, rhs)
    return pivots, True


def solve_linear_gf2(system: LinearSystem) -> Optional[list[int]]:
    """A solution with free variables set to 0, or ``None`` if inconsistent."""
    n = len(system.variables)
    pivots, ok = _eliminate(n, system.rows)
    if not ok:
        return None
    bits = [0] * n
    # reduced form: each pivot row touches its pivot and free columns only
    for col, (_, rhs) in pivots.items():
        bits[col] = rhs
    if not system.satisfied_by(bits):
        raise InternalError("Gaussian elimination returned a non-solution")
    return bits


def rank_gf2(system: LinearSystem) -> Optional[int]:
    """Rank of a consistent system, ``None`` when it is inconsistent."""
    pivots, ok = _eliminate(len(system.variables), system.rows)
    return len(pivots) if ok else None


def count_solutions_gf2(system: LinearSystem) -> int:
    r = rank_gf2(system)
    return 0 if r is None else 2 ** (len(system.variables) - r)
