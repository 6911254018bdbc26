"""Core data model: target graphs, permutation labels, labelled instances.

A correspondence homomorphism of a labelled graph ``G`` to a fixed target
``H`` is a map ``f: V(G) -> V(H)`` such that every edge ``(x, y)`` carrying
the label ``(pi, rho)`` satisfies ``pi(f(x)) ~ rho(f(y))`` in ``H``.  ``G``
may contain loops (``x == y``) and parallel edges; both are first-class.

Everything here is immutable after construction.  Vertex ids are opaque
strings; algorithms work on index positions through :class:`Compiled`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence

from .errors import DomainMismatch, ParseError, ValidationError

BLACK = "black"
WHITE = "white"
COLOURS = (BLACK, WHITE)

STANDARD = "standard"
BY_SIDE = "by-side"
MODES = (STANDARD, BY_SIDE)


def _other(colour: str) -> str:
    return WHITE if colour == BLACK else BLACK


# ---------------------------------------------------------------------------
# Target graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TargetGraph:
    """The fixed graph ``H``.

    ``edges`` holds unordered pairs (a pair ``(v, v)`` is a loop); the
    constructor normalises them to index order and drops duplicates.
    ``side`` optionally colours every vertex black or white.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()
    side: Optional[Mapping[str, str]] = None

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        index: dict[str, int] = {}
        for v in vertices:
            if not isinstance(v, str):
                raise ValidationError(f"vertex id {v!r} is not a string")
            if v in index:
                raise ValidationError(f"duplicate vertex id {v!r}")
            index[v] = len(index)

        pairs = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValidationError(f"edge {e!r} does not have two endpoints")
            u, v = e
            for w in (u, v):
                if w not in index:
                    raise ValidationError(f"edge {[u, v]!r} has unknown endpoint {w!r}")
            if index[u] > index[v]:
                u, v = v, u
            pairs.add((u, v))
        edges = tuple(sorted(pairs, key=lambda p: (index[p[0]], index[p[1]])))

        side = None
        if self.side is not None:
            side = dict(self.side)
            for v in vertices:
                if v not in side:
                    raise ValidationError(f"vertex {v!r} has no side")
            for v, colour in side.items():
                if v not in index:
                    raise ValidationError(f"side given for unknown vertex {v!r}")
                if colour not in COLOURS:
                    raise ValidationError(f"vertex {v!r} has invalid side {colour!r}")
            for u, v in edges:
                if u == v:
                    raise ValidationError(f"bipartite target has a loop at {u!r}")
                if side[u] == side[v]:
                    raise ValidationError(f"edge {[u, v]!r} joins two {side[u]} vertices")

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "_index", index)

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TargetGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.side == other.side
        )

    def __hash__(self) -> int:
        side = None if self.side is None else frozenset(self.side.items())
        return hash((self.vertices, self.edges, side))

    def __repr__(self) -> str:
        return f"TargetGraph(vertices={list(self.vertices)}, edges={[list(e) for e in self.edges]})"

    def index(self, v: str) -> int:
        return self._index[v]  # type: ignore[attr-defined]

    def __contains__(self, v: object) -> bool:
        return v in self._index  # type: ignore[attr-defined]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex index (bit ``i`` set for a loop at ``i``)."""
        masks = [0] * len(self.vertices)
        for u, v in self.edges:
            i, j = self.index(u), self.index(v)
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def has_loop(self, v: str) -> bool:
        return self.has_edge(v, v)

    def neighbours(self, v: str) -> tuple[str, ...]:
        """Neighbours of ``v`` other than ``v`` itself, in vertex order."""
        i = self.index(v)
        mask = self.adj[i] & ~(1 << i)
        return tuple(w for j, w in enumerate(self.vertices) if mask >> j & 1)

    def degree(self, v: str) -> int:
        return len(self.neighbours(v))

    @property
    def looped(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.has_loop(v))

    def is_reflexive(self) -> bool:
        return all(self.has_loop(v) for v in self.vertices)

    def is_irreflexive(self) -> bool:
        return not any(self.has_loop(v) for v in self.vertices)

    def is_isolated(self, v: str) -> bool:
        """True when ``v`` has no edges at all, loops included."""
        return self.adj[self.index(v)] == 0

    def non_loop_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(e for e in self.edges if e[0] != e[1])

    def components(self) -> list[tuple[str, ...]]:
        """Connected components in vertex order (loops ignored)."""
        seen: set[str] = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbours(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(tuple(sorted(comp, key=self.index)))
        return out

    def side_of(self, v: str) -> str:
        if self.side is None:
            raise ValidationError("target has no bipartition")
        return self.side[v]

    def side_vertices(self, colour: str) -> tuple[str, ...]:
        if self.side is None:
            raise ValidationError("target has no bipartition")
        return tuple(v for v in self.vertices if self.side[v] == colour)

    # -- derived graphs ----------------------------------------------------

    def induced(self, keep: Iterable[str]) -> "TargetGraph":
        keep_set = set(keep)
        vertices = tuple(v for v in self.vertices if v in keep_set)
        edges = tuple(e for e in self.edges if e[0] in keep_set and e[1] in keep_set)
        side = None if self.side is None else {v: self.side[v] for v in vertices}
        return TargetGraph(vertices, edges, side)

    def relabel(self, mapping: Mapping[str, str]) -> "TargetGraph":
        vertices = tuple(mapping[v] for v in self.vertices)
        edges = tuple((mapping[u], mapping[v]) for u, v in self.edges)
        side = None if self.side is None else {mapping[v]: c for v, c in self.side.items()}
        return TargetGraph(vertices, edges, side)

    def square(self) -> "TargetGraph":
        """Adjacency = joined by a walk of length two.

        For reflexive graphs this is the usual "distance at most two" square.
        """
        n = len(self.vertices)
        edges = []
        for i in range(n):
            reach = 0
            for j in range(n):
                if self.adj[i] >> j & 1:
                    reach |= self.adj[j]
            for j in range(i, n):
                if reach >> j & 1:
                    edges.append((self.vertices[i], self.vertices[j]))
        return TargetGraph(self.vertices, tuple(edges))

    # -- serialisation -----------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }
        if self.side is not None:
            out["side"] = {v: self.side[v] for v in self.vertices}
        return out


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection on a finite set of vertex ids, stored as an explicit mapping."""

    mapping: Mapping[str, str]

    def __post_init__(self) -> None:
        mapping = dict(self.mapping)
        images = set(mapping.values())
        if len(images) != len(mapping):
            seen: dict[str, str] = {}
            for k, v in mapping.items():
                if v in seen:
                    raise ValidationError(
                        f"permutation maps both {seen[v]!r} and {k!r} to {v!r}"
                    )
                seen[v] = k
        if images != set(mapping):
            extra = sorted(images - set(mapping))
            raise ValidationError(f"permutation image {extra[0]!r} is outside its domain")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, domain: Iterable[str]) -> "Permutation":
        return cls({v: v for v in domain})

    @classmethod
    def transposition(cls, domain: Iterable[str], a: str, b: str) -> "Permutation":
        return cls.cycle(domain, a, b)

    @classmethod
    def cycle(cls, domain: Iterable[str], *cycle: str) -> "Permutation":
        """The cyclic permutation ``cycle[0] -> cycle[1] -> ... -> cycle[0]``."""
        mapping = {v: v for v in domain}
        for v in cycle:
            if v not in mapping:
                raise ValidationError(f"cycle element {v!r} is outside the domain")
        for k, v in enumerate(cycle):
            mapping[v] = cycle[(k + 1) % len(cycle)]
        return cls(mapping)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.mapping)

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def __repr__(self) -> str:
        cycles = self.cycles()
        body = "".join("(" + " ".join(c) + ")" for c in cycles) or "id"
        return f"Permutation{body}"

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def cycles(self) -> list[tuple[str, ...]]:
        """Non-trivial cycles, each starting at its first element in mapping order."""
        seen: set[str] = set()
        out = []
        for start in self.mapping:
            if start in seen or self.mapping[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            v = self.mapping[start]
            while v != start:
                cyc.append(v)
                seen.add(v)
                v = self.mapping[v]
            out.append(tuple(cyc))
        return out

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self.mapping.items()})

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return permutation_compose(self, other)


def permutation_compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``r`` with ``r(v) = p(q(v))``."""
    if p.domain != q.domain:
        raise DomainMismatch("cannot compose permutations over different domains")
    return Permutation({v: p.mapping[q.mapping[v]] for v in q.mapping})


def permutation_invert(p: Permutation) -> Permutation:
    return p.inverse()


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    """A labelled edge; ``pi`` acts at ``u`` and ``rho`` at ``v``."""

    u: str
    v: str
    pi: Permutation
    rho: Permutation

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def reversed(self) -> "Edge":
        return Edge(self.v, self.u, self.rho, self.pi)


@dataclass(frozen=True)
class Compiled:
    """Index-level view of an instance used by every solver.

    ``edges`` entries are ``(x, y, pi, rho)`` with ``pi[a]`` the index of the
    image of H-vertex ``a`` (``-1`` when ``a`` is outside the label's domain).
    ``domains`` and ``adj`` are bitmasks over H indices.
    """

    n: int
    m: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int, tuple[int, ...], tuple[int, ...]], ...]
    domains: tuple[int, ...]

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.m)]
        for k, (x, y, _, _) in enumerate(self.edges):
            inc[x].append(k)
            if y != x:
                inc[y].append(k)
        return tuple(tuple(i) for i in inc)


@dataclass(frozen=True)
class Instance:
    """A labelled input graph ``G`` together with its target ``H``.

    ``lists`` maps a G-vertex to its allowed H-vertices; vertices without an
    entry are unrestricted.  In ``by-side`` mode ``g_side`` colours ``G``,
    every edge joins black to white, and each label permutes only the side
    of ``H`` that its endpoint must map into.
    """

    target: TargetGraph
    g_vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    lists: Optional[Mapping[str, tuple[str, ...]]] = None
    mode: str = STANDARD
    g_side: Optional[Mapping[str, str]] = None
    _gindex: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        H = self.target
        g_vertices = tuple(self.g_vertices)
        gindex: dict[str, int] = {}
        for x in g_vertices:
            if not isinstance(x, str):
                raise ValidationError(f"G-vertex id {x!r} is not a string")
            if x in gindex:
                raise ValidationError(f"duplicate G-vertex id {x!r}")
            gindex[x] = len(gindex)

        if self.mode not in MODES:
            raise ValidationError(f"unknown mode {self.mode!r}")
        by_side = self.mode == BY_SIDE

        g_side = None
        if by_side:
            if H.side is None:
                raise ValidationError("by-side instance needs a bipartitioned target")
            if self.g_side is None:
                raise ValidationError("by-side instance needs gSide")
            g_side = dict(self.g_side)
            for x in g_vertices:
                if g_side.get(x) not in COLOURS:
                    raise ValidationError(f"G-vertex {x!r} has no valid side")
            for x in g_side:
                if x not in gindex:
                    raise ValidationError(f"gSide given for unknown G-vertex {x!r}")
        elif self.g_side is not None:
            g_side = dict(self.g_side)

        full = frozenset(H.vertices)

        def label_domain(x: str) -> frozenset[str]:
            if by_side:
                return frozenset(H.side_vertices(g_side[x]))  # type: ignore[index]
            return full

        edges = tuple(self.edges)
        for k, e in enumerate(edges):
            if not isinstance(e, Edge):
                raise ValidationError(f"edge #{k} is not an Edge record")
            for w in (e.u, e.v):
                if w not in gindex:
                    raise ValidationError(f"edge #{k} has unknown endpoint {w!r}")
            if by_side and g_side[e.u] == g_side[e.v]:  # type: ignore[index]
                raise ValidationError(
                    f"edge #{k} ({e.u!r}, {e.v!r}) joins two {g_side[e.u]} vertices"  # type: ignore[index]
                )
            if e.pi.domain != label_domain(e.u):
                raise ValidationError(f"edge #{k}: pi has the wrong domain for {e.u!r}")
            if e.rho.domain != label_domain(e.v):
                raise ValidationError(f"edge #{k}: rho has the wrong domain for {e.v!r}")

        lists = None
        if self.lists is not None:
            lists = {}
            for x, allowed in self.lists.items():
                if x not in gindex:
                    raise ValidationError(f"list given for unknown G-vertex {x!r}")
                allowed = tuple(allowed)
                for a in allowed:
                    if a not in full:
                        raise ValidationError(f"list of {x!r} names unknown H-vertex {a!r}")
                    if by_side and H.side[a] != g_side[x]:  # type: ignore[index]
                        raise ValidationError(
                            f"list of {g_side[x]} vertex {x!r} contains {H.side[a]} vertex {a!r}"  # type: ignore[index]
                        )
                # canonical order = H order, duplicates removed
                lists[x] = tuple(v for v in H.vertices if v in set(allowed))

        object.__setattr__(self, "g_vertices", g_vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "lists", lists)
        object.__setattr__(self, "g_side", g_side)
        object.__setattr__(self, "_gindex", gindex)

    # -- queries -----------------------------------------------------------

    @property
    def by_side(self) -> bool:
        return self.mode == BY_SIDE

    def gindex(self, x: str) -> int:
        return self._gindex[x]

    def allowed(self, x: str) -> tuple[str, ...]:
        """H-vertices ``x`` may take before any edge constraint: list ∩ side."""
        H = self.target
        if self.by_side:
            base = H.side_vertices(self.g_side[x])  # type: ignore[index]
        else:
            base = H.vertices
        if self.lists is not None and x in self.lists:
            keep = set(self.lists[x])
            return tuple(v for v in base if v in keep)
        return tuple(base)

    def has_restrictive_lists(self) -> bool:
        """True when some list excludes a vertex the mode would otherwise allow."""
        if not self.lists:
            return False
        H = self.target
        for x, allowed in self.lists.items():
            base = H.side_vertices(self.g_side[x]) if self.by_side else H.vertices  # type: ignore[index]
            if set(allowed) != set(base):
                return True
        return False

    @property
    def variant(self) -> str:
        """The problem variant this instance belongs to."""
        lists = self.has_restrictive_lists()
        if self.by_side:
            return "by-side-list" if lists else "by-side"
        return "list" if lists else "standard"

    def incident(self, x: str) -> list[Edge]:
        return [e for e in self.edges if e.u == x or e.v == x]

    def with_changes(self, **changes: Any) -> "Instance":
        return replace(self, **changes)

    @cached_property
    def compiled(self) -> Compiled:
        H = self.target
        n = len(H.vertices)

        def arr(p: Permutation) -> tuple[int, ...]:
            out = [-1] * n
            for k, v in p.mapping.items():
                out[H.index(k)] = H.index(v)
            return tuple(out)

        cache: dict[Permutation, tuple[int, ...]] = {}

        def get(p: Permutation) -> tuple[int, ...]:
            if p not in cache:
                cache[p] = arr(p)
            return cache[p]

        edges = tuple(
            (self._gindex[e.u], self._gindex[e.v], get(e.pi), get(e.rho)) for e in self.edges
        )
        domains = tuple(
            sum(1 << H.index(a) for a in self.allowed(x)) for x in self.g_vertices
        )
        return Compiled(n=n, m=len(self.g_vertices), adj=H.adj, edges=edges, domains=domains)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "target": self.target.to_dict(),
            "gVertices": list(self.g_vertices),
            "edges": [
                {"u": e.u, "v": e.v, "pi": dict(e.pi.mapping), "rho": dict(e.rho.mapping)}
                for e in self.edges
            ],
        }
        if self.lists is not None:
            out["lists"] = {x: list(v) for x, v in self.lists.items()}
        out["mode"] = self.mode
        if self.g_side is not None:
            out["gSide"] = dict(self.g_side)
        return out


# ---------------------------------------------------------------------------
# Assignments and the constraint checker
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """Why an assignment is rejected."""

    kind: str  # "missing", "unknown", "side", "list" or "edge"
    vertex: Optional[str] = None
    edge_index: Optional[int] = None
    edge: Optional[Edge] = None

    def __str__(self) -> str:
        if self.kind == "edge":
            e = self.edge
            return f"edge #{self.edge_index} ({e.u}, {e.v}) is violated"  # type: ignore[union-attr]
        return f"{self.kind} violation at G-vertex {self.vertex!r}"


def check_assignment(instance: Instance, assignment: Mapping[str, str]) -> Optional[Violation]:
    """Return ``None`` if ``assignment`` is an accepted correspondence
    homomorphism, otherwise the first violation found.

    Checks totality, sides, lists and then every edge in input order
    (G-loops included).
    """
    H = instance.target
    for x in instance.g_vertices:
        if x not in assignment:
            return Violation("missing", vertex=x)
        a = assignment[x]
        if a not in H:
            return Violation("unknown", vertex=x)
        if instance.by_side and H.side[a] != instance.g_side[x]:  # type: ignore[index]
            return Violation("side", vertex=x)
        if instance.lists is not None and x in instance.lists and a not in instance.lists[x]:
            return Violation("list", vertex=x)
    for k, e in enumerate(instance.edges):
        if not H.has_edge(e.pi(assignment[e.u]), e.rho(assignment[e.v])):
            return Violation("edge", edge_index=k, edge=e)
    return None


def is_accepted(instance: Instance, assignment: Mapping[str, str]) -> bool:
    return check_assignment(instance, assignment) is None


@dataclass(frozen=True)
class AuxiliaryGraph:
    """The graph G*: one copy of V(H) per G-vertex, cross edges per G-edge.

    ``cross[k]`` holds the pairs ``(u, w)`` with ``u`` in the copy at the
    first endpoint of edge ``k`` and ``w`` in the copy at the second endpoint.
    """

    copies: Mapping[str, tuple[str, ...]]
    cross: tuple[frozenset[tuple[str, str]], ...]
    edges: tuple[Edge, ...]

    def induces_copy(self, assignment: Mapping[str, str]) -> bool:
        """Does the transversal chosen by ``assignment`` induce a copy of G?"""
        for x, copy in self.copies.items():
            if assignment.get(x) not in copy:
                return False
        return all(
            (assignment[e.u], assignment[e.v]) in pairs for e, pairs in zip(self.edges, self.cross)
        )


def build_auxiliary(instance: Instance) -> AuxiliaryGraph:
    H = instance.target
    copies = {x: instance.allowed(x) for x in instance.g_vertices}
    cross = []
    for e in instance.edges:
        pi_inv, rho_inv = e.pi.inverse(), e.rho.inverse()
        pairs = set()
        for a, b in H.edges:
            for s, t in ((a, b), (b, a)):
                if s in pi_inv.domain and t in rho_inv.domain:
                    pairs.add((pi_inv(s), rho_inv(t)))
        cross.append(frozenset(pairs))
    return AuxiliaryGraph(copies=copies, cross=tuple(cross), edges=instance.edges)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def _expect(obj: Any, kind: type, where: str) -> Any:
    if not isinstance(obj, kind):
        raise ParseError(f"{where} must be a {kind.__name__}, got {type(obj).__name__}")
    return obj


def target_from_dict(obj: Any) -> TargetGraph:
    _expect(obj, dict, "target")
    if "vertices" not in obj:
        raise ParseError("target is missing 'vertices'")
    vertices = _expect(obj["vertices"], list, "target.vertices")
    edges = _expect(obj.get("edges", []), list, "target.edges")
    for k, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"target.edges[{k}] must be a two-element list")
    side = obj.get("side")
    if side is not None:
        _expect(side, dict, "target.side")
    return TargetGraph(tuple(vertices), tuple(tuple(e) for e in edges), side)


def _permutation_from(obj: Any, where: str) -> Permutation:
    _expect(obj, dict, where)
    try:
        return Permutation(obj)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def instance_from_dict(obj: Any, base_dir: Optional[Path] = None) -> Instance:
    _expect(obj, dict, "instance")
    if "target" not in obj:
        raise ParseError("instance is missing 'target'")
    target_obj = obj["target"]
    if isinstance(target_obj, str):
        path = Path(target_obj)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        try:
            target = parse_target(path.read_text())
        except OSError as exc:
            raise ParseError(f"cannot read referenced target {str(path)!r}: {exc}") from None
    else:
        target = target_from_dict(target_obj)
    g_vertices = _expect(obj.get("gVertices", []), list, "gVertices")
    raw_edges = _expect(obj.get("edges", []), list, "edges")
    edges = []
    for k, e in enumerate(raw_edges):
        _expect(e, dict, f"edges[{k}]")
        for key in ("u", "v", "pi", "rho"):
            if key not in e:
                raise ParseError(f"edges[{k}] is missing {key!r}")
        edges.append(
            Edge(
                e["u"],
                e["v"],
                _permutation_from(e["pi"], f"edges[{k}].pi"),
                _permutation_from(e["rho"], f"edges[{k}].rho"),
            )
        )
    lists = obj.get("lists")
    if lists is not None:
        _expect(lists, dict, "lists")
        for x, vals in lists.items():
            _expect(vals, list, f"lists[{x!r}]")
    mode = obj.get("mode", STANDARD)
    g_side = obj.get("gSide")
    if g_side is not None:
        _expect(g_side, dict, "gSide")
    return Instance(target, tuple(g_vertices), tuple(edges), lists, mode, g_side)


def parse_target(text: str) -> TargetGraph:
    return target_from_dict(_load_json(text))


def parse_instance(text: str, base_dir: Optional[Path] = None) -> Instance:
    return instance_from_dict(_load_json(text), base_dir)


def emit_target(H: TargetGraph) -> str:
    return json.dumps(H.to_dict(), indent=2)


def emit_instance(instance: Instance) -> str:
    return json.dumps(instance.to_dict(), indent=2)


def load_target(path: str | Path) -> TargetGraph:
    return parse_target(Path(path).read_text())


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    return parse_instance(path.read_text(), base_dir=path.parent)


def make_instance(
    target: TargetGraph,
    g_vertices: Sequence[str],
    edges: Iterable[tuple[str, str, Permutation, Permutation]] = (),
    lists: Optional[Mapping[str, Iterable[str]]] = None,
    mode: str = STANDARD,
    g_side: Optional[Mapping[str, str]] = None,
) -> Instance:
    """Convenience constructor taking plain ``(u, v, pi, rho)`` tuples."""
    return Instance(
        target,
        tuple(g_vertices),
        tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges),
        None if lists is None else {x: tuple(v) for x, v in lists.items()},
        mode,
        g_side,
    )
