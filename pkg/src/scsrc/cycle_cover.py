"""Optimal constrained cycle cover via a gadget graph and perfect matching.

Each oriented vertex ``u`` is split into ``u_out`` and ``u_in``. An auxiliary
vertex ``x_u`` with zero-weight edges to ``u_out`` and ``bar(u)_in`` keeps
those two from both being used by real arcs. A maximum-weight perfect
matching of the resulting graph yields an arc set ``F``; ``F`` together with
its reverse-complement mirror splits into mirror pairs of cycles, and one
cycle from each pair forms an optimal cover.

Vertex numbering in the gadget graph: ``u_out = u``, ``u_in = 2m + u``,
``x_u = 4m + u`` for oriented vertex ids ``u`` in ``0..2m-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalInvariantError, InvalidInputError, TooSmallError
from .graphs import OrientedGraph, OrientedVertex, bar, build_oriented_graph, cluster
from .matching import Matching, WeightedGraph, max_weight_perfect_matching
from .strings import Instance

Arc = tuple[int, int]


@dataclass(frozen=True)
class GadgetGraph:
    base: OrientedGraph
    graph: WeightedGraph

    @property
    def m(self) -> int:
        return self.base.m

    def out_vertex(self, u: int) -> int:
        return u

    def in_vertex(self, u: int) -> int:
        return 2 * self.m + u

    def aux_vertex(self, u: int) -> int:
        return 4 * self.m + u

    def label(self, x: int) -> str:
        k, u = divmod(x, 2 * self.m)
        return f"{OrientedVertex.of(u)}_{('out', 'in', 'x')[k]}"

    def dump(self) -> str:
        return "\n".join(f"{self.label(a)} {self.label(b)} {w}" for a, b, w in self.graph.edges)


def build_gadget_graph(g: OrientedGraph) -> GadgetGraph:
    m = g.m
    if m < 2:
        raise TooSmallError("gadget graph needs at least two strings")
    n = 2 * m
    edges = []
    for u in range(n):
        for v in range(n):
            if g.has_arc(u, v):
                edges.append((u, n + v, g.ov_table[u][v]))
    for u in range(n):
        edges.append((u, 2 * n + u, 0))
        edges.append((2 * n + u, n + bar(u), 0))
    return GadgetGraph(g, WeightedGraph(3 * n, tuple(edges)))


def extract_F(match: Matching, gg: GadgetGraph) -> frozenset[Arc]:
    """Real arcs of a perfect matching of the gadget graph (auxiliary edges dropped)."""
    n = 2 * gg.m
    if not match.is_perfect(3 * n):
        raise InvalidInputError("matching is not perfect")
    arcs = set()
    for a, b in match.pairs:
        lo, hi = min(a, b), max(a, b)
        if hi < 2 * n and lo < n <= hi:
            arcs.add((lo, hi - n))
    if len(arcs) != gg.m:
        raise InternalInvariantError(f"|F| = {len(arcs)}, expected {gg.m}")
    return frozenset(arcs)


def mirror_arc(arc: Arc) -> Arc:
    u, v = arc
    return bar(v), bar(u)


def mirror(F: frozenset[Arc]) -> frozenset[Arc]:
    """Reverse-complement image: each arc ``u -> v`` becomes ``bar(v) -> bar(u)``."""
    outs = {u for u, _ in F}
    ins = {v for _, v in F}
    for u in outs:
        if bar(u) in ins:
            raise InvalidInputError(f"gadget constraint violated at {OrientedVertex.of(u)}")
    return frozenset(mirror_arc(a) for a in F)


def arc_weight(arcs, g: OrientedGraph) -> int:
    return sum(g.ov(u, v) for u, v in arcs)


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint cycles using exactly one oriented copy of every string.

    Each cycle lists oriented vertex ids in traversal order; the closing arc
    runs from the last vertex back to the first.
    """

    graph: OrientedGraph
    cycles: tuple[tuple[int, ...], ...]

    @property
    def selected(self) -> tuple[int, ...]:
        sel = [0] * self.graph.m
        for c in self.cycles:
            for u in c:
                sel[cluster(u)] = u
        return tuple(sel)

    def arcs(self) -> list[Arc]:
        return [(c[i], c[(i + 1) % len(c)]) for c in self.cycles for i in range(len(c))]

    @property
    def weight_ov(self) -> int:
        return arc_weight(self.arcs(), self.graph)

    @property
    def weight_dist(self) -> int:
        return sum(self.graph.dist(u, v) for u, v in self.arcs())

    def cycle_weight(self, c: tuple[int, ...]) -> int:
        return sum(self.graph.dist(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))

    def validate(self) -> None:
        seen = [0] * self.graph.m
        for c in self.cycles:
            if len(c) < 2:
                raise InternalInvariantError(f"cycle of length {len(c)}")
            for u in c:
                seen[cluster(u)] += 1
        if any(k != 1 for k in seen):
            raise InternalInvariantError("cover does not pick exactly one copy per string")

    def dump(self) -> str:
        return "\n".join(
            "cycle " + " ".join(str(OrientedVertex.of(u)) for u in c) + f" w={self.cycle_weight(c)}"
            for c in self.cycles
        )


def _cycles_of(arcs: frozenset[Arc], n: int) -> list[tuple[int, ...]]:
    succ = [-1] * n
    pred = [-1] * n
    for u, v in arcs:
        if succ[u] != -1 or pred[v] != -1:
            raise InternalInvariantError("arc set is not a matching of the split graph")
        succ[u] = v
        pred[v] = u
    if -1 in succ:
        raise InternalInvariantError("arc set does not cover every oriented vertex")
    cycles = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        c = []
        u = start
        while not seen[u]:
            seen[u] = True
            c.append(u)
            u = succ[u]
        cycles.append(tuple(c))
    return cycles


def mirror_cycle(c: tuple[int, ...]) -> tuple[int, ...]:
    """Mirror of a cycle, rotated to start at its smallest vertex."""
    m = tuple(bar(u) for u in reversed(c))
    k = m.index(min(m))
    return m[k:] + m[:k]


def decompose_and_select(union: frozenset[Arc], g: OrientedGraph) -> CycleCover:
    """Split a mirror-closed perfect matching of the split graph into one cycle per mirror pair."""
    n = g.n
    cycles = _cycles_of(union, n)
    for c in cycles:
        clusters = {cluster(u) for u in c}
        if len(clusters) != len(c):
            raise InternalInvariantError(f"cycle contains a vertex and its mirror: {c}")
    as_set = set(cycles)
    chosen = []
    for c in cycles:
        mc = mirror_cycle(c)
        if mc == c:
            raise InternalInvariantError(f"cycle is its own mirror: {c}")
        if mc not in as_set:
            raise InternalInvariantError("union is not closed under mirroring")
        # Keep the cycle in which its lowest cluster appears forward.
        low = min(c, key=cluster)
        if low % 2 == 0:
            chosen.append(c)
    cover = CycleCover(g, tuple(chosen))
    cover.validate()
    return cover


@dataclass(frozen=True)
class CoverTrace:
    """Intermediate objects of one cover computation, kept for checks and --trace."""

    gadget: GadgetGraph
    matching: Matching
    F: frozenset[Arc]
    F_bar: frozenset[Arc]
    cover: CycleCover

    def dump(self) -> str:
        g = self.gadget.base

        def arcs(s):
            return " ".join(f"{OrientedVertex.of(u)}->{OrientedVertex.of(v)}" for u, v in sorted(s))

        lines = ["# gadget graph", self.gadget.dump(), "# matching"]
        lines += [f"{self.gadget.label(a)} {self.gadget.label(b)}" for a, b in self.matching.pairs]
        lines.append(f"# F weight={arc_weight(self.F, g)}: {arcs(self.F)}")
        lines.append(f"# F_bar weight={arc_weight(self.F_bar, g)}: {arcs(self.F_bar)}")
        lines.append(f"# cover weight_dist={self.cover.weight_dist}")
        lines.append(self.cover.dump())
        return "\n".join(lines)


def min_cycle_cover_graph(g: OrientedGraph) -> CoverTrace:
    gg = build_gadget_graph(g)
    match = max_weight_perfect_matching(gg.graph)
    F = extract_F(match, gg)
    F_bar = mirror(F)
    union = F | F_bar
    if len(union) != 2 * g.m:
        raise InternalInvariantError("F and its mirror share an arc")
    cover = decompose_and_select(union, g)
    if 2 * cover.weight_ov != arc_weight(union, g):
        raise InternalInvariantError("selected cover does not carry half the union weight")
    return CoverTrace(gg, match, F, F_bar, cover)


def min_cycle_cover(inst: Instance, trace: Optional[list] = None) -> CycleCover:
    """Minimum-distance constrained cycle cover of a normalized instance with m >= 2."""
    if len(inst.strings) < 2:
        raise TooSmallError("a cycle cover needs at least two strings")
    result = min_cycle_cover_graph(build_oriented_graph(inst))
    if trace is not None:
        trace.append(result)
    return result.cover
