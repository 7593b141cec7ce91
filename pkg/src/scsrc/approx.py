"""The 8/3-approximation for SCS-RC, a greedy baseline, and solution checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cycle_cover import CoverTrace, CycleCover, min_cycle_cover
from .errors import InvalidCycleError
from .graphs import OrientedVertex, bar, build_oriented_graph, cluster
from .rotation import Representative, extract_representative
from .strings import Instance, Symbols, find, merge, normalize, overlap, period, rc

RATIO_NUMER = 8
RATIO_DENOM = 3


@dataclass(frozen=True)
class BrokenCycle:
    """A second-level cycle opened into a linear order of oriented vertices."""

    cycle: tuple[int, ...]
    order: tuple[int, ...]
    lost_overlap: int
    weight: int
    text: Symbols


@dataclass
class SolveStats:
    lower_bound: int
    first_cover: Optional[CycleCover] = None
    representatives: list[Representative] = field(default_factory=list)
    reduced: Optional[Instance] = None
    second_cover: Optional[CycleCover] = None
    second_cover_weight: int = 0
    broken: list[BrokenCycle] = field(default_factory=list)
    traces: list[CoverTrace] = field(default_factory=list)

    @property
    def lost_overlaps(self) -> list[int]:
        return [b.lost_overlap for b in self.broken]


@dataclass(frozen=True)
class Solution:
    """A superstring for ``instance`` (the normalized instance).

    ``order`` lists indices of ``instance.strings`` by first occurrence in
    ``text`` and ``reverse[i]`` tells which copy of string ``i`` is used.
    ``orientation`` gives the same flag for every string of the raw input.
    """

    instance: Instance
    order: tuple[int, ...]
    reverse: tuple[bool, ...]
    text: Symbols
    orientation: tuple[bool, ...] = ()
    stats: Optional[SolveStats] = None

    @property
    def length(self) -> int:
        return len(self.text)

    def layout(self) -> list[tuple[int, bool]]:
        return [(i, self.reverse[i]) for i in self.order]

    def oriented_strings(self) -> list[Symbols]:
        a = self.instance.alphabet
        return [rc(self.instance.strings[i], a) if self.reverse[i] else self.instance.strings[i] for i in self.order]

    def render(self) -> str:
        a = self.instance.alphabet
        lines = [a.decode(self.text), f"# length {self.length}"]
        if self.stats is not None:
            lines.append(f"# lower_bound {self.stats.lower_bound}")
            lines.append(f"# ratio_bound_numer {RATIO_NUMER}")
            lines.append(f"# ratio_bound_denom {RATIO_DENOM}")
        return "\n".join(lines) + "\n"


def verify(inst: Instance, text: Sequence[int]) -> bool:
    """True iff every string of ``inst`` or its reverse complement occurs in ``text``."""
    a = inst.alphabet
    return all(find(s, text) >= 0 or find(rc(s, a), text) >= 0 for s in inst.strings)


def _placement(inst: Instance, text: Symbols) -> tuple[tuple[int, ...], tuple[bool, ...]]:
    a = inst.alphabet
    where = []
    reverse = []
    for i, s in enumerate(inst.strings):
        f, r = find(s, text), find(rc(s, a), text)
        use_rc = f < 0 or (0 <= r < f)
        reverse.append(use_rc)
        where.append((r if use_rc else f, i))
    return tuple(i for _, i in sorted(where)), tuple(reverse)


def _solution(raw: Instance, inst: Instance, text: Symbols, stats: Optional[SolveStats] = None) -> Solution:
    order, reverse = _placement(inst, text)
    return Solution(inst, order, reverse, text, _placement(raw, text)[1], stats)


def break_cycle(cycle: Sequence[int], strings: Sequence[Symbols], weights: Sequence[int]) -> BrokenCycle:
    """Open a second-level cycle at the representative with the largest source-cycle weight.

    ``strings[u]`` is the string of oriented vertex ``u`` and ``weights[i]`` the
    period of representative ``i``. Ties go to the smaller representative
    index. A forward pick loses its incoming arc, a reverse pick its outgoing arc.
    """
    r = len(cycle)
    if r < 2 or len({cluster(u) for u in cycle}) != r:
        raise InvalidCycleError(f"malformed cycle {tuple(cycle)}")
    p = max(range(r), key=lambda i: (weights[cluster(cycle[i])], -cluster(cycle[i])))
    if cycle[p] % 2 == 0:
        start = p
    else:
        start = (p + 1) % r
    order = tuple(cycle[(start + i) % r] for i in range(r))
    lost = overlap(strings[order[-1]], strings[order[0]])
    text = merge([strings[u] for u in order])
    w = sum(len(strings[cycle[i]]) - overlap(strings[cycle[i]], strings[cycle[(i + 1) % r]]) for i in range(r))
    return BrokenCycle(tuple(cycle), order, lost, w, text)


def solve(raw: Instance, keep_traces: bool = False) -> Solution:
    """Approximate SCS-RC within a factor 8/3 of optimal."""
    inst = normalize(raw)
    a = inst.alphabet
    if len(inst) == 1:
        s = inst.strings[0]
        w = period(s)
        stats = SolveStats(lower_bound=len(s), second_cover_weight=w)
        stats.broken = [BrokenCycle((0,), (0,), len(s) - w, w, s)]
        return _solution(raw, inst, s, stats)

    traces: Optional[list] = [] if keep_traces else None
    cover = min_cycle_cover(inst, trace=traces)
    stats = SolveStats(lower_bound=cover.weight_dist, first_cover=cover)
    reps = [extract_representative(c, cover.graph.strings) for c in cover.cycles]
    stats.representatives = reps

    T = Instance(a, tuple(rep.text for rep in reps))
    reduced = normalize(T)
    stats.reduced = reduced
    # Survivors keep their source cycle's weight and the input strings it covers.
    index: dict[Symbols, int] = {}
    for i, s in enumerate(T.strings):
        index.setdefault(s, i)
    rep_of = [index[s] for s in reduced.strings]
    weights = [reps[i].weight for i in rep_of]
    members = [min(cluster(u) for u in reps[i].cycle) for i in rep_of]

    if len(reduced) == 1:
        t = reduced.strings[0]
        # Degenerate second level: a single representative closes on itself.
        piece = BrokenCycle((0,), (0,), len(t) - weights[0], weights[0], t)
        stats.second_cover_weight = weights[0]
        stats.broken = [piece]
        text = t
    else:
        cover2 = min_cycle_cover(reduced, trace=traces)
        stats.second_cover = cover2
        stats.second_cover_weight = cover2.weight_dist
        pieces = [break_cycle(c, cover2.graph.strings, weights) for c in cover2.cycles]
        pieces.sort(key=lambda b: min(members[cluster(u)] for u in b.cycle))
        stats.broken = pieces
        text = tuple(x for b in pieces for x in b.text)
    if traces is not None:
        stats.traces = traces
    return _solution(raw, inst, text, stats)


def greedy_baseline(raw: Instance) -> Solution:
    """Greedy merging by largest end-to-start overlap, one orientation per string.

    Ties prefer fewer flipped contigs, then the earliest pair.
    """
    inst = normalize(raw)
    g = build_oriented_graph(inst)
    contigs: list[list[int]] = [[2 * i] for i in range(g.m)]

    def flip(c: list[int]) -> list[int]:
        return [bar(u) for u in reversed(c)]

    while len(contigs) > 1:
        best = None
        for i in range(len(contigs)):
            for j in range(len(contigs)):
                if i == j:
                    continue
                for fa, a in enumerate((contigs[i], flip(contigs[i]))):
                    for fb, b in enumerate((contigs[j], flip(contigs[j]))):
                        key = (g.ov_table[a[-1]][b[0]], -fa - fb)
                        if best is None or key > best[0]:
                            best = (key, i, j, a, b)
        _, i, j, a, b = best
        contigs = [c for k, c in enumerate(contigs) if k not in (i, j)] + [a + b]
    order = contigs[0]
    text = merge([g.strings[u] for u in order])
    return _solution(raw, inst, text)


def describe(sol: Solution) -> str:
    """Labeled text dump of the pipeline internals."""
    st = sol.stats
    if st is None:
        return ""
    lines = []
    for k, tr in enumerate(st.traces):
        lines.append(f"## level {k + 1}")
        lines.append(tr.dump())
    a = sol.instance.alphabet
    for i, rep in enumerate(st.representatives):
        lines.append(
            f"rep {i} cycle={' '.join(str(OrientedVertex.of(u)) for u in rep.cycle)} "
            f"pivot={rep.pivot} w={rep.weight} t={a.decode(rep.text)}"
        )
    for b in st.broken:
        lines.append(
            f"piece order={' '.join(str(OrientedVertex.of(u)) for u in b.order)} "
            f"w={b.weight} OV={b.lost_overlap} text={a.decode(b.text)}"
        )
    return "\n".join(lines)
