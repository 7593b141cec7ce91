"""Exhaustive oracles for checking the polynomial-time solver at desk scale."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import BudgetError, InfeasibleError, InvalidInputError, TooSmallError
from .graphs import build_oriented_graph
from .matching import Matching, WeightedGraph
from .strings import Instance, merge


@dataclass(frozen=True)
class OracleBudget:
    max_strings: int = 7
    max_matching_vertices: int = 14
    time_limit: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_strings < 1 or self.max_matching_vertices < 1:
            raise InvalidInputError("oracle budgets must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise InvalidInputError("time limit must be positive")


DEFAULT_BUDGET = OracleBudget()


def brute_force_pm(g: WeightedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> Matching:
    """Maximum-weight perfect matching by recursive pairing of the lowest free vertex."""
    if g.n > budget.max_matching_vertices:
        raise BudgetError(f"{g.n} vertices exceeds budget {budget.max_matching_vertices}")
    if g.n % 2:
        raise InfeasibleError(f"odd vertex count {g.n}")
    adj: list[dict[int, int]] = [{} for _ in range(g.n)]
    for u, v, w in g.edges:
        adj[u][v] = w
        adj[v][u] = w

    @lru_cache(maxsize=None)
    def best(free: int) -> Optional[tuple[int, tuple[tuple[int, int], ...]]]:
        if free == 0:
            return 0, ()
        u = (free & -free).bit_length() - 1
        rest = free & ~(1 << u)
        result = None
        for v in sorted(adj[u]):
            if rest >> v & 1:
                sub = best(rest & ~(1 << v))
                if sub is not None:
                    cand = sub[0] + adj[u][v]
                    if result is None or cand > result[0]:
                        result = (cand, ((u, v),) + sub[1])
        return result

    found = best((1 << g.n) - 1)
    if found is None:
        raise InfeasibleError("graph has no perfect matching")
    return Matching(tuple(sorted(found[1])), found[0])


@dataclass(frozen=True)
class ExactSolution:
    """An optimal oriented order: ``order[i]`` is a string index, ``reverse[i]`` its flag."""

    length: int
    order: tuple[int, ...]
    reverse: tuple[bool, ...]
    text: tuple[int, ...]

    def layout(self) -> list[tuple[int, bool]]:
        return list(zip(self.order, self.reverse))


def _rank(u: int) -> tuple[int, int]:
    return u & 1, u >> 1


def _check_budget(inst: Instance, budget: OracleBudget) -> None:
    if len(inst.strings) > budget.max_strings:
        raise BudgetError(f"{len(inst.strings)} strings exceeds budget {budget.max_strings}")
    if not inst.strings:
        raise InvalidInputError("exact oracle needs a nonempty instance")


def opt_scsrc(inst: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> ExactSolution:
    """Exact SCS-RC optimum of a normalized instance.

    Dynamic program over (set of strings placed, first oriented string). Among
    optimal solutions the lexicographically first sequence of
    ``(reverse, string_index)`` keys is returned, so forward copies win ties.
    """
    _check_budget(inst, budget)
    g = build_oriented_graph(inst)
    m, n = g.m, g.n
    lengths = [len(s) for s in g.strings]
    full = (1 << m) - 1
    INF = 1 << 60
    # best[mask][v]: shortest merge of a path covering `mask` that starts at v.
    # Built backwards so that the lexicographic tie-break runs front to back.
    best = [[INF] * n for _ in range(1 << m)]
    for v in range(n):
        best[1 << (v >> 1)][v] = lengths[v]
    for mask in range(1, full + 1):
        for v in range(n):
            if not mask >> (v >> 1) & 1 or mask == 1 << (v >> 1):
                continue
            rest = mask & ~(1 << (v >> 1))
            val = INF
            row = g.ov_table[v]
            for u in range(n):
                if rest >> (u >> 1) & 1:
                    c = best[rest][u]
                    if c < INF:
                        c += lengths[v] - row[u]
                        if c < val:
                            val = c
            best[mask][v] = val
    length = min(best[full])
    seq = []
    mask = full
    v = min((u for u in range(n) if best[full][u] == length), key=_rank)
    while True:
        seq.append(v)
        rest = mask & ~(1 << (v >> 1))
        if not rest:
            break
        target = best[mask][v] - lengths[v]
        v = min(
            (u for u in range(n) if rest >> (u >> 1) & 1 and best[rest][u] - g.ov_table[v][u] == target),
            key=_rank,
        )
        mask = rest
    text = merge([g.strings[u] for u in seq])
    assert len(text) == length
    return ExactSolution(length, tuple(u >> 1 for u in seq), tuple(bool(u & 1) for u in seq), text)


def opt_scsrc_enumerate(inst: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> ExactSolution:
    """Same optimum as :func:`opt_scsrc` by plain enumeration of all m! * 2^m candidates."""
    _check_budget(inst, budget)
    g = build_oriented_graph(inst)
    m = g.m
    best: Optional[tuple[tuple[int, list], tuple[int, ...]]] = None
    for perm in itertools.permutations(range(m)):
        for flips in itertools.product((0, 1), repeat=m):
            seq = tuple(2 * i + f for i, f in zip(perm, flips))
            length = len(g.strings[seq[-1]]) + sum(g.dist(a, b) for a, b in zip(seq, seq[1:]))
            key = (length, [_rank(u) for u in seq])
            if best is None or key < best[0]:
                best = (key, seq)
    assert best is not None
    (length, _), seq = best
    text = merge([g.strings[u] for u in seq])
    return ExactSolution(length, tuple(u >> 1 for u in seq), tuple(bool(u & 1) for u in seq), text)


@lru_cache(maxsize=None)
def _derangements(m: int) -> np.ndarray:
    rows = [p for p in itertools.permutations(range(m)) if all(p[i] != i for i in range(m))]
    return np.array(rows, dtype=np.int64).reshape(len(rows), m)


def opt_cycle_cover(inst: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum distance weight of a constrained cycle cover, by exhaustion.

    Every orientation choice is combined with every successor map without
    fixed points; the latter are exactly the partitions of the selected
    vertices into cycles of length at least two, each in every cyclic order.
    """
    _check_budget(inst, budget)
    m = len(inst.strings)
    if m < 2:
        raise TooSmallError("a cycle cover needs at least two strings")
    g = build_oriented_graph(inst)
    lengths = np.array([len(s) for s in g.strings], dtype=np.int64)
    ov = np.array(g.ov_table, dtype=np.int64)
    dist = lengths[:, None] - ov
    flips = np.array(list(itertools.product((0, 1), repeat=m)), dtype=np.int64)
    selected = 2 * np.arange(m)[None, :] + flips  # (2^m, m)
    succ = _derangements(m)  # (D, m)
    src = selected[:, None, :]  # (2^m, 1, m)
    dst = selected[:, succ]  # (2^m, D, m)
    weights = dist[np.broadcast_to(src, dst.shape), dst].sum(axis=2)
    return int(weights.min())
