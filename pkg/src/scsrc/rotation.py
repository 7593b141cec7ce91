"""Critical rotations of periodic strings and cycle representatives.

A cycle of the minimum cover spells out a periodic string whose period is the
cycle weight. The representative of the cycle is a window of that periodic
string which starts at a critical position of its factor and ends where the
merge of a suitable rotation of the cycle ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InvalidCycleError
from .strings import Alphabet, Symbols, dist, equivalent, merge, overlap, period, rc


def _maximal_suffix(x: Sequence[int], reverse: bool) -> int:
    """Start of the maximal suffix of ``x`` under the natural or reversed symbol order, minus one."""
    n = len(x)
    ms, j, k, p = -1, 0, 1, 1
    while j + k < n:
        a, b = x[j + k], x[ms + k]
        if (a > b) if reverse else (a < b):
            j += k
            k = 1
            p = j - ms
        elif a == b:
            if k != p:
                k += 1
            else:
                j += p
                k = 1
        else:
            ms = j
            j = ms + 1
            k = p = 1
    return ms


def critical_point(x: Sequence[int]) -> int:
    """Leftmost cut ``p`` in ``1..period(x)`` where the local period of ``factor(x)`` repeated equals the period.

    The two-order maximal-suffix computation on two copies of the factor gives
    one critical cut in linear time; cuts left of it are tried first.
    """
    if not x:
        raise InvalidCycleError("critical point of an empty string")
    w = period(x)
    f = tuple(x[:w])
    u = f * 2
    cut = max(_maximal_suffix(u, False), _maximal_suffix(u, True)) + 1
    bound = cut % w or w
    for p in range(1, bound):
        if _has_local_period(f, p, w):
            return p
    return bound


def _has_local_period(f: Sequence[int], p: int, w: int) -> bool:
    """True iff no shift shorter than ``w`` is a local period at cut ``p`` of ``f`` repeated."""
    for r in range(1, w):
        if all(f[(p - r + i) % w] == f[(p + i) % w] for i in range(r)):
            return False
    return True


def local_period(x: Sequence[int], p: int) -> int:
    """Local period at cut ``p`` of the bi-infinite repetition of ``x`` (brute force)."""
    w = len(x)
    for r in range(1, w + 1):
        if all(x[(p - r + i) % w] == x[(p + i) % w] for i in range(r)):
            return r
    return w


@dataclass(frozen=True)
class Representative:
    """String ``text`` extracted from ``cycle``.

    ``strings`` are the cycle's oriented strings in cycle order, ``pivot`` is the
    0-based index ``j`` of the string whose outgoing arc is skipped, so the merge
    of the rotation starting at ``pivot + 1`` is a suffix of ``text``.
    """

    cycle: tuple[int, ...]
    strings: tuple[Symbols, ...] = field(repr=False)
    text: Symbols
    pivot: int
    weight: int

    def rotation(self, start: int) -> list[Symbols]:
        r = len(self.strings)
        return [self.strings[(start + i) % r] for i in range(r)]

    def suffix_merge(self) -> Symbols:
        """Merge of the rotation starting after the pivot."""
        return merge(self.rotation(self.pivot + 1))

    def window_merge(self) -> Symbols:
        """Merge of the pivot string, the full rotation after it, and the pivot string again."""
        return merge(self.rotation(self.pivot) + [self.strings[self.pivot]])


def extract_representative(cycle: Sequence[int], lookup: Sequence[Sequence[int]]) -> Representative:
    """Representative of a cover cycle of oriented vertices; ``lookup[u]`` is the string of ``u``."""
    r = len(cycle)
    if r < 2:
        raise InvalidCycleError(f"cycle of length {r}")
    if len({u >> 1 for u in cycle}) != r:
        raise InvalidCycleError("cycle repeats a string cluster")
    strs = tuple(tuple(lookup[u]) for u in cycle)
    d = [dist(strs[i], strs[(i + 1) % r]) for i in range(r)]
    w = sum(d)
    whole = merge(strs)
    if period(whole) != w:
        raise InvalidCycleError(f"cycle weight {w} differs from the period {period(whole)} of its merge")
    x = whole[:w]
    q = critical_point(x) % w
    # String i starts at offset pos[i] of the periodic string x^inf.
    pos = [0] * (r + 1)
    for i in range(r):
        pos[i + 1] = pos[i] + d[i]
    j = next(i for i in range(r) if pos[i] <= q <= pos[i + 1])
    end = pos[j] + w + len(strs[j])
    text = tuple(x[i % w] for i in range(q, end))
    return Representative(tuple(cycle), strs, text, j, w)


def check_properties(rep: Representative) -> list[str]:
    """Names of the representative properties that fail (empty when all hold)."""
    failed = []
    tail = rep.suffix_merge()
    if rep.text[len(rep.text) - len(tail):] != tail:
        failed.append("suffix")
    window = rep.window_merge()
    n = len(rep.text)
    if not any(window[i : i + n] == rep.text for i in range(len(window) - n + 1)):
        failed.append("substring")
    if not equivalent(rep.text, tail):
        failed.append("equivalent")
    if period(rep.text) != rep.weight:
        failed.append("period")
    return failed


@dataclass(frozen=True)
class BoundReport:
    ok: bool
    checked: int
    violation: Optional[tuple[int, int, str, int, int]] = None

    def __str__(self) -> str:
        if self.ok:
            return f"rotation bounds hold on {self.checked} ordered pairs"
        d, c, kind, ov, bound = self.violation
        return f"rotation bound violated: {kind}(t_{d}), t_{c}: overlap {ov} > 2/3 of {bound}"


def check_rotation_bounds(reps: Sequence[Representative], alphabet: Alphabet) -> BoundReport:
    """Check ``3 * ov(t_d, t_c) <= 2 * (w_d + w_c)`` and the same with ``rc(t_d)`` whenever ``w_d <= w_c``."""
    checked = 0
    for di, d in enumerate(reps):
        rd = rc(d.text, alphabet)
        for ci, c in enumerate(reps):
            if ci == di or d.weight > c.weight:
                continue
            total = d.weight + c.weight
            for kind, s in (("id", d.text), ("rc", rd)):
                ov = overlap(s, c.text)
                checked += 1
                if 3 * ov > 2 * total:
                    return BoundReport(False, checked, (di, ci, kind, ov, total))
    return BoundReport(True, checked)
