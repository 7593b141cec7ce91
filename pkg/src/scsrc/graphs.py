"""Oriented string copies and the overlap/distance graph over them.

Oriented vertices are integers: ``2*i`` is the forward copy of string ``i``
and ``2*i + 1`` its reverse-complement copy, so ``bar(u) == u ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InvalidInputError
from .strings import Instance, Symbols, all_pairs_overlaps


class OrientedVertex(NamedTuple):
    string_index: int
    reverse: bool

    @property
    def id(self) -> int:
        return 2 * self.string_index + int(self.reverse)

    @classmethod
    def of(cls, v: int) -> "OrientedVertex":
        return cls(v >> 1, bool(v & 1))

    def __str__(self) -> str:
        return f"{self.string_index}{'-' if self.reverse else '+'}"


def bar(u: int) -> int:
    return u ^ 1


def cluster(u: int) -> int:
    return u >> 1


@dataclass(frozen=True)
class OrientedGraph:
    """Complete digraph on the 2m oriented copies minus self-loops and ``u -> bar(u)`` arcs.

    One object serves both weightings: ``ov`` is stored, ``dist`` is derived.
    """

    instance: Instance
    strings: tuple[Symbols, ...]
    ov_table: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.instance.strings)

    @property
    def n(self) -> int:
        return 2 * self.m

    def str(self, u: int) -> Symbols:
        return self.strings[u]

    def has_arc(self, u: int, v: int) -> bool:
        return u != v and v != bar(u)

    def ov(self, u: int, v: int) -> int:
        if not self.has_arc(u, v):
            raise InvalidInputError(f"no arc {OrientedVertex.of(u)} -> {OrientedVertex.of(v)}")
        return self.ov_table[u][v]

    def dist(self, u: int, v: int) -> int:
        return len(self.strings[u]) - self.ov(u, v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(self.n):
                if self.has_arc(u, v):
                    yield u, v

    def dump(self) -> str:
        """Weighted edge list, one arc per line: ``u_idx u_orient v_idx v_orient ov dist``."""
        lines = []
        for u, v in self.arcs():
            a, b = OrientedVertex.of(u), OrientedVertex.of(v)
            lines.append(
                f"{a.string_index} {'-' if a.reverse else '+'} "
                f"{b.string_index} {'-' if b.reverse else '+'} "
                f"{self.ov(u, v)} {self.dist(u, v)}"
            )
        return "\n".join(lines)


def build_oriented_graph(inst: Instance, method: str = "automaton") -> OrientedGraph:
    if len(inst.strings) < 1:
        raise InvalidInputError("graph needs at least one string")
    strings = tuple(inst.oriented())
    table = all_pairs_overlaps(strings, method=method)
    return OrientedGraph(inst, strings, tuple(tuple(row) for row in table))
