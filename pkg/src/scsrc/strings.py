"""Symbol strings over an alphabet with an involutive complement.

Strings are tuples of integer symbol ids. An :class:`Alphabet` carries the
complement permutation and optional one-character glyphs used for text I/O.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import EmptyInstanceError, InvalidInputError

Symbols = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Symbol universe ``0..size-1`` with an involutive complement map."""

    size: int
    complement: tuple[int, ...]
    glyphs: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidInputError(f"alphabet size must be positive, got {self.size}")
        if len(self.complement) != self.size:
            raise InvalidInputError("complement table length differs from alphabet size")
        for x, y in enumerate(self.complement):
            if not 0 <= y < self.size or self.complement[y] != x:
                raise InvalidInputError(f"complement is not an involution at symbol {x}")
        if self.glyphs is not None:
            if len(self.glyphs) != self.size:
                raise InvalidInputError("glyph table length differs from alphabet size")
            if len(set(self.glyphs)) != self.size:
                raise InvalidInputError("glyphs must be pairwise distinct")

    @classmethod
    def identity(cls, size: int, glyphs: Optional[Sequence[str]] = None) -> "Alphabet":
        """Alphabet where every symbol is its own complement (rc is reversal)."""
        return cls(size, tuple(range(size)), tuple(glyphs) if glyphs is not None else None)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "Alphabet":
        """Build an alphabet from complement pairs of glyphs, numbered by first appearance."""
        glyphs: list[str] = []
        partner: dict[str, str] = {}
        for a, b in pairs:
            for g in (a, b) if a != b else (a,):
                if g in partner:
                    raise InvalidInputError(f"symbol {g!r} paired twice")
                glyphs.append(g)
            partner[a] = b
            partner[b] = a
        index = {g: i for i, g in enumerate(glyphs)}
        return cls(len(glyphs), tuple(index[partner[g]] for g in glyphs), tuple(glyphs))

    def pairs(self) -> list[tuple[int, int]]:
        """Complement pairs ``(x, cm(x))`` with ``x <= cm(x)``, in symbol order."""
        return [(x, y) for x, y in enumerate(self.complement) if x <= y]

    def encode(self, text: str) -> Symbols:
        if self.glyphs is None:
            raise InvalidInputError("alphabet has no glyphs")
        index = {g: i for i, g in enumerate(self.glyphs)}
        try:
            return tuple(index[ch] for ch in text)
        except KeyError as exc:
            raise InvalidInputError(f"symbol {exc.args[0]!r} is not in the alphabet") from None

    def decode(self, s: Sequence[int]) -> str:
        if self.glyphs is None:
            return " ".join(str(x) for x in s)
        return "".join(self.glyphs[x] for x in s)


DNA = Alphabet(4, (3, 2, 1, 0), ("A", "C", "G", "T"))


def check_symbols(s: Sequence[int], alphabet: Alphabet) -> None:
    for x in s:
        if not 0 <= x < alphabet.size:
            raise InvalidInputError(f"symbol {x} outside alphabet of size {alphabet.size}")


def rc(s: Sequence[int], alphabet: Alphabet) -> Symbols:
    """Reverse complement of ``s``."""
    check_symbols(s, alphabet)
    cm = alphabet.complement
    return tuple(cm[x] for x in reversed(s))


def _nonempty(*strings: Sequence[int]) -> None:
    for s in strings:
        if len(s) == 0:
            raise InvalidInputError("empty string")


def borders(s: Sequence[int]) -> list[int]:
    """Failure function: ``b[i]`` is the longest proper border of ``s[:i+1]``."""
    b = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = b[k - 1]
        if s[i] == s[k]:
            k += 1
        b[i] = k
    return b


def overlap(s: Sequence[int], t: Sequence[int]) -> int:
    """Length of the longest ``y`` with ``s = xy``, ``t = yz`` and ``x``, ``z`` nonempty."""
    _nonempty(s, t)
    cap = min(len(s), len(t)) - 1
    if cap == 0:
        return 0
    # Match s against the prefix-automaton of t, keeping the state below the cap.
    pattern = t[:cap]
    b = borders(pattern)
    k = 0
    for x in s[len(s) - cap:] if len(s) > cap else s:
        while k and (k == cap or x != pattern[k]):
            k = b[k - 1]
        if k < cap and x == pattern[k]:
            k += 1
    return k


def prefix(s: Sequence[int], t: Sequence[int]) -> Symbols:
    return tuple(s[: len(s) - overlap(s, t)])


def dist(s: Sequence[int], t: Sequence[int]) -> int:
    return len(s) - overlap(s, t)


def merge(xs: Sequence[Sequence[int]]) -> Symbols:
    """Shortest string containing ``xs`` as substrings in the given order."""
    if not xs:
        raise InvalidInputError("cannot merge an empty list")
    out: list[int] = []
    for a, b in zip(xs, xs[1:]):
        out.extend(a[: len(a) - overlap(a, b)])
    out.extend(xs[-1])
    return tuple(out)


def period(s: Sequence[int]) -> int:
    _nonempty(s)
    return len(s) - borders(s)[-1]


def factor(s: Sequence[int]) -> Symbols:
    return tuple(s[: period(s)])


def find(pattern: Sequence[int], text: Sequence[int], start: int = 0) -> int:
    """Index of the first occurrence of ``pattern`` in ``text`` at or after ``start``, or -1."""
    if not pattern:
        return start if start <= len(text) else -1
    if max(pattern) < 256 and (not text or max(text) < 256):
        return bytes(text).find(bytes(pattern), start)
    b = borders(pattern)
    k = 0
    for i in range(start, len(text)):
        while k and text[i] != pattern[k]:
            k = b[k - 1]
        if text[i] == pattern[k]:
            k += 1
            if k == len(pattern):
                return i - k + 1
    return -1


def occurs(pattern: Sequence[int], text: Sequence[int]) -> bool:
    return find(pattern, text) >= 0


def equivalent(s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff the factors of ``s`` and ``t`` are cyclic shifts of each other."""
    fs, ft = factor(s), factor(t)
    return len(fs) == len(ft) and occurs(fs, ft + ft)


@dataclass(frozen=True)
class Instance:
    """An ordered string set over an alphabet."""

    alphabet: Alphabet
    strings: tuple[Symbols, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "strings", tuple(tuple(s) for s in self.strings))
        for s in self.strings:
            check_symbols(s, self.alphabet)

    def __len__(self) -> int:
        return len(self.strings)

    @classmethod
    def from_text(cls, lines: Iterable[str], alphabet: Alphabet = DNA) -> "Instance":
        return cls(alphabet, tuple(alphabet.encode(line) for line in lines))

    def texts(self) -> list[str]:
        return [self.alphabet.decode(s) for s in self.strings]

    def oriented(self) -> list[Symbols]:
        """The 2m oriented strings: index ``2i`` is ``s_i``, ``2i + 1`` is ``rc(s_i)``."""
        out: list[Symbols] = []
        for s in self.strings:
            out.append(s)
            out.append(rc(s, self.alphabet))
        return out


def normalize(inst: Instance) -> Instance:
    """Drop empty strings, duplicates, rc-duplicates and strings contained in others.

    The first of several equal or rc-equal strings is kept and input order is
    preserved. Any superstring of the result is a superstring of ``inst``.
    """
    a = inst.alphabet
    kept: list[Symbols] = []
    seen: set[Symbols] = set()
    for s in inst.strings:
        if not s or s in seen:
            continue
        r = rc(s, a)
        seen.add(s)
        seen.add(r)
        kept.append(s)
    if not kept:
        raise EmptyInstanceError("instance has no nonempty strings")
    both = [(s, rc(s, a)) for s in kept]
    survivors = []
    for i, s in enumerate(kept):
        contained = any(
            len(t) > len(s) and (occurs(s, t) or occurs(s, rt))
            for j, (t, rt) in enumerate(both)
            if j != i
        )
        if not contained:
            survivors.append(s)
    return Instance(a, tuple(survivors))


class _Node:
    __slots__ = ("children", "fail", "depth", "passing")

    def __init__(self, depth: int) -> None:
        self.children: dict[int, _Node] = {}
        self.fail: Optional[_Node] = None
        self.depth = depth
        self.passing: list[int] = []


def _overlaps_automaton(strings: Sequence[Symbols]) -> list[list[int]]:
    root = _Node(0)
    for j, s in enumerate(strings):
        node = root
        for x in s:
            nxt = node.children.get(x)
            if nxt is None:
                nxt = node.children[x] = _Node(node.depth + 1)
            node = nxt
            node.passing.append(j)
    root.fail = root
    queue: deque[_Node] = deque()
    for child in root.children.values():
        child.fail = root
        queue.append(child)
    while queue:
        node = queue.popleft()
        for x, child in node.children.items():
            f = node.fail
            while f is not root and x not in f.children:
                f = f.fail
            child.fail = f.children[x] if x in f.children and f.children[x] is not child else root
            queue.append(child)

    m = len(strings)
    table = [[0] * m for _ in range(m)]
    for i, s in enumerate(strings):
        node = root
        for x in s:
            while node is not root and x not in node.children:
                node = node.fail
            node = node.children.get(x, root)
        # Walk suffixes of s that are prefixes of some string, longest first.
        done = [False] * m
        while node is not root:
            d = node.depth
            if d < len(s):
                for j in node.passing:
                    if not done[j] and d < len(strings[j]):
                        done[j] = True
                        table[i][j] = d
            node = node.fail
    return table


def _overlaps_naive(strings: Sequence[Symbols]) -> list[list[int]]:
    return [[overlap(s, t) for t in strings] for s in strings]


def all_pairs_overlaps(strings: Sequence[Sequence[int]], method: str = "automaton") -> list[list[int]]:
    """Overlap table ``table[i][j] = overlap(strings[i], strings[j])`` including the diagonal."""
    if not strings:
        raise InvalidInputError("overlap table needs at least one string")
    strs = [tuple(s) for s in strings]
    _nonempty(*strs)
    if method == "automaton":
        return _overlaps_automaton(strs)
    if method == "naive":
        return _overlaps_naive(strs)
    raise InvalidInputError(f"unknown overlap method {method!r}")
