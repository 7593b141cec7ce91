"""Ratio-preserving reductions into SCS-RC.

``encode_scs`` turns a plain SCS instance into an SCS-RC instance over a
doubled alphabet in which no string can overlap a reverse complement.
``encode_dna`` maps an SCS-RC instance over any alphabet to the DNA alphabet
with fixed-length blocks that commute with reverse complement.

Solutions are passed around as layouts: a list of ``(string_index, reverse)``
pairs in superstring order.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError, InvalidSolutionError
from .strings import DNA, Alphabet, Instance, Symbols, check_symbols, merge, rc

Layout = Sequence[tuple[int, bool]]

_GLYPH_POOL = string.ascii_letters + string.digits + "!$%&*+-./:;<=>?@^_~"


def layout_text(inst: Instance, layout: Layout) -> Symbols:
    a = inst.alphabet
    return merge([rc(inst.strings[i], a) if r else inst.strings[i] for i, r in layout])


def _check_layout(inst: Instance, layout: Layout) -> None:
    if sorted(i for i, _ in layout) != list(range(len(inst.strings))):
        raise InvalidSolutionError("layout is not a permutation of the instance strings")


@dataclass(frozen=True)
class DoubledAlphabetMap:
    original: Alphabet
    doubled: Alphabet

    @property
    def k(self) -> int:
        return self.original.size


def _doubled_glyphs(glyphs: Sequence[str]) -> tuple[str, ...]:
    used = set(glyphs)
    extra = []
    pool = iter(c for c in _GLYPH_POOL if c not in used)
    for g in glyphs:
        c = g.swapcase()
        if c == g or c in used:
            c = next(pool)
        used.add(c)
        extra.append(c)
    return tuple(glyphs) + tuple(extra)


def encode_scs(strings: Sequence[Sequence[int]], alphabet: Alphabet) -> tuple[Instance, DoubledAlphabetMap]:
    """Reinterpret plain SCS strings over ``2k`` symbols where ``cm(i) = i + k``.

    Only the alphabet size (and glyphs) of ``alphabet`` are used; its
    complement is ignored because plain SCS has none.
    """
    k = alphabet.size
    for s in strings:
        check_symbols(s, alphabet)
    glyphs = None
    if alphabet.glyphs is not None and 2 * k <= len(_GLYPH_POOL):
        glyphs = _doubled_glyphs(alphabet.glyphs)
    doubled = Alphabet(2 * k, tuple(range(k, 2 * k)) + tuple(range(k)), glyphs)
    return Instance(doubled, tuple(tuple(s) for s in strings)), DoubledAlphabetMap(alphabet, doubled)


@dataclass(frozen=True)
class ScsDecoded:
    order: tuple[int, ...]
    text: Symbols
    source_length: int

    @property
    def length(self) -> int:
        return len(self.text)


def decode_scs(inst: Instance, layout: Layout) -> ScsDecoded:
    """Turn an SCS-RC layout over the doubled alphabet into an all-forward SCS layout.

    Every maximal run of reverse-complemented strings is replaced by the same
    strings, forward, in reverse order.
    """
    _check_layout(inst, layout)
    order: list[int] = []
    run: list[int] = []
    for i, r in layout:
        if r:
            run.append(i)
            continue
        order.extend(reversed(run))
        run = []
        order.append(i)
    order.extend(reversed(run))
    source = layout_text(inst, layout)
    text = merge([inst.strings[i] for i in order])
    if len(text) > len(source):
        raise InvalidSolutionError("decoded superstring is longer than its source")
    return ScsDecoded(tuple(order), text, len(source))


@dataclass(frozen=True)
class DnaMorphism:
    """Block morphism ``h`` from ``source`` to DNA.

    ``label[x]`` is the 1-based position of symbol ``x`` after relabeling so the
    ``j`` complement 2-cycles come first (partners ``i`` and ``i + j``) and
    fixed points last.
    """

    source: Alphabet
    label: tuple[int, ...]
    j: int
    blocks: tuple[Symbols, ...]

    @property
    def k(self) -> int:
        return self.source.size

    @property
    def block_length(self) -> int:
        return 2 * (self.k + 1 - self.j)

    def h(self, s: Sequence[int]) -> Symbols:
        return tuple(y for x in s for y in self.blocks[x])


def dna_morphism(alphabet: Alphabet) -> DnaMorphism:
    k = alphabet.size
    cm = alphabet.complement
    pairs = [(x, y) for x, y in enumerate(cm) if x < y]
    fixed = [x for x in range(k) if cm[x] == x]
    j = len(pairs)
    label = [0] * k
    for n, (x, y) in enumerate(pairs, start=1):
        label[x] = n
        label[y] = n + j
    for n, x in enumerate(fixed, start=2 * j + 1):
        label[x] = n
    A, C, G, T = 0, 1, 2, 3
    blocks = []
    for x in range(k):
        i = label[x]
        if i <= j:
            b = [A] * i + [A, G] * (k + 1 - i - j) + [G] * i
        elif i <= 2 * j:
            b = [C] * (i - j) + [C, T] * (k + 1 - i) + [T] * (i - j)
        else:
            b = [A] * (i - j) + [A, T] * (k + 1 - i) + [T] * (i - j)
        blocks.append(tuple(b))
    morph = DnaMorphism(alphabet, tuple(label), j, tuple(blocks))
    for x in range(k):
        if len(blocks[x]) != morph.block_length:
            raise InvalidInputError(f"block for symbol {x} has the wrong length")
        if rc(blocks[x], DNA) != blocks[cm[x]]:
            raise InvalidInputError(f"block for symbol {x} does not commute with complement")
    return morph


def encode_dna(inst: Instance) -> tuple[Instance, DnaMorphism]:
    """Map every string through the block morphism; lengths scale by ``2(k + 1 - j)``."""
    morph = dna_morphism(inst.alphabet)
    return Instance(DNA, tuple(morph.h(s) for s in inst.strings)), morph


@dataclass(frozen=True)
class DnaDecoded:
    layout: tuple[tuple[int, bool], ...]
    text: Symbols

    @property
    def length(self) -> int:
        return len(self.text)


def decode_dna(inst: Instance, morph: DnaMorphism, layout: Layout) -> DnaDecoded:
    """Carry a layout for the encoded instance back to ``inst``; checks the length identity."""
    _check_layout(inst, layout)
    encoded = Instance(DNA, tuple(morph.h(s) for s in inst.strings))
    r = layout_text(encoded, layout)
    s = layout_text(inst, layout)
    if len(r) != morph.block_length * len(s):
        raise InvalidSolutionError(
            f"encoded length {len(r)} is not {morph.block_length} times decoded length {len(s)}"
        )
    return DnaDecoded(tuple((i, bool(f)) for i, f in layout), s)
