"""Plain-text instance format.

One string per line, one glyph per symbol. An optional first line
``#alphabet a:b,c:c`` declares complement pairs; without it the DNA alphabet
is used. Other lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import InvalidInputError
from .strings import DNA, Alphabet, Instance

HEADER = "#alphabet"


def parse_header(line: str, lineno: int = 1) -> Alphabet:
    body = line[len(HEADER):].strip()
    if not body:
        raise InvalidInputError(f"line {lineno}: empty alphabet header")
    pairs = []
    for item in body.split(","):
        parts = item.strip().split(":")
        if len(parts) != 2 or any(len(p) != 1 or p.isspace() for p in parts):
            raise InvalidInputError(f"line {lineno}: malformed complement pair {item.strip()!r}")
        pairs.append((parts[0], parts[1]))
    try:
        alphabet = Alphabet.from_pairs(pairs)
    except InvalidInputError as exc:
        raise InvalidInputError(f"line {lineno}: {exc}") from None
    if _same_as_dna(alphabet):
        return DNA
    return alphabet


def _same_as_dna(a: Alphabet) -> bool:
    if a.glyphs is None or sorted(a.glyphs) != sorted(DNA.glyphs):
        return False
    partner = {"A": "T", "T": "A", "C": "G", "G": "C"}
    return all(a.glyphs[a.complement[x]] == partner[a.glyphs[x]] for x in range(a.size))


def parse_instance(text: str, alphabet: Optional[Alphabet] = None) -> Instance:
    """Parse instance text; an explicit ``alphabet`` overrides the header and the DNA default."""
    lines = text.splitlines()
    strings = []
    first = True
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(HEADER):
            if not first:
                raise InvalidInputError(f"line {lineno}: alphabet header must come first")
            declared = parse_header(line, lineno)
            alphabet = alphabet or declared
            first = False
            continue
        first = False
        if line.startswith("#"):
            continue
        strings.append((lineno, line))
    alphabet = alphabet or DNA
    encoded = []
    for lineno, line in strings:
        try:
            encoded.append(alphabet.encode(line))
        except InvalidInputError as exc:
            raise InvalidInputError(f"line {lineno}: {exc}") from None
    return Instance(alphabet, tuple(encoded))


def read_instance(path: Union[str, Path], alphabet: Optional[Alphabet] = None) -> Instance:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from None
    return parse_instance(text, alphabet)


def format_header(alphabet: Alphabet) -> str:
    if alphabet.glyphs is None:
        raise InvalidInputError("alphabet has no glyphs to write")
    g = alphabet.glyphs
    return HEADER + " " + ",".join(f"{g[x]}:{g[y]}" for x, y in alphabet.pairs())


def format_instance(inst: Instance, comments: Iterable[str] = (), header: Optional[bool] = None) -> str:
    """Render an instance; the header is written unless the alphabet is DNA (or ``header`` forces it)."""
    if header is None:
        header = inst.alphabet != DNA
    lines = [format_header(inst.alphabet)] if header else []
    lines += [f"# {c}" for c in comments]
    lines += inst.texts()
    return "\n".join(lines) + "\n"
