"""Random strand-ambiguous read sets sampled from a random genome."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidInputError
from .strings import DNA, Instance, Symbols, normalize, rc


@dataclass(frozen=True)
class GeneratorParams:
    genome_length: int = 40
    reads: int = 6
    min_len: int = 4
    max_len: int = 10
    flip_prob: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.genome_length < 1 or self.reads < 1 or self.min_len < 1:
            raise InvalidInputError("genome length, read count and read length must be positive")
        if self.min_len > self.max_len:
            raise InvalidInputError(f"min read length {self.min_len} exceeds max {self.max_len}")
        if self.max_len > self.genome_length:
            raise InvalidInputError(
                f"read length {self.max_len} exceeds genome length {self.genome_length}"
            )
        if not 0.0 <= self.flip_prob <= 1.0:
            raise InvalidInputError("flip probability must lie in [0, 1]")
        if self.seed < 0:
            raise InvalidInputError("seed must be nonnegative")


@dataclass(frozen=True)
class Generated:
    genome: Symbols
    raw: Instance
    instance: Instance

    @property
    def genome_length(self) -> int:
        """Length of a known superstring; an upper reference, not the optimum."""
        return len(self.genome)


def generate_instance(params: GeneratorParams) -> Generated:
    rng = random.Random(params.seed)
    genome = tuple(rng.randrange(4) for _ in range(params.genome_length))
    reads = []
    for _ in range(params.reads):
        n = rng.randint(params.min_len, params.max_len)
        start = rng.randint(0, params.genome_length - n)
        read = genome[start : start + n]
        if rng.random() < params.flip_prob:
            read = rc(read, DNA)
        reads.append(read)
    raw = Instance(DNA, tuple(reads))
    return Generated(genome, raw, normalize(raw))
