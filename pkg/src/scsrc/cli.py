"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors, 2 on invalid or infeasible input.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .approx import RATIO_DENOM, RATIO_NUMER, describe, greedy_baseline, solve
from .errors import InvalidInputError, ScsrcError
from .exact import OracleBudget, opt_scsrc
from .generate import GeneratorParams, generate_instance
from .reductions import encode_dna, encode_scs
from .strings import Alphabet, Instance, normalize
from .textio import HEADER, format_instance, parse_header, parse_instance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2

# Spreads per-instance seeds of a bench batch apart from the batch seed.
SEED_STRIDE = 1_000_003

BENCH_COLUMNS = ("id", "m", "opt", "greedy", "alg", "lower_bound", "verdict")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InvalidInputError(f"cannot write {path}: {exc.strerror or exc}") from None


def _load(path: str) -> Instance:
    return parse_instance(_read_text(path))


def cmd_solve(args) -> int:
    sol = solve(_load(args.input), keep_traces=args.trace)
    if args.trace:
        sys.stderr.write(describe(sol) + "\n")
    _write(sol.render(), args.output)
    return EXIT_OK


def cmd_greedy(args) -> int:
    _write(greedy_baseline(_load(args.input)).render(), args.output)
    return EXIT_OK


def cmd_exact(args) -> int:
    inst = normalize(_load(args.input))
    sol = opt_scsrc(inst, OracleBudget(max_strings=args.max_strings))
    _write(f"{inst.alphabet.decode(sol.text)}\n# length {sol.length}\n", args.output)
    return EXIT_OK


def _gen_params(args, seed: int) -> GeneratorParams:
    return GeneratorParams(
        genome_length=args.genome_length,
        reads=args.reads,
        min_len=args.min_len,
        max_len=args.max_len,
        flip_prob=args.flip_prob,
        seed=seed,
    )


def cmd_gen(args) -> int:
    g = generate_instance(_gen_params(args, args.seed))
    comments = [f"seed {args.seed}", f"genome_length {g.genome_length}"]
    _write(format_instance(g.instance, comments), args.output)
    return EXIT_OK


def _plain_alphabet(text: str) -> tuple[Alphabet, list[tuple[int, str]]]:
    """Glyphs come from a header if present, else from the sorted symbols seen."""
    declared = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(HEADER):
            if declared is not None or lines:
                raise InvalidInputError(f"line {lineno}: alphabet header must come first")
            declared = parse_header(line, lineno)
            continue
        if not line.startswith("#"):
            lines.append((lineno, line))
    if declared is not None:
        return Alphabet.identity(declared.size, declared.glyphs), lines
    glyphs = sorted({ch for _, line in lines for ch in line})
    if not glyphs:
        raise InvalidInputError("input contains no strings")
    return Alphabet.identity(len(glyphs), glyphs), lines


def cmd_encode_scs(args) -> int:
    alphabet, lines = _plain_alphabet(_read_text(args.input))
    strings = []
    for lineno, line in lines:
        try:
            strings.append(alphabet.encode(line))
        except InvalidInputError as exc:
            raise InvalidInputError(f"line {lineno}: {exc}") from None
    inst, _ = encode_scs(strings, alphabet)
    _write(format_instance(inst, header=True), args.output)
    return EXIT_OK


def cmd_encode_dna(args) -> int:
    inst, morph = encode_dna(_load(args.input))
    comments = [f"block_length {morph.block_length}"]
    _write(format_instance(inst, comments, header=True), args.output)
    return EXIT_OK


@dataclass(frozen=True)
class BenchRow:
    id: int
    m: int
    opt: Optional[int]
    greedy: int
    alg: int
    lower_bound: int

    @property
    def verdict(self) -> str:
        if self.opt is None:
            return "n/a"
        ok = RATIO_DENOM * self.alg <= RATIO_NUMER * self.opt and self.lower_bound <= self.opt <= self.alg
        return "ok" if ok else "VIOLATION"

    def cells(self) -> list[str]:
        opt = "-" if self.opt is None else str(self.opt)
        return [str(self.id), str(self.m), opt, str(self.greedy), str(self.alg), str(self.lower_bound), self.verdict]


def bench_row(task: tuple[int, GeneratorParams, int]) -> BenchRow:
    idx, params, max_strings = task
    inst = generate_instance(params).instance
    sol = solve(inst)
    opt = opt_scsrc(inst, OracleBudget(max_strings=max_strings)).length if len(inst) <= max_strings else None
    return BenchRow(idx, len(inst), opt, greedy_baseline(inst).length, sol.length, sol.stats.lower_bound)


def run_bench(tasks: Sequence[tuple[int, GeneratorParams, int]], jobs: int = 1) -> list[BenchRow]:
    if jobs <= 1:
        return [bench_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(bench_row, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def format_bench(rows: Sequence[BenchRow]) -> str:
    out = ["\t".join(BENCH_COLUMNS)]
    out += ["\t".join(r.cells()) for r in rows]
    checked = [r for r in rows if r.opt is not None]
    out.append(f"# instances {len(rows)}")
    out.append(f"# with_opt {len(checked)}")
    out.append(f"# violations {sum(r.verdict == 'VIOLATION' for r in rows)}")
    if checked:
        worst = max(Fraction(r.alg, r.opt) for r in checked)
        out.append(f"# max_ratio {float(worst):.4f}")
    return "\n".join(out) + "\n"


def cmd_bench(args) -> int:
    if args.instances < 1:
        raise UsageError("bench: --instances must be positive")
    if args.jobs < 1:
        raise UsageError("bench: --jobs must be positive")
    budget = OracleBudget(max_strings=args.max_strings)
    tasks = [
        (i, _gen_params(args, args.seed * SEED_STRIDE + i), budget.max_strings)
        for i in range(args.instances)
    ]
    rows = run_bench(tasks, args.jobs)
    _write(format_bench(rows), args.output)
    if args.figures:
        from .plotting import bench_figures

        for p in bench_figures(rows, Path(args.figures)):
            sys.stderr.write(f"wrote {p}\n")
    return EXIT_OK


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="instance file, or - for stdin")
    p.add_argument("-o", "--output", help="output file (default stdout)")


def _add_gen(p: argparse.ArgumentParser) -> None:
    d = GeneratorParams()
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--genome-length", type=int, default=d.genome_length)
    p.add_argument("--reads", type=int, default=d.reads)
    p.add_argument("--min-len", type=int, default=d.min_len)
    p.add_argument("--max-len", type=int, default=d.max_len)
    p.add_argument("--flip-prob", type=float, default=d.flip_prob)
    p.add_argument("-o", "--output", help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scsrc", description="Shortest common superstring with reverse complements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="8/3-approximate superstring")
    _add_io(p)
    p.add_argument("--trace", action="store_true", help="dump pipeline internals to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="optimal superstring by exhaustive search")
    _add_io(p)
    p.add_argument("--max-strings", type=int, default=OracleBudget().max_strings)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("greedy", help="greedy overlap-merging baseline")
    _add_io(p)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("gen", help="random reads from a random genome")
    _add_gen(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode-scs", help="plain SCS instance to SCS-RC over a doubled alphabet")
    _add_io(p)
    p.set_defaults(func=cmd_encode_scs)

    p = sub.add_parser("encode-dna", help="SCS-RC instance over any alphabet to DNA")
    _add_io(p)
    p.set_defaults(func=cmd_encode_dna)

    p = sub.add_parser("bench", help="compare solvers on generated batches")
    _add_gen(p)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--max-strings", type=int, default=OracleBudget().max_strings, help="exact oracle budget")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figures", metavar="DIR", help="write PNG figures to DIR")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except ScsrcError as exc:
        sys.stderr.write(f"scsrc: error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
