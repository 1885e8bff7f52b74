"""Command-line interface.

Subcommands:

* ``search``: find a pattern in a text, one 1-based position per line.
  Exit 0 when at least one match was found, 1 when none (grep
  convention), 2 on usage or parse errors.
* ``verify``: run random instances through the brute-force oracle and
  both indeterminate searchers and report agreement.
* ``gen``: write a random instance to files in bracket syntax.
* ``bench``: time searchers over an instance grid and emit CSV.

When ``--seed`` is omitted the ``INDET_SEED`` environment variable is
used before the built-in default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

import numpy as np

from . import benchgen, matchers, textio
from .benchgen import GenSpec
from .encoding import build_alphabet
from .errors import IndetMatchError
from .matchers import ALGORITHMS

USAGE_ERROR = 2


def _seed_from_env(default: int) -> int:
    raw = os.environ.get("INDET_SEED")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise IndetMatchError(f"INDET_SEED must be an integer, got {raw!r}") from None


def _read_source(inline: str | None, path: str | None, what: str) -> str:
    if (inline is None) == (path is None):
        raise IndetMatchError(f"provide exactly one of --{what} and --{what}-file")
    if inline is not None:
        return inline
    with open(path, "rb") as handle:
        return handle.read().decode("utf-8")


def _add_search(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("search", help="search a pattern in a text")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="kmp-indet")
    p.add_argument("--format", choices=("bracket", "iupac"), default="bracket")
    p.add_argument("--alphabet", default="acgt", help="alphabet characters in order (bracket format)")
    p.add_argument("--pattern", help="pattern, inline")
    p.add_argument("--pattern-file", help="pattern, read from a file")
    p.add_argument("--text", help="text, inline")
    p.add_argument("--text-file", help="text, read from a file")
    p.add_argument(
        "--output",
        choices=("positions", "csv", "json-lines"),
        default="positions",
        help="positions: one per line; csv: header + rows; json-lines: one object per line",
    )
    p.set_defaults(func=_cmd_search)


def _cmd_search(args: argparse.Namespace) -> int:
    alphabet = textio.DNA_ALPHABET if args.format == "iupac" else build_alphabet(args.alphabet)
    text = textio.encode_text(_read_source(args.text, args.text_file, "text"), alphabet, args.format)
    pattern = textio.encode_text(
        _read_source(args.pattern, args.pattern_file, "pattern"), alphabet, args.format
    )
    outcome = ALGORITHMS[args.algo](text, pattern)
    if args.output == "csv":
        print("position")
    for pos in outcome.matches:
        if args.output == "json-lines":
            print(json.dumps({"position": pos}))
        else:
            print(pos)
    return 0 if outcome.matches else 1


def _add_verify(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("verify", help="cross-check searchers against the brute-force oracle")
    p.add_argument("-n", "--instances", type=int, default=1000)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_verify)


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = _seed_from_env(0) if args.seed is None else args.seed
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 0xC0FFEE])))
    checked = 0
    for k in range(args.instances):
        n = int(rng.integers(1, args.max_n + 1))
        m = int(rng.integers(1, min(n, args.max_m) + 1))
        k1 = int(rng.integers(0, n + 1))
        k2 = int(rng.integers(0, m + 1))
        spec = GenSpec(
            sigma=args.sigma, n=n, m=m, k1=k1, k2=k2,
            seed=benchgen.derive_trial_seed(seed, k),
        )
        text, pattern = benchgen.generate(spec)
        expected = matchers.bf_search(text, pattern).matches
        for name in ("kmp-indet", "bm-indet"):
            got = ALGORITHMS[name](text, pattern).matches
            if got != expected:
                print(f"{checked}/{args.instances} agree", file=sys.stderr)
                print(f"FAIL {name} on {spec}")
                print(f"text    {textio.serialize_bracket(textio.from_encoded(text))}")
                print(f"pattern {textio.serialize_bracket(textio.from_encoded(pattern))}")
                print(f"bf       -> {expected}")
                print(f"{name} -> {got}")
                return 1
        checked += 1
    print(f"{checked}/{args.instances} agree")
    return 0


def _add_gen(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("gen", help="write a random instance in bracket syntax")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k1", type=int, default=0)
    p.add_argument("--k2", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--text-out", required=True)
    p.add_argument("--pattern-out", required=True)
    p.set_defaults(func=_cmd_gen)


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = _seed_from_env(0) if args.seed is None else args.seed
    spec = GenSpec(sigma=args.sigma, n=args.n, m=args.m, k1=args.k1, k2=args.k2, seed=seed)
    text, pattern = benchgen.generate(spec)
    with open(args.text_out, "w", encoding="utf-8") as handle:
        handle.write(textio.serialize_bracket(textio.from_encoded(text)) + "\n")
    with open(args.pattern_out, "w", encoding="utf-8") as handle:
        handle.write(textio.serialize_bracket(textio.from_encoded(pattern)) + "\n")
    return 0


def _parse_case(raw: str) -> tuple[int, int, int, int, int]:
    parts = raw.split(":")
    if len(parts) != 5:
        raise IndetMatchError(f"--case wants sigma:n:m:k1:k2, got {raw!r}")
    try:
        sigma, n, m, k1, k2 = (int(v) for v in parts)
    except ValueError:
        raise IndetMatchError(f"--case wants five integers, got {raw!r}") from None
    return sigma, n, m, k1, k2


def _add_bench(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("bench", help="time searchers over an instance grid, emit CSV")
    p.add_argument(
        "--case",
        action="append",
        required=True,
        metavar="SIGMA:N:M:K1:K2",
        help="instance shape; repeat for a grid",
    )
    p.add_argument("--algos", default=",".join(benchgen.DEFAULT_ALGORITHMS))
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=_cmd_bench)


def _cmd_bench(args: argparse.Namespace) -> int:
    seed = _seed_from_env(0) if args.seed is None else args.seed
    grid = [GenSpec(*(_parse_case(raw)), seed=seed) for raw in args.case]
    algorithms = [a for a in args.algos.split(",") if a]
    records = benchgen.run_benchmark(grid, algorithms, trials=args.trials)
    if args.out is None:
        benchgen.write_csv(records, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            benchgen.write_csv(records, handle)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indetmatch",
        description="pattern matching on indeterminate strings via prime-product encoding",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_search(sub)
    _add_verify(sub)
    _add_gen(sub)
    _add_bench(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IndetMatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
