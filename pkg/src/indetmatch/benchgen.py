"""Deterministic instance generation and the benchmark harness.

``generate`` is a pure function of its :class:`GenSpec`: the same spec
always yields byte-identical instances. Randomness comes from numpy's
PCG64 generator seeded through ``SeedSequence``; the benchmark harness
derives the seed for trial t of a spec as
``SeedSequence([spec.seed, t]).generate_state(1)[0]`` so trials are
independent yet reproducible from the one grid seed.

Benchmark rows are written as CSV with the fixed header
``algo,sigma,n,m,k1,k2,seed,trial,time_s,matches,comparisons``.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, replace
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from .encoding import PRIMES, Alphabet, EncodedString, build_alphabet
from .errors import InvalidSpec, MatchCountMismatch
from .matchers import resolve_algorithm

CSV_HEADER = "algo,sigma,n,m,k1,k2,seed,trial,time_s,matches,comparisons"

#: Default alphabets for generated instances: the first sigma letters of this run.
_GEN_CHARS = "abcdefghi"

_ALPHABET_CACHE: dict[int, Alphabet] = {}

# products[mask] = product of the primes selected by the bits of mask,
# so a random subset draw is one table lookup.
_MASK_PRODUCTS = np.ones(1 << 9, dtype=np.uint32)
for _bit in range(9):
    _half = 1 << _bit
    _MASK_PRODUCTS[_half : 2 * _half] = _MASK_PRODUCTS[:_half] * np.uint32(PRIMES[_bit])

_POPCOUNT = np.array([bin(v).count("1") for v in range(1 << 9)], dtype=np.uint8)


@dataclass(frozen=True)
class GenSpec:
    """Shape of one random instance.

    ``k1`` positions of the text and ``k2`` of the pattern hold
    indeterminate letters (uniform subsets of size 2..sigma at distinct
    uniform positions); every other position holds a uniform single
    character.
    """

    sigma: int
    n: int
    m: int
    k1: int
    k2: int
    seed: int

    def validate(self) -> None:
        if not 2 <= self.sigma <= 9:
            raise InvalidSpec(f"sigma must be 2..9, got {self.sigma}")
        if self.n < 0 or self.m < 0 or self.m > self.n:
            raise InvalidSpec(f"need 0 <= m <= n, got n={self.n} m={self.m}")
        if not 0 <= self.k1 <= self.n:
            raise InvalidSpec(f"need 0 <= k1 <= n, got k1={self.k1}")
        if not 0 <= self.k2 <= self.m:
            raise InvalidSpec(f"need 0 <= k2 <= m, got k2={self.k2}")
        if not 0 <= self.seed < 2**64:
            raise InvalidSpec(f"seed must fit in 64 bits, got {self.seed}")


def _gen_alphabet(sigma: int) -> Alphabet:
    a = _ALPHABET_CACHE.get(sigma)
    if a is None:
        a = build_alphabet(_GEN_CHARS[:sigma])
        _ALPHABET_CACHE[sigma] = a
    return a


def _subset_products(rng: np.random.Generator, count: int, sigma: int) -> np.ndarray:
    """``count`` uniform subsets of size >= 2, by rejection on bitmasks."""
    out = np.empty(count, dtype=np.uint32)
    filled = 0
    while filled < count:
        draw = rng.integers(1, 1 << sigma, size=count - filled, dtype=np.int64)
        keep = draw[_POPCOUNT[draw] >= 2]
        out[filled : filled + keep.size] = _MASK_PRODUCTS[keep]
        filled += keep.size
    return out


def _random_letters(rng: np.random.Generator, length: int, sigma: int, k_indet: int) -> np.ndarray:
    primes = np.array(PRIMES[:sigma], dtype=np.uint32)
    values = primes[rng.integers(0, sigma, size=length)]
    if k_indet:
        positions = rng.choice(length, size=k_indet, replace=False)
        values[positions] = _subset_products(rng, k_indet, sigma)
    return values


def generate(spec: GenSpec) -> tuple[EncodedString, EncodedString]:
    """Build the (text, pattern) instance a spec describes.

    Draw order is fixed and documented so outputs stay reproducible:
    text singletons, text indeterminate positions, text subsets, then
    the same three draws for the pattern.
    """
    spec.validate()
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed)))
    alphabet = _gen_alphabet(spec.sigma)
    text = _random_letters(rng, spec.n, spec.sigma, spec.k1)
    pattern = _random_letters(rng, spec.m, spec.sigma, spec.k2)
    return (
        EncodedString.from_values(text, alphabet, validate=False),
        EncodedString.from_values(pattern, alphabet, validate=False),
    )


def derive_trial_seed(seed: int, trial: int) -> int:
    """Per-trial instance seed, mixed so neighbouring trials decorrelate."""
    return int(np.random.SeedSequence([seed, trial]).generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class BenchRecord:
    """One timed search: instance shape, derived seed, trial, results."""

    algo: str
    sigma: int
    n: int
    m: int
    k1: int
    k2: int
    seed: int
    trial: int
    time_s: float
    matches: int
    comparisons: int

    def row(self) -> list:
        return [
            self.algo, self.sigma, self.n, self.m, self.k1, self.k2,
            self.seed, self.trial, repr(self.time_s), self.matches, self.comparisons,
        ]


DEFAULT_ALGORITHMS = ("bf", "kmp-indet", "bm-indet")


def run_benchmark(
    grid: Iterable[GenSpec],
    algorithms: Sequence[str] = DEFAULT_ALGORITHMS,
    trials: int = 1,
    warmup: bool = True,
) -> Iterator[BenchRecord]:
    """Time every algorithm on every (spec, trial) instance.

    One untimed warmup run per (instance, algorithm) is excluded from
    the measurement; ``time.perf_counter`` (monotonic) brackets a single
    timed run. The searchers' match counts are cross-checked per
    instance and a disagreement raises :class:`MatchCountMismatch`
    rather than silently recording nonsense.
    """
    searchers = [(name, resolve_algorithm(name)) for name in algorithms]
    if trials < 1:
        raise InvalidSpec(f"trials must be >= 1, got {trials}")
    for spec in grid:
        spec.validate()
        for trial in range(trials):
            inst_seed = derive_trial_seed(spec.seed, trial)
            text, pattern = generate(replace(spec, seed=inst_seed))
            counts: dict[str, int] = {}
            for name, search in searchers:
                if warmup:
                    search(text, pattern)
                start = time.perf_counter()
                outcome = search(text, pattern)
                elapsed = time.perf_counter() - start
                counts[name] = outcome.match_count
                yield BenchRecord(
                    algo=name,
                    sigma=spec.sigma,
                    n=spec.n,
                    m=spec.m,
                    k1=spec.k1,
                    k2=spec.k2,
                    seed=inst_seed,
                    trial=trial,
                    time_s=elapsed,
                    matches=outcome.match_count,
                    comparisons=outcome.letter_comparisons,
                )
            if len(set(counts.values())) > 1:
                raise MatchCountMismatch(
                    f"searchers disagree on {spec} trial {trial}: {counts}"
                )


def write_csv(records: Iterable[BenchRecord], out: IO[str]) -> int:
    """Write records under the fixed header; returns the row count."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    count = 0
    for record in records:
        writer.writerow(record.row())
        count += 1
    return count
