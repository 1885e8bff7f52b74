"""Prime-product encoding of indeterminate strings.

An indeterminate (degenerate) string has, at each position, a nonempty
subset of a small alphabet rather than a single character. Two letters
match when their subsets intersect; the relation is reflexive and
symmetric but not transitive.

The encoding assigns the j-th alphabet character the j-th prime
(2, 3, 5, ...) and represents a letter by the product of the primes of
its members. Set intersection then turns into arithmetic: two encoded
letters match exactly when their gcd exceeds 1. With at most nine
characters every letter fits comfortably in 32 bits; the largest value,
the product of the first nine primes, is 223 092 870.

The integer values also induce a total order on letters that interleaves
regular and indeterminate ones, e.g. over the DNA alphabet
a < g < {a,c} < t because 2 < 5 < 6 < 7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    AlphabetTooLarge,
    DuplicateCharacter,
    EmptySet,
    NotInAlphabet,
    UnknownCharacter,
)

#: The primes assigned to alphabet characters, in character order.
PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)

#: Hard cap on the alphabet size (one prime per character).
MAX_SIGMA = len(PRIMES)

#: Product of all nine primes; every encoded letter divides it.
WORD_LIMIT = 223_092_870

# v <= 23 and prime  <=>  v encodes a single character.
_PRIME_FLAGS = tuple(v in PRIMES for v in range(PRIMES[-1] + 1))

_PRIME_FLAGS_NP = np.array(_PRIME_FLAGS, dtype=bool)


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet of up to nine distinct characters.

    ``primes[j]`` is the prime assigned to ``chars[j]``; ``max_product``
    is the product of all of them (the encoding of the full set).
    """

    chars: str
    primes: tuple[int, ...]
    max_product: int
    _index: dict[str, int] = field(repr=False, compare=False)

    @property
    def sigma(self) -> int:
        return len(self.chars)

    def prime_of(self, char: str) -> int:
        try:
            return self.primes[self._index[char]]
        except KeyError:
            raise UnknownCharacter(f"character {char!r} is not in alphabet {self.chars!r}") from None


def build_alphabet(chars: str | Iterable[str]) -> Alphabet:
    """Build an :class:`Alphabet` from an ordered run of characters.

    Raises :class:`AlphabetTooLarge` beyond nine characters and
    :class:`DuplicateCharacter` on repeats. Brackets and whitespace are
    rejected because they carry meaning in the text syntax.
    """
    chars = "".join(chars)
    if not chars:
        raise EmptySet("an alphabet needs at least one character")
    if len(chars) > MAX_SIGMA:
        raise AlphabetTooLarge(f"{len(chars)} characters declared, at most {MAX_SIGMA} supported")
    index: dict[str, int] = {}
    for pos, ch in enumerate(chars):
        if ch in index:
            raise DuplicateCharacter(f"character {ch!r} declared twice")
        if ch in "[]" or ch.isspace() or not ch.isprintable():
            raise UnknownCharacter(f"character {ch!r} cannot be an alphabet character")
        index[ch] = pos
    primes = PRIMES[: len(chars)]
    return Alphabet(chars=chars, primes=primes, max_product=math.prod(primes), _index=index)


def encode_letter(subset: Iterable[str], alphabet: Alphabet) -> int:
    """Encode a nonempty character subset as a product of primes."""
    members = set(subset)
    if not members:
        raise EmptySet("a letter must contain at least one character")
    value = 1
    for ch in members:
        value *= alphabet.prime_of(ch)
    return value


def decode_letter(value: int, alphabet: Alphabet) -> frozenset[str]:
    """Recover the character subset behind an encoded letter.

    Raises :class:`NotInAlphabet` unless ``value`` is a product of
    distinct primes assigned by ``alphabet`` (equivalently: a divisor
    greater than one of ``alphabet.max_product``).
    """
    if value < 2 or alphabet.max_product % value != 0:
        raise NotInAlphabet(f"{value} does not encode a letter over {alphabet.chars!r}")
    members = [ch for ch, p in zip(alphabet.chars, alphabet.primes) if value % p == 0]
    return frozenset(members)


def letters_match(u: int, v: int) -> bool:
    """True when the letters share a character (their gcd exceeds 1)."""
    return math.gcd(u, v) > 1


def is_indet(value: int) -> bool:
    """True when the encoded letter stands for two or more characters.

    A letter is regular exactly when its value is one of the nine primes,
    so a 24-entry primality table decides it in O(1).
    """
    return value > 23 or not _PRIME_FLAGS[value]


def compare_letters(u: int, v: int) -> int:
    """Total order on encoded letters by integer value: -1, 0 or 1."""
    return (u > v) - (u < v)


class EncodedString:
    """An immutable encoded string plus the alphabet it was encoded over.

    The letter values live in a read-only ``numpy.uint32`` array so that
    the search kernels can walk them without conversion. Indexing is
    0-based like any Python sequence; match positions reported by the
    searchers are 1-based.
    """

    __slots__ = ("values", "alphabet")

    def __init__(self, values: np.ndarray, alphabet: Alphabet):
        self.values = values
        self.alphabet = alphabet

    @classmethod
    def from_values(cls, values: Iterable[int], alphabet: Alphabet, validate: bool = True) -> "EncodedString":
        arr = np.ascontiguousarray(values, dtype=np.uint32)
        if arr.ndim != 1:
            raise ValueError("letter values must form a one-dimensional sequence")
        if validate and arr.size:
            # Divisors > 1 of the (squarefree) alphabet product are exactly
            # the valid letters, so one vectorized pass checks everything.
            divisors = np.maximum(arr.astype(np.int64), 1)
            bad = (arr < 2) | (alphabet.max_product % divisors != 0)
            if bad.any():
                where = int(np.flatnonzero(bad)[0])
                raise NotInAlphabet(
                    f"value {int(arr[where])} at position {where + 1} does not encode "
                    f"a letter over {alphabet.chars!r}"
                )
        arr.flags.writeable = False
        return cls(arr, alphabet)

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, idx: int) -> int:
        return int(self.values[idx])

    def __iter__(self) -> Iterator[int]:
        return iter(self.values.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EncodedString):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.alphabet.chars, self.values.tobytes()))

    def __repr__(self) -> str:
        shown = self.values[:12].tolist()
        tail = ", ..." if len(self) > 12 else ""
        return f"EncodedString({shown}{tail}, alphabet={self.alphabet.chars!r})"

    @property
    def is_regular(self) -> bool:
        """True when no position holds an indeterminate letter."""
        vals = self.values
        if vals.size == 0:
            return True
        if int(vals.max(initial=0)) > 23:
            return False
        return bool(_PRIME_FLAGS_NP[vals].all())

    def to_list(self) -> list[int]:
        return self.values.tolist()
