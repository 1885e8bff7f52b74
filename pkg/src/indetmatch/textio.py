"""Text syntaxes for indeterminate strings.

Two formats are supported:

* bracket: one character per regular letter, ``[...]`` for an
  indeterminate one, e.g. ``a[ac]g[at]t[cg]``. Whitespace and line
  breaks between letters are ignored.
* iupac: the fifteen nucleotide codes over {a, c, g, t}, case
  insensitive; lines starting with ``>`` (FASTA headers) are skipped.

``SymbolicString`` is the parsed, human-readable form; ``to_encoded`` /
``from_encoded`` convert to and from the integer encoding the searchers
run on. Serialization is canonical: members in alphabet order, brackets
only for sets of two or more.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encoding import Alphabet, EncodedString, build_alphabet, decode_letter, encode_letter
from .errors import (
    DuplicateInBracket,
    EmptyBracket,
    UnbalancedBracket,
    UnknownCharacter,
    UnknownIupacCode,
)

#: The nucleotide alphabet used by the iupac format.
DNA_ALPHABET = build_alphabet("acgt")

IUPAC_CODES = {
    "a": "a",
    "c": "c",
    "g": "g",
    "t": "t",
    "r": "ag",
    "y": "ct",
    "s": "cg",
    "w": "at",
    "k": "gt",
    "m": "ac",
    "b": "cgt",
    "d": "agt",
    "h": "act",
    "v": "acg",
    "n": "acgt",
}


@dataclass(frozen=True)
class SymbolicString:
    """A parsed indeterminate string: one character set per position."""

    letters: tuple[frozenset[str], ...]
    chars: str

    def __len__(self) -> int:
        return len(self.letters)


def _as_text(data: str | bytes | bytearray) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8")
    return data


def parse_bracket(data: str | bytes, alphabet: Alphabet) -> SymbolicString:
    """Parse bracket syntax over the given alphabet."""
    text = _as_text(data)
    letters: list[frozenset[str]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "]":
            raise UnbalancedBracket(f"']' without '[' at offset {i}")
        if ch == "[":
            end = text.find("]", i + 1)
            if end < 0:
                raise UnbalancedBracket(f"'[' at offset {i} is never closed")
            members: list[str] = []
            for c in text[i + 1 : end]:
                if c.isspace():
                    continue
                if c == "[":
                    raise UnbalancedBracket(f"nested '[' at offset {i}")
                if c not in alphabet._index:
                    raise UnknownCharacter(f"{c!r} is not in alphabet {alphabet.chars!r}")
                if c in members:
                    raise DuplicateInBracket(f"{c!r} repeated inside brackets at offset {i}")
                members.append(c)
            if not members:
                raise EmptyBracket(f"'[]' at offset {i} holds no characters")
            letters.append(frozenset(members))
            i = end + 1
            continue
        if ch not in alphabet._index:
            raise UnknownCharacter(f"{ch!r} is not in alphabet {alphabet.chars!r}")
        letters.append(frozenset(ch))
        i += 1
    return SymbolicString(tuple(letters), alphabet.chars)


def parse_iupac(data: str | bytes) -> SymbolicString:
    """Parse IUPAC nucleotide codes (case insensitive, FASTA headers skipped)."""
    text = _as_text(data)
    letters: list[frozenset[str]] = []
    for line in text.splitlines():
        if line.startswith(">"):
            continue
        for ch in line:
            if ch.isspace():
                continue
            members = IUPAC_CODES.get(ch.lower())
            if members is None:
                raise UnknownIupacCode(f"{ch!r} is not an IUPAC nucleotide code")
            letters.append(frozenset(members))
    return SymbolicString(tuple(letters), DNA_ALPHABET.chars)


def serialize_bracket(s: SymbolicString) -> str:
    """Canonical bracket form: alphabet order, brackets for sets of >= 2."""
    order = {c: k for k, c in enumerate(s.chars)}
    parts: list[str] = []
    for letter in s.letters:
        members = "".join(sorted(letter, key=order.__getitem__))
        parts.append(members if len(members) == 1 else f"[{members}]")
    return "".join(parts)


def to_encoded(s: SymbolicString, alphabet: Alphabet) -> EncodedString:
    """Encode a parsed string over the given alphabet."""
    values = [encode_letter(letter, alphabet) for letter in s.letters]
    return EncodedString.from_values(values, alphabet, validate=False)


def from_encoded(e: EncodedString) -> SymbolicString:
    """Decode back to character sets (for display and serialization)."""
    letters = tuple(decode_letter(v, e.alphabet) for v in e.values.tolist())
    return SymbolicString(letters, e.alphabet.chars)


def encode_text(data: str | bytes, alphabet: Alphabet, fmt: str = "bracket") -> EncodedString:
    """Parse ``data`` in the named format and encode it in one step."""
    if fmt == "bracket":
        return to_encoded(parse_bracket(data, alphabet), alphabet)
    if fmt == "iupac":
        return to_encoded(parse_iupac(data), DNA_ALPHABET)
    raise ValueError(f"unknown format {fmt!r} (use 'bracket' or 'iupac')")
