"""Searchers over encoded strings, plus their shift subroutines.

Five searchers share one outcome type:

* ``bf_search``: every alignment, left to right. The oracle.
* ``kmp_search_regular`` / ``bm_search_regular``: the classic linear /
  sublinear searchers, restricted to regular strings.
* ``kmp_indet_search`` / ``bm_indet_search``: their generalizations to
  indeterminate strings. Both fall back to recomputing shifts from the
  matched text window whenever indeterminacy makes precomputed tables
  untrustworthy, and both degrade gracefully to the classic behaviour on
  fully regular input.

All match positions are 1-based. The instrumentation counters make the
comparison-count and shift-safety properties testable:

* ``letter_comparisons``: letter-match tests inside the search loop;
* ``shifts_taken``: KMP counts shift-machinery invocations, the others
  count alignment advances;
* ``prefix_arrays_built`` / ``total_prefix_array_cells``: overlap strings
  built by the window-based shift subroutines and their total length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _pykernels
from ._backend import kernels
from .encoding import Alphabet, EncodedString
from .errors import (
    EmptyPattern,
    IndeterminateLetterPresent,
    PatternLongerThanText,
    UnknownAlgorithm,
)


@dataclass
class SearchOutcome:
    """Matches plus instrumentation counters for one search run."""

    matches: list[int] = field(default_factory=list)
    letter_comparisons: int = 0
    shifts_taken: int = 0
    prefix_arrays_built: int = 0
    total_prefix_array_cells: int = 0

    @property
    def match_count(self) -> int:
        return len(self.matches)


def _validate_pair(text: EncodedString, pattern: EncodedString) -> None:
    if len(pattern) == 0:
        raise EmptyPattern("cannot search for an empty pattern")
    if len(pattern) > len(text):
        raise PatternLongerThanText(
            f"pattern of {len(pattern)} letters cannot occur in a text of {len(text)}"
        )
    if text.alphabet.chars != pattern.alphabet.chars:
        raise ValueError(
            f"text alphabet {text.alphabet.chars!r} differs from pattern alphabet "
            f"{pattern.alphabet.chars!r}"
        )


def _require_regular(s: EncodedString, role: str) -> None:
    if not s.is_regular:
        raise IndeterminateLetterPresent(
            f"the {role} holds indeterminate letters; use the indet searchers"
        )


def bf_search(text: EncodedString, pattern: EncodedString) -> SearchOutcome:
    """Check every alignment with the letter-match relation."""
    _validate_pair(text, pattern)
    positions, comparisons, shifts = kernels.bf_search(text.values, pattern.values)
    return SearchOutcome(positions, comparisons, shifts, 0, 0)


def kmp_search_regular(text: EncodedString, pattern: EncodedString) -> SearchOutcome:
    """Classic prefix-based search; rejects indeterminate input."""
    _validate_pair(text, pattern)
    _require_regular(text, "text")
    _require_regular(pattern, "pattern")
    positions, comparisons, shifts = kernels.kmp_regular(text.values, pattern.values)
    return SearchOutcome(positions, comparisons, shifts, 0, 0)


def bm_search_regular(text: EncodedString, pattern: EncodedString) -> SearchOutcome:
    """Classic right-to-left search; rejects indeterminate input."""
    _validate_pair(text, pattern)
    _require_regular(text, "text")
    _require_regular(pattern, "pattern")
    positions, comparisons, shifts = kernels.bm_regular(
        text.values, pattern.values, text.alphabet.primes
    )
    return SearchOutcome(positions, comparisons, shifts, 0, 0)


def kmp_indet_search(text: EncodedString, pattern: EncodedString) -> SearchOutcome:
    """Prefix-based search over indeterminate strings."""
    _validate_pair(text, pattern)
    out = kernels.kmp_indet(text.values, pattern.values)
    return SearchOutcome(*out)


def bm_indet_search(text: EncodedString, pattern: EncodedString) -> SearchOutcome:
    """Right-to-left search over indeterminate strings."""
    _validate_pair(text, pattern)
    out = kernels.bm_indet(text.values, pattern.values, text.alphabet.primes)
    return SearchOutcome(*out)


#: Registry used by the CLI and the benchmark harness.
ALGORITHMS = {
    "bf": bf_search,
    "kmp": kmp_search_regular,
    "bm": bm_search_regular,
    "kmp-indet": kmp_indet_search,
    "bm-indet": bm_indet_search,
}


def resolve_algorithm(name: str):
    try:
        return ALGORITHMS[name]
    except KeyError:
        known = ", ".join(sorted(ALGORITHMS))
        raise UnknownAlgorithm(f"unknown algorithm {name!r} (known: {known})") from None


def compute_shift(
    window_has_indet: bool,
    text: EncodedString,
    pattern: EncodedString,
    matched_end: int,
    matched_len: int,
    border: list[int],
    regular_prefix_len: int,
) -> int:
    """Retained matched-prefix length for the next KMP alignment.

    ``matched_end`` is the 1-based text position ending the matched
    window, ``matched_len`` how many pattern letters matched, so the
    window is text[matched_end - matched_len + 1 .. matched_end].
    ``border`` is the border array of the pattern's regular prefix and
    ``regular_prefix_len`` that prefix's length. Returns how many
    pattern letters remain matched after the smallest safe shift;
    0 when nothing carries over (including matched_len <= 1 on the
    window path).
    """
    retained, _ = _pykernels.compute_shift_values(
        window_has_indet,
        text.to_list(),
        pattern.to_list(),
        matched_end,
        matched_len,
        border,
        regular_prefix_len,
    )
    return retained


def indet_gsr_shift(
    text: EncodedString, pattern: EncodedString, alignment: int, matched_len: int
) -> int:
    """Good-suffix shift recomputed from the matched text window.

    ``alignment`` is the 1-based position of the pattern's first letter,
    ``matched_len`` how many letters matched right to left (``m`` for a
    full match; at least 1). A single-letter pattern always shifts by 1.
    """
    if len(pattern) == 1:
        return 1
    shift, _ = _pykernels.gsr_shift_values(
        text.to_list(), pattern.to_list(), alignment, matched_len
    )
    return shift


@dataclass(frozen=True)
class BadCharTable:
    """Rightmost-occurrence table for the bad-character rule.

    ``rows[c][j]`` is the largest position k <= j (1-based, 0 for none)
    whose pattern letter contains the c-th alphabet character.
    """

    alphabet: Alphabet
    pattern_len: int
    rows: tuple[tuple[int, ...], ...]

    def rightmost(self, char: str, prefix_len: int) -> int:
        """Largest position <= prefix_len whose letter contains ``char``."""
        row = self.rows[self.alphabet.chars.index(char)]
        return row[prefix_len]


def build_bad_char_table(pattern: EncodedString, alphabet: Alphabet | None = None) -> BadCharTable:
    """Precompute rightmost occurrences per alphabet character; O(sigma*m)."""
    a = alphabet if alphabet is not None else pattern.alphabet
    rows = _pykernels.bad_char_table(pattern.to_list(), a.primes)
    return BadCharTable(a, len(pattern), tuple(tuple(r) for r in rows))


def bad_char_shift(table: BadCharTable, letter: int, mismatch_pos: int) -> int:
    """Shift from a mismatching text letter at pattern position ``mismatch_pos``.

    The letter's characters pick the nearest position to the left that
    could still match it; with no such position the whole prefix hops
    past the mismatch. Always at least 1 for mismatch_pos >= 1.
    """
    best = 0
    for c, p in enumerate(table.alphabet.primes):
        if letter % p == 0:
            d = table.rows[c][mismatch_pos - 1]
            if d > best:
                best = d
    return mismatch_pos - best
