"""Border and prefix arrays for encoded strings.

The prefix array generalizes to indeterminate strings because each entry
is grown by direct letter-by-letter extension; the border array does not
(borders rely on transitivity), so it is restricted to regular strings.
Entry ``k`` of a returned list describes the 1-based position ``k + 1``.
"""

from __future__ import annotations

from ._backend import kernels
from ._pykernels import is_indet_value
from .encoding import EncodedString
from .errors import IndeterminateLetterPresent


def prefix_array_indet(s: EncodedString) -> list[int]:
    """out[k]: longest match between the whole string and its suffix
    starting at 1-based position k + 1; out[0] is len(s).

    Works on any encoded string. Quadratic in the worst case.
    """
    return kernels.prefix_array(s.values)


def border_array_regular(s: EncodedString, length: int | None = None) -> list[int]:
    """Classic border (failure) array of the prefix of ``s`` of the given
    length (default: all of it).

    Raises :class:`IndeterminateLetterPresent` when that prefix holds an
    indeterminate letter; equality-based borders are not meaningful there.
    """
    n = len(s)
    if length is None:
        length = n
    if not 0 <= length <= n:
        raise ValueError(f"length {length} out of range for a string of {n} letters")
    head = s.values[:length]
    for pos, v in enumerate(head.tolist()):
        if is_indet_value(v):
            raise IndeterminateLetterPresent(
                f"indeterminate letter at position {pos + 1}; border arrays need a regular string"
            )
    return kernels.border_array(head)


def longest_regular_prefix_len(s: EncodedString) -> int:
    """Number of leading regular letters (0 if the first is indeterminate)."""
    count = 0
    for v in s.values.tolist():
        if is_indet_value(v):
            break
        count += 1
    return count


def longest_regular_suffix_len(s: EncodedString) -> int:
    """Number of trailing regular letters (0 if the last is indeterminate)."""
    count = 0
    for v in reversed(s.values.tolist()):
        if is_indet_value(v):
            break
        count += 1
    return count
