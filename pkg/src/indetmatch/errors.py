"""Exception types raised by the public API."""


class IndetMatchError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetTooLarge(IndetMatchError):
    """More than nine alphabet characters were declared."""


class DuplicateCharacter(IndetMatchError):
    """The declared alphabet repeats a character."""


class UnknownCharacter(IndetMatchError):
    """A character is not part of the declared alphabet."""


class EmptySet(IndetMatchError):
    """A letter must contain at least one character."""


class NotInAlphabet(IndetMatchError):
    """An encoded value does not decode over the given alphabet."""


class IndeterminateLetterPresent(IndetMatchError):
    """A regular-only operation received an indeterminate letter."""


class EmptyPattern(IndetMatchError):
    """Searching requires a pattern of at least one letter."""


class PatternLongerThanText(IndetMatchError):
    """The pattern cannot be longer than the text."""


class UnbalancedBracket(IndetMatchError):
    """A '[' without its ']' (or a stray ']') in bracket syntax."""


class EmptyBracket(IndetMatchError):
    """'[]' holds no characters."""


class DuplicateInBracket(IndetMatchError):
    """A bracket group repeats a character."""


class UnknownIupacCode(IndetMatchError):
    """A character is not one of the fifteen IUPAC nucleotide codes."""


class InvalidSpec(IndetMatchError):
    """A generation spec violates its invariants."""


class UnknownAlgorithm(IndetMatchError):
    """No searcher is registered under the requested name."""


class MatchCountMismatch(IndetMatchError):
    """Two searchers disagreed on the number of matches for one instance."""
