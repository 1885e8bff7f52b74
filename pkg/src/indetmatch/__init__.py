"""Pattern matching on indeterminate (degenerate) strings.

Letters are nonempty subsets of an alphabet of at most nine characters,
encoded as products of distinct primes so that two letters match exactly
when their gcd exceeds 1. On top of the encoding sit border/prefix
arrays, a brute-force oracle, classic searchers for regular strings and
their generalizations to indeterminate ones, plus text parsing, instance
generation, and a benchmark harness.

``BACKEND`` names the active kernel implementation ("compiled" or
"pure-python"); see ``_backend`` for how it is chosen.
"""

from ._backend import BACKEND
from .arrays import (
    border_array_regular,
    longest_regular_prefix_len,
    longest_regular_suffix_len,
    prefix_array_indet,
)
from .encoding import (
    MAX_SIGMA,
    PRIMES,
    WORD_LIMIT,
    Alphabet,
    EncodedString,
    build_alphabet,
    compare_letters,
    decode_letter,
    encode_letter,
    is_indet,
    letters_match,
)
from .benchgen import CSV_HEADER, BenchRecord, GenSpec, generate, run_benchmark, write_csv
from .matchers import (
    ALGORITHMS,
    BadCharTable,
    SearchOutcome,
    bad_char_shift,
    bf_search,
    bm_indet_search,
    bm_search_regular,
    build_bad_char_table,
    compute_shift,
    indet_gsr_shift,
    kmp_indet_search,
    kmp_search_regular,
)
from .textio import (
    DNA_ALPHABET,
    SymbolicString,
    encode_text,
    from_encoded,
    parse_bracket,
    parse_iupac,
    serialize_bracket,
    to_encoded,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "Alphabet",
    "BACKEND",
    "BadCharTable",
    "BenchRecord",
    "CSV_HEADER",
    "DNA_ALPHABET",
    "EncodedString",
    "GenSpec",
    "MAX_SIGMA",
    "PRIMES",
    "SearchOutcome",
    "SymbolicString",
    "WORD_LIMIT",
    "bad_char_shift",
    "bf_search",
    "bm_indet_search",
    "bm_search_regular",
    "border_array_regular",
    "build_alphabet",
    "build_bad_char_table",
    "compare_letters",
    "compute_shift",
    "decode_letter",
    "encode_letter",
    "encode_text",
    "from_encoded",
    "generate",
    "indet_gsr_shift",
    "is_indet",
    "kmp_indet_search",
    "kmp_search_regular",
    "letters_match",
    "longest_regular_prefix_len",
    "longest_regular_suffix_len",
    "parse_bracket",
    "parse_iupac",
    "prefix_array_indet",
    "run_benchmark",
    "serialize_bracket",
    "to_encoded",
    "write_csv",
    "__version__",
]
