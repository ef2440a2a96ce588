"""Words and endomaps over free products F_n * Z^m."""

from core_words.endomaps import (
    Endomap,
    apply,
    apply_raw,
    compose,
    identity,
    is_generator_permutation,
    is_identity,
    verify_inverse_pair,
)
from core_words.words import (
    Block,
    ContextMismatchError,
    Generator,
    Kind,
    Syllable,
    Word,
    WordContext,
    WordError,
    WordParseError,
    block_inverse,
    check_context,
    conjugate,
    join_blocks,
    normalize,
    substitute,
)

__all__ = [
    "Block",
    "ContextMismatchError",
    "Endomap",
    "Generator",
    "Kind",
    "Syllable",
    "Word",
    "WordContext",
    "WordError",
    "WordParseError",
    "apply",
    "apply_raw",
    "block_inverse",
    "check_context",
    "compose",
    "conjugate",
    "identity",
    "is_generator_permutation",
    "is_identity",
    "join_blocks",
    "normalize",
    "substitute",
    "verify_inverse_pair",
]
