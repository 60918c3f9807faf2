"""Binary words over {0, 1}: Lyndon recognition, enumeration, standard factorization.

Words are plain ``str`` values of '0'/'1'. Python string comparison is the
lexicographic order with 0 < 1 in which a proper prefix is smaller, which is
exactly the order Lyndon words are defined with.
"""

from functools import lru_cache
from itertools import product
from typing import Tuple

from .errors import InvalidInputError

ALPHABET = "01"


def validate_word(w: str, allow_empty: bool = False) -> str:
    if not isinstance(w, str):
        raise InvalidInputError(f"word must be a string of 0/1, got {w!r}")
    if not w and not allow_empty:
        raise InvalidInputError("empty word")
    bad = set(w) - set(ALPHABET)
    if bad:
        raise InvalidInputError(f"word {w!r} has letters outside {{0,1}}: {sorted(bad)}")
    return w


def is_lyndon(w: str) -> bool:
    validate_word(w)
    return all(w < w[i:] for i in range(1, len(w)))


def validate_lyndon(w: str) -> str:
    if not is_lyndon(w):
        raise InvalidInputError(f"{w!r} is not a Lyndon word")
    return w


@lru_cache(maxsize=None)
def lyndon_words_of_length(n: int) -> Tuple[str, ...]:
    if n < 1:
        raise InvalidInputError(f"length must be positive, got {n}")
    words = ("".join(letters) for letters in product(ALPHABET, repeat=n))
    return tuple(w for w in words if is_lyndon(w))


@lru_cache(maxsize=None)
def lyndon_words(max_len: int) -> Tuple[str, ...]:
    """All Lyndon words of length at most ``max_len`` in lexicographic order."""
    if max_len < 1:
        raise InvalidInputError(f"max_len must be >= 1, got {max_len}")
    found = []
    for n in range(1, max_len + 1):
        found.extend(lyndon_words_of_length(n))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def standard_factorization(w: str) -> Tuple[str, str]:
    """Split a Lyndon word ``w = UV`` with ``V`` its smallest proper right factor."""
    validate_lyndon(w)
    if len(w) < 2:
        raise InvalidInputError(f"letter {w!r} has no standard factorization")
    cut = min(range(1, len(w)), key=lambda i: w[i:])
    u, v = w[:cut], w[cut:]
    if not (is_lyndon(u) and is_lyndon(v)):
        raise InvalidInputError(f"factors of {w!r} are not Lyndon: {u!r}, {v!r}")
    return u, v


def weight(w: str) -> int:
    return len(w)
