"""Words over the alphabet {0..k-1}, base-k numerals, and the counting step map.

A word is a plain tuple of integer letters; the base travels alongside as an
explicit argument. Words are letter sequences, never numbers: leading zeros
are significant, so (0, 1, 1, 0) and (1, 1, 0) are different states.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

MIN_BASE = 2
MAX_BASE = 36  # limit of the 0-9a-z text rendering

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUE = {ch: v for v, ch in enumerate(_DIGITS)}

Word = tuple[int, ...]


def check_base(base: int) -> None:
    if not MIN_BASE <= base <= MAX_BASE:
        raise ValueError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")


def check_word(word: Word, base: int) -> None:
    # negative letters would silently index from the end of tally lists,
    # so the range check here is load bearing
    for i, letter in enumerate(word):
        if not 0 <= letter < base:
            raise ValueError(f"invalid letter {letter!r} at position {i} for base {base}")


def parse_word(text: str, base: int) -> Word:
    """Parse a word from text, digits 0-9 then a-z for bases above 10.

    Uppercase letters are accepted and normalized. Empty text is rejected;
    the empty word exists as a value but has no text form worth accepting.
    """
    check_base(base)
    if not text:
        raise ValueError("empty word")
    letters = []
    for i, ch in enumerate(text):
        value = _DIGIT_VALUE.get(ch.lower())
        if value is None or value >= base:
            raise ValueError(f"invalid letter {ch!r} at position {i} for base {base}")
        letters.append(value)
    return tuple(letters)


def format_word(word: Word) -> str:
    return "".join(_DIGITS[letter] for letter in word)


def count_letters(word: Word, base: int) -> dict[int, int]:
    """Tally every alphabet letter in ``word``; absent letters map to 0."""
    check_base(base)
    check_word(word, base)
    counts = dict.fromkeys(range(base), 0)
    for letter in word:
        counts[letter] += 1
    return counts


def digit_length(n: int, base: int) -> int:
    """Number of base-k digits of a positive integer."""
    if n < 1:
        raise ValueError(f"digit_length needs a positive integer, got {n}")
    d = 0
    while n:
        d += 1
        n //= base
    return d


@lru_cache(maxsize=None)
def _numeral_digits(n: int, base: int) -> tuple[int, ...]:
    digits = []
    while n:
        n, r = divmod(n, base)
        digits.append(r)
    digits.reverse()
    return tuple(digits)


def encode_numeral(n: int, base: int) -> tuple[int, ...]:
    """Base-k digits of ``n``, most significant first, no leading zeros.

    Only positive integers are numerals here: counts of zero never occur in
    a description, so zero has no encoding.
    """
    check_base(base)
    if n < 1:
        raise ValueError(f"numerals encode positive counts, got {n}")
    return _numeral_digits(n, base)


def decode_numeral(digits: Sequence[int], base: int) -> int:
    """Inverse of encode_numeral; rejects empty and leading-zero digit strings."""
    check_base(base)
    if not digits:
        raise ValueError("empty numeral")
    if digits[0] == 0:
        raise ValueError("leading zero in numeral")
    value = 0
    for i, d in enumerate(digits):
        if not 0 <= d < base:
            raise ValueError(f"invalid digit {d!r} at position {i} for base {base}")
        value = value * base + d
    return value


class Block(NamedTuple):
    """One (count, letter) unit of a description."""

    count: int
    letter: int


@dataclass(frozen=True)
class Description:
    """Block list with strictly descending letters, the shape of every image.

    Every output of the step map renders exactly one description, and a fixed
    point is a word that renders its own.
    """

    blocks: tuple[Block, ...]
    base: int

    def __post_init__(self) -> None:
        check_base(self.base)
        if not self.blocks:
            raise ValueError("description needs at least one block")
        if len(self.blocks) > self.base:
            raise ValueError(
                f"{len(self.blocks)} blocks cannot have distinct letters in base {self.base}"
            )
        prev = self.base
        for count, letter in self.blocks:
            if count < 1:
                raise ValueError(f"block counts must be positive, got {count}")
            if letter < 0 or letter >= self.base:
                raise ValueError(f"letter {letter} out of range for base {self.base}")
            if letter >= prev:
                raise ValueError("block letters must be strictly descending")
            prev = letter

    def rendered_length(self) -> int:
        return sum(digit_length(count, self.base) + 1 for count, _ in self.blocks)


def describe(word: Word, base: int) -> Description:
    """The descending-letter block list of ``word``: how many of each letter.

    Rejects the empty word, which has nothing to describe.
    """
    check_base(base)
    check_word(word, base)
    if not word:
        raise ValueError("the empty word has no description")
    tally = [0] * base
    for letter in word:
        tally[letter] += 1
    blocks = tuple(Block(tally[b], b) for b in range(base - 1, -1, -1) if tally[b])
    return Description(blocks, base)


def render(description: Description) -> Word:
    """Spell a description out: each count as a base-k numeral, then its letter."""
    out: list[int] = []
    for count, letter in description.blocks:
        out.extend(_numeral_digits(count, description.base))
        out.append(letter)
    return tuple(out)


def _step(word: Word, base: int) -> Word:
    # fused describe + render without validation; hot path for orbit and search
    tally = [0] * base
    for letter in word:
        tally[letter] += 1
    out: list[int] = []
    for b in range(base - 1, -1, -1):
        c = tally[b]
        if c:
            out.extend(_numeral_digits(c, base))
            out.append(b)
    return tuple(out)


def step(word: Word, base: int) -> Word:
    """Apply the counting map once: say how many of each letter, largest first.

    Equal to render(describe(word, base)) for nonempty words; the empty word
    maps to itself.
    """
    check_base(base)
    check_word(word, base)
    return _step(word, base)
