"""Cyclic words over signed letters: parsing, formatting and Wicks conditions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class Letter(NamedTuple):
    id: int
    sign: int  # +1, or -1 for the inverse letter

    def inverse(self) -> "Letter":
        return Letter(self.id, -self.sign)


class WordSyntaxError(ValueError):
    """Raised when a word does not match the token grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


class WordConditionError(ValueError):
    """Raised when letters are not paired: each must occur exactly once with each sign."""


_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)('|\^-1)?")
_SEP = re.compile(r"[\s,]+")


def _check_pairing(letters: Sequence[Letter]) -> None:
    seen: dict[tuple[int, int], int] = {}
    for pos, (i, s) in enumerate(letters):
        if s not in (1, -1):
            raise WordConditionError(f"letter at position {pos} has sign {s}")
        if (i, s) in seen:
            raise WordConditionError(
                f"letter {i} occurs twice with sign {s:+d} (positions {seen[(i, s)]} and {pos})")
        seen[(i, s)] = pos
    for (i, s), pos in seen.items():
        if (i, -s) not in seen:
            raise WordConditionError(f"letter {i} at position {pos} has no inverse")


@dataclass(frozen=True)
class WicksWord:
    """A cyclic word in which every letter occurs once with each sign.

    ``letters`` is a linear representative; the cyclic structure is implied.
    ``names`` optionally keeps the identifiers the word was parsed from,
    indexed by letter id.
    """

    letters: tuple[Letter, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        letters = tuple(Letter(int(i), int(s)) for i, s in self.letters)
        object.__setattr__(self, "letters", letters)
        _check_pairing(letters)
        if len(letters) < 4:
            raise WordConditionError(f"word of length {len(letters)} is shorter than 4")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "WicksWord":
        return cls(tuple(Letter(i, s) for i, s in pairs))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k: int) -> Letter:
        return self.letters[k % len(self.letters)]

    @property
    def edge_count(self) -> int:
        return len(self.letters) // 2

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(sorted({l.id for l in self.letters}))

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """partner[i] is the position of the inverse of letter i."""
        where = {l: k for k, l in enumerate(self.letters)}
        return tuple(where[l.inverse()] for l in self.letters)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Letter id -> (position of the +1 occurrence, position of the -1 occurrence)."""
        out: dict[int, list[int]] = {}
        for k, (i, s) in enumerate(self.letters):
            out.setdefault(i, [0, 0])[0 if s > 0 else 1] = k
        return {i: (p[0], p[1]) for i, p in out.items()}

    def rotate(self, k: int) -> "WicksWord":
        n = len(self.letters)
        k %= n
        return WicksWord(self.letters[k:] + self.letters[:k], self.names)

    def name(self, letter_id: int) -> str:
        if self.names is not None and letter_id < len(self.names):
            return self.names[letter_id]
        return f"a{letter_id + 1}"

    def __str__(self) -> str:
        return format_letters(self.letters, self.name)

    def __repr__(self) -> str:
        return f"WicksWord({str(self)!r})"


def format_letters(letters: Iterable[Letter], name=None) -> str:
    name = name or (lambda i: f"a{i + 1}")
    return " ".join(name(i) + ("" if s > 0 else "'") for i, s in letters)


def parse_word(text: str) -> WicksWord:
    """Parse ``"a b a' b'"`` style text into a word.

    Identifiers get ids in order of first appearance; ``x'`` and ``x^-1``
    denote the inverse of ``x``.
    """
    ids: dict[str, int] = {}
    letters: list[Letter] = []
    pos = 0
    m = _SEP.match(text, pos)
    if m:
        pos = m.end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
        name = m.group(1)
        sign = -1 if m.group(2) else 1
        letters.append(Letter(ids.setdefault(name, len(ids)), sign))
        pos = m.end()
        if pos < len(text):
            sep = _SEP.match(text, pos)
            if not sep:
                raise WordSyntaxError(f"expected separator before {text[pos]!r}", pos)
            pos = sep.end()
    if not letters:
        raise WordSyntaxError("empty word", 0)
    names = [""] * len(ids)
    for name, i in ids.items():
        names[i] = name
    return WicksWord(tuple(letters), tuple(names))


@dataclass(frozen=True)
class Violation:
    condition: str  # "ii" or "iii"
    positions: tuple[int, ...]
    detail: str


def validate(word: WicksWord) -> list[Violation]:
    """List every violation of conditions (ii) and (iii).

    An empty list means ``word`` is an oriented Wicks form.
    """
    w = word.letters
    n = len(w)
    out = []
    for k in range(n):
        a, b = w[k], w[(k + 1) % n]
        if b == a.inverse():
            out.append(Violation("ii", (k, (k + 1) % n),
                                 f"cancelling factor {format_letters((a, b), word.name)}"))
    pair_at = {(w[k], w[(k + 1) % n]): k for k in range(n)}
    for k in range(n):
        a, b = w[k], w[(k + 1) % n]
        j = pair_at.get((b.inverse(), a.inverse()))
        if j is not None and k < j:
            out.append(Violation(
                "iii", (k, (k + 1) % n, j, (j + 1) % n),
                f"factors {format_letters((a, b), word.name)} and "
                f"{format_letters((b.inverse(), a.inverse()), word.name)}"))
    return out


def is_wicks_form(word: WicksWord) -> bool:
    return not validate(word)


def relabel_first_occurrence(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Rename letters 0, 1, 2, ... by first occurrence, each first occurrence positive."""
    seen: dict[int, tuple[int, int]] = {}
    out = []
    for i, s in letters:
        m = seen.get(i)
        if m is None:
            m = seen[i] = (len(seen), s)
        out.append(Letter(m[0], 1 if s == m[1] else -1))
    return tuple(out)
