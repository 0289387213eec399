"""Independent enumerations of maximal Wicks forms and the censuses built from them."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .gluings import CapacityError, enumerate_pairings
from .surface import genus, is_maximal, sign_counts
from .symmetry import automorphisms, canonical_codes, codes_to_letters, symmetry_parameters
from .transform import construct_all
from .word import Letter, WicksWord, format_letters, parse_word

MAX_RECURSIVE_GENUS = 3
GENUS_ONE = parse_word("a1 a2 a3 a1' a2' a3'")


def pairing_to_word(partner) -> WicksWord:
    ids: dict[int, int] = {}
    letters = []
    for k, p in enumerate(partner):
        key = min(k, p)
        if key not in ids:
            ids[key] = len(ids)
        letters.append(Letter(ids[key], 1 if k < p else -1))
    return WicksWord(tuple(letters))


def _count_part(g: int, first: int) -> list[tuple[int, ...]]:
    return [canonical_codes(pairing_to_word(p).letters) for p in enumerate_pairings(g, [first])]


def enumerate_gluings(g: int) -> Iterator[WicksWord]:
    """Every side pairing of the (12g-6)-gon that glues to a maximal genus-``g`` form."""
    for partner in enumerate_pairings(g):
        yield pairing_to_word(partner)


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: its canonical word, automorphism order and fixed structure.

    ``r`` is the number of reversed edges of the order-2 automorphism and
    ``(s, t)`` the fixed positive/negative vertices of the order-3 ones, when
    such automorphisms exist.
    """

    word: str
    aut_order: int
    positive: int
    negative: int
    r: int | None = None
    s: int | None = None
    t: int | None = None


def classify(codes: tuple[int, ...]) -> ClassRecord:
    word = WicksWord(codes_to_letters(codes))
    aut = automorphisms(word)
    pos, neg = sign_counts(word)
    r = s = t = None
    two = aut.shift_of_order(2)
    if two is not None:
        r = symmetry_parameters(word, two).r
    three = aut.shift_of_order(3)
    if three is not None:
        p = symmetry_parameters(word, three)
        s, t = p.s, p.t
    return ClassRecord(format_letters(word.letters), aut.order, pos, neg, r, s, t)


@dataclass
class Census:
    genus: int
    classes: list[ClassRecord]
    words_seen: int = 0
    mass: Fraction = field(init=False)
    pointed_count: int = field(init=False)
    order_histogram: dict[int, int] = field(init=False)

    def __post_init__(self):
        self.classes = sorted(self.classes, key=lambda c: c.word)
        self.mass = sum((Fraction(1, c.aut_order) for c in self.classes), Fraction(0))
        pointed = (12 * self.genus - 6) * self.mass
        assert pointed.denominator == 1
        self.pointed_count = pointed.numerator
        self.order_histogram = {d: 0 for d in (1, 2, 3, 6)}
        for c in self.classes:
            self.order_histogram[c.aut_order] = self.order_histogram.get(c.aut_order, 0) + 1

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def subcensus(self, d: int, params: tuple[int, ...]) -> list[ClassRecord]:
        """Classes in W_2(r), W_3(s,t) or W_6(3r;2s,2t), the last keyed by unscaled (r,s,t)."""
        if d == 2:
            (r,) = params
            return [c for c in self.classes if c.r == r]
        if d == 3:
            return [c for c in self.classes if (c.s, c.t) == tuple(params)]
        if d == 6:
            r, s, t = params
            return [c for c in self.classes
                    if c.aut_order == 6 and (c.r, c.s, c.t) == (3 * r, 2 * s, 2 * t)]
        raise ValueError(f"order must be 2, 3 or 6, got {d}")

    def submass(self, d: int, params: tuple[int, ...]) -> Fraction:
        return sum((Fraction(1, c.aut_order) for c in self.subcensus(d, params)), Fraction(0))


def build_census(words: Iterable[WicksWord]) -> Census:
    """Group maximal words of one genus by canonical form."""
    seen: set[tuple[int, ...]] = set()
    g = None
    count = 0
    for w in words:
        wg = genus(w)
        if g is None:
            g = wg
        elif wg != g:
            raise ValueError(f"mixed genus input: {g} and {wg}")
        if not is_maximal(w):
            raise ValueError(f"{w} is not maximal")
        count += 1
        seen.add(canonical_codes(w.letters))
    if g is None:
        raise ValueError("no words given")
    return _census_from_codes(g, seen, count)


def _census_from_codes(g: int, codes: Iterable[tuple[int, ...]], count: int) -> Census:
    return Census(g, [classify(c) for c in sorted(codes)], words_seen=count)


def _jobs(jobs: int | None) -> int:
    return max(1, jobs if jobs is not None else (os.cpu_count() or 1))


def gluing_census(g: int, jobs: int | None = 1) -> Census:
    """Census of the exhaustive gluing enumeration, optionally split over processes."""
    n = 12 * g - 6
    jobs = _jobs(jobs)
    if jobs == 1 or g < 2:
        return build_census(enumerate_gluings(g))
    list(enumerate_pairings(g, []))  # capacity check before spawning workers
    with ProcessPoolExecutor(jobs) as pool:
        parts = list(pool.map(_count_part, [g] * (n - 1), range(1, n)))
    all_codes = [c for part in parts for c in part]
    return _census_from_codes(g, set(all_codes), len(all_codes))


def _children(codes: tuple[int, ...]) -> set[tuple[int, ...]]:
    word = WicksWord(codes_to_letters(codes))
    return {canonical_codes(c.word.letters) for c in construct_all(word)}


def recursive_levels(g_target: int, jobs: int | None = 1) -> Iterator[tuple[int, set[tuple[int, ...]]]]:
    if g_target < 1:
        raise ValueError("genus must be at least 1")
    if g_target > MAX_RECURSIVE_GENUS:
        raise CapacityError(f"recursive generation is limited to genus <= {MAX_RECURSIVE_GENUS}")
    level = {canonical_codes(GENUS_ONE.letters)}
    yield 1, level
    jobs = _jobs(jobs)
    for g in range(2, g_target + 1):
        bases = sorted(level)
        if jobs == 1:
            parts = map(_children, bases)
            level = set().union(*parts)
        else:
            with ProcessPoolExecutor(jobs) as pool:
                level = set().union(*pool.map(_children, bases))
        yield g, level


def generate_recursive(g_target: int, jobs: int | None = 1) -> Census:
    """Census of genus ``g_target`` grown from the genus-1 word by alpha/beta/gamma constructions."""
    for g, level in recursive_levels(g_target, jobs):
        if g == g_target:
            return _census_from_codes(g, level, len(level))
    raise AssertionError("unreachable")
