"""Canonical forms, automorphism groups and symmetry parameters of cyclic words."""

from __future__ import annotations

from dataclasses import dataclass

from .surface import VertexSign, build_surface_map, cycle_sign, is_maximal
from .word import Letter, WicksWord, format_letters


def _codes(word) -> tuple[list[int], list[int]]:
    return [l.id for l in word], [l.sign for l in word]


def _relabeled_codes(ids, signs, start) -> list[int]:
    n = len(ids)
    seen: dict[int, int] = {}
    first_sign: dict[int, int] = {}
    out = []
    for k in range(n):
        p = (start + k) % n
        i = ids[p]
        m = seen.get(i)
        if m is None:
            m = seen[i] = len(seen)
            first_sign[i] = signs[p]
        out.append(2 * m + (signs[p] != first_sign[i]))
    return out


def canonical_codes(letters) -> tuple[int, ...]:
    """Least first-occurrence relabeling over all rotations, as ``2*id + (sign < 0)`` codes."""
    ids, signs = _codes(letters)
    n = len(ids)
    best: list[int] | None = None
    for start in range(n):
        seen: dict[int, int] = {}
        first_sign: dict[int, int] = {}
        cur = []
        worse = False
        equal_so_far = best is not None
        for k in range(n):
            p = start + k
            if p >= n:
                p -= n
            i = ids[p]
            m = seen.get(i)
            if m is None:
                m = seen[i] = len(seen)
                first_sign[i] = signs[p]
            c = 2 * m + (signs[p] != first_sign[i])
            if equal_so_far:
                b = best[k]
                if c > b:
                    worse = True
                    break
                if c < b:
                    equal_so_far = False
            cur.append(c)
        if not worse and (best is None or cur < best):
            best = cur
    return tuple(best)


def codes_to_letters(codes) -> tuple[Letter, ...]:
    return tuple(Letter(c >> 1, -1 if c & 1 else 1) for c in codes)


def canonical_form(word: WicksWord) -> tuple[WicksWord, str]:
    letters = codes_to_letters(canonical_codes(word.letters))
    return WicksWord(letters), format_letters(letters)


def canonical_string(word) -> str:
    letters = word.letters if isinstance(word, WicksWord) else word
    return format_letters(codes_to_letters(canonical_codes(letters)))


def equivalent(u: WicksWord, v: WicksWord) -> bool:
    return len(u) == len(v) and canonical_codes(u.letters) == canonical_codes(v.letters)


@dataclass(frozen=True)
class AutGroup:
    word_length: int
    order: int
    generator_shift: int
    member_shifts: tuple[int, ...]

    def shift_of_order(self, d: int) -> int | None:
        """A member shift generating the subgroup of order ``d``, if there is one."""
        if self.order % d:
            return None
        return self.generator_shift * (self.order // d) % self.word_length if d > 1 else 0


def automorphisms(word: WicksWord) -> AutGroup:
    ids, signs = _codes(word)
    n = len(ids)
    ref = _relabeled_codes(ids, signs, 0)
    shifts = tuple(k for k in range(n) if _relabeled_codes(ids, signs, k) == ref)
    d = len(shifts)
    gen = shifts[1] if d > 1 else 0
    if is_maximal(word) and d not in (1, 2, 3, 6):
        raise AssertionError(f"maximal word {word} has {d} automorphisms")
    return AutGroup(n, d, gen, shifts)


def shift_order(n: int, k: int) -> int:
    k %= n
    if k == 0:
        return 1
    from math import gcd
    return n // gcd(n, k)


@dataclass(frozen=True)
class SymmetryParams:
    """Fixed structure of one automorphism.

    ``r`` counts edges reversed by the order-2 part, ``s``/``t`` the positive
    and negative vertices fixed by the order-3 part.  For an order-6
    automorphism these are the observed counts ``(3r; 2s, 2t)``; see
    :meth:`unscaled` for the arguments of the order-6 mass.
    """

    order: int
    r: int | None = None
    s: int | None = None
    t: int | None = None

    def unscaled(self) -> tuple[int, int, int]:
        if self.order != 6:
            raise ValueError("only order-6 parameters have an unscaled form")
        return self.r // 3, self.s // 2, self.t // 2

    def label(self) -> str:
        if self.order == 2:
            return f"r={self.r}"
        if self.order == 3:
            return f"(s,t)=({self.s},{self.t})"
        return f"(3r;2s,2t)=({self.r};{self.s},{self.t})"


def _check_member(word: WicksWord, shift: int) -> None:
    ids, signs = _codes(word)
    if _relabeled_codes(ids, signs, shift % len(ids)) != _relabeled_codes(ids, signs, 0):
        raise ValueError(f"rotation by {shift} is not an automorphism of {word}")


def reversed_edges(word: WicksWord, shift: int) -> list[int]:
    """Letter ids x that the rotation maps to their own inverse."""
    n = len(word)
    p = word.partner
    return [l.id for k, l in enumerate(word) if l.sign > 0 and p[k] == (k + shift) % n]


def fixed_vertices(word: WicksWord, shift: int) -> list[int]:
    smap = build_surface_map(word)
    n = len(word)
    cv = smap.corner_vertex
    return [v for v, cyc in enumerate(smap.vertex_cycles) if cv[(cyc[0] + shift) % n] == v]


def _fixed_signs(word: WicksWord, shift: int) -> tuple[int, int]:
    smap = build_surface_map(word)
    s = t = 0
    for v in fixed_vertices(word, shift):
        sign = cycle_sign(smap.vertex_cycles[v], smap.rotation)
        if sign is VertexSign.POSITIVE:
            s += 1
        elif sign is VertexSign.NEGATIVE:
            t += 1
    return s, t


def symmetry_parameters(word: WicksWord, shift: int) -> SymmetryParams:
    n = len(word)
    shift %= n
    _check_member(word, shift)
    d = shift_order(n, shift)
    if d == 2:
        return SymmetryParams(2, r=len(reversed_edges(word, shift)))
    if d == 3:
        s, t = _fixed_signs(word, shift)
        return SymmetryParams(3, s=s, t=t)
    if d == 6:
        r = len(reversed_edges(word, 3 * shift % n))
        s, t = _fixed_signs(word, 2 * shift % n)
        return SymmetryParams(6, r=r, s=s, t=t)
    raise ValueError(f"rotation by {shift} has order {d}, expected 2, 3 or 6")
