"""Exhaustive enumeration of side pairings of the (12g-6)-gon.

Sides are paired left to right: the lowest unpaired side is matched with
every later unpaired side in turn.  Pairing sides ``i`` and ``j`` fixes two
entries of the corner rotation (``rot[i-1] = j`` and ``rot[j-1] = i``);
the search backtracks as soon as a vertex closes up with fewer than three
corners (conditions (ii)/(iii)) or grows past three (the genus would drop
below ``g`` at this length).
"""

from __future__ import annotations

from typing import Iterator

MAX_GLUING_GENUS = 2


class CapacityError(ValueError):
    """Raised when a request exceeds a documented enumeration bound."""


def _chain_ok(rot, inv, k: int) -> bool:
    # walk back to the start of the chain through k, then forward
    start = k
    steps = 0
    while inv[start] >= 0:
        start = inv[start]
        steps += 1
        if start == k:
            return steps == 3
        if steps > 3:
            return False
    length = 0
    c = start
    while rot[c] >= 0:
        c = rot[c]
        length += 1
        if length > 2:
            return False
    return True


def _search(n: int, partner: list[int], rot: list[int], inv: list[int],
            first_pairs: list[int] | None) -> Iterator[tuple[int, ...]]:
    i = partner.index(-1) if -1 in partner else -1
    if i < 0:
        yield tuple(partner)
        return
    for j in range(i + 1, n):
        if partner[j] >= 0:
            continue
        if first_pairs is not None and i == 0 and j not in first_pairs:
            continue
        a, b = (i - 1) % n, (j - 1) % n
        partner[i], partner[j] = j, i
        rot[a], rot[b] = j, i
        inv[j], inv[i] = a, b
        if _chain_ok(rot, inv, a) and _chain_ok(rot, inv, b):
            yield from _search(n, partner, rot, inv, first_pairs)
        partner[i] = partner[j] = -1
        rot[a] = rot[b] = -1
        inv[j] = inv[i] = -1


def enumerate_pairings(g: int, first_pairs: list[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Partner arrays of every gluing of the (12g-6)-gon into a maximal genus-``g`` form.

    ``first_pairs`` restricts the side matched with side 0 (for splitting
    the search into independent parts).
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g > MAX_GLUING_GENUS:
        raise CapacityError(
            f"gluing enumeration is limited to genus <= {MAX_GLUING_GENUS}; "
            f"genus {g} would need {_double_factorial(12 * g - 7):,} matchings")
    n = 12 * g - 6
    yield from _search(n, [-1] * n, [-1] * n, [-1] * n, first_pairs)


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def _search_symmetric(n: int, d: int, partner, rot, inv) -> Iterator[tuple[int, ...]]:
    i = partner.index(-1) if -1 in partner else -1
    if i < 0:
        yield tuple(partner)
        return
    step = n // d
    for j in range(i + 1, n):
        if partner[j] >= 0:
            continue
        pairs = {((i + k * step) % n, (j + k * step) % n) for k in range(d)}
        ends = [x for pair in pairs for x in pair]
        if len(set(ends)) != len(ends) and not _self_consistent(pairs):
            continue
        if any(partner[x] >= 0 for x in ends):
            continue
        touched = []
        for a, b in pairs:
            if partner[a] >= 0:
                continue
            partner[a], partner[b] = b, a
            ra, rb = (a - 1) % n, (b - 1) % n
            rot[ra], rot[rb] = b, a
            inv[b], inv[a] = ra, rb
            touched += [ra, rb]
        if all(_chain_ok(rot, inv, c) for c in touched):
            yield from _search_symmetric(n, d, partner, rot, inv)
        for a, b in pairs:
            partner[a] = partner[b] = -1
            rot[(a - 1) % n] = rot[(b - 1) % n] = -1
            inv[a] = inv[b] = -1


def _self_consistent(pairs) -> bool:
    # an orbit may revisit a pair in reverse (an edge reversed by the rotation)
    seen: dict[int, int] = {}
    for a, b in pairs:
        if seen.get(a, b) != b or seen.get(b, a) != a:
            return False
        seen[a], seen[b] = b, a
    return True


def enumerate_symmetric_pairings(g: int, d: int) -> Iterator[tuple[int, ...]]:
    """Gluings of the (12g-6)-gon invariant under rotation by 1/d of a turn.

    Each emitted pairing admits the rotation by (12g-6)/d positions as an
    automorphism; it is a practical source of symmetric words beyond the
    reach of the exhaustive search.
    """
    n = 12 * g - 6
    if g < 1 or d < 2 or n % d:
        raise ValueError(f"no rotation of order {d} on a word of length {n}")
    yield from _search_symmetric(n, d, [-1] * n, [-1] * n, [-1] * n)
