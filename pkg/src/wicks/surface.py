"""The graph a Wicks word draws on its surface: corners, vertices, genus, signs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .word import WicksWord


class VertexSign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    UNSIGNED = "0"


@dataclass(frozen=True)
class SurfaceMap:
    """Incidence structure of the one-face map obtained by gluing the polygon.

    Corner ``k`` sits between letters ``k`` and ``k+1``.  ``rotation[k]`` is
    the next corner around the same vertex, so the vertices are the cycles
    of ``rotation``.  ``edge_ends[x] = (tail, head)`` as vertex indices.
    """

    edge_count: int
    rotation: tuple[int, ...]
    vertex_cycles: tuple[tuple[int, ...], ...]
    corner_vertex: tuple[int, ...]
    edge_ends: dict[int, tuple[int, int]]
    genus: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_cycles)

    @property
    def vertex_degrees(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.vertex_cycles)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted multiset of neighbours per vertex (a loop lists the vertex twice)."""
        nbrs: list[list[int]] = [[] for _ in self.vertex_cycles]
        for tail, head in self.edge_ends.values():
            nbrs[tail].append(head)
            nbrs[head].append(tail)
        return tuple(tuple(sorted(x)) for x in nbrs)


def corner_rotation(partner) -> list[int]:
    n = len(partner)
    return [partner[(k + 1) % n] for k in range(n)]


def cycles_of(perm) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        k = start
        while not seen[k]:
            seen[k] = True
            cyc.append(k)
            k = perm[k]
        out.append(tuple(cyc))
    return out


@lru_cache(maxsize=4096)
def build_surface_map(word: WicksWord) -> SurfaceMap:
    n = len(word)
    rot = corner_rotation(word.partner)
    cycles = cycles_of(rot)
    corner_vertex = [0] * n
    for v, cyc in enumerate(cycles):
        for c in cyc:
            corner_vertex[c] = v
    ends = {}
    for x, (plus, _) in word.positions.items():
        ends[x] = (corner_vertex[(plus - 1) % n], corner_vertex[plus])
    e = n // 2
    twice_genus = 1 + e - len(cycles)
    if twice_genus < 0 or twice_genus % 2:
        raise AssertionError(f"Euler characteristic inconsistent for {word}")
    return SurfaceMap(e, tuple(rot), tuple(cycles), tuple(corner_vertex), ends, twice_genus // 2)


def genus(word: WicksWord) -> int:
    return build_surface_map(word).genus


def is_maximal(word: WicksWord) -> bool:
    g = genus(word)
    return g >= 1 and len(word) == 6 * (2 * g - 1)


def cycle_sign(cycle, rotation) -> VertexSign:
    if len(cycle) != 3:
        return VertexSign.UNSIGNED
    first, second, _ = sorted(cycle)
    return VertexSign.POSITIVE if rotation[first] == second else VertexSign.NEGATIVE


def vertex_signs(word: WicksWord) -> tuple[list[VertexSign], int, int]:
    """Sign of every vertex and the (positive, negative) totals.

    A trivalent vertex is positive when walking around it visits its corners
    in the order they occur along the word.
    """
    smap = build_surface_map(word)
    signs = [cycle_sign(c, smap.rotation) for c in smap.vertex_cycles]
    return (signs, signs.count(VertexSign.POSITIVE), signs.count(VertexSign.NEGATIVE))


def sign_counts(word: WicksWord) -> tuple[int, int]:
    _, pos, neg = vertex_signs(word)
    return pos, neg
