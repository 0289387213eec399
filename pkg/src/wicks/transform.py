"""Rewrites of maximal Wicks forms.

* IH-transformations (contract an edge, split the 4-valent vertex the other way),
* reductions at a negative vertex (genus g -> g-1),
* alpha/beta/gamma constructions (genus g -> g+1), as generate-and-filter.

Reductions are done on the graph rather than by pattern matching: delete
the vertex and its three edges, reverse the cyclic order of the three
remaining word segments, then repeatedly remove leaves and suppress
2-valent vertices (:func:`simplify`).  The result is checked afterwards.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator, Sequence

from .surface import VertexSign, build_surface_map, cycle_sign, genus, is_maximal
from .word import Letter, WicksWord, is_wicks_form


class TransformError(RuntimeError):
    """A rewrite produced something that is not a maximal Wicks form."""


class NegativeVertexType(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


class IHKind(enum.Enum):
    TYPE1 = "1"
    TYPE2A = "2a"
    TYPE2B = "2b"


def _inv(l: Letter) -> Letter:
    return Letter(l.id, -l.sign)


def compact(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Renumber ids to 0..e-1 keeping their relative order."""
    order = {i: k for k, i in enumerate(sorted({l.id for l in letters}))}
    return tuple(Letter(order[i], s) for i, s in letters)


def _free_reduce(letters: list[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for l in letters:
        if stack and stack[-1] == _inv(l):
            stack.pop()
        else:
            stack.append(l)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == _inv(stack[hi - 1]):
        lo += 1
        hi -= 1
    return stack[lo:hi]


def simplify(letters: Sequence[Letter],
             on_merge: Callable[[Letter, Letter], None] | None = None) -> list[Letter]:
    """Cancel ``l l'`` factors and merge ``xy``/``y'x'`` pairs until neither occurs.

    A merge keeps ``x`` and deletes ``y`` and ``y'``; ``on_merge(x, y)`` is
    called for each one, with the letters as they were written in ``xy``.
    """
    w = list(letters)
    while True:
        w = _free_reduce(w)
        n = len(w)
        if n < 4:
            return w
        pair_at = {(w[k], w[(k + 1) % n]): k for k in range(n)}
        for k in range(n):
            a, b = w[k], w[(k + 1) % n]
            j = pair_at.get((_inv(b), _inv(a)))
            if j is not None:
                if on_merge is not None:
                    on_merge(a, b)
                drop = {(k + 1) % n, j}
                w = [l for p, l in enumerate(w) if p not in drop]
                break
        else:
            return w


def _require_maximal(word: WicksWord) -> int:
    if not is_wicks_form(word) or not is_maximal(word):
        raise ValueError(f"{word} is not a maximal Wicks form")
    return genus(word)


def _negative_cycle(word: WicksWord, vertex: int) -> tuple[int, ...]:
    smap = build_surface_map(word)
    if not 0 <= vertex < smap.vertex_count:
        raise ValueError(f"no vertex {vertex}")
    cyc = smap.vertex_cycles[vertex]
    if cycle_sign(cyc, smap.rotation) is not VertexSign.NEGATIVE:
        raise ValueError(f"vertex {vertex} of {word} is not negative")
    return cyc


def negative_vertices(word: WicksWord) -> list[int]:
    smap = build_surface_map(word)
    return [v for v, c in enumerate(smap.vertex_cycles)
            if cycle_sign(c, smap.rotation) is VertexSign.NEGATIVE]


def classify_negative_vertex(word: WicksWord, vertex: int) -> NegativeVertexType:
    g = _require_maximal(word)
    if g < 2:
        raise ValueError("negative vertices are only classified in genus > 1")
    _negative_cycle(word, vertex)
    adj = build_surface_map(word).adjacency
    nbrs = Counter(adj[vertex])
    if vertex in nbrs:
        raise TransformError(f"negative vertex {vertex} of {word} carries a loop")
    if len(nbrs) == 3:
        return NegativeVertexType.GAMMA
    double = next(v for v, m in nbrs.items() if m == 2)
    single = next(v for v, m in nbrs.items() if m == 1)
    return NegativeVertexType.ALPHA if single in adj[double] else NegativeVertexType.BETA


def reduce(word: WicksWord, vertex: int) -> WicksWord:
    """The maximal form of genus g-1 obtained by removing the negative ``vertex``."""
    g = _require_maximal(word)
    if g < 2:
        raise ValueError("cannot reduce below genus 1")
    c1, c2, c3 = sorted(_negative_cycle(word, vertex))
    w = word.letters
    n = len(w)
    edges = {w[c].id for c in (c1, c2, c3)} | {w[(c + 1) % n].id for c in (c1, c2, c3)}

    def segment(a: int, b: int) -> list[Letter]:
        out = []
        p = (a + 1) % n
        while p != (b + 1) % n:
            if w[p].id not in edges:
                out.append(w[p])
            p = (p + 1) % n
        return out

    merged = segment(c2, c3) + segment(c1, c2) + segment(c3, c1)
    letters = simplify(merged)
    try:
        result = WicksWord(compact(letters))
    except ValueError as exc:
        raise TransformError(f"reduction of {word} at vertex {vertex} failed: {exc}") from exc
    if not is_wicks_form(result) or not is_maximal(result) or genus(result) != g - 1:
        raise TransformError(f"reduction of {word} at vertex {vertex} gave {result}")
    return result


# -- constructions ---------------------------------------------------------

# Each construction attaches new edges at points placed on existing edges.
# A point configuration maps an edge id to the sides of the points on it,
# listed from the tail of the edge to its head: +1 means the new edge leaves
# from the side read in the positive occurrence, -1 from the negative one.
PointConfig = tuple[tuple[int, tuple[int, ...]], ...]


def _subdivide(letters: Sequence[Letter], config: PointConfig) -> tuple[list[Letter], list[int], int]:
    """Split edges at the configured points.

    Returns the new letters, the corner (index of the letter preceding it)
    for every point in configuration order, and the next free id.
    """
    next_id = max(l.id for l in letters) + 1
    pieces: dict[int, list[int]] = {}
    for x, sides in config:
        pieces[x] = [x] + list(range(next_id, next_id + len(sides)))
        next_id += len(sides)
    out: list[Letter] = []
    corner_at: dict[tuple[int, int], int] = {}
    for l in letters:
        if l.id not in pieces:
            out.append(l)
            continue
        ps = pieces[l.id]
        m = len(ps) - 1
        base = len(out)
        if l.sign > 0:
            out.extend(Letter(p, 1) for p in ps)
            for k in range(1, m + 1):
                corner_at[(l.id, k, 1)] = base + k - 1
        else:
            out.extend(Letter(p, -1) for p in reversed(ps))
            for k in range(1, m + 1):
                corner_at[(l.id, k, -1)] = base + m - k
    corners = [corner_at[(x, k, side)]
               for x, sides in config for k, side in enumerate(sides, start=1)]
    return out, corners, next_id


def _point_configs(edge_ids: Sequence[int], k: int) -> Iterator[PointConfig]:
    for combo in combinations_with_replacement(edge_ids, k):
        counts = sorted(Counter(combo).items())
        for sides in product(*(product((1, -1), repeat=m) for _, m in counts)):
            yield tuple((x, s) for (x, _), s in zip(counts, sides))


def _gadget(pattern: str, first_id: int) -> list[Letter]:
    """Letters of ``pattern`` with a, b, c, ... numbered from ``first_id``."""
    return [Letter(first_id + ord(tok[0]) - ord("a"), -1 if tok.endswith("'") else 1)
            for tok in pattern.split()]


_ALPHA = "a b c d b' e c' d' e' a'"
_BETA_FIRST = "a b c a'"
_BETA_SECOND = "d b' c' d'"


def _insert(letters: list[Letter], inserts: list[tuple[int, list[Letter]]]) -> list[Letter]:
    out = list(letters)
    for corner, block in sorted(inserts, key=lambda t: -t[0]):
        out[corner + 1:corner + 1] = block
    return out


@dataclass(frozen=True)
class Construction:
    kind: NegativeVertexType
    points: PointConfig
    roles: tuple[int, ...]
    word: WicksWord


def _candidates(word: WicksWord) -> Iterator[tuple[NegativeVertexType, PointConfig, tuple[int, ...], list[Letter]]]:
    letters = word.letters
    ids = word.ids
    for config in _point_configs(ids, 1):
        sub, (c,), nid = _subdivide(letters, config)
        yield NegativeVertexType.ALPHA, config, (0,), _insert(sub, [(c, _gadget(_ALPHA, nid))])
    for config in _point_configs(ids, 2):
        sub, corners, nid = _subdivide(letters, config)
        # one gadget per point; letters b and c run between the two blocks
        first = _gadget(_BETA_FIRST, nid)
        second = _gadget(_BETA_SECOND, nid)
        for roles in ((0, 1), (1, 0)):
            p, q = (corners[r] for r in roles)
            yield NegativeVertexType.BETA, config, roles, _insert(sub, [(p, first), (q, second)])
    for config in _point_configs(ids, 3):
        sub, corners, nid = _subdivide(letters, config)
        c1, c2, c3 = sorted(corners)
        a, b, c = nid, nid + 1, nid + 2
        j1 = [Letter(a, 1), Letter(b, -1)]
        j2 = [Letter(c, 1), Letter(a, -1)]
        j3 = [Letter(b, 1), Letter(c, -1)]
        ta = sub[c1 + 1:c2 + 1]
        tb = sub[c2 + 1:c3 + 1]
        tc = sub[c3 + 1:] + sub[:c1 + 1]
        yield NegativeVertexType.GAMMA, config, (0, 1, 2), ta + j3 + tc + j1 + tb + j2


def construct_all(word: WicksWord) -> Iterator[Construction]:
    """Every maximal genus-(g+1) word reachable by one alpha, beta or gamma construction.

    Point configurations are tried in increasing edge order; candidates that
    fail to be maximal Wicks forms of genus g+1 are dropped.
    """
    g = _require_maximal(word)
    for kind, config, roles, letters in _candidates(word):
        try:
            cand = WicksWord(tuple(letters))
        except ValueError:
            continue
        if is_wicks_form(cand) and is_maximal(cand) and genus(cand) == g + 1:
            yield Construction(kind, config, roles, cand)


# -- IH-transformations ----------------------------------------------------

def ih_transform(word: WicksWord, edge_id: int) -> tuple[IHKind, WicksWord]:
    """Contract edge ``edge_id`` and re-expand the 4-valent vertex the other way."""
    _require_maximal(word)
    if edge_id not in word.positions:
        raise ValueError(f"edge {edge_id} does not occur in {word}")
    w = word.letters
    n = len(w)
    i, j = word.positions[edge_id]
    a, b = w[(i - 1) % n], w[(i + 1) % n]
    c, d = w[(j - 1) % n], w[(j + 1) % n]
    x = w[i]
    y_pos, y_neg = Letter(x.id, 1), Letter(x.id, -1)
    before: dict[int, Letter] = {}
    after: dict[int, Letter] = {}
    if c == _inv(a):
        kind = IHKind.TYPE2A
        before[(i - 1) % n] = y_pos
        before[(j - 1) % n] = y_neg
    elif d == _inv(b):
        kind = IHKind.TYPE2B
        after[(i + 1) % n] = y_pos
        after[(j + 1) % n] = y_neg
    else:
        kind = IHKind.TYPE1
        pairs = {(w[k], w[(k + 1) % n]): k for k in range(n)}
        p = pairs.get((_inv(d), _inv(a)))
        q = pairs.get((_inv(b), _inv(c)))
        if p is None or q is None:
            raise TransformError(f"IH on edge {edge_id} of {word}: expected factors not found")
        after[p] = y_pos
        after[q] = y_neg
    out = []
    for k, l in enumerate(w):
        if k in before:
            out.append(before[k])
        if k not in (i, j):
            out.append(l)
        if k in after:
            out.append(after[k])
    result = WicksWord(tuple(out))
    if not is_wicks_form(result) or not is_maximal(result):
        raise TransformError(f"IH on edge {edge_id} of {word} gave {result}")
    return kind, result
