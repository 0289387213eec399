"""Z/p-flows on the graph of a Wicks form and quotients by symmetries of order 2 and 3."""

from __future__ import annotations

from dataclasses import dataclass

from .surface import VertexSign, build_surface_map, cycle_sign, genus, is_maximal
from .symmetry import _check_member, fixed_vertices, shift_order
from .transform import compact, simplify
from .word import Letter, WicksWord, is_wicks_form


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over Z/p (p prime), by Gaussian elimination."""
    m = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def incidence_matrix(word: WicksWord, p: int) -> tuple[list[list[int]], list[int]]:
    """Vertex-by-edge incidence: +1 at the head, -1 at the tail (a loop gives 0)."""
    smap = build_surface_map(word)
    edges = sorted(smap.edge_ends)
    rows = [[0] * len(edges) for _ in range(smap.vertex_count)]
    for col, x in enumerate(edges):
        tail, head = smap.edge_ends[x]
        if p == 2:
            rows[tail][col] += 1
            rows[head][col] += 1
        else:
            rows[head][col] += 1
            rows[tail][col] -= 1
    return [[v % p for v in row] for row in rows], edges


def flow_space_dimension(word: WicksWord, p: int) -> int:
    if p not in (2, 3):
        raise ValueError("modulus must be 2 or 3")
    rows, edges = incidence_matrix(word, p)
    return len(edges) - rank_mod_p(rows, p)


@dataclass(frozen=True)
class FlowVector:
    """Values in Z/p per letter id, for the positive orientation of the letter."""

    modulus: int
    values: dict[int, int]

    def is_conserved(self, word: WicksWord) -> bool:
        rows, edges = incidence_matrix(word, self.modulus)
        vec = [self.values[x] for x in edges]
        return all(sum(a * b for a, b in zip(row, vec)) % self.modulus == 0 for row in rows)


@dataclass(frozen=True)
class QuotientData:
    """Result of folding a symmetric word along an automorphism.

    ``reduced_word`` is ``None`` when everything cancels (the quotient has
    genus 0); the flow is then omitted too.
    """

    reduced_word: WicksWord | None
    flow: FlowVector | None
    genus: int
    r: int | None = None
    s: int | None = None
    t: int | None = None

    @property
    def is_empty(self) -> bool:
        return self.reduced_word is None


class FlowError(AssertionError):
    """The folded flow failed conservation; signals a bug, not bad input."""


def _fold(word: WicksWord, p: int, dropped: set[int], circle: list[int]) -> tuple[WicksWord | None, FlowVector | None]:
    """Fold the first 1/p of ``word`` into a word on orbits and clean it up.

    Each orbit of oriented letters is represented by its occurrence among
    the first n/p positions; a representative is paired with the
    representative of its inverse's orbit.  ``circle[q]`` is the sheet of
    position q; a letter's flow is the sheet change from it to its inverse.
    """
    w = word.letters
    n = len(w)
    step = n // p
    part = word.partner
    letters: dict[int, Letter] = {}
    values: dict[int, int] = {}
    for q in range(step):
        if w[q].id in dropped or q in letters:
            continue
        k = part[q] % step
        if k == q:
            raise FlowError(f"position {q} pairs with itself but its edge was not dropped")
        letters[q] = w[q]
        letters[k] = Letter(w[q].id, -w[q].sign)
        values[w[q].id] = w[q].sign * (circle[part[q]] - circle[q]) % p
    folded = [letters[q] for q in range(step) if q in letters]

    def on_merge(x: Letter, y: Letter) -> None:
        if (x.sign * values[x.id] - y.sign * values[y.id]) % p:
            raise FlowError(f"flow changes across a 2-valent vertex of the quotient of {word}")

    reduced = simplify(folded, on_merge)
    if not reduced:
        return None, None
    old_ids = sorted({l.id for l in reduced})
    result = WicksWord(compact(reduced), tuple(word.name(i) for i in old_ids))
    flow = FlowVector(p, {k: values[i] for k, i in enumerate(old_ids)})
    if not is_wicks_form(result) or not is_maximal(result):
        raise FlowError(f"quotient of {word} is not a maximal Wicks form: {result}")
    if not flow.is_conserved(result):
        raise FlowError(f"folded flow on {result} is not conserved")
    return result, flow


def quotient_by_involution(word: WicksWord, shift: int) -> QuotientData:
    n = len(word)
    shift %= n
    _check_member(word, shift)
    if shift_order(n, shift) != 2:
        raise ValueError(f"rotation by {shift} does not have order 2")
    g = genus(word)
    part = word.partner
    reversed_pos = [q for q in range(n) if part[q] == (q + shift) % n]
    dropped = {word[q].id for q in reversed_pos}
    r = len(dropped)
    # sheets alternate each time the boundary walk runs along a reversed edge
    circle = []
    crossed = 0
    for q in range(n):
        circle.append(crossed % 2)
        if q in reversed_pos:
            crossed += 1
    reduced, flow = _fold(word, 2, dropped, circle)
    f, rem = divmod(2 * g + 1 - r, 4)
    if rem or (reduced is None) != (f == 0) or (reduced is not None and genus(reduced) != f):
        raise FlowError(f"quotient of {word} has the wrong genus (expected {f})")
    return QuotientData(reduced, flow, f, r=r)


def quotient_by_order3(word: WicksWord, shift: int) -> QuotientData:
    n = len(word)
    shift %= n
    _check_member(word, shift)
    if shift_order(n, shift) != 3:
        raise ValueError(f"rotation by {shift} does not have order 3")
    g = genus(word)
    if g < 2:
        raise ValueError("order-3 quotients need genus > 1")
    smap = build_surface_map(word)
    fixed = set(fixed_vertices(word, shift))
    signs = {v: cycle_sign(smap.vertex_cycles[v], smap.rotation) for v in fixed}
    s = sum(1 for v in fixed if signs[v] is VertexSign.POSITIVE)
    t = len(fixed) - s
    if t:
        raise ValueError(f"rotation by {shift} fixes {t} negative vertices; only t = 0 is folded")
    dropped = {x for x, (tail, head) in smap.edge_ends.items() if tail in fixed or head in fixed}
    part = word.partner
    # passing a fixed vertex moves the walk from the sheet of the incoming leg
    # to the sheet of the outgoing one, i.e. by the power of the rotation
    # carrying one leg to the other
    circle = []
    sheet = 0
    for q in range(n):
        circle.append(sheet)
        if smap.corner_vertex[q] in fixed:
            target = part[(q + 1) % n]
            j = next(j for j in (1, 2) if (q + j * shift) % n == target)
            sheet = (sheet + j) % 3
    reduced, flow = _fold(word, 3, dropped, circle)
    f, rem = divmod(g + 1 - s, 3)
    if rem or (reduced is None) != (f == 0) or (reduced is not None and genus(reduced) != f):
        raise FlowError(f"quotient of {word} has the wrong genus (expected {f})")
    return QuotientData(reduced, flow, f, s=s, t=t)


def edge_permutation(word: WicksWord, shift: int) -> dict[int, tuple[int, int]]:
    """Letter id x -> (id, sign) of the image of the positive occurrence of x."""
    n = len(word)
    return {x: tuple(word[(plus + shift) % n]) for x, (plus, _) in word.positions.items()}


def invariant_flow_dimension(word: WicksWord, shift: int, p: int = 2) -> int:
    """Dimension of the Z/p-flows fixed by an order-3 rotation."""
    n = len(word)
    shift %= n
    _check_member(word, shift)
    if shift_order(n, shift) != 3:
        raise ValueError(f"rotation by {shift} does not have order 3")
    rows, edges = incidence_matrix(word, p)
    col = {x: k for k, x in enumerate(edges)}
    for x, (y, sign) in edge_permutation(word, shift).items():
        row = [0] * len(edges)
        row[col[y]] += sign
        row[col[x]] -= 1
        rows.append([v % p for v in row])
    return len(edges) - rank_mod_p(rows, p)
