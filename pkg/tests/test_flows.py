from itertools import product

import pytest

from wicks.flows import (FlowVector, edge_permutation, flow_space_dimension, incidence_matrix,
                         invariant_flow_dimension, quotient_by_involution, quotient_by_order3,
                         rank_mod_p)
from wicks.surface import genus, is_maximal
from wicks.symmetry import automorphisms, canonical_string, symmetry_parameters
from wicks.word import is_wicks_form, parse_word

# genus-6 words with an order-3 rotation (shift 22) fixing s positive and no negative vertices
GENUS_SIX_T0 = {
    1: "a1 a2 a3 a1' a4 a2' a3' a4' a5 a6 a7 a8 a6' a9 a10 a7' a8' a10' a11 a12 a13 a14 a15 a16 a17 "
       "a15' a18 a16' a17' a18' a14' a19 a20 a21 a19' a13' a22 a20' a21' a22' a12' a23 a24 a25 a26 "
       "a27 a28 a26' a29 a27' a28' a29' a25' a30 a31 a32 a30' a24' a33 a31' a32' a33' a23' a11' a9' a5'",
    4: "a1 a2 a3 a1' a4 a2' a3' a4' a5 a6 a7 a8 a9 a10 a11 a12 a13 a14 a6' a15 a16 a17 a18 a19 a20 "
       "a18' a21 a19' a20' a21' a17' a22 a23 a9' a24 a11' a25 a7' a14' a26 a22' a16' a27 a28 a29 a30 "
       "a31 a29' a32 a30' a31' a32' a28' a33 a12' a24' a8' a25' a10' a23' a26' a13' a33' a27' a15' a5'",
}


def test_rank_mod_p():
    assert rank_mod_p([[1, 1], [1, 1]], 2) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 3) == 1
    assert rank_mod_p([[1, 2], [2, 1]], 2) == 2
    assert rank_mod_p([], 3) == 0


def test_dimensions_small(genus_one):
    assert flow_space_dimension(genus_one, 2) == 2
    assert flow_space_dimension(genus_one, 3) == 2
    assert flow_space_dimension(parse_word("a b a' b'"), 2) == 2


def test_dimension_is_twice_genus(census2):
    for cls in census2.classes:
        w = parse_word(cls.word)
        assert flow_space_dimension(w, 2) == flow_space_dimension(w, 3) == 4


def test_example_quotient(example_word):
    q = quotient_by_involution(example_word, 9)
    assert q.r == 1 and q.genus == 1
    assert canonical_string(q.reduced_word) == canonical_string(parse_word("a b e a' b' e'"))
    names = {q.reduced_word.name(i): v for i, v in q.flow.values.items()}
    assert names == {"a": 1, "b": 1, "e": 0}


def test_involution_rejects_bad_shift(example_word):
    with pytest.raises(ValueError):
        quotient_by_involution(example_word, 3)


def _involution_checks(census):
    checked = 0
    for cls in census.classes:
        if cls.r is None:
            continue
        w = parse_word(cls.word)
        g = genus(w)
        q = quotient_by_involution(w, len(w) // 2)
        assert 4 * q.genus == 2 * g + 1 - cls.r
        if q.is_empty:
            assert q.genus == 0 and q.flow is None
        else:
            assert is_wicks_form(q.reduced_word) and is_maximal(q.reduced_word)
            assert genus(q.reduced_word) == q.genus
            assert q.flow.is_conserved(q.reduced_word)
        checked += 1
    return checked


def test_involution_genus_two(census2):
    assert _involution_checks(census2) == 5


def test_involution_genus_three(census3):
    assert _involution_checks(census3) == report_m2_count(3)


def report_m2_count(g):
    from wicks.count import report
    return report(g).M2


def _order3_check(w, shift):
    g = genus(w)
    p = symmetry_parameters(w, shift)
    q = quotient_by_order3(w, shift)
    assert 3 * q.genus == g + 1 - p.s
    assert q.s == p.s and q.t == 0
    if q.is_empty:
        assert q.flow is None
    else:
        assert is_maximal(q.reduced_word) and genus(q.reduced_word) == q.genus
        assert q.flow.modulus == 3 and q.flow.is_conserved(q.reduced_word)
    return q


def test_order3_genus_three(census3):
    hits = 0
    for cls in census3.classes:
        if cls.t == 0:
            w = parse_word(cls.word)
            _order3_check(w, len(w) // 3)
            hits += 1
    assert hits > 0


@pytest.mark.parametrize("s", sorted(GENUS_SIX_T0))
def test_order3_genus_six(s):
    w = parse_word(GENUS_SIX_T0[s])
    assert genus(w) == 6
    p = symmetry_parameters(w, 22)
    assert (p.s, p.t) == (s, 0)
    _order3_check(w, 22)


def test_order3_rejects_negative_fixed(census2):
    (cls,) = [c for c in census2.classes if c.aut_order == 3]
    w = parse_word(cls.word)
    with pytest.raises(ValueError):
        quotient_by_order3(w, 6)


def test_order3_orbit_count(census3):
    for cls in census3.classes:
        if cls.s is not None:
            w = parse_word(cls.word)
            perm = edge_permutation(w, len(w) // 3)
            orbits = set()
            for x in w.ids:
                y = perm[x][0]
                z = perm[y][0]
                orbits.add(frozenset((x, y, z)))
            assert len(orbits) == 2 * 3 - 1


def _brute_invariant(w, shift):
    rows, edges = incidence_matrix(w, 2)
    perm = edge_permutation(w, shift)
    col = {x: k for k, x in enumerate(edges)}
    count = 0
    for vec in product((0, 1), repeat=len(edges)):
        if any(sum(a * b for a, b in zip(row, vec)) % 2 for row in rows):
            continue
        if all(vec[col[perm[x][0]]] == vec[col[x]] for x in edges):
            count += 1
    return count


def test_invariant_dimension_small(genus_one, census2):
    assert invariant_flow_dimension(genus_one, 2) == 0
    (cls,) = [c for c in census2.classes if c.aut_order == 3]
    assert invariant_flow_dimension(parse_word(cls.word), 6) == 0


def test_invariant_dimension_brute_force(census3):
    seen = set()
    for cls in census3.classes:
        if cls.s is None or (cls.s, cls.t) in seen:
            continue
        seen.add((cls.s, cls.t))
        w = parse_word(cls.word)
        dim = invariant_flow_dimension(w, len(w) // 3)
        assert 2 ** dim == _brute_invariant(w, len(w) // 3)
        assert dim <= flow_space_dimension(w, 2)


def test_flow_vector_conservation(genus_one):
    # theta graph: the three edges run between the two vertices
    assert FlowVector(2, {0: 1, 1: 1, 2: 0}).is_conserved(genus_one)
    assert not FlowVector(2, {0: 1, 1: 0, 2: 0}).is_conserved(genus_one)
