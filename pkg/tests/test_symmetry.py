import pytest
from hypothesis import given, strategies as st

from wicks.symmetry import (automorphisms, canonical_form, canonical_string, equivalent,
                            symmetry_parameters)
from wicks.word import Letter, WicksWord, parse_word

WORDS = [
    "a1 a2 a3 a1' a2' a3'",
    "a b c d e a' f b' e' g h c' f' i g' d' h' i'",
    "a b a' b' c d c' d'",
]


def _relabel(word: WicksWord, perm: list[int], flips: list[bool]) -> WicksWord:
    return WicksWord(tuple(Letter(perm[l.id], -l.sign if flips[l.id] else l.sign) for l in word))


@given(st.sampled_from(WORDS), st.integers(0, 100), st.randoms(use_true_random=False))
def test_canonical_form_invariance(text, k, rnd):
    w = parse_word(text)
    ids = list(range(w.edge_count))
    perm = ids[:]
    rnd.shuffle(perm)
    flips = [rnd.random() < 0.5 for _ in ids]
    other = _relabel(w.rotate(k), perm, flips)
    assert canonical_string(other) == canonical_string(w)


def test_canonical_form_is_valid_word(example_word):
    cw, text = canonical_form(example_word)
    assert str(cw) == text
    assert equivalent(cw, example_word)


def test_inequivalent_words():
    assert not equivalent(parse_word("a1 a2 a3 a1' a2' a3'"), parse_word("a b a' b' c c'"))


def test_genus_one_has_order_six(genus_one):
    assert automorphisms(genus_one).order == 6


def test_example_has_involution(example_word):
    aut = automorphisms(example_word)
    assert aut.order % 2 == 0
    assert aut.shift_of_order(2) == 9
    assert symmetry_parameters(example_word, 9).r == 1


def test_genus_one_parameters(genus_one):
    aut = automorphisms(genus_one)
    three = symmetry_parameters(genus_one, aut.shift_of_order(3))
    assert (three.s, three.t) == (0, 2)
    six = symmetry_parameters(genus_one, aut.shift_of_order(6))
    assert (six.r, six.s, six.t) == (3, 0, 2)
    assert six.unscaled() == (1, 0, 1)


def test_trivial_group_in_census(census2):
    assert sum(1 for c in census2.classes if c.aut_order == 1) == 3
    for c in census2.classes:
        if c.aut_order == 1:
            assert automorphisms(parse_word(c.word)).order == 1


def test_non_member_shift_rejected(example_word):
    with pytest.raises(ValueError):
        symmetry_parameters(example_word, 1)
