from wicks.surface import VertexSign, build_surface_map, genus, is_maximal, sign_counts, vertex_signs
from wicks.word import parse_word


def test_torus_square():
    m = build_surface_map(parse_word("a b a' b'"))
    assert (m.vertex_count, m.edge_count, m.genus) == (1, 2, 1)
    assert list(m.vertex_degrees) == [4]


def test_theta_graph(genus_one):
    m = build_surface_map(genus_one)
    assert m.vertex_count == 2 and m.edge_count == 3 and m.genus == 1
    assert sorted(m.vertex_degrees) == [3, 3]


def test_example_genus(example_word):
    m = build_surface_map(example_word)
    assert (m.vertex_count, m.edge_count, m.genus) == (6, 9, 2)


def test_maximality(genus_one, example_word):
    assert not is_maximal(parse_word("a b a' b'"))
    assert is_maximal(genus_one)
    assert is_maximal(example_word)


def test_signs(genus_one, example_word):
    assert sign_counts(genus_one) == (0, 2)
    assert sign_counts(example_word) == (2, 4)
    signs, pos, neg = vertex_signs(example_word)
    assert signs.count(VertexSign.POSITIVE) == pos == 2


def test_higher_degree_is_unsigned():
    signs, pos, neg = vertex_signs(parse_word("a b a' b'"))
    assert signs == [VertexSign.UNSIGNED] and pos == neg == 0


def test_genus_of_two_handles():
    assert genus(parse_word("a b a' b' c d c' d'")) == 2
