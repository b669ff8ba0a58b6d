"""
Tests for amalgam normal forms, the tree action and finite balls
"""

import random

import networkx as nx
import pytest

from goeritz.bass_serre_tree import (
    BASE_BLACK, BASE_EDGE, BASE_WHITE, COLOR_SUBGROUP, Color, IsometryKind, Side,
    TreeEdge, TreeVertex,
    act, amalgam_form, ball_structure_report, build_ball, classify_isometry,
    displacement, factor_pieces, left_amalgam_form, min_displacement,
    orbit_and_quotient_check, same_vertex, to_dot, tree_distance,
)
from goeritz.errors import ResourceBoundError
from goeritz.goeritz_algebra import (
    ALPHA, BETA, GAMMA, IDENTITY, SIGMA, TAU,
    NormalForm, SubgroupId, element, is_member, multiply, power,
    random_gen_word, to_normal_form,
)


@pytest.fixture(scope='module')
def ball():
    return build_ball(3, 4)


def random_elements(seed, count, max_len=12):
    rng = random.Random(seed)
    return [to_normal_form(random_gen_word(rng, max_len)) for _ in range(count)]


def test_factor_pieces():
    assert factor_pieces('') == []
    assert factor_pieces('ts') == [(Side.A, 'ts')]
    assert factor_pieces('gs') == [(Side.A, 'g'), (Side.B, 's')]
    assert factor_pieces('sgt') == [(Side.B, 's'), (Side.A, 'g'), (Side.B, 't')]
    assert factor_pieces('gtsg') == [(Side.A, 'gtsg')]


def test_amalgam_form_examples():
    form = amalgam_form(TAU)
    assert form.prefix == TAU
    assert form.syllables == ()

    form = amalgam_form(SIGMA)
    assert form.prefix == IDENTITY
    assert [(s.side, s.rep.core) for s in form.syllables] == [(Side.B, 's')]

    form = amalgam_form(element('gs'))
    assert [(s.side, s.rep.core) for s in form.syllables] == [(Side.A, 'g'), (Side.B, 's')]
    assert form.product() == element('gs')


def test_amalgam_form_invariants():
    for g in random_elements(41, 300):
        form = amalgam_form(g)
        assert form.product() == g
        assert is_member(form.prefix, SubgroupId.STAB_PAIR_POINTWISE)
        sides = [s.side for s in form.syllables]
        assert all(a is not b for a, b in zip(sides, sides[1:]))
        for s in form.syllables:
            assert not is_member(s.rep, SubgroupId.STAB_PAIR_POINTWISE)
            side_group = SubgroupId.STAB_E if s.side is Side.A else SubgroupId.STAB_PAIR_SETWISE
            assert is_member(s.rep, side_group)


def test_left_and_right_forms_have_the_same_length():
    for g in random_elements(43, 300):
        syllables, suffix = left_amalgam_form(g)
        assert len(syllables) == len(amalgam_form(g))
        product = suffix
        for s in reversed(syllables):
            product = multiply(s.rep, product)
        assert product == g


def test_canonical_representatives():
    assert TreeVertex.at(Color.BLACK, BETA) == BASE_BLACK
    assert TreeVertex.at(Color.BLACK, element('eag')) == BASE_BLACK
    assert TreeVertex.at(Color.WHITE, SIGMA) == BASE_WHITE
    assert TreeEdge.at(TAU) == BASE_EDGE
    assert TreeVertex.at(Color.WHITE, element('eag')).rep == NormalForm(core='g')
    assert BASE_EDGE.black == BASE_BLACK
    assert BASE_EDGE.white == BASE_WHITE


def test_act_examples():
    v = TreeVertex.at(Color.WHITE, element('gs'))
    assert act(IDENTITY, v) == v
    moved = act(SIGMA, BASE_BLACK)
    assert moved.color is Color.BLACK
    assert tree_distance(BASE_BLACK, moved) == 2
    assert act(GAMMA, BASE_WHITE) != BASE_WHITE
    assert act(GAMMA, BASE_BLACK) == BASE_BLACK
    assert act(ALPHA, BASE_BLACK) == BASE_BLACK


def test_same_vertex_agrees_with_equality(ball):
    vertices = sorted(ball.vertices, key=lambda v: v.label)
    for v in vertices:
        for w in vertices:
            assert same_vertex(v, w) == (v == w)
    for g in random_elements(47, 50):
        for color in Color:
            h = subgroup_element(color, g)
            assert TreeVertex.at(color, g) == TreeVertex.at(color, multiply(g, h))
            assert same_vertex(TreeVertex(color, g.core_part), TreeVertex.at(color, g))


def subgroup_element(color, seed_element):
    # some non-trivial member of the color's stabilizer
    if color is Color.BLACK:
        return multiply(power(TAU, len(seed_element.core) % 3), GAMMA)
    return multiply(SIGMA, power(TAU, 2))


def test_stabilizer_consistency(ball):
    for g in random_elements(53, 40):
        for v in ball.vertices:
            fixed = act(g, v) == v
            conjugate = multiply(multiply(~v.rep, g), v.rep)
            assert fixed == is_member(conjugate, COLOR_SUBGROUP[v.color])


def test_tree_distance(ball):
    assert tree_distance(BASE_BLACK, BASE_BLACK) == 0
    assert tree_distance(BASE_BLACK, BASE_WHITE) == 1
    for v, depth in ball.depths.items():
        assert min(tree_distance(BASE_BLACK, v), tree_distance(BASE_WHITE, v)) == depth
    graph = ball.graph()
    rng = random.Random(59)
    vertices = sorted(ball.vertices, key=lambda v: v.label)
    for _ in range(100):
        v, w = rng.sample(vertices, 2)
        assert tree_distance(v, w) == nx.shortest_path_length(graph, v, w)
        assert tree_distance(v, w) == tree_distance(w, v)


def test_distance_is_invariant_under_the_action(ball):
    vertices = sorted(ball.vertices, key=lambda v: v.label)[:15]
    for g in random_elements(61, 10):
        for v in vertices:
            for w in vertices:
                assert tree_distance(act(g, v), act(g, w)) == tree_distance(v, w)


def test_classify_examples():
    iso = classify_isometry(ALPHA)
    assert iso.kind is IsometryKind.ELLIPTIC
    assert iso.witness == BASE_BLACK

    iso = classify_isometry(BETA)
    assert iso.kind is IsometryKind.ELLIPTIC
    assert iso.witness == BASE_BLACK

    iso = classify_isometry(SIGMA)
    assert iso.witness == BASE_WHITE
    assert str(iso) == 'elliptic white:1'

    iso = classify_isometry(element('gs'))
    assert iso.kind is IsometryKind.HYPERBOLIC
    assert iso.translation_length == 2
    assert str(iso) == 'hyperbolic 2'


def test_classify_conjugates_odd_forms():
    g = element('gsg')
    assert len(amalgam_form(g)) == 3
    iso = classify_isometry(g)
    assert iso.kind is IsometryKind.ELLIPTIC
    assert iso.witness == TreeVertex(Color.WHITE, NormalForm(core='g'))
    assert act(g, iso.witness) == iso.witness


def test_classify_random_elements(ball):
    for g in random_elements(67, 100):
        iso = classify_isometry(g)
        if iso.kind is IsometryKind.ELLIPTIC:
            assert act(g, iso.witness) == iso.witness
        else:
            length = iso.translation_length
            assert length >= 2 and length % 2 == 0
            assert displacement(g, iso.witness) == length
            assert classify_isometry(power(g, 2)).translation_length == 2 * length
            assert min_displacement(g, ball, interior_only=False) >= length
            if iso.witness in ball.depths and ball.is_interior(iso.witness):
                assert min_displacement(g, ball) == length


def test_gamma_sigma_minimum_displacement():
    assert min_displacement(element('gs'), build_ball(4, 6)) == 2


def test_build_ball_radius_zero():
    ball = build_ball(0, 6)
    assert ball.vertices == {BASE_BLACK, BASE_WHITE}
    assert ball.edges == {BASE_EDGE}


def test_build_ball_valency():
    ball = build_ball(2, 4)
    assert len(ball.vertices) == 12
    assert len(ball.edges) == 11
    for v in ball.interior_vertices():
        if v.color is Color.WHITE:
            assert ball.valency(v) == 2
        else:
            assert ball.valency(v) == 4


def test_build_ball_caps():
    with pytest.raises(ResourceBoundError):
        build_ball(7, 4)
    with pytest.raises(ResourceBoundError):
        build_ball(2, 13)
    with pytest.raises(ValueError):
        build_ball(-1, 4)


def test_ball_structure_report():
    records = ball_structure_report(build_ball(4, 6))
    assert len(records) == 5
    assert all(r.passed for r in records), [r.name for r in records if not r.passed]
    assert all(r.criterion == 5 for r in records)


def test_ball_edges_join_black_to_white(ball):
    for e in ball.edges:
        assert e.black.color is Color.BLACK
        assert e.white.color is Color.WHITE
        assert tree_distance(e.black, e.white) == 1


@pytest.mark.parametrize('radius', [0, 4])
def test_orbit_and_quotient_check(radius):
    report = orbit_and_quotient_check(build_ball(radius, 6))
    assert (report.black_orbits, report.white_orbits, report.edge_orbits) == (1, 1, 1)
    assert report.passed


def test_action_preserves_color_orbits(ball):
    for g in random_elements(71, 100, max_len=8):
        for v in list(ball.vertices)[:10]:
            image = act(g, v)
            assert image.color is v.color
            assert act(~image.rep, image) == (BASE_BLACK if v.color is Color.BLACK else BASE_WHITE)


def test_to_dot():
    ball = build_ball(2, 3)
    dot = to_dot(ball)
    assert dot == to_dot(build_ball(2, 3))
    assert dot.startswith('graph tree {')
    assert dot.rstrip().endswith('}')
    assert dot.count(' -- ') == len(ball.edges)
    assert dot.count('fillcolor=black') == len([v for v in ball.vertices if v.color is Color.BLACK])
    assert '"black:1"' in dot and '"white:1"' in dot
