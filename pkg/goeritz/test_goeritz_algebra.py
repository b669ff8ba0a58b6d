"""
Tests for normal forms, orders and stabilizer membership
"""

import random

import pytest
from sympy import oo

from goeritz.errors import WordParseError
from goeritz.goeritz_algebra import (
    ALPHA, BETA, BETA_PRIME, EPSILON, GAMMA, IDENTITY, SIGMA, TAU, TAU_PRIME,
    NormalForm, SubgroupId,
    element, format_normal_form, from_normal_form, invert, is_member, multiply,
    order, parse_gen_word, power, random_gen_word, subgroup_generators,
    to_normal_form, verify_presentation,
)


def test_parse_normalizes_involutions_and_expands_t():
    assert str(parse_gen_word('AGS')) == 'ags'
    assert str(parse_gen_word('t')) == 'gbs'
    assert str(parse_gen_word('T')) == 'gbs'
    assert str(parse_gen_word('e E b B')) == 'eEbB'


def test_parse_rejects_bad_letter():
    with pytest.raises(WordParseError) as info:
        parse_gen_word('gbq')
    assert info.value.position == 2


def test_normal_form_format():
    assert format_normal_form(element('')) == 'e^0 a^0 | 1'
    assert format_normal_form(element('eeaB')) == 'e^2 a^1 | stg'
    assert format_normal_form(element('EbE')) == 'e^-2 a^0 | gts'
    assert str(element('gbs')) == 'e^0 a^0 | t'


def test_normal_form_rejects_bad_values():
    with pytest.raises(ValueError):
        NormalForm(core='gg')
    with pytest.raises(ValueError):
        NormalForm(core='gx')
    with pytest.raises(ValueError):
        NormalForm(alpha_bit=2)


@pytest.mark.parametrize('relator', ['gg', 'ss', 'aa', 'gbsgbs', 'bsgbsg', 'sgbsgb', 'bB', 'Bb', 'eE'])
def test_relators_normalize_to_identity(relator):
    assert element(relator).is_identity


def test_derived_elements():
    assert multiply(BETA, BETA_PRIME) == ALPHA
    assert multiply(BETA, BETA_PRIME) == multiply(BETA_PRIME, BETA)
    assert power(multiply(BETA, BETA_PRIME), 2).is_identity
    assert TAU.core == 'ts'
    assert TAU_PRIME.core == 't'
    assert BETA.core == 'gts'
    assert invert(BETA).core == 'stg'


def test_central_letters_commute():
    for word in ('b', 'g', 's', 'gbs'):
        x = element(word)
        for central in (EPSILON, ALPHA):
            assert multiply(central, x) == multiply(x, central)


@pytest.mark.parametrize('word, expected', [
    ('', 1),
    ('a', 2),
    ('g', 2),
    ('s', 2),
    ('gbs', 2),
    ('sgs', 2),
    ('ag', 2),
    ('b', oo),
    ('e', oo),
    ('gb', oo),
    ('gs', oo),
    ('ea', oo),
])
def test_order(word, expected):
    assert order(element(word)) == expected


def test_named_element_orders():
    assert order(TAU_PRIME) == 2
    assert order(BETA_PRIME) == oo
    assert order(TAU) == oo


def test_homomorphism_and_inverse():
    rng = random.Random(17)
    for _ in range(500):
        u, v = random_gen_word(rng, 15), random_gen_word(rng, 15)
        nu, nv = to_normal_form(u), to_normal_form(v)
        assert to_normal_form(u * v) == multiply(nu, nv)
        assert multiply(nu, invert(nu)) == IDENTITY
        assert multiply(invert(nu), nu) == IDENTITY


def test_round_trip():
    rng = random.Random(23)
    for _ in range(300):
        n = to_normal_form(random_gen_word(rng, 30))
        assert to_normal_form(from_normal_form(n)) == n
    assert str(from_normal_form(NormalForm(core='t'))) == 'gbs'


@pytest.mark.parametrize('subgroup, expected', [
    (SubgroupId.STAB_E, True),
    (SubgroupId.STAB_PAIR_SETWISE, True),
    (SubgroupId.STAB_PAIR_POINTWISE, True),
    # tau moves E' to D', so it does not fix E'
    (SubgroupId.STAB_E_EPRIME, False),
])
def test_tau_membership(subgroup, expected):
    assert is_member(TAU, subgroup) == expected


def test_membership_examples():
    assert is_member(SIGMA, SubgroupId.STAB_PAIR_SETWISE)
    assert not is_member(SIGMA, SubgroupId.STAB_PAIR_POINTWISE)
    t = NormalForm(core='t')
    assert is_member(t, SubgroupId.STAB_PAIR_SETWISE)
    assert not is_member(t, SubgroupId.STAB_E)
    assert is_member(BETA, SubgroupId.STAB_E_EPRIME)
    assert is_member(power(BETA, -3), SubgroupId.STAB_E_EPRIME)
    assert not is_member(GAMMA, SubgroupId.STAB_E_EPRIME)
    assert is_member(element('eag'), SubgroupId.STAB_E_DUAL_PAIR)
    assert not is_member(SIGMA, SubgroupId.STAB_DUALS_POINTWISE)
    assert is_member(TAU_PRIME, SubgroupId.STAB_PAIR_DUAL_PAIR)


def test_membership_is_closed_under_products_and_inverses():
    rng = random.Random(29)
    for s in SubgroupId:
        gens = subgroup_generators(s)
        assert all(is_member(g, s) for g in gens)
        assert is_member(IDENTITY, s)
        for _ in range(50):
            x = IDENTITY
            for g in rng.choices(gens, k=rng.randint(1, 6)):
                x = multiply(x, g if rng.random() < 0.5 else invert(g))
            assert is_member(x, s)
            assert is_member(invert(x), s)


def test_pointwise_has_index_two_in_setwise():
    # cosets of G_{D,E} in G_{DuE} are represented by 1 and sigma
    rng = random.Random(31)
    gens = subgroup_generators(SubgroupId.STAB_PAIR_SETWISE)
    for _ in range(100):
        x = IDENTITY
        for g in rng.choices(gens, k=rng.randint(1, 8)):
            x = multiply(x, g)
        in_edge = is_member(x, SubgroupId.STAB_PAIR_POINTWISE)
        in_sigma_coset = is_member(multiply(SIGMA, x), SubgroupId.STAB_PAIR_POINTWISE)
        assert in_edge != in_sigma_coset


def test_verify_presentation_passes():
    records = verify_presentation(round_trips=100, seed=1)
    assert records
    assert all(r.criterion == 1 for r in records)
    assert [r.name for r in records if not r.passed] == []
