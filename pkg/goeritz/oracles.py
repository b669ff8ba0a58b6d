"""
Oracles - slow, independent ways of computing what goeritz_algebra computes fast.

    generator_closure   subgroup elements by brute-force enumeration of products
    all_cores           every alternating core up to a length
    naive_rewrite       string rewriting with the defining relations only
    reflection_image    faithful integral matrix representation of the core

Nothing here calls the closed-form membership predicates, and reflection_image
never goes through to_normal_form, so agreement is real evidence.
"""

import logging
from collections import deque
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterable, Iterator, Tuple

from sympy import ImmutableMatrix, eye

from goeritz.goeritz_algebra import (
    CORE_LETTERS, GenWord, NormalForm, cancel_join, invert, parse_gen_word,
)

logger = logging.getLogger(__name__)


def generator_closure(generators: Iterable[NormalForm], max_core_len: int, slack: int = 2) -> FrozenSet[str]:
    """
    Cores of all products of the generators and their inverses with core
    length <= max_core_len. Intermediate products may run `slack` letters
    longer than the bound.
    """
    steps = set()
    for g in generators:
        steps.add(g.core)
        steps.add(invert(g).core)
    steps.discard('')

    limit = max_core_len + slack
    seen = {''}
    queue = deque([''])
    while queue:
        core = queue.popleft()
        for step in steps:
            nxt = cancel_join(core, step)
            if len(nxt) <= limit and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)

    logger.debug(f"generator_closure: {len(seen)} cores within length {limit}")
    return frozenset(c for c in seen if len(c) <= max_core_len)


def all_cores(max_len: int) -> Iterator[str]:
    """Every alternating word over g, s, t of length <= max_len, shortest first."""
    yield ''
    for n in range(1, max_len + 1):
        for first in CORE_LETTERS:
            for rest in product((1, 2), repeat=n - 1):
                word = first
                for shift in rest:
                    word += CORE_LETTERS[(CORE_LETTERS.index(word[-1]) + shift) % 3]
                yield word


# Naive rewriting

_RELATOR = 'gbsgbs'
_RELATOR_INVERSE = 'sBgsBg'

REWRITE_RULES: Tuple[Tuple[str, str], ...] = (
    ('gg', ''), ('ss', ''), ('bB', ''), ('Bb', ''),
    *((_RELATOR[i:] + _RELATOR[:i], '') for i in range(3)),
    *((_RELATOR_INVERSE[i:] + _RELATOR_INVERSE[:i], '') for i in range(3)),
    ('bsgb', 'gs'),     # gbsgbs = 1
    ('BgsB', 'sg'),     # sBgsBg = 1
)


def naive_rewrite(text: str) -> str:
    """
    Rewrite a generator word using only the defining relations: e, E and a
    collected to the left, then length-reducing rules on the b, g, s part
    until none applies. The result is equal to the input in G but is not
    guaranteed to be a normal form.
    """
    word = str(parse_gen_word(text))
    eps = word.count('e') - word.count('E')
    alpha = word.count('a') % 2
    rest = ''.join(c for c in word if c in 'bBgs')

    changed = True
    while changed:
        changed = False
        for pattern, replacement in REWRITE_RULES:
            if pattern in rest:
                rest = rest.replace(pattern, replacement, 1)
                changed = True
                break

    central = ('e' * eps) if eps >= 0 else ('E' * -eps)
    return central + 'a' * alpha + rest


# Reflection representation of <g> * <s> * <t>

# Gram form of the universal Coxeter group on three generators
_FORM = ((1, -1, -1), (-1, 1, -1), (-1, -1, 1))


def _reflection(i: int) -> ImmutableMatrix:
    rows = []
    for r in range(3):
        if r == i:
            rows.append([(1 if c == i else 0) - 2 * _FORM[i][c] for c in range(3)])
        else:
            rows.append([1 if c == r else 0 for c in range(3)])
    return ImmutableMatrix(rows)


REFLECTIONS = {letter: _reflection(i) for i, letter in enumerate(CORE_LETTERS)}
IDENTITY_MATRIX = ImmutableMatrix(eye(3))


@lru_cache(maxsize=4096)
def core_image(core: str) -> ImmutableMatrix:
    if not core:
        return IDENTITY_MATRIX
    return core_image(core[:-1]) * REFLECTIONS[core[-1]]


def normal_form_image(n: NormalForm) -> Tuple[int, int, ImmutableMatrix]:
    return n.eps_exp, n.alpha_bit, core_image(n.core)


def reflection_image(word: GenWord) -> Tuple[int, int, ImmutableMatrix]:
    """
    (epsilon exponent, alpha bit, matrix) of a raw generator word, letter by
    letter: b goes to M_g M_t M_s and B to M_s M_t M_g. Equal images mean equal
    elements.
    """
    eps = 0
    alpha = 0
    matrix = IDENTITY_MATRIX
    for letter in word.letters:
        if letter.base == 'e':
            eps += letter.sign
        elif letter.base == 'a':
            alpha ^= 1
        elif letter.base == 'b':
            matrix = matrix * core_image('gts' if letter.sign > 0 else 'stg')
        else:
            matrix = matrix * REFLECTIONS[letter.base]
    return eps, alpha, matrix
