"""
F2 Kernel - word algebra for the rank-2 free group pi_1(W) = <x, y>.

Reads disk boundary words and decides the criteria used to recognize
reducing and primitive disks algebraically:
    - triviality (the reducing disk E_0 bounds a trivial word)
    - primitivity (Whitehead peak reduction)
    - the fast "both y and y^-1 occur cyclically" non-primitivity filter

Text format: x, y are generators, X, Y their inverses. Whitespace is ignored.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from goeritz import config
from goeritz.errors import ResourceBoundError, WordParseError

logger = logging.getLogger(__name__)

F2, _x, _y = free_group("x, y")
GENERATORS = {'x': _x, 'y': _y}
F2_ALPHABET = 'xyXY'


@dataclass(frozen=True, order=True)
class F2Letter:
    base: str
    sign: int

    def __post_init__(self):
        if self.base not in GENERATORS or self.sign not in (1, -1):
            raise ValueError(f"Invalid F2 letter: base={self.base!r} sign={self.sign!r}")

    @classmethod
    def from_char(cls, char: str) -> F2Letter:
        return cls(char.lower(), 1 if char.islower() else -1)

    def inverse(self) -> F2Letter:
        return F2Letter(self.base, -self.sign)

    def __str__(self):
        return self.base if self.sign > 0 else self.base.upper()


@dataclass(frozen=True, order=True)
class F2Word:
    """A (not necessarily reduced) word in x, y and their inverses."""
    letters: Tuple[F2Letter, ...] = ()

    @classmethod
    def from_element(cls, element: FreeGroupElement) -> F2Word:
        letters = []
        for symbol, exp in element.array_form:
            letter = F2Letter(str(symbol), 1 if exp > 0 else -1)
            letters.extend([letter] * abs(exp))
        return cls(tuple(letters))

    def to_element(self) -> FreeGroupElement:
        element = F2.identity
        for letter in self.letters:
            element = element * GENERATORS[letter.base] ** letter.sign
        return element

    def inverse(self) -> F2Word:
        return F2Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    @property
    def is_reduced(self) -> bool:
        return all(a != b.inverse() for a, b in zip(self.letters, self.letters[1:]))

    @property
    def is_cyclically_reduced(self) -> bool:
        if not self.is_reduced:
            return False
        return len(self.letters) < 2 or self.letters[0] != self.letters[-1].inverse()

    def __mul__(self, other: F2Word) -> F2Word:
        return F2Word(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[F2Letter]:
        return iter(self.letters)

    def __str__(self):
        return ''.join(str(letter) for letter in self.letters)


class DiskWordClass(Enum):
    REDUCING = 'reducing'
    PRIMITIVE = 'primitive'
    NON_PRIMITIVE = 'non-primitive'


def parse_f2_word(text: str) -> F2Word:
    """Parse 'xyXY'-style text into an F2Word (no reduction)."""
    letters = []
    for i, char in enumerate(text):
        if char.isspace():
            continue
        if char not in F2_ALPHABET:
            raise WordParseError(text, i, F2_ALPHABET)
        letters.append(F2Letter.from_char(char))
    return F2Word(tuple(letters))


# Free reduction and friends

def reduce(w: F2Word) -> F2Word:
    return F2Word.from_element(w.to_element())


def cyclic_reduce(w: F2Word) -> F2Word:
    return F2Word.from_element(w.to_element().cyclic_reduction())


def exponent_sums(w: F2Word) -> Tuple[int, int]:
    element = w.to_element()
    return element.exponent_sum(_x), element.exponent_sum(_y)


def is_trivial(w: F2Word) -> bool:
    return w.to_element().is_identity


def canonical_cyclic_word(w: F2Word) -> F2Word:
    """
    Canonical representative of the cyclic word of w up to inversion:
    the lexicographically least rotation of w or w^-1 (after cyclic reduction).
    """
    element = w.to_element().cyclic_reduction()
    if element.is_identity:
        return F2Word()
    rotations = element.cyclic_conjugates() | (element ** -1).cyclic_conjugates()
    return min((F2Word.from_element(r) for r in rotations), key=str)


def cyclic_class(w: F2Word) -> FrozenSet[F2Word]:
    """All rotations of the cyclic reduction of w and of its inverse."""
    element = w.to_element().cyclic_reduction()
    if element.is_identity:
        return frozenset({F2Word()})
    rotations = element.cyclic_conjugates() | (element ** -1).cyclic_conjugates()
    return frozenset(F2Word.from_element(r) for r in rotations)


def mixed_inverse_criterion(w: F2Word) -> bool:
    """
    True when the cyclic reduction of w is nonempty and some generator occurs
    in it with both signs. Such a word is non-trivial and never primitive.
    """
    cyclic = cyclic_reduce(w)
    if not cyclic.letters:
        return False
    signs: Dict[str, set] = {}
    for letter in cyclic.letters:
        signs.setdefault(letter.base, set()).add(letter.sign)
    return any(len(s) == 2 for s in signs.values())


# Whitehead peak reduction

class WhiteheadMove(NamedTuple):
    name: str
    images: Dict[str, FreeGroupElement]


def apply_automorphism(images: Dict[str, FreeGroupElement], element: FreeGroupElement) -> FreeGroupElement:
    """Evaluate the endomorphism x -> images['x'], y -> images['y'] on element."""
    result = F2.identity
    for symbol, exp in element.array_form:
        result = result * images[str(symbol)] ** exp
    return result


def _whitehead_moves() -> List[WhiteheadMove]:
    moves = []

    # Multiplier moves: one basis element multiplied by the other (or its
    # inverse) on the left or on the right.
    for fixed, moving in (('x', 'y'), ('y', 'x')):
        a, b = GENERATORS[fixed], GENERATORS[moving]
        for m in (a, a ** -1):
            label = F2Word.from_element(m)
            moves.append(WhiteheadMove(f"{moving}->{moving}{label}", {fixed: a, moving: b * m}))
            moves.append(WhiteheadMove(f"{moving}->{label}{moving}", {fixed: a, moving: m * b}))

    # Permutations and inversions of the basis. These never shorten a cyclic
    # word; kept so the list is the full rank-2 Whitehead set.
    for first, second in (('x', 'y'), ('y', 'x')):
        for s1, s2 in product((1, -1), repeat=2):
            if (first, s1, s2) == ('x', 1, 1):
                continue
            images = {'x': GENERATORS[first] ** s1, 'y': GENERATORS[second] ** s2}
            name = f"x->{F2Word.from_element(images['x'])},y->{F2Word.from_element(images['y'])}"
            moves.append(WhiteheadMove(name, images))

    return moves


WHITEHEAD_MOVES = _whitehead_moves()


def whitehead_minimize(w: F2Word) -> F2Word:
    """
    Greedy peak reduction: apply the first Whitehead move that strictly
    shortens the cyclic word until none does. The result has minimal cyclic
    length in the Aut(F2)-orbit of w.
    """
    current = w.to_element().cyclic_reduction()
    while len(current) > 1:
        for move in WHITEHEAD_MOVES:
            candidate = apply_automorphism(move.images, current).cyclic_reduction()
            if len(candidate) < len(current):
                logger.debug(f"Whitehead {move.name}: length {len(current)} -> {len(candidate)}")
                current = candidate
                break
        else:
            break
    return F2Word.from_element(current)


def is_primitive(w: F2Word) -> bool:
    sums = exponent_sums(w)
    if gcd(*sums) != 1:
        return False
    if mixed_inverse_criterion(w):
        return False
    return len(whitehead_minimize(w)) == 1


def classify_disk_word(w: F2Word) -> DiskWordClass:
    w = reduce(w)
    if is_trivial(w):
        return DiskWordClass.REDUCING
    if is_primitive(w):
        return DiskWordClass.PRIMITIVE
    return DiskWordClass.NON_PRIMITIVE


# Enumeration and oracle

def cyclically_reduced_words(max_len: int) -> Iterator[F2Word]:
    """Every cyclically reduced word of length <= max_len, shortest first."""
    yield F2Word()
    for n in range(1, max_len + 1):
        for chars in product(F2_ALPHABET, repeat=n):
            word = F2Word(tuple(F2Letter.from_char(c) for c in chars))
            if word.is_cyclically_reduced:
                yield word


def _nielsen_neighbours(u: FreeGroupElement, v: FreeGroupElement) -> Iterator[Tuple[FreeGroupElement, FreeGroupElement]]:
    yield v, u
    yield u ** -1, v
    yield u, v ** -1
    for e in (1, -1):
        yield u * v ** e, v
        yield v ** e * u, v
        yield u, v * u ** e
        yield u, u ** e * v


def brute_force_primitive_oracle(max_len: int) -> FrozenSet[F2Word]:
    """
    All cyclically reduced primitive words of length <= max_len, found
    independently of Whitehead: close the basis (x, y) under elementary
    Nielsen transformations, keeping both basis elements of length <= max_len,
    and collect the cyclic classes (rotations and inverses) of what appears.
    """
    if max_len > config.MAX_ORACLE_LENGTH:
        logger.error(f"Oracle length {max_len} exceeds cap {config.MAX_ORACLE_LENGTH}")
        raise ResourceBoundError(f"oracle length {max_len} > {config.MAX_ORACLE_LENGTH}")

    start = (_x, _y)
    seen = {start}
    queue = deque([start])
    primitives = set()

    while queue:
        u, v = queue.popleft()
        primitives.add(u)
        primitives.add(v)
        for pair in _nielsen_neighbours(u, v):
            if pair in seen or len(pair[0]) > max_len or len(pair[1]) > max_len:
                continue
            seen.add(pair)
            if len(seen) > config.ORACLE_MAX_STATES:
                logger.error(f"Nielsen oracle exceeded {config.ORACLE_MAX_STATES} bases")
                raise ResourceBoundError(f"Nielsen oracle exceeded {config.ORACLE_MAX_STATES} bases")
            queue.append(pair)

    classes = {
        canonical_cyclic_word(F2Word.from_element(element))
        for element in primitives
        if len(element.cyclic_reduction()) <= max_len
    }
    logger.info(f"Nielsen oracle: {len(seen)} bases, {len(classes)} primitive classes up to length {max_len}")

    words = set()
    for representative in classes:
        words |= cyclic_class(representative)
    return frozenset(words)
