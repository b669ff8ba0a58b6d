"""
Goeritz Algebra - exact arithmetic in the genus-2 Goeritz group of S2 x S1

    G = <e> + <a | a^2 = 1> + <b, g, s | g^2 = s^2 = (gbs)^2 = 1>

(e = epsilon, a = alpha, b = beta, g = gamma, s = sigma). The first two
summands are central. In the third, the Tietze move t := gbs (so b = gts)
turns the group into the free product of three order-2 groups <g>, <s>, <t>,
where every element has a unique alternating word. A NormalForm is the triple
(epsilon exponent, alpha bit, alternating core over g, s, t).

Text format: e a b g s, uppercase for inverses. A, G, S are read as a, g, s
(involutions). t / T is read as gbs.

Usage:
    g = element('eaB')
    format_normal_form(g)                 # e^1 a^1 | stg
    is_member(g, SubgroupId.STAB_E)       # True
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Dict, List, Tuple, Union

from sympy import Expr, oo

from goeritz import config
from goeritz.errors import WordParseError
from goeritz.models import CheckRecord

logger = logging.getLogger(__name__)

GEN_ALPHABET = 'eabgstEABGST'
INVOLUTIONS = ('a', 'g', 's')
CORE_LETTERS = ('g', 's', 't')

# Tietze substitution b -> gts, b^-1 -> stg
BETA_CORE = 'gts'
BETA_INVERSE_CORE = 'stg'


@dataclass(frozen=True)
class GenLetter:
    base: str
    sign: int = 1

    def __post_init__(self):
        if self.base not in ('e', 'a', 'b', 'g', 's') or self.sign not in (1, -1):
            raise ValueError(f"Invalid generator letter: base={self.base!r} sign={self.sign!r}")
        if self.base in INVOLUTIONS and self.sign != 1:
            object.__setattr__(self, 'sign', 1)

    def __str__(self):
        return self.base if self.sign > 0 else self.base.upper()


@dataclass(frozen=True)
class GenWord:
    letters: Tuple[GenLetter, ...] = ()

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ''.join(str(letter) for letter in self.letters)


def parse_gen_word(text: str) -> GenWord:
    letters = []
    for i, char in enumerate(text):
        if char.isspace():
            continue
        if char not in GEN_ALPHABET:
            raise WordParseError(text, i, GEN_ALPHABET)
        if char in 'tT':
            letters.extend([GenLetter('g'), GenLetter('b'), GenLetter('s')])
        else:
            letters.append(GenLetter(char.lower(), 1 if char.islower() else -1))
    return GenWord(tuple(letters))


def cancel_join(left: str, right: str) -> str:
    """Concatenate two alternating cores, cancelling equal letters at the seam."""
    i = 0
    while i < len(left) and i < len(right) and left[-1 - i] == right[i]:
        i += 1
    return left[:len(left) - i] + right[i:]


@dataclass(frozen=True)
class NormalForm:
    eps_exp: int = 0
    alpha_bit: int = 0
    core: str = ''

    def __post_init__(self):
        if self.alpha_bit not in (0, 1):
            raise ValueError(f"alpha_bit must be 0 or 1, got {self.alpha_bit!r}")
        if any(c not in CORE_LETTERS for c in self.core):
            raise ValueError(f"core letters must be in {CORE_LETTERS}: {self.core!r}")
        if any(a == b for a, b in zip(self.core, self.core[1:])):
            raise ValueError(f"core is not alternating: {self.core!r}")

    @property
    def is_identity(self) -> bool:
        return self.eps_exp == 0 and self.alpha_bit == 0 and not self.core

    @property
    def core_part(self) -> NormalForm:
        """The element with the central coordinates dropped."""
        return NormalForm(0, 0, self.core)

    def __mul__(self, other: NormalForm) -> NormalForm:
        return multiply(self, other)

    def __invert__(self) -> NormalForm:
        return invert(self)

    def __str__(self):
        return format_normal_form(self)


def format_normal_form(n: NormalForm) -> str:
    return f"e^{n.eps_exp} a^{n.alpha_bit} | {n.core or '1'}"


def to_normal_form(w: GenWord) -> NormalForm:
    eps = 0
    alpha = 0
    stack: List[str] = []

    def push(letter):
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)

    for letter in w.letters:
        if letter.base == 'e':
            eps += letter.sign
        elif letter.base == 'a':
            alpha ^= 1
        elif letter.base == 'b':
            for c in (BETA_CORE if letter.sign > 0 else BETA_INVERSE_CORE):
                push(c)
        else:
            push(letter.base)

    return NormalForm(eps, alpha, ''.join(stack))


def from_normal_form(n: NormalForm) -> GenWord:
    """A word over the published generators (t written as gbs)."""
    letters = [GenLetter('e', 1 if n.eps_exp > 0 else -1)] * abs(n.eps_exp)
    letters += [GenLetter('a')] * n.alpha_bit
    for c in n.core:
        if c == 't':
            letters += [GenLetter('g'), GenLetter('b'), GenLetter('s')]
        else:
            letters.append(GenLetter(c))
    return GenWord(tuple(letters))


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    return NormalForm(a.eps_exp + b.eps_exp, a.alpha_bit ^ b.alpha_bit, cancel_join(a.core, b.core))


def invert(a: NormalForm) -> NormalForm:
    # core letters are involutions
    return NormalForm(-a.eps_exp, a.alpha_bit, a.core[::-1])


def power(a: NormalForm, k: int) -> NormalForm:
    base = a if k >= 0 else invert(a)
    result = IDENTITY
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def cyclic_core(core: str) -> str:
    while len(core) >= 2 and core[0] == core[-1]:
        core = core[1:-1]
    return core


def order(a: NormalForm) -> Union[int, Expr]:
    """Order of a, or sympy's oo when it is infinite."""
    if a.eps_exp != 0 or len(cyclic_core(a.core)) >= 2:
        return oo
    core_order = 2 if a.core else 1
    alpha_order = 2 if a.alpha_bit else 1
    return lcm(core_order, alpha_order)


def element(text: str) -> NormalForm:
    return to_normal_form(parse_gen_word(text))


IDENTITY = NormalForm()
EPSILON = element('e')
ALPHA = element('a')
BETA = element('b')
GAMMA = element('g')
SIGMA = element('s')
BETA_PRIME = multiply(invert(BETA), ALPHA)
TAU = multiply(GAMMA, BETA)
TAU_PRIME = multiply(TAU, SIGMA)

NAMED_ELEMENTS: Dict[str, NormalForm] = {
    'epsilon': EPSILON,
    'alpha': ALPHA,
    'beta': BETA,
    'beta_prime': BETA_PRIME,
    'gamma': GAMMA,
    'sigma': SIGMA,
    'tau': TAU,
    'tau_prime': TAU_PRIME,
}


# Stabilizer subgroups

class SubgroupId(Enum):
    STAB_E = 'StabE'                            # G_{E}, black vertex
    STAB_PAIR_SETWISE = 'StabPairSetwise'       # G_{D u E}, white vertex
    STAB_PAIR_POINTWISE = 'StabPairPointwise'   # G_{D, E}, edge
    STAB_E_EPRIME = 'StabEEprime'               # G_{E, E'}
    STAB_E_DUAL_PAIR = 'StabEDualPair'          # G_{E, D' u E'}
    STAB_DUALS_POINTWISE = 'StabDualsPointwise' # G_{E, D', E'} = G_{D u E, D', E'}
    STAB_PAIR_EPRIME = 'StabPairEprime'         # G_{D u E, E'}
    STAB_PAIR_DUAL_PAIR = 'StabPairDualPair'    # G_{D u E, D' u E'}


def _runs_even(core: str) -> bool:
    return all(len(run) % 2 == 0 for run in core.split('g'))


def _beta_power(core: str) -> bool:
    k, rem = divmod(len(core), 3)
    return rem == 0 and core in (BETA_CORE * k, BETA_INVERSE_CORE * k)


_CORE_PREDICATES = {
    SubgroupId.STAB_E: _runs_even,
    SubgroupId.STAB_PAIR_SETWISE: lambda core: 'g' not in core,
    SubgroupId.STAB_PAIR_POINTWISE: lambda core: 'g' not in core and len(core) % 2 == 0,
    SubgroupId.STAB_E_EPRIME: _beta_power,
    SubgroupId.STAB_E_DUAL_PAIR: lambda core: core in ('', 'g'),
    SubgroupId.STAB_DUALS_POINTWISE: lambda core: core == '',
    SubgroupId.STAB_PAIR_EPRIME: lambda core: core in ('', 's'),
    SubgroupId.STAB_PAIR_DUAL_PAIR: lambda core: core in ('', 't'),
}


def is_member(a: NormalForm, s: SubgroupId) -> bool:
    # epsilon and alpha lie in every stabilizer; only the core is constrained
    return _CORE_PREDICATES[s](a.core)


def subgroup_generators(s: SubgroupId) -> List[NormalForm]:
    """Generators of each stabilizer as given by its presentation."""
    central = [EPSILON, ALPHA]
    extra = {
        SubgroupId.STAB_E: [BETA, GAMMA],
        SubgroupId.STAB_PAIR_SETWISE: [SIGMA, TAU],
        SubgroupId.STAB_PAIR_POINTWISE: [TAU],
        SubgroupId.STAB_E_EPRIME: [BETA, BETA_PRIME],
        SubgroupId.STAB_E_DUAL_PAIR: [GAMMA],
        SubgroupId.STAB_DUALS_POINTWISE: [],
        SubgroupId.STAB_PAIR_EPRIME: [SIGMA],
        SubgroupId.STAB_PAIR_DUAL_PAIR: [TAU_PRIME],
    }
    return central + extra[s]


def random_gen_word(rng: random.Random, max_len: int) -> GenWord:
    letters = [GenLetter(c.lower(), 1 if c.islower() else -1)
               for c in rng.choices('eEabBgs', k=rng.randint(0, max_len))]
    return GenWord(tuple(letters))


# Presentation check

def _commutator(x: NormalForm, y: NormalForm) -> NormalForm:
    return x * y * ~x * ~y


def _rotations(word: str) -> List[str]:
    return [word[i:] + word[:i] for i in range(len(word))] or ['']


def verify_presentation(round_trips: int = None, seed: int = None) -> List[CheckRecord]:
    """
    Check the defining relations, the derived-element identities, the order
    facts and the Tietze round trip by normal-form computation.
    """
    round_trips = config.ROUND_TRIPS if round_trips is None else round_trips
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    records: List[CheckRecord] = []

    def check(name, passed, detail=''):
        records.append(CheckRecord(criterion=1, name=name, passed=bool(passed), detail=detail))

    # Defining relators, in every cyclic rotation
    for relator in ('gg', 'ss', 'gbsgbs', 'aa'):
        bad = [r for r in _rotations(relator) if not element(r).is_identity]
        check(f"relator {relator} = 1", not bad, f"failing rotations: {bad}" if bad else '')

    generators = {'e': EPSILON, 'a': ALPHA, 'b': BETA, 'g': GAMMA, 's': SIGMA}
    for central in ('e', 'a'):
        bad = [name for name, x in generators.items()
               if not _commutator(generators[central], x).is_identity]
        check(f"{central} is central", not bad, f"fails against {bad}" if bad else '')

    # Derived elements
    check("beta beta' = alpha", BETA * BETA_PRIME == ALPHA, str(BETA * BETA_PRIME))
    check("(beta beta')^2 = 1", power(BETA * BETA_PRIME, 2).is_identity)
    check("beta beta' = beta' beta", BETA * BETA_PRIME == BETA_PRIME * BETA)
    check("tau = gamma beta", TAU == element('gb') and TAU.core == 'ts', str(TAU))
    check("tau' = tau sigma", TAU_PRIME == element('gbs') and TAU_PRIME.core == 't', str(TAU_PRIME))

    # Stabilizer presentations
    check("G_E: gamma^2 = 1, beta of infinite order",
          power(GAMMA, 2).is_identity and order(BETA) == oo)
    check("G_DuE: sigma^2 = (tau sigma)^2 = 1",
          power(SIGMA, 2).is_identity and power(TAU * SIGMA, 2).is_identity)
    check("G_D,E: tau of infinite order, central e and a",
          order(TAU) == oo and _commutator(TAU, EPSILON).is_identity and _commutator(TAU, ALPHA).is_identity)
    for s in SubgroupId:
        gens = subgroup_generators(s)
        check(f"{s.value} contains its generators", all(is_member(g, s) for g in gens))
    check("sigma not in G_{E,D',E'}", not is_member(SIGMA, SubgroupId.STAB_DUALS_POINTWISE))
    check("G_{E,D',E'} has index 2 in G_{E,D'uE'} (gamma) and in G_{DuE,E'} (sigma)",
          is_member(GAMMA, SubgroupId.STAB_E_DUAL_PAIR) and not is_member(GAMMA, SubgroupId.STAB_DUALS_POINTWISE)
          and is_member(SIGMA, SubgroupId.STAB_PAIR_EPRIME) and not is_member(SIGMA, SubgroupId.STAB_DUALS_POINTWISE))

    # Orders claimed for the named elements
    expected = {'alpha': 2, 'gamma': 2, 'sigma': 2, 'tau_prime': 2,
                'beta': oo, 'beta_prime': oo, 'tau': oo, 'epsilon': oo}
    for name, value in expected.items():
        got = order(NAMED_ELEMENTS[name])
        check(f"order({name}) = {value}", got == value, f"got {got}")

    # Tietze maps compose to the identity on generators
    back = {c: to_normal_form(from_normal_form(element(c))) for c in 'eabgs'}
    check("to . from = id on generators", all(back[c] == element(c) for c in back))
    t = NormalForm(0, 0, 't')
    check("from . to = id on t", to_normal_form(from_normal_form(t)) == t
          and str(from_normal_form(t)) == 'gbs')

    failures = 0
    for _ in range(round_trips):
        n = to_normal_form(random_gen_word(rng, 30))
        if to_normal_form(from_normal_form(n)) != n:
            failures += 1
    check(f"round trip on {round_trips} random words", failures == 0, f"{failures} failures")

    logger.info(f"verify_presentation: {sum(r.passed for r in records)}/{len(records)} passed")
    return records
