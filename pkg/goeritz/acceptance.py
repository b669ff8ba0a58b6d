"""
Acceptance Suite - the seven property checks run by `verify` and /api/verify.

Each criterion returns a list of CheckRecords; run_all concatenates them in
order. Sampled checks draw from a seeded random.Random so reruns print the
same report.

Usage:
    from goeritz.acceptance import run_all
    records = run_all(radius=3, branch_bound=4, oracle_length=5, seed=7)
    failed = [r.name for r in records if not r.passed]
"""

import logging
import random
from math import gcd
from typing import List

from sympy import oo

from goeritz import config
from goeritz.bass_serre_tree import (
    BASE_BLACK, BASE_WHITE, COLOR_SUBGROUP, IsometryKind,
    act, amalgam_form, ball_structure_report, build_ball, classify_isometry,
    coset_representative, displacement, left_amalgam_form, min_displacement,
    orbit_and_quotient_check,
)
from goeritz.errors import ResourceBoundError
from goeritz.f2_kernel import (
    brute_force_primitive_oracle, cyclically_reduced_words, exponent_sums,
    is_primitive, mixed_inverse_criterion, whitehead_minimize,
)
from goeritz.goeritz_algebra import (
    ALPHA, BETA, BETA_PRIME, EPSILON, GAMMA, SIGMA, TAU, TAU_PRIME,
    NormalForm, SubgroupId, element, is_member, multiply,
    order, power, random_gen_word, subgroup_generators, to_normal_form,
    verify_presentation,
)
from goeritz.models import CheckRecord
from goeritz.oracles import (
    all_cores, generator_closure, naive_rewrite, normal_form_image, reflection_image,
)

logger = logging.getLogger(__name__)

CLOSURE_CORE_LENGTH = 8
COLLISION_CORE_LENGTH = 8
COLLISION_EPS_RANGE = range(-2, 3)
REFLECTION_SAMPLES = 300
REWRITE_SAMPLES = 300
BLACK_COSETS = 10


def _record(criterion: int, name: str, passed, detail: str = '') -> CheckRecord:
    return CheckRecord(criterion=criterion, name=name, passed=bool(passed), detail=detail)


def criterion_1_relations(round_trips: int = None, seed: int = None) -> List[CheckRecord]:
    """Relation suite and Tietze round trip, plus the rewriting oracle on every relator."""
    records = verify_presentation(round_trips=round_trips, seed=seed)
    for relator in ('gg', 'ss', 'aa', 'gbsgbs', 'bsgbsg', 'sgbsgb'):
        rewritten = naive_rewrite(relator)
        records.append(_record(1, f"rewriting oracle: {relator} -> 1", rewritten == '', repr(rewritten)))
    rewritten = naive_rewrite('bBa')
    records.append(_record(1, "rewriting oracle: beta beta' = alpha",
                           rewritten == 'a', repr(rewritten)))
    return records


def criterion_2_orders() -> List[CheckRecord]:
    expected = [
        ('alpha', ALPHA, 2), ('gamma', GAMMA, 2), ('sigma', SIGMA, 2), ('tau_prime', TAU_PRIME, 2),
        ('gamma beta sigma', element('gbs'), 2),
        ('beta', BETA, oo), ('beta_prime', BETA_PRIME, oo), ('tau', TAU, oo), ('epsilon', EPSILON, oo),
    ]
    records = []
    for name, value, want in expected:
        got = order(value)
        records.append(_record(2, f"order({name}) = {want}", got == want, f"got {got}"))
    return records


def criterion_3_normal_forms(pairs: int = None, seed: int = None) -> List[CheckRecord]:
    pairs = config.HOMOMORPHISM_PAIRS if pairs is None else pairs
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    records = []

    # Distinct normal forms have distinct images under a faithful representation
    images = set()
    count = 0
    for core in all_cores(COLLISION_CORE_LENGTH):
        for eps in COLLISION_EPS_RANGE:
            for alpha in (0, 1):
                images.add(normal_form_image(NormalForm(eps, alpha, core)))
                count += 1
    records.append(_record(3, f"no collisions among {count} normal forms (core <= {COLLISION_CORE_LENGTH}, |e| <= 2)",
                           len(images) == count, f"{count - len(images)} collisions"))

    mismatches = 0
    for _ in range(REFLECTION_SAMPLES):
        word = random_gen_word(rng, 20)
        if reflection_image(word) != normal_form_image(to_normal_form(word)):
            mismatches += 1
    records.append(_record(3, f"normal form agrees with reflection image on {REFLECTION_SAMPLES} words",
                           mismatches == 0, f"{mismatches} mismatches"))

    mismatches = 0
    for _ in range(REWRITE_SAMPLES):
        word = random_gen_word(rng, 14)
        if element(naive_rewrite(str(word))) != to_normal_form(word):
            mismatches += 1
    records.append(_record(3, f"normal form agrees with rewriting oracle on {REWRITE_SAMPLES} words",
                           mismatches == 0, f"{mismatches} mismatches"))

    failures = 0
    central_failures = 0
    for _ in range(pairs):
        u, v = random_gen_word(rng, 15), random_gen_word(rng, 15)
        nu, nv = to_normal_form(u), to_normal_form(v)
        if to_normal_form(u * v) != multiply(nu, nv):
            failures += 1
        uv, vu = multiply(nu, nv), multiply(nv, nu)
        if (uv.eps_exp, uv.alpha_bit) != (vu.eps_exp, vu.alpha_bit):
            central_failures += 1
    records.append(_record(3, f"homomorphism on {pairs} random pairs", failures == 0, f"{failures} failures"))
    records.append(_record(3, "central coordinates commute", central_failures == 0, f"{central_failures} failures"))
    return records


def criterion_4_primitivity(oracle_length: int = None) -> List[CheckRecord]:
    oracle_length = config.DEFAULT_ORACLE_LENGTH if oracle_length is None else oracle_length
    oracle = brute_force_primitive_oracle(oracle_length)

    words = list(cyclically_reduced_words(oracle_length))
    disagreements = [str(w) for w in words if is_primitive(w) != (w in oracle)]
    whitehead_disagreements = [str(w) for w in words if (len(whitehead_minimize(w)) == 1) != (w in oracle)]
    false_positives = [str(w) for w in words if mixed_inverse_criterion(w) and w in oracle]
    gcd_failures = [str(w) for w in words if is_primitive(w) and gcd(*exponent_sums(w)) != 1]

    return [
        _record(4, f"is_primitive agrees with Nielsen oracle on {len(words)} words (length <= {oracle_length})",
                not disagreements, ', '.join(disagreements[:10])),
        _record(4, "Whitehead minimization reaches length 1 exactly on oracle primitives",
                not whitehead_disagreements, ', '.join(whitehead_disagreements[:10])),
        _record(4, "mixed-inverse filter has no false positives", not false_positives,
                ', '.join(false_positives[:10])),
        _record(4, "primitive implies gcd of exponent sums = 1", not gcd_failures, ', '.join(gcd_failures[:10])),
    ]


def criterion_5_tree(radius: int = None, branch_bound: int = None) -> List[CheckRecord]:
    radius = config.DEFAULT_RADIUS if radius is None else radius
    branch_bound = config.DEFAULT_BRANCH_BOUND if branch_bound is None else branch_bound

    ball = build_ball(radius, branch_bound)
    records = ball_structure_report(ball)
    report = orbit_and_quotient_check(ball)
    records.append(_record(5, f"one black, one white, one edge orbit (r={radius})", report.passed,
                           f"{report.black_orbits}/{report.white_orbits}/{report.edge_orbits} over "
                           f"{report.vertices_checked} vertices, {report.edges_checked} edges"))

    small = build_ball(0, branch_bound)
    records.append(_record(5, "radius 0 ball is a single edge",
                           len(small.vertices) == 2 and len(small.edges) == 1))
    return records


def criterion_6_subgroups(max_core_len: int = CLOSURE_CORE_LENGTH) -> List[CheckRecord]:
    records = []
    cores = list(all_cores(max_core_len))
    for s in SubgroupId:
        closure = generator_closure(subgroup_generators(s), max_core_len)
        bad = [c or '1' for c in cores if is_member(NormalForm(0, 0, c), s) != (c in closure)]
        records.append(_record(6, f"{s.value} predicate agrees with closure (core <= {max_core_len})",
                               not bad, ', '.join(bad[:10])))

    # Cosets of G_{D,E} inside G_{DuE}
    white = generator_closure(subgroup_generators(SubgroupId.STAB_PAIR_SETWISE), max_core_len)
    cosets = {coset_representative(NormalForm(0, 0, c), None) for c in white}
    records.append(_record(6, "G_{D,E} has index 2 in G_{DuE}", len(cosets) == 2,
                           ', '.join(sorted(c.core or '1' for c in cosets))))

    # Cosets (ts)^k g G_{D,E} inside G_{E}, pairwise distinct by membership
    reps = [multiply(power(TAU, k), GAMMA) for k in range(BLACK_COSETS)]
    inside = all(is_member(r, SubgroupId.STAB_E) for r in reps)
    distinct = all(not is_member(multiply(~reps[i], reps[j]), SubgroupId.STAB_PAIR_POINTWISE)
                   for i in range(len(reps)) for j in range(i + 1, len(reps)))
    records.append(_record(6, f"{BLACK_COSETS} distinct G_{{D,E}}-cosets in G_E", inside and distinct))
    return records


def criterion_7_isometries(samples: int = None, seed: int = None,
                           radius: int = None, branch_bound: int = None) -> List[CheckRecord]:
    samples = config.ISOMETRY_SAMPLES if samples is None else samples
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    radius = config.DEFAULT_RADIUS if radius is None else radius
    branch_bound = config.DEFAULT_BRANCH_BOUND if branch_bound is None else branch_bound
    ball = build_ball(radius, branch_bound)
    interior = ball.interior_vertices()

    decomposition = []
    elliptic_bad = []
    hyperbolic_bad = []
    scaling_bad = []
    stabilizer_bad = []
    elliptic = hyperbolic = axis_in_ball = 0

    for _ in range(samples):
        g = to_normal_form(random_gen_word(rng, 12))
        syllables, suffix = left_amalgam_form(g)
        left = suffix
        for syllable in reversed(syllables):
            left = multiply(syllable.rep, left)
        if amalgam_form(g).product() != g or left != g:
            decomposition.append(str(g))

        iso = classify_isometry(g)
        if iso.kind is IsometryKind.ELLIPTIC:
            elliptic += 1
            if act(g, iso.witness) != iso.witness:
                elliptic_bad.append(str(g))
        else:
            hyperbolic += 1
            length = iso.translation_length
            if displacement(g, iso.witness) != length:
                hyperbolic_bad.append(str(g))
            elif length <= radius and iso.witness in ball.depths and ball.is_interior(iso.witness):
                axis_in_ball += 1
                if min_displacement(g, ball) != length:
                    hyperbolic_bad.append(str(g))
            elif min_displacement(g, ball) < length:
                hyperbolic_bad.append(str(g))
            if classify_isometry(power(g, 2)).translation_length != 2 * length:
                scaling_bad.append(str(g))

        for v in rng.sample(interior, min(5, len(interior))):
            fixed = act(g, v) == v
            if fixed != is_member(multiply(multiply(~v.rep, g), v.rep), COLOR_SUBGROUP[v.color]):
                stabilizer_bad.append(f"{g} @ {v.label}")

    gamma_sigma = element('gs')
    return [
        _record(7, f"amalgam decomposition multiplies back ({samples} samples)", not decomposition,
                '; '.join(decomposition[:5])),
        _record(7, f"elliptic witness is fixed ({elliptic} elliptic)", not elliptic_bad, '; '.join(elliptic_bad[:5])),
        _record(7, f"hyperbolic displacement = translation length ({hyperbolic} hyperbolic, {axis_in_ball} axes in ball)",
                not hyperbolic_bad, '; '.join(hyperbolic_bad[:5])),
        _record(7, "translation_length(g^2) = 2 translation_length(g)", not scaling_bad, '; '.join(scaling_bad[:5])),
        _record(7, "act(g, v) = v iff rep^-1 g rep in the stabilizer", not stabilizer_bad,
                '; '.join(stabilizer_bad[:5])),
        _record(7, "gamma sigma: minimum ball displacement 2",
                min_displacement(gamma_sigma, ball) == 2 and classify_isometry(gamma_sigma).translation_length == 2),
        _record(7, "alpha and beta fix the base black vertex",
                act(ALPHA, BASE_BLACK) == BASE_BLACK and act(BETA, BASE_BLACK) == BASE_BLACK
                and classify_isometry(BETA).witness == BASE_BLACK),
        _record(7, "sigma fixes the base white vertex", act(SIGMA, BASE_WHITE) == BASE_WHITE),
    ]


def run_all(radius: int = None, branch_bound: int = None, oracle_length: int = None,
            samples: int = None, pairs: int = None, round_trips: int = None,
            seed: int = None) -> List[CheckRecord]:
    """Run criteria 1-7 in order. Caps are checked before any work starts."""
    radius = config.DEFAULT_RADIUS if radius is None else radius
    branch_bound = config.DEFAULT_BRANCH_BOUND if branch_bound is None else branch_bound
    oracle_length = config.DEFAULT_ORACLE_LENGTH if oracle_length is None else oracle_length
    if (radius > config.MAX_RADIUS or branch_bound > config.MAX_BRANCH_BOUND
            or oracle_length > config.MAX_ORACLE_LENGTH):
        logger.error(f"verify caps exceeded: radius={radius} branch_bound={branch_bound} "
                     f"oracle_length={oracle_length}")
        raise ResourceBoundError(f"radius={radius} branch_bound={branch_bound} "
                                 f"oracle_length={oracle_length} beyond desk scale")
    if radius < 1 or branch_bound < 1 or oracle_length < 1:
        raise ValueError(f"verify needs radius, branch_bound and oracle_length >= 1, "
                         f"got {radius}, {branch_bound}, {oracle_length}")

    records: List[CheckRecord] = []
    steps = [
        lambda: criterion_1_relations(round_trips, seed),
        criterion_2_orders,
        lambda: criterion_3_normal_forms(pairs, seed),
        lambda: criterion_4_primitivity(oracle_length),
        lambda: criterion_5_tree(radius, branch_bound),
        criterion_6_subgroups,
        lambda: criterion_7_isometries(samples, seed, radius, branch_bound),
    ]
    for number, step in enumerate(steps, start=1):
        batch = step()
        failed = sum(not r.passed for r in batch)
        logger.info(f"Criterion {number}: {len(batch) - failed}/{len(batch)} passed")
        records.extend(batch)
    return records
