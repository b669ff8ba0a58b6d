#!/usr/bin/env python3
"""
Goeritz CLI - batch front end for the word problem, stabilizers, primitivity
and the Bass-Serre tree.

Usage:
    # Normal form of a Goeritz word
    python -m goeritz.cli normalize "gbsgbs"

    # Equality and order
    python -m goeritz.cli equal "bB" ""
    python -m goeritz.cli order "gbs"

    # Stabilizer membership (StabE, StabPairSetwise, StabPairPointwise, StabEEprime, ...)
    python -m goeritz.cli member "gb" StabPairPointwise

    # Amalgam normal form and isometry type
    python -m goeritz.cli amalgam "gs"
    python -m goeritz.cli classify "gs"

    # Free-group words (x, y, X, Y)
    python -m goeritz.cli primitive "xxy"
    python -m goeritz.cli disk-class "xyXY"

    # Ball of the tree as DOT
    python -m goeritz.cli ball --radius 3 --branch-bound 4 --output tree.dot

    # Full acceptance suite (exit 1 if any check fails)
    python -m goeritz.cli verify --json
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Optional, TextIO, Tuple

from sympy import oo

from goeritz import config
from goeritz.acceptance import run_all
from goeritz.bass_serre_tree import amalgam_form, build_ball, classify_isometry, to_dot
from goeritz.errors import ResourceBoundError, WordParseError
from goeritz.f2_kernel import classify_disk_word, is_primitive, parse_f2_word
from goeritz.goeritz_algebra import (
    SubgroupId, element, format_normal_form, is_member, order,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_RESOURCE = 4

# verb -> (number of positional arguments, help)
VERBS = {
    'normalize': (1, 'Print the normal form of a Goeritz word'),
    'equal': (2, 'Decide whether two Goeritz words are equal'),
    'order': (1, 'Order of a Goeritz word (integer or "infinite")'),
    'member': (2, 'Decide membership of a word in a stabilizer subgroup'),
    'amalgam': (1, 'Amalgam normal form: edge-stabilizer prefix and syllables'),
    'classify': (1, 'Elliptic or hyperbolic action on the tree'),
    'primitive': (1, 'Decide whether an F2 word is primitive'),
    'disk-class': (1, 'Classify an F2 disk word: reducing, primitive, non-primitive'),
    'ball': (0, 'Export a finite ball of the tree as DOT'),
    'verify': (0, 'Run the full acceptance suite'),
}


@dataclass(frozen=True)
class Command:
    verb: str
    arguments: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Options:
    radius: int = field(default_factory=lambda: config.DEFAULT_RADIUS)
    branch_bound: int = field(default_factory=lambda: config.DEFAULT_BRANCH_BOUND)
    oracle_length: int = field(default_factory=lambda: config.DEFAULT_ORACLE_LENGTH)
    samples: Optional[int] = None
    seed: Optional[int] = None
    output: Optional[str] = None
    json: bool = False


def _bool(value: bool) -> str:
    return 'true' if value else 'false'


def _validate(command: Command, options: Options):
    """Reject unknown verbs, wrong arity, malformed words and out-of-range flags before computing anything."""
    if command.verb not in VERBS:
        raise ValueError(f"unknown verb {command.verb!r}")
    arity = VERBS[command.verb][0]
    if len(command.arguments) != arity:
        raise ValueError(f"{command.verb} takes {arity} argument(s), got {len(command.arguments)}")

    if command.verb in ('primitive', 'disk-class'):
        parse_f2_word(command.arguments[0])
    elif command.verb == 'member':
        element(command.arguments[0])
        SubgroupId(command.arguments[1])
    else:
        for word in command.arguments:
            element(word)

    if command.verb == 'ball' and (options.radius < 0 or options.branch_bound < 1):
        raise ValueError(f"ball needs --radius >= 0 and --branch-bound >= 1, "
                         f"got {options.radius}, {options.branch_bound}")
    if command.verb == 'verify':
        # radius 0 leaves no interior vertices for the isometry checks
        if options.radius < 1 or options.branch_bound < 1 or options.oracle_length < 1:
            raise ValueError(f"verify needs --radius, --branch-bound and --oracle-length >= 1, "
                             f"got {options.radius}, {options.branch_bound}, {options.oracle_length}")
        if options.samples is not None and options.samples < 1:
            raise ValueError(f"--samples must be >= 1, got {options.samples}")


def _run_verify(options: Options, out: TextIO) -> int:
    records = run_all(radius=options.radius, branch_bound=options.branch_bound,
                      oracle_length=options.oracle_length, samples=options.samples,
                      seed=options.seed)
    for record in records:
        if options.json:
            print(record.model_dump_json(), file=out)
        else:
            status = 'PASS' if record.passed else 'FAIL'
            detail = f" ({record.detail})" if record.detail else ''
            print(f"{status} [{record.criterion}] {record.name}{detail}", file=out)

    failed = sum(not r.passed for r in records)
    if not options.json:
        print(f"{len(records) - failed}/{len(records)} checks passed", file=out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def run(command: Command, options: Options = None, out: TextIO = None) -> int:
    """Execute one command, printing its result to out. Returns the exit status."""
    options = options or Options()
    out = out or sys.stdout

    try:
        _validate(command, options)
    except WordParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    args = command.arguments
    try:
        if command.verb == 'normalize':
            print(format_normal_form(element(args[0])), file=out)
        elif command.verb == 'equal':
            print(_bool(element(args[0]) == element(args[1])), file=out)
        elif command.verb == 'order':
            value = order(element(args[0]))
            print('infinite' if value == oo else value, file=out)
        elif command.verb == 'member':
            print(_bool(is_member(element(args[0]), SubgroupId(args[1]))), file=out)
        elif command.verb == 'amalgam':
            form = amalgam_form(element(args[0]))
            print(f"prefix {format_normal_form(form.prefix)}", file=out)
            for syllable in form.syllables:
                print(f"{syllable.side.value} {syllable.rep.core}", file=out)
        elif command.verb == 'classify':
            print(classify_isometry(element(args[0])), file=out)
        elif command.verb == 'primitive':
            print(_bool(is_primitive(parse_f2_word(args[0]))), file=out)
        elif command.verb == 'disk-class':
            print(classify_disk_word(parse_f2_word(args[0])).value, file=out)
        elif command.verb == 'ball':
            dot = to_dot(build_ball(options.radius, options.branch_bound))
            if options.output:
                with open(options.output, 'w') as f:
                    f.write(dot)
                logger.info(f"Wrote ball to {options.output}")
            else:
                out.write(dot)
        elif command.verb == 'verify':
            return _run_verify(options, out)
    except ResourceBoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE

    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='goeritz', description='Goeritz group of S2 x S1')
    subparsers = parser.add_subparsers(dest='verb', required=True)

    for verb, (arity, help_text) in VERBS.items():
        sub = subparsers.add_parser(verb, help=help_text)
        if verb == 'member':
            sub.add_argument('word', help='Goeritz word (e a b g s, uppercase inverses)')
            sub.add_argument('subgroup', choices=[s.value for s in SubgroupId], help='Stabilizer tag')
        elif verb in ('primitive', 'disk-class'):
            sub.add_argument('word', help='F2 word (x y, X Y inverses)')
        elif arity:
            sub.add_argument('words', nargs=arity, help='Goeritz word(s) (e a b g s, uppercase inverses)')
        if verb in ('ball', 'verify'):
            sub.add_argument('--radius', type=int, default=config.DEFAULT_RADIUS, help='Ball radius (max 6)')
            sub.add_argument('--branch-bound', type=int, default=config.DEFAULT_BRANCH_BOUND,
                             help='Black vertex valency kept in the ball (max 12)')
        if verb == 'ball':
            sub.add_argument('--output', type=str, help='Write DOT here instead of stdout')
        if verb == 'verify':
            sub.add_argument('--oracle-length', type=int, default=config.DEFAULT_ORACLE_LENGTH,
                             help='Word length for the primitivity oracle (max 12)')
            sub.add_argument('--samples', type=int, help='Random elements for the isometry checks')
            sub.add_argument('--seed', type=int, help='Random seed for sampled checks')
            sub.add_argument('--json', action='store_true', help='One JSON record per check')

    return parser


def parse_command(argv=None) -> Tuple[Command, Options]:
    args = build_parser().parse_args(argv)
    if args.verb == 'member':
        arguments = (args.word, args.subgroup)
    elif args.verb in ('primitive', 'disk-class'):
        arguments = (args.word,)
    else:
        arguments = tuple(getattr(args, 'words', ()) or ())

    options = Options(
        radius=getattr(args, 'radius', config.DEFAULT_RADIUS),
        branch_bound=getattr(args, 'branch_bound', config.DEFAULT_BRANCH_BOUND),
        oracle_length=getattr(args, 'oracle_length', config.DEFAULT_ORACLE_LENGTH),
        samples=getattr(args, 'samples', None),
        seed=getattr(args, 'seed', None),
        output=getattr(args, 'output', None),
        json=getattr(args, 'json', False),
    )
    return Command(args.verb, arguments), options


def main(argv=None) -> int:
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL.upper(), logging.INFO),
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    command, options = parse_command(argv)
    return run(command, options)


if __name__ == '__main__':
    sys.exit(main())
