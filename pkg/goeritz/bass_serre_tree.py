"""
Bass-Serre Tree - finite balls of the tree T on which the Goeritz group acts.

G splits as G_{E} *_{G_{D,E}} G_{D u E}. On cores this is
    A = <g, ts>   (black vertex stabilizer, "A-side")
    B = <s, t>    (white vertex stabilizer, "B-side")
    C = <ts>      (edge stabilizer)
and epsilon, alpha lie in all three. Vertices of T are the cosets xA (black)
and xB (white), edges are the cosets xC, and the edge xC joins xA to xB.

Coset representatives are canonical (left normal form in the amalgam with the
last syllable of the vertex's own side dropped), so dataclass equality of
vertices and edges is equality of cosets.

Usage:
    ball = build_ball(radius=3, branch_bound=4)
    open('tree.dot', 'w').write(to_dot(ball))
    classify_isometry(element('gs'))      # hyperbolic 2
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import reduce as fold
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from goeritz import config
from goeritz.errors import ResourceBoundError
from goeritz.goeritz_algebra import (
    GAMMA, IDENTITY, SIGMA, TAU,
    NormalForm, SubgroupId, cancel_join, is_member, multiply, power,
)
from goeritz.models import CheckRecord, OrbitReport

logger = logging.getLogger(__name__)


class Side(Enum):
    A = 'A'     # G_{E}
    B = 'B'     # G_{D u E}


class Color(Enum):
    BLACK = 'black'
    WHITE = 'white'


COLOR_SIDE = {Color.BLACK: Side.A, Color.WHITE: Side.B}
COLOR_SUBGROUP = {Color.BLACK: SubgroupId.STAB_E, Color.WHITE: SubgroupId.STAB_PAIR_SETWISE}


@dataclass(frozen=True)
class Syllable:
    side: Side
    rep: NormalForm

    def __str__(self):
        return f"{self.side.value}:{self.rep.core or '1'}"


@dataclass(frozen=True)
class AmalgamForm:
    """g = prefix * s_1 * ... * s_n with prefix in G_{D,E}."""
    prefix: NormalForm
    syllables: Tuple[Syllable, ...]

    def product(self) -> NormalForm:
        return fold(multiply, (s.rep for s in self.syllables), self.prefix)

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return ' '.join([str(self.prefix)] + [str(s) for s in self.syllables])


# Amalgam normal forms

def factor_pieces(core: str) -> List[Tuple[Side, str]]:
    """
    Cut an alternating core into maximal factor pieces: odd runs of s/t letters
    are B-side pieces, everything between them (g's and even runs) A-side.
    Consecutive pieces alternate sides and concatenate back to core.
    """
    pieces = []
    buffer = ''
    for i, run in enumerate(core.split('g')):
        if i:
            buffer += 'g'
        if len(run) % 2:
            if buffer:
                pieces.append((Side.A, buffer))
                buffer = ''
            pieces.append((Side.B, run))
        else:
            buffer += run
    if buffer:
        pieces.append((Side.A, buffer))
    return pieces


def _split_left(side: Side, x: str) -> Tuple[str, str]:
    """x = rep * edge with rep from the left transversal of C in the factor."""
    if side is Side.A:
        if 'g' not in x:
            return '', x
        i = x.rindex('g')
        return x[:i + 1], x[i + 1:]
    if len(x) % 2 == 0:
        return '', x
    return 's', cancel_join('s', x)


def _split_right(side: Side, x: str) -> Tuple[str, str]:
    """x = edge * rep with rep from the right transversal of C in the factor."""
    if side is Side.A:
        if 'g' not in x:
            return x, ''
        i = x.index('g')
        return x[:i], x[i:]
    if len(x) % 2 == 0:
        return x, ''
    return cancel_join(x, 's'), 's'


def amalgam_form(g: NormalForm) -> AmalgamForm:
    """
    Britton decomposition g = prefix * s_1 * ... * s_n. Right transversals:
    {1, s} on the B-side, words starting with g (plus 1) on the A-side.
    """
    edge = ''
    syllables = []
    for side, piece in reversed(factor_pieces(g.core)):
        edge, rep = _split_right(side, cancel_join(piece, edge))
        if rep:
            syllables.append(Syllable(side, NormalForm(0, 0, rep)))
    syllables.reverse()
    return AmalgamForm(NormalForm(g.eps_exp, g.alpha_bit, edge), tuple(syllables))


def left_amalgam_form(g: NormalForm) -> Tuple[Tuple[Syllable, ...], NormalForm]:
    """g = s_1 * ... * s_n * suffix with left transversals and suffix in G_{D,E}."""
    edge = ''
    syllables = []
    for side, piece in factor_pieces(g.core):
        rep, edge = _split_left(side, cancel_join(edge, piece))
        if rep:
            syllables.append(Syllable(side, NormalForm(0, 0, rep)))
    return tuple(syllables), NormalForm(g.eps_exp, g.alpha_bit, edge)


def _syllable_product(syllables: Iterable[Syllable]) -> NormalForm:
    return fold(multiply, (s.rep for s in syllables), IDENTITY)


def coset_representative(g: NormalForm, color: Optional[Color]) -> NormalForm:
    """Canonical representative of g*G_{E} (black), g*G_{DuE} (white) or g*G_{D,E} (None)."""
    syllables, _ = left_amalgam_form(g)
    if color is not None and syllables and syllables[-1].side is COLOR_SIDE[color]:
        syllables = syllables[:-1]
    return _syllable_product(syllables)


# Vertices, edges and the action

@dataclass(frozen=True)
class TreeVertex:
    color: Color
    rep: NormalForm

    @classmethod
    def at(cls, color: Color, g: NormalForm) -> TreeVertex:
        return cls(color, coset_representative(g, color))

    @property
    def label(self) -> str:
        return f"{self.color.value}:{self.rep.core or '1'}"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class TreeEdge:
    rep: NormalForm

    @classmethod
    def at(cls, g: NormalForm) -> TreeEdge:
        return cls(coset_representative(g, None))

    @property
    def black(self) -> TreeVertex:
        return TreeVertex.at(Color.BLACK, self.rep)

    @property
    def white(self) -> TreeVertex:
        return TreeVertex.at(Color.WHITE, self.rep)

    @property
    def label(self) -> str:
        return f"edge:{self.rep.core or '1'}"


BASE_EDGE = TreeEdge.at(IDENTITY)
BASE_BLACK = TreeVertex.at(Color.BLACK, IDENTITY)
BASE_WHITE = TreeVertex.at(Color.WHITE, IDENTITY)
BASE_VERTEX = {Color.BLACK: BASE_BLACK, Color.WHITE: BASE_WHITE}


def act(g: NormalForm, v: TreeVertex) -> TreeVertex:
    return TreeVertex.at(v.color, multiply(g, v.rep))


def act_on_edge(g: NormalForm, e: TreeEdge) -> TreeEdge:
    return TreeEdge.at(multiply(g, e.rep))


def same_vertex(v: TreeVertex, w: TreeVertex) -> bool:
    """Coset equality straight from the definition: v.rep^-1 w.rep in the color's stabilizer."""
    return v.color == w.color and is_member(multiply(~v.rep, w.rep), COLOR_SUBGROUP[v.color])


def tree_distance(v: TreeVertex, w: TreeVertex) -> int:
    """Edge-count distance between two vertices of the (infinite) tree."""
    u = act(~v.rep, w)
    path = [COLOR_SIDE[v.color]]
    syllables, _ = left_amalgam_form(u.rep)
    for syllable in syllables:
        if syllable.side is not path[-1]:
            path.append(syllable.side)
    if COLOR_SIDE[u.color] is not path[-1]:
        path.append(COLOR_SIDE[u.color])
    return len(path) - 1


def displacement(g: NormalForm, v: TreeVertex) -> int:
    return tree_distance(v, act(g, v))


# Isometry classification

class IsometryKind(Enum):
    ELLIPTIC = 'elliptic'
    HYPERBOLIC = 'hyperbolic'


@dataclass(frozen=True)
class Isometry:
    """
    Elliptic: witness is a fixed vertex. Hyperbolic: witness lies on the axis
    and is moved exactly translation_length.
    g = conjugator * (cyclically reduced element) * conjugator^-1
    """
    kind: IsometryKind
    translation_length: int
    witness: TreeVertex
    conjugator: NormalForm

    def __str__(self):
        if self.kind is IsometryKind.ELLIPTIC:
            return f"elliptic {self.witness.label}"
        return f"hyperbolic {self.translation_length}"


def classify_isometry(g: NormalForm) -> Isometry:
    conjugator = IDENTITY
    current = g
    form = amalgam_form(current)

    # Odd length >= 3 means first and last syllables are on the same side:
    # conjugate them together until the form is cyclically reduced.
    while len(form) >= 3 and len(form) % 2 == 1:
        x = multiply(form.prefix, form.syllables[0].rep)
        current = multiply(multiply(~x, current), x)
        conjugator = multiply(conjugator, x)
        form = amalgam_form(current)

    if len(form) <= 1:
        color = Color.WHITE if len(form) == 1 and form.syllables[0].side is Side.B else Color.BLACK
        return Isometry(IsometryKind.ELLIPTIC, 0, TreeVertex.at(color, conjugator), conjugator)
    return Isometry(IsometryKind.HYPERBOLIC, len(form), TreeVertex.at(Color.BLACK, conjugator), conjugator)


# Finite balls

@dataclass(frozen=True, eq=False)
class TreeBall:
    center: TreeEdge
    radius: int
    branch_bound: int
    depths: Mapping[TreeVertex, int]
    adjacency: Mapping[TreeVertex, Tuple[TreeEdge, ...]]
    edges: FrozenSet[TreeEdge]

    @property
    def vertices(self) -> FrozenSet[TreeVertex]:
        return frozenset(self.depths)

    def valency(self, v: TreeVertex) -> int:
        return len(self.adjacency[v])

    def is_interior(self, v: TreeVertex) -> bool:
        return self.depths[v] < self.radius

    def interior_vertices(self) -> List[TreeVertex]:
        return [v for v in self.depths if self.is_interior(v)]

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        for v in self.depths:
            graph.add_node(v, color=v.color)
        for e in self.edges:
            graph.add_edge(e.black, e.white, rep=e.rep)
        return graph


def _outgoing_edges(vertex: TreeVertex, inbound: TreeEdge, branch_bound: int) -> List[TreeEdge]:
    y = inbound.rep
    if vertex.color is Color.WHITE:
        return [TreeEdge.at(multiply(y, SIGMA))]
    # truncated: branch_bound - 1 of the infinitely many edges y (ts)^k g C
    return [TreeEdge.at(multiply(multiply(y, power(TAU, k)), GAMMA)) for k in range(branch_bound - 1)]


def build_ball(radius: int, branch_bound: int) -> TreeBall:
    """
    Breadth-first ball around the base edge. White vertices get their two
    edges; black vertices get branch_bound edges (the inbound one included).
    """
    if radius > config.MAX_RADIUS or branch_bound > config.MAX_BRANCH_BOUND:
        logger.error(f"Ball radius={radius} branch_bound={branch_bound} exceeds caps "
                     f"({config.MAX_RADIUS}, {config.MAX_BRANCH_BOUND})")
        raise ResourceBoundError(f"ball radius={radius} branch_bound={branch_bound} beyond desk scale")
    if radius < 0 or branch_bound < 1:
        raise ValueError(f"radius must be >= 0 and branch_bound >= 1, got {radius}, {branch_bound}")

    depths: Dict[TreeVertex, int] = {BASE_BLACK: 0, BASE_WHITE: 0}
    adjacency: Dict[TreeVertex, List[TreeEdge]] = {BASE_BLACK: [BASE_EDGE], BASE_WHITE: [BASE_EDGE]}
    edges = {BASE_EDGE}
    queue = deque([(BASE_BLACK, BASE_EDGE), (BASE_WHITE, BASE_EDGE)])

    while queue:
        vertex, inbound = queue.popleft()
        depth = depths[vertex]
        if depth >= radius:
            continue
        for edge in _outgoing_edges(vertex, inbound, branch_bound):
            if edge in edges:
                continue
            other = edge.white if vertex.color is Color.BLACK else edge.black
            edges.add(edge)
            adjacency[vertex].append(edge)
            adjacency.setdefault(other, []).append(edge)
            if other in depths:
                logger.warning(f"Vertex {other.label} reached twice while building ball")
                continue
            depths[other] = depth + 1
            queue.append((other, edge))

    logger.info(f"Built ball radius={radius} branch_bound={branch_bound}: "
                f"{len(depths)} vertices, {len(edges)} edges")
    return TreeBall(
        center=BASE_EDGE,
        radius=radius,
        branch_bound=branch_bound,
        depths=MappingProxyType(depths),
        adjacency=MappingProxyType({v: tuple(es) for v, es in adjacency.items()}),
        edges=frozenset(edges),
    )


def ball_structure_report(ball: TreeBall) -> List[CheckRecord]:
    graph = ball.graph()
    interior = ball.interior_vertices()
    bad_white = [v.label for v in interior if v.color is Color.WHITE and ball.valency(v) != 2]
    bad_black = [v.label for v in interior if v.color is Color.BLACK and ball.valency(v) < ball.branch_bound]
    mixed = all(graph.nodes[u]['color'] != graph.nodes[w]['color'] for u, w in graph.edges)
    tag = f"r={ball.radius} b={ball.branch_bound}"

    return [
        CheckRecord(criterion=5, name=f"ball connected ({tag})", passed=nx.is_connected(graph),
                    detail=f"{graph.number_of_nodes()} vertices"),
        CheckRecord(criterion=5, name=f"ball acyclic ({tag})",
                    passed=nx.is_forest(graph) and graph.number_of_edges() == len(ball.edges)
                    and len(ball.edges) == len(ball.depths) - 1,
                    detail=f"{len(ball.edges)} edges"),
        CheckRecord(criterion=5, name=f"ball bipartite by color ({tag})", passed=mixed),
        CheckRecord(criterion=5, name=f"interior white valency = 2 ({tag})", passed=not bad_white,
                    detail=', '.join(bad_white[:5])),
        CheckRecord(criterion=5, name=f"interior black valency >= {ball.branch_bound} ({tag})",
                    passed=not bad_black, detail=', '.join(bad_black[:5])),
    ]


def orbit_and_quotient_check(ball: TreeBall) -> OrbitReport:
    """Translate every vertex and edge back by its representative and count base images."""
    black = {act(~v.rep, v) for v in ball.vertices if v.color is Color.BLACK}
    white = {act(~v.rep, v) for v in ball.vertices if v.color is Color.WHITE}
    edge_images = {act_on_edge(~e.rep, e) for e in ball.edges}
    return OrbitReport(
        black_orbits=len(black),
        white_orbits=len(white),
        edge_orbits=len(edge_images),
        vertices_checked=len(ball.depths),
        edges_checked=len(ball.edges),
    )


def min_displacement(g: NormalForm, ball: TreeBall, interior_only: bool = True) -> int:
    vertices = ball.interior_vertices() if interior_only else list(ball.depths)
    return min(displacement(g, v) for v in vertices)


def to_dot(ball: TreeBall) -> str:
    """DOT text: black vertices filled, white vertices open, ids from coset reps."""
    lines = ['graph tree {', '\tgraph [];']
    for v in sorted(ball.depths, key=lambda v: (ball.depths[v], v.label)):
        if v.color is Color.BLACK:
            lines.append(f'\t"{v.label}" [shape=circle, style=filled, fillcolor=black, label="", tooltip="{v.label}"];')
        else:
            lines.append(f'\t"{v.label}" [shape=circle, label="", tooltip="{v.label}"];')
    for e in sorted(ball.edges, key=lambda e: (e.black.label, e.white.label)):
        lines.append(f'\t"{e.black.label}" -- "{e.white.label}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'
