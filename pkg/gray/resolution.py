from dataclasses import dataclass, field
from enum import Enum, auto

import config as cfg
from gems.errors import GemError, NotACrystallization, NotBipartite
from gems.graph import Color, ColoredGraph
from gems.log import log_message, report_discrepancy
from gems.report import is_crystallization, parity_vector
from jordan.j2 import recognize_j2_reason, twist_all
from moves.dipoles import cancel_blobs
from moves.trace import Move
from moves.twists import Antipole, Twistor

from .crossing import corridor_chords, face_chords_cross
from .gray_graph import GrayEdge, GrayGraph, build_gray_graph
from .twistors import convert_antipole_with_move


class FailureReason(Enum):
    DISCONNECTED = auto()
    BUDGET_EXHAUSTED = auto()
    ALL_TREES_REJECTED = auto()

    @property
    def code(self) -> str:
        return self.name.lower()


@dataclass
class Resolution:
    axis: Color
    # twistors in the labels of the graph after preprocessing
    twistors: list[Twistor] = field(default_factory=list)
    preprocessing: list[Move] = field(default_factory=list)
    edges: list[GrayEdge] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.twistors)


@dataclass
class SearchResult:
    resolution: Resolution | None
    reason: FailureReason | None = None
    expansions: int = 0

    @property
    def found(self) -> bool:
        return self.resolution is not None


class _BudgetExhausted(Exception):
    pass


def resolution_from_edges(graph: ColoredGraph, axis: Color, edges: list[GrayEdge]) -> Resolution:
    """Convert the antipoles among the edges (in order) and collect the twistors to apply."""
    resolution = Resolution(axis, edges=list(edges))
    working = graph
    for e in edges:
        if isinstance(e.twistor, Antipole):
            working, twistor, move = convert_antipole_with_move(working, e.twistor)
            resolution.preprocessing.append(move)
            resolution.twistors.append(twistor)
        else:
            resolution.twistors.append(e.twistor)
    return resolution


def validate_resolution(graph: ColoredGraph, resolution: Resolution) -> str | None:
    """Twist every edge, cancel the blobs and recognize a J2-gem; None when accepted, else the reason."""
    try:
        twisted = twist_all(graph, resolution)
    except GemError as e:
        return f'{e.code}: {e.message}'
    _, reason = recognize_j2_reason(cancel_blobs(twisted), resolution.axis)
    return reason


def _ordered_edges(gray: GrayGraph) -> list[GrayEdge]:
    def key(e: GrayEdge):
        return (e.origin != 'twistor', gray.degree(e.source) + gray.degree(e.target), e.vertices, e.kind)
    return sorted((e for e in gray.edges if e.source != e.target), key=key)


def _root(parent: dict[int, int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


class _Search:
    def __init__(self, graph: ColoredGraph, gray: GrayGraph, budget: int):
        self.graph = graph
        self.gray = gray
        self.budget = budget
        self.edges = _ordered_edges(gray)
        self.target = len(gray.nodes) - 1
        self.expansions = 0
        self.rejected = 0

    def crossing_ok(self, chosen: list[GrayEdge]) -> bool:
        # only the face of the newest edge can gain a crossing
        newest = chosen[-1]
        same_face = [e for e in chosen if e.twistor.e_color == newest.twistor.e_color]
        return not any(face_chords_cross(size, chords) for size, chords in corridor_chords(self.graph, same_face).values())

    def gate(self, chosen: list[GrayEdge]) -> Resolution | None:
        labels = ' '.join(e.label for e in chosen)
        try:
            resolution = resolution_from_edges(self.graph, self.gray.axis, chosen)
        except GemError as e:
            log_message(f'tree [{labels}] rejected: {e.code}', verbose=True)
            self.rejected += 1
            return None
        reason = validate_resolution(self.graph, resolution)
        if reason is None:
            return resolution
        self.rejected += 1
        report_discrepancy('resolution_rejected', f'crossing-free tree [{labels}] fails the twist pipeline: {reason}',
                           self.graph)
        return None

    def run(self, start: int, chosen: list[GrayEdge], used: set[int], parent: dict[int, int]) -> Resolution | None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetExhausted()
        if len(chosen) == self.target:
            return self.gate(chosen)
        for idx in range(start, len(self.edges)):
            if len(self.edges) - idx < self.target - len(chosen):
                break
            e = self.edges[idx]
            if e.twistor.u in used or e.twistor.v in used:
                continue
            rs, rt = _root(parent, e.source), _root(parent, e.target)
            if rs == rt:
                continue
            chosen.append(e)
            if self.crossing_ok(chosen):
                parent[rs] = rt
                found = self.run(idx + 1, chosen, used | {e.twistor.u, e.twistor.v}, parent)
                parent[rs] = rs
                if found is not None:
                    return found
            chosen.pop()
        return None


def find_resolution(graph: ColoredGraph, axis: Color = 1, budget: int | None = None,
                    gray: GrayGraph | None = None) -> SearchResult:
    """Backtracking search for a crossing-free spanning tree of disjoint twistors that twists into a J2-gem."""
    budget = cfg.DEFAULT_BUDGET if budget is None else budget
    if not is_crystallization(graph):
        raise NotACrystallization(f'{graph.name or "graph"} is not a crystallization')
    if parity_vector(graph) is None:
        raise NotBipartite(f'{graph.name or "graph"} is not bipartite')
    gray = gray or build_gray_graph(graph, axis)

    if len(gray.nodes) == 1:
        empty = Resolution(axis)
        reason = validate_resolution(graph, empty)
        if reason is None:
            return SearchResult(empty)
        report_discrepancy('resolution_rejected', f'single jk-gon but not a J2-gem: {reason}', graph)
        return SearchResult(None, FailureReason.ALL_TREES_REJECTED)
    if budget <= 0:
        return SearchResult(None, FailureReason.BUDGET_EXHAUSTED)
    if not gray.is_connected():
        return SearchResult(None, FailureReason.DISCONNECTED)

    search = _Search(graph, gray, budget)
    parent = {node: node for node in range(len(gray.nodes))}
    try:
        found = search.run(0, [], set(), parent)
    except _BudgetExhausted:
        log_message(f'axis {axis}: budget of {budget} expansions exhausted')
        return SearchResult(None, FailureReason.BUDGET_EXHAUSTED, search.expansions - 1)
    if found is None:
        log_message(f'axis {axis}: all {search.rejected} spanning trees rejected', verbose=True)
        return SearchResult(None, FailureReason.ALL_TREES_REJECTED, search.expansions)
    log_message(f'axis {axis}: resolution with {len(found)} twistors after {search.expansions} expansions',
                verbose=True)
    return SearchResult(found, None, search.expansions)


def is_resoluble(graph: ColoredGraph, budget: int | None = None) -> list[Color]:
    axes = []
    for axis in (1, 2, 3):
        try:
            if find_resolution(graph, axis, budget).found:
                axes.append(axis)
        except GemError as e:
            log_message(f'axis {axis}: {e.code}', verbose=True)
    return axes
