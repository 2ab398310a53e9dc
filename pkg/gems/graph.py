from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Disconnected, FixedPoint, NotAMatching

Color = int
COLORS: tuple[Color, ...] = (0, 1, 2, 3)
COLOR_PAIRS: tuple[tuple[Color, Color], ...] = tuple(combinations(COLORS, 2))
COLOR_TRIPLES: tuple[tuple[Color, ...], ...] = tuple(combinations(COLORS, 3))

FNV_OFFSET = 0xcbf29ce484222325
FNV_PRIME = 0x100000001b3


def complement(colors: Iterable[Color]) -> tuple[Color, ...]:
    chosen = set(colors)
    return tuple(c for c in COLORS if c not in chosen)


def axis_colors(axis: Color) -> tuple[Color, Color]:
    """The colors (j, k) paired with axis i, in increasing order."""
    if axis not in (1, 2, 3):
        raise ValueError(f'axis must be 1, 2 or 3, got {axis}')
    j, k = (c for c in (1, 2, 3) if c != axis)
    return j, k


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    # pairing[c][v] is the c-neighbor of v; index 0 is unused
    pairing: tuple[tuple[int, ...], ...]
    name: str = field(default='', compare=False)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbor(self, color: Color, v: int) -> int:
        return self.pairing[color][v]

    def edges(self, color: Color) -> list[tuple[int, int]]:
        p = self.pairing[color]
        return [(v, p[v]) for v in self.vertices if v < p[v]]

    def matchings(self) -> list[list[tuple[int, int]]]:
        return [self.edges(c) for c in COLORS]

    def joining_colors(self, u: int, v: int) -> tuple[Color, ...]:
        return tuple(c for c in COLORS if self.pairing[c][u] == v)

    def renamed(self, name: str) -> 'ColoredGraph':
        return ColoredGraph(self.n, self.pairing, name)


def _check_pairing(n: int, pairing: Sequence[Sequence[int]]):
    for c in COLORS:
        p = pairing[c]
        for v in range(1, n + 1):
            w = p[v]
            if w == v:
                raise FixedPoint(f'color {c}: vertex {v} is paired with itself')
            if not 1 <= w <= n or p[w] != v:
                raise NotAMatching(f'color {c}: vertex {v} is not matched consistently')


def from_pairing(n: int, pairing: Sequence[Sequence[int]], name: str = '',
                 check_connected: bool = True) -> ColoredGraph:
    frozen = tuple(tuple(p) for p in pairing)
    _check_pairing(n, frozen)
    graph = ColoredGraph(n, frozen, name)
    if check_connected and not is_connected(graph):
        raise Disconnected(f'graph {name or "<unnamed>"} is not connected')
    return graph


def build_graph(n: int, matchings: Sequence[Iterable[tuple[int, int]]], name: str = '') -> ColoredGraph:
    if n <= 0 or n % 2:
        raise NotAMatching(f'vertex count must be even and positive, got {n}')
    if len(matchings) != 4:
        raise NotAMatching(f'expected four color classes, got {len(matchings)}')

    pairing = []
    for c, pairs in enumerate(matchings):
        p = [0] * (n + 1)
        for u, v in pairs:
            if u == v:
                raise FixedPoint(f'color {c}: pair ({u},{v}) is a fixed point')
            for w in (u, v):
                if not 1 <= w <= n:
                    raise NotAMatching(f'color {c}: vertex {w} outside 1..{n}')
                if p[w]:
                    raise NotAMatching(f'color {c}: vertex {w} repeated')
            p[u], p[v] = v, u
        missing = [v for v in range(1, n + 1) if not p[v]]
        if missing:
            raise NotAMatching(f'color {c}: vertices {missing} not covered')
        pairing.append(p)

    return from_pairing(n, pairing, name)


@dataclass(frozen=True)
class Residue:
    colors: tuple[Color, ...]
    # for two colors: cyclic order starting at the smallest vertex along the smaller color
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def cycle_edges(self) -> list[tuple[Color, int, int]]:
        """(color, a, b) for consecutive vertices of a bigon, closing the cycle."""
        if len(self.colors) != 2:
            raise ValueError('cycle_edges is defined for bigons only')
        a, b = self.colors
        verts = self.vertices
        return [((a, b)[i % 2], verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def _bigon_walk(graph: ColoredGraph, colors: tuple[Color, Color], start: int) -> tuple[int, ...]:
    a, b = colors
    walk = [start]
    v = graph.pairing[a][start]
    step = 1
    while v != start:
        walk.append(v)
        v = graph.pairing[(a, b)[step % 2]][v]
        step += 1
    return tuple(walk)


def residues(graph: ColoredGraph, colors: Iterable[Color]) -> list[Residue]:
    key = tuple(sorted(set(colors)))
    if not key or any(c not in COLORS for c in key):
        raise ValueError(f'invalid color set {colors}')

    seen = [False] * (graph.n + 1)
    found = []
    for start in graph.vertices:
        if seen[start]:
            continue
        if len(key) == 2:
            orbit = _bigon_walk(graph, key, start)
        else:
            orbit_list = [start]
            seen[start] = True
            i = 0
            while i < len(orbit_list):
                v = orbit_list[i]
                i += 1
                for c in key:
                    w = graph.pairing[c][v]
                    if not seen[w]:
                        seen[w] = True
                        orbit_list.append(w)
            orbit = tuple(orbit_list)
        for v in orbit:
            seen[v] = True
        found.append(Residue(key, orbit))
    return found


@lru_cache(maxsize=8192)
def residue_labels(graph: ColoredGraph, colors: tuple[Color, ...]) -> tuple[int, ...]:
    """labels[v] = index of the colors-residue containing v (index 0 unused)."""
    labels = [0] * (graph.n + 1)
    for idx, res in enumerate(residues(graph, colors)):
        for v in res.vertices:
            labels[v] = idx
    return tuple(labels)


def same_residue(graph: ColoredGraph, colors: Iterable[Color], u: int, v: int) -> bool:
    labels = residue_labels(graph, tuple(sorted(set(colors))))
    return labels[u] == labels[v]


def bigon_count(graph: ColoredGraph, i: Color, j: Color) -> int:
    return len(residues(graph, (i, j)))


def is_connected(graph: ColoredGraph) -> bool:
    return len(residues(graph, COLORS)) == 1


def relabel(graph: ColoredGraph, mapping: dict[int, int], name: str | None = None) -> ColoredGraph:
    """Renumber vertices; mapping must be a bijection onto 1..n."""
    n = graph.n
    pairing = []
    for c in COLORS:
        p = [0] * (n + 1)
        for v in graph.vertices:
            p[mapping[v]] = mapping[graph.pairing[c][v]]
        pairing.append(tuple(p))
    return ColoredGraph(n, tuple(pairing), graph.name if name is None else name)


def _code_from(graph: ColoredGraph, start: int) -> tuple[int, ...]:
    order = {start: 1}
    queue = [start]
    code = []
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for c in COLORS:
            w = graph.pairing[c][v]
            if w not in order:
                order[w] = len(order) + 1
                queue.append(w)
            code.append(order[w])
    return tuple(code)


@lru_cache(maxsize=4096)
def canonical_code(graph: ColoredGraph) -> tuple[int, ...]:
    return min(_code_from(graph, s) for s in graph.vertices)


def color_isomorphic(g: ColoredGraph, h: ColoredGraph) -> bool:
    if g.n != h.n:
        return False
    return canonical_code(g) == canonical_code(h)


def fnv1a_64(data: bytes) -> int:
    value = FNV_OFFSET
    for byte in data:
        value ^= byte
        value = (value * FNV_PRIME) & 0xffffffffffffffff
    return value


def state_hash(graph: ColoredGraph) -> str:
    text = ','.join(map(str, canonical_code(graph)))
    return f'{fnv1a_64(text.encode()):016x}'


def sphere_graph(name: str = 'G2') -> ColoredGraph:
    """The 2-vertex gem: every color joins 1 and 2."""
    return build_graph(2, [[(1, 2)]] * 4, name)
