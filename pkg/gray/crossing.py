from collections import defaultdict
from itertools import combinations
from typing import Iterable

from gems.errors import EdgeNotInGrayGraph
from gems.graph import ColoredGraph, residues

from .gray_graph import GrayEdge, GrayGraph, build_gray_graph


def _interleave(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = sorted(c1)
    c, d = sorted(c2)
    return a < c < b < d or c < a < d < b


def face_chords_cross(cycle: int, chords: Iterable[tuple[int, int]]) -> bool:
    """True when two chords between points 0..cycle-1 of one face boundary interleave."""
    chords = list(chords)
    for a, b in chords:
        if not (0 <= a < cycle and 0 <= b < cycle):
            raise ValueError(f'chord {a}-{b} outside a face of {cycle} points')
    return any(_interleave(c1, c2) for c1, c2 in combinations(chords, 2))


def corridor_chords(graph: ColoredGraph, edges: Iterable[GrayEdge]) -> dict[tuple, tuple[int, list]]:
    """Per corridor face: its number of boundary points and the chords the gray edges draw in it.

    A gray edge of kind t leaves its jk-face across the e-pair edge at u, runs inside the
    {axis, e}-face shared by u and v, and enters the other jk-face across the e-pair edge at v.
    The crossing point on an edge sits next to the twistor vertex: a face of L vertices has its
    vertex number i at point 4i and the crossing points at 4i - 1 and 4i + 1.
    """
    faces = {}
    chords = defaultdict(list)
    for e in edges:
        tw = e.twistor
        colors = tuple(sorted((tw.axis, tw.e_color)))
        if colors not in faces:
            faces[colors] = residues(graph, colors)
        face_idx, face = next((i, f) for i, f in enumerate(faces[colors]) if tw.u in f)
        length = len(face)
        points = []
        for w, _ in e.e_pair:
            i = face.vertices.index(w)
            # the walk leaves vertex i along colors[i % 2]
            toward_next = colors[i % 2] == tw.e_color
            points.append((4 * i + (1 if toward_next else -1)) % (4 * length))
        chords[(colors, face_idx)].append(tuple(points))
    return {key: (4 * len(faces[key[0]][key[1]]), value) for key, value in chords.items()}


def crossing_free(graph: ColoredGraph, axis: int, selected: Iterable[GrayEdge],
                  gray: GrayGraph | None = None) -> bool:
    gray = gray or build_gray_graph(graph, axis)
    selected = list(selected)
    known = set(gray.edges)
    for e in selected:
        if e not in known:
            raise EdgeNotInGrayGraph(f'{e.label} is not an edge of the gray graph')
    return not any(face_chords_cross(size, chords) for size, chords in corridor_chords(graph, selected).values())
