from gems.errors import MismatchedGray
from gems.graph import COLORS, ColoredGraph, axis_colors, residues
from gray.gray_graph import GrayGraph
from gray.resolution import Resolution

EDGE_COLORS = {0: 'black', 1: 'red', 2: 'blue', 3: 'forestgreen'}


def _check_gray(graph: ColoredGraph, gray: GrayGraph):
    j, k = axis_colors(gray.axis)
    if [r.vertices for r in residues(graph, (j, k))] != [r.vertices for r in gray.nodes]:
        raise MismatchedGray(f'the gray graph was not built from {graph.name or "this graph"}')
    for e in gray.edges:
        if not all(1 <= w <= graph.n for w in e.vertices):
            raise MismatchedGray(f'gray edge {e.label} names vertices outside 1..{graph.n}')


def export_dot(graph: ColoredGraph, gray: GrayGraph | None = None, highlight: Resolution | None = None) -> str:
    """Gem edges colored by index; gray edges dashed between gon nodes and labeled t:u-v."""
    lines = [f'graph "{graph.name or "gem"}" {{', '  node [shape=circle];']
    lines += [f'  {v};' for v in graph.vertices]
    for c in COLORS:
        for u, v in graph.edges(c):
            lines.append(f'  {u} -- {v} [color={EDGE_COLORS[c]}, label="{c}"];')

    if gray is not None:
        _check_gray(graph, gray)
        chosen = {tw.label for tw in highlight.twistors} if highlight else set()
        for idx, gon in enumerate(gray.nodes):
            members = ' '.join(map(str, gon.vertices))
            lines.append(f'  g{idx} [shape=box, color=gray, tooltip="{members}"];')
        for e in gray.edges:
            width = ', penwidth=3' if e.label in chosen else ''
            lines.append(f'  g{e.source} -- g{e.target} [style=dashed, color=gray, label="{e.label}"{width}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
