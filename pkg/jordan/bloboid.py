from gems.graph import ColoredGraph, build_graph, complement, residues


def make_bloboid(n: int) -> ColoredGraph:
    """n blobs over 3-edges arranged in a cycle; make_bloboid(1) is G2."""
    if n < 1:
        raise ValueError(f'a bloboid needs at least one blob, got {n}')
    m = 2 * n
    blobs = [(2 * b - 1, 2 * b) for b in range(1, n + 1)]
    links = [(2 * b, 2 * b % m + 1) for b in range(1, n + 1)]
    return build_graph(m, [blobs, blobs, blobs, links], f'B{n}')


def bloboid_color(graph: ColoredGraph) -> int | None:
    """The color h in {3, 2} such that every residue of the other three colors is a blob, if any."""
    for h in (3, 2):
        if all(len(res) == 2 for res in residues(graph, complement((h,)))):
            return h
    return None


def is_bloboid(graph: ColoredGraph, strict: bool = False) -> bool:
    h = bloboid_color(graph)
    if strict:
        return h == 3
    return h is not None
