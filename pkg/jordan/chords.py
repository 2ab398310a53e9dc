import random
from dataclasses import dataclass
from itertools import product

import config as cfg
from gems.errors import GenerationFailed, InvalidDiagram
from gems.log import log_message

Chord = tuple[int, int]


@dataclass(frozen=True)
class ChordDiagram:
    """Two Jordan curves X and Y crossing at 2n points, labeled 1..2n along X."""
    n: int
    inner: tuple[Chord, ...]
    outer: tuple[Chord, ...]

    @classmethod
    def of(cls, n: int, inner, outer) -> 'ChordDiagram':
        def norm(chords):
            return tuple(sorted((min(a, b), max(a, b)) for a, b in chords))
        return cls(n, norm(inner), norm(outer))

    @property
    def points(self) -> int:
        return 2 * self.n

    def partners(self, side: str) -> list[int]:
        """partner[p] along the inner or outer chords (index 0 unused)."""
        p = [0] * (self.points + 1)
        for a, b in getattr(self, side):
            p[a], p[b] = b, a
        return p

    def encoding(self) -> tuple:
        return self.inner + ((0, 0),) + self.outer


def _matching(n: int, chords, side: str) -> list[int]:
    m = 2 * n
    if len(chords) != n:
        raise InvalidDiagram(f'{side} chords: expected {n}, got {len(chords)}')
    partner = [0] * (m + 1)
    for a, b in chords:
        for p in (a, b):
            if not 1 <= p <= m:
                raise InvalidDiagram(f'{side} chords: point {p} outside 1..{m}')
            if partner[p]:
                raise InvalidDiagram(f'{side} chords: point {p} used twice')
        if a == b:
            raise InvalidDiagram(f'{side} chords: loop at {a}')
        partner[a], partner[b] = b, a
    return partner


def is_noncrossing(partner: list[int]) -> bool:
    stack = []
    for p in range(1, len(partner)):
        if partner[p] > p:
            stack.append(p)
        elif not stack or stack.pop() != partner[p]:
            return False
    return True


def y_cycle_length(inner: list[int], outer: list[int]) -> int:
    """Number of points on the alternating inner/outer walk through point 1."""
    p, length = 1, 0
    while True:
        p = outer[inner[p]]
        length += 2
        if p == 1:
            return length


def validate_diagram(d: ChordDiagram) -> tuple[list[int], list[int]]:
    if d.n < 1:
        raise InvalidDiagram(f'a diagram needs at least 2 points, got {d.points}')
    inner = _matching(d.n, d.inner, 'inner')
    outer = _matching(d.n, d.outer, 'outer')
    if not is_noncrossing(inner):
        raise InvalidDiagram('inner chords interleave')
    if not is_noncrossing(outer):
        raise InvalidDiagram('outer chords interleave')
    if y_cycle_length(inner, outer) != d.points:
        raise InvalidDiagram('inner and outer chords do not close up into a single curve')
    return inner, outer


def _dyck_matching(n: int, rng: random.Random) -> list[int]:
    """Uniform non-crossing perfect matching of 1..2n (cycle lemma on n ups and n+1 downs)."""
    word = [1] * n + [-1] * (n + 1)
    rng.shuffle(word)
    low, cut, level = 0, 0, 0
    for idx, step in enumerate(word, start=1):
        level += step
        if level < low:
            low, cut = level, idx
    word = (word[cut:] + word[:cut])[:-1]

    partner = [0] * (2 * n + 1)
    stack = []
    for p, step in enumerate(word, start=1):
        if step > 0:
            stack.append(p)
        else:
            q = stack.pop()
            partner[p], partner[q] = q, p
    return partner


def _chords(partner: list[int]) -> list[Chord]:
    return [(p, q) for p, q in enumerate(partner) if 0 < p < q]


def random_chord_diagram(n: int, seed: int | None = None) -> ChordDiagram:
    if n < 1:
        raise ValueError(f'n must be at least 1, got {n}')
    if n > cfg.CHORD_MAX_N:
        raise GenerationFailed(f'rejection sampling is capped at n={cfg.CHORD_MAX_N}, got {n}')
    rng = random.Random(cfg.DEFAULT_SEED if seed is None else seed)
    for attempt in range(cfg.CHORD_MAX_TRIES):
        inner, outer = _dyck_matching(n, rng), _dyck_matching(n, rng)
        if y_cycle_length(inner, outer) == 2 * n:
            break
    else:
        raise GenerationFailed(f'no single-curve diagram with {2 * n} points after {cfg.CHORD_MAX_TRIES} tries')
    log_message(f'chord diagram found after {attempt + 1} tries (n={n})', verbose=True)

    d = ChordDiagram.of(n, _chords(inner), _chords(outer))
    validate_diagram(d)
    return d


def _noncrossing_matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        for left in _noncrossing_matchings(points[1:idx]):
            for right in _noncrossing_matchings(points[idx + 1:]):
                yield ((first, points[idx]),) + left + right


def enumerate_diagrams(n: int) -> list[ChordDiagram]:
    """Every valid diagram with 2n points, in canonical order of encoding."""
    matchings = list(_noncrossing_matchings(tuple(range(1, 2 * n + 1))))
    found = []
    for inner, outer in product(matchings, repeat=2):
        d = ChordDiagram.of(n, inner, outer)
        if y_cycle_length(d.partners('inner'), d.partners('outer')) == 2 * n:
            found.append(d)
    return sorted(found, key=ChordDiagram.encoding)


def _transform(d: ChordDiagram, f) -> ChordDiagram:
    return ChordDiagram.of(d.n, [(f(a), f(b)) for a, b in d.inner], [(f(a), f(b)) for a, b in d.outer])


def diagram_symmetries(d: ChordDiagram) -> list[ChordDiagram]:
    """Images under the rotations and reflections that keep the parity of every X-segment."""
    m = d.points
    images = []
    for r in range(0, m, 2):
        images.append(_transform(d, lambda p, r=r: (p - 1 + r) % m + 1))
        images.append(_transform(d, lambda p, r=r: (r - p) % m + 1))
    return images


def canonical_diagram(d: ChordDiagram) -> ChordDiagram:
    return min(diagram_symmetries(d), key=ChordDiagram.encoding)
