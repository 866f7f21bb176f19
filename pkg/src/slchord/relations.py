"""2-term slide moves, the diagram 4-term vector, and normal forms."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    ChordDiagram,
    Endpoint,
    adjacent_transposition,
    canonical_text,
    connected_components,
)
from .formal import FormalSum

BELOW, ABOVE = "below", "above"


class SlideError(ValueError):
    pass


@dataclass(frozen=True)
class SlideMove:
    """Slide endpoint ``p`` over the adjacent endpoint ``q`` of another chord."""

    p: Endpoint
    q: Endpoint

    @property
    def direction(self) -> str:
        return BELOW if self.p.position < self.q.position else ABOVE

    def text(self) -> str:
        rel = "below" if self.direction == BELOW else "above"
        return f"slide s{self.p.strand + 1}@{self.p.position} {rel} s{self.q.strand + 1}@{self.q.position}"


def _tokens(d: ChordDiagram):
    """Strands as lists of (chord, k) tokens, k = 0/1 for the chord's first/second endpoint."""
    seen: dict[int, int] = {}
    out = []
    for s in d.strands:
        row = []
        for c in s:
            t = seen.get(c, 0)
            seen[c] = t + 1
            row.append((c, t))
        out.append(row)
    return out


def _check_slide(d: ChordDiagram, m: SlideMove) -> None:
    p, q = m.p, m.q
    if p.strand != q.strand or abs(p.position - q.position) != 1:
        raise SlideError(f"{m.text()}: endpoints are not adjacent on one strand")
    if not (0 <= p.strand < d.k and 0 <= max(p.position, q.position) < len(d.strands[p.strand])):
        raise SlideError(f"{m.text()}: endpoint outside the diagram")
    if min(p.position, q.position) < 0:
        raise SlideError(f"{m.text()}: endpoint outside the diagram")
    if d.chord_at(p) == d.chord_at(q):
        raise SlideError(f"{m.text()}: both endpoints belong to one chord")


def applicable_slides(d: ChordDiagram) -> list[SlideMove]:
    """One slide per adjacent pair of distinct chords: the lower endpoint over the upper."""
    moves = []
    for si, s in enumerate(d.strands):
        for pos in range(len(s) - 1):
            if s[pos] != s[pos + 1]:
                moves.append(SlideMove(Endpoint(si, pos), Endpoint(si, pos + 1)))
    return moves


def all_slides(d: ChordDiagram) -> list[SlideMove]:
    """Both directions for every adjacent pair (the applicable slides and their mirrors)."""
    out = []
    for m in applicable_slides(d):
        out.append(m)
        out.append(SlideMove(m.q, m.p))
    return out


def slide_result(d: ChordDiagram, m: SlideMove) -> tuple[ChordDiagram, Endpoint]:
    """Apply ``m``; also return where the moved endpoint lands."""
    _check_slide(d, m)
    toks = _tokens(d)
    moving = toks[m.p.strand][m.p.position]
    anchor = toks[m.q.strand][m.q.position]
    target = (anchor[0], 1 - anchor[1])
    del toks[m.p.strand][m.p.position]
    for si, row in enumerate(toks):
        if target in row:
            idx = row.index(target)
            new_pos = idx + 1 if m.direction == BELOW else idx
            row.insert(new_pos, moving)
            break
    strands = tuple(tuple(c for c, _ in row) for row in toks)
    return ChordDiagram(d.k, strands, d.names), Endpoint(si, new_pos)


def apply_slide(d: ChordDiagram, m: SlideMove) -> ChordDiagram:
    return slide_result(d, m)[0]


def slide_color(m: SlideMove) -> int:
    """The strand shared by the two chords of a slide."""
    return m.p.strand


def four_term_diagrams(d: ChordDiagram, p: Endpoint, q: Endpoint):
    """The four diagrams of the 4-term relation at (p, q) with their signs."""
    m = SlideMove(p, q)
    slid, p2 = slide_result(d, m)
    # the anchor's other end sits right next to the landed endpoint
    q2 = Endpoint(p2.strand, p2.position - 1 if m.direction == BELOW else p2.position + 1)
    return [
        (d, 1),
        (adjacent_transposition(d, p, q), -1),
        (slid, -1),
        (adjacent_transposition(slid, p2, q2), 1),
    ]


def four_term_diagram_vector(d: ChordDiagram, p: Endpoint, q: Endpoint) -> FormalSum:
    return FormalSum((canonical_text(x), s) for x, s in four_term_diagrams(d, p, q))


# -- normal form --------------------------------------------------------------

MOVE_CAP = 10**6


class NormalFormError(RuntimeError):
    pass


@dataclass(frozen=True)
class MoveTrace:
    start: ChordDiagram
    moves: tuple[SlideMove, ...]
    diagrams: tuple[ChordDiagram, ...]  # diagram after each move

    def __len__(self) -> int:
        return len(self.moves)

    def steps(self):
        """(move, canonical text before, canonical text after) triples."""
        before = self.start
        for m, after in zip(self.moves, self.diagrams):
            yield m, canonical_text(before), canonical_text(after)
            before = after

    def replay(self) -> ChordDiagram:
        d = self.start
        for m in self.moves:
            d = apply_slide(d, m)
        return d

    def text(self) -> str:
        return "\n".join(m.text() for m in self.moves)


@dataclass(frozen=True)
class ComponentShape:
    path: tuple[int, ...]  # 0-based strands, path order
    bridges: tuple[int, ...]  # chords between consecutive path strands
    m1: int
    m2: int

    def text(self) -> str:
        return (
            f"path={','.join(str(s + 1) for s in self.path)} "
            f"bridges={','.join(str(b) for b in self.bridges)} m1={self.m1} m2={self.m2}"
        )


@dataclass(frozen=True)
class NormalFormSummary:
    components: tuple[ComponentShape, ...]

    def text(self) -> str:
        return "\n".join(c.text() for c in self.components)


def _parse_caravan(word) -> tuple[int, int] | None:
    """Counts of (one-humped, two-humped) camels, or None if not a caravan."""
    m1 = m2 = 0
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            m1 += 1
            i += 2
        elif i + 3 < len(word) and word[i] == word[i + 2] and word[i + 1] == word[i + 3] and word[i] != word[i + 1]:
            m2 += 1
            i += 4
        else:
            return None
    return m1, m2


def _bridge_path(d: ChordDiagram, block) -> list[int] | None:
    """The strands of ``block`` in path order if the bridges form a simple path."""
    adj: dict[int, set[int]] = {s: set() for s in block}
    for c in range(d.n):
        a, b = d.label(c)
        if a != b and a in adj:
            adj[a].add(b)
            adj[b].add(a)
    if len(block) == 1:
        return [block[0]]
    ends = [s for s in block if len(adj[s]) == 1]
    if len(ends) != 2 or any(len(adj[s]) > 2 for s in block):
        return None
    path = [min(ends)]
    prev = None
    while True:
        nxt = [t for t in adj[path[-1]] if t != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return path if len(path) == len(block) else None


def _shape_with_path(d: ChordDiagram, path, block_chords) -> ComponentShape | None:
    first = path[0]
    index = {s: i for i, s in enumerate(path)}
    loops = [c for c in block_chords if d.label(c)[0] == d.label(c)[1]]
    if any(d.label(c)[0] != first for c in loops):
        return None
    # bridges only between consecutive strands
    pair_chords: dict[int, list[int]] = {}
    for c in block_chords:
        a, b = d.label(c)
        if a == b:
            continue
        i, j = sorted((index[a], index[b]))
        if j != i + 1:
            return None
        pair_chords.setdefault(i, []).append(c)
    bridges = []
    for i in range(len(path) - 1):
        cs = pair_chords.get(i, [])
        if not 1 <= len(cs) <= 2:
            return None
        if len(cs) == 2:
            x, y = cs
            order = [
                [c for c in d.strands[s] if c in (x, y)] for s in (path[i], path[i + 1])
            ]
            if order[0] != order[1]:
                return None
        bridges.append(len(cs))
    # caravan at the bottom of the first strand
    row = d.strands[first]
    loopset = set(loops)
    nloop = sum(1 for c in row if c in loopset)
    if any(c not in loopset for c in row[:nloop]):
        return None
    counts = _parse_caravan(row[:nloop])
    if counts is None:
        return None
    # on each strand, chords to the next strand lie below chords to the previous one
    for i, s in enumerate(path):
        seen_prev = False
        for c in d.strands[s]:
            a, b = d.label(c)
            if a == b:
                continue
            other = b if a == s else a
            if i > 0 and other == path[i - 1]:
                seen_prev = True
            elif seen_prev:
                return None
    return ComponentShape(tuple(path), tuple(bridges), counts[0], counts[1])


def component_shape(d: ChordDiagram, block, block_chords) -> ComponentShape | None:
    """Normal-form shape of one connected block, trying both path orientations."""
    block = list(block)
    path = _bridge_path(d, block)
    if path is None:
        return None
    candidates = [path] if len(path) == 1 else sorted([path, path[::-1]])
    for p in candidates:
        shape = _shape_with_path(d, p, block_chords)
        if shape is not None:
            return shape
    return None


def _blocks(d: ChordDiagram):
    part = connected_components(d)
    chords: list[list[int]] = [[] for _ in part.blocks]
    for c, b in enumerate(part.chord_block):
        chords[b].append(c)
    return list(zip(part.blocks, chords))


def normal_form_summary(d: ChordDiagram) -> NormalFormSummary | None:
    shapes = []
    for block, chords in _blocks(d):
        shape = component_shape(d, block, chords)
        if shape is None:
            return None
        shapes.append(shape)
    return NormalFormSummary(tuple(shapes))


def is_normal_form(d: ChordDiagram) -> bool:
    return normal_form_summary(d) is not None


class _Rewriter:
    """Mutable working state for :func:`normal_form`; records every slide."""

    def __init__(self, d: ChordDiagram):
        self.start = d
        self.d = d
        self.moves: list[SlideMove] = []
        self.diagrams: list[ChordDiagram] = []
        self.frozen: set[int] = set()
        self.parked: dict[int, tuple[int, ...]] = {}  # chord -> its camel
        self.levels: list[int] = []  # frozen bridges, bottom to top

    # primitives ------------------------------------------------------------

    def slide(self, p: Endpoint, q: Endpoint) -> Endpoint:
        if len(self.moves) >= MOVE_CAP:
            raise NormalFormError(f"normal form exceeded {MOVE_CAP} moves")
        m = SlideMove(p, q)
        self.d, landed = slide_result(self.d, m)
        self.moves.append(m)
        self.diagrams.append(self.d)
        return landed

    def slide_at(self, strand: int, pos: int, anchor_pos: int) -> Endpoint:
        return self.slide(Endpoint(strand, pos), Endpoint(strand, anchor_pos))

    def ends(self, chord: int) -> tuple[Endpoint, Endpoint]:
        return self.d.endpoints[chord]

    def end_on(self, chord: int, strand: int) -> Endpoint:
        for e in self.ends(chord):
            if e.strand == strand:
                return e
        raise NormalFormError(f"chord {chord} has no endpoint on strand {strand + 1}")

    def is_bridge(self, chord: int) -> bool:
        a, b = self.d.label(chord)
        return a != b

    # camels ----------------------------------------------------------------

    def camel_span(self, camel: tuple[int, ...]) -> tuple[int, int, int]:
        """(strand, first position, size) of a contiguous parked camel."""
        eps = [e for c in camel for e in self.ends(c)]
        strand = eps[0].strand
        lo = min(e.position for e in eps)
        return strand, lo, len(eps)

    def pass_up(self, camel: tuple[int, ...]) -> None:
        """Move the endpoint directly below ``camel`` to directly above it."""
        s, b, size = self.camel_span(camel)
        e = b - 1
        if size == 2:
            self.slide_at(s, e, e + 1)
        else:
            self.slide_at(s, e, e + 1)  # x y x e y
            self.slide_at(s, e, e + 1)  # y x e y x
            self.slide_at(s, e, e + 1)  # x e y x y
            self.slide_at(s, e + 1, e + 2)  # x y x y e

    def pass_down(self, camel: tuple[int, ...]) -> None:
        """Move the endpoint directly above ``camel`` to directly below it."""
        s, b, size = self.camel_span(camel)
        top = b + size
        if size == 2:
            self.slide_at(s, top, top - 1)
        else:
            self.slide_at(s, top, top - 1)
            self.slide_at(s, top, top - 1)
            self.slide_at(s, top, top - 1)
            self.slide_at(s, top - 1, top - 2)

    def park(self, camel: tuple[int, ...]) -> None:
        for c in camel:
            self.parked[c] = camel
        self.sink(camel)

    def sink(self, camel: tuple[int, ...]) -> None:
        """Lower a parked camel until it rests on another parked camel or the bottom."""
        while True:
            s, b, _ = self.camel_span(camel)
            if b == 0 or self.d.strands[s][b - 1] in self.parked:
                return
            self.pass_up(camel)

    def hop_block(self, camel: tuple[int, ...], bridge: int, strand: int) -> None:
        """Carry a camel lying directly below ``bridge``'s endpoint on ``strand``
        to directly above its other endpoint."""
        _, _, size = self.camel_span(camel)
        for _ in range(size):
            q = self.end_on(bridge, strand)
            self.slide_at(strand, q.position - 1, q.position)

    # stage 1: level every bridge -------------------------------------------

    def lift(self, c: int) -> None:
        """Push every free endpoint above ``c`` across it, then freeze ``c``."""
        while True:
            for e in self.ends(c):
                row = self.d.strands[e.strand]
                if e.position + 1 < len(row) and row[e.position + 1] not in self.frozen:
                    self.slide_at(e.strand, e.position + 1, e.position)
                    break
            else:
                break
        self.frozen.add(c)
        self.levels.insert(0, c)

    def pick_bridge(self, strands) -> int | None:
        """A free bridge already on top of some strand, else the first free bridge."""
        for s in strands:
            top = next((c for c in reversed(self.d.strands[s]) if c not in self.frozen), None)
            if top is not None and self.is_bridge(top):
                return top
        for s in strands:
            for c in self.d.strands[s]:
                if c not in self.frozen and self.is_bridge(c):
                    return c
        return None

    # stage 2: caravans out of the loops left on each strand -----------------

    def free_loops(self, s: int) -> list[int]:
        return [c for c in self.d.strands[s] if c not in self.frozen and c not in self.parked]

    def reduce_loops(self, s: int) -> None:
        while True:
            free = self.free_loops(s)
            if not free:
                return
            self.make_camel(s, free[0])

    def make_camel(self, s: int, x: int) -> None:
        while True:
            row = self.d.strands[s]
            p1, p2 = (e.position for e in self.ends(x))
            inner = row[p1 + 1 : p2]
            if not inner:
                self.park((x,))
                return
            nested = {c for c in inner if inner.count(c) == 2}
            if nested:
                if inner[0] in nested:
                    self.slide_at(s, p1, p1 + 1)  # x jumps over the nested chord
                else:
                    self.slide_at(s, p1 + 1, p1)  # rotate the interior
                continue
            if len(inner) >= 2:
                self.slide_at(s, p1 + 1, p1 + 2)  # first crossing chord leaves
                continue
            y = inner[0]
            while True:
                row = self.d.strands[s]
                p1, p2 = (e.position for e in self.ends(x))
                y_out = next(e.position for e in self.ends(y) if e.position not in range(p1, p2))
                if y_out > p2:
                    if y_out == p2 + 1:
                        break
                    self.slide_at(s, p2 + 1, p2)
                else:
                    if y_out == p1 - 1:
                        break
                    self.slide_at(s, p1 - 1, p1)
            self.park((x, y))
            return

    # stage 3: rewrite the levelled bridges into a path ----------------------

    def other(self, c: int, s: int) -> int:
        a, b = self.d.label(c)
        return b if a == s else a

    def touches(self, c: int, s: int) -> bool:
        return s in self.d.label(c)

    def climb(self, word: list[int], i: int, s: int) -> None:
        """Move the ``s``-letter at ``word[i]`` above ``word[i+1]``."""
        a, b = word[i], word[i + 1]
        shared = set(self.d.label(a)) & set(self.d.label(b))
        if shared:
            (t,) = shared
            pa, pb = self.end_on(a, t), self.end_on(b, t)
            self.slide(pa, pb)
        word[i], word[i + 1] = b, a

    def bubble(self, word: list[int], hi: int, s: int) -> None:
        changed = True
        while changed:
            changed = False
            for i in range(hi - 2, -1, -1):
                if self.touches(word[i], s) and not self.touches(word[i + 1], s):
                    self.climb(word, i, s)
                    changed = True

    def strip(self, word: list[int], j: int, s: int) -> None:
        """Slide ``word[j+1]`` off strand ``s`` down across ``word[j]``."""
        x, y = word[j], word[j + 1]
        self.slide(self.end_on(y, s), self.end_on(x, s))
        word[j], word[j + 1] = y, x

    def factor_camel(self, word: list[int], t0: int, s: int) -> None:
        """Three parallel bridges -> one bridge plus a two-humped camel on ``s``."""
        x, y, z = word[t0 : t0 + 3]
        nxt = self.other(x, s)
        self.slide(self.end_on(y, nxt), self.end_on(z, nxt))
        xs = self.end_on(x, s)
        self.slide(xs, Endpoint(s, xs.position + 1))
        self.slide(self.end_on(z, nxt), self.end_on(x, nxt))
        del word[t0 + 1 : t0 + 3]
        self.park((y, z))

    def build_path(self, block, word: list[int]) -> list[int]:
        s = min(block)
        path = [s]
        hi = len(word)
        while True:
            while True:
                self.bubble(word, hi, s)
                t0 = hi
                while t0 > 0 and self.touches(word[t0 - 1], s):
                    t0 -= 1
                for j in range(hi - 2, t0 - 1, -1):
                    if self.other(word[j], s) != self.other(word[j + 1], s):
                        self.strip(word, j, s)
                        break
                else:
                    break
            while hi - t0 >= 3:
                self.factor_camel(word, t0, s)
                hi -= 2
            if t0 == hi:
                break
            s = self.other(word[t0], s)
            path.append(s)
            hi = t0
        if hi != 0:
            raise NormalFormError("bridges left outside the path")
        return path

    # stage 4: carry every caravan down the path to its first strand ---------

    def sweep_caravans(self, path: list[int]) -> None:
        for i in range(len(path) - 1, 0, -1):
            s, prev = path[i], path[i - 1]
            while True:
                camels = {self.parked[c] for c in self.d.strands[s] if c in self.parked}
                if not camels:
                    break
                camel = max(camels, key=lambda cm: self.camel_span(cm)[1])
                while True:
                    _, b, size = self.camel_span(camel)
                    above = self.d.strands[s][b + size]
                    if self.touches(above, prev):
                        break
                    self.pass_down(camel)
                self.hop_block(camel, above, s)
                self.sink(camel)


def normal_form(d: ChordDiagram):
    """Rewrite ``d`` by slides into normal form.

    Returns the normal-form diagram, the replayable trace and the summary.
    Blocks already in normal form are left untouched.
    """
    w = _Rewriter(d)
    todo = []
    for block, chords in _blocks(d):
        if component_shape(d, block, chords) is None:
            todo.append((block, chords))
        else:
            w.frozen.update(chords)
    strands = sorted(s for block, _ in todo for s in block)
    while True:
        c = w.pick_bridge(strands)
        if c is None:
            break
        w.lift(c)
    for s in strands:
        w.reduce_loops(s)
    for block, _ in todo:
        bset = set(block)
        word = [c for c in w.levels if w.d.label(c)[0] in bset]
        path = w.build_path(block, word)
        w.sweep_caravans(path)
    summary = normal_form_summary(w.d)
    if summary is None:
        raise NormalFormError(f"result is not in normal form:\n{w.d.text()}")
    trace = MoveTrace(d, tuple(w.moves), tuple(w.diagrams))
    return w.d, trace, summary
