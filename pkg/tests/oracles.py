"""Independent reference computations and hypothesis strategies for the tests.

Nothing here calls into the package's own algorithms: each oracle works from
the definitions on raw strand lists.
"""

from __future__ import annotations

from itertools import permutations

import networkx as nx
import sympy
from hypothesis import strategies as st

from slchord.diagram import ChordDiagram


def endpoints(strands):
    """(strand, position, chord) for every endpoint."""
    return [(s, i, c) for s, word in enumerate(strands) for i, c in enumerate(word)]


def tally_graph(strands):
    """Labels and mod-2 directed tallies straight from the definition.

    For every ordered pair of endpoints on one strand with ``p`` below ``q``
    and distinct chords, count one arc chord(p) -> chord(q).
    """
    names = sorted({c for w in strands for c in w})
    label = {}
    for s, _, c in endpoints(strands):
        label.setdefault(c, []).append(s)
    tally = {}
    for word in strands:
        for i, a in enumerate(word):
            for b in word[i + 1 :]:
                if a != b:
                    tally[a, b] = tally.get((a, b), 0) + 1
    labels = {c: tuple(sorted(label[c])) for c in names}
    arcs = {(a, b) for (a, b), t in tally.items() if t % 2}
    return labels, arcs


def adjacency_lists(strands):
    """Adjacency matrix as 0/1 lists, vertices in chord-id order."""
    labels, arcs = tally_graph(strands)
    names = sorted(labels)
    return [
        [
            int(labels[a][0] != labels[a][1]) if a == b else int((a, b) in arcs)
            for b in names
        ]
        for a in names
    ]


def rank_mod2(rows) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] % 2), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] % 2:
                m[i] = [(x + y) % 2 for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def det_mod2(rows) -> int:
    if not rows:
        return 1
    return int(sympy.Matrix(rows).det()) % 2


def surgery_components(strands, surgered=None) -> int:
    """Components of the closed-up curve after band surgery, via a ribbon graph.

    Each endpoint splits into an ``in`` and an ``out`` node.  Along a strand the
    curve runs from ``out`` of one endpoint to ``in`` of the next, the top
    wrapping to the bottom through the closure arc.  An untouched endpoint
    joins its own in and out; a surgered chord crosses them over.
    """
    g = nx.Graph()
    free = 0
    ends = {}
    for s, word in enumerate(strands):
        if not word:
            free += 1
            continue
        for i in range(len(word)):
            g.add_edge(("out", s, i), ("in", s, (i + 1) % len(word)))
            ends.setdefault(word[i], []).append((s, i))
    chords = set(ends) if surgered is None else set(surgered)
    for c, pts in ends.items():
        if c in chords:
            (s1, i1), (s2, i2) = pts
            g.add_edge(("in", s1, i1), ("out", s2, i2))
            g.add_edge(("in", s2, i2), ("out", s1, i1))
        else:
            for s, i in pts:
                g.add_edge(("in", s, i), ("out", s, i))
    return nx.number_connected_components(g) + free


def strand_blocks(strands):
    """Strand partition linked by chords with ends on different strands."""
    g = nx.Graph()
    g.add_nodes_from(range(len(strands)))
    seen = {}
    for s, _, c in endpoints(strands):
        if c in seen and seen[c] != s:
            g.add_edge(seen[c], s)
        seen.setdefault(c, s)
    return sorted(sorted(b) for b in nx.connected_components(g))


def brute_diagrams(k, n):
    """Every diagram by brute force: all words over the chord alphabet, deduplicated."""
    out = set()
    slots = [c for c in range(n) for _ in range(2)]
    for perm in set(permutations(slots)):
        for cuts in _cut_points(2 * n, k):
            strands = tuple(perm[cuts[i] : cuts[i + 1]] for i in range(k))
            out.add(_first_appearance(strands))
    return out


def _cut_points(total, parts):
    if parts == 1:
        yield (0, total)
        return
    for first in range(total + 1):
        for rest in _cut_points(total - first, parts - 1):
            yield (0,) + tuple(first + r for r in rest)


def _first_appearance(strands):
    ren = {}
    for w in strands:
        for c in w:
            ren.setdefault(c, len(ren))
    return tuple(tuple(ren[c] for c in w) for w in strands)


@st.composite
def diagrams(draw, max_k=4, max_n=5, min_n=0):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(min_n, max_n))
    slots = draw(st.permutations([c for c in range(n) for _ in range(2)]))
    where = sorted(draw(st.lists(st.integers(0, k - 1), min_size=2 * n, max_size=2 * n)))
    strands = [[] for _ in range(k)]
    for s, c in zip(where, slots):
        strands[s].append(c)
    return ChordDiagram.from_lists(strands)
