"""Labeled directed intersection graphs and their bialgebra operations.

Edges are stored already reduced mod 2 as out-neighbour bitmasks: bit ``w`` of
``arcs[v]`` is set when an uncancelled edge ``v -> w`` remains.  An edge in
both directions is the undirected edge.  Labels are sorted pairs of 0-based
strand indices; text output numbers strands from 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations, product

from .diagram import ChordDiagram, chord_subsets
from .formal import FormalSum, tensor_key

NONE, FWD, BACK, BOTH = "none", "fwd", "back", "both"


@dataclass(frozen=True)
class IntersectionGraph:
    labels: tuple[tuple[int, int], ...]
    arcs: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.arcs):
            raise ValueError("one arc row per vertex required")
        for v, row in enumerate(self.arcs):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> len(self.arcs):
                raise ValueError(f"arc from vertex {v} to a missing vertex")

    @property
    def order(self) -> int:
        return len(self.labels)

    def has_arc(self, v: int, w: int) -> bool:
        return bool(self.arcs[v] >> w & 1)

    def edge_state(self, v: int, w: int) -> tuple[int, int]:
        """(forward, backward) bits relative to the ordered pair (v, w)."""
        return (self.arcs[v] >> w & 1, self.arcs[w] >> v & 1)

    def edge_kind(self, v: int, w: int) -> str:
        return (NONE, BACK, FWD, BOTH)[2 * (self.arcs[v] >> w & 1) + (self.arcs[w] >> v & 1)]

    def vertex_name(self, v: int) -> str:
        return self.names[v] if self.names is not None else f"v{v + 1}"

    def induced(self, verts) -> IntersectionGraph:
        verts = list(verts)
        labels = tuple(self.labels[v] for v in verts)
        arcs = []
        for v in verts:
            row = 0
            for j, w in enumerate(verts):
                if self.arcs[v] >> w & 1:
                    row |= 1 << j
            arcs.append(row)
        names = tuple(self.names[v] for v in verts) if self.names is not None else None
        return IntersectionGraph(labels, tuple(arcs), names)

    def text(self) -> str:
        return graph_text(self)


def color_matches(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Number of occurrences of each colour of ``a`` among the two slots of ``b``."""
    return b.count(a[0]) + b.count(a[1])


def intersection_graph(d: ChordDiagram) -> IntersectionGraph:
    n = d.n
    arcs = [0] * n
    for s in d.strands:
        for i, u in enumerate(s):
            for w in s[i + 1 :]:
                if u != w:
                    arcs[u] ^= 1 << w
    labels = tuple(d.label(c) for c in range(n))
    return IntersectionGraph(labels, tuple(arcs), d.names)


def empty_graph() -> IntersectionGraph:
    return IntersectionGraph((), ())


def graph_product(g1: IntersectionGraph, g2: IntersectionGraph) -> IntersectionGraph:
    n1 = g1.order
    arcs = []
    for v, lab in enumerate(g1.labels):
        row = g1.arcs[v]
        for w, lab2 in enumerate(g2.labels):
            if color_matches(lab, lab2) & 1:
                row |= 1 << (n1 + w)
        arcs.append(row)
    arcs.extend(row << n1 for row in g2.arcs)
    names = None
    if g1.names is not None and g2.names is not None:
        names = g1.names + g2.names
    return IntersectionGraph(g1.labels + g2.labels, tuple(arcs), names)


def graph_coproduct_terms(g: IntersectionGraph):
    everything = set(range(g.order))
    for J in chord_subsets(g.order):
        rest = sorted(everything - set(J))
        yield J, g.induced(J), g.induced(rest)


def graph_coproduct(g: IntersectionGraph) -> FormalSum:
    return FormalSum(
        (tensor_key(graph_key(a), graph_key(b)), 1) for _, a, b in graph_coproduct_terms(g)
    )


def complement_edge(g: IntersectionGraph, a: int, b: int) -> IntersectionGraph:
    if a == b:
        raise ValueError("complement_edge needs two distinct vertices")
    arcs = list(g.arcs)
    arcs[a] ^= 1 << b
    arcs[b] ^= 1 << a
    return IntersectionGraph(g.labels, tuple(arcs), g.names)


def _other_color(label: tuple[int, int], color: int) -> int:
    if label[0] == color:
        return label[1]
    if label[1] == color:
        return label[0]
    raise ValueError(f"colour {color + 1} does not occur in label {{{label[0] + 1},{label[1] + 1}}}")


def tilde_move(g: IntersectionGraph, a: int, b: int, color: int) -> IntersectionGraph:
    """Relabel ``a`` by the non-shared colours and add ``b``'s edges onto ``a``."""
    if a == b:
        raise ValueError("tilde_move needs two distinct vertices")
    j = _other_color(g.labels[a], color)
    l = _other_color(g.labels[b], color)
    labels = list(g.labels)
    labels[a] = (min(j, l), max(j, l))
    arcs = list(g.arcs)
    others = ~((1 << a) | (1 << b))
    arcs[a] ^= arcs[b] & others
    bit_a, bit_b = 1 << a, 1 << b
    for c in range(g.order):
        if c != a and c != b and arcs[c] & bit_b:
            arcs[c] ^= bit_a
    if color != l:
        arcs[a] ^= bit_b
        arcs[b] ^= bit_a
    return IntersectionGraph(tuple(labels), tuple(arcs), g.names)


def shared_colors(g: IntersectionGraph, a: int, b: int) -> list[int]:
    return sorted(set(g.labels[a]) & set(g.labels[b]))


def four_term_graph_vector(g: IntersectionGraph, a: int, b: int, color: int) -> FormalSum:
    tg = tilde_move(g, a, b, color)
    return FormalSum(
        [
            (graph_key(g), 1),
            (graph_key(complement_edge(g, a, b)), -1),
            (graph_key(tg), -1),
            (graph_key(complement_edge(tg, a, b)), 1),
        ]
    )


def four_term_graphs(g: IntersectionGraph, a: int, b: int, color: int):
    """The four graphs of the relation with their signs, unkeyed."""
    tg = tilde_move(g, a, b, color)
    return [(g, 1), (complement_edge(g, a, b), -1), (tg, -1), (complement_edge(tg, a, b), 1)]


def label_parity_ok(g: IntersectionGraph) -> bool:
    for v in range(g.order):
        for w in range(v + 1, g.order):
            f, b = g.edge_state(v, w)
            if (f ^ b) != color_matches(g.labels[v], g.labels[w]) & 1:
                return False
    return True


def is_semisymmetric(g: IntersectionGraph) -> bool:
    for v, (x, y) in enumerate(g.labels):
        if x != y:
            continue
        for w in range(g.order):
            if w != v and (g.arcs[v] >> w & 1) != (g.arcs[w] >> v & 1):
                return False
    return True


# -- text formats -----------------------------------------------------------


def _fmt_label(lab: tuple[int, int]) -> str:
    return f"{{{lab[0] + 1},{lab[1] + 1}}}"


def graph_text(g: IntersectionGraph) -> str:
    lines = [f"vertex {g.vertex_name(v)} {_fmt_label(lab)}" for v, lab in enumerate(g.labels)]
    for v in range(g.order):
        for w in range(v + 1, g.order):
            kind = g.edge_kind(v, w)
            if kind != NONE:
                lines.append(f"edge {g.vertex_name(v)} {g.vertex_name(w)} {kind}")
    return "\n".join(lines)


_VERTEX = re.compile(r"vertex\s+(\S+)\s+\{\s*(\d+)\s*,\s*(\d+)\s*\}\Z")
_EDGE = re.compile(r"edge\s+(\S+)\s+(\S+)\s+(fwd|back|both)\Z")


def parse_graph(text: str) -> IntersectionGraph:
    names: list[str] = []
    labels = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line == EMPTY_KEY:
            continue
        m = _VERTEX.match(line)
        if m:
            a, b = int(m.group(2)) - 1, int(m.group(3)) - 1
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: colours start at 1")
            names.append(m.group(1))
            labels.append((min(a, b), max(a, b)))
            continue
        m = _EDGE.match(line)
        if m:
            edges.append((lineno, m.group(1), m.group(2), m.group(3)))
            continue
        raise ValueError(f"line {lineno}: cannot parse {line!r}")
    index = {nm: i for i, nm in enumerate(names)}
    if len(index) != len(names):
        raise ValueError("duplicate vertex name")
    arcs = [0] * len(names)
    for lineno, u, v, kind in edges:
        if u not in index or v not in index or u == v:
            raise ValueError(f"line {lineno}: bad edge endpoints {u} {v}")
        i, j = index[u], index[v]
        if kind in (FWD, BOTH):
            arcs[i] ^= 1 << j
        if kind in (BACK, BOTH):
            arcs[j] ^= 1 << i
    return IntersectionGraph(tuple(labels), tuple(arcs), tuple(names))


def to_dot(g: IntersectionGraph) -> str:
    lines = ["digraph G {"]
    for v, lab in enumerate(g.labels):
        lines.append(f'  {g.vertex_name(v)} [label="{g.vertex_name(v)} {_fmt_label(lab)}"];')
    for v in range(g.order):
        for w in range(v + 1, g.order):
            kind = g.edge_kind(v, w)
            a, b = g.vertex_name(v), g.vertex_name(w)
            if kind == FWD:
                lines.append(f"  {a} -> {b};")
            elif kind == BACK:
                lines.append(f"  {b} -> {a};")
            elif kind == BOTH:
                lines.append(f"  {a} -> {b} [dir=none];")
    lines.append("}")
    return "\n".join(lines)


# -- canonical keys ---------------------------------------------------------

EMPTY_KEY = "(empty graph)"


def _vertex_invariant(g: IntersectionGraph, v: int):
    out = bin(g.arcs[v]).count("1")
    inc = sum(g.arcs[w] >> v & 1 for w in range(g.order))
    both = sum(g.arcs[v] >> w & g.arcs[w] >> v & 1 for w in range(g.order))
    return (g.labels[v], out, inc, both)


def canonical_order(g: IntersectionGraph) -> list[int]:
    """Vertex order minimising the edge encoding among invariant-sorted orders."""
    inv = [_vertex_invariant(g, v) for v in range(g.order)]
    classes: dict = {}
    for v in range(g.order):
        classes.setdefault(inv[v], []).append(v)
    blocks = [classes[key] for key in sorted(classes)]
    best = None
    best_order = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(
            sum(1 << pos[w] for w in range(g.order) if g.arcs[v] >> w & 1) for v in order
        )
        if best is None or code < best:
            best, best_order = code, order
    return best_order if best_order is not None else []


def canonical_graph(g: IntersectionGraph) -> IntersectionGraph:
    return _unnamed(g.induced(canonical_order(g)))


def _unnamed(g: IntersectionGraph) -> IntersectionGraph:
    return IntersectionGraph(g.labels, g.arcs)


def graph_key(g: IntersectionGraph) -> str:
    """Isomorphism-invariant text key (labels and edge states preserved)."""
    if g.order == 0:
        return EMPTY_KEY
    return graph_text(canonical_graph(g))


def aligned_key(g: IntersectionGraph) -> str:
    """Key for exact equality on the given vertex order."""
    return graph_text(_unnamed(g)) if g.order else EMPTY_KEY
