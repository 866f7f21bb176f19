"""Chord diagrams on string links.

A diagram has ``k`` ordered strands.  Each strand carries a bottom-to-top
sequence of chord endpoints; a chord is identified by an integer id
``0..n-1`` and occurs exactly twice over all strands.  Strand indices and
positions are 0-based internally; the SLD text format numbers strands from 1.

SLD format::

    strands 3
    # comment
    strand 1: a b
    strand 2: a
    strand 3: b
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from .formal import FormalSum, tensor_key

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        where = f"line {line}: " if line is not None else ""
        if token is not None:
            message = f"{message} (token {token!r})"
        super().__init__(where + message)
        self.line = line
        self.token = token


class Endpoint(NamedTuple):
    strand: int
    position: int


@dataclass(frozen=True)
class ChordDiagram:
    k: int
    strands: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a diagram needs at least one strand")
        if len(self.strands) != self.k:
            raise ValueError(f"expected {self.k} strands, got {len(self.strands)}")
        counts: dict[int, int] = {}
        for s in self.strands:
            for c in s:
                counts[c] = counts.get(c, 0) + 1
        n = len(counts)
        if set(counts) != set(range(n)):
            raise ValueError(f"chord ids must be 0..{n - 1}, got {sorted(counts)}")
        bad = [c for c, m in counts.items() if m != 2]
        if bad:
            raise ValueError(f"chords {bad} do not have exactly two endpoints")
        if self.names is not None and len(self.names) != n:
            raise ValueError("one name per chord required")

    @classmethod
    def empty(cls, k: int) -> ChordDiagram:
        return cls(k, ((),) * k)

    @classmethod
    def from_lists(cls, strands) -> ChordDiagram:
        """Build from per-strand lists of hashable chord names.

        Chord ids follow first appearance scanning strands bottom to top.
        """
        ids: dict = {}
        out = []
        for s in strands:
            row = []
            for name in s:
                if name not in ids:
                    ids[name] = len(ids)
                row.append(ids[name])
            out.append(tuple(row))
        names = tuple(str(x) for x in ids)
        return cls(len(out), tuple(out), names)

    @cached_property
    def n(self) -> int:
        return sum(len(s) for s in self.strands) // 2

    @cached_property
    def endpoints(self) -> tuple[tuple[Endpoint, Endpoint], ...]:
        """Per chord id, its two endpoints in (strand, position) order."""
        found: list[list[Endpoint]] = [[] for _ in range(self.n)]
        for si, s in enumerate(self.strands):
            for pos, c in enumerate(s):
                found[c].append(Endpoint(si, pos))
        return tuple((e[0], e[1]) for e in found)

    def label(self, chord: int) -> tuple[int, int]:
        """Sorted pair of strand indices carrying the chord's endpoints."""
        e1, e2 = self.endpoints[chord]
        return (e1.strand, e2.strand)

    def chord_at(self, ep: Endpoint) -> int:
        return self.strands[ep.strand][ep.position]

    def other_end(self, ep: Endpoint) -> Endpoint:
        e1, e2 = self.endpoints[self.chord_at(ep)]
        return e2 if e1 == ep else e1

    def chord_name(self, chord: int) -> str:
        return self.names[chord] if self.names is not None else f"c{chord + 1}"

    def text(self) -> str:
        """SLD text keeping this diagram's own chord names."""
        lines = [f"strands {self.k}"]
        for i, s in enumerate(self.strands):
            body = " ".join(self.chord_name(c) for c in s)
            lines.append(f"strand {i + 1}:" + (f" {body}" if body else ""))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.text()


def parse_diagram(text: str) -> ChordDiagram:
    k = None
    rows: dict[int, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if k is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "strands":
                raise ParseError("expected 'strands <k>'", lineno, line)
            try:
                k = int(parts[1])
            except ValueError:
                raise ParseError("strand count is not an integer", lineno, parts[1]) from None
            if k < 1:
                raise ParseError("strand count must be positive", lineno, parts[1])
            continue
        head, sep, body = line.partition(":")
        hp = head.split()
        if not sep or len(hp) != 2 or hp[0] != "strand":
            raise ParseError("expected 'strand <i>: names...'", lineno, head)
        try:
            idx = int(hp[1])
        except ValueError:
            raise ParseError("strand index is not an integer", lineno, hp[1]) from None
        if not 1 <= idx <= k:
            raise ParseError(f"strand index out of range 1..{k}", lineno, hp[1])
        if idx in rows:
            raise ParseError("duplicate strand line", lineno, hp[1])
        tokens = body.split()
        for tok in tokens:
            if not _NAME.match(tok):
                raise ParseError("malformed chord name", lineno, tok)
        rows[idx] = tokens
    if k is None:
        raise ParseError("missing 'strands <k>' header")
    counts: dict[str, int] = {}
    for idx in sorted(rows):
        for tok in rows[idx]:
            counts[tok] = counts.get(tok, 0) + 1
    for name, m in counts.items():
        if m != 2:
            line = _find_line(text, name)
            raise ParseError(f"chord {name} appears {m} time(s), expected 2", line, name)
    return ChordDiagram.from_lists([rows.get(i, []) for i in range(1, k + 1)])


def _find_line(text: str, name: str) -> int | None:
    for lineno, raw in enumerate(text.splitlines(), 1):
        head, sep, body = raw.partition(":")
        if sep and name in body.split():
            return lineno
    return None


def relabel_canonical(d: ChordDiagram) -> ChordDiagram:
    """Renumber chord ids by first appearance; drops names."""
    ids: dict[int, int] = {}
    out = []
    for s in d.strands:
        row = []
        for c in s:
            if c not in ids:
                ids[c] = len(ids)
            row.append(ids[c])
        out.append(tuple(row))
    return ChordDiagram(d.k, tuple(out))


def canonical_text(d: ChordDiagram) -> str:
    return relabel_canonical(d).text()


def same_diagram(a: ChordDiagram, b: ChordDiagram) -> bool:
    """Equality up to chord renaming."""
    return a.k == b.k and relabel_canonical(a).strands == relabel_canonical(b).strands


@dataclass(frozen=True)
class StrandComponentPartition:
    blocks: tuple[tuple[int, ...], ...]
    chord_block: tuple[int, ...]

    def block_of_strand(self, strand: int) -> int:
        for bi, b in enumerate(self.blocks):
            if strand in b:
                return bi
        raise KeyError(strand)


def connected_components(d: ChordDiagram) -> StrandComponentPartition:
    parent = list(range(d.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e1, e2 in d.endpoints:
        a, b = find(e1.strand), find(e2.strand)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for s in range(d.k):
        groups.setdefault(find(s), []).append(s)
    blocks = tuple(tuple(g) for _, g in sorted(groups.items()))
    root_to_block = {find(b[0]): i for i, b in enumerate(blocks)}
    chord_block = tuple(root_to_block[find(e1.strand)] for e1, _ in d.endpoints)
    return StrandComponentPartition(blocks, chord_block)


def is_connected(d: ChordDiagram) -> bool:
    return len(connected_components(d).blocks) == 1


def stack_product(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    """Place ``d2`` on top of ``d1``; ``d1``'s chords keep the low ids."""
    if d1.k != d2.k:
        raise ValueError(f"strand counts differ: {d1.k} vs {d2.k}")
    shift = d1.n
    strands = tuple(a + tuple(c + shift for c in b) for a, b in zip(d1.strands, d2.strands))
    names = None
    if d1.names is not None and d2.names is not None and not set(d1.names) & set(d2.names):
        names = d1.names + d2.names
    return ChordDiagram(d1.k, strands, names)


def keep_chords(d: ChordDiagram, keep) -> ChordDiagram:
    """Sub-diagram on the chords in ``keep``, ids renumbered in increasing order."""
    kept = sorted(set(keep))
    new_id = {c: i for i, c in enumerate(kept)}
    strands = tuple(tuple(new_id[c] for c in s if c in new_id) for s in d.strands)
    names = tuple(d.names[c] for c in kept) if d.names is not None else None
    return ChordDiagram(d.k, strands, names)


def chord_subsets(n: int):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def coproduct_terms(d: ChordDiagram):
    """Yield ``(J, D with J removed, D restricted to J)`` for every chord subset J."""
    everything = set(range(d.n))
    for J in chord_subsets(d.n):
        yield J, keep_chords(d, everything - set(J)), keep_chords(d, J)


def diagram_coproduct(d: ChordDiagram) -> FormalSum:
    return FormalSum(
        (tensor_key(canonical_text(a), canonical_text(b)), 1) for _, a, b in coproduct_terms(d)
    )


def adjacent_transposition(d: ChordDiagram, p: Endpoint, q: Endpoint) -> ChordDiagram:
    if p.strand != q.strand or abs(p.position - q.position) != 1:
        raise ValueError(f"endpoints {p} and {q} are not adjacent on one strand")
    row = list(d.strands[p.strand])
    if row[p.position] == row[q.position]:
        raise ValueError("endpoints belong to the same chord")
    row[p.position], row[q.position] = row[q.position], row[p.position]
    strands = d.strands[: p.strand] + (tuple(row),) + d.strands[p.strand + 1 :]
    return ChordDiagram(d.k, strands, d.names)
