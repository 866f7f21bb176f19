"""Conway and Homfly weight systems by band surgery on the closed-up diagram.

The closure is a permutation on endpoints: each endpoint points to the next
one up its strand, the top endpoint back to the bottom one.  Orientation
preserving surgery on a chord exchanges the successors of its two endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import count_cycles
from .diagram import ChordDiagram


@dataclass(frozen=True)
class ClosedCurveState:
    successor: tuple[int, ...]
    free_strands: int
    chord_ends: tuple[tuple[int, int], ...]
    surgered: frozenset[int] = frozenset()

    def cycles(self) -> int:
        return count_cycles(self.successor)

    def components(self) -> int:
        return self.cycles() + self.free_strands


def closure_state(d: ChordDiagram) -> ClosedCurveState:
    succ: list[int] = []
    ends: list[list[int]] = [[] for _ in range(d.n)]
    free = 0
    for s in d.strands:
        base = len(succ)
        m = len(s)
        if m == 0:
            free += 1
        for pos, c in enumerate(s):
            succ.append(base + (pos + 1) % m)
            ends[c].append(base + pos)
    return ClosedCurveState(tuple(succ), free, tuple((e[0], e[1]) for e in ends))


def surger_chord(state: ClosedCurveState, chord: int) -> ClosedCurveState:
    if chord in state.surgered:
        raise ValueError(f"chord {chord} already surgered")
    p, q = state.chord_ends[chord]
    succ = list(state.successor)
    succ[p], succ[q] = succ[q], succ[p]
    return ClosedCurveState(
        tuple(succ), state.free_strands, state.chord_ends, state.surgered | {chord}
    )


def components_after_surgery(d: ChordDiagram, order=None) -> int:
    """Closure components once every chord is surgered (in ``order`` if given)."""
    state = closure_state(d)
    succ = list(state.successor)
    for c in order if order is not None else range(d.n):
        p, q = state.chord_ends[c]
        succ[p], succ[q] = succ[q], succ[p]
    return count_cycles(succ) + state.free_strands


def conway_weight(d: ChordDiagram) -> int:
    return int(components_after_surgery(d) == 1)


@dataclass(frozen=True)
class HomflyMonomial:
    a_exp: int
    b_exp: int

    def __str__(self) -> str:
        parts = []
        if self.a_exp:
            parts.append(f"a^{self.a_exp}")
        if self.b_exp:
            parts.append(f"b^{self.b_exp}")
        return " ".join(parts) or "1"


def homfly_weight(d: ChordDiagram) -> HomflyMonomial:
    return HomflyMonomial(d.n, components_after_surgery(d) - 1)
