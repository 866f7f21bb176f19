"""Exhaustive generation of chord diagrams with fixed strand and chord counts."""

from __future__ import annotations

from math import comb, prod

from .diagram import ChordDiagram, is_connected


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` ordered nonnegative parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def perfect_matchings(m: int):
    """Matchings of slots ``0..m-1``, pairing the smallest unmatched slot first.

    Each matching is a tuple giving the pair index of every slot; pair indices
    therefore follow first appearance.
    """
    slots = [-1] * m

    def rec(pair):
        try:
            first = slots.index(-1)
        except ValueError:
            yield tuple(slots)
            return
        slots[first] = pair
        for other in range(first + 1, m):
            if slots[other] == -1:
                slots[other] = pair
                yield from rec(pair + 1)
                slots[other] = -1
        slots[first] = -1

    if m % 2:
        return
    yield from rec(0)


def enumerate_diagrams(k: int, n: int, connected_only: bool = False):
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    matchings = list(perfect_matchings(2 * n))
    for comp in compositions(2 * n, k):
        cuts = [0]
        for c in comp:
            cuts.append(cuts[-1] + c)
        for mt in matchings:
            d = ChordDiagram(k, tuple(tuple(mt[cuts[i] : cuts[i + 1]]) for i in range(k)))
            if connected_only and not is_connected(d):
                continue
            yield d


def double_factorial_odd(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings on 2n points."""
    return prod(range(1, 2 * n, 2))


def diagram_count(k: int, n: int) -> int:
    return comb(2 * n + k - 1, k - 1) * double_factorial_odd(n)
