"""Square bit matrices over GF(2) and the adjacency form of intersection graphs.

Row ``i`` is an int whose bit ``j`` holds entry ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import _kernels
from .graph import IntersectionGraph, tilde_move


@dataclass(frozen=True)
class Gf2Matrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError("row wider than the matrix order")

    @classmethod
    def from_lists(cls, entries) -> Gf2Matrix:
        entries = [list(r) for r in entries]
        n = len(entries)
        rows = []
        for r in entries:
            if len(r) != n:
                raise ValueError("matrix is not square")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(r)))
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, tuple(1 << i for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(
            self.n,
            tuple(sum((r >> j & 1) << i for i, r in enumerate(self.rows)) for j in range(self.n)),
        )

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.n != other.n:
            raise ValueError("order mismatch")
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return Gf2Matrix(self.n, tuple(out))

    def permuted(self, order) -> Gf2Matrix:
        """Simultaneous row/column reordering: new index ``i`` is old ``order[i]``."""
        return Gf2Matrix(
            self.n,
            tuple(
                sum((self.rows[u] >> w & 1) << j for j, w in enumerate(order)) for u in order
            ),
        )

    def text(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_lists())

    def __str__(self) -> str:
        return self.text()


def parse_matrix(text: str) -> Gf2Matrix:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    for ln in rows:
        if set(ln) - {"0", "1"}:
            raise ValueError(f"matrix row {ln!r} is not a 0/1 string")
    return Gf2Matrix.from_lists([[int(ch) for ch in ln] for ln in rows])


def adjacency_matrix(g: IntersectionGraph) -> Gf2Matrix:
    rows = []
    for v, (a, b) in enumerate(g.labels):
        rows.append(g.arcs[v] | ((a != b) << v))
    return Gf2Matrix(g.order, tuple(rows))


def gf2_rank(m: Gf2Matrix) -> int:
    return _kernels.gf2_rank(m.rows)


def gf2_det(m: Gf2Matrix) -> int:
    return int(gf2_rank(m) == m.n)


def is_semisymmetric_matrix(m: Gf2Matrix) -> bool:
    t = m.transpose()
    return all(m[i, i] or m.rows[i] == t.rows[i] for i in range(m.n))


def row_addition(n: int, target: int, source: int) -> Gf2Matrix:
    """Identity plus a 1 at (target, source): adds row ``source`` to row ``target``."""
    rows = [1 << i for i in range(n)]
    rows[target] |= 1 << source
    return Gf2Matrix(n, tuple(rows))


def witness_order(n: int, a: int, b: int) -> list[int]:
    return [a, b] + [v for v in range(n) if v != a and v != b]


def congruent_by_witness(before: Gf2Matrix, after: Gf2Matrix, a: int, b: int) -> bool:
    """Whether ``after = P before P^T`` once ``a, b`` are moved to the first two slots."""
    order = witness_order(before.n, a, b)
    m = before.permuted(order)
    p = row_addition(before.n, 0, 1)
    return p @ m @ p.transpose() == after.permuted(order)


def congruence_witness_check(g: IntersectionGraph, a: int, b: int, color: int) -> bool:
    return congruent_by_witness(
        adjacency_matrix(g), adjacency_matrix(tilde_move(g, a, b, color)), a, b
    )


def permutation_classes(m: Gf2Matrix):
    """All matrices obtained from ``m`` by simultaneous row/column reordering."""
    return {m.permuted(order) for order in permutations(range(m.n))}


def permutation_canonical(m: Gf2Matrix) -> tuple[int, ...]:
    """Smallest row tuple over all simultaneous reorderings (brute force)."""
    return min(m.permuted(order).rows for order in permutations(range(m.n)))
