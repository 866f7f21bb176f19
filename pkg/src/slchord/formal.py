"""Integer linear combinations of canonically keyed terms.

Keys are opaque printable strings produced by the module that owns the term
(diagram text, graph text).  Tensor terms join two keys with ``TENSOR``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from types import MappingProxyType

TENSOR = " (x) "


class FormalSum:
    """Immutable mapping ``key -> nonzero int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = {}
        for key, coef in items:
            acc[key] = acc.get(key, 0) + int(coef)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def single(cls, key: str, coef: int = 1) -> FormalSum:
        return cls({key: coef})

    @property
    def terms(self) -> Mapping[str, int]:
        return MappingProxyType(self._terms)

    def __getitem__(self, key: str) -> int:
        return self._terms.get(key, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def __add__(self, other: FormalSum) -> FormalSum:
        return sum_add(self, other)

    def __neg__(self) -> FormalSum:
        return FormalSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: FormalSum) -> FormalSum:
        return sum_add(self, -other)

    def scale(self, factor: int) -> FormalSum:
        return FormalSum({k: factor * c for k, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return sum_equal(self, other)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def render(self) -> str:
        """One ``±c·key`` line per term, sorted by key.

        Newlines inside a key are shown as `` / `` so each term stays on one line.
        """
        lines = []
        for key in sorted(self._terms):
            coef = self._terms[key]
            sign = "+" if coef > 0 else "-"
            lines.append(f"{sign}{abs(coef)}·{key.replace(chr(10), ' / ')}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"FormalSum({dict(sorted(self._terms.items()))!r})"


def sum_add(a: FormalSum, b: FormalSum) -> FormalSum:
    return FormalSum(list(a.items()) + list(b.items()))


def sum_tensor(a: FormalSum, b: FormalSum) -> FormalSum:
    return FormalSum(
        (tensor_key(ka, kb), ca * cb) for ka, ca in a.items() for kb, cb in b.items()
    )


def sum_equal(a: FormalSum, b: FormalSum) -> bool:
    return a._terms == b._terms


def tensor_key(left: str, right: str) -> str:
    return f"{left}{TENSOR}{right}"


def swap_tensor(s: FormalSum) -> FormalSum:
    """Exchange the two factors of every tensor term."""
    out = []
    for key, coef in s.items():
        left, right = key.split(TENSOR)
        out.append((tensor_key(right, left), coef))
    return FormalSum(out)
