"""GF(2) linear algebra on rows packed into Python ints.

Column ``j`` of a row is bit ``j``.  Echelon forms pivot on the *highest* set
bit, so reducing a vector against a fully reduced basis yields the smallest
integer in its coset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class GF2Matrix:
    """A bit-packed matrix over GF(2)."""

    cols: int
    rows: list[int] = field(default_factory=list)

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]]) -> "GF2Matrix":
        rows, cols = [], 0
        for r in dense:
            bits = [int(v) & 1 for v in r]
            cols = max(cols, len(bits))
            rows.append(sum(1 << j for j, b in enumerate(bits) if b))
        return cls(cols, rows)

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    def echelon(self) -> "Echelon":
        ech = Echelon(self.cols)
        for r in self.rows:
            ech.insert(r)
        return ech

    def rank(self) -> int:
        return self.echelon().rank

    def kernel_basis(self) -> list[int]:
        """Basis of ``{v : M v = 0}``."""
        return self.echelon().kernel_basis()

    def mul_vec(self, v: int) -> int:
        """``M v`` as a bit-packed column (bit ``i`` = entry of row ``i``)."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out


class Echelon:
    """Incrementally maintained row-echelon basis of a GF(2) row space."""

    def __init__(self, cols: int) -> None:
        self.cols = cols
        self.pivots: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: int) -> int:
        """Clear every pivot bit of ``v``; the result is the least element of ``v + span``."""
        pivots = self.pivots
        out = 0
        while v:
            p = v.bit_length() - 1
            row = pivots.get(p)
            if row is None:
                out |= 1 << p
                v ^= 1 << p
            else:
                v ^= row
        return out

    def insert(self, v: int) -> bool:
        """Add ``v`` to the span; return whether the rank grew."""
        pivots = self.pivots
        while v:
            p = v.bit_length() - 1
            row = pivots.get(p)
            if row is None:
                pivots[p] = v
                return True
            v ^= row
        return False

    def contains(self, v: int) -> bool:
        pivots = self.pivots
        while v:
            row = pivots.get(v.bit_length() - 1)
            if row is None:
                return False
            v ^= row
        return True

    def basis(self) -> list[int]:
        return [self.pivots[p] for p in sorted(self.pivots, reverse=True)]

    def reduced(self) -> "Echelon":
        """Equivalent echelon form in which each pivot bit occurs in its own row only."""
        out = Echelon(self.cols)
        done: list[int] = []
        for p in sorted(self.pivots):
            row = self.pivots[p]
            for q in reversed(done):
                if (row >> q) & 1:
                    row ^= out.pivots[q]
            out.pivots[p] = row
            done.append(p)
        return out

    def kernel_basis(self) -> list[int]:
        """Basis of the solutions ``v`` with ``r . v = 0`` for every stored row ``r``."""
        red = self.reduced()
        basis = []
        for f in range(self.cols):
            if f in red.pivots:
                continue
            v = 1 << f
            for p, row in red.pivots.items():
                if (row >> f) & 1:
                    v |= 1 << p
            basis.append(v)
        return basis


def rank(rows: Iterable[int], cols: int) -> int:
    return GF2Matrix(cols, list(rows)).rank()


def in_span(v: int, rows: Iterable[int], cols: int) -> bool:
    return GF2Matrix(cols, list(rows)).echelon().contains(v)
