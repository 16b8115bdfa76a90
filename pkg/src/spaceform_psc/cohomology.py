"""Central extensions by Z/2 through normalized 2-cocycles.

A normalized cocycle ``f`` on ``G`` is stored as a 0/1 matrix and, for the
linear algebra, packed into an int over the variables ``f(g, h)`` with
``g, h != e``.  Variables are laid out so that integer order on the packed
form is lexicographic order on the row-major matrix; the least element of a
coset is therefore its lexicographically least matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path

import numpy as np

from .errors import BoundError, PreconditionError
from .gf2 import Echelon
from .groups import (
    FiniteGroup,
    Subgroup,
    generating_set,
    odd_order_subgroup,
    subgroup_closure,
)

DEFAULT_COHOMOLOGY_BOUND = 32


@dataclass(frozen=True, eq=False)
class Cocycle2:
    """A normalized Z/2-valued 2-cocycle ``f(g, h)``."""

    group: FiniteGroup
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=np.uint8) & 1
        if vals.shape != (self.group.order, self.group.order):
            raise PreconditionError(f"cocycle must be {self.group.order}x{self.group.order}, got {vals.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocycle2):
            return NotImplemented
        return self.group == other.group and bool(np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.group, self.values.tobytes()))

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(self.group, self.values ^ other.values)

    def is_normalized(self) -> bool:
        return not self.values[0].any() and not self.values[:, 0].any()

    def defect(self) -> tuple[int, int, int] | None:
        """First triple violating the cocycle identity, or ``None``."""
        t, f = self.group.table, self.values.astype(np.int64)
        n = self.group.order
        lhs = f[:, :, None] + f[t] + f[None, :, :] + f[np.arange(n)[:, None, None], t[None, :, :]]
        bad = np.argwhere(lhs % 2 != 0)
        if len(bad):
            return tuple(int(v) for v in bad[0])
        return None

    def is_cocycle(self) -> bool:
        return self.is_normalized() and self.defect() is None

    @property
    def mask(self) -> int:
        return _pack(self.values)

    @classmethod
    def zero(cls, G: FiniteGroup) -> "Cocycle2":
        return cls(G, np.zeros((G.order, G.order), dtype=np.uint8))

    @classmethod
    def from_mask(cls, G: FiniteGroup, mask: int) -> "Cocycle2":
        return cls(G, _unpack(G.order, mask))


def _nvars(n: int) -> int:
    return (n - 1) * (n - 1)


def _bit(n: int, g: int, h: int) -> int:
    # (g, h) with g, h >= 1; earlier row-major positions get higher bits.
    return _nvars(n) - 1 - ((g - 1) * (n - 1) + (h - 1))


def _pack(values: np.ndarray) -> int:
    inner = np.asarray(values[1:, 1:], dtype=np.uint8).ravel()
    if not inner.size:
        return 0
    return int.from_bytes(np.packbits(inner).tobytes(), "big") >> (-inner.size % 8)


def _unpack(n: int, mask: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.uint8)
    size = _nvars(n)
    if size:
        nbytes = (size + 7) // 8
        raw = np.frombuffer((mask << (-size % 8)).to_bytes(nbytes, "big"), dtype=np.uint8)
        out[1:, 1:] = np.unpackbits(raw)[:size].reshape(n - 1, n - 1)
    return out


def coboundary(G: FiniteGroup, u: np.ndarray | list[int]) -> Cocycle2:
    """``(du)(g, h) = u(g) + u(h) + u(gh)`` for ``u`` with ``u(e) = 0``."""
    u = np.asarray(u, dtype=np.uint8) & 1
    if u.shape != (G.order,) or u[0]:
        raise PreconditionError("u must be a 0/1 vector on G with u(e) = 0")
    return Cocycle2(G, u[:, None] ^ u[None, :] ^ u[G.table])


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """A class in H^2(G; Z/2): its canonical representative plus the coboundaries."""

    representative: Cocycle2
    coboundary_basis: tuple[Cocycle2, ...] = field(repr=False)
    index: int = 0

    @property
    def group(self) -> FiniteGroup:
        return self.representative.group

    @property
    def is_zero(self) -> bool:
        return not self.representative.values.any()

    def contains(self, f: Cocycle2) -> bool:
        diff = f + self.representative
        ech = Echelon(_nvars(self.group.order))
        for b in self.coboundary_basis:
            ech.insert(b.mask)
        return ech.contains(diff.mask)


@dataclass(frozen=True, eq=False)
class CocycleSpace:
    """Cocycles, coboundaries and H^2 class representatives for one group."""

    group: FiniteGroup
    cocycle_basis: tuple[Cocycle2, ...]
    coboundary_basis: tuple[Cocycle2, ...]
    classes: tuple[CohomologyClass, ...]
    _coboundaries: Echelon = field(repr=False)

    @property
    def cocycle_dim(self) -> int:
        return len(self.cocycle_basis)

    @property
    def coboundary_dim(self) -> int:
        return len(self.coboundary_basis)

    @property
    def h2_dim(self) -> int:
        return self.cocycle_dim - self.coboundary_dim

    def is_coboundary(self, f: Cocycle2) -> bool:
        return self._coboundaries.contains(f.mask)

    def class_of(self, f: Cocycle2) -> CohomologyClass:
        rep = self._coboundaries.reduce(f.mask)
        for c in self.classes:
            if c.representative.mask == rep:
                return c
        raise PreconditionError("not a cocycle of this group")


def cocycle_space(G: FiniteGroup, bound: int = DEFAULT_COHOMOLOGY_BOUND) -> CocycleSpace:
    """Solve the cocycle identity over GF(2) and split off the coboundaries.

    Classes come back sorted by canonical representative, so class 0 is
    always the split class.
    """
    if G.order > bound:
        raise BoundError(f"H^2 computation is limited to order {bound}, got {G.order}")
    return _cocycle_space(G)


@lru_cache(maxsize=256)
def _cocycle_space(G: FiniteGroup) -> CocycleSpace:
    n = G.order
    nv = _nvars(n)
    t = G.table.tolist()
    bit = [[0] * n] + [[0] + [1 << _bit(n, g, h) for h in range(1, n)] for g in range(1, n)]

    equations = Echelon(nv)
    for g in range(1, n):
        bg = bit[g]
        tg = t[g]
        for h in range(1, n):
            gh = tg[h]
            bgh = bit[gh]
            bh = bit[h]
            fgh = bg[h]
            th = t[h]
            for k in range(1, n):
                row = fgh ^ bgh[k] ^ bh[k] ^ bg[th[k]]
                if row:
                    equations.insert(row)
    cocycle_masks = equations.kernel_basis()

    coboundaries = Echelon(nv)
    for a in range(1, n):
        u = np.zeros(n, dtype=np.uint8)
        u[a] = 1
        coboundaries.insert(coboundary(G, u).mask)
    cob_reduced = coboundaries.reduced()

    # A complement of the coboundaries inside the cocycle space.
    complement = Echelon(nv)
    for b in cob_reduced.pivots.values():
        complement.insert(b)
    extra = [c for c in cocycle_masks if complement.insert(c)]

    reps = set()
    for bits in range(1 << len(extra)):
        v = 0
        for i, c in enumerate(extra):
            if (bits >> i) & 1:
                v ^= c
        reps.add(cob_reduced.reduce(v))

    cocycles = tuple(Cocycle2.from_mask(G, c) for c in cocycle_masks)
    cob_basis = tuple(Cocycle2.from_mask(G, b) for b in cob_reduced.basis())
    classes = tuple(
        CohomologyClass(Cocycle2.from_mask(G, r), cob_basis, i) for i, r in enumerate(sorted(reps))
    )
    return CocycleSpace(G, cocycles, cob_basis, classes, cob_reduced)


# ---------------------------------------------------------------------------
# extension groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExtensionGroup:
    """Central extension ``1 -> Z/2 -> total -> base -> 1`` built from a cocycle.

    Element ``(eps, g)`` has index ``2*g + eps``; ``z = (1, e)`` is index 1 and
    the projection sends index ``i`` to ``i // 2``.
    """

    base: FiniteGroup
    cocycle: Cocycle2 = field(repr=False)
    total: FiniteGroup = field(repr=False)

    z = 1

    @staticmethod
    def project(i: int) -> int:
        return i // 2

    @staticmethod
    def lift(g: int, eps: int = 0) -> int:
        return 2 * g + eps

    def fiber(self, g: int) -> tuple[int, int]:
        return 2 * g, 2 * g + 1

    def negate(self, i: int) -> int:
        """``z * i``, written ``-i`` in the geometric setting."""
        return i ^ 1

    @cached_property
    def projection(self) -> np.ndarray:
        return np.arange(self.total.order) // 2


def build_extension(G: FiniteGroup, f: Cocycle2 | CohomologyClass) -> ExtensionGroup:
    if isinstance(f, CohomologyClass):
        f = f.representative
    if f.group != G:
        raise PreconditionError("cocycle lives on a different group")
    if not f.is_normalized():
        raise PreconditionError("cocycle is not normalized")
    bad = f.defect()
    if bad is not None:
        raise PreconditionError(f"cocycle identity fails at {bad}")
    n = G.order
    t = G.table
    vals = f.values.astype(np.int64)
    eps = np.arange(2)
    # total[2g+a, 2h+b] = 2*gh + (a + b + f(g,h)) mod 2
    table = (
        2 * t[:, None, :, None]
        + (eps[None, :, None, None] + eps[None, None, None, :] + vals[:, None, :, None]) % 2
    ).reshape(2 * n, 2 * n)
    labels = [f"({e},{G.label(g)})" for g in range(n) for e in (0, 1)]
    total = FiniteGroup(table, labels, name=f"ext({G.name})")
    return ExtensionGroup(G, f, total)


def complement_exists(E: ExtensionGroup) -> bool:
    """Search for a subgroup of the total mapping isomorphically onto the base.

    Such a complement is determined by the lifts chosen for a generating set
    of the base, so only ``2^(#generators)`` candidates are tried.
    """
    G, T = E.base, E.total
    gens = generating_set(G)
    for choice in range(1 << len(gens)):
        lifts = [E.lift(g, (choice >> i) & 1) for i, g in enumerate(gens)]
        H = subgroup_closure(T, lifts)
        if H.order == G.order and E.z not in H:
            return True
    return False


def is_split(G: FiniteGroup, f: Cocycle2, bound: int = DEFAULT_COHOMOLOGY_BOUND) -> bool:
    """Whether ``f`` is a coboundary, cross-checked by a complement search."""
    if f.group != G:
        raise PreconditionError("cocycle lives on a different group")
    by_algebra = cocycle_space(G, bound).is_coboundary(f)
    by_search = complement_exists(build_extension(G, f))
    if by_algebra != by_search:
        raise RuntimeError(f"splitting tests disagree on {G.name}: algebra={by_algebra}, search={by_search}")
    return by_algebra


def restrict_cocycle(f: Cocycle2, H: Subgroup) -> Cocycle2:
    """Restriction to ``H``, re-indexed on ``H.as_group()``."""
    if H.parent != f.group:
        raise PreconditionError("H is not a subgroup of the cocycle's group")
    idx = np.array(H.elements)
    return Cocycle2(H.as_group(), f.values[np.ix_(idx, idx)])


def preimage_order_profile(E: ExtensionGroup) -> dict[int, tuple[int, int]]:
    """For each base element, the sorted orders of its two lifts."""
    orders = E.total.element_orders
    return {g: tuple(sorted((int(orders[2 * g]), int(orders[2 * g + 1])))) for g in E.base.elements()}


def lift_odd_normal(E: ExtensionGroup) -> Subgroup:
    """The normal subgroup of odd order in the total lying over the base's odd core.

    It consists of the odd-order elements of the preimage of the core, and
    the projection restricts to an isomorphism onto that core.
    """
    N = odd_order_subgroup(E.base)
    if N is None:
        raise PreconditionError(f"{E.base.name} has no normal subgroup of maximal odd order")
    orders = E.total.element_orders
    lifted = [i for g in N.elements for i in E.fiber(g) if orders[i] % 2 == 1]
    L = Subgroup(E.total, tuple(lifted))
    if sorted(E.project(i) for i in L.elements) != list(N.elements):
        raise RuntimeError("odd lift does not project bijectively onto the odd core")
    if not L.is_normal():
        raise RuntimeError("odd lift is not normal in the extension")
    return L


def format_cocycle(f: Cocycle2) -> str:
    lines = [str(f.group.order)]
    lines += [" ".join(str(int(v)) for v in row) for row in f.values]
    return "\n".join(lines) + "\n"


def parse_cocycle(text: str, G: FiniteGroup) -> Cocycle2:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = int(lines[0])
    if n != G.order or len(lines) != n + 1:
        raise PreconditionError(f"cocycle file does not match a group of order {G.order}")
    return Cocycle2(G, [[int(v) for v in ln.split()] for ln in lines[1:]])


def save_cocycle(f: Cocycle2, path: str | Path) -> None:
    Path(path).write_text(format_cocycle(f))


def load_cocycle(path: str | Path, G: FiniteGroup) -> Cocycle2:
    return parse_cocycle(Path(path).read_text(), G)
