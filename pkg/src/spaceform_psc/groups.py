"""Finite groups as explicit Cayley tables.

Elements are the integers ``0 .. order-1`` with ``0`` the identity.  Every
group built here is checked against the group axioms on construction, so the
rest of the package can treat a :class:`FiniteGroup` as trustworthy.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundError, GroupSpecError, GroupValidationError, PreconditionError

DEFAULT_MAX_ORDER = 64


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[g, h]`` is the index of ``g*h``.  The table is validated (Latin
    square, identity at index 0, inverses, associativity) unless
    ``validate=False`` is passed by a caller that has already done so.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]] | np.ndarray,
        labels: Sequence[str] | None = None,
        name: str | None = None,
        validate: bool = True,
    ) -> None:
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise GroupValidationError("format", f"table must be a non-empty square array, got shape {arr.shape}")
        if validate:
            _validate_table(arr)
        arr.setflags(write=False)
        self.table = arr
        self.order = int(arr.shape[0])
        if labels is None:
            labels = ["e"] + [f"g{i}" for i in range(1, self.order)]
        if len(labels) != self.order:
            raise GroupValidationError("format", f"expected {self.order} labels, got {len(labels)}")
        self.labels = tuple(str(s) for s in labels)
        self.name = name or f"group of order {self.order}"
        inv = np.argmin(arr, axis=1)  # row g has its unique 0 at column g^-1
        inv.setflags(write=False)
        self.inverses = inv

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        result, base = 0, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """Return ``x g x^-1``."""
        return int(self.table[self.table[x, g], self.inverses[x]])

    def label(self, g: int) -> str:
        return self.labels[g]

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for g in range(self.order):
            x, d = g, 1
            while x != 0:
                x = int(self.table[x, g])
                d += 1
            orders[g] = d
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def is_cyclic(self) -> bool:
        return int(self.element_orders.max()) == self.order


def _validate_table(t: np.ndarray) -> None:
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupValidationError("format", f"entries must lie in 0..{n - 1}")
    want = np.arange(n)
    if not np.array_equal(t[0], want) or not np.array_equal(t[:, 0], want):
        raise GroupValidationError("identity", "row 0 and column 0 must be the identity permutation")
    rows_ok = np.all(np.sort(t, axis=1) == want, axis=1)
    if not rows_ok.all():
        r = int(np.flatnonzero(~rows_ok)[0])
        raise GroupValidationError("latin", f"row {r} is not a permutation", (r,))
    cols_ok = np.all(np.sort(t, axis=0) == want[:, None], axis=0)
    if not cols_ok.all():
        c = int(np.flatnonzero(~cols_ok)[0])
        raise GroupValidationError("latin", f"column {c} is not a permutation", (c,))
    left = t[t]  # left[a, b, c] = (ab)c
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise GroupValidationError(
            "associativity",
            f"associativity fails for ({a}, {b}, {c}): (ab)c = {left[a, b, c]} but a(bc) = {right[a, b, c]}",
            (a, b, c),
        )
    inv = np.argmin(t, axis=1)
    if not np.all(t[inv, np.arange(n)] == 0):
        g = int(np.flatnonzero(t[inv, np.arange(n)] != 0)[0])
        raise GroupValidationError("inverse", f"element {g} has no two-sided inverse", (g,))


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted element indices."""

    parent: FiniteGroup = field(repr=False, compare=False)
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", elems)
        G = self.parent
        if not elems or elems[0] != 0:
            raise PreconditionError("subgroup must contain the identity")
        members = set(elems)
        sub = G.table[np.ix_(elems, elems)]
        if not members.issuperset(int(v) for v in np.unique(sub)):
            raise PreconditionError("element set is not closed under multiplication")
        if G.order % len(elems):
            raise PreconditionError(f"subgroup order {len(elems)} does not divide {G.order}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_normal(self) -> bool:
        G = self.parent
        for x in G.elements():
            for h in self.elements:
                if G.conjugate(x, h) not in self._members:
                    return False
        return True

    def conjugate_by(self, x: int) -> "Subgroup":
        G = self.parent
        return Subgroup(G, tuple(G.conjugate(x, h) for h in self.elements))

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """Re-index the subgroup as a standalone group (element ``i`` = ``elements[i]``)."""
        G = self.parent
        pos = {g: i for i, g in enumerate(self.elements)}
        idx = np.array(self.elements)
        table = np.vectorize(pos.__getitem__, otypes=[np.int64])(G.table[np.ix_(idx, idx)])
        labels = [G.label(g) for g in self.elements]
        return FiniteGroup(table, labels, name=name or f"subgroup of {G.name}", validate=False)


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``generators``."""
    gens = [int(g) for g in generators]
    for g in gens:
        if not 0 <= g < G.order:
            raise PreconditionError(f"element index {g} out of range for order {G.order}")
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for s in gens:
            b = G.mul(a, s)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return Subgroup(G, tuple(seen))


def element_order(G: FiniteGroup, g: int) -> int:
    if not 0 <= g < G.order:
        raise PreconditionError(f"element index {g} out of range for order {G.order}")
    return int(G.element_orders[g])


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Partition of ``G`` into conjugacy classes, each sorted, ordered by least element."""
    t, inv = G.table, G.inverses
    xs = np.arange(G.order)
    assigned = np.full(G.order, -1)
    classes: list[tuple[int, ...]] = []
    for g in range(G.order):
        if assigned[g] >= 0:
            continue
        orbit = np.unique(t[t[xs, g], inv])
        assigned[orbit] = len(classes)
        classes.append(tuple(int(v) for v in orbit))
    return classes


def class_index(G: FiniteGroup) -> np.ndarray:
    """Map each element to the index of its class in :func:`conjugacy_classes`."""
    idx = np.empty(G.order, dtype=np.int64)
    for i, cls in enumerate(conjugacy_classes(G)):
        idx[list(cls)] = i
    return idx


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    members = set(H.elements)
    keep = [x for x in G.elements() if all(G.conjugate(x, h) in members for h in H.elements)]
    return Subgroup(G, tuple(keep))


def generating_set(G: FiniteGroup, elements: Iterable[int] | None = None) -> list[int]:
    """A small generating set, picked greedily from high-order elements."""
    pool = list(G.elements()) if elements is None else list(elements)
    pool.sort(key=lambda g: (-int(G.element_orders[g]), g))
    target = len(pool)
    gens: list[int] = []
    span: set[int] = {0}
    for g in pool:
        if len(span) == target:
            break
        if g not in span:
            gens.append(g)
            span = set(subgroup_closure(G, gens).elements)
    return gens


# ---------------------------------------------------------------------------
# Sylow theory
# ---------------------------------------------------------------------------


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown one factor of ``p`` at a time inside normalizers.

    If ``|P|`` is below the full ``p``-part then ``p`` divides ``[N(P):P]``, so
    ``N(P)`` holds some ``x`` outside ``P`` with ``x^p`` in ``P``, and
    ``<P, x>`` has order ``p|P|``.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    target = p_part(G.order, p)
    P = Subgroup(G, (0,))
    while P.order < target:
        N = normalizer(G, P)
        x = next(x for x in N.elements if x not in P and G.power(x, p) in P)
        P = subgroup_closure(G, P.elements + (x,))
    return P


def periodicity_report(G: FiniteGroup) -> dict[int, str]:
    """Classify a Sylow subgroup for each prime dividing ``|G|``.

    Values are ``"cyclic"``, ``"generalized_quaternion"`` or ``"other"``.  A
    quaternion verdict is confirmed by an explicit isomorphism to ``Q<order>``.
    """
    report: dict[int, str] = {}
    for p in prime_factors(G.order):
        S = sylow_subgroup(G, p)
        orders = G.element_orders[list(S.elements)]
        if int(orders.max()) == S.order:
            report[p] = "cyclic"
        elif p == 2 and int(np.count_nonzero(orders == 2)) == 1:
            if not isomorphic(S.as_group(), make_group(f"Q{S.order}")):
                raise RuntimeError(f"2-group with a unique involution in {G.name} is not generalized quaternion")
            report[p] = "generalized_quaternion"
        else:
            report[p] = "other"
    return report


def sylow2_kind(G: FiniteGroup) -> str:
    """Kind of the 2-Sylow subgroup; the trivial subgroup counts as cyclic."""
    return periodicity_report(G).get(2, "cyclic")


# ---------------------------------------------------------------------------
# normal subgroups and the odd core
# ---------------------------------------------------------------------------


def normal_closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    gens: set[int] = set()
    for g in elements:
        gens.update(G.conjugate(x, g) for x in G.elements())
    return subgroup_closure(G, sorted(gens))


def normal_subgroups(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Subgroup]:
    """Every normal subgroup of ``G``, sorted by (order, elements).

    Each normal subgroup is a union of conjugacy classes; they are reached by
    joining normal closures of classes, starting from the trivial subgroup.
    """
    if G.order > max_order:
        raise BoundError(f"normal_subgroups is limited to order {max_order}, got {G.order}")
    classes = conjugacy_classes(G)
    found: dict[tuple[int, ...], Subgroup] = {}
    trivial = Subgroup(G, (0,))
    found[trivial.elements] = trivial
    queue = deque([trivial])
    while queue:
        N = queue.popleft()
        for cls in classes:
            if cls[0] in N:
                continue
            M = normal_closure(G, N.elements + cls)
            if M.elements not in found:
                found[M.elements] = M
                queue.append(M)
    return sorted(found.values(), key=lambda H: (H.order, H.elements))


def _regular_sign_kernel(G: FiniteGroup, H: Subgroup) -> Subgroup:
    # Left multiplication by h on H is a product of |H|/ord(h) cycles of
    # length ord(h), so its sign is (-1)^(|H| - |H|/ord(h)).
    n = H.order
    keep = [h for h in H.elements if (n - n // int(G.element_orders[h])) % 2 == 0]
    return Subgroup(G, tuple(keep))


def odd_core(G: FiniteGroup) -> Subgroup:
    """The normal subgroup of maximal odd order, for ``G`` with cyclic 2-Sylow.

    Repeatedly passes to the kernel of the sign of the regular representation;
    each step halves the order until it is odd.
    """
    if sylow2_kind(G) != "cyclic":
        raise PreconditionError(f"{G.name} does not have a cyclic 2-Sylow subgroup")
    H = Subgroup(G, tuple(G.elements()))
    while H.order % 2 == 0:
        K = _regular_sign_kernel(G, H)
        if 2 * K.order != H.order:
            raise RuntimeError("sign map on a group with cyclic 2-Sylow subgroup is not onto")
        H = K
    return H


def odd_order_subgroup(G: FiniteGroup) -> Subgroup | None:
    """The set of odd-order elements, if it is a subgroup of full odd order."""
    odd = tuple(int(g) for g in np.flatnonzero(G.element_orders % 2 == 1))
    m = G.order // p_part(G.order, 2)
    if len(odd) != m:
        return None
    try:
        return Subgroup(G, odd)
    except PreconditionError:
        return None


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------


def _extend_hom(A: FiniteGroup, B: FiniteGroup, gens: list[int], images: list[int]) -> list[int] | None:
    """Extend generator images to a bijective homomorphism, or ``None``."""
    phi = [-1] * A.order
    phi[0] = 0
    used = [False] * B.order
    used[0] = True
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for s, t in zip(gens, images):
            c = A.mul(a, s)
            d = B.mul(phi[a], t)
            if phi[c] < 0:
                if used[d]:
                    return None
                phi[c] = d
                used[d] = True
                queue.append(c)
            elif phi[c] != d:
                return None
    return phi if all(v >= 0 for v in phi) else None


def find_isomorphism(A: FiniteGroup, B: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[int] | None:
    """An isomorphism ``A -> B`` as an image list, found by backtracking over generator images."""
    if max(A.order, B.order) > max_order:
        raise BoundError(f"isomorphism testing is limited to order {max_order}")
    if A.order != B.order:
        return None
    if sorted(A.element_orders.tolist()) != sorted(B.element_orders.tolist()):
        return None
    if A.is_abelian != B.is_abelian:
        return None
    gens = generating_set(A)
    candidates = [[int(b) for b in np.flatnonzero(B.element_orders == A.element_orders[g])] for g in gens]

    def search(i: int, chosen: list[int]) -> list[int] | None:
        if i == len(gens):
            return _extend_hom(A, B, gens, chosen)
        for b in candidates[i]:
            if b in chosen:
                continue
            found = search(i + 1, chosen + [b])
            if found is not None:
                return found
        return None

    return search(0, [])


def isomorphic(A: FiniteGroup, B: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    return find_isomorphism(A, B, max_order) is not None


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _word_label(i: int, j: int) -> str:
    word = _power_label("x", i) + _power_label("y", j)
    return word or "e"


def cyclic_group(m: int) -> FiniteGroup:
    i = np.arange(m)
    table = (i[:, None] + i[None, :]) % m
    return FiniteGroup(table, [_word_label(k, 0) for k in range(m)], name=f"C{m}", validate=False)


def _metacyclic(m: int, n: int, r: int, y_order_shift: int, name: str) -> FiniteGroup:
    """Group of words ``x^a y^b`` (0<=a<m, 0<=b<n) with ``y x y^-1 = x^r`` and ``y^n = x^shift``.

    Element ``x^a y^b`` has index ``a + m*b``.
    """
    order = m * n
    rpow = [pow(r, b, m) for b in range(n)]
    table = np.empty((order, order), dtype=np.int64)
    for b in range(n):
        for a in range(m):
            row = a + m * b
            for d in range(n):
                for c in range(m):
                    # x^a y^b x^c y^d = x^(a + r^b c) y^(b+d), folding y^n into x^shift
                    e = a + rpow[b] * c
                    f = b + d
                    if f >= n:
                        f -= n
                        e += y_order_shift
                    table[row, c + m * d] = (e % m) + m * f
    labels = [_word_label(a, b) for b in range(n) for a in range(m)]
    return FiniteGroup(table, labels, name=name)


def dihedral_group(m: int) -> FiniteGroup:
    """Dihedral group of order ``2m``: ``x^m = y^2 = 1``, ``y x y^-1 = x^-1``."""
    return _metacyclic(m, 2, m - 1, 0, f"D{m}")


def quaternion_group(order: int) -> FiniteGroup:
    """Generalized quaternion group of order ``2^(k+1)``, ``k > 1``.

    Relations ``x^(2^(k-1)) = y^2``, ``x^(2^k) = 1``, ``y x y^-1 = x^-1``.
    """
    if order < 8 or order & (order - 1):
        raise GroupSpecError(f"quaternion order must be a power of two >= 8, got {order}")
    half = order // 2
    return _metacyclic(half, 2, half - 1, half // 2, f"Q{order}")


def semidirect_group(m: int, n: int, r: int) -> FiniteGroup:
    """``C_m`` extended by ``C_n`` with the generator acting by ``x -> x^r``."""
    if m < 1 or n < 1:
        raise GroupSpecError("cyclic factors must have positive order")
    if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise GroupSpecError(f"x -> x^{r} is not an automorphism of order dividing {n} on C{m}")
    return _metacyclic(m, n, r % m if m > 1 else 0, 0, f"C{m}:C{n}@r{r}")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """``A x B`` with ``(a, b)`` at index ``a*|B| + b``."""
    nb = B.order
    table = (A.table[:, None, :, None] * nb + B.table[None, :, None, :]).reshape(A.order * nb, A.order * nb)
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    return FiniteGroup(table, labels, name=f"{A.name}x{B.name}", validate=False)


_FACTOR_PATTERNS = [
    (re.compile(r"C(\d+):C(\d+)@r(\d+)"), "semidirect"),
    (re.compile(r"C(\d+)"), "cyclic"),
    (re.compile(r"D(\d+)"), "dihedral"),
    (re.compile(r"Q(\d+)"), "quaternion"),
]


def _parse_factor(text: str) -> tuple[str, tuple[int, ...], int]:
    for pattern, kind in _FACTOR_PATTERNS:
        match = pattern.fullmatch(text)
        if match is None:
            continue
        args = tuple(int(v) for v in match.groups())
        if kind == "semidirect":
            m, n, r = args
            if m < 1 or n < 1:
                raise GroupSpecError(f"cyclic factors must have positive order in {text!r}")
            if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
                raise GroupSpecError(f"invalid action in {text!r}: need gcd(r, m) = 1 and r^{n} = 1 mod {m}")
            return kind, args, m * n
        (k,) = args
        if kind == "cyclic":
            if k < 1:
                raise GroupSpecError("cyclic order must be positive")
            return kind, args, k
        if kind == "dihedral":
            if k < 1:
                raise GroupSpecError("dihedral parameter must be positive")
            return kind, args, 2 * k
        if k < 8 or k & (k - 1):
            raise GroupSpecError(f"quaternion order must be a power of two >= 8, got {k}")
        return kind, args, k
    raise GroupSpecError(f"cannot parse group factor {text!r}")


def parse_spec(spec: str) -> list[tuple[str, tuple[int, ...], int]]:
    """Parse a group expression into its direct factors ``(kind, params, order)``."""
    text = "".join(spec.split())
    if not text:
        raise GroupSpecError("empty group expression")
    return [_parse_factor(part) for part in text.split("x")]


def spec_order(spec: str) -> int:
    return math.prod(order for _, _, order in parse_spec(spec))


def make_group(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from an expression such as ``"C3xQ8"`` or ``"C7:C4@r6"``.

    Factors: ``C<m>`` cyclic, ``D<m>`` dihedral of order ``2m``, ``Q<2^(k+1)>``
    generalized quaternion, ``C<m>:C<n>@r<r>`` cyclic-by-cyclic semidirect
    product; factors joined by ``x`` form a direct product.
    """
    factors = parse_spec(spec)
    order = math.prod(o for _, _, o in factors)
    if order > max_order:
        raise BoundError(f"{spec!r} has order {order}, above the limit of {max_order}")
    built = []
    for kind, args, _ in factors:
        if kind == "cyclic":
            built.append(cyclic_group(*args))
        elif kind == "dihedral":
            built.append(dihedral_group(*args))
        elif kind == "quaternion":
            built.append(quaternion_group(*args))
        else:
            built.append(semidirect_group(*args))
    G = reduce(direct_product, built)
    if len(built) > 1:
        _validate_table(G.table)
    G.name = "".join(spec.split())
    return G


# ---------------------------------------------------------------------------
# Cayley table files
# ---------------------------------------------------------------------------


def format_group(G: FiniteGroup, with_labels: bool = True) -> str:
    lines = [str(G.order)]
    lines += [" ".join(str(int(v)) for v in row) for row in G.table]
    if with_labels:
        lines.append(" ".join(G.labels))
    return "\n".join(lines) + "\n"


def parse_group(text: str, name: str | None = None) -> FiniteGroup:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupValidationError("format", "empty Cayley table file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GroupValidationError("format", f"first line must be the group order, got {lines[0]!r}") from None
    if n < 1:
        raise GroupValidationError("format", "group order must be positive")
    if len(lines) not in (n + 1, n + 2):
        raise GroupValidationError("format", f"expected {n} table rows and an optional label line, got {len(lines) - 1} lines")
    rows = []
    for i, ln in enumerate(lines[1 : n + 1], start=2):
        parts = ln.split()
        if len(parts) != n:
            raise GroupValidationError("format", f"line {i}: expected {n} entries, got {len(parts)}")
        try:
            rows.append([int(v) for v in parts])
        except ValueError:
            raise GroupValidationError("format", f"line {i}: non-integer entry") from None
    labels = None
    if len(lines) == n + 2:
        labels = lines[n + 1].split()
        if len(labels) != n:
            raise GroupValidationError("format", f"label line: expected {n} labels, got {len(labels)}")
    return FiniteGroup(rows, labels, name=name)


def save_group(G: FiniteGroup, path: str | Path) -> None:
    Path(path).write_text(format_group(G))


def load_group(path: str | Path, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    path = Path(path)
    text = path.read_text()
    head = text.split(None, 1)
    if head and head[0].isdigit() and int(head[0]) > max_order:
        raise BoundError(f"{path.name}: order {head[0]} is above the limit of {max_order}")
    return parse_group(text, name=path.stem)
