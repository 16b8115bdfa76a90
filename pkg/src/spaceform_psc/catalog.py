"""A deterministic, family-based catalog of small groups.

The catalog is NOT a complete list of isomorphism types.  It covers cyclic
groups, odd dihedral groups, generalized quaternion groups, products of an
odd cyclic group with a cyclic or quaternion 2-group, and cyclic-by-cyclic
semidirect products ``C_m : C_(2^k)``.  Different entries may be isomorphic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundError
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, make_group, periodicity_report, spec_order


@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    group: FiniteGroup
    tags: frozenset[str]

    @property
    def order(self) -> int:
        return self.group.order


def group_tags(G: FiniteGroup) -> frozenset[str]:
    report = periodicity_report(G)
    tags = set()
    s2 = report.get(2, "cyclic")
    if s2 == "cyclic":
        tags.add("cyclic_sylow2")
    elif s2 == "generalized_quaternion":
        tags.add("quaternion_sylow2")
    if G.order % 2 == 1:
        tags.add("odd_order")
    tags.add("other" if "other" in report.values() else "periodic")
    return frozenset(tags)


def catalog_specs(max_order: int) -> list[str]:
    specs: set[str] = set()
    specs.update(f"C{m}" for m in range(1, max_order + 1))
    specs.update(f"D{m}" for m in range(3, max_order // 2 + 1, 2))
    q = 8
    while q <= max_order:
        specs.add(f"Q{q}")
        q *= 2
    for odd in range(3, max_order + 1, 2):
        two = 2
        while odd * two <= max_order:
            specs.add(f"C{odd}xC{two}")
            if two >= 8:
                specs.add(f"C{odd}xQ{two}")
            two *= 2
    for m in range(3, max_order // 2 + 1):
        two = 2
        while m * two <= max_order:
            for r in range(2, m):
                if math.gcd(r, m) == 1 and pow(r, two, m) == 1:
                    specs.add(f"C{m}:C{two}@r{r}")
            two *= 2
    return sorted(specs, key=lambda s: (spec_order(s), s))


def generate_catalog(max_order: int) -> list[CatalogEntry]:
    """Catalog entries of order at most ``max_order``, sorted by (order, spec)."""
    if max_order > DEFAULT_MAX_ORDER:
        raise BoundError(f"catalog is limited to order {DEFAULT_MAX_ORDER}, got {max_order}")
    if max_order < 1:
        return []
    out = []
    for spec in catalog_specs(max_order):
        G = make_group(spec)
        out.append(CatalogEntry(spec, G, group_tags(G)))
    return out
