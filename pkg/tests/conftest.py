from __future__ import annotations

import itertools

import pytest

from spaceform_psc.catalog import generate_catalog
from spaceform_psc.groups import FiniteGroup


def table_from_elements(elements, mul, identity, name="oracle"):
    """Cayley table of a concretely represented group, identity moved to index 0."""
    elements = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, [str(e) for e in elements], name=name), elements


def quaternion_units():
    """The eight unit quaternions +-1, +-i, +-j, +-k as integer 4-vectors."""
    def hamilton(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    units = []
    for axis in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[axis] = sign
            units.append(tuple(v))
    return units, hamilton, (1, 0, 0, 0)


def dihedral_perms(m):
    """Symmetries of the regular m-gon as permutation tuples."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(m))

    ident = tuple(range(m))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in (rot, ref):
                c = compose(e, s)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(elems), compose, ident


def brute_subgroups(G: FiniteGroup):
    """All subgroups by checking every subset (tiny groups only)."""
    n = G.order
    out = []
    for bits in range(1 << (n - 1)):
        subset = [0] + [i + 1 for i in range(n - 1) if (bits >> i) & 1]
        if n % len(subset):
            continue
        s = set(subset)
        if all(G.mul(a, b) in s for a, b in itertools.product(subset, repeat=2)):
            out.append(tuple(subset))
    return out


@pytest.fixture(scope="session")
def catalog24():
    return generate_catalog(24)


@pytest.fixture(scope="session")
def catalog32():
    return generate_catalog(32)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Append one summary line per acceptance criterion; printed at session end."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
