"""Property suites run by ``verify``: each checks one group-theoretic fact over the catalog.

Coverage is over the bundled catalog families (plus any groups passed in
explicitly), not over all groups of a given order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .catalog import CatalogEntry, generate_catalog
from .cohomology import (
    DEFAULT_COHOMOLOGY_BOUND,
    build_extension,
    cocycle_space,
    complement_exists,
    is_split,
    lift_odd_normal,
    preimage_order_profile,
    restrict_cocycle,
)
from .errors import BoundError
from .groups import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    direct_product,
    isomorphic,
    make_group,
    normal_subgroups,
    odd_core,
    subgroup_closure,
    sylow_subgroup,
)
from .spaceform import (
    Outcome,
    SpaceFormInstance,
    bg3_applicable,
    classify,
    free_action_necessary,
    psc_exists,
    rpn_characteristic,
    verify_witness,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    elapsed: float
    failures: list[str] = field(default_factory=list)


def _entries(max_order: int, tag: str | None = None) -> list[CatalogEntry]:
    return [e for e in generate_catalog(max_order) if tag is None or tag in e.tags]


def check_odd_core(G: FiniteGroup) -> str | None:
    """``None`` if the odd core matches the normal-subgroup oracle, else a message."""
    core = odd_core(G)
    odd = [N for N in normal_subgroups(G) if N.order % 2 == 1]
    top = max(N.order for N in odd)
    maximal = [N for N in odd if N.order == top]
    if len(maximal) != 1:
        return f"{G.name}: {len(maximal)} odd normal subgroups of order {top}"
    if maximal[0].elements != core.elements:
        return f"{G.name}: odd core {core.elements} != oracle {maximal[0].elements}"
    index = G.order // core.order
    if index & (index - 1):
        return f"{G.name}: index of the odd core is not a power of two"
    return None


def check_sylow_restriction(G: FiniteGroup) -> list[str]:
    """Global splitting agrees with splitting on a 2-Sylow subgroup."""
    problems = []
    S = sylow_subgroup(G, 2)
    for cls in cocycle_space(G).classes:
        f = cls.representative
        whole = is_split(G, f)
        part = is_split(S.as_group(), restrict_cocycle(f, S))
        if whole != part:
            problems.append(f"{G.name} class {cls.index}: split={whole} but Sylow restriction split={part}")
    return problems


def check_odd_lift(G: FiniteGroup) -> list[str]:
    """For every class the odd core lifts to a normal subgroup projecting onto it."""
    problems = []
    core = odd_core(G)
    for cls in cocycle_space(G).classes:
        E = build_extension(G, cls)
        lifted = lift_odd_normal(E)
        if (
            lifted.order != core.order
            or not lifted.is_normal()
            or sorted(E.project(i) for i in lifted.elements) != list(core.elements)
        ):
            problems.append(f"{G.name} class {cls.index}: odd lift does not cover the odd core")
    return problems


def check_three_way_split(G: FiniteGroup) -> list[str]:
    problems = []
    space = cocycle_space(G)
    trivial_ext = direct_product(make_group("C2"), G)
    for cls in space.classes:
        E = build_extension(G, cls)
        a = space.is_coboundary(cls.representative)
        b = complement_exists(E)
        c = isomorphic(E.total, trivial_ext)
        if not a == b == c:
            problems.append(f"{G.name} class {cls.index}: coboundary={a}, complement={b}, iso C2xG={c}")
    return problems


def check_no_full_doubling(G: FiniteGroup) -> list[str]:
    problems = []
    orders = G.element_orders
    for cls in cocycle_space(G).classes:
        prof = preimage_order_profile(build_extension(G, cls))
        if all(int(orders[g]) not in prof[g] for g in range(1, G.order)):
            problems.append(f"{G.name} class {cls.index}: every non-trivial fiber is order-doubled")
    return problems


def remark_classes(G: FiniteGroup) -> list[int]:
    """Non-split classes of ``G`` splitting on every cyclic subgroup with a ``C4 : C4`` total."""
    target = make_group("C4:C4@r3")
    out = []
    space = cocycle_space(G)
    cyclic = {subgroup_closure(G, [g]).elements: subgroup_closure(G, [g]) for g in G.elements()}
    for cls in space.classes:
        if cls.is_zero:
            continue
        f = cls.representative
        if all(is_split(C.as_group(), restrict_cocycle(f, C)) for C in cyclic.values()):
            if isomorphic(build_extension(G, f).total, target):
                out.append(cls.index)
    return out


def sweep_instance(n: int, G: FiniteGroup, bound: int = DEFAULT_COHOMOLOGY_BOUND) -> str | None:
    """Classify one (n, G) pair of the Main Theorem sweep; ``None`` if it is out of scope or fine."""
    inst = SpaceFormInstance(n, G)
    if G.order == 1 or not free_action_necessary(inst).passed or psc_exists(inst) != "yes":
        return None
    v = classify(inst, bound)
    if v.outcome is not Outcome.INFINITELY_MANY:
        return f"n={n} {G.name}: {v.outcome.value}"
    if inst.odd:
        if len(v.witnesses) != v.classes_considered or not v.witnesses:
            return f"n={n} {G.name}: {len(v.witnesses)} witnesses for {v.classes_considered} classes"
        space = cocycle_space(G, bound)
        for w in v.witnesses:
            E = build_extension(G, space.classes[w.class_index])
            if not verify_witness(E, inst.m, w.element):
                return f"n={n} {G.name}: witness {w.label} fails re-verification"
    elif not bg3_applicable(inst).applicable:
        return f"n={n} {G.name}: no Pin structure"
    return None


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_h2(max_order: int) -> tuple[int, list[str]]:
    problems, checked = [], 0
    for k in range(1, min(16, max_order) + 1):
        count = len(cocycle_space(make_group(f"C{k}")).classes)
        if count != (2 if k % 2 == 0 else 1):
            problems.append(f"C{k}: {count} classes")
        checked += 1
    for k, want in ((2, "C4"), (4, "C8")):
        if k > max_order:
            continue
        G = make_group(f"C{k}")
        total = build_extension(G, cocycle_space(G).classes[1]).total
        if not isomorphic(total, make_group(want)):
            problems.append(f"non-split extension of C{k} is not {want}")
    return checked, problems


def suite_lemma25(max_order: int) -> tuple[int, list[str]]:
    entries = _entries(max_order, "cyclic_sylow2")
    problems = [p for p in (check_odd_core(e.group) for e in entries) if p]
    return len(entries), problems


def suite_lemma26(max_order: int) -> tuple[int, list[str]]:
    entries = _entries(min(max_order, DEFAULT_COHOMOLOGY_BOUND), "cyclic_sylow2")
    problems = [p for e in entries for check in (check_sylow_restriction, check_odd_lift) for p in check(e.group)]
    return len(entries), problems


def suite_splitting(max_order: int) -> tuple[int, list[str]]:
    entries = _entries(min(max_order, 24))
    problems = [p for e in entries for p in check_three_way_split(e.group)]
    return len(entries), problems


def suite_prop28(max_order: int) -> tuple[int, list[str]]:
    groups = [make_group(f"Q{q}") for q in (8, 16, 32) if q <= min(max_order, DEFAULT_COHOMOLOGY_BOUND)]
    problems = [p for G in groups for p in check_no_full_doubling(G)]
    return len(groups), problems


def suite_remark(max_order: int) -> tuple[int, list[str]]:
    if max_order < 8:
        return 0, []
    found = remark_classes(make_group("Q8"))
    return 1, [] if found else ["no non-split class of Q8 splits on all cyclic subgroups"]


def suite_rpn(max_order: int) -> tuple[int, list[str]]:
    problems = []
    for n in range(2, 31, 2):
        ch = rpn_characteristic(n)
        if ch.w1 != 1 or ch.w2 != (n * (n + 1) // 2) % 2:
            problems.append(f"n={n}: {ch.describe()}")
        if n >= 6:
            eps_ok = ch.pin_plus if (n // 2) % 2 == 0 else ch.pin_minus
            if not eps_ok or not bg3_applicable(SpaceFormInstance(n, make_group("C2"))).applicable:
                problems.append(f"n={n}: Pin^eps structure missing")
    return 15, problems


def suite_main(max_order: int, jobs: int = 1) -> tuple[int, list[str]]:
    entries = _entries(min(max_order, DEFAULT_COHOMOLOGY_BOUND))
    tasks = [(n, e.spec) for n in range(5, 16) for e in entries]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_sweep_spec, tasks, chunksize=8))
    else:
        results = [_sweep_spec(t) for t in tasks]
    return len(tasks), sorted(p for p in results if p)


def _sweep_spec(task: tuple[int, str]) -> str | None:
    n, spec = task
    return sweep_instance(n, make_group(spec))


SUITES: dict[str, Callable[[int], tuple[int, list[str]]]] = {
    "h2": suite_h2,
    "lemma2.5": suite_lemma25,
    "lemma2.6": suite_lemma26,
    "splitting": suite_splitting,
    "prop2.8": suite_prop28,
    "remark": suite_remark,
    "rpn": suite_rpn,
    "main": suite_main,
}


def run_suites(names: Iterable[str] | None, max_order: int, jobs: int = 1) -> list[SuiteResult]:
    if max_order > DEFAULT_MAX_ORDER:
        raise BoundError(f"verification is limited to order {DEFAULT_MAX_ORDER}, got {max_order}")
    names = list(names) if names else list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    results = []
    for name in names:
        start = time.perf_counter()
        if name == "main":
            checked, problems = suite_main(max_order, jobs)
        else:
            checked, problems = SUITES[name](max_order)
        results.append(SuiteResult(name, not problems, checked, time.perf_counter() - start, problems))
    return results
