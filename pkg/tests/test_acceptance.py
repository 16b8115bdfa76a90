"""Acceptance criteria 1-9, each checked exactly and against its runtime budget.

Every test appends one ``PASS``/``FAIL`` line that is printed in the pytest
terminal summary (and to stdout when run with ``-s``).
"""

from __future__ import annotations

import time

import pytest

from spaceform_psc.catalog import generate_catalog
from spaceform_psc.cohomology import build_extension, cocycle_space
from spaceform_psc.groups import isomorphic, make_group
from spaceform_psc.spaceform import Outcome, SpaceFormInstance, bg3_applicable, classify, rpn_characteristic
from spaceform_psc.suites import (
    check_no_full_doubling,
    check_odd_core,
    check_odd_lift,
    check_sylow_restriction,
    remark_classes,
    suite_main,
)

pytestmark = pytest.mark.acceptance


def _finish(log, number, title, problems, checked, elapsed, budget):
    ok = not problems and elapsed < budget
    line = (
        f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: "
        f"{checked} checked, {len(problems)} problems, {elapsed:.2f}s (budget {budget:g}s)"
    )
    log.append(line)
    print(line)
    assert not problems, problems[:10]
    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"


def _cyclic_sylow(max_order):
    return [e.group for e in generate_catalog(max_order) if "cyclic_sylow2" in e.tags]


def test_criterion_1_odd_core(acceptance_log):
    start = time.perf_counter()
    groups = _cyclic_sylow(48)
    problems = [p for p in map(check_odd_core, groups) if p]
    _finish(acceptance_log, 1, "odd core = unique maximal odd normal subgroup (|G| <= 48)",
            problems, len(groups), time.perf_counter() - start, 60)


def test_criterion_2_sylow_restriction(acceptance_log):
    start = time.perf_counter()
    groups = _cyclic_sylow(24)
    problems = [p for G in groups for p in check_sylow_restriction(G)]
    classes = sum(len(cocycle_space(G).classes) for G in groups)
    _finish(acceptance_log, 2, "global split <=> split on 2-Sylow (|G| <= 24)",
            problems, classes, time.perf_counter() - start, 120)


def test_criterion_3_odd_lift(acceptance_log):
    # shares the suite-2 budget
    start = time.perf_counter()
    groups = _cyclic_sylow(24)
    problems = [p for G in groups for p in check_odd_lift(G)]
    classes = sum(len(cocycle_space(G).classes) for G in groups)
    _finish(acceptance_log, 3, "odd core lifts to a normal subgroup of every extension",
            problems, classes, time.perf_counter() - start, 120)


def test_criterion_4_no_full_doubling(acceptance_log):
    start = time.perf_counter()
    problems, classes = [], 0
    for q in (8, 16, 32):
        G = make_group(f"Q{q}")
        problems += check_no_full_doubling(G)
        classes += len(cocycle_space(G).classes)
    _finish(acceptance_log, 4, "no class of Q8/Q16/Q32 doubles every fiber",
            problems, classes, time.perf_counter() - start, 30)


def test_criterion_5_remark(acceptance_log):
    start = time.perf_counter()
    found = remark_classes(make_group("Q8"))
    problems = [] if found else ["no qualifying class"]
    # every nonzero class of H^2(Q8; Z2) is a sum of squares of degree-1 classes, which die on cyclic subgroups
    if found != [1, 2, 3]:
        problems.append(f"expected classes [1, 2, 3], found {found}")
    _finish(acceptance_log, 5, "non-split Q8 class, split on cyclic subgroups, total C4:C4",
            problems, 4, time.perf_counter() - start, 10)


def test_criterion_6_h2_sanity(acceptance_log):
    start = time.perf_counter()
    problems = []
    for k in range(1, 17):
        count = len(cocycle_space(make_group(f"C{k}")).classes)
        if count != (2 if k % 2 == 0 else 1):
            problems.append(f"C{k}: {count} classes")
    for base, total in (("C2", "C4"), ("C4", "C8")):
        G = make_group(base)
        if not isomorphic(build_extension(G, cocycle_space(G).classes[1]).total, make_group(total)):
            problems.append(f"non-split total over {base} is not {total}")
    _finish(acceptance_log, 6, "H^2 of C_n and non-split totals over C2, C4",
            problems, 18, time.perf_counter() - start, 5)


def test_criterion_7_main_sweep(acceptance_log):
    start = time.perf_counter()
    checked, problems = suite_main(32)
    _finish(acceptance_log, 7, "main sweep 5 <= n <= 15, |G| <= 32, witnesses re-verified",
            problems, checked, time.perf_counter() - start, 300)


def test_criterion_8_characteristic_table(acceptance_log):
    start = time.perf_counter()
    problems = []
    for n in range(2, 31, 2):
        ch = rpn_characteristic(n)
        if ch.w1 != 1:
            problems.append(f"n={n}: w1 != a")
        if ch.w2 != (n * (n + 1) // 2) % 2:
            problems.append(f"n={n}: w2 mismatch")
        if n >= 6:
            eps = "+" if (n // 2) % 2 == 0 else "-"
            has = ch.pin_plus if eps == "+" else ch.pin_minus
            r = bg3_applicable(SpaceFormInstance(n, make_group("C2")))
            if not has or r.epsilon != eps or not r.applicable:
                problems.append(f"n={n}: Pin{eps} missing")
    _finish(acceptance_log, 8, "RP^n Stiefel-Whitney table and Pin^eps for even n <= 30",
            problems, 15, time.perf_counter() - start, 1)


def test_criterion_9_negative_gates(acceptance_log):
    cases = [
        (9, "Q8", None, Outcome.NOT_SPACE_FORM_GROUP),
        (9, "C3", False, Outcome.NO_PSC),
        (9, "C3", None, Outcome.NEEDS_ALPHA),
        (4, "C2", None, Outcome.DIMENSION),
    ]
    groups = {spec: make_group(spec) for _, spec, _, _ in cases}
    start = time.perf_counter()
    problems = []
    for n, spec, alpha, want in cases:
        got = classify(SpaceFormInstance(n, groups[spec], alpha)).outcome
        if got is not want:
            problems.append(f"(n={n}, {spec}, alpha={alpha}): {got.value} != {want.value}")
    _finish(acceptance_log, 9, "negative gates", problems, len(cases), time.perf_counter() - start, 1)
