from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spaceform_psc.cohomology import build_extension, cocycle_space, Cocycle2
from spaceform_psc.errors import PreconditionError
from spaceform_psc.groups import make_group
from spaceform_psc.spaceform import (
    Outcome,
    SpaceFormInstance,
    bg2_witness,
    bg3_applicable,
    classify,
    consistent_extension_classes,
    cyclic_generators,
    free_action_necessary,
    homotopy_model,
    lens_spin,
    psc_exists,
    rpn_characteristic,
    spin_structure,
    splits_on_cyclic,
    verify_witness,
)


def inst(n, spec, alpha=None):
    return SpaceFormInstance(n, make_group(spec), alpha)


# ---------------------------------------------------------------- characteristic classes


def sw_from_total_class(n: int) -> tuple[int, int]:
    """Independent oracle: expand (1 + a)^(n+1) and read off degrees 1 and 2."""
    return comb(n + 1, 1) % 2, comb(n + 1, 2) % 2


@pytest.mark.parametrize("n", range(2, 31, 2))
def test_rpn_matches_binomial_expansion(n):
    ch = rpn_characteristic(n)
    assert (ch.w1, ch.w2) == sw_from_total_class(n)
    assert not ch.orientable and not ch.spin


def test_rpn_rejects_odd():
    with pytest.raises(PreconditionError):
        rpn_characteristic(5)


@pytest.mark.parametrize("n, plus, minus", [(2, False, True), (4, True, False), (6, False, True), (8, True, False)])
def test_rpn_pin_table(n, plus, minus):
    ch = rpn_characteristic(n)
    assert (ch.pin_plus, ch.pin_minus) == (plus, minus)


def lens_w2_oracle(p: int, m: int) -> int:
    # total class (1 + b)^m with b the reduction of the degree-2 generator, nonzero only for p even
    return comb(m, 1) % 2 if p % 2 == 0 else 0


@given(st.integers(1, 64), st.integers(1, 20))
def test_lens_spin_oracle(p, m):
    assert lens_spin(p, m) == (lens_w2_oracle(p, m) == 0)


@pytest.mark.parametrize("k", range(2, 13))
@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_spin_structure_cyclic_matches_lens(n, k):
    I = inst(n, f"C{k}")
    assert spin_structure(I).spin == lens_spin(k, I.m)
    assert homotopy_model(I).kind == "lens"


def test_homotopy_models():
    assert homotopy_model(inst(6, "C2")).kind == "real_projective"
    assert homotopy_model(inst(7, "C1")).kind == "sphere"
    assert str(homotopy_model(inst(7, "C5"))) == "lens(5, 4)"
    with pytest.raises(PreconditionError):
        homotopy_model(inst(7, "Q8"))
    with pytest.raises(PreconditionError):
        homotopy_model(inst(6, "C3"))


# ---------------------------------------------------------------- gates


@pytest.mark.parametrize(
    "n, spec, passed",
    [
        (5, "C6", True), (7, "Q8", True), (5, "Q8", False), (9, "Q8", False),
        (7, "C2xC2", False), (7, "D3", True), (7, "D4", False), (6, "C3", False), (6, "C2", True),
        (11, "Q16xC3", True), (13, "Q16", False),
    ],
)
def test_free_action_necessary(n, spec, passed):
    assert free_action_necessary(inst(n, spec)).passed is passed


@pytest.mark.parametrize(
    "n, spec, alpha, want",
    [
        (9, "C3", None, "needs_alpha"), (9, "C3", False, "no"), (9, "C3", True, "yes"),
        (10, "C1", None, "needs_alpha"), (17, "C5", False, "no"),
        (9, "C2", None, "yes"), (7, "C3", None, "yes"), (11, "C3", None, "yes"),
    ],
)
def test_psc_exists(n, spec, alpha, want):
    assert psc_exists(inst(n, spec, alpha)) == want


def test_psc_exists_below_range():
    with pytest.raises(PreconditionError):
        psc_exists(inst(4, "C2"))


# ---------------------------------------------------------------- extensions and witnesses


def test_cyclic_generators_cover_each_cyclic_subgroup_once():
    G = make_group("Q8")
    assert len(cyclic_generators(G)) == 5  # 1, <-1>, <i>, <j>, <k>
    assert len(cyclic_generators(make_group("C12"))) == 6


def test_splits_on_cyclic_against_restriction():
    from spaceform_psc.cohomology import is_split, restrict_cocycle
    from spaceform_psc.groups import subgroup_closure

    for spec in ("C4", "C6", "Q8", "C3xQ8", "D5"):
        G = make_group(spec)
        for cls in cocycle_space(G).classes:
            E = build_extension(G, cls)
            for g in cyclic_generators(G):
                H = subgroup_closure(G, [g])
                r = restrict_cocycle(cls.representative, H)
                assert splits_on_cyclic(E, g) == is_split(H.as_group(), r)


@pytest.mark.parametrize("n, spec", [(5, "C2"), (5, "C6"), (9, "C4"), (7, "C2"), (7, "C4"), (11, "C10")])
def test_spin_cases_keep_only_zero_class(n, spec):
    I = inst(n, spec)
    classes = consistent_extension_classes(I)
    zero_kept = any(c.is_zero for c in classes)
    assert zero_kept == spin_structure(I).spin
    assert len(classes) == 1


def test_consistent_classes_requires_odd_and_free():
    with pytest.raises(PreconditionError):
        consistent_extension_classes(inst(6, "C2"))
    with pytest.raises(PreconditionError):
        consistent_extension_classes(inst(9, "Q8"))


def test_bg2_witness_examples():
    # C2 x Q8 (trivial class) at m = 4: the first witness is (0,x)
    G = make_group("Q8")
    E = build_extension(G, Cocycle2.zero(G))
    g = bg2_witness(E, 4)
    assert E.total.label(g) == "(0,x)"
    assert verify_witness(E, 4, g)
    # C4 over C2 at m = 3: a generator of C4 works
    C2 = make_group("C2")
    E = build_extension(C2, cocycle_space(C2).classes[1])
    g = bg2_witness(E, 3)
    assert g is not None and E.total.element_orders[g] == 4
    # C2 x C1 at m = 4: nothing besides 1 and z
    C1 = make_group("C1")
    assert bg2_witness(build_extension(C1, Cocycle2.zero(C1)), 4) is None


def test_verify_witness_rejects_trivial_choices():
    G = make_group("C3")
    E = build_extension(G, Cocycle2.zero(G))
    assert not verify_witness(E, 4, 0)
    assert not verify_witness(E, 4, E.z)
    # m odd: the identity is its own inverse, so it is never a witness
    assert not verify_witness(E, 3, 0)


@given(st.sampled_from(["C3", "C4", "Q8", "D3", "C6"]), st.integers(2, 8))
def test_witness_found_iff_direct_search(spec, m):
    G = make_group(spec)
    for cls in cocycle_space(G).classes:
        E = build_extension(G, cls)
        direct = [g for g in E.total.elements() if verify_witness(E, m, g)]
        found = bg2_witness(E, m)
        assert (found is None) == (not direct)
        if found is not None:
            assert found == direct[0]


# ---------------------------------------------------------------- even dimension


@pytest.mark.parametrize("n", range(6, 31, 2))
def test_bg3_applies_for_all_even_n(n):
    r = bg3_applicable(inst(n, "C2"))
    assert r.applicable
    assert r.epsilon == ("+" if (n // 2) % 2 == 0 else "-")


@pytest.mark.parametrize("n, spec", [(4, "C2"), (7, "C2"), (6, "C1"), (6, "C4")])
def test_bg3_not_applicable(n, spec):
    assert not bg3_applicable(inst(n, spec)).applicable


# ---------------------------------------------------------------- full pipeline


@pytest.mark.parametrize(
    "n, spec, alpha, outcome, theorem",
    [
        (5, "C2", None, Outcome.INFINITELY_MANY, "Thm3.1b"),
        (7, "Q16", None, Outcome.INFINITELY_MANY, "Thm3.1a"),
        (6, "C2", None, Outcome.INFINITELY_MANY, "Thm3.2"),
        (9, "Q8", None, Outcome.NOT_SPACE_FORM_GROUP, None),
        (9, "C3", None, Outcome.NEEDS_ALPHA, None),
        (9, "C3", False, Outcome.NO_PSC, None),
        (9, "C3", True, Outcome.INFINITELY_MANY, "Thm3.1b"),
        (4, "C2", None, Outcome.DIMENSION, None),
        (7, "C1", None, Outcome.SIMPLY_CONNECTED, None),
        (6, "C3", None, Outcome.NOT_SPACE_FORM_GROUP, None),
        (11, "C3xQ8", None, Outcome.INFINITELY_MANY, "Thm3.1a"),
        (7, "C7:C4@r6", None, Outcome.INFINITELY_MANY, "Thm3.1a"),
    ],
)
def test_classify_examples(n, spec, alpha, outcome, theorem):
    v = classify(inst(n, spec, alpha))
    assert v.outcome is outcome
    assert v.theorem == theorem
    assert v.trace


def test_classify_c2_n5_witness():
    v = classify(inst(5, "C2"))
    assert [w.label for w in v.witnesses] == ["(0,x)"]
    assert v.classes_considered == 1


def test_classify_q16_n7_considers_every_class():
    v = classify(inst(7, "Q16"))
    assert v.classes_considered == 4 == len(v.witnesses)
    assert v.characteristic is not None and v.characteristic.externally_cited


def test_classify_even_records_pin_epsilon():
    v = classify(inst(6, "C2"))
    assert v.pin_epsilon == "-"
    assert v.characteristic.pin_minus
    assert classify(inst(8, "C2")).pin_epsilon == "+"


def test_instance_rejects_tiny_dimension():
    with pytest.raises(PreconditionError):
        inst(1, "C2")
