"""Decision procedures over (dimension, fundamental group).

Each function answers one geometric question from group data alone; the
final :func:`classify` chains them into a verdict on whether the space and
moduli space of positive scalar curvature metrics have infinitely many path
components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cohomology import (
    DEFAULT_COHOMOLOGY_BOUND,
    CohomologyClass,
    ExtensionGroup,
    build_extension,
    cocycle_space,
)
from .errors import PreconditionError
from .groups import FiniteGroup, class_index, periodicity_report, subgroup_closure


class Outcome(str, enum.Enum):
    INFINITELY_MANY = "InfinitelyManyComponents"
    NO_PSC = "NoPscMetric"
    NEEDS_ALPHA = "NeedsAlphaInput"
    NOT_SPACE_FORM_GROUP = "NotASpaceFormGroup"
    SIMPLY_CONNECTED = "SimplyConnectedOutOfScope"
    DIMENSION = "DimensionOutOfScope"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class SpaceFormInstance:
    n: int
    group: FiniteGroup
    alpha_vanishes: bool | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise PreconditionError(f"dimension must be at least 2, got {self.n}")

    @property
    def m(self) -> int:
        return (self.n + 1) // 2

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1


@dataclass(frozen=True)
class CharacteristicData:
    """Stiefel-Whitney data in ``H^*(M; Z/2)``.

    ``w1`` and ``w2`` are the coefficients of ``a`` and ``a^2`` for the
    generator ``a`` of ``H^1`` (0 or 1).
    """

    w1: int
    w2: int
    spin: bool
    externally_cited: bool = False

    @property
    def orientable(self) -> bool:
        return self.w1 == 0

    @property
    def pin_plus(self) -> bool:
        return self.w2 == 0

    @property
    def pin_minus(self) -> bool:
        # w1^2 = w1 * a^2 in the truncated polynomial ring
        return (self.w2 + self.w1) % 2 == 0

    def describe(self) -> str:
        w1 = "a" if self.w1 else "0"
        w2 = "a^2" if self.w2 else "0"
        return f"w1={w1}, w2={w2}"


@dataclass(frozen=True)
class TraceStep:
    step: str
    cite: str
    result: str


@dataclass(frozen=True)
class FreeActionReport:
    passed: bool
    violations: tuple[TraceStep, ...]
    sylow: dict[int, str] = field(compare=False)


@dataclass(frozen=True)
class HomotopyModel:
    kind: str  # "sphere", "real_projective" or "lens"
    p: int | None = None
    m: int | None = None

    def __str__(self) -> str:
        if self.kind == "lens":
            return f"lens({self.p}, {self.m})"
        return self.kind


@dataclass(frozen=True)
class Witness:
    class_index: int
    element: int
    label: str


@dataclass
class Verdict:
    outcome: Outcome
    theorem: str | None = None
    witnesses: list[Witness] = field(default_factory=list)
    trace: list[TraceStep] = field(default_factory=list)
    classes_considered: int = 0
    characteristic: CharacteristicData | None = None
    psc: str | None = None
    pin_epsilon: str | None = None

    def note(self, step: str, cite: str, result: str) -> None:
        self.trace.append(TraceStep(step, cite, result))


# ---------------------------------------------------------------------------
# individual criteria
# ---------------------------------------------------------------------------


def free_action_necessary(inst: SpaceFormInstance) -> FreeActionReport:
    """Necessary conditions for ``G`` to act freely on a homotopy ``n``-sphere.

    Passing does not mean such an action exists.
    """
    G, n = inst.group, inst.n
    sylow = periodicity_report(G)
    violations = []
    if n % 2 == 0 and G.order > 2:
        violations.append(TraceStep("even dimension allows only trivial or Z2", "Prop 2.1", f"|G| = {G.order}"))
    if n % 2 == 1:
        bad = sorted(p for p, kind in sylow.items() if kind == "other")
        if bad:
            violations.append(
                TraceStep("Sylow subgroups cyclic or generalized quaternion", "Prop 2.1", f"non-periodic at p = {bad}")
            )
    if n % 4 != 3 and sylow.get(2) == "generalized_quaternion":
        violations.append(TraceStep("quaternion 2-Sylow needs n = 3 mod 4", "Prop 2.8", f"n = {n}"))
    return FreeActionReport(not violations, tuple(violations), sylow)


def homotopy_model(inst: SpaceFormInstance) -> HomotopyModel:
    G, n = inst.group, inst.n
    if not G.is_cyclic:
        raise PreconditionError(f"{G.name} is not cyclic")
    if G.order == 1:
        return HomotopyModel("sphere")
    if n % 2 == 0:
        if G.order != 2:
            raise PreconditionError(f"a cyclic group of order {G.order} cannot act freely in even dimension")
        return HomotopyModel("real_projective")
    return HomotopyModel("lens", G.order, inst.m)


def lens_spin(p: int, m: int) -> bool:
    """Whether a lens space ``S^(2m-1)/Z_p`` is spin."""
    if p < 1 or m < 1:
        raise PreconditionError("p and m must be positive")
    return m % 2 == 0 or p % 2 == 1


def rpn_characteristic(n: int) -> CharacteristicData:
    """``w1(RP^n) = (n+1) a`` and ``w2(RP^n) = n(n+1)/2 a^2`` for even ``n``."""
    if n % 2 or n < 2:
        raise PreconditionError(f"expected an even dimension >= 2, got {n}")
    w1 = (n + 1) % 2
    w2 = (n * (n + 1) // 2) % 2
    return CharacteristicData(w1, w2, spin=(w1 == 0 and w2 == 0))


def spin_structure(inst: SpaceFormInstance) -> CharacteristicData:
    report = free_action_necessary(inst)
    if not report.passed:
        raise PreconditionError(f"{inst.group.name} fails the free-action conditions in dimension {inst.n}")
    G = inst.group
    if G.order == 1:
        return CharacteristicData(0, 0, spin=True)
    if not inst.odd:
        return rpn_characteristic(inst.n)
    spin = inst.m % 2 == 0 or G.order % 2 == 1
    quaternion = report.sylow.get(2) == "generalized_quaternion"
    return CharacteristicData(0, 0 if spin else 1, spin=spin, externally_cited=quaternion)


def psc_exists(inst: SpaceFormInstance) -> str:
    """``"yes"``, ``"no"`` or ``"needs_alpha"``."""
    if inst.n < 5:
        raise PreconditionError(f"existence criterion needs n >= 5, got {inst.n}")
    if inst.n % 8 not in (1, 2) or inst.group.order % 2 == 0:
        return "yes"
    if inst.alpha_vanishes is None:
        return "needs_alpha"
    return "yes" if inst.alpha_vanishes else "no"


def cyclic_generators(G: FiniteGroup) -> list[int]:
    """One generator for each cyclic subgroup of ``G``."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for g in G.elements():
        C = subgroup_closure(G, [g]).elements
        if C not in seen:
            seen.add(C)
            out.append(g)
    return out


def splits_on_cyclic(E: ExtensionGroup, g: int) -> bool:
    """Whether the extension restricted to ``<g>`` splits.

    Over a cyclic group of order ``d`` the extension is either ``Z2 x C_d``
    or ``C_2d``.  For ``d`` odd it always splits; for ``d`` even it splits
    exactly when a lift of ``g`` still has order ``d``.
    """
    d = int(E.base.element_orders[g])
    return d % 2 == 1 or int(E.total.element_orders[E.lift(g)]) == d


def consistent_extension_classes(
    inst: SpaceFormInstance, bound: int = DEFAULT_COHOMOLOGY_BOUND
) -> list[CohomologyClass]:
    """H^2 classes compatible with the lens-space quotients by cyclic subgroups.

    The quotient by ``<g>`` is homotopy equivalent to a lens space, whose
    spin structure (hence the splitting of the restricted extension) is
    forced by ``m`` and ``|<g>|``.
    """
    if not inst.odd:
        raise PreconditionError("consistent extension classes are defined for odd n only")
    if not free_action_necessary(inst).passed:
        raise PreconditionError(f"{inst.group.name} fails the free-action conditions in dimension {inst.n}")
    G = inst.group
    space = cocycle_space(G, bound)
    gens = cyclic_generators(G)
    want_split = inst.m % 2 == 0
    out = []
    for cls in space.classes:
        E = build_extension(G, cls)
        ok = all(
            splits_on_cyclic(E, g) == (want_split or G.element_orders[g] % 2 == 1) for g in gens
        )
        if ok:
            out.append(cls)
    return out


def bg2_witness(E: ExtensionGroup, m: int) -> int | None:
    """First element meeting the conjugacy condition for half-dimension ``m``.

    For ``m`` even: ``g != 1, z`` with neither ``zg`` nor ``zg^-1`` conjugate
    to ``g``.  For ``m`` odd: neither ``zg`` nor ``g^-1`` conjugate to ``g``.
    """
    T = E.total
    cls = class_index(T)
    for g in T.elements():
        zg = E.negate(g)
        if m % 2 == 0:
            if g in (0, E.z):
                continue
            other = E.negate(T.inv(g))
        else:
            other = T.inv(g)
        if cls[zg] != cls[g] and cls[other] != cls[g]:
            return g
    return None


def verify_witness(E: ExtensionGroup, m: int, g: int) -> bool:
    """Re-check a witness by conjugating directly, without the class partition."""
    T = E.total
    if m % 2 == 0 and g in (0, E.z):
        return False
    conjugates = {T.conjugate(x, g) for x in T.elements()}
    zg = T.mul(E.z, g)
    other = T.mul(E.z, T.inv(g)) if m % 2 == 0 else T.inv(g)
    return zg not in conjugates and other not in conjugates


@dataclass(frozen=True)
class Bg3Result:
    applicable: bool
    epsilon: str | None
    characteristic: CharacteristicData | None


def bg3_applicable(inst: SpaceFormInstance) -> Bg3Result:
    """Even ``n = 2m >= 6``, ``G = Z2``, non-orientable, with a Pin^eps structure for eps = sign((-1)^m)."""
    n, G = inst.n, inst.group
    if n % 2 or n < 6 or G.order != 2:
        return Bg3Result(False, None, None)
    ch = rpn_characteristic(n)
    eps = "+" if inst.m % 2 == 0 else "-"
    has_pin = ch.pin_plus if eps == "+" else ch.pin_minus
    return Bg3Result(not ch.orientable and has_pin, eps, ch)


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------


def classify(inst: SpaceFormInstance, bound: int = DEFAULT_COHOMOLOGY_BOUND) -> Verdict:
    """Run every criterion in order and report the outcome with its trace.

    Raises :class:`~spaceform_psc.errors.BoundError` if the H^2 computation
    would exceed ``bound``.
    """
    G, n = inst.group, inst.n
    v = Verdict(Outcome.UNDETERMINED)

    if n < 5:
        v.outcome = Outcome.DIMENSION
        v.note("dimension gate", "Main Theorem", f"n = {n} < 5")
        _attach_characteristic(v, inst)
        return v
    v.note("dimension gate", "Main Theorem", f"n = {n} >= 5")

    if G.order == 1:
        v.outcome = Outcome.SIMPLY_CONNECTED
        v.note("fundamental group", "Main Theorem", "trivial group")
        v.characteristic = CharacteristicData(0, 0, spin=True)
        return v

    report = free_action_necessary(inst)
    if not report.passed:
        v.outcome = Outcome.NOT_SPACE_FORM_GROUP
        v.trace.extend(report.violations)
        return v
    v.note("free action necessary conditions", "Prop 2.1, Prop 2.8", "pass")
    _attach_characteristic(v, inst)

    v.psc = psc_exists(inst)
    v.note("PSC existence", "Theorem B", v.psc)
    if v.psc == "no":
        v.outcome = Outcome.NO_PSC
        return v
    if v.psc == "needs_alpha":
        v.outcome = Outcome.NEEDS_ALPHA
        return v

    if not inst.odd:
        b3 = bg3_applicable(inst)
        v.pin_epsilon = b3.epsilon
        v.note("homotopy model", "Prop 2.3", "real_projective")
        v.note(
            f"Pin{b3.epsilon} structure from w-classes",
            "Stiefel-Whitney Prop (c)/(d)",
            b3.characteristic.describe() if b3.characteristic else "n/a",
        )
        if b3.applicable:
            v.outcome = Outcome.INFINITELY_MANY
            v.theorem = "Thm3.2"
            v.note("non-orientable with Pin^eps, eps = sign((-1)^m)", "Thm 3.2", "applies")
        else:
            v.note("non-orientable with Pin^eps, eps = sign((-1)^m)", "Thm 3.2", "does not apply")
        return v

    kind = report.sylow.get(2, "cyclic")
    v.note("2-Sylow subgroup", "Prop 2.1", kind)
    if G.is_cyclic:
        v.note("homotopy model", "Prop 2.3", str(homotopy_model(inst)))
    v.note("spin structure", "Prop 2.7" + (", Remark" if kind == "generalized_quaternion" else ""),
           "spin" if v.characteristic and v.characteristic.spin else "not spin")

    classes = consistent_extension_classes(inst, bound)
    v.classes_considered = len(classes)
    v.note("extension classes consistent with cyclic restrictions", "Lemma 2.6, lens Lemma", str(len(classes)))
    theorem = "Thm3.1a" if inst.m % 2 == 0 else "Thm3.1b"
    if not classes:
        v.note("no extension class fits the lens-space constraints", "Lemma 2.6", "undetermined")
        return v
    for cls in classes:
        E = build_extension(G, cls)
        g = bg2_witness(E, inst.m)
        if g is None or not verify_witness(E, inst.m, g):
            v.note(f"witness for class {cls.index}", theorem, "none")
            v.witnesses.clear()
            return v
        v.witnesses.append(Witness(cls.index, g, E.total.label(g)))
        v.note(f"witness for class {cls.index}", theorem, E.total.label(g))
    v.outcome = Outcome.INFINITELY_MANY
    v.theorem = theorem
    return v


def _attach_characteristic(v: Verdict, inst: SpaceFormInstance) -> None:
    try:
        v.characteristic = spin_structure(inst)
    except PreconditionError:
        v.characteristic = None
