"""Model-structure axioms, cylinder/path objects, minimal structure, homotopy category."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .fincat import (
    FinCat,
    InputError,
    MissingLimitError,
    colimit,
    diagonal_map,
    fold_map,
    is_finitely_bicomplete,
    limit,
    point_from_initial,
    point_to_terminal,
)
from .morphclass import (
    CheckResult,
    MorphClass,
    closure_check,
    combine,
    factor_pairs,
    has_factorization,
    has_lifting,
)

AXIOM_NAMES = (
    "two_of_three_W",
    "retracts_W",
    "retracts_C",
    "retracts_F",
    "lift_trivcof_fib",
    "lift_cof_trivfib",
    "factor_trivcof_fib",
    "factor_cof_trivfib",
)


@dataclass(frozen=True)
class AxiomReport:
    checks: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def first_failure(self) -> tuple[str, CheckResult] | None:
        for name, c in self.checks.items():
            if not c.passed:
                return name, c
        return None


def verify_model_structure(
    cat: FinCat,
    W: MorphClass,
    C: MorphClass,
    F: MorphClass,
    stop_at_first: bool = False,
) -> AxiomReport:
    """Per-axiom verdicts for (W, C, F) being a Quillen model structure.

    Witnesses are minimal in id order, so failures reproduce across runs.
    With ``stop_at_first`` the report only contains checks up to the first
    failure (used by the exhaustive scans).
    """
    trivcof = W.members & C.members
    trivfib = W.members & F.members

    def checks():
        yield "two_of_three_W", lambda: closure_check(W, "two_of_three")
        yield "retracts_W", lambda: closure_check(W, "retracts")
        yield "retracts_C", lambda: closure_check(C, "retracts")
        yield "retracts_F", lambda: closure_check(F, "retracts")
        yield "lift_trivcof_fib", lambda: has_lifting(MorphClass(cat, trivcof), F)
        yield "lift_cof_trivfib", lambda: has_lifting(C, MorphClass(cat, trivfib))
        yield "factor_trivcof_fib", lambda: _factor_check(cat, trivcof, F.members)
        yield "factor_cof_trivfib", lambda: _factor_check(cat, C.members, trivfib)

    out: dict[str, CheckResult] = {}
    for name, run in checks():
        result = run()
        out[name] = result
        if stop_at_first and not result.passed:
            break
    return AxiomReport(out)


def _factor_check(cat: FinCat, left: frozenset[int], right: frozenset[int]) -> CheckResult:
    for f in range(len(cat.morphisms)):
        if not has_factorization(cat, f, left, right):
            return CheckResult.fail("morphism admits no factorization", f=f)
    return CheckResult.ok("factorization")


@dataclass(frozen=True)
class ModelStructure:
    cat: FinCat
    W: MorphClass
    C: MorphClass
    F: MorphClass
    report: AxiomReport | None = None

    @classmethod
    def build(cls, cat: FinCat, W: MorphClass, C: MorphClass, F: MorphClass) -> "ModelStructure":
        return cls(cat, W, C, F, verify_model_structure(cat, W, C, F))

    @property
    def verified(self) -> bool:
        return self.report is not None and self.report.passed

    def triple(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.W.members, self.C.members, self.F.members)


def minimal_model_structure(cat: FinCat) -> ModelStructure:
    """W = isomorphisms, C = F = all maps; verification must pass."""
    bic = is_finitely_bicomplete(cat)
    if not bic.ok:
        raise MissingLimitError(
            f"category is not finitely bicomplete; missing: {bic.missing}"
        )
    ms = ModelStructure.build(
        cat, MorphClass.isos(cat), MorphClass.all_maps(cat), MorphClass.all_maps(cat)
    )
    if not ms.verified:
        raise AssertionError(
            f"minimal structure failed verification: {ms.report.first_failure()}"
        )
    return ms


def boundary_objects(ms: ModelStructure, side: str) -> frozenset[int]:
    """cofibrant: ∅→X is a cofibration; fibrant: X→∗ is a fibration."""
    cat = ms.cat
    if side == "cofibrant":
        return frozenset(
            x
            for x in range(len(cat.objects))
            if point_from_initial(cat, x) in ms.C.members
        )
    if side == "fibrant":
        return frozenset(
            x
            for x in range(len(cat.objects))
            if point_to_terminal(cat, x) in ms.F.members
        )
    raise InputError("side must be 'cofibrant' or 'fibrant'")


@dataclass(frozen=True)
class CylinderObject:
    """Cylinder (or path) data for one object.

    cylinder: X⊔X --structure_map--> Cyl --collapse--> X factors the fold
    map, with structure_map in the left class and collapse in the right.
    path side is dual: X --collapse--> Path --structure_map--> X×X.
    """

    side: str  # "cylinder" | "path"
    x: int
    middle: int
    structure_map: int
    collapse: int
    power_object: int  # X⊔X resp. X×X
    power_legs: tuple[int, int]  # coproduct injections resp. product projections


def find_cylinder(
    cat: FinCat, left: MorphClass, right: MorphClass, x: int, side: str = "cylinder"
) -> CylinderObject | None:
    """First factorization of the fold (resp. diagonal) map of ``x`` whose
    parts land in the given classes; for the path side pass (W, F) and the
    factorization read is diagonal = (right part)∘(left part)."""
    if side == "cylinder":
        cp, fold = fold_map(cat, x)
        for j, p in factor_pairs(cat, fold):
            if j in left.members and p in right.members:
                return CylinderObject(
                    "cylinder", x, cat.tgt(j), j, p, cp.apex, (cp.legs[0], cp.legs[1])
                )
        return None
    if side == "path":
        pr, diag = diagonal_map(cat, x)
        for s, q in factor_pairs(cat, diag):
            if s in left.members and q in right.members:
                return CylinderObject(
                    "path", x, cat.tgt(s), q, s, pr.apex, (pr.legs[0], pr.legs[1])
                )
        return None
    raise InputError("side must be 'cylinder' or 'path'")


# -- homotopy category --------------------------------------------------


@dataclass(frozen=True)
class HoCategory:
    """Quotient of the cofibrant-fibrant objects by left homotopy."""

    ms: ModelStructure
    objects: tuple[int, ...]
    homs: dict[tuple[int, int], tuple[frozenset[int], ...]]

    def cls_of(self, f: int) -> frozenset[int]:
        cat = self.ms.cat
        for c in self.homs[(cat.src(f), cat.tgt(f))]:
            if f in c:
                return c
        raise InputError("morphism is not between cofibrant-fibrant objects")

    def compose(self, g_cls: frozenset[int], f_cls: frozenset[int]) -> frozenset[int]:
        cat = self.ms.cat
        f, g = min(f_cls), min(g_cls)
        return self.cls_of(cat.comp(g, f))


def _all_cylinders(ms: ModelStructure, x: int):
    """Every (C, W) factorization of the fold map of x."""
    cat = ms.cat
    cp, fold = fold_map(cat, x)
    for j, p in factor_pairs(cat, fold):
        if j in ms.C.members and p in ms.W.members:
            yield cp, j, p


def left_homotopic(ms: ModelStructure, f: int, g: int) -> bool:
    """f ~ g via some cylinder object of the shared source."""
    cat = ms.cat
    if cat.src(f) != cat.src(g) or cat.tgt(f) != cat.tgt(g):
        raise InputError("morphisms must be parallel")
    x, y = cat.src(f), cat.tgt(f)
    for cp, j, p in _all_cylinders(ms, x):
        i0 = cat.comp(j, cp.legs[0])
        i1 = cat.comp(j, cp.legs[1])
        for h in cat.hom(cat.tgt(j), y):
            if cat.table[h][i0] == f and cat.table[h][i1] == g:
                return True
    return False


def right_homotopic(ms: ModelStructure, f: int, g: int) -> bool:
    """f ~ g via some path object of the shared target."""
    cat = ms.cat
    x, y = cat.src(f), cat.tgt(f)
    pr, diag = diagonal_map(cat, y)
    for s, q in factor_pairs(cat, diag):
        if s in ms.W.members and q in ms.F.members:
            p0 = cat.comp(pr.legs[0], q)
            p1 = cat.comp(pr.legs[1], q)
            for h in cat.hom(x, cat.tgt(s)):
                if cat.table[p0][h] == f and cat.table[p1][h] == g:
                    return True
    return False


def homotopy_category(ms: ModelStructure) -> HoCategory:
    """Objects: cofibrant-fibrant objects; homs: left-homotopy classes.

    A verified model structure guarantees the relation is an equivalence
    compatible with composition; this is asserted, and any violation is
    surfaced as an internal consistency failure.
    """
    if not ms.verified:
        raise InputError("homotopy category requires a verified model structure")
    cat = ms.cat
    objs = tuple(
        sorted(boundary_objects(ms, "cofibrant") & boundary_objects(ms, "fibrant"))
    )
    obj_set = set(objs)
    homs: dict[tuple[int, int], tuple[frozenset[int], ...]] = {}
    for a in objs:
        for b in objs:
            maps = list(cat.hom(a, b))
            rel = {
                (f, g): left_homotopic(ms, f, g) for f in maps for g in maps
            }
            for f in maps:
                assert rel[(f, f)], "homotopy relation not reflexive"
                for g in maps:
                    assert rel[(f, g)] == rel[(g, f)], "homotopy relation not symmetric"
                    assert rel[(f, g)] == right_homotopic(ms, f, g), (
                        "left/right homotopy disagree on cofibrant-fibrant objects"
                    )
                    for h in maps:
                        if rel[(f, g)] and rel[(g, h)]:
                            assert rel[(f, h)], "homotopy relation not transitive"
            classes: list[frozenset[int]] = []
            seen: set[int] = set()
            for f in maps:
                if f in seen:
                    continue
                c = frozenset(g for g in maps if rel[(f, g)])
                seen |= c
                classes.append(c)
            homs[(a, b)] = tuple(classes)

    # composition must be well-defined on classes
    for f, g, gf in cat.composable_pairs:
        a, b, c = cat.src(f), cat.tgt(f), cat.tgt(g)
        if a in obj_set and b in obj_set and c in obj_set:
            for f2 in cat.hom(a, b):
                for g2 in cat.hom(b, c):
                    if left_homotopic(ms, f, f2) and left_homotopic(ms, g, g2):
                        assert left_homotopic(ms, gf, cat.comp(g2, f2)), (
                            "composition not well-defined on homotopy classes"
                        )
    return HoCategory(ms, objs, homs)
