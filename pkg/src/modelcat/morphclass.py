"""Morphism classes and the decision procedures every axiom check reduces to.

All procedures here are exhaustive searches over a finite category, so
they double as the oracles for the constructive proofs in
:mod:`modelcat.extend`.  Expensive enumerations (commuting squares with
no lift, retract pairs, pushout transfers, factorization pairs) are
computed once per category and cached on ``cat.scratch``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .fincat import FinCat, InputError, colimit, limit, opposite


@dataclass(frozen=True)
class MorphClass:
    """A subset of the morphisms of a fixed category."""

    cat: FinCat
    members: frozenset[int]

    def __post_init__(self):
        if any(not (0 <= f < len(self.cat.morphisms)) for f in self.members):
            raise InputError("class members must be morphisms of the category")

    # -- constructors ---------------------------------------------------

    @classmethod
    def of(cls, cat: FinCat, members: Iterable[int]) -> "MorphClass":
        return cls(cat, frozenset(members))

    @classmethod
    def all_maps(cls, cat: FinCat) -> "MorphClass":
        return cls(cat, frozenset(range(len(cat.morphisms))))

    @classmethod
    def identities(cls, cat: FinCat) -> "MorphClass":
        return cls(cat, cat.identity_set)

    @classmethod
    def isos(cls, cat: FinCat) -> "MorphClass":
        return cls(cat, cat.iso_set)

    @classmethod
    def empty(cls, cat: FinCat) -> "MorphClass":
        return cls(cat, frozenset())

    # -- set algebra ----------------------------------------------------

    def __contains__(self, f: int) -> bool:
        return f in self.members

    def __and__(self, other: "MorphClass") -> "MorphClass":
        self._same_cat(other)
        return MorphClass(self.cat, self.members & other.members)

    def __or__(self, other: "MorphClass") -> "MorphClass":
        self._same_cat(other)
        return MorphClass(self.cat, self.members | other.members)

    def __le__(self, other: "MorphClass") -> bool:
        self._same_cat(other)
        return self.members <= other.members

    def __lt__(self, other: "MorphClass") -> bool:
        self._same_cat(other)
        return self.members < other.members

    def complement(self) -> "MorphClass":
        return MorphClass(
            self.cat, frozenset(range(len(self.cat.morphisms))) - self.members
        )

    def names(self) -> tuple[str, ...]:
        return tuple(self.cat.name(f) for f in sorted(self.members))

    def _same_cat(self, other: "MorphClass") -> None:
        if self.cat is not other.cat and self.cat != other.cat:
            raise InputError("classes live over different categories")


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    description: str = ""
    witness: dict | None = None

    @classmethod
    def ok(cls, description: str = "") -> "CheckResult":
        return cls(True, description)

    @classmethod
    def fail(cls, description: str, **witness) -> "CheckResult":
        return cls(False, description, witness)


def combine(*checks: CheckResult) -> CheckResult:
    for c in checks:
        if not c.passed:
            return c
    return CheckResult.ok("; ".join(c.description for c in checks if c.description))


@dataclass(frozen=True)
class SquareLiftProblem:
    """A commuting square i: A→B (left), p: X→Y (right), top: A→X, bottom: B→Y."""

    cat: FinCat
    i: int
    p: int
    top: int
    bottom: int

    def __post_init__(self):
        cat = self.cat
        if cat.src(self.top) != cat.src(self.i) or cat.tgt(self.top) != cat.src(self.p):
            raise InputError("top edge of square has wrong endpoints")
        if cat.src(self.bottom) != cat.tgt(self.i) or cat.tgt(self.bottom) != cat.tgt(self.p):
            raise InputError("bottom edge of square has wrong endpoints")
        if cat.comp(self.p, self.top) != cat.comp(self.bottom, self.i):
            raise InputError("square does not commute")


@dataclass(frozen=True)
class Factorization:
    """f = right∘left through ``middle``."""

    cat: FinCat
    f: int
    left: int
    middle: int
    right: int

    def __post_init__(self):
        if self.cat.comp(self.right, self.left) != self.f:
            raise InputError("not a factorization: right∘left != f")


# -- cached per-category analyses ---------------------------------------


def unliftable_pairs(cat: FinCat) -> dict[tuple[int, int], tuple[int, int]]:
    """For each (i, p) that admits some commuting square with no diagonal
    lift, the least such (top, bottom) witness."""
    cache = cat.scratch
    if "unliftable" not in cache:
        out: dict[tuple[int, int], tuple[int, int]] = {}
        n = len(cat.morphisms)
        for i in range(n):
            for p in range(n):
                hooks = cat.hom(cat.tgt(i), cat.src(p))
                for top in cat.hom(cat.src(i), cat.src(p)):
                    done = False
                    for bottom in cat.hom(cat.tgt(i), cat.tgt(p)):
                        if cat.table[p][top] != cat.table[bottom][i]:
                            continue
                        if not any(
                            cat.table[h][i] == top and cat.table[p][h] == bottom
                            for h in hooks
                        ):
                            out[(i, p)] = (top, bottom)
                            done = True
                            break
                    if done:
                        break
        cache["unliftable"] = out
    return cache["unliftable"]


def retract_pairs(cat: FinCat) -> tuple[tuple[int, int, tuple[int, int, int, int]], ...]:
    """All (f, g, (i_A, r_A, i_B, r_B)) with f != g exhibiting f as a
    retract of g in the arrow category."""
    cache = cat.scratch
    if "retracts" not in cache:
        out = []
        n = len(cat.morphisms)
        for f in range(n):
            a, b = cat.src(f), cat.tgt(f)
            for g in range(n):
                if f == g:
                    continue
                a2, b2 = cat.src(g), cat.tgt(g)
                witness = None
                for ia in cat.hom(a, a2):
                    for ra in cat.hom(a2, a):
                        if cat.table[ra][ia] != cat.identities[a]:
                            continue
                        for ib in cat.hom(b, b2):
                            if cat.table[g][ia] != cat.table[ib][f]:
                                continue
                            for rb in cat.hom(b2, b):
                                if cat.table[rb][ib] != cat.identities[b]:
                                    continue
                                if cat.table[f][ra] != cat.table[rb][g]:
                                    continue
                                witness = (ia, ra, ib, rb)
                                break
                            if witness:
                                break
                        if witness:
                            break
                    if witness:
                        break
                if witness:
                    out.append((f, g, witness))
        cache["retracts"] = tuple(out)
    return cache["retracts"]


def pushout_transfers(cat: FinCat) -> tuple[tuple[int, int, int], ...]:
    """All (f, g, f') where f' is the pushout (cobase change) of f along g,
    over every span (f, g) whose pushout exists."""
    cache = cat.scratch
    if "pushout_transfers" not in cache:
        out = []
        n = len(cat.morphisms)
        for f in range(n):
            for g in range(n):
                if cat.src(f) != cat.src(g):
                    continue
                r = colimit(cat, ("pushout", f, g))
                if r.exists:
                    # legs are (tgt f → P, tgt g → P); the cobase change of
                    # f along g is the leg out of tgt(g)
                    out.append((f, g, r.legs[1]))
        cache["pushout_transfers"] = tuple(out)
    return cache["pushout_transfers"]


def pullback_transfers(cat: FinCat) -> tuple[tuple[int, int, int], ...]:
    """Dual of :func:`pushout_transfers`: (f, g, f') with f' the base
    change of f along g, over cospans with existing pullback."""
    cache = cat.scratch
    if "pullback_transfers" not in cache:
        cache["pullback_transfers"] = pushout_transfers(opposite(cat))
    return cache["pullback_transfers"]


def factor_pairs(cat: FinCat, f: int) -> tuple[tuple[int, int], ...]:
    """All (j, p) with p∘j = f, ordered by (middle object, j, p)."""
    cache = cat.scratch.setdefault("factor_pairs", {})
    if f not in cache:
        out = []
        a, b = cat.src(f), cat.tgt(f)
        for mid in range(len(cat.objects)):
            for j in cat.hom(a, mid):
                for p in cat.hom(mid, b):
                    if cat.table[p][j] == f:
                        out.append((j, p))
        cache[f] = tuple(out)
    return cache[f]


# -- operations ---------------------------------------------------------


def find_lift(problem: SquareLiftProblem) -> int | None:
    """Least-id diagonal of a commuting square, by exhaustive search.

    This is the oracle the constructive lifts are validated against.
    """
    cat = problem.cat
    for h in cat.hom(cat.tgt(problem.i), cat.src(problem.p)):
        if (
            cat.table[h][problem.i] == problem.top
            and cat.table[problem.p][h] == problem.bottom
        ):
            return h
    return None


def has_lifting(left: MorphClass, right: MorphClass) -> CheckResult:
    """Pass iff every commuting square (i ∈ left, p ∈ right) has a lift."""
    left._same_cat(right)
    bad = unliftable_pairs(left.cat)
    for i in sorted(left.members):
        for p in sorted(right.members):
            if (i, p) in bad:
                top, bottom = bad[(i, p)]
                return CheckResult.fail(
                    "square with no lift", i=i, p=p, top=top, bottom=bottom
                )
    return CheckResult.ok("lifting")


def lifting_closure(cat: FinCat, cls: MorphClass, side: str) -> MorphClass:
    """side='rlp': maps with the right lifting property against cls; 'llp' dual."""
    if side not in ("llp", "rlp"):
        raise InputError("side must be 'llp' or 'rlp'")
    bad = unliftable_pairs(cat)
    n = len(cat.morphisms)
    if side == "rlp":
        members = [
            p for p in range(n) if all((i, p) not in bad for i in cls.members)
        ]
    else:
        members = [
            i for i in range(n) if all((i, p) not in bad for p in cls.members)
        ]
    return MorphClass.of(cat, members)


def closure_check(cls: MorphClass, property: str) -> CheckResult:
    """Closure of a class under retracts, composition, pushouts, pullbacks
    or the two-out-of-three rule, with a least-id witness on failure."""
    cat = cls.cat
    mem = cls.members
    if property == "retracts":
        for f, g, (ia, ra, ib, rb) in retract_pairs(cat):
            if g in mem and f not in mem:
                return CheckResult.fail(
                    "not closed under retracts",
                    f=f, g=g, i_A=ia, r_A=ra, i_B=ib, r_B=rb,
                )
        return CheckResult.ok("retracts")
    if property == "composition":
        for f, g, gf in cat.composable_pairs:
            if f in mem and g in mem and gf not in mem:
                return CheckResult.fail(
                    "not closed under composition", f=f, g=g, composite=gf
                )
        return CheckResult.ok("composition")
    if property == "two_of_three":
        for f, g, gf in cat.composable_pairs:
            ins = (f in mem) + (g in mem) + (gf in mem)
            if ins == 2:
                return CheckResult.fail(
                    "two-of-three fails", f=f, g=g, composite=gf
                )
        return CheckResult.ok("two_of_three")
    if property == "pushouts":
        for f, g, fp in pushout_transfers(cat):
            if f in mem and fp not in mem:
                return CheckResult.fail(
                    "not closed under pushouts", f=f, along=g, transfer=fp
                )
        return CheckResult.ok("pushouts")
    if property == "pullbacks":
        for f, g, fp in pullback_transfers(cat):
            if f in mem and fp not in mem:
                return CheckResult.fail(
                    "not closed under pullbacks", f=f, along=g, transfer=fp
                )
        return CheckResult.ok("pullbacks")
    raise InputError(f"unknown closure property {property!r}")


def enumerate_factorizations(
    cat: FinCat, f: int, left: MorphClass, right: MorphClass
) -> list[Factorization]:
    """All factorizations f = p∘j with j ∈ left and p ∈ right, in scan order."""
    return [
        Factorization(cat, f, j, cat.tgt(j), p)
        for j, p in factor_pairs(cat, f)
        if j in left.members and p in right.members
    ]


def has_factorization(
    cat: FinCat, f: int, left: frozenset[int], right: frozenset[int]
) -> bool:
    """Non-emptiness shortcut used by the hypothesis checkers."""
    return any(j in left and p in right for j, p in factor_pairs(cat, f))
