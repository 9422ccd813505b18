"""Finite categories as explicit composition tables, plus their finite (co)limits.

Objects and morphisms are referred to by integer index everywhere; the
string names only matter for file I/O and report rendering.  All computed
(co)limits carry an exhaustively verified universal property, and the
canonical choice among equally valid apexes is the one with the least
object index (then least leg ids), so every downstream construction is
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property


class InputError(Exception):
    """Malformed input file or an ill-formed request (bad ids, bad shape)."""


class MissingLimitError(Exception):
    """A construction needed a (co)limit the category does not have."""


@dataclass(frozen=True)
class Morphism:
    name: str
    src: int
    tgt: int


@dataclass(frozen=True)
class Violation:
    kind: str
    morphisms: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class ConeResult:
    """A colimit or limit with its verified mediating-morphism table.

    ``apex is None`` means the (co)limit does not exist; ``failed_apexes``
    then lists every cocone/cone apex that was tried.  ``mediators`` maps
    each competing (apex, legs) pair to the unique mediating morphism.
    """

    side: str  # "colimit" | "limit"
    kind: str  # initial|terminal|coproduct|product|pushout|pullback
    diagram: tuple[int, ...]
    apex: int | None
    legs: tuple[int, ...]
    mediators: dict[tuple[int, tuple[int, ...]], int]
    failed_apexes: tuple[int, ...] = ()

    @property
    def exists(self) -> bool:
        return self.apex is not None


ColimitResult = ConeResult
LimitResult = ConeResult


@dataclass(frozen=True)
class FinCat:
    """A finite category: objects, morphisms and a total composition table.

    ``identities[x]`` is the identity morphism of object ``x``.
    ``table[g][f]`` is the composite g∘f, or -1 when tgt(f) != src(g).
    Instances are immutable; every cached analysis lives in ``scratch``.
    """

    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identities: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    # -- basic accessors ------------------------------------------------

    def src(self, f: int) -> int:
        return self.morphisms[f].src

    def tgt(self, f: int) -> int:
        return self.morphisms[f].tgt

    def name(self, f: int) -> str:
        return self.morphisms[f].name

    def comp(self, g: int, f: int) -> int:
        """g∘f.  Raises if the pair is not composable."""
        h = self.table[g][f]
        if h < 0:
            raise InputError(
                f"morphisms {self.name(g)} and {self.name(f)} are not composable"
            )
        return h

    def is_identity(self, f: int) -> bool:
        return self.identities[self.src(f)] == f

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self.hom_table.get((a, b), ())

    @cached_property
    def hom_table(self) -> dict[tuple[int, int], tuple[int, ...]]:
        homs: dict[tuple[int, int], list[int]] = {}
        for f, m in enumerate(self.morphisms):
            homs.setdefault((m.src, m.tgt), []).append(f)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def composable_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """All (f, g, g∘f) with tgt(f) = src(g)."""
        out = []
        for f in range(len(self.morphisms)):
            for g in range(len(self.morphisms)):
                h = self.table[g][f]
                if h >= 0:
                    out.append((f, g, h))
        return tuple(out)

    @cached_property
    def identity_set(self) -> frozenset[int]:
        return frozenset(self.identities)

    @cached_property
    def iso_set(self) -> frozenset[int]:
        isos = set()
        for f, m in enumerate(self.morphisms):
            for g in self.hom(m.tgt, m.src):
                if (
                    self.table[g][f] == self.identities[m.src]
                    and self.table[f][g] == self.identities[m.tgt]
                ):
                    isos.add(f)
                    break
        return frozenset(isos)

    @cached_property
    def scratch(self) -> dict:
        """Per-instance cache shared by the analysis modules."""
        return {}


def is_iso(cat: FinCat, f: int) -> bool:
    return f in cat.iso_set


def validate_category(cat: FinCat) -> ValidationReport:
    """Check unit laws, associativity and well-typedness of the table."""
    bad: list[Violation] = []
    n_obj = len(cat.objects)
    n_mor = len(cat.morphisms)

    if len(set(cat.objects)) != n_obj:
        bad.append(Violation("duplicate-object", (), "duplicate object names"))
    names = [m.name for m in cat.morphisms]
    if len(set(names)) != n_mor:
        bad.append(Violation("duplicate-morphism", (), "duplicate morphism names"))
    for f, m in enumerate(cat.morphisms):
        if not (0 <= m.src < n_obj and 0 <= m.tgt < n_obj):
            bad.append(
                Violation("dangling", (f,), f"{m.name} references a missing object")
            )
            return ValidationReport(tuple(bad))
    if len(cat.identities) != n_obj or any(
        not (0 <= i < n_mor) for i in cat.identities
    ):
        bad.append(Violation("identities", (), "identity table malformed"))
        return ValidationReport(tuple(bad))
    for x, i in enumerate(cat.identities):
        if cat.src(i) != x or cat.tgt(i) != x:
            bad.append(
                Violation(
                    "identity-typing",
                    (i,),
                    f"identity of {cat.objects[x]} has wrong endpoints",
                )
            )
    if len(cat.table) != n_mor or any(len(row) != n_mor for row in cat.table):
        bad.append(Violation("table-shape", (), "composition table is not square"))
        return ValidationReport(tuple(bad))

    # entries exist exactly for composable pairs and are well typed
    for g in range(n_mor):
        for f in range(n_mor):
            h = cat.table[g][f]
            composable = cat.tgt(f) == cat.src(g)
            if composable and h < 0:
                bad.append(
                    Violation(
                        "missing-composite",
                        (g, f),
                        f"no entry for {cat.name(g)}∘{cat.name(f)}",
                    )
                )
            elif not composable and h >= 0:
                bad.append(
                    Violation(
                        "spurious-composite",
                        (g, f),
                        f"{cat.name(g)}∘{cat.name(f)} is not composable",
                    )
                )
            elif h >= 0 and (cat.src(h) != cat.src(f) or cat.tgt(h) != cat.tgt(g)):
                bad.append(
                    Violation(
                        "composite-typing",
                        (g, f, h),
                        f"{cat.name(g)}∘{cat.name(f)} = {cat.name(h)} has wrong endpoints",
                    )
                )
    if bad:
        return ValidationReport(tuple(bad))

    for f, m in enumerate(cat.morphisms):
        if cat.table[cat.identities[m.tgt]][f] != f:
            bad.append(
                Violation("unit", (f,), f"id∘{cat.name(f)} != {cat.name(f)}")
            )
        if cat.table[f][cat.identities[m.src]] != f:
            bad.append(
                Violation("unit", (f,), f"{cat.name(f)}∘id != {cat.name(f)}")
            )
    for f, g, gf in cat.composable_pairs:
        for h in range(n_mor):
            if cat.src(h) != cat.tgt(g):
                continue
            if cat.table[h][gf] != cat.table[cat.table[h][g]][f]:
                bad.append(
                    Violation(
                        "associativity",
                        (h, g, f),
                        f"{cat.name(h)}∘({cat.name(g)}∘{cat.name(f)}) != "
                        f"({cat.name(h)}∘{cat.name(g)})∘{cat.name(f)}",
                    )
                )
    return ValidationReport(tuple(bad))


def opposite(cat: FinCat) -> FinCat:
    """Same objects and morphism ids, arrows reversed, table transposed."""
    cache = cat.scratch
    if "op" not in cache:
        morphisms = tuple(Morphism(m.name, m.tgt, m.src) for m in cat.morphisms)
        n = len(cat.morphisms)
        table = tuple(
            tuple(cat.table[f][g] for f in range(n)) for g in range(n)
        )
        cache["op"] = FinCat(cat.objects, morphisms, cat.identities, table)
    return cache["op"]


# -- (co)limits ---------------------------------------------------------

_DUAL_KIND = {
    "initial": "terminal",
    "terminal": "initial",
    "coproduct": "product",
    "product": "coproduct",
    "pushout": "pullback",
    "pullback": "pushout",
}

_COLIMIT_KINDS = ("initial", "coproduct", "pushout")


def _check_shape(cat: FinCat, kind: str, diagram: tuple[int, ...]) -> None:
    if kind == "initial":
        if diagram:
            raise InputError("initial takes no diagram data")
    elif kind == "coproduct":
        if len(diagram) != 2 or any(
            not (0 <= x < len(cat.objects)) for x in diagram
        ):
            raise InputError("coproduct takes two object ids")
    elif kind == "pushout":
        if len(diagram) != 2 or any(
            not (0 <= f < len(cat.morphisms)) for f in diagram
        ):
            raise InputError("pushout takes two morphism ids")
        f, g = diagram
        if cat.src(f) != cat.src(g):
            raise InputError("pushout needs a span: the two maps must share a source")
    else:
        raise InputError(f"unknown colimit kind {kind!r}")


def colimit(cat: FinCat, shape: tuple) -> ConeResult:
    """Canonical colimit of a finite shape, with verified universal property.

    ``shape`` is ("initial",), ("coproduct", X, Y) or ("pushout", f, g)
    where (f, g) is a span out of a common source.
    """
    kind, diagram = shape[0], tuple(shape[1:])
    _check_shape(cat, kind, diagram)
    cache = cat.scratch.setdefault("colimits", {})
    key = (kind, diagram)
    if key in cache:
        return cache[key]

    if kind == "initial":
        boundary: tuple[int, ...] = ()
        constraint = lambda legs: True
    elif kind == "coproduct":
        boundary = diagram
        constraint = lambda legs: True
    else:  # pushout
        f, g = diagram
        boundary = (cat.tgt(f), cat.tgt(g))
        constraint = lambda legs: cat.table[legs[0]][f] == cat.table[legs[1]][g]

    cocones: list[tuple[int, tuple[int, ...]]] = []
    for apex in range(len(cat.objects)):
        for legs in itertools.product(*(cat.hom(b, apex) for b in boundary)):
            if constraint(legs):
                cocones.append((apex, legs))

    result = None
    for apex, legs in cocones:
        mediators: dict[tuple[int, tuple[int, ...]], int] = {}
        universal = True
        for q_apex, q_legs in cocones:
            found = [
                m
                for m in cat.hom(apex, q_apex)
                if all(cat.table[m][legs[i]] == q_legs[i] for i in range(len(legs)))
            ]
            if len(found) != 1:
                universal = False
                break
            mediators[(q_apex, q_legs)] = found[0]
        if universal:
            result = ConeResult("colimit", kind, diagram, apex, legs, mediators)
            break
    if result is None:
        failed = tuple(sorted({apex for apex, _ in cocones}))
        result = ConeResult("colimit", kind, diagram, None, (), {}, failed)
    cache[key] = result
    return result


def limit(cat: FinCat, shape: tuple) -> ConeResult:
    """Canonical limit; computed as the colimit of the dual shape in op(cat)."""
    kind, diagram = shape[0], tuple(shape[1:])
    if kind not in _DUAL_KIND or _DUAL_KIND[kind] not in _COLIMIT_KINDS:
        raise InputError(f"unknown limit kind {kind!r}")
    r = colimit(opposite(cat), (_DUAL_KIND[kind],) + diagram)
    return ConeResult(
        "limit", kind, diagram, r.apex, r.legs, r.mediators, r.failed_apexes
    )


def pushout(cat: FinCat, f: int, g: int) -> ConeResult:
    return colimit(cat, ("pushout", f, g))


def pullback(cat: FinCat, f: int, g: int) -> ConeResult:
    return limit(cat, ("pullback", f, g))


def initial_object(cat: FinCat) -> int | None:
    r = colimit(cat, ("initial",))
    return r.apex


def terminal_object(cat: FinCat) -> int | None:
    r = limit(cat, ("terminal",))
    return r.apex


def point_from_initial(cat: FinCat, x: int) -> int:
    """The unique map ∅→x."""
    r = colimit(cat, ("initial",))
    if not r.exists:
        raise MissingLimitError("no initial object")
    return r.mediators[(x, ())]


def point_to_terminal(cat: FinCat, x: int) -> int:
    """The unique map x→∗."""
    r = limit(cat, ("terminal",))
    if not r.exists:
        raise MissingLimitError("no terminal object")
    return r.mediators[(x, ())]


def fold_map(cat: FinCat, x: int) -> tuple[ConeResult, int]:
    """The coproduct X⊔X and the fold map X⊔X→X induced by (id, id)."""
    cp = colimit(cat, ("coproduct", x, x))
    if not cp.exists:
        raise MissingLimitError(f"no coproduct {cat.objects[x]}⊔{cat.objects[x]}")
    i = cat.identities[x]
    return cp, cp.mediators[(x, (i, i))]


def diagonal_map(cat: FinCat, x: int) -> tuple[ConeResult, int]:
    """The product X×X and the diagonal X→X×X induced by (id, id)."""
    pr = limit(cat, ("product", x, x))
    if not pr.exists:
        raise MissingLimitError(f"no product {cat.objects[x]}×{cat.objects[x]}")
    i = cat.identities[x]
    return pr, pr.mediators[(x, (i, i))]


@dataclass(frozen=True)
class BicompletenessReport:
    missing: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.missing


def is_finitely_bicomplete(cat: FinCat) -> BicompletenessReport:
    """Existence of initial/terminal objects, binary (co)products, pushouts
    and pullbacks, which is all the finite (co)completeness the theorem
    engines consume."""
    cache = cat.scratch
    if "bicomplete" in cache:
        return cache["bicomplete"]
    missing: list[tuple] = []
    if not colimit(cat, ("initial",)).exists:
        missing.append(("initial",))
    if not limit(cat, ("terminal",)).exists:
        missing.append(("terminal",))
    n_obj = len(cat.objects)
    for x in range(n_obj):
        for y in range(x, n_obj):
            if not colimit(cat, ("coproduct", x, y)).exists:
                missing.append(("coproduct", x, y))
            if not limit(cat, ("product", x, y)).exists:
                missing.append(("product", x, y))
    for f in range(len(cat.morphisms)):
        for g in range(f, len(cat.morphisms)):
            if cat.src(f) == cat.src(g) and not colimit(cat, ("pushout", f, g)).exists:
                missing.append(("pushout", f, g))
            if cat.tgt(f) == cat.tgt(g) and not limit(cat, ("pullback", f, g)).exists:
                missing.append(("pullback", f, g))
    report = BicompletenessReport(tuple(missing))
    cache["bicomplete"] = report
    return report


# -- construction helpers ----------------------------------------------


def build_category(
    objects: list[str],
    morphisms: list[tuple[str, str, str]],
    compositions: dict[tuple[str, str], str],
    identity_names: dict[str, str] | None = None,
) -> FinCat:
    """Assemble a FinCat from named data.

    ``morphisms`` lists non-identity morphisms as (name, src, tgt);
    identities are created for every object (named per ``identity_names``
    or ``id_<obj>``) and identity compositions are inferred.
    ``compositions`` maps (g_name, f_name) to the name of g∘f for the
    remaining composable pairs; missing entries surface in validation,
    not here.
    """
    identity_names = identity_names or {}
    obj_index = {o: i for i, o in enumerate(objects)}
    if len(obj_index) != len(objects):
        raise InputError("duplicate object names")

    mors: list[Morphism] = []
    identities: list[int] = []
    for o in objects:
        identities.append(len(mors))
        mors.append(Morphism(identity_names.get(o, f"id_{o}"), obj_index[o], obj_index[o]))
    for name, s, t in morphisms:
        if s not in obj_index:
            raise InputError(f"morphism {name}: unknown source object {s!r}")
        if t not in obj_index:
            raise InputError(f"morphism {name}: unknown target object {t!r}")
        mors.append(Morphism(name, obj_index[s], obj_index[t]))
    mor_index = {m.name: i for i, m in enumerate(mors)}
    if len(mor_index) != len(mors):
        raise InputError("duplicate morphism names")

    n = len(mors)
    table = [[-1] * n for _ in range(n)]
    for x in range(len(objects)):
        i = identities[x]
        for f in range(n):
            if mors[f].tgt == x:
                table[i][f] = f
            if mors[f].src == x:
                table[f][i] = f
    for (g_name, f_name), h_name in compositions.items():
        for nm in (g_name, f_name, h_name):
            if nm not in mor_index:
                raise InputError(f"composition entry references unknown morphism {nm!r}")
        g, f, h = mor_index[g_name], mor_index[f_name], mor_index[h_name]
        if mors[f].tgt != mors[g].src:
            raise InputError(f"composition entry ({g_name},{f_name}) is not composable")
        if table[g][f] not in (-1, h):
            raise InputError(f"conflicting composition entries for ({g_name},{f_name})")
        table[g][f] = h

    return FinCat(
        tuple(objects),
        tuple(mors),
        tuple(identities),
        tuple(tuple(row) for row in table),
    )


def from_poset(elements: list[str], leq) -> FinCat:
    """The thin category of a finite poset: one morphism per pair x ≤ y."""
    below = {
        (a, b) for a in elements for b in elements if leq(a, b)
    }
    morphisms = [
        (f"{a}_to_{b}", a, b) for a in elements for b in elements if a != b and (a, b) in below
    ]
    comps: dict[tuple[str, str], str] = {}
    for a in elements:
        for b in elements:
            for c in elements:
                if a != b and b != c and a != c:
                    if (a, b) in below and (b, c) in below:
                        comps[(f"{b}_to_{c}", f"{a}_to_{b}")] = f"{a}_to_{c}"
    return build_category(list(elements), morphisms, comps)
