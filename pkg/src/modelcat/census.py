"""Exhaustive enumeration of model structures on a small category.

The naive mode is the oracle: it verifies every candidate triple.  The
pruned mode enumerates only weak-equivalence classes surviving the cheap
closure conditions, derives F by the lifting property, and must return
exactly the same set.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .fincat import FinCat, InputError, is_finitely_bicomplete
from .morphclass import MorphClass, closure_check, lifting_closure
from .modelstruct import ModelStructure, minimal_model_structure, verify_model_structure
from .extend import ExtensionKind, classify_extension

DEFAULT_BUDGET = 2**30


class BudgetExceeded(Exception):
    """The candidate space is larger than the configured budget."""


@dataclass(frozen=True)
class CensusResult:
    cat: FinCat
    mode: str
    structures: tuple[ModelStructure, ...]
    candidates_checked: int
    elapsed: float

    def triples(self) -> set[tuple[frozenset[int], frozenset[int], frozenset[int]]]:
        return {ms.triple() for ms in self.structures}

    def find(self, W, C, F) -> ModelStructure | None:
        for ms in self.structures:
            if ms.triple() == (frozenset(W), frozenset(C), frozenset(F)):
                return ms
        return None


def _subsets(pool: list[int]):
    for r in range(len(pool) + 1):
        yield from (frozenset(c) for c in itertools.combinations(pool, r))


def enumerate_model_structures(
    cat: FinCat, mode: str = "pruned", budget: int | None = None
) -> CensusResult:
    """All model structures on ``cat``, deduplicated by exact class equality.

    Identities are forced into all three classes and isomorphisms into W
    (both hold in every model structure), so the free choices range over
    the remaining morphisms only.
    """
    if mode not in ("naive", "pruned"):
        raise InputError("mode must be 'naive' or 'pruned'")
    if not is_finitely_bicomplete(cat).ok:
        raise InputError("census requires a finitely bicomplete category")
    budget = DEFAULT_BUDGET if budget is None else budget

    t0 = time.monotonic()
    ids = cat.identity_set
    isos = cat.iso_set
    non_id = [f for f in range(len(cat.morphisms)) if f not in ids]
    non_iso = [f for f in range(len(cat.morphisms)) if f not in isos]

    checked = 0
    found: dict[tuple, tuple[frozenset[int], frozenset[int], frozenset[int]]] = {}

    if mode == "naive":
        total = 2 ** (len(non_iso) + 2 * len(non_id))
        if total > budget:
            raise BudgetExceeded(
                f"{total} candidate triples exceed the budget of {budget}"
            )
        for w_extra in _subsets(non_iso):
            W = isos | w_extra
            for c_extra in _subsets(non_id):
                C = ids | c_extra
                for f_extra in _subsets(non_id):
                    F = ids | f_extra
                    checked += 1
                    report = verify_model_structure(
                        cat,
                        MorphClass(cat, W),
                        MorphClass(cat, C),
                        MorphClass(cat, F),
                        stop_at_first=True,
                    )
                    if report.passed:
                        found[(W, C, F)] = (W, C, F)
    else:
        for w_extra in _subsets(non_iso):
            W = MorphClass(cat, isos | w_extra)
            if not closure_check(W, "two_of_three").passed:
                continue
            if not closure_check(W, "retracts").passed:
                continue
            for c_extra in _subsets(non_id):
                C = MorphClass(cat, ids | c_extra)
                if not closure_check(C, "composition").passed:
                    continue
                if not closure_check(C, "retracts").passed:
                    continue
                F = lifting_closure(cat, C & W, "rlp")
                checked += 1
                report = verify_model_structure(cat, W, C, F, stop_at_first=True)
                if report.passed:
                    found[(W.members, C.members, F.members)] = (
                        W.members,
                        C.members,
                        F.members,
                    )

    structures = tuple(
        ModelStructure.build(
            cat, MorphClass(cat, W), MorphClass(cat, C), MorphClass(cat, F)
        )
        for W, C, F in sorted(
            found.values(), key=lambda t: tuple(map(sorted, t))
        )
    )
    for ms in structures:
        assert ms.verified, "census structure failed independent re-verification"
    return CensusResult(cat, mode, structures, checked, time.monotonic() - t0)


def enumerate_extensions(
    census: CensusResult, base: ModelStructure, kind: str
) -> list[ModelStructure]:
    """Census structures whose classification against ``base`` matches."""
    if base.triple() not in census.triples():
        raise InputError("base structure is not part of the census")
    return [
        ms
        for ms in census.structures
        if classify_extension(base, ms).kind == kind
    ]


@dataclass(frozen=True)
class ExtensionGraph:
    census: CensusResult
    nodes: tuple[ModelStructure, ...]
    edges: tuple[tuple[int, int, ExtensionKind], ...]

    @property
    def minimal_index(self) -> int:
        for i, ms in enumerate(self.nodes):
            if ms.W.members == ms.cat.iso_set and len(ms.C.members) == len(
                ms.cat.morphisms
            ) == len(ms.F.members):
                return i
        raise InputError("census does not contain the minimal structure")


def extension_graph(census: CensusResult) -> ExtensionGraph:
    """Directed graph of extension relations between census structures,
    labeled with kind and Bousfield flags.  The minimal structure must
    reach every node through an ll edge; this is asserted."""
    nodes = census.structures
    edges = []
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i == j:
                continue
            k = classify_extension(a, b)
            if k.kind != "other":
                edges.append((i, j, k))
    graph = ExtensionGraph(census, nodes, tuple(edges))
    mi = graph.minimal_index
    reachable = {
        j for i, j, k in edges if i == mi and k.kind == "ll"
    }
    assert reachable == set(range(len(nodes))) - {mi}, (
        "minimal structure does not ll-reach every census structure"
    )
    return graph
