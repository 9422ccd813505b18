"""Lifting, closure and factorization procedures against brute-force oracles."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modelcat import (
    InputError,
    MorphClass,
    SquareLiftProblem,
    closure_check,
    enumerate_factorizations,
    find_lift,
    has_lifting,
    lifting_closure,
)
from modelcat.morphclass import factor_pairs, retract_pairs


def _mid(cat, name):
    return next(i for i, m in enumerate(cat.morphisms) if m.name == name)


def _all_squares(cat):
    """Every commuting square (i, p, top, bottom), brute force."""
    n = len(cat.morphisms)
    for i in range(n):
        for p in range(n):
            for top in cat.hom(cat.src(i), cat.src(p)):
                for bottom in cat.hom(cat.tgt(i), cat.tgt(p)):
                    if cat.table[p][top] == cat.table[bottom][i]:
                        yield i, p, top, bottom


def _brute_lift(cat, i, p, top, bottom):
    for h in cat.hom(cat.tgt(i), cat.src(p)):
        if cat.table[h][i] == top and cat.table[p][h] == bottom:
            return h
    return None


# -- class algebra ------------------------------------------------------


def test_class_constructors(arrow):
    assert MorphClass.all_maps(arrow).members == frozenset({0, 1, 2})
    assert MorphClass.identities(arrow).members == frozenset({0, 1})
    assert MorphClass.isos(arrow).members == frozenset({0, 1})
    assert MorphClass.empty(arrow).members == frozenset()
    with pytest.raises(InputError):
        MorphClass.of(arrow, [7])


def test_class_algebra(arrow):
    ids = MorphClass.identities(arrow)
    alls = MorphClass.all_maps(arrow)
    assert ids <= alls and ids < alls
    assert (ids | alls).members == alls.members
    assert (ids & alls).members == ids.members
    assert ids.complement().members == {2}
    assert 2 in alls and 2 not in ids
    assert ids.names() == ("id_0", "id_1")


def test_cross_category_algebra_rejected(arrow, diamond):
    with pytest.raises(InputError):
        MorphClass.identities(arrow) | MorphClass.identities(diamond)


# -- squares and lifts --------------------------------------------------


def test_square_validation(arrow):
    f = _mid(arrow, "f")
    # f against f with identity edges commutes
    sq = SquareLiftProblem(arrow, f, f, arrow.identities[0], arrow.identities[1])
    assert find_lift(sq) is None  # no map 1→0
    with pytest.raises(InputError):
        SquareLiftProblem(arrow, f, f, f, arrow.identities[1])  # bad top endpoints


def test_square_commutativity_enforced(chain2):
    f, g = _mid(chain2, "f"), _mid(chain2, "g")
    with pytest.raises(InputError):
        # top edge g∘f against bottom id would not commute
        SquareLiftProblem(chain2, f, g, chain2.identities[1], chain2.identities[2])


@pytest.mark.parametrize("name", ["chain2", "diamond", "retract"])
def test_find_lift_matches_brute_force(name, request):
    cat = request.getfixturevalue(name)
    for i, p, top, bottom in _all_squares(cat):
        got = find_lift(SquareLiftProblem(cat, i, p, top, bottom))
        want = _brute_lift(cat, i, p, top, bottom)
        assert (got is None) == (want is None)
        if got is not None:
            assert cat.comp(got, i) == top and cat.comp(p, got) == bottom


def test_has_lifting_witness(arrow):
    f = _mid(arrow, "f")
    only_f = MorphClass.of(arrow, [f])
    r = has_lifting(only_f, only_f)
    assert not r.passed
    assert r.witness == {"i": f, "p": f, "top": arrow.identities[0], "bottom": arrow.identities[1]}
    assert has_lifting(MorphClass.identities(arrow), MorphClass.all_maps(arrow)).passed


def test_lifting_closure_small(arrow):
    f = _mid(arrow, "f")
    cls = MorphClass.of(arrow, [f])
    # [DERIVED by the brute-force square oracle above]
    assert lifting_closure(arrow, cls, "rlp").members == {0, 1}
    assert lifting_closure(arrow, cls, "llp").members == {0, 1}
    with pytest.raises(InputError):
        lifting_closure(arrow, cls, "sideways")


@pytest.mark.parametrize("name", ["chain2", "diamond"])
def test_lifting_closure_matches_brute_force(name, request):
    cat = request.getfixturevalue(name)
    unliftable = {
        (i, p)
        for i, p, top, bottom in _all_squares(cat)
        if _brute_lift(cat, i, p, top, bottom) is None
    }
    n = len(cat.morphisms)
    for members in itertools.chain.from_iterable(
        itertools.combinations(range(n), r) for r in range(3)
    ):
        cls = MorphClass.of(cat, members)
        want_r = frozenset(
            p for p in range(n) if all((i, p) not in unliftable for i in members)
        )
        want_l = frozenset(
            i for i in range(n) if all((i, p) not in unliftable for p in members)
        )
        assert lifting_closure(cat, cls, "rlp").members == want_r
        assert lifting_closure(cat, cls, "llp").members == want_l


@settings(max_examples=60, deadline=None)
@given(members=st.frozensets(st.integers(min_value=0, max_value=8)))
def test_galois_connection_properties(diamond, members):
    cls = MorphClass(diamond, frozenset(members))
    r = lifting_closure(diamond, cls, "rlp")
    lr = lifting_closure(diamond, r, "llp")
    assert cls.members <= lr.members
    # triple application stabilizes
    assert lifting_closure(diamond, lr, "rlp").members == r.members


@settings(max_examples=40, deadline=None)
@given(
    a=st.frozensets(st.integers(min_value=0, max_value=8)),
    b=st.frozensets(st.integers(min_value=0, max_value=8)),
)
def test_lifting_closure_antitone(diamond, a, b):
    small, big = a & b, a | b
    ra = lifting_closure(diamond, MorphClass(diamond, small), "rlp")
    rb = lifting_closure(diamond, MorphClass(diamond, big), "rlp")
    assert rb.members <= ra.members


@settings(max_examples=40, deadline=None)
@given(members=st.frozensets(st.integers(min_value=0, max_value=8)))
def test_llp_classes_are_saturated(diamond, members):
    cls = MorphClass(diamond, frozenset(members))
    left = lifting_closure(diamond, cls, "llp")
    for prop in ("composition", "retracts", "pushouts"):
        assert closure_check(left, prop).passed, prop
    right = lifting_closure(diamond, cls, "rlp")
    for prop in ("composition", "retracts", "pullbacks"):
        assert closure_check(right, prop).passed, prop


# -- closure checks -----------------------------------------------------


def test_two_of_three(arrow, chain2):
    assert closure_check(MorphClass.identities(arrow), "two_of_three").passed
    f, g, gf = _mid(chain2, "f"), _mid(chain2, "g"), _mid(chain2, "gf")
    w = MorphClass.of(chain2, list(chain2.identity_set | {f, g}))
    r = closure_check(w, "two_of_three")
    assert not r.passed and r.witness == {"f": f, "g": g, "composite": gf}


def test_composition_closure(chain2):
    f, g = _mid(chain2, "f"), _mid(chain2, "g")
    c = MorphClass.of(chain2, list(chain2.identity_set | {f, g}))
    r = closure_check(c, "composition")
    assert not r.passed and r.witness["composite"] == _mid(chain2, "gf")
    assert closure_check(MorphClass.all_maps(chain2), "composition").passed


def test_retract_closure_witness(retract):
    id_a = retract.identities[retract.objects.index("A")]
    e = _mid(retract, "e")
    # brute-force recomputation of the retract relation in the arrow category
    pairs = set()
    for f in range(len(retract.morphisms)):
        for g in range(len(retract.morphisms)):
            if f == g:
                continue
            a, b = retract.src(f), retract.tgt(f)
            a2, b2 = retract.src(g), retract.tgt(g)
            for ia in retract.hom(a, a2):
                for ra in retract.hom(a2, a):
                    for ib in retract.hom(b, b2):
                        for rb in retract.hom(b2, b):
                            if (
                                retract.table[ra][ia] == retract.identities[a]
                                and retract.table[rb][ib] == retract.identities[b]
                                and retract.table[g][ia] == retract.table[ib][f]
                                and retract.table[f][ra] == retract.table[rb][g]
                            ):
                                pairs.add((f, g))
    assert {(f, g) for f, g, _ in retract_pairs(retract)} == pairs
    assert (id_a, e) in pairs  # id_A is a retract of the idempotent

    r = closure_check(MorphClass.of(retract, [e]), "retracts")
    assert not r.passed and r.witness["f"] == id_a and r.witness["g"] == e
    assert closure_check(MorphClass.identities(retract), "retracts").passed


def test_pushout_closure(diamond):
    bot_a = _mid(diamond, "bot_a")
    bot_b = _mid(diamond, "bot_b")
    b_top = _mid(diamond, "b_top")
    cls = MorphClass.of(diamond, list(diamond.identity_set | {bot_a}))
    r = closure_check(cls, "pushouts")
    # the cobase change of bot_a along bot_b is b_top
    assert not r.passed
    assert r.witness == {"f": bot_a, "along": bot_b, "transfer": b_top}
    assert closure_check(MorphClass.all_maps(diamond), "pushouts").passed


def test_unknown_property(arrow):
    with pytest.raises(InputError):
        closure_check(MorphClass.identities(arrow), "monoidal")


# -- factorizations -----------------------------------------------------


def test_factor_pairs_complete(diamond):
    for f in range(len(diamond.morphisms)):
        want = {
            (j, p)
            for j, p, fp in [
                (j, p, diamond.table[p][j])
                for j in range(len(diamond.morphisms))
                for p in range(len(diamond.morphisms))
                if diamond.src(j) == diamond.src(f)
                and diamond.tgt(j) == diamond.src(p)
                and diamond.tgt(p) == diamond.tgt(f)
            ]
            if fp == f
        }
        assert set(factor_pairs(diamond, f)) == want


def test_enumerate_factorizations(arrow):
    f = _mid(arrow, "f")
    alls = MorphClass.all_maps(arrow)
    facts = enumerate_factorizations(arrow, f, alls, alls)
    assert [(x.left, x.middle, x.right) for x in facts] == [
        (arrow.identities[0], 0, f),
        (f, 1, arrow.identities[1]),
    ]
    ids = MorphClass.identities(arrow)
    assert enumerate_factorizations(arrow, f, ids, ids) == []
    only_left = enumerate_factorizations(arrow, f, ids, alls)
    assert [(x.left, x.right) for x in only_left] == [(arrow.identities[0], f)]
