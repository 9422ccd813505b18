"""CLI exit-code contract, report payloads, and file round-trips."""

import json

import pytest

from modelcat import load_fixture, parse_category, serialize_category
from modelcat.catio import fixture_path, load_classes, serialize_classes
from modelcat.cli import run
from modelcat.morphclass import MorphClass

FIX = {
    name: str(fixture_path(name))
    for name in (
        "pt.cat",
        "arrow.cat",
        "chain2.cat",
        "diamond.cat",
        "retract.cat",
        "bool3.cat",
        "arrow_all.classes",
        "arrow_minimal.classes",
        "diamond_minimal.classes",
        "diamond_identity.adj",
    )
}


def _json_run(capsys, argv):
    code = run(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# -- exit code 0: passing commands --------------------------------------


def test_validate_pass(capsys):
    code, report = _json_run(capsys, ["validate", FIX["diamond.cat"]])
    assert code == 0
    assert report["verdict"] == "pass" and report["payload"]["violations"] == []


def test_bicomplete_pass(capsys):
    code, report = _json_run(capsys, ["bicomplete", FIX["bool3.cat"]])
    assert code == 0 and report["payload"]["missing"] == []


def test_verify_pass(capsys):
    code, report = _json_run(
        capsys, ["verify", FIX["arrow.cat"], FIX["arrow_minimal.classes"]]
    )
    assert code == 0
    assert all(c["passed"] for c in report["payload"].values())


def test_minimal_pass(capsys):
    code, report = _json_run(capsys, ["minimal", FIX["diamond.cat"]])
    assert code == 0
    assert set(report["payload"]["W"]) == {"id_bot", "id_a", "id_b", "id_top"}
    assert len(report["payload"]["C"]) == 9


def test_properness_pass(capsys):
    for side in ("left", "right"):
        code, _ = _json_run(
            capsys,
            ["properness", FIX["diamond.cat"], FIX["diamond_minimal.classes"], "--side", side],
        )
        assert code == 0


def test_classify_pass(capsys, tmp_path):
    cat = load_fixture("arrow.cat")
    ext = tmp_path / "loc.classes"
    ext.write_text(
        serialize_classes(
            W=MorphClass.all_maps(cat),
            C=MorphClass.identities(cat),
            F=MorphClass.all_maps(cat),
        )
    )
    code, report = _json_run(
        capsys,
        ["classify", FIX["arrow.cat"], FIX["arrow_minimal.classes"], str(ext)],
    )
    assert code == 0
    assert report["payload"]["kind"] == "ll"
    assert report["payload"]["proper_W"] is True
    assert report["payload"]["right_bousfield"] is True


def test_classify_rejects_non_structure(capsys):
    code, report = _json_run(
        capsys,
        [
            "classify",
            FIX["arrow.cat"],
            FIX["arrow_minimal.classes"],
            FIX["arrow_all.classes"],
        ],
    )
    # (W, C, F) = (all, all, all) fails the lifting axiom on the arrow
    assert code == 1
    assert "extension" in report["payload"]["reason"]


def test_quillen_pass(capsys):
    base = [
        "quillen",
        "pair",
        FIX["diamond_identity.adj"],
        "--classes-m",
        FIX["diamond_minimal.classes"],
        "--classes-n",
        FIX["diamond_minimal.classes"],
    ]
    assert run(base + ["--format", "json"]) == 0
    capsys.readouterr()
    base[1] = "equivalence"
    assert run(base) == 0
    capsys.readouterr()
    base[1] = "derived-ff"
    code, report = _json_run(
        capsys,
        base
        + [
            "--ext-m",
            FIX["diamond_minimal.classes"],
            "--ext-n",
            FIX["diamond_minimal.classes"],
            "--side",
            "left",
        ],
    )
    assert code == 0 and report["verdict"] == "pass"


def test_census_pass(capsys):
    code, report = _json_run(capsys, ["census", FIX["pt.cat"]])
    assert code == 0
    assert report["payload"]["count"] == 1
    assert report["payload"]["structures"] == [
        {"W": ["id_x"], "C": ["id_x"], "F": ["id_x"]}
    ]


def test_extend_p14_pass(capsys, tmp_path):
    cat = load_fixture("diamond.cat")
    wg = tmp_path / "wg.classes"
    wg.write_text(serialize_classes(Wg=MorphClass.all_maps(cat)))
    code, report = _json_run(
        capsys,
        [
            "extend",
            FIX["diamond.cat"],
            "--theorem",
            "p1.4",
            "--base",
            FIX["diamond_minimal.classes"],
            "--candidate",
            str(wg),
        ],
    )
    assert code == 0
    assert "structure" in report["payload"]


# -- exit code 1: failing with witness ----------------------------------


def test_minimal_fail_missing_limits(capsys):
    code, report = _json_run(capsys, ["minimal", FIX["retract.cat"]])
    assert code == 1
    assert "bicomplete" in report["payload"]["reason"]


def test_extend_fail_with_named_witness(capsys):
    code, report = _json_run(
        capsys,
        [
            "extend",
            FIX["arrow.cat"],
            "--theorem",
            "1.2",
            "--base",
            FIX["arrow_minimal.classes"],
            "--candidate",
            FIX["arrow_all.classes"],
        ],
    )
    assert code == 1
    hyp7 = report["payload"]["hypotheses"]["7"]
    assert not hyp7["passed"]
    assert hyp7["witness"] == {"i": "f", "p": "f", "top": "id_0", "bottom": "id_1"}


def test_verify_fail(capsys, tmp_path):
    cat = load_fixture("arrow.cat")
    bad = tmp_path / "bad.classes"
    ids = MorphClass.identities(cat)
    bad.write_text(serialize_classes(W=MorphClass.all_maps(cat), C=ids, F=ids))
    code, report = _json_run(capsys, ["verify", FIX["arrow.cat"], str(bad)])
    assert code == 1
    assert not report["payload"]["factor_trivcof_fib"]["passed"]


def test_validate_fail(capsys, tmp_path):
    broken = tmp_path / "broken.cat"
    broken.write_text(
        json.dumps(
            {
                "objects": ["x", "y", "z"],
                "morphisms": [
                    {"name": "f", "src": "x", "tgt": "y"},
                    {"name": "g", "src": "y", "tgt": "z"},
                    {"name": "h", "src": "x", "tgt": "z"},
                ],
                "compose": [],
            }
        )
    )
    code, report = _json_run(capsys, ["validate", str(broken)])
    assert code == 1
    kinds = {v["kind"] for v in report["payload"]["violations"]}
    assert kinds == {"missing-composite"}


# -- exit code 2: input and usage errors --------------------------------


def test_unknown_subcommand(capsys):
    assert run(["frobnicate", FIX["pt.cat"]]) == 2
    capsys.readouterr()


def test_no_arguments(capsys):
    assert run([]) == 2
    capsys.readouterr()


def test_bad_json_input(capsys, tmp_path):
    mangled = tmp_path / "mangled.cat"
    mangled.write_text("{not json")
    assert run(["validate", str(mangled)]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_missing_file(capsys, tmp_path):
    assert run(["validate", str(tmp_path / "nope.cat")]) == 2
    capsys.readouterr()


def test_missing_class_key(capsys, tmp_path):
    partial = tmp_path / "partial.classes"
    partial.write_text(json.dumps({"W": ["id_0", "id_1"]}))
    assert run(["verify", FIX["arrow.cat"], str(partial)]) == 2
    capsys.readouterr()


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("MCX_BUDGET", "2")
    assert run(["census", FIX["arrow.cat"], "--mode", "naive"]) == 2
    capsys.readouterr()
    monkeypatch.setenv("MCX_BUDGET", "many")
    assert run(["census", FIX["arrow.cat"]]) == 2
    capsys.readouterr()


def test_text_format_smoke(capsys):
    assert run(["minimal", FIX["arrow.cat"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("minimal: pass")


# -- round trips --------------------------------------------------------


@pytest.mark.parametrize(
    "name", ["pt.cat", "arrow.cat", "chain2.cat", "diamond.cat", "retract.cat", "bool3.cat"]
)
def test_category_round_trip(name):
    cat = load_fixture(name)
    again = parse_category(serialize_category(cat))
    assert again == cat
    assert serialize_category(again) == serialize_category(cat)


def test_classes_round_trip(tmp_path):
    cat = load_fixture("diamond.cat")
    classes = load_classes(FIX["diamond_minimal.classes"], cat)
    text = serialize_classes(**classes)
    path = tmp_path / "again.classes"
    path.write_text(text)
    again = load_classes(path, cat)
    assert {k: v.members for k, v in again.items()} == {
        k: v.members for k, v in classes.items()
    }
