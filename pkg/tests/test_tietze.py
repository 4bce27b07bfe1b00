"""Tietze moves: solved forms, eliminations, seeds, scripted chains.

solve_for gets its contract checked directly (the relator is freely
equal, up to rotation, to target times the inverse of the solved form);
the certified word-level rewrites must refuse to run without their
witness relators; the five scripted chains must land on the reference
presentations and generator counts.
"""

import pytest

from braidsub.errors import BadRank, NotSolvable, ScriptPreconditionFailed
from braidsub.presets import (
    FamilyInstance,
    GeneratorFamily,
    Presentation,
    derived_presentation,
    generator_count,
    vb3_final_presentation,
    wb3_final_presentation,
)
from braidsub.rewriting import template_canon_key
from braidsub.tietze import (
    SCRIPTS,
    diff_presentations,
    drop_relator,
    eliminate,
    eliminate_family,
    flip_g_letter,
    observe_unbounded,
    reduce_family_to_seeds,
    rotate_relator,
    run_script,
    solve_for,
    torsion_cleanup,
    torsion_reduce_relator,
)
from braidsub.words import TemplateWord, parse_template, print_template


def test_solve_for_frozen():
    t = parse_template("f(m,0) f(m,1)")
    assert print_template(solve_for(t, "f", (1,))) == "f(m,0)^-1"
    t = parse_template("f(m,0)^-1 f(m+1,0) b(m,0)^-1")
    assert print_template(solve_for(t, "b", (0,))) == "f(m,0)^-1 f(m+1,0)"
    t = parse_template("f(m,0) a(m) f(m+1,0)^-1 b(m,1)^-1")
    assert print_template(solve_for(t, "b", (1,))) == "f(m,0) a(m) f(m+1,0)^-1"
    t = parse_template("g(m+1,3) a(m)^-1 g(m,3)")
    assert print_template(solve_for(t, "a")) == "g(m,3) g(m+1,3)"


def test_solve_for_contract():
    # relator conjugate, as a cyclic word, to target * solved^-1
    cases = [
        ("f(m,0) a(m) f(m+1,0)^-1 b(m,1)^-1", "b", (1,)),
        ("f(m,0)^-1 f(m+1,0) b(m,0)^-1", "b", (0,)),
        ("g(m+1,3) a(m)^-1 g(m,3)", "a", ()),
        ("b(m,1) a(m+1) f(m+2,0)^-1 b(m,0)^-1", "a", ()),
    ]
    for text, family, fixed in cases:
        t = parse_template(text)
        w = solve_for(t, family, fixed)
        assert not any(fam == family and tuple(v for _, v in exprs[1:]) == fixed
                       for fam, exprs, _ in w.letters)
    t = parse_template("f(m,0) a(m) f(m+1,0)^-1 b(m,1)^-1")
    w = solve_for(t, "b", (1,))
    target = TemplateWord((("b", (("m", 0), (None, 1)), 1),))
    assert template_canon_key(target * w.inverse()) == template_canon_key(t)


def test_solve_for_rejects_multiple_occurrences():
    with pytest.raises(NotSolvable):
        solve_for(parse_template("f(m,0) f(m,0) f(m,0)"), "f", (0,))
    with pytest.raises(NotSolvable):
        solve_for(parse_template("f(m,0) a(m)"), "b", (0,))


def test_eliminate_family_basics():
    p = derived_presentation("vb", 3)
    p1, rec = eliminate_family(p, "b", (1,), "f-a-step-b1")
    assert rec["op"] == "eliminate"
    assert rec["replacement"] == "f(m,0) a(m) f(m+1,0)^-1"
    assert all(not (g.family == "b" and g.fixed == (1,)) for g in p1.generators)
    for inst in p1.relators:
        for fam, exprs, _ in inst.template.letters:
            assert not (fam == "b" and exprs[1] == (None, 1))
    assert any(
        fam == "b"
        for inst in p1.relators
        for fam, _, _ in inst.template.letters
    )
    assert eliminate is eliminate_family
    # the defining relator is gone
    assert all(inst.label != "f-a-step-b1" for inst in p1.relators)
    # a second elimination has nothing left to solve for
    with pytest.raises(NotSolvable):
        eliminate_family(p1, "b", (1,), "f-step-b0")
    with pytest.raises(ScriptPreconditionFailed):
        eliminate_family(p1, "b", (0,), "no-such-label")


def test_eliminate_produces_reference_templates():
    p = derived_presentation("vb", 3)
    p, _ = eliminate_family(p, "b", (1,), "f-a-step-b1")
    p, _ = eliminate_family(p, "b", (0,), "f-step-b0")
    texts = {inst.label: print_template(inst.template) for inst in p.relators}
    assert texts["b0-recurrence"] == (
        "f(m+1,0)^-1 f(m+2,0) f(m+3,0)^-1 f(m+2,0) f(m+1,0)^-1 f(m,0)"
    )
    assert texts["b1-recurrence"] == (
        "a(m) f(m+1,0) a(m+1) f(m+2,0)^-1 a(m+2) f(m+3,0) a(m+2)^-1"
        " f(m+2,0)^-1 a(m+1)^-1 f(m+1,0) a(m)^-1 f(m,0)^-1"
    )
    assert texts["f-cube"] == "f(m,0) f(m,0) f(m,0)"
    assert set(texts) == {"b0-recurrence", "b1-recurrence", "f-cube"}


def test_eliminate_absent_generator_is_a_pure_deletion():
    p = Presentation(
        "vb",
        3,
        (GeneratorFamily("a"), GeneratorFamily("f", (0,))),
        (
            FamilyInstance("def", parse_template("a(m) f(m,0)^-1 f(m+1,0)")),
            FamilyInstance("keep", parse_template("f(m,0) f(m,0) f(m,0)")),
        ),
    )
    p1, _ = eliminate_family(p, "a", (), "def")
    assert [g.family for g in p1.generators] == ["f"]
    assert [inst.label for inst in p1.relators] == ["keep"]
    assert print_template(p1.relators[0].template) == "f(m,0) f(m,0) f(m,0)"


def test_eliminate_rejects_self_referential_solutions():
    p = Presentation(
        "vb",
        3,
        (GeneratorFamily("a"),),
        (FamilyInstance("bad", parse_template("a(m) a(m+1)^-1 a(m+2)")),),
    )
    with pytest.raises(NotSolvable):
        eliminate_family(p, "a", (), "bad")


def test_seeds_and_preconditions():
    # a recurrence resting on an unreduced family is refused
    leaning = Presentation(
        "vb",
        3,
        (GeneratorFamily("a"), GeneratorFamily("f", (0,))),
        (FamilyInstance("r", parse_template("f(m,0) a(m) f(m+1,0)^-1")),),
    )
    with pytest.raises(ScriptPreconditionFailed):
        reduce_family_to_seeds(leaning, "f", (0,), "r")
    p = derived_presentation("vb", 3)
    # before the b eliminations the recurrence does not mention f at all
    with pytest.raises(NotSolvable):
        reduce_family_to_seeds(p, "f", (0,), "b0-recurrence")
    p, _ = eliminate_family(p, "b", (1,), "f-a-step-b1")
    p, _ = eliminate_family(p, "b", (0,), "f-step-b0")
    p1, rec = reduce_family_to_seeds(p, "f", (0,), "b0-recurrence")
    assert rec["seeds"] == [0, 1, 2]
    fgen = [g for g in p1.generators if g.family == "f"][0]
    assert fgen.basis == (0, 1, 2)
    # the a recurrence has its extreme offsets doubled, so it pins nothing
    p2, rec = observe_unbounded(p1, "a", (), "b1-recurrence")
    assert p2 == p1
    assert "unbounded" in rec["text"]
    with pytest.raises(ScriptPreconditionFailed):
        observe_unbounded(p1, "f", (0,), "b0-recurrence")


def test_drop_relator():
    p = derived_presentation("wb", 3)
    p1, rec = drop_relator(p, "welded-a-f-inverse", "duplicate")
    assert rec["kept"] == "welded-a-f"
    assert all(inst.label != "welded-a-f-inverse" for inst in p1.relators)
    with pytest.raises(ScriptPreconditionFailed):
        drop_relator(p1, "welded-a-f", "duplicate")
    with pytest.raises(ScriptPreconditionFailed):
        drop_relator(p1, "f-cube", "trivial")
    with pytest.raises(ScriptPreconditionFailed):
        drop_relator(p1, "f-cube", "because")


def test_rotate_relator():
    p = Presentation(
        "vb",
        3,
        (GeneratorFamily("a"), GeneratorFamily("f", (0,))),
        (FamilyInstance("r", parse_template("a(m) f(m,0)^-1 f(m+1,0)")),),
    )
    p1, _ = rotate_relator(p, "r", 1)
    assert print_template(p1.relators[0].template) == "f(m,0)^-1 f(m+1,0) a(m)"
    p2, _ = rotate_relator(p1, "r", 2)
    assert print_template(p2.relators[0].template) == "a(m) f(m,0)^-1 f(m+1,0)"


def test_torsion_merge_needs_witnesses():
    gens = (GeneratorFamily("a"), GeneratorFamily("f", (0,)))
    with_cube = Presentation(
        "vb",
        3,
        gens,
        (
            FamilyInstance("cube", parse_template("f(m,0) f(m,0) f(m,0)")),
            FamilyInstance("r", parse_template("f(m,0) f(m,0) a(m)")),
        ),
    )
    p1, rec = torsion_reduce_relator(with_cube, "r")
    texts = {inst.label: print_template(inst.template) for inst in p1.relators}
    assert texts["r"] == "f(m,0)^-1 a(m)"
    assert texts["cube"] == "f(m,0) f(m,0) f(m,0)"
    without_cube = Presentation(
        "vb",
        3,
        gens,
        (FamilyInstance("r", parse_template("f(m,0) f(m,0) a(m)")),),
    )
    with pytest.raises(ScriptPreconditionFailed):
        torsion_reduce_relator(without_cube, "r")
    # a merge that changes nothing needs no witness
    untouched = Presentation(
        "vb", 3, gens, (FamilyInstance("r", parse_template("f(m,0) a(m)")),)
    )
    p2, rec = torsion_reduce_relator(untouched, "r")
    assert p2 == untouched
    assert "no change" in rec["text"]


def test_torsion_cleanup_keeps_witnesses():
    gens = (
        GeneratorFamily("a"),
        GeneratorFamily("f", (0,)),
        GeneratorFamily("g", (3,)),
    )
    p = Presentation(
        "vb",
        4,
        gens,
        (
            FamilyInstance("cube", parse_template("f(m,0) f(m,0) f(m,0)")),
            FamilyInstance("square", parse_template("g(m,3) g(m,3)")),
            FamilyInstance("r", parse_template("f(m,0) f(m,0) f(m,0) g(m,3)")),
            FamilyInstance("s", parse_template("f(m,0) a(m)")),
            FamilyInstance("s-inverse", parse_template("a(m)^-1 f(m,0)^-1")),
        ),
    )
    p1, rec = torsion_cleanup(p)
    labels = [inst.label for inst in p1.relators]
    assert "cube" in labels
    assert "square" in labels
    assert "s" in labels
    assert "s-inverse" not in labels  # duplicate of s modulo inversion
    texts = {inst.label: print_template(inst.template) for inst in p1.relators}
    assert texts["r"] == "g(m,3)"
    assert "1 families dropped" in rec["text"]
    assert [sub["label"] for sub in rec["sub"] if sub["op"] == "drop"] == ["s-inverse"]


def test_flip_g_letter_precondition():
    p = Presentation(
        "vb",
        4,
        (GeneratorFamily("f", (0,)), GeneratorFamily("g", (3,))),
        (
            FamilyInstance("square", parse_template("g(m,3) g(m,3)")),
            FamilyInstance("r", parse_template("f(m,0) g(m,3)")),
        ),
    )
    with pytest.raises(ScriptPreconditionFailed):
        flip_g_letter(p, "r", 0)
    p2 = Presentation(
        "vb",
        4,
        p.generators,
        (
            FamilyInstance("square", parse_template("g(m,3) g(m,3)")),
            FamilyInstance("r", parse_template("f(m,0) g(m,3)^-1")),
        ),
    )
    p3, rec = flip_g_letter(p2, "r", 0)
    texts = {inst.label: print_template(inst.template) for inst in p3.relators}
    assert texts["r"] == "f(m,0) g(m,3)"
    assert "square" in rec["text"]


def test_script_vb3():
    res = run_script("VB3_REDUCE")
    assert res.name == "VB3_REDUCE"
    assert res.diff is not None and res.diff["agree"]
    assert diff_presentations(res.final, vb3_final_presentation())["agree"]
    assert not res.summary.finite
    assert res.summary.unbounded == ("a(m)",)
    assert res.summary.names == ("f(0,0)", "f(1,0)", "f(2,0)")


def test_script_vbn_counts():
    for n, count in ((4, 5), (5, 7), (6, 9), (7, 11)):
        res = run_script("VBN_REDUCE", n)
        assert res.summary.finite
        assert res.summary.count == count
    res = run_script("VBN_REDUCE", 4)
    assert res.summary.names == ("c(3)", "f(0,0)", "f(1,0)", "f(2,0)", "g(0,3)")
    with pytest.raises(BadRank):
        run_script("VBN_REDUCE", 3)


def test_script_wb3():
    res = run_script("WB3_REDUCE")
    assert res.diff is not None and res.diff["agree"]
    assert diff_presentations(res.final, wb3_final_presentation())["agree"]
    assert res.summary.finite
    assert res.summary.count == 4
    assert res.summary.names == ("a(0)", "f(0,0)", "f(1,0)", "f(2,0)")


def test_script_wb4():
    res = run_script("WB4_REDUCE")
    assert res.summary.finite
    assert res.summary.count == 4
    assert res.summary.names == ("c(3)", "f(0,0)", "f(1,0)", "f(2,0)")
    # the derived chain lands near the stated list but not on it; the
    # differences are reported, not reconciled
    assert res.diff is not None and not res.diff["agree"]
    assert len(res.diff["extra"]) == 7
    assert len(res.diff["missing"]) == 6


def test_script_wbn_counts():
    for n in (5, 6):
        res = run_script("WBN_REDUCE", n)
        assert res.summary.finite
        assert res.summary.count == n
    res = run_script("WBN_REDUCE", 5)
    assert res.summary.names == ("c(3)", "c(4)", "f(0,0)", "f(1,0)", "f(2,0)")


def test_scripts_are_deterministic():
    a = run_script("WB4_REDUCE")
    b = run_script("WB4_REDUCE")
    assert a.records() == b.records()
    assert a.final == b.final


def test_run_script_validation():
    assert set(SCRIPTS) == {"VB3_REDUCE", "VBN_REDUCE", "WB3_REDUCE", "WB4_REDUCE", "WBN_REDUCE"}
    with pytest.raises(ScriptPreconditionFailed):
        run_script("NOPE")
    with pytest.raises(BadRank):
        run_script("VB3_REDUCE", 4)
    with pytest.raises(BadRank):
        run_script("WBN_REDUCE", 4)
