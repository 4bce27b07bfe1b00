"""Certified presentation simplification steps and the named scripts.

Every operation here is a Tietze move on a parametric presentation:

* ``eliminate_family`` removes a generator family through a defining
  relator family that mentions it exactly once;
* ``reduce_family_to_seeds`` records that a recurrence family expresses
  a generator family from finitely many seeds (two-sided, so it is a
  generating-set statement, not a relator change);
* the word-level rewrites (``rotate_relator``, ``flip_g_letter``,
  ``braid_flip``, ``rewrite_letter``, ``torsion_reduce_relator``) only
  ever multiply a relator by conjugated instances of families that are
  present in the presentation, so the normal closure is untouched; the
  insertion sequences are constructed explicitly and the final template
  is asserted against the intended shape;
* ``drop_relator`` removes a relator that is freely trivial or a
  cyclic-canonical duplicate of another one that stays.

Scripts chain these steps and keep a transcript with one presentation
snapshot per step, which the window-truncation check consumes.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, Optional

from . import presets
from .errors import BadRank, NotSolvable, ScriptPreconditionFailed
from .presets import FamilyInstance, GeneratorSummary, Presentation, generator_count
from .rewriting import template_canon_key
from .words import TemplateWord, parse_template, print_template

# ---------------------------------------------------------------------------
# Presentation surgery helpers
# ---------------------------------------------------------------------------


def _relator(p: Presentation, label: str) -> FamilyInstance:
    for inst in p.relators:
        if inst.label == label:
            return inst
    raise ScriptPreconditionFailed("no relator family labelled %r" % label)


def _with_template(p: Presentation, label: str, t: TemplateWord) -> Presentation:
    rels = tuple(
        FamilyInstance(inst.label, t) if inst.label == label else inst
        for inst in p.relators
    )
    return dataclasses.replace(p, relators=rels)


def _without(p: Presentation, label: str) -> Presentation:
    rels = tuple(inst for inst in p.relators if inst.label != label)
    return dataclasses.replace(p, relators=rels)


def _witness(p: Presentation, t: TemplateWord) -> str:
    """Find a present relator family equal to t up to the canonical form."""
    key = template_canon_key(t)
    for inst in p.relators:
        if template_canon_key(inst.template) == key:
            return inst.label
    raise ScriptPreconditionFailed(
        "presentation has no relator family matching %s" % print_template(t)
    )


def _target_letters(t: TemplateWord, family: str, fixed: tuple) -> list[int]:
    want = tuple((None, v) for v in fixed)
    out = []
    for idx, (fam, exprs, _) in enumerate(t.letters):
        if fam == family and exprs[1:] == want:
            out.append(idx)
    return out


def _offset(letter) -> int:
    _, exprs, _ = letter
    var, off = exprs[0]
    if var != "m":
        raise ScriptPreconditionFailed("letter index is not in the window variable")
    return off


def _g_square(strand: int, off: int) -> TemplateWord:
    return parse_template("g(m,%d) g(m,%d)" % (strand, strand)).shift(off)


def _fg_braid(off: int) -> TemplateWord:
    return parse_template(
        "f(m,0) g(m,3) f(m,0) g(m,3) f(m,0) g(m,3)"
    ).shift(off)


_F_CUBE = parse_template("f(m,0) f(m,0) f(m,0)")


# ---------------------------------------------------------------------------
# Elimination and seeds
# ---------------------------------------------------------------------------


def _solved_form(t: TemplateWord, family: str, fixed: tuple) -> tuple[TemplateWord, int]:
    """Solve a defining template for its unique target letter.

    Returns the replacement template aligned to a plain ``m`` target and
    the window offset at which the target sits in the defining template.
    """
    hits = _target_letters(t, family, fixed)
    if len(hits) != 1:
        raise NotSolvable(
            "%s%s occurs %d times in %s"
            % (family, fixed, len(hits), print_template(t))
        )
    idx = hits[0]
    off = _offset(t.letters[idx])
    exp = t.letters[idx][2]
    left = TemplateWord(t.letters[:idx])
    right = TemplateWord(t.letters[idx + 1 :])
    solved = left.inverse() * right.inverse() if exp == 1 else right * left
    return solved.shift(-off), off


def solve_for(t: TemplateWord, family: str, fixed: tuple = ()) -> TemplateWord:
    """Solve a relator template for its unique occurrence of a letter.

    The result w satisfies: the relator is freely equal, up to cyclic
    rotation, to target * w^-1, and w does not mention the target.
    Raises NotSolvable when the target occurs zero or several times.
    """
    solved, off = _solved_form(t, family, fixed)
    return solved.shift(off)


def eliminate_family(p: Presentation, family: str, fixed: tuple, via: str):
    """Remove a generator family, rewriting it through a defining relator."""
    inst = _relator(p, via)
    replacement, off = _solved_form(inst.template, family, fixed)
    if _target_letters(replacement, family, fixed):
        raise NotSolvable("solved form still mentions %s%s" % (family, fixed))
    rels = []
    vanished = []
    for other in p.relators:
        if other.label == via:
            continue
        t = other.template.substitute_family(family, fixed, replacement)
        if t:
            rels.append(FamilyInstance(other.label, t))
        else:
            vanished.append(other.label)
    gens = tuple(
        gen for gen in p.generators if not (gen.family == family and gen.fixed == fixed)
    )
    if len(gens) == len(p.generators):
        raise ScriptPreconditionFailed("no generator family %s%s" % (family, fixed))
    p2 = dataclasses.replace(p, generators=gens, relators=tuple(rels))
    record = {
        "op": "eliminate",
        "family": family,
        "fixed": list(fixed),
        "via": via,
        "target_offset": off,
        "replacement": print_template(replacement),
        "vanished": vanished,
        "text": "eliminate %s(m%s) via %s: %s"
        % (
            family,
            "".join(",%d" % v for v in fixed),
            via,
            print_template(replacement),
        ),
    }
    return p2, record


def _seed_span(t: TemplateWord, family: str, fixed: tuple) -> int:
    offs = [_offset(t.letters[i]) for i in _target_letters(t, family, fixed)]
    if len(offs) < 2:
        raise NotSolvable("recurrence must mention the family at two offsets")
    lo, hi = min(offs), max(offs)
    if offs.count(hi) != 1:
        raise NotSolvable("top offset occurs %d times" % offs.count(hi))
    if offs.count(lo) != 1:
        raise NotSolvable("bottom offset occurs %d times" % offs.count(lo))
    return hi - lo


def reduce_family_to_seeds(p: Presentation, family: str, fixed: tuple, via: str):
    """Record that a family is generated by finitely many seed indices.

    The defining recurrence must be solvable upward (unique letter at the
    top window offset) and downward (unique letter at the bottom offset),
    and may only mention families that are concrete or already seeded.
    """
    inst = _relator(p, via)
    span = _seed_span(inst.template, family, fixed)
    for fam, exprs, _ in inst.template.letters:
        if fam == family and tuple(exprs[1:]) == tuple((None, v) for v in fixed):
            continue
        gen = None
        for cand in p.generators:
            if cand.family == fam and (
                (cand.windowed and tuple((None, v) for v in cand.fixed) == tuple(exprs[1:]))
                or (not cand.windowed and tuple((None, v) for v in cand.fixed) == tuple(exprs))
            ):
                gen = cand
                break
        if gen is None:
            raise ScriptPreconditionFailed("recurrence mentions an unknown family %s" % fam)
        if gen.windowed and gen.basis is None:
            raise ScriptPreconditionFailed(
                "recurrence for %s%s rests on the unreduced family %s" % (family, fixed, gen.name())
            )
    seeds = tuple(range(span))
    gens = []
    found = False
    for gen in p.generators:
        if gen.family == family and gen.fixed == fixed:
            if not gen.windowed:
                raise ScriptPreconditionFailed("family %s%s is not windowed" % (family, fixed))
            gens.append(dataclasses.replace(gen, basis=seeds))
            found = True
        else:
            gens.append(gen)
    if not found:
        raise ScriptPreconditionFailed("no generator family %s%s" % (family, fixed))
    p2 = dataclasses.replace(p, generators=tuple(gens))
    record = {
        "op": "seeds",
        "family": family,
        "fixed": list(fixed),
        "via": via,
        "seeds": list(seeds),
        "text": "family %s%s is generated by seeds m in %s (via %s)"
        % (family, fixed, list(seeds), via),
    }
    return p2, record


def observe_unbounded(p: Presentation, family: str, fixed: tuple, via: str):
    """Assert that the candidate recurrence does not pin the family."""
    inst = _relator(p, via)
    try:
        _seed_span(inst.template, family, fixed)
    except NotSolvable as exc:
        record = {
            "op": "observe",
            "family": family,
            "fixed": list(fixed),
            "via": via,
            "text": "family %s%s stays unbounded: %s" % (family, fixed, exc),
        }
        return p, record
    raise ScriptPreconditionFailed(
        "family %s%s is unexpectedly reducible through %s" % (family, fixed, via)
    )


# ---------------------------------------------------------------------------
# Certified word-level rewrites
# ---------------------------------------------------------------------------


def drop_relator(p: Presentation, label: str, reason: str):
    inst = _relator(p, label)
    if reason == "trivial":
        if inst.template:
            raise ScriptPreconditionFailed("%s is not freely trivial" % label)
        kept = None
    elif reason == "duplicate":
        key = template_canon_key(inst.template)
        kept = None
        for other in p.relators:
            if other.label != label and template_canon_key(other.template) == key:
                kept = other.label
                break
        if kept is None:
            raise ScriptPreconditionFailed("%s duplicates no other family" % label)
    else:
        raise ScriptPreconditionFailed("unknown drop reason %r" % reason)
    record = {
        "op": "drop",
        "label": label,
        "reason": reason,
        "kept": kept,
        "text": "drop %s (%s%s)" % (label, reason, " of %s" % kept if kept else ""),
    }
    return _without(p, label), record


def rotate_relator(p: Presentation, label: str, k: int):
    inst = _relator(p, label)
    p2 = _with_template(p, label, inst.template.rotate(k))
    record = {"op": "row", "label": label, "text": "rotate %s by %d" % (label, k)}
    return p2, record


def _insert(t: TemplateWord, idx: int, piece: TemplateWord) -> TemplateWord:
    return TemplateWord(t.letters[:idx] + piece.letters + t.letters[idx:])


def flip_g_letter(p: Presentation, label: str, occurrence: int = 0):
    """Turn one inverse involution letter positive by inserting its square."""
    inst = _relator(p, label)
    t = inst.template
    spots = [
        i
        for i, (fam, _, exp) in enumerate(t.letters)
        if fam == "g" and exp == -1
    ]
    if occurrence >= len(spots):
        raise ScriptPreconditionFailed("%s has no inverse g letter #%d" % (label, occurrence))
    idx = spots[occurrence]
    _, exprs, _ = t.letters[idx]
    strand = exprs[1][1]
    off = _offset(t.letters[idx])
    square = _g_square(strand, off)
    witness = _witness(p, square)
    new = _insert(t, idx, square)
    expected = TemplateWord(
        t.letters[:idx] + ((t.letters[idx][0], t.letters[idx][1], 1),) + t.letters[idx + 1 :]
    )
    if new != expected:
        raise ScriptPreconditionFailed("involution flip did not reduce as expected")
    record = {
        "op": "row",
        "label": label,
        "text": "flip an inverse g(m%+d,%d) in %s using %s" % (off, strand, label, witness),
    }
    return _with_template(p, label, new), record


def braid_flip(p: Presentation, label: str):
    """Rewrite the first g f^e g subword (strand 3) into f^-e g f^-e."""
    inst = _relator(p, label)
    t = inst.template
    found = None
    for i in range(len(t.letters) - 2):
        l0, l1, l2 = t.letters[i], t.letters[i + 1], t.letters[i + 2]
        if (
            l0[0] == "g"
            and l2[0] == "g"
            and l0 == l2
            and l0[2] == 1
            and l0[1][1] == (None, 3)
            and l1[0] == "f"
            and l1[1][0] == l0[1][0]
            and l1[1][1] == (None, 0)
        ):
            found = i
            break
    if found is None:
        raise ScriptPreconditionFailed("%s has no g f g subword on strand 3" % label)
    i = found
    off = _offset(t.letters[i])
    e = t.letters[i + 1][2]
    braid = _fg_braid(off)
    braid_witness = _witness(p, braid)
    square = _g_square(3, off)
    square_witness = _witness(p, square)
    g_letter = t.letters[i]
    f_letter = t.letters[i + 1]
    expected = TemplateWord(
        t.letters[:i]
        + ((f_letter[0], f_letter[1], -e), g_letter, (f_letter[0], f_letter[1], -e))
        + t.letters[i + 3 :]
    )
    if e == 1:
        step = _insert(t, i + 3, braid.inverse())
        neg = [
            j
            for j, (fam, exprs, exp) in enumerate(step.letters)
            if fam == "g" and exprs == g_letter[1] and exp == -1
        ]
        if len(neg) != 1:
            raise ScriptPreconditionFailed("braid flip lost track of the g letter")
        step = _insert(step, neg[0], square)
    else:
        step = _insert(t, i, square.inverse())
        pos = [
            j
            for j, (fam, exprs, exp) in enumerate(step.letters)
            if fam == "g" and exprs == g_letter[1] and exp == 1
        ]
        if len(pos) != 1:
            raise ScriptPreconditionFailed("braid flip lost track of the g letter")
        step = _insert(step, pos[0] + 1, square.inverse())
        neg = [
            j
            for j, (fam, exprs, exp) in enumerate(step.letters)
            if fam == "g" and exprs == g_letter[1] and exp == -1
        ]
        if not neg:
            raise ScriptPreconditionFailed("braid flip lost track of the g letter")
        step = _insert(step, neg[0], braid)
    if step != expected:
        raise ScriptPreconditionFailed(
            "braid flip produced %s, expected %s"
            % (print_template(step), print_template(expected))
        )
    record = {
        "op": "row",
        "label": label,
        "text": "braid flip at offset m%+d in %s using %s and %s"
        % (off, label, braid_witness, square_witness),
    }
    return _with_template(p, label, step), record


def rewrite_letter(
    p: Presentation,
    label: str,
    family: str,
    fixed: tuple,
    offset: int,
    via: str,
    via_shift: int,
):
    """Replace one letter of a relator by its solved form from another.

    The via family, shifted by ``via_shift``, must mention the target
    letter at the given window offset exactly once; the target relator
    must contain it exactly once as well.
    """
    inst = _relator(p, label)
    via_inst = _relator(p, via)
    vt = via_inst.template.shift(via_shift)
    want = tuple((None, v) for v in fixed)
    hits = [
        i
        for i in _target_letters(vt, family, fixed)
        if _offset(vt.letters[i]) == offset
    ]
    if len(hits) != 1:
        raise NotSolvable(
            "%s shifted by %d mentions %s%s at offset %d %d times"
            % (via, via_shift, family, fixed, offset, len(hits))
        )
    idx = hits[0]
    exp = vt.letters[idx][2]
    left = TemplateWord(vt.letters[:idx])
    right = TemplateWord(vt.letters[idx + 1 :])
    solved = left.inverse() * right.inverse() if exp == 1 else right * left
    spots = [
        i
        for i in _target_letters(inst.template, family, fixed)
        if _offset(inst.template.letters[i]) == offset
    ]
    if len(spots) != 1:
        raise ScriptPreconditionFailed(
            "%s mentions %s%s at offset %d %d times" % (label, family, fixed, offset, len(spots))
        )
    i = spots[0]
    target_exp = inst.template.letters[i][2]
    piece = solved if target_exp == 1 else solved.inverse()
    new = TemplateWord(
        inst.template.letters[:i] + piece.letters + inst.template.letters[i + 1 :]
    )
    record = {
        "op": "row",
        "label": label,
        "text": "rewrite %s(m%+d%s) in %s through %s shifted by %+d"
        % (family, offset, "".join(",%d" % v for v in fixed), label, via, via_shift),
    }
    return _with_template(p, label, new), record


def _torsion_merge_template(t: TemplateWord) -> TemplateWord:
    def order_of(fam: str) -> Optional[int]:
        if fam == "f":
            return 3
        if fam == "g":
            return 2
        return None

    letters = t.letters
    while True:
        out = []
        i = 0
        n = len(letters)
        while i < n:
            fam, exprs, _ = letters[i]
            total = 0
            j = i
            while j < n and letters[j][0] == fam and letters[j][1] == exprs:
                total += letters[j][2]
                j += 1
            order = order_of(fam)
            if order is not None:
                total %= order
                if order == 3 and total == 2:
                    total = -1
            sign = 1 if total > 0 else -1
            out.extend([(fam, exprs, sign)] * abs(total))
            i = j
        new = TemplateWord(out)
        if new.letters == letters:
            return new
        letters = new.letters


def torsion_reduce_relator(p: Presentation, label: str):
    """Merge torsion syllables (f mod three, g mod two) in one relator."""
    inst = _relator(p, label)
    new = _torsion_merge_template(inst.template)
    if new == inst.template:
        record = {"op": "row", "label": label, "text": "torsion merge on %s: no change" % label}
        return p, record
    old_fams = {(fam, exprs) for fam, exprs, _ in inst.template.letters}
    if any(fam == "f" for fam, _ in old_fams):
        _witness(p, _F_CUBE)
    for fam, exprs in old_fams:
        if fam == "g":
            strand = exprs[1][1]
            _witness(p, _g_square(strand, 0))
    record = {
        "op": "row",
        "label": label,
        "text": "torsion merge on %s: %s" % (label, print_template(new)),
    }
    return _with_template(p, label, new), record


def torsion_cleanup(p: Presentation):
    """Torsion-merge every relator, then drop trivial and duplicate ones.

    The witness relators themselves (the f cube and the per-strand g
    squares) are left untouched: they license the merges and stay in the
    final presentation.
    """
    witness_keys = {template_canon_key(_F_CUBE)}
    for gen in p.generators:
        if gen.family == "g":
            witness_keys.add(template_canon_key(_g_square(gen.fixed[0], 0)))
    records = []
    for inst in list(p.relators):
        if template_canon_key(inst.template) in witness_keys:
            continue
        p, rec = torsion_reduce_relator(p, inst.label)
        records.append(rec)
    drops = []
    seen: dict[tuple, str] = {}
    for inst in p.relators:
        if not inst.template:
            drops.append((inst.label, "trivial"))
            continue
        key = template_canon_key(inst.template)
        if key in seen:
            drops.append((inst.label, "duplicate"))
        else:
            seen[key] = inst.label
    for label, reason in drops:
        p, rec = drop_relator(p, label, reason)
        records.append(rec)
    record = {
        "op": "row",
        "label": None,
        "text": "torsion cleanup: %d families dropped" % len(drops),
        "sub": records,
    }
    return p, record


# ---------------------------------------------------------------------------
# Scripts
# ---------------------------------------------------------------------------


@dataclass
class ScriptResult:
    name: str
    group: str
    n: int
    initial: Presentation
    steps: list  # [(record, Presentation after the step), ...]
    final: Presentation
    summary: GeneratorSummary
    diff: Optional[dict]

    def records(self) -> list:
        return [rec for rec, _ in self.steps]


def diff_presentations(p: Presentation, target: Presentation) -> dict:
    mine = {template_canon_key(i.template): i for i in p.relators}
    theirs = {template_canon_key(i.template): i for i in target.relators}
    extra = sorted(
        "%s: %s" % (mine[k].label, print_template(mine[k].template))
        for k in mine.keys() - theirs.keys()
    )
    missing = sorted(
        "%s: %s" % (theirs[k].label, print_template(theirs[k].template))
        for k in theirs.keys() - mine.keys()
    )
    return {"extra": extra, "missing": missing, "agree": not extra and not missing}


class _Runner:
    def __init__(self, p: Presentation):
        self.p = p
        self.steps: list = []

    def do(self, op: Callable, *args, **kwargs) -> None:
        self.p, record = op(self.p, *args, **kwargs)
        self.steps.append((record, self.p))


def _script_vb3(n: int) -> ScriptResult:
    if n != 3:
        raise BadRank("this script is specific to rank 3, got %d" % n)
    p0 = presets.derived_presentation("vb", 3)
    r = _Runner(p0)
    r.do(eliminate_family, "b", (1,), "f-a-step-b1")
    r.do(eliminate_family, "b", (0,), "f-step-b0")
    r.do(reduce_family_to_seeds, "f", (0,), "b0-recurrence")
    r.do(observe_unbounded, "a", (), "b1-recurrence")
    diff = diff_presentations(r.p, presets.vb3_final_presentation())
    return ScriptResult("VB3_REDUCE", "vb", 3, p0, r.steps, r.p, generator_count(r.p), diff)


def _script_vbn(n: int) -> ScriptResult:
    if n < 4:
        raise BadRank("this script needs rank >= 4, got %d" % n)
    p0 = presets.derived_presentation("vb", n)
    r = _Runner(p0)
    r.do(eliminate_family, "b", (1,), "f-a-step-b1")
    r.do(eliminate_family, "b", (0,), "f-step-b0")
    r.do(eliminate_family, "a", (), "g-a-g[i=3]")
    r.do(reduce_family_to_seeds, "f", (0,), "b0-recurrence")
    r.do(reduce_family_to_seeds, "g", (3,), "f-g3-c3-braid-0")
    for l in range(4, n):
        r.do(reduce_family_to_seeds, "g", (l,), "g-g-c-braid[i=%d]" % (l - 1))
    return ScriptResult("VBN_REDUCE", "vb", n, p0, r.steps, r.p, generator_count(r.p), None)


def _script_wb3(n: int) -> ScriptResult:
    if n != 3:
        raise BadRank("this script is specific to rank 3, got %d" % n)
    p0 = presets.derived_presentation("wb", 3)
    r = _Runner(p0)
    r.do(eliminate_family, "b", (1,), "f-a-step-b1")
    r.do(eliminate_family, "b", (0,), "f-step-b0")
    r.do(drop_relator, "welded-a-f-inverse", "duplicate")
    r.do(rotate_relator, "welded-a-f", 1)
    r.do(torsion_reduce_relator, "welded-a-f")
    r.do(reduce_family_to_seeds, "f", (0,), "b0-recurrence")
    r.do(reduce_family_to_seeds, "a", (), "welded-a-f")
    diff = diff_presentations(r.p, presets.wb3_final_presentation())
    return ScriptResult("WB3_REDUCE", "wb", 3, p0, r.steps, r.p, generator_count(r.p), diff)


def _wb_common(r: _Runner) -> None:
    r.do(eliminate_family, "b", (1,), "f-a-step-b1")
    r.do(eliminate_family, "b", (0,), "f-step-b0")
    r.do(drop_relator, "welded-a-f-inverse", "duplicate")
    r.do(drop_relator, "welded-c3-braid-1", "duplicate")
    r.do(eliminate_family, "a", (), "g-a-g[i=3]")
    r.do(braid_flip, "welded-c3-braid-0")
    r.do(rewrite_letter, "welded-c3-braid-0", "g", (3,), 2, "f-g3-c3-braid-0", 1)
    r.do(flip_g_letter, "welded-c3-braid-0", 0)
    r.do(braid_flip, "welded-c3-braid-0")
    r.do(torsion_reduce_relator, "welded-c3-braid-0")
    r.do(eliminate_family, "g", (3,), "welded-c3-braid-0")


def _script_wb4(n: int) -> ScriptResult:
    if n != 4:
        raise BadRank("this script is specific to rank 4, got %d" % n)
    p0 = presets.derived_presentation("wb", 4)
    r = _Runner(p0)
    _wb_common(r)
    r.do(torsion_cleanup)
    r.do(reduce_family_to_seeds, "f", (0,), "b0-recurrence")
    diff = diff_presentations(r.p, presets.wb4_final_presentation())
    return ScriptResult("WB4_REDUCE", "wb", 4, p0, r.steps, r.p, generator_count(r.p), diff)


def _script_wbn(n: int) -> ScriptResult:
    if n < 5:
        raise BadRank("this script needs rank >= 5, got %d" % n)
    p0 = presets.derived_presentation("wb", n)
    r = _Runner(p0)
    _wb_common(r)
    for l in range(4, n):
        r.do(eliminate_family, "g", (l,), "welded-c-shift[i=%d]" % (l - 1))
    r.do(torsion_cleanup)
    r.do(reduce_family_to_seeds, "f", (0,), "b0-recurrence")
    return ScriptResult("WBN_REDUCE", "wb", n, p0, r.steps, r.p, generator_count(r.p), None)


SCRIPTS = {
    "VB3_REDUCE": (_script_vb3, 3),
    "VBN_REDUCE": (_script_vbn, 4),
    "WB3_REDUCE": (_script_wb3, 3),
    "WB4_REDUCE": (_script_wb4, 4),
    "WBN_REDUCE": (_script_wbn, 5),
}


def run_script(name: str, n: Optional[int] = None) -> ScriptResult:
    if name not in SCRIPTS:
        raise ScriptPreconditionFailed("unknown script %r" % name)
    fn, default_n = SCRIPTS[name]
    return fn(default_n if n is None else n)


# Operation name used by callers that think of the move as acting on one
# generator family at a time.
eliminate = eliminate_family
