"""Free-group words over indexed symbol families.

Two alphabets share one machinery.  The ambient alphabet consists of the
braid letters ``s1, s2, ...`` and the symmetric letters ``r1, r2, ...``.
Subgroup words use the indexed families ``a(m)``, ``b(m,e)``, ``c(l)``,
``f(m,e)`` and ``g(m,l)``, where ``m`` ranges over the integers, ``e`` is
a bit, and ``l`` is a strand index (at least 3).

A :class:`Word` is an immutable, eagerly freely-reduced letter sequence.
A :class:`TemplateWord` is the parametric variant: its index slots hold
affine expressions in a formal window variable ``m`` (plus optional
auxiliary names such as ``i`` or ``j``), and it instantiates to words.

Word syntax, shared by the parser and printer::

    s3 r1^-1 a(-2) b(0,1)^-1 c(3) f(2,0) g(0,4)

Tokens are space separated; ``^-1`` marks an inverse letter; ``f(m)`` is
accepted on input as shorthand for ``f(m,0)``.  Template syntax allows
affine indices such as ``m``, ``m+2`` or ``i-1`` in place of integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import CyclicSubstitution, ParametricInput, ParseError

# Built-in families: name -> number of index slots.  The first slot of the
# families listed in M_FAMILIES ranges over the integer window; the second
# slot of "b" and "f" is a bit, the trailing slot of "c" and "g" is a
# strand index >= 3.
FAMILIES = {
    "sigma": 1,
    "rho": 1,
    "a": 1,
    "b": 2,
    "c": 1,
    "f": 2,
    "g": 2,
}

M_FAMILIES = ("a", "b", "f", "g")

AMBIENT_FAMILIES = ("sigma", "rho")

SUBGROUP_FAMILIES = ("a", "b", "c", "f", "g")

# Fixed family order used by canonical forms and printers.
_FAMILY_RANK = {"a": 0, "b": 1, "c": 2, "f": 3, "g": 4, "sigma": 5, "rho": 6}


def _validate(family: str, indices: tuple) -> None:
    arity = FAMILIES.get(family)
    if arity is not None and len(indices) != arity:
        raise ParseError("family %r takes %d indices, got %d" % (family, arity, len(indices)))
    concrete = all(isinstance(i, int) for i in indices)
    if not concrete:
        return
    if family in ("sigma", "rho") and indices[0] < 1:
        raise ParseError("%s index must be positive, got %d" % (family, indices[0]))
    if family in ("b", "f") and indices[1] not in (0, 1):
        raise ParseError("%s bit must be 0 or 1, got %r" % (family, indices[1]))
    if family == "c" and indices[0] < 3:
        raise ParseError("c strand index must be >= 3, got %d" % indices[0])
    if family == "g" and indices[1] < 3:
        raise ParseError("g strand index must be >= 3, got %d" % indices[1])


@dataclass(frozen=True)
class Symbol:
    """A generator name: a family plus concrete integer indices."""

    family: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate(self.family, self.indices)

    def key(self) -> tuple:
        return (_FAMILY_RANK.get(self.family, 99), self.family, self.indices)

    def __str__(self) -> str:
        if self.family == "sigma":
            return "s%d" % self.indices[0]
        if self.family == "rho":
            return "r%d" % self.indices[0]
        return "%s(%s)" % (self.family, ",".join(str(i) for i in self.indices))


def sigma(i: int) -> Symbol:
    return Symbol("sigma", (i,))


def rho(i: int) -> Symbol:
    return Symbol("rho", (i,))


def a(m: int) -> Symbol:
    return Symbol("a", (m,))


def b(m: int, e: int) -> Symbol:
    return Symbol("b", (m, e))


def c(l: int) -> Symbol:
    return Symbol("c", (l,))


def f(m: int, e: int = 0) -> Symbol:
    return Symbol("f", (m, e))


def g(m: int, l: int) -> Symbol:
    return Symbol("g", (m, l))


Letter = tuple  # (Symbol, +1 | -1)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, exp in letters:
        if exp not in (1, -1):
            raise ValueError("letter exponent must be +1 or -1, got %r" % (exp,))
        if stack and stack[-1][0] == sym and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((sym, exp))
    return tuple(stack)


class Word:
    """An immutable freely-reduced word."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return "Word(%s)" % print_word(self)

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((sym, -exp) for sym, exp in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def conjugate(self, by: "Word") -> "Word":
        """Return ``by * self * by^-1``."""
        return by * self * by.inverse()

    def exponent_sum(self, family: Optional[str] = None, symbol: Optional[Symbol] = None) -> int:
        total = 0
        for sym, exp in self.letters:
            if symbol is not None:
                if sym == symbol:
                    total += exp
            elif family is None or sym.family == family:
                total += exp
        return total

    def symbols(self) -> set[Symbol]:
        return {sym for sym, _ in self.letters}

    def families(self) -> set[str]:
        return {sym.family for sym, _ in self.letters}

    def substitute(self, target: Symbol, replacement: "Word") -> "Word":
        """Replace every occurrence of ``target`` (both signs) by ``replacement``.

        Raises CyclicSubstitution when the replacement itself mentions the
        target symbol.
        """
        if target in replacement.symbols():
            raise CyclicSubstitution("replacement for %s mentions %s" % (target, target))
        inv = replacement.inverse()
        out: list[Letter] = []
        for sym, exp in self.letters:
            if sym == target:
                out.extend(replacement.letters if exp == 1 else inv.letters)
            else:
                out.append((sym, exp))
        return Word(out)

    def shift(self, k: int) -> "Word":
        """Add ``k`` to the window index of every a/b/f/g letter."""
        out = []
        for sym, exp in self.letters:
            if sym.family in M_FAMILIES:
                sym = Symbol(sym.family, (sym.indices[0] + k,) + sym.indices[1:])
            out.append((sym, exp))
        return Word(out)

    def cyclic_reduce(self) -> "Word":
        letters = list(self.letters)
        while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            letters = letters[1:-1]
        return Word(letters)

    def rotations(self) -> Iterator[tuple[Letter, ...]]:
        n = len(self.letters)
        if n == 0:
            yield ()
            return
        for k in range(n):
            yield self.letters[k:] + self.letters[:k]


def word(*letters) -> Word:
    """Convenience constructor: ``word(sym, (sym2, -1), ...)``."""
    out = []
    for item in letters:
        if isinstance(item, Symbol):
            out.append((item, 1))
        else:
            out.append(item)
    return Word(out)


# ---------------------------------------------------------------------------
# Parametric templates
# ---------------------------------------------------------------------------

# An index expression is (var, offset) with var None for a plain integer.
IndexExpr = tuple

TLetter = tuple  # (family, tuple[IndexExpr, ...], exp)


def _treduce(letters: Iterable[TLetter]) -> tuple[TLetter, ...]:
    stack: list[TLetter] = []
    for fam, exprs, exp in letters:
        if stack and stack[-1][0] == fam and stack[-1][1] == exprs and stack[-1][2] == -exp:
            stack.pop()
        else:
            stack.append((fam, exprs, exp))
    return tuple(stack)


def _expr_str(expr: IndexExpr) -> str:
    var, off = expr
    if var is None:
        return str(off)
    if off == 0:
        return var
    return "%s%+d" % (var, off)


class TemplateWord:
    """A word whose index slots are affine expressions in named variables.

    The distinguished variable ``m`` is the window variable; any other
    variable (``i``, ``j``, ``k``, ``l``, ``e``) is auxiliary and is bound
    before window instantiation.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[TLetter] = ()):
        object.__setattr__(self, "letters", _treduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("TemplateWord is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, TemplateWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return "TemplateWord(%s)" % print_template(self)

    def __mul__(self, other: "TemplateWord") -> "TemplateWord":
        return TemplateWord(self.letters + other.letters)

    def inverse(self) -> "TemplateWord":
        return TemplateWord(tuple((fam, exprs, -exp) for fam, exprs, exp in reversed(self.letters)))

    def conjugate(self, by: "TemplateWord") -> "TemplateWord":
        return by * self * by.inverse()

    def variables(self) -> set[str]:
        out: set[str] = set()
        for _, exprs, _ in self.letters:
            for var, _ in exprs:
                if var is not None:
                    out.add(var)
        return out

    def shift(self, k: int) -> "TemplateWord":
        """Substitute ``m -> m + k``."""
        out = []
        for fam, exprs, exp in self.letters:
            exprs = tuple((var, off + k) if var == "m" else (var, off) for var, off in exprs)
            out.append((fam, exprs, exp))
        return TemplateWord(out)

    def bind(self, **values: int) -> "TemplateWord":
        """Bind some variables to integers, leaving the rest symbolic."""
        out = []
        for fam, exprs, exp in self.letters:
            new = []
            for var, off in exprs:
                if var is not None and var in values:
                    new.append((None, values[var] + off))
                else:
                    new.append((var, off))
            out.append((fam, tuple(new), exp))
        return TemplateWord(out)

    def instantiate(self, m: Optional[int] = None, **aux: int) -> Word:
        values = dict(aux)
        if m is not None:
            values["m"] = m
        missing = self.variables() - set(values)
        if missing:
            raise ParametricInput("unbound template variables: %s" % ", ".join(sorted(missing)))
        out = []
        for fam, exprs, exp in self.letters:
            idx = tuple(off if var is None else values[var] + off for var, off in exprs)
            out.append((Symbol(fam, idx), exp))
        return Word(out)

    def rotate(self, k: int) -> "TemplateWord":
        n = len(self.letters)
        if n == 0:
            return self
        k %= n
        return TemplateWord(self.letters[k:] + self.letters[:k])

    def substitute_family(self, family: str, fixed: tuple, replacement: "TemplateWord") -> "TemplateWord":
        """Replace every letter of ``family`` with the given trailing indices.

        ``replacement`` is a template describing the letter whose window
        index is plain ``m``; it is realigned to each occurrence's own
        window index (shifted for affine indices, bound for constants).
        """
        want = tuple((None, v) for v in fixed)
        for fam, exprs, _ in replacement.letters:
            if fam == family and exprs[1:] == want:
                raise CyclicSubstitution("replacement mentions %s%s itself" % (family, fixed))
        rep_inv = replacement.inverse()
        out: list[TLetter] = []
        for fam, exprs, exp in self.letters:
            if fam == family and exprs[1:] == want:
                var, off = exprs[0]
                chosen = replacement if exp == 1 else rep_inv
                if var == "m":
                    rep = chosen.shift(off)
                elif var is None:
                    rep = chosen.bind(m=off)
                else:
                    raise ParametricInput("cannot align a substitution to index %s" % _expr_str(exprs[0]))
                out.extend(rep.letters)
            else:
                out.append((fam, exprs, exp))
        return TemplateWord(out)

    def m_offsets(self, family: Optional[str] = None) -> list[int]:
        """Offsets of the window variable in first slots, optionally per family."""
        out = []
        for fam, exprs, _ in self.letters:
            if family is not None and fam != family:
                continue
            if exprs and exprs[0][0] == "m":
                out.append(exprs[0][1])
        return out


def lift(w: Word) -> TemplateWord:
    """View a concrete word as a template with constant indices."""
    return TemplateWord(
        tuple((sym.family, tuple((None, i) for i in sym.indices), exp) for sym, exp in w.letters)
    )


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

_SHORT_RE = re.compile(r"^([sr])(-?\d+)$")
_NAME_RE = re.compile(r"^([a-z][a-z0-9]*)\(([^()]*)\)$")
_EXPR_RE = re.compile(r"^(?:(-?\d+)|([a-z])([+-]\d+)?)$")


def _parse_expr(text: str) -> IndexExpr:
    m = _EXPR_RE.match(text.strip())
    if m is None:
        raise ParseError("bad index expression %r" % text)
    if m.group(1) is not None:
        return (None, int(m.group(1)))
    return (m.group(2), int(m.group(3) or 0))


def _parse_token(token: str) -> TLetter:
    exp = 1
    if token.endswith("^-1"):
        exp = -1
        token = token[:-3]
    elif "^" in token:
        raise ParseError("only ^-1 is allowed, got %r" % token)
    m = _SHORT_RE.match(token)
    if m is not None:
        fam = "sigma" if m.group(1) == "s" else "rho"
        return (fam, ((None, int(m.group(2))),), exp)
    m = _NAME_RE.match(token)
    if m is None:
        raise ParseError("bad letter %r" % token)
    fam = m.group(1)
    parts = [p for p in m.group(2).split(",") if p.strip() != ""]
    exprs = tuple(_parse_expr(p) for p in parts)
    if fam == "f" and len(exprs) == 1:
        exprs = exprs + ((None, 0),)
    arity = FAMILIES.get(fam)
    if arity is not None and len(exprs) != arity:
        raise ParseError("family %r takes %d indices, got %d in %r" % (fam, arity, len(exprs), token))
    return (fam, exprs, exp)


def parse_template(text: str) -> TemplateWord:
    text = text.strip()
    if text in ("", "1"):
        return TemplateWord()
    return TemplateWord(_parse_token(tok) for tok in text.split())


def parse_word(text: str) -> Word:
    t = parse_template(text)
    if t.variables():
        raise ParseError("expected a concrete word, got variables %s in %r" % (sorted(t.variables()), text))
    return t.instantiate()


def print_template(t: TemplateWord) -> str:
    if not t.letters:
        return "1"
    toks = []
    for fam, exprs, exp in t.letters:
        if fam == "sigma":
            body = "s%s" % _expr_str(exprs[0])
        elif fam == "rho":
            body = "r%s" % _expr_str(exprs[0])
        else:
            body = "%s(%s)" % (fam, ",".join(_expr_str(e) for e in exprs))
        toks.append(body if exp == 1 else body + "^-1")
    return " ".join(toks)


def print_word(w: Word) -> str:
    return print_template(lift(w))
