"""Propositional sentences with a Liar constant, Kleene evaluation, and the AK valuation.

Under the AK valuation every sentence is read as conjoined with a confirming
sentence ("the sentence on the left of this conjunction is true").  On
classical values the conjunction changes nothing; on a paradoxical value the
conjunction is false.  So AK evaluation is strong-Kleene evaluation followed
by collapsing Paradox to False.

Grammar, loosest binding first::

    s := s "->" s | s "|" s | s "&" s | "!" s | "(" s ")"
       | "TRUE" | "FALSE" | "LIAR" | atom          atom = [a-z][a-z0-9_]*

``->`` associates to the right, ``|`` and ``&`` to the left.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import ParseError, UnboundAtom


class TruthValue3(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    PARADOX = "Paradox"

    @classmethod
    def of(cls, b: bool) -> "TruthValue3":
        return cls.TRUE if b else cls.FALSE


T, F, P = TruthValue3.TRUE, TruthValue3.FALSE, TruthValue3.PARADOX


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return "TRUE" if self.value else "FALSE"


@dataclass(frozen=True)
class Liar:
    def __str__(self):
        return "LIAR"


@dataclass(frozen=True)
class Not:
    arg: "Sentence"

    def __str__(self):
        return f"!{self.arg}"


@dataclass(frozen=True)
class And:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Or:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class Implies:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return f"({self.left} -> {self.right})"


Sentence = Union[Atom, Const, Liar, Not, And, Or, Implies]

TRUE = Const(True)
FALSE = Const(False)
LIAR = Liar()


# --- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(->)|([&|!()])|([A-Za-z_][A-Za-z0-9_]*))")
_ATOM = re.compile(r"[a-z][a-z0-9_]*\Z")
_KEYWORDS = {"TRUE": TRUE, "FALSE": FALSE, "LIAR": LIAR}


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(pos, "a token", text)
        start = m.start(m.lastindex)
        word = m.group(m.lastindex)
        if m.lastindex == 3 and word not in _KEYWORDS and not _ATOM.match(word):
            raise ParseError(start, "an atom matching [a-z][a-z0-9_]* or TRUE/FALSE/LIAR", text)
        toks.append((word, start))
        pos = m.end()
    toks.append(("", len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        raise ParseError(self.toks[self.i][1], expected, self.text)

    def implication(self):
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.peek() == "|":
            self.take()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            inner = self.implication()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return inner
        if tok in _KEYWORDS:
            self.take()
            return _KEYWORDS[tok]
        if tok and _ATOM.match(tok):
            self.take()
            return Atom(tok)
        self.fail("a sentence")


def parse_sentence(text: str) -> Sentence:
    p = _Parser(text)
    s = p.implication()
    if p.peek() != "":
        p.fail("end of input")
    return s


def parse_assignment(text: str) -> dict[str, bool]:
    """``"p=1,q=0"`` -> ``{"p": True, "q": False}``."""
    out: dict[str, bool] = {}
    for part in filter(None, (x.strip() for x in text.split(","))):
        name, sep, val = part.partition("=")
        name, val = name.strip(), val.strip()
        if not sep or not _ATOM.match(name) or val not in ("0", "1"):
            raise ValueError(f"bad assignment item {part!r}; expected name=0 or name=1")
        out[name] = val == "1"
    return out


# --- evaluation ---------------------------------------------------------------

def k_not(x: TruthValue3) -> TruthValue3:
    return {T: F, F: T, P: P}[x]


def k_and(x: TruthValue3, y: TruthValue3) -> TruthValue3:
    if x is F or y is F:
        return F
    if x is P or y is P:
        return P
    return T


def k_or(x: TruthValue3, y: TruthValue3) -> TruthValue3:
    if x is T or y is T:
        return T
    if x is P or y is P:
        return P
    return F


def evaluate_kleene(s: Sentence, assignment: Mapping[str, bool]) -> TruthValue3:
    if isinstance(s, Atom):
        try:
            return TruthValue3.of(bool(assignment[s.name]))
        except KeyError:
            raise UnboundAtom(s.name) from None
    if isinstance(s, Const):
        return TruthValue3.of(s.value)
    if isinstance(s, Liar):
        return P
    if isinstance(s, Not):
        return k_not(evaluate_kleene(s.arg, assignment))
    # both sides are evaluated so that unbound atoms are reported either way
    left = evaluate_kleene(s.left, assignment)
    right = evaluate_kleene(s.right, assignment)
    if isinstance(s, And):
        return k_and(left, right)
    if isinstance(s, Or):
        return k_or(left, right)
    if isinstance(s, Implies):
        return k_or(k_not(left), right)
    raise TypeError(f"not a sentence: {s!r}")


def collapse(v: TruthValue3) -> TruthValue3:
    """Conjunction with the confirming sentence: Paradox becomes False."""
    return F if v is P else v


def evaluate_ak(s: Sentence, assignment: Mapping[str, bool]) -> bool:
    return collapse(evaluate_kleene(s, assignment)) is T


def atoms(s: Sentence) -> set[str]:
    if isinstance(s, Atom):
        return {s.name}
    if isinstance(s, (Const, Liar)):
        return set()
    if isinstance(s, Not):
        return atoms(s.arg)
    return atoms(s.left) | atoms(s.right)


def has_liar(s: Sentence) -> bool:
    if isinstance(s, Liar):
        return True
    if isinstance(s, (Atom, Const)):
        return False
    if isinstance(s, Not):
        return has_liar(s.arg)
    return has_liar(s.left) or has_liar(s.right)


def substitute_liar(s: Sentence, replacement: Sentence) -> Sentence:
    if isinstance(s, Liar):
        return replacement
    if isinstance(s, (Atom, Const)):
        return s
    if isinstance(s, Not):
        return Not(substitute_liar(s.arg, replacement))
    return type(s)(substitute_liar(s.left, replacement), substitute_liar(s.right, replacement))
