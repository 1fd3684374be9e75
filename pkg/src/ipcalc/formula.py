"""Implication-only formulas: syntax trees, parsing, printing, axiom schemes,
substitution and enumeration of bounded formula universes."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Formula", "Var", "Implies", "FormulaSyntaxError", "UnboundMetavariable",
    "EnumerationLimitError", "SchemeId", "SCHEMES", "METAVARIABLES",
    "parse", "format_formula", "q_wrap", "match_scheme", "apply",
    "variables_of", "enumerate_formulas", "Universe", "subformulas",
]

IDENTIFIER = re.compile(r"[a-z][a-zA-Z0-9_]*")
METAVARIABLES = ("A", "B", "C")

# Hard cap on universe size; enumeration grows like Catalan(n) * k^n.
MAX_UNIVERSE = 2_000_000


class Formula:
    """Base class for immutable formula nodes.

    Instances are hashable and compared structurally; the hash and the
    canonical text are computed once per node.
    """

    __slots__ = ("_hash", "_text", "_vars", "size")

    def __setattr__(self, name, value):
        raise AttributeError("formulas are immutable")

    def __str__(self) -> str:
        return format_formula(self)

    def __hash__(self) -> int:
        return self._hash


class Var(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str):
        set_ = object.__setattr__
        set_(self, "name", name)
        set_(self, "size", 1)
        set_(self, "_hash", hash(("var", name)))
        set_(self, "_text", name)
        set_(self, "_vars", frozenset((name,)))

    def __eq__(self, other):
        return self is other or (type(other) is Var and other.name == self.name)

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"Var({self.name!r})"

    def __reduce__(self):
        return (Var, (self.name,))


class Implies(Formula):
    __slots__ = ("antecedent", "consequent")

    def __init__(self, antecedent: Formula, consequent: Formula):
        set_ = object.__setattr__
        set_(self, "antecedent", antecedent)
        set_(self, "consequent", consequent)
        set_(self, "size", antecedent.size + consequent.size)
        set_(self, "_hash", hash((antecedent._hash, consequent._hash)))
        set_(self, "_text", None)
        set_(self, "_vars", None)

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Implies or other._hash != self._hash:
            return False
        return self.antecedent == other.antecedent and self.consequent == other.consequent

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"Implies({self.antecedent!r}, {self.consequent!r})"

    def __reduce__(self):
        return (Implies, (self.antecedent, self.consequent))


def format_formula(f: Formula) -> str:
    """Canonical, fully parenthesized text: ``(p -> (q -> p))``."""
    text = f._text
    if text is None:
        text = f"({format_formula(f.antecedent)} -> {format_formula(f.consequent)})"
        object.__setattr__(f, "_text", text)
    return text


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


_TOKEN = re.compile(r"\s*(?:(->|⊃)|(\()|(\))|([a-z][a-zA-Z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("->", m.group(1), start))
        elif m.group(2):
            tokens.append(("(", "(", start))
        elif m.group(3):
            tokens.append((")", ")", start))
        else:
            tokens.append(("id", m.group(4), start))
        pos = m.end()
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def implication(self) -> Formula:
        # Right-associative: a -> b -> c == a -> (b -> c).
        left = self.atom()
        if self.peek()[0] == "->":
            self.i += 1
            return Implies(left, self.implication())
        return left

    def atom(self) -> Formula:
        kind, lexeme, pos = self.peek()
        if kind == "id":
            self.i += 1
            return Var(lexeme)
        if kind == "(":
            self.i += 1
            inner = self.implication()
            self.take(")")
            return inner
        what = "end of input" if kind == "eof" else repr(lexeme)
        raise FormulaSyntaxError(f"expected a variable or '(', found {what}", pos, self.text)


def parse(text: str) -> Formula:
    """Parse ``text``; ``->`` and ``⊃`` both denote implication."""
    p = _Parser(text)
    f = p.implication()
    p.take("eof")
    return f


def q_wrap(q: Formula, a: Formula) -> Formula:
    """``a -> q``; applying it twice gives ``(a -> q) -> q``."""
    return Implies(a, q)


def variables_of(f: Formula) -> frozenset[str]:
    """The variables occurring in ``f``; computed once per node."""
    if f._vars is not None:
        return f._vars
    stack = [f]
    while stack:
        g = stack[-1]
        a, c = g.antecedent, g.consequent
        if a._vars is None:
            stack.append(a)
        elif c._vars is None:
            stack.append(c)
        else:
            object.__setattr__(g, "_vars", a._vars | c._vars)
            stack.pop()
    return f._vars


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformula occurrences of ``f``, root first."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if type(g) is Implies:
            stack.append(g.consequent)
            stack.append(g.antecedent)


# --- axiom schemes ---------------------------------------------------------

class SchemeId(str, enum.Enum):
    AX1 = "AX1"
    AX2 = "AX2"
    AX3 = "AX3"

    def __str__(self) -> str:
        return self.value


_A, _B, _C = (Var(m) for m in METAVARIABLES)
SCHEMES: dict[SchemeId, Formula] = {
    SchemeId.AX1: Implies(_A, Implies(_B, _A)),
    SchemeId.AX2: Implies(
        Implies(_A, Implies(_B, _C)),
        Implies(Implies(_A, _B), Implies(_A, _C)),
    ),
    SchemeId.AX3: Implies(Implies(Implies(_A, _B), _A), _A),
}


class UnboundMetavariable(KeyError):
    pass


def apply(sub: Mapping[str, Formula], scheme_body: Formula) -> Formula:
    """Simultaneously replace the metavariables A, B, C in ``scheme_body``."""
    if type(scheme_body) is Var:
        if scheme_body.name in METAVARIABLES:
            try:
                return sub[scheme_body.name]
            except KeyError:
                raise UnboundMetavariable(scheme_body.name) from None
        return scheme_body
    return Implies(apply(sub, scheme_body.antecedent), apply(sub, scheme_body.consequent))


def _match(pattern: Formula, f: Formula, sub: dict) -> bool:
    if type(pattern) is Var and pattern.name in METAVARIABLES:
        bound = sub.get(pattern.name)
        if bound is None:
            sub[pattern.name] = f
            return True
        return bound == f
    if type(pattern) is Var:
        return pattern == f
    if type(f) is not Implies:
        return False
    return _match(pattern.antecedent, f.antecedent, sub) and _match(
        pattern.consequent, f.consequent, sub
    )


def match_scheme(s: SchemeId, f: Formula) -> dict[str, Formula] | None:
    """Return the substitution making ``f`` an instance of scheme ``s``, or None."""
    sub: dict[str, Formula] = {}
    if _match(SCHEMES[SchemeId(s)], f, sub):
        return sub
    return None


# --- enumeration -----------------------------------------------------------

class EnumerationLimitError(MemoryError):
    pass


def _count(nvars: int, size_bound: int) -> int:
    # Catalan(n-1) binary trees with n leaves, each leaf any of nvars.
    return sum(comb(2 * (n - 1), n - 1) // n * nvars**n for n in range(1, size_bound + 1))


def enumerate_formulas(vars: Iterable[str], size_bound: int,
                       limit: int = MAX_UNIVERSE) -> list[Formula]:
    """All formulas over ``vars`` with at most ``size_bound`` leaves, ordered
    by (size, canonical text)."""
    names = sorted(set(vars))
    if not names:
        raise ValueError("need at least one variable")
    for name in names:
        if not IDENTIFIER.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
    if size_bound < 1:
        raise ValueError("size bound must be at least 1")
    total = _count(len(names), size_bound)
    if total > limit:
        raise EnumerationLimitError(
            f"{total} formulas over {len(names)} variables up to size {size_bound} "
            f"exceeds the limit of {limit}"
        )
    by_size: list[list[Formula]] = [[], [Var(n) for n in names]]
    for n in range(2, size_bound + 1):
        level = [
            Implies(a, b)
            for i in range(1, n)
            for a in by_size[i]
            for b in by_size[n - i]
        ]
        level.sort(key=format_formula)
        by_size.append(level)
    return [f for level in by_size for f in level]


@dataclass(frozen=True)
class Universe:
    """A finite, ordered, duplicate-free prefix of the formula enumeration."""

    formulas: tuple[Formula, ...]
    vars: tuple[str, ...]
    size_bound: int
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for i, f in enumerate(self.formulas):
            if f in index:
                raise ValueError(f"duplicate formula {f} in universe")
            index[f] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(cls, vars: Iterable[str], size_bound: int, limit: int = MAX_UNIVERSE) -> "Universe":
        names = tuple(sorted(set(vars)))
        return cls(tuple(enumerate_formulas(names, size_bound, limit)), names, size_bound)

    def __len__(self) -> int:
        return len(self.formulas)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __getitem__(self, i: int) -> Formula:
        return self.formulas[i]

    def __contains__(self, f) -> bool:
        return f in self._index

    def index(self, f: Formula) -> int:
        return self._index[f]
