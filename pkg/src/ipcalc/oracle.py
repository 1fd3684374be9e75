"""Theoremhood oracles for extensions.

``semantic`` answers "is ``f`` a theorem of ``ext``" by truth-table
entailment from the added axioms. ``search:<depth>`` runs the bounded proof
search and can only ever under-approximate.
"""
from __future__ import annotations

from .formula import Formula, variables_of
from .proof import Extension
from .search import SearchLimitError, search_proof
from .semantics import VARIABLE_LIMIT, VariableLimitError, entails, truth_mask

__all__ = [
    "OracleLimitError", "SemanticOracle", "SearchOracle", "OracleMode",
    "parse_oracle", "theoremhood_in",
]


class OracleLimitError(RuntimeError):
    pass


class SemanticOracle:
    name = "semantic"

    def __init__(self, limit: int = VARIABLE_LIMIT):
        self.limit = limit

    def __repr__(self):
        return "SemanticOracle()"

    def holds(self, ext: Extension, f: Formula, q: Formula | None = None) -> bool:
        try:
            return entails(ext.added_axioms, f, self.limit)
        except VariableLimitError as exc:
            raise OracleLimitError(str(exc)) from exc

    def session(self, ext: Extension, q: Formula | None = None, vars=()) -> "_SemanticSession":
        return _SemanticSession(self, ext, vars)


class _SemanticSession:
    """Incremental entailment: keeps the conjunction of the axioms' truth
    tables, so each query costs one table lookup."""

    def __init__(self, oracle: SemanticOracle, ext: Extension, vars=()):
        self.oracle = oracle
        self.axioms = list(ext.added_axioms)
        self._reset(set(vars) | ext.variables())

    def _reset(self, names):
        if len(names) > self.oracle.limit:
            raise OracleLimitError(
                f"{len(names)} variables exceed the truth-table limit of {self.oracle.limit}")
        self.vars = tuple(sorted(names))
        self.models = (1 << (1 << len(self.vars))) - 1
        for a in self.axioms:
            self.models &= truth_mask(a, self.vars)

    def _cover(self, f):
        missing = variables_of(f).difference(self.vars)
        if missing:
            self._reset(missing.union(self.vars))

    @property
    def extension(self) -> Extension:
        return Extension(self.axioms)

    def holds(self, f: Formula) -> bool:
        self._cover(f)
        return not (self.models & ~truth_mask(f, self.vars))

    def add(self, axiom: Formula) -> None:
        self._cover(axiom)
        self.axioms.append(axiom)
        self.models &= truth_mask(axiom, self.vars)


class SearchOracle:
    def __init__(self, depth: int):
        if depth < 0:
            raise ValueError("search depth must be non-negative")
        self.depth = depth
        self.name = f"search:{depth}"

    def __repr__(self):
        return f"SearchOracle({self.depth})"

    def holds(self, ext: Extension, f: Formula, q: Formula | None = None) -> bool:
        try:
            return search_proof(ext, f, self.depth, q) is not None
        except SearchLimitError as exc:
            raise OracleLimitError(str(exc)) from exc

    def session(self, ext: Extension, q: Formula | None = None, vars=()) -> "_PlainSession":
        return _PlainSession(self, ext, q)


class _PlainSession:
    def __init__(self, oracle, ext: Extension, q=None):
        self.oracle = oracle
        self.axioms = list(ext.added_axioms)
        self.q = q

    @property
    def extension(self) -> Extension:
        return Extension(self.axioms)

    def holds(self, f: Formula) -> bool:
        return self.oracle.holds(self.extension, f, self.q)

    def add(self, axiom: Formula) -> None:
        self.axioms.append(axiom)


OracleMode = SemanticOracle | SearchOracle


def parse_oracle(text: str) -> OracleMode:
    """``semantic`` or ``search:<depth>``."""
    if text == "semantic":
        return SemanticOracle()
    kind, _, depth = text.partition(":")
    if kind == "search" and depth.isdigit():
        return SearchOracle(int(depth))
    raise ValueError(f"unknown oracle {text!r}; use 'semantic' or 'search:<depth>'")


def theoremhood_in(ext: Extension, f: Formula, oracle: OracleMode | None = None) -> bool:
    """Whether ``f`` is a theorem of ``ext`` according to ``oracle``."""
    return (oracle or SemanticOracle()).holds(ext, f)
