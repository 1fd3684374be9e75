"""Boolean valuations, truth tables and semantic entailment.

Truth tables are computed bit-parallel: every formula over an ordered
variable tuple is mapped to an integer whose bit ``r`` is its value in row
``r``. Rows follow binary-counter order with the first (alphabetically
smallest) variable as the most significant bit, so the first falsifying row
is well defined and reproducible.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .formula import Formula, Var, variables_of

if os.environ.get("IPCALC_PURE"):
    from ._truthtable_py import IMPLIES, truth_mask as _kernel
    BACKEND = "python"
else:
    try:
        from ._truthtable import IMPLIES, truth_mask as _kernel
        BACKEND = "compiled"
    except ImportError:
        from ._truthtable_py import IMPLIES, truth_mask as _kernel
        BACKEND = "python"

__all__ = [
    "BACKEND", "VARIABLE_LIMIT", "Valuation", "Verdict", "VariableLimitError",
    "UndefinedVariable", "eval_formula", "is_tautology", "entails",
    "entailment_countermodel", "truth_mask", "compile_program", "row_valuation",
]

VARIABLE_LIMIT = 20

Valuation = dict  # variable name -> 0 or 1


class VariableLimitError(ValueError):
    pass


class UndefinedVariable(KeyError):
    pass


@dataclass(frozen=True)
class Verdict:
    tautology: bool
    countermodel: dict | None = None

    def __bool__(self) -> bool:
        return self.tautology


def eval_formula(v: Mapping[str, int], f: Formula) -> int:
    """Value of ``f`` under ``v``; an implication is 0 exactly when its
    antecedent is 1 and its consequent is 0."""
    if type(f) is Var:
        try:
            return 1 if v[f.name] else 0
        except KeyError:
            raise UndefinedVariable(f.name) from None
    if eval_formula(v, f.antecedent) == 1 and eval_formula(v, f.consequent) == 0:
        return 0
    return 1


def compile_program(f: Formula, index: Mapping[str, int]) -> list[int]:
    """Postfix program for the truth-table kernel."""
    out: list[int] = []
    stack: list = [f]
    # Iterative post-order; None marks an implication node to emit.
    while stack:
        g = stack.pop()
        if g is None:
            out.append(IMPLIES)
        elif type(g) is Var:
            out.append(index[g.name])
        else:
            stack.append(None)
            stack.append(g.consequent)
            stack.append(g.antecedent)
    return out


@lru_cache(maxsize=1 << 17)
def truth_mask(f: Formula, vars: tuple[str, ...]) -> int:
    """Bitset of the rows (over ``vars``) in which ``f`` is true."""
    index = {name: i for i, name in enumerate(vars)}
    missing = variables_of(f) - index.keys()
    if missing:
        raise UndefinedVariable(min(missing))
    return _kernel(compile_program(f, index), len(vars))


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise VariableLimitError(f"{n} variables exceed the truth-table limit of {limit}")


def row_valuation(row: int, vars: Sequence[str]) -> dict:
    k = len(vars)
    return {name: (row >> (k - 1 - i)) & 1 for i, name in enumerate(vars)}


def _first_row(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def is_tautology(f: Formula, limit: int = VARIABLE_LIMIT) -> Verdict:
    vars = tuple(sorted(variables_of(f)))
    _check_limit(len(vars), limit)
    full = (1 << (1 << len(vars))) - 1
    zeros = full & ~truth_mask(f, vars)
    if not zeros:
        return Verdict(True)
    return Verdict(False, row_valuation(_first_row(zeros), vars))


def entailment_countermodel(axioms: Iterable[Formula], f: Formula,
                            limit: int = VARIABLE_LIMIT) -> dict | None:
    """First valuation making every axiom true and ``f`` false, if any."""
    axioms = list(axioms)
    names = set(variables_of(f))
    for a in axioms:
        names |= variables_of(a)
    vars = tuple(sorted(names))
    _check_limit(len(vars), limit)
    full = (1 << (1 << len(vars))) - 1
    models = full
    for a in axioms:
        models &= truth_mask(a, vars)
        if not models:
            return None
    bad = models & ~truth_mask(f, vars)
    if not bad:
        return None
    return row_valuation(_first_row(bad), vars)


def entails(axioms: Iterable[Formula], f: Formula, limit: int = VARIABLE_LIMIT) -> bool:
    return entailment_countermodel(axioms, f, limit) is None
