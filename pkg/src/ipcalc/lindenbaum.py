"""Completion of a Q-consistent extension over a bounded formula universe,
extraction of the induced valuation, and the countermodel pipeline.

Fix a non-theorem ``q`` and write ``QA`` for ``A -> q``. Walking the
universe in order, each formula ``A`` either already has ``QQA`` as a
theorem of the current extension, or ``QA`` is added as a new axiom. The
final extension decides every universe formula, and ``v(A) = 1`` exactly
when ``QQA`` is one of its theorems.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .formula import Formula, Implies, Universe, Var, format_formula, q_wrap, variables_of
from .oracle import OracleMode, SemanticOracle
from .proof import Extension
from .semantics import eval_formula, is_tautology

__all__ = [
    "TraceRecord", "CompletionTrace", "FormulaValuation", "ClaimViolation",
    "ClaimReport", "CountermodelRun", "NotQConsistent", "ConsistencyLost",
    "ExtractionError", "TautologyError", "q_consistent", "complete",
    "extract_valuation", "verify_valuation_claim", "countermodel",
    "run_countermodel", "universe",
]

log = logging.getLogger(__name__)

DEFAULT_RETRIES = 3


class NotQConsistent(ValueError):
    pass


class ConsistencyLost(RuntimeError):
    """Adding an axiom made ``q`` a theorem; only an unsound oracle can do this."""


class ExtractionError(ValueError):
    def __init__(self, kind: str, formulas):
        self.kind = kind
        self.formulas = list(formulas)
        shown = ", ".join(format_formula(f) for f in self.formulas[:5])
        more = "" if len(self.formulas) <= 5 else f" and {len(self.formulas) - 5} more"
        if kind == "undefined":
            msg = f"neither QQA nor QA is a theorem for A in {{{shown}}}{more}"
        else:
            msg = f"both QQA and QA are theorems for A in {{{shown}}}{more}"
        super().__init__(msg)


class TautologyError(ValueError):
    pass


@lru_cache(maxsize=64)
def universe(vars: tuple[str, ...], size_bound: int) -> Universe:
    return Universe.build(vars, size_bound)


@dataclass(frozen=True)
class TraceRecord:
    n: int
    formula: Formula
    verdict: bool  # QQA_n already a theorem of N_n
    added: bool    # QA_n added to form N_{n+1}


@dataclass
class CompletionTrace:
    q: Formula
    universe: Universe
    base: Extension
    records: list[TraceRecord] = field(default_factory=list)
    extension: Extension = field(default_factory=Extension)

    @property
    def added(self) -> tuple[Formula, ...]:
        return self.extension.added_axioms[len(self.base.added_axioms):]


@dataclass
class FormulaValuation:
    q: Formula
    universe: Universe
    values: dict[Formula, int]
    assignment: dict[str, int]

    def __getitem__(self, f: Formula) -> int:
        return self.values[f]

    def __contains__(self, f) -> bool:
        return f in self.values


@dataclass(frozen=True)
class ClaimViolation:
    antecedent: Formula
    consequent: Formula
    values: tuple[int, int, int]  # v(A), v(B), v(A -> B)


@dataclass
class ClaimReport:
    checked: int
    violations: list[ClaimViolation]

    @property
    def ok(self) -> bool:
        return not self.violations


def _oracle(oracle):
    return oracle if oracle is not None else SemanticOracle()


def q_consistent(ext: Extension, q: Formula, oracle: OracleMode | None = None) -> bool:
    return not _oracle(oracle).holds(ext, q, q)


def complete(ext: Extension, q: Formula, universe: Universe,
             oracle: OracleMode | None = None) -> CompletionTrace:
    """Extend ``ext`` so that ``QQA`` or ``QA`` is a theorem for every ``A``
    in ``universe``."""
    oracle = _oracle(oracle)
    session = oracle.session(ext, q, vars=set(universe.vars) | variables_of(q))
    if session.holds(q):
        raise NotQConsistent(f"{format_formula(q)} is already a theorem of the extension")
    trace = CompletionTrace(q=q, universe=universe, base=ext)
    for n, a in enumerate(universe):
        verdict = session.holds(q_wrap(q, q_wrap(q, a)))
        if not verdict:
            session.add(q_wrap(q, a))
            if session.holds(q):
                raise ConsistencyLost(
                    f"adding {format_formula(q_wrap(q, a))} made {format_formula(q)} a theorem")
        trace.records.append(TraceRecord(n, a, verdict, not verdict))
    trace.extension = session.extension
    log.debug("completion over %d formulas added %d axioms", len(universe), len(trace.added))
    return trace


def extract_valuation(trace: CompletionTrace, oracle: OracleMode | None = None) -> FormulaValuation:
    q = trace.q
    session = _oracle(oracle).session(
        trace.extension, q, vars=set(trace.universe.vars) | variables_of(q))
    values: dict[Formula, int] = {}
    undefined = []
    contradictory = []
    for a in trace.universe:
        qa = q_wrap(q, a)
        one = session.holds(q_wrap(q, qa))
        zero = session.holds(qa)
        if one and zero:
            contradictory.append(a)
        elif one:
            values[a] = 1
        elif zero:
            values[a] = 0
        else:
            undefined.append(a)
    if contradictory:
        raise ExtractionError("contradiction", contradictory)
    if undefined:
        raise ExtractionError("undefined", undefined)
    assignment = {x: values[Var(x)] for x in trace.universe.vars}
    return FormulaValuation(q, trace.universe, values, assignment)


def verify_valuation_claim(v: FormulaValuation) -> ClaimReport:
    """Check ``v(A -> B) = 0`` iff ``v(A) = 1`` and ``v(B) = 0`` wherever all
    three formulas are in the domain of ``v``."""
    checked = 0
    violations = []
    for f, value in v.values.items():
        if type(f) is not Implies:
            continue
        a, b = f.antecedent, f.consequent
        if a not in v.values or b not in v.values:
            continue
        checked += 1
        expected = 0 if (v.values[a] == 1 and v.values[b] == 0) else 1
        if value != expected:
            violations.append(ClaimViolation(a, b, (v.values[a], v.values[b], value)))
    return ClaimReport(checked, violations)


@dataclass
class CountermodelRun:
    assignment: dict[str, int]
    trace: CompletionTrace
    valuation: FormulaValuation
    report: ClaimReport


def run_countermodel(q: Formula, size_bound: int | None = None,
                     oracle: OracleMode | None = None, retries: int = DEFAULT_RETRIES,
                     vars=None) -> CountermodelRun:
    """Complete the base system against ``q`` and read off a falsifying
    assignment, enlarging the universe by one size step when the bound is too
    small to decide ``q``."""
    if is_tautology(q):
        raise TautologyError(f"{format_formula(q)} is a tautology; it has no countermodel")
    oracle = _oracle(oracle)
    names = tuple(sorted(set(vars or ()) | variables_of(q)))
    bound = size_bound if size_bound is not None else q.size
    last_error = None
    for _ in range(retries + 1):
        u = universe(names, bound)
        trace = complete(Extension(), q, u, oracle)
        try:
            v = extract_valuation(trace, oracle)
        except ExtractionError as exc:
            if exc.kind != "undefined":
                raise
            last_error = exc
        else:
            if q in v:
                if v[q] != 0:
                    raise AssertionError(f"valuation gives {format_formula(q)} the value 1")
                if eval_formula(v.assignment, q) != 0:
                    raise AssertionError("extracted assignment does not falsify the formula")
                return CountermodelRun(v.assignment, trace, v, verify_valuation_claim(v))
            last_error = ExtractionError("undefined", [q])
        log.info("bound %d too small for %s; retrying", bound, format_formula(q))
        bound += 1
    raise last_error


def countermodel(q: Formula, size_bound: int | None = None,
                 oracle: OracleMode | None = None, retries: int = DEFAULT_RETRIES) -> dict[str, int]:
    return run_countermodel(q, size_bound, oracle, retries).assignment
