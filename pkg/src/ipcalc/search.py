"""Bounded forward proof search.

Level 1 holds the extension axioms and every axiom instance whose
metavariables range over a finite term pool (subformulas of the goal and of
the extension axioms, optionally with their ``-> q`` wraps). Level ``d``
holds the new modus ponens consequences of facts below ``d``, at least one of
them from level ``d - 1``. A proof found at level ``d`` is a proof tree of
height ``d``; the first level containing the goal gives the proof returned.

Absence of a proof means nothing: the pool bounds instantiation.
"""
from __future__ import annotations

from itertools import product

from .formula import (
    SCHEMES, Formula, Implies, SchemeId, apply, format_formula, q_wrap, subformulas,
)
from .proof import AxiomInstance, Extension, ExtensionAxiom, Proof, ProofBuilder

__all__ = ["SearchLimitError", "search_proof", "term_pool", "MAX_FACTS"]

MAX_FACTS = 500_000


class SearchLimitError(RuntimeError):
    pass


def _key(f: Formula):
    return (f.size, format_formula(f))


def term_pool(ext: Extension, goal: Formula, q: Formula | None = None) -> list[Formula]:
    terms = set(subformulas(goal))
    for a in ext.added_axioms:
        terms.update(subformulas(a))
    if q is not None:
        terms.update(subformulas(q))
        terms.update([q_wrap(q, t) for t in terms])
    return sorted(terms, key=_key)


def _axiom_instances(pool):
    for a, b in product(pool, repeat=2):
        yield SchemeId.AX1, {"A": a, "B": b}
    for a, b, c in product(pool, repeat=3):
        yield SchemeId.AX2, {"A": a, "B": b, "C": c}
    for a, b in product(pool, repeat=2):
        yield SchemeId.AX3, {"A": a, "B": b}


def search_proof(ext: Extension, goal: Formula, depth: int, q: Formula | None = None,
                 max_facts: int = MAX_FACTS) -> Proof | None:
    """Find a proof of ``goal`` in ``ext`` of height at most ``depth``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth == 0:
        return None
    # fact -> ("ext", index) | ("ax", scheme, sub) | ("mp", major, minor)
    why: dict[Formula, tuple] = {}
    height: dict[Formula, int] = {}
    by_antecedent: dict[Formula, list[Formula]] = {}

    def learn(f, reason, level):
        if f in why:
            return
        if len(why) >= max_facts:
            raise SearchLimitError(f"search exceeded {max_facts} facts")
        why[f] = reason
        height[f] = current
        level.append(f)
        if type(f) is Implies:
            by_antecedent.setdefault(f.antecedent, []).append(f)

    current = 1
    frontier: list[Formula] = []
    for i, a in enumerate(ext.added_axioms):
        learn(a, ("ext", i), frontier)
    for scheme, sub in _axiom_instances(term_pool(ext, goal, q)):
        learn(apply(sub, SCHEMES[scheme]), ("ax", scheme, sub), frontier)

    for current in range(2, depth + 1):
        if goal in why or not frontier:
            break
        nxt: list[Formula] = []
        for f in frontier:
            for imp in by_antecedent.get(f, ()):
                if height[imp] < current:
                    learn(imp.consequent, ("mp", imp, f), nxt)
            if type(f) is Implies and height.get(f.antecedent, current) < current:
                learn(f.consequent, ("mp", f, f.antecedent), nxt)
        frontier = nxt

    if goal not in why:
        return None
    bld = ProofBuilder()
    done: dict[Formula, int] = {}
    # Iterative post-order over the justification DAG.
    stack = [(goal, False)]
    while stack:
        f, expanded = stack.pop()
        if f in done:
            continue
        reason = why[f]
        if reason[0] == "mp" and not expanded:
            stack.append((f, True))
            stack.append((reason[2], False))
            stack.append((reason[1], False))
            continue
        if reason[0] == "ext":
            done[f] = bld.add(f, ExtensionAxiom(reason[1]))
        elif reason[0] == "ax":
            done[f] = bld.add(f, AxiomInstance(reason[1], reason[2]))
        else:
            done[f] = bld.mp(done[reason[1]], done[reason[2]])
    return bld.build(done[goal])
