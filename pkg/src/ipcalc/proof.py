"""Trusted checker for Hilbert-style proofs in the implicational calculus and
its finite extensions.

Axiom steps carry their substitution, so checking is reconstruction only:
the kernel never searches.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence, Union

from .formula import (
    METAVARIABLES, SCHEMES, Formula, Implies, SchemeId, UnboundMetavariable,
    apply, variables_of,
)

__all__ = [
    "AxiomInstance", "Hypothesis", "ExtensionAxiom", "ModusPonens", "Justification",
    "Step", "Proof", "Extension", "ProofError", "check", "ProofBuilder",
    "count_scheme",
]


@dataclass(frozen=True)
class AxiomInstance:
    scheme: SchemeId
    sub: Mapping[str, Formula]

    def __init__(self, scheme, sub):
        object.__setattr__(self, "scheme", SchemeId(scheme))
        object.__setattr__(self, "sub", dict(sub))


@dataclass(frozen=True)
class Hypothesis:
    index: int


@dataclass(frozen=True)
class ExtensionAxiom:
    index: int


@dataclass(frozen=True)
class ModusPonens:
    """Step ``major`` must be ``minor -> this``; indices are 0-based steps."""

    major: int
    minor: int


Justification = Union[AxiomInstance, Hypothesis, ExtensionAxiom, ModusPonens]


class Step(NamedTuple):
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    hypotheses: tuple[Formula, ...]
    steps: tuple[Step, ...]

    def __init__(self, hypotheses: Sequence[Formula], steps: Sequence):
        object.__setattr__(self, "hypotheses", tuple(hypotheses))
        object.__setattr__(self, "steps", tuple(Step(*s) for s in steps))

    @property
    def conclusion(self) -> Formula:
        if not self.steps:
            raise ValueError("empty proof has no conclusion")
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Extension:
    """The base system plus finitely many added axiom formulas; ``Extension()``
    is the base system itself."""

    added_axioms: tuple[Formula, ...] = field(default=())

    def __init__(self, added_axioms: Sequence[Formula] = ()):
        object.__setattr__(self, "added_axioms", tuple(added_axioms))

    def with_axiom(self, f: Formula) -> "Extension":
        return Extension(self.added_axioms + (f,))

    def without(self, index: int) -> "Extension":
        if not 0 <= index < len(self.added_axioms):
            raise IndexError(f"extension has no axiom {index}")
        axioms = self.added_axioms
        return Extension(axioms[:index] + axioms[index + 1:])

    def variables(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for a in self.added_axioms:
            out |= variables_of(a)
        return out

    def __len__(self) -> int:
        return len(self.added_axioms)


class ProofError(ValueError):
    """A proof failed to check; ``step`` is the 0-based offending step."""

    def __init__(self, step: int, kind: str, message: str):
        super().__init__(f"step {step + 1}: {kind}: {message}")
        self.step = step
        self.kind = kind


def _scheme_metavariables(s: SchemeId) -> set[str]:
    return set(variables_of(SCHEMES[s])) & set(METAVARIABLES)


def check(proof: Proof, ext: Extension = Extension()) -> Formula:
    """Verify every step of ``proof`` in ``ext`` and return its conclusion."""
    if not proof.steps:
        raise ProofError(0, "empty proof", "a proof needs at least one step")
    formulas: list[Formula] = []
    for n, (f, just) in enumerate(proof.steps):
        if isinstance(just, AxiomInstance):
            extra = set(just.sub) - _scheme_metavariables(just.scheme)
            if extra:
                raise ProofError(n, "scheme mismatch",
                                 f"{just.scheme} has no metavariable {min(extra)}")
            try:
                instance = apply(just.sub, SCHEMES[just.scheme])
            except UnboundMetavariable as exc:
                raise ProofError(n, "scheme mismatch",
                                 f"{just.scheme} metavariable {exc.args[0]} unbound") from None
            if instance != f:
                raise ProofError(n, "scheme mismatch",
                                 f"{just.scheme} instance is {instance}, step states {f}")
        elif isinstance(just, (Hypothesis, ExtensionAxiom)):
            pool = proof.hypotheses if isinstance(just, Hypothesis) else ext.added_axioms
            what = "hypothesis" if isinstance(just, Hypothesis) else "extension axiom"
            if not 0 <= just.index < len(pool):
                raise ProofError(n, "bad index", f"no {what} {just.index}")
            if pool[just.index] != f:
                raise ProofError(n, "formula mismatch",
                                 f"{what} {just.index} is {pool[just.index]}, step states {f}")
        elif isinstance(just, ModusPonens):
            for i in (just.major, just.minor):
                if i < 0:
                    raise ProofError(n, "bad index", f"step {i + 1} does not exist")
                if i >= n:
                    raise ProofError(n, "forward reference",
                                     f"step {i + 1} is not before step {n + 1}")
            major = formulas[just.major]
            if type(major) is not Implies:
                raise ProofError(n, "formula mismatch",
                                 f"major premise {major} is not an implication")
            if major.antecedent != formulas[just.minor]:
                raise ProofError(n, "formula mismatch",
                                 f"minor premise {formulas[just.minor]} is not the "
                                 f"antecedent of {major}")
            if major.consequent != f:
                raise ProofError(n, "formula mismatch",
                                 f"modus ponens yields {major.consequent}, step states {f}")
        else:
            raise ProofError(n, "bad justification", repr(just))
        formulas.append(f)
    return formulas[-1]


def count_scheme(proof: Proof, scheme: SchemeId) -> int:
    return sum(
        1 for _, j in proof.steps
        if isinstance(j, AxiomInstance) and j.scheme == scheme
    )


class ProofBuilder:
    """Assemble a proof step by step.

    Every method returns the 0-based index of the step holding the requested
    formula; a formula already proved is reused rather than re-derived. The
    built proof concludes with the most recently requested formula unless
    told otherwise.
    """

    def __init__(self, hypotheses: Sequence[Formula] = ()):
        self.hypotheses = list(hypotheses)
        self.steps: list[Step] = []
        self._known: dict[Formula, int] = {}
        self._last: int | None = None

    def formula(self, i: int) -> Formula:
        return self.steps[i].formula

    def add(self, f: Formula, just: Justification) -> int:
        i = self._known.get(f)
        if i is None:
            self.steps.append(Step(f, just))
            i = self._known[f] = len(self.steps) - 1
        self._last = i
        return i

    def axiom(self, scheme, **sub: Formula) -> int:
        s = SchemeId(scheme)
        return self.add(apply(sub, SCHEMES[s]), AxiomInstance(s, sub))

    def hyp(self, f: Formula) -> int:
        if f not in self.hypotheses:
            self.hypotheses.append(f)
        return self.add(f, Hypothesis(self.hypotheses.index(f)))

    def ext(self, index: int, f: Formula) -> int:
        return self.add(f, ExtensionAxiom(index))

    def mp(self, major: int, minor: int) -> int:
        imp = self.formula(major)
        if type(imp) is not Implies or imp.antecedent != self.formula(minor):
            raise ValueError(f"cannot apply modus ponens to {imp} and {self.formula(minor)}")
        return self.add(imp.consequent, ModusPonens(major, minor))

    def include(self, proof: Proof) -> int:
        """Splice in ``proof``; its hypotheses are matched by formula."""
        where: list[int] = []
        for f, just in proof.steps:
            if isinstance(just, ModusPonens):
                i = self.mp(where[just.major], where[just.minor])
            elif isinstance(just, Hypothesis):
                i = self.hyp(proof.hypotheses[just.index])
            else:
                i = self.add(f, just)
            where.append(i)
        self._last = where[-1]
        return where[-1]

    def build(self, conclusion: int | None = None) -> Proof:
        steps = list(self.steps)
        if conclusion is None:
            conclusion = self._last
        if conclusion is not None and conclusion != len(steps) - 1:
            # Restate the conclusion so it is the last step.
            steps.append(steps[conclusion])
        return Proof(self.hypotheses, steps)
