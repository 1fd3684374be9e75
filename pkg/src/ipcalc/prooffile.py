"""Line-oriented proof files.

::

    hyp: p ; (p -> q)
    ext: r
    1. p | HYP 0
    2. (p -> q) | HYP 1
    3. q | MP 2 1
    4. (q -> (r -> q)) | AX1{A:=q,B:=r}

Step numbers are 1-based; ``HYP``/``EXT`` indices are 0-based. ``MP i j``
names the major premise ``i`` and the minor premise ``j``. The ``hyp:`` and
``ext:`` headers are omitted when their lists are empty.
"""
from __future__ import annotations

import re

from .formula import FormulaSyntaxError, SchemeId, format_formula, parse
from .proof import (
    AxiomInstance, Extension, ExtensionAxiom, Hypothesis, ModusPonens, Proof,
)

__all__ = ["ProofFileError", "dump_proof", "load_proof"]


class ProofFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _justification_text(just) -> str:
    if isinstance(just, AxiomInstance):
        body = ",".join(f"{k}:={format_formula(v)}" for k, v in sorted(just.sub.items()))
        return f"{just.scheme.value}{{{body}}}"
    if isinstance(just, Hypothesis):
        return f"HYP {just.index}"
    if isinstance(just, ExtensionAxiom):
        return f"EXT {just.index}"
    if isinstance(just, ModusPonens):
        return f"MP {just.major + 1} {just.minor + 1}"
    raise TypeError(f"unknown justification {just!r}")


def dump_proof(proof: Proof, ext: Extension = Extension()) -> str:
    lines = []
    if proof.hypotheses:
        lines.append("hyp: " + " ; ".join(format_formula(h) for h in proof.hypotheses))
    if ext.added_axioms:
        lines.append("ext: " + " ; ".join(format_formula(a) for a in ext.added_axioms))
    for n, (f, just) in enumerate(proof.steps, 1):
        lines.append(f"{n}. {format_formula(f)} | {_justification_text(just)}")
    return "\n".join(lines) + "\n"


_STEP = re.compile(r"(\d+)\.\s*(.*?)\s*\|\s*(.*?)\s*")
_AXIOM = re.compile(r"(AX[123])\{(.*)\}")
_BINDING = re.compile(r"\s*([ABC])\s*:=\s*(.*?)\s*")


def _formula(text: str, line: int):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise ProofFileError(line, f"bad formula {text!r}: {exc}") from None


def _formula_list(text: str, line: int) -> list:
    text = text.strip()
    if not text:
        return []
    return [_formula(part, line) for part in text.split(";")]


def _justification(text: str, line: int):
    m = _AXIOM.fullmatch(text)
    if m:
        sub = {}
        body = m.group(2).strip()
        for item in body.split(",") if body else []:
            b = _BINDING.fullmatch(item)
            if b is None:
                raise ProofFileError(line, f"bad substitution entry {item!r}")
            if b.group(1) in sub:
                raise ProofFileError(line, f"metavariable {b.group(1)} bound twice")
            sub[b.group(1)] = _formula(b.group(2), line)
        return AxiomInstance(SchemeId(m.group(1)), sub)
    parts = text.split()
    try:
        if parts[0] == "HYP" and len(parts) == 2:
            return Hypothesis(int(parts[1]))
        if parts[0] == "EXT" and len(parts) == 2:
            return ExtensionAxiom(int(parts[1]))
        if parts[0] == "MP" and len(parts) == 3:
            return ModusPonens(int(parts[1]) - 1, int(parts[2]) - 1)
    except (IndexError, ValueError):
        pass
    raise ProofFileError(line, f"bad justification {text!r}")


def load_proof(text: str) -> tuple[Proof, Extension]:
    hyps: list = []
    axioms: list = []
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("hyp:"):
            if steps:
                raise ProofFileError(lineno, "header after steps")
            hyps.extend(_formula_list(line[4:], lineno))
            continue
        if line.startswith("ext:"):
            if steps:
                raise ProofFileError(lineno, "header after steps")
            axioms.extend(_formula_list(line[4:], lineno))
            continue
        m = _STEP.fullmatch(line)
        if m is None:
            raise ProofFileError(lineno, f"cannot read step {line!r}")
        if int(m.group(1)) != len(steps) + 1:
            raise ProofFileError(lineno, f"expected step {len(steps) + 1}, found {m.group(1)}")
        steps.append((_formula(m.group(2), lineno), _justification(m.group(3), lineno)))
    if not steps:
        raise ProofFileError(0, "no proof steps")
    return Proof(hyps, steps), Extension(axioms)
