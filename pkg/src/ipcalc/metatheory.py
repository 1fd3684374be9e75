"""Constructive metatheory: proofs of ``A -> A``, the deduction-theorem
transformation, the Q-lemma library and the constructions built on it.

The lemma proofs are not stored step lists. Each is written as a short
hypothetical derivation and compiled into a hypothesis-free proof by
repeated use of :func:`deduction_transform`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, Implies, SchemeId, Var, q_wrap
from .proof import (
    Extension, ExtensionAxiom, Hypothesis, ModusPonens, Proof, ProofBuilder, check,
)

__all__ = [
    "Derivation", "Theorem1Part", "THEOREM1_PARTS", "WitnessMismatch",
    "prove_identity", "deduction_transform", "theorem1_statement",
    "derive_theorem1", "inconsistency_from_witness", "discharge_extension_axiom",
]

# A deduction from hypotheses is just a proof whose hypothesis list is in use.
Derivation = Proof


def prove_identity(a: Formula) -> Proof:
    """Five-step proof of ``a -> a`` from the first two axiom schemes."""
    aa = Implies(a, a)
    b = ProofBuilder()
    s1 = b.axiom(SchemeId.AX1, A=a, B=aa)
    s2 = b.axiom(SchemeId.AX2, A=a, B=aa, C=a)
    s3 = b.mp(s2, s1)
    s4 = b.axiom(SchemeId.AX1, A=a, B=a)
    return b.build(b.mp(s3, s4))


def _discharge(d: Proof, position: int) -> Proof:
    a = d.hypotheses[position]
    hyps = d.hypotheses[:position] + d.hypotheses[position + 1:]
    b = ProofBuilder(hyps)
    # lifted[j] is the step of the new proof that proves a -> (formula of step j)
    lifted: list[int] = []
    identity = None
    for phi, just in d.steps:
        if isinstance(just, Hypothesis) and d.hypotheses[just.index] == a:
            if identity is None:
                identity = b.include(prove_identity(a))
            i = identity
        elif isinstance(just, ModusPonens):
            minor = d.steps[just.minor].formula
            s = b.axiom(SchemeId.AX2, A=a, B=minor, C=phi)
            t = b.mp(s, lifted[just.major])
            i = b.mp(t, lifted[just.minor])
        else:
            if isinstance(just, Hypothesis):
                k = just.index
                src = b.add(phi, Hypothesis(k if k < position else k - 1))
            else:
                src = b.add(phi, just)
            i = b.mp(b.axiom(SchemeId.AX1, A=phi, B=a), src)
        lifted.append(i)
    return b.build(lifted[-1])


def deduction_transform(d: Derivation, a: Formula, ext: Extension = Extension(),
                        validate: bool = True) -> Proof:
    """Turn a derivation of ``B`` from ``hypotheses`` into one of ``a -> B``
    from ``hypotheses`` without (the first occurrence of) ``a``."""
    if a not in d.hypotheses:
        raise ValueError(f"{a} is not a hypothesis of the derivation")
    if validate:
        check(d, ext)
    return _discharge(d, d.hypotheses.index(a))


def _discharge_in_order(proof: Proof, *formulas: Formula) -> Proof:
    for f in formulas:
        proof = _discharge(proof, proof.hypotheses.index(f))
    return proof


# --- the Q-lemma library -----------------------------------------------------

@dataclass(frozen=True)
class Theorem1Part:
    index: int
    metavariables: tuple[str, ...]
    uses_q: bool
    needs_peirce: bool


THEOREM1_PARTS = {
    1: Theorem1Part(1, ("A", "B", "C"), False, False),
    2: Theorem1Part(2, ("A", "B"), True, False),
    3: Theorem1Part(3, ("A",), True, False),
    4: Theorem1Part(4, ("A",), True, False),
    5: Theorem1Part(5, ("A", "B"), True, False),
    6: Theorem1Part(6, ("A", "B"), True, False),
    7: Theorem1Part(7, ("A", "B"), True, True),
    8: Theorem1Part(8, ("A", "B"), True, False),
}


def theorem1_statement(part: int, q: Formula, a: Formula, b: Formula = None,
                       c: Formula = None) -> Formula:
    """The formula that part ``part`` of the lemma library asserts."""
    Q = lambda x: q_wrap(q, x)  # noqa: E731
    imp = Implies
    if part == 1:
        return imp(imp(a, b), imp(imp(b, c), imp(a, c)))
    if part == 2:
        return imp(imp(a, b), imp(Q(b), Q(a)))
    if part == 3:
        return imp(a, Q(Q(a)))
    if part == 4:
        return imp(Q(Q(Q(a))), Q(a))
    if part == 5:
        return imp(Q(Q(b)), Q(Q(imp(a, b))))
    if part == 6:
        return imp(Q(Q(a)), imp(Q(b), Q(imp(a, b))))
    if part == 7:
        return imp(Q(a), Q(Q(imp(a, b))))
    if part == 8:
        return imp(imp(Q(a), b), imp(imp(Q(Q(a)), b), Q(Q(b))))
    raise ValueError(f"no part {part}; parts are 1..8")


def _part1(a, b, c):
    bld = ProofBuilder([Implies(a, b), Implies(b, c), a])
    mid = bld.mp(bld.hyp(Implies(a, b)), bld.hyp(a))
    bld.mp(bld.hyp(Implies(b, c)), mid)
    return _discharge_in_order(bld.build(), a, Implies(b, c), Implies(a, b))


def _part3(q, a):
    qa = q_wrap(q, a)
    bld = ProofBuilder([a, qa])
    bld.mp(bld.hyp(qa), bld.hyp(a))
    return _discharge_in_order(bld.build(), qa, a)


def _part4(q, a):
    qqqa = q_wrap(q, q_wrap(q, q_wrap(q, a)))
    bld = ProofBuilder([qqqa, a])
    qqa = bld.mp(bld.include(_part3(q, a)), bld.hyp(a))
    bld.mp(bld.hyp(qqqa), qqa)
    return _discharge_in_order(bld.build(), a, qqqa)


def _part5(q, a, b):
    qqb = q_wrap(q, q_wrap(q, b))
    q_ab = q_wrap(q, Implies(a, b))
    bld = ProofBuilder([qqb, q_ab, b])
    ab = bld.mp(bld.axiom(SchemeId.AX1, A=b, B=a), bld.hyp(b))
    bld.mp(bld.hyp(q_ab), ab)
    qb_proof = _discharge_in_order(bld.build(), b)
    bld = ProofBuilder(qb_proof.hypotheses)
    qb = bld.include(qb_proof)
    bld.mp(bld.hyp(qqb), qb)
    return _discharge_in_order(bld.build(), q_ab, qqb)


def _part6(q, a, b):
    qqa = q_wrap(q, q_wrap(q, a))
    qb = q_wrap(q, b)
    ab = Implies(a, b)
    bld = ProofBuilder([qqa, qb, ab, a])
    bb = bld.mp(bld.hyp(ab), bld.hyp(a))
    bld.mp(bld.hyp(qb), bb)
    qa_proof = _discharge_in_order(bld.build(), a)
    bld = ProofBuilder(qa_proof.hypotheses)
    qa = bld.include(qa_proof)
    bld.mp(bld.hyp(qqa), qa)
    return _discharge_in_order(bld.build(), ab, qb, qqa)


def _part7(q, a, b):
    qa = q_wrap(q, a)
    q_ab = q_wrap(q, Implies(a, b))
    q_to_b = Implies(q, b)
    # From Q -> B and the two premises, derive A -> B and hence Q.
    bld = ProofBuilder([qa, q_ab, q_to_b, a])
    got_q = bld.mp(bld.hyp(qa), bld.hyp(a))
    bld.mp(bld.hyp(q_to_b), got_q)
    ab_proof = _discharge_in_order(bld.build(), a)
    bld = ProofBuilder(ab_proof.hypotheses)
    ab = bld.include(ab_proof)
    bld.mp(bld.hyp(q_ab), ab)
    # Discharge Q -> B, then close with the Peirce instance ((Q->B)->Q)->Q.
    qbq_proof = _discharge_in_order(bld.build(), q_to_b)
    bld = ProofBuilder(qbq_proof.hypotheses)
    qbq = bld.include(qbq_proof)
    bld.mp(bld.axiom(SchemeId.AX3, A=q, B=b), qbq)
    return _discharge_in_order(bld.build(), q_ab, qa)


def _part8(q, a, b):
    qa = q_wrap(q, a)
    qqa = q_wrap(q, qa)
    qb = q_wrap(q, b)
    h1 = Implies(qa, b)
    h2 = Implies(qqa, b)
    bld = ProofBuilder([h1, h2, qb, qa])
    bb = bld.mp(bld.hyp(h1), bld.hyp(qa))
    bld.mp(bld.hyp(qb), bb)
    qqa_proof = _discharge_in_order(bld.build(), qa)
    bld = ProofBuilder(qqa_proof.hypotheses)
    got_qqa = bld.include(qqa_proof)
    bb = bld.mp(bld.hyp(h2), got_qqa)
    bld.mp(bld.hyp(qb), bb)
    return _discharge_in_order(bld.build(), qb, h2, h1)


def derive_theorem1(part: int, q: Formula = Var("q"), a: Formula = Var("p"),
                    b: Formula = Var("r"), c: Formula = Var("s")) -> Proof:
    """Hypothesis-free proof of :func:`theorem1_statement` for ``part``.

    Only part 7 uses the Peirce scheme.
    """
    if part == 1:
        proof = _part1(a, b, c)
    elif part == 2:
        proof = _part1(a, b, q)
    elif part == 3:
        proof = _part3(q, a)
    elif part == 4:
        proof = _part4(q, a)
    elif part == 5:
        proof = _part5(q, a, b)
    elif part == 6:
        proof = _part6(q, a, b)
    elif part == 7:
        proof = _part7(q, a, b)
    elif part == 8:
        proof = _part8(q, a, b)
    else:
        raise ValueError(f"no part {part}; parts are 1..8")
    assert proof.conclusion == theorem1_statement(part, q, a, b, c)
    assert not proof.hypotheses
    return proof


# --- constructions on extensions ----------------------------------------------

class WitnessMismatch(ValueError):
    pass


def inconsistency_from_witness(ext: Extension, q: Formula, proof_a: Proof,
                               proof_qa: Proof) -> Proof:
    """Given proofs of some ``A`` and of ``A -> q`` in ``ext``, build a proof of
    ``q`` that passes through ``(A -> q) -> q``."""
    a = check(proof_a, ext)
    qa = check(proof_qa, ext)
    if qa != q_wrap(q, a):
        raise WitnessMismatch(f"{qa} is not {q_wrap(q, a)}")
    bld = ProofBuilder(proof_a.hypotheses)
    got_a = bld.include(proof_a)
    got_qa = bld.include(proof_qa)
    qqa = bld.mp(bld.include(derive_theorem1(3, q, a)), got_a)
    return bld.build(bld.mp(qqa, got_qa))


def discharge_extension_axiom(p: Proof, ext_n: Extension, axiom_index: int) -> Proof:
    """Move added axiom ``axiom_index`` into the hypotheses and discharge it.

    The result proves ``axiom -> conclusion`` in ``ext_n.without(axiom_index)``.
    """
    if not 0 <= axiom_index < len(ext_n.added_axioms):
        raise IndexError(f"extension has no axiom {axiom_index}")
    check(p, ext_n)
    removed = ext_n.added_axioms[axiom_index]
    position = len(p.hypotheses)
    steps = []
    for f, just in p.steps:
        if isinstance(just, ExtensionAxiom):
            if just.index == axiom_index:
                just = Hypothesis(position)
            elif just.index > axiom_index:
                just = ExtensionAxiom(just.index - 1)
        steps.append((f, just))
    return _discharge(Proof(p.hypotheses + (removed,), steps), position)
