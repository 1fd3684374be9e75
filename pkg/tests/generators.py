"""Seeded random generators of formulas, derivations and proofs for tests."""

from ipcalc.formula import Implies, SchemeId, Var, apply, SCHEMES, q_wrap
from ipcalc.proof import (
    AxiomInstance, Extension, ExtensionAxiom, Hypothesis, ModusPonens, Proof,
)

VARS = ("p", "q", "r")


def random_formula(rng, vars=VARS, max_size=3):
    size = rng.randint(1, max_size)
    return _formula_of_size(rng, vars, size)


def _formula_of_size(rng, vars, size):
    if size == 1:
        return Var(rng.choice(vars))
    left = rng.randint(1, size - 1)
    return Implies(_formula_of_size(rng, vars, left), _formula_of_size(rng, vars, size - left))


def _random_axiom(rng, vars, max_size=2):
    scheme = rng.choice(list(SchemeId))
    names = ("A", "B", "C") if scheme == SchemeId.AX2 else ("A", "B")
    sub = {m: random_formula(rng, vars, max_size) for m in names}
    return apply(sub, SCHEMES[scheme]), AxiomInstance(scheme, sub)


def _mp_pairs(steps):
    pairs = []
    for i, (f, _) in enumerate(steps):
        if type(f) is not Implies:
            continue
        for j, (g, _) in enumerate(steps):
            if g == f.antecedent:
                pairs.append((i, j))
    return pairs


def random_proof(rng, hypotheses=(), ext=Extension(), vars=VARS, max_steps=10):
    """A kernel-valid proof with up to ``max_steps`` steps.

    Besides random axioms and premises it lifts existing steps through AX1
    and AX2 so that modus ponens gets used often.
    """
    steps = []
    target = rng.randint(1, max_steps)
    premises = [(h, Hypothesis(i)) for i, h in enumerate(hypotheses)]
    premises += [(a, ExtensionAxiom(i)) for i, a in enumerate(ext.added_axioms)]
    while len(steps) < target:
        room = target - len(steps)
        pairs = _mp_pairs(steps)
        roll = rng.random()
        if pairs and roll < 0.35:
            i, j = rng.choice(pairs)
            steps.append((steps[i][0].consequent, ModusPonens(i, j)))
        elif premises and roll < 0.6:
            steps.append(rng.choice(premises))
        elif steps and room >= 2 and roll < 0.8:
            # x, AX1 x -> (b -> x), MP b -> x
            k = rng.randrange(len(steps))
            x = steps[k][0]
            b = random_formula(rng, vars, 2)
            steps.append((Implies(x, Implies(b, x)), AxiomInstance(SchemeId.AX1, {"A": x, "B": b})))
            steps.append((Implies(b, x), ModusPonens(len(steps) - 1, k)))
        elif steps and room >= 2:
            # a -> (b -> c) gives (a -> b) -> (a -> c) via AX2
            cands = [
                k for k, (f, _) in enumerate(steps)
                if type(f) is Implies and type(f.consequent) is Implies
            ]
            if not cands:
                steps.append(_random_axiom(rng, vars))
                continue
            k = rng.choice(cands)
            f = steps[k][0]
            a, b, c = f.antecedent, f.consequent.antecedent, f.consequent.consequent
            sub = {"A": a, "B": b, "C": c}
            steps.append((apply(sub, SCHEMES[SchemeId.AX2]), AxiomInstance(SchemeId.AX2, sub)))
            steps.append((Implies(Implies(a, b), Implies(a, c)), ModusPonens(len(steps) - 1, k)))
        else:
            steps.append(_random_axiom(rng, vars))
    return Proof(hypotheses, steps)


def random_derivation(rng, max_hyps=3, max_steps=10, nvars=3):
    """A kernel-valid derivation from 1..max_hyps hypotheses that cites at
    least one of them."""
    vars = VARS[:nvars]
    hyps = []
    for _ in range(rng.randint(1, max_hyps)):
        if hyps and rng.random() < 0.5:
            hyps.append(Implies(rng.choice(hyps), random_formula(rng, vars, 2)))
        else:
            hyps.append(random_formula(rng, vars, 2))
    while True:
        d = random_proof(rng, hyps, vars=vars, max_steps=max_steps)
        if any(isinstance(j, Hypothesis) for _, j in d.steps):
            return d


def synthetic_q_proof(rng, nvars=3):
    """A proof of some q in an extension containing QA.

    Returns ``(proof, ext, index_of_QA, q, a)``.
    """
    vars = VARS[:nvars]
    q = random_formula(rng, vars, 3)
    a = random_formula(rng, vars, 3)
    qa = q_wrap(q, a)
    others = [random_formula(rng, vars, 3) for _ in range(rng.randint(0, 2))]
    kind = rng.choice(["a", "qqa", "q"])
    support = {"a": a, "qqa": q_wrap(q, qa), "q": q}[kind]
    axioms = others + [support]
    rng.shuffle(axioms)
    index = rng.randint(0, len(axioms))
    axioms.insert(index, qa)
    ext = Extension(axioms)
    s = axioms.index(support)
    prefix = random_proof(rng, ext=ext, vars=vars, max_steps=4).steps
    steps = list(prefix)
    if kind == "q":
        steps.append((q, ExtensionAxiom(s)))
    else:
        steps.append((support, ExtensionAxiom(s)))
        steps.append((qa, ExtensionAxiom(index)))
        if kind == "a":
            steps.append((q, ModusPonens(len(steps) - 1, len(steps) - 2)))
        else:
            steps.append((q, ModusPonens(len(steps) - 2, len(steps) - 1)))
    return Proof((), steps), ext, index, q, a
