"""Exit criteria, one test per criterion, each at its stated size and time
budget. Run with ``pytest tests/test_acceptance.py`` to see the summary."""
import random
import time

import pytest

from ipcalc.formula import Implies, Universe, Var, enumerate_formulas, format_formula, q_wrap, variables_of
from ipcalc.lindenbaum import NotQConsistent, TautologyError, complete, run_countermodel
from ipcalc.metatheory import (
    deduction_transform, derive_theorem1, discharge_extension_axiom, theorem1_statement,
)
from ipcalc.oracle import SemanticOracle, theoremhood_in
from ipcalc.proof import Extension, SchemeId, check, count_scheme
from ipcalc.search import search_proof
from ipcalc.semantics import entails, eval_formula, is_tautology

from generators import random_derivation, random_formula, random_proof, synthetic_q_proof
from test_metatheory import TEMPLATES, instantiate


def test_1_lemma_library(record_criterion):
    start = time.perf_counter()
    failures = []
    q, p, r, s = Var("q"), Var("p"), Var("r"), Var("s")
    for part in range(1, 9):
        proof = derive_theorem1(part, q, p, r, s)
        conclusion = check(proof)
        expected = instantiate(TEMPLATES[part], Q="q", A="p", B="r", C="s")
        peirce = count_scheme(proof, SchemeId.AX3)
        ok = (
            not proof.hypotheses
            and format_formula(conclusion) == format_formula(expected)
            and conclusion == theorem1_statement(part, q, p, r, s)
            and is_tautology(conclusion).tautology
            and (peirce >= 1 if part == 7 else peirce == 0)
        )
        if not ok:
            failures.append(part)
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < 5.0
    record_criterion("1 lemma library", passed, f"failed parts {failures}, {elapsed:.2f}s < 5s")
    assert passed


def test_2_deduction_theorem(record_criterion):
    rng = random.Random(20)
    start = time.perf_counter()
    failures = 0
    for _ in range(200):
        d = random_derivation(rng, max_hyps=3, max_steps=10, nvars=3)
        assert len(d) <= 10 and len(d.hypotheses) <= 3
        b = check(d)
        a = rng.choice(d.hypotheses)
        out = deduction_transform(d, a)
        rest = list(d.hypotheses)
        rest.remove(a)
        try:
            ok = check(out) == Implies(a, b) and list(out.hypotheses) == rest
        except ValueError:
            ok = False
        failures += not ok
    elapsed = time.perf_counter() - start
    passed = failures == 0 and elapsed < 10.0
    record_criterion("2 deduction theorem", passed, f"{failures}/200 failures, {elapsed:.2f}s < 10s")
    assert passed


def test_3_soundness_fuzz(record_criterion):
    rng = random.Random(30)
    start = time.perf_counter()
    violations = 0
    for _ in range(1000):
        proof = random_proof(rng, max_steps=10)
        conclusion = check(proof)
        violations += not is_tautology(conclusion).tautology
    elapsed = time.perf_counter() - start
    passed = violations == 0 and elapsed < 30.0
    record_criterion("3 soundness fuzz", passed, f"{violations}/1000 violations, {elapsed:.2f}s < 30s")
    assert passed


@pytest.fixture(scope="module")
def completeness_runs():
    """Countermodel pipeline over every formula on {p, q} with at most 5 leaves."""
    start = time.perf_counter()
    runs = {}
    for f in enumerate_formulas(["p", "q"], 5):
        try:
            runs[f] = run_countermodel(f, f.size, SemanticOracle())
        except TautologyError:
            runs[f] = None
    return runs, time.perf_counter() - start


def test_4_desk_scale_completeness(record_criterion, completeness_runs):
    runs, elapsed = completeness_runs
    disagreements = 0
    tautologies = 0
    for f, run in runs.items():
        taut = is_tautology(f).tautology
        if taut:
            tautologies += 1
            ok = run is None
            # The completion itself refuses: a tautology is a theorem of the base system.
            with pytest.raises(NotQConsistent):
                complete(Extension(), f, Universe.build(sorted(variables_of(f)), 1))
        else:
            ok = run is not None and eval_formula(run.assignment, f) == 0
        disagreements += not ok
    passed = disagreements == 0 and elapsed < 60.0 and len(runs) == 550
    record_criterion(
        "4 desk-scale completeness", passed,
        f"{len(runs)} formulas ({tautologies} tautologies), {disagreements} disagreements, "
        f"{elapsed:.2f}s < 60s")
    assert passed


def test_5_valuation_claim(record_criterion, completeness_runs):
    runs, _ = completeness_runs
    violations = 0
    q_not_zero = 0
    checked = 0
    completed = 0
    for f, run in runs.items():
        if run is None:
            continue
        completed += 1
        checked += run.report.checked
        violations += len(run.report.violations)
        q_not_zero += run.valuation[f] != 0
    passed = completed > 0 and violations == 0 and q_not_zero == 0
    record_criterion(
        "5 valuation claim", passed,
        f"{completed} runs, {checked} implications checked, {violations} violations, "
        f"v(Q)!=0 in {q_not_zero} runs")
    assert passed


def test_6_q_inconsistency_equivalence(record_criterion):
    rng = random.Random(60)
    vars3 = ("p", "q", "r")
    disagreements = 0
    inconsistent = 0
    for _ in range(50):
        nvars = rng.randint(1, 3)
        vars = vars3[:nvars]
        axioms = [random_formula(rng, vars, 3) for _ in range(rng.randint(0, 3))]
        q = random_formula(rng, vars, 4)
        ext = Extension(axioms)
        universe = Universe.build(vars, 4)
        assert q in universe
        session = SemanticOracle().session(ext, vars=vars)
        c1 = theoremhood_in(ext, q)
        c2 = any(session.holds(a) and session.holds(q_wrap(q, a)) for a in universe)
        c3 = any(session.holds(q_wrap(q, q_wrap(q, a))) and session.holds(q_wrap(q, a))
                 for a in universe)
        inconsistent += c1
        disagreements += not (c1 == c2 == c3)
    passed = disagreements == 0
    record_criterion("6 Q-inconsistency equivalence", passed,
                     f"50 extensions ({inconsistent} Q-inconsistent), {disagreements} disagreements")
    assert passed


def test_7_extension_axiom_discharge(record_criterion):
    rng = random.Random(70)
    failures = 0
    for _ in range(50):
        proof, ext, index, q, a = synthetic_q_proof(rng)
        assert check(proof, ext) == q and ext.added_axioms[index] == q_wrap(q, a)
        out = discharge_extension_axiom(proof, ext, index)
        try:
            ok = check(out, ext.without(index)) == q_wrap(q, q_wrap(q, a))
        except ValueError:
            ok = False
        failures += not ok
    passed = failures == 0
    record_criterion("7 extension-axiom discharge", passed, f"{failures}/50 failures")
    assert passed


def test_8_oracle_cross_check(record_criterion):
    violations = 0
    found = 0
    corpus = enumerate_formulas(["p", "q"], 4)
    for f in corpus:
        proof = search_proof(Extension(), f, 6)
        if proof is not None:
            found += 1
            assert check(proof) == f
            violations += not entails([], f)
    passed = violations == 0
    record_criterion("8 oracle cross-check", passed,
                     f"{len(corpus)} formulas, {found} proofs found, {violations} unsound")
    assert passed
