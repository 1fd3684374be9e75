import random

import pytest

from ipcalc.formula import Implies, Universe, Var, enumerate_formulas, parse, q_wrap
from ipcalc.lindenbaum import (
    ExtractionError, FormulaValuation, NotQConsistent, TautologyError, complete,
    countermodel, extract_valuation, q_consistent, run_countermodel,
    verify_valuation_claim,
)
from ipcalc.oracle import SearchOracle, SemanticOracle, parse_oracle, theoremhood_in
from ipcalc.proof import Extension
from ipcalc.semantics import entails, eval_formula

p, q = Var("p"), Var("q")


class TestTheoremhood:
    def test_identity_in_base(self):
        assert theoremhood_in(Extension(), parse("q->q"))
        assert theoremhood_in(Extension(), parse("q->q"), SearchOracle(3))

    def test_variable_not_a_theorem(self):
        assert not theoremhood_in(Extension(), p)
        assert not theoremhood_in(Extension(), p, SearchOracle(4))

    def test_extension(self):
        assert not theoremhood_in(Extension([parse("p->p")]), parse("(p->p)->p"))

    def test_parse_oracle(self):
        assert isinstance(parse_oracle("semantic"), SemanticOracle)
        assert parse_oracle("search:6").depth == 6
        for bad in ("search", "search:x", "smt"):
            with pytest.raises(ValueError):
                parse_oracle(bad)

    def test_semantic_session_grows_variables(self):
        session = SemanticOracle().session(Extension([p]))
        assert session.holds(parse("q -> p"))
        assert not session.holds(q)
        session.add(parse("p -> q"))
        assert session.holds(q)
        assert session.extension == Extension([p, parse("p->q")])


class TestQConsistency:
    def test_examples(self):
        assert q_consistent(Extension(), p)
        assert not q_consistent(Extension([p]), p)
        assert not q_consistent(Extension([parse("p->q"), p]), q)


class TestComplete:
    def test_two_formula_universe(self):
        u = Universe.build(["p"], 2)
        trace = complete(Extension(), p, u)
        assert [(r.n, r.formula, r.verdict, r.added) for r in trace.records] == [
            (0, p, False, True),
            (1, parse("p->p"), True, False),
        ]
        assert trace.extension == Extension([parse("p->p")])

    def test_result_is_q_consistent(self):
        big_q = parse("p->q")
        trace = complete(Extension(), big_q, Universe.build(["p", "q"], 4))
        assert q_consistent(trace.extension, big_q)

    def test_precondition(self):
        with pytest.raises(NotQConsistent):
            complete(Extension([q]), q, Universe.build(["q"], 2))

    @pytest.mark.parametrize("text", ["p", "p->q", "(p->q)->q", "q->(p->q)->p"])
    def test_invariants(self, text):
        big_q = parse(text)
        base = Extension([parse("q -> p")]) if text == "p->q" else Extension()
        u = Universe.build(["p", "q"], 4)
        trace = complete(base, big_q, u)
        axioms = list(base.added_axioms)
        for r in trace.records:
            assert r.added == (not r.verdict)
            assert r.verdict == entails(axioms, q_wrap(big_q, q_wrap(big_q, r.formula)))
            if r.added:
                axioms.append(q_wrap(big_q, r.formula))
                assert not entails(axioms, big_q)
        assert list(trace.extension.added_axioms) == axioms
        assert list(trace.added) == [q_wrap(big_q, r.formula) for r in trace.records if r.added]
        for a in u:
            assert entails(axioms, q_wrap(big_q, q_wrap(big_q, a))) or entails(axioms, q_wrap(big_q, a))

    def test_deterministic(self):
        u = Universe.build(["p", "q"], 4)
        a = complete(Extension(), parse("p->q"), u)
        b = complete(Extension(), parse("p->q"), u)
        assert a.records == b.records and a.extension == b.extension

    def test_search_oracle(self):
        u = Universe.build(["p"], 2)
        oracle = SearchOracle(4)
        trace = complete(Extension(), p, u, oracle)
        v = extract_valuation(trace, oracle)
        assert v[p] == 0 and v[parse("p->p")] == 1


class TestExtract:
    def test_q_equals_p(self):
        trace = complete(Extension(), p, Universe.build(["p"], 2))
        v = extract_valuation(trace)
        assert v[p] == 0 and v[parse("p->p")] == 1
        assert v.assignment == {"p": 0}

    def test_q_itself_is_false(self):
        for text in ("p->q", "(p->q)->q", "q"):
            big_q = parse(text)
            u = Universe.build(["p", "q"], 3)
            v = extract_valuation(complete(Extension(), big_q, u))
            assert v[big_q] == 0

    def test_one_when_qqa_holds(self):
        big_q = parse("p->q")
        trace = complete(Extension(), big_q, Universe.build(["p", "q"], 3))
        v = extract_valuation(trace)
        for a in trace.universe:
            if entails(trace.extension.added_axioms, q_wrap(big_q, q_wrap(big_q, a))):
                assert v[a] == 1
            else:
                assert v[a] == 0

    def test_undefined_without_completion(self):
        trace = complete(Extension(), q, Universe.build(["p", "q"], 1))
        trace.extension = Extension()
        with pytest.raises(ExtractionError) as info:
            extract_valuation(trace)
        assert info.value.kind == "undefined" and info.value.formulas == [p]

    def test_contradiction(self):
        trace = complete(Extension(), q, Universe.build(["p", "q"], 1))
        trace.extension = Extension([q])
        with pytest.raises(ExtractionError) as info:
            extract_valuation(trace)
        assert info.value.kind == "contradiction"


class TestClaim:
    def test_completion_satisfies_claim(self):
        trace = complete(Extension(), p, Universe.build(["p"], 2))
        report = verify_valuation_claim(extract_valuation(trace))
        assert report.ok and report.checked == 1

    def test_closed_universe(self):
        for text in ("p->q", "(p->q)->q", "q->p", "p"):
            big_q = parse(text)
            u = Universe.build(["p", "q"], 4)
            v = extract_valuation(complete(Extension(), big_q, u))
            report = verify_valuation_claim(v)
            assert report.ok and report.checked > 0
            for a in u:
                assert v[a] == eval_formula(v.assignment, a)

    def test_synthetic_violation(self):
        u = Universe((p, q, Implies(p, q)), ("p", "q"), 2)
        bad = FormulaValuation(q, u, {p: 1, q: 0, Implies(p, q): 1}, {"p": 1, "q": 0})
        report = verify_valuation_claim(bad)
        assert len(report.violations) == 1
        assert report.violations[0].values == (1, 0, 1)


class TestCountermodel:
    def test_variable(self):
        assert countermodel(p) == {"p": 0}

    def test_qq(self):
        assert countermodel(parse("(p->q)->q")) == {"p": 0, "q": 0}

    def test_peirce_refused(self):
        with pytest.raises(TautologyError):
            countermodel(parse("((p->q)->p)->p"))

    def test_falsifies(self):
        rng = random.Random(2)
        corpus = enumerate_formulas(["p", "q", "r"], 4)
        for f in rng.sample(corpus, 40):
            try:
                a = countermodel(f)
            except TautologyError:
                continue
            assert eval_formula(a, f) == 0

    def test_retry_enlarges_bound(self):
        f = parse("(p->q)->(q->p)")
        run = run_countermodel(f, size_bound=2)
        assert run.trace.universe.size_bound == 4
        assert eval_formula(run.assignment, f) == 0
        with pytest.raises(ExtractionError):
            run_countermodel(f, size_bound=2, retries=1)

    def test_extra_variables(self):
        run = run_countermodel(p, vars=["q"])
        assert set(run.assignment) == {"p", "q"} and run.assignment["p"] == 0
