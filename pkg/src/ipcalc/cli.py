"""Command-line interface: ``ipcalc <command> ...``.

Output formats are documented in FORMAT.md.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .formula import FormulaSyntaxError, SchemeId, format_formula, parse, variables_of
from .lindenbaum import (
    ConsistencyLost, ExtractionError, NotQConsistent, TautologyError, complete,
    extract_valuation, run_countermodel, universe, verify_valuation_claim,
)
from .metatheory import THEOREM1_PARTS, deduction_transform, derive_theorem1
from .oracle import OracleLimitError, parse_oracle
from .proof import Extension, ProofError, check, count_scheme
from .prooffile import ProofFileError, dump_proof, load_proof
from .semantics import BACKEND, VariableLimitError, is_tautology


class CommandError(Exception):
    """Reported as ``error: <message>`` with exit status 1."""


def _formula(text):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise CommandError(f"bad formula {text!r}: {exc}") from None


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc.strerror}") from None


def _assignment_text(assignment):
    return " ".join(f"{k}={v}" for k, v in sorted(assignment.items()))


def _load(path):
    try:
        return load_proof(_read(path))
    except ProofFileError as exc:
        raise CommandError(f"{path}: {exc}") from None


def cmd_check(args):
    proof, ext = _load(args.prooffile)
    try:
        conclusion = check(proof, ext)
    except ProofError as exc:
        raise CommandError(f"{args.prooffile}: {exc}") from None
    print(f"ok: {format_formula(conclusion)}")


def cmd_taut(args):
    f = _formula(args.formula)
    verdict = is_tautology(f)
    if args.json:
        cm = None
        if verdict.countermodel is not None:
            cm = [[k, v] for k, v in sorted(verdict.countermodel.items())]
        record = {
            "formula": format_formula(f),
            "verdict": "tautology" if verdict.tautology else "not tautology",
            "countermodel": cm,
        }
        print(json.dumps(record))
    elif verdict.tautology:
        print("tautology")
    else:
        print("not tautology")
        print(f"countermodel: {_assignment_text(verdict.countermodel)}")


def cmd_dt(args):
    proof, ext = _load(args.prooffile)
    a = _formula(args.discharge)
    try:
        out = deduction_transform(proof, a, ext)
    except ProofError as exc:
        raise CommandError(f"{args.prooffile}: {exc}") from None
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    _write(dump_proof(out, ext), args.output)


def _part_number(name):
    prefix, _, k = name.partition(".")
    if prefix != "thm1" or not k.isdigit() or int(k) not in THEOREM1_PARTS:
        raise CommandError(f"unknown lemma {name!r}; use thm1.1 .. thm1.8")
    return int(k)


def cmd_derive(args):
    part = _part_number(args.lemma)
    proof = derive_theorem1(part, _formula(args.q), _formula(args.a),
                            _formula(args.b), _formula(args.c))
    _write(dump_proof(proof), args.output)


def _oracle(text):
    try:
        return parse_oracle(text)
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def _trace_lines(trace):
    for r in trace.records:
        yield json.dumps({"n": r.n, "formula": format_formula(r.formula),
                          "verdict": r.verdict, "added": r.added})


def _summary(trace, valuation=None, report=None):
    out = {
        "q": format_formula(trace.q),
        "universe_size": len(trace.universe),
        "added_axioms": [format_formula(a) for a in trace.added],
    }
    if valuation is not None:
        out["valuation"] = [[format_formula(f), valuation.values[f]] for f in trace.universe]
        out["assignment"] = [[k, v] for k, v in sorted(valuation.assignment.items())]
    if report is not None:
        out["claim_checked"] = report.checked
        out["claim_violations"] = len(report.violations)
    return json.dumps({"summary": out})


def _emit_trace(trace, path):
    lines = "".join(line + "\n" for line in _trace_lines(trace))
    if path:
        _write(lines, path)
    else:
        sys.stdout.write(lines)


def cmd_complete(args):
    q = _formula(args.q)
    names = args.vars.split(",") if args.vars else sorted(variables_of(q))
    oracle = _oracle(args.oracle)
    try:
        u = universe(tuple(sorted(set(names) | variables_of(q))), args.bound)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    except MemoryError as exc:
        raise CommandError(str(exc)) from None
    trace = complete(Extension(), q, u, oracle)
    valuation = report = None
    try:
        valuation = extract_valuation(trace, oracle)
        report = verify_valuation_claim(valuation)
    except ExtractionError as exc:
        print(f"warning: {exc}", file=sys.stderr)
    _emit_trace(trace, args.trace)
    print(_summary(trace, valuation, report))


def cmd_countermodel(args):
    q = _formula(args.q)
    names = args.vars.split(",") if args.vars else None
    run = run_countermodel(q, args.bound, _oracle(args.oracle), args.retries, vars=names)
    if args.trace:
        _emit_trace(run.trace, args.trace)
        _write(_summary(run.trace, run.valuation, run.report) + "\n", args.trace + ".summary")
    if args.json:
        print(json.dumps({
            "formula": format_formula(q),
            "assignment": [[k, v] for k, v in sorted(run.assignment.items())],
            "universe_size": len(run.trace.universe),
            "claim_violations": len(run.report.violations),
        }))
    else:
        print(_assignment_text(run.assignment))


def _selftest_rows():
    for k in sorted(THEOREM1_PARTS):
        start = time.perf_counter()
        proof = derive_theorem1(k)
        conclusion = check(proof)
        peirce = count_scheme(proof, SchemeId.AX3)
        ok = is_tautology(conclusion).tautology and (
            peirce >= 1 if THEOREM1_PARTS[k].needs_peirce else peirce == 0)
        yield (f"thm1.{k}", ok,
               f"{len(proof)} steps, {peirce} AX3, {time.perf_counter() - start:.3f}s")
    for text in ("p", "(p -> q) -> q", "p -> q"):
        q = parse(text)
        run = run_countermodel(q)
        assignment = run.assignment
        ok = run.report.ok and run.valuation[q] == 0
        yield (f"countermodel {format_formula(q)}", ok,
               f"{_assignment_text(assignment)}, {len(run.trace.added)} axioms added, "
               f"{run.report.checked} claim checks")
    try:
        run_countermodel(parse("((p -> q) -> p) -> p"))
        yield ("refuse tautology", False, "countermodel returned")
    except TautologyError:
        yield ("refuse tautology", True, "Peirce instance refused")


def cmd_selftest(args):
    failed = 0
    print(f"kernel backend: {BACKEND}")
    for name, ok, detail in _selftest_rows():
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<28} {detail}")
    if failed:
        raise CommandError(f"{failed} selftest checks failed")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ipcalc",
        description="Proof checking and countermodels for the implicational propositional calculus.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("check", help="check a proof file")
    p.add_argument("prooffile")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("taut", help="decide a formula by truth table")
    p.add_argument("formula")
    p.add_argument("--json", action="store_true", help="print one JSON record")
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("dt", help="discharge a hypothesis from a proof file")
    p.add_argument("prooffile")
    p.add_argument("--discharge", required=True, metavar="FORMULA")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dt)

    p = sub.add_parser("derive", help="emit a proof of a library lemma")
    p.add_argument("lemma", help="thm1.1 .. thm1.8")
    p.add_argument("--q", default="q")
    p.add_argument("--a", default="p")
    p.add_argument("--b", default="r")
    p.add_argument("--c", default="s")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_derive)

    for name, func, help_ in (
        ("complete", cmd_complete, "complete the base system against --q"),
        ("countermodel", cmd_countermodel, "find a falsifying assignment for --q"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--q", required=True, metavar="FORMULA")
        p.add_argument("--vars", help="comma-separated variables (default: those of --q)")
        p.add_argument("--oracle", default="semantic", help="semantic | search:<depth>")
        p.add_argument("--trace", metavar="PATH", help="write the trace records here")
        if name == "complete":
            p.add_argument("--bound", type=int, default=3)
        else:
            p.add_argument("--bound", type=int, default=None)
            p.add_argument("--retries", type=int, default=3)
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", help="build and check the lemma library and sample completions")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TautologyError, NotQConsistent, ExtractionError, ConsistencyLost,
            OracleLimitError, VariableLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
