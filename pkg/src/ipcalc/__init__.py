"""Proof engineering for the implicational propositional calculus."""

from .formula import (
    Formula, FormulaSyntaxError, Implies, SchemeId, Universe, Var, apply,
    enumerate_formulas, format_formula, match_scheme, parse, q_wrap, variables_of,
)
from .semantics import BACKEND, Verdict, entails, eval_formula, is_tautology
from .proof import Extension, Proof, ProofError, check
from .prooffile import dump_proof, load_proof
from .metatheory import (
    deduction_transform, derive_theorem1, discharge_extension_axiom,
    inconsistency_from_witness, prove_identity,
)
from .search import search_proof
from .oracle import SearchOracle, SemanticOracle, parse_oracle, theoremhood_in
from .lindenbaum import (
    complete, countermodel, extract_valuation, q_consistent, run_countermodel,
    verify_valuation_claim,
)

__version__ = "0.1.0"
