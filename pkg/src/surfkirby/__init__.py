"""Exact invariants of surfaces in 4-manifolds from banded Kirby diagrams.

Colors come from the pointed braided category of Z/N-graded vector spaces with
a matrix Frobenius algebra and a rank-two module; all arithmetic is carried out
in the cyclotomic field Q(zeta_N).
"""
from __future__ import annotations

from .algebra import CycloNumber, InertiaTriple, cyclotomic_polynomial, euler_phi, inertia, zeta_pow
from .category import (CategoryError, CategoryParams, ConditionError, FrobeniusData, GradedMap,
                       GradedObject, ModuleData, braiding, cap_scalar, cup_scalar, frobenius_data,
                       kirby_object, module_data, swim_check, transparent_degrees, twist,
                       verify_frobenius, verify_module)
from .diagram import Cell, Diagram, DiagramError, Strand, link_summary, parse, serialize, validate
from .engine import EvalContext, EvaluationError, context_for, eval_closed, eval_morphism, statesum_eval
from .fixtures import FIXTURES, Fixture
from .invariant import InvariantReport, deltas, invariant
from .moves import KINDS, MoveError, MoveSpec, apply_move, check_invariance, fuzz

__version__ = "0.1.0"

__all__ = [
    "CycloNumber", "InertiaTriple", "cyclotomic_polynomial", "euler_phi", "inertia", "zeta_pow",
    "CategoryError", "CategoryParams", "ConditionError", "FrobeniusData", "GradedMap",
    "GradedObject", "ModuleData", "braiding", "cap_scalar", "cup_scalar", "frobenius_data",
    "kirby_object", "module_data", "swim_check", "transparent_degrees", "twist",
    "verify_frobenius", "verify_module",
    "Cell", "Diagram", "DiagramError", "Strand", "link_summary", "parse", "serialize", "validate",
    "EvalContext", "EvaluationError", "context_for", "eval_closed", "eval_morphism",
    "statesum_eval", "FIXTURES", "Fixture", "InvariantReport", "deltas", "invariant",
    "KINDS", "MoveError", "MoveSpec", "apply_move", "check_invariance", "fuzz",
]
