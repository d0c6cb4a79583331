"""Leavitt path algebras realized as partial skew group rings over the free group.

The package builds the boundary path space of a directed graph, the partial
action of the free group on its locally constant functions, the skew group
ring, and the comparison map from the Leavitt path algebra. Graded ring
properties are decided together with certificates that can be re-checked
by plain multiplication.
"""
from .beta import DsFunction, beta_extend, beta_generator, iso_agreement_check, vertex_replacement
from .boundary import EventuallyPeriodic, FiniteToSink, cylinder_partition, theta_apply
from .corpus import corpus, load_corpus_graph, random_graph, random_graphs
from .fields import RATIONALS, field_from_spec, prime_field
from .functions import DFunction, indicator_word, parse_dfunction
from .graded import (
    decide_all,
    decide_graded_clean,
    decide_graded_unit_regular,
    decide_strongly_graded,
    equivalence_crosscheck,
    is_loop,
    laurent_check,
)
from .graph import Edge, Graph, GraphError, Path, load_graph
from .lpa import GradeMorphism, grade_decompose, lpa_equals, parse, phi, verify_ck
from .partial_action import DomainError, alpha_apply, domain_ideal, unit_of, verify_axioms
from .report import Record, Report
from .skew import SkewElement, check_associativity, check_strong_grading, find_annihilator, multiply
from .words import Word, classify

__all__ = [
    "DsFunction", "beta_extend", "beta_generator", "iso_agreement_check", "vertex_replacement",
    "EventuallyPeriodic", "FiniteToSink", "cylinder_partition", "theta_apply",
    "corpus", "load_corpus_graph", "random_graph", "random_graphs",
    "RATIONALS", "field_from_spec", "prime_field",
    "DFunction", "indicator_word", "parse_dfunction",
    "decide_all", "decide_graded_clean", "decide_graded_unit_regular", "decide_strongly_graded",
    "equivalence_crosscheck", "is_loop", "laurent_check",
    "Edge", "Graph", "GraphError", "Path", "load_graph",
    "GradeMorphism", "grade_decompose", "lpa_equals", "parse", "phi", "verify_ck",
    "DomainError", "alpha_apply", "domain_ideal", "unit_of", "verify_axioms",
    "Record", "Report",
    "SkewElement", "check_associativity", "check_strong_grading", "find_annihilator", "multiply",
    "Word", "classify",
]
__version__ = "0.1.0"
