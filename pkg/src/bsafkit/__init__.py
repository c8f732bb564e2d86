"""Reasoning over bipolar set-based argumentation frameworks and non-flat ABA."""

from .aba import ABAF, Rule, derivable_tails, direct_extensions, instantiate, parse_abaf
from .classical import enumerate_classical, enumerate_gamma, gamma_closure, is_gamma_closed
from .framework import (BSAF, Edge, ParseError, SizeCapExceeded, attacked_by, closed_sets,
                        closure, defends, gamma, is_closed, is_conflict_free, parse_bsaf)
from .principles import (GenParams, Principle, PrincipleReport, check_principle,
                         find_paradoxical, random_abaf, random_bsaf, restrict, verify_witness)
from .reducts import ReductVariant, alt_reduct, frameworks_equal, gamma_reduct, reduct, reduct_by
from .semantics import ALL_SEMANTICS, extensions
from .strong import (enumerate_strong, enumerate_strong_gamma, is_strongly_defended,
                     strong_sequence)
from .weak import enumerate_weak, is_weakly_admissible, is_weakly_admissible_cc, w_defends

__all__ = [
    "ABAF", "ALL_SEMANTICS", "BSAF", "Edge", "GenParams", "ParseError", "Principle",
    "PrincipleReport", "ReductVariant", "Rule", "SizeCapExceeded", "alt_reduct",
    "attacked_by", "check_principle", "closed_sets", "closure", "defends",
    "derivable_tails", "direct_extensions", "enumerate_classical", "enumerate_gamma",
    "enumerate_strong", "enumerate_strong_gamma", "enumerate_weak", "extensions",
    "find_paradoxical", "frameworks_equal", "gamma", "gamma_closure", "gamma_reduct",
    "instantiate", "is_closed", "is_conflict_free", "is_gamma_closed",
    "is_strongly_defended", "is_weakly_admissible", "is_weakly_admissible_cc",
    "parse_abaf", "parse_bsaf", "random_abaf", "random_bsaf", "reduct", "reduct_by",
    "restrict", "strong_sequence", "verify_witness", "w_defends",
]
