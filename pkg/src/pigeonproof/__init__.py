"""Pigeonhole CNF generators, DRAT proof generators, and a forward checker."""

from .checker import (
    ACCEPTED,
    DEFAULT_BACKEND,
    HAVE_NATIVE,
    INCOMPLETE,
    REJECTED,
    Verdict,
    check_rat,
    check_rup,
    new_database,
    verify,
)
from .counts import (
    CountBreakdown,
    IterationCount,
    cook_iteration_count,
    count_cook,
    count_cook_breakdown,
    count_ours,
    count_ours_breakdown,
    f_group,
    ours_iteration_count,
)
from .encodings import (
    Group,
    GroupLayout,
    LayerLayout,
    group_count,
    groups,
    layer_layout,
    php_amo,
    php_standard,
)
from .formats import emit_dimacs, emit_drat, parse_dimacs, parse_drat
from .model import (
    Clause,
    CnfFormula,
    Proof,
    ProofLine,
    complement,
    count_added,
)
from .proof_cook import generate_cook
from .proof_ours import (
    IterationPlan,
    alo_clauses,
    definition_clauses,
    derived_group_clauses,
    generate_ours,
    iteration_plan,
    y_definition_clauses,
)
from .proof_cook import cook_definitions, cook_pair_clauses
from .propagation import Assignment, ClauseDatabase, PropagationResult, propagate

__version__ = "0.1.0"

__all__ = [
    "ACCEPTED",
    "Assignment",
    "Clause",
    "ClauseDatabase",
    "CnfFormula",
    "CountBreakdown",
    "DEFAULT_BACKEND",
    "Group",
    "GroupLayout",
    "HAVE_NATIVE",
    "INCOMPLETE",
    "IterationCount",
    "IterationPlan",
    "LayerLayout",
    "Proof",
    "ProofLine",
    "PropagationResult",
    "REJECTED",
    "Verdict",
    "alo_clauses",
    "check_rat",
    "check_rup",
    "complement",
    "cook_definitions",
    "cook_iteration_count",
    "cook_pair_clauses",
    "count_added",
    "count_cook",
    "count_cook_breakdown",
    "count_ours",
    "count_ours_breakdown",
    "definition_clauses",
    "derived_group_clauses",
    "emit_dimacs",
    "emit_drat",
    "f_group",
    "generate_cook",
    "generate_ours",
    "group_count",
    "groups",
    "iteration_plan",
    "layer_layout",
    "new_database",
    "ours_iteration_count",
    "parse_dimacs",
    "parse_drat",
    "php_amo",
    "php_standard",
    "propagate",
    "verify",
    "y_definition_clauses",
]
