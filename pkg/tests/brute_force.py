"""Satisfiability oracles by exhaustive search; independent of the package."""

from __future__ import annotations

from collections import defaultdict
from itertools import product


def enumerate_models(num_vars, clauses):
    """All models by flat enumeration of 2^num_vars assignments.

    Models are tuples of booleans indexed by variable-1.  Keep num_vars
    small (<= ~14).
    """
    clauses = [tuple(c) for c in clauses]
    models = []
    for bits in product((False, True), repeat=num_vars):
        if all(any((lit > 0) == bits[abs(lit) - 1] for lit in cl) for cl in clauses):
            models.append(bits)
    return models


def is_unsat_exhaustive(num_vars, clauses):
    return not enumerate_models(num_vars, clauses)


def backtrack_models(num_vars, clauses, find_all=True):
    """Models by depth-first search over variables in index order.

    A clause is tested as soon as its highest variable is assigned, which
    prunes falsified branches early; still a plain exhaustive search.
    """
    by_last = defaultdict(list)
    for clause in clauses:
        clause = tuple(clause)
        if not clause:
            return []
        by_last[max(abs(lit) for lit in clause)].append(clause)
    values = [False] * (num_vars + 1)
    models = []

    def falsified(clause):
        return all((lit > 0) != values[abs(lit)] for lit in clause)

    def descend(var):
        if var > num_vars:
            models.append(tuple(values[1:]))
            return not find_all
        for choice in (False, True):
            values[var] = choice
            if not any(falsified(cl) for cl in by_last[var]):
                if descend(var + 1):
                    return True
        return False

    descend(1)
    return models


def is_unsat_backtracking(num_vars, clauses):
    return not backtrack_models(num_vars, clauses, find_all=False)
