"""Cubic-size DRAT refutation of the standard pigeonhole formula.

The proof walks k from n-1 down to 1.  Each iteration re-encodes the
(k+2)-pigeon instance of layer k+1 as a (k+1)-pigeon instance on fresh
layer-k variables, with the hole constraints in the chained group encoding:

1. definition clauses binding each fresh x'_{ph} to "pigeon p was in hole h,
   or pigeon p was in the removed hole and the removed pigeon was in h";
2. definition clauses binding each fresh group auxiliary to "none of its
   group's literals hold";
3. derived pairwise constraints inside every group (checked as RAT on the
   first literal -- resolvents against the group's positive clause are
   tautologies, the rest propagate through the previous layer);
4. one at-least-one clause per remaining pigeon (plain RUP).

After iteration 1 the two unit clauses contradict the single pairwise
constraint, so the empty clause closes the proof.  Every clause is written
pivot first; at-least-one clauses and the empty clause need no pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .encodings import (
    GroupLayout,
    LayerLayout,
    _check_n,
    _layouts_down_to,
    groups,
    iter_php_standard_clauses,
    member_literal,
)
from .model import EMPTY_CLAUSE_LINE, Proof, ProofLine

# Tags used by iter_tagged_lines.
DEFINITION = "definition"
Y_DEFINITION = "y-definition"
DERIVED = "derived"
ALO = "alo"
DELETE = "delete"
EMPTY = "empty"


@dataclass(frozen=True)
class IterationPlan:
    """Everything one iteration needs: both layouts and the group structure.

    ``prev`` is layer k+1 (the standard input layer when k = n-1), ``next``
    the fresh layer k.  ``group_layout`` is None for the pairwise proof
    style, which introduces no auxiliaries.
    """

    k: int
    prev: LayerLayout
    next: LayerLayout
    group_layout: GroupLayout | None


def iteration_plan(n: int, k: int, chained: bool = True) -> IterationPlan:
    """Plan for iteration ``k`` of an n-pigeonhole proof."""
    _check_n(n, minimum=2)
    if not 1 <= k <= n - 1:
        raise ValueError(f"iteration index {k} out of range 1..{n - 1}")
    layouts = _layouts_down_to(n, k, chained)
    return IterationPlan(
        k,
        layouts[k + 1],
        layouts[k],
        groups(k + 1) if chained else None,
    )


def _plans(n: int, chained: bool = True) -> dict[int, IterationPlan]:
    layouts = _layouts_down_to(n, 1, chained)
    return {
        k: IterationPlan(
            k,
            layouts[k + 1],
            layouts[k],
            groups(k + 1) if chained else None,
        )
        for k in range(n - 1, 0, -1)
    }


def definition_clauses(plan: IterationPlan) -> list[ProofLine]:
    """Fresh-variable definitions for every x'_{ph} of the new layer.

    Four clauses per variable, pivot first, except that for the top pigeon
    p = k the two clauses with a negated pivot are dropped: propagation only
    ever walks towards lower pigeon indices, so they are never needed.
    """
    k = plan.k
    prev, nxt = plan.prev, plan.next
    out: list[ProofLine] = []
    removed_pigeon = k + 1
    removed_hole = k + 1
    for p in range(k + 1):
        x_moved = prev.x_var(p, removed_hole)
        for h in range(1, k + 1):
            xk = nxt.x_var(p, h)
            xp = prev.x_var(p, h)
            x_top = prev.x_var(removed_pigeon, h)
            if p < k:
                out.append(ProofLine(False, (-xk, xp, x_moved)))
                out.append(ProofLine(False, (-xk, xp, x_top)))
            out.append(ProofLine(False, (xk, -xp)))
            out.append(ProofLine(False, (xk, -x_moved, -x_top)))
    return out


def y_definition_clauses(plan: IterationPlan) -> list[ProofLine]:
    """Definitions of the fresh group auxiliaries, four clauses each.

    The positive four-literal clause is not needed to encode at-most-one,
    but it turns each group into an exactly-one block, which is what keeps
    every later check a plain propagation instead of a case split.
    """
    chain = plan.group_layout
    out: list[ProofLine] = []
    if chain is None or chain.group_count == 1:
        return out
    nxt = plan.next
    for h in range(1, plan.k + 1):
        for group in chain.groups:
            if group.final:
                continue
            y = nxt.y_var(group.y_new, h)
            l1, l2, l3 = (member_literal(m, nxt, h) for m in group.members)
            out.append(ProofLine(False, (y, l1, l2, l3)))
            out.append(ProofLine(False, (-y, -l1)))
            out.append(ProofLine(False, (-y, -l2)))
            out.append(ProofLine(False, (-y, -l3)))
    return out


def derived_group_clauses(plan: IterationPlan) -> list[ProofLine]:
    """Pairwise constraints inside every group of the new layer.

    For members l_i, l_j (i < j) the clause is (-l_j, -l_i): the literal
    with the larger pigeon index is the pivot.  Requires the iteration's
    definition clauses to be in the working formula already.
    """
    chain = plan.group_layout
    if chain is None:
        raise ValueError("derived group clauses need a group layout")
    nxt = plan.next
    out: list[ProofLine] = []
    for h in range(1, plan.k + 1):
        for group in chain.groups:
            members = [member_literal(m, nxt, h) for m in group.members]
            count = len(members)
            for i in range(count):
                for j in range(i + 1, count):
                    out.append(ProofLine(False, (-members[j], -members[i])))
    return out


def alo_clauses(plan: IterationPlan) -> list[ProofLine]:
    """At-least-one clause per remaining pigeon; RUP once the rest is in."""
    k = plan.k
    nxt = plan.next
    return [
        ProofLine(False, tuple(nxt.x_var(p, h) for h in range(1, k + 1)))
        for p in range(k + 1)
    ]


def iteration_lines(plan: IterationPlan) -> list[ProofLine]:
    """All additions of one iteration, in checkable order."""
    return (
        definition_clauses(plan)
        + y_definition_clauses(plan)
        + derived_group_clauses(plan)
        + alo_clauses(plan)
    )


def _deletion_lines(n: int, k_deleted: int, plans: dict[int, IterationPlan]) -> Iterator[ProofLine]:
    """Deletions of an entire spent layer (the input formula for layer n)."""
    if k_deleted == n:
        for clause in iter_php_standard_clauses(n):
            yield ProofLine(True, clause)
    else:
        for line in iteration_lines(plans[k_deleted]):
            yield ProofLine(True, line.lits)


def iter_proof_lines(n: int, emit_deletions: bool = False) -> Iterator[ProofLine]:
    """Stream the whole refutation without materialising it.

    With ``emit_deletions`` every layer is deleted right after the iteration
    that consumed it: once iteration k is done, nothing below ever looks at
    layer k+1 again.  Deletions never change whether the proof checks.
    """
    _check_n(n, minimum=2)
    plans = _plans(n)
    for k in range(n - 1, 0, -1):
        yield from iteration_lines(plans[k])
        if emit_deletions:
            yield from _deletion_lines(n, k + 1, plans)
    yield EMPTY_CLAUSE_LINE


def iter_tagged_lines(
    n: int, emit_deletions: bool = False
) -> Iterator[tuple[str, int, ProofLine]]:
    """Like :func:`iter_proof_lines` but yielding (tag, k, line) triples."""
    _check_n(n, minimum=2)
    plans = _plans(n)
    builders = (
        (DEFINITION, definition_clauses),
        (Y_DEFINITION, y_definition_clauses),
        (DERIVED, derived_group_clauses),
        (ALO, alo_clauses),
    )
    for k in range(n - 1, 0, -1):
        plan = plans[k]
        for tag, builder in builders:
            for line in builder(plan):
                yield tag, k, line
        if emit_deletions:
            for line in _deletion_lines(n, k + 1, plans):
                yield DELETE, k, line
    yield EMPTY, 0, EMPTY_CLAUSE_LINE


def generate_ours(n: int, emit_deletions: bool = False) -> Proof:
    """The full chained-group refutation of ``php_standard(n)``."""
    return Proof(tuple(iter_proof_lines(n, emit_deletions)))
