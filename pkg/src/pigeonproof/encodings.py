"""Pigeonhole CNF encodings and the variable layouts shared with proof output.

Two encodings of "n+1 pigeons, n holes, at most one pigeon per hole":

* ``php_standard``: pairwise at-most-one constraints, x_{ph} = p*n + h.
* ``php_amo``: the hole constraint is decomposed into chained groups of at
  most three source literals, each non-final group introducing one fresh
  variable that is true exactly when all of its group's literals are false.

Both proof generators build "layers": layer n is the input formula; each
layer k < n re-encodes a (k+1)-pigeon, k-hole instance over fresh variables.
Layer id blocks are contiguous and pairwise disjoint: layer k allocates its
(k+1)*k x ids first, then its auxiliary ids, after every previous layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import Clause, CnfFormula

#: Generators refuse larger instances to bound memory; ids stay well inside
#: 64-bit range regardless.
MAX_N = 5000

# Group members are symbolic until bound to a layout and hole:
# ("x", p) is the pigeon-p literal, ("ny", g) the negated group-g auxiliary.
Member = tuple[str, int]


def _check_n(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")
    if n > MAX_N:
        raise ValueError(f"n > {MAX_N} is not supported (memory guard)")


def group_count(pigeons: int) -> int:
    """Number of groups an at-most-one chain over ``pigeons`` literals uses."""
    if pigeons < 2:
        raise ValueError("a group chain needs at least 2 pigeons")
    return max(1, (pigeons - 1) // 2)


@dataclass(frozen=True)
class Group:
    """One link of a hole's at-most-one chain.

    ``members`` are the constrained literals (three of them except in the
    final group); ``y_new`` is the index of the fresh auxiliary introduced
    for this group, or None for the final group.
    """

    index: int
    members: tuple[Member, ...]
    y_new: int | None

    @property
    def final(self) -> bool:
        return self.y_new is None


@dataclass(frozen=True)
class GroupLayout:
    """Partition of one hole's pigeon literals into chained groups."""

    pigeons: int
    groups: tuple[Group, ...]

    @property
    def group_count(self) -> int:
        return len(self.groups)

    def member_literals(self, layout: "LayerLayout", hole: int) -> list[list[int]]:
        """Concrete member literals per group, bound to a layout and hole."""
        return [
            [member_literal(m, layout, hole) for m in group.members]
            for group in self.groups
        ]


def groups(pigeons: int) -> GroupLayout:
    """Group structure for an at-most-one chain over ``pigeons`` literals.

    Up to four pigeons form a single group with no auxiliaries.  Otherwise
    group 0 takes pigeons 0..2 and a fresh auxiliary; each intermediate group
    takes the previous auxiliary (negated) plus the next two pigeons; the
    final group takes the last auxiliary plus the remaining two or three.
    """
    count = group_count(pigeons)
    if count == 1:
        return GroupLayout(
            pigeons,
            (Group(0, tuple(("x", p) for p in range(pigeons)), None),),
        )
    parts: list[Group] = [Group(0, (("x", 0), ("x", 1), ("x", 2)), 0)]
    for g in range(1, count - 1):
        parts.append(
            Group(g, (("ny", g - 1), ("x", 2 * g + 1), ("x", 2 * g + 2)), g)
        )
    first_rest = 2 * (count - 1) + 1
    parts.append(
        Group(
            count - 1,
            (("ny", count - 2),) + tuple(("x", p) for p in range(first_rest, pigeons)),
            None,
        )
    )
    return GroupLayout(pigeons, tuple(parts))


@dataclass(frozen=True)
class LayerLayout:
    """Deterministic variable numbering for one layer.

    Layer k covers pigeons 0..k and holes 1..k; ``x_var(p, h)`` is defined on
    that range and ``y_var(g, h)`` for group indices 0..y_rows-1.  All ids of
    distinct layers are disjoint by construction.
    """

    layer: int
    x_base: int
    y_base: int
    y_rows: int

    def x_var(self, p: int, h: int) -> int:
        return self.x_base + p * self.layer + h

    def y_var(self, g: int, h: int) -> int:
        return self.y_base + g * self.layer + h

    @property
    def x_count(self) -> int:
        return (self.layer + 1) * self.layer

    @property
    def y_count(self) -> int:
        return self.y_rows * self.layer

    @property
    def id_range(self) -> range:
        """Half-open id range occupied by this layer."""
        return range(self.x_base + 1, self.y_base + self.y_count + 1)


def member_literal(member: Member, layout: LayerLayout, hole: int) -> int:
    """Bind a symbolic group member to a concrete literal."""
    kind, index = member
    if kind == "x":
        return layout.x_var(index, hole)
    return -layout.y_var(index, hole)


def _layouts_down_to(n: int, k_min: int, chained: bool) -> dict[int, LayerLayout]:
    """Layouts for layers n down to ``k_min``.

    ``chained`` selects whether inner layers reserve auxiliary ids (the
    pairwise-only proof style never does).  The input layer has none either
    way: the proofs always start from the standard encoding.
    """
    layouts = {n: LayerLayout(n, 0, n * (n + 1), 0)}
    base = n * (n + 1)
    for k in range(n - 1, k_min - 1, -1):
        y_rows = group_count(k + 1) - 1 if chained else 0
        x_base = base
        y_base = base + (k + 1) * k
        base = y_base + y_rows * k
        layouts[k] = LayerLayout(k, x_base, y_base, y_rows)
    return layouts


def layer_layout(n: int, k: int, chained: bool = True) -> LayerLayout:
    """Layout of layer ``k`` for problem size ``n`` (layer n = input formula)."""
    _check_n(n, minimum=1)
    if not 1 <= k <= n:
        raise ValueError(f"layer index {k} out of range 1..{n}")
    return _layouts_down_to(n, k, chained)[k]


# -- formulas ---------------------------------------------------------------


def php_standard_clause_count(n: int) -> int:
    return (n + 1) + n * (n + 1) * n // 2


def iter_php_standard_clauses(n: int) -> Iterator[Clause]:
    for p in range(n + 1):
        yield tuple(p * n + h for h in range(1, n + 1))
    for h in range(1, n + 1):
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                yield (-(p * n + h), -(q * n + h))


def php_standard(n: int) -> CnfFormula:
    """Pairwise-encoded pigeonhole formula: n+1 pigeons into n holes.

    Clause order: the n+1 at-least-one clauses in pigeon order, then per
    hole ascending all pairwise at-most-one clauses with p < q.
    """
    _check_n(n, minimum=1)
    return CnfFormula(n * (n + 1), tuple(iter_php_standard_clauses(n)))


def php_amo_num_vars(n: int) -> int:
    return n * (n + 1) + n * (group_count(n + 1) - 1)


def php_amo_clause_count(n: int) -> int:
    # f(n) group clauses per hole; mirrors counts.f_group without the import.
    per_hole = 1 if n == 1 else (7 * n) // 2 - 4
    return (n + 1) + n * per_hole


def iter_php_amo_clauses(n: int) -> Iterator[Clause]:
    layout = LayerLayout(n, 0, n * (n + 1), group_count(n + 1) - 1)
    chain = groups(n + 1)
    for p in range(n + 1):
        yield tuple(layout.x_var(p, h) for h in range(1, n + 1))
    for h in range(1, n + 1):
        for group in chain.groups:
            members = [member_literal(m, layout, h) for m in group.members]
            if not group.final:
                y = layout.y_var(group.y_new, h)
                yield (y, *members)
                for lit in members:
                    yield (-y, -lit)
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    yield (-members[i], -members[j])


def php_amo(n: int) -> CnfFormula:
    """Pigeonhole formula with chained at-most-one hole constraints.

    Per hole, each non-final group contributes seven clauses: one positive
    clause forcing the fresh auxiliary or one of its members (making the
    four variables an exactly-one block), three binaries tying the auxiliary
    to each member, and three pairwise constraints.  The final group is
    purely pairwise.  Auxiliary ids follow all x ids.
    """
    _check_n(n, minimum=1)
    return CnfFormula(php_amo_num_vars(n), tuple(iter_php_amo_clauses(n)))
