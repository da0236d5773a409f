"""Unit propagation over a mutable clause database.

The engine keeps two watched literals per clause (positions 0 and 1 of the
stored literal list, swapped in place as watches move) plus a full occurrence
index used for pivot-complement lookups during RAT checks.  The contract is
scheduling-independent: the set of literals at fixpoint and the
conflict-vs-fixpoint outcome do not depend on the internal visit order.

A database owns its assignment exclusively; run parallel verifications on
separate databases, never one propagation across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .model import Clause, CnfFormula

# Sentinel conflict id for an assumption contradicting the current assignment.
_ASSUMPTION_CONFLICT = -1


class Assignment:
    """Partial truth assignment with a trail for exact state restore.

    The trail records ``(literal, reason clause id)`` pairs in assignment
    order; popping the trail restores the prior state exactly.  Assumptions
    carry reason ``None``.
    """

    __slots__ = ("_values", "trail")

    def __init__(self) -> None:
        self._values: list[int] = [0]  # indexed by variable; 0 = unassigned
        self.trail: list[tuple[int, int | None]] = []

    def ensure_var(self, var: int) -> None:
        if var >= len(self._values):
            self._values.extend([0] * (var + 1 - len(self._values)))

    def value(self, lit: int) -> int:
        """+1 if lit is true, -1 if false, 0 if unassigned."""
        var = lit if lit > 0 else -lit
        if var >= len(self._values):
            return 0
        v = self._values[var]
        return v if lit > 0 else -v

    def assign(self, lit: int, reason: int | None) -> None:
        var = lit if lit > 0 else -lit
        if var >= len(self._values):
            self.ensure_var(var)
        self._values[var] = 1 if lit > 0 else -1
        self.trail.append((lit, reason))

    def undo_to(self, mark: int) -> None:
        trail = self.trail
        values = self._values
        while len(trail) > mark:
            lit, _ = trail.pop()
            values[lit if lit > 0 else -lit] = 0

    def snapshot(self) -> tuple[tuple[int, int], ...]:
        """Hashable view of the assigned variables, for restore checks."""
        return tuple(
            (var, v) for var, v in enumerate(self._values) if v != 0
        )


@dataclass(frozen=True)
class PropagationResult:
    """Outcome of running propagation to fixpoint."""

    conflict: Clause | None
    assigned: int

    @property
    def is_conflict(self) -> bool:
        return self.conflict is not None


class ClauseDatabase:
    """Mutable clause store with watched-literal unit propagation.

    Supports the full checking interface: ``add_clause``, ``delete_clause``,
    ``rup`` and ``rat``.  The compiled backend implements the same interface.
    """

    def __init__(self) -> None:
        self._clauses: list[list[int]] = []
        self._active: list[bool] = []
        self._watch: dict[int, list[int]] = {}
        self._occ: dict[int, list[int]] = {}
        self._units: list[int] = []
        self._has_empty = False
        self.assignment = Assignment()
        self._head = 0

    @classmethod
    def from_formula(cls, formula: CnfFormula) -> "ClauseDatabase":
        db = cls()
        for clause in formula.clauses:
            db.add_clause(clause)
        return db

    # -- clause store -----------------------------------------------------

    def add_clause(self, lits: Sequence[int]) -> int:
        """Add a clause; returns its id.  The assignment must be clean."""
        cid = len(self._clauses)
        clause = list(lits)
        self._clauses.append(clause)
        self._active.append(True)
        occ = self._occ
        for lit in clause:
            occ.setdefault(lit, []).append(cid)
            var = lit if lit > 0 else -lit
            self.assignment.ensure_var(var)
        if not clause:
            self._has_empty = True
        elif len(clause) == 1:
            self._units.append(cid)
        else:
            watch = self._watch
            watch.setdefault(clause[0], []).append(cid)
            watch.setdefault(clause[1], []).append(cid)
        return cid

    def delete_clause(self, cid: int) -> None:
        """Deactivate a clause; watch/occurrence entries are dropped lazily."""
        self._active[cid] = False
        if not self._clauses[cid]:
            self._has_empty = any(
                active and not clause
                for clause, active in zip(self._clauses, self._active)
            )

    def clause(self, cid: int) -> Clause:
        return tuple(self._clauses[cid])

    def active_clause_ids(self) -> list[int]:
        return [cid for cid, active in enumerate(self._active) if active]

    def __len__(self) -> int:
        return sum(self._active)

    # -- propagation ------------------------------------------------------

    def assume(self, lit: int) -> bool:
        """Assume a literal (no reason).  False if it contradicts the state."""
        v = self.assignment.value(lit)
        if v < 0:
            return False
        if v == 0:
            self.assignment.ensure_var(abs(lit))
            self.assignment.assign(lit, None)
        return True

    def propagate(self) -> int | None:
        """Extend the assignment to the unit-propagation fixpoint.

        Returns the id of a falsified clause on conflict, else None.  Every
        trail entry is processed exactly once; watches move in place.
        """
        if self._has_empty:
            for cid, clause in enumerate(self._clauses):
                if self._active[cid] and not clause:
                    return cid
        clauses = self._clauses
        active = self._active
        watch = self._watch
        value = self.assignment.value
        assign = self.assignment.assign
        trail = self.assignment.trail
        while self._head < len(trail):
            lit = trail[self._head][0]
            self._head += 1
            flit = -lit
            wl = watch.get(flit)
            if not wl:
                continue
            i = 0
            while i < len(wl):
                cid = wl[i]
                if not active[cid]:
                    wl[i] = wl[-1]
                    wl.pop()
                    continue
                cl = clauses[cid]
                if cl[0] == flit:
                    cl[0], cl[1] = cl[1], cl[0]
                first = cl[0]
                fv = value(first)
                if fv > 0:
                    i += 1
                    continue
                moved = False
                for j in range(2, len(cl)):
                    other = cl[j]
                    if value(other) >= 0:
                        cl[1], cl[j] = other, flit
                        watch.setdefault(other, []).append(cid)
                        wl[i] = wl[-1]
                        wl.pop()
                        moved = True
                        break
                if moved:
                    continue
                if fv == 0:
                    assign(first, cid)
                    i += 1
                else:
                    return cid
        return None

    def _seed_units(self) -> int | None:
        units = self._units
        value = self.assignment.value
        i = 0
        while i < len(units):
            cid = units[i]
            if not self._active[cid]:
                units[i] = units[-1]
                units.pop()
                continue
            lit = self._clauses[cid][0]
            v = value(lit)
            if v < 0:
                return cid
            if v == 0:
                self.assignment.assign(lit, cid)
            i += 1
        return None

    def _restore(self, mark: int) -> None:
        self.assignment.undo_to(mark)
        if self._head > mark:
            self._head = mark

    # -- redundancy checks ------------------------------------------------

    def rup(self, lits: Sequence[int]) -> bool:
        """True iff assuming the complement of every literal yields a conflict."""
        conflict = self._seed_units()
        if conflict is None:
            conflict = self._assume_complements(lits)
        if conflict is None:
            conflict = self.propagate()
        self._restore(0)
        return conflict is not None

    def rat(self, lits: Sequence[int]) -> bool:
        """Resolution-asymmetric-tautology check on the first literal.

        Every clause containing the pivot's complement must resolve with
        ``lits`` into a tautology or a clause implied by unit propagation.
        The shared assumptions (complements of the non-pivot literals) are
        propagated once and reused across resolvents.
        """
        pivot = lits[0]
        rest = lits[1:]
        conflict = self._seed_units()
        if conflict is None:
            conflict = self._assume_complements(rest)
        if conflict is None:
            conflict = self.propagate()
        if conflict is not None:
            self._restore(0)
            return True
        mark = len(self.assignment.trail)
        cset = set(rest)
        neg_pivot = -pivot
        occ = self._occ.get(neg_pivot)
        result = True
        if occ:
            value = self.assignment.value
            i = 0
            while i < len(occ):
                cid = occ[i]
                if not self._active[cid]:
                    occ[i] = occ[-1]
                    occ.pop()
                    continue
                i += 1
                clause = self._clauses[cid]
                tautology = False
                seen: set[int] = set()
                for d in clause:
                    if d == neg_pivot:
                        continue
                    if -d in cset or -d in seen:
                        tautology = True
                        break
                    seen.add(d)
                if tautology:
                    continue
                conflict = None
                for d in clause:
                    if d == neg_pivot:
                        continue
                    v = value(-d)
                    if v < 0:
                        conflict = _ASSUMPTION_CONFLICT
                        break
                    if v == 0:
                        self.assignment.assign(-d, None)
                if conflict is None:
                    conflict = self.propagate()
                self._restore(mark)
                if conflict is None:
                    result = False
                    break
        self._restore(0)
        return result

    def _assume_complements(self, lits: Iterable[int]) -> int | None:
        value = self.assignment.value
        for lit in lits:
            v = value(-lit)
            if v < 0:
                return _ASSUMPTION_CONFLICT
            if v == 0:
                self.assignment.assign(-lit, None)
        return None

    def snapshot(self) -> tuple[tuple[int, int], ...]:
        return self.assignment.snapshot()


def propagate(db: ClauseDatabase) -> PropagationResult:
    """Run propagation on ``db`` (assumptions go in via ``db.assume`` first).

    The assignment is left extended; callers needing the prior state should
    snapshot and restore around this, as the checker does internally.
    """
    before = len(db.assignment.trail)
    seed = db._seed_units()
    cid = seed if seed is not None else db.propagate()
    conflict = db.clause(cid) if cid is not None else None
    return PropagationResult(conflict, len(db.assignment.trail) - before)
