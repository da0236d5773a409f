"""Core data model: CNF formulas and clausal proofs.

Literals are nonzero signed integers: ``v`` asserts variable ``v``, ``-v``
negates it.  Clauses preserve construction order exactly; by convention the
first literal of a proof clause is the pivot used for RAT checking.  An empty
literal tuple is the empty clause.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

Clause = tuple[int, ...]


def complement(lit: int) -> int:
    """Complement of a literal; an involution."""
    return -lit


def validate_clause(lits: Iterable[int]) -> Clause:
    """Return ``lits`` as a clause, rejecting zeros and duplicate literals.

    Tautological clauses (both ``v`` and ``-v``) are permitted.
    """
    clause = tuple(lits)
    seen = set()
    for lit in clause:
        if lit == 0:
            raise ValueError("0 is not a literal (reserved as clause terminator)")
        if lit in seen:
            raise ValueError(f"duplicate literal {lit} in clause {clause}")
        seen.add(lit)
    return clause


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula: declared variable count plus an ordered clause list.

    Immutable after construction; safe to share across threads read-only.
    """

    num_vars: int
    clauses: tuple[Clause, ...]

    def validate(self) -> None:
        """Check clause invariants and that every variable is in range."""
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        for clause in self.clauses:
            validate_clause(clause)
            for lit in clause:
                if not 1 <= abs(lit) <= self.num_vars:
                    raise ValueError(
                        f"literal {lit} out of range 1..{self.num_vars}"
                    )


class ProofLine(NamedTuple):
    """One proof step: a clause addition, or a deletion when ``delete`` is set."""

    delete: bool
    lits: Clause


EMPTY_CLAUSE_LINE = ProofLine(False, ())


@dataclass(frozen=True)
class Proof:
    """An ordered sequence of proof lines.

    A complete refutation ends with the addition of the empty clause.
    """

    lines: tuple[ProofLine, ...]

    @property
    def added_count(self) -> int:
        """Number of clause additions (deletions excluded)."""
        return sum(1 for line in self.lines if not line.delete)

    @property
    def is_complete(self) -> bool:
        """True if the final addition is the empty clause."""
        for line in reversed(self.lines):
            if not line.delete:
                return line.lits == ()
        return False


def count_added(lines: Iterable[ProofLine]) -> int:
    """Count addition lines in a stream without materialising it."""
    return sum(1 for line in lines if not line.delete)


def iter_lines(proof: Proof | Iterable[ProofLine]) -> Iterator[ProofLine]:
    """Uniform access to the lines of a ``Proof`` or a raw line iterable."""
    if isinstance(proof, Proof):
        return iter(proof.lines)
    return iter(proof)
