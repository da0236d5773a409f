"""DIMACS CNF and text-DRAT parsing and emission.

Emission is canonical and byte-stable: one clause per line, space-separated
literals, a ``0`` terminator, LF line endings.  Deletion lines in DRAT carry
a ``d `` prefix.  Binary DRAT is not supported.
"""

from __future__ import annotations

import warnings
from typing import IO, Iterable, Iterator

from .model import Clause, CnfFormula, Proof, ProofLine, validate_clause


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def parse_dimacs(data: str | bytes) -> CnfFormula:
    """Parse DIMACS CNF text into a formula.

    Comment lines start with ``c``; the header is ``p cnf <vars> <clauses>``.
    A mismatch between the declared and actual clause count is a warning,
    everything else malformed is an error.
    """
    num_vars: int | None = None
    declared = 0
    clauses: list[Clause] = []
    current: list[int] = []
    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars, declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 0 or declared < 0:
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            continue
        if num_vars is None:
            raise ValueError(f"line {lineno}: clause data before header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ValueError(f"line {lineno}: bad token {token!r}") from None
            if lit == 0:
                clauses.append(validate_clause(current))
                current = []
            else:
                if abs(lit) > num_vars:
                    raise ValueError(
                        f"line {lineno}: literal {lit} out of range 1..{num_vars}"
                    )
                current.append(lit)
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if current:
        raise ValueError("last clause is missing its terminating 0")
    if len(clauses) != declared:
        warnings.warn(
            f"header declares {declared} clauses but file contains {len(clauses)}",
            stacklevel=2,
        )
    return CnfFormula(num_vars, tuple(clauses))


def _clause_text(lits: Clause) -> str:
    if not lits:
        return "0"
    return " ".join(map(str, lits)) + " 0"


def emit_dimacs(formula: CnfFormula) -> str:
    """Serialise a formula to canonical DIMACS text."""
    parts = [f"p cnf {formula.num_vars} {len(formula.clauses)}\n"]
    parts.extend(_clause_text(clause) + "\n" for clause in formula.clauses)
    return "".join(parts)


def write_dimacs(
    out: IO[str],
    num_vars: int,
    clauses: Iterable[Clause],
    clause_count: int,
) -> None:
    """Stream a formula to ``out`` without materialising it."""
    out.write(f"p cnf {num_vars} {clause_count}\n")
    for clause in clauses:
        out.write(_clause_text(clause) + "\n")


def drat_line_text(line: ProofLine) -> str:
    """Single DRAT text line (without the newline) for a proof line."""
    body = _clause_text(line.lits)
    return "d " + body if line.delete else body


def parse_drat_line(line: str, lineno: int = 0) -> ProofLine | None:
    """Parse one DRAT text line; None for blanks and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("c"):
        return None
    delete = False
    if stripped == "d" or stripped.startswith("d "):
        delete = True
        stripped = stripped[1:].strip()
    tokens = stripped.split()
    try:
        values = [int(token) for token in tokens]
    except ValueError:
        raise ValueError(f"line {lineno}: bad token in {line!r}") from None
    if not values or values[-1] != 0:
        raise ValueError(f"line {lineno}: missing terminating 0")
    if 0 in values[:-1]:
        raise ValueError(f"line {lineno}: 0 inside clause")
    lits = validate_clause(values[:-1])
    if delete and not lits:
        raise ValueError(f"line {lineno}: deletion of the empty clause")
    return ProofLine(delete, lits)


def iter_drat_lines(source: IO[str] | Iterable[str]) -> Iterator[ProofLine]:
    """Stream proof lines from text lines (a file object works directly)."""
    for lineno, raw in enumerate(source, start=1):
        line = parse_drat_line(raw, lineno)
        if line is not None:
            yield line


def parse_drat(data: str | bytes) -> Proof:
    """Parse text DRAT into a proof; literal order (pivot position) is kept."""
    return Proof(tuple(iter_drat_lines(_as_text(data).splitlines())))


def emit_drat(proof: Proof | Iterable[ProofLine]) -> str:
    """Serialise a proof to text DRAT; inverse of :func:`parse_drat`."""
    lines = proof.lines if isinstance(proof, Proof) else proof
    return "".join(drat_line_text(line) + "\n" for line in lines)


def write_drat(out: IO[str], lines: Iterable[ProofLine]) -> None:
    """Stream proof lines to ``out``."""
    for line in lines:
        out.write(drat_line_text(line) + "\n")
