"""CNF formulas, DIMACS I/O, clause-count prechecks and a brute-force oracle."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

ORACLE_LIMIT = 24

__all__ = [
    "Assignment",
    "Clause",
    "CnfFormula",
    "DimacsError",
    "Literal",
    "ORACLE_LIMIT",
    "Precheck",
    "brute_force_sat",
    "canonical_clause",
    "emit_dimacs",
    "evaluate_formula",
    "max_satisfiable_distinct_clauses",
    "parse_dimacs",
    "precheck",
    "random_3cnf",
]


@dataclass(frozen=True)
class Literal:
    variable: int
    polarity: int = 1

    def __post_init__(self):
        if type(self.variable) is not int or self.variable < 1:
            raise ValueError(f"literal variable must be a positive int, got {self.variable!r}")
        if self.polarity not in (1, -1):
            raise ValueError(f"literal polarity must be +1 or -1, got {self.polarity!r}")

    @classmethod
    def from_int(cls, lit: int) -> Literal:
        if lit == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(lit), 1 if lit > 0 else -1)

    def to_int(self) -> int:
        return self.variable * self.polarity

    def satisfied_by(self, values: Sequence[bool]) -> bool:
        return values[self.variable - 1] == (self.polarity == 1)


@dataclass(frozen=True)
class Clause:
    literals: tuple = ()

    def __post_init__(self):
        lits = tuple(self.literals)
        for lit in lits:
            if not isinstance(lit, Literal):
                raise TypeError(f"{lit!r} is not a Literal")
        object.__setattr__(self, "literals", lits)

    @classmethod
    def from_ints(cls, lits: Iterable[int]) -> Clause:
        return cls(tuple(Literal.from_int(x) for x in lits))

    def to_ints(self) -> list[int]:
        return [lit.to_int() for lit in self.literals]

    def variables(self) -> set[int]:
        return {lit.variable for lit in self.literals}

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple = ()

    def __post_init__(self):
        if type(self.num_vars) is not int or self.num_vars < 0:
            raise ValueError(f"num_vars must be a nonnegative int, got {self.num_vars!r}")
        clauses = tuple(self.clauses)
        for c in clauses:
            if not isinstance(c, Clause):
                raise TypeError(f"{c!r} is not a Clause")
            for lit in c.literals:
                if lit.variable > self.num_vars:
                    raise ValueError(f"literal {lit.to_int()} exceeds num_vars={self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        return cls(num_vars, tuple(Clause.from_ints(c) for c in clauses))

    def to_ints(self) -> list[list[int]]:
        return [c.to_ints() for c in self.clauses]

    def __len__(self):
        return len(self.clauses)


@dataclass(frozen=True)
class Assignment:
    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        for v in vals:
            if not isinstance(v, bool):
                raise TypeError(f"assignment values must be bool, got {v!r}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_literals(self) -> list[int]:
        """DIMACS-style signed literals, e.g. ``[1, -2, 3]``."""
        return [i if v else -i for i, v in enumerate(self.values, 1)]

    @classmethod
    def from_literals(cls, lits: Iterable[int], num_vars: int) -> Assignment:
        values = [False] * num_vars
        seen = set()
        for lit in lits:
            var = abs(lit)
            if lit == 0 or var > num_vars or var in seen:
                raise ValueError(f"bad literal {lit} in model")
            seen.add(var)
            values[var - 1] = lit > 0
        if len(seen) != num_vars:
            raise ValueError("model is not total")
        return cls(tuple(values))


class DimacsError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text.

    Comment lines start with ``c``; a ``%`` line ends the clause section.
    Clauses are 0-terminated and may span lines.
    """
    num_vars = None
    clauses: list[list[int]] = []
    current: list[int] = []
    current_start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"non-integer in header {line!r}", lineno) from None
            if num_vars < 0 or declared < 0:
                raise DimacsError(f"negative count in header {line!r}", lineno)
            continue
        if num_vars is None:
            raise DimacsError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"non-integer token {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(current)
                current = []
                current_start = None
                continue
            if abs(lit) > num_vars:
                raise DimacsError(f"literal {lit} exceeds num_vars={num_vars}", lineno)
            if current_start is None:
                current_start = lineno
            current.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("unterminated clause (missing trailing 0)", current_start)
    return CnfFormula.from_ints(num_vars, clauses)


def emit_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for c in f.clauses:
        lines.append(" ".join([*map(str, c.to_ints()), "0"]))
    return "\n".join(lines) + "\n"


def evaluate_formula(f: CnfFormula, a: Assignment | Sequence[bool]) -> bool:
    values = a.values if isinstance(a, Assignment) else tuple(a)
    if len(values) != f.num_vars:
        raise ValueError(f"assignment has {len(values)} values, formula has {f.num_vars} variables")
    return all(any(lit.satisfied_by(values) for lit in c.literals) for c in f.clauses)


def brute_force_sat(f: CnfFormula, limit: int = ORACLE_LIMIT) -> Assignment | None:
    """First satisfying assignment in lexicographic order (False < True, x1 most significant)."""
    if f.num_vars > limit:
        raise ValueError(f"brute force limited to {limit} variables, formula has {f.num_vars}")
    clauses = [[(lit.variable - 1, lit.polarity == 1) for lit in c.literals] for c in f.clauses]
    for values in itertools.product((False, True), repeat=f.num_vars):
        if all(any(values[v] == want for v, want in c) for c in clauses):
            return Assignment(values)
    return None


class Precheck(str, Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


def canonical_clause(c: Clause) -> tuple | None:
    """Sorted ``(variable, polarity)`` triple, or None unless the clause has
    exactly three literals on three distinct variables."""
    if len(c.literals) != 3 or len(c.variables()) != 3:
        return None
    return tuple(sorted((lit.variable, lit.polarity) for lit in c.literals))


def max_satisfiable_distinct_clauses(k: int) -> int:
    """Distinct 3-variable clauses one assignment can satisfy: ``7k(k-1)(k-2)/6``."""
    return 7 * k * (k - 1) * (k - 2) // 6


def precheck(f: CnfFormula) -> Precheck:
    """Decide from clause counts alone when possible.

    Only formulas whose clauses all have three distinct variables qualify:
    each such clause rules out exactly 1/8 of the assignments, so fewer than 8
    clauses leave a model, and more distinct clauses than any single
    assignment satisfies leave none.
    """
    canon = [canonical_clause(c) for c in f.clauses]
    if any(c is None for c in canon):
        return Precheck.UNKNOWN
    if len(canon) < 8:
        return Precheck.SAT
    if len(set(canon)) > max_satisfiable_distinct_clauses(f.num_vars):
        return Precheck.UNSAT
    return Precheck.UNKNOWN


def random_3cnf(num_vars: int, num_clauses: int, rng: random.Random) -> CnfFormula:
    """Uniform 3 distinct variables per clause, independent signs."""
    if num_vars < 3:
        raise ValueError("random 3-CNF needs at least 3 variables")
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(Clause(tuple(Literal(v, rng.choice((1, -1))) for v in vs)))
    return CnfFormula(num_vars, tuple(clauses))
