"""Translation of CNF formulas into polynomial systems over Q.

Each literal becomes a linear factor ``z_i - c`` where ``c`` is 1 for a
positive literal and 0 for a negated one, so the factor vanishes exactly
when the literal is true at a 0/1 point. A clause becomes the product of
its factors; a formula becomes the list of clause products.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from groebner_sat.cnf import Assignment, Clause, CnfFormula
from groebner_sat.polyring import Ideal, MonomialOrder, PolyRing, Polynomial

Point01 = tuple  # tuple[Fraction, ...] with every coordinate 0 or 1

__all__ = [
    "EncodingMode",
    "Point01",
    "assignment_to_point",
    "encode_clause",
    "encode_formula",
    "evaluate_system",
    "field_polynomials",
    "literal_constant",
    "point_to_assignment",
]


class EncodingMode(str, Enum):
    """``bare``: clause products only. ``boolean``: also ``z_i^2 - z_i`` for every variable."""

    BARE = "bare"
    BOOLEAN = "boolean"

    def __str__(self) -> str:
        return self.value


def literal_constant(polarity: int) -> Fraction:
    if polarity == 1:
        return Fraction(1)
    if polarity == -1:
        return Fraction(0)
    raise ValueError(f"polarity must be +1 or -1, got {polarity!r}")


def _ring_for(k: int | PolyRing) -> PolyRing:
    return k if isinstance(k, PolyRing) else PolyRing(k)


@lru_cache(maxsize=4096)
def _factor(ring: PolyRing, variable: int, polarity: int) -> Polynomial:
    return ring.var(variable) - literal_constant(polarity)


def encode_clause(clause: Clause, k: int | PolyRing) -> Polynomial:
    """Product of ``z_v - c`` over the clause's literals; the empty clause gives 1."""
    ring = _ring_for(k)
    p = ring.one()
    for lit in clause.literals:
        if not 1 <= lit.variable <= ring.nvars:
            raise ValueError(f"variable {lit.variable} out of range 1..{ring.nvars}")
        p = p * _factor(ring, lit.variable, lit.polarity)
    return p


def field_polynomials(ring: PolyRing) -> list[Polynomial]:
    return [z * z - z for z in ring.gens()]


def encode_formula(
    formula: CnfFormula,
    mode: EncodingMode | str = EncodingMode.BOOLEAN,
    order: MonomialOrder | str = MonomialOrder.GREVLEX,
) -> Ideal:
    """Clause polynomials in clause order, then ``z_i^2 - z_i`` in variable order in boolean mode."""
    mode = EncodingMode(mode)
    ring = PolyRing(formula.num_vars, MonomialOrder(order))
    gens = [encode_clause(c, ring) for c in formula.clauses]
    if mode is EncodingMode.BOOLEAN:
        gens.extend(field_polynomials(ring))
    return Ideal(ring, tuple(gens))


def assignment_to_point(a: Assignment | Sequence[bool]) -> Point01:
    values = a.values if isinstance(a, Assignment) else tuple(a)
    return tuple(Fraction(1) if v else Fraction(0) for v in values)


def point_to_assignment(p: Sequence) -> Assignment:
    values = []
    for x in p:
        if x == 1:
            values.append(True)
        elif x == 0:
            values.append(False)
        else:
            raise ValueError(f"coordinate {x!r} is not 0 or 1")
    return Assignment(tuple(values))


def evaluate_system(ideal: Ideal, p: Sequence) -> bool:
    """True iff every generator vanishes at ``p``."""
    if len(p) != ideal.ring.nvars:
        raise ValueError(f"point has dimension {len(p)}, ring has {ideal.ring.nvars}")
    return all(g.evaluate(p) == 0 for g in ideal.generators)
