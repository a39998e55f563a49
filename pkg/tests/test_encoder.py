import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import formula_holds
from groebner_sat.cnf import Assignment, Clause, CnfFormula, evaluate_formula, random_3cnf
from groebner_sat.encoder import (
    EncodingMode,
    assignment_to_point,
    encode_clause,
    encode_formula,
    evaluate_system,
    field_polynomials,
    literal_constant,
    point_to_assignment,
)
from groebner_sat.polyring import PolyRing


def test_literal_constant():
    assert literal_constant(1) == 1
    assert literal_constant(-1) == 0
    assert isinstance(literal_constant(1), Fraction)
    for bad in (0, 2, -2):
        with pytest.raises(ValueError):
            literal_constant(bad)


def test_encode_clause_examples():
    ring = PolyRing(3)
    z1, z2, z3 = ring.gens()
    assert encode_clause(Clause.from_ints([1, -2, 3]), 3) == (z1 - 1) * z2 * (z3 - 1)
    assert encode_clause(Clause.from_ints([-1, -1, -1]), 3) == z1**3
    assert encode_clause(Clause(()), 3) == ring.one()
    assert str(encode_clause(Clause.from_ints([1, -2, 3]), 3)) == "z1*z2*z3 - z1*z2 - z2*z3 + z2"


def test_encode_clause_out_of_range():
    with pytest.raises(ValueError):
        encode_clause(Clause.from_ints([1, 4]), 3)


def test_encode_formula_examples():
    assert encode_formula(CnfFormula(3, ()), "bare").generators == ()
    f = CnfFormula.from_ints(1, [[1, 1, 1], [-1, -1, -1]])
    ring = PolyRing(1)
    z = ring.var(1)
    assert encode_formula(f, "bare").generators == ((z - 1) ** 3, z**3)
    g = CnfFormula.from_ints(2, [[1, -2]])
    ring2 = PolyRing(2)
    z1, z2 = ring2.gens()
    bare = encode_formula(g, EncodingMode.BARE).generators
    boolean = encode_formula(g).generators
    assert boolean == bare + (z1 * z1 - z1, z2 * z2 - z2)
    assert list(boolean[len(bare):]) == field_polynomials(ring2)


def test_encode_formula_order():
    f = CnfFormula.from_ints(3, [[1, -2, 3]])
    for order in ("lex", "grlex", "grevlex"):
        ideal = encode_formula(f, "bare", order)
        assert ideal.order.value == order
        assert ideal.generators[0].to_order("grevlex") == encode_formula(f, "bare").generators[0]


def test_tautology_encoded_as_is():
    ring = PolyRing(2)
    z1, z2 = ring.gens()
    assert encode_clause(Clause.from_ints([1, -1, 2]), 2) == (z1 - 1) * z1 * (z2 - 1)


def test_point_maps():
    assert assignment_to_point(Assignment((True, False, True))) == (1, 0, 1)
    assert assignment_to_point((False,) * 4) == (0, 0, 0, 0)
    assert point_to_assignment((1, 0, Fraction(1))) == Assignment((True, False, True))
    with pytest.raises(ValueError):
        point_to_assignment((1, Fraction(1, 2)))
    with pytest.raises(ValueError):
        point_to_assignment((2,))


@settings(max_examples=100)
@given(st.lists(st.booleans(), max_size=10))
def test_point_round_trip(values):
    a = Assignment(tuple(values))
    assert point_to_assignment(assignment_to_point(a)) == a


def test_evaluate_system_examples():
    ideal = encode_formula(CnfFormula.from_ints(3, [[1, 2, 3]]), "bare")
    assert evaluate_system(ideal, (1, 0, 0))
    assert not evaluate_system(ideal, (0, 0, 0))
    assert ideal.generators[0].evaluate((0, 0, 0)) == -1
    with pytest.raises(ValueError):
        evaluate_system(ideal, (0, 0))


def test_lemma_exhaustive_three_variable_clauses():
    lits = [1, -1, 2, -2, 3, -3]
    for width in range(4):
        for clause in itertools.product(lits, repeat=width):
            p = encode_clause(Clause.from_ints(clause), 3)
            for values in itertools.product((False, True), repeat=3):
                point = assignment_to_point(values)
                assert (p.evaluate(point) == 0) == formula_holds([clause], values)


def _random_formula(rng, k, n, max_width=4):
    clauses = []
    for _ in range(n):
        width = rng.randint(0, max_width) if rng.random() < 0.2 else 3
        clauses.append([rng.choice((1, -1)) * rng.randint(1, k) for _ in range(width)])
    return CnfFormula.from_ints(k, clauses)


def test_lemma_and_mode_equivalence_random_formulas():
    rng = random.Random(31)
    for _ in range(60):
        k = rng.randint(1, 8)
        f = _random_formula(rng, k, rng.randint(0, 10))
        bare = encode_formula(f, "bare")
        boolean = encode_formula(f, "boolean")
        for values in itertools.product((False, True), repeat=k):
            p = assignment_to_point(values)
            truth = evaluate_formula(f, values)
            assert evaluate_system(bare, p) == truth
            assert evaluate_system(boolean, p) == truth


def test_degree_bound():
    rng = random.Random(2)
    f = random_3cnf(6, 30, rng)
    assert all(g.total_degree() == 3 for g in encode_formula(f, "bare").generators)
    two = CnfFormula.from_ints(3, [[1, -2], [-1, 3], [2, 2]])
    assert [g.total_degree() for g in encode_formula(two, "bare").generators] == [2, 2, 2]
    wide = CnfFormula.from_ints(5, [[1, -2, 3, -4, 5]])
    assert encode_formula(wide, "bare").generators[0].total_degree() == 5


def test_encoding_is_deterministic():
    f = random_3cnf(5, 12, random.Random(3))
    a, b = encode_formula(f), encode_formula(f)
    assert a == b
    assert [str(g) for g in a.generators] == [str(g) for g in b.generators]
