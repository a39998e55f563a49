import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import formula_holds, truth_table_sat
from groebner_sat.cnf import (
    Assignment,
    Clause,
    CnfFormula,
    DimacsError,
    Literal,
    Precheck,
    brute_force_sat,
    canonical_clause,
    emit_dimacs,
    evaluate_formula,
    max_satisfiable_distinct_clauses,
    parse_dimacs,
    precheck,
    random_3cnf,
)

ALL_SIGNS = [[s1 * 1, s2 * 2, s3 * 3] for s1, s2, s3 in itertools.product((1, -1), repeat=3)]


def formulas(max_vars=6, max_clauses=8, max_width=3):
    def build(k):
        lit = st.integers(1, k).flatmap(lambda v: st.sampled_from((v, -v)))
        clause = st.lists(lit, max_size=max_width if k else 0)
        return st.lists(clause, max_size=max_clauses).map(lambda cs: CnfFormula.from_ints(k, cs))

    return st.integers(0, max_vars).flatmap(build)


# ---------------------------------------------------------------------------
# model


def test_literal_validation():
    assert Literal.from_int(-3) == Literal(3, -1)
    assert Literal(2, 1).to_int() == 2
    for bad in ((0, 1), (1, 0), (-1, 1), (2, 2)):
        with pytest.raises(ValueError):
            Literal(*bad)
    with pytest.raises(ValueError):
        Literal.from_int(0)


def test_formula_rejects_out_of_range_variable():
    with pytest.raises(ValueError):
        CnfFormula.from_ints(2, [[1, 3]])


def test_assignment_literals_round_trip():
    a = Assignment((True, False, True))
    assert a.to_literals() == [1, -2, 3]
    assert Assignment.from_literals([3, -2, 1], 3) == a
    with pytest.raises(ValueError):
        Assignment.from_literals([1, -2], 3)


# ---------------------------------------------------------------------------
# DIMACS


def test_parse_examples():
    f = parse_dimacs("p cnf 3 1\n1 -2 3 0")
    assert f.num_vars == 3 and f.to_ints() == [[1, -2, 3]]
    g = parse_dimacs("c comment\np cnf 1 2\n1 1 1 0\n-1 -1 -1 0")
    assert g.to_ints() == [[1, 1, 1], [-1, -1, -1]]


def test_parse_clause_spanning_lines_and_percent_trailer():
    f = parse_dimacs("c x\np cnf 4 2\n1 -2\n 3 0 4\n0\n%\n0\n")
    assert f.to_ints() == [[1, -2, 3], [4]]


def test_parse_empty_clause():
    assert parse_dimacs("p cnf 2 2\n0\n1 2 0\n").to_ints() == [[], [1, 2]]


@pytest.mark.parametrize(
    "text, line",
    [
        ("p cnf 2 1\n3 0", 2),
        ("p cnf 2 1\np cnf 2 1\n1 0", 2),
        ("1 2 0\np cnf 2 1", 1),
        ("p cnf 2 1\n1 x 0", 2),
        ("p cnf 2 1\n1 2", 2),
        ("p cnf two 1\n1 0", 1),
        ("p sat 2 1\n1 0", 1),
        ("c only a comment\n", None),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(DimacsError) as info:
        parse_dimacs(text)
    assert info.value.line == line
    if line is not None:
        assert str(info.value).startswith(f"line {line}:")


def test_emit_examples():
    assert emit_dimacs(CnfFormula(0, ())) == "p cnf 0 0\n"
    assert emit_dimacs(CnfFormula.from_ints(2, [[], [1, -2]])) == "p cnf 2 2\n0\n1 -2 0\n"
    for text in ("p cnf 3 1\n1 -2 3 0", "c comment\np cnf 1 2\n1 1 1 0\n-1 -1 -1 0"):
        f = parse_dimacs(text)
        assert parse_dimacs(emit_dimacs(f)) == f


@settings(max_examples=200, deadline=None)
@given(formulas(max_width=5))
def test_parse_emit_round_trip(f):
    text = emit_dimacs(f)
    assert parse_dimacs(text) == f
    assert emit_dimacs(parse_dimacs(text)) == text


# ---------------------------------------------------------------------------
# semantics and oracle


def test_evaluate_examples():
    f = CnfFormula.from_ints(3, [[1, -2, 3]])
    assert evaluate_formula(f, (False, False, False))
    assert not evaluate_formula(CnfFormula.from_ints(2, [[]]), (True, True))
    assert evaluate_formula(CnfFormula(2, ()), (False, True))
    with pytest.raises(ValueError):
        evaluate_formula(f, (True,))


def test_brute_force_examples():
    assert brute_force_sat(CnfFormula.from_ints(1, [[1, 1, 1]])) == Assignment((True,))
    assert brute_force_sat(CnfFormula.from_ints(1, [[1, 1, 1], [-1, -1, -1]])) is None
    assert brute_force_sat(CnfFormula.from_ints(3, ALL_SIGNS)) is None
    assert brute_force_sat(CnfFormula(0, ())) == Assignment(())


def test_each_assignment_falsifies_one_sign_clause():
    for values in itertools.product((False, True), repeat=3):
        assert sum(not formula_holds([c], values) for c in ALL_SIGNS) == 1


def test_brute_force_lexicographic_first():
    f = CnfFormula.from_ints(3, [[1, 2], [-1, 3], [2, 3]])
    models = [v for v in itertools.product((False, True), repeat=3) if formula_holds(f.to_ints(), v)]
    assert brute_force_sat(f).values == models[0]


def test_brute_force_limit():
    f = CnfFormula(5, ())
    with pytest.raises(ValueError):
        brute_force_sat(f, limit=4)


@settings(max_examples=300, deadline=None)
@given(formulas())
def test_brute_force_against_truth_table(f):
    model = brute_force_sat(f)
    assert (model is not None) == truth_table_sat(f.num_vars, f.to_ints())
    if model is not None:
        assert evaluate_formula(f, model)


# ---------------------------------------------------------------------------
# precheck


def test_precheck_count_bound_k3():
    f = CnfFormula.from_ints(3, ALL_SIGNS)
    assert max_satisfiable_distinct_clauses(3) == 7
    assert precheck(f) is Precheck.UNSAT
    assert brute_force_sat(f) is None


def test_precheck_fewer_than_eight():
    rng = random.Random(4)
    f = random_3cnf(4, 7, rng)
    assert precheck(f) is Precheck.SAT
    assert brute_force_sat(f) is not None


def test_precheck_guard_for_repeated_variables():
    f = CnfFormula.from_ints(1, [[1, 1, 1], [-1, -1, -1]])
    assert precheck(f) is Precheck.UNKNOWN
    assert brute_force_sat(f) is None


def test_precheck_counts_distinct_clauses():
    # the 7 satisfiable sign patterns, each repeated, plus reordered copies
    f = CnfFormula.from_ints(3, ALL_SIGNS[:7] * 2 + [[3, 2, 1]])
    assert canonical_clause(Clause.from_ints([3, 2, 1])) == canonical_clause(Clause.from_ints([1, 2, 3]))
    assert precheck(f) is Precheck.UNKNOWN
    assert brute_force_sat(f) is not None


def test_precheck_width_guard():
    assert precheck(CnfFormula.from_ints(3, [[1, 2]])) is Precheck.UNKNOWN
    assert precheck(CnfFormula.from_ints(4, [[1, 2, 3, 4]])) is Precheck.UNKNOWN
    assert precheck(CnfFormula(3, ())) is Precheck.SAT


def three_var_formulas(max_vars=6, max_clauses=60):
    def build(k):
        clause = st.lists(st.integers(1, k), min_size=3, max_size=3, unique=True).flatmap(
            lambda vs: st.tuples(*[st.sampled_from((v, -v)) for v in vs])
        )
        return st.lists(clause, max_size=max_clauses).map(lambda cs: CnfFormula.from_ints(k, cs))

    return st.integers(3, max_vars).flatmap(build)


@settings(max_examples=300, deadline=None)
@given(st.one_of(three_var_formulas(max_vars=4), three_var_formulas(max_vars=10), formulas()))
def test_precheck_soundness(f):
    verdict = precheck(f)
    if verdict is Precheck.SAT:
        assert brute_force_sat(f) is not None
    elif verdict is Precheck.UNSAT:
        assert brute_force_sat(f) is None


def test_precheck_soundness_exhaustive_near_bound():
    # every formula over x1..x3 built from the 8 sign patterns: only the full set is UNSAT
    for r in range(9):
        for subset in itertools.combinations(ALL_SIGNS, r):
            f = CnfFormula.from_ints(3, subset)
            verdict = precheck(f)
            truth = brute_force_sat(f) is not None
            assert verdict is (Precheck.UNSAT if r == 8 else Precheck.SAT)
            assert truth == (r < 8)


def test_precheck_bound_k4():
    universe = [
        [s1 * a, s2 * b, s3 * c]
        for a, b, c in itertools.combinations(range(1, 5), 3)
        for s1, s2, s3 in itertools.product((1, -1), repeat=3)
    ]
    assert len(universe) == 32 and max_satisfiable_distinct_clauses(4) == 28
    rng = random.Random(12)
    for size in (27, 28, 29, 30, 32):
        for _ in range(20):
            f = CnfFormula.from_ints(4, rng.sample(universe, size))
            verdict = precheck(f)
            if size > 28:
                assert verdict is Precheck.UNSAT and brute_force_sat(f) is None
            else:
                assert verdict is Precheck.UNKNOWN


def test_random_3cnf_shape_and_determinism():
    a = random_3cnf(6, 20, random.Random(9))
    b = random_3cnf(6, 20, random.Random(9))
    assert a == b
    assert all(len(c.variables()) == 3 for c in a.clauses)
    with pytest.raises(ValueError):
        random_3cnf(2, 1, random.Random(0))
