"""Decide CNF satisfiability with reduced Gröbner bases over the rationals.

Formulas are encoded as polynomial systems (one product of linear factors
per clause, optionally with ``z_i^2 - z_i``), and a formula is
unsatisfiable iff the reduced Gröbner basis of its encoding is ``{1}``.
"""

from groebner_sat.buchberger import (
    BudgetExhausted,
    BuchbergerStats,
    GroebnerBasis,
    buchberger,
    groebner,
    is_groebner,
    reduce_basis,
    s_polynomial,
)
from groebner_sat.cnf import (
    Assignment,
    Clause,
    CnfFormula,
    DimacsError,
    Literal,
    Precheck,
    brute_force_sat,
    emit_dimacs,
    evaluate_formula,
    parse_dimacs,
    precheck,
    random_3cnf,
)
from groebner_sat.encoder import (
    EncodingMode,
    assignment_to_point,
    encode_clause,
    encode_formula,
    evaluate_system,
    literal_constant,
    point_to_assignment,
)
from groebner_sat.kernel import BACKEND
from groebner_sat.polyring import (
    ExponentOverflowError,
    Ideal,
    MonomialOrder,
    PolyRing,
    Polynomial,
    PolynomialParseError,
    compare_monomials,
    leading_term,
    normal_form,
)
from groebner_sat.satdecide import (
    DecideConfig,
    Decision,
    Status,
    decide,
    extract_solution,
    verify_unsat_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BACKEND",
    "BudgetExhausted",
    "BuchbergerStats",
    "Clause",
    "CnfFormula",
    "DecideConfig",
    "Decision",
    "DimacsError",
    "EncodingMode",
    "ExponentOverflowError",
    "GroebnerBasis",
    "Ideal",
    "Literal",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PolynomialParseError",
    "Precheck",
    "Status",
    "assignment_to_point",
    "brute_force_sat",
    "buchberger",
    "compare_monomials",
    "decide",
    "emit_dimacs",
    "encode_clause",
    "encode_formula",
    "evaluate_formula",
    "evaluate_system",
    "extract_solution",
    "groebner",
    "is_groebner",
    "leading_term",
    "literal_constant",
    "normal_form",
    "parse_dimacs",
    "point_to_assignment",
    "precheck",
    "random_3cnf",
    "reduce_basis",
    "s_polynomial",
    "verify_unsat_certificate",
]
