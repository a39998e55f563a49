import random
from fractions import Fraction

import pytest

from _oracle import as_dict, dict_add, dict_mul, random_small_ideal
from groebner_sat.buchberger import (
    STRATEGIES,
    BudgetExhausted,
    GroebnerBasis,
    buchberger,
    groebner,
    is_groebner,
    reduce_basis,
    s_polynomial,
)
from groebner_sat.polyring import ExponentOverflowError, MAX_EXPONENT, Ideal, PolyRing, normal_form


@pytest.fixture
def grlex_xy():
    ring = PolyRing(2, "grlex")
    x, y = ring.gens()
    return ring, x, y


def test_s_polynomial_textbook(grlex_xy):
    ring, x, y = grlex_xy
    f, g = x**3 - 2 * x * y, x * x * y - 2 * y * y + x
    s = s_polynomial(f, g)
    assert s == -(x * x)
    # direct expansion of the defining formula: y*f - x*g
    expect = dict_add(dict_mul({(0, 1): 1}, as_dict(f)), dict_mul({(1, 0): 1}, as_dict(g)), -1)
    assert as_dict(s) == expect


def test_s_polynomial_identical_is_zero(grlex_xy):
    _, x, y = grlex_xy
    f = 3 * x * y - y + 7
    assert s_polynomial(f, f).is_zero()


def test_s_polynomial_univariate():
    ring = PolyRing(1)
    z = ring.var(1)
    assert s_polynomial(z**3, (z - 1) ** 3) == 3 * z * z - 3 * z + 1


def test_s_polynomial_scales_by_leading_coefficients():
    ring = PolyRing(2, "lex")
    x, y = ring.gens()
    s = s_polynomial(2 * x * y + 1, 3 * x * x - y)
    assert s == Fraction(1, 2) * x + Fraction(1, 3) * y * y


def test_s_polynomial_zero_input():
    ring = PolyRing(1)
    with pytest.raises(ValueError):
        s_polynomial(ring.zero(), ring.var(1))


def test_single_generator_is_basis():
    ring = PolyRing(1)
    z = ring.var(1)
    G = buchberger(Ideal(ring, (z * z - z,)))
    assert list(G) == [z * z - z]
    assert G.stats.pairs_processed == 0
    assert is_groebner([z * z - z])


def test_unit_ideal_univariate():
    ring = PolyRing(1)
    z = ring.var(1)
    G = groebner(Ideal(ring, (z**3, (z - 1) ** 3)))
    assert G.is_unit() and list(G) == [ring.one()]


def test_satisfiable_clause_basis_is_not_unit():
    ring = PolyRing(3)
    z1, z2, z3 = ring.gens()
    gens = [(z1 - 1) * (z2 - 1) * (z3 - 1)] + [z * z - z for z in ring.gens()]
    G = groebner(Ideal(ring, tuple(gens)))
    assert not G.is_unit()
    assert is_groebner(G)


def test_textbook_groebner_basis(grlex_xy):
    ring, x, y = grlex_xy
    f, g = x**3 - 2 * x * y, x * x * y - 2 * y * y + x
    assert not is_groebner([f, g])
    G = groebner([f, g])
    assert list(G) == [x * x, x * y, y * y - Fraction(1, 2) * x]
    assert G.reduced and is_groebner(G)


def test_reduce_basis_examples():
    ring = PolyRing(2)
    z1, z2 = ring.gens()
    assert list(reduce_basis([2 * z1 * z1 - 2 * z1])) == [z1 * z1 - z1]
    assert list(reduce_basis([z1 - 1, z1 * z2 - z2])) == [z1 - 1]
    assert normal_form(z1 * z2 - z2, [z1 - 1])[1].is_zero()
    assert list(reduce_basis([ring.const(3), z1 + z2])) == [ring.one()]


def test_reduced_basis_properties():
    rng = random.Random(21)
    for _ in range(40):
        ring = PolyRing(3, rng.choice(["lex", "grlex", "grevlex"]))
        gens = random_small_ideal(rng, ring)
        if not gens:
            continue
        G = list(groebner(gens))
        lms = [g.lm for g in G]
        assert all(g.lc == 1 for g in G)
        assert [g._keys[0] for g in G] == sorted((g._keys[0] for g in G), reverse=True)
        for i, g in enumerate(G):
            for j, lm in enumerate(lms):
                if i != j:
                    assert not any(all(a <= b for a, b in zip(lm, m)) for m in g.monomials)


@pytest.mark.parametrize("order", ["lex", "grlex", "grevlex"])
def test_buchberger_postconditions_random(order):
    rng = random.Random(hash(order) % 1000)
    for _ in range(40):
        ring = PolyRing(3, order)
        gens = random_small_ideal(rng, ring)
        if not gens:
            continue
        G = buchberger(gens)
        assert is_groebner(G)
        assert all(normal_form(g, list(G))[1].is_zero() for g in gens)
        R = reduce_basis(G)
        assert all(normal_form(g, list(R))[1].is_zero() for g in gens)
        assert all(normal_form(r, list(G))[1].is_zero() for r in R)


def test_uniqueness_across_strategies_and_criteria():
    rng = random.Random(8)
    for _ in range(40):
        ring = PolyRing(3, rng.choice(["lex", "grlex", "grevlex"]))
        gens = random_small_ideal(rng, ring)
        if not gens:
            continue
        results = {
            (s, c): groebner(gens, strategy=s, coprime=c, chain=c) for s in STRATEGIES for c in (True, False)
        }
        first = next(iter(results.values()))
        for G in results.values():
            assert G.polynomials == first.polynomials


def test_criteria_prune_pairs():
    ring = PolyRing(4)
    gens = [z * z - z for z in ring.gens()] + [ring.parse("z1*z2 - z3"), ring.parse("z3*z4 - z1")]
    on = buchberger(gens)
    off = buchberger(gens, coprime=False, chain=False)
    assert on.stats.pairs_coprime > 0
    assert on.stats.pairs_processed < off.stats.pairs_processed
    assert reduce_basis(on).polynomials == reduce_basis(off).polynomials


def test_order_argument_and_empty_ideal():
    ring = PolyRing(2, "grevlex")
    x, y = ring.gens()
    G = groebner([x * x - y, x * y - 1], order="lex")
    assert G.order.value == "lex"
    assert is_groebner(G)
    empty = groebner(Ideal(ring, ()))
    assert len(empty) == 0 and not empty.is_unit()


def test_budget_exhausted():
    ring = PolyRing(3, "lex")
    gens = [ring.parse(t) for t in ("z1^2 + z2*z3 - 1", "z2^2 - z1*z3 + 2", "z3^2 + z1*z2 - 3")]
    with pytest.raises(BudgetExhausted) as info:
        buchberger(gens, budget=1)
    assert info.value.stats.pairs_processed == 1
    assert info.value.budget == 1
    assert is_groebner(buchberger(gens, budget=None))


def test_overflow_surfaces():
    ring = PolyRing(2)
    x, y = ring.gens()
    big = ring.monomial((MAX_EXPONENT - 1, 0))
    # lcm(x^(M-1), x*y^2) has total degree M + 1
    with pytest.raises(ExponentOverflowError):
        buchberger([big + y, x * y * y + 1])


def test_is_groebner_rejects_zero_elements():
    ring = PolyRing(1)
    with pytest.raises(ValueError):
        is_groebner([ring.zero()])
    assert is_groebner([])


def test_unknown_strategy():
    ring = PolyRing(1)
    with pytest.raises(ValueError):
        buchberger([ring.var(1)], strategy="sugar")


def test_groebner_basis_str():
    ring = PolyRing(2)
    z1, z2 = ring.gens()
    G = GroebnerBasis((z1 - 1, z2), ring, reduced=True)
    assert str(G) == "z1 - 1\nz2"
