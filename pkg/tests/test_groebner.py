"""Ideal-level Groebner tests.

The frozen expected bases were derived by an independent Buchberger run
by hand: for (x^2+y^2, x*y) the single surviving S-polynomial is
y*(x^2+y^2) - x*(x*y) = y^3, and the three pairs of the completed set
all reduce to zero.
"""

import random

import pytest

from singforms import BudgetExceededError, Ideal, groebner_basis, ideal_dimension, jacobian_ideal, parse_poly
from singforms.orders import GREVLEX, LEX, mono_div, mono_divides, mono_lcm


def _ideal(ring, *texts):
    return Ideal(ring, tuple(parse_poly(t, ring) for t in texts))


def test_principal_monomial(ring2):
    assert [g.to_string() for g in _ideal(ring2, "x").groebner_basis()] == ["x"]


def test_two_generators_hand_run(ring2):
    basis = _ideal(ring2, "x^2+y^2", "x*y").groebner_basis()
    assert {g.to_string() for g in basis} == {"x*y", "x^2 + y^2", "y^3"}


def test_jacobian_of_quadric(ring3, quadric3):
    basis = jacobian_ideal(quadric3).groebner_basis()
    assert {g.to_string() for g in basis} == {"x", "y", "z"}


def test_groebner_basis_wrapper(ring2):
    ideal = groebner_basis(_ideal(ring2, "x^2+y^2", "x*y"))
    assert ideal.verify_cached_basis()


def test_buchberger_criterion(ring3):
    # every S-polynomial of the returned basis reduces to zero
    ideal = _ideal(ring3, "x^2+y^2+z^2", "x*y - z^2", "y*z + x^2")
    basis = ideal.groebner_basis()
    gb = Ideal(ring3, basis)
    for i, g in enumerate(basis):
        for h in basis[i + 1 :]:
            lg, lh = g.leading_monomial(), h.leading_monomial()
            lcm = mono_lcm(lg, lh)
            s = g.ring.monomial(mono_div(lcm, lg)) * g / g.terms[lg] - \
                g.ring.monomial(mono_div(lcm, lh)) * h / h.terms[lh]
            assert gb.normal_form(s).is_zero()


def test_reduced_basis_unique_under_permutation(ring3):
    gens = [
        parse_poly(t, ring3)
        for t in ("x^2*y - z^3", "x*z - y^2", "y^3 + x*z^2", "z^4 - x*y")
    ]
    reference = Ideal(ring3, tuple(gens)).groebner_basis()
    rng = random.Random(7)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert Ideal(ring3, tuple(shuffled)).groebner_basis() == reference


def test_membership_random_pairs(ring3):
    rng = random.Random(11)
    ideal = _ideal(ring3, "x^2+y^2+z^2", "x*y - z^2")
    gens = ideal.generators
    mons = [ring3.monomial(m) for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 0, 2)]]
    for _ in range(20):
        combo = ring3.zero()
        for g in gens:
            combo = combo + ring3.constant(rng.randint(-3, 3)) * rng.choice(mons) * g
        assert ideal.contains(combo)
        probe = combo + ring3.monomial((0, 0, 1))  # z is not in the ideal
        nf = ideal.normal_form(probe)
        assert not nf.is_zero()
        assert ideal.contains(probe - nf)


def test_dimension_examples(ring3):
    assert ideal_dimension(_ideal(ring3, "x", "y", "z")) == 0
    assert ideal_dimension(_ideal(ring3, "1")) == -1
    assert ideal_dimension(_ideal(ring3, "x^2 - y^2*z", "x", "y")) == 1
    assert ideal_dimension(Ideal(ring3, ())) == 3


def test_dimension_lex_agrees(ring3):
    ideal = _ideal(ring3, "x^2 - y^2*z", "x*y")
    lts_grevlex = ideal.leading_monomials(GREVLEX)
    ideal2 = _ideal(ring3, "x^2 - y^2*z", "x*y")
    lts_lex = ideal2.leading_monomials(LEX)
    assert lts_grevlex != lts_lex  # genuinely different orders
    assert ideal.dimension() == ideal2.dimension() == 1


def test_colon_and_saturation(ring2):
    principal = _ideal(ring2, "x^2*y")
    quotient = principal.colon(parse_poly("x", ring2))
    assert quotient.contains(parse_poly("x*y", ring2))
    assert not quotient.contains(parse_poly("y", ring2))
    sat = principal.saturation(_ideal(ring2, "x"))
    assert sat.contains(parse_poly("y", ring2))
    assert not sat.contains(ring2.one())


def test_standard_monomials(ring3):
    ideal = _ideal(ring3, "x^2", "y^2", "z^2")
    mons = ideal.standard_monomials()
    assert len(mons) == 8
    ideal2 = _ideal(ring3, "x", "y^2", "y*z")
    assert ideal2.standard_monomials() is None  # z-axis escapes


def test_budget_exceeded(ring3):
    ideal = _ideal(ring3, "x^5*y^2 - z^7", "x^2*z^3 - y^5", "y^3*z - x^4")
    with pytest.raises(BudgetExceededError):
        ideal.groebner_basis(limit=10)


def test_divisibility_helpers():
    assert mono_divides((1, 0), (2, 1))
    assert not mono_divides((1, 2), (2, 1))
    assert mono_lcm((1, 2), (2, 1)) == (2, 2)
