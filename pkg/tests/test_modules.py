"""Module engine: membership, kernels, saturation, minimal generators.

Oracle notes.  Kernel generators are verified by substitution into the
map (the library re-checks this internally as well, so the assertions
here use an explicitly independent multiply-and-reduce).  The expected
minimal-generator counts are hand-derived Nakayama counts.
"""

import random

import pytest

from singforms import (
    FreeModuleElement,
    HomogeneityError,
    Ideal,
    ModulePresentation,
    ambient_presentation,
    graded_dimensions,
    minimal_generators,
    module_groebner,
    module_intersection,
    module_kernel,
    module_saturation,
    module_syzygies,
    parse_poly,
    total_dimension,
    unit_vector,
)
from singforms.poly import Ring


def elem(ring, *texts):
    return FreeModuleElement(tuple(parse_poly(t, ring) for t in texts))


def test_membership_coordinate_submodule(ring2):
    gb = module_groebner([unit_vector(ring2, 2, 0)], None)
    assert gb.membership(elem(ring2, "x", "0"))
    assert not gb.membership(unit_vector(ring2, 2, 1))


def test_membership_multiple_of_generator(ring2):
    g = elem(ring2, "x", "y")
    gb = module_groebner([g], None)
    assert gb.membership(g.scale(parse_poly("y", ring2)))
    assert not gb.membership(elem(ring2, "x", "0"))


def test_membership_with_row_relation(ring2):
    f = parse_poly("x*y", ring2)
    gb = module_groebner([elem(ring2, "x")], f)
    assert gb.membership(elem(ring2, "y*x"))
    assert not gb.membership(elem(ring2, "y"))


def test_rank_mismatch(ring2):
    with pytest.raises(ValueError):
        module_groebner([elem(ring2, "x"), elem(ring2, "x", "y")], None)


def test_kernel_zero_map(ring2):
    zero = ring2.zero()
    ker = module_kernel([[zero, zero]], None)
    gb = module_groebner(ker, None)
    assert gb.membership(unit_vector(ring2, 2, 0))
    assert gb.membership(unit_vector(ring2, 2, 1))


def test_kernel_identity_map(ring2):
    one = ring2.one()
    zero = ring2.zero()
    assert module_kernel([[one, zero], [zero, one]], None) == []


def test_kernel_classical_syzygy(ring2):
    x, y = ring2.gens()
    ker = module_kernel([[x, y]], None)
    assert len(ker) == 1
    v = ker[0]
    # independent substitution check
    assert (x * v.components[0] + y * v.components[1]).is_zero()
    gb = module_groebner(ker, None)
    assert gb.membership(elem(ring2, "y", "-x"))


def test_kernel_maps_to_zero_mod_f(ring3, quadric3):
    row = [list(quadric3.gradient())]
    ker = module_kernel(row, quadric3)
    f_ideal = Ideal(ring3, (quadric3,))
    for v in ker:
        image = sum((g * c for g, c in zip(quadric3.gradient(), v.components)),
                    ring3.zero())
        assert f_ideal.contains(image)


def test_syzygies_compose_to_zero(ring3):
    gens = [elem(ring3, "x", "y"), elem(ring3, "y", "z"), elem(ring3, "z", "x")]
    for s in module_syzygies(gens):
        acc = [ring3.zero(), ring3.zero()]
        for coeff, g in zip(s.components, gens):
            for i in range(2):
                acc[i] = acc[i] + coeff * g.components[i]
        assert all(a.is_zero() for a in acc)


def test_intersection(ring2):
    x, y = ring2.gens()
    a = [unit_vector(ring2, 1, 0).scale(x)]
    b = [unit_vector(ring2, 1, 0).scale(y)]
    meet = module_intersection(a, b)
    gb = module_groebner(meet, None)
    assert gb.membership(elem(ring2, "x*y"))
    assert not gb.membership(elem(ring2, "x"))


def test_saturation_of_free_module(ring2):
    pres = ambient_presentation(ring2, ring2.zero(), 2)
    out = module_saturation(pres, [parse_poly("x", ring2)])
    assert out.is_zero_module()


def test_saturation_kills_everything():
    ring = Ring(("x",))
    f = parse_poly("x^2", ring)
    pres = ModulePresentation(
        ring, f, 1, (unit_vector(ring, 1, 0),), (unit_vector(ring, 1, 0).scale(parse_poly("x", ring)),)
    )
    out = module_saturation(pres, [parse_poly("x", ring)])
    gb = out.generator_gb()
    assert gb.membership(unit_vector(ring, 1, 0))


def test_saturation_idempotent(ring3, quadric3):
    from singforms import build_koszul, kahler_presentation

    pres = kahler_presentation(quadric3, 2)
    j = [parse_poly(t, ring3) for t in ("x", "y", "z")]
    once = module_saturation(pres, j)
    twice = module_saturation(once, j)
    gb_once = once.generator_gb()
    gb_twice = twice.generator_gb()
    assert gb_once.contains_all(twice.generators)
    assert gb_twice.contains_all(once.generators)


def test_minimal_generators_free_module(ring3):
    pres = ambient_presentation(ring3, ring3.zero(), 3)
    count, degrees = minimal_generators(pres)
    assert count == 3
    assert degrees == (0, 0, 0)


def test_minimal_generators_maximal_ideal(ring2):
    pres = ModulePresentation(
        ring2, ring2.zero(), 1,
        (elem(ring2, "x"), elem(ring2, "y")), (),
    )
    count, degrees = minimal_generators(pres)
    assert count == 2
    assert degrees == (1, 1)


def test_minimal_generators_rejects_inhomogeneous(ring2):
    pres = ModulePresentation(
        ring2, ring2.zero(), 1, (elem(ring2, "x + x^2"),), ()
    )
    with pytest.raises(HomogeneityError):
        minimal_generators(pres)


def test_presentation_validate(ring2):
    good = ModulePresentation(
        ring2, ring2.zero(), 1, (elem(ring2, "x"),), (elem(ring2, "x^2"),)
    )
    good.validate()
    bad = ModulePresentation(
        ring2, ring2.zero(), 1, (elem(ring2, "x"),), (elem(ring2, "y"),)
    )
    with pytest.raises(ValueError):
        bad.validate()


def test_graded_dimensions_and_total(ring2):
    # Q[x,y]/(x^2, y^2): dimensions 1, 2, 1 in degrees 0..2
    rels = (elem(ring2, "x^2"), elem(ring2, "y^2"))
    pres = ambient_presentation(ring2, ring2.zero(), 1, rels)
    assert graded_dimensions(pres, 4) == (1, 2, 1, 0, 0)
    assert total_dimension(pres) == 4


def test_total_dimension_infinite(ring2):
    rels = (elem(ring2, "x"),)
    pres = ambient_presentation(ring2, ring2.zero(), 1, rels)
    assert total_dimension(pres) is None


def test_random_membership_consistency(ring2):
    rng = random.Random(3)
    gens = [elem(ring2, "x^2", "y"), elem(ring2, "y^2", "x")]
    gb = module_groebner(gens, None)
    mons = [(0, 0), (1, 0), (0, 1), (1, 1)]
    for _ in range(20):
        acc = [ring2.zero(), ring2.zero()]
        for g in gens:
            c = ring2.monomial(rng.choice(mons), rng.randint(-2, 2))
            for i in range(2):
                acc[i] = acc[i] + c * g.components[i]
        combo = FreeModuleElement(tuple(acc))
        assert gb.membership(combo)
        shifted = combo + unit_vector(ring2, 2, 0)
        nf = gb.normal_form(shifted)
        assert not nf.is_zero()
        assert gb.membership(shifted - nf)
