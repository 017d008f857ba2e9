"""The wedge-with-df complex.

Independent oracles used here:
  * a symbolic wedge product on exterior basis forms (sign from sorting
    the concatenated index tuple) recomputes every matrix of the complex;
  * standard-monomial counts of the hand-reduced singular ideals verify
    the Tjurina dimensions (for x^2+y^2+z^2 the ideal reduces to
    (x, y, z), for x^3+y^3+z^3 to (x^2, y^2, z^2)).
"""

from itertools import combinations
from math import comb

import pytest

from singforms import (
    HomogeneityError,
    Ideal,
    build_koszul,
    kahler_presentation,
    koszul_cohomology,
    minimal_generators,
    module_groebner,
    parse_poly,
    reflexive_presentation,
    tjurina_dimension,
    torsion_oracle,
    total_dimension,
    vanishing_pattern,
)
from singforms.poly import Ring


def wedge_sign(indices):
    """Sign of the permutation sorting the tuple; 0 on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def oracle_matrix(f, p):
    """Matrix of (df wedge .) on basis forms via the symbolic wedge."""
    ring = f.ring
    m = ring.nvars
    src = list(combinations(range(m), p))
    tgt = list(combinations(range(m), p + 1))
    tgt_index = {t: i for i, t in enumerate(tgt)}
    rows = [[ring.zero() for _ in src] for _ in tgt]
    for c, I in enumerate(src):
        for j in range(m):
            sign = wedge_sign((j,) + I)
            if sign == 0:
                continue
            entry = f.partial(j) if sign > 0 else -f.partial(j)
            rows[tgt_index[tuple(sorted((j,) + I))]][c] = \
                rows[tgt_index[tuple(sorted((j,) + I))]][c] + entry
    return rows


def test_build_rejects_one_variable():
    ring = Ring(("x",))
    with pytest.raises(ValueError, match=">= 2 variables"):
        build_koszul(parse_poly("x", ring))


def test_build_rejects_constant_and_inhomogeneous(ring2):
    with pytest.raises(ValueError):
        build_koszul(parse_poly("3", ring2))
    with pytest.raises(HomogeneityError):
        build_koszul(parse_poly("x^2 + y", ring2))


def test_plane_curve_matrices(ring2):
    f = parse_poly("x^2+y^2", ring2)
    K = build_koszul(f)
    assert [[e.to_string() for e in row] for row in K.maps[0]] == [["2*x"], ["2*y"]]
    assert [[e.to_string() for e in row] for row in K.maps[1]] == [["-2*y", "2*x"]]


def test_matrices_match_wedge_oracle(ring3, quadric3, cubic3):
    for f in (quadric3, cubic3):
        K = build_koszul(f)
        for p in range(K.n + 1):
            assert K.maps[p] == tuple(tuple(r) for r in oracle_matrix(f, p))


def test_matrices_match_wedge_oracle_4vars(quadric4):
    K = build_koszul(quadric4)
    for p in range(K.n + 1):
        assert K.maps[p] == tuple(tuple(r) for r in oracle_matrix(quadric4, p))


def test_composites_vanish_identically(quadric4):
    K = build_koszul(quadric4)
    for p in range(K.n):
        a, b = K.maps[p], K.maps[p + 1]
        for i in range(len(b)):
            for j in range(len(a[0])):
                entry = quadric4.ring.zero()
                for k in range(len(a)):
                    entry = entry + b[i][k] * a[k][j]
                assert entry.is_zero()


def test_smooth_linear_form_all_vanish(ring2):
    f = parse_poly("x", ring2)
    K = build_koszul(f)
    for p in range(K.n + 2):
        mod = koszul_cohomology(K, p)
        assert mod.is_zero
        assert mod.min_gen_count == 0


def test_cohomology_out_of_range(quadric3):
    K = build_koszul(quadric3)
    with pytest.raises(ValueError):
        koszul_cohomology(K, -1)
    with pytest.raises(ValueError):
        koszul_cohomology(K, 4)


def test_quadric3_window(quadric3):
    assert vanishing_pattern(quadric3).nonvanishing_degrees() == (2, 3)


def test_quadric4_window(quadric4):
    assert vanishing_pattern(quadric4).nonvanishing_degrees() == (3, 4)


def test_pattern_tables(quadric3):
    pat = vanishing_pattern(quadric3)
    assert pat.tor_nonzero == (False, False, True, True)
    assert pat.cotor_nonzero == (False, True, True, False)


def test_smooth_pattern(ring2):
    pat = vanishing_pattern(parse_poly("x + y", ring2))
    assert pat.h_nonzero == (False, False, False)


def count_standard_monomials(caps):
    """Box count for a pure-power monomial ideal (x_i^{c_i})."""
    total = 1
    for c in caps:
        total *= c
    return total


def test_tjurina_examples(ring3, quadric3, cubic3, whitney):
    assert tjurina_dimension(quadric3) == 1 == count_standard_monomials((1, 1, 1))
    assert tjurina_dimension(cubic3) == 8 == count_standard_monomials((2, 2, 2))
    assert tjurina_dimension(whitney) is None


def test_tjurina_matches_top_cohomology(quadric3, cubic3):
    for f in (quadric3, cubic3):
        K = build_koszul(f)
        top = koszul_cohomology(K, K.n + 1)
        assert total_dimension(top.presentation) == tjurina_dimension(f)


def test_reflexive_top_degree(quadric3):
    pres = reflexive_presentation(quadric3, 2)
    assert pres.rank == 1
    count, _ = minimal_generators(pres)
    assert count == 1  # free of rank C(2,2) = 1


def test_reflexive_quadric_not_free(quadric3):
    pres = reflexive_presentation(quadric3, 1)
    count, degrees = minimal_generators(pres)
    assert count == 4  # hand count: three pairwise relations plus the gradient
    assert count > comb(2, 1)
    assert degrees == (1, 1, 1, 1)


def test_reflexive_smooth_free(ring2):
    pres = reflexive_presentation(parse_poly("x + y", ring2), 1)
    count, _ = minimal_generators(pres)
    assert count == 1 == comb(1, 1)


def test_reflexive_rank_law(quadric4):
    K = build_koszul(quadric4)
    for p in range(K.n + 1):
        reflexive_presentation(K, p)  # raises when the rank is off


def test_kahler_examples(ring3, quadric3):
    pres = kahler_presentation(quadric3, 1)
    count, _ = minimal_generators(pres)
    assert count == 3
    top = kahler_presentation(quadric3, 3)
    assert total_dimension(top) == 1
    smooth = kahler_presentation(parse_poly("x + y", Ring(("x", "y"))), 1)
    count_s, _ = minimal_generators(smooth)
    assert count_s == 1


def test_torsion_oracle_quadric(quadric3):
    K = build_koszul(quadric3)
    rep1 = torsion_oracle(K, 1)
    assert rep1.equal and rep1.min_gen_count == 0
    rep2 = torsion_oracle(K, 2)
    assert rep2.equal and rep2.min_gen_count > 0


def test_torsion_oracle_smooth(ring2):
    f = parse_poly("x + y", ring2)
    for p in (1, 2):
        rep = torsion_oracle(f, p)
        assert rep.equal
        assert rep.min_gen_count == 0


def test_monotone_vanishing(quadric3, quadric4, cubic3, whitney, ring2):
    fixtures = [quadric3, quadric4, cubic3, whitney, parse_poly("x*y", ring2)]
    for f in fixtures:
        assert all(p.constant_term == 0 for p in f.gradient())
        flags = vanishing_pattern(f).h_is_zero
        for k in range(len(flags)):
            if flags[k]:
                assert all(flags[: k + 1]), f"non-monotone pattern for {f.to_string()}"


def test_window_law_all_singular_fixtures(quadric3, quadric4, cubic3, whitney, ring2):
    from singforms import singular_locus_codim

    for f in (quadric3, quadric4, cubic3, whitney, parse_poly("x*y", ring2)):
        d = singular_locus_codim(f)
        n = f.ring.nvars - 1
        expected = tuple(range(d, n + 2))
        assert vanishing_pattern(f).nonvanishing_degrees() == expected


def test_resolution_exactness_window(quadric4):
    # length-2 free resolution: exactness at the middle term in the
    # range p+2 <= d-1 amounts to vanishing of degree-(p+1) cohomology
    from singforms import singular_locus_codim

    d = singular_locus_codim(quadric4)
    assert d == 3
    K = build_koszul(quadric4)
    for p in range(0, K.n - 1):
        if p + 2 <= d - 1:
            assert koszul_cohomology(K, p + 1).is_zero


def test_hilbert_prefix_cubic(cubic3):
    K = build_koszul(cubic3)
    top = koszul_cohomology(K, 3, degree_prefix=6)
    assert top.hilbert_prefix == (1, 3, 3, 1, 0, 0, 0)
    assert top.min_gen_count == 1
