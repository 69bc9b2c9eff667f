from fractions import Fraction

import pytest

import skeinlab.excision as EX
from skeinlab.scalar import ScalarError

S0 = Fraction(7, 5)
S1 = Fraction(11, 7)


def test_component_bases():
    comp = EX.GradedComponent(2)
    assert comp.dimension == 9
    assert len(comp.basis) == 9
    filt = EX.FiltrationComponent(2)
    assert filt.dimension == 10  # unit plus the nine 2-strand tangles
    assert EX.FiltrationComponent(3).dimension == 4 + 16
    assert EX.degree_increment(2) == 9
    assert EX.degree_increment(1) == 4
    assert EX.degree_increment(0) == 1


def test_coassociativity_exact():
    for n in range(3):
        ok, witness = EX.check_coassociativity(n)
        assert ok, witness


def test_splitting_degree_zero_and_one():
    rep0 = EX.splitting_image_check(0, S0)
    assert rep0.passed and rep0.image_rank == 1 and rep0.cotensor_dim == 1
    rep1 = EX.splitting_image_check(1, S0)
    assert rep1.passed
    assert rep1.image_rank == 4 and rep1.cotensor_dim == 4
    assert rep1.image_increment == 4 == rep1.expected_increment


def test_splitting_degree_two_increment_is_nine():
    rep = EX.splitting_image_check(2, S0)
    assert rep.passed
    assert rep.image_rank == 10 and rep.cotensor_dim == 10
    assert rep.image_increment == 9 == rep.expected_increment


def test_invariants_variants_agree_degree_one():
    from skeinlab import linalg

    spaces = {v: EX.invariants_subspace(1, v, S0) for v in EX.VARIANTS}
    dims = {v: len(rows) for v, rows in spaces.items()}
    assert dims == {"inv": 4, "hh0_L": 4, "hh0_l_ht": 4}
    image = EX.comul_image_rows(1, S0)
    canon = linalg.row_space_basis(image)
    for v, rows in spaces.items():
        assert linalg.row_space_basis(rows) == canon, v


def test_invariants_rejects_bad_variant_and_point():
    with pytest.raises(ValueError):
        EX.invariants_subspace(1, "bogus", S0)
    with pytest.raises(ScalarError):
        EX.invariants_subspace(1, "inv", Fraction(1))


def test_gluing_check_small_degrees():
    for n in (0, 1):
        for s0 in (S0, S1):
            rep = EX.gluing_excision_check(n, s0)
            assert rep.passed, (n, s0, rep.dims, rep.increments)
            assert rep.pullback_ok
