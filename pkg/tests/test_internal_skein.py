from fractions import Fraction

import pytest

import skeinlab.internal_skein as IS
from skeinlab.diagram import SkeinElement, UNIT_TANGLE, BasisTangle
from skeinlab.scalar import HalfLaurent

s = HalfLaurent.s_pow


def test_enumeration_counts():
    assert len(IS.enumerate_matchings(2, 0)) == 1
    assert len(IS.enumerate_matchings(1, 1)) == 1
    assert len(IS.enumerate_matchings(2, 2)) == 2
    assert len(IS.enumerate_matchings(3, 3)) == 5
    assert len(IS.enumerate_matchings(0, 6)) == 5
    with pytest.raises(IS.MatchingError):
        IS.enumerate_matchings(2, 1)


def test_matching_validation():
    with pytest.raises(IS.MatchingError):
        # Crossing pair pattern west0-east1 / west1-east0 is non-planar.
        IS.Matching(2, 2, ((("w", 0), ("e", 1)), (("w", 1), ("e", 0))))
    with pytest.raises(ValueError):
        IS.Matching(2, 0, ((("w", 0), ("w", 0)),))


def test_st_map_west_arc():
    m = IS.Matching(2, 0, ((("w", 0), ("w", 1)),))
    table = IS.st_map(m)
    assert table[((1, -1), ())] == SkeinElement.of(UNIT_TANGLE, s(5, -1))
    assert table[((-1, 1), ())] == SkeinElement.of(UNIT_TANGLE, s(1))
    assert table[((1, 1), ())].is_zero()


def test_matching_word_realizes_matching():
    from skeinlab.diagram import reduce, StatedWord
    import skeinlab.comodule_rt as CM

    for nw, ne in ((2, 2), (0, 4), (3, 1)):
        for m in IS.enumerate_matchings(nw, ne):
            word = IS.matching_word(m)
            table = IS.st_map(m)
            for west in CM.state_tuples(nw):
                for east in CM.state_tuples(ne):
                    assert reduce(StatedWord(word, west, east)) == table[(west, east)]


def test_st_map_through_strand():
    m = IS.identity_matching(1)
    table = IS.st_map(m)
    assert table[((1,), (1,))] == SkeinElement.of(BasisTangle(1, (1,), (1,)))
    assert table[((1,), (-1,))] == SkeinElement.of(BasisTangle(1, (1,), (-1,)))


def test_st_map_nested_east_arcs():
    m = IS.Matching(0, 4, ((("e", 0), ("e", 3)), (("e", 1), ("e", 2))))
    table = IS.st_map(m)
    # Innermost (+,-) then outer (+,-) multiply the arc weights.
    assert table[((), (1, 1, -1, -1))] == SkeinElement.of(UNIT_TANGLE, s(-1) * s(-1))
    # Innermost (-,+) gives -q^(-5/2), outer then reads (+,-): q^(-1/2).
    assert table[((), (1, -1, 1, -1))] == SkeinElement.of(UNIT_TANGLE, s(-6, -1))


def test_intertwiner_small():
    for nw, ne in ((1, 1), (2, 0), (0, 2), (2, 2)):
        for m in IS.enumerate_matchings(nw, ne):
            ok, witness = IS.check_st_intertwiner(m)
            assert ok, witness


def test_naturality_west_cap_into_identity():
    m = IS.identity_matching(2)
    ok, witness = IS.check_st_naturality(m, "cap", "w", 0)
    assert ok, witness


def test_naturality_exhaustive_small():
    for nw, ne in ((0, 0), (1, 1), (0, 2), (2, 0), (2, 2)):
        for m in IS.enumerate_matchings(nw, ne):
            for kind, side, pos in IS.all_naturality_checks(m):
                ok, witness = IS.check_st_naturality(m, kind, side, pos)
                assert ok, witness


def test_cup_insertion_makes_loop():
    m = IS.Matching(0, 2, ((("e", 0), ("e", 1)),))
    composite, loops = IS.insert_cup(m, "e", 0)
    assert loops == 1
    assert composite.n_east == 0


def test_st_rank_triples():
    s0 = Fraction(7, 5)
    assert IS.st_rank(0, 0, s0) == (1, 1, 1)
    assert IS.st_rank(1, 1, s0) == (1, 1, 1)
    assert IS.st_rank(2, 2, s0) == (2, 2, 2)
    assert IS.st_rank(2, 0, s0) == (1, 1, 1)


def test_peter_weyl_count():
    assert IS.peter_weyl_count(2, 2) == 2
    assert IS.peter_weyl_count(3, 3) == 5
    assert IS.peter_weyl_count(3, 1) == 2


def test_product_compatibility_small():
    for m1 in IS.enumerate_matchings(1, 1):
        for m2 in IS.enumerate_matchings(2, 0):
            ok, witness = IS.check_product_compatibility(m1, m2)
            assert ok, witness


def test_braided_opposite_degree_one():
    ok, witness = IS.check_braided_opposite(1)
    assert ok, witness
