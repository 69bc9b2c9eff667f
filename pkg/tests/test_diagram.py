import random

import pytest

from skeinlab.diagram import (
    UNIT_TANGLE,
    BasisTangle,
    DiagramError,
    SkeinElement,
    SliceWord,
    StatedWord,
    reduce,
    reduce_parallel,
    resolve_crossings,
)
from skeinlab.oracle import oracle_reduce
from skeinlab.scalar import LOOP, HalfLaurent
from skeinlab.syntax import ParseError, format_diagram, parse_diagram


def unit_times(coeff):
    return SkeinElement.of(UNIT_TANGLE, coeff)


def test_no_crossings_is_identity_combination():
    w = SliceWord(2, (("cap", 0), ("cup", 0)))
    [(word, coeff)] = resolve_crossings(w)
    assert coeff == HalfLaurent.one()
    assert word.west_arity == 2 and word.east_arity == 2


def test_closed_loop_gives_loop_value():
    w = SliceWord(0, (("cup", 0), ("cap", 0)))
    [(word, coeff)] = resolve_crossings(w)
    assert word == SliceWord(0, ())
    assert coeff == LOOP


def test_reidemeister_ii_cancels_turnbacks():
    w = SliceWord(2, (("x", 0), ("xb", 0)))
    [(word, coeff)] = resolve_crossings(w)
    assert word.slices == ()
    assert coeff == HalfLaurent.one()


def test_reduce_empty_diagram():
    assert reduce(StatedWord(SliceWord(0, ()), (), ())) == SkeinElement.unit()


def test_reduce_east_arcs():
    arc = lambda st: StatedWord(SliceWord(0, (("cup", 0),)), (), st)
    assert reduce(arc((1, -1))) == unit_times(HalfLaurent.s_pow(-1))
    assert reduce(arc((-1, 1))) == unit_times(HalfLaurent.s_pow(-5, -1))
    assert reduce(arc((1, 1))).is_zero()
    assert reduce(arc((-1, -1))).is_zero()


def test_reduce_exchange_example():
    # Two parallel strands, west (+,-), east (-,+): one east exchange then
    # a west arc evaluation.
    got = reduce(StatedWord(SliceWord(2, ()), (1, -1), (-1, 1)))
    want = SkeinElement(
        {
            BasisTangle(2, (1, -1), (1, -1)): HalfLaurent.q_pow(2),
            UNIT_TANGLE: HalfLaurent.q_pow(2, -1),
        }
    )
    assert got == want


def test_reduce_idempotent_on_basis():
    for b in (
        BasisTangle(0, (), ()),
        BasisTangle(1, (1,), (-1,)),
        BasisTangle(3, (1, 1, -1), (1, -1, -1)),
    ):
        assert reduce_parallel(b.mu, b.nu) == SkeinElement.of(b)


def test_zigzag_insertion_is_isotopy():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.choice((1, 2, 3))
        west = tuple(rng.choice((1, -1)) for _ in range(n))
        east = tuple(rng.choice((1, -1)) for _ in range(n))
        base = StatedWord(SliceWord(n, ()), west, east)
        row = rng.randrange(n)
        zig = StatedWord(
            SliceWord(n, (("cup", row), ("cap", row + 1))), west, east
        )
        assert reduce(zig) == reduce(base)
        zag = StatedWord(
            SliceWord(n, (("cup", row + 1), ("cap", row))), west, east
        )
        assert reduce(zag) == reduce(base)


def test_zigzag_insertion_in_random_words():
    from skeinlab.suites import random_stated_word

    rng = random.Random(1312)
    checked = 0
    while checked < 40:
        d = random_stated_word(rng, max_crossings=2, max_points=6)
        slices = list(d.word.slices)
        pos = rng.randrange(len(slices) + 1)
        # Row count at the insertion point.
        rows = d.word.west_arity
        for kind, i in slices[:pos]:
            rows += 2 if kind == "cup" else -2 if kind == "cap" else 0
        if rows == 0:
            continue
        row = rng.randrange(rows)
        for pair in ((("cup", row), ("cap", row + 1)), (("cup", row + 1), ("cap", row))):
            zigged = SliceWord(d.word.west_arity, tuple(slices[:pos] + list(pair) + slices[pos:]))
            assert reduce(StatedWord(zigged, d.west, d.east)) == reduce(d)
        checked += 1


def test_kink_factors():
    base = StatedWord(SliceWord(1, ()), (1,), (1,))
    pos = StatedWord(SliceWord(1, (("cup", 1), ("x", 0), ("cap", 1))), (1,), (1,))
    neg = StatedWord(SliceWord(1, (("cup", 1), ("xb", 0), ("cap", 1))), (1,), (1,))
    assert reduce(pos) == reduce(base).scale(HalfLaurent.q_pow(3, -1))
    assert reduce(neg) == reduce(base).scale(HalfLaurent.q_pow(-3, -1))


def test_plat_closure_brackets():
    # Plat closures of 2-bridge braids, checked against hand computation in
    # the 2-strand diagram algebra: sigma = A 1 + A^-1 e with e^2 = delta e
    # (A = q), so sigma^2 = A^2 1 + (1 - A^-4) e and sigma^3 = A^3 1 +
    # (A - A^-3 + A^-7) e; closing sends 1 to delta^2 and e to delta.
    def plat(k, kind="x"):
        slices = [("cup", 0), ("cup", 2)] + [(kind, 1)] * k + [("cap", 0), ("cap", 0)]
        return reduce(StatedWord(SliceWord(0, tuple(slices)), (), ())).coefficient(
            UNIT_TANGLE
        )

    A = HalfLaurent.q_pow
    assert plat(0) == A(2) * A(2) + HalfLaurent.rational(2) + A(-2) * A(-2)
    assert plat(1) == A(5) + A(1)  # unknot with one positive kink
    assert plat(2) == A(6) + A(2) + A(-2) + A(-6)  # linked pair
    assert plat(3) == HalfLaurent({14: 1, 6: 1, -2: 1, -18: -1})
    # The mirror braid inverts s.
    mirror = plat(3, "xb")
    assert mirror == HalfLaurent({-e: c for e, c in plat(3).terms.items()})


def test_oracle_agreement_sample():
    from skeinlab.suites import random_stated_word

    rng = random.Random(2024)
    for _ in range(60):
        d = random_stated_word(rng)
        assert reduce(d) == oracle_reduce(d)


def test_concurrent_reduction_is_deterministic():
    # Reductions of independent diagrams may run concurrently; the memo
    # takes a lock, so concurrent evaluation must agree with sequential.
    from concurrent.futures import ThreadPoolExecutor

    from skeinlab.diagram import memo_clear
    from skeinlab.suites import random_stated_word

    rng = random.Random(55)
    diagrams = [random_stated_word(rng) for _ in range(120)]
    memo_clear()
    sequential = [reduce(d) for d in diagrams]
    memo_clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        concurrent = list(pool.map(reduce, diagrams))
    assert concurrent == sequential
    memo_clear()


def test_validation_errors():
    with pytest.raises(DiagramError):
        SliceWord(1, (("cap", 0),))
    with pytest.raises(DiagramError):
        SliceWord(2, (("x", 1),))
    with pytest.raises(DiagramError):
        StatedWord(SliceWord(2, ()), (1,), (1, 1))
    with pytest.raises(DiagramError):
        BasisTangle(2, (-1, 1), (1, 1))


def test_parse_and_format():
    d = parse_diagram("tangle(2){x0} west=+- east=+-")
    assert d.word.slices == (("x", 0),)
    assert d.west == (1, -1) and d.east == (1, -1)
    assert parse_diagram(format_diagram(d)) == d

    closed = parse_diagram("tangle(0){cup0;cap0}")
    assert closed.word.east_arity == 0
    assert parse_diagram(format_diagram(closed)) == closed

    with pytest.raises(ParseError):
        parse_diagram("tangle(1){cap0}")
    with pytest.raises(ParseError):
        parse_diagram("tangle(2){zap0}")
