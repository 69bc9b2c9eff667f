from fractions import Fraction

from skeinlab import linalg
from skeinlab.scalar import HalfLaurent

F = Fraction


def test_rank_and_rref():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert linalg.rank(rows) == 2
    basis = linalg.row_space_basis(rows)
    assert len(basis) == 2
    assert basis[0][0] == 1


def test_kernel_incremental():
    # x + y + z = 0 and y - z = 0 -> kernel spanned by (-2, 1, 1)
    rows = [{0: F(1), 1: F(1), 2: F(1)}, {1: F(1), 2: F(-1)}]
    ker = linalg.kernel_basis(rows, 3)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] + v[1] + v[2] == 0 and v[1] == v[2]


def test_kernel_skips_dependent_rows():
    rows = [{0: F(1)}, {0: F(2)}, {0: F(3)}]
    assert len(linalg.kernel_basis(rows, 2)) == 1


def test_row_space_comparison():
    a = [[F(1), F(0)], [F(0), F(1)]]
    b = [[F(1), F(1)], [F(1), F(-1)]]
    assert linalg.same_row_space(a, b)
    assert linalg.row_space_contains(a, [F(3), F(-5)])
    assert not linalg.same_row_space(a, [[F(1), F(1)]])


def test_solve():
    rows = [[F(1), F(1)], [F(1), F(-1)], [F(2), F(0)]]
    sol = linalg.solve(rows, [F(3), F(1), F(4)])
    assert sol == [F(2), F(1)]
    assert linalg.solve(rows, [F(3), F(1), F(5)]) is None


def test_symbolic_rank():
    s = HalfLaurent.s_pow
    one = HalfLaurent.one()
    zero = HalfLaurent.zero()
    rows = [[one, s(1)], [s(1), s(2)]]  # second row = s * first
    assert linalg.rank_symbolic(rows) == 1
    rows = [[one, s(1)], [s(1), s(2) + one]]
    assert linalg.rank_symbolic(rows) == 2
    assert linalg.rank_symbolic([[zero, zero]]) == 0
