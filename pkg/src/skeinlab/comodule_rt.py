"""Finite-dimensional comodules and matrix evaluation of planar slice words.

A comodule is a coaction matrix with quantum-coordinate-algebra entries, in
the row convention coact(e_j) = sum_i e_i (x) matrix[i][j].  The standard
corepresentation V has matrix ((a, b), (c, d)); the degree-n part of the
quantum plane (yx = q^2 xy) gives the simple comodule of dimension n+1.

Slice words evaluate to matrices on tensor powers of V: the cap sends
(v+, v-) |-> -q^(5/2), (v-, v+) |-> q^(1/2) and kills equal states; the cup
produces q^(-1/2) (v+, v-) - q^(-5/2) (v-, v+); a crossing is q * id + q^-1 *
(cup o cap).  These fixed matrices make the closed-diagram value of a slice
word equal to its Kauffman bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import bigon_skein, quantum_sl2
from .diagram import SliceWord, State
from .quantum_sl2 import HopfElement, comul as hopf_comul, counit as hopf_counit, mul as hopf_mul
from .scalar import ONE, HalfLaurent

Matrix = list[list[HalfLaurent]]


class ComoduleError(ValueError):
    """Coaction matrix fails a comodule axiom."""


@dataclass(frozen=True)
class Comodule:
    """Right comodule given by its coaction matrix."""

    dim: int
    coaction: tuple[tuple[HopfElement, ...], ...]

    def __post_init__(self) -> None:
        if self.dim <= 0 or len(self.coaction) != self.dim or any(
            len(row) != self.dim for row in self.coaction
        ):
            raise ComoduleError("coaction must be a dim x dim matrix")

    def check_axioms(self) -> None:
        """Exact coassociativity and counit law for the coaction matrix."""
        for i in range(self.dim):
            for j in range(self.dim):
                eps = hopf_counit(self.coaction[i][j])
                want = ONE if i == j else HalfLaurent.zero()
                if eps != want:
                    raise ComoduleError(f"counit law fails at ({i},{j})")
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = hopf_comul(self.coaction[i][j])
                rhs = quantum_sl2.HopfTensor()
                for k in range(self.dim):
                    left = self.coaction[i][k]
                    right = self.coaction[k][j]
                    for m1, c1 in left.items():
                        for m2, c2 in right.items():
                            rhs = rhs + quantum_sl2.HopfTensor({(m1, m2): c1 * c2})
                if lhs != rhs:
                    raise ComoduleError(f"coassociativity fails at ({i},{j})")


def trivial() -> Comodule:
    return Comodule(1, ((HopfElement.one(),),))


def standard_V() -> Comodule:
    g = quantum_sl2.gen
    return Comodule(2, ((g("a"), g("b")), (g("c"), g("d"))))


def tensor(w1: Comodule, w2: Comodule) -> Comodule:
    rows: list[tuple[HopfElement, ...]] = []
    for i1 in range(w1.dim):
        for i2 in range(w2.dim):
            row = []
            for j1 in range(w1.dim):
                for j2 in range(w2.dim):
                    row.append(hopf_mul(w1.coaction[i1][j1], w2.coaction[i2][j2]))
            rows.append(tuple(row))
    return Comodule(w1.dim * w2.dim, tuple(rows))


def tensor_power_V(n: int) -> Comodule:
    out = trivial()
    v = standard_V()
    for _ in range(n):
        out = tensor(out, v)
    return out


class _QuantumPlaneTensor:
    """Elements of (quantum plane) (x) O, used to coact on plane monomials."""

    def __init__(self, terms: dict[tuple[int, int], HopfElement]):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def mul(self, other: _QuantumPlaneTensor) -> _QuantumPlaneTensor:
        out: dict[tuple[int, int], HopfElement] = {}
        for (p1, r1), h1 in self.terms.items():
            for (p2, r2), h2 in other.terms.items():
                # y^r1 x^p2 = q^(2 r1 p2) x^p2 y^r1
                coeff = HalfLaurent.q_pow(2 * r1 * p2)
                key = (p1 + p2, r1 + r2)
                add = hopf_mul(h1, h2).scale(coeff)
                acc = out.get(key)
                out[key] = add if acc is None else acc + add
        return _QuantumPlaneTensor(out)


def quantum_plane_Vn(n: int) -> Comodule:
    """Simple comodule on degree-n quantum plane monomials x^(n-i) y^i."""
    if n < 0:
        raise ComoduleError("n must be nonnegative")
    if n == 0:
        return trivial()
    g = quantum_sl2.gen
    coact_x = _QuantumPlaneTensor({(1, 0): g("a"), (0, 1): g("c")})
    coact_y = _QuantumPlaneTensor({(1, 0): g("b"), (0, 1): g("d")})
    rows = [[HopfElement.zero() for _ in range(n + 1)] for _ in range(n + 1)]
    for j in range(n + 1):
        acc = _QuantumPlaneTensor({(0, 0): HopfElement.one()})
        for _ in range(n - j):
            acc = acc.mul(coact_x)
        for _ in range(j):
            acc = acc.mul(coact_y)
        for (p, r), h in acc.terms.items():
            if p + r != n:
                raise ComoduleError("coaction did not preserve degree")
            rows[r][j] = rows[r][j] + h
    return Comodule(n + 1, tuple(tuple(row) for row in rows))


# -- state bases and slice-word evaluation --------------------------------------


def state_tuples(n: int) -> list[tuple[State, ...]]:
    out: list[tuple[State, ...]] = [()]
    for _ in range(n):
        out = [v + (s,) for v in out for s in (1, -1)]
    return out


def state_index(states: Sequence[State]) -> int:
    idx = 0
    for s in states:
        idx = (idx << 1) | (1 if s < 0 else 0)
    return idx


#: Cap matrix on (++, +-, -+, --) and cup column, fixed values.
CAP_VALUES = (
    HalfLaurent.zero(),
    HalfLaurent.s_pow(5, -1),
    HalfLaurent.s_pow(1),
    HalfLaurent.zero(),
)
CUP_VALUES = (
    HalfLaurent.zero(),
    HalfLaurent.s_pow(-1),
    HalfLaurent.s_pow(-5, -1),
    HalfLaurent.zero(),
)


def _zeros(rows: int, cols: int) -> Matrix:
    return [[HalfLaurent.zero() for _ in range(cols)] for _ in range(rows)]


def identity_matrix(n: int) -> Matrix:
    out = _zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = _zeros(rows, cols)
    for i in range(rows):
        for k in range(inner):
            if a[i][k].is_zero():
                continue
            aik = a[i][k]
            for j in range(cols):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def _cap_matrix(rows: int, i: int) -> Matrix:
    """Matrix of cap at row i: V^(x)rows -> V^(x)(rows-2)."""
    out = _zeros(1 << (rows - 2), 1 << rows)
    for states in state_tuples(rows):
        w = CAP_VALUES[state_index(states[i : i + 2])]
        if w.is_zero():
            continue
        tgt = states[:i] + states[i + 2 :]
        out[state_index(tgt)][state_index(states)] = (
            out[state_index(tgt)][state_index(states)] + w
        )
    return out


def _cup_matrix(rows: int, i: int) -> Matrix:
    """Matrix of cup at row i: V^(x)rows -> V^(x)(rows+2)."""
    out = _zeros(1 << (rows + 2), 1 << rows)
    for states in state_tuples(rows):
        for pair in state_tuples(2):
            w = CUP_VALUES[state_index(pair)]
            if w.is_zero():
                continue
            tgt = states[:i] + pair + states[i:]
            out[state_index(tgt)][state_index(states)] = (
                out[state_index(tgt)][state_index(states)] + w
            )
    return out


def _crossing_matrix(rows: int, i: int, over: bool) -> Matrix:
    para = HalfLaurent.q_pow(1) if over else HalfLaurent.q_pow(-1)
    turn = HalfLaurent.q_pow(-1) if over else HalfLaurent.q_pow(1)
    ident = identity_matrix(1 << rows)
    turnback = mat_mul(_cup_matrix(rows - 2, i), _cap_matrix(rows, i))
    out = _zeros(1 << rows, 1 << rows)
    for r in range(1 << rows):
        for c in range(1 << rows):
            out[r][c] = ident[r][c] * para + turnback[r][c] * turn
    return out


def rt_evaluate(word: SliceWord) -> Matrix:
    """Matrix of a slice word from V^(x)west to V^(x)east on state bases."""
    rows = word.west_arity
    mat = identity_matrix(1 << rows)
    for kind, i in word.slices:
        if kind == "cap":
            step = _cap_matrix(rows, i)
            rows -= 2
        elif kind == "cup":
            step = _cup_matrix(rows, i)
            rows += 2
        else:
            step = _crossing_matrix(rows, i, over=(kind == "x"))
        mat = mat_mul(step, mat)
    return mat


# -- structure transported through the skein algebra ----------------------------


def _t_of_hopf(h: HopfElement) -> HalfLaurent:
    return bigon_skein.t_form(quantum_sl2.to_skein(h))


def ht_matrix(w: Comodule) -> Matrix:
    """Half twist acting on a comodule: (id (x) t) o coaction."""
    return [[_t_of_hopf(w.coaction[i][j]) for j in range(w.dim)] for i in range(w.dim)]


def theta_matrix(w: Comodule) -> Matrix:
    theta = lambda h: bigon_skein.theta_form(quantum_sl2.to_skein(h))
    return [[theta(w.coaction[i][j]) for j in range(w.dim)] for i in range(w.dim)]


def braiding_matrix_VV() -> Matrix:
    """fl o R24 o (coaction (x) coaction) on V (x) V, from the co-R-matrix."""
    v = standard_V()
    out = _zeros(4, 4)
    for j1 in range(2):
        for j2 in range(2):
            for k in range(2):
                for l in range(2):
                    w = bigon_skein.r_form(
                        quantum_sl2.to_skein(v.coaction[k][j1]),
                        quantum_sl2.to_skein(v.coaction[l][j2]),
                    )
                    if not w.is_zero():
                        row = l * 2 + k  # flip of tensor factors
                        col = j1 * 2 + j2
                        out[row][col] = out[row][col] + w
    return out


def u_action(g: str, w: Comodule) -> Matrix:
    """Action matrix of an enveloping-algebra generator through the pairing."""
    return [
        [quantum_sl2.pairing([g], w.coaction[i][j]) for j in range(w.dim)]
        for i in range(w.dim)
    ]


def u_word_action(word: Sequence[str], w: Comodule) -> Matrix:
    mat = identity_matrix(w.dim)
    for g in word:
        mat = mat_mul(mat, u_action(g, w))
    return mat


def multiplicity(k: int, n: int) -> int:
    """Multiplicity of the simple of highest weight k inside V^(x)n."""
    if k < 0 or k > n or (n - k) % 2:
        return 0
    row = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for w, m in row.items():
            for w2 in (w - 1, w + 1):
                if w2 >= 0:
                    nxt[w2] = nxt.get(w2, 0) + m
        row = nxt
    return row.get(k, 0)


def intertwiner_dimension(
    w1: Comodule, w2: Comodule, s0: Fraction | None = None
) -> int:
    """dim Hom(w1, w2) as comodules; symbolic over Q(s) when s0 is None.

    A map f is an intertwiner iff for all j:
    sum_i f[i][j] . coact2(e_i) = sum_i (coact1[i][j] paired into slot 2) ...
    i.e. entrywise sum_k w2[i][k] f[k][j] = sum_k f[i][k] w1[k][j].
    """
    from . import linalg
    from .quantum_sl2 import pbw_monomials

    n_unknowns = w1.dim * w2.dim
    deg = 0
    for mat in (w1.coaction, w2.coaction):
        for row in mat:
            for h in row:
                deg = max(deg, h.max_degree())
    monos = pbw_monomials(deg)
    mono_index = {m: t for t, m in enumerate(monos)}

    rows_sym: list[dict[int, HalfLaurent]] = []
    for i in range(w2.dim):
        for j in range(w1.dim):
            per_mono: dict[int, dict[int, HalfLaurent]] = {}
            for k in range(w2.dim):
                h = w2.coaction[i][k]
                for m, c in h.items():
                    per_mono.setdefault(mono_index[m], {}).setdefault(
                        k * w1.dim + j, HalfLaurent.zero()
                    )
                    per_mono[mono_index[m]][k * w1.dim + j] = (
                        per_mono[mono_index[m]][k * w1.dim + j] + c
                    )
            for k in range(w1.dim):
                h = w1.coaction[k][j]
                for m, c in h.items():
                    per_mono.setdefault(mono_index[m], {}).setdefault(
                        i * w1.dim + k, HalfLaurent.zero()
                    )
                    per_mono[mono_index[m]][i * w1.dim + k] = (
                        per_mono[mono_index[m]][i * w1.dim + k] - c
                    )
            rows_sym.extend(per_mono.values())

    if s0 is not None:
        sparse = [
            {col: v.specialize(s0) for col, v in row.items() if not v.is_zero()}
            for row in rows_sym
        ]
        return len(linalg.kernel_basis(sparse, n_unknowns))
    dense = [
        [row.get(col, HalfLaurent.zero()) for col in range(n_unknowns)] for row in rows_sym
    ]
    return n_unknowns - linalg.rank_symbolic(dense)
