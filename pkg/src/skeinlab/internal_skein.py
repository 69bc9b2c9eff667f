"""Planar matchings in the bigon and the state-assignment correspondence.

Morphism spaces of the Temperley-Lieb category sitting in the bigon are
spanned by planar perfect matchings of the boundary points (west points read
top to bottom, then east points back up, so planarity is the usual
non-crossing condition on a circle).  Assigning all possible boundary states
to a matching and reducing yields a table, i.e. a linear map from a tensor
power of the standard corepresentation into the bigon skein algebra.  The
checks in this module make that correspondence executable:

* each table is a two-sided comodule morphism (edge-wise lift identities),
* composing with caps and cups commutes with the corresponding fixed
  matrices (naturality), where each edge carries its own cap/cup weights,
* the tables of distinct matchings stay linearly independent, with rank
  equal to both the Catalan number and the Peter-Weyl count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import bigon_skein, comodule_rt, linalg, quantum_sl2
from .diagram import (
    Arcs,
    BasisTangle,
    Endpoint,
    SkeinElement,
    State,
    _canon_arcs,
    arcs_to_word,
    evaluate_arcs,
)
from .scalar import LOOP, HalfLaurent

StateVec = tuple[State, ...]


class MatchingError(ValueError):
    """Non-planar or arity-inconsistent matching data."""


@dataclass(frozen=True)
class Matching:
    """Planar perfect matching of bigon boundary points."""

    n_west: int
    n_east: int
    pairs: Arcs

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", _canon_arcs(self.pairs))
        total = self.n_west + self.n_east
        if total % 2:
            raise MatchingError("odd number of boundary points")
        seen: set[Endpoint] = set()
        for a, b in self.pairs:
            seen.update((a, b))
        expected = {("w", i) for i in range(self.n_west)} | {("e", j) for j in range(self.n_east)}
        if seen != expected or 2 * len(self.pairs) != total:
            raise MatchingError("pairs must match every boundary point exactly once")
        if not self._is_planar():
            raise MatchingError("matching is not planar")

    def _circular(self, p: Endpoint) -> int:
        # West points top to bottom, then east points bottom to top.
        return p[1] if p[0] == "w" else self.n_west + (self.n_east - 1 - p[1])

    def _is_planar(self) -> bool:
        total = self.n_west + self.n_east
        partner = [-1] * total
        for a, b in self.pairs:
            ca, cb = self._circular(a), self._circular(b)
            partner[ca], partner[cb] = cb, ca
        stack: list[int] = []
        for i in range(total):
            if partner[i] > i:
                stack.append(partner[i])
            else:
                if not stack or stack.pop() != i:
                    return False
        return not stack

    def __str__(self) -> str:
        body = ",".join(f"{a[0]}{a[1]}-{b[0]}{b[1]}" for a, b in self.pairs)
        return f"matching({self.n_west},{self.n_east}:{body})"


def identity_matching(n: int) -> Matching:
    return Matching(n, n, tuple((("w", i), ("e", i)) for i in range(n)))


def enumerate_matchings(n_west: int, n_east: int) -> list[Matching]:
    """All planar matchings; the count is the Catalan number of half the points."""
    total = n_west + n_east
    if total % 2:
        raise MatchingError("odd number of boundary points")

    def points(lo: int, hi: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if lo > hi:
            yield ()
            return
        for j in range(lo + 1, hi + 1, 2):
            for inner in points(lo + 1, j - 1):
                for outer in points(j + 1, hi):
                    yield ((lo, j),) + inner + outer

    def from_circular(i: int) -> Endpoint:
        if i < n_west:
            return ("w", i)
        return ("e", n_east - 1 - (i - n_west))

    out = []
    for circ_pairs in points(0, total - 1):
        pairs = tuple((from_circular(a), from_circular(b)) for a, b in circ_pairs)
        out.append(Matching(n_west, n_east, pairs))
    return out


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


# -- the state-assignment table -------------------------------------------------


StTable = dict[tuple[StateVec, StateVec], SkeinElement]


def st_map(m: Matching) -> StTable:
    """Assign every boundary state vector and reduce; the matrix of the map
    V^(x)n_west (x) V^(x)n_east -> bigon skein algebra."""
    table: StTable = {}
    for west in comodule_rt.state_tuples(m.n_west):
        for east in comodule_rt.state_tuples(m.n_east):
            table[(west, east)] = evaluate_arcs(m.n_west, m.n_east, m.pairs, west, east)
    return table


def matching_word(m: Matching):
    """Canonical crossingless slice word realizing the matching."""
    return arcs_to_word(m.n_west, m.n_east, m.pairs)


# -- comodule-morphism (intertwiner) check ---------------------------------------


def check_st_intertwiner(m: Matching) -> tuple[bool, str | None]:
    """Edge-wise lift identities for the table of a matching.

    East: comul(T(eps, eta)) = sum_kappa T(eps, kappa) (x) X[kappa, eta],
    West: comul(T(eps, eta)) = sum_kappa X[eps, kappa] (x) T(kappa, eta),
    where X is the coaction matrix of the tensor power of V transported into
    the bigon algebra.
    """
    table = st_map(m)
    east_co = comodule_rt.tensor_power_V(m.n_east)
    west_co = comodule_rt.tensor_power_V(m.n_west)
    east_sk = _transported_coaction(east_co)
    west_sk = _transported_coaction(west_co)
    e_states = comodule_rt.state_tuples(m.n_east)
    w_states = comodule_rt.state_tuples(m.n_west)
    for (west, east), elem in table.items():
        got = bigon_skein.comul(elem)
        want_e = bigon_skein.TensorElement.zero(2)
        ei = comodule_rt.state_index(east)
        for kappa in e_states:
            ki = comodule_rt.state_index(kappa)
            x = east_sk[ki][ei]
            if x.is_zero():
                continue
            want_e = want_e + bigon_skein.tensor2(table[(west, kappa)], x)
        if got != want_e:
            return False, f"east lift fails at {m} states {west}/{east}"
        want_w = bigon_skein.TensorElement.zero(2)
        wi = comodule_rt.state_index(west)
        for kappa in w_states:
            ki = comodule_rt.state_index(kappa)
            x = west_sk[wi][ki]
            if x.is_zero():
                continue
            want_w = want_w + bigon_skein.tensor2(x, table[(kappa, east)])
        if got != want_w:
            return False, f"west lift fails at {m} states {west}/{east}"
    return True, None


_coaction_cache: dict[int, list[list[SkeinElement]]] = {}


def _transported_coaction(co: comodule_rt.Comodule) -> list[list[SkeinElement]]:
    key = co.dim
    hit = _coaction_cache.get(key)
    if hit is not None:
        return hit
    out = [
        [quantum_sl2.to_skein(co.coaction[i][j]) for j in range(co.dim)]
        for i in range(co.dim)
    ]
    _coaction_cache[key] = out
    return out


# -- cap/cup naturality -----------------------------------------------------------

#: Cap weights per edge on (++, +-, -+, --); cup weights likewise.  The west
#: edge carries the duality-map values, the east edge the returning-arc
#: values; either pair composes to the loop value.
WEST_CAP = comodule_rt.CAP_VALUES
WEST_CUP = comodule_rt.CUP_VALUES
EAST_CAP = (
    HalfLaurent.zero(),
    HalfLaurent.s_pow(-1),
    HalfLaurent.s_pow(-5, -1),
    HalfLaurent.zero(),
)
EAST_CUP = (
    HalfLaurent.zero(),
    HalfLaurent.s_pow(5, -1),
    HalfLaurent.s_pow(1),
    HalfLaurent.zero(),
)


def _shift_endpoint(p: Endpoint, side: str, at: int, by: int) -> Endpoint:
    if p[0] == side and p[1] >= at:
        return (p[0], p[1] + by)
    return p


def insert_cap(m: Matching, side: str, pos: int) -> Matching:
    """New matching with a returning arc occupying positions pos, pos+1."""
    n = m.n_west if side == "w" else m.n_east
    if not 0 <= pos <= n:
        raise MatchingError(f"cap position {pos} out of range")
    shifted = tuple(
        (_shift_endpoint(a, side, pos, 2), _shift_endpoint(b, side, pos, 2))
        for a, b in m.pairs
    )
    pairs = shifted + (((side, pos), (side, pos + 1)),)
    if side == "w":
        return Matching(m.n_west + 2, m.n_east, pairs)
    return Matching(m.n_west, m.n_east + 2, pairs)


def insert_cup(m: Matching, side: str, pos: int) -> tuple[Matching, int]:
    """Join boundary points pos, pos+1 on one edge; returns (matching, loops)."""
    n = m.n_west if side == "w" else m.n_east
    if not 0 <= pos <= n - 2:
        raise MatchingError(f"cup position {pos} out of range")
    partner: dict[Endpoint, Endpoint] = {}
    for a, b in m.pairs:
        partner[a] = b
        partner[b] = a
    p1, p2 = (side, pos), (side, pos + 1)
    loops = 0
    new_pairs: list[tuple[Endpoint, Endpoint]]
    if partner[p1] == p2:
        loops = 1
        new_pairs = [(a, b) for a, b in m.pairs if a != p1 and b != p1]
    else:
        q1, q2 = partner[p1], partner[p2]
        new_pairs = [
            (a, b) for a, b in m.pairs if p1 not in (a, b) and p2 not in (a, b)
        ]
        new_pairs.append((q1, q2))

    def unshift(p: Endpoint) -> Endpoint:
        if p[0] == side and p[1] > pos + 1:
            return (p[0], p[1] - 2)
        return p

    out_pairs = tuple((unshift(a), unshift(b)) for a, b in new_pairs)
    if side == "w":
        return Matching(m.n_west - 2, m.n_east, out_pairs), loops
    return Matching(m.n_west, m.n_east - 2, out_pairs), loops


def check_st_naturality(
    m: Matching, kind: str, side: str, pos: int
) -> tuple[bool, str | None]:
    """Compare the table of a composed matching against matrix composition.

    kind "cap": the composite has a new returning arc; its table must factor
    as (cap weight) x (table of m).  kind "cup": the composite joins two of
    m's points; its table must be the cup-weighted sum over inserted states.
    """
    cap_w = {"w": WEST_CAP, "e": EAST_CAP}[side]
    cup_w = {"w": WEST_CUP, "e": EAST_CUP}[side]
    table = st_map(m)
    if kind == "cap":
        comp = insert_cap(m, side, pos)
        comp_table = st_map(comp)
        for (west, east), val in comp_table.items():
            full = west if side == "w" else east
            pair = full[pos : pos + 2]
            rest = full[:pos] + full[pos + 2 :]
            key = (rest, east) if side == "w" else (west, rest)
            want = table[key].scale(cap_w[comodule_rt.state_index(pair)])
            if val != want:
                return False, f"cap naturality fails at {m} {side}{pos} states {west}/{east}"
        return True, None
    if kind == "cup":
        comp, loops = insert_cup(m, side, pos)
        comp_table = st_map(comp)
        factor = LOOP**loops
        for (west, east), val in comp_table.items():
            want = SkeinElement.zero()
            for pair in comodule_rt.state_tuples(2):
                w = cup_w[comodule_rt.state_index(pair)]
                if w.is_zero():
                    continue
                if side == "w":
                    key = (west[:pos] + pair + west[pos:], east)
                else:
                    key = (west, east[:pos] + pair + east[pos:])
                want = want + table[key].scale(w)
            if val.scale(factor) != want:
                return False, f"cup naturality fails at {m} {side}{pos} states {west}/{east}"
        return True, None
    raise ValueError("kind must be 'cap' or 'cup'")


def all_naturality_checks(m: Matching) -> Iterator[tuple[str, str, int]]:
    for pos in range(m.n_west + 1):
        yield ("cap", "w", pos)
    for pos in range(m.n_east + 1):
        yield ("cap", "e", pos)
    for pos in range(m.n_west - 1):
        yield ("cup", "w", pos)
    for pos in range(m.n_east - 1):
        yield ("cup", "e", pos)


# -- rank of the span of tables ----------------------------------------------------


def peter_weyl_count(n_west: int, n_east: int) -> int:
    return sum(
        comodule_rt.multiplicity(k, n_west) * comodule_rt.multiplicity(k, n_east)
        for k in range(min(n_west, n_east) + 1)
    )


def st_rank(n_west: int, n_east: int, s0: Fraction) -> tuple[int, int, int]:
    """(rank of stacked tables at s0, Catalan count, Peter-Weyl count)."""
    from .scalar import validate_generic_point

    s0 = validate_generic_point(s0)
    matchings = enumerate_matchings(n_west, n_east)
    columns: dict[tuple[StateVec, StateVec, BasisTangle], int] = {}
    rows: list[dict[int, Fraction]] = []
    for m in matchings:
        row: dict[int, Fraction] = {}
        for key, elem in st_map(m).items():
            for b, coeff in elem.items():
                col = columns.setdefault((key[0], key[1], b), len(columns))
                row[col] = coeff.specialize(s0)
        rows.append(row)
    dense = [[row.get(j, Fraction(0)) for j in range(len(columns))] for row in rows]
    return linalg.rank(dense), catalan((n_west + n_east) // 2), peter_weyl_count(n_west, n_east)


def check_product_compatibility(m1: Matching, m2: Matching) -> tuple[bool, str | None]:
    """Side-by-side composite of matchings maps to the product of tables."""
    stacked = Matching(
        m1.n_west + m2.n_west,
        m1.n_east + m2.n_east,
        tuple(
            ((a[0], a[1]), (b[0], b[1]))
            for a, b in m1.pairs
        )
        + tuple(
            (
                (a[0], a[1] + (m1.n_west if a[0] == "w" else m1.n_east)),
                (b[0], b[1] + (m1.n_west if b[0] == "w" else m1.n_east)),
            )
            for a, b in m2.pairs
        ),
    )
    t1, t2, ts = st_map(m1), st_map(m2), st_map(stacked)
    for (w1, e1), v1 in t1.items():
        for (w2, e2), v2 in t2.items():
            got = ts[(w1 + w2, e1 + e2)]
            want = bigon_skein.mul(v1, v2)
            if got != want:
                return False, f"product compatibility fails at {m1} x {m2}"
    return True, None


def check_braided_opposite(degree_bound: int) -> tuple[bool, str | None]:
    """Algebraic braided-opposite product against the crossed-stacking picture."""
    for bx in bigon_skein.basis_tangles(degree_bound):
        for by in bigon_skein.basis_tangles(degree_bound):
            x, y = SkeinElement.of(bx), SkeinElement.of(by)
            alg = bigon_skein.braided_opposite_mul(x, y)
            dia = bigon_skein.braided_opposite_mul_diagrammatic(x, y)
            if alg != dia:
                return False, f"braided opposite mismatch at {bx}, {by}"
    return True, None
