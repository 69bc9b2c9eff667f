"""Sliced tangle diagrams in the bigon and their reduction to the skein basis.

A diagram lives in a square: boundary points sit on the west (left) and east
(right) edges, numbered top to bottom, and the diagram is encoded as a
left-to-right word of elementary slices

    x i    -- the strand in row i crosses OVER row i+1
    xb i   -- the strand in row i crosses UNDER row i+1
    cap i  -- rows i and i+1 turn back and merge (row count drops by 2)
    cup i  -- two new rows are created at position i (row count grows by 2)

with blackboard framing implicit in the planar encoding.  Boundary points
carry states +/-.  Reduction applies the Kauffman relations

    crossing = q (parallel) + q^-1 (turnback),     loop = -q^2 - q^-2,

removes boundary arcs with the weights C (east edge) and Cbar (west edge),
and sorts boundary states with the exchange relations until only parallel
strands with decreasing states remain.  Those diagrams form a linear basis
of the stated skein algebra of the bigon.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from .scalar import LOOP, ONE, HalfLaurent

State = int  # +1 or -1
Slice = tuple[str, int]  # ("x" | "xb" | "cap" | "cup", row index)

_SLICE_KINDS = ("x", "xb", "cap", "cup")

#: Kauffman smoothing weights: an over-crossing resolves to
#: q * identity + q^-1 * (cap then cup); the under-crossing swaps them.
CROSS_PARALLEL = HalfLaurent.q_pow(1)
CROSS_TURNBACK = HalfLaurent.q_pow(-1)


class DiagramError(ValueError):
    """Malformed slice word or state vector."""


def _check_states(states: Iterable[State]) -> tuple[State, ...]:
    t = tuple(states)
    if any(s not in (1, -1) for s in t):
        raise DiagramError(f"states must be +1/-1, got {t}")
    return t


@dataclass(frozen=True)
class SliceWord:
    """An unstated sliced tangle diagram in the square."""

    west_arity: int
    slices: tuple[Slice, ...] = ()

    def __post_init__(self) -> None:
        if self.west_arity < 0:
            raise DiagramError("negative west arity")
        rows = self.west_arity
        for kind, i in self.slices:
            if kind not in _SLICE_KINDS:
                raise DiagramError(f"unknown slice kind {kind!r}")
            if kind == "cup":
                if not 0 <= i <= rows:
                    raise DiagramError(f"cup{i} out of range with {rows} rows")
                rows += 2
            else:
                if not 0 <= i <= rows - 2:
                    raise DiagramError(f"{kind}{i} needs rows i, i+1 (have {rows} rows)")
                if kind == "cap":
                    rows -= 2
        object.__setattr__(self, "_east", rows)

    @property
    def east_arity(self) -> int:
        return self._east  # type: ignore[attr-defined]

    def crossing_count(self) -> int:
        return sum(1 for kind, _ in self.slices if kind in ("x", "xb"))


@dataclass(frozen=True)
class StatedWord:
    """A sliced diagram with boundary states, top to bottom on each edge."""

    word: SliceWord
    west: tuple[State, ...] = ()
    east: tuple[State, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "west", _check_states(self.west))
        object.__setattr__(self, "east", _check_states(self.east))
        if len(self.west) != self.word.west_arity:
            raise DiagramError(
                f"west states {len(self.west)} != west arity {self.word.west_arity}"
            )
        if len(self.east) != self.word.east_arity:
            raise DiagramError(
                f"east states {len(self.east)} != east arity {self.word.east_arity}"
            )


def _is_decreasing(states: tuple[State, ...]) -> bool:
    return all(a >= b for a, b in zip(states, states[1:]))


@dataclass(frozen=True, order=True)
class BasisTangle:
    """Parallel n-strand diagram with decreasing states on both edges."""

    n: int
    mu: tuple[State, ...]  # west states, top to bottom
    nu: tuple[State, ...]  # east states, top to bottom

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", _check_states(self.mu))
        object.__setattr__(self, "nu", _check_states(self.nu))
        if len(self.mu) != self.n or len(self.nu) != self.n:
            raise DiagramError("state vectors must have length n")
        if not (_is_decreasing(self.mu) and _is_decreasing(self.nu)):
            raise DiagramError(f"basis tangle needs decreasing states: {self.mu}, {self.nu}")

    @classmethod
    def unit(cls) -> BasisTangle:
        return cls(0, (), ())

    def __str__(self) -> str:
        if self.n == 0:
            return "1"
        signs = lambda v: "".join("+" if s > 0 else "-" for s in v)
        return f"beta({signs(self.mu)};{signs(self.nu)})"


UNIT_TANGLE = BasisTangle.unit()


class SkeinElement:
    """Finite linear combination of basis tangles with HalfLaurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisTangle, HalfLaurent] | Iterable[tuple[BasisTangle, HalfLaurent]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[BasisTangle, HalfLaurent] = {}
        for b, c in items:
            if not c.is_zero():
                acc = canon.get(b)
                tot = c if acc is None else acc + c
                if tot.is_zero():
                    canon.pop(b, None)
                else:
                    canon[b] = tot
        self._terms = canon

    @classmethod
    def zero(cls) -> SkeinElement:
        return cls()

    @classmethod
    def of(cls, b: BasisTangle, coeff: HalfLaurent = ONE) -> SkeinElement:
        return cls({b: coeff})

    @classmethod
    def unit(cls) -> SkeinElement:
        return cls({UNIT_TANGLE: ONE})

    def items(self) -> Iterator[tuple[BasisTangle, HalfLaurent]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _tangle_sort_key(kv[0])))

    def coefficient(self, b: BasisTangle) -> HalfLaurent:
        return self._terms.get(b, HalfLaurent.zero())

    def support(self) -> list[BasisTangle]:
        return sorted(self._terms, key=_tangle_sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset((b, c) for b, c in self._terms.items()))

    def __add__(self, other: SkeinElement) -> SkeinElement:
        out = dict(self._terms)
        for b, c in other._terms.items():
            acc = out.get(b)
            tot = c if acc is None else acc + c
            if tot.is_zero():
                out.pop(b, None)
            else:
                out[b] = tot
        res = SkeinElement.__new__(SkeinElement)
        res._terms = out
        return res

    def __sub__(self, other: SkeinElement) -> SkeinElement:
        return self + other.scale(-ONE)

    def __neg__(self) -> SkeinElement:
        return self.scale(-ONE)

    def scale(self, coeff: HalfLaurent) -> SkeinElement:
        if coeff.is_zero():
            return SkeinElement.zero()
        res = SkeinElement.__new__(SkeinElement)
        res._terms = {b: c * coeff for b, c in self._terms.items()}
        return res

    def __mul__(self, coeff: HalfLaurent) -> SkeinElement:
        if isinstance(coeff, HalfLaurent):
            return self.scale(coeff)
        return NotImplemented

    def __rmul__(self, coeff: HalfLaurent) -> SkeinElement:
        if isinstance(coeff, HalfLaurent):
            return self.scale(coeff)
        return NotImplemented

    def __str__(self) -> str:
        from .syntax import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"SkeinElement({str(self)!r})"


def _tangle_sort_key(b: BasisTangle):
    # All-plus vectors sort first within a strand count.
    return (b.n, tuple((1 - s) // 2 for s in b.mu), tuple((1 - s) // 2 for s in b.nu))


# -- boundary coefficients ----------------------------------------------------


def _coeff_table(plus_minus: HalfLaurent, minus_plus: HalfLaurent) -> dict[tuple[State, State], HalfLaurent]:
    z = HalfLaurent.zero()
    return {(1, 1): z, (-1, -1): z, (1, -1): plus_minus, (-1, 1): minus_plus}


@dataclass(frozen=True)
class BoundaryCoefficients:
    """Arc weights and exchange-rule scalars for the two boundary edges.

    ``C[(upper, lower)]`` is the value of a returning arc on the east edge
    whose endpoints read (upper, lower) top to bottom; ``Cbar`` is the west
    edge version.  An out-of-order adjacent pair (- above +) on either edge
    rewrites to ``exchange_swap * (swapped states) + exchange_arc * (the two
    strands joined near that edge)``.
    """

    C: Mapping[tuple[State, State], HalfLaurent] = field(
        default_factory=lambda: _coeff_table(HalfLaurent.s_pow(-1), HalfLaurent.s_pow(-5, -1))
    )
    Cbar: Mapping[tuple[State, State], HalfLaurent] = field(
        default_factory=lambda: _coeff_table(HalfLaurent.s_pow(5, -1), HalfLaurent.s_pow(1))
    )
    east_exchange_swap: HalfLaurent = field(default_factory=lambda: HalfLaurent.q_pow(2))
    east_exchange_arc: HalfLaurent = field(default_factory=lambda: HalfLaurent.s_pow(-1))
    west_exchange_swap: HalfLaurent = field(default_factory=lambda: HalfLaurent.q_pow(2))
    west_exchange_arc: HalfLaurent = field(default_factory=lambda: HalfLaurent.s_pow(5, -1))

    def __post_init__(self) -> None:
        z = HalfLaurent.zero()
        if self.C[(1, 1)] != z or self.C[(-1, -1)] != z:
            raise DiagramError("equal-state east arcs must vanish")
        if self.Cbar[(1, 1)] != z or self.Cbar[(-1, -1)] != z:
            raise DiagramError("equal-state west arcs must vanish")
        if self.C[(1, -1)] != HalfLaurent.s_pow(-1) or self.C[(-1, 1)] != HalfLaurent.s_pow(-5, -1):
            raise DiagramError("east arc weights must be q^-1/2 and -q^-5/2")
        if self.Cbar[(1, -1)] != HalfLaurent.s_pow(5, -1) or self.Cbar[(-1, 1)] != HalfLaurent.s_pow(1):
            raise DiagramError("west arc weights must be -q^5/2 and q^1/2")

    def C_of(self, state: State) -> HalfLaurent:
        """C(state) = value of an east arc reading (-state, state) top to bottom."""
        return self.C[(-state, state)]


COEFFS = BoundaryCoefficients()


def arc_state_value(state: State) -> HalfLaurent:
    """C(state): C(+) = -q^(-5/2), C(-) = q^(-1/2)."""
    return COEFFS.C_of(state)


# -- crossing resolution ------------------------------------------------------


Endpoint = tuple[str, int]  # ("w" | "e", position)
Arcs = tuple[tuple[Endpoint, Endpoint], ...]


def _canon_arcs(pairs: Iterable[tuple[Endpoint, Endpoint]]) -> Arcs:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def word_to_arcs(word: SliceWord) -> tuple[Arcs, int]:
    """Trace a crossingless word to its boundary matching and loop count."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    fresh = iter(range(10**9)).__next__
    rows: list[int] = []
    for i in range(word.west_arity):
        t = fresh()
        parent[t] = t
        rows.append(t)
    west_token = list(rows)
    loops = 0
    for kind, i in word.slices:
        if kind in ("x", "xb"):
            raise DiagramError("word_to_arcs needs a crossingless word")
        if kind == "cup":
            a, b = fresh(), fresh()
            parent[a] = a
            parent[b] = b
            parent[find(b)] = find(a)
            rows[i:i] = [a, b]
        else:  # cap
            a, b = rows[i], rows[i + 1]
            ra, rb = find(a), find(b)
            if ra == rb:
                loops += 1
            else:
                parent[rb] = ra
            del rows[i : i + 2]
    east_token = rows
    # Group boundary points by component.
    groups: dict[int, list[Endpoint]] = {}
    for i, t in enumerate(west_token):
        groups.setdefault(find(t), []).append(("w", i))
    for j, t in enumerate(east_token):
        groups.setdefault(find(t), []).append(("e", j))
    pairs = []
    for pts in groups.values():
        if len(pts) != 2:
            raise DiagramError(f"component with {len(pts)} endpoints; tangle is not a 1-manifold")
        pairs.append((pts[0], pts[1]))
    return _canon_arcs(pairs), loops


def arcs_to_word(n_west: int, n_east: int, arcs: Arcs) -> SliceWord:
    """Canonical crossingless slice word realizing a planar boundary matching."""
    partner: dict[Endpoint, Endpoint] = {}
    for a, b in arcs:
        partner[a] = b
        partner[b] = a
    slices: list[Slice] = []
    live: list[Endpoint] = [("w", i) for i in range(n_west)]
    # Close west-west arcs innermost first: any adjacent matched pair caps off.
    closed = True
    while closed:
        closed = False
        for idx in range(len(live) - 1):
            if partner.get(live[idx]) == live[idx + 1]:
                slices.append(("cap", idx))
                del live[idx : idx + 2]
                closed = True
                break
    # Remaining live rows are through strands; their east targets increase.
    rows: list[int] = []
    for p in live:
        q = partner[p]
        if q[0] != "e":
            raise DiagramError("matching is not planar in the slice order")
        rows.append(q[1])
    # Create east-east arcs outermost first (sorted by upper endpoint).
    east_arcs = sorted(
        (min(a[1], b[1]), max(a[1], b[1])) for a, b in arcs if a[0] == "e" and b[0] == "e"
    )
    for lo, hi in east_arcs:
        idx = sum(1 for r in rows if r < lo)
        slices.append(("cup", idx))
        rows[idx:idx] = [lo, hi]
    if rows != sorted(rows) or rows != list(range(n_east)):
        raise DiagramError("matching is not planar in the slice order")
    return SliceWord(n_west, tuple(slices))


def resolve_crossings(word: SliceWord) -> list[tuple[SliceWord, HalfLaurent]]:
    """Expand all crossings and remove loops; returns canonical crossingless words.

    State-independent, so results are memoized per word; reducing one diagram
    under many state assignments resolves its crossings once.
    """
    with _memo_lock:
        hit = _resolve_memo.get(word)
    if hit is not None:
        return hit
    combos: dict[tuple[int, int, Arcs], HalfLaurent] = {}

    def expand(slices: list[Slice], coeff: HalfLaurent) -> None:
        for k, (kind, i) in enumerate(slices):
            if kind in ("x", "xb"):
                para, turn = (CROSS_PARALLEL, CROSS_TURNBACK) if kind == "x" else (
                    CROSS_TURNBACK,
                    CROSS_PARALLEL,
                )
                expand(slices[:k] + slices[k + 1 :], coeff * para)
                expand(slices[:k] + [("cap", i), ("cup", i)] + slices[k + 1 :], coeff * turn)
                return
        w = SliceWord(word.west_arity, tuple(slices))
        arcs, loops = word_to_arcs(w)
        total = coeff * LOOP**loops
        key = (word.west_arity, w.east_arity, arcs)
        acc = combos.get(key)
        combos[key] = total if acc is None else acc + total

    expand(list(word.slices), ONE)
    out = []
    for (n_w, n_e, arcs), coeff in sorted(combos.items()):
        if not coeff.is_zero():
            out.append((arcs_to_word(n_w, n_e, arcs), coeff))
    with _memo_lock:
        if len(_resolve_memo) < 65536:
            _resolve_memo[word] = out
    return out


# -- stated reduction ---------------------------------------------------------

_memo_lock = threading.Lock()
_memo: dict[str, SkeinElement] = {}
_resolve_memo: dict[SliceWord, list[tuple[SliceWord, HalfLaurent]]] = {}
_memo_listener: Callable[[str, SkeinElement], None] | None = None


def arcs_cache_key(n_west: int, n_east: int, arcs: Arcs, west: tuple[State, ...], east: tuple[State, ...]) -> str:
    sig = lambda v: "".join("+" if s > 0 else "-" for s in v)
    arcstr = ",".join(f"{a[0]}{a[1]}-{b[0]}{b[1]}" for a, b in arcs)
    return f"{n_west}:{n_east}:{arcstr}:W{sig(west)}:E{sig(east)}"


def memo_snapshot() -> dict[str, SkeinElement]:
    with _memo_lock:
        return dict(_memo)


def memo_clear() -> None:
    with _memo_lock:
        _memo.clear()


def memo_preload(entries: Mapping[str, SkeinElement]) -> None:
    with _memo_lock:
        _memo.update(entries)


def set_memo_listener(fn: Callable[[str, SkeinElement], None] | None) -> None:
    """Hook invoked under the memo lock on every fresh entry (cache persistence)."""
    global _memo_listener
    with _memo_lock:
        _memo_listener = fn


def evaluate_arcs(
    n_west: int,
    n_east: int,
    arcs: Arcs,
    west: tuple[State, ...],
    east: tuple[State, ...],
) -> SkeinElement:
    """Reduce a stated crossingless matching to the decreasing-state basis."""
    key = arcs_cache_key(n_west, n_east, arcs, west, east)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    result = _evaluate_arcs_uncached(n_west, n_east, arcs, west, east)
    with _memo_lock:
        _memo[key] = result
        if _memo_listener is not None:
            _memo_listener(key, result)
    return result


def _remove_edge_point(
    arcs: Arcs, side: str, removed: tuple[int, int]
) -> Arcs:
    """Reindex after deleting two adjacent positions on one edge."""
    lo = min(removed)

    def shift(p: Endpoint) -> Endpoint:
        if p[0] == side and p[1] > lo + 1:
            return (p[0], p[1] - 2)
        return p

    return _canon_arcs(
        (shift(a), shift(b)) for a, b in arcs if a not in
        {(side, removed[0]), (side, removed[1])} and b not in {(side, removed[0]), (side, removed[1])}
    )


def _evaluate_arcs_uncached(
    n_west: int,
    n_east: int,
    arcs: Arcs,
    west: tuple[State, ...],
    east: tuple[State, ...],
) -> SkeinElement:
    partner: dict[Endpoint, Endpoint] = {}
    for a, b in arcs:
        partner[a] = b
        partner[b] = a

    # Step 1: evaluate a returning arc with adjacent endpoints, east first.
    for side, count, states, table in (
        ("e", n_east, east, COEFFS.C),
        ("w", n_west, west, COEFFS.Cbar),
    ):
        for p in range(count - 1):
            if partner.get((side, p)) == (side, p + 1):
                weight = table[(states[p], states[p + 1])]
                if weight.is_zero():
                    return SkeinElement.zero()
                rest_arcs = _remove_edge_point(arcs, side, (p, p + 1))
                rest_states = states[:p] + states[p + 2 :]
                if side == "e":
                    sub = evaluate_arcs(n_west, n_east - 2, rest_arcs, west, rest_states)
                else:
                    sub = evaluate_arcs(n_west - 2, n_east, rest_arcs, rest_states, east)
                return sub.scale(weight)

    # No same-edge arcs remain: all strands run west to east in parallel.
    if n_west != n_east:
        raise DiagramError("non-planar matching survived arc removal")
    n = n_west

    # Step 2: sort east states, then west states, with the exchange relations.
    for i in range(n - 1):
        if east[i] == -1 and east[i + 1] == 1:
            swapped = east[:i] + (1, -1) + east[i + 2 :]
            term1 = evaluate_arcs(n_west, n_east, arcs, west, swapped).scale(
                COEFFS.east_exchange_swap
            )
            # Joining the two strands near the east edge leaves a west arc.
            joined = _canon_arcs(
                [(("w", i), ("w", i + 1))]
                + [
                    (("w", j), ("e", j if j < i else j - 2))
                    for j in range(n)
                    if j not in (i, i + 1)
                ]
            )
            term2 = evaluate_arcs(n_west, n_east - 2, joined, west, east[:i] + east[i + 2 :]).scale(
                COEFFS.east_exchange_arc
            )
            return term1 + term2
    for i in range(n - 1):
        if west[i] == -1 and west[i + 1] == 1:
            swapped = west[:i] + (1, -1) + west[i + 2 :]
            term1 = evaluate_arcs(n_west, n_east, arcs, swapped, east).scale(
                COEFFS.west_exchange_swap
            )
            joined = _canon_arcs(
                [(("e", i), ("e", i + 1))]
                + [
                    (("w", j if j < i else j - 2), ("e", j))
                    for j in range(n)
                    if j not in (i, i + 1)
                ]
            )
            term2 = evaluate_arcs(n_west - 2, n_east, joined, west[:i] + west[i + 2 :], east).scale(
                COEFFS.west_exchange_arc
            )
            return term1 + term2

    return SkeinElement.of(BasisTangle(n, west, east))


def parallel_arcs(n: int) -> Arcs:
    return _canon_arcs((("w", i), ("e", i)) for i in range(n))


def reduce_parallel(west: tuple[State, ...], east: tuple[State, ...]) -> SkeinElement:
    """Reduce a parallel stated diagram (the workhorse for products)."""
    n = len(west)
    if len(east) != n:
        raise DiagramError("parallel diagram needs equal arities")
    return evaluate_arcs(n, n, parallel_arcs(n), west, east)


def reduce(diagram: StatedWord) -> SkeinElement:
    """Canonical basis expansion of a stated sliced diagram."""
    out = SkeinElement.zero()
    for word, coeff in resolve_crossings(diagram.word):
        arcs, loops = word_to_arcs(word)
        part = evaluate_arcs(
            word.west_arity, word.east_arity, arcs, diagram.west, diagram.east
        )
        out = out + part.scale(coeff * LOOP**loops)
    return out


def parse_diagram(text: str) -> StatedWord:
    from .syntax import parse_diagram as _parse

    return _parse(text)


def format_diagram(diagram: StatedWord) -> str:
    from .syntax import format_diagram as _format

    return _format(diagram)
