"""Naive reference evaluator for stated diagrams.

Deliberately independent of the production reduction engine: smoothings are
enumerated one crossing at a time into explicit slice lists, components are
traced through a port graph by depth-first search, and the boundary relations
are applied recursively in one fixed scan order with no memoization and no
canonical forms.  The constants are written out literally.  Agreement with
``diagram.reduce`` on random diagrams is a standing acceptance check.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import BasisTangle, SkeinElement, StatedWord
from .scalar import HalfLaurent

_Q = HalfLaurent({2: Fraction(1)})
_QINV = HalfLaurent({-2: Fraction(1)})
_LOOP = HalfLaurent({4: Fraction(-1), -4: Fraction(-1)})

_EAST_ARC = {
    (1, 1): HalfLaurent(),
    (-1, -1): HalfLaurent(),
    (1, -1): HalfLaurent({-1: Fraction(1)}),
    (-1, 1): HalfLaurent({-5: Fraction(-1)}),
}
_WEST_ARC = {
    (1, 1): HalfLaurent(),
    (-1, -1): HalfLaurent(),
    (1, -1): HalfLaurent({5: Fraction(-1)}),
    (-1, 1): HalfLaurent({1: Fraction(1)}),
}
_EAST_SWAP = HalfLaurent({4: Fraction(1)})
_EAST_JOIN = HalfLaurent({-1: Fraction(1)})
_WEST_SWAP = HalfLaurent({4: Fraction(1)})
_WEST_JOIN = HalfLaurent({5: Fraction(-1)})


def _smoothings(slices: list[tuple[str, int]]) -> list[tuple[list[tuple[str, int]], HalfLaurent]]:
    for k, (kind, i) in enumerate(slices):
        if kind in ("x", "xb"):
            out = []
            first = _Q if kind == "x" else _QINV
            second = _QINV if kind == "x" else _Q
            for rest, coeff in _smoothings(slices[:k] + slices[k + 1 :]):
                out.append((rest, coeff * first))
            turn = slices[:k] + [("cap", i), ("cup", i)] + slices[k + 1 :]
            for rest, coeff in _smoothings(turn):
                out.append((rest, coeff * second))
            return out
    return [(list(slices), HalfLaurent({0: Fraction(1)}))]


def _trace(west_arity: int, slices: list[tuple[str, int]]):
    """Component structure of a crossingless word via an explicit port graph."""
    edges: list[tuple[object, object]] = []
    rows = [("w", i) for i in range(west_arity)]
    fresh = 0
    for kind, i in slices:
        if kind == "cup":
            a, b = ("n", fresh), ("n", fresh + 1)
            fresh += 2
            edges.append((a, b))
            rows[i:i] = [a, b]
        elif kind == "cap":
            edges.append((rows[i], rows[i + 1]))
            del rows[i : i + 2]
        else:
            raise ValueError("crossing left in smoothing")
    for j, node in enumerate(rows):
        edges.append((node, ("e", j)))

    adj: dict[object, list[object]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: set[object] = set()
    arcs: list[tuple[object, object]] = []
    loops = 0
    for start in adj:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            node = stack.pop()
            comp.append(node)
            for nxt in adj[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        boundary = [n for n in comp if n[0] in ("w", "e")]
        if not boundary:
            loops += 1
        elif len(boundary) == 2:
            arcs.append((boundary[0], boundary[1]))
        else:
            raise ValueError("component with more than two endpoints")
    return arcs, loops


def _evaluate(arcs, west: list[int], east: list[int]) -> SkeinElement:
    """Fixed-order recursive application of the boundary relations."""
    partner = {}
    for a, b in arcs:
        partner[a] = b
        partner[b] = a
    n_w, n_e = len(west), len(east)

    def drop(side: str, p: int):
        def fix(node):
            if node[0] == side and node[1] > p + 1:
                return (side, node[1] - 2)
            return node

        return [
            (fix(a), fix(b))
            for a, b in arcs
            if a not in ((side, p), (side, p + 1)) and b not in ((side, p), (side, p + 1))
        ]

    # Rule 1: east returning arcs, topmost adjacent first.
    for p in range(n_e - 1):
        if partner.get(("e", p)) == ("e", p + 1):
            w = _EAST_ARC[(east[p], east[p + 1])]
            if w.is_zero():
                return SkeinElement.zero()
            return _evaluate(drop("e", p), west, east[:p] + east[p + 2 :]).scale(w)
    # Rule 2: west returning arcs.
    for p in range(n_w - 1):
        if partner.get(("w", p)) == ("w", p + 1):
            w = _WEST_ARC[(west[p], west[p + 1])]
            if w.is_zero():
                return SkeinElement.zero()
            return _evaluate(drop("w", p), west[:p] + west[p + 2 :], east).scale(w)
    # Rule 3: east exchanges, topmost bad pair.
    for p in range(n_e - 1):
        if east[p] == -1 and east[p + 1] == 1:
            swapped = east[:p] + [1, -1] + east[p + 2 :]
            t1 = _evaluate(arcs, west, swapped).scale(_EAST_SWAP)
            q1, q2 = partner[("e", p)], partner[("e", p + 1)]
            joined = [
                (a, b)
                for a, b in arcs
                if ("e", p) not in (a, b) and ("e", p + 1) not in (a, b)
            ] + [(q1, q2)]

            def fix(node):
                if node[0] == "e" and node[1] > p + 1:
                    return ("e", node[1] - 2)
                return node

            joined = [(fix(a), fix(b)) for a, b in joined]
            t2 = _evaluate(joined, west, east[:p] + east[p + 2 :]).scale(_EAST_JOIN)
            return t1 + t2
    # Rule 4: west exchanges.
    for p in range(n_w - 1):
        if west[p] == -1 and west[p + 1] == 1:
            swapped = west[:p] + [1, -1] + west[p + 2 :]
            t1 = _evaluate(arcs, swapped, east).scale(_WEST_SWAP)
            q1, q2 = partner[("w", p)], partner[("w", p + 1)]
            joined = [
                (a, b)
                for a, b in arcs
                if ("w", p) not in (a, b) and ("w", p + 1) not in (a, b)
            ] + [(q1, q2)]

            def fix(node):
                if node[0] == "w" and node[1] > p + 1:
                    return ("w", node[1] - 2)
                return node

            joined = [(fix(a), fix(b)) for a, b in joined]
            t2 = _evaluate(joined, west[:p] + west[p + 2 :], east).scale(_WEST_JOIN)
            return t1 + t2

    return SkeinElement.of(BasisTangle(n_w, tuple(west), tuple(east)))


def oracle_reduce(stated: StatedWord) -> SkeinElement:
    """All-smoothings evaluation with naive relation order; no memoization."""
    out = SkeinElement.zero()
    for slices, coeff in _smoothings(list(stated.word.slices)):
        arcs, loops = _trace(stated.word.west_arity, slices)
        part = _evaluate(arcs, list(stated.west), list(stated.east))
        out = out + part.scale(coeff * _LOOP**loops)
    return out
