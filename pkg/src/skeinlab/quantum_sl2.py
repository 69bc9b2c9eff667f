"""Presentation-based quantum coordinate algebra of SL2 at parameter q^2.

Generators a, b, c, d subject to

    ca = q^2 ac,  db = q^2 bd,  ba = q^2 ab,  dc = q^2 cd,
    bc = cb,      ad - q^-2 bc = 1,   da - q^2 cb = 1,

with the matrix coproduct, counit and antipode.  Normal forms are the PBW
monomials a^i b^j c^k together with d^l b^j c^k (l >= 1): eliminating every
adjacent a,d pair strictly drops degree, so rewriting terminates and the two
families are a linear basis.

Also provided: the dual pairing with the quantized enveloping algebra
generators E, F, K, K^-1, and the transport isomorphism to and from the
bigon skein algebra (a <-> beta(+;+) etc.).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from . import bigon_skein
from .diagram import SkeinElement
from .scalar import ONE, HalfLaurent

U_GENERATORS = ("E", "F", "K", "Kinv")


@dataclass(frozen=True, order=True)
class PBWMonomial:
    """a^a_pow d^d_pow b^b_pow c^c_pow with a_pow * d_pow == 0."""

    a_pow: int
    d_pow: int
    b_pow: int
    c_pow: int

    def __post_init__(self) -> None:
        if min(self.a_pow, self.d_pow, self.b_pow, self.c_pow) < 0:
            raise ValueError("negative exponent in PBW monomial")
        if self.a_pow and self.d_pow:
            raise ValueError("a and d cannot both appear in a PBW monomial")

    @property
    def degree(self) -> int:
        return self.a_pow + self.d_pow + self.b_pow + self.c_pow

    def letters(self) -> Iterator[str]:
        yield from "a" * self.a_pow
        yield from "d" * self.d_pow
        yield from "b" * self.b_pow
        yield from "c" * self.c_pow

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for letter, p in (("a", self.a_pow), ("d", self.d_pow), ("b", self.b_pow), ("c", self.c_pow)):
            if p == 1:
                parts.append(letter)
            elif p > 1:
                parts.append(f"{letter}^{p}")
        return "*".join(parts)


PBW_ONE = PBWMonomial(0, 0, 0, 0)


class HopfElement:
    """Linear combination of PBW monomials with HalfLaurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[PBWMonomial, HalfLaurent] | Iterable[tuple[PBWMonomial, HalfLaurent]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[PBWMonomial, HalfLaurent] = {}
        for m, c in items:
            if not c.is_zero():
                acc = canon.get(m)
                tot = c if acc is None else acc + c
                if tot.is_zero():
                    canon.pop(m, None)
                else:
                    canon[m] = tot
        self._terms = canon

    @classmethod
    def zero(cls) -> HopfElement:
        return cls()

    @classmethod
    def one(cls) -> HopfElement:
        return cls({PBW_ONE: ONE})

    @classmethod
    def of(cls, m: PBWMonomial, coeff: HalfLaurent = ONE) -> HopfElement:
        return cls({m: coeff})

    def items(self) -> Iterator[tuple[PBWMonomial, HalfLaurent]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0].degree, kv[0])))

    def coefficient(self, m: PBWMonomial) -> HalfLaurent:
        return self._terms.get(m, HalfLaurent.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: HopfElement) -> HopfElement:
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m)
            tot = c if acc is None else acc + c
            if tot.is_zero():
                out.pop(m, None)
            else:
                out[m] = tot
        res = HopfElement.__new__(HopfElement)
        res._terms = out
        return res

    def __sub__(self, other: HopfElement) -> HopfElement:
        return self + other.scale(-ONE)

    def __neg__(self) -> HopfElement:
        return self.scale(-ONE)

    def scale(self, coeff: HalfLaurent) -> HopfElement:
        if coeff.is_zero():
            return HopfElement.zero()
        res = HopfElement.__new__(HopfElement)
        res._terms = {m: c * coeff for m, c in self._terms.items()}
        return res

    def __str__(self) -> str:
        from .syntax import format_hopf

        return format_hopf(self)

    def __repr__(self) -> str:
        return f"HopfElement({str(self)!r})"


def _mono_times_letter(m: PBWMonomial, letter: str) -> HopfElement:
    """Right-multiply a PBW monomial by one generator, renormalizing."""
    i, l, j, k = m.a_pow, m.d_pow, m.b_pow, m.c_pow
    if letter == "b":
        return HopfElement.of(PBWMonomial(i, l, j + 1, k))
    if letter == "c":
        return HopfElement.of(PBWMonomial(i, l, j, k + 1))
    if letter == "a":
        coeff = HalfLaurent.q_pow(2 * (j + k))
        if l == 0:
            return HopfElement.of(PBWMonomial(i + 1, 0, j, k), coeff)
        # d^l a = d^(l-1) + q^2 d^(l-1) b c
        return HopfElement(
            {
                PBWMonomial(0, l - 1, j, k): coeff,
                PBWMonomial(0, l - 1, j + 1, k + 1): coeff * HalfLaurent.q_pow(2),
            }
        )
    if letter == "d":
        coeff = HalfLaurent.q_pow(-2 * (j + k))
        if i == 0:
            return HopfElement.of(PBWMonomial(0, l + 1, j, k), coeff)
        # a^i d = a^(i-1) + q^-2 a^(i-1) b c
        return HopfElement(
            {
                PBWMonomial(i - 1, 0, j, k): coeff,
                PBWMonomial(i - 1, 0, j + 1, k + 1): coeff * HalfLaurent.q_pow(-2),
            }
        )
    raise ValueError(f"unknown generator {letter!r}")


def _times_letter(x: HopfElement, letter: str) -> HopfElement:
    out = HopfElement.zero()
    for m, c in x.items():
        out = out + _mono_times_letter(m, letter).scale(c)
    return out


def normalize(word: Iterable[str]) -> HopfElement:
    """Normal form of a free word in the generators a, b, c, d."""
    out = HopfElement.one()
    for letter in word:
        out = _times_letter(out, letter)
    return out


def mul(x: HopfElement, y: HopfElement) -> HopfElement:
    out = HopfElement.zero()
    for m, c in y.items():
        part = x
        for letter in m.letters():
            part = _times_letter(part, letter)
        out = out + part.scale(c)
    return out


def gen(letter: str) -> HopfElement:
    return normalize(letter)


# -- coalgebra structure -------------------------------------------------------

def _letter_mono(letter: str) -> PBWMonomial:
    return PBWMonomial(int(letter == "a"), int(letter == "d"), int(letter == "b"), int(letter == "c"))


_COPRODUCT_LETTER: dict[str, tuple[tuple[str, str], ...]] = {
    "a": (("a", "a"), ("b", "c")),
    "b": (("a", "b"), ("b", "d")),
    "c": (("c", "a"), ("d", "c")),
    "d": (("c", "b"), ("d", "d")),
}


class HopfTensor:
    """Two-fold tensors of normal-form elements."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[PBWMonomial, PBWMonomial], HalfLaurent] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[tuple[PBWMonomial, PBWMonomial], HalfLaurent] = {}
        for key, c in items:
            if not c.is_zero():
                acc = canon.get(key)
                tot = c if acc is None else acc + c
                if tot.is_zero():
                    canon.pop(key, None)
                else:
                    canon[key] = tot
        self._terms = canon

    @classmethod
    def one(cls) -> HopfTensor:
        return cls({(PBW_ONE, PBW_ONE): ONE})

    def items(self) -> Iterator[tuple[tuple[PBWMonomial, PBWMonomial], HalfLaurent]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0][0].degree + kv[0][1].degree, kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfTensor):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: HopfTensor) -> HopfTensor:
        out = dict(self._terms)
        for k, c in other._terms.items():
            acc = out.get(k)
            tot = c if acc is None else acc + c
            if tot.is_zero():
                out.pop(k, None)
            else:
                out[k] = tot
        res = HopfTensor.__new__(HopfTensor)
        res._terms = out
        return res

    def __sub__(self, other: HopfTensor) -> HopfTensor:
        return self + other.scale(-ONE)

    def scale(self, coeff: HalfLaurent) -> HopfTensor:
        res = HopfTensor.__new__(HopfTensor)
        res._terms = {} if coeff.is_zero() else {k: c * coeff for k, c in self._terms.items()}
        return res

    def mul(self, other: HopfTensor) -> HopfTensor:
        out = HopfTensor()
        for (m1, m2), c in self._terms.items():
            for (n1, n2), d in other._terms.items():
                left = mul(HopfElement.of(m1), HopfElement.of(n1))
                right = mul(HopfElement.of(m2), HopfElement.of(n2))
                for p1, c1 in left.items():
                    for p2, c2 in right.items():
                        out = out + HopfTensor({(p1, p2): c * d * c1 * c2})
        return out


def comul(x: HopfElement) -> HopfTensor:
    """Coproduct, extended to normal forms as an algebra map."""
    out = HopfTensor()
    for m, c in x.items():
        part = HopfTensor.one()
        for letter in m.letters():
            step = HopfTensor(
                {(_letter_mono(l1), _letter_mono(l2)): ONE for l1, l2 in _COPRODUCT_LETTER[letter]}
            )
            part = part.mul(step)
        out = out + part.scale(c)
    return out


def counit(x: HopfElement) -> HalfLaurent:
    out = HalfLaurent.zero()
    for m, c in x.items():
        if m.b_pow == 0 and m.c_pow == 0:
            out = out + c
    return out


_ANTIPODE_LETTER: dict[str, HopfElement] = {}


def _antipode_letter(letter: str) -> HopfElement:
    if not _ANTIPODE_LETTER:
        _ANTIPODE_LETTER.update(
            {
                "a": gen("d"),
                "b": gen("b").scale(HalfLaurent.q_pow(2, -1)),
                "c": gen("c").scale(HalfLaurent.q_pow(-2, -1)),
                "d": gen("a"),
            }
        )
    return _ANTIPODE_LETTER[letter]


def antipode(x: HopfElement) -> HopfElement:
    """Antipode: anti-algebra map with S(a)=d, S(b)=-q^2 b, S(c)=-q^-2 c, S(d)=a."""
    out = HopfElement.zero()
    for m, c in x.items():
        part = HopfElement.one()
        for letter in reversed(list(m.letters())):
            part = mul(part, _antipode_letter(letter))
        out = out + part.scale(c)
    return out


# -- dual pairing with the quantized enveloping algebra ------------------------

_PAIR_LETTER: dict[str, dict[str, HalfLaurent]] = {
    "K": {"a": HalfLaurent.q_pow(2), "d": HalfLaurent.q_pow(-2)},
    "Kinv": {"a": HalfLaurent.q_pow(-2), "d": HalfLaurent.q_pow(2)},
    "E": {"b": ONE},
    "F": {"c": ONE},
}

_U_COUNIT = {"K": ONE, "Kinv": ONE, "E": HalfLaurent.zero(), "F": HalfLaurent.zero()}


def _pair_gen_mono(g: str, m: PBWMonomial) -> HalfLaurent:
    """<g, m> for one enveloping-algebra generator and one PBW monomial."""
    letters = list(m.letters())
    if not letters:
        return _U_COUNIT[g]
    if len(letters) == 1:
        return _PAIR_LETTER[g].get(letters[0], HalfLaurent.zero())
    x, rest = letters[0], PBWMonomial(
        m.a_pow - (letters[0] == "a"),
        m.d_pow - (letters[0] == "d"),
        m.b_pow - (letters[0] == "b"),
        m.c_pow - (letters[0] == "c"),
    )
    head = PBWMonomial(int(x == "a"), int(x == "d"), int(x == "b"), int(x == "c"))
    if g in ("K", "Kinv"):
        return _pair_gen_mono(g, head) * _pair_gen_mono(g, rest)
    if g == "E":
        # <E, xy> = eps(x) <E,y> + <E,x> <K,y>
        return counit(HopfElement.of(head)) * _pair_gen_mono("E", rest) + _pair_gen_mono(
            "E", head
        ) * _pair_gen_mono("K", rest)
    if g == "F":
        # <F, xy> = <K^-1,x> <F,y> + <F,x> eps(y)
        return _pair_gen_mono("Kinv", head) * _pair_gen_mono("F", rest) + _pair_gen_mono(
            "F", head
        ) * counit(HopfElement.of(rest))
    raise ValueError(f"unknown enveloping generator {g!r}")


def pairing(word: Sequence[str], x: HopfElement) -> HalfLaurent:
    """<u, x> for u a word in E, F, K, Kinv, extended by <uu', y> = <u,y1><u',y2>."""
    for g in word:
        if g not in U_GENERATORS:
            raise ValueError(f"unknown enveloping generator {g!r}")
    out = HalfLaurent.zero()
    if not word:
        return counit(x)
    if len(word) == 1:
        for m, c in x.items():
            out = out + _pair_gen_mono(word[0], m) * c
        return out
    g, rest = word[0], word[1:]
    for (m1, m2), c in comul(x).items():
        left = _pair_gen_mono(g, m1)
        if left.is_zero():
            continue
        out = out + left * pairing(rest, HopfElement.of(m2)) * c
    return out


# -- transport to and from the bigon skein algebra -----------------------------

_LETTER_TO_TANGLE = {"a": (1, 1), "b": (1, -1), "c": (-1, 1), "d": (-1, -1)}
_TANGLE_TO_LETTER = {v: k for k, v in _LETTER_TO_TANGLE.items()}


def to_skein(x: HopfElement) -> SkeinElement:
    """Send each PBW monomial to the product of its generator tangles."""
    out = SkeinElement.zero()
    for m, c in x.items():
        factors = [bigon_skein.generator(letter) for letter in m.letters()]
        out = out + bigon_skein.mul_many(factors).scale(c)
    return out


def from_skein(y: SkeinElement) -> HopfElement:
    """Send each basis tangle to the normal form of its strand-wise word."""
    out = HopfElement.zero()
    for b, c in y.items():
        word = [_TANGLE_TO_LETTER[(b.mu[i], b.nu[i])] for i in range(b.n)]
        out = out + normalize(word).scale(c)
    return out


def pbw_monomials(max_degree: int) -> list[PBWMonomial]:
    out = []
    for deg in range(max_degree + 1):
        for j in range(deg + 1):
            for k in range(deg + 1 - j):
                r = deg - j - k
                out.append(PBWMonomial(r, 0, j, k))
                if r >= 1:
                    out.append(PBWMonomial(0, r, j, k))
    return out


