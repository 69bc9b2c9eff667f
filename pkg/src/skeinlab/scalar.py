"""Exact ground ring: Laurent polynomials in the half-power generator s = q^(1/2).

Every coefficient showing up in bigon skein computations -- the loop value
-q^2 - q^-2, boundary arc weights like q^(-1/2) and -q^(5/2), twist factors
-q^(+/-3) -- is a Laurent polynomial in q^(1/2) with rational coefficients.
Working with the generator s (so q = s^2) keeps all exponents integral and
makes equality of scalars a structural comparison of canonical term maps.

Rank computations elsewhere specialize s at nonzero rational points; a
nonzero rational other than +/-1 is never a root of unity, so such points
are generic for every identity checked here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


class ScalarError(ValueError):
    """Raised on invalid scalar operations (bad specialization, non-monomial inverse)."""


class HalfLaurent:
    """A Laurent polynomial in s = q^(1/2) over Q, kept in canonical form.

    Canonical form stores only nonzero coefficients, so ``==`` is exact
    structural equality.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rat] | Iterable[tuple[int, Rat]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[int, Fraction] = {}
        for e, c in items:
            c = Fraction(c)
            if c:
                acc = canon.get(e)
                tot = c if acc is None else acc + c
                if tot:
                    canon[e] = tot
                elif acc is not None:
                    del canon[e]
        self._terms = canon

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> HalfLaurent:
        return cls()

    @classmethod
    def one(cls) -> HalfLaurent:
        return cls({0: 1})

    @classmethod
    def rational(cls, r: Rat) -> HalfLaurent:
        return cls({0: Fraction(r)})

    @classmethod
    def s_pow(cls, e: int, coeff: Rat = 1) -> HalfLaurent:
        """coeff * s^e."""
        return cls({e: Fraction(coeff)})

    @classmethod
    def q_pow(cls, e: int, coeff: Rat = 1) -> HalfLaurent:
        """coeff * q^e = coeff * s^(2e)."""
        return cls({2 * e: Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == HalfLaurent.rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: HalfLaurent) -> HalfLaurent:
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e)
            tot = c if acc is None else acc + c
            if tot:
                out[e] = tot
            elif acc is not None:
                del out[e]
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = out
        return res

    def __sub__(self, other: HalfLaurent) -> HalfLaurent:
        return self + (-other)

    def __neg__(self) -> HalfLaurent:
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __mul__(self, other: HalfLaurent | Rat) -> HalfLaurent:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc = out.get(e)
                tot = c1 * c2 if acc is None else acc + c1 * c2
                if tot:
                    out[e] = tot
                elif acc is not None:
                    del out[e]
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = out
        return res

    def __rmul__(self, other: Rat) -> HalfLaurent:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, r: Rat) -> HalfLaurent:
        r = Fraction(r)
        if not r:
            return HalfLaurent.zero()
        res = HalfLaurent.__new__(HalfLaurent)
        res._terms = {e: c * r for e, c in self._terms.items()}
        return res

    def __pow__(self, n: int) -> HalfLaurent:
        if n < 0:
            return self.inverse() ** (-n)
        out = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> HalfLaurent:
        """Inverse of a monomial c*s^e; other elements are not units here."""
        if len(self._terms) != 1:
            raise ScalarError(f"not an invertible monomial: {self}")
        ((e, c),) = self._terms.items()
        return HalfLaurent({-e: Fraction(1, 1) / c})

    def divide_exact(self, other: HalfLaurent) -> HalfLaurent:
        """Exact quotient self / other in Q[s, s^-1]; raises if not divisible."""
        if other.is_zero():
            raise ScalarError("division by zero")
        if self.is_zero():
            return HalfLaurent.zero()
        # Shift both to ordinary polynomials and do long division by the
        # leading term of the divisor.
        num = dict(self._terms)
        den = other._terms
        dlead = max(den)
        dc = den[dlead]
        # A true quotient has its top exponent at max(num)-dlead and its
        # bottom at min(num)-min(den); anything below that means a residue.
        floor = min(num) - min(den)
        quot: dict[int, Fraction] = {}
        while num:
            nlead = max(num)
            qe, qc = nlead - dlead, num[nlead] / dc
            if qe < floor:
                raise ScalarError("not exactly divisible")
            quot[qe] = qc
            for e, c in den.items():
                ee = e + qe
                acc = num.get(ee, Fraction(0)) - c * qc
                if acc:
                    num[ee] = acc
                elif ee in num:
                    del num[ee]
        return HalfLaurent(quot)

    # -- evaluation --------------------------------------------------------

    def specialize(self, s0: Rat) -> Fraction:
        """Exact evaluation at s = s0 (s0 must be nonzero)."""
        s0 = Fraction(s0)
        if not s0:
            raise ScalarError("specialization point s0 must be nonzero")
        return sum((c * s0**e for e, c in self._terms.items()), Fraction(0))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"HalfLaurent({format_scalar(self)!r})"


ZERO = HalfLaurent.zero()
ONE = HalfLaurent.one()
S = HalfLaurent.s_pow(1)
Q = HalfLaurent.q_pow(1)

#: Kauffman loop value -q^2 - q^-2.
LOOP = HalfLaurent({4: -1, -4: -1})


def validate_generic_point(s0: Rat) -> Fraction:
    """Check that s0 is usable for generic-q rank computations."""
    s0 = Fraction(s0)
    if s0 in (0, 1, -1):
        raise ScalarError(f"specialization point {s0} is not generic (0, 1, -1 excluded)")
    return s0


# -- text form ---------------------------------------------------------------
#
# Term syntax used by the CLI:  -3/2*s^-5 + s^4, with q accepted as an alias
# for s^2.  The printer always emits in s.


def _coeff_str(c: Fraction) -> str:
    return str(c)


def format_scalar(x: HalfLaurent) -> str:
    if x.is_zero():
        return "0"
    parts: list[str] = []
    for e in sorted(x._terms, reverse=True):
        c = x._terms[e]
        if e == 0:
            body = _coeff_str(abs(c))
        else:
            svar = "s" if e == 1 else f"s^{e}"
            body = svar if abs(c) == 1 else f"{_coeff_str(abs(c))}*{svar}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class ScalarParseError(ScalarError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


class _ScalarParser:
    """Recursive-descent parser for scalar expressions in s and q."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            raise ScalarParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() in ("+", "-"):
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            raise ScalarParseError("expected integer", start)
        return int(self.text[start:self.pos])

    def parse(self) -> HalfLaurent:
        val = self.expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ScalarParseError("trailing input", self.pos)
        return val

    def expr(self) -> HalfLaurent:
        val = self.term()
        while self._peek() in ("+", "-"):
            op = self._peek()
            self.pos += 1
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> HalfLaurent:
        val = self.factor()
        while self._peek() == "*":
            self.pos += 1
            val = val * self.factor()
        return val

    def factor(self) -> HalfLaurent:
        if self._peek() == "-":
            self.pos += 1
            return -self.factor()
        return self.power()

    def power(self) -> HalfLaurent:
        base = self.atom()
        if self._peek() == "^":
            self.pos += 1
            return base ** self._int()
        return base

    def atom(self) -> HalfLaurent:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            val = self.expr()
            self._expect(")")
            return val
        if ch == "s":
            self.pos += 1
            return S
        if ch == "q":
            self.pos += 1
            return Q
        if ch.isdigit():
            num = self._int()
            if self._peek() == "/":
                self.pos += 1
                den = self._int()
                if den == 0:
                    raise ScalarParseError("zero denominator", self.pos)
                return HalfLaurent.rational(Fraction(num, den))
            return HalfLaurent.rational(num)
        raise ScalarParseError("expected scalar atom", self.pos)


def parse_scalar(text: str) -> HalfLaurent:
    """Parse the scalar text syntax; inverse of :func:`format_scalar`."""
    return _ScalarParser(text).parse()
