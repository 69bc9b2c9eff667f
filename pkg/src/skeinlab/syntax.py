"""Text syntax for diagrams, skein elements and quantum-algebra elements.

Grammar (EBNF):

    diagram  := "tangle(" INT "){" [slice (";" slice)*] "}" [" west=" SIGNS] [" east=" SIGNS]
    slice    := ("x" | "xb" | "cap" | "cup") INT
    SIGNS    := ("+" | "-")*

    element  := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := ["-"] atom ["^" INT]
    atom     := NUMBER | "s" | "q" | "a" | "b" | "c" | "d" | "1"
              | "beta(" SIGNS ";" SIGNS ")" | "(" element ")"

Element expressions evaluate either in the bigon skein algebra (products via
diagram stacking) or in the quantum coordinate algebra (products via PBW
rewriting); the two evaluations agree under the transport isomorphism.
Printers emit canonical forms that parse back to equal values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import HalfLaurent, format_scalar


class ParseError(ValueError):
    """Syntax error with a 1-based column position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


@dataclass
class _Cursor:
    text: str
    pos: int = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, k: int = 1) -> str:
        self.skip_ws()
        return self.text[self.pos : self.pos + k]

    def eat(self, token: str) -> None:
        if self.peek(len(token)) != token:
            raise ParseError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def try_eat(self, token: str) -> bool:
        if self.peek(len(token)) == token:
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        lit = self.text[start : self.pos]
        if not lit.lstrip("+-"):
            raise ParseError("expected integer", start)
        return int(lit)

    def signs(self) -> tuple[int, ...]:
        self.skip_ws()
        out = []
        while self.pos < len(self.text) and self.text[self.pos] in "+-":
            out.append(1 if self.text[self.pos] == "+" else -1)
            self.pos += 1
        return tuple(out)

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


# -- diagrams ------------------------------------------------------------------


def parse_diagram(text: str):
    from .diagram import DiagramError, SliceWord, StatedWord

    cur = _Cursor(text)
    cur.eat("tangle")
    cur.eat("(")
    west_arity = cur.integer()
    cur.eat(")")
    cur.eat("{")
    slices: list[tuple[str, int]] = []
    if not cur.try_eat("}"):
        while True:
            kind = None
            for cand in ("xb", "x", "cap", "cup"):
                if cur.try_eat(cand):
                    kind = cand
                    break
            if kind is None:
                raise ParseError("expected slice (x, xb, cap or cup)", cur.pos)
            slices.append((kind, cur.integer()))
            if cur.try_eat("}"):
                break
            cur.eat(";")
    west: tuple[int, ...] = ()
    east: tuple[int, ...] = ()
    while not cur.done():
        if cur.try_eat("west="):
            west = cur.signs()
        elif cur.try_eat("east="):
            east = cur.signs()
        else:
            raise ParseError("expected west= or east=", cur.pos)
    try:
        word = SliceWord(west_arity, tuple(slices))
        return StatedWord(word, west, east)
    except DiagramError as exc:
        raise ParseError(str(exc), cur.pos) from exc


def format_diagram(diagram) -> str:
    body = ";".join(f"{kind}{i}" for kind, i in diagram.word.slices)
    out = f"tangle({diagram.word.west_arity}){{{body}}}"
    sig = lambda v: "".join("+" if s > 0 else "-" for s in v)
    if diagram.west:
        out += f" west={sig(diagram.west)}"
    if diagram.east:
        out += f" east={sig(diagram.east)}"
    return out


# -- element expressions -------------------------------------------------------
#
# The evaluator is parameterized by a tiny interface so one grammar serves
# both the skein-algebra and the coordinate-algebra readings.


class _SkeinOps:
    @staticmethod
    def scalar(x: HalfLaurent):
        from .diagram import SkeinElement

        return SkeinElement.unit().scale(x)

    @staticmethod
    def generator(name: str):
        from .bigon_skein import generator

        return generator(name)

    @staticmethod
    def beta(mu, nu):
        from .diagram import reduce_parallel

        if len(mu) != len(nu):
            raise ValueError("beta needs equal-length sign strings")
        return reduce_parallel(mu, nu)

    @staticmethod
    def mul(x, y):
        from .bigon_skein import mul

        return mul(x, y)


class _HopfOps:
    @staticmethod
    def scalar(x: HalfLaurent):
        from .quantum_sl2 import HopfElement

        return HopfElement.one().scale(x)

    @staticmethod
    def generator(name: str):
        from .quantum_sl2 import gen

        return gen(name)

    @staticmethod
    def beta(mu, nu):
        from .quantum_sl2 import from_skein

        return from_skein(_SkeinOps.beta(mu, nu))

    @staticmethod
    def mul(x, y):
        from .quantum_sl2 import mul

        return mul(x, y)


class _ElementParser:
    def __init__(self, text: str, ops):
        self.cur = _Cursor(text)
        self.ops = ops

    def parse(self):
        val = self.expr()
        if not self.cur.done():
            raise ParseError("trailing input", self.cur.pos)
        return val

    def expr(self):
        val = self.term()
        while True:
            if self.cur.try_eat("+"):
                val = val + self.term()
            elif self.cur.peek() == "-" and not self.cur.peek(2) == "->":
                self.cur.eat("-")
                val = val - self.term()
            else:
                return val

    def term(self):
        val = self.factor()
        while self.cur.try_eat("*"):
            val = self.ops.mul(val, self.factor())
        return val

    def factor(self):
        if self.cur.try_eat("-"):
            inner = self.factor()
            return self.ops.mul(self.ops.scalar(HalfLaurent.rational(-1)), inner)
        return self.power()

    def power(self):
        base, scalar = self.atom()
        if self.cur.peek() == "^":
            self.cur.eat("^")
            e = self.cur.integer()
            if scalar is not None:
                return self.ops.scalar(scalar**e)
            if e < 0:
                raise ParseError("element atoms only take nonnegative powers", self.cur.pos)
            out = self.ops.scalar(HalfLaurent.one())
            for _ in range(e):
                out = self.ops.mul(out, base)
            return out
        return base if scalar is None else self.ops.scalar(scalar)

    def atom(self):
        """Returns (element, scalar): scalar is set when the atom is a pure scalar."""
        cur = self.cur
        ch = cur.peek()
        if ch == "(":
            cur.eat("(")
            val = self.expr()
            cur.eat(")")
            return val, None
        if cur.try_eat("beta("):
            mu = cur.signs()
            cur.eat(";")
            nu = cur.signs()
            cur.eat(")")
            try:
                return self.ops.beta(mu, nu), None
            except ValueError as exc:
                raise ParseError(str(exc), cur.pos) from exc
        if ch == "s":
            cur.eat("s")
            return None, HalfLaurent.s_pow(1)
        if ch == "q":
            cur.eat("q")
            return None, HalfLaurent.q_pow(1)
        if ch and ch in "abcd":
            cur.eat(ch)
            return self.ops.generator(ch), None
        if ch == "1":
            cur.eat("1")
            if cur.peek() == "/":
                cur.eat("/")
                den = cur.integer()
                return None, HalfLaurent.rational(Fraction(1, den))
            return None, HalfLaurent.one()
        if ch.isdigit():
            num = cur.integer()
            if cur.peek() == "/":
                cur.eat("/")
                den = cur.integer()
                if den == 0:
                    raise ParseError("zero denominator", cur.pos)
                return None, HalfLaurent.rational(Fraction(num, den))
            return None, HalfLaurent.rational(num)
        raise ParseError("expected element atom", cur.pos)


def parse_element(text: str):
    """Parse an expression as a bigon skein element."""
    return _ElementParser(text, _SkeinOps).parse()


def parse_hopf(text: str):
    """Parse an expression as a quantum coordinate algebra element."""
    return _ElementParser(text, _HopfOps).parse()


def _format_terms(pairs: list[tuple[str, HalfLaurent]]) -> str:
    if not pairs:
        return "0"
    chunks: list[str] = []
    for label, coeff in pairs:
        cs = format_scalar(coeff)
        multi = " " in cs  # more than one monomial
        if label == "1":
            body = f"({cs}) * 1" if multi else f"{cs} * 1" if cs not in ("1", "-1") else (
                "1" if cs == "1" else "-1"
            )
        elif cs == "1":
            body = label
        elif cs == "-1":
            body = f"-{label}"
        else:
            body = f"({cs}) * {label}" if multi else f"{cs} * {label}"
        if not chunks:
            chunks.append(body)
        elif body.startswith("-"):
            chunks.append(f"- {body[1:]}")
        else:
            chunks.append(f"+ {body}")
    return " ".join(chunks)


def format_element(x) -> str:
    return _format_terms([(str(b), c) for b, c in x.items()])


def format_hopf(x) -> str:
    return _format_terms([(str(m), c) for m, c in x.items()])
