"""Exact multivariate polynomials over the rationals.

A Ring fixes the variable names (and optional positive grading weights);
a Polynomial is a finite map from exponent tuples to nonzero Fractions.
Values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnknownVariableError
from .orders import GREVLEX, Mono, MonomialOrder, mono_degree, mono_mul, mono_one


@dataclass(frozen=True)
class Ring:
    """Polynomial ring context Q[x_1, ..., x_m] with optional grading weights."""

    variables: tuple[str, ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            if len(self.weights) != len(self.variables):
                raise ValueError("one grading weight per variable required")
            if any(w < 1 for w in self.weights):
                raise ValueError("grading weights must be positive")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def degree_of(self, mono: Mono) -> int:
        return mono_degree(mono, self.weights)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {mono_one(self.nvars): c})

    def variable(self, i: int) -> "Polynomial":
        expo = [0] * self.nvars
        expo[i] = 1
        return Polynomial(self, {tuple(expo): Fraction(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(i) for i in range(self.nvars))

    def monomial(self, mono: Mono, coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return Polynomial(self, {tuple(mono): coeff})


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Polynomial(self.ring, {m: v / c for m, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get(mono_one(self.ring.nvars), Fraction(0))

    def degree(self) -> int | None:
        """Maximal (weighted) degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ring.degree_of(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {self.ring.degree_of(m) for m in self.terms}
        return len(degs) == 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def partial(self, i: int) -> "Polynomial":
        out: dict = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            dm = list(m)
            dm[i] -= 1
            out[tuple(dm)] = c * m[i]
        return Polynomial(self.ring, out)

    def gradient(self) -> tuple["Polynomial", ...]:
        return tuple(self.partial(i) for i in range(self.ring.nvars))

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- rendering ----------------------------------------------------

    def to_string(self, order: MonomialOrder = GREVLEX) -> str:
        """Render in the input grammar; parse_poly round-trips the result."""
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            factors = []
            if abs(c) != 1 or sum(m) == 0:
                factors.append(str(abs(c)))
            for name, e in zip(self.ring.variables, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


# -- parsing ----------------------------------------------------------

_OPS = set("+-*^()")


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            # rational literal p/q: '/' is only legal between integer literals
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ParseError("expected digits after '/'", j)
                while k < n and text[k].isdigit():
                    k += 1
                den = int(text[j + 1 : k])
                if den == 0:
                    raise ParseError("zero denominator", j + 1)
                tokens.append(("num", Fraction(num, den), i))
                i = k
            else:
                tokens.append(("num", Fraction(num), i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    """Recursive descent for: expr := term (+|- term)*, term := factor (* factor)*,
    factor := -factor | atom [^ INT], atom := NUMBER | NAME | (expr)."""

    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.var_index = {name: i for i, name in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        kind, _, _ = self.peek()
        p = self.term()
        while True:
            kind = self.peek()[0]
            if kind == "+":
                self.take()
                p = p + self.term()
            elif kind == "-":
                self.take()
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        p = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("num")
            e = tok[1]
            if e.denominator != 1 or e < 0:
                raise ParseError("exponent must be a non-negative integer", tok[2])
            p = p ** int(e)
        return p

    def atom(self) -> Polynomial:
        kind, value, position = self.take()
        if kind == "num":
            return self.ring.constant(value)
        if kind == "name":
            if value not in self.var_index:
                raise UnknownVariableError(value, position)
            return self.ring.variable(self.var_index[value])
        if kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {value!r}", position)


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse an expression in +, -, *, ^, rational literals and ring variables."""
    return _Parser(text, ring).parse()
