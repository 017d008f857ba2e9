"""Monomial orders and exponent-tuple utilities.

Monomials are plain tuples of non-negative integers, one entry per ring
variable.  An order provides a sort key: larger key means larger
monomial.
"""

from __future__ import annotations

from dataclasses import dataclass

Mono = tuple[int, ...]


def mono_one(nvars: int) -> Mono:
    return (0,) * nvars


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """Quotient exponent a - b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Mono, weights: tuple[int, ...] | None = None) -> int:
    if weights is None:
        return sum(a)
    return sum(w * e for w, e in zip(weights, a))


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order: lex or graded-reverse-lex.

    When `weights` is present (all >= 1), monomials are compared by
    weighted degree first, with the plain order as tie-break.  Every
    variant refines divisibility.
    """

    kind: str = "grevlex"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
            if any(w < 1 for w in self.weights):
                raise ValueError("order weights must be positive integers")

    def key(self, m: Mono):
        if self.kind == "lex":
            base = m
        else:
            # grevlex: total degree, then reversed negated exponents
            base = (sum(m), tuple(-e for e in reversed(m)))
        if self.weights is None:
            return base
        return (mono_degree(m, self.weights), base)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def module_key(order: MonomialOrder):
    """Term-over-position key on module terms (position, monomial).

    Monomials are compared by the ring order; ties are broken by
    position, lower positions being larger.
    """
    mono_key = order.key

    def key(term):
        return (mono_key(term[1]), -term[0])

    return key
