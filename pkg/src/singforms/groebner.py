"""Ideals of Q[x_1..x_m]: reduced Groebner bases and derived data.

An ideal is a thin wrapper over the rank-1 case of the module engine;
the cached reduced basis is the unique one for the given order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .modules import (
    FreeModuleElement,
    module_colon,
    module_groebner,
    module_intersection,
)
from .orders import GREVLEX, Mono, MonomialOrder, mono_divides
from .poly import Polynomial, Ring


def _wrap(p: Polynomial) -> FreeModuleElement:
    return FreeModuleElement((p,))


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple[Polynomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")
        object.__setattr__(self, "generators", gens)

    def groebner_basis(
        self, order: MonomialOrder = GREVLEX, limit: int | None = None
    ) -> tuple[Polynomial, ...]:
        """The unique reduced Groebner basis (monic, sorted by leading term)."""
        key = order
        if key not in self._cache:
            gb = module_groebner(
                [_wrap(g) for g in self.generators],
                None,
                order,
                limit,
                rank=1,
                ring=self.ring,
            )
            self._cache[key] = tuple(e.components[0] for e in gb.elements)
        return self._cache[key]

    def normal_form(
        self, p: Polynomial, order: MonomialOrder = GREVLEX, limit: int | None = None
    ) -> Polynomial:
        gb = self.groebner_basis(order, limit)
        basis = module_groebner(
            [_wrap(g) for g in gb], None, order, limit, rank=1, ring=self.ring
        )
        return basis.normal_form(_wrap(p), limit).components[0]

    def contains(self, p: Polynomial, order: MonomialOrder = GREVLEX,
                 limit: int | None = None) -> bool:
        return self.normal_form(p, order, limit).is_zero()

    def is_unit(self, limit: int | None = None) -> bool:
        gb = self.groebner_basis(limit=limit)
        return any(g.is_constant() and not g.is_zero() for g in gb)

    def leading_monomials(
        self, order: MonomialOrder = GREVLEX, limit: int | None = None
    ) -> tuple[Mono, ...]:
        return tuple(g.leading_monomial(order) for g in self.groebner_basis(order, limit))

    def dimension(self, limit: int | None = None) -> int:
        """Krull dimension of Q[x]/I by the independent-set method on
        leading terms; -1 for the unit ideal."""
        if not self.generators:
            return self.ring.nvars
        if self.is_unit(limit):
            return -1
        lts = self.leading_monomials(GREVLEX, limit)
        supports = [frozenset(i for i, e in enumerate(m) if e > 0) for m in lts]
        nvars = self.ring.nvars
        for size in range(nvars, -1, -1):
            for subset in combinations(range(nvars), size):
                s = set(subset)
                if all(not sup <= s for sup in supports):
                    return size
        return 0

    def colon(self, g: Polynomial, order: MonomialOrder = GREVLEX,
              limit: int | None = None) -> "Ideal":
        out = module_colon(
            [_wrap(p) for p in self.generators], g, 1, self.ring, order, limit
        )
        return Ideal(self.ring, tuple(e.components[0] for e in out))

    def intersection(self, other: "Ideal", order: MonomialOrder = GREVLEX,
                     limit: int | None = None) -> "Ideal":
        out = module_intersection(
            [_wrap(p) for p in self.generators],
            [_wrap(p) for p in other.generators],
            order,
            limit,
        )
        return Ideal(self.ring, tuple(e.components[0] for e in out))

    def saturation(self, other: "Ideal", order: MonomialOrder = GREVLEX,
                   limit: int | None = None) -> "Ideal":
        """(I : J^infinity), by iterating the ideal quotient until stable."""
        js = [g for g in other.generators if not g.is_zero()]
        if not js:
            raise ValueError("saturation requires a nonzero ideal")
        cur = self
        while True:
            nxt = cur.colon(js[0], order, limit)
            for g in js[1:]:
                nxt = nxt.intersection(cur.colon(g, order, limit), order, limit)
            if all(cur.contains(g, order, limit) for g in nxt.generators):
                return cur
            cur = Ideal(self.ring, cur.generators + nxt.generators)

    def equals(self, other: "Ideal", limit: int | None = None) -> bool:
        return self.groebner_basis(limit=limit) == other.groebner_basis(limit=limit)

    def verify_cached_basis(self, order: MonomialOrder = GREVLEX,
                            limit: int | None = None) -> bool:
        """Mutual normal-form reduction between generators and cached basis."""
        if order not in self._cache:
            return True
        basis = Ideal(self.ring, self._cache[order])
        return all(basis.contains(g, order, limit) for g in self.generators) and all(
            self.contains(b, order, limit) for b in basis.generators
        )

    def standard_monomials(
        self, order: MonomialOrder = GREVLEX, limit: int | None = None
    ) -> list[Mono] | None:
        """Monomials outside the leading-term ideal, or None when the
        ideal is not zero-dimensional (every variable needs a pure power
        among the leading terms)."""
        if self.is_unit(limit):
            return []
        lts = self.leading_monomials(order, limit)
        nvars = self.ring.nvars
        caps = []
        for var in range(nvars):
            pure = [
                m[var]
                for m in lts
                if all(e == 0 for i, e in enumerate(m) if i != var)
            ]
            if not pure:
                return None
            caps.append(min(pure))
        out: list[Mono] = []

        def rec(i: int, prefix: tuple):
            if i == nvars:
                if not any(mono_divides(m, prefix) for m in lts):
                    out.append(prefix)
                return
            for e in range(caps[i]):
                rec(i + 1, prefix + (e,))

        rec(0, ())
        return out

    def vector_space_dimension(self, limit: int | None = None) -> int | None:
        mons = self.standard_monomials(limit=limit)
        return None if mons is None else len(mons)


def groebner_basis(
    ideal: Ideal, order: MonomialOrder = GREVLEX, limit: int | None = None
) -> Ideal:
    """Compute and cache the reduced basis; returns the same ideal."""
    ideal.groebner_basis(order, limit)
    return ideal


def ideal_dimension(ideal: Ideal, limit: int | None = None) -> int:
    return ideal.dimension(limit)


def jacobian_ideal(f: Polynomial) -> Ideal:
    """The singular-locus ideal (f, df/dx_1, ..., df/dx_m)."""
    return Ideal(f.ring, (f,) + f.gradient())
