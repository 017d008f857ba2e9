"""Submodules of free modules over Q[x_1..x_m] and over Q[x]/(f).

Everything over the quotient ring A = Q[x]/(f) is computed in the
polynomial ring after appending the row relations f*e_i; one division
algorithm serves both cases.  Module elements are represented internally
as dicts mapping (position, exponent tuple) to Fraction; the public
surface uses FreeModuleElement, a tuple of Polynomials.

The syzygy computation is a tracked Buchberger run: every working basis
element carries its expression in terms of the input generators, and
every S-pair that reduces to zero contributes its tracker as a syzygy.
Processing all pairs of the final basis (no skip criteria in syzygy
mode) makes the collected trackers a generating set of the full syzygy
module of the inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import HomogeneityError
from .limits import Budget
from .orders import (
    GREVLEX,
    Mono,
    MonomialOrder,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
    module_key,
)
from .poly import Polynomial, Ring

ModTerm = tuple[int, Mono]
ModVec = dict


@dataclass(frozen=True)
class FreeModuleElement:
    """An element of a free module, one Polynomial per coordinate."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("free module element needs ambient rank >= 1")
        rings = {p.ring for p in self.components}
        if len(rings) != 1:
            raise ValueError("components from different rings")

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def ring(self) -> Ring:
        return self.components[0].ring

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def __add__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeModuleElement(
            tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeModuleElement(
            tuple(a - b for a, b in zip(self.components, other.components))
        )

    def scale(self, p) -> "FreeModuleElement":
        return FreeModuleElement(tuple(c * p for c in self.components))

    def degree(self) -> int | None:
        degs = [c.degree() for c in self.components if not c.is_zero()]
        return max(degs) if degs else None

    def is_homogeneous(self) -> bool:
        """Homogeneous with all position shifts zero: every nonzero
        component is homogeneous and of one common degree."""
        degs = set()
        for c in self.components:
            if c.is_zero():
                continue
            if not c.is_homogeneous():
                return False
            degs.add(c.degree())
        return len(degs) <= 1

    def __repr__(self):
        return "(" + ", ".join(c.to_string() for c in self.components) + ")"


def unit_vector(ring: Ring, rank: int, position: int) -> FreeModuleElement:
    comps = [ring.zero()] * rank
    comps[position] = ring.one()
    return FreeModuleElement(tuple(comps))


# -- internal vector representation ------------------------------------


def _to_vec(elt: FreeModuleElement) -> ModVec:
    vec: ModVec = {}
    for pos, p in enumerate(elt.components):
        for m, c in p.terms.items():
            vec[(pos, m)] = c
    return vec


def _from_vec(ring: Ring, rank: int, vec: ModVec) -> FreeModuleElement:
    per_pos: list[dict] = [dict() for _ in range(rank)]
    for (pos, m), c in vec.items():
        per_pos[pos][m] = c
    return FreeModuleElement(tuple(Polynomial(ring, t) for t in per_pos))


def _poly_to_vec(p: Polynomial, position: int) -> ModVec:
    return {(position, m): c for m, c in p.terms.items()}


def _vec_extract(vec: ModVec, position: int, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m: c for (p, m), c in vec.items() if p == position})


class _Item:
    """A monic working-basis element with cached leading term."""

    __slots__ = ("lt", "vec", "trk")

    def __init__(self, lt: ModTerm, vec: ModVec, trk: ModVec | None):
        self.lt = lt
        self.vec = vec
        self.trk = trk


def _make_monic(vec: ModVec, trk: ModVec | None, mkey) -> _Item:
    lt = max(vec, key=mkey)
    lc = vec[lt]
    if lc != 1:
        vec = {t: c / lc for t, c in vec.items()}
        if trk is not None:
            trk = {t: c / lc for t, c in trk.items()}
    return _Item(lt, vec, trk)


def _sub_scaled(target: ModVec, source: ModVec, coeff: Fraction, shift: Mono) -> ModVec:
    """target - coeff * x^shift * source, as a new dict."""
    out = dict(target)
    for (pos, m), c in source.items():
        t = (pos, mono_mul(m, shift))
        s = out.get(t, 0) - coeff * c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _find_reducer(term: ModTerm, items: Sequence[_Item]) -> _Item | None:
    pos, mono = term
    for item in items:
        lp, lm = item.lt
        if lp == pos and mono_divides(lm, mono):
            return item
    return None


def _top_reduce(vec: ModVec, trk: ModVec | None, items, mkey, budget: Budget):
    while vec:
        t = max(vec, key=mkey)
        red = _find_reducer(t, items)
        if red is None:
            return vec, trk
        budget.tick()
        c = vec[t]
        shift = mono_div(t[1], red.lt[1])
        vec = _sub_scaled(vec, red.vec, c, shift)
        if trk is not None and red.trk is not None:
            trk = _sub_scaled(trk, red.trk, c, shift)
    return vec, trk


def _normal_form_vec(vec: ModVec, items, mkey, budget: Budget) -> ModVec:
    """Full (tail-reduced) normal form against a list of monic items."""
    work = dict(vec)
    remainder: ModVec = {}
    while work:
        t = max(work, key=mkey)
        c = work.pop(t)
        red = _find_reducer(t, items)
        if red is None:
            remainder[t] = c
            continue
        budget.tick()
        shift = mono_div(t[1], red.lt[1])
        for (pos, m), rc in red.vec.items():
            nt = (pos, mono_mul(m, shift))
            if nt == t:
                continue
            s = work.get(nt, 0) - c * rc
            if s:
                work[nt] = s
            else:
                work.pop(nt, None)
    return remainder


def _interreduce(items: list[_Item], mkey, budget: Budget) -> list[_Item]:
    """Minimalize leads, tail-reduce, sort: the canonical reduced basis."""
    kept: list[_Item] = []
    for i, it in enumerate(items):
        dominated = False
        for j, jt in enumerate(items):
            if j == i:
                continue
            if jt.lt[0] == it.lt[0] and mono_divides(jt.lt[1], it.lt[1]):
                if jt.lt == it.lt:
                    if j < i:
                        dominated = True
                        break
                else:
                    dominated = True
                    break
        if not dominated:
            kept.append(it)
    out = []
    for i, it in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = _normal_form_vec(it.vec, others, mkey, budget)
        if r:
            out.append(_make_monic(r, None, mkey))
    out.sort(key=lambda item: mkey(item.lt), reverse=True)
    return out


def _engine(
    gens: Sequence[ModVec],
    nvars: int,
    order: MonomialOrder,
    limit: int | None,
    want_syzygies: bool,
):
    """Buchberger completion; returns (raw basis items, syzygy trackers).

    In syzygy mode every same-position pair is processed (no skip
    criteria) and nothing is discarded, so the trackers of the zero
    reductions generate the syzygy module of the inputs.
    """
    budget = Budget(limit)
    mkey = module_key(order)
    items: list[_Item] = []
    syzygies: list[ModVec] = []
    one = mono_one(nvars)
    for i, g in enumerate(gens):
        trk = {(i, one): Fraction(1)} if want_syzygies else None
        if not g:
            if want_syzygies:
                syzygies.append(trk)
            continue
        items.append(_make_monic(dict(g), trk, mkey))

    heap: list = []

    def push_pairs(new_index: int):
        it = items[new_index]
        for j in range(new_index):
            jt = items[j]
            if jt.lt[0] != it.lt[0]:
                continue
            lcm = mono_lcm(jt.lt[1], it.lt[1])
            heapq.heappush(heap, (mkey((it.lt[0], lcm)), j, new_index))

    for i in range(len(items)):
        push_pairs(i)

    while heap:
        _, i, j = heapq.heappop(heap)
        a, b = items[i], items[j]
        lcm = mono_lcm(a.lt[1], b.lt[1])
        if not want_syzygies and lcm == mono_mul(a.lt[1], b.lt[1]):
            continue  # coprime leading monomials: S-pair reduces to zero
        ua = mono_div(lcm, a.lt[1])
        ub = mono_div(lcm, b.lt[1])
        shifted = {(pos, mono_mul(m, ua)): c for (pos, m), c in a.vec.items()}
        svec = _sub_scaled(shifted, b.vec, Fraction(1), ub)
        strk = None
        if want_syzygies:
            shifted_trk = {(pos, mono_mul(m, ua)): c for (pos, m), c in a.trk.items()}
            strk = _sub_scaled(shifted_trk, b.trk, Fraction(1), ub)
        svec, strk = _top_reduce(svec, strk, items, mkey, budget)
        if not svec:
            if want_syzygies and strk:
                syzygies.append(strk)
            continue
        items.append(_make_monic(svec, strk, mkey))
        push_pairs(len(items) - 1)

    return items, syzygies, budget, mkey


# -- public module operations ------------------------------------------


@dataclass(frozen=True)
class ModuleGroebnerBasis:
    """Reduced Groebner basis of a submodule of A^rank, A = Q[x]/(f).

    The row relations f*e_i are part of the generating data, so
    membership tests classes of elements over A.
    """

    ring: Ring
    rank: int
    hypersurface: Polynomial | None
    order: MonomialOrder
    elements: tuple[FreeModuleElement, ...]

    def _items(self):
        mkey = module_key(self.order)
        return [_make_monic(_to_vec(e), None, mkey) for e in self.elements]

    def normal_form(self, elt: FreeModuleElement, limit: int | None = None) -> FreeModuleElement:
        if elt.rank != self.rank:
            raise ValueError("rank mismatch")
        mkey = module_key(self.order)
        r = _normal_form_vec(_to_vec(elt), self._items(), mkey, Budget(limit))
        return _from_vec(self.ring, self.rank, r)

    def membership(self, elt: FreeModuleElement, limit: int | None = None) -> bool:
        return self.normal_form(elt, limit).is_zero()

    def contains_all(self, elts, limit: int | None = None) -> bool:
        return all(self.membership(e, limit) for e in elts)


def _lifted_gens(
    gens: Sequence[FreeModuleElement],
    f: Polynomial | None,
    rank: int,
) -> list[ModVec]:
    vecs = [_to_vec(g) for g in gens]
    if f is not None and not f.is_zero():
        for i in range(rank):
            vecs.append(_poly_to_vec(f, i))
    return vecs


def module_groebner(
    gens: Sequence[FreeModuleElement],
    f: Polynomial | None = None,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
    rank: int | None = None,
    ring: Ring | None = None,
) -> ModuleGroebnerBasis:
    """Reduced module Groebner basis over A = Q[x]/(f) (f zero or None
    for the plain polynomial ring), with the row relations appended."""
    gens = list(gens)
    if gens:
        ranks = {g.rank for g in gens}
        if len(ranks) != 1:
            raise ValueError("rank mismatch among generators")
        rank = ranks.pop()
        ring = gens[0].ring
    else:
        if ring is None and f is not None:
            ring = f.ring
        if rank is None or ring is None:
            raise ValueError("empty generator list needs explicit rank and ring")
    if f is not None and not f.is_zero() and f.ring != ring:
        raise ValueError("hypersurface equation from a different ring")
    fpoly = None if f is None or f.is_zero() else f
    vecs = _lifted_gens(gens, fpoly, rank)
    if not vecs:
        return ModuleGroebnerBasis(ring, rank, None, order, ())
    items, _, budget, mkey = _engine(vecs, ring.nvars, order, limit, want_syzygies=False)
    reduced = _interreduce(items, mkey, budget)
    elements = tuple(_from_vec(ring, rank, it.vec) for it in reduced)
    return ModuleGroebnerBasis(ring, rank, fpoly, order, elements)


def module_syzygies(
    gens: Sequence[FreeModuleElement],
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> list[FreeModuleElement]:
    """Generators of the syzygy module of the inputs, in R^len(gens)."""
    gens = list(gens)
    if not gens:
        return []
    ranks = {g.rank for g in gens}
    if len(ranks) != 1:
        raise ValueError("rank mismatch among generators")
    ring = gens[0].ring
    vecs = [_to_vec(g) for g in gens]
    _, syz, _, _ = _engine(vecs, ring.nvars, order, limit, want_syzygies=True)
    n = len(gens)
    return [_from_vec(ring, n, s) for s in syz]


def module_kernel(
    matrix: Sequence[Sequence[Polynomial]],
    f: Polynomial | None = None,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> list[FreeModuleElement]:
    """Generators of the kernel of the A-linear map with the given
    matrix (target rank = rows, source rank = columns), A = Q[x]/(f).

    Computed as syzygies of the columns together with the row relations
    f*e_i, projected to the source coordinates.  Every returned
    generator is re-checked to map to 0 modulo f.
    """
    k_t = len(matrix)
    if k_t == 0:
        raise ValueError("matrix needs at least one row")
    widths = {len(row) for row in matrix}
    if len(widths) != 1:
        raise ValueError("ragged matrix")
    k_s = widths.pop()
    if k_s == 0:
        raise ValueError("matrix needs at least one column")
    ring = matrix[0][0].ring
    cols = [
        FreeModuleElement(tuple(matrix[i][j] for i in range(k_t)))
        for j in range(k_s)
    ]
    vecs = [_to_vec(c) for c in cols]
    if f is not None and not f.is_zero():
        for i in range(k_t):
            vecs.append(_poly_to_vec(f, i))
    _, syz, _, _ = _engine(vecs, ring.nvars, order, limit, want_syzygies=True)
    out: list[FreeModuleElement] = []
    seen = set()
    for s in syz:
        v = {(pos, m): c for (pos, m), c in s.items() if pos < k_s}
        if not v:
            continue
        elt = _from_vec(ring, k_s, v)
        key = tuple(tuple(sorted(p.terms.items())) for p in elt.components)
        if key in seen:
            continue
        seen.add(key)
        out.append(elt)
    for v in out:
        image = [ring.zero()] * k_t
        for j, p in enumerate(v.components):
            for i in range(k_t):
                image[i] = image[i] + matrix[i][j] * p
        for entry in image:
            if not _poly_mod_f(entry, f).is_zero():
                raise AssertionError("kernel generator does not map to zero mod f")
    return out


def _poly_mod_f(p: Polynomial, f: Polynomial | None, order: MonomialOrder = GREVLEX) -> Polynomial:
    if f is None or f.is_zero():
        return p
    mkey = module_key(order)
    item = _make_monic(_poly_to_vec(f, 0), None, mkey)
    r = _normal_form_vec(_poly_to_vec(p, 0), [item], mkey, Budget())
    return _vec_extract(r, 0, p.ring)


def module_intersection(
    a_gens: Sequence[FreeModuleElement],
    b_gens: Sequence[FreeModuleElement],
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> list[FreeModuleElement]:
    """Generators of the intersection of two submodules of one free module."""
    a_gens = [g for g in a_gens if not g.is_zero()]
    b_gens = [g for g in b_gens if not g.is_zero()]
    if not a_gens or not b_gens:
        return []
    rank = a_gens[0].rank
    ring = a_gens[0].ring
    syz = module_syzygies(list(a_gens) + list(b_gens), order, limit)
    out = []
    for s in syz:
        acc = [ring.zero()] * rank
        for i, g in enumerate(a_gens):
            coeff = s.components[i]
            if coeff.is_zero():
                continue
            for pos in range(rank):
                acc[pos] = acc[pos] + g.components[pos] * coeff
        elt = FreeModuleElement(tuple(acc))
        if not elt.is_zero():
            out.append(elt)
    return out


def module_colon(
    u_gens: Sequence[FreeModuleElement],
    g: Polynomial,
    rank: int,
    ring: Ring,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> list[FreeModuleElement]:
    """Generators of (U : g) = {v in F : g*v in U}."""
    if g.is_zero():
        return [unit_vector(ring, rank, i) for i in range(rank)]
    if g.is_constant():
        return list(u_gens)
    scaled = [unit_vector(ring, rank, i).scale(g) for i in range(rank)]
    syz = module_syzygies(scaled + [u for u in u_gens if not u.is_zero()], order, limit)
    out = []
    seen = set()
    for s in syz:
        comps = s.components[:rank]
        elt = FreeModuleElement(tuple(comps))
        if elt.is_zero():
            continue
        key = tuple(tuple(sorted(p.terms.items())) for p in comps)
        if key not in seen:
            seen.add(key)
            out.append(elt)
    return out


def _minimalized(
    gens: Sequence[FreeModuleElement],
    rank: int,
    ring: Ring,
    order: MonomialOrder,
    limit: int | None,
) -> tuple[ModuleGroebnerBasis, list[FreeModuleElement]]:
    gb = module_groebner(list(gens), None, order, limit, rank=rank, ring=ring)
    return gb, list(gb.elements)


def module_saturation_gens(
    u_gens: Sequence[FreeModuleElement],
    ideal_gens: Sequence[Polynomial],
    rank: int,
    ring: Ring,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> list[FreeModuleElement]:
    """Generators of (U : J^infinity), by iterating module quotients
    until stable.

    Saturating at J = (g_1, ..., g_t) equals intersecting the
    saturations at the single elements g_a: a power of J multiplied into
    an element lands in U exactly when a power of each generator does.
    Generator sets are replaced by their reduced Groebner bases between
    steps to keep the quotients small.
    """
    js = [g for g in ideal_gens if not g.is_zero()]
    if not js:
        raise ValueError("saturation requires a nonzero ideal")
    _, base = _minimalized([g for g in u_gens if not g.is_zero()], rank, ring, order, limit)

    pieces: list[list[FreeModuleElement]] = []
    for g in js:
        cur = base
        while True:
            nxt = module_colon(cur, g, rank, ring, order, limit)
            gb_cur, cur_min = _minimalized(cur, rank, ring, order, limit)
            if gb_cur.contains_all(nxt, limit):
                cur = cur_min
                break
            _, cur = _minimalized(cur_min + nxt, rank, ring, order, limit)
        pieces.append(cur)

    result = pieces[0]
    for piece in pieces[1:]:
        meet = module_intersection(result, piece, order, limit)
        _, result = _minimalized(meet, rank, ring, order, limit)
    return result


# -- presentations ------------------------------------------------------


@dataclass(frozen=True)
class ModulePresentation:
    """A subquotient S/D of a free module A^rank, A = Q[x]/(f).

    `generators` span the submodule S, `relations` span D inside S.  The
    hypersurface equation may be the zero polynomial, in which case the
    base ring is the plain polynomial ring.
    """

    ring: Ring
    hypersurface: Polynomial
    rank: int
    generators: tuple[FreeModuleElement, ...]
    relations: tuple[FreeModuleElement, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        for g in self.generators + self.relations:
            if g.rank != self.rank:
                raise ValueError("rank mismatch in presentation")

    @property
    def f(self) -> Polynomial:
        return self.hypersurface

    def _f_or_none(self):
        return None if self.hypersurface.is_zero() else self.hypersurface

    def generator_gb(self, order: MonomialOrder = GREVLEX, limit: int | None = None) -> ModuleGroebnerBasis:
        key = ("S", order)
        if key not in self._cache:
            self._cache[key] = module_groebner(
                list(self.generators), self._f_or_none(), order, limit,
                rank=self.rank, ring=self.ring,
            )
        return self._cache[key]

    def relation_gb(self, order: MonomialOrder = GREVLEX, limit: int | None = None) -> ModuleGroebnerBasis:
        key = ("D", order)
        if key not in self._cache:
            self._cache[key] = module_groebner(
                list(self.relations), self._f_or_none(), order, limit,
                rank=self.rank, ring=self.ring,
            )
        return self._cache[key]

    def validate(self, order: MonomialOrder = GREVLEX, limit: int | None = None) -> None:
        """Check the D subset-of S invariant by normal-form reduction."""
        gb = self.generator_gb(order, limit)
        for rel in self.relations:
            if not gb.membership(rel, limit):
                raise ValueError("relation outside the generated submodule")

    def is_ambient(self, order: MonomialOrder = GREVLEX, limit: int | None = None) -> bool:
        """True when S is all of the ambient free module."""
        gb = self.generator_gb(order, limit)
        return all(
            gb.membership(unit_vector(self.ring, self.rank, i), limit)
            for i in range(self.rank)
        )

    def is_zero_module(self, order: MonomialOrder = GREVLEX, limit: int | None = None) -> bool:
        """True when every generator lies in the relation submodule."""
        gb = self.relation_gb(order, limit)
        return gb.contains_all(self.generators, limit)


def ambient_presentation(ring: Ring, f: Polynomial, rank: int,
                         relations: Sequence[FreeModuleElement] = ()) -> ModulePresentation:
    gens = tuple(unit_vector(ring, rank, i) for i in range(rank))
    return ModulePresentation(ring, f, rank, gens, tuple(relations))


def _require_graded(pres: ModulePresentation) -> None:
    if not pres.hypersurface.is_zero() and not pres.hypersurface.is_homogeneous():
        raise HomogeneityError("graded engine requires homogeneous data")
    for v in pres.generators + pres.relations:
        if not v.is_homogeneous():
            raise HomogeneityError("graded engine requires homogeneous data")


def minimal_generators(
    pres: ModulePresentation,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Number and degrees of a minimal homogeneous generating set of the
    module localized at the irrelevant maximal ideal.

    Graded Nakayama: the count is dim_Q of S/(D + m*S).  A monomial of
    the leading-term module of S that properly divides into S stays in
    D + m*S, so only the minimal leading monomials of S can survive;
    each survives exactly when it avoids the leading-term module of
    D + m*S.
    """
    _require_graded(pres)
    ring = pres.ring
    f = pres._f_or_none()
    gb_s = pres.generator_gb(order, limit)
    key = ("nakayama", order)
    if key not in pres._cache:
        u_inputs: list[FreeModuleElement] = list(pres.relations)
        for g in pres.generators:
            for i in range(ring.nvars):
                u_inputs.append(g.scale(ring.variable(i)))
        gb_u = module_groebner(u_inputs, f, order, limit, rank=pres.rank, ring=ring)
        pres._cache[key] = gb_u
    gb_u = pres._cache[key]
    mkey = module_key(order)
    u_leads = [(max(_to_vec(e), key=mkey)) for e in gb_u.elements]
    survivors = []
    for e in gb_s.elements:
        lt = max(_to_vec(e), key=mkey)
        pos, mono = lt
        if any(lp == pos and mono_divides(lm, mono) for lp, lm in u_leads):
            continue
        survivors.append(lt)
    degrees = tuple(sorted(ring.degree_of(m) for _, m in survivors))
    return len(survivors), degrees


def _monomials_of_degree(ring: Ring, d: int):
    """All exponent tuples of (weighted) degree exactly d."""
    weights = ring.weights or (1,) * ring.nvars
    n = ring.nvars

    def rec(i: int, remaining: int, prefix: tuple):
        if i == n - 1:
            if remaining % weights[i] == 0:
                yield prefix + (remaining // weights[i],)
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            yield from rec(i + 1, remaining - e * w, prefix + (e,))

    yield from rec(0, d, ())


def _lead_terms(gb: ModuleGroebnerBasis, order: MonomialOrder) -> list[ModTerm]:
    mkey = module_key(order)
    return [max(_to_vec(e), key=mkey) for e in gb.elements]


def _in_lt_module(term: ModTerm, leads: list[ModTerm]) -> bool:
    pos, mono = term
    return any(lp == pos and mono_divides(lm, mono) for lp, lm in leads)


def graded_dimensions(
    pres: ModulePresentation,
    max_degree: int,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> tuple[int, ...]:
    """Vector-space dimensions of S/D in internal degrees 0..max_degree."""
    _require_graded(pres)
    s_leads = _lead_terms(pres.generator_gb(order, limit), order)
    u_leads = _lead_terms(pres.relation_gb(order, limit), order)
    dims = []
    for d in range(max_degree + 1):
        count = 0
        for mono in _monomials_of_degree(pres.ring, d):
            for pos in range(pres.rank):
                t = (pos, mono)
                if _in_lt_module(t, s_leads) and not _in_lt_module(t, u_leads):
                    count += 1
        dims.append(count)
    return tuple(dims)


def total_dimension(
    pres: ModulePresentation,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> int | None:
    """Total vector-space dimension of S/D, or None when infinite.

    Finiteness test: for each minimal leading monomial g of S, the
    monomial colon (lt(D) : g) must contain a pure power of every
    variable; otherwise infinitely many multiples of g survive.
    """
    _require_graded(pres)
    s_leads = _lead_terms(pres.generator_gb(order, limit), order)
    u_leads = _lead_terms(pres.relation_gb(order, limit), order)
    nvars = pres.ring.nvars
    max_gen_degree = 0
    for pos, mono in s_leads:
        if _in_lt_module((pos, mono), u_leads):
            continue
        max_gen_degree = max(max_gen_degree, pres.ring.degree_of(mono))
        colon = [
            mono_div(mono_lcm(um, mono), mono)
            for up, um in u_leads
            if up == pos
        ]
        for var in range(nvars):
            if not any(
                all(e == 0 for k, e in enumerate(q) if k != var) for q in colon
            ):
                return None
    total = 0
    d = 0
    while True:
        dim_d = 0
        for mono in _monomials_of_degree(pres.ring, d):
            for pos in range(pres.rank):
                t = (pos, mono)
                if _in_lt_module(t, s_leads) and not _in_lt_module(t, u_leads):
                    dim_d += 1
        total += dim_d
        if d >= max_gen_degree and dim_d == 0:
            return total
        d += 1


def module_saturation(
    pres: ModulePresentation,
    ideal_gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> ModulePresentation:
    """The submodule of S/D annihilated by a power of the ideal, as a
    presentation with the same ambient data."""
    ring = pres.ring
    f = pres._f_or_none()
    u_lift = list(pres.relations)
    if f is not None:
        for i in range(pres.rank):
            u_lift.append(unit_vector(ring, pres.rank, i).scale(f))
    sat = module_saturation_gens(u_lift, ideal_gens, pres.rank, ring, order, limit)
    if not pres.is_ambient(order, limit):
        gb_s = pres.generator_gb(order, limit)
        s_lift = list(gb_s.elements)
        sat = module_intersection(sat, s_lift, order, limit)
    return ModulePresentation(ring, pres.hypersurface, pres.rank, tuple(sat), pres.relations)
