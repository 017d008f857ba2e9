"""Cyclic quotient singularity combinatorics.

A type 1/r(a_1, ..., a_n) encodes the diagonal action of the r-th roots
of unity on affine n-space with weights a_i.  Invariant p-forms are
generated by monomials x^m dx_I whose weight sum lies in a prescribed
residue class; the minimal monomials of each such fiber of the exponent
monoid give minimal generating sets, and freeness, terminality,
Gorenstein-ness and the classification of types with free forms in
degree n-1 are all decided from this data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb, gcd

from .errors import QuasiReflectionError
from .hypersurface import FreenessVerdict

Mono = tuple[int, ...]


@dataclass(frozen=True)
class QuotientType:
    r: int
    weights: tuple[int, ...]
    reduced_from: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    def __repr__(self):
        body = ",".join(str(a) for a in self.weights)
        return f"1/{self.r}({body})"


def validate_type(r: int, a) -> QuotientType:
    """Normalize to a faithful type (dividing out the kernel of the
    action) and reject non-small types with the offending group element."""
    a = tuple(int(x) for x in a)
    if r < 1:
        raise ValueError("group order must be positive")
    if len(a) < 1:
        raise ValueError("need at least one weight")
    a = tuple(x % r for x in a)
    original_r = r
    g = gcd(r, *a) if a else r
    if g > 1:
        r //= g
        a = tuple((x // g) % r for x in a)
    n = len(a)
    if r > 1:
        for k in range(1, r):
            moved = [i for i in range(n) if (k * a[i]) % r != 0]
            if len(moved) == 1:
                raise QuasiReflectionError(k, moved[0])
    reduced_from = original_r if original_r != r else None
    return QuotientType(r, a, reduced_from)


def subgroup_index_gcd(r: int, values) -> int:
    """The subgroup of Z/r generated by the values is the set of
    multiples of this gcd."""
    g = r
    for v in values:
        g = gcd(g, v % r)
    return g


def weights_generate(t: QuotientType, omit: int) -> bool:
    """Do the weights other than `omit` generate all of Z/r?"""
    return subgroup_index_gcd(t.r, (a for i, a in enumerate(t.weights) if i != omit)) == 1


@dataclass(frozen=True)
class SemigroupFiber:
    target: int
    minimal_elements: tuple[Mono, ...]


def _fiber_minima(r: int, weights: tuple[int, ...], target: int,
                  max_count: int | None = None) -> list[Mono]:
    """Minimal elements of {m : sum m_i a_i = target mod r} under the
    coordinatewise order.

    Lexicographic depth-first scan of {0..r-1}^n: any minimal element
    has coordinates below r (subtracting r from one coordinate stays in
    the fiber), a candidate found in lexicographic order is minimal iff
    it dominates no earlier find, and a branch whose prefix already
    dominates a find supported on the scanned coordinates is dead.
    """
    n = len(weights)
    suffix_g = [0] * (n + 1)
    suffix_g[n] = r
    for k in range(n - 1, -1, -1):
        suffix_g[k] = gcd(suffix_g[k + 1], weights[k] % r)
    found: list[Mono] = []

    def dfs(prefix: list[int], partial: int):
        if max_count is not None and len(found) >= max_count:
            return
        k = len(prefix)
        if k == n:
            if partial == target:
                for c in found:
                    if all(ci <= pi for ci, pi in zip(c, prefix)):
                        return
                found.append(tuple(prefix))
            return
        need = (target - partial) % r
        if suffix_g[k] and need % suffix_g[k] != 0:
            return
        for c in found:
            if all(c[i] == 0 for i in range(k, n)) and all(
                c[i] <= prefix[i] for i in range(k)
            ):
                return
        for v in range(r):
            dfs(prefix + [v], (partial + v * weights[k]) % r)

    dfs([], 0 % r)
    return found


def fiber_minimal_elements(t: QuotientType, c: int) -> SemigroupFiber:
    """The antichain of minimal monomials with weight sum c mod r."""
    c %= t.r
    minima = _fiber_minima(t.r, t.weights, c)
    return SemigroupFiber(c, tuple(sorted(minima)))


def fiber_least_element(t: QuotientType, c: int) -> Mono | None:
    """The least element of the fiber, when one exists; None otherwise.

    Coordinate i of a least element must be the minimum of coordinate i
    over the fiber, i.e. the least v such that c - v*a_i lies in the
    subgroup generated by the other weights (every nonnegative span of
    residues equals the subgroup they generate).  The fiber has a least
    element, equivalently a unique minimal element, iff the vector of
    coordinatewise minima lies in the fiber.
    """
    r = t.r
    c %= r
    if r == 1:
        return (0,) * t.n
    lows = []
    for i in range(t.n):
        g = subgroup_index_gcd(r, (a for j, a in enumerate(t.weights) if j != i))
        for v in range(r):
            if (c - v * t.weights[i]) % r % g == 0:
                lows.append(v)
                break
        else:
            return None
    if sum(v * a for v, a in zip(lows, t.weights)) % r == c:
        return tuple(lows)
    return None


@dataclass(frozen=True)
class InvariantFormBasis:
    p: int
    entries: tuple[tuple[tuple[int, ...], Mono], ...]

    def count(self) -> int:
        return len(self.entries)

    def render(self, names=None) -> list[str]:
        names = names or [f"x{i + 1}" for i in range(max(
            (max(I) + 1 for I, _ in self.entries if I), default=1))]
        out = []
        for I, m in self.entries:
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(m) if e > 0
            )
            form = "∧".join(f"d{names[i]}" for i in I) if I else "1"
            out.append(f"{mono}*{form}" if mono else form)
        return out


def invariant_form_generators(t: QuotientType, p: int) -> InvariantFormBasis:
    """Minimal generators of the invariant p-forms: for each index set I
    of size p, the minimal monomials of the fiber with target equal to
    minus the weight of dx_I."""
    if not 0 <= p <= t.n:
        raise ValueError(f"form degree out of range: {p}")
    entries = []
    for I in combinations(range(t.n), p):
        target = (-sum(t.weights[i] for i in I)) % t.r
        fiber = fiber_minimal_elements(t, target)
        for m in fiber.minimal_elements:
            entries.append((I, m))
    return InvariantFormBasis(p, tuple(entries))


def reflexive_freeness(t: QuotientType, p: int) -> FreenessVerdict:
    """Free iff the minimal-generator count equals the rank C(n, p) at
    smooth points."""
    basis = invariant_form_generators(t, p)
    count = basis.count()
    rank = comb(t.n, p)
    return FreenessVerdict(
        "reflexive", p, count == rank, count, rank,
        "invariant-form generator count vs rank at smooth points",
    )


def _is_free_fast(t: QuotientType, p: int) -> bool:
    """Exact freeness decision without enumerating fibers: every index
    set's fiber must have a unique minimal element, i.e. a least one."""
    for I in combinations(range(t.n), p):
        target = (-sum(t.weights[i] for i in I)) % t.r
        if fiber_least_element(t, target) is None:
            return False
    return True


def reid_tai_terminal(t: QuotientType) -> bool:
    """Age criterion: terminal iff every nontrivial group element k has
    sum of residues k*a_i mod r strictly greater than r."""
    r = t.r
    if r == 1:
        return True
    return all(
        sum((k * a) % r for a in t.weights) > r for k in range(1, r)
    )


def is_isolated(t: QuotientType) -> bool:
    """No nontrivial element fixes a coordinate: k*a_i nonzero for all
    k in 1..r-1 and all i."""
    r = t.r
    return all((k * a) % r != 0 for k in range(1, r) for a in t.weights)


def gorenstein_check(t: QuotientType) -> bool:
    """The canonical module is free of rank one iff the weight sum is
    divisible by r (the top-form fiber then has minimal element 0)."""
    return sum(t.weights) % t.r == 0


def canonical_type(t: QuotientType) -> QuotientType:
    """Lexicographically least sorted weight vector over all unit
    rescalings; idempotent."""
    r = t.r
    if r == 1:
        return QuotientType(1, (0,) * t.n)
    best = None
    for u in range(1, r):
        if gcd(u, r) != 1:
            continue
        cand = tuple(sorted((u * a) % r for a in t.weights))
        if best is None or cand < best:
            best = cand
    return QuotientType(r, best)


@dataclass(frozen=True)
class ClassifiedType:
    type: QuotientType
    generator_count: int
    terminal: bool
    isolated: bool
    gorenstein: bool

    def to_json_dict(self) -> dict:
        return {
            "r": self.type.r,
            "weights": list(self.type.weights),
            "generator_count": self.generator_count,
            "free_p": True,
            "terminal": self.terminal,
            "isolated": self.isolated,
            "gorenstein": self.gorenstein,
        }


def _classified(t: QuotientType, p: int) -> ClassifiedType:
    verdict = reflexive_freeness(t, p)
    if not verdict.free:
        raise AssertionError("classified type failed the exact freeness check")
    return ClassifiedType(
        t, verdict.min_gens, reid_tai_terminal(t), is_isolated(t), gorenstein_check(t)
    )


def classify_dimension(n: int, r_max: int) -> list[ClassifiedType]:
    """All canonical small faithful types with r <= r_max whose
    reflexive (n-1)-forms are free.

    Search-space note: freeness requires every generator fiber to have
    a least element.  For a small faithful type the weights omitting any
    one coordinate generate Z/r, so all coordinatewise fiber minima are
    zero and a least element exists only when the fiber target is zero
    (see fiber_least_element); all n targets vanish only when the
    weights are pairwise equal.  It therefore suffices to scan the types
    1/r(u, ..., u); each candidate is re-verified by the exact fiber
    enumeration.  classify_dimension_exhaustive performs the
    unrestricted scan and is compared against this routine in the test
    suite.
    """
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    p = n - 1
    out: dict[tuple, ClassifiedType] = {}
    trivial = QuotientType(1, (0,) * n)
    out[(1, trivial.weights)] = _classified(trivial, p)
    for r in range(2, r_max + 1):
        for u in range(1, r):
            if gcd(u, r) != 1:
                continue  # the faithful image of this action occurs at a smaller r
            if (p * u) % r != 0:
                continue  # some generator fiber has a nonzero target: not free
            t = validate_type(r, (u,) * n)
            canon = canonical_type(t)
            key = (canon.r, canon.weights)
            if key not in out:
                out[key] = _classified(canon, p)
    return sorted(out.values(), key=lambda c: (c.type.r, c.type.weights))


def classify_dimension_exhaustive(n: int, r_max: int) -> list[ClassifiedType]:
    """Reference classification: scan every canonical small faithful
    type, decide freeness from the fiber least-element criterion, and
    verify each hit by exact enumeration."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    p = n - 1
    out: dict[tuple, ClassifiedType] = {}
    trivial = QuotientType(1, (0,) * n)
    out[(1, trivial.weights)] = _classified(trivial, p)
    for r in range(2, r_max + 1):
        for a in combinations_with_replacement(range(r), n):
            if gcd(r, *a) != 1:
                continue
            try:
                t = validate_type(r, a)
            except QuasiReflectionError:
                continue
            if canonical_type(t).weights != t.weights:
                continue
            if not _is_free_fast(t, p):
                continue
            out[(t.r, t.weights)] = _classified(t, p)
    return sorted(out.values(), key=lambda c: (c.type.r, c.type.weights))
