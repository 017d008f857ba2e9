"""The wedge-with-df complex of a hypersurface and its cohomology.

For f in m = n+1 variables the complex has free modules of rank C(m, p)
over A = Q[x]/(f) in degrees p = 0..n+1, with basis e_I indexed by the
p-element subsets I of {1..m} in lexicographic order.  The map out of
degree p sends e_I to sum_j (sign) df/dx_j e_{I+j}, where the sign is
(-1)^(number of i in I below j).  Degree-p cohomology is the kernel
modulo the image, realized as a ModulePresentation; it carries the
torsion of the p-forms of the hypersurface and the cotorsion of the
(p-1)-forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import HomogeneityError, SingFormsError
from .groebner import jacobian_ideal
from .matrices import matrix_rank_over_quotient
from .modules import (
    FreeModuleElement,
    ModulePresentation,
    ambient_presentation,
    graded_dimensions,
    minimal_generators,
    module_groebner,
    module_kernel,
    module_saturation,
    unit_vector,
)
from .orders import GREVLEX, MonomialOrder
from .poly import Polynomial, Ring


@dataclass(frozen=True)
class KoszulComplex:
    f: Polynomial
    n: int
    subsets: tuple[tuple[tuple[int, ...], ...], ...]
    maps: tuple[tuple[tuple[Polynomial, ...], ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @property
    def ambient_dim(self) -> int:
        return self.n + 1

    def rank(self, p: int) -> int:
        m = self.ambient_dim
        return comb(m, p) if 0 <= p <= m else 0

    def matrix(self, p: int):
        """The matrix of the degree-p map, or None outside 0..n."""
        if 0 <= p <= self.n:
            return self.maps[p]
        return None

    def image_generators(self, p: int) -> tuple[FreeModuleElement, ...]:
        """Columns of the degree-p map as elements of the degree-(p+1) module."""
        mat = self.matrix(p)
        if mat is None:
            return ()
        rows = len(mat)
        cols = len(mat[0])
        return tuple(
            FreeModuleElement(tuple(mat[i][j] for i in range(rows)))
            for j in range(cols)
        )

    def kernel_generators(self, p: int, limit: int | None = None) -> tuple[FreeModuleElement, ...]:
        """Generators of the kernel of the degree-p map over Q[x]/(f)."""
        key = ("ker", p)
        if key not in self._cache:
            mat = self.matrix(p)
            if mat is None:
                gens = tuple(
                    unit_vector(self.ring, self.rank(p), i) for i in range(self.rank(p))
                )
            else:
                gens = tuple(module_kernel(mat, self.f, GREVLEX, limit))
            self._cache[key] = gens
        return self._cache[key]


def build_koszul(f: Polynomial, limit: int | None = None) -> KoszulComplex:
    """Build the complex for a non-constant (weighted-)homogeneous f in
    at least two variables, and verify that consecutive maps compose to
    zero modulo f."""
    ring = f.ring
    m = ring.nvars
    if m < 2:
        raise ValueError("need >= 2 variables")
    if f.is_zero() or f.is_constant():
        raise ValueError("hypersurface equation must be non-constant")
    if not f.is_homogeneous():
        raise HomogeneityError(
            "hypersurface equation must be homogeneous for the declared weights"
        )
    n = m - 1
    partials = f.gradient()
    subsets = tuple(tuple(combinations(range(m), p)) for p in range(m + 1))
    maps = []
    for p in range(n + 1):
        src = subsets[p]
        tgt = subsets[p + 1]
        tgt_index = {I: i for i, I in enumerate(tgt)}
        rows = [[ring.zero()] * len(src) for _ in tgt]
        for cidx, I in enumerate(src):
            members = set(I)
            for j in range(m):
                if j in members:
                    continue
                sign = -1 if sum(1 for i in I if i < j) % 2 else 1
                entry = partials[j] if sign > 0 else -partials[j]
                rows[tgt_index[tuple(sorted(I + (j,)))]][cidx] = entry
        maps.append(tuple(tuple(r) for r in rows))
    K = KoszulComplex(f, n, subsets, tuple(maps))
    _verify_complex(K, limit)
    return K


def _verify_complex(K: KoszulComplex, limit: int | None = None) -> None:
    from .groebner import Ideal

    f_ideal = Ideal(K.ring, (K.f,))
    for p in range(K.n):
        src_rank = K.rank(p)
        mid_rank = K.rank(p + 1)
        tgt_rank = K.rank(p + 2)
        a, b = K.maps[p], K.maps[p + 1]
        for i in range(tgt_rank):
            for j in range(src_rank):
                entry = K.ring.zero()
                for k in range(mid_rank):
                    entry = entry + b[i][k] * a[k][j]
                if not f_ideal.normal_form(entry, limit=limit).is_zero():
                    raise SingFormsError("complex property failed: maps do not compose to zero")


@dataclass(frozen=True)
class CohomologyModule:
    p: int
    presentation: ModulePresentation
    is_zero: bool
    min_gen_count: int | None = None
    hilbert_prefix: tuple[int, ...] | None = None


def _cohomology_presentation(K: KoszulComplex, p: int, limit: int | None = None) -> ModulePresentation:
    gens = K.kernel_generators(p, limit)
    relations = K.image_generators(p - 1) if p >= 1 else ()
    return ModulePresentation(K.ring, K.f, K.rank(p), gens, relations)


def _cohomology_is_zero(K: KoszulComplex, p: int, limit: int | None = None) -> bool:
    key = ("h0", p)
    if key not in K._cache:
        pres = _cohomology_presentation(K, p, limit)
        K._cache[key] = pres.is_zero_module(GREVLEX, limit)
    return K._cache[key]


def koszul_cohomology(
    K: KoszulComplex,
    p: int,
    degree_prefix: int = 8,
    limit: int | None = None,
) -> CohomologyModule:
    """Degree-p cohomology with graded invariants (minimal generator
    count at the origin and vector-space dimensions in low degrees)."""
    if not 0 <= p <= K.n + 1:
        raise ValueError(f"cohomology degree out of range: {p}")
    pres = _cohomology_presentation(K, p, limit)
    is_zero = _cohomology_is_zero(K, p, limit)
    count, _ = minimal_generators(pres, GREVLEX, limit)
    prefix = graded_dimensions(pres, degree_prefix, GREVLEX, limit)
    return CohomologyModule(p, pres, is_zero, count, prefix)


@dataclass(frozen=True)
class VanishingPattern:
    n: int
    h_is_zero: tuple[bool, ...]

    @property
    def h_nonzero(self) -> tuple[bool, ...]:
        return tuple(not z for z in self.h_is_zero)

    @property
    def tor_nonzero(self) -> tuple[bool, ...]:
        """Torsion of the p-forms is nonzero exactly when H^p is."""
        return self.h_nonzero

    @property
    def cotor_nonzero(self) -> tuple[bool, ...]:
        """Cotorsion of the p-forms is nonzero exactly when H^(p+1) is."""
        nz = self.h_nonzero
        return tuple(nz[p + 1] if p + 1 <= self.n + 1 else False for p in range(self.n + 2))

    def nonvanishing_degrees(self) -> tuple[int, ...]:
        return tuple(p for p, nz in enumerate(self.h_nonzero) if nz)


def _as_complex(f_or_K, limit: int | None = None) -> KoszulComplex:
    if isinstance(f_or_K, KoszulComplex):
        return f_or_K
    return build_koszul(f_or_K, limit)


def vanishing_pattern(f_or_K, limit: int | None = None) -> VanishingPattern:
    """Zero/nonzero for every cohomology degree 0..n+1, plus the derived
    torsion and cotorsion tables."""
    K = _as_complex(f_or_K, limit)
    flags = tuple(_cohomology_is_zero(K, p, limit) for p in range(K.n + 2))
    return VanishingPattern(K.n, flags)


def tjurina_dimension(f: Polynomial, limit: int | None = None) -> int | None:
    """Vector-space dimension of Q[x]/(f, df), or None when infinite."""
    ring = f.ring
    if ring.nvars < 2:
        raise ValueError("need >= 2 variables")
    if f.is_zero() or f.is_constant():
        raise ValueError("hypersurface equation must be non-constant")
    if not f.is_homogeneous():
        raise HomogeneityError(
            "hypersurface equation must be homogeneous for the declared weights"
        )
    return jacobian_ideal(f).vector_space_dimension(limit)


def reflexive_presentation(f_or_K, p: int, limit: int | None = None) -> ModulePresentation:
    """The reflexive p-forms as the kernel of the degree-(p+1) map, a
    submodule of the free module of rank C(n+1, p+1); the generic rank
    is verified to equal C(n, p)."""
    K = _as_complex(f_or_K, limit)
    n = K.n
    if not 0 <= p <= n:
        raise ValueError(f"form degree out of range: {p}")
    rank = K.rank(p + 1)
    gens = K.kernel_generators(p + 1, limit)
    pres = ModulePresentation(K.ring, K.f, rank, gens, ())
    mat = K.matrix(p + 1)
    map_rank = 0 if mat is None else matrix_rank_over_quotient(mat, K.f, GREVLEX, limit)
    if rank - map_rank != comb(n, p):
        raise SingFormsError(
            f"generic rank {rank - map_rank} differs from expected {comb(n, p)}"
        )
    return pres


def kahler_presentation(f_or_K, p: int, limit: int | None = None) -> ModulePresentation:
    """The p-forms of the hypersurface: the full free module of rank
    C(n+1, p) modulo the columns of the degree-(p-1) map."""
    K = _as_complex(f_or_K, limit)
    if not 1 <= p <= K.n + 1:
        raise ValueError(f"form degree out of range: {p}")
    return ambient_presentation(K.ring, K.f, K.rank(p), K.image_generators(p - 1))


@dataclass(frozen=True)
class TorsionOracleReport:
    p: int
    torsion: ModulePresentation
    kernel_image_generators: tuple[FreeModuleElement, ...]
    saturation_in_kernel_image: bool
    kernel_image_in_saturation: bool
    min_gen_count: int

    @property
    def equal(self) -> bool:
        return self.saturation_in_kernel_image and self.kernel_image_in_saturation


def torsion_oracle(f_or_K, p: int, limit: int | None = None) -> TorsionOracleReport:
    """Two independent computations of the torsion of the p-forms:
    saturation of the form module at the singular-locus ideal, and the
    image of the degree-p kernel.  Reports mutual containment and the
    common graded minimal-generator count."""
    K = _as_complex(f_or_K, limit)
    if not 1 <= p <= K.n + 1:
        raise ValueError(f"form degree out of range: {p}")
    kp = kahler_presentation(K, p, limit)
    support = jacobian_ideal(K.f).groebner_basis(GREVLEX, limit)
    torsion = module_saturation(kp, list(support), GREVLEX, limit)
    ker = K.kernel_generators(p, limit)
    relations = list(kp.relations)
    gb_torsion = torsion.generator_gb(GREVLEX, limit)
    gb_kernel_image = module_groebner(
        list(ker) + relations, K.f, GREVLEX, limit, rank=kp.rank, ring=K.ring
    )
    sat_in_ker = gb_kernel_image.contains_all(torsion.generators, limit)
    ker_in_sat = gb_torsion.contains_all(ker, limit)
    count, _ = minimal_generators(torsion, GREVLEX, limit)
    return TorsionOracleReport(p, torsion, tuple(ker), sat_in_ker, ker_in_sat, count)
