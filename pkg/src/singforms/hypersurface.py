"""Geometric verdicts for a hypersurface singularity at the origin.

Assembles the singular-locus codimension, normality, the torsion and
cotorsion tables, corank profiles, and freeness verdicts for three
flavors of differential forms (full, modulo torsion, reflexive).  The
smoothness criteria are applied as consistency checks against the
computed freeness data, never as shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import HomogeneityError, NonReducedError
from .groebner import Ideal, jacobian_ideal
from .koszul import (
    KoszulComplex,
    build_koszul,
    kahler_presentation,
    reflexive_presentation,
    tjurina_dimension,
    vanishing_pattern,
)
from .modules import ModulePresentation, minimal_generators
from .orders import GREVLEX
from .poly import Polynomial


@dataclass(frozen=True)
class FreenessVerdict:
    """Freeness decision for one sheaf of forms at one degree.

    The module in question is torsion-free, so it is free exactly when
    its graded minimal-generator count at the origin equals its rank at
    smooth points.
    """

    label: str
    p: int
    free: bool
    min_gens: int
    generic_rank: int
    rationale: str

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "p": self.p,
            "free": self.free,
            "min_gens": self.min_gens,
            "generic_rank": self.generic_rank,
            "rationale": self.rationale,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "FreenessVerdict":
        return cls(
            d["label"], d["p"], d["free"], d["min_gens"], d["generic_rank"], d["rationale"]
        )


@dataclass(frozen=True)
class TheoremCheck:
    rule: str
    applicable: bool
    status: str
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "applicable": self.applicable,
            "status": self.status,
            "detail": self.detail,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TheoremCheck":
        return cls(d["rule"], d["applicable"], d["status"], d["detail"])


def _validate_hypersurface(f: Polynomial) -> None:
    if f.ring.nvars < 2:
        raise ValueError("need >= 2 variables")
    if f.is_zero() or f.is_constant():
        raise ValueError("hypersurface equation must be non-constant")
    if not f.is_homogeneous():
        raise HomogeneityError(
            "hypersurface equation must be homogeneous for the declared weights"
        )


def singular_locus_codim(f: Polynomial, limit: int | None = None) -> int | None:
    """Codimension in the hypersurface of its singular locus, or None
    when the hypersurface is smooth (empty singular ideal variety)."""
    _validate_hypersurface(f)
    n = f.ring.nvars - 1
    dim = jacobian_ideal(f).dimension(limit)
    if dim == -1:
        return None
    return n - dim


def is_reduced(f: Polynomial, limit: int | None = None) -> bool:
    """Squarefree test: (f) must equal its saturation at the ideal of
    the partial derivatives."""
    _validate_hypersurface(f)
    principal = Ideal(f.ring, (f,))
    partials = Ideal(f.ring, f.gradient())
    sat = principal.saturation(partials, GREVLEX, limit)
    return all(principal.contains(g, GREVLEX, limit) for g in sat.generators)


def normality_check(f: Polynomial, limit: int | None = None) -> bool:
    """Normal if and only if regular in codimension one: smooth, or the
    singular locus has codimension at least 2 (hypersurfaces satisfy
    Serre's condition S2)."""
    if not is_reduced(f, limit):
        raise NonReducedError("hypersurface equation has a repeated factor")
    d = singular_locus_codim(f, limit)
    return d is None or d >= 2


def embedding_dimension(f: Polynomial) -> int:
    """Embedding dimension at the origin: ambient dimension minus the
    rank of the Jacobian row evaluated at 0."""
    m = f.ring.nvars
    jac_rank = 1 if any(p.constant_term != 0 for p in f.gradient()) else 0
    return m - jac_rank


def corank_profile(f: Polynomial, p: int) -> tuple[int, int]:
    """(corank at the origin, generic corank) of the p-forms: binomials
    of the embedding dimension and of the hypersurface dimension."""
    _validate_hypersurface(f)
    n = f.ring.nvars - 1
    if not 1 <= p <= n + 1:
        raise ValueError(f"form degree out of range: {p}")
    e = embedding_dimension(f)
    return comb(e, p), comb(n, p)


@dataclass(frozen=True, eq=True)
class SingularityReport:
    variables: tuple[str, ...]
    weights: tuple[int, ...] | None
    f_text: str
    n: int
    ambient_dim: int
    d: int | None
    normal: bool
    embedding_dim: int
    tor_nonzero: tuple[bool, ...]
    cotor_nonzero: tuple[bool, ...]
    tjurina: int | None
    p_list: tuple[int, ...]
    corank_profiles: tuple[tuple[int, int, int], ...]
    reflexive: tuple[FreenessVerdict, ...]
    modulo_torsion: tuple[FreenessVerdict, ...]
    kahler: tuple[FreenessVerdict, ...]
    checks: tuple[TheoremCheck, ...]

    @property
    def smooth(self) -> bool:
        return self.d is None

    def reflexive_verdict(self, p: int) -> FreenessVerdict | None:
        for v in self.reflexive:
            if v.p == p:
                return v
        return None

    def kahler_verdict(self, p: int) -> FreenessVerdict | None:
        for v in self.kahler:
            if v.p == p:
                return v
        return None

    def modulo_torsion_verdict(self, p: int) -> FreenessVerdict | None:
        for v in self.modulo_torsion:
            if v.p == p:
                return v
        return None

    def to_json_dict(self) -> dict:
        return {
            "kind": "hypersurface_report",
            "vars": list(self.variables),
            "weights": list(self.weights) if self.weights else None,
            "f": self.f_text,
            "n": self.n,
            "ambient_dim": self.ambient_dim,
            "d": self.d if self.d is not None else "smooth",
            "normal": self.normal,
            "embedding_dim": self.embedding_dim,
            "tor_nonzero": list(self.tor_nonzero),
            "cotor_nonzero": list(self.cotor_nonzero),
            "tjurina": self.tjurina if self.tjurina is not None else "infinite",
            "p_list": list(self.p_list),
            "corank_profiles": [list(t) for t in self.corank_profiles],
            "reflexive": [v.to_json_dict() for v in self.reflexive],
            "modulo_torsion": [v.to_json_dict() for v in self.modulo_torsion],
            "kahler": [v.to_json_dict() for v in self.kahler],
            "checks": [c.to_json_dict() for c in self.checks],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SingularityReport":
        return cls(
            variables=tuple(d["vars"]),
            weights=tuple(d["weights"]) if d.get("weights") else None,
            f_text=d["f"],
            n=d["n"],
            ambient_dim=d["ambient_dim"],
            d=None if d["d"] == "smooth" else d["d"],
            normal=d["normal"],
            embedding_dim=d["embedding_dim"],
            tor_nonzero=tuple(d["tor_nonzero"]),
            cotor_nonzero=tuple(d["cotor_nonzero"]),
            tjurina=None if d["tjurina"] == "infinite" else d["tjurina"],
            p_list=tuple(d["p_list"]),
            corank_profiles=tuple(tuple(t) for t in d["corank_profiles"]),
            reflexive=tuple(FreenessVerdict.from_json_dict(v) for v in d["reflexive"]),
            modulo_torsion=tuple(
                FreenessVerdict.from_json_dict(v) for v in d["modulo_torsion"]
            ),
            kahler=tuple(FreenessVerdict.from_json_dict(v) for v in d["kahler"]),
            checks=tuple(TheoremCheck.from_json_dict(c) for c in d["checks"]),
        )

    def table_text(self) -> str:
        """Fixed-width table: columns p = 0..n+1, rows tor and cotor."""
        cols = list(range(self.n + 2))
        cells_tor = ["≠0" if nz else "0" for nz in self.tor_nonzero]
        cells_cotor = ["≠0" if nz else "0" for nz in self.cotor_nonzero]
        width = 5
        header = "p".ljust(7) + "".join(str(p).rjust(width) for p in cols)
        row_t = "tor".ljust(7) + "".join(c.rjust(width) for c in cells_tor)
        row_c = "cotor".ljust(7) + "".join(c.rjust(width) for c in cells_cotor)
        return "\n".join([header, row_t, row_c])


def _count_generators(pres: ModulePresentation, limit: int | None) -> int:
    count, _ = minimal_generators(pres, GREVLEX, limit)
    return count


def analyze_hypersurface(
    f: Polynomial,
    p_list=None,
    degree_prefix: int = 8,
    limit: int | None = None,
) -> SingularityReport:
    """Full report for a reduced (weighted-)homogeneous hypersurface.

    Freeness verdicts are computed from module presentations via graded
    minimal-generator counts; for weighted gradings the counts are not
    available (position shifts are untracked) and the freeness blocks
    are left empty.
    """
    _validate_hypersurface(f)
    normal = normality_check(f, limit)  # raises NonReducedError when appropriate
    d = singular_locus_codim(f, limit)
    ring = f.ring
    n = ring.nvars - 1
    e = embedding_dimension(f)
    K = build_koszul(f, limit)
    pattern = vanishing_pattern(K, limit)
    tjurina = tjurina_dimension(f, limit)
    if p_list is None:
        p_list = tuple(range(1, n + 1))
    else:
        p_list = tuple(sorted(set(int(p) for p in p_list)))
        for p in p_list:
            if not 1 <= p <= n + 1:
                raise ValueError(f"form degree out of range: {p}")

    corank_rows = tuple((p,) + corank_profile(f, p) for p in p_list)

    graded_ok = ring.weights is None or all(w == 1 for w in ring.weights)
    reflexive = []
    modulo_torsion = []
    kahler = []
    if graded_ok:
        for p in p_list:
            if p <= n:
                pres = reflexive_presentation(K, p, limit)
                count = _count_generators(pres, limit)
                reflexive.append(
                    FreenessVerdict(
                        "reflexive", p, count == comb(n, p), count, comb(n, p),
                        "graded minimal generators vs rank at smooth points",
                    )
                )
                image = ModulePresentation(
                    ring, f, K.rank(p + 1), K.image_generators(p), ()
                )
                count_i = _count_generators(image, limit)
                modulo_torsion.append(
                    FreenessVerdict(
                        "modulo_torsion", p, count_i == comb(n, p), count_i, comb(n, p),
                        "graded minimal generators of the image module vs rank",
                    )
                )
            kp = kahler_presentation(K, p, limit)
            count_k = _count_generators(kp, limit)
            kahler.append(
                FreenessVerdict(
                    "kahler", p, count_k == comb(n, p), count_k, comb(n, p),
                    "corank at origin vs generic corank",
                )
            )

    checks = _theorem_checks(d, normal, n, e, reflexive, modulo_torsion, kahler)

    return SingularityReport(
        variables=ring.variables,
        weights=ring.weights,
        f_text=f.to_string(),
        n=n,
        ambient_dim=n + 1,
        d=d,
        normal=normal,
        embedding_dim=e,
        tor_nonzero=pattern.tor_nonzero,
        cotor_nonzero=pattern.cotor_nonzero,
        tjurina=tjurina,
        p_list=p_list,
        corank_profiles=corank_rows,
        reflexive=tuple(reflexive),
        modulo_torsion=tuple(modulo_torsion),
        kahler=tuple(kahler),
        checks=tuple(checks),
    )


def _theorem_checks(d, normal, n, e, reflexive, modulo_torsion, kahler):
    smooth = d is None
    checks = []

    if smooth:
        checks.append(
            TheoremCheck(
                "reflexive-free-implies-smooth", False, "not applicable",
                "hypersurface is smooth",
            )
        )
        checks.append(
            TheoremCheck(
                "torsion-free-forms-free-implies-smooth", False, "not applicable",
                "hypersurface is smooth",
            )
        )
        checks.append(
            TheoremCheck(
                "kahler-free-implies-smooth", False, "not applicable",
                "hypersurface is smooth",
            )
        )
        return checks

    # Freeness of reflexive p-forms, 1 <= p <= n-1, forces smoothness
    # when the singular locus has codimension at least three.
    if d is not None and d >= 3:
        bad = [v.p for v in reflexive if 1 <= v.p <= n - 1 and v.free]
        checks.append(
            TheoremCheck(
                "reflexive-free-implies-smooth", True,
                "CONTRADICTION" if bad else "consistent",
                f"free reflexive forms at p={bad} on a singular point" if bad
                else "no reflexive p-form sheaf is free for 1 <= p <= n-1",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "reflexive-free-implies-smooth", False, "not applicable",
                "singular locus has codimension < 3; no verdict attached",
            )
        )

    # Freeness of the forms modulo torsion, 1 <= p <= n, forces
    # smoothness for normal hypersurfaces.
    if normal:
        bad = [v.p for v in modulo_torsion if 1 <= v.p <= n and v.free]
        checks.append(
            TheoremCheck(
                "torsion-free-forms-free-implies-smooth", True,
                "CONTRADICTION" if bad else "consistent",
                f"free torsion-free forms at p={bad} on a singular point" if bad
                else "no torsion-free p-form sheaf is free for 1 <= p <= n",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "torsion-free-forms-free-implies-smooth", False, "not applicable",
                "hypersurface is not normal; no verdict attached",
            )
        )

    # Freeness of the full form module, 1 <= p <= e, forces smoothness
    # unconditionally.
    bad = [v.p for v in kahler if 1 <= v.p <= e and v.free]
    checks.append(
        TheoremCheck(
            "kahler-free-implies-smooth", True,
            "CONTRADICTION" if bad else "consistent",
            f"free form modules at p={bad} on a singular point" if bad
            else "no p-form module is free for 1 <= p <= e",
        )
    )
    return checks
