"""Exact dense matrices: determinants, exterior powers, and the rank of
a polynomial matrix over Q[x]/(f)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .limits import Budget
from .modules import _make_monic, _normal_form_vec, _poly_to_vec, _vec_extract
from .orders import GREVLEX, MonomialOrder, module_key
from .poly import Polynomial


def det_fraction_free(matrix) -> Fraction:
    """Determinant by Bareiss elimination on a denominator-cleared
    integer copy; exact for any square rational matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(e) for e in row] for row in matrix]
    scale = Fraction(1)
    cleared = []
    for row in rows:
        den = 1
        for e in row:
            den = den * e.denominator // gcd(den, e.denominator)
        scale *= den
        cleared.append([int(e * den) for e in row])
    m = cleared
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], 1) / scale


def _minor(matrix, row_idx, col_idx) -> Fraction:
    sub = [[matrix[i][j] for j in col_idx] for i in row_idx]
    return det_fraction_free(sub)


def exterior_power_matrix(matrix, r: int):
    """The matrix of the r-th exterior power on the basis of r-element
    index subsets in lexicographic order; entries are r x r minors."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if not 1 <= r <= n:
        raise ValueError(f"exterior power degree out of range: r={r}, size={n}")
    subsets = list(combinations(range(n), r))
    return [
        [_minor(matrix, rows, cols) for cols in subsets]
        for rows in subsets
    ]


def matrix_rank_over_quotient(
    matrix,
    f: Polynomial | None,
    order: MonomialOrder = GREVLEX,
    limit: int | None = None,
) -> int:
    """Rank of a Polynomial matrix over the fraction field of Q[x]/(f).

    Fraction-free row elimination; every entry is normal-form reduced
    modulo f after each step and pivots are entries with nonzero normal
    form.  Exact whenever Q[x]/(f) is a domain; for reducible reduced f
    it reports the maximal componentwise rank.
    """
    if not matrix or not matrix[0]:
        return 0
    ring = matrix[0][0].ring
    mkey = module_key(order)
    budget = Budget(limit)
    reducer = None
    if f is not None and not f.is_zero():
        reducer = [_make_monic(_poly_to_vec(f, 0), None, mkey)]

    def nf(p: Polynomial) -> Polynomial:
        if reducer is None or p.is_zero():
            return p
        r = _normal_form_vec(_poly_to_vec(p, 0), reducer, mkey, budget)
        return _vec_extract(r, 0, ring)

    rows = [[nf(e) for e in row] for row in matrix]
    ncols = len(rows[0])
    rank = 0
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for i in range(pivot_row, len(rows)):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        pv = rows[pivot_row][col]
        for i in range(pivot_row + 1, len(rows)):
            entry = rows[i][col]
            if entry.is_zero():
                continue
            rows[i] = [nf(a * pv - b * entry) for a, b in zip(rows[i], rows[pivot_row])]
            rows[i] = [_strip_content(p) for p in rows[i]]
        rank += 1
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rank


def _strip_content(p: Polynomial) -> Polynomial:
    """Divide by the rational content to keep coefficients small."""
    if p.is_zero():
        return p
    num = 0
    den = 1
    for c in p.terms.values():
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Fraction(num, den)
    if content == 1:
        return p
    return Polynomial(p.ring, {m: c / content for m, c in p.terms.items()})
