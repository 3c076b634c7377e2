"""Exact rank computation: modular elimination, integer Bareiss, and
fraction-free elimination for polynomial matrices.

Every homology number in this package comes through one of these ranks, so
they are deliberately boring: no pivots by magnitude, no floats, no numpy.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InvariantViolation
from .fields import PrimeField


def rank_mod_p(rows, p: int) -> int:
    """Rank of a matrix of ints over F_p; `rows` is consumed."""
    rows = [[x % p for x in row] for row in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            f = rows[i][c]
            if f:
                f = (f * inv) % p
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_int_bareiss(rows) -> int:
    """Rank over Q of an integer matrix, by fraction-free Bareiss elimination."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (pv * ri[j] - f * rows[rank][j]) // prev
            ri[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _clear_denominators(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) if isinstance(x, Fraction) else x * den for x in row]


def rank(rows, field) -> int:
    """Rank of a matrix of field elements."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    if isinstance(field, PrimeField):
        return rank_mod_p(rows, field.p)
    return rank_int_bareiss([_clear_denominators(r) for r in rows])


def rank_poly(rows) -> int:
    """Rank of a matrix of Polynomial entries over the ambient fraction field.

    Bareiss with exact polynomial division; valid because the entries live
    in an integral domain.
    """
    rows = [list(r) for r in rows if any(not x.is_zero for x in r)]
    if not rows:
        return 0
    nrows = len(rows)
    ncols = len(rows[0])
    ring = rows[0][0].ring
    zero = ring.zero()
    rank_ = 0
    prev = None
    for c in range(ncols):
        piv = None
        for i in range(rank_, nrows):
            if not rows[i][c].is_zero:
                piv = i
                break
        if piv is None:
            continue
        rows[rank_], rows[piv] = rows[piv], rows[rank_]
        pv = rows[rank_][c]
        for i in range(rank_ + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                num = pv * ri[j] - f * rows[rank_][j]
                ri[j] = num if prev is None else num.divexact(prev)
            ri[c] = zero
        prev = pv
        rank_ += 1
        if rank_ == nrows:
            break
    return rank_


def rank_sign_matrix(rows) -> int:
    """Rank of a small integer (+-1/0) matrix over Q."""
    return rank_int_bareiss(rows)


def solve_space_dim(rows, ncols: int, field) -> int:
    """Dimension of the solution space of the homogeneous system rows*v = 0."""
    if ncols == 0:
        return 0
    if not rows:
        return ncols
    if any(len(r) != ncols for r in rows):
        raise InvariantViolation("ragged linear system")
    return ncols - rank(rows, field)
