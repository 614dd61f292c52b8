"""Exact Gaussian elimination over a Field, on small dense matrices.

Matrices are lists of row lists holding element indices.  Pivoting picks
the first nonzero entry in column order (there is no pivot magnitude over
a finite field), which keeps every result deterministic.
"""

from __future__ import annotations

from .gf import Field


def rref(rows, field: Field):
    """Reduce in place to reduced row echelon form.

    Returns (rank, pivot_cols) where pivot_cols[j] is the pivot row of
    column j or -1.
    """
    add, mul, neg, inv = field._add, field._mul, field._neg, field._inv
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    piv = [-1] * nc
    rank = 0
    for col in range(nc):
        prow = -1
        for r in range(rank, nr):
            if rows[r][col]:
                prow = r
                break
        if prow < 0:
            continue
        if prow != rank:
            rows[prow], rows[rank] = rows[rank], rows[prow]
        linv = inv[rows[rank][col]]
        row = rows[rank]
        for j in range(col, nc):
            row[j] = mul[row[j]][linv]
        for r in range(nr):
            if r != rank and rows[r][col]:
                s = rows[r][col]
                srow = mul[s]
                tgt = rows[r]
                for j in range(col, nc):
                    tgt[j] = add[tgt[j]][neg[srow[row[j]]]]
        piv[col] = rank
        rank += 1
        if rank == nr:
            break
    return rank, piv


def rank(rows, field: Field) -> int:
    return rref([list(r) for r in rows], field)[0]


def nullspace(rows, ncols: int, field: Field):
    """Canonical basis of the right nullspace.

    The input rows may be empty (everything is in the nullspace).  Basis
    vectors are indexed by free columns in increasing order, giving a
    deterministic reduced basis.
    """
    work = [list(r) for r in rows]
    if work:
        _, piv = rref(work, field)
    else:
        piv = [-1] * ncols
    neg = field._neg
    basis = []
    for fcol in range(ncols):
        if piv[fcol] >= 0:
            continue
        vec = [0] * ncols
        vec[fcol] = 1
        for c in range(ncols):
            r = piv[c]
            if r >= 0:
                vec[c] = neg[work[r][fcol]]
        basis.append(vec)
    return basis
