"""Constructive canonical forms of antisymmetric matrices over Z_d.

``canonical_form`` runs a symplectic Gram-Schmidt pass: take the lowest
index basis vector with a nonzero form row, pair it with its lowest-index
partner, rescale the partner so the pair's form value is -1, then clear
both directions out of every remaining vector.  Left-over vectors span
the kernel and land in a trailing zero block.  ``block_reduce`` reorders
the same basis into the coarser two-block shape with a maximal zero block
and a full-column-rank coupling block.

Both functions return the explicit invertible change of basis O and check
O^T g O against the claimed shape before returning; ties are always broken
by lowest index, so O is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAntisymmetric
from .gf import GFMatrix, rank


def check_antisymmetric(gamma: GFMatrix) -> None:
    """Raise unless gamma^T = -gamma mod d with a zero diagonal."""
    if gamma.rows != gamma.cols:
        raise NotAntisymmetric(f"matrix is {gamma.shape}, not square")
    e = gamma.entries
    if e.size and np.any(np.diagonal(e)):
        raise NotAntisymmetric("diagonal entries must all be zero")
    if e.size and np.any((e + e.T) % gamma.d):
        raise NotAntisymmetric("matrix is not antisymmetric mod d")


@dataclass(frozen=True)
class CanonicalForm:
    """Basis change O with O^T g O = pair blocks [[0,-1],[1,0]] then zeros."""

    O: GFMatrix
    m: int
    residual_dim: int


def pair_block_matrix(k: int, m: int, d: int) -> GFMatrix:
    """m copies of [[0,-1],[1,0]] followed by a (k-2m) zero block."""
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(m):
        out[2 * i, 2 * i + 1] = -1 % d
        out[2 * i + 1, 2 * i] = 1
    return GFMatrix(out, d)


def canonical_form(gamma: GFMatrix) -> CanonicalForm:
    """Symplectic normal form of an antisymmetric matrix over Z_d."""
    check_antisymmetric(gamma)
    d = gamma.d
    k = gamma.rows
    g = gamma.entries

    def form(u: np.ndarray, v: np.ndarray) -> int:
        return int(u @ g @ v) % d

    vectors = [np.eye(k, dtype=np.int64)[:, i] for i in range(k)]
    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    while True:
        hit = None
        for i in range(len(vectors)):
            for j in range(len(vectors)):
                if i != j and form(vectors[i], vectors[j]):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        u = vectors[i]
        c = form(u, vectors[j])
        # rescale the partner so the pair's form value is exactly -1
        w = (vectors[j] * ((-pow(c, -1, d)) % d)) % d
        rest = []
        for t, v in enumerate(vectors):
            if t in (i, j):
                continue
            rest.append((v + form(v, w) * u - form(v, u) * w) % d)
        pairs.append((u, w))
        vectors = rest

    cols: list[np.ndarray] = []
    for u, w in pairs:
        cols.extend([u, w])
    cols.extend(vectors)
    if cols:
        O = GFMatrix(np.column_stack(cols), d)
    else:
        O = GFMatrix(np.zeros((0, 0), dtype=np.int64), d)
    m = len(pairs)

    expected = pair_block_matrix(k, m, d)
    if (O.T @ gamma @ O) != expected or rank(O) != k:
        raise RuntimeError("symplectic reduction failed to reach normal form")
    return CanonicalForm(O=O, m=m, residual_dim=k - 2 * m)


def block_reduce(gamma: GFMatrix) -> tuple[GFMatrix, int, GFMatrix, GFMatrix]:
    """Two-block reduction [[0, D], [-D^T, E]] with D of full column rank.

    Returns (O, n, D, E) where the zero block is n x n and n - m equals
    the nullity of gamma (m = number of D columns = rank/2).  Derived from
    the full normal form by listing first members of every pair, then the
    kernel directions, then the second members.
    """
    cf = canonical_form(gamma)
    d = gamma.d
    k = gamma.rows
    m = cf.m
    order = (
        [2 * i for i in range(m)]
        + list(range(2 * m, k))
        + [2 * i + 1 for i in range(m)]
    )
    O = GFMatrix(cf.O.entries[:, order], d) if k else cf.O
    reduced = (O.T @ gamma @ O).entries
    n = k - m
    D = GFMatrix(reduced[:n, n:], d)
    E = GFMatrix(reduced[n:, n:], d)
    if np.any(reduced[:n, :n]) or rank(D) != m:
        raise RuntimeError("block reduction failed to reach the stated shape")
    return O, n, D, E
