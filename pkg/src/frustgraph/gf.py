"""Exact dense linear algebra over the prime field Z_d.

Everything here is integer arithmetic: elimination uses modular inverses,
so ranks, nullspaces and matrix inverses are exact rather than floating
point.  All matrices in this library are tiny (generator counts, never
Hilbert-space dimensions), so there is no sparsity or fancy pivoting;
pivots are always the first row with a nonzero entry, which keeps every
derived basis reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonPrimeModulus, Singular, ZeroInverse


def is_prime(n: int) -> bool:
    """Trial-division primality check; moduli in this library are small."""
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def check_modulus(d: int) -> int:
    """Return ``d`` as a plain int, rejecting non-prime moduli."""
    d = int(d)
    if not is_prime(d):
        raise NonPrimeModulus(f"modulus must be a prime, got {d}")
    return d


@dataclass(frozen=True)
class GFScalar:
    """An element of Z_d, kept reduced to the range [0, d)."""

    value: int
    d: int

    def __post_init__(self) -> None:
        d = check_modulus(self.d)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "value", int(self.value) % d)

    def __int__(self) -> int:
        return self.value


def field_inverse(a: GFScalar) -> GFScalar:
    """Multiplicative inverse in Z_d; zero has none."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no multiplicative inverse mod {a.d}")
    return GFScalar(pow(a.value, -1, a.d), a.d)


class GFMatrix:
    """Dense matrix over Z_d backed by a row-major integer array."""

    __slots__ = ("entries", "d")

    def __init__(self, entries, d: int):
        self.d = check_modulus(d)
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        self.entries = arr % self.d

    @classmethod
    def zeros(cls, rows: int, cols: int, d: int) -> "GFMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), d)

    @classmethod
    def identity(cls, n: int, d: int) -> "GFMatrix":
        return cls(np.eye(n, dtype=np.int64), d)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "GFMatrix":
        return GFMatrix(self.entries.T, self.d)

    def copy(self) -> "GFMatrix":
        return GFMatrix(self.entries.copy(), self.d)

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if not isinstance(other, GFMatrix):
            return NotImplemented
        if self.d != other.d:
            raise DimensionMismatch(f"moduli differ: {self.d} vs {other.d}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return GFMatrix(self.entries @ other.entries, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.entries, other.entries)

    __hash__ = None

    def __repr__(self) -> str:
        return f"GFMatrix({self.to_lists()!r}, d={self.d})"


def _row_echelon(matrix: GFMatrix, pivot_cols: int | None = None):
    """Reduced row echelon form over Z_d.

    Pivot rule: first row at or below the cursor with a nonzero entry.
    Returns the reduced array and the list of pivot column indices; only
    the first ``pivot_cols`` columns are eligible for pivots (row
    operations still apply to the full width, which is what inversion via
    an augmented block needs).
    """
    d = matrix.d
    R = matrix.entries.copy()
    n_rows, n_cols = R.shape
    limit = n_cols if pivot_cols is None else pivot_cols
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        pivot = None
        for i in range(r, n_rows):
            if R[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            R[[r, pivot]] = R[[pivot, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, d)) % d
        for i in range(n_rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % d
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return R, pivots


def rank(matrix: GFMatrix) -> int:
    """Rank over Z_d via Gaussian elimination with modular inverses."""
    _, pivots = _row_echelon(matrix)
    return len(pivots)


def nullspace_basis(matrix: GFMatrix) -> list[np.ndarray]:
    """Basis of the right kernel {v : M v = 0 mod d}.

    Free variables are set to unit values in column-index order, so the
    returned basis is reproducible across runs.
    """
    R, pivots = _row_echelon(matrix)
    d = matrix.d
    n_cols = matrix.cols
    pivot_set = set(pivots)
    basis: list[np.ndarray] = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = np.zeros(n_cols, dtype=np.int64)
        v[free] = 1
        for row_idx, p in enumerate(pivots):
            v[p] = (-R[row_idx, free]) % d
        basis.append(v)
    return basis


def invert(matrix: GFMatrix) -> GFMatrix:
    """Matrix inverse over Z_d; raises Singular on rank deficiency."""
    if matrix.rows != matrix.cols:
        raise DimensionMismatch(f"cannot invert a {matrix.shape} matrix")
    n = matrix.rows
    aug = GFMatrix(
        np.hstack([matrix.entries, np.eye(n, dtype=np.int64)]), matrix.d
    )
    R, pivots = _row_echelon(aug, pivot_cols=n)
    if len(pivots) < n:
        raise Singular(f"matrix has rank {len(pivots)} < {n}")
    return GFMatrix(R[:, n:], matrix.d)
