"""Symbolic generalized Pauli (Weyl) operators with exact phase arithmetic.

An operator on N prime-dimensional sites is stored as a phase exponent
plus two exponent vectors,

    zeta^p * (X^{a_1} Z^{b_1})  x  ...  x  (X^{a_N} Z^{b_N}),

with X kept to the left of Z on every site.  Reordering a Z past an X on
one site costs a factor omega = exp(2*pi*i/d), so products, powers and
inverses reduce to integer bookkeeping on (p, a, b).

The phase unit zeta is omega itself for odd d and the quarter turn i for
d = 2.  For odd d the reachable phases are exactly the powers of omega;
for d = 2 the unit-phase normalisation introduces factors of i, and since
omega = -1 = i^2 a single exponent modulo 4 covers everything.  No other
moduli occur, so the symbolic layer never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import BadSubset, DimensionMismatch
from .gf import GFScalar, check_modulus


def phase_modulus(d: int) -> int:
    """Order of the phase group: d for odd d, 4 (powers of i) for d = 2."""
    return 4 if d == 2 else d


def omega_units(d: int, t: int) -> int:
    """Exponent of the phase omega^t in zeta units."""
    if d == 2:
        return (2 * t) % 4
    return t % d


@dataclass(frozen=True)
class PauliOperator:
    """zeta^phase_exp times a tensor product of X^a Z^b site factors."""

    d: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    phase_exp: int = 0

    def __post_init__(self) -> None:
        d = check_modulus(self.d)
        a = tuple(int(v) % d for v in self.a)
        b = tuple(int(v) % d for v in self.b)
        if len(a) != len(b):
            raise DimensionMismatch(
                f"X and Z exponent vectors differ in length: {len(a)} vs {len(b)}"
            )
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "phase_exp", int(self.phase_exp) % phase_modulus(d))

    @classmethod
    def identity(cls, d: int, n_sites: int) -> "PauliOperator":
        return cls(d, (0,) * n_sites, (0,) * n_sites)

    @classmethod
    def x(cls, d: int) -> "PauliOperator":
        """Single-site shift operator X."""
        return cls(d, (1,), (0,))

    @classmethod
    def z(cls, d: int) -> "PauliOperator":
        """Single-site clock operator Z."""
        return cls(d, (0,), (1,))

    @classmethod
    def single(
        cls, d: int, n_sites: int, site: int, x_exp: int = 0, z_exp: int = 0
    ) -> "PauliOperator":
        """Operator acting as X^x_exp Z^z_exp on one 1-based site."""
        if not 1 <= site <= n_sites:
            raise BadSubset(f"site {site} outside 1..{n_sites}")
        a = [0] * n_sites
        b = [0] * n_sites
        a[site - 1] = x_exp
        b[site - 1] = z_exp
        return cls(d, tuple(a), tuple(b))

    @property
    def n_sites(self) -> int:
        return len(self.a)

    @property
    def phase(self) -> complex:
        """Numeric value of zeta^phase_exp."""
        if self.d == 2:
            return 1j ** self.phase_exp
        import cmath

        return cmath.exp(2j * cmath.pi * self.phase_exp / self.d)

    @property
    def is_identity(self) -> bool:
        return self.phase_exp == 0 and not any(self.a) and not any(self.b)

    def _check_compatible(self, other: "PauliOperator") -> None:
        if self.d != other.d:
            raise DimensionMismatch(f"moduli differ: {self.d} vs {other.d}")
        if self.n_sites != other.n_sites:
            raise DimensionMismatch(
                f"site counts differ: {self.n_sites} vs {other.n_sites}"
            )

    def multiply(self, other: "PauliOperator") -> "PauliOperator":
        """Exact operator product self * other.

        Per site, X^a Z^b X^a' Z^b' = omega^{b a'} X^{a+a'} Z^{b+b'}; the
        reordering phases accumulate into phase_exp.
        """
        self._check_compatible(other)
        d = self.d
        cross = sum(bj * aj for bj, aj in zip(self.b, other.a)) % d
        return PauliOperator(
            d,
            tuple((x + y) % d for x, y in zip(self.a, other.a)),
            tuple((x + y) % d for x, y in zip(self.b, other.b)),
            self.phase_exp + other.phase_exp + omega_units(d, cross),
        )

    __mul__ = multiply

    def inverse(self) -> "PauliOperator":
        """The unique operator Q with self * Q equal to the identity."""
        d = self.d
        cross = (-sum(x * y for x, y in zip(self.a, self.b))) % d
        return PauliOperator(
            d,
            tuple(-x % d for x in self.a),
            tuple(-x % d for x in self.b),
            -(self.phase_exp + omega_units(d, cross)),
        )

    def power(self, m: int) -> "PauliOperator":
        """Exact m-th power for any integer m, phases included."""
        m = int(m)
        base = self if m >= 0 else self.inverse()
        m = abs(m)
        result = PauliOperator.identity(self.d, self.n_sites)
        while m:
            if m & 1:
                result = result.multiply(base)
            m >>= 1
            if m:
                base = base.multiply(base)
        return result

    __pow__ = power

    def canonical_unit_phase(self) -> "PauliOperator":
        """Replace the phase by the unique choice making the d-th power 1.

        For odd d the bare tensor product already has (X^a Z^b)^d = 1, so
        the phase is simply dropped.  For d = 2 a factor i is needed
        exactly when an odd number of sites carry both an X and a Z.
        """
        if self.d == 2:
            phase = sum(x * y for x, y in zip(self.a, self.b)) % 2
        else:
            phase = 0
        return replace(self, phase_exp=phase)

    def restrict(self, subset: "SiteSubset") -> "PauliOperator":
        """Factor acting on the given sites, unit-phase normalised.

        The returned operator lives on len(subset) sites, reindexed in
        ascending order of the original labels.  Any overall phase of the
        full operator is left implicitly with the complementary factor;
        commutation exponents never see it.
        """
        if subset.n_sites != self.n_sites:
            raise BadSubset(
                f"subset is over {subset.n_sites} sites, operator has {self.n_sites}"
            )
        picked = [i - 1 for i in subset.indices]
        return PauliOperator(
            self.d,
            tuple(self.a[i] for i in picked),
            tuple(self.b[i] for i in picked),
        ).canonical_unit_phase()


def commutator_exponent(p: PauliOperator, q: PauliOperator) -> GFScalar:
    """Exponent sigma in p q p^-1 q^-1 = omega^sigma 1.

    Equals b_p . a_q - a_p . b_q mod d; the operators' phases are scalars
    and cancel, so they never influence the result.
    """
    p._check_compatible(q)
    d = p.d
    value = sum(x * y for x, y in zip(p.b, q.a)) - sum(
        x * y for x, y in zip(p.a, q.b)
    )
    return GFScalar(value, d)


def tensor(*ops: PauliOperator) -> PauliOperator:
    """Tensor product of operators sharing one modulus; phases multiply."""
    if not ops:
        raise DimensionMismatch("tensor() needs at least one operator")
    d = ops[0].d
    a: list[int] = []
    b: list[int] = []
    phase = 0
    for op in ops:
        if op.d != d:
            raise DimensionMismatch(f"moduli differ: {d} vs {op.d}")
        a.extend(op.a)
        b.extend(op.b)
        phase += op.phase_exp
    return PauliOperator(d, tuple(a), tuple(b), phase)


@dataclass(frozen=True)
class SiteSubset:
    """A non-empty set of 1-based site labels out of n_sites."""

    indices: tuple[int, ...]
    n_sites: int

    def __post_init__(self) -> None:
        n = int(self.n_sites)
        if n < 1:
            raise BadSubset(f"n_sites must be at least 1, got {n}")
        idx = tuple(sorted({int(i) for i in self.indices}))
        if not idx:
            raise BadSubset("site subset must be non-empty")
        if idx[0] < 1 or idx[-1] > n:
            raise BadSubset(f"site labels {idx} outside 1..{n}")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "n_sites", n)

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def is_proper(self) -> bool:
        return self.size < self.n_sites

    def complement(self) -> "SiteSubset":
        rest = tuple(
            i for i in range(1, self.n_sites + 1) if i not in set(self.indices)
        )
        if not rest:
            raise BadSubset("complement of the full site set is empty")
        return SiteSubset(rest, self.n_sites)
