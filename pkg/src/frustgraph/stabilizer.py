"""Qudit stabilizers and closed-form entanglement of their subspaces.

A stabilizer is an abelian subgroup of the N-site Pauli group containing
no nontrivial scalar multiple of the identity, described by k generators.
Restricting the generators to one side Q of a bipartition gives a reduced
generating graph gamma_Q whose rank alone fixes the geometric measure of
entanglement of the stabilized subspace across that cut:

    E_Q = 1 - d^(-rank(gamma_Q)/2),

equivalently 1 - d^(-k) times the clique number of the reduced
commutation graph.  The minimum over all bipartitions is (d-1)/d whenever
the subspace is genuinely multipartite entangled, and that value is
asserted, not just returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import (
    BadSubset,
    DependentGenerators,
    DimensionMismatch,
    InternalParity,
    NonCommuting,
    PhaseViolation,
    TooManyBipartitions,
    UnknownCode,
)
from .gf import GFMatrix, nullspace_basis, rank
from .group import generating_graph
from .pauli import PauliOperator, SiteSubset, commutator_exponent

DEFAULT_BIPARTITION_CAP = 2 ** 15 - 1  # handles n_sites up to 16


def bipartitions(n_sites: int) -> Iterator[SiteSubset]:
    """All 2^(n-1) - 1 bipartition halves Q, with site 1 always in Q.

    Enumeration order is fixed (binary counting over sites 2..n), so any
    scan over bipartitions is reproducible.
    """
    rest = n_sites - 1
    for mask in range((1 << rest) - 1):
        picked = [1] + [i + 2 for i in range(rest) if (mask >> i) & 1]
        yield SiteSubset(tuple(picked), n_sites)


class Stabilizer:
    """N-site qudit stabilizer given by k generator operators."""

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise DimensionMismatch("a stabilizer needs at least one generator")
        d = gens[0].d
        n = gens[0].n_sites
        for g in gens:
            if g.d != d or g.n_sites != n:
                raise DimensionMismatch("generators must share d and site count")
        self.d = d
        self.n_sites = n
        self.generators = gens
        self._validated = False

    @property
    def k(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Stabilizer(d={self.d}, n_sites={self.n_sites}, k={self.k})"

    def validate(self) -> None:
        """Check the three stabilizer invariants, raising on the first failure.

        Order matters: commutation first, then the scalar rule (so a
        generator like -1 reports a phase violation rather than a rank
        defect), then exponent-row independence.
        """
        if self._validated:
            return
        gens = self.generators
        d, k = self.d, self.k
        for i in range(k):
            for j in range(i + 1, k):
                if commutator_exponent(gens[i], gens[j]).value:
                    raise NonCommuting(i + 1, j + 1)
        ident = PauliOperator.identity(d, self.n_sites)
        for i, g in enumerate(gens):
            if g ** d != ident:
                raise PhaseViolation(
                    f"generator {i + 1} raised to the power {d} is a "
                    "nontrivial scalar"
                )
        # combinations with identity Pauli part must multiply to exactly 1
        stacked = np.array([list(g.a) + list(g.b) for g in gens], dtype=np.int64)
        combos = nullspace_basis(GFMatrix(stacked.T, d))
        for combo in combos:
            prod = ident
            for g, e in zip(gens, combo):
                if e:
                    prod = prod * (g ** int(e))
            if prod != ident:
                raise PhaseViolation(
                    "a generator product with identity Pauli part has "
                    f"phase exponent {prod.phase_exp}"
                )
        if combos:
            raise DependentGenerators(
                f"generator exponent rows span only {k - len(combos)} of "
                f"{k} dimensions"
            )
        self._validated = True

    def reduced_generating_graph(self, subset: SiteSubset) -> GFMatrix:
        """Pairwise commutator exponents of the generators restricted to Q."""
        self.validate()
        if subset.n_sites != self.n_sites:
            raise BadSubset(
                f"subset is over {subset.n_sites} sites, stabilizer has "
                f"{self.n_sites}"
            )
        if not subset.is_proper:
            raise BadSubset("bipartition side must be a proper subset")
        return generating_graph(g.restrict(subset) for g in self.generators)

    def is_gme(self, bipartition_cap: int = DEFAULT_BIPARTITION_CAP) -> bool:
        """Whether the stabilized subspace is genuinely multipartite entangled.

        True iff every bipartition has a pair of restricted generators
        that fail to commute, i.e. no reduced generating graph vanishes.
        A single site has no bipartitions and is never entangled.
        """
        self.validate()
        if self.n_sites < 2:
            return False
        self._check_cap(bipartition_cap)
        for subset in bipartitions(self.n_sites):
            if not np.any(self.reduced_generating_graph(subset).entries):
                return False
        return True

    def gm_measure(self, subset: SiteSubset) -> "BipartitionReport":
        """Geometric entanglement of the subspace across one bipartition."""
        self.validate()
        gamma_q = self.reduced_generating_graph(subset)
        r = rank(gamma_q)
        if r % 2:
            raise InternalParity("reduced generating graph has odd rank")
        scale = self.d ** (r // 2)
        gm = Fraction(scale - 1, scale)
        # equivalent clique-number form, asserted equal
        nullity = self.k - r
        clique = self.d ** ((nullity + self.k) // 2)
        if gm != Fraction(self.d ** self.k - clique, self.d ** self.k):
            raise RuntimeError("rank form and clique form disagree")
        return BipartitionReport(
            Q=subset,
            gamma_Q=gamma_q,
            rank_Q=r,
            gm_exact=gm,
            gm_value=float(gm),
        )

    def bipartition_reports(
        self, bipartition_cap: int = DEFAULT_BIPARTITION_CAP
    ) -> list["BipartitionReport"]:
        self.validate()
        self._check_cap(bipartition_cap)
        return [self.gm_measure(q) for q in bipartitions(self.n_sites)]

    def ggm_measure(self, bipartition_cap: int = DEFAULT_BIPARTITION_CAP) -> float:
        """Minimum geometric measure over all bipartitions.

        When the subspace is genuinely multipartite entangled this is
        exactly (d-1)/d, and that equality is asserted.
        """
        self.validate()
        if self.n_sites < 2:
            return 0.0
        reports = self.bipartition_reports(bipartition_cap)
        least = min(r.gm_exact for r in reports)
        if all(r.rank_Q > 0 for r in reports):
            expected = Fraction(self.d - 1, self.d)
            if least != expected:
                raise RuntimeError(
                    f"entangled subspace has minimum measure {least}, "
                    f"expected {expected}"
                )
        return float(least)

    def _check_cap(self, bipartition_cap: int) -> None:
        count = 2 ** (self.n_sites - 1) - 1
        if count > bipartition_cap:
            raise TooManyBipartitions(
                f"{count} bipartitions exceed the cap of {bipartition_cap}"
            )


@dataclass(frozen=True)
class BipartitionReport:
    """Entanglement data for one bipartition Q | complement."""

    Q: SiteSubset
    gamma_Q: GFMatrix
    rank_Q: int
    gm_exact: Fraction
    gm_value: float


def builtin_code(name: str, d: int, n: int) -> Stabilizer:
    """Construct a named example stabilizer, validated.

    ``ghz``: the n-site GHZ state at prime d, generated by the all-sites
    shift together with clock pairs Z_i Z_{i+1}^{-1}.

    ``five_qudit``: the five-site code whose four generators are the
    cyclic shifts of X (x) Z (x) Z^-1 (x) X^-1 (x) 1; at d = 2 this is the
    familiar X Z Z X 1 pattern.  Its reduced generating graphs have rank
    2 for single-site cuts and rank 4 for every two-site cut.
    """
    if name == "ghz":
        if n < 2:
            raise DimensionMismatch("ghz needs at least 2 sites")
        gens = [PauliOperator(d, (1,) * n, (0,) * n)]
        for i in range(1, n):
            b = [0] * n
            b[i - 1] = 1
            b[i] = -1
            gens.append(PauliOperator(d, (0,) * n, tuple(b)))
        stab = Stabilizer(gens)
    elif name == "five_qudit":
        if n != 5:
            raise DimensionMismatch("the five-qudit code needs exactly 5 sites")
        base_a = np.array([1, 0, 0, -1, 0], dtype=np.int64)
        base_b = np.array([0, 1, -1, 0, 0], dtype=np.int64)
        gens = [
            PauliOperator(
                d,
                tuple(np.roll(base_a, shift)),
                tuple(np.roll(base_b, shift)),
            )
            for shift in range(4)
        ]
        stab = Stabilizer(gens)
    else:
        raise UnknownCode(f"no builtin code named {name!r}")
    stab.validate()
    return stab
