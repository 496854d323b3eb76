"""Groups of omega-commuting unitaries described by their generating graph.

A group element is indexed by an exponent vector I over Z_d, standing for
the ordered product of generators T_1^{I_1} ... T_k^{I_k}.  The pairwise
commutation data of the generators, an antisymmetric adjacency matrix
gamma with [T_i, T_j] = omega^{gamma_ij} 1 as a group commutator, fixes
the commutation phase of every pair of elements through the bilinear form

    Gamma(I, J) = sum_ij I_i J_j gamma_ij  mod d.

Bounds that depend only on gamma (clique number of the commutation graph,
sum-of-squares bound, energy bound for odd d) are computed in exact
integer arithmetic; the brute-force clique and coloring searches here are
the independent cross-checks for them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EvenDimension,
    InternalParity,
    NotAntisymmetric,
    PhaseViolation,
    TooLarge,
)
from .gf import GFMatrix, GFScalar, check_modulus, nullspace_basis, rank
from .pauli import PauliOperator, commutator_exponent
from .symplectic import check_antisymmetric

DEFAULT_VERTEX_CAP = 256
CLIQUE_VERTEX_CAP = 256
COLORING_VERTEX_CAP = 64

Index = tuple[int, ...]


def generating_graph(generators) -> GFMatrix:
    """Antisymmetric matrix of pairwise commutator exponents."""
    generators = tuple(generators)
    if not generators:
        raise DimensionMismatch("need at least one generator; use an empty "
                                "gamma for the trivial group")
    d = generators[0].d
    k = len(generators)
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i + 1, k):
            s = commutator_exponent(generators[i], generators[j]).value
            out[i, j] = s
            out[j, i] = (-s) % d
    return GFMatrix(out, d)


@dataclass(frozen=True)
class GroupSpec:
    """Prime d plus a generating graph, optionally with concrete generators.

    The closed-form bounds depend only on gamma, so abstract specs (no
    generators) are first class; concrete generators are needed only by
    the dense oracle routines.
    """

    d: int
    gamma: GFMatrix
    generators: tuple[PauliOperator, ...] | None = None

    def __post_init__(self) -> None:
        d = check_modulus(self.d)
        object.__setattr__(self, "d", d)
        if self.gamma.d != d:
            raise DimensionMismatch(
                f"gamma modulus {self.gamma.d} differs from spec d {d}"
            )
        check_antisymmetric(self.gamma)
        if self.generators is not None:
            gens = tuple(self.generators)
            object.__setattr__(self, "generators", gens)
            if len(gens) != self.gamma.rows:
                raise DimensionMismatch(
                    f"{len(gens)} generators but gamma is {self.gamma.shape}"
                )
            if gens:
                n = gens[0].n_sites
                for t in gens:
                    if t.d != d or t.n_sites != n:
                        raise DimensionMismatch(
                            "generators must share d and site count"
                        )
                    if not (t ** d).is_identity:
                        raise PhaseViolation(
                            "generator's d-th power is not the identity; "
                            "apply canonical_unit_phase first"
                        )
                if generating_graph(gens) != self.gamma:
                    raise ValueError(
                        "gamma disagrees with the generators' commutators"
                    )

    @classmethod
    def from_generators(cls, generators) -> "GroupSpec":
        gens = tuple(generators)
        if not gens:
            raise DimensionMismatch(
                "from_generators needs generators; use from_gamma for "
                "abstract specs"
            )
        return cls(gens[0].d, generating_graph(gens), gens)

    @classmethod
    def from_gamma(cls, d: int, gamma) -> "GroupSpec":
        if not isinstance(gamma, GFMatrix):
            gamma = GFMatrix(gamma, d)
        return cls(d, gamma)

    @property
    def k(self) -> int:
        return self.gamma.rows

    @property
    def n_elements(self) -> int:
        return self.d ** self.k


def frustration_exponent(I, J, gamma: GFMatrix) -> GFScalar:
    """Bilinear form value Gamma(I, J) = I . gamma . J mod d."""
    Iv = np.asarray(I, dtype=np.int64)
    Jv = np.asarray(J, dtype=np.int64)
    if Iv.shape != (gamma.rows,) or Jv.shape != (gamma.cols,):
        raise DimensionMismatch(
            f"index lengths {Iv.shape}, {Jv.shape} do not match gamma "
            f"{gamma.shape}"
        )
    return GFScalar(int(Iv @ gamma.entries @ Jv), gamma.d)


def element_indices(d: int, k: int) -> list[Index]:
    """All d^k exponent vectors in lexicographic order."""
    return list(itertools.product(range(d), repeat=k))


@dataclass(frozen=True)
class CommutationGraph:
    """Simple graph on element indices; edge iff distinct and commuting.

    Adjacency is stored as one integer bitmask per vertex, which keeps the
    branch-and-bound searches below allocation-free.
    """

    labels: tuple[Index, ...]
    adjacency: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adjacency[i] >> j) & 1)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()


def commutation_graph(
    spec: GroupSpec, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> CommutationGraph:
    """Graph on all d^k element indices; edges where the form vanishes."""
    n = spec.n_elements
    if n > vertex_cap:
        raise TooLarge(f"{n} vertices exceed the cap of {vertex_cap}")
    labels = element_indices(spec.d, spec.k)
    V = np.array(labels, dtype=np.int64).reshape(n, spec.k)
    form = (V @ spec.gamma.entries @ V.T) % spec.d
    masks = []
    for i in range(n):
        mask = 0
        for j in np.flatnonzero(form[i] == 0):
            if j != i:
                mask |= 1 << int(j)
        masks.append(mask)
    return CommutationGraph(tuple(labels), tuple(masks))


def central_subgroup_indices(spec: GroupSpec) -> list[Index]:
    """Indices of the elements commuting with the whole group.

    These are exactly the kernel vectors of gamma, enumerated as all
    Z_d combinations of the kernel basis; the count is d^nullity.
    """
    basis = nullspace_basis(spec.gamma)
    d, k = spec.d, spec.k
    out: list[Index] = []
    for coeffs in itertools.product(range(d), repeat=len(basis)):
        v = np.zeros(k, dtype=np.int64)
        for c, vec in zip(coeffs, basis):
            v = (v + c * vec) % d
        out.append(tuple(int(x) for x in v))
    return out


def clique_number(spec: GroupSpec) -> int:
    """Closed-form clique number d^((nullity + k)/2) of the commutation graph."""
    nullity = spec.k - rank(spec.gamma)
    if (nullity + spec.k) % 2:
        raise InternalParity(
            "nullity + k is odd; the input gamma cannot be antisymmetric"
        )
    return spec.d ** ((nullity + spec.k) // 2)


def clique_number_bruteforce(graph: CommutationGraph) -> int:
    """Exact maximum clique size by branch and bound with pivoting."""
    n = graph.n_vertices
    if n > CLIQUE_VERTEX_CAP:
        raise TooLarge(f"{n} vertices exceed the cap of {CLIQUE_VERTEX_CAP}")
    adj = graph.adjacency
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not cand or size + cand.bit_count() <= best:
            return
        # pivot on the candidate with the most candidate neighbours
        pivot, pivot_score, scan = -1, -1, cand
        while scan:
            v = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            score = (cand & adj[v]).bit_count()
            if score > pivot_score:
                pivot, pivot_score = v, score
        ext = cand & ~adj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            bit = 1 << v
            expand(size + 1, cand & adj[v])
            cand &= ~bit
            ext &= ~bit
            if size + cand.bit_count() <= best:
                return

    expand(0, (1 << n) - 1)
    return best


def chromatic_number_exact(graph: CommutationGraph) -> int:
    """Exact chromatic number by backtracking above a clique lower bound."""
    n = graph.n_vertices
    if n > COLORING_VERTEX_CAP:
        raise TooLarge(f"{n} vertices exceed the cap of {COLORING_VERTEX_CAP}")
    if n == 0:
        return 0
    adj = graph.adjacency
    lower = clique_number_bruteforce(graph)

    def colorable(n_colors: int) -> bool:
        colors = [-1] * n

        def solve(done: int, used: int) -> bool:
            if done == n:
                return True
            # most saturated uncolored vertex first, ties by degree
            v_best, key_best = -1, (-1, -1)
            for v in range(n):
                if colors[v] != -1:
                    continue
                seen = {colors[u] for u in _bits(adj[v]) if colors[u] != -1}
                key = (len(seen), adj[v].bit_count())
                if key > key_best:
                    v_best, key_best = v, key
            v = v_best
            forbidden = {colors[u] for u in _bits(adj[v])}
            # allow at most one previously unused color to break symmetry
            for c in range(min(used + 1, n_colors)):
                if c in forbidden:
                    continue
                colors[v] = c
                if solve(done + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return solve(0, 0)

    for t in range(max(lower, 1), n + 1):
        if colorable(t):
            return t
    return n


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def sos_bound(spec: GroupSpec) -> int:
    """Tight bound on the sum of squared expectation moduli over the group."""
    return clique_number(spec)


def sum_bound(spec: GroupSpec) -> float:
    """Bound on the summed expectations of all elements and their adjoints.

    Only defined for odd prime d: equals twice the clique number times
    ((1 + sqrt(d))/2)^(rank/2).
    """
    if spec.d == 2:
        raise EvenDimension("the expectation-sum bound requires odd prime d")
    q = rank(spec.gamma)
    return 2.0 * clique_number(spec) * ((1.0 + math.sqrt(spec.d)) / 2.0) ** (q // 2)


def concrete_elements(spec: GroupSpec) -> list[tuple[Index, PauliOperator]]:
    """All d^k elements as ordered generator products, phases exact.

    Element I is T_1^{I_1} * ... * T_k^{I_k} with ascending generator
    index; for odd d these products already have d-th power one.
    """
    if spec.generators is None:
        raise ValueError("concrete generators are required")
    gens = spec.generators
    n_sites = gens[0].n_sites if gens else 0
    out: list[tuple[Index, PauliOperator]] = []
    for I in element_indices(spec.d, spec.k):
        op = PauliOperator.identity(spec.d, n_sites)
        for t_op, e in zip(gens, I):
            if e:
                op = op * (t_op ** e)
        out.append((I, op))
    return out
