"""Group layer: generating graphs, commutation graphs, bounds, oracles."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from frustgraph import (
    EvenDimension,
    GFMatrix,
    GroupSpec,
    InternalParity,
    PauliOperator,
    TooLarge,
    central_subgroup_indices,
    chromatic_number_exact,
    clique_number,
    clique_number_bruteforce,
    commutation_graph,
    element_indices,
    frustration_exponent,
    generating_graph,
    invert,
    rank,
    sos_bound,
    sum_bound,
)
from frustgraph.group import CommutationGraph


def pauli_pair_spec(d):
    return GroupSpec.from_generators([PauliOperator.x(d), PauliOperator.z(d)])


def two_qubit_spec():
    d = 2
    return GroupSpec.from_generators(
        [
            PauliOperator(d, (1, 0), (0, 0)),
            PauliOperator(d, (0, 0), (1, 0)),
            PauliOperator(d, (0, 1), (0, 0)),
            PauliOperator(d, (0, 0), (0, 1)),
        ]
    )


def random_antisymmetric(rng, d, k):
    upper = np.triu(rng.integers(0, d, size=(k, k)), 1)
    return GFMatrix(upper - upper.T, d)


def test_generating_graph_of_shift_and_clock():
    for d in (2, 3, 5):
        gamma = generating_graph([PauliOperator.x(d), PauliOperator.z(d)])
        assert gamma == GFMatrix([[0, -1], [1, 0]], d)


def test_generating_graph_single_generator():
    gamma = generating_graph([PauliOperator.x(3)])
    assert gamma == GFMatrix.zeros(1, 1, 3)


def test_frustration_exponent_examples():
    gamma = GFMatrix([[0, -1], [1, 0]], 2)
    assert frustration_exponent((1, 0), (1, 1), gamma).value == 1
    assert frustration_exponent((1, 1), (1, 1), gamma).value == 0
    assert frustration_exponent((0, 0), (1, 1), gamma).value == 0


def test_frustration_exponent_matches_dense_commutator():
    # dense check of the (X, Y) pair at d=2: X Y = -Y X
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    assert np.allclose(x @ y, -(y @ x))


def test_commutation_graph_of_pauli_pair():
    graph = commutation_graph(pauli_pair_spec(2))
    assert graph.n_vertices == 4
    ident = graph.labels.index((0, 0))
    edges = {
        tuple(sorted((i, j)))
        for i in range(4)
        for j in range(4)
        if i != j and graph.has_edge(i, j)
    }
    expected = {tuple(sorted((ident, v))) for v in range(4) if v != ident}
    assert edges == expected


def test_commutation_graph_two_qubit_size():
    assert commutation_graph(two_qubit_spec()).n_vertices == 16


def test_commutation_graph_single_generator_complete():
    # powers of one operator all commute: complete graph on d^k vertices
    spec = GroupSpec.from_gamma(3, GFMatrix.zeros(1, 1, 3))
    graph = commutation_graph(spec)
    assert graph.n_vertices == 3
    assert graph.edge_count == 3
    assert clique_number_bruteforce(graph) == 3


def test_commutation_graph_cap():
    spec = GroupSpec.from_gamma(3, GFMatrix.zeros(6, 6, 3))
    with pytest.raises(TooLarge):
        commutation_graph(spec, vertex_cap=256)


def test_central_indices_full_rank():
    spec = pauli_pair_spec(3)
    assert central_subgroup_indices(spec) == [(0, 0)]


def test_central_indices_cyclic_group():
    spec = GroupSpec.from_generators([PauliOperator.x(2)])
    assert sorted(central_subgroup_indices(spec)) == [(0,), (1,)]


def test_central_indices_five_qudit_cut():
    from ref_data import FIVE_QUDIT_CUT_1

    spec = GroupSpec.from_gamma(2, GFMatrix(FIVE_QUDIT_CUT_1, 2))
    assert len(central_subgroup_indices(spec)) == 4


def test_central_indices_commute_with_everything():
    rng = np.random.default_rng(23)
    for _ in range(30):
        d = int(rng.choice([2, 3]))
        k = int(rng.integers(1, 5))
        spec = GroupSpec.from_gamma(d, random_antisymmetric(rng, d, k))
        central = set(central_subgroup_indices(spec))
        everything = element_indices(d, k)
        brute = {
            I
            for I in everything
            if all(
                frustration_exponent(I, J, spec.gamma).value == 0
                for J in everything
            )
        }
        assert central == brute


def test_clique_number_examples():
    assert clique_number(pauli_pair_spec(2)) == 2
    assert clique_number(two_qubit_spec()) == 4
    spec = GroupSpec.from_gamma(3, GFMatrix.zeros(3, 3, 3))
    assert clique_number(spec) == 27


def test_clique_number_parity_guard():
    # a broken gamma (not antisymmetric) can only be smuggled in past
    # validation; nullity + k then comes out odd and is rejected
    odd = GroupSpec.__new__(GroupSpec)
    object.__setattr__(odd, "d", 3)
    object.__setattr__(odd, "gamma", GFMatrix([[1]], 3))
    object.__setattr__(odd, "generators", None)
    with pytest.raises(InternalParity):
        clique_number(odd)


def test_bruteforce_clique_examples():
    assert clique_number_bruteforce(commutation_graph(pauli_pair_spec(2))) == 2
    assert clique_number_bruteforce(commutation_graph(two_qubit_spec())) == 4
    full = (1 << 9) - 1
    complete = CommutationGraph(
        tuple((i,) for i in range(9)),
        tuple(full & ~(1 << i) for i in range(9)),
    )
    assert clique_number_bruteforce(complete) == 9


def test_bruteforce_clique_exhaustive_cross_check():
    # independent oracle: scan all vertex subsets of the 4-vertex graph
    graph = commutation_graph(pauli_pair_spec(2))
    best = 0
    for size in range(1, graph.n_vertices + 1):
        for combo in itertools.combinations(range(graph.n_vertices), size):
            if all(graph.has_edge(i, j) for i, j in itertools.combinations(combo, 2)):
                best = max(best, size)
    assert clique_number_bruteforce(graph) == best == 2


def test_bruteforce_clique_cap():
    labels = tuple((i,) for i in range(257))
    graph = CommutationGraph(labels, tuple(0 for _ in labels))
    with pytest.raises(TooLarge):
        clique_number_bruteforce(graph)


def test_chromatic_examples():
    assert chromatic_number_exact(commutation_graph(two_qubit_spec())) == 5
    edgeless = CommutationGraph(tuple((i,) for i in range(5)), (0,) * 5)
    assert chromatic_number_exact(edgeless) == 1
    full = (1 << 6) - 1
    complete = CommutationGraph(
        tuple((i,) for i in range(6)),
        tuple(full & ~(1 << i) for i in range(6)),
    )
    assert chromatic_number_exact(complete) == 6
    big = CommutationGraph(tuple((i,) for i in range(65)), (0,) * 65)
    with pytest.raises(TooLarge):
        chromatic_number_exact(big)


def test_sos_bound_examples():
    from ref_data import FIVE_QUDIT_CUT_12

    assert sos_bound(pauli_pair_spec(2)) == 2
    assert sos_bound(GroupSpec.from_gamma(2, GFMatrix(FIVE_QUDIT_CUT_12, 2))) == 4
    assert sos_bound(GroupSpec.from_gamma(2, GFMatrix.zeros(3, 3, 2))) == 8


def test_sum_bound_examples():
    value = sum_bound(pauli_pair_spec(3))
    assert value == pytest.approx(3 + 3 * np.sqrt(3), abs=1e-12)
    trivial = GroupSpec.from_gamma(3, GFMatrix.zeros(1, 1, 3))
    assert sum_bound(trivial) == pytest.approx(6.0, abs=1e-12)
    with pytest.raises(EvenDimension):
        sum_bound(pauli_pair_spec(2))


def test_frustration_antisymmetry_random():
    rng = np.random.default_rng(29)
    for _ in range(20):
        d = int(rng.choice([2, 3]))
        k = int(rng.integers(1, 5))
        gamma = random_antisymmetric(rng, d, k)
        for _ in range(10):
            I = tuple(int(v) for v in rng.integers(0, d, size=k))
            J = tuple(int(v) for v in rng.integers(0, d, size=k))
            total = (
                frustration_exponent(I, J, gamma).value
                + frustration_exponent(J, I, gamma).value
            )
            assert total % d == 0


def test_clique_closed_form_matches_bruteforce_random():
    rng = np.random.default_rng(31)
    done = 0
    while done < 25:
        d = int(rng.choice([2, 3]))
        k = int(rng.integers(1, 5))
        if d ** k > 81:
            continue
        done += 1
        spec = GroupSpec.from_gamma(d, random_antisymmetric(rng, d, k))
        assert clique_number(spec) == clique_number_bruteforce(commutation_graph(spec))


def test_nullity_plus_k_even_random():
    rng = np.random.default_rng(37)
    for _ in range(60):
        d = int(rng.choice([2, 3, 5, 7]))
        k = int(rng.integers(1, 8))
        gamma = random_antisymmetric(rng, d, k)
        nullity = k - rank(gamma)
        assert (nullity + k) % 2 == 0


def test_generator_change_of_basis_transforms_gamma():
    # rebuilding generators through an invertible exponent matrix O turns
    # the generating graph into O^T gamma O
    rng = np.random.default_rng(41)
    for _ in range(15):
        d = int(rng.choice([2, 3, 5]))
        k = int(rng.integers(1, 4))
        gens = [
            PauliOperator(
                d,
                tuple(int(v) for v in rng.integers(0, d, size=2)),
                tuple(int(v) for v in rng.integers(0, d, size=2)),
            ).canonical_unit_phase()
            for _ in range(k)
        ]
        gamma = generating_graph(gens)
        while True:
            O = GFMatrix(rng.integers(0, d, size=(k, k)), d)
            if rank(O) == k:
                break
        invert(O)  # sanity: truly invertible
        new_gens = []
        for col in range(k):
            op = PauliOperator.identity(d, 2)
            for row in range(k):
                e = int(O.entries[row, col])
                if e:
                    op = op * (gens[row] ** e)
            new_gens.append(op.canonical_unit_phase())
        assert generating_graph(new_gens) == O.T @ gamma @ O


def test_spec_validation():
    with pytest.raises(Exception):
        GroupSpec.from_gamma(2, GFMatrix([[1, 0], [0, 0]], 2))
    # gamma disagreeing with generators is rejected
    with pytest.raises(ValueError):
        GroupSpec(
            2,
            GFMatrix.zeros(2, 2, 2),
            (PauliOperator.x(2), PauliOperator.z(2)),
        )
