"""The single-qubit shift/clock pair and its sum-of-squares bound.

The group generated by X and Z at d = 2 contains four matrices: 1, X, Z
and i X Z (the third Pauli matrix Y).  Its generating graph has full
rank, so the clique number of the 4-vertex commutation graph is 2 and

    |<1>|^2 + |<X>|^2 + |<Y>|^2 + |<Z>|^2 <= 2

for every state, i.e. the familiar Bloch-ball inequality
|<X>|^2 + |<Y>|^2 + |<Z>|^2 <= 1.
"""

import numpy as np

import frustgraph as fg

spec = fg.GroupSpec.from_generators([fg.PauliOperator.x(2), fg.PauliOperator.z(2)])
print("generating graph gamma =", spec.gamma.to_lists())
print("rank(gamma) =", fg.rank(spec.gamma), " nullity =", spec.k - fg.rank(spec.gamma))

graph = fg.commutation_graph(spec)
print("commutation graph:", graph.n_vertices, "vertices,", graph.edge_count, "edges")
print("clique number (closed form)  =", fg.clique_number(spec))
print("clique number (brute force)  =", fg.clique_number_bruteforce(graph))
print("sum-of-squares bound         =", fg.sos_bound(spec))

# the dense maximiser actually reaches the bound (at any Z eigenstate)
value = fg.max_sos(spec, fg.OptimizerConfig(seed=1))
print("max_sos over states          =", value)

# spell the inequality out at a random state
rng = np.random.default_rng(0)
psi = rng.normal(size=2) + 1j * rng.normal(size=2)
psi /= np.linalg.norm(psi)
total = sum(
    abs(np.vdot(psi, fg.dense_pauli(op) @ psi)) ** 2
    for _, op in fg.concrete_elements(spec)
)
print("sum of |<A>|^2 at a random state =", round(total, 6), "<= 2")
