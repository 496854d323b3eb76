"""Symplectic normal form of a random antisymmetric matrix over Z_d.

Every generating-graph adjacency can be rewritten, by an invertible
change of generators O, as a direct sum of [[0,-1],[1,0]] pair blocks
followed by a zero block.  The pair count is rank/2 (so the rank is
always even) and the zero block spans the kernel: the elements commuting
with the whole group.
"""

import numpy as np

import frustgraph as fg

rng = np.random.default_rng(12)
d, k = 5, 6
upper = np.triu(rng.integers(0, d, size=(k, k)), 1)
gamma = fg.GFMatrix(upper - upper.T, d)

print("gamma =")
for row in gamma.to_lists():
    print("   ", row)
print("rank =", fg.rank(gamma), " nullity =", k - fg.rank(gamma))

form = fg.canonical_form(gamma)
print("pair blocks m =", form.m, " residual dimension =", form.residual_dim)
print("O =")
for row in form.O.to_lists():
    print("   ", row)
print("O^T gamma O =")
for row in (form.O.T @ gamma @ form.O).to_lists():
    print("   ", row)

# the coarser two-block shape: maximal zero block + full-rank coupling
O, n, D, E = fg.block_reduce(gamma)
print("two-block shape: zero block", (n, n), " D", D.shape, " rank(D) =", fg.rank(D))

# the kernel columns of O index the central elements
spec = fg.GroupSpec.from_gamma(d, gamma)
print("central subgroup size =", len(fg.central_subgroup_indices(spec)),
      "= d^nullity =", d ** (k - fg.rank(gamma)))
