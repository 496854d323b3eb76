"""Geometric entanglement of the five-qudit code, cut by cut.

The code's four generators are the cyclic shifts of X Z Z^-1 X^-1 1.  Up
to the cyclic symmetry there are three distinct bipartitions; their
reduced generating graphs have ranks 2, 4 and 4, so the geometric
measures are 1 - d^(-1) and 1 - d^(-2).  The minimum over bipartitions is
always (d - 1)/d, the largest value any genuinely entangled subspace can
reach.
"""

import frustgraph as fg

for d in (2, 3, 5):
    code = fg.builtin_code("five_qudit", d, 5)
    print(f"--- d = {d} ---")
    for sites in [(1,), (1, 2), (1, 3)]:
        q = fg.SiteSubset(sites, 5)
        report = code.gm_measure(q)
        print(
            f"Q={list(sites)!s:9} rank(gamma_Q)={report.rank_Q} "
            f"E_GM = {report.gm_exact} = {report.gm_value:.6f}"
        )
    print("genuinely multipartite entangled:", code.is_gme())
    print("generalized geometric measure:   ", code.ggm_measure(), "= (d-1)/d")

# numeric cross-check at d = 2: maximise the overlap of product states
# with the dense code projector and compare with the closed form
code = fg.builtin_code("five_qudit", 2, 5)
cfg = fg.OptimizerConfig(seed=3)
print("--- dense cross-check at d = 2 ---")
for sites in [(1,), (1, 2)]:
    q = fg.SiteSubset(sites, 5)
    overlap = fg.max_product_overlap(code, q, cfg)
    closed = code.gm_measure(q).gm_value
    print(f"Q={list(sites)!s:9} 1 - overlap = {1 - overlap:.9f}  closed form = {closed}")
