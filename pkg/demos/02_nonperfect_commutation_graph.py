"""A commutation graph that is not perfect, yet obeys the clique bound.

For perfect graphs (clique number = chromatic number) the clique bound on
the sum of squares was already known.  Group structure gives the same
bound without perfection: the 16-element group of two independent
shift/clock pairs has clique number 4 but chromatic number 5.
"""

import frustgraph as fg

d = 2
gens = [
    fg.PauliOperator(d, (1, 0), (0, 0)),  # X on site 1
    fg.PauliOperator(d, (0, 0), (1, 0)),  # Z on site 1
    fg.PauliOperator(d, (0, 1), (0, 0)),  # X on site 2
    fg.PauliOperator(d, (0, 0), (0, 1)),  # Z on site 2
]
spec = fg.GroupSpec.from_generators(gens)
graph = fg.commutation_graph(spec)

print("vertices:", graph.n_vertices)
print("edges:  ", graph.edge_count)
clique = fg.clique_number_bruteforce(graph)
chromatic = fg.chromatic_number_exact(graph)
print("clique number:   ", clique, "(closed form:", fg.clique_number(spec), ")")
print("chromatic number:", chromatic)
print("perfect graph?   ", clique == chromatic)

value = fg.max_sos(spec, fg.OptimizerConfig(seed=2))
print("max sum of squares:", round(value, 9), "  bound:", fg.sos_bound(spec))
