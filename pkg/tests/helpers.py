"""Reference implementations shared by the test modules.

Everything here re-derives its answer straight from the definition of an
independent set, by scanning vertex subsets with itertools. No code is
shared with the package engines, so agreement between an engine and a
reference is a genuine cross-check rather than a tautology.
"""

import itertools

from chainsaw.graphs import BLADE, CHAIN, Graph


def independent_subsets(g):
    """Yield every independent set of g, each as a tuple of vertices."""
    free = [v for v in range(g.order) if v not in g.loops]
    for r in range(len(free) + 1):
        for combo in itertools.combinations(free, r):
            if all(v not in g.adjacency[u] for u, v in itertools.combinations(combo, 2)):
                yield combo


def reference_count(g):
    return sum(1 for _ in independent_subsets(g))


def reference_polynomial(g):
    by_size = {}
    for s in independent_subsets(g):
        by_size[len(s)] = by_size.get(len(s), 0) + 1
    return [by_size.get(t, 0) for t in range(max(by_size) + 1)]


def reference_strata(g):
    chain = set(g.chain_vertices())
    table = {}
    for s in independent_subsets(g):
        t = len(chain.intersection(s))
        table[t] = table.get(t, 0) + 1
    return table


def random_graph(rng, max_order=12, loop_prob=0.1):
    """A reproducible random graph with mixed roles and occasional loops."""
    order = rng.randint(0, max_order)
    density = rng.uniform(0.05, 0.6)
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(order), 2)
        if rng.random() < density
    ]
    loops = [v for v in range(order) if rng.random() < loop_prob]
    roles = tuple(rng.choice((CHAIN, BLADE)) for _ in range(order))
    return Graph.build(order, edges, loops, roles)
