"""Labeled simple graphs (self-loops allowed) and the chainsaw-family generators.

Vertices are integers 0..order-1 with no gaps. Each vertex carries a role
tag: ``chain`` for vertices on the central cycle/path skeleton, ``blade``
for the clique-only vertices hanging off it. Self-loops live in a separate
set, never inside the adjacency lists; a looped vertex can join no
independent set.

Generated graphs use a canonical numbering: chain vertices first
(0..n-1), then blade vertices grouped by blade in increasing blade order.
This keeps exports and memo keys reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

CHAIN = "chain"
BLADE = "blade"

EXPORT_FORMATS = ("edge-list", "dimacs", "json")


@dataclass(frozen=True)
class Graph:
    """Immutable labeled graph. Build instances with :meth:`Graph.build`."""

    order: int
    adjacency: tuple[frozenset[int], ...]
    loops: frozenset[int]
    roles: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.adjacency) != self.order or len(self.roles) != self.order:
            raise ValueError("adjacency and roles must have exactly `order` entries")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not 0 <= u < self.order:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"adjacency not symmetric at edge ({v}, {u})")
            if v in nbrs:
                raise ValueError(f"self-loop on {v} must be in `loops`, not adjacency")
        for v in self.loops:
            if not 0 <= v < self.order:
                raise ValueError(f"looped vertex {v} out of range")
        for v, r in enumerate(self.roles):
            if r not in (CHAIN, BLADE):
                raise ValueError(f"unknown role {r!r} on vertex {v}")

    @classmethod
    def build(
        cls,
        order: int,
        edges: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
        roles: Iterable[str] | None = None,
    ) -> "Graph":
        """Construct a graph from an edge list.

        Duplicate edges collapse (the graph is simple); a pair (v, v) is
        treated as a self-loop on v. Roles default to all-chain.
        """
        adj: list[set[int]] = [set() for _ in range(order)]
        loop_set = set(loops)
        for u, v in edges:
            if u == v:
                loop_set.add(u)
                continue
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u].add(v)
            adj[v].add(u)
        role_tuple = tuple(roles) if roles is not None else (CHAIN,) * order
        return cls(
            order=order,
            adjacency=tuple(frozenset(s) for s in adj),
            loops=frozenset(loop_set),
            roles=role_tuple,
        )

    @property
    def size(self) -> int:
        """Number of non-loop edges."""
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges as sorted (u, v) pairs with u < v."""
        return sorted(
            (v, u) if u > v else (u, v)
            for v, nbrs in enumerate(self.adjacency)
            for u in nbrs
            if u > v
        )

    def chain_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, r in enumerate(self.roles) if r == CHAIN)

    def blade_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, r in enumerate(self.roles) if r == BLADE)


@dataclass(frozen=True)
class ChainsawParams:
    """The (n, a, b) triple: chain length, blade size, and the wiring gap a-b."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.b < 1 or self.a < self.b:
            raise ValueError(
                f"chainsaw parameters require n >= 1 and a >= b >= 1, "
                f"got n={self.n}, a={self.a}, b={self.b}"
            )


def make_path(n: int) -> Graph:
    """The n-vertex path; n = 0 yields the empty graph. All roles chain."""
    if n < 0:
        raise ValueError(f"path length must be nonnegative, got {n}")
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    """The n-vertex cycle. All roles chain.

    Conventions for the degenerate lengths: the 1-vertex cycle is a single
    vertex with a self-loop, the 2-vertex cycle is a single edge. There is
    no convention for n = 0, so it is rejected.
    """
    if n < 1:
        raise ValueError(f"cycle length must be at least 1, got {n}")
    if n == 1:
        return Graph.build(1, loops=[0])
    if n == 2:
        return Graph.build(2, [(0, 1)])
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def _blade_members(params: ChainsawParams, v: int) -> list[int]:
    """Fresh blade vertices owned by chain vertex v, in index order."""
    n, a = params.n, params.a
    return list(range(n + v * (a - 1), n + (v + 1) * (a - 1)))


def make_chainsaw(params: ChainsawParams) -> Graph:
    """Build the chainsaw graph C(n, a, b).

    Chain vertices 0..n-1 form an n-cycle (with the 1-vertex loop and
    2-vertex single-edge conventions). Each chain vertex v is completed to
    an a-clique by a-1 fresh blade vertices, and is additionally wired to
    the a-b lowest-indexed blade vertices of the clique owned by chain
    vertex (v+1) mod n. For n = 1 those extra edges fall inside the only
    blade and collapse into the existing clique edges.
    """
    n, a, b = params.n, params.a, params.b
    edges: list[tuple[int, int]] = []
    loops: list[int] = []
    if n == 1:
        loops.append(0)
    elif n == 2:
        edges.append((0, 1))
    else:
        edges.extend((v, (v + 1) % n) for v in range(n))
    for v in range(n):
        clique = [v] + _blade_members(params, v)
        edges.extend(combinations(clique, 2))
        for w in _blade_members(params, (v + 1) % n)[: a - b]:
            edges.append((v, w))
    roles = (CHAIN,) * n + (BLADE,) * (n * (a - 1))
    return Graph.build(n * a, edges, loops, roles)


def _delete_vertex(g: Graph, victim: int) -> Graph:
    """New graph with `victim` and its incident edges removed, indices compacted."""
    remap = {v: i for i, v in enumerate(u for u in range(g.order) if u != victim)}
    edges = [(remap[u], remap[v]) for u, v in g.edges() if victim not in (u, v)]
    loops = [remap[v] for v in g.loops if v != victim]
    roles = tuple(g.roles[v] for v in range(g.order) if v != victim)
    return Graph.build(g.order - 1, edges, loops, roles)


def make_broken_chainsaw(params: ChainsawParams) -> Graph:
    """Build the broken chainsaw P(n, a, b): C(n+1, a, b) minus chain vertex 0.

    The orphaned blade keeps its remaining a-1 vertices as a clique.
    Surviving vertices are re-compacted, preserving the canonical order.
    """
    bigger = ChainsawParams(params.n + 1, params.a, params.b)
    return _delete_vertex(make_chainsaw(bigger), 0)


def export_graph(g: Graph, fmt: str) -> str:
    """Render a graph as deterministic text in one of EXPORT_FORMATS.

    edge-list: one "u v" line per edge, loops as "v v", sorted.
    dimacs: "p edge <order> <size>" then 1-indexed "e u v" lines.
    json: object with order, edges, loops, roles; round-trips through
    :func:`graph_from_json` to an identical graph.
    """
    pairs = sorted(g.edges() + [(v, v) for v in g.loops])
    if fmt == "edge-list":
        return "".join(f"{u} {v}\n" for u, v in pairs)
    if fmt == "dimacs":
        header = f"p edge {g.order} {len(pairs)}\n"
        return header + "".join(f"e {u + 1} {v + 1}\n" for u, v in pairs)
    if fmt == "json":
        obj = {
            "order": g.order,
            "edges": [[u, v] for u, v in g.edges()],
            "loops": sorted(g.loops),
            "roles": list(g.roles),
        }
        return json.dumps(obj, sort_keys=True) + "\n"
    raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")


def graph_from_json(text: str) -> Graph:
    """Rebuild a graph from its json export."""
    obj = json.loads(text)
    try:
        return Graph.build(
            order=obj["order"],
            edges=[tuple(e) for e in obj["edges"]],
            loops=obj["loops"],
            roles=obj["roles"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph json: {exc}") from exc
