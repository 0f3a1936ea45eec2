"""Catalog network constructors and reproducible build recipes.

Every generator is deterministic: the same arguments always produce the same
labeled graph, so counterexamples and verdict evidence replay bit-exactly.
The named counterexample networks (N1, N1p, N2, N2p, N3, N3p) are fixed
realizations that include their disjoint single-edge companion component.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, tuple[int, ...]]:
    """Disjoint union; returns the graph and the vertex offset of each part."""
    offsets = []
    total = 0
    edges: list[tuple[int, int]] = []
    for g in graphs:
        offsets.append(total)
        edges += [(u + total, v + total) for u, v in g.sorted_edges()]
        total += g.vertex_count
    return Graph(total, edges), tuple(offsets)


def clique(n: int) -> Graph:
    if n < 1:
        raise ValueError("clique needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def p_star(p: int) -> Graph:
    """Star with center 0 and p degree-1 leaves (p edges)."""
    if p < 1:
        raise ValueError("star needs p >= 1")
    return Graph(p + 1, [(0, k) for k in range(1, p + 1)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def edge_pair() -> Graph:
    """A single edge on two vertices."""
    return Graph(2, [(0, 1)])


def pair_of_cliques(n: int) -> Graph:
    """Two n-cliques A (0..n-1) and B (n..2n-1) joined by the bridge (0, n)."""
    if n < 2:
        raise ValueError("pair_of_cliques needs n >= 2")
    edges = list(combinations(range(n), 2))
    edges += [(u + n, v + n) for u, v in combinations(range(n), 2)]
    edges.append((0, n))
    return Graph(2 * n, edges)


def ring_of_cliques(m: int, n: int) -> Graph:
    """m n-cliques in a cycle; clique i occupies [i*n, (i+1)*n).

    Bridge i runs from vertex 1 of clique i to vertex 0 of clique i+1 (mod m),
    so for n >= 3 the two bridge attachments within each clique are distinct.
    """
    if m < 3 or n < 3:
        raise ValueError("ring_of_cliques needs m >= 3 and n >= 3")
    edges: list[tuple[int, int]] = []
    for i in range(m):
        base = i * n
        edges += [(base + u, base + v) for u, v in combinations(range(n), 2)]
        edges.append((base + 1, ((i + 1) % m) * n))
    return Graph(m * n, edges)


# Fixed counterexample networks. Each is one displayed component plus a
# disjoint single edge, matching the construction the verdicts rely on.
#
#   N1  = 6-cycle 0-1-2-3-4-5.
#   N1p = N1 plus chords (0,2), (0,3), (1,3), so {0,1,2,3} becomes a K4
#         (a 3-core) while vertices 4 and 5 keep degree 2 (no 4-core).
#   N2  = K4 {0,1,2,3} and 4-cycle {4,5,6,7} joined by the connector (0,4).
#   N2p = N2 plus diagonals (4,6), (5,7): the 8-vertex component has minimum
#         degree 3 and forms a single 3-core with no 4-core inside.
#   N3  = triangle {0,1,2} with 7 pendant leaves attached 3/2/2, so the
#         triangle's degree sum is 13 out of 11 total edges.
#   N3p = N3 minus the 7 pendant edges: a triangle, a single edge, and
#         seven isolated vertices.

_IKC_FIG_ALIASES = {
    "N1'": "N1p",
    "N2'": "N2p",
    "N3'": "N3p",
}


def ikc_fig_network(which: str) -> Graph:
    key = _IKC_FIG_ALIASES.get(which, which)
    cyc = [(i, (i + 1) % 6) for i in range(6)]
    if key == "N1":
        return Graph(8, cyc + [(6, 7)])
    if key == "N1p":
        return Graph(8, cyc + [(0, 2), (0, 3), (1, 3), (6, 7)])
    k4 = list(combinations(range(4), 2))
    square = [(4, 5), (5, 6), (6, 7), (4, 7)]
    if key == "N2":
        return Graph(10, k4 + square + [(0, 4), (8, 9)])
    if key == "N2p":
        return Graph(10, k4 + square + [(0, 4), (4, 6), (5, 7), (8, 9)])
    triangle = [(0, 1), (0, 2), (1, 2)]
    pendants = [(0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (2, 8), (2, 9)]
    if key == "N3":
        return Graph(12, triangle + pendants + [(10, 11)])
    if key == "N3p":
        return Graph(12, triangle + [(10, 11)])
    raise ValueError(f"unknown figure network {which!r}")


def edge_budget_module(edge_count: int) -> Graph:
    """Connected module with exactly `edge_count` edges and minimum degree >= 2.

    Built from the smallest clique with at least that many edges by removing
    surplus edges highest-pair-first, skipping any removal that would break
    connectivity or drop a degree below 2.
    """
    if edge_count < 3:
        raise ValueError("edge budget must be at least 3")
    m = 3
    while m * (m - 1) // 2 < edge_count:
        m += 1
    edges = set(combinations(range(m), 2))
    deg = {v: m - 1 for v in range(m)}
    for u, v in sorted(edges, reverse=True):
        if len(edges) == edge_count:
            break
        if deg[u] <= 2 or deg[v] <= 2:
            continue
        candidate = edges - {(u, v)}
        if _connected_edge_set(m, candidate):
            edges = candidate
            deg[u] -= 1
            deg[v] -= 1
    if len(edges) != edge_count:
        raise ValueError(f"could not realize a module with {edge_count} edges")
    return Graph(m, edges)


def _connected_edge_set(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def interedge_module(e: int) -> Graph:
    """One connected component: an e^2-edge module and an (e^2-1)-edge module
    joined by a single bridge, for a total of exactly 2*e^2 edges."""
    if e < 2:
        raise ValueError("interedge module needs e >= 2")
    first = edge_budget_module(e * e)
    second = edge_budget_module(e * e - 1)
    combined, offsets = disjoint_union([first, second])
    return combined.with_edges([(0, offsets[1])])


def _clique_size_for_edges(e: int) -> int:
    """The n with C(n, 2) == e, or an error when e is not triangular."""
    n = 2
    while n * (n - 1) // 2 < e:
        n += 1
    if n * (n - 1) // 2 != e:
        raise ValueError(f"{e} is not C(n, 2) for any integer n")
    return n


def appendix_recipe(variant: str, e: int) -> "NetworkRecipe":
    """Recipe for a bridged-clique-pair component alongside a context component.

    The context is a 2e-star, a (2e+1)-clique, or the bridged two-module
    gadget with e^2 and e^2-1 edges; e must equal C(n, 2) for some n >= 6.
    """
    n = _clique_size_for_edges(e)
    if n < 6:
        raise ValueError("requires clique size n >= 6, i.e. e = C(n, 2) with n >= 6")
    base = {"kind": "pair_of_cliques", "n": n}
    if variant == "star_context":
        return NetworkRecipe([base, {"kind": "star", "p": 2 * e}])
    if variant == "clique_context":
        return NetworkRecipe([base, {"kind": "clique", "n": 2 * e + 1}])
    if variant == "interedge_context":
        return NetworkRecipe([base, {"kind": "interedge_module", "e": e}])
    raise ValueError(f"unknown variant {variant!r}")


def appendix_network(variant: str, e: int) -> Graph:
    return appendix_recipe(variant, e).build()


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Uniform random graph (fuzz input only); fully determined by the seed."""
    if not 0 <= edge_probability <= 1:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_probability
    ]
    return Graph(n, edges)


_KIND_BUILDERS = {
    "clique": lambda p: clique(p["n"]),
    "star": lambda p: p_star(p["p"]),
    "path": lambda p: path_graph(p["n"]),
    "cycle": lambda p: cycle_graph(p["n"]),
    "pair_of_cliques": lambda p: pair_of_cliques(p["n"]),
    "ring_of_cliques": lambda p: ring_of_cliques(p["m"], p["n"]),
    "edge_pair": lambda p: edge_pair(),
    "ikc_fig": lambda p: ikc_fig_network(p["which"]),
    "edge_budget_module": lambda p: edge_budget_module(p["edge_count"]),
    "interedge_module": lambda p: interedge_module(p["e"]),
}


@dataclass(frozen=True)
class NetworkRecipe:
    """Declarative description of a network as a disjoint union of catalog parts.

    Serializes to JSON as {"components": [{"kind": ..., ...params}, ...]}.
    """

    components: tuple[dict, ...]

    def __init__(self, components: Iterable[dict]):
        comps = []
        for comp in components:
            comp = dict(comp)
            kind = comp.get("kind")
            if kind not in _KIND_BUILDERS:
                raise ValueError(f"unknown component kind {kind!r}")
            comps.append(comp)
        object.__setattr__(self, "components", tuple(comps))

    def component_graphs(self) -> list[Graph]:
        return [_KIND_BUILDERS[c["kind"]](c) for c in self.components]

    def build(self) -> Graph:
        return disjoint_union(self.component_graphs())[0]

    def component_spans(self) -> list[tuple[int, int]]:
        """(offset, vertex_count) of each component inside the built graph."""
        spans = []
        offset = 0
        for g in self.component_graphs():
            spans.append((offset, g.vertex_count))
            offset += g.vertex_count
        return spans

    def to_json(self) -> str:
        return json.dumps({"components": [dict(c) for c in self.components]})

    @classmethod
    def from_json(cls, text: str) -> "NetworkRecipe":
        data = json.loads(text)
        if not isinstance(data, dict) or "components" not in data:
            raise ValueError('recipe JSON must look like {"components": [...]}')
        return cls(data["components"])
