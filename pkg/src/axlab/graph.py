"""Immutable simple-graph core: components, k-cores, exact min cuts, induced subgraphs.

Vertices are dense integers 0..vertex_count-1 and edges are unordered pairs,
so every structure here has one canonical form and equality is set equality.
All operations are pure; Graph and Clustering values never mutate after
construction, which makes them safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    """A simple unweighted undirected graph (no self-loops, no multi-edges)."""

    __slots__ = ("vertex_count", "edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{vertex_count - 1}")
            canon.add((u, v) if u < v else (v, u))
        adj = [0] * vertex_count
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        return self._adj

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self._adj[v]
        return tuple(u for u in range(self.vertex_count) if mask >> u & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1) if u != v else False

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with additional edges (endpoints must be in range)."""
        return Graph(self.vertex_count, list(self.edges) + list(extra))

    def without_edges(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges removed; missing edges are an error."""
        drop = {(u, v) if u < v else (v, u) for u, v in gone}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return Graph(self.vertex_count, self.edges - drop)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {self.sorted_edges()})"


class Clustering:
    """A partition of a vertex set into disjoint clusters, held canonically.

    Clusters are frozensets ordered by their smallest member, so two
    clusterings are equal exactly when they are the same partition.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("empty cluster")
        total = sum(len(b) for b in bs)
        union = frozenset().union(*bs) if bs else frozenset()
        if len(union) != total:
            raise ValueError("clusters overlap")
        object.__setattr__(self, "blocks", tuple(sorted(bs, key=min)))

    def __setattr__(self, name, value):
        raise AttributeError("Clustering is immutable")

    @classmethod
    def singletons(cls, n: int) -> "Clustering":
        return cls([v] for v in range(n))

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def is_partition_of(self, vertex_count: int) -> bool:
        return self.vertices() == frozenset(range(vertex_count))

    def cluster_of(self, v: int) -> frozenset[int]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def refines(self, other: "Clustering") -> bool:
        """True when every cluster here is contained in some cluster of `other`."""
        return all(any(b <= ob for ob in other.blocks) for b in self.blocks)

    def non_singletons(self) -> tuple[frozenset[int], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> "Clustering":
        return cls(lists)

    def relabel(self, mapping: Sequence[int]) -> "Clustering":
        """Apply a vertex relabeling (new id = mapping[old id])."""
        return Clustering([{mapping[v] for v in b} for b in self.blocks])

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, Clustering) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"Clustering({self.as_lists()})"


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.vertex_count
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            mask = g.adjacency_masks[x]
            while mask:
                low = mask & -mask
                y = low.bit_length() - 1
                mask ^= low
                if not seen[y]:
                    seen[y] = True
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def _split_into_components(g: Graph, alive: set[int]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by `alive`, by smallest member."""
    remaining = set(alive)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        remaining.discard(start)
        while stack:
            x = stack.pop()
            mask = g.adjacency_masks[x]
            while mask:
                low = mask & -mask
                y = low.bit_length() - 1
                mask ^= low
                if y in remaining:
                    remaining.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def k_core(g: Graph, k: int) -> list[frozenset[int]]:
    """All k-cores: maximal connected subgraphs of minimum internal degree >= k.

    Vertices of degree below k are peeled until a fixpoint; each connected
    component of the remainder is one core. Empty list when nothing survives.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    alive = set(range(g.vertex_count))
    deg = {v: g.degree(v) for v in alive}
    queue = [v for v in alive if deg[v] < k]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        mask = g.adjacency_masks[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            if u in alive:
                deg[u] -= 1
                if deg[u] < k:
                    queue.append(u)
    if not alive:
        return []
    return _split_into_components(g, alive)


def degeneracy(g: Graph) -> int:
    """Largest k for which a k-core exists; 0 for edgeless graphs."""
    k = 0
    while k_core(g, k + 1):
        k += 1
    return k


def min_cut(g: Graph, members: Iterable[int]) -> int:
    """Exact global minimum edge cut of the subgraph induced by `members`.

    Uses the deterministic maximum-adjacency (Stoer-Wagner) contraction scheme
    with unit edge weights; ties in the selection order break toward the
    smaller vertex id so repeated runs are identical. The induced subgraph
    must be connected and have at least two vertices.
    """
    vs = sorted(set(members))
    if len(vs) < 2:
        raise ValueError("min cut needs at least two vertices")
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} outside graph")
    index = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u in index and v in index:
            i, j = index[u], index[v]
            w[i][j] = w[j][i] = 1
    if len(_split_into_components(induced_subgraph(g, vs)[0], set(range(n)))) != 1:
        raise ValueError("min cut undefined: induced subgraph is disconnected")

    active = list(range(n))
    best: int | None = None
    while len(active) > 1:
        a = active[0]
        order = [a]
        wsum = {v: w[a][v] for v in active[1:]}
        cut_of_phase = 0
        while wsum:
            nxt = min(wsum, key=lambda v: (-wsum[v], v))
            cut_of_phase = wsum.pop(nxt)
            order.append(nxt)
            for v in wsum:
                wsum[v] += w[nxt][v]
        t, s = order[-1], order[-2]
        if best is None or cut_of_phase < best:
            best = cut_of_phase
        for v in active:
            if v not in (s, t):
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        active.remove(t)
    assert best is not None
    return best


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by `members` plus the relabeling map.

    Returns (subgraph, old_ids) where local vertex i corresponds to
    old_ids[i]; old_ids is sorted, so the relabeling is canonical and
    clusterings can be translated in both directions.
    """
    old_ids = tuple(sorted(set(members)))
    for v in old_ids:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} outside graph")
    to_new = {v: i for i, v in enumerate(old_ids)}
    edges = [
        (to_new[u], to_new[v]) for u, v in g.edges if u in to_new and v in to_new
    ]
    return Graph(len(old_ids), edges), old_ids


def to_local(blocks: Iterable[Iterable[int]], old_ids: Sequence[int]) -> Clustering:
    """Translate clusters given in original ids onto the induced subgraph."""
    to_new = {v: i for i, v in enumerate(old_ids)}
    return Clustering([{to_new[v] for v in b} for b in blocks])


def to_global(clustering: Clustering, old_ids: Sequence[int]) -> Clustering:
    """Translate a clustering of an induced subgraph back to original ids."""
    return clustering.relabel(old_ids)


# Edge-list text format: header "n <vertex_count>", one "u v" line per edge
# (0-based, u < v on output), lines starting with "#" ignored.

def to_edgelist_text(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist_text(text: str) -> Graph:
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if vertex_count is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ValueError(f"line {lineno}: expected header 'n <vertex_count>'")
            vertex_count = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if vertex_count is None:
        raise ValueError("missing 'n <vertex_count>' header")
    return Graph(vertex_count, edges)


def write_edgelist(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edgelist_text(g))


def read_edgelist(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edgelist_text(fh.read())
