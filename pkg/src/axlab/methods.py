"""The six clustering procedures behind one interface.

A MethodSpec names a procedure plus its parameters; run_method maps a graph
to the full set of optimal clusterings (a singleton set for the
deterministic, non-optimizing procedures). Identical inputs always give
identical canonical outputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .generators import NetworkRecipe
from .graph import Clustering, Graph, connected_components, degeneracy, induced_subgraph, k_core
from .objectives import CPM, MODULARITY, as_gamma
from .solvers import (
    DEFAULT_VERTEX_LIMIT,
    OptimaSet,
    STRUCTURED_KINDS,
    brute_force_optimum,
    structured_optimum,
)

COMPONENTS = "components_are_clusters"
NODES = "nodes_are_clusters"
MODULARITY_OPT = "modularity_opt"
CPM_OPT = "cpm_opt"
IKC = "ikc"

_KINDS = (COMPONENTS, NODES, MODULARITY_OPT, CPM_OPT, IKC)


@dataclass(frozen=True)
class MethodSpec:
    """One clustering method plus its parameters.

    kind "ikc" with modularity_filter=True is the default variant that keeps
    only positive-modularity clusters; with modularity_filter=False it is the
    unfiltered variant. vertex_limit bounds the exact solver for the two
    optimizer kinds.
    """

    kind: str
    gamma: Fraction | None = None
    k0: int = 0
    modularity_filter: bool = True
    vertex_limit: int = DEFAULT_VERTEX_LIMIT

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown method kind {self.kind!r}")
        if self.kind == CPM_OPT:
            object.__setattr__(self, "gamma", as_gamma(self.gamma))
        elif self.gamma is not None:
            raise ValueError(f"{self.kind} takes no gamma")
        if self.k0 < 0:
            raise ValueError("k0 must be non-negative")
        if self.vertex_limit < 1:
            raise ValueError("vertex_limit must be positive")

    @property
    def is_optimizer(self) -> bool:
        return self.kind in (MODULARITY_OPT, CPM_OPT)

    def label(self) -> str:
        if self.kind == COMPONENTS:
            return "Components"
        if self.kind == NODES:
            return "Nodes"
        if self.kind == MODULARITY_OPT:
            return "Modularity"
        if self.kind == CPM_OPT:
            return f"CPM({self.gamma})"
        return "IKC" if self.modularity_filter else "IKC(no-mod)"

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == CPM_OPT:
            out["gamma"] = str(self.gamma)
        if self.kind == IKC:
            out["k0"] = self.k0
            out["modularity_filter"] = self.modularity_filter
        if self.is_optimizer and self.vertex_limit != DEFAULT_VERTEX_LIMIT:
            out["vertex_limit"] = self.vertex_limit
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "MethodSpec":
        return cls(
            kind=data["kind"],
            gamma=data.get("gamma"),
            k0=data.get("k0", 0),
            modularity_filter=data.get("modularity_filter", True),
            vertex_limit=data.get("vertex_limit", DEFAULT_VERTEX_LIMIT),
        )

    @classmethod
    def from_json(cls, text: str) -> "MethodSpec":
        return cls.from_json_dict(json.loads(text))

    def with_limit(self, vertex_limit: int) -> "MethodSpec":
        return replace(self, vertex_limit=vertex_limit)


def components_method() -> MethodSpec:
    return MethodSpec(COMPONENTS)


def nodes_method() -> MethodSpec:
    return MethodSpec(NODES)


def modularity_method(vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> MethodSpec:
    return MethodSpec(MODULARITY_OPT, vertex_limit=vertex_limit)


def cpm_method(gamma, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> MethodSpec:
    return MethodSpec(CPM_OPT, gamma=gamma, vertex_limit=vertex_limit)


def ikc_method(modularity_filter: bool = True, k0: int = 0) -> MethodSpec:
    return MethodSpec(IKC, k0=k0, modularity_filter=modularity_filter)


def components_are_clusters(g: Graph) -> Clustering:
    return Clustering(connected_components(g))


def nodes_are_clusters(g: Graph) -> Clustering:
    return Clustering.singletons(g.vertex_count)


def _cluster_modularity_positive(ref: Graph, vertices: frozenset[int]) -> bool:
    """Whether the cluster's modularity term within `ref` is strictly positive."""
    total = ref.edge_count
    mask = 0
    for v in vertices:
        mask |= 1 << v
    e = 0
    d = 0
    for v in vertices:
        e += (ref.adjacency_masks[v] & mask).bit_count()
        d += ref.degree(v)
    e //= 2
    # e/|E| - (d/2|E|)^2 > 0  <=>  4|E| e - d^2 > 0, exactly in integers.
    return 4 * total * e - d * d > 0


def ikc_run(
    g: Graph,
    k0: int = 0,
    modularity_filter: bool = True,
    score_against: str = "input",
) -> Clustering:
    """Iterative top-core peeling.

    Repeatedly take the largest k with a k-core in the working graph, extract
    every connected k-core (smallest-vertex order), and recurse on the rest;
    once the top k falls below max(k0, 1) everything left becomes singletons.
    With the filter on, an extracted core is kept only if its modularity term
    is strictly positive; rejected cores dissolve into singletons.

    score_against selects the network the filter scores candidates in:
    "input" (default) freezes degrees and the edge total at invocation,
    "residual" re-scores within the shrinking working graph.
    """
    if score_against not in ("input", "residual"):
        raise ValueError("score_against must be 'input' or 'residual'")
    clusters: list[frozenset[int]] = []
    remaining = set(range(g.vertex_count))
    while remaining:
        working, old_ids = induced_subgraph(g, remaining)
        k = degeneracy(working)
        if k < max(k0, 1):
            clusters += [frozenset([v]) for v in remaining]
            break
        cores = k_core(working, k)
        for core in cores:
            vertices = frozenset(old_ids[i] for i in core)
            if modularity_filter:
                if score_against == "input":
                    accepted = _cluster_modularity_positive(g, vertices)
                else:
                    accepted = _cluster_modularity_positive(
                        working, frozenset(core)
                    )
            else:
                accepted = True
            if accepted:
                clusters.append(vertices)
            else:
                clusters += [frozenset([v]) for v in vertices]
            remaining -= vertices
    return Clustering(clusters)


def _recipe_fits_structured(recipe: NetworkRecipe | None) -> bool:
    if recipe is None:
        return False
    return all(
        c["kind"] in STRUCTURED_KINDS and (c["kind"] != "pair_of_cliques" or c["n"] >= 6)
        for c in recipe.components
    )


def run_method(spec: MethodSpec, g: Graph, recipe: NetworkRecipe | None = None) -> OptimaSet:
    """Apply a method; optimizers return every optimum, others a singleton set.

    When a catalog recipe for g is supplied, the modularity optimizer routes
    through the structured solver, which handles components far beyond the
    brute-force limit.
    """
    if spec.kind == COMPONENTS:
        return OptimaSet(None, None, (components_are_clusters(g),))
    if spec.kind == NODES:
        return OptimaSet(None, None, (nodes_are_clusters(g),))
    if spec.kind == IKC:
        clustering = ikc_run(g, k0=spec.k0, modularity_filter=spec.modularity_filter)
        return OptimaSet(None, None, (clustering,))
    if spec.kind == MODULARITY_OPT:
        if _recipe_fits_structured(recipe):
            return structured_optimum(recipe, MODULARITY)
        return brute_force_optimum(g, MODULARITY, vertex_limit=spec.vertex_limit)
    return brute_force_optimum(g, CPM, gamma=spec.gamma, vertex_limit=spec.vertex_limit)
