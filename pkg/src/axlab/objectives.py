"""Exact evaluation of the two clustering objectives, plus the closed-form
threshold quantities used by the counterexample analyses.

Everything is computed in rational arithmetic. Sign tests against thresholds
such as half-integers must be exact, so floats appear only in serialized
reports, never in comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .graph import Clustering, Graph

GammaLike = Union[Fraction, str, int, float]

MODULARITY = "modularity"
CPM = "cpm"


def as_gamma(value: GammaLike) -> Fraction:
    """Coerce a resolution parameter to an exact Fraction in (0, 1)."""
    gamma = Fraction(value)
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must be in (0, 1), got {gamma}")
    return gamma


@dataclass(frozen=True)
class ScoreBreakdown:
    """Per-cluster objective terms; total is their exact sum."""

    objective: str
    per_cluster: tuple[tuple[frozenset[int], Fraction], ...]
    total: Fraction
    gamma: Fraction | None = None

    def term_for(self, cluster: Iterable[int]) -> Fraction:
        want = frozenset(cluster)
        for block, score in self.per_cluster:
            if block == want:
                return score
        raise KeyError(f"no cluster {sorted(want)}")

    def to_json_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": str(x.numerator), "den": str(x.denominator), "decimal": float(x)}

        out = {
            "objective": self.objective,
            "total": frac(self.total),
            "per_cluster": [
                {"vertices": sorted(block), "score": frac(score)}
                for block, score in self.per_cluster
            ],
        }
        if self.gamma is not None:
            out["gamma"] = str(self.gamma)
        return out


def _normalize(g: Graph, clustering) -> Clustering:
    c = clustering if isinstance(clustering, Clustering) else Clustering(clustering)
    if not c.is_partition_of(g.vertex_count):
        raise ValueError("clustering is not a partition of the graph's vertices")
    return c


def _block_counts(g: Graph, block: frozenset[int]) -> tuple[int, int]:
    """(edges inside block, sum of full-graph degrees over block)."""
    mask = 0
    for v in block:
        mask |= 1 << v
    e = 0
    d = 0
    for v in block:
        e += (g.adjacency_masks[v] & mask).bit_count()
        d += g.degree(v)
    return e // 2, d


def modularity_cluster_term(g: Graph, block: Iterable[int]) -> Fraction:
    """One cluster's modularity contribution: e_c/|E| - (d_c / 2|E|)^2.

    d_c counts every neighbor of a member, inside the cluster or not.
    """
    total_edges = g.edge_count
    if total_edges == 0:
        raise ValueError("modularity is undefined on an edgeless graph")
    e, d = _block_counts(g, frozenset(block))
    return Fraction(e, total_edges) - Fraction(d, 2 * total_edges) ** 2


def modularity_score(g: Graph, clustering) -> ScoreBreakdown:
    c = _normalize(g, clustering)
    if g.edge_count == 0:
        raise ValueError("modularity is undefined on an edgeless graph")
    per = tuple((block, modularity_cluster_term(g, block)) for block in c.blocks)
    total = sum((score for _, score in per), Fraction(0))
    return ScoreBreakdown(MODULARITY, per, total)


def cpm_cluster_term(g: Graph, block: Iterable[int], gamma: GammaLike) -> Fraction:
    """One cluster's score: e_c - gamma * C(n_c, 2)."""
    gamma = as_gamma(gamma)
    block = frozenset(block)
    e, _ = _block_counts(g, block)
    n = len(block)
    return e - gamma * Fraction(n * (n - 1), 2)


def cpm_score(g: Graph, clustering, gamma: GammaLike) -> ScoreBreakdown:
    gamma = as_gamma(gamma)
    c = _normalize(g, clustering)
    per = tuple((block, cpm_cluster_term(g, block, gamma)) for block in c.blocks)
    total = sum((score for _, score in per), Fraction(0))
    return ScoreBreakdown(CPM, per, total, gamma=gamma)


def delta_q_pair(e: int, total_edges: int) -> Fraction:
    """Score gap between keeping a bridged pair of e-edge cliques whole versus
    splitting it into the two cliques: (2|E| - 4e^2 - 4e - 1) / (2|E|^2).

    Positive exactly when |E| > 2e^2 + 2e + 1/2, so the whole component wins
    only in sufficiently large surroundings.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    if total_edges < 2 * e + 1:
        raise ValueError("total_edges must cover the bridged pair itself")
    return Fraction(2 * total_edges - 4 * e * e - 4 * e - 1, 2 * total_edges * total_edges)


def star_partition_modularity(p: int, x: int, total_edges: int) -> Fraction:
    """Modularity of a p-star clustered as (center + p - x leaves) plus x
    singleton leaves: (4px - 4|E|x - x^2 - x - 4p^2 + 4|E|p) / (4|E|^2)."""
    if not 0 <= x <= p:
        raise ValueError("x must lie in [0, p]")
    if total_edges < p:
        raise ValueError("total_edges must be at least p")
    e = total_edges
    return Fraction(4 * p * x - 4 * e * x - x * x - x - 4 * p * p + 4 * e * p, 4 * e * e)


def delta_q_interedge(e: int, total_edges: int) -> Fraction:
    """Score gap between keeping the bridged two-module gadget (e^2 and e^2-1
    edges) whole versus splitting across its bridge:
    (2|E| - 4e^4 + 4e^2 + 1) / (2|E|^2); negative iff |E| < 2e^4 - 2e^2 - 1/2."""
    if e < 2:
        raise ValueError("e must be >= 2")
    return Fraction(
        2 * total_edges - 4 * e ** 4 + 4 * e * e + 1, 2 * total_edges * total_edges
    )


def cpm_connectivity_bound(gamma: GammaLike, n: int) -> Fraction:
    """Lower bound gamma * (n - 1) on any edge cut of an n-vertex cluster in
    an optimal solution at resolution gamma."""
    if n < 2:
        raise ValueError("bound applies to clusters with n >= 2")
    return as_gamma(gamma) * (n - 1)


def cpm_connectivity_f(gamma: GammaLike, n: int) -> int:
    """Integer connectivity profile ceil(gamma * (n - 1))."""
    return math.ceil(cpm_connectivity_bound(gamma, n))
