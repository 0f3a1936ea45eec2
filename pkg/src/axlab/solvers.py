"""Exact optimizers over connected-cluster partitions.

Two routes are provided and cross-validated against each other in the tests:

* brute_force_optimum - exhaustive search per connected component (the
  compiled kernel enumerates every partition into connected blocks), valid
  for any graph whose components fit the vertex limit;
* structured_optimum - closed candidate spaces for the catalog families
  (cliques, stars, bridged clique pairs with n >= 6, rings of cliques),
  which reach sizes the brute-force route cannot.

Both objectives decompose as sums of per-cluster terms with the global edge
count (modularity) or the resolution parameter (CPM) held fixed, so optima
of a disjoint union combine additively across components. Scores inside the
search are integers: modularity terms are scaled by 4|E|^2 and CPM terms by
the denominator of gamma, which keeps every comparison exact.

All returned optima sets are complete: every optimal clustering is listed,
in canonical order, because downstream axiom checks quantify over ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .graph import Clustering, Graph, connected_components
from .generators import NetworkRecipe
from .kernel import best_connected_partitions
from .objectives import CPM, MODULARITY, GammaLike, as_gamma, cpm_score, modularity_score

DEFAULT_VERTEX_LIMIT = 12

_EXPANSION_CAP = 100_000


class SolverLimitError(ValueError):
    """Raised when a connected component exceeds the brute-force size limit."""

    def __init__(self, component: Iterable[int], limit: int):
        self.component = tuple(sorted(component))
        self.limit = limit
        super().__init__(
            f"component {list(self.component)} has {len(self.component)} vertices, "
            f"above the exact-solver limit of {limit}"
        )


@dataclass(frozen=True)
class OptimaSet:
    """Every optimal clustering together with the exact optimal value.

    value is None only for methods with no objective (and for the edgeless
    modularity convention below, where it is 0 by definition of an empty sum).
    """

    objective: str | None
    value: Fraction | None
    clusterings: tuple[Clustering, ...]
    gamma: Fraction | None = None

    def __post_init__(self):
        if not self.clusterings:
            raise ValueError("an optima set cannot be empty")

    def __contains__(self, clustering: Clustering) -> bool:
        return clustering in self.clusterings

    def to_json_dict(self) -> dict:
        value = None
        if self.value is not None:
            value = {
                "num": str(self.value.numerator),
                "den": str(self.value.denominator),
                "decimal": float(self.value),
            }
        out = {
            "objective": self.objective,
            "value": value,
            "clusterings": [c.as_lists() for c in self.clusterings],
        }
        if self.gamma is not None:
            out["gamma"] = str(self.gamma)
        return out


def _objective_params(objective: str, gamma: GammaLike | None, total_edges: int):
    """(mode, a, b, scale) for the integer-scaled kernel scoring."""
    if objective == MODULARITY:
        if gamma is not None:
            raise ValueError("modularity takes no gamma")
        return 0, total_edges, 1, 4 * total_edges * total_edges
    if objective == CPM:
        g = as_gamma(gamma)
        return 1, g.numerator, g.denominator, g.denominator
    raise ValueError(f"unknown objective {objective!r}")


def _combine(
    objective: str,
    gamma: Fraction | None,
    scale: int,
    per_component: list[tuple[int, list[tuple[frozenset[int], ...]]]],
) -> OptimaSet:
    """Cross-combine per-component optima into whole-graph clusterings."""
    total = sum(best for best, _ in per_component)
    count = 1
    for _, options in per_component:
        count *= len(options)
        if count > _EXPANSION_CAP:
            raise ValueError("optima set too large to enumerate")
    clusterings = []
    for choice in product(*(options for _, options in per_component)):
        blocks: list[frozenset[int]] = []
        for part in choice:
            blocks.extend(part)
        clusterings.append(Clustering(blocks))
    clusterings.sort(key=lambda c: c.as_lists())
    return OptimaSet(
        objective=objective,
        value=Fraction(total, scale),
        clusterings=tuple(clusterings),
        gamma=gamma,
    )


def brute_force_optimum(
    g: Graph,
    objective: str,
    gamma: GammaLike | None = None,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> OptimaSet:
    """All optimal connected-cluster partitions of g, found exhaustively.

    Works per connected component and refuses any component larger than
    vertex_limit. An edgeless graph admits exactly one feasible clustering
    (all singletons), which is returned with value 0: genuinely the CPM
    score, and the empty-sum convention for modularity, whose normalized
    form is otherwise undefined without edges.
    """
    gamma_frac = as_gamma(gamma) if objective == CPM else None
    if g.edge_count == 0:
        if objective not in (MODULARITY, CPM):
            raise ValueError(f"unknown objective {objective!r}")
        return OptimaSet(
            objective=objective,
            value=Fraction(0),
            clusterings=(Clustering.singletons(g.vertex_count),),
            gamma=gamma_frac,
        )
    mode, a, b, scale = _objective_params(objective, gamma, g.edge_count)
    per_component: list[tuple[int, list[tuple[frozenset[int], ...]]]] = []
    for comp in connected_components(g):
        if len(comp) > vertex_limit:
            raise SolverLimitError(comp, vertex_limit)
        old_ids = sorted(comp)
        index = {v: i for i, v in enumerate(old_ids)}
        local_adj = [0] * len(old_ids)
        for v in old_ids:
            mask = g.adjacency_masks[v]
            acc = 0
            while mask:
                low = mask & -mask
                u = low.bit_length() - 1
                mask ^= low
                acc |= 1 << index[u]
            local_adj[index[v]] = acc
        degrees = [g.degree(v) for v in old_ids]
        best, partitions = best_connected_partitions(local_adj, degrees, mode, a, b)
        options = [
            tuple(_mask_to_block(mask, old_ids) for mask in part) for part in partitions
        ]
        per_component.append((best, options))
    return _combine(objective, gamma_frac, scale, per_component)


def _mask_to_block(mask: int, old_ids: Sequence[int]) -> frozenset[int]:
    block = set()
    while mask:
        low = mask & -mask
        block.add(old_ids[low.bit_length() - 1])
        mask ^= low
    return frozenset(block)


def is_optimal(
    g: Graph,
    clustering,
    objective: str,
    gamma: GammaLike | None = None,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> tuple[bool, Fraction]:
    """Whether the clustering's score equals the optimum; margin = optimum - score."""
    optimum = brute_force_optimum(g, objective, gamma, vertex_limit)
    if g.edge_count == 0:
        score = cpm_score(g, clustering, gamma).total if objective == CPM else Fraction(0)
    elif objective == MODULARITY:
        score = modularity_score(g, clustering).total
    else:
        score = cpm_score(g, clustering, gamma).total
    margin = optimum.value - score
    return margin == 0, margin


# --- structured solver -------------------------------------------------------

STRUCTURED_KINDS = frozenset({"clique", "star", "pair_of_cliques", "ring_of_cliques"})


def structured_optimum(recipe: NetworkRecipe, objective: str = MODULARITY) -> OptimaSet:
    """Modularity optimum of a catalog recipe via proven candidate spaces.

    Component candidate spaces:
      clique           every grouping by integer partition of the size (all
                       clusterings of a clique with equal block sizes score
                       equally, so size profiles cover the space exactly);
      star             center block plus x singleton leaves, x in [0, p];
      pair_of_cliques  the whole component, the two cliques, and the six
                       residual splits that isolate a bridge endpoint
                       (complete for n >= 6; smaller n is refused);
      ring_of_cliques  blocks that are unions of cyclically consecutive
                       cliques (documented restriction, cross-validated
                       against brute force at small sizes).
    """
    if objective != MODULARITY:
        raise ValueError("the structured solver handles the modularity objective only")
    for comp in recipe.components:
        if comp["kind"] not in STRUCTURED_KINDS:
            raise ValueError(f"component kind {comp['kind']!r} is outside the structured catalog")
        if comp["kind"] == "pair_of_cliques" and comp["n"] < 6:
            raise ValueError("structured pair_of_cliques candidates require n >= 6")
    g = recipe.build()
    if g.edge_count == 0:
        return OptimaSet(
            objective=MODULARITY,
            value=Fraction(0),
            clusterings=(Clustering.singletons(g.vertex_count),),
        )
    total_edges = g.edge_count
    scale = 4 * total_edges * total_edges
    per_component: list[tuple[int, list[tuple[frozenset[int], ...]]]] = []
    for comp, (offset, size) in zip(recipe.components, recipe.component_spans()):
        handler = _STRUCTURED_HANDLERS[comp["kind"]]
        per_component.append(handler(g, comp, offset, total_edges))
    return _combine(MODULARITY, None, scale, per_component)


def _scaled_term(g: Graph, block: Iterable[int], total_edges: int) -> int:
    """Modularity cluster term scaled by 4|E|^2: 4|E| e_c - d_c^2."""
    block = frozenset(block)
    mask = 0
    for v in block:
        mask |= 1 << v
    e = 0
    d = 0
    for v in block:
        e += (g.adjacency_masks[v] & mask).bit_count()
        d += g.degree(v)
    e //= 2
    return 4 * total_edges * e - d * d


def _best_options(scores: dict, expand) -> tuple[int, list[tuple[frozenset[int], ...]]]:
    best = max(scores.values())
    options: list[tuple[frozenset[int], ...]] = []
    for key, score in scores.items():
        if score == best:
            options.extend(expand(key))
    if len(options) > _EXPANSION_CAP:
        raise ValueError("structured optimum tie expansion too large")
    return best, options


def integer_partitions(k: int) -> list[tuple[int, ...]]:
    """All partitions of k as non-increasing tuples."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(k, k, ())
    return out


def partitions_with_profile(
    elements: Sequence[int], profile: Sequence[int]
) -> list[tuple[frozenset[int], ...]]:
    """All set partitions of `elements` whose block sizes match `profile`."""
    profile = sorted(profile, reverse=True)
    if sum(profile) != len(elements):
        raise ValueError("profile does not cover the element set")
    results: list[tuple[frozenset[int], ...]] = []

    def rec(remaining: tuple[int, ...], sizes: tuple[int, ...], acc: list[frozenset[int]]):
        if not sizes:
            results.append(tuple(acc))
            return
        anchor, rest = remaining[0], remaining[1:]
        for s in sorted(set(sizes), reverse=True):
            left = list(sizes)
            left.remove(s)
            for extra in combinations(rest, s - 1):
                block = frozenset((anchor,) + extra)
                acc.append(block)
                rec(tuple(v for v in rest if v not in block), tuple(left), acc)
                acc.pop()
                if len(results) > _EXPANSION_CAP:
                    raise ValueError("profile expansion too large")

    rec(tuple(sorted(elements)), tuple(profile), [])
    return results


def _clique_handler(g, comp, offset, total_edges):
    k = comp["n"]
    vertices = list(range(offset, offset + k))
    scores = {}
    for profile in integer_partitions(k):
        score = 0
        used = 0
        for s in profile:
            block = vertices[used : used + s]
            used += s
            score += _scaled_term(g, block, total_edges)
        scores[profile] = score

    def expand(profile):
        if len(profile) == 1:
            return [(frozenset(vertices),)]
        return partitions_with_profile(vertices, profile)

    return _best_options(scores, expand)


def _star_handler(g, comp, offset, total_edges):
    p = comp["p"]
    center = offset
    leaves = list(range(offset + 1, offset + p + 1))
    scores = {}
    for x in range(p + 1):
        main = [center] + leaves[: p - x]
        score = _scaled_term(g, main, total_edges)
        for leaf in leaves[p - x :]:
            score += _scaled_term(g, [leaf], total_edges)
        scores[x] = score

    def expand(x):
        if x == 0:
            return [(frozenset([center] + leaves),)]
        out = []
        for singles in combinations(leaves, x):
            main = frozenset([center] + [v for v in leaves if v not in singles])
            out.append((main,) + tuple(frozenset([s]) for s in singles))
            if len(out) > _EXPANSION_CAP:
                raise ValueError("star tie expansion too large")
        return out

    return _best_options(scores, expand)


def _pair_handler(g, comp, offset, total_edges):
    n = comp["n"]
    a = frozenset(range(offset, offset + n))
    b = frozenset(range(offset + n, offset + 2 * n))
    a0 = frozenset(v for v in a if v != offset)
    b0 = frozenset(v for v in b if v != offset + n)
    sa = frozenset([offset])
    sb = frozenset([offset + n])
    candidates = {
        "whole": (a | b,),
        "split": (a, b),
        "opt1": (a0, sa, b0, sb),
        "opt2": (a0, sa, b),
        "opt3": (a, b0, sb),
        "opt4": (a0, b0, sa | sb),
        "opt5": (a | sb, b0),
        "opt6": (a0, b | sa),
    }
    scores = {
        key: sum(_scaled_term(g, block, total_edges) for block in blocks)
        for key, blocks in candidates.items()
    }
    return _best_options(scores, lambda key: [candidates[key]])


def _multiset_permutations(items: Sequence[int]) -> list[tuple[int, ...]]:
    items = sorted(items)
    results: list[tuple[int, ...]] = []

    def rec(pool: list[int], acc: list[int]):
        if not pool:
            results.append(tuple(acc))
            return
        seen = set()
        for i, item in enumerate(pool):
            if item in seen:
                continue
            seen.add(item)
            rec(pool[:i] + pool[i + 1 :], acc + [item])
            if len(results) > _EXPANSION_CAP:
                raise ValueError("arrangement expansion too large")

    rec(list(items), [])
    return results


def _ring_cut_subsets(m: int, profile: Sequence[int]) -> list[tuple[int, ...]]:
    """All bridge subsets whose cyclic arc lengths realize the profile.

    Bridge i joins clique i to clique i+1 (mod m); cutting subset S of
    bridges leaves arcs whose lengths are the cyclic gaps between cuts.
    """
    out = set()
    for arrangement in _multiset_permutations(profile):
        for first in range(m):
            cuts = []
            pos = first
            for length in arrangement:
                cuts.append(pos % m)
                pos += length
            out.add(tuple(sorted(cuts)))
            if len(out) > _EXPANSION_CAP:
                raise ValueError("ring tie expansion too large")
    return sorted(out)


def _ring_handler(g, comp, offset, total_edges):
    m, n = comp["m"], comp["n"]

    def arc_block(start: int, length: int) -> frozenset[int]:
        return frozenset(
            offset + ((start + i) % m) * n + j for i in range(length) for j in range(n)
        )

    # All arcs of equal length are isomorphic with identical degree profiles,
    # so one representative scores the lot.
    arc_score = {
        t: _scaled_term(g, arc_block(0, t), total_edges) for t in range(1, m)
    }
    scores: dict = {("whole",): _scaled_term(g, arc_block(0, m), total_edges)}
    for profile in integer_partitions(m):
        if len(profile) == 1:
            continue  # a single arc of length m is the uncut whole component
        scores[profile] = sum(arc_score[t] for t in profile)

    def expand(key):
        if key == ("whole",):
            return [(arc_block(0, m),)]
        out = []
        for cuts in _ring_cut_subsets(m, key):
            blocks = []
            for i, cut in enumerate(cuts):
                nxt = cuts[(i + 1) % len(cuts)]
                length = (nxt - cut) % m
                blocks.append(arc_block((cut + 1) % m, length))
            out.append(tuple(blocks))
        return out

    return _best_options(scores, expand)


_STRUCTURED_HANDLERS = {
    "clique": _clique_handler,
    "star": _star_handler,
    "pair_of_cliques": _pair_handler,
    "ring_of_cliques": _ring_handler,
}
