"""Verdict-matrix runner: every bundled method against every axiom.

Each cell of the matrix runs the matching checker at desk scale with
seed-deterministic probe sets (curated catalog networks plus fuzz graphs)
and compares the outcome against the expected results matrix. The report is
a pure function of the run configuration: same seed, same bytes, regardless
of thread count.
"""

from __future__ import annotations

import json
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .axioms import (
    ADD_INTRA,
    AxiomVerdict,
    COUNTEREXAMPLE_FOUND,
    DirectedProbe,
    PASS_ALL_PROBES,
    Perturbation,
    REFUTED_EXHAUSTIVELY,
    REMOVE_INTER,
    WITNESS_VERIFIED,
    check_connectivity,
    check_consistency,
    check_fixed_point,
    check_pair_of_cliques,
    check_richness,
    cpm_pair_threshold,
)
from .generators import NetworkRecipe, ikc_fig_network, path_graph, random_graph
from .graph import Clustering, Graph
from .methods import (
    MethodSpec,
    components_method,
    cpm_method,
    ikc_method,
    modularity_method,
    nodes_method,
)
from .objectives import cpm_connectivity_f

AXIOM_COLUMNS = (
    ("richness", "Richness"),
    ("standard_consistency", "Std Consist."),
    ("refinement_consistency", "Ref Consist."),
    ("interedge_consistency", "Inter-Edge Consist."),
    ("connectivity", "Connect"),
    ("pair_of_cliques", "Pair-of-Cliques"),
    ("fixed_point", "Fixed Point"),
)

ROW_ORDER = ("components", "nodes", "cpm", "modularity", "ikc", "ikc_no_mod")

ROW_LABELS = {
    "components": "Components",
    "nodes": "Nodes",
    "cpm": "CPM(gamma)",
    "modularity": "Modularity",
    "ikc": "IKC",
    "ikc_no_mod": "IKC(no-mod)",
}

# Expected outcome for each (method row, axiom): True = satisfies. The suite
# exits nonzero whenever an observed verdict deviates from this matrix.
EXPECTED_MATRIX: dict[str, dict[str, bool]] = {
    "components": {
        "richness": True,
        "standard_consistency": True,
        "refinement_consistency": True,
        "interedge_consistency": True,
        "connectivity": False,
        "pair_of_cliques": False,
        "fixed_point": True,
    },
    "nodes": {
        "richness": False,
        "standard_consistency": True,
        "refinement_consistency": True,
        "interedge_consistency": True,
        "connectivity": True,
        "pair_of_cliques": False,
        "fixed_point": True,
    },
    "cpm": {axiom: True for axiom, _ in AXIOM_COLUMNS},
    "modularity": {
        "richness": True,
        "standard_consistency": False,
        "refinement_consistency": False,
        "interedge_consistency": False,
        "connectivity": False,
        "pair_of_cliques": False,
        "fixed_point": False,
    },
    "ikc": {axiom: False for axiom, _ in AXIOM_COLUMNS},
    "ikc_no_mod": {
        "richness": True,
        "standard_consistency": False,
        "refinement_consistency": False,
        "interedge_consistency": True,
        "connectivity": False,
        "pair_of_cliques": False,
        "fixed_point": True,
    },
}


def default_gammas() -> tuple[Fraction, ...]:
    return (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2))


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    vertex_limit: int = 12
    gammas: tuple[Fraction, ...] = field(default_factory=default_gammas)
    k0: int = 0
    probe_budget: int = 200
    threads: int = 0  # 0 = take AXLAB_THREADS, default 1

    def resolved_threads(self) -> int:
        if self.threads > 0:
            return self.threads
        env = os.environ.get("AXLAB_THREADS", "")
        try:
            return max(1, int(env))
        except ValueError:
            return 1

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "vertex_limit": self.vertex_limit,
            "gammas": [str(g) for g in self.gammas],
            "k0": self.k0,
            "probe_budget": self.probe_budget,
        }


@dataclass
class CellResult:
    row: str
    axiom: str
    expected: bool
    observed: bool | None
    verdicts: list[AxiomVerdict]

    @property
    def consistent(self) -> bool:
        return self.observed is not None and self.observed == self.expected

    @property
    def inconclusive(self) -> bool:
        return self.observed is None

    def probes(self) -> int:
        return sum(v.probes_run for v in self.verdicts)


@dataclass
class TableReport:
    config: RunConfig
    cells: list[CellResult]

    def cell(self, row: str, axiom: str) -> CellResult:
        for c in self.cells:
            if c.row == row and c.axiom == axiom:
                return c
        raise KeyError((row, axiom))

    def exit_code(self) -> int:
        if any(not c.consistent and not c.inconclusive for c in self.cells):
            return 2
        if any(c.inconclusive for c in self.cells):
            return 3
        return 0

    def to_markdown(self) -> str:
        header = "| Method | " + " | ".join(label for _, label in AXIOM_COLUMNS) + " |"
        sep = "|" + "---|" * (len(AXIOM_COLUMNS) + 1)
        lines = [header, sep]
        for row in ROW_ORDER:
            parts = [ROW_LABELS[row]]
            for axiom, _ in AXIOM_COLUMNS:
                c = self.cell(row, axiom)
                mark = "✓" if c.expected else "-"
                if c.consistent:
                    parts.append(f"{mark} (ok)")
                elif c.inconclusive:
                    parts.append(f"{mark} (INCONCLUSIVE)")
                else:
                    parts.append(f"{mark} (MISMATCH)")
            lines.append("| " + " | ".join(parts) + " |")
        lines.append("")
        code = self.exit_code()
        status = {0: "all verdicts consistent", 2: "contradictions found", 3: "inconclusive cells"}
        lines.append(f"Result: exit {code} ({status[code]}).")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "exit_code": self.exit_code(),
            "rows": [
                {
                    "method": ROW_LABELS[row],
                    "cells": [
                        {
                            "axiom": axiom,
                            "expected": self.cell(row, axiom).expected,
                            "observed": self.cell(row, axiom).observed,
                            "consistent": self.cell(row, axiom).consistent,
                            "probes": self.cell(row, axiom).probes(),
                            "verdicts": [
                                v.to_json_dict() for v in self.cell(row, axiom).verdicts
                            ],
                        }
                        for axiom, _ in AXIOM_COLUMNS
                    ],
                }
                for row in ROW_ORDER
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


# --- deterministic probe material -------------------------------------------


def fuzz_graphs(count: int, seed: int, min_n: int = 4, max_n: int = 10) -> list[Graph]:
    """Seed-determined random graphs with at most max_n vertices."""
    densities = (0.25, 0.4, 0.55, 0.7)
    out = []
    for i in range(count):
        n = min_n + i % (max_n - min_n + 1)
        p = densities[i % len(densities)]
        out.append(random_graph(n, p, seed * 1_000_003 + i))
    return out


def random_partition(n: int, rng: random.Random) -> Clustering:
    labels = []
    top = 0
    for _ in range(n):
        pick = rng.randint(0, top)
        labels.append(pick)
        if pick == top:
            top += 1
    blocks: dict[int, set[int]] = {}
    for v, lab in enumerate(labels):
        blocks.setdefault(lab, set()).add(v)
    return Clustering(blocks.values())


def partition_samples(seed: int, extra: int = 8) -> list[Clustering]:
    """Fixed small targets (including both trivial partitions and targets that
    refute the non-rich methods) plus seeded random partitions."""
    fixed = [
        Clustering.singletons(3),
        Clustering([range(3)]),
        Clustering([[0, 1]]),
        Clustering([[0, 1], [2]]),
        Clustering([[0, 1, 2], [3, 4]]),
        Clustering([[0], [1, 2], [3, 4, 5]]),
    ]
    rng = random.Random(seed * 7_817 + 11)
    fixed += [random_partition(rng.randint(4, 8), rng) for _ in range(extra)]
    return fixed


def _isqrt_profile(n: int) -> int:
    return math.isqrt(n)


def _cpm_profile(gamma: Fraction) -> Callable[[int], int]:
    return lambda n: cpm_connectivity_f(gamma, n) - 1


# Curated counterexample material (exactness of each construction is pinned
# down in the test suite):
#
#   bridged pair of 3-cliques next to a 6-star: optimum separates the cliques,
#   and completing the star into a 7-clique flips the optimum to keep the
#   bridged pair whole (standard/refinement failures for the modularity
#   optimizer at brute-force scale);
#
#   the 25-edge union below keeps the bridged 3-clique pair whole exactly when
#   all 25 edges are present, so deleting the 4-clique pair's bridge (an edge
#   between two output clusters) changes the clustering (inter-edge failure);
#
#   it also exhibits a size-6 output cluster with a cut edge (connectivity).


def _small_star_flip_recipe() -> NetworkRecipe:
    return NetworkRecipe([{"kind": "pair_of_cliques", "n": 3}, {"kind": "star", "p": 6}])


def _small_star_flip_probe() -> DirectedProbe:
    adds = [Perturbation(ADD_INTRA, (u, v)) for u in range(7, 13) for v in range(u + 1, 13)]
    return DirectedProbe(
        tuple(adds),
        NetworkRecipe([{"kind": "pair_of_cliques", "n": 3}, {"kind": "clique", "n": 7}]),
    )


def _big_star_flip_recipe() -> NetworkRecipe:
    return NetworkRecipe([{"kind": "pair_of_cliques", "n": 6}, {"kind": "star", "p": 30}])


def _big_star_flip_probe() -> DirectedProbe:
    adds = [
        Perturbation(ADD_INTRA, (u, v)) for u in range(13, 43) for v in range(u + 1, 43)
    ]
    return DirectedProbe(
        tuple(adds),
        NetworkRecipe([{"kind": "pair_of_cliques", "n": 6}, {"kind": "clique", "n": 31}]),
    )


def _interedge_flip_recipe() -> NetworkRecipe:
    return NetworkRecipe(
        [
            {"kind": "pair_of_cliques", "n": 3},
            {"kind": "pair_of_cliques", "n": 4},
            {"kind": "clique", "n": 3},
            {"kind": "edge_pair"},
            {"kind": "edge_pair"},
        ]
    )


def _interedge_flip_probe() -> DirectedProbe:
    return DirectedProbe((Perturbation(REMOVE_INTER, (6, 10)),), None)


def _modularity_fixed_point_sample() -> tuple[Graph, NetworkRecipe]:
    recipe = NetworkRecipe([{"kind": "pair_of_cliques", "n": 3}, {"kind": "clique", "n": 7}])
    return recipe.build(), recipe


_N1_CHORDS = DirectedProbe(
    (
        Perturbation(ADD_INTRA, (0, 2)),
        Perturbation(ADD_INTRA, (0, 3)),
        Perturbation(ADD_INTRA, (1, 3)),
    ),
    None,
)

_N2_DIAGONALS = DirectedProbe(
    (Perturbation(ADD_INTRA, (4, 6)), Perturbation(ADD_INTRA, (5, 7))), None
)

_N3_RED_REMOVALS = DirectedProbe(
    tuple(
        Perturbation(REMOVE_INTER, edge)
        for edge in ((0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (2, 8), (2, 9))
    ),
    None,
)


# --- per-cell probe plans ----------------------------------------------------


def _consistency_cell(
    method: MethodSpec,
    mode: str,
    samples: Sequence[tuple[Graph, NetworkRecipe | None, Sequence[DirectedProbe]]],
    budget: int,
    seed: int,
) -> list[AxiomVerdict]:
    verdicts = []
    remaining = budget
    for g, recipe, directed in samples:
        verdict = check_consistency(
            method,
            g,
            mode,
            probe_budget=max(1, remaining),
            seed=seed,
            recipe=recipe,
            directed=directed,
        )
        verdicts.append(verdict)
        remaining -= verdict.probes_run
        if verdict.outcome != PASS_ALL_PROBES or remaining <= 0:
            break
    return verdicts


def _consistency_samples(
    row: str, mode: str, config: RunConfig, axiom_index: int
) -> list[tuple[Graph, NetworkRecipe | None, Sequence[DirectedProbe]]]:
    seed = config.seed * 65_537 + axiom_index
    fuzz = [(g, None, ()) for g in fuzz_graphs(10, seed, max_n=9)]
    if row == "modularity":
        if mode in ("standard", "refinement"):
            return [
                (_small_star_flip_recipe().build(), _small_star_flip_recipe(), (_small_star_flip_probe(),)),
                (_big_star_flip_recipe().build(), _big_star_flip_recipe(), (_big_star_flip_probe(),)),
            ]
        return [(_interedge_flip_recipe().build(), _interedge_flip_recipe(), (_interedge_flip_probe(),))]
    if row in ("ikc", "ikc_no_mod"):
        if mode == "standard":
            return [(ikc_fig_network("N1"), None, (_N1_CHORDS,))] + fuzz
        if mode == "refinement":
            return [(ikc_fig_network("N2"), None, (_N2_DIAGONALS,))] + fuzz
        if row == "ikc":
            return [(ikc_fig_network("N3"), None, (_N3_RED_REMOVALS,))] + fuzz
        return [(ikc_fig_network("N3"), None, ())] + fuzz
    return fuzz


def _connectivity_samples(row: str, config: RunConfig):
    seed = config.seed * 65_537 + 41
    if row == "components":
        return [path_graph(9)]
    if row == "modularity":
        return [(_interedge_flip_recipe().build(), _interedge_flip_recipe())]
    if row in ("ikc", "ikc_no_mod"):
        recipe = NetworkRecipe([{"kind": "pair_of_cliques", "n": 4}, {"kind": "edge_pair"}])
        return [recipe.build()]
    count = min(25, max(5, config.probe_budget // 8))
    return fuzz_graphs(count, seed, max_n=10)


def _fixed_point_samples(row: str, config: RunConfig):
    seed = config.seed * 65_537 + 59
    if row == "modularity":
        return [_modularity_fixed_point_sample()]
    if row == "ikc":
        return [ikc_fig_network("N1")]
    if row == "ikc_no_mod":
        return [
            ikc_fig_network("N1"),
            ikc_fig_network("N2"),
            ikc_fig_network("N3"),
        ] + fuzz_graphs(5, seed, max_n=9)
    return fuzz_graphs(6, seed, max_n=9)


def _run_cell(row: str, methods: Sequence[MethodSpec], axiom: str, config: RunConfig) -> CellResult:
    axiom_index = [a for a, _ in AXIOM_COLUMNS].index(axiom)
    verdicts: list[AxiomVerdict] = []
    per_method_observed: list[bool | None] = []
    for method in methods:
        if axiom == "richness":
            vs = [check_richness(method, partition_samples(config.seed))]
        elif axiom.endswith("_consistency"):
            mode = axiom.removesuffix("_consistency")
            mode = {"standard": "standard", "refinement": "refinement", "interedge": "interedge"}[mode]
            samples = _consistency_samples(row, mode, config, axiom_index)
            vs = _consistency_cell(
                method, mode, samples, config.probe_budget, config.seed + axiom_index
            )
        elif axiom == "connectivity":
            if method.kind == "cpm_opt":
                f = _cpm_profile(method.gamma)
                label = f"ceil({method.gamma}*(n-1)) - 1"
            else:
                f = _isqrt_profile
                label = "isqrt(n)"
            vs = [check_connectivity(method, f, _connectivity_samples(row, config), f_label=label)]
        elif axiom == "pair_of_cliques":
            if row == "modularity":
                vs = [
                    check_pair_of_cliques(
                        method,
                        n_schedule=(6,),
                        context=({"kind": "clique", "n": 31},),
                        claimed_n0=6,
                    )
                ]
            else:
                vs = [check_pair_of_cliques(method, n_schedule=(4, 5, 6))]
        elif axiom == "fixed_point":
            vs = [
                check_fixed_point(
                    method,
                    _fixed_point_samples(row, config),
                    subset_budget=min(30, config.probe_budget),
                    seed=config.seed + axiom_index,
                )
            ]
        else:
            raise ValueError(axiom)
        verdicts.extend(vs)
        outcomes = {v.outcome for v in vs}
        if outcomes & {COUNTEREXAMPLE_FOUND, REFUTED_EXHAUSTIVELY}:
            per_method_observed.append(False)
        elif outcomes <= {PASS_ALL_PROBES, WITNESS_VERIFIED}:
            per_method_observed.append(True)
        else:
            per_method_observed.append(None)
    if any(o is None for o in per_method_observed):
        observed: bool | None = None
    else:
        observed = all(per_method_observed)
    return CellResult(row, axiom, EXPECTED_MATRIX[row][axiom], observed, verdicts)


def row_methods(row: str, config: RunConfig) -> list[MethodSpec]:
    if row == "components":
        return [components_method()]
    if row == "nodes":
        return [nodes_method()]
    if row == "cpm":
        return [cpm_method(g, vertex_limit=config.vertex_limit) for g in config.gammas]
    if row == "modularity":
        return [modularity_method(vertex_limit=config.vertex_limit)]
    if row == "ikc":
        return [ikc_method(modularity_filter=True, k0=config.k0)]
    if row == "ikc_no_mod":
        return [ikc_method(modularity_filter=False, k0=config.k0)]
    raise ValueError(row)


def run_table(config: RunConfig | None = None) -> TableReport:
    """Run all 42 cells and assemble the deterministic report."""
    config = config or RunConfig()
    jobs = [
        (row, axiom)
        for row in ROW_ORDER
        for axiom, _ in AXIOM_COLUMNS
    ]
    threads = config.resolved_threads()

    def work(job: tuple[str, str]) -> CellResult:
        row, axiom = job
        return _run_cell(row, row_methods(row, config), axiom, config)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cells = list(pool.map(work, jobs))
    else:
        cells = [work(job) for job in jobs]
    return TableReport(config, cells)
