"""Theorem fuzzer: exhaustive small graphs plus seeded random instances."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx

from .cycle_analysis import AmbiguousBoundaryError
from .gain_core import GainGraph, build_graph
from .generators import FOURTH_ROOTS, GainDomain, random_gain_graph, random_lower_optimal, with_random_gains
from .linalg import DEFAULT_TOL, graph_rank
from .theorems import (
    check_bounds,
    is_lower_optimal_by_rank,
    is_lower_optimal_by_structure,
    lemma_suite,
)

ATLAS_MAX_N = 7
EXHAUSTIVE_GAIN_LIMIT = 256


@dataclass(frozen=True)
class Instance:
    label: str
    order: tuple  # sort key: reproducible, order-independent aggregation
    graph: GainGraph


@dataclass
class FuzzSummary:
    counts: dict[str, Counter] = field(default_factory=dict)
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    instances: int = 0

    def add(self, prop: str, status: str):
        self.counts.setdefault(prop, Counter())[status] += 1

    def merge(self, other: "FuzzSummary"):
        for prop, c in other.counts.items():
            self.counts.setdefault(prop, Counter()).update(c)
        self.failures.extend(other.failures)
        self.instances += other.instances

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"instances: {self.instances}"]
        for prop in sorted(self.counts):
            c = self.counts[prop]
            out.append(
                f"{prop:<14} checked={c['checked']:<7} skipped={c['skipped']:<7} failed={c['failed']}"
            )
        for label, prop, detail in self.failures:
            out.append(f"FAIL {prop} [{label}]: {detail}")
        return out


def connected_atlas(max_n: int) -> list[tuple[int, nx.Graph]]:
    """All connected graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {ATLAS_MAX_N}")
    return [
        (idx, h)
        for idx, h in enumerate(nx.graph_atlas_g())
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


def exhaustive_instances(max_n: int, gains_per_graph: int, domain: GainDomain, seed: int):
    """Gain assignments on every connected atlas graph.

    With fourth-root gains and at most EXHAUSTIVE_GAIN_LIMIT assignments the
    enumeration is complete; otherwise ``gains_per_graph`` seeded samples.
    """
    domain = GainDomain(domain)
    for idx, h in connected_atlas(max_n):
        n = h.number_of_nodes()
        pairs = sorted(tuple(sorted(e)) for e in h.edges())
        if domain is GainDomain.FourthRoots and 4 ** len(pairs) <= EXHAUSTIVE_GAIN_LIMIT:
            for k, gains in enumerate(itertools.product(FOURTH_ROOTS, repeat=len(pairs))):
                g = build_graph(n, [(u, v, z) for (u, v), z in zip(pairs, gains)])
                yield Instance(f"atlas={idx} gains=#{k}", (0, idx, k), g)
        else:
            rng = random.Random(f"{seed}:{idx}")
            for k in range(gains_per_graph):
                yield Instance(
                    f"atlas={idx} sample={k} seed={seed}",
                    (0, idx, k),
                    with_random_gains(n, pairs, domain, rng),
                )


def random_instance(seed: int, n_max: int, domain: GainDomain) -> Instance:
    """Every fourth seed yields a certified lower-optimal graph instead of G(n, p)."""
    rng = random.Random(seed)
    if seed % 4 == 3 and GainDomain(domain) is not GainDomain.RandomAngle:
        g = random_lower_optimal(rng.random(), max_n=n_max)
    else:
        n = rng.randint(1, n_max)
        g = random_gain_graph(n, rng.uniform(0.05, 0.6), domain, rng.random())
    return Instance(f"seed={seed}", (1, seed), g)


def check_instance(inst: Instance, tol: float = DEFAULT_TOL, lemmas: bool = True,
                   rank_offset: int = 0) -> FuzzSummary:
    """Run every property on one instance.

    ``rank_offset`` is a fault-injection hook: it shifts the rank fed to the
    bound and lower-optimality checks so tests can confirm violations surface.
    """
    out = FuzzSummary(instances=1)
    g = inst.graph
    rank_fn = (lambda h: graph_rank(h, tol) + rank_offset) if rank_offset else None
    b = check_bounds(g, tol, rank_fn=rank_fn)
    out.add("bounds", "checked")
    if not b.holds:
        out.add("bounds", "failed")
        out.failures.append((inst.label, "bounds", f"{b.lower} <= {b.rank} <= {b.upper} is false"))
    if g.is_exact:
        by_rank = is_lower_optimal_by_rank(g, tol, rank_fn=rank_fn)
        by_structure = is_lower_optimal_by_structure(g, tol).holds
        out.add("equivalence", "checked")
        if by_rank != by_structure:
            out.add("equivalence", "failed")
            out.failures.append(
                (inst.label, "equivalence", f"by rank={by_rank}, by structure={by_structure}")
            )
    else:
        out.add("equivalence", "skipped")
    if lemmas:
        try:
            checks = lemma_suite(g, tol)
        except AmbiguousBoundaryError:
            checks = []
        per = {}
        for c in checks:
            per.setdefault(c.lemma, []).append(c)
        for name, cs in per.items():
            prop = f"lemma {name}"
            if all(c.status == "skip" for c in cs):
                out.add(prop, "skipped")
                continue
            out.add(prop, "checked")
            bad = [c for c in cs if c.status == "fail"]
            if bad:
                out.add(prop, "failed")
                for c in bad:
                    out.failures.append((inst.label, prop, f"{c.instance}: {c.detail}"))
    return out


def _run_chunk(args) -> list[tuple[tuple, FuzzSummary]]:
    instances, tol, lemmas, rank_offset = args
    return [(inst.order, check_instance(inst, tol, lemmas, rank_offset)) for inst in instances]


def run_fuzz(
    n_max: int = 10,
    trials: int = 200,
    seed: int = 0,
    gain_domain: GainDomain | str = GainDomain.FourthRoots,
    exhaustive_n: int = 0,
    gains_per_graph: int = 25,
    lemmas: bool = True,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
    rank_offset: int = 0,
) -> FuzzSummary:
    domain = GainDomain(gain_domain)
    instances: list[Instance] = []
    if exhaustive_n:
        instances.extend(exhaustive_instances(exhaustive_n, gains_per_graph, domain, seed))
    instances.extend(random_instance(seed + i, n_max, domain) for i in range(trials))
    if workers > 1 and len(instances) > 1:
        chunks = [instances[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(
                _run_chunk, [(c, tol, lemmas, rank_offset) for c in chunks]) for r in part]
    else:
        results = _run_chunk((instances, tol, lemmas, rank_offset))
    summary = FuzzSummary()
    for _, part in sorted(results, key=lambda r: r[0]):
        summary.merge(part)
    return summary
