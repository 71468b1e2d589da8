"""Combinatorial invariants of the underlying graph.

Everything here ignores gains: cyclomatic number, independence number,
matching number, pendant structure, the vertex-disjoint cycle test and the
contraction of disjoint cycles to single vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import networkx as nx

from .gain_core import ONE, GainGraph, component_vertex_sets


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    omega: int
    c: int
    alpha: int
    matching: int
    pendant_count: int


def num_components(g: GainGraph) -> int:
    return len(component_vertex_sets(g))


def cyclomatic_number(g: GainGraph) -> int:
    return g.m - g.n + num_components(g)


# -- independence number -----------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(cand: int, masks: tuple[int, ...]) -> int:
    """Greedy partition of ``cand`` into cliques; an upper bound on alpha."""
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique = cand & masks[v]
        cand &= ~(1 << v)
        # keep only vertices adjacent to every clique member picked so far
        while clique:
            w = (clique & -clique).bit_length() - 1
            cand &= ~(1 << w)
            clique &= masks[w]
        count += 1
    return count


def independence_number(g: GainGraph) -> tuple[int, frozenset[int]]:
    """Exact alpha(G) with a maximum independent set as witness.

    Branch and bound on bitmasks. Vertices of degree 0 or 1 inside the
    candidate set are taken without branching (some maximum independent set
    contains them); otherwise branch on a max-degree vertex, in or out, and
    prune with a greedy clique cover.
    """
    masks = g.masks
    best = [0, 0]  # size, set mask

    def grow(cand: int, size: int, chosen: int):
        while True:
            forced = None
            for v in _bits(cand):
                if (masks[v] & cand).bit_count() <= 1:
                    forced = v
                    break
            if forced is None:
                break
            chosen |= 1 << forced
            size += 1
            cand &= ~((1 << forced) | masks[forced])
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(cand, masks) <= best[0]:
            return
        v = max(_bits(cand), key=lambda x: (masks[x] & cand).bit_count())
        grow(cand & ~((1 << v) | masks[v]), size + 1, chosen | (1 << v))
        grow(cand & ~(1 << v), size, chosen)

    grow((1 << g.n) - 1, 0, 0)
    return best[0], frozenset(_bits(best[1]))


def independence_number_bruteforce(g: GainGraph) -> int:
    """alpha(G) by scanning all 2^n vertex subsets; oracle for small n."""
    n = g.n
    if n > 22:
        raise ValueError(f"exhaustive scan refused for n={n} > 22")
    masks = g.masks
    indep = bytearray(1 << n)
    indep[0] = 1
    best = 0
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        if indep[rest] and not masks[v] & rest:
            indep[s] = 1
            k = s.bit_count()
            if k > best:
                best = k
    return best


def forest_independence_number(g: GainGraph) -> int:
    """alpha of an acyclic graph by repeatedly taking a leaf.

    A leaf (or isolated vertex) always belongs to some maximum independent
    set, so take it and delete its neighbour.
    """
    if cyclomatic_number(g) != 0:
        raise ValueError("forest_independence_number needs an acyclic graph")
    nbrs = [set(g.adj[v]) for v in range(g.n)]
    alive = set(range(g.n))
    alpha = 0
    queue = [v for v in alive if len(nbrs[v]) <= 1]
    while alive:
        while queue and queue[-1] not in alive:
            queue.pop()
        if not queue:  # unreachable for forests
            raise AssertionError("no leaf found in a forest")
        v = queue.pop()
        if len(nbrs[v]) > 1:
            continue
        alpha += 1
        removed = [v] + list(nbrs[v])
        for x in removed:
            alive.discard(x)
        for x in removed:
            for y in nbrs[x]:
                nbrs[y].discard(x)
                if y in alive and len(nbrs[y]) <= 1:
                    queue.append(y)
            nbrs[x] = set()
    return alpha


def matching_number(g: GainGraph) -> int:
    if g.m == 0:
        return 0
    return len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))


# -- pendant structure -------------------------------------------------------


def pendant_classification(g: GainGraph) -> tuple[frozenset[int], frozenset[int]]:
    """(pendant vertices, quasi-pendant vertices).

    A quasi-pendant vertex is adjacent to a pendant vertex without being
    pendant itself, so both ends of a K_2 component are pendant only.
    """
    pendant = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    quasi = frozenset(
        next(iter(g.adj[v])) for v in pendant if g.degree(next(iter(g.adj[v]))) != 1
    )
    return pendant, quasi


# -- cycles ------------------------------------------------------------------


def _cycle_order(block_vertices: set[int], g: GainGraph) -> tuple[int, ...]:
    start = min(block_vertices)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in g.adj[cur] if w in block_vertices and w != prev]
        if prev is None:
            nxt = sorted(nxt)[:1]
        w = nxt[0]
        if w == start:
            break
        order.append(w)
        prev, cur = cur, w
    return tuple(order)


def cyclic_blocks(g: GainGraph) -> list[tuple[set[int], int]]:
    """Biconnected blocks with at least 3 vertices, each with its edge count."""
    h = g.to_networkx()
    out = []
    for edges in nx.biconnected_component_edges(h):
        edges = list(edges)
        verts = {x for e in edges for x in e}
        if len(verts) >= 3:
            out.append((verts, len(edges)))
    return out


@dataclass(frozen=True)
class CycleSet:
    """Result of :func:`find_cycles`.

    ``cycles`` lists vertex sequences (traversal order) and is only
    populated when ``disjoint`` is true.
    """

    cycles: tuple[tuple[int, ...], ...]
    disjoint: bool


def find_cycles(g: GainGraph) -> CycleSet:
    """Decide whether all cycles of G are pairwise vertex-disjoint.

    True iff every block with >= 3 vertices is itself a cycle and no vertex
    lies in two such blocks. In that case each such block is one of the
    c(G) cycles of G.
    """
    blocks = cyclic_blocks(g)
    used: set[int] = set()
    for verts, m in blocks:
        if m != len(verts) or used & verts:
            return CycleSet((), False)
        used |= verts
    cycles = sorted(_cycle_order(verts, g) for verts, _ in blocks)
    return CycleSet(tuple(cycles), True)


def cycle_vertices(g: GainGraph) -> frozenset[int]:
    """Vertices lying on at least one cycle (works for overlapping cycles)."""
    return frozenset(v for verts, _ in cyclic_blocks(g) for v in verts)


@dataclass(frozen=True)
class ContractionResult:
    """T_G together with its cyclic vertices and [T_G] = T_G - O_G.

    ``origin[t]`` is ``("vertex", v)`` for a vertex kept from G and
    ``("cycle", k)`` for the vertex replacing ``cycles[k]``.
    """

    t_graph: GainGraph
    cyclic_vertices: frozenset[int]
    t_bracket: GainGraph
    origin: tuple[tuple[str, int], ...]
    cycles: tuple[tuple[int, ...], ...] = field(default=())


class CycleOverlapError(ValueError):
    pass


def contract_cycles(g: GainGraph, cycles: CycleSet | None = None) -> ContractionResult:
    if cycles is None:
        cycles = find_cycles(g)
    if not cycles.disjoint:
        raise CycleOverlapError("T_G is only defined when cycles are vertex-disjoint")
    owner: dict[int, int] = {}
    for k, cyc in enumerate(cycles.cycles):
        for v in cyc:
            owner[v] = k
    origin: list[tuple[str, int]] = []
    t_of: dict[int, int] = {}
    for v in range(g.n):
        if v not in owner:
            t_of[v] = len(origin)
            origin.append(("vertex", v))
    first_cyclic = len(origin)
    for k in range(len(cycles.cycles)):
        origin.append(("cycle", k))
    for v, k in owner.items():
        t_of[v] = first_cyclic + k
    edges = set()
    for u, v, _ in g.edges:
        a, b = t_of[u], t_of[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    t_graph = GainGraph(len(origin), tuple((a, b, ONE) for a, b in sorted(edges)))
    bracket_edges = tuple(
        (a, b, ONE) for a, b in sorted(edges) if a < first_cyclic and b < first_cyclic
    )
    t_bracket = GainGraph(first_cyclic, bracket_edges)
    return ContractionResult(
        t_graph=t_graph,
        cyclic_vertices=frozenset(range(first_cyclic, len(origin))),
        t_bracket=t_bracket,
        origin=tuple(origin),
        cycles=cycles.cycles,
    )


def graph_stats(g: GainGraph, alpha: int | None = None) -> GraphStats:
    omega = num_components(g)
    if alpha is None:
        alpha = independence_number(g)[0]
    return GraphStats(
        n=g.n,
        m=g.m,
        omega=omega,
        c=g.m - g.n + omega,
        alpha=alpha,
        matching=matching_number(g),
        pendant_count=len(pendant_classification(g)[0]),
    )


def cut_vertices(g: GainGraph) -> list[int]:
    return sorted(nx.articulation_points(g.to_networkx()))


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return [tuple(sorted(e)) for e in nx.from_prufer_sequence(seq).edges()]
