"""Executable forms of the rank bound, the lower-bound characterization and
the lemmas behind it, each evaluated on a concrete gain graph.

Lower-optimal means r(G, phi) = 2n - 2c(G) - 2 alpha(G), the least value the
bound allows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .cycle_analysis import (
    AmbiguousBoundaryError,
    CycleRecord,
    CycleType,
    cycle_record,
    is_extremal_type,
)
from .gain_core import GainGraph, delete_vertices, induced_subgraph, component_vertex_sets
from .linalg import DEFAULT_TOL, Inertia, graph_inertia, graph_rank
from .structure import (
    GraphStats,
    contract_cycles,
    cut_vertices,
    cyclic_blocks,
    cyclomatic_number,
    find_cycles,
    forest_independence_number,
    graph_stats,
    independence_number,
    pendant_classification,
)

RankFn = Callable[[GainGraph], int]


class TheoremViolation(AssertionError):
    """A proven inequality or equivalence failed: an implementation bug."""


def _alpha(g: GainGraph) -> int:
    return independence_number(g)[0]


def _rank_fn(tol: float, rank_fn: Optional[RankFn]) -> RankFn:
    if rank_fn is not None:
        return rank_fn
    return lambda h: graph_rank(h, tol)


@dataclass(frozen=True)
class BoundCheck:
    lower: int
    rank: int
    upper: int
    holds: bool


def check_bounds(
    g: GainGraph, tol: float = DEFAULT_TOL, rank_fn: Optional[RankFn] = None
) -> BoundCheck:
    """2n - 2c - 2alpha <= r <= 2n - 2alpha, with all three numbers."""
    r = _rank_fn(tol, rank_fn)(g)
    a = _alpha(g)
    c = cyclomatic_number(g)
    lower = 2 * g.n - 2 * c - 2 * a
    upper = 2 * g.n - 2 * a
    return BoundCheck(lower, r, upper, lower <= r <= upper)


def is_lower_optimal_by_rank(
    g: GainGraph, tol: float = DEFAULT_TOL, rank_fn: Optional[RankFn] = None
) -> bool:
    """Whether r equals the lower bound. Uses floating point rank for angle gains."""
    r = _rank_fn(tol, rank_fn)(g)
    return r == 2 * g.n - 2 * cyclomatic_number(g) - 2 * _alpha(g)


@dataclass(frozen=True)
class StructureVerdict:
    """Outcome of the three structural conditions.

    ``types_ok`` and ``alpha_condition`` are None when they cannot be
    evaluated because the cycles overlap (T_G is then undefined).
    """

    holds: bool
    disjoint: bool
    types_ok: Optional[bool]
    alpha_condition: Optional[bool]
    cycles: tuple[CycleRecord, ...] = ()
    alpha_t: Optional[int] = None
    alpha_bracket: Optional[int] = None
    c: int = 0

    def breakdown(self) -> dict:
        return {
            "i_disjoint_cycles": self.disjoint,
            "ii_cycle_types": self.types_ok,
            "iii_alpha_condition": self.alpha_condition,
            "alpha_T": self.alpha_t,
            "alpha_T_bracket": self.alpha_bracket,
            "c": self.c,
        }


def is_lower_optimal_by_structure(g: GainGraph, tol: float = DEFAULT_TOL) -> StructureVerdict:
    """Evaluate the structural characterization without computing any rank.

    (i) cycles pairwise vertex-disjoint; (ii) each cycle of Type A or E;
    (iii) alpha(T_G) = alpha([T_G]) + c(G), with both alphas taken by the
    forest leaf rule. Raises AmbiguousBoundaryError for angle gains too close
    to a Type boundary.
    """
    c = cyclomatic_number(g)
    cs = find_cycles(g)
    if not cs.disjoint:
        return StructureVerdict(False, False, None, None, c=c)
    records = tuple(cycle_record(g, cyc, tol) for cyc in cs.cycles)
    types_ok = all(is_extremal_type(rec.cycle_type) for rec in records)
    contraction = contract_cycles(g, cs)
    at = forest_independence_number(contraction.t_graph)
    ab = forest_independence_number(contraction.t_bracket)
    alpha_ok = at == ab + c
    return StructureVerdict(
        holds=types_ok and alpha_ok,
        disjoint=True,
        types_ok=types_ok,
        alpha_condition=alpha_ok,
        cycles=records,
        alpha_t=at,
        alpha_bracket=ab,
        c=c,
    )


# -- lemma suite -------------------------------------------------------------


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    instance: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


LEMMAS = ("L4.1", "L4.2", "L4.3", "L4.4", "L4.5", "L4.6", "L4.7", "L4.8")


def _lower_opt(h: GainGraph, tol: float) -> bool:
    return graph_rank(h, tol) == 2 * h.n - 2 * cyclomatic_number(h) - 2 * _alpha(h)


def pendant_cycles(g: GainGraph) -> list[tuple[tuple[int, ...], int, int]]:
    """Cycles whose only degree-3 vertex x carries the single external edge.

    Returns (cycle vertices, x, external neighbour of x).
    """
    out = []
    for verts, m in cyclic_blocks(g):
        if m != len(verts):
            continue
        degs = {v: g.degree(v) for v in verts}
        heavy = [v for v, d in degs.items() if d != 2]
        if len(heavy) != 1 or degs[heavy[0]] != 3:
            continue
        x = heavy[0]
        (y,) = [w for w in g.adj[x] if w not in verts]
        cyc = find_cycle_order(g, verts)
        out.append((cyc, x, y))
    return sorted(out)


def find_cycle_order(g: GainGraph, verts: set[int]) -> tuple[int, ...]:
    sub, old = induced_subgraph(g, verts)
    (cyc,) = find_cycles(sub).cycles
    return tuple(old[v] for v in cyc)


def _check(out: list, lemma: str, instance: str, ok: bool, detail: str = ""):
    out.append(LemmaCheck(lemma, instance, "pass" if ok else "fail", "" if ok else detail))


def _skip(out: list, lemma: str, reason: str):
    out.append(LemmaCheck(lemma, "-", "skip", reason))


def _lemma_4_1(g, tol, out):
    found = False
    for u in cut_vertices(g):
        rest, to_new = delete_vertices(g, [u])
        old_of = {new: old for old, new in to_new.items()}
        for comp in component_vertex_sets(rest):
            h_verts = [old_of[x] for x in comp]
            if not any(g.has_edge(u, w) for w in h_verts):
                continue
            h, _ = induced_subgraph(g, h_verts)
            hu, _ = induced_subgraph(g, h_verts + [u])
            r_h = graph_rank(h, tol)
            if r_h != graph_rank(hu, tol):
                continue
            found = True
            g_minus_h, _ = delete_vertices(g, h_verts)
            lhs = graph_rank(g, tol)
            rhs = r_h + graph_rank(g_minus_h, tol)
            _check(out, "L4.1", f"u={u}, H={h_verts}", lhs == rhs, f"r(G)={lhs} != {rhs}")
    if not found:
        _skip(out, "L4.1", "no cut vertex u with component H satisfying r(H)=r(H+u)")


def _lemma_4_2(g, tol, out):
    found = False
    if g.is_exact:
        for cyc, x, _ in pendant_cycles(g):
            l = len(cyc)
            if l % 2 == 0 or cycle_record(g, cyc, tol).cycle_type is not CycleType.E:
                continue
            found = True
            g_prime, _ = delete_vertices(g, [v for v in cyc if v != x])
            lhs = graph_rank(g, tol)
            rhs = graph_rank(g_prime, tol) + l - 1
            _check(out, "L4.2", f"cycle={list(cyc)}, x={x}", lhs == rhs, f"r(G)={lhs} != {rhs}")
    if not found:
        _skip(out, "L4.2", "no pendant odd cycle of Type E (exact gains)")


def _lemma_4_3(g, tol, out):
    if not (g.n >= 3 and g.m == g.n and len(component_vertex_sets(g)) == 1
            and all(g.degree(v) == 2 for v in range(g.n))):
        _skip(out, "L4.3", "graph is not a single cycle")
        return
    if not g.is_exact:
        _skip(out, "L4.3", "Type E needs exact gains")
        return
    (cyc,) = find_cycles(g).cycles
    t = cycle_record(g, cyc, tol).cycle_type
    lhs = _lower_opt(g, tol)
    _check(out, "L4.3", f"C_{g.n} Type {t.value}", lhs == is_extremal_type(t),
           f"lower-optimal={lhs} but Type {t.value}")


def _on_exactly_one_cycle(g: GainGraph, u: int) -> bool:
    blocks = [(verts, m) for verts, m in cyclic_blocks(g) if u in verts]
    return len(blocks) == 1 and blocks[0][1] == len(blocks[0][0])


def _lemma_4_4(g, tol, out):
    cyc_verts = sorted({v for verts, _ in cyclic_blocks(g) for v in verts})
    if not cyc_verts:
        _skip(out, "L4.4", "no cycles")
        return
    if not _lower_opt(g, tol):
        _skip(out, "L4.4", "graph is not lower-optimal")
        return
    r_g = graph_rank(g, tol)
    c_g = cyclomatic_number(g)
    a_g = _alpha(g)
    _, quasi = pendant_classification(g)
    for u in cyc_verts:
        h, _ = delete_vertices(g, [u])
        fails = []
        if graph_rank(h, tol) != r_g:
            fails.append("(i) rank changed")
        if not _lower_opt(h, tol):
            fails.append("(ii) G-u not lower-optimal")
        if cyclomatic_number(h) != c_g - 1:
            fails.append("(iii) c did not drop by exactly 1")
        if _alpha(h) != a_g:
            fails.append("(iv) alpha changed")
        if not _on_exactly_one_cycle(g, u) or u in quasi:
            fails.append("(v) u on several cycles or quasi-pendant")
        _check(out, "L4.4", f"u={u}", not fails, "; ".join(fails))


def _lemma_4_5(g, tol, out):
    comps = component_vertex_sets(g)
    if len(comps) < 2:
        _skip(out, "L4.5", "graph is connected")
        return
    whole = _lower_opt(g, tol)
    parts = [_lower_opt(induced_subgraph(g, cv)[0], tol) for cv in comps]
    _check(out, "L4.5", f"{len(comps)} components", whole == all(parts),
           f"G lower-optimal={whole}, components={parts}")


def _lemma_4_6(g, tol, out):
    pendant, _ = pendant_classification(g)
    if not pendant:
        _skip(out, "L4.6", "no pendant vertex")
        return
    whole = _lower_opt(g, tol)
    on_cycle = {v for verts, _ in cyclic_blocks(g) for v in verts}
    for u in sorted(pendant):
        (v,) = g.adj[u]
        g0, _ = delete_vertices(g, [u, v])
        rhs = v not in on_cycle and _lower_opt(g0, tol)
        _check(out, "L4.6", f"u={u}, v={v}", whole == rhs,
               f"G lower-optimal={whole}, v off cycles and G0 lower-optimal={rhs}")


def _lemma_4_7(g, tol, out):
    pcs = pendant_cycles(g)
    if not pcs:
        _skip(out, "L4.7", "no pendant cycle")
        return
    if not g.is_exact:
        _skip(out, "L4.7", "Type E needs exact gains")
        return
    found = False
    for cyc, x, y in pcs:
        comp_verts = next(cv for cv in component_vertex_sets(g) if x in cv)
        gc, old = induced_subgraph(g, comp_verts)
        if not _lower_opt(gc, tol):
            continue
        found = True
        new = {v: i for i, v in enumerate(old)}
        cyc_c = [new[v] for v in cyc]
        x_c = new[x]
        l = len(cyc)
        k, _ = delete_vertices(gc, cyc_c)
        gp, _ = delete_vertices(gc, [v for v in cyc_c if v != x_c])
        fails = []
        cs = find_cycles(gc)
        if not cs.disjoint or not all(
            is_extremal_type(cycle_record(gc, c, tol).cycle_type) for c in cs.cycles
        ):
            fails.append("(i) a cycle is not of Type A/E")
        t = cycle_record(gc, cyc_c, tol).cycle_type
        r_gc, a_gc = graph_rank(gc, tol), _alpha(gc)
        r_k, a_k = graph_rank(k, tol), _alpha(k)
        if t is CycleType.A:
            if r_gc != l - 2 + r_k or a_gc != l // 2 + a_k:
                fails.append("(ii) Type A bookkeeping")
        elif t is CycleType.E:
            if r_gc != l - 1 + r_k or a_gc != (l - 1) // 2 + a_k:
                fails.append("(ii) Type E bookkeeping")
        if not _lower_opt(k, tol):
            fails.append("(iii) K not lower-optimal")
        if not _lower_opt(gp, tol):
            fails.append("(iv) K+x not lower-optimal")
        if _alpha(gp) != a_k + 1 or graph_rank(gp, tol) != r_k:
            fails.append("(v) alpha(K+x)=alpha(K)+1, r(K+x)=r(K)")
        _check(out, "L4.7", f"cycle={list(cyc)}, x={x}, y={y}", not fails, "; ".join(fails))
    if not found:
        _skip(out, "L4.7", "no pendant cycle inside a lower-optimal component")


def _lemma_4_8(g, tol, out):
    if not _lower_opt(g, tol):
        _skip(out, "L4.8", "graph is not lower-optimal")
        return
    cs = find_cycles(g)
    if not cs.disjoint:
        _check(out, "L4.8", "cycles", False, "lower-optimal graph with overlapping cycles")
        return
    contraction = contract_cycles(g, cs)
    rhs = (
        forest_independence_number(contraction.t_graph)
        + sum(len(c) // 2 for c in cs.cycles)
        - cyclomatic_number(g)
    )
    lhs = _alpha(g)
    _check(out, "L4.8", f"{len(cs.cycles)} cycles", lhs == rhs, f"alpha(G)={lhs} != {rhs}")


_SUITE = {
    "L4.1": _lemma_4_1,
    "L4.2": _lemma_4_2,
    "L4.3": _lemma_4_3,
    "L4.4": _lemma_4_4,
    "L4.5": _lemma_4_5,
    "L4.6": _lemma_4_6,
    "L4.7": _lemma_4_7,
    "L4.8": _lemma_4_8,
}


def lemma_suite(g: GainGraph, tol: float = DEFAULT_TOL, lemmas=LEMMAS) -> list[LemmaCheck]:
    """Instantiate each lemma on ``g`` wherever its hypotheses hold.

    Each applicable instance recomputes both sides from scratch; lemmas
    whose hypotheses never hold produce a single "skip" entry with a reason.
    """
    out: list[LemmaCheck] = []
    for name in lemmas:
        try:
            _SUITE[name](g, tol, out)
        except AmbiguousBoundaryError as exc:
            _skip(out, name, f"ambiguous Type boundary: {exc}")
    return out


def applicable_lemmas(checks: list[LemmaCheck]) -> set[str]:
    return {c.lemma for c in checks if c.status != "skip"}


# -- full report -------------------------------------------------------------


@dataclass
class AnalysisReport:
    stats: GraphStats
    rank: int
    inertia: Inertia
    exact: bool
    tol: float
    bound_lower: int
    bound_upper: int
    bounds_hold: bool
    disjoint_cycles: bool
    cycles: list[CycleRecord]
    lower_optimal_by_rank: bool
    lower_optimal_by_structure: Optional[bool]
    structure: dict
    independent_set: list[int]
    notes: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.stats.n,
            "m": self.stats.m,
            "omega": self.stats.omega,
            "c": self.stats.c,
            "alpha": self.stats.alpha,
            "matching": self.stats.matching,
            "pendant_count": self.stats.pendant_count,
            "rank": self.rank,
            "inertia": {
                "p_plus": self.inertia.p_plus,
                "n_minus": self.inertia.n_minus,
                "zero": self.inertia.zero,
            },
            "arithmetic": "exact" if self.exact else "approx",
            "tol": self.tol,
            "bound_lower": self.bound_lower,
            "bound_upper": self.bound_upper,
            "bounds_hold": self.bounds_hold,
            "disjoint_cycles": self.disjoint_cycles,
            "cycles": [
                {
                    "vertices": list(rec.vertices),
                    "length": rec.length,
                    "gain_product": str(rec.gain_product),
                    "type": rec.cycle_type.value,
                }
                for rec in self.cycles
            ],
            "lower_optimal_by_rank": self.lower_optimal_by_rank,
            "lower_optimal_by_structure": self.lower_optimal_by_structure,
            "structure": self.structure,
            "independent_set": self.independent_set,
            "notes": self.notes,
            "violations": self.violations,
        }


def analyze(g: GainGraph, tol: float = DEFAULT_TOL) -> AnalysisReport:
    alpha, witness = independence_number(g)
    stats = graph_stats(g, alpha=alpha)
    inert = graph_inertia(g, tol)
    r = graph_rank(g, tol)
    lower = 2 * g.n - 2 * stats.c - 2 * alpha
    upper = 2 * g.n - 2 * alpha
    notes, violations = [], []
    if g.n == 0:
        notes.append("graph with zero vertices: r = alpha = c = 0 by convention")
    if not g.is_exact:
        notes.append("angle gains: rank and inertia are floating point with tolerance")
    if inert.rank != r:
        violations.append(f"rank {r} != p+ + n- = {inert.rank}")
    holds = lower <= r <= upper
    if not holds:
        violations.append(f"rank bound violated: {lower} <= {r} <= {upper} is false")
    by_rank = r == lower
    try:
        verdict = is_lower_optimal_by_structure(g, tol)
        by_structure: Optional[bool] = verdict.holds
        structure = verdict.breakdown()
        cycles = list(verdict.cycles)
    except AmbiguousBoundaryError as exc:
        verdict = None
        by_structure = None
        structure = {"error": str(exc)}
        cycles = []
        notes.append("structural test undecided: " + str(exc))
    disjoint = find_cycles(g).disjoint
    if by_structure is not None and by_structure != by_rank:
        if g.is_exact:
            violations.append(
                f"characterization mismatch: by rank={by_rank}, by structure={by_structure}"
            )
        else:
            notes.append("rank and structural verdicts differ under floating point")
    return AnalysisReport(
        stats=stats,
        rank=r,
        inertia=inert,
        exact=g.is_exact,
        tol=tol,
        bound_lower=lower,
        bound_upper=upper,
        bounds_hold=holds,
        disjoint_cycles=disjoint,
        cycles=cycles,
        lower_optimal_by_rank=by_rank,
        lower_optimal_by_structure=by_structure,
        structure=structure,
        independent_set=sorted(witness),
        notes=notes,
        violations=violations,
    )
