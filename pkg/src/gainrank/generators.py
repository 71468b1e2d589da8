"""Seeded constructors for gain graphs used by the tests and the fuzzer."""

from __future__ import annotations

import enum
import math
import random
from itertools import combinations

from .cycle_analysis import CycleType
from .gain_core import (
    I,
    MINUS_I,
    MINUS_ONE,
    ONE,
    AngleGain,
    ExactGain,
    GainGraph,
    UnitGain,
    build_graph,
    component_vertex_sets,
)
from .qi import QI
from .structure import find_cycles, random_tree_edges


class GainDomain(enum.Enum):
    FourthRoots = "FourthRoots"
    PythagoreanExact = "PythagoreanExact"
    RandomAngle = "RandomAngle"


FOURTH_ROOTS = (ONE, MINUS_ONE, I, MINUS_I)


def _pythagorean_units() -> tuple[ExactGain, ...]:
    out = set()
    for a, b, c in ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)):
        for x, y in ((a, b), (b, a)):
            for sx in (1, -1):
                for sy in (1, -1):
                    out.add(QI(sx * x, sy * y) / c)
    return FOURTH_ROOTS + tuple(ExactGain(z) for z in sorted(out, key=lambda z: (z.re, z.im)))


PYTHAGOREAN_UNITS = _pythagorean_units()


def random_gain(domain: GainDomain, rng: random.Random) -> UnitGain:
    if domain is GainDomain.FourthRoots:
        return rng.choice(FOURTH_ROOTS)
    if domain is GainDomain.PythagoreanExact:
        return rng.choice(PYTHAGOREAN_UNITS)
    return AngleGain(rng.uniform(-math.pi, math.pi))


def random_gain_graph(n: int, p: float, gain_domain: GainDomain, seed) -> GainGraph:
    """Erdos-Renyi G(n, p) with i.i.d. gains from the domain."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    gain_domain = GainDomain(gain_domain)
    rng = random.Random(seed)
    edges = [
        (u, v, random_gain(gain_domain, rng))
        for u, v in combinations(range(n), 2)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def random_gain_tree(n: int, gain_domain: GainDomain, seed) -> GainGraph:
    rng = random.Random(seed)
    gain_domain = GainDomain(gain_domain)
    return build_graph(n, [(u, v, random_gain(gain_domain, rng)) for u, v in random_tree_edges(n, rng)])


def with_random_gains(n: int, pairs, gain_domain: GainDomain, rng: random.Random) -> GainGraph:
    gain_domain = GainDomain(gain_domain)
    return build_graph(n, [(u, v, random_gain(gain_domain, rng)) for u, v in pairs])


def _type_product(l: int, t: CycleType, rng: random.Random) -> ExactGain:
    """An exact gain product realising Type ``t`` on a cycle of length ``l``."""
    if t.parity != l % 2:
        raise ValueError(f"Type {t.value} needs {'even' if t.parity == 0 else 'odd'} length, got {l}")
    if t is CycleType.A:
        return ONE if (l // 2) % 2 == 0 else MINUS_ONE
    if t is CycleType.B:
        a = ONE if (l // 2) % 2 == 0 else MINUS_ONE
        return rng.choice([z for z in PYTHAGOREAN_UNITS if z != a])
    s = MINUS_ONE if ((l - 1) // 2) % 2 else ONE
    if t is CycleType.E:
        return rng.choice((I, MINUS_I))
    # s * z has positive (C) or negative (D) real part iff z does, times s
    want_positive = t is CycleType.C
    pool = [z for z in PYTHAGOREAN_UNITS if z.value.re != 0 and (z.value.re > 0) == want_positive]
    return s * rng.choice(pool)


def cycle_of_type(l: int, t: CycleType | str, seed, shuffle: bool = True) -> GainGraph:
    """C_l with exact gains whose product is of Type ``t``.

    The first l-1 gains along the traversal are random fourth roots of unity;
    the closing edge absorbs the difference so the product is exact.
    """
    t = CycleType(t)
    if l < 3:
        raise ValueError(f"cycle length must be >= 3, got {l}")
    rng = random.Random(seed)
    target = _type_product(l, t, rng)
    labels = list(range(l))
    if shuffle:
        rng.shuffle(labels)
    gains = [rng.choice(FOURTH_ROOTS) for _ in range(l - 1)]
    prod = ONE
    for z in gains:
        prod = prod * z
    gains.append(target * prod.conjugate())
    edges = [(labels[k], labels[(k + 1) % l], gains[k]) for k in range(l)]
    return build_graph(l, edges)


def extremal_type(l: int) -> CycleType:
    return CycleType.A if l % 2 == 0 else CycleType.E


class CertificationError(AssertionError):
    pass


def lower_optimal_instance(
    num_cycles: int,
    cycle_lengths,
    tree_growth_steps: int,
    seed,
    isolated: int = 0,
) -> GainGraph:
    """A graph built to attain the lower rank bound, certified by rank.

    Start from disjoint Type A (even) and Type E (odd) cycles plus
    ``isolated`` single vertices. Each growth step adds a pendant pair u-v
    and joins v to at most one vertex of each current component (cycle
    vertices allowed), so v never lies on a cycle and u stays pendant.
    """
    from .theorems import is_lower_optimal_by_rank

    cycle_lengths = list(cycle_lengths)
    if len(cycle_lengths) != num_cycles:
        raise ValueError("cycle_lengths must list one length per cycle")
    if any(l < 3 for l in cycle_lengths):
        raise ValueError("cycle lengths must be >= 3")
    rng = random.Random(seed)
    edges: list[tuple[int, int, UnitGain]] = []
    comp: list[int] = []  # vertex -> component label
    n = 0
    for k, l in enumerate(cycle_lengths):
        c = cycle_of_type(l, extremal_type(l), rng.random(), shuffle=False)
        edges.extend((u + n, v + n, z) for u, v, z in c.edges)
        comp.extend([len(set(comp))] * l)
        n += l
    for _ in range(isolated):
        comp.append(max(comp, default=-1) + 1)
        n += 1
    for _ in range(tree_growth_steps):
        u, v = n, n + 1
        labels = sorted(set(comp))
        k = rng.randint(0, min(len(labels), 3))
        joined = rng.sample(labels, k)
        edges.append((v, u, rng.choice(FOURTH_ROOTS)))
        for lab in joined:
            w = rng.choice([x for x in range(n) if comp[x] == lab])
            edges.append((w, v, rng.choice(FOURTH_ROOTS)))
        new_label = max(comp, default=-1) + 1
        comp = [new_label if lab in joined else lab for lab in comp] + [new_label, new_label]
        n += 2
    perm = list(range(n))
    rng.shuffle(perm)
    g = build_graph(n, [(perm[a], perm[b], z) for a, b, z in edges])
    if not is_lower_optimal_by_rank(g):
        raise CertificationError(f"generated instance failed certification: {g!r}")
    return g


def random_lower_optimal(seed, max_n: int = 14) -> GainGraph:
    """lower_optimal_instance with randomly chosen shape, at most ``max_n`` vertices."""
    rng = random.Random(seed)
    while True:
        k = rng.randint(0, 3)
        lengths = [rng.randint(3, 6) for _ in range(k)]
        isolated = rng.randint(0, 1)
        budget = max_n - sum(lengths) - isolated
        if budget < 0:
            continue
        steps = rng.randint(0, budget // 2)
        return lower_optimal_instance(k, lengths, steps, rng.random(), isolated=isolated)


# -- adversarial mutations ---------------------------------------------------


ADVERSARIAL_KINDS = ("overlap", "cycle_type", "alpha")


def adversarial_instance(kind: str, seed, max_n: int = 14) -> GainGraph:
    """Perturb a lower-optimal instance aiming at one structural condition.

    overlap: add a chord or a second bridge so two cycles share vertices.
    cycle_type: twist one edge gain of a cycle by i (A -> B, E -> C or D).
    alpha: hang a new pendant vertex on a cycle vertex.
    """
    if kind not in ADVERSARIAL_KINDS:
        raise ValueError(f"unknown adversarial kind {kind!r}")
    rng = random.Random(seed)
    lengths = [rng.randint(3, 6) for _ in range(rng.randint(1, 2))]
    steps = rng.randint(0, max(0, (max_n - 1 - sum(lengths)) // 2))
    base = lower_optimal_instance(len(lengths), lengths, steps, rng.random())
    cycles = find_cycles(base).cycles
    cyc = rng.choice(cycles)
    edges = [list(e) for e in base.edges]
    n = base.n
    if kind == "cycle_type":
        a, b = cyc[0], cyc[1]
        for e in edges:
            if {e[0], e[1]} == {a, b}:
                e[2] = e[2] * I
    elif kind == "alpha":
        edges.append([rng.choice(cyc), n, rng.choice(FOURTH_ROOTS)])
        n += 1
    else:
        existing = {(u, v) for u, v, _ in base.edges}
        home = next(set(cv) for cv in component_vertex_sets(base) if cyc[0] in cv)
        candidates = [
            (a, b) for a, b in combinations(sorted(home), 2)
            if (a, b) not in existing and (a in cyc or b in cyc)
        ]
        if not candidates:
            # a triangle alone: add a vertex adjacent to two of its vertices
            edges.append([cyc[0], n, ONE])
            edges.append([cyc[1], n, ONE])
            n += 1
        else:
            a, b = rng.choice(candidates)
            edges.append([a, b, rng.choice(FOURTH_ROOTS)])
    return build_graph(n, [tuple(e) for e in edges])
