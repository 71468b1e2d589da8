"""Complex unit gain graphs and their Hermitian adjacency matrices.

Gains come in two flavours. :class:`ExactGain` holds a Gaussian rational of
modulus exactly 1 (1, -1, i, -i, (3+4i)/5, ...). :class:`AngleGain` holds an
arbitrary point e^{i*theta} of the unit circle as a float angle. A graph uses
one flavour only.

Edges are stored once, in the orientation ``u < v``; the stored gain is the
gain of the oriented edge u -> v and the reverse orientation carries its
conjugate.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .qi import QI


class GraphError(ValueError):
    """Invalid graph input: loops, duplicates, bad ids, non-unit gains."""


@dataclass(frozen=True)
class ExactGain:
    value: QI

    def __post_init__(self):
        if not isinstance(self.value, QI):
            object.__setattr__(self, "value", QI.coerce(self.value))
        if self.value.norm() != 1:
            raise GraphError(f"gain not unit modulus: {self.value}")

    is_exact = True

    @classmethod
    def of(cls, re, im=0) -> "ExactGain":
        return cls(QI(re, im))

    def conjugate(self) -> "ExactGain":
        return ExactGain(self.value.conjugate())

    def __mul__(self, other: "ExactGain") -> "ExactGain":
        if not isinstance(other, ExactGain):
            return NotImplemented
        return ExactGain(self.value * other.value)

    def to_complex(self) -> complex:
        return complex(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class AngleGain:
    angle: float  # radians

    def __post_init__(self):
        if not math.isfinite(self.angle):
            raise GraphError(f"non-finite gain angle: {self.angle}")

    is_exact = False

    def conjugate(self) -> "AngleGain":
        return AngleGain(-self.angle)

    def __mul__(self, other: "AngleGain") -> "AngleGain":
        if not isinstance(other, AngleGain):
            return NotImplemented
        return AngleGain(math.remainder(self.angle + other.angle, 2 * math.pi))

    def to_complex(self) -> complex:
        return cmath.exp(1j * self.angle)

    def __str__(self):
        return f"e^(i*{self.angle:.6g})"


UnitGain = Union[ExactGain, AngleGain]

ONE = ExactGain(QI(1))
MINUS_ONE = ExactGain(QI(-1))
I = ExactGain(QI(0, 1))
MINUS_I = ExactGain(QI(0, -1))


def as_gain(x) -> UnitGain:
    """Coerce a convenience value to a gain.

    ints, Fractions and QI become exact gains; a Python complex whose parts
    are integers (1j, -1, ...) also becomes exact, any other complex becomes
    an angle gain.
    """
    if isinstance(x, (ExactGain, AngleGain)):
        return x
    if isinstance(x, (int, Fraction, QI)):
        return ExactGain(QI.coerce(x))
    if isinstance(x, complex):
        if x.real.is_integer() and x.imag.is_integer():
            return ExactGain(QI(int(x.real), int(x.imag)))
        if not math.isclose(abs(x), 1.0, rel_tol=1e-12):
            raise GraphError(f"gain not unit modulus: {x}")
        return AngleGain(cmath.phase(x))
    raise GraphError(f"cannot interpret {x!r} as a unit gain")


Edge = tuple[int, int, UnitGain]


@dataclass(frozen=True)
class GainGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    @cached_property
    def adj(self) -> tuple[dict[int, UnitGain], ...]:
        """adj[u][v] = gain of the oriented edge u -> v."""
        out: list[dict[int, UnitGain]] = [dict() for _ in range(self.n)]
        for u, v, gain in self.edges:
            out[u][v] = gain
            out[v][u] = gain.conjugate()
        return tuple(out)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, used by the combinatorial solvers."""
        out = [0] * self.n
        for u, v, _ in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_exact(self) -> bool:
        # the empty edge set counts as exact
        return all(g.is_exact for _, _, g in self.edges)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def gain(self, u: int, v: int) -> UnitGain:
        """Gain of the oriented edge u -> v."""
        try:
            return self.adj[u][v]
        except (KeyError, IndexError):
            raise GraphError(f"no edge {u}-{v}") from None

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edge_pairs())
        return h

    def __repr__(self):
        body = ", ".join(f"({u},{v},{g})" for u, v, g in self.edges)
        return f"GainGraph(n={self.n}, edges=[{body}])"


def build_graph(n: int, edges: Iterable[Sequence] = ()) -> GainGraph:
    """Validate and canonicalize a gain graph.

    ``edges`` holds ``(u, v, gain)`` triples, or ``(u, v)`` pairs for gain 1.
    An edge given as (v, u) with v > u is stored as (u, v) carrying the
    conjugate gain.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: dict[tuple[int, int], UnitGain] = {}
    kinds = set()
    for e in edges:
        if len(e) == 2:
            u, v = e
            gain = ONE
        else:
            u, v, gain = e
            gain = as_gain(gain)
        for x in (u, v):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise GraphError(f"vertex id {x!r} out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if u > v:
            u, v, gain = v, u, gain.conjugate()
        if (u, v) in seen:
            raise GraphError(f"duplicate edge {u}-{v}")
        seen[(u, v)] = gain
        kinds.add(gain.is_exact)
    if len(kinds) > 1:
        raise GraphError("mixed exact and angle gains in one graph")
    return GainGraph(n, tuple((u, v, g) for (u, v), g in sorted(seen.items())))


@dataclass(frozen=True)
class HermitianMatrix:
    """A(G, phi): entry (i, j) is the gain of i -> j, zero if not adjacent.

    Exact matrices hold nested tuples of :class:`QI`; approximate ones hold a
    complex numpy array.
    """

    n: int
    entries: object
    exact: bool

    def __getitem__(self, ij):
        i, j = ij
        if self.exact:
            return self.entries[i][j]
        return self.entries[i, j]

    def to_numpy(self) -> np.ndarray:
        if self.exact:
            return np.array(
                [[complex(x) for x in row] for row in self.entries], dtype=complex
            ).reshape(self.n, self.n)
        return np.array(self.entries, dtype=complex)

    @classmethod
    def from_rows(cls, rows) -> "HermitianMatrix":
        """Wrap a square matrix given as rows (exact if every entry is)."""
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        if all(isinstance(x, (int, Fraction, QI)) for r in rows for x in r):
            return cls(n, tuple(tuple(QI.coerce(x) for x in r) for r in rows), True)
        return cls(n, np.array(rows, dtype=complex).reshape(n, n), False)


def adjacency_matrix(g: GainGraph) -> HermitianMatrix:
    if g.is_exact:
        zero = QI(0)
        rows = [[zero] * g.n for _ in range(g.n)]
        for u, v, gain in g.edges:
            rows[u][v] = gain.value
            rows[v][u] = gain.value.conjugate()
        return HermitianMatrix(g.n, tuple(tuple(r) for r in rows), True)
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v, gain in g.edges:
        z = gain.to_complex()
        a[u, v] = z
        a[v, u] = z.conjugate()
    return HermitianMatrix(g.n, a, False)


def graph_from_matrix(a: HermitianMatrix) -> GainGraph:
    """Read the canonical edge list back out of an adjacency matrix."""
    edges = []
    for u in range(a.n):
        for v in range(u + 1, a.n):
            x = a[u, v]
            if a.exact:
                if not x.is_zero():
                    edges.append((u, v, ExactGain(x)))
            elif x != 0:
                edges.append((u, v, AngleGain(cmath.phase(x))))
    return build_graph(a.n, edges)


def induced_subgraph(g: GainGraph, keep: Iterable[int]) -> tuple[GainGraph, list[int]]:
    """Subgraph induced on ``keep``; returns it with new -> old vertex list."""
    old = sorted(set(keep))
    for x in old:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex id {x} out of range for n={g.n}")
    new_id = {v: i for i, v in enumerate(old)}
    edges = tuple(
        (new_id[u], new_id[v], gain)
        for u, v, gain in g.edges
        if u in new_id and v in new_id
    )
    return GainGraph(len(old), edges), old


def delete_vertices(g: GainGraph, s: Iterable[int]) -> tuple[GainGraph, dict[int, int]]:
    """G - S with the old -> new id map of the surviving vertices."""
    s = set(s)
    for x in s:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex id {x} out of range for n={g.n}")
    sub, old = induced_subgraph(g, (v for v in range(g.n) if v not in s))
    return sub, {v: i for i, v in enumerate(old)}


def component_vertex_sets(g: GainGraph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    comp.append(y)
        out.append(sorted(comp))
    return out


def components(g: GainGraph) -> list[tuple[GainGraph, list[int]]]:
    """Connected components, each with its new -> old vertex list."""
    return [induced_subgraph(g, comp) for comp in component_vertex_sets(g)]


def disjoint_union(*graphs: GainGraph) -> GainGraph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset, gain) for u, v, gain in h.edges)
        offset += h.n
    return build_graph(offset, edges)


# -- JSON graph format -------------------------------------------------------


def _gain_to_json(gain: UnitGain) -> dict:
    if isinstance(gain, ExactGain):
        return {"re": str(gain.value.re), "im": str(gain.value.im)}
    return {"angle_deg": math.degrees(gain.angle)}


def _gain_from_json(obj) -> UnitGain:
    if not isinstance(obj, dict):
        raise GraphError(f"gain must be an object, got {obj!r}")
    if "angle_deg" in obj:
        if "re" in obj or "im" in obj:
            raise GraphError("gain mixes angle_deg with re/im")
        angle = obj["angle_deg"]
        if isinstance(angle, bool) or not isinstance(angle, (int, float)):
            raise GraphError(f"angle_deg must be a number, got {angle!r}")
        return AngleGain(math.radians(angle))
    try:
        re = Fraction(str(obj.get("re", "0")))
        im = Fraction(str(obj.get("im", "0")))
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"bad rational in gain {obj!r}: {exc}") from None
    return ExactGain(QI(re, im))


def graph_to_dict(g: GainGraph) -> dict:
    return {
        "n": g.n,
        "edges": [{"u": u, "v": v, "gain": _gain_to_json(gain)} for u, v, gain in g.edges],
    }


def graph_from_dict(obj) -> GainGraph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise GraphError('graph JSON must be an object with key "n"')
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphError(f'"n" must be an integer, got {n!r}')
    edges = []
    for e in obj.get("edges", []):
        try:
            u, v = e["u"], e["v"]
            gain = _gain_from_json(e.get("gain", {"re": "1", "im": "0"}))
        except (KeyError, TypeError):
            raise GraphError(f"malformed edge entry {e!r}") from None
        edges.append((u, v, gain))
    return build_graph(n, edges)


def dumps_graph(g: GainGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2, sort_keys=True) + "\n"


def loads_graph(text: str) -> GainGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"not valid JSON: {exc}") from None
    return graph_from_dict(obj)


def load_graph(path) -> GainGraph:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())


def save_graph(g: GainGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))
