"""Cycle gains, the five-way cycle Type split, and closed-form cycle/path ranks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .gain_core import AngleGain, ExactGain, GainGraph, GraphError, UnitGain
from .linalg import DEFAULT_TOL, Inertia
from .qi import QI


class CycleType(enum.Enum):
    """Cycle classes by length parity and gain product phi(C).

    A: l even, phi(C) = (-1)^(l/2)
    B: l even, phi(C) != (-1)^(l/2)
    C: l odd, Re((-1)^((l-1)/2) phi(C)) > 0
    D: l odd, Re((-1)^((l-1)/2) phi(C)) < 0
    E: l odd, Re((-1)^((l-1)/2) phi(C)) = 0
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"

    @property
    def parity(self) -> int:
        return 0 if self in (CycleType.A, CycleType.B) else 1


class AmbiguousBoundaryError(ValueError):
    """An angle gain sits within tolerance of a Type boundary."""


@dataclass(frozen=True)
class CycleRecord:
    vertices: tuple[int, ...]
    gain_product: UnitGain
    cycle_type: CycleType

    @property
    def length(self) -> int:
        return len(self.vertices)


def cycle_gain(g: GainGraph, cyc: Sequence[int]) -> UnitGain:
    """phi(v1 v2) phi(v2 v3) ... phi(vl v1) along the given traversal."""
    cyc = list(cyc)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise GraphError(f"{cyc} is not a cycle")
    steps = list(zip(cyc, cyc[1:] + cyc[:1]))
    for u, v in steps:
        if not (0 <= u < g.n and g.has_edge(u, v)):
            raise GraphError(f"{cyc} is not a cycle of the graph (missing {u}-{v})")
    return reduce(lambda a, b: a * b, (g.gain(u, v) for u, v in steps))


def _sign_power(k: int) -> int:
    return -1 if k % 2 else 1


def classify_cycle(length: int, gain_product: UnitGain, tol: float = DEFAULT_TOL) -> CycleType:
    """Type of a cycle of the given length and gain product.

    Exact gains are classified exactly. Angle gains within ``tol`` of a
    boundary raise :class:`AmbiguousBoundaryError` instead of guessing.
    """
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    if length % 2 == 0:
        target = _sign_power(length // 2)
        if isinstance(gain_product, ExactGain):
            return CycleType.A if gain_product.value == QI(target) else CycleType.B
        dist = abs(gain_product.to_complex() - target)
        if dist < tol:
            raise AmbiguousBoundaryError(
                f"gain product within {tol} of {target} on an even cycle; Type A cannot be "
                "confirmed in floating point"
            )
        return CycleType.B
    s = _sign_power((length - 1) // 2)
    if isinstance(gain_product, ExactGain):
        key = s * gain_product.value.re
        if key == 0:
            return CycleType.E
    else:
        key = s * math.cos(gain_product.angle)
        if abs(key) < tol:
            raise AmbiguousBoundaryError(
                f"|Re((-1)^((l-1)/2) phi(C))| = {abs(key):.3g} < {tol}: ambiguous Type E boundary"
            )
    return CycleType.C if key > 0 else CycleType.D


def cycle_record(g: GainGraph, cyc: Sequence[int], tol: float = DEFAULT_TOL) -> CycleRecord:
    prod = cycle_gain(g, cyc)
    return CycleRecord(tuple(cyc), prod, classify_cycle(len(cyc), prod, tol))


def cycle_inertia_closed_form(length: int, cycle_type: CycleType) -> Inertia:
    """(p+, n-, zero) of a gain cycle, read off its Type."""
    l = length
    if l < 3:
        raise ValueError(f"cycle length must be >= 3, got {l}")
    if cycle_type.parity != l % 2:
        raise ValueError(f"Type {cycle_type.value} is impossible for a cycle of length {l}")
    p, q = {
        CycleType.A: ((l - 2) // 2, (l - 2) // 2),
        CycleType.B: (l // 2, l // 2),
        CycleType.C: ((l + 1) // 2, (l - 1) // 2),
        CycleType.D: ((l - 1) // 2, (l + 1) // 2),
        CycleType.E: ((l - 1) // 2, (l - 1) // 2),
    }[cycle_type]
    return Inertia(p, q, l - p - q)


def path_rank(length: int) -> int:
    """Rank of a gain path on ``length`` vertices (gains do not matter)."""
    if length < 1:
        raise ValueError("path needs at least one vertex")
    return length - 1 if length % 2 else length


def is_extremal_type(cycle_type: CycleType) -> bool:
    """Types allowed on cycles of graphs attaining the lower bound."""
    return cycle_type in (CycleType.A, CycleType.E)
