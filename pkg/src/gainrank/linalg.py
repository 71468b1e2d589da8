"""Rank and inertia of Hermitian gain adjacency matrices.

Exact matrices are scaled to Gaussian integers (a positive common
denominator changes neither rank nor inertia) and reduced with integer
arithmetic only. Each reduced row or block is divided by the gcd of its
integer parts to keep the numbers small.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .gain_core import GainGraph, HermitianMatrix, adjacency_matrix

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Inertia:
    p_plus: int
    n_minus: int
    zero: int

    @property
    def rank(self) -> int:
        return self.p_plus + self.n_minus

    @property
    def n(self) -> int:
        return self.p_plus + self.n_minus + self.zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p_plus, self.n_minus, self.zero)


def _gaussian_integer_rows(m: HermitianMatrix) -> tuple[list[list[int]], list[list[int]]]:
    if not m.exact:
        raise TypeError("exact routine called on a matrix with approximate entries")
    den = 1
    for row in m.entries:
        for x in row:
            den = lcm(den, x.re.denominator, x.im.denominator)
    re = [[int(x.re * den) for x in row] for row in m.entries]
    im = [[int(x.im * den) for x in row] for row in m.entries]
    return re, im


def rank_exact(m: HermitianMatrix) -> int:
    """Rank over C by Gaussian elimination in Z[i]; no tolerance."""
    re, im = _gaussian_integer_rows(m)
    nrows = m.n
    ncols = m.n
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if re[r][c] or im[r][c]), None)
        if piv is None:
            continue
        re[rank], re[piv] = re[piv], re[rank]
        im[rank], im[piv] = im[piv], im[rank]
        pr, pi = re[rank][c], im[rank][c]
        prow_re, prow_im = re[rank], im[rank]
        for r in range(rank + 1, nrows):
            fr, fi = re[r][c], im[r][c]
            if not (fr or fi):
                continue
            # row_r <- p * row_r - f * row_pivot
            row_re, row_im = re[r], im[r]
            new_re = [0] * ncols
            new_im = [0] * ncols
            g = 0
            for j in range(c, ncols):
                ar, ai = row_re[j], row_im[j]
                br, bi = prow_re[j], prow_im[j]
                x = pr * ar - pi * ai - (fr * br - fi * bi)
                y = pr * ai + pi * ar - (fr * bi + fi * br)
                new_re[j], new_im[j] = x, y
                g = gcd(g, x, y)
            if g > 1:
                new_re = [x // g for x in new_re]
                new_im = [y // g for y in new_im]
            re[r], im[r] = new_re, new_im
        rank += 1
        if rank == nrows:
            break
    return rank


def inertia_exact(m: HermitianMatrix) -> Inertia:
    """Sign counts by exact congruence (symmetric pivoting).

    A nonzero diagonal pivot d is eliminated by the Schur complement, scaled
    by |d| so everything stays integral. When the whole remaining diagonal is
    zero but some h_ij is not, adding h_ij times row/column j to row/column i
    makes the (i, i) entry 2|h_ij|^2 > 0.
    """
    re, im = _gaussian_integer_rows(m)
    n = m.n
    for i in range(n):
        if im[i][i] != 0 or re[i][i] != 0:
            raise ValueError("Hermitian gain matrix must have zero diagonal")
        for j in range(i + 1, n):
            if re[i][j] != re[j][i] or im[i][j] != -im[j][i]:
                raise ValueError("matrix is not Hermitian")
    active = list(range(n))
    pos = neg = 0
    while active:
        k = next((a for a in active if re[a][a] != 0), None)
        if k is None:
            pair = next(
                ((a, b) for a in active for b in active if a < b and (re[a][b] or im[a][b])),
                None,
            )
            if pair is None:
                break
            a, b = pair
            tr, ti = re[a][b], im[a][b]
            # row a += t * row b
            for j in active:
                xr, xi = re[b][j], im[b][j]
                re[a][j] += tr * xr - ti * xi
                im[a][j] += tr * xi + ti * xr
            # column a += conj(t) * column b
            for j in active:
                xr, xi = re[j][b], im[j][b]
                re[j][a] += tr * xr + ti * xi
                im[j][a] += tr * xi - ti * xr
            k = a
        d = re[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        s = 1 if d > 0 else -1
        ad = abs(d)
        active.remove(k)
        col_re = [re[i][k] for i in range(n)]
        col_im = [im[i][k] for i in range(n)]
        g = 0
        for i in active:
            ar, ai = col_re[i], col_im[i]
            ri, ii = re[i], im[i]
            for j in active:
                # h_ik * h_kj with h_kj = conj(h_jk)
                br, bi = col_re[j], -col_im[j]
                x = ad * ri[j] - s * (ar * br - ai * bi)
                y = ad * ii[j] - s * (ar * bi + ai * br)
                ri[j], ii[j] = x, y
                g = gcd(g, x, y)
        if g > 1:
            for i in active:
                ri, ii = re[i], im[i]
                for j in active:
                    ri[j] //= g
                    ii[j] //= g
    return Inertia(pos, neg, n - pos - neg)


def _checked_array(m: HermitianMatrix) -> np.ndarray:
    a = m.to_numpy()
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def _threshold(a: np.ndarray, tol: float) -> float:
    if tol <= 0:
        raise ValueError("tol must be positive")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    return tol * a.shape[0] * scale


def rank_approx(m: HermitianMatrix, tol: float = DEFAULT_TOL) -> int:
    """Number of |eigenvalues| above tol * n * max|entry|."""
    a = _checked_array(m)
    if a.size == 0:
        return 0
    cut = _threshold(a, tol)
    return int(np.sum(np.abs(np.linalg.eigvalsh(a)) > cut))


def inertia_approx(m: HermitianMatrix, tol: float = DEFAULT_TOL) -> Inertia:
    a = _checked_array(m)
    if a.size == 0:
        return Inertia(0, 0, 0)
    if not np.allclose(a, a.conj().T, atol=tol):
        raise ValueError("matrix is not Hermitian")
    cut = _threshold(a, tol)
    ev = np.linalg.eigvalsh(a)
    pos = int(np.sum(ev > cut))
    neg = int(np.sum(ev < -cut))
    return Inertia(pos, neg, m.n - pos - neg)


def inertia(m: HermitianMatrix, tol: float = DEFAULT_TOL) -> Inertia:
    if m.exact:
        return inertia_exact(m)
    return inertia_approx(m, tol)


def rank(m: HermitianMatrix, tol: float = DEFAULT_TOL) -> int:
    if m.exact:
        return rank_exact(m)
    return rank_approx(m, tol)


def graph_rank(g: GainGraph, tol: float = DEFAULT_TOL) -> int:
    """r(G, phi), exact whenever the gains are."""
    if g.m == 0:
        return 0
    return rank(adjacency_matrix(g), tol)


def graph_inertia(g: GainGraph, tol: float = DEFAULT_TOL) -> Inertia:
    return inertia(adjacency_matrix(g), tol)
