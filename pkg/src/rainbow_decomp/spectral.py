"""Normalized Laplacian spectrum via cyclic Jacobi, exact Cheeger constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import EdgeColoredGraph, is_connected

INEQ_TOL = 1e-9
_OFFDIAG_TARGET = 1e-12
_MAX_SWEEPS = 100
_SKIP = 1e-16


class JacobiConvergenceError(RuntimeError):
    """Off-diagonal norm failed to reach the target within the sweep cap."""


def normalized_laplacian(g: EdgeColoredGraph) -> np.ndarray:
    """Symmetric matrix with 1 on the diagonal where the degree is nonzero,
    -1/sqrt(d_u * d_v) on adjacent pairs, 0 elsewhere (isolated vertices get
    an all-zero row and column)."""
    lap = np.zeros((g.n, g.n))
    deg = g.degree_sequence
    for v in range(g.n):
        if deg[v] != 0:
            lap[v, v] = 1.0
    for u, v, _ in g.edges:
        w = -1.0 / math.sqrt(deg[u] * deg[v])
        lap[u, v] = w
        lap[v, u] = w
    return lap


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps row pairs until the off-diagonal Frobenius norm is at most 1e-12,
    capped at 100 sweeps (quadratic convergence makes the cap generous at the
    matrix sizes handled here).  Returns ``(eigenvalues, eigenvectors)`` with
    eigenvalues ascending and eigenvectors as matching columns.

    Raises:
        JacobiConvergenceError: if the cap is reached without converging.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    vecs = np.eye(n)
    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= _OFFDIAG_TARGET:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= _SKIP:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                # stable forms for the pivot entries
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                vcol_p, vcol_q = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vcol_p - s * vcol_q
                vecs[:, q] = s * vcol_p + c * vcol_q
    else:
        if _offdiag_norm(a) > _OFFDIAG_TARGET:
            raise JacobiConvergenceError(
                f"off-diagonal norm {_offdiag_norm(a):.3e} after {_MAX_SWEEPS} sweeps"
            )
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], vecs[:, order]


@dataclass(frozen=True)
class SpectralSummary:
    """Normalized-Laplacian eigenvalues, ascending; lambda1 is the second one."""

    eigenvalues: tuple[float, ...]
    lambda1: float
    n: int


def spectrum(g: EdgeColoredGraph) -> SpectralSummary:
    """Eigenvalues of the normalized Laplacian, sorted ascending.

    lambda1 (the second-smallest) is positive exactly when the graph is
    connected; for a single-vertex graph it is reported as 0.
    """
    vals, _ = jacobi_eigh(normalized_laplacian(g))
    eigenvalues = tuple(float(x) for x in vals)
    lam1 = eigenvalues[1] if g.n >= 2 else 0.0
    return SpectralSummary(eigenvalues=eigenvalues, lambda1=lam1, n=g.n)


def lambda1(g: EdgeColoredGraph) -> float:
    return spectrum(g).lambda1


@dataclass(frozen=True)
class CheegerCertificate:
    h: float
    witness: frozenset[int]
    lambda1: float


def cheeger_exact(g: EdgeColoredGraph, *, max_vertices: int = 20) -> CheegerCertificate:
    """Exact Cheeger constant by enumerating all 2^(n-1) - 1 proper subsets
    containing vertex 0 (each subset/complement pair once).

    Ties are broken toward the lexicographically smallest witness, and the
    minimization compares exact integer ratios, so the result is fully
    deterministic.

    Raises:
        ValueError: disconnected graph (the constant degenerates to 0 with an
            empty cut), n = 1, or n above the enumeration cap.
    """
    if g.n > max_vertices:
        raise ValueError(f"subset enumeration infeasible: n={g.n} above cap {max_vertices}")
    if g.n < 2:
        raise ValueError("Cheeger constant needs at least two vertices")
    if not is_connected(g):
        raise ValueError("Cheeger constant requires a connected graph")
    masks = g.neighbor_masks()
    deg = g.degree_sequence
    total_vol = 2 * g.num_edges
    full = (1 << g.n) - 1

    best_cut = -1
    best_minvol = 1
    best_mask = 0
    for low in range(0, (1 << (g.n - 1)) - 1):
        smask = (low << 1) | 1
        inv = full ^ smask
        vol = 0
        crossing = 0
        rem = smask
        while rem:
            vbit = rem & -rem
            rem ^= vbit
            vidx = vbit.bit_length() - 1
            vol += deg[vidx]
            crossing += (masks[vidx] & inv).bit_count()
        minvol = min(vol, total_vol - vol)
        if best_cut < 0 or crossing * best_minvol < best_cut * minvol:
            best_cut, best_minvol, best_mask = crossing, minvol, smask
        elif crossing * best_minvol == best_cut * minvol:
            if _mask_to_tuple(smask) < _mask_to_tuple(best_mask):
                best_cut, best_minvol, best_mask = crossing, minvol, smask
    witness = frozenset(_mask_to_tuple(best_mask))
    lam1 = spectrum(g).lambda1
    return CheegerCertificate(h=best_cut / best_minvol, witness=witness, lambda1=lam1)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    rem = mask
    while rem:
        bit = rem & -rem
        rem ^= bit
        out.append(bit.bit_length() - 1)
    return tuple(out)


@dataclass(frozen=True)
class CheegerReport:
    h: float
    lambda1: float
    lower: float
    upper: float
    holds: bool


def check_cheeger_inequality(
    g: EdgeColoredGraph, *, max_vertices: int = 20
) -> CheegerReport:
    """Certify h^2/2 < lambda1 <= 2h with exact h and slack 1e-9.

    The lower comparison is taken non-strictly with the slack: at tolerance
    scale the strict form is indistinguishable from the non-strict one.
    """
    cert = cheeger_exact(g, max_vertices=max_vertices)
    lower = cert.h * cert.h / 2.0
    upper = 2.0 * cert.h
    holds = (lower < cert.lambda1 + INEQ_TOL) and (cert.lambda1 <= upper + INEQ_TOL)
    return CheegerReport(
        h=cert.h, lambda1=cert.lambda1, lower=lower, upper=upper, holds=holds
    )
