"""Exact integer matrix algebra for skew-adjacency matrices, plus a cyclic
Jacobi eigensolver for the symmetric Gram spectra.

Matrices are numpy int64 arrays; every structural predicate is decided in
exact integer arithmetic.  Floats appear only in eigenvalue and energy
reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import OrientedGraph

JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100
GRAM_CLAMP = 1e-10


def int_matrix(rows) -> np.ndarray:
    """Validated dense integer matrix (int64 is ample for every use here)."""
    m = np.array(rows, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


def skew_adjacency(og: OrientedGraph, ordering: Sequence[int] | None = None) -> np.ndarray:
    """The n x n matrix with entry (i, j) = +1 iff arc ordering[i] -> ordering[j].

    With the identity ordering, entry (u, v) is og.sign(u, v).
    """
    n = og.base.n
    if ordering is None:
        pos = list(range(n))
    else:
        order = list(ordering)
        if sorted(order) != list(range(n)):
            raise ValueError("ordering must be a permutation of 0..n-1")
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
    m = np.zeros((n, n), dtype=np.int64)
    for t, h in og.arcs:
        i, j = pos[t], pos[h]
        m[i, j] = 1
        m[j, i] = -1
    return m


def gram(m: np.ndarray) -> np.ndarray:
    """Exact M^T M."""
    return m.T @ m


def power(m: np.ndarray, k: int) -> np.ndarray:
    """Exact M^k for k >= 1."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("power needs a square matrix")
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    return np.linalg.matrix_power(m, k)


def is_optimum(og: OrientedGraph, k: int) -> bool:
    """True iff the Gram of the skew-adjacency matrix equals k*I exactly."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    s = skew_adjacency(og)
    return bool(np.array_equal(gram(s), k * np.eye(og.base.n, dtype=np.int64)))


def _off_diagonal_norm(a: np.ndarray) -> float:
    # summed from the off-diagonal entries themselves; subtracting the
    # diagonal mass from the total cancels catastrophically near convergence
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def symmetric_eigenvalues(matrix) -> list[float]:
    """All eigenvalues of a symmetric matrix, nonincreasing.

    Cyclic Jacobi rotations; converged when the off-diagonal Frobenius norm
    drops below JACOBI_TOLERANCE times the Frobenius norm of the input.
    A matrix that fails to converge within JACOBI_MAX_SWEEPS sweeps raises
    RuntimeError (does not happen for symmetric input; the cap is a guard).
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigensolver needs a square matrix")
    if not np.array_equal(a, a.T):
        raise ValueError("eigensolver needs a symmetric matrix")
    a = a.copy()
    n = a.shape[0]
    if n == 0:
        return []
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return [0.0] * n
    threshold = JACOBI_TOLERANCE * norm

    sweeps = 0
    while _off_diagonal_norm(a) >= threshold:
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise RuntimeError(
                f"Jacobi sweep cap {JACOBI_MAX_SWEEPS} exceeded (off-diagonal "
                f"norm {_off_diagonal_norm(a):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                # the rotation annihilates (p, q) by construction
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
    return sorted((float(x) for x in np.diag(a)), reverse=True)


def gram_eigenvalues(og: OrientedGraph) -> list[float]:
    """Eigenvalues of S^T S, nonincreasing, tiny negatives clamped to zero."""
    eigs = symmetric_eigenvalues(gram(skew_adjacency(og)))
    out = []
    for mu in eigs:
        if mu < -GRAM_CLAMP:
            raise RuntimeError(f"Gram eigenvalue {mu} below PSD clamp")
        out.append(0.0 if mu < 0.0 else mu)
    return out


@dataclass(frozen=True)
class SpectralSummary:
    """Gram spectrum of an orientation plus the derived energy figures.

    The eigenvalues of the skew-adjacency matrix S are +-i*sqrt(mu) for the
    eigenvalues mu of S^T S, so the energy (sum of absolute values of the
    eigenvalues of S) equals sum(sqrt(mu)).
    """

    gram_eigenvalues: tuple[float, ...]
    skew_energy: float
    upper_bound: float

    def attains_bound(self, tolerance: float = 1e-8) -> bool:
        return self.skew_energy >= self.upper_bound - tolerance


def skew_energy(og: OrientedGraph) -> SpectralSummary:
    """Energy summary; upper_bound is n*sqrt(max degree)."""
    mus = gram_eigenvalues(og)
    energy = float(sum(math.sqrt(mu) for mu in mus))
    bound = og.base.n * math.sqrt(og.base.max_degree())
    return SpectralSummary(tuple(mus), energy, bound)
