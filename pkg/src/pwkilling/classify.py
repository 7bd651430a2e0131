"""Reducible vs irreducible solutions by sampled numeric rank.

Reducible Killing tensors are spanned by the products ``k^i k^j`` of Killing
fields and the inverse metric; reducible conformal Killing tensors by the
trace-free products ``(k^i k^j)_0`` including the homothety ``k^7``.  Their
dimension is the rank of a matrix of samples at random points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fieldeval import (conformal_vector_fields, evaluator, killing_fields,
                        shifted_conformal_field, trace)
from .planewave import Params, metric_data
from .solver import (CORRESPONDENCE, catalog_entry, normalize_problem, solution_space,
                     special_locus_catalog)
from .tractor import CONFORMAL, PROJECTIVE

__all__ = [
    "RankReport", "AmbiguousRank", "ConsistencyError", "sample_points",
    "reducible_samples", "solution_samples", "numeric_rank", "irreducible_count",
    "reducible_constant", "kt_ckt_correspondence", "containment_residual",
    "reproduce", "ReproRow", "DEFAULT_SEED", "RANK_TOL", "GAP",
]

DEFAULT_SEED = 20240601
RANK_TOL = 1e-8
GAP = 1e4
_IU = np.triu_indices(4)


class AmbiguousRank(ArithmeticError):
    """Singular values show no clear gap; more sample points are needed."""


class ConsistencyError(RuntimeError):
    """Sampled rank disagrees with the known reducible dimension."""


@dataclass(frozen=True)
class RankReport:
    sample_points: int
    tolerance: float
    singular_values: tuple
    rank: int
    gap: float  # ratio of the last retained to the first discarded value
    ambiguous: bool

    def require(self) -> int:
        if self.ambiguous:
            raise AmbiguousRank(f"no spectral gap (ratio {self.gap:.3g}); add sample points")
        return self.rank


def sample_points(n: int, seed: int = DEFAULT_SEED, box: float = 1.0) -> np.ndarray:
    return np.random.default_rng(seed).uniform(-box, box, size=(n, 4))


def _flatten(tensors: np.ndarray) -> np.ndarray:
    """``[k, 4, 4]`` symmetric tensors to ``[k, 10]`` independent components."""
    return tensors[:, _IU[0], _IU[1]]


def reducible_samples(p: Params, problem: str, points: Sequence) -> np.ndarray:
    """Rows: ``k^i k^j`` (i <= j <= 6) and ``g^{-1}``, or ``(k^i k^j)_0`` (i <= j <= 7)."""
    problem = normalize_problem(problem)
    if problem == CONFORMAL and p.conformally_flat:
        raise ValueError("a1 = a2: the conformal symmetry algebra is larger than k1..k7")
    conformal = problem == CONFORMAL
    n = 28 if conformal else 22
    points = list(points)
    if not points:
        return np.zeros((n, 0))
    md = metric_data(p)
    blocks = []
    for x in points:
        g, gi, _ = md.numeric(x)
        ks = conformal_vector_fields(p, x) if conformal else killing_fields(p, x)
        ts = []
        for i in range(len(ks)):
            for j in range(i, len(ks)):
                ts.append(0.5 * (np.outer(ks[i], ks[j]) + np.outer(ks[j], ks[i])))
        ts = np.array(ts)
        if conformal:
            ts = ts - 0.25 * trace(g, ts)[:, None, None] * gi
        else:
            ts = np.concatenate([ts, gi[None]])
        blocks.append(_flatten(ts))
    return np.concatenate(blocks, axis=1)


def solution_samples(problem: str, p: Params, points: Sequence) -> np.ndarray:
    """Rows: the solver basis fields, sampled like :func:`reducible_samples`."""
    problem = normalize_problem(problem)
    S = solution_space(problem, p)
    B = _basis_matrix(S)
    if problem == CONFORMAL and p.epsilon == 1:
        fn = shifted_conformal_field(p, S.computed_at, B)
    else:
        ev = evaluator(problem, p)
        fn = lambda x: ev.tensor(B, x)
    if B.shape[1] == 0:
        return np.zeros((0, 10 * len(points)))
    return np.concatenate([_flatten(fn(x)) for x in points], axis=1)


def _basis_matrix(S) -> np.ndarray:
    n = S.space.ambient_dim
    vecs = S.space.vectors()
    B = np.zeros((n, len(vecs)))
    for k, v in enumerate(vecs):
        for j, x in v.items():
            B[j, k] = float(x)
    return B


def numeric_rank(m: np.ndarray, tol: float = RANK_TOL, gap: float = GAP,
                 sample_points: int | None = None) -> RankReport:
    """Rank by relative singular-value cutoff, with the spectral-gap rule."""
    if not 0 < tol < 1:
        raise ValueError("tolerance must lie in (0, 1)")
    m = np.asarray(m, dtype=float)
    npts = sample_points if sample_points is not None else m.shape[1]
    if m.size == 0:
        return RankReport(npts, tol, (), 0, float("inf"), False)
    norms = np.linalg.norm(m, axis=1)
    m = m[norms > 0] / norms[norms > 0, None]
    if m.shape[0] == 0:
        return RankReport(npts, tol, (), 0, float("inf"), False)
    s = np.linalg.svd(m, compute_uv=False)
    r = int(np.sum(s > tol * s[0]))
    if r < len(s):
        ratio = s[r - 1] / s[r] if s[r] > 0 else float("inf")
    else:
        ratio = float("inf")
    return RankReport(npts, tol, tuple(float(v) for v in s), r, float(ratio), ratio < gap)


def reducible_constant(p: Params, problem: str) -> int:
    """Dimension of the reducible space as known from the symmetry algebra."""
    problem = normalize_problem(problem)
    if problem == CONFORMAL:
        return 84 if p.conformally_flat else 27
    if p.conformally_flat:
        if p.a1 == 0:
            return 50
        return 27 if p.epsilon == 0 else 28
    return 21 if p.epsilon == 0 else 22


def _points_for(problem: str, n: int | None, seed: int) -> np.ndarray:
    if n is None:
        n = 3 * (28 if problem == CONFORMAL else 22)
    return sample_points(n, seed)


def irreducible_count(p: Params, problem: str, n_points: int | None = None,
                      seed: int = DEFAULT_SEED, report: bool = False):
    """``(total, reducible, irreducible)``; with ``report`` also the RankReport."""
    problem = normalize_problem(problem)
    total = solution_space(problem, p).dim
    expected = reducible_constant(p, problem)
    rep = None
    if p.conformally_flat:
        reducible = expected
    else:
        pts = _points_for(problem, n_points, seed)
        rep = numeric_rank(reducible_samples(p, problem, pts), sample_points=len(pts))
        reducible = rep.require()
        if reducible != expected:
            raise ConsistencyError(f"sampled reducible rank {reducible}, expected {expected}")
    if reducible > total:
        raise ConsistencyError(f"reducible dimension {reducible} exceeds total {total}")
    out = (total, reducible, total - reducible)
    return (out, rep) if report else out


def containment_residual(p: Params, problem: str, n_points: int | None = None,
                         seed: int = DEFAULT_SEED) -> float:
    """Relative least-squares residual of reducible samples on solution samples."""
    problem = normalize_problem(problem)
    pts = _points_for(problem, n_points, seed)
    R = reducible_samples(p, problem, pts)
    S = solution_samples(problem, p, pts)
    coef, *_ = np.linalg.lstsq(S.T, R.T, rcond=None)
    res = R.T - S.T @ coef
    return float(np.linalg.norm(res, axis=0).max() / max(np.linalg.norm(R, axis=1).max(), 1e-300))


def _trace_free(p: Params, points, rows: np.ndarray) -> np.ndarray:
    """Trace-free parts of sampled Killing rows (10 components per point)."""
    md = metric_data(p)
    out = np.empty_like(rows)
    for k, x in enumerate(points):
        g, gi, _ = md.numeric(x)
        blk = rows[:, 10 * k:10 * (k + 1)]
        T = np.zeros((rows.shape[0], 4, 4))
        T[:, _IU[0], _IU[1]] = blk
        T = T + np.triu(T, 1).transpose(0, 2, 1)
        T = T - 0.25 * trace(g, T)[:, None, None] * gi
        out[:, 10 * k:10 * (k + 1)] = _flatten(T)
    return out


def kt_ckt_correspondence(p: Params, n_points: int | None = None,
                          seed: int = DEFAULT_SEED) -> int:
    """Number of irreducible Killing tensors whose trace-free part is irreducible.

    Rank of ``K -> [K_0]`` from Killing tensors to conformal Killing tensors
    modulo reducible ones.  Reducible Killing tensors lie in its kernel.
    """
    if p.conformally_flat:
        raise ValueError("the correspondence is defined for a1 != a2")
    pts = _points_for(CONFORMAL, n_points, seed)
    C = reducible_samples(p, CONFORMAL, pts)
    S0 = _trace_free(p, pts, solution_samples(PROJECTIVE, p, pts))
    base = numeric_rank(C).require()
    both = numeric_rank(np.vstack([C, S0])).require()
    return both - base


# --------------------------------------------------------------------------
# theorem reproduction


@dataclass(frozen=True)
class ReproRow:
    theorem: int
    label: str
    problem: str
    params: Params
    expected: tuple
    got: tuple
    passed: bool
    note: str = field(default="")


def reproduce(theorem: int, seed: int = DEFAULT_SEED) -> list:
    """Check every catalog clause of theorem 1..4 (0 for the flat reference rows)."""
    rows = []
    if theorem == 4:
        for label, count, clause in CORRESPONDENCE:
            e = catalog_entry(label)
            try:
                got = kt_ckt_correspondence(e.params, seed=seed)
                note = ""
            except (AmbiguousRank, ConsistencyError) as exc:
                got, note = None, str(exc)
            rows.append(ReproRow(4, f"KTCKT-Thm1.4({clause})", PROJECTIVE, e.params,
                                 (count,), (got,), got == count, note))
        return rows
    if theorem not in (0, 1, 2, 3):
        raise ValueError("theorem must be 1, 2, 3 or 4")
    for e in special_locus_catalog():
        if e.theorem != theorem:
            continue
        try:
            total, _, irr = irreducible_count(e.params, e.problem, seed=seed)
            got, note = (total, irr), ""
        except (AmbiguousRank, ConsistencyError) as exc:
            got, note = (None, None), str(exc)
        rows.append(ReproRow(theorem, e.label, e.problem, e.params, (e.total, e.irreducible),
                             got, got == (e.total, e.irreducible), note))
    return rows
