"""Numeric evaluation of solutions as coordinate tensor fields.

A vector ``v`` of the solution space gives the frame components

    f(x) = pi(exp(-Phi(x4 k4)) exp(-Phi(x2 k2 + x3 k3)) exp(-Phi(x1 k1)) v)

in exponential coordinates ``x = (x1, x2, x3, x4)``; contracting with the
left-invariant frame gives the contravariant components ``K^{mu nu}``.
Residuals of the (conformal) Killing equations are computed by central
finite differences with exact Christoffel symbols.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import expm

from .planewave import (FRAME_METRIC, Params, bracket_table, brinkmann_jacobian,
                        brinkmann_map, conformal_shift_inverse, conformal_shift_jacobian,
                        frame_data, metric_data)
from .prolongation import phi_family
from .tractor import CONFORMAL, cartan_component, pi_matrix

__all__ = [
    "Evaluator", "evaluator", "evaluate_solution", "killing_fields",
    "homothety_field", "residual_killing", "residual_conformal",
    "residual_killing_vector", "metric_inverse_field", "lower", "trace",
    "TraceError", "frame_to_coords", "DEFAULT_STEP", "shifted_conformal_field",
    "conformal_vector_fields",
]

DEFAULT_STEP = 1e-3
_ETA = np.array(FRAME_METRIC, dtype=float)


class TraceError(ValueError):
    """Input to the conformal residual is not trace-free."""


def frame_to_coords(p: Params, x, f: np.ndarray) -> np.ndarray:
    """``K^{mu nu} = sum_pq f[..., p, q] E[mu, p] E[nu, q]`` (leading axes batched)."""
    E = frame_data(p).frame_matrix(x)
    return np.einsum("mp,...pq,nq->...mn", E, f, E)


class Evaluator:
    """Evaluates fields from vectors of ``V`` for one (problem, params) pair.

    ``params`` is the metric whose Phi is used; for the conformal problem at
    epsilon = 1 pass the shifted epsilon = 0 metric and transport the result.
    """

    def __init__(self, problem: str, params: Params):
        self.problem = problem
        self.params = params
        f = phi_family(problem, params)
        self._phi = [None] + [f[i].to_float() for i in range(1, 7)]
        pi = pi_matrix(problem).to_float().reshape(4, 4, -1)  # [p, q, dim V]
        if problem != CONFORMAL:
            # projective positions carry dual indices; raise with the frame metric
            pi = np.einsum("ap,pqk,qb->abk", _ETA, pi, _ETA)
        self._pi = pi.reshape(16, -1)

    def propagator(self, x) -> np.ndarray:
        x1, x2, x3, x4 = (float(t) for t in x)
        P = self._phi
        return (expm(-x4 * P[4]) @ expm(-(x2 * P[2] + x3 * P[3])) @ expm(-x1 * P[1]))

    def frame_components(self, V: np.ndarray, x) -> np.ndarray:
        """Frame components ``f[k, p, q]`` for the columns ``V[:, k]``."""
        V = np.asarray(V, dtype=float)
        single = V.ndim == 1
        if single:
            V = V[:, None]
        out = (self._pi @ (self.propagator(x) @ V)).T.reshape(-1, 4, 4)
        return out[0] if single else out

    def tensor(self, V: np.ndarray, x) -> np.ndarray:
        """Contravariant components ``K[k, mu, nu]`` (batched over columns of V)."""
        return frame_to_coords(self.params, x, self.frame_components(V, x))


@lru_cache(maxsize=64)
def evaluator(problem: str, params: Params) -> Evaluator:
    return Evaluator(problem, params)


def evaluate_solution(problem: str, p: Params, v: Sequence, pt) -> np.ndarray:
    """``K^{mu nu}`` at ``pt`` for a vector ``v`` in free-variable coordinates of V."""
    if len(v) != cartan_component(problem).dim:
        raise ValueError("vector length does not match dim V")
    return evaluator(problem, p).tensor(np.asarray([float(t) for t in v]), pt)


def shifted_conformal_field(p: Params, q: Params, V: np.ndarray) -> Callable:
    """Fields of the epsilon = 0 metric ``q`` carried to the epsilon = 1 metric ``p``.

    ``q`` must be the conformally equivalent shift of ``p``.  Contravariant
    conformal Killing tensors are conformally invariant, so the push-forward
    through the chart map is again a solution on ``p``.
    """
    if p.epsilon != 1 or q.epsilon != 0:
        raise ValueError("expected an epsilon = 1 target and epsilon = 0 source")
    ev = evaluator(CONFORMAL, q)

    def field(x):
        yp = brinkmann_map(p, "to-brinkmann", x)
        yq = conformal_shift_inverse(yp)
        xq = brinkmann_map(q, "to-exponential", yq)
        J = (brinkmann_jacobian(p, yp) @ conformal_shift_jacobian(yq)
             @ np.linalg.inv(brinkmann_jacobian(q, yq)))
        return np.einsum("am,...mn,bn->...ab", J, ev.tensor(V, xq), J)

    return field


# --------------------------------------------------------------------------
# Killing fields


@lru_cache(maxsize=64)
def _ad_float(p: Params) -> tuple:
    b = bracket_table(p)
    return tuple(b.ad_float(i) for i in range(1, 7))


def killing_fields(p: Params, pt) -> np.ndarray:
    """Killing fields ``k^1..k^6`` at ``pt``: row j holds the components of k^{j+1}."""
    x1, x2, x3, x4 = (float(t) for t in pt)
    ad = _ad_float(p)
    A = expm(-x4 * ad[3]) @ expm(-(x2 * ad[1] + x3 * ad[2])) @ expm(-x1 * ad[0])
    c = A[:4, :]  # frame components of each transported generator
    E = frame_data(p).frame_matrix(pt)
    return (E @ c).T


def homothety_field(pt) -> np.ndarray:
    """``-x2 d2 - x3 d3 - 2 x4 d4``."""
    x1, x2, x3, x4 = (float(t) for t in pt)
    return np.array([0.0, -x2, -x3, -2.0 * x4])


def conformal_vector_fields(p: Params, pt) -> np.ndarray:
    """``k^1..k^6`` followed by the homothety ``k^7`` (7 x 4)."""
    return np.vstack([killing_fields(p, pt), homothety_field(pt)[None, :]])


# --------------------------------------------------------------------------
# residuals


def metric_inverse_field(p: Params) -> Callable:
    md = metric_data(p)
    return lambda x: md.numeric(x)[1]


def lower(g: np.ndarray, K: np.ndarray) -> np.ndarray:
    return np.einsum("am,...mn,bn->...ab", g, K, g)


def trace(g: np.ndarray, K: np.ndarray) -> np.ndarray:
    return np.einsum("mn,...mn->...", g, K)


def _derivative(fn: Callable, x: np.ndarray, h: float, richardson: bool) -> list:
    """``[d_a fn(x) for a in 0..3]`` by central differences."""
    out = []
    for a in range(4):
        e = np.zeros(4)
        e[a] = 1.0

        def d(step):
            return (fn(x + step * e) - fn(x - step * e)) / (2 * step)

        if richardson:
            out.append((4 * d(h / 2) - d(h)) / 3)
        else:
            out.append(d(h))
    return out


def _covariant_sym(p: Params, field: Callable, pt, h: float, richardson: bool):
    """``T_abc = nabla_(a K_bc)`` and the metric data at pt (batched fields allowed)."""
    x = np.asarray(pt, dtype=float)
    md = metric_data(p)
    g, gi, G = md.numeric(x)

    def low(y):
        gy = md.numeric(y)[0]
        return lower(gy, field(y))

    Kl = low(x)
    dK = np.stack(_derivative(low, x, h, richardson), axis=-3)  # [..., a, b, c]
    # Gamma[d, a, b]
    nab = dK - np.einsum("dab,...dc->...abc", G, Kl) - np.einsum("dac,...bd->...abc", G, Kl)
    T = (nab + np.swapaxes(nab, -3, -2) + np.swapaxes(nab, -3, -1)
         + np.swapaxes(nab, -2, -1) + np.moveaxis(nab, -3, -1) + np.moveaxis(nab, -1, -3)) / 6
    return T, g, gi


def residual_killing(p: Params, field: Callable, pt, h: float = DEFAULT_STEP,
                     richardson: bool = True):
    """Max-norm of ``nabla_(a K_bc)`` for a contravariant field ``x -> K^{mu nu}``.

    ``field`` may return a batch ``[..., 4, 4]``; the result is then an array.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    T, _, _ = _covariant_sym(p, field, pt, h, richardson)
    return np.abs(T).reshape(T.shape[:-3] + (-1,)).max(axis=-1)


def residual_conformal(p: Params, field: Callable, pt, h: float = DEFAULT_STEP,
                       richardson: bool = True, trace_tol: float = 1e-8):
    """Max-norm of the trace-free part of ``nabla_(a K_bc)``."""
    if h <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(pt, dtype=float)
    K = field(x)
    g = metric_data(p).numeric(x)[0]
    scale = max(np.abs(K).max(), 1.0)
    if np.abs(trace(g, K)).max() > trace_tol * scale:
        raise TraceError("field is not trace-free")
    T, g, gi = _covariant_sym(p, field, pt, h, richardson)
    lam = 0.5 * np.einsum("ab,...abc->...c", gi, T)
    sym = (np.einsum("ab,...c->...abc", g, lam) + np.einsum("bc,...a->...abc", g, lam)
           + np.einsum("ac,...b->...abc", g, lam)) / 3
    R = T - sym
    return np.abs(R).reshape(R.shape[:-3] + (-1,)).max(axis=-1)


def residual_killing_vector(p: Params, field: Callable, pt, h: float = DEFAULT_STEP,
                            conformal: bool = False):
    """Max-norm of ``nabla_(a v_b)`` (trace-free part if ``conformal``)."""
    x = np.asarray(pt, dtype=float)
    md = metric_data(p)
    g, gi, G = md.numeric(x)

    def low(y):
        return md.numeric(y)[0] @ field(y)

    vl = low(x)
    dv = np.stack(_derivative(low, x, h, True))  # [a, b]
    nab = dv - np.einsum("dab,d->ab", G, vl)
    S = 0.5 * (nab + nab.T)
    if conformal:
        S = S - 0.25 * np.einsum("ab,ab", gi, S) * g
    return np.abs(S).max()
