"""Homogeneous plane waves: Lie algebra, left-invariant frame, metric and charts.

The plane wave ``g_{eps,a1,a2,gamma}`` is realised as a left-invariant metric
on ``K/H`` with ``k = <k1..k6>`` and isotropy ``h = <k5, k6>``.  Points of
``K/H`` are described in exponential coordinates ``(x1, x2, x3, x4)``, standing for
``exp(x1 k1) exp(x2 k2 + x3 k3) exp(x4 k4) H``.

Everything that feeds the exact pipeline (brackets, frame, metric, Christoffel
symbols) is exact.  The chart changes to Brinkmann coordinates are numeric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .exactlin import ONE, ZERO, MatrixQ, Poly4, Q, to_q

__all__ = [
    "Params", "BracketTable", "FrameData", "MetricData",
    "bracket_table", "frame_data", "metric_data",
    "brinkmann_map", "brinkmann_jacobian", "brinkmann_metric",
    "conformal_shift_map", "conformal_shift_inverse", "conformal_shift_jacobian",
    "param_isometries", "DomainError",
]


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class Params:
    """Parameters ``(epsilon, a1, a2, gamma)`` of a homogeneous plane wave."""

    epsilon: object
    a1: object
    a2: object
    gamma: object

    def __post_init__(self):
        for name in ("epsilon", "a1", "a2", "gamma"):
            object.__setattr__(self, name, to_q(getattr(self, name)))
        if self.epsilon not in (0, 1):
            raise ValueError(f"epsilon must be 0 or 1, got {self.epsilon}")

    @classmethod
    def of(cls, *vals) -> "Params":
        if len(vals) == 1:
            vals = tuple(vals[0])
        return cls(*vals)

    def astuple(self) -> tuple:
        return (self.epsilon, self.a1, self.a2, self.gamma)

    @property
    def conformally_flat(self) -> bool:
        return self.a1 == self.a2

    def as_strings(self) -> dict:
        return {k: _qstr(v) for k, v in zip(("epsilon", "a1", "a2", "gamma"), self.astuple())}

    def __str__(self) -> str:
        return "(" + ", ".join(_qstr(v) for v in self.astuple()) + ")"


def _qstr(v) -> str:
    v = to_q(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# --------------------------------------------------------------------------
# Lie algebra


class BracketTable:
    """Structure constants: ``[k_i, k_j] = sum_k c[i][j][k] k_k`` (1-based)."""

    def __init__(self, params: Params, table: dict):
        self.params = params
        self._c = table

    def bracket(self, i: int, j: int) -> dict:
        """Components of ``[k_i, k_j]`` as a sparse dict ``{k: coeff}``."""
        if i == j:
            return {}
        if (i, j) in self._c:
            return dict(self._c[(i, j)])
        if (j, i) in self._c:
            return {k: -v for k, v in self._c[(j, i)].items()}
        return {}

    def c(self, i: int, j: int, k: int):
        return self.bracket(i, j).get(k, ZERO)

    def bracket_vec(self, x: Sequence, y: Sequence) -> list:
        """Bracket of two elements given by 6 coefficients each."""
        out = [ZERO] * 6
        for i in range(6):
            if not x[i]:
                continue
            for j in range(6):
                if not y[j]:
                    continue
                for k, v in self.bracket(i + 1, j + 1).items():
                    out[k - 1] += x[i] * y[j] * v
        return out

    def ad(self, i: int) -> MatrixQ:
        """``ad(k_i)`` as a 6x6 matrix; column j holds ``[k_i, k_j]``."""
        rows = [{} for _ in range(6)]
        for j in range(1, 7):
            for k, v in self.bracket(i, j).items():
                rows[k - 1][j - 1] = v
        return MatrixQ(6, 6, rows)

    def ad_float(self, i: int) -> np.ndarray:
        return self.ad(i).to_float()

    def jacobi(self, i: int, j: int, k: int) -> list:
        """Cyclic sum ``[ki,[kj,kk]] + [kj,[kk,ki]] + [kk,[ki,kj]]``."""
        e = lambda n: [ONE if m == n - 1 else ZERO for m in range(6)]
        x, y, z = e(i), e(j), e(k)
        br = self.bracket_vec
        terms = [br(x, br(y, z)), br(y, br(z, x)), br(z, br(x, y))]
        return [sum(t[m] for t in terms) for m in range(6)]


def bracket_table(p: Params) -> BracketTable:
    e, a1, a2, g = p.astuple()
    raw = {
        (1, 2): {3: g, 5: a1},
        (1, 3): {2: -g, 6: a2},
        (1, 4): {4: -e},
        (1, 5): {2: ONE, 5: -e, 6: g},
        (1, 6): {3: ONE, 5: -g, 6: -e},
        (2, 5): {4: -ONE},
        (3, 6): {4: -ONE},
    }
    table = {k: {m: v for m, v in d.items() if v} for k, d in raw.items()}
    return BracketTable(p, {k: d for k, d in table.items() if d})


# --------------------------------------------------------------------------
# frame and metric

X1, X2, X3, X4 = (Poly4.var(i) for i in (1, 2, 3, 4))
P0 = Poly4()
P1 = Poly4.const(1)


@dataclass(frozen=True)
class FrameData:
    """``frame[i][mu]``: coefficient of d/dx_mu in e^i; ``coframe[i][mu]``: of dx_mu in e*_i."""

    frame: tuple
    coframe: tuple

    def frame_matrix(self, x) -> np.ndarray:
        """Numeric 4x4 matrix ``E[mu, i]`` = d/dx_mu component of e^i at x."""
        return np.array([[self.frame[i][mu].eval_float(x) for i in range(4)] for mu in range(4)])


def _potential(p: Params) -> Poly4:
    # 1/2 a1 x2^2 + 1/2 a2 x3^2 - eps x4
    h = Q(1, 2)
    return X2 * X2 * (h * p.a1) + X3 * X3 * (h * p.a2) - X4 * p.epsilon


def frame_data(p: Params) -> FrameData:
    pot = _potential(p)
    g = p.gamma
    frame = (
        (P1, X3 * g, X2 * (-g), -pot),
        (P0, P1, P0, P0),
        (P0, P0, P1, P0),
        (P0, P0, P0, P1),
    )
    coframe = (
        (P1, P0, P0, P0),
        (X3 * (-g), P1, P0, P0),
        (X2 * g, P0, P1, P0),
        (pot, P0, P0, P1),
    )
    return FrameData(frame, coframe)


# constant frame metric: 2 e*1 e*4 + (e*2)^2 + (e*3)^2
FRAME_METRIC = ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0))


def _det4(m) -> Poly4:
    total = Poly4()
    for perm in permutations(range(4)):
        sign = 1
        for a in range(4):
            for b in range(a + 1, 4):
                if perm[a] > perm[b]:
                    sign = -sign
        term = Poly4.const(sign)
        for r in range(4):
            term = term * m[r][perm[r]]
            if term.is_zero():
                break
        total = total + term
    return total


def _minor(m, r, c):
    return [[m[i][j] for j in range(4) if j != c] for i in range(4) if i != r]


def _det3(m) -> Poly4:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@dataclass(frozen=True)
class MetricData:
    g: tuple
    ginv: tuple
    christoffel: tuple  # christoffel[a][b][c] = Gamma^a_{bc}
    det: Poly4

    def numeric(self, x):
        """Return ``(g, ginv, Gamma)`` as float arrays at the point x."""
        return _numeric_metric(self, tuple(float(v) for v in x))


def _numeric_metric(md: MetricData, x):
    g = np.array([[md.g[a][b].eval_float(x) for b in range(4)] for a in range(4)])
    gi = np.array([[md.ginv[a][b].eval_float(x) for b in range(4)] for a in range(4)])
    G = np.array([[[md.christoffel[a][b][c].eval_float(x) for c in range(4)] for b in range(4)] for a in range(4)])
    return g, gi, G


def metric_data(p: Params) -> MetricData:
    return _metric_data_cached(p)


@lru_cache(maxsize=64)
def _metric_data_cached(p: Params) -> MetricData:
    cf = frame_data(p).coframe
    g = [[Poly4() for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            s = Poly4()
            for i in range(4):
                for j in range(4):
                    if FRAME_METRIC[i][j]:
                        s = s + cf[i][a] * cf[j][b] * FRAME_METRIC[i][j]
            g[a][b] = s
    det = _det4(g)
    if len(det.terms) != 1 or (0, 0, 0, 0) not in det.terms:
        raise ArithmeticError(f"metric determinant is not constant: {det}")
    dinv = ONE / det.terms[(0, 0, 0, 0)]
    ginv = [[_det3(_minor(g, c, r)) * (dinv * (-1) ** (r + c)) for c in range(4)] for r in range(4)]
    dg = [[[g[b][c].diff(a + 1) for c in range(4)] for b in range(4)] for a in range(4)]  # dg[a][b][c] = d_a g_bc
    half = Q(1, 2)
    chris = [[[Poly4() for _ in range(4)] for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            for c in range(b, 4):
                s = Poly4()
                for d in range(4):
                    if ginv[a][d].is_zero():
                        continue
                    s = s + ginv[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c])
                s = s * half
                chris[a][b][c] = s
                chris[a][c][b] = s
    tup = lambda m: tuple(tuple(r) for r in m)
    return MetricData(tup(g), tup(ginv), tuple(tup(x) for x in chris), det)


# --------------------------------------------------------------------------
# charts


def _angle(p: Params, xp: float) -> float:
    g = float(p.gamma)
    if p.epsilon == 0:
        return g * xp
    return g * math.log(xp)


def brinkmann_map(p: Params, direction: str, point: Sequence[float]) -> np.ndarray:
    """Change chart between Brinkmann ``(x+, z1, z2, x-)`` and exponential coordinates.

    ``direction`` is ``"to-exponential"`` or ``"to-brinkmann"``.
    """
    if direction == "to-exponential":
        xp, z1, z2, xm = (float(v) for v in point)
        if p.epsilon == 1 and xp <= 0:
            raise DomainError(f"x+ must be positive for epsilon=1, got {xp}")
        th = _angle(p, xp)
        c, s = math.cos(th), math.sin(th)
        x2 = c * z1 + s * z2
        x3 = -s * z1 + c * z2
        if p.epsilon == 0:
            return np.array([xp, x2, x3, xm])
        return np.array([math.log(xp), x2, x3, xp * xm])
    if direction == "to-brinkmann":
        x1, x2, x3, x4 = (float(v) for v in point)
        xp = x1 if p.epsilon == 0 else math.exp(x1)
        th = _angle(p, xp)
        c, s = math.cos(th), math.sin(th)
        z1 = c * x2 - s * x3
        z2 = s * x2 + c * x3
        xm = x4 if p.epsilon == 0 else x4 / xp
        return np.array([xp, z1, z2, xm])
    raise ValueError(f"unknown direction {direction!r}")


def brinkmann_jacobian(p: Params, point_b: Sequence[float]) -> np.ndarray:
    """``J[a, mu] = d x_a / d y_mu`` with y Brinkmann and x exponential coordinates."""
    xp, z1, z2, xm = (float(v) for v in point_b)
    x = brinkmann_map(p, "to-exponential", point_b)
    th = _angle(p, xp)
    c, s = math.cos(th), math.sin(th)
    g = float(p.gamma)
    J = np.zeros((4, 4))
    dth = g if p.epsilon == 0 else g / xp
    J[0, 0] = 1.0 if p.epsilon == 0 else 1.0 / xp
    J[1, 0], J[1, 1], J[1, 2] = dth * x[2], c, s
    J[2, 0], J[2, 1], J[2, 2] = -dth * x[1], -s, c
    if p.epsilon == 0:
        J[3, 3] = 1.0
    else:
        J[3, 0], J[3, 3] = xm, xp
    return J


def brinkmann_metric(p: Params, point_b: Sequence[float]) -> np.ndarray:
    """Metric components in Brinkmann coordinates ``(x+, z1, z2, x-)``."""
    xp, z1, z2, xm = (float(v) for v in point_b)
    th = _angle(p, xp)
    c, s = math.cos(th), math.sin(th)
    u1 = c * z1 + s * z2
    u2 = -s * z1 + c * z2
    H = float(p.a1) * u1 ** 2 + float(p.a2) * u2 ** 2
    if p.epsilon == 1:
        H /= xp ** 2
    g = np.zeros((4, 4))
    g[0, 3] = g[3, 0] = 1.0
    g[1, 1] = g[2, 2] = 1.0
    g[0, 0] = H
    return g


def conformal_shift_map(point: Sequence[float]) -> np.ndarray:
    """Brinkmann chart of ``g_{0,a1+1/4,a2+1/4,gamma}`` to that of ``g_{1,a1,a2,gamma}``.

    The pull-back of the target metric is ``exp(x+)`` times the source metric.
    """
    xp, z1, z2, xm = (float(v) for v in point)
    e = math.exp(xp / 2)
    return np.array([math.exp(xp), e * z1, e * z2, xm - (z1 ** 2 + z2 ** 2) / 4])


def conformal_shift_inverse(point: Sequence[float]) -> np.ndarray:
    """Inverse of :func:`conformal_shift_map`."""
    yp, w1, w2, ym = (float(v) for v in point)
    if yp <= 0:
        raise DomainError(f"x+ must be positive, got {yp}")
    xp = math.log(yp)
    e = math.exp(-xp / 2)
    z1, z2 = e * w1, e * w2
    return np.array([xp, z1, z2, ym + (z1 ** 2 + z2 ** 2) / 4])


def conformal_shift_jacobian(point: Sequence[float]) -> np.ndarray:
    """Jacobian of :func:`conformal_shift_map` at ``point``."""
    xp, z1, z2, xm = (float(v) for v in point)
    e = math.exp(xp / 2)
    J = np.zeros((4, 4))
    J[0, 0] = math.exp(xp)
    J[1, 0], J[1, 1] = e * z1 / 2, e
    J[2, 0], J[2, 2] = e * z2 / 2, e
    J[3, 1], J[3, 2], J[3, 3] = -z1 / 2, -z2 / 2, 1.0
    return J


def param_isometries(p: Params, lambdas: Iterable = (2, 3)) -> list:
    """Parameter points equivalent to ``p``, as ``(Params, kind)`` pairs.

    ``kind`` is ``"isometric"`` or ``"conformal"``.  Scalings only exist in
    the epsilon = 0 family; the swap of a1 and a2 exists in both families.
    """
    out = []
    e, a1, a2, g = p.astuple()
    if e == 0:
        for lam in lambdas:
            lam = to_q(lam)
            if lam == 0:
                raise ValueError("scaling factor must be nonzero")
            out.append((Params(0, lam * lam * a1, lam * lam * a2, lam * g), "isometric"))
    out.append((Params(e, a2, a1, g), "isometric"))
    if e == 1:
        q = Q(1, 4)
        out.append((Params(0, a1 + q, a2 + q, g), "conformal"))
    return out
