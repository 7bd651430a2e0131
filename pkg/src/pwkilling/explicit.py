"""Closed-form irreducible solutions used as independent checks.

Each family is written in Brinkmann coordinates ``y = (x+, z1, z2, x-)`` as
a contravariant symmetric tensor, with ``XY`` the symmetrised product
``(X (x) Y + Y (x) X) / 2`` and ``X^2 = X (x) X``.  :func:`explicit_field`
pulls a family back to exponential coordinates for the residual checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exactlin import Q
from .planewave import Params, brinkmann_jacobian, brinkmann_map, brinkmann_metric
from .tractor import CONFORMAL, PROJECTIVE

__all__ = ["Family", "FAMILIES", "explicit_field", "family", "sym"]

P, Z1, Z2, M = range(4)  # x+, z1, z2, x-


def _e(i) -> np.ndarray:
    v = np.zeros(4)
    v[i] = 1.0
    return v


def sym(X, Y=None) -> np.ndarray:
    if Y is None:
        return np.outer(X, X)
    return 0.5 * (np.outer(X, Y) + np.outer(Y, X))


def _ginv(p: Params, y) -> np.ndarray:
    return np.linalg.inv(brinkmann_metric(p, y))


def _euler(y) -> np.ndarray:
    """``z1 d_z1 + z2 d_z2 + 2 x- d_x-``."""
    return np.array([0.0, y[Z1], y[Z2], 2 * y[M]])


def _kt_generic(p, y, c):
    k = sym(_euler(y), _e(M)) - y[P] * _ginv(p, y)
    return c[0] * k


def _kt_zero_pm2(p, y, c):
    X = c[0] * _e(Z1) + c[1] * _e(M)
    return sym(_euler(y), X) - (c[0] * y[Z1] + c[1] * y[P]) * _ginv(p, y)


def _kt_pm83(p, y, c, sign):
    z1, z2 = y[Z1], y[Z2]
    extra = sym(z2 * _e(Z1), _e(Z2)) - z1 * sym(_e(Z2)) - sign * (2 / 3) * z1 * z2 ** 2 * sym(_e(M))
    return _kt_generic(p, y, c[:1]) + c[1] * extra


def _kt_family7(p, y, c):
    xp, z1, z2 = y[P], y[Z1], y[Z2]
    a2 = float(p.a2)
    r = np.sqrt(xp)
    k = (2 * r * z2 * sym(_e(Z1), _e(Z2)) - z2 ** 2 / r * sym(_e(Z1), _e(M))
         - 2 * r * z1 * sym(_e(Z2)) + z1 * z2 / r * sym(_e(Z2), _e(M))
         - (4 * a2 + 1) * z2 ** 2 * z1 / (2 * xp ** 1.5) * sym(_e(M)))
    return c[0] * k


def _fkt_34(p, y, c):
    xp, z1, z2, xm = y
    A = np.array([-2 * xp, z1, z2, 4 * xm])
    B = np.array([-2 * xp, z1, z2, 0.0]) / xp ** 2 + (z1 ** 2 + z2 ** 2) / xp ** 3 * _e(M)
    return c[0] * (sym(A, B) - ((z1 ** 2 + z2 ** 2) / xp ** 2 - 4 * xm / xp) * _ginv(p, y))


def _ckt_c4(p, y, c, sign):
    z1, z2 = y[Z1], y[Z2]
    k = (2 * z2 * sym(_e(Z1), _e(Z2)) - 2 * z1 * sym(_e(Z2))
         - sign * (4 / 3) * z1 * z2 ** 2 * sym(_e(M)) + 0.5 * z1 * _ginv(p, y))
    return c[0] * k


@dataclass(frozen=True)
class Family:
    name: str
    problem: str
    params: tuple  # exact parameter strings of the representative metric
    ncoef: int
    fn: Callable
    applies: Callable = None  # optional predicate on Params for one-parameter families


def _at(*vals):
    return lambda p: p == Params(*vals)


FAMILIES = (
    Family("KT-generic", PROJECTIVE, ("0", "1", "2", "1"), 1, _kt_generic,
           lambda p: p.epsilon == 0),
    Family("KT-zero-pm2+", PROJECTIVE, ("0", "0", "2", "0"), 2, _kt_zero_pm2),
    Family("KT-zero-pm2-", PROJECTIVE, ("0", "0", "-2", "0"), 2, _kt_zero_pm2),
    Family("KT-pm83+", PROJECTIVE, ("0", "8/3", "2/3", "0"), 2,
           lambda p, y, c: _kt_pm83(p, y, c, 1)),
    Family("KT-pm83-", PROJECTIVE, ("0", "-8/3", "-2/3", "0"), 2,
           lambda p, y, c: _kt_pm83(p, y, c, -1)),
    Family("KT-family7", PROJECTIVE, ("1", "19/4", "1", "0"), 1, _kt_family7,
           lambda p: p.epsilon == 1 and p.gamma == 0 and p.a1 == 4 * p.a2 + Q(3, 4)),
    Family("FKT-pm1+", PROJECTIVE, ("0", "1", "1", "0"), 1, _kt_generic),
    Family("FKT-pm1-", PROJECTIVE, ("0", "-1", "-1", "0"), 1, _kt_generic),
    Family("FKT-34", PROJECTIVE, ("1", "3/4", "3/4", "0"), 1, _fkt_34),
    Family("CKT-c4+", CONFORMAL, ("0", "8/3", "2/3", "0"), 1,
           lambda p, y, c: _ckt_c4(p, y, c, 1)),
    Family("CKT-c4-", CONFORMAL, ("0", "-8/3", "-2/3", "0"), 1,
           lambda p, y, c: _ckt_c4(p, y, c, -1)),
)


def family(name: str) -> Family:
    for f in FAMILIES:
        if f.name == name:
            return f
    raise KeyError(f"unknown family {name!r}")


def explicit_field(fam: Family, p: Params | None = None, coeffs=None) -> Callable:
    """The family as a field ``x -> K^{mu nu}`` in exponential coordinates of ``p``."""
    if p is None:
        p = Params(*fam.params)
    elif fam.applies is not None and not fam.applies(p):
        raise ValueError(f"family {fam.name} does not apply to {p}")
    elif fam.applies is None and p != Params(*fam.params):
        raise ValueError(f"family {fam.name} is stated for {Params(*fam.params)} only")
    c = np.ones(fam.ncoef) if coeffs is None else np.asarray(coeffs, dtype=float)

    def field(x):
        y = brinkmann_map(p, "to-brinkmann", x)
        J = brinkmann_jacobian(p, y)
        return J @ fam.fn(p, y, c) @ J.T

    return field
