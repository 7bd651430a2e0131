"""Prolongation connections ``Phi = rho o alpha + Psi`` and their curvature.

``alpha`` (conformal, into so(2,4)) and ``beta`` (projective, into sl(5))
are the normal Cartan connections of the plane wave viewed as linear maps on
the symmetry algebra.  ``Psi`` is the correction term on the complement
``c = <k1..k4>``, loaded from :mod:`pwkilling.psi_tables`; it vanishes on the
isotropy ``h = <k5, k6>``.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from functools import lru_cache

from . import psi_tables
from .exactlin import ONE, ZERO, MatrixQ, Q
from .planewave import BracketTable, Params, bracket_table
from .tractor import CONFORMAL, PROJECTIVE, ClosureError, cartan_component, rho

__all__ = [
    "alpha", "beta", "psi", "psi_table", "PhiFamily", "CurvatureTable",
    "phi_family", "curvature", "parse_psi_entry",
]


def alpha(p: Params, i: int) -> MatrixQ:
    """so(2,4) image of the basis vector k^i (i = 1..6)."""
    x = [ZERO] * 7
    x[i] = ONE
    s = Q(1, 2) * (p.a1 + p.a2)
    e, g = p.epsilon, p.gamma
    rows = [
        [0, s * x[1], 0, 0, 0, 0],
        [x[1], e * x[1], 0, 0, 0, 0],
        [x[2], -x[5], 0, -g * x[1], 0, 0],
        [x[3], -x[6], g * x[1], 0, 0, 0],
        [x[4], 0, x[5], x[6], -e * x[1], -s * x[1]],
        [0, -x[4], -x[2], -x[3], -x[1], 0],
    ]
    return MatrixQ.from_dense(rows)


def beta(p: Params, i: int) -> MatrixQ:
    """sl(5) image of the basis vector k^i (i = 1..6)."""
    x = [ZERO] * 7
    x[i] = ONE
    s = Q(1, 3) * (p.a1 + p.a2)
    e, g = p.epsilon, p.gamma
    rows = [
        [0, s * x[1], 0, 0, 0],
        [x[1], e * x[1], 0, 0, 0],
        [x[2], -x[5], 0, -g * x[1], 0],
        [x[3], -x[6], g * x[1], 0, 0],
        [x[4], 0, x[5], x[6], -e * x[1]],
    ]
    return MatrixQ.from_dense(rows)


# --------------------------------------------------------------------------
# Psi tables


class _Lin:
    """Linear form over the w variables, or a scalar (empty ``terms``)."""

    __slots__ = ("const", "terms")

    def __init__(self, const=ZERO, terms=None):
        self.const = const
        self.terms = terms or {}

    @property
    def scalar(self) -> bool:
        return not self.terms

    def add(self, other, sign=1):
        t = dict(self.terms)
        for k, x in other.terms.items():
            t[k] = t.get(k, ZERO) + sign * x
        return _Lin(self.const + sign * other.const, {k: x for k, x in t.items() if x})

    def mul(self, other):
        if self.scalar:
            s, v = self.const, other
        elif other.scalar:
            s, v = other.const, self
        else:
            raise ValueError("Psi entry is not linear in w")
        return _Lin(s * v.const, {k: s * x for k, x in v.terms.items() if s * x})


def parse_psi_entry(expr: str, env: dict) -> dict:
    """Evaluate a table entry to ``{n: coeff}`` over input variables ``w[n]``."""
    lin = _psi_eval(ast.parse(expr, mode="eval").body, env)
    if lin.const:
        raise ValueError(f"entry has a constant term: {expr}")
    return lin.terms


def _psi_eval(node, env) -> _Lin:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return _Lin(Q(node.value))
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise ValueError(f"unknown symbol {node.id}")
        return _Lin(env[node.id])
    if (isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name)
            and node.value.id == "w" and isinstance(node.slice, ast.Constant)):
        return _Lin(ZERO, {int(node.slice.value): ONE})
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _psi_eval(node.operand, env)
        return _Lin().add(v, -1) if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        l, r = _psi_eval(node.left, env), _psi_eval(node.right, env)
        if isinstance(node.op, ast.Add):
            return l.add(r)
        if isinstance(node.op, ast.Sub):
            return l.add(r, -1)
        if isinstance(node.op, ast.Mult):
            return l.mul(r)
        if isinstance(node.op, ast.Div):
            if not r.scalar or not r.const:
                raise ValueError("division by a non-constant or zero")
            return l.mul(_Lin(1 / r.const))
        if isinstance(node.op, ast.Pow):
            if not (l.scalar and r.scalar and r.const.denominator == 1 and r.const >= 0):
                raise ValueError("unsupported power")
            return _Lin(l.const ** int(r.const))
    raise ValueError(f"unsupported syntax in Psi entry: {ast.dump(node)}")


_TABLES = {
    "conformal": psi_tables.CONFORMAL,
    "projective_flat": psi_tables.PROJECTIVE_FLAT,
    "projective": psi_tables.PROJECTIVE,
}


def _env(p: Params) -> dict:
    return {"a1": p.a1, "a2": p.a2, "g": p.gamma, "e": p.epsilon,
            "A": p.a1 - p.a2, "a": p.a1}


def psi_table(name: str, p: Params, i: int) -> dict:
    """Evaluated table ``{j: {n: coeff}}`` for ``Psi(e^i)``.

    ``name`` is one of ``conformal``, ``projective`` or ``projective_flat``
    (the last only makes sense for ``a1 == a2``).
    """
    if name not in _TABLES:
        raise ValueError(f"unknown table {name!r}")
    if not 1 <= i <= 4:
        raise ValueError("Psi is defined on k1..k4")
    env = _env(p)
    entries = dict(_TABLES[name].get(i, {}))
    for (tname, ti, tj), expr in psi_tables.CORRECTIONS.items():
        if tname == name and ti == i:
            entries[tj] = expr
    out = {}
    for j, expr in sorted(entries.items()):
        terms = parse_psi_entry(expr, env)
        if terms:
            out[j] = terms
    return out


def psi(problem: str, p: Params, i: int) -> MatrixQ:
    """Endomorphism ``Psi(e^i)`` of V in free-variable coordinates (zero for i = 5, 6)."""
    cc = cartan_component(problem)
    if i in (5, 6):
        return MatrixQ.zeros(cc.dim, cc.dim)
    name = CONFORMAL if problem == CONFORMAL else PROJECTIVE
    fidx = cc.free_index
    rows = [{} for _ in range(cc.dim)]
    for j, form in psi_table(name, p, i).items():
        if j not in fidx or any(n not in fidx for n in form):
            raise ValueError(f"Psi(e^{i})_{j} refers to a dependent variable")
        rows[fidx[j]] = {fidx[n]: x for n, x in form.items()}
    return MatrixQ(cc.dim, cc.dim, rows)


# --------------------------------------------------------------------------
# connection and curvature


@dataclass(frozen=True)
class PhiFamily:
    problem: str
    params: Params
    phi: tuple  # phi[0] unused; phi[1..6] endomorphisms of V

    def __getitem__(self, i: int) -> MatrixQ:
        return self.phi[i]

    def of(self, x: dict) -> MatrixQ:
        """``Phi(sum_i x[i] k^i)`` for a sparse dict ``{i: coeff}``, i = 1..6."""
        dim = self.phi[1].rows
        out = MatrixQ.zeros(dim, dim)
        for k, c in x.items():
            if c:
                out = out + self.phi[k].scale(c)
        return out


@dataclass(frozen=True)
class CurvatureTable:
    problem: str
    params: Params
    R: dict  # (i, j) with i < j -> endomorphism

    def __getitem__(self, ij) -> MatrixQ:
        i, j = ij
        if i < j:
            return self.R[(i, j)]
        if i > j:
            return -self.R[(j, i)]
        dim = next(iter(self.R.values())).rows
        return MatrixQ.zeros(dim, dim)

    def matrices(self) -> list:
        return [self.R[k] for k in sorted(self.R)]


@lru_cache(maxsize=64)
def phi_family(problem: str, p: Params) -> PhiFamily:
    normal = alpha if problem == CONFORMAL else beta
    phi = [None]
    for i in range(1, 7):
        try:
            m = rho(problem, normal(p, i))
        except ClosureError as exc:
            raise ClosureError(f"rho of generator k{i} leaves V") from exc
        phi.append(m + psi(problem, p, i))
    return PhiFamily(problem, p, tuple(phi))


def curvature(f: PhiFamily, b: BracketTable | None = None) -> CurvatureTable:
    """``R(k^i, k^j) = [Phi(k^i), Phi(k^j)] - Phi([k^i, k^j])`` for i < j."""
    if b is None:
        b = bracket_table(f.params)
    R = {}
    for i in range(1, 7):
        for j in range(i + 1, 7):
            m = f[i].commutator(f[j])
            for k, c in b.bracket(i, j).items():
                m = m - f[k].scale(c)
            R[(i, j)] = m
    return CurvatureTable(f.problem, f.params, R)
