"""Tractor-side linear algebra.

Conformal case: ``S^2 so(2,4)`` realised inside the fourth tensor power of
``R^6`` (120 positions) and its Cartan component ``V`` (84-dim).  Projective
case: ``S^2 Lambda^2 (R^5)^*`` (55 positions) and ``V`` (50-dim).

A vector of position coordinates ``w`` stands for the tensor ``T`` with
``T[i,j,k,l] = w[(i,j,k,l)]`` at each canonical position, extended by
antisymmetry in each index pair and symmetry under exchanging the pairs.
Indices are 1-based throughout, matching the variable names ``w1, w2, ...``.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .exactlin import ONE, ZERO, MatrixQ, Q, SubspaceQ, kernel, span

__all__ = [
    "CONFORMAL", "PROJECTIVE", "PositionBasis", "CartanComponent", "ClosureError",
    "position_basis", "cartan_component", "cartan_oracle", "rho", "rho_ambient",
    "project_pi", "J_FORM", "in_algebra", "rho_group", "pi_matrix", "canonical",
]

CONFORMAL = "conformal"
PROJECTIVE = "projective"


class ClosureError(RuntimeError):
    """An endomorphism failed to preserve the Cartan component."""


def _check_problem(problem: str) -> str:
    if problem not in (CONFORMAL, PROJECTIVE):
        raise ValueError(f"problem must be 'conformal' or 'projective', got {problem!r}")
    return problem


# --------------------------------------------------------------------------
# position bases


@dataclass(frozen=True)
class PositionBasis:
    problem: str
    positions: tuple  # 1-based 4-tuples, index p -> variable w_{p+1}
    grading: tuple
    index: dict = field(compare=False, hash=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.positions)

    def var(self, pos: tuple) -> int:
        """1-based variable number of a canonical position."""
        return self.index[tuple(pos)] + 1


def _conformal_positions():
    inner = range(2, 6)
    pairs_in = list(combinations(inner, 2))
    groups = [
        (4, [(1, j, 1, l) for j, l in combinations_with_replacement(inner, 2)]),
        (3, [(1, j, k, l) for j in inner for k, l in pairs_in]),
        (3, [(1, j, 1, 6) for j in inner]),
        (2, [(1, j, k, 6) for j in inner for k in inner]),
        (2, [(1, 6, k, l) for k, l in pairs_in]),
        (2, [(1, 6, 1, 6)]),
        (2, [p + q for p, q in combinations_with_replacement(pairs_in, 2)]),
        (1, [(i, j, k, 6) for i, j in pairs_in for k in inner]),
        (1, [(1, 6, k, 6) for k in inner]),
        (0, [(i, 6, k, 6) for i, k in combinations_with_replacement(inner, 2)]),
    ]
    return groups


def _projective_positions():
    inner = range(2, 6)
    pairs_in = list(combinations(inner, 2))
    return [
        (0, [(1, j, 1, l) for j, l in combinations_with_replacement(inner, 2)]),
        (1, [(1, j, k, l) for j in inner for k, l in pairs_in]),
        (2, [p + q for p, q in combinations_with_replacement(pairs_in, 2)]),
    ]


@lru_cache(maxsize=None)
def position_basis(problem: str) -> PositionBasis:
    _check_problem(problem)
    groups = _conformal_positions() if problem == CONFORMAL else _projective_positions()
    pos, grad = [], []
    for g, ps in groups:
        pos.extend(ps)
        grad.extend([g] * len(ps))
    index = {p: n for n, p in enumerate(pos)}
    if len(index) != len(pos):
        raise AssertionError("duplicate positions")
    return PositionBasis(problem, tuple(pos), tuple(grad), index)


def canonical(idx: Sequence[int], problem: str = CONFORMAL):
    """Position index of an index 4-tuple and the sign relating them.

    Returns ``(None, 0)`` when the component vanishes identically.
    """
    a, b, c, d = idx
    if a == b or c == d:
        return None, 0
    sign = 1
    if a > b:
        a, b, sign = b, a, -sign
    if c > d:
        c, d, sign = d, c, -sign
    index = position_basis(problem).index
    n = index.get((a, b, c, d))
    if n is None:
        n = index[(c, d, a, b)]
    return n, sign


# --------------------------------------------------------------------------
# algebras

# symmetric form preserved by so(2,4): pairs 1<->6, 2<->5, 3 and 4 diagonal
J_FORM = tuple(tuple(1 if (i, j) in {(0, 5), (5, 0), (1, 4), (4, 1), (2, 2), (3, 3)} else 0
                     for j in range(6)) for i in range(6))


def in_algebra(problem: str, m: MatrixQ) -> bool:
    """Membership in so(2,4) (conformal) or sl(5) (projective)."""
    if problem == CONFORMAL:
        if (m.rows, m.cols) != (6, 6):
            return False
        J = MatrixQ.from_dense(J_FORM)
        return (m.T @ J + J @ m).is_zero()
    if (m.rows, m.cols) != (5, 5):
        return False
    return sum((m[i, i] for i in range(5)), ZERO) == 0


def _ambient_n(problem: str) -> int:
    return 6 if problem == CONFORMAL else 5


def rho_ambient(problem: str, m: MatrixQ) -> MatrixQ:
    """Action of an algebra element on all position coordinates.

    Conformal: standard action of ``m`` on each of the four tensor slots.
    Projective: dual action ``-m^T`` on each slot.
    """
    _check_problem(problem)
    n = _ambient_n(problem)
    if (m.rows, m.cols) != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix")
    if problem == PROJECTIVE:
        m = -m.T
    pb = position_basis(problem)
    rows = []
    mrows = [m.row(i) for i in range(n)]
    for qpos in pb.positions:
        out: dict = {}
        for s in range(4):
            for p0, coeff in mrows[qpos[s] - 1].items():
                idx = list(qpos)
                idx[s] = p0 + 1
                col, sign = canonical(idx, problem)
                if col is None:
                    continue
                v = out.get(col, ZERO) + sign * coeff
                if v:
                    out[col] = v
                else:
                    out.pop(col, None)
        rows.append(out)
    return MatrixQ(pb.dim, pb.dim, rows)


# --------------------------------------------------------------------------
# Cartan component

# dependent variables in terms of free ones, as printed with the basis
CONFORMAL_RELATIONS = (
    "w4 = -1/2*(w5+w8)",
    "w19 = w15+w29",
    "w20 = w16-w30-w37",
    "w21 = -w28-w31-w38",
    "w22 = w27-w32",
    "w23 = -w14+w18",
    "w24 = -w13-w17+w35",
    "w25 = w16+w30",
    "w26 = -w15+w29+w36",
    "w39 = 1/2*(w62+w68)",
    "w40 = 1/2*(w55-w64+w70)",
    "w41 = -1/2*(w56+w65+w69)",
    "w42 = -1/4*(w57+w61+w73+w77)",
    "w43 = 1/2*(w55-w64+w70)",
    "w44 = -1/2*w61+w72+1/2*w73",
    "w45 = -1/2*w58-w71+1/2*w74",
    "w46 = -1/2*(w59+w75+w79)",
    "w47 = 1/2*(w56-w65-w69)",
    "w48 = 1/2*w58+1/2*w74-w71",
    "w49 = -w72+1/2*w77",
    "w50 = 1/2*(-w60-w76+w78)",
    "w51 = 1/2*w57-1/4*w61-1/4*w73-1/4*w77",
    "w52 = 1/2*(w59-w75-w79)",
    "w53 = 1/2*(w60-w76+w78)",
    "w54 = 1/2*(w80+w82)",
    "w66 = 1/2*w61-w72-1/2*w73+1/2*w77",
    "w67 = w71-w74",
    "w91 = -w84-w89-w107",
    "w92 = w86+w99",
    "w93 = w90+w103",
    "w94 = -w100-w105+w110",
    "w95 = -w85+w88",
    "w96 = -w90+w103+w109",
    "w97 = w86-w99-w108",
    "w98 = w101-w104",
    "w114 = -1/2*(w115+w118)",
)

PROJECTIVE_RELATIONS = (
    "w22 = -w32+w27",
    "w23 = w18-w14",
    "w29 = w19-w15",
    "w30 = w25-w16",  # printed with a doubled subscript on w16
    "w44 = w47+w40",
)

# Printed relations that fail the invariance check, with their replacement.
# Found by comparing against ``cartan_oracle``.
RELATION_CORRECTIONS = {
    CONFORMAL: {
        40: {55: Q(-1, 2), 64: Q(-1, 2), 70: Q(1, 2)},
        42: {57: Q(-1, 2), 61: Q(-1, 4), 73: Q(-1, 4), 77: Q(-1, 4)},
    },
    PROJECTIVE: {},
}


def _ranges(*spans):
    out = []
    for s in spans:
        if isinstance(s, int):
            out.append(s)
        else:
            out.extend(range(s[0], s[1] + 1))
    return tuple(out)


CONFORMAL_FREE = _ranges((1, 3), (5, 18), (27, 38), (55, 65), (68, 90), (99, 113), (115, 120))
PROJECTIVE_FREE = _ranges((1, 21), (24, 28), (31, 43), (45, 55))


def parse_linear(expr: str) -> dict:
    """Parse a linear form like ``-1/2*(w5+w8)`` into ``{5: -1/2, 8: -1/2}``."""
    return _lin_eval(ast.parse(expr.strip(), mode="eval").body)


def _lin_eval(node):
    # linear forms are dicts var -> coeff; scalars are represented by key 0
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return {0: Q(node.value)}
    if isinstance(node, ast.Name) and node.id.startswith("w"):
        return {int(node.id[1:]): ONE}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _lin_eval(node.operand)
        return {k: -x for k, x in v.items()} if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        l, r = _lin_eval(node.left), _lin_eval(node.right)
        if isinstance(node.op, (ast.Add, ast.Sub)):
            out = dict(l)
            sg = 1 if isinstance(node.op, ast.Add) else -1
            for k, x in r.items():
                out[k] = out.get(k, ZERO) + sg * x
            return {k: x for k, x in out.items() if x}
        if isinstance(node.op, ast.Mult):
            if set(l) <= {0}:
                s = l.get(0, ZERO)
                return {k: s * x for k, x in r.items() if s * x}
            if set(r) <= {0}:
                s = r.get(0, ZERO)
                return {k: s * x for k, x in l.items() if s * x}
            raise ValueError("nonlinear product")
        if isinstance(node.op, ast.Div):
            if not set(r) <= {0} or not r:
                raise ValueError("division by a non-constant")
            s = r[0]
            return {k: x / s for k, x in l.items()}
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


@dataclass(frozen=True)
class CartanComponent:
    problem: str
    free_vars: tuple  # 1-based ambient variable numbers, in order
    embed: MatrixQ    # ambient_dim x dim
    relations: dict = field(compare=False, hash=False, repr=False)  # dep var -> {free var: coeff}

    @property
    def ambient_dim(self) -> int:
        return self.embed.rows

    @property
    def dim(self) -> int:
        return self.embed.cols

    @property
    def free_index(self) -> dict:
        """1-based ambient variable -> 0-based coordinate in V."""
        return {v: n for n, v in enumerate(self.free_vars)}

    def to_ambient(self, v: Sequence) -> list:
        return self.embed.apply(list(v))

    def from_ambient(self, w: Sequence) -> list:
        """Read free coordinates of an ambient vector (assumed to lie in V)."""
        return [w[f - 1] for f in self.free_vars]

    def subspace(self) -> SubspaceQ:
        return span(self.ambient_dim, self.embed.T._data)


def _relations(problem: str) -> dict:
    raw = CONFORMAL_RELATIONS if problem == CONFORMAL else PROJECTIVE_RELATIONS
    rel = {}
    for line in raw:
        lhs, rhs = line.split("=")
        dep = int(lhs.strip()[1:])
        rel[dep] = parse_linear(rhs)
    rel.update(RELATION_CORRECTIONS[problem])
    return rel


@lru_cache(maxsize=None)
def cartan_component(problem: str) -> CartanComponent:
    _check_problem(problem)
    pb = position_basis(problem)
    free = CONFORMAL_FREE if problem == CONFORMAL else PROJECTIVE_FREE
    rel = _relations(problem)
    fidx = {v: n for n, v in enumerate(free)}
    if set(rel) & set(free) or len(rel) + len(free) != pb.dim:
        raise AssertionError("relations and free list do not partition the positions")
    rows = []
    for var in range(1, pb.dim + 1):
        if var in fidx:
            rows.append({fidx[var]: ONE})
        else:
            form = rel[var]
            if any(k not in fidx for k in form):
                raise AssertionError(f"relation for w{var} uses a dependent variable")
            rows.append({fidx[k]: x for k, x in form.items()})
    return CartanComponent(problem, free, MatrixQ(pb.dim, len(free), rows), rel)


def cartan_oracle(problem: str) -> SubspaceQ:
    """Cartan component computed from its defining tensor identities.

    Conformal: Weyl-type tensors on R^6 (first Bianchi identity and
    vanishing trace against the invariant form).  Projective: tensors with
    the algebraic curvature symmetries on (R^5)^* (Bianchi only).  The pair
    symmetries are built into the position coordinates.
    """
    _check_problem(problem)
    pb = position_basis(problem)
    n = _ambient_n(problem)
    eqs = []

    def comp(idx):
        col, sign = canonical(idx, problem)
        return {} if col is None else {col: Q(sign)}

    def add(acc, d, s=1):
        for k, x in d.items():
            acc[k] = acc.get(k, ZERO) + s * x

    rng = range(1, n + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    row: dict = {}
                    add(row, comp((a, b, c, d)))
                    add(row, comp((a, c, d, b)))
                    add(row, comp((a, d, b, c)))
                    row = {k: x for k, x in row.items() if x}
                    if row:
                        eqs.append(row)
    if problem == CONFORMAL:
        for a in rng:
            for c in rng:
                row = {}
                for b in rng:
                    for d in rng:
                        if J_FORM[b - 1][d - 1]:
                            add(row, comp((a, b, c, d)))
                row = {k: x for k, x in row.items() if x}
                if row:
                    eqs.append(row)
    return kernel(MatrixQ(len(eqs), pb.dim, eqs))


# --------------------------------------------------------------------------
# representation on V


def rho(problem: str, m: MatrixQ, check: bool = True) -> MatrixQ:
    """Endomorphism of V (free-variable coordinates) induced by m."""
    cc = cartan_component(problem)
    amb = rho_ambient(problem, m)
    image = amb @ cc.embed  # ambient x dim
    sel = [image.row(f - 1) for f in cc.free_vars]
    out = MatrixQ(cc.dim, cc.dim, sel)
    if check and not (cc.embed @ out == image):
        raise ClosureError("image of V under rho leaves V")
    return out


def project_pi(problem: str, v: Sequence) -> list:
    """Frame components ``f[p][q]`` (p, q = 0..3) of the tensor read off v.

    ``v`` is given in V coordinates (free variables).
    """
    cc = cartan_component(problem)
    pb = position_basis(problem)
    w = cc.to_ambient(v)
    f = [[ZERO] * 4 for _ in range(4)]
    for p in range(4):
        for q in range(p, 4):
            if problem == CONFORMAL:
                pos = (p + 2, 6, q + 2, 6)
            else:
                pos = (1, p + 2, 1, q + 2)
            f[p][q] = f[q][p] = w[pb.index[pos]]
    return f


def pi_matrix(problem: str) -> MatrixQ:
    """Linear map V -> 16 frame components (row-major ``4*p + q``)."""
    cc = cartan_component(problem)
    pb = position_basis(problem)
    rows = []
    for p in range(4):
        for q in range(4):
            a, b = min(p, q), max(p, q)
            pos = (a + 2, 6, b + 2, 6) if problem == CONFORMAL else (1, a + 2, 1, b + 2)
            rows.append(cc.embed.row(pb.index[pos]))
    return MatrixQ(16, cc.dim, rows)



def rho_group(problem: str, d: MatrixQ) -> MatrixQ:
    """Action on V of an invertible matrix ``d``.

    Conformal: ``d`` acts on every slot.  Projective: the dual action
    ``d^{-T}``, for which ``d`` must be a signed permutation (so that
    ``d^{-T} = d``).
    """
    cc = cartan_component(problem)
    pb = position_basis(problem)
    n = _ambient_n(problem)
    if (d.rows, d.cols) != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix")
    if problem == PROJECTIVE and not (d @ d.T == MatrixQ.identity(n)):
        raise ValueError("projective group action needs a signed permutation")
    rows = []
    for qpos in pb.positions:
        acc = {(): ONE}
        for s in range(4):
            nxt: dict = {}
            for pre, c in acc.items():
                for p0, x in d.row(qpos[s] - 1).items():
                    key = pre + (p0 + 1,)
                    nxt[key] = nxt.get(key, ZERO) + c * x
            acc = nxt
        row: dict = {}
        for idx, c in acc.items():
            col, sign = canonical(idx, problem)
            if col is not None:
                row[col] = row.get(col, ZERO) + sign * c
        rows.append({k: x for k, x in row.items() if x})
    image = MatrixQ(pb.dim, pb.dim, rows) @ cc.embed
    out = MatrixQ(cc.dim, cc.dim, [image.row(f - 1) for f in cc.free_vars])
    if not (cc.embed @ out == image):
        raise ClosureError("group image of V leaves V")
    return out
