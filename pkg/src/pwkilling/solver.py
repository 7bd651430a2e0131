"""Solution spaces of the prolonged systems and parameter scans.

The solution space is the largest ``Phi(k)``-invariant subspace of ``V``
annihilated by the curvature.  It is computed exactly: start from the joint
kernel of all 15 curvature endomorphisms and refine under the six ``Phi``
maps until the dimension stops dropping.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .exactlin import Q, SubspaceQ, kernel, refine, to_q
from .planewave import Params
from .prolongation import CurvatureTable, curvature, phi_family
from .tractor import CONFORMAL, PROJECTIVE, cartan_component

__all__ = [
    "SolutionSpace", "CatalogEntry", "annihilator", "solution_space", "scan",
    "grid_points", "special_locus_catalog", "catalog_entry", "normalize_problem",
    "ScanRow", "GridTooLarge", "SCAN_LIMIT", "KILLING",
]

KILLING = "killing"
SCAN_LIMIT = 10_000
CONFORMAL_SHIFT = Q(1, 4)


class GridTooLarge(ValueError):
    pass


def normalize_problem(problem: str) -> str:
    """Accept ``killing`` as the user-facing name of the projective problem."""
    p = problem.strip().lower()
    if p in (KILLING, PROJECTIVE):
        return PROJECTIVE
    if p == CONFORMAL:
        return CONFORMAL
    raise ValueError(f"unknown problem {problem!r}; use 'killing' or 'conformal'")


@dataclass(frozen=True)
class SolutionSpace:
    """Exact solution space in free-variable coordinates of ``V``.

    ``computed_at`` differs from ``params`` only for the conformal problem at
    epsilon = 1, which is solved on the conformally equivalent epsilon = 0
    metric (the correction tables are stated for epsilon = 0).
    """

    problem: str
    params: Params
    space: SubspaceQ
    iterations: int
    computed_at: Params
    history: tuple = field(default=(), compare=False)  # dims S^0, S^1, ...

    @property
    def dim(self) -> int:
        return self.space.dim


def annihilator(c: CurvatureTable) -> SubspaceQ:
    """Joint kernel of all curvature endomorphisms."""
    mats = c.matrices()
    m = mats[0]
    for x in mats[1:]:
        m = m.vstack(x)
    return kernel(m)


def _effective_params(problem: str, p: Params) -> Params:
    if problem == CONFORMAL and p.epsilon == 1:
        return Params(0, p.a1 + CONFORMAL_SHIFT, p.a2 + CONFORMAL_SHIFT, p.gamma)
    return p


def solution_space(problem: str, p: Params) -> SolutionSpace:
    problem = normalize_problem(problem)
    return _solution_space(problem, p)


@lru_cache(maxsize=128)
def _solution_space(problem: str, p: Params) -> SolutionSpace:
    q = _effective_params(problem, p)
    f = phi_family(problem, q)
    s = annihilator(curvature(f))
    maps = [f[i] for i in range(1, 7)]
    limit = cartan_component(problem).dim
    history = [s.dim]
    for it in range(limit + 1):
        nxt = refine(maps, s)
        if nxt.dim == s.dim:
            return SolutionSpace(problem, p, s, it, q, tuple(history))
        s = nxt
        history.append(s.dim)
    raise RuntimeError("invariant-subspace iteration did not terminate")


# --------------------------------------------------------------------------
# scans

AXES = ("epsilon", "a1", "a2", "gamma")


@dataclass(frozen=True)
class ScanRow:
    params: Params
    dim: int
    flagged: bool


def _axis_values(spec) -> list:
    """Values of one axis from a scalar, a sequence, or a ``(lo, hi, step)`` triple."""
    if isinstance(spec, str):
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError(f"range must be lo:hi:step, got {spec!r}")
            return _axis_values(tuple(to_q(x) for x in parts))
        return [to_q(spec)]
    if isinstance(spec, tuple) and len(spec) == 3 and not isinstance(spec[0], (list, tuple)):
        lo, hi, step = (to_q(x) for x in spec)
        if step <= 0:
            raise ValueError("step must be positive")
        if hi < lo:
            return []
        n = int((hi - lo) / step)
        return [lo + k * step for k in range(n + 1)]
    if isinstance(spec, (list, tuple)):
        return [to_q(x) for x in spec]
    return [to_q(spec)]


def grid_points(grid: dict, derived: dict | None = None, limit: int = SCAN_LIMIT) -> list:
    """Cartesian grid of Params in axis order (a later axis varies fastest).

    ``grid`` maps axis names to values, sequences or ``lo:hi:step`` ranges.
    ``derived`` maps an axis name to a function of the other axis values,
    e.g. ``{"a2": lambda v: v["a1"] - 2}``.
    """
    derived = derived or {}
    unknown = set(grid) | set(derived)
    unknown -= set(AXES)
    if unknown:
        raise ValueError(f"unknown axes {sorted(unknown)}")
    free_axes = [a for a in AXES if a not in derived]
    values = [_axis_values(grid.get(a, 0)) for a in free_axes]
    count = 1
    for v in values:
        count *= len(v)
    if count > limit:
        raise GridTooLarge(f"grid has {count} points, limit is {limit}")
    out = []
    for combo in itertools.product(*values):
        v = dict(zip(free_axes, combo))
        for a, fn in derived.items():
            v[a] = to_q(fn(v))
        out.append(Params(v["epsilon"], v["a1"], v["a2"], v["gamma"]))
    return out


def _dim_of(args):
    problem, p = args
    return solution_space(problem, p).dim


def _neighbours(shape, idx):
    for axis in range(len(shape)):
        for d in (-1, 1):
            j = list(idx)
            j[axis] += d
            if 0 <= j[axis] < shape[axis]:
                yield tuple(j)


def scan(problem: str, grid, derived: dict | None = None, jobs: int = 1,
         limit: int = SCAN_LIMIT) -> list:
    """Dimension at every grid point; flag points exceeding their neighbours' minimum.

    ``grid`` is either a dict accepted by :func:`grid_points` or an explicit
    list of Params (treated as a one-dimensional line).
    """
    problem = normalize_problem(problem)
    if isinstance(grid, dict):
        points = grid_points(grid, derived, limit)
        free_axes = [a for a in AXES if a not in (derived or {})]
        shape = tuple(len(_axis_values(grid.get(a, 0))) for a in free_axes)
    else:
        points = list(grid)
        if len(points) > limit:
            raise GridTooLarge(f"grid has {len(points)} points, limit is {limit}")
        shape = (len(points),)
    if not points:
        return []
    tasks = [(problem, p) for p in points]
    if jobs and jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            dims = list(ex.map(_dim_of, tasks))
    else:
        dims = [_dim_of(t) for t in tasks]
    flat = {idx: n for n, idx in enumerate(itertools.product(*(range(s) for s in shape)))}
    rows = []
    for idx, n in flat.items():
        nb = [dims[flat[j]] for j in _neighbours(shape, idx)]
        flagged = bool(nb) and dims[n] > min(nb)
        rows.append(ScanRow(points[n], dims[n], flagged))
    return rows


# --------------------------------------------------------------------------
# catalog of special loci


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    problem: str
    params: Params
    total: int
    irreducible: int
    theorem: int
    clause: str


def _p(*v) -> Params:
    return Params(*(to_q(x) for x in v))


_CATALOG = (
    ("CKT-Thm1.1(1+)", CONFORMAL, ("0", "8/3", "2/3", "0"), 36, 9, 1, "1, sign +"),
    ("CKT-Thm1.1(1-)", CONFORMAL, ("0", "-8/3", "-2/3", "0"), 36, 9, 1, "1, sign -"),
    ("CKT-Thm1.1(2)", CONFORMAL, ("0", "-1", "3", "1"), 29, 2, 1, "2"),
    ("KT-Thm1.2(1+)", PROJECTIVE, ("0", "1", "1", "0"), 28, 1, 2, "1, sign +"),
    ("KT-Thm1.2(1-)", PROJECTIVE, ("0", "-1", "-1", "0"), 28, 1, 2, "1, sign -"),
    ("KT-Thm1.2(1c)", PROJECTIVE, ("1", "3/4", "3/4", "0"), 29, 1, 2, "1, g_{1,3/4,3/4,0}"),
    ("KT-Thm1.2(2)", PROJECTIVE, ("1", "-3/16", "-3/16", "0"), 34, 6, 2, "2"),
    ("KT-Thm1.3(1a)", PROJECTIVE, ("0", "1", "2", "1"), 22, 1, 3, "1, family g_{0,a1,a2,gamma}"),
    ("KT-Thm1.3(1b)", PROJECTIVE, ("1", "0", "1", "0"), 23, 1, 3, "1, family g_{1,0,a2,0}"),
    ("KT-Thm1.3(1c)", PROJECTIVE, ("1", "19/4", "1", "0"), 23, 1, 3, "1, family g_{1,4a2+3/4,a2,0}"),
    ("KT-Thm1.3(2a+)", PROJECTIVE, ("0", "0", "2", "0"), 23, 2, 3, "2, g_{0,0,+2,0}"),
    ("KT-Thm1.3(2a-)", PROJECTIVE, ("0", "0", "-2", "0"), 23, 2, 3, "2, g_{0,0,-2,0}"),
    ("KT-Thm1.3(2b+)", PROJECTIVE, ("0", "8/3", "2/3", "0"), 23, 2, 3, "2, g_{0,+8/3,+2/3,0}"),
    ("KT-Thm1.3(2b-)", PROJECTIVE, ("0", "-8/3", "-2/3", "0"), 23, 2, 3, "2, g_{0,-8/3,-2/3,0}"),
    ("KT-Thm1.3(3)", PROJECTIVE, ("1", "0", "3/4", "0"), 27, 5, 3, "3"),
    ("KT-Thm1.3(4)", PROJECTIVE, ("1", "0", "-3/16", "0"), 28, 6, 3, "4"),
    ("KT-flat", PROJECTIVE, ("0", "0", "0", "0"), 50, 0, 0, "flat space"),
)

# Killing families with irreducible Killing tensors matching irreducible
# conformal ones, with the expected number of such tensors.
CORRESPONDENCE = (
    ("KT-Thm1.3(1c)", 1, "1"),
    ("KT-Thm1.3(2b+)", 1, "2"),
    ("KT-Thm1.3(3)", 4, "3"),
    ("KT-Thm1.3(4)", 5, "4"),
    ("KT-Thm1.3(1a)", 0, "5"),
)


@lru_cache(maxsize=1)
def special_locus_catalog() -> tuple:
    """Representative points of every special case, with expected dimensions.

    One-parameter families are represented by a fixed member: a2 = 1 for the
    families g_{1,0,a2,0} and g_{1,4a2+3/4,a2,0}, and (a1, a2, gamma) =
    (1, 2, 1) for the family g_{0,a1,a2,gamma}.
    """
    return tuple(CatalogEntry(lbl, prob, _p(*pt), tot, irr, th, cl)
                 for lbl, prob, pt, tot, irr, th, cl in _CATALOG)


def catalog_entry(label: str) -> CatalogEntry:
    for e in special_locus_catalog():
        if e.label == label:
            return e
    raise KeyError(f"unknown catalog label {label!r}")
