import pytest

from pwkilling.exactlin import Q, kernel, refine
from pwkilling.planewave import Params, param_isometries
from pwkilling.prolongation import curvature, phi_family
from pwkilling.solver import (SCAN_LIMIT, GridTooLarge, annihilator, catalog_entry, grid_points,
                              normalize_problem, scan, solution_space, special_locus_catalog)
from pwkilling.tractor import CONFORMAL, PROJECTIVE

CATALOG = special_locus_catalog()
LABELS = [e.label for e in CATALOG]


def test_normalize_problem():
    assert normalize_problem("killing") == PROJECTIVE
    assert normalize_problem("Conformal") == CONFORMAL
    with pytest.raises(ValueError):
        normalize_problem("geodesic")


# --- annihilator ----------------------------------------------------------

def test_annihilator_full_when_curvature_vanishes():
    assert annihilator(curvature(phi_family(CONFORMAL, Params(0, 1, 1, 0)))).dim == 84


def test_annihilator_inside_each_kernel():
    c = curvature(phi_family(PROJECTIVE, Params(0, 1, 2, 1)))
    s = annihilator(c)
    assert s <= kernel(c[1, 2])
    for m in c.matrices():
        for v in s.vectors():
            assert not m.apply_sparse(v)


# --- solution spaces ------------------------------------------------------

@pytest.mark.parametrize("problem,p,dim", [
    (CONFORMAL, (0, 1, 2, 1), 27),
    (CONFORMAL, (0, "8/3", "2/3", 0), 36),
    (PROJECTIVE, (1, 0, "-3/16", 0), 28),
    (PROJECTIVE, (0, 1, 1, 0), 28),
    (PROJECTIVE, (1, 1, 2, 1), 22),
    (PROJECTIVE, (1, 2, 2, 0), 28),
    (PROJECTIVE, (0, 0, 0, 0), 50),
    (PROJECTIVE, (1, 0, 0, 0), 50),
    (CONFORMAL, (1, 2, 2, 0), 84),
])
def test_solution_dims(problem, p, dim):
    assert solution_space(problem, Params(*p)).dim == dim


@pytest.mark.parametrize("label", LABELS)
def test_catalog_totals(label):
    e = catalog_entry(label)
    assert solution_space(e.problem, e.params).dim == e.total


@pytest.mark.parametrize("label", LABELS)
def test_fixpoint_and_monotone(label):
    e = catalog_entry(label)
    S = solution_space(e.problem, e.params)
    f = phi_family(e.problem, S.computed_at)
    maps = [f[i] for i in range(1, 7)]
    assert refine(maps, S.space) == S.space
    h = S.history
    assert all(a > b for a, b in zip(h, h[1:]))
    assert h[-1] == S.dim and S.iterations == len(h) - 1
    assert S.iterations <= S.space.ambient_dim


@pytest.mark.parametrize("label", LABELS)
def test_curvature_annihilates_solutions(label):
    e = catalog_entry(label)
    S = solution_space(e.problem, e.params)
    R = curvature(phi_family(e.problem, S.computed_at))
    for m in R.matrices():
        for v in S.space.vectors():
            assert not m.apply_sparse(v)


@pytest.mark.parametrize("label", LABELS)
def test_isometry_invariance(label):
    e = catalog_entry(label)
    for q, kind in param_isometries(e.params):
        if kind == "conformal" and e.problem != CONFORMAL:
            continue
        assert solution_space(e.problem, q).dim == e.total, (q, kind)


def test_conformal_isometry_invariance_with_shift():
    for p in (Params(1, Q(-1, 4) + Q(8, 3), Q(-1, 4) + Q(2, 3), 0), Params(1, Q(-5, 4), Q(11, 4), 1)):
        d = solution_space(CONFORMAL, p).dim
        for q, _ in param_isometries(p):
            assert solution_space(CONFORMAL, q).dim == d
        assert solution_space(CONFORMAL, p).computed_at.epsilon == 0


@pytest.mark.parametrize("a,e", [(1, 0), (Q(-3, 16), 1), (Q(5, 7), 1)])
def test_gamma_independence_conformally_flat(a, e):
    dims = {solution_space(PROJECTIVE, Params(e, a, a, g)).dim for g in (0, 1, 2)}
    assert len(dims) == 1


def test_catalog_examples():
    e = catalog_entry("CKT-Thm1.1(2)")
    assert (e.problem, e.params, e.total, e.irreducible) == (CONFORMAL, Params(0, -1, 3, 1), 29, 2)
    e = catalog_entry("KT-Thm1.3(1c)")
    assert (e.params, e.total, e.irreducible) == (Params(1, Q(19, 4), 1, 0), 23, 1)
    e = catalog_entry("KT-flat")
    assert (e.params, e.total, e.irreducible) == (Params(0, 0, 0, 0), 50, 0)
    with pytest.raises(KeyError):
        catalog_entry("KT-Thm9")


def test_catalog_covers_every_clause():
    by_theorem = {}
    for e in CATALOG:
        by_theorem.setdefault(e.theorem, []).append(e)
    assert len(by_theorem[1]) == 3 and len(by_theorem[2]) == 4 and len(by_theorem[3]) == 9
    assert len(set(LABELS)) == len(LABELS)


# --- scans ----------------------------------------------------------------

def test_scan_killing_line():
    rows = scan("killing", {"epsilon": 1, "a1": 0, "gamma": 0, "a2": ["1/2", "3/4", "1"]})
    assert [r.dim for r in rows] == [23, 27, 23]
    assert [r.flagged for r in rows] == [False, True, False]


def test_scan_conformal_symmetric_line():
    # on a2 = a1 - 2 the special point is a1 = -2/3, the swap of (0, -8/3, -2/3, 0)
    third = Q(1, 3)
    a1s = [Q(-2, 3) - third, Q(-2, 3), Q(-2, 3) + third]
    rows = scan("conformal", {"epsilon": 0, "gamma": 0, "a1": a1s}, derived={"a2": lambda v: v["a1"] - 2})
    assert [r.dim for r in rows] == [27, 36, 27]
    assert [r.flagged for r in rows] == [False, True, False]


def test_scan_printed_point_is_generic_on_this_line():
    rows = scan("conformal", {"epsilon": 0, "gamma": 0, "a1": [Q(-8, 3)]},
                derived={"a2": lambda v: v["a1"] - 2})
    assert rows[0].dim == 27
    rows = scan("conformal", {"epsilon": 0, "gamma": 0, "a1": [Q(-8, 3)]},
                derived={"a2": lambda v: v["a1"] + 2})
    assert rows[0].dim == 36


def test_scan_empty_and_degenerate():
    assert scan("killing", []) == []
    assert scan("killing", {"a2": "1:0:1/2"}) == []
    rows = scan("killing", {"a2": "1/2:1/2:1/4"})
    assert len(rows) == 1 and not rows[0].flagged


def test_scan_limit():
    with pytest.raises(GridTooLarge):
        grid_points({"a1": "0:100:1", "a2": "0:100:1"})
    with pytest.raises(GridTooLarge):
        scan("killing", {"a1": "0:3:1"}, limit=3)
    assert SCAN_LIMIT == 10_000


def test_scan_grid_order_and_parallel_agree():
    grid = {"epsilon": 1, "a1": 0, "gamma": 0, "a2": "5/8:7/8:1/8"}
    serial = scan("killing", grid)
    parallel = scan("killing", grid, jobs=2)
    assert serial == parallel
    assert [r.params.a2 for r in serial] == [Q(5, 8), Q(3, 4), Q(7, 8)]


def test_grid_points_rejects_unknown_axis():
    with pytest.raises(ValueError):
        grid_points({"delta": 1})
