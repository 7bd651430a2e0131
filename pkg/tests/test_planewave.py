import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from scipy.linalg import expm

from conftest import params
from pwkilling.exactlin import Poly4, Q
from pwkilling.planewave import (DomainError, Params, bracket_table, brinkmann_jacobian,
                                 brinkmann_map, brinkmann_metric, conformal_shift_inverse,
                                 conformal_shift_jacobian, conformal_shift_map, frame_data,
                                 metric_data, param_isometries)


def brinkmann_form(p, y):
    """Plane-wave metric in Brinkmann coordinates, written from the rotation form."""
    xp, z1, z2, _ = y
    t = float(p.gamma) * (xp if p.epsilon == 0 else math.log(xp))
    z = np.array([z1, z2])
    rot = lambda s: expm(np.array([[0.0, -s], [s, 0.0]]))
    H = z @ rot(t) @ np.diag([float(p.a1), float(p.a2)]) @ rot(-t) @ z
    if p.epsilon == 1:
        H /= xp ** 2
    g = np.zeros((4, 4))
    g[0, 3] = g[3, 0] = g[1, 1] = g[2, 2] = 1.0
    g[0, 0] = H
    return g


def exp_metric(p, x):
    return metric_data(p).numeric(x)[0]


def pullback(g_target, J):
    return J.T @ g_target @ J


def num_jacobian(f, y, h=1e-6):
    y = np.asarray(y, dtype=float)
    cols = []
    for a in range(4):
        e = np.zeros(4)
        e[a] = h
        cols.append((f(y + e) - f(y - e)) / (2 * h))
    return np.array(cols).T


# --- brackets -------------------------------------------------------------

def test_bracket_examples():
    for p in (Params(0, 1, 2, 1), Params(1, Q(3, 4), -2, Q(1, 3))):
        b = bracket_table(p)
        assert b.bracket(2, 5) == {4: -1}
        assert b.bracket(1, 4) == ({4: -1} if p.epsilon == 1 else {})
    assert bracket_table(Params(0, 1, 2, 1)).bracket(1, 2) == {3: 1, 5: 1}


def test_bracket_antisymmetric():
    b = bracket_table(Params(1, Q(2, 3), Q(-5, 7), Q(4, 3)))
    for i, j in itertools.product(range(1, 7), repeat=2):
        lhs = b.bracket(i, j)
        rhs = {k: -v for k, v in b.bracket(j, i).items()}
        assert lhs == rhs


@given(params())
def test_jacobi_identity_exact(p):
    b = bracket_table(p)
    for i, j, k in itertools.combinations(range(1, 7), 3):
        assert all(x == 0 for x in b.jacobi(i, j, k))


# --- frame and metric -----------------------------------------------------

def test_frame_examples():
    f = frame_data(Params(0, 1, 2, 1))
    x2, x3 = Poly4.var(2), Poly4.var(3)
    assert f.frame[0][0] == Poly4.const(1)
    assert f.frame[0][3] == -(x2 * x2 * Q(1, 2) + x3 * x3)
    assert f.frame[3] == (Poly4(), Poly4(), Poly4(), Poly4.const(1))


@given(params())
def test_frame_coframe_duality(p):
    f = frame_data(p)
    for i, j in itertools.product(range(4), repeat=2):
        pairing = sum((f.coframe[i][m] * f.frame[j][m] for m in range(4)), Poly4())
        assert pairing == Poly4.const(1 if i == j else 0)


def test_metric_examples():
    md = metric_data(Params(0, 1, 2, 1))
    x2, x3 = Poly4.var(2), Poly4.var(3)
    assert md.g[0][0] == x2 * x2 * 2 + x3 * x3 * 3
    assert md.g[0][3] == Poly4.const(1)
    flat = metric_data(Params(0, 0, 0, 0))
    assert all(c.is_zero() for a in flat.christoffel for b in a for c in b)


@given(params())
def test_metric_inverse_and_determinant(p):
    md = metric_data(p)
    assert md.det == Poly4.const(-1)
    for a, c in itertools.product(range(4), repeat=2):
        s = sum((md.g[a][b] * md.ginv[b][c] for b in range(4)), Poly4())
        assert s == Poly4.const(1 if a == c else 0)
        assert md.g[a][c] == md.g[c][a]


@given(params())
def test_levi_civita_compatibility(p):
    md = metric_data(p)
    g, G = md.g, md.christoffel
    for a, b, c in itertools.product(range(4), repeat=3):
        expr = g[b][c].diff(a + 1)
        for d in range(4):
            expr = expr - G[d][a][b] * g[d][c] - G[d][a][c] * g[b][d]
        assert expr.is_zero()
        assert G[a][b][c] == G[a][c][b]


# --- charts ---------------------------------------------------------------

def test_brinkmann_map_examples():
    p = Params(0, 1, 2, 0)
    y = np.array([0.3, -0.2, 0.5, 0.7])
    assert np.allclose(brinkmann_map(p, "to-exponential", y), y, atol=0, rtol=0)
    x = brinkmann_map(Params(1, 0, 1, 1), "to-exponential", [1.0, 0.2, 0.3, 0.7])
    assert x[0] == 0.0 and x[3] == 0.7
    with pytest.raises(DomainError):
        brinkmann_map(Params(1, 0, 1, 0), "to-exponential", [-1.0, 0, 0, 0])
    with pytest.raises(ValueError):
        brinkmann_map(p, "sideways", y)


@pytest.mark.parametrize("p", [Params(0, 1, 2, 1), Params(1, Q(19, 4), 1, Q(-2, 3))])
def test_brinkmann_round_trip(p, rng):
    for _ in range(10):
        y = rng.uniform(-1, 1, 4)
        y[0] = rng.uniform(1, 2)
        back = brinkmann_map(p, "to-brinkmann", brinkmann_map(p, "to-exponential", y))
        assert np.max(np.abs(back - y)) < 1e-12


@pytest.mark.parametrize("p", [Params(0, Q(1, 3), Q(-7, 4), Q(5, 2)), Params(0, -1, 3, 1),
                               Params(1, Q(3, 4), 2, Q(1, 2))])
def test_metric_pullback_matches_brinkmann_form(p, rng):
    for _ in range(10):
        y = rng.uniform(-1, 1, 4)
        y[0] = rng.uniform(1, 2)
        J = brinkmann_jacobian(p, y)
        assert np.max(np.abs(J - num_jacobian(lambda v: brinkmann_map(p, "to-exponential", v), y))) < 1e-8
        x = brinkmann_map(p, "to-exponential", y)
        g = pullback(exp_metric(p, x), J)
        assert np.max(np.abs(g - brinkmann_form(p, y))) < 1e-9
        assert np.max(np.abs(brinkmann_metric(p, y) - brinkmann_form(p, y))) < 1e-12


@pytest.mark.parametrize("source", [Params(0, Q(1, 4), 1, 0), Params(0, Q(5, 4), Q(-1, 2), Q(2, 3))])
def test_conformal_shift_pullback_is_conformal(source, rng):
    target = Params(1, source.a1 - Q(1, 4), source.a2 - Q(1, 4), source.gamma)
    for _ in range(10):
        y = rng.uniform(-1, 1, 4)
        J = conformal_shift_jacobian(y)
        assert np.max(np.abs(J - num_jacobian(conformal_shift_map, y))) < 1e-7
        pulled = pullback(brinkmann_form(target, conformal_shift_map(y)), J)
        base = brinkmann_form(source, y)
        mask = np.abs(base) > 1e-6
        ratio = pulled[mask] / base[mask]
        assert ratio.min() > 0
        assert np.max(np.abs(ratio - ratio[0])) < 1e-9
        assert np.max(np.abs(pulled - ratio[0] * base)) < 1e-9
        assert abs(ratio[0] - math.exp(y[0])) < 1e-9 * math.exp(y[0])
        assert np.max(np.abs(conformal_shift_inverse(conformal_shift_map(y)) - y)) < 1e-12


def test_conformal_shift_inverse_domain():
    with pytest.raises(DomainError):
        conformal_shift_inverse([0.0, 1, 1, 1])


def test_scaling_and_swap_realisations(rng):
    p = Params(0, Q(2, 3), Q(-1, 5), Q(3, 2))
    lam = 2.0
    scaled = Params(0, 4 * p.a1, 4 * p.a2, 2 * p.gamma)
    swapped = Params(0, p.a2, p.a1, p.gamma)
    scale = lambda y: np.array([lam * y[0], y[1], y[2], y[3] / lam])
    swap = lambda y: np.array([-y[0], y[2], y[1], -y[3]])
    for _ in range(5):
        y = rng.uniform(-1, 1, 4)
        g = pullback(brinkmann_form(p, scale(y)), num_jacobian(scale, y))
        assert np.max(np.abs(g - brinkmann_form(scaled, y))) < 1e-8
        g = pullback(brinkmann_form(p, swap(y)), num_jacobian(swap, y))
        assert np.max(np.abs(g - brinkmann_form(swapped, y))) < 1e-8


def test_param_isometries_examples():
    images = param_isometries(Params(0, Q(8, 3), Q(2, 3), 0), lambdas=(Q(1, 2),))
    assert (Params(0, Q(2, 3), Q(1, 6), 0), "isometric") in images
    assert (Params(0, 2, 1, 1), "isometric") in param_isometries(Params(0, 1, 2, 1))
    assert (Params(0, Q(1, 4), 1, 0), "conformal") in param_isometries(Params(1, 0, Q(3, 4), 0))
    assert all(kind == "isometric" for _, kind in param_isometries(Params(0, 1, 2, 1)))
