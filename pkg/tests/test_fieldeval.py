import numpy as np
import pytest

from pwkilling import explicit as E
from pwkilling.classify import _basis_matrix
from pwkilling.exactlin import Q, kernel
from pwkilling.fieldeval import (TraceError, conformal_vector_fields, evaluate_solution, evaluator,
                                 homothety_field, killing_fields, metric_inverse_field,
                                 residual_conformal, residual_killing, residual_killing_vector,
                                 shifted_conformal_field, trace)
from pwkilling.planewave import FRAME_METRIC, Params, bracket_table, metric_data
from pwkilling.prolongation import phi_family
from pwkilling.solver import solution_space
from pwkilling.tractor import CONFORMAL, PROJECTIVE, cartan_component, project_pi

ETA = np.array(FRAME_METRIC, dtype=float)
TOL = 1e-7


def points(rng, n):
    return rng.uniform(-1, 1, size=(n, 4))


def basis_field(problem, p):
    S = solution_space(problem, p)
    B = _basis_matrix(S)
    if problem == CONFORMAL and p.epsilon == 1:
        return S, shifted_conformal_field(p, S.computed_at, B)
    ev = evaluator(problem, p)
    return S, lambda x: ev.tensor(B, x)


def _vfield(p, j):
    return lambda y: killing_fields(p, y)[j]


# --- solution fields ------------------------------------------------------

@pytest.mark.parametrize("problem", [CONFORMAL, PROJECTIVE])
def test_origin_reads_projection(problem):
    p = Params(0, 1, 2, 1)
    cc = cartan_component(problem)
    rng = np.random.default_rng(0)
    v = rng.integers(-3, 4, cc.dim)
    f = np.array(project_pi(problem, [int(t) for t in v]), dtype=float)
    if problem == PROJECTIVE:
        f = ETA @ f @ ETA  # positions carry lower frame indices
    K = evaluate_solution(problem, p, v, np.zeros(4))
    assert np.allclose(K, f, atol=1e-13)
    with pytest.raises(ValueError):
        evaluate_solution(problem, p, v[:-1], np.zeros(4))


def test_conformal_fields_trace_free(rng):
    p = Params(0, Q(8, 3), Q(2, 3), 0)
    _, fld = basis_field(CONFORMAL, p)
    md = metric_data(p)
    for x in points(rng, 20):
        K = fld(x)
        assert np.abs(trace(md.numeric(x)[0], K)).max() < 1e-9 * max(1, np.abs(K).max())


def test_flat_invariant_vector_is_constant():
    p = Params(0, 0, 0, 0)
    f = phi_family(PROJECTIVE, p)
    stacked = f[1]
    for i in range(2, 7):
        stacked = stacked.vstack(f[i])
    inv = kernel(stacked)
    ev = evaluator(PROJECTIVE, p)
    target = np.zeros((4, 4))
    target[3, 3] = 1.0
    found = None
    for v in inv.vectors():
        vec = np.zeros(inv.ambient_dim)
        for j, x in v.items():
            vec[j] = float(x)
        if np.allclose(ev.tensor(vec, np.zeros(4)), target):
            found = vec
    assert found is not None
    for x in points(np.random.default_rng(1), 5):
        assert np.allclose(ev.tensor(found, x), target, atol=1e-14)
    assert residual_killing(p, lambda y: ev.tensor(found, y), np.array([0.2, 0.1, -0.3, 0.5])) < 1e-14


@pytest.mark.parametrize("problem,p", [
    (PROJECTIVE, Params(0, 1, 2, 1)), (PROJECTIVE, Params(1, 0, Q(3, 4), 0)),
    (CONFORMAL, Params(0, -1, 3, 1)), (CONFORMAL, Params(1, Q(29, 12), Q(5, 12), 0)),
])
def test_solution_fields_solve_equation(problem, p, rng):
    S, fld = basis_field(problem, p)
    R = residual_conformal if problem == CONFORMAL else residual_killing
    for x in points(rng, 3):
        r = R(p, fld, x)
        assert r.shape == (S.dim,) and r.max() < TOL


def test_epsilon_one_conformal_uses_shifted_metric(rng):
    p = Params(1, Q(-5, 4), Q(11, 4), 1)
    S, fld = basis_field(CONFORMAL, p)
    assert S.computed_at == Params(0, -1, 3, 1) and S.dim == 29
    for x in points(rng, 3):
        assert residual_conformal(p, fld, x).max() < TOL
    with pytest.raises(ValueError):
        shifted_conformal_field(Params(0, 1, 2, 0), Params(0, 1, 2, 0), np.zeros((84, 1)))


@pytest.mark.parametrize("name", ["FKT-34", "KT-family7"])
def test_step_convergence_is_quadratic(name):
    # non-polynomial fields; central differences are exact on low-degree polynomials
    fam = E.family(name)
    p = Params(*fam.params)
    fld = E.explicit_field(fam, p)
    x = np.array([0.4, -0.6, 0.3, 0.8])
    r = [residual_killing(p, fld, x, h=h, richardson=False) for h in (1e-3, 5e-4, 2.5e-4)]
    for a, b in zip(r, r[1:]):
        assert 3.5 < a / b < 4.5
    assert residual_killing(p, fld, x) < TOL
    with pytest.raises(ValueError):
        residual_killing(p, fld, x, h=0)


def test_solver_field_step_convergence():
    p = Params(0, -1, 3, 1)
    _, fld = basis_field(CONFORMAL, p)
    x = np.array([0.4, -0.6, 0.3, 0.8])
    r = [residual_conformal(p, fld, x, h=h, richardson=False).max() for h in (1e-3, 5e-4, 2.5e-4)]
    for a, b in zip(r, r[1:]):
        assert 3.5 < a / b < 4.5


# --- Killing fields -------------------------------------------------------

@pytest.mark.parametrize("p", [Params(0, 1, 2, 1), Params(1, 0, Q(3, 4), 0), Params(1, Q(5, 3), Q(1, 2), 2)])
def test_killing_fields_at_origin(p):
    k = killing_fields(p, np.zeros(4))
    assert np.allclose(k[:4], np.eye(4), atol=1e-15)
    assert np.allclose(k[4:], 0, atol=1e-15)


def test_k4_constant_for_epsilon_zero(rng):
    p = Params(0, Q(2, 3), -1, Q(1, 2))
    for x in points(rng, 5):
        assert np.allclose(killing_fields(p, x)[3], [0, 0, 0, 1], atol=1e-13)


@pytest.mark.parametrize("p", [Params(0, 1, 2, 1), Params(1, 0, Q(3, 4), 0), Params(1, Q(5, 3), Q(1, 2), 2)])
def test_killing_vector_residuals(p, rng):
    for x in points(rng, 3):
        for j in range(6):
            assert residual_killing_vector(p, _vfield(p, j), x) < TOL


def test_killing_fields_close_under_bracket(rng):
    p = Params(1, Q(5, 3), Q(1, 2), 2)
    b = bracket_table(p)
    h = 1e-5
    for x in points(rng, 3):
        k = killing_fields(p, x)
        dk = []
        for a in range(4):
            e = np.zeros(4)
            e[a] = h
            dk.append((killing_fields(p, x + e) - killing_fields(p, x - e)) / (2 * h))
        dk = np.array(dk)  # [a, j, mu] = d_a k_j^mu
        for i in range(6):
            for j in range(6):
                lie = k[i] @ dk[:, j, :] - k[j] @ dk[:, i, :]
                expect = -sum(c * k[m - 1] for m, c in b.bracket(i + 1, j + 1).items()) \
                    if b.bracket(i + 1, j + 1) else np.zeros(4)
                assert np.max(np.abs(lie - expect)) < 1e-5


def test_homothety():
    assert np.all(homothety_field(np.zeros(4)) == 0)
    assert np.array_equal(homothety_field([0, 1, 0, 0]), [0, -1, 0, 0])
    p = Params(0, 1, 2, 1)
    rng = np.random.default_rng(5)
    for x in points(rng, 3):
        assert residual_killing_vector(p, homothety_field, x, conformal=True) < TOL
        assert residual_killing_vector(p, homothety_field, x) > 0.1
    assert conformal_vector_fields(p, rng.uniform(-1, 1, 4)).shape == (7, 4)


# --- residual operators ---------------------------------------------------

def test_metric_and_zero_fields():
    x = np.array([0.3, -0.2, 0.9, -0.4])
    for p in (Params(0, 1, 2, 1), Params(1, Q(-3, 16), Q(7, 2), Q(1, 3))):
        assert residual_killing(p, metric_inverse_field(p), x) < 1e-8
        assert residual_conformal(p, lambda y: np.zeros((4, 4)), x) == 0
    flat = Params(0, 0, 0, 0)
    const = np.zeros((4, 4))
    const[3, 3] = 1
    assert residual_killing(flat, lambda y: const, x) < 1e-15


def test_trace_check():
    p = Params(0, 1, 2, 1)
    with pytest.raises(TraceError):
        residual_conformal(p, metric_inverse_field(p), np.array([0.1, 0.2, 0.3, 0.4]))


def _trace_free(p, fld):
    md = metric_data(p)

    def out(y):
        g, gi, _ = md.numeric(y)
        K = fld(y)
        return K - 0.25 * trace(g, K) * gi

    return out


def test_trace_free_part_of_killing_tensor_is_conformal(rng):
    p = Params(0, 1, 2, 1)
    fld = _trace_free(p, E.explicit_field(E.family("KT-generic"), p))
    for x in points(rng, 3):
        assert residual_conformal(p, fld, x) < TOL


def test_homothety_square_is_conformal(rng):
    p = Params(0, 1, 2, 1)
    fld = _trace_free(p, lambda y: np.outer(homothety_field(y), homothety_field(y)))
    for x in points(rng, 3):
        assert residual_conformal(p, fld, x) < TOL
        assert residual_killing(p, lambda y: np.outer(homothety_field(y), homothety_field(y)), x) > 0.1


# --- explicit families ----------------------------------------------------

@pytest.mark.parametrize("name", [f.name for f in E.FAMILIES])
def test_explicit_families(name, rng):
    fam = E.family(name)
    p = Params(*fam.params)
    R = residual_conformal if fam.problem == CONFORMAL else residual_killing
    for k in range(fam.ncoef):
        c = np.zeros(fam.ncoef)
        c[k] = 1
        fld = E.explicit_field(fam, p, c)
        for x in points(rng, 3):
            assert R(p, fld, x) < TOL


def test_family_applicability():
    fam = E.family("KT-family7")
    other = Params(1, 4 * Q(-1, 3) + Q(3, 4), Q(-1, 3), 0)
    assert residual_killing(other, E.explicit_field(fam, other), np.array([0.1, 0.5, -0.2, 0.3])) < TOL
    with pytest.raises(ValueError):
        E.explicit_field(fam, Params(1, 1, 1, 0))
    with pytest.raises(ValueError):
        E.explicit_field(E.family("FKT-34"), Params(1, 1, 1, 0))
    with pytest.raises(KeyError):
        E.family("nope")


@pytest.mark.parametrize("pt", [("0", "8/3", "2/3", "0"), ("0", "-8/3", "-2/3", "0")])
def test_sign_convention_probe(pt):
    # the upper sign of each pair belongs with the upper parameter sign
    p = Params(*pt)
    x = np.array([0.3, -0.4, 0.7, 0.2])
    sign = 1 if p.a1 > 0 else -1
    for s, good in ((sign, True), (-sign, False)):
        kt = E.Family("probe", PROJECTIVE, pt, 2, lambda q, y, c, s=s: E._kt_pm83(q, y, c, s))
        ckt = E.Family("probe", CONFORMAL, pt, 1, lambda q, y, c, s=s: E._ckt_c4(q, y, c, s))
        r1 = residual_killing(p, E.explicit_field(kt, p, [0, 1]), x)
        r2 = residual_conformal(p, E.explicit_field(ckt, p, [1]), x)
        if good:
            assert r1 < TOL and r2 < TOL
        else:
            assert r1 > 0.1 and r2 > 0.1
