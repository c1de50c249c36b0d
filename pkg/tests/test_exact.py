import random
from fractions import Fraction

import pytest

from superdecomp.exact import (
    Echelon, LinSolver, Matrix, Scalar, ZERO, I,
    char_poly, char_poly_and_rational_split, feasible_point,
    is_positive_definite, kernel, peval_matrix, pmul, quad_form,
    random_vector, rank, sc, solve, span_basis, vec_is_zero,
)


def M(rows):
    return Matrix.from_rows([[sc(a) for a in r] for r in rows])


def V(entries):
    return [sc(a) for a in entries]


# --- scalar arithmetic ------------------------------------------------------

def test_scalar_exactness():
    rng = random.Random(7)
    for _ in range(200):
        a = Scalar(Fraction(rng.randint(-50, 50), rng.randint(1, 30)),
                   Fraction(rng.randint(-50, 50), rng.randint(1, 30)))
        b = Scalar(Fraction(rng.randint(-50, 50), rng.randint(1, 30)),
                   Fraction(rng.randint(-50, 50), rng.randint(1, 30)))
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a / b) * b == a


def test_scalar_complex_mul():
    assert I * I == sc(-1)
    assert sc(1, 2) * sc(3, -1) == sc(5, 5)
    assert sc(1, 1).conj() == sc(1, -1)


# --- kernel / solve ---------------------------------------------------------

def test_kernel_identity():
    assert kernel(Matrix.identity(2)) == []


def test_kernel_rank_one():
    ker = kernel(M([[1, 1], [1, 1]]))
    assert len(ker) == 1
    v = ker[0]
    # spans (1, -1)
    assert v[0] * sc(-1) == v[1]


def test_kernel_nilpotent_block():
    ker = kernel(M([[0, 1], [0, 0]]))
    assert len(ker) == 1
    assert ker[0][0] != ZERO and ker[0][1] == ZERO


def test_solve_identity():
    x, ker = solve(Matrix.identity(3), V([2, -1, 5]))
    assert x == V([2, -1, 5]) and ker == []


def test_solve_underdetermined():
    res = solve(M([[1, 1]]), V([2]))
    assert res is not None
    x, ker = res
    assert x[0] + x[1] == sc(2)
    assert len(ker) == 1
    assert ker[0][0] + ker[0][1] == ZERO


def test_solve_inconsistent():
    assert solve(M([[1], [1]]), V([1, 2])) is None


def test_solve_random_roundtrip():
    rng = random.Random(11)
    for _ in range(25):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = Matrix.from_rows([random_vector(rng, m) for _ in range(n)])
        x0 = random_vector(rng, m)
        b = a.mul_vec(x0)
        res = solve(a, b)
        assert res is not None
        x, ker = res
        assert a.mul_vec(x) == b
        # kernel dimension + rank = column count
        assert len(ker) + rank(a) == m
        for v in ker:
            assert vec_is_zero(a.mul_vec(v))


def test_linsolver_tracks_scaling():
    rng = random.Random(3)
    for _ in range(20):
        dim = rng.randint(2, 6)
        k = rng.randint(1, dim)
        cols = []
        ech = Echelon(dim)
        while len(cols) < k:
            v = random_vector(rng, dim)
            if ech.add_list(v):
                cols.append(v)
        solver = LinSolver(cols, dim)
        coeffs = [sc(rng.randint(-4, 4)) for _ in range(k)]
        target = [sum((c * col[i] for c, col in zip(coeffs, cols)), ZERO)
                  for i in range(dim)]
        got = solver.coords(target)
        assert got == coeffs


def test_span_basis_canonical():
    b1 = span_basis([V([2, 4]), V([1, 2]), V([0, 0])], 2)
    b2 = span_basis([V([-3, -6])], 2)
    assert b1 == b2


# --- characteristic polynomial ----------------------------------------------

def test_char_poly_diag():
    p, factors, roots = char_poly_and_rational_split(M([[1, 0], [0, 2]]))
    assert p == [Fraction(2), Fraction(-3), Fraction(1)]
    assert sorted(r for r, _ in roots) == [1, 2]
    prod = [Fraction(1)]
    for f, e in factors:
        for _ in range(e):
            prod = pmul(prod, f)
    assert prod == p


def test_char_poly_rotation_no_rational_roots():
    p, factors, roots = char_poly_and_rational_split(M([[0, 1], [-1, 0]]))
    assert p == [Fraction(1), Fraction(0), Fraction(1)]   # t^2 + 1
    assert roots == []
    assert len(factors) == 1


def test_char_poly_repeated():
    p, factors, roots = char_poly_and_rational_split(M([[3, 0, 0], [0, 3, 0], [0, 0, 5]]))
    assert dict((r, e) for r, e in roots) == {3: 2, 5: 1}
    prod = [Fraction(1)]
    for f, e in factors:
        for _ in range(e):
            prod = pmul(prod, f)
    assert prod == p


def test_char_poly_matches_cayley_hamilton():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(1, 5)
        a = Matrix.from_rows([random_vector(rng, n) for _ in range(n)])
        p = char_poly(a)
        assert peval_matrix(p, a).is_zero()


# --- positive definiteness --------------------------------------------------

def test_posdef_yes():
    res = is_positive_definite(M([[2, 1], [1, 1]]))
    assert res.ok
    assert res.minors == [2, 1]


def test_posdef_no_with_witness():
    res = is_positive_definite(M([[1, 2], [2, 1]]))
    assert not res.ok
    assert quad_form(M([[1, 2], [2, 1]]), res.witness) == res.witness_value
    assert res.witness_value <= 0


def test_posdef_degenerate():
    res = is_positive_definite(M([[0]]))
    assert not res.ok
    assert not vec_is_zero(res.witness)
    assert res.witness_value == 0


def test_posdef_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        is_positive_definite(M([[1, 2], [0, 1]]))


def test_posdef_agrees_with_sampling():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(1, 5)
        a = Matrix.from_rows([random_vector(rng, n) for _ in range(n)])
        g = a.transpose() @ a  # PSD; perturb diagonal either way
        shift = rng.choice([0, 1, -2])
        for i in range(n):
            g.data[i][i] = g.data[i][i] + sc(shift)
        sym = g
        res = is_positive_definite(sym)
        if res.ok:
            for _ in range(30):
                v = random_vector(rng, n, nonzero=True)
                assert quad_form(sym, v) > 0
        else:
            assert quad_form(sym, res.witness) == res.witness_value <= 0


# --- exact LP feasibility ----------------------------------------------------

def test_lp_simple_feasible():
    t = feasible_point([[Fraction(1)]], 1)
    assert t is not None and t[0] >= 1


def test_lp_infeasible_opposed():
    # t >= 1 and -t >= 1 cannot both hold
    assert feasible_point([[Fraction(1)], [Fraction(-1)]], 1) is None


def test_lp_two_vars():
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    t = feasible_point(rows, 2)
    assert t is not None
    for row in rows:
        assert sum(a * x for a, x in zip(row, t)) >= 1


def test_lp_random_consistency():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(1, 3)
        m = rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        t = feasible_point(rows, n)
        if t is not None:
            for row in rows:
                assert sum(a * x for a, x in zip(row, t)) >= 1
