import random

import pytest

from superdecomp.exact import ONE, Scalar, sc, vec_is_zero, vec_zero
from superdecomp.core import (
    bracket_span, center, centralizer, derived, is_ideal, killing_form,
    subalgebra_from_subspace, verify_superalgebra,
)
from superdecomp.exact import is_positive_definite
from superdecomp.families import (
    FamilySpec, build_family, build_lie_algebra, expected_dims,
    family_name, square_identity_samples,
)

SMALL = [
    ("u", (1, 1)), ("u", (2, 1)), ("su", (2, 1)), ("su", (2, 2)),
    ("psu", (2,)), ("q", (2,)), ("pq", (2,)), ("q_hat", (2,)),
    ("c", (2,)), ("c", (3,)),
    ("T", ("su", 2)), ("T_hat", ("su", 2)), ("T_tilde", ("su", 2)),
    ("spin_h", (1,)), ("spin_h", (2,)), ("spin_h", (3,)),
    ("ch", (1,)), ("ch_indefinite", (1, 1)), ("gl", (1, 1)),
]


@pytest.mark.parametrize("tag,params", SMALL)
def test_dimension_contracts_and_verify(tag, params):
    g = build_family(tag, *params)
    assert (g.d0, g.d1) == expected_dims(tag, params)
    assert verify_superalgebra(g) is None


def test_invalid_parameters():
    with pytest.raises(ValueError):
        FamilySpec("su", (1, 2))
    with pytest.raises(ValueError):
        FamilySpec("c", (1,))
    with pytest.raises(ValueError):
        FamilySpec("psu", (1,))
    with pytest.raises(ValueError):
        FamilySpec("nope", (1,))
    with pytest.raises(ValueError):
        FamilySpec("T", ("so", 4))


def test_su22_center_in_derived():
    g = build_family("su", 2, 2)
    z = center(g)
    assert z.dim == 1
    assert derived(g).contains(z.basis[0])


def test_c2_structure():
    g = build_family("c", 2)
    assert (g.d0, g.d1) == (4, 4)
    z0 = centralizer(g, g.even_subspace(), g.even_subspace())
    assert z0.dim == 1
    _, r = killing_form(g)
    assert r == g.dim
    # even part: so(2) + sp(1); its derived part is compact semisimple,
    # so the Killing form of that 3-dim algebra is negative definite
    ev, _ = subalgebra_from_subspace(g, g.even_subspace())
    dev = derived(ev)
    sub, _ = subalgebra_from_subspace(ev, dev)
    gram, rk = killing_form(sub)
    assert rk == sub.dim == 3
    assert is_positive_definite(gram.scale(Scalar(-1))).ok


def test_c_real_dim_matches_complex_osp_dim():
    for n in (2, 3):
        g = build_family("c", n)
        m = n - 1
        complex_dim = 1 + m * (2 * m + 1) + 4 * m
        assert g.dim == complex_dim


def test_pq2_centers_vanish():
    g = build_family("pq", 2)
    assert center(g).dim == 0
    z0 = centralizer(g, g.even_subspace(), g.even_subspace())
    assert z0.dim == 0


def test_q2_even_center():
    g = build_family("q", 2)
    assert center(g).dim == 1
    z0 = centralizer(g, g.even_subspace(), g.even_subspace())
    assert z0.dim == 1


def test_qhat_contains_q_as_hyperplane_ideal():
    qh = build_family("q_hat", 2)
    q = build_family("q", 2)
    assert qh.d1 == q.d1 + 1 and qh.d0 == q.d0
    # odd part of the q(2) copy: traceless combinations; the odd generators
    # come from the u(3) basis whose first three members are the iE_jj
    d0 = qh.d0
    vecs = [qh.basis_vector(i) for i in range(d0)]
    for j in range(2):                     # diagonal differences
        v = vec_zero(qh.dim)
        v[d0 + j] = ONE
        v[d0 + j + 1] = Scalar(-1)
        vecs.append(v)
    vecs += [qh.basis_vector(i) for i in range(d0 + 3, qh.dim)]
    s = qh.subspace(vecs)
    assert is_ideal(qh, s)
    sub, _ = subalgebra_from_subspace(qh, s)
    assert (sub.d0, sub.d1) == (q.d0, q.d1)
    # the identity direction carries the trace; it squares into the center
    # and acts as a derivation with square zero on the hyperplane
    y = vec_zero(qh.dim)
    for j in range(3):
        y[d0 + j] = ONE
    sq = qh.bracket(y, y)
    assert not vec_is_zero(sq)
    for i in range(qh.dim):
        assert vec_is_zero(qh.bracket(sq, qh.basis_vector(i)))


def test_square_identity_sampling():
    rng = random.Random(11)
    for tag, params in [("u", (1, 1)), ("u", (2, 1))]:
        g = build_family(tag, *params)
        assert square_identity_samples(g, 25, rng) == 25


def test_that_odd_centralizer_dim_1():
    g = build_family("T_hat", "su", 2)
    b = centralizer(g, g.even_subspace(), g.odd_subspace())
    assert b.dim == 1


def test_ttilde_center_is_odd_brackets():
    g = build_family("T_tilde", "su", 2)
    z = center(g)
    odd = g.odd_subspace()
    assert z.dim == 1
    assert bracket_span(g, odd, odd) == z


def test_t_odd_brackets_zero():
    g = build_family("T", "su", 2)
    odd = g.odd_subspace()
    assert bracket_span(g, odd, odd).dim == 0


def test_spin_h_squares_nonzero():
    g = build_family("spin_h", 1)
    assert g.dim == 3
    rng = random.Random(5)
    for _ in range(25):
        x = vec_zero(g.dim)
        while vec_is_zero(x):
            for i in g.space.odd_indices():
                x[i] = sc(rng.randint(-3, 3))
        assert not vec_is_zero(g.bracket(x, x))


def test_ch_indefinite_sign_conflict():
    g = build_family("ch_indefinite", 1, 1)
    x1 = g.basis_vector(1)
    x2 = g.basis_vector(2)
    s1 = g.bracket(x1, x1)
    s2 = g.bracket(x2, x2)
    assert not vec_is_zero(s1)
    assert vec_is_zero([a + b for a, b in zip(s1, s2)])


def test_ch_realified_bracket_shape():
    g = build_family("ch", 1)
    assert (g.d0, g.d1) == (2, 4)
    z = center(g)
    assert z.dim >= 2                      # even part is central
    odd = g.odd_subspace()
    assert bracket_span(g, odd, odd).dim == 2


def test_simple_algebra_bases():
    for kind, n, dim in [("su", 2, 3), ("su", 3, 8), ("so", 3, 3), ("sp", 1, 3)]:
        k = build_lie_algebra(kind, n)
        assert k.dim == dim and k.d1 == 0
        gram, rk = killing_form(k)
        assert rk == dim
        assert is_positive_definite(gram.scale(Scalar(-1))).ok


def test_family_names():
    assert family_name("su", (2, 1)) == "su(2|1)"
    assert family_name("q_hat", (2,)) == "qhat(2)"
    assert family_name("T_tilde", ("su", 2)) == "Ttilde(su2)"
    assert family_name("ch_indefinite", (1, 1)) == "ch_indef(1,1)"
