import random
from fractions import Fraction

import pytest

from superdecomp.exact import I, Matrix, ONE, Scalar, ZERO, sc, vec_is_zero, vec_zero
from superdecomp.core import (
    BlockMatrix, InvariantForm, SuperAlgebra, SuperAlgebraError, SuperSpace,
    Violation, algebra_from_json_dict, algebra_to_json_dict, bracket_span,
    center, central_extension, centralizer, check_derivation, derived,
    direct_sum, from_matrix_span, invariant_odd_forms, is_ideal, is_perfect,
    is_trivial_cocycle, killing_form, quotient_by_central,
    semidirect_by_derivation, subalgebra_from_subspace, tables_equal,
    verify_superalgebra,
)
from superdecomp.families import (
    build_family, build_lie_algebra,
)


def test_bracket_with_zero():
    g = build_family("u", 1, 1)
    x = g.basis_vector(2)
    assert vec_is_zero(g.bracket(x, vec_zero(g.dim)))


def test_u11_square_example():
    # odd matrix [[0,1],[i,0]] squares to i, so [X,X] = 2i * identity
    g = build_family("u", 1, 1)
    real = g.meta["realization"]
    b = Matrix(1, 1, [[ONE]])
    x = BlockMatrix.from_blocks(b=b, c=b.conj_transpose().scale(I)).full
    coords = real.from_matrix(x)
    assert coords is not None
    sq = g.bracket(coords, coords)
    target = real.to_matrix(sq)
    expect = Matrix.identity(2).scale(sc(0, 2))
    assert target == expect


def test_tangent_odd_brackets_vanish():
    g = build_family("T", "su", 2)
    for i in g.space.odd_indices():
        for j in g.space.odd_indices():
            assert g.bracket_pair(i, j) == {}


def test_verify_ok_for_constructors():
    for tag, params in [("u", (1, 1)), ("su", (2, 1)), ("q", (1,)),
                        ("spin_h", (2,)), ("T_hat", ("su", 2))]:
        assert verify_superalgebra(build_family(tag, *params)) is None


def test_verify_detects_perturbation():
    g = build_family("u", 1, 1)
    table = {k: dict(v) for k, v in g.table.items()}
    (i, j), terms = sorted(table.items())[0]
    k0 = sorted(terms)[0]
    terms[k0] = terms[k0] + ONE
    bad = SuperAlgebra(g.space, table)
    v = verify_superalgebra(bad)
    assert isinstance(v, Violation)
    assert v.kind == "jacobi"


def test_verify_abelian_ok():
    g = SuperAlgebra(SuperSpace.make(2, 1), {})
    assert verify_superalgebra(g) is None


def test_adjoint_central_is_zero():
    g = build_family("u", 1, 1)
    z = center(g)
    assert z.dim == 1
    assert g.adjoint(z.basis[0]).is_zero()


def test_adjoint_su2_char_poly():
    k = build_lie_algebra("su", 2)
    from superdecomp.exact import char_poly
    p = char_poly(k.adjoint_index(0))      # ad of i(E00 - E11)
    assert p == [Fraction(0), Fraction(4), Fraction(0), Fraction(1)]


def test_adjoint_odd_maps_between_parities():
    g = build_family("u", 2, 1)
    x = g.basis_vector(g.d0)               # first odd basis vector
    ad = g.adjoint(x)
    for k in range(g.dim):
        for j in range(g.dim):
            if not ad.data[k][j].is_zero():
                assert g.parity(k) != g.parity(j)


def test_killing_dichotomy():
    _, r = killing_form(build_family("psu", 2))
    assert r == 0
    g = build_family("su", 2, 1)
    _, r = killing_form(g)
    assert r == g.dim == 8
    _, r = killing_form(build_family("pq", 2))
    assert r == 0


def test_killing_invariance():
    g = build_family("su", 2, 1)
    gram, _ = killing_form(g)
    n = g.dim
    basis = [g.basis_vector(i) for i in range(n)]

    def kappa(u, w):
        acc = ZERO
        for a in range(n):
            if u[a].is_zero():
                continue
            for b in range(n):
                if not w[b].is_zero():
                    acc = acc + u[a] * gram.data[a][b] * w[b]
        return acc

    rng = random.Random(2)
    for _ in range(40):
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        left = kappa(g.bracket(basis[i], basis[j]), basis[k])
        right = kappa(basis[i], g.bracket(basis[j], basis[k]))
        assert left == right


def test_center_su22():
    g = build_family("su", 2, 2)
    z = center(g)
    assert z.dim == 1
    # the center is the supertraceless diagonal i1 direction, inside [g, g]
    assert derived(g).contains(z.basis[0])


def test_derived_u11():
    assert derived(build_family("u", 1, 1)).dim == 3


def test_from_matrix_span_clifford_heisenberg():
    # inside u(1|1): i*identity plus the two odd generators
    even = BlockMatrix(1, 1, Matrix.identity(2).scale(I), 0)
    b1 = Matrix(1, 1, [[ONE]])
    b2 = Matrix(1, 1, [[I]])
    odd1 = BlockMatrix.from_blocks(b=b1, c=b1.conj_transpose().scale(I))
    odd2 = BlockMatrix.from_blocks(b=b2, c=b2.conj_transpose().scale(I))
    g, real = from_matrix_span([even, odd1, odd2])
    assert (g.d0, g.d1) == (1, 2)
    assert verify_superalgebra(g) is None
    assert center(g).dim == 1              # g0 central: Clifford-Heisenberg shape


def test_from_matrix_span_u11():
    g = build_family("u", 1, 1)
    assert (g.d0, g.d1) == (2, 2)


def test_from_matrix_span_mis_tagged():
    even = BlockMatrix(1, 1, Matrix.identity(2).scale(I), 0)
    # an even matrix mis-tagged as odd is rejected by the block invariants
    with pytest.raises(SuperAlgebraError):
        BlockMatrix(1, 1, Matrix.identity(2), 1)
    # an odd span that is not closed reports the offending pair
    b1 = Matrix(1, 1, [[ONE]])
    odd1 = BlockMatrix.from_blocks(b=b1, c=b1.conj_transpose().scale(I))
    with pytest.raises(SuperAlgebraError):
        from_matrix_span([odd1])           # misses [X, X] = 2i


def test_direct_sum_dims_and_center():
    a = build_family("su", 2, 1)
    b = build_family("T", "su", 2)
    s = direct_sum(a, b)
    assert (s.d0, s.d1) == (7, 7)
    assert verify_superalgebra(s) is None
    assert center(s).dim == center(a).dim + center(b).dim


def test_quotient_su22_is_psu22():
    g = build_family("psu", 2)
    assert (g.d0, g.d1) == (6, 8)
    assert verify_superalgebra(g) is None
    assert center(g).dim == 0


def test_quotient_q2_is_pq2():
    g = build_family("pq", 2)
    assert g.dim == 16
    assert verify_superalgebra(g) is None


def test_quotient_by_zero_is_identity():
    g = build_family("u", 1, 1)
    quo, _ = quotient_by_central(g, g.subspace([]))
    assert tables_equal(g, quo)


def test_quotient_rejects_noncentral():
    g = build_family("su", 2, 1)
    with pytest.raises(SuperAlgebraError):
        quotient_by_central(g, g.subspace([g.basis_vector(0)]))


def test_semidirect_that_su2():
    g = build_family("T_hat", "su", 2)
    assert (g.d0, g.d1) == (3, 4)
    assert verify_superalgebra(g) is None


def test_semidirect_spin_h_hat_dims():
    g = build_family("spin_h_hat", 1)
    assert (g.d0, g.d1) == (2, 2)
    assert verify_superalgebra(g) is None


def test_semidirect_zero_derivation():
    g = build_family("spin_h", 1)
    ext = semidirect_by_derivation(g, Matrix(g.dim, g.dim), parity=0)
    didx = ext.meta["derivation_index"]
    for j in range(ext.dim):
        assert ext.bracket_pair(didx, j) == {}


def test_semidirect_rejects_odd_nonnilpotent():
    # abelian (1|1) algebra; D swapping the two basis vectors has D^2 = 1
    g = SuperAlgebra(SuperSpace.make(1, 1), {})
    d = Matrix(2, 2)
    d.data[0][1] = ONE
    d.data[1][0] = ONE
    assert check_derivation(g, d, 1) is None
    with pytest.raises(SuperAlgebraError):
        semidirect_by_derivation(g, d, parity=1)


def test_central_extension_zero_form():
    g = build_family("T", "su", 2)
    form = InvariantForm(list(g.space.odd_indices()), Matrix(g.d1, g.d1))
    ext = central_extension(g, form)
    for j in range(ext.dim):
        assert ext.bracket_pair(0, j) == {}


def test_central_extension_ttilde():
    g = build_family("T_tilde", "su", 2)
    assert (g.d0, g.d1) == (4, 3)
    z = center(g)
    assert z.dim == 1
    assert derived(g).contains(z.basis[0])
    # center equals the span of odd-odd brackets
    odd = g.odd_subspace()
    assert bracket_span(g, odd, odd) == z


def test_central_extension_rejects_noninvariant():
    g = build_family("T", "su", 2)
    gram = Matrix(g.d1, g.d1)
    gram.data[0][0] = ONE                  # not ad-invariant for su(2)
    with pytest.raises(SuperAlgebraError):
        central_extension(g, InvariantForm(list(g.space.odd_indices()), gram))


def test_extension_quotient_roundtrip():
    g = build_family("T", "su", 2)
    gram, _ = killing_form(build_lie_algebra("su", 2))
    form = InvariantForm(list(g.space.odd_indices()), gram.scale(Scalar(-1)))
    ext = central_extension(g, form)
    quo, _ = quotient_by_central(ext, ext.subspace([ext.basis_vector(0)]))
    assert tables_equal(g, quo)


def test_trivial_cocycle_su21():
    g = build_family("su", 2, 1)
    forms = invariant_odd_forms(g)
    assert forms
    for form in forms:
        lam = is_trivial_cocycle(g, form)
        assert lam is not None


def test_trivial_cocycle_zero_form():
    g = build_family("su", 2, 1)
    form = InvariantForm(list(g.space.odd_indices()), Matrix(g.d1, g.d1))
    lam = is_trivial_cocycle(g, form)
    assert lam is not None and all(v.is_zero() for v in lam)


def test_nontrivial_cocycle_on_psu22():
    psu = build_family("psu", 2)
    su = psu.meta["extension_of"]
    qmap = psu.meta["quotient_map"]
    d1 = psu.d1
    odd = list(psu.space.odd_indices())
    gram = Matrix(d1, d1)
    zpos = su.d0 - 1
    for a in range(d1):
        for b in range(d1):
            x = qmap.lift(psu.basis_vector(odd[a]))
            y = qmap.lift(psu.basis_vector(odd[b]))
            gram.data[a][b] = su.bracket(x, y)[zpos]
    form = InvariantForm(odd, gram)
    assert is_trivial_cocycle(psu, form) is None
    rebuilt = central_extension(psu, form)
    assert (rebuilt.d0, rebuilt.d1) == (su.d0, su.d1)
    assert center(rebuilt).dim == 1
    assert is_perfect(rebuilt)


def test_subalgebra_extraction():
    g = build_family("T_hat", "su", 2)
    # the tangent part (everything except the derivation generator) is an ideal
    vecs = [g.basis_vector(i) for i in range(g.dim) if i != g.dim - 1]
    s = g.subspace(vecs)
    assert is_ideal(g, s)
    sub, _ = subalgebra_from_subspace(g, s)
    assert (sub.d0, sub.d1) == (3, 3)
    assert tables_equal(sub, build_family("T", "su", 2))


def test_ideal_closure_grows_to_ideal():
    from superdecomp.core import ideal_closure
    g = build_family("su", 2, 1)
    s = g.subspace([g.basis_vector(g.d0)])    # a single odd vector
    closed = ideal_closure(g, s)
    assert is_ideal(g, closed)
    assert closed.dim == g.dim                # simple algebra: closure is all


def test_centralizer_that_su2():
    g = build_family("T_hat", "su", 2)
    b = centralizer(g, g.even_subspace(), g.odd_subspace())
    assert b.dim == 1


def test_serialization_roundtrip():
    g = build_family("su", 2, 1)
    d = algebra_to_json_dict(g, "su(2|1)")
    h = algebra_from_json_dict(d)
    assert tables_equal(g, h)
