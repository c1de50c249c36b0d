import random

from superdecomp.core import BlockMatrix, from_matrix_span
from superdecomp.exact import (
    I, Matrix, Scalar, ZERO, is_positive_definite, sc, vec_is_zero, vec_zero,
)
from superdecomp.families import build_family
from superdecomp.unitar import (
    classify_fingerprint, compactness_check, cone_pointedness, fingerprint,
    find_witness, gram_of_functional, invariant_functional_basis,
    necessary_conditions_report,
)


def test_invariant_functional_dims():
    assert invariant_functional_basis(build_family("psu", 2)) == []
    assert len(invariant_functional_basis(build_family("su", 2, 1))) == 1
    assert len(invariant_functional_basis(build_family("u", 1, 1))) == 2


def test_witness_u21():
    g = build_family("u", 2, 1)
    out = find_witness(g)
    assert out.found
    w = out.witness
    assert is_positive_definite(w.gram).ok
    assert all(m > 0 for m in w.minors)


def test_witness_scaling_invariance():
    g = build_family("su", 2, 1)
    out = find_witness(g)
    assert out.found
    doubled = [a + a for a in out.witness.functional]
    gram = gram_of_functional(g, doubled)
    assert is_positive_definite(gram).ok


def test_witness_positive_on_squares():
    # omega([X, X]) > 0 for seeded nonzero odd X in the u-families
    rng = random.Random(3)
    for tag, params in [("u", (1, 1)), ("u", (2, 1)), ("u", (2, 2))]:
        g = build_family(tag, *params)
        out = find_witness(g)
        assert out.found
        fn = out.witness.functional
        for _ in range(100):
            x = vec_zero(g.dim)
            while vec_is_zero(x):
                for i in g.space.odd_indices():
                    x[i] = sc(rng.randint(-3, 3))
            sq = g.bracket(x, x)
            val = sum((fn[k] * sq[k] for k in range(g.d0)), ZERO)
            assert val.re > 0 and not val.im


def test_no_witness_trivial_center():
    out = find_witness(build_family("pq", 2))
    assert out.status == "none"
    assert "trivial" in out.reason


def test_witness_c2():
    out = find_witness(build_family("c", 2))
    assert out.found


def test_cone_pointed_ttilde():
    cert = cone_pointedness(build_family("T_tilde", "su", 2))
    assert cert.verdict == "pointed"
    assert cert.witness is not None


def test_cone_trivial_tangent():
    cert = cone_pointedness(build_family("T", "su", 2))
    assert cert.verdict == "pointed"
    assert cert.witness is None            # trivial cone, no functional needed


def test_cone_not_pointed_indefinite():
    g = build_family("ch_indefinite", 1, 1)
    cert = cone_pointedness(g)
    assert cert.verdict == "not_pointed"
    x1, x2 = cert.pair
    s1, s2 = g.bracket(x1, x1), g.bracket(x2, x2)
    assert not vec_is_zero(s1) and not vec_is_zero(s2)
    assert vec_is_zero([a + b for a, b in zip(s1, s2)])


def test_cone_pointed_u22():
    assert cone_pointedness(build_family("u", 2, 2)).verdict == "pointed"


def test_compactness_families():
    assert compactness_check(build_family("su", 2, 2)).verdict == "yes"
    assert compactness_check(build_family("T", "su", 2)).verdict == "yes"


def test_compactness_no_for_complex_simple():
    mats = []
    for base in ([[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]):
        m = Matrix.from_rows([[Scalar(x) for x in row] for row in base])
        mats.append(m)
        mats.append(m.scale(I))
    sl2c, _ = from_matrix_span([BlockMatrix(2, 0, m, 0) for m in mats])
    assert compactness_check(sl2c).verdict == "no"


def test_classify_roundtrip():
    cases = [("q", (2,), "q"), ("pq", (2,), "pq"), ("psu", (2,), "psu"),
             ("su", (3, 1), "su(n|m)"), ("su", (2, 2), "su(n|n)"),
             ("c", (3,), "c"), ("T", ("su", 2), "T"),
             ("T_hat", ("su", 2), "T_hat"), ("T_tilde", ("su", 2), "T_tilde"),
             ("spin_h", (2,), "spin_h")]
    for tag, params, want in cases:
        got, matches = classify_fingerprint(build_family(tag, *params))
        assert got == want, (tag, params, got)
        assert (tag, params) in matches


def test_classify_second_parameter_values():
    cases = [("q", (3,), "q"), ("pq", (3,), "pq"), ("su", (2, 1), "su(n|m)"),
             ("c", (3,), "c"), ("T", ("su", 3), "T"),
             ("T_hat", ("so", 3), "T_hat"), ("spin_h", (1,), "spin_h"),
             ("spin_h", (3,), "spin_h")]
    for tag, params, want in cases:
        got, _ = classify_fingerprint(build_family(tag, *params))
        assert got == want, (tag, params, got)


def test_classify_quotient_of_su22_is_psu22():
    psu = build_family("psu", 2)
    assert fingerprint(psu).as_tuple()[:4] == (6, 8, 0, 0)
    got, _ = classify_fingerprint(psu)
    assert got == "psu"


def test_su21_c2_coincide():
    # compact forms of A(1,0) and C(2) are isomorphic: equal fingerprints
    assert fingerprint(build_family("su", 2, 1)) == fingerprint(build_family("c", 2))
    got, matches = classify_fingerprint(build_family("c", 2))
    assert got == "su(n|m)"
    assert ("c", (2,)) in matches and ("su", (2, 1)) in matches


def test_lemma24_obstructions():
    rep = necessary_conditions_report(build_family("psu", 2), seed=5)
    assert rep.overall == "obstruction found"
    assert rep.item("v_even_center").verdict == "fail"

    rep = necessary_conditions_report(build_family("pq", 2), seed=5)
    assert rep.overall == "obstruction found"
    assert rep.item("v_even_center").verdict == "fail"

    rep = necessary_conditions_report(build_family("T", "su", 2), seed=5)
    assert rep.overall == "obstruction found"
    assert rep.item("ii_nonzero_squares").verdict == "fail"
    x = rep.item("ii_nonzero_squares").certificate
    g = build_family("T", "su", 2)
    assert not vec_is_zero(x) and vec_is_zero(g.bracket(x, x))

    rep = necessary_conditions_report(build_family("ch_indefinite", 1, 1), seed=5)
    assert rep.overall == "obstruction found"
    assert rep.item("iii_pointed_cone").verdict == "fail"
    assert rep.item("iii_pointed_cone").certificate is not None


def test_lemma24_all_pass():
    for tag, params in [("u", (2, 1)), ("su", (2, 1)), ("su", (2, 2)),
                        ("q", (2,)), ("c", (2,)), ("su", (3, 1))]:
        rep = necessary_conditions_report(build_family(tag, *params), seed=5)
        assert rep.overall == "all necessary conditions pass", (tag, params)


def test_lemma24_json_shape():
    rep = necessary_conditions_report(build_family("su", 2, 1), seed=9)
    d = rep.to_json_dict()
    assert d["seed"] == "9"
    assert len(d["conditions"]) == 5
    for item in d["conditions"]:
        assert {"condition", "verdict"} <= set(item)
