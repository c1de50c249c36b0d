import random

import pytest

from superdecomp.core import (
    SuperAlgebra, SuperSpace, bracket_span, center, direct_sum,
    quotient_by_central,
)
from superdecomp.exact import ONE, Scalar, vec_zero
from superdecomp.families import build_family
from superdecomp.decomp import (
    DecompositionError, classify_indices, compute_b, decompose_odd,
    module_actions, reduce_to_odd_generated, split_module, structure_report,
)


def glued_su22_q2():
    s = direct_sum(build_family("su", 2, 2), build_family("q", 2))
    emb_a, emb_b = s.meta["embeddings"]
    su22 = build_family("su", 2, 2)
    zvec = vec_zero(s.dim)
    zvec[emb_a[su22.d0 - 1]] = ONE            # 2*i1 inside su(2|2)
    for j in range(3):
        zvec[emb_b[j]] = Scalar(-2)           # -2*i1 inside q(2)
    g, _ = quotient_by_central(s, s.subspace([zvec]))
    return g


def test_reduce_u11():
    g = build_family("u", 1, 1)
    red = reduce_to_odd_generated(g)
    assert red.core_even.dim == 1
    assert red.core.dim == 3                  # Clifford-Heisenberg part
    assert red.complement.dim == 1


def test_reduce_trivial_for_odd_generated():
    red = reduce_to_odd_generated(build_family("q", 2))
    assert red.trivial


def test_reduce_direct_sum_with_even_algebra():
    from superdecomp.families import build_lie_algebra
    k = build_lie_algebra("su", 3)
    g = direct_sum(build_family("su", 2, 1), k)
    red = reduce_to_odd_generated(g)
    assert red.complement.dim == 8


def test_compute_b_examples():
    g = build_family("T_hat", "su", 2)
    assert compute_b(g).dim == 1
    assert compute_b(build_family("su", 2, 2)).dim == 0
    # the extended spin algebra: the derivation moves every odd vector
    assert compute_b(build_family("spin_h_hat", 2)).dim == 0


def test_decompose_odd_su22_two_real_copies():
    # over the reals the odd part of su(2|2) is H + iH: two isomorphic
    # 4-dimensional simple summands (the complex module is irreducible,
    # its realification is not)
    g = build_family("su", 2, 2)
    red = reduce_to_odd_generated(g)
    dec = decompose_odd(g, red.core_even, random.Random(0))
    assert dec.b.dim == 0
    assert [s.dim for s in dec.summands] == [4, 4]
    cls = classify_indices(g, dec)
    assert cls.js == [0, 1] and cls.pairing == {0: 1, 1: 0}
    # squares of each copy are central (the paired-index relation)
    z = center(g)
    for s in dec.summands:
        sq = bracket_span(g, s, s)
        assert sq.dim == 1 and z.contains_subspace(sq)


def test_decompose_odd_q2_adjoint():
    g = build_family("q", 2)
    red = reduce_to_odd_generated(g)
    dec = decompose_odd(g, red.core_even, random.Random(0))
    assert dec.b.dim == 0
    assert [s.dim for s in dec.summands] == [8]
    # absolutely simple: scalar commutant
    assert dec.certificates[0]["commutant_dim"] == 1


def test_decompose_direct_sum_two_summands():
    g = direct_sum(build_family("su", 2, 1), build_family("q", 2))
    red = reduce_to_odd_generated(g)
    dec = decompose_odd(g, red.core_even, random.Random(0))
    assert sorted(s.dim for s in dec.summands) == [4, 8]


def test_classify_that_singleton_ja():
    g = build_family("T_hat", "su", 2)
    red = reduce_to_odd_generated(g)
    dec = decompose_odd(g, red.core_even, random.Random(0))
    cls = classify_indices(g, dec)
    assert cls.js == [] and cls.ja == [0]


def test_split_module_inconclusive_cap():
    # an action with a huge commutant exhausts a tiny budget
    g = build_family("su", 2, 2)
    red = reduce_to_odd_generated(g)
    a = bracket_span(g, red.core_even, g.odd_subspace())
    actions = module_actions(g, red.core_even.basis, a.basis)
    from superdecomp.decomp import InconclusiveSplit
    with pytest.raises(InconclusiveSplit):
        split_module(actions, a.dim, random.Random(0), cap=1)


def test_structure_report_q2():
    rep = structure_report(build_family("q", 2), seed=3)
    assert rep.classification.js == [0]
    assert rep.classification.pairing == {0: 0}
    assert rep.kernel_dim == 0
    assert rep.b.dim == 0
    assert rep.center.dim == 1
    info = rep.ideals[0]
    assert info.classification[0] == "q"
    # b is zero so no queer extension flag is raised
    assert "qhat_embedding" not in info.checks["theorem42"]


def test_structure_report_that():
    rep = structure_report(build_family("T_hat", "su", 2), seed=3)
    assert rep.classification.ja == [0]
    assert rep.b.dim == 1
    info = rep.ideals[0]
    assert info.kind == "Ja"
    assert info.classification[0] == "T"
    assert info.kk_dim == 3
    assert info.checks["kk_center_trivial"]
    assert info.checks["kk_adjoint_simple"]
    assert info.checks["tangent_quotient"]
    assert info.checks["nilpotent_ideal"]
    # hat c(k) assertion ran
    assert any(a["name"].startswith("hat_c_quotient") and a["ok"]
               for a in rep.assertions)


def test_structure_report_glued():
    g = glued_su22_q2()
    rep = structure_report(g, seed=3)
    assert len(rep.ideals) == 2
    kinds = sorted(info.classification[0] for info in rep.ideals)
    assert kinds == ["q", "su(n|n)"]
    assert rep.kernel_dim == 1
    assert rep.center.dim == 1
    assert rep.b.dim == 0
    # the kernel-centrality assertion was recorded
    assert any(a["name"] == "kernel_component_central" and a["ok"]
               for a in rep.assertions)


def test_structure_report_qhat_embedding():
    rep = structure_report(build_family("q_hat", 2), seed=3)
    info = rep.ideals[0]
    assert info.classification[0] == "q"
    cert = info.checks["theorem42"]["qhat_embedding"]
    assert cert["verified"]
    assert cert["parameter"] == 2
    assert cert["dims_match"] and cert["fingerprint_match"]


def test_structure_report_rejects_even_only():
    from superdecomp.families import build_lie_algebra
    with pytest.raises(DecompositionError):
        structure_report(build_lie_algebra("su", 2), seed=0)


def test_structure_report_rejects_odd_center():
    # abelian (1|1): the center has an odd component
    g = SuperAlgebra(SuperSpace.make(1, 1), {})
    with pytest.raises(DecompositionError):
        structure_report(g, seed=0)


def test_grsplit_su21_plus_that():
    g = direct_sum(build_family("su", 2, 1), build_family("T_hat", "su", 2))
    rep = structure_report(g, seed=3)
    zba_dim, b_r_dim, gr_dim = rep.gr
    assert zba_dim == 0 and b_r_dim == 1
    assert gr_dim == g.dim                    # g_r = [g, g] + b_r = g
    from superdecomp.decomp import gr_split
    zba, b_r, g_r = gr_split(g, seed=3)
    assert (zba.dim, b_r.dim, g_r.dim) == (0, 1, g.dim)


def test_grsplit_b_zero_gives_whole_algebra():
    # perfect input: g_r = [g, g] = g
    from superdecomp.decomp import gr_split
    g = build_family("q", 2)
    zba, b_r, g_r = gr_split(g)
    assert zba.dim == 0 and b_r.dim == 0 and g_r.dim == g.dim


def test_report_json_deterministic():
    import json
    g = build_family("T_hat", "su", 2)
    a = json.dumps(structure_report(g, seed=11).to_json_dict(), sort_keys=True)
    b = json.dumps(structure_report(g, seed=11).to_json_dict(), sort_keys=True)
    assert a == b
