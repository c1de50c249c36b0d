"""Decomposition of reductive Lie superalgebras into ideals.

Pipeline: split off an even complement so the rest is generated by its odd
part; compute the subspace of odd vectors commuting with the (core) even
part; decompose the complementary odd module into simple summands by exact
commutant splitting; classify summands into the self-interacting family
(paired, ideals g(j)) and the residue family (ideals c(k) built with the
commuting odd vectors); verify every side relation on the way and emit a
report whose summation map back into the algebra has certified central
kernel.

Everything is computed in the coordinates of the input algebra; the
odd-generated core is an ideal, so all brackets can be taken upstairs.
All verdicts are exact; a splitting search that hits its iteration cap
returns "inconclusive" rather than guessing.
"""

from fractions import Fraction
import random

from .exact import (
    Echelon, LinSolver, Matrix, Scalar, ZERO, ONE,
    char_poly_and_rational_split, kernel, peval_matrix, pmul,
    random_rational, solve, vec_add, vec_is_zero, vec_scale, vec_zero,
)
from .core import (
    Subspace, SuperAlgebraError, bracket_span, center, centralizer, derived,
    is_ideal, module_commutant, quotient_by_central, subalgebra_from_subspace,
)
from .families import build_family, build_tangent_from_algebra
from . import unitar

SPLIT_CAP = 64


class DecompositionError(SuperAlgebraError):
    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class InconclusiveSplit(DecompositionError):
    def __init__(self, partial):
        super().__init__("module splitting inconclusive after iteration cap")
        self.partial = partial


# ---------------------------------------------------------------------------
# reduction to the odd-generated core
# ---------------------------------------------------------------------------

class Reduction:
    """g = core + complement with the complement commuting with [g1, g1]."""

    def __init__(self, core_even, core, complement):
        self.core_even = core_even      # [g1, g1]
        self.core = core                # [g1, g1] + g1, an ideal
        self.complement = complement    # even subalgebra, [c, core_even] = 0

    @property
    def trivial(self):
        return self.complement.dim == 0


def reduce_to_odd_generated(g):
    """Split g into the ideal generated by the odd part and an even
    complement commuting with [g1, g1]; raises when no such complement
    exists (the input is then outside the pipeline's scope)."""
    g1 = g.odd_subspace()
    h0 = bracket_span(g, g1, g1)
    core = h0.sum(g1)
    if h0.dim == g.d0:
        return Reduction(h0, core, g.subspace([]))
    z = centralizer(g, h0, g.even_subspace())
    ech = Echelon(g.dim)
    for v in h0.basis:
        ech.add_list(v)
    cand = []
    dz = bracket_span(g, z, z)
    for v in list(dz.basis) + list(z.basis):
        if ech.add_list(v):
            cand.append(v)
    comp = Subspace(g.dim, cand, g.space)
    if comp.dim + h0.dim != g.d0:
        raise DecompositionError(
            "no even complement commuting with [g1, g1] was found",
            evidence={"h0_dim": h0.dim, "centralizer_dim": z.dim})
    for u in comp.basis:
        for w in comp.basis:
            if not comp.contains(g.bracket(u, w)):
                raise DecompositionError(
                    "even complement is not a subalgebra", evidence=(u, w))
    return Reduction(h0, core, comp)


def compute_b(g, even=None, check_central_squares=True):
    """Odd vectors commuting with the even part (all of it by default).

    When the algebra is generated by its odd part, the squares of these
    vectors land in the center; the assertion is checked whenever the
    caller passes the generating even part.
    """
    target = even if even is not None else g.even_subspace()
    b = centralizer(g, target, g.odd_subspace())
    if check_central_squares and even is not None:
        z = center(g)
        for u in b.basis:
            for w in b.basis:
                v = g.bracket(u, w)
                if not vec_is_zero(v) and not z.contains(v):
                    raise DecompositionError("[b, b] is not central",
                                             evidence=(u, w))
    return b


# ---------------------------------------------------------------------------
# simple-module splitting (exact commutant MeatAxe)
# ---------------------------------------------------------------------------

def module_actions(g, generators, basis_vecs):
    """Action matrices of ambient generators on span(basis_vecs)."""
    if not basis_vecs:
        return []
    solver = LinSolver(basis_vecs, g.dim)
    mats = []
    for x in generators:
        m = Matrix(len(basis_vecs), len(basis_vecs))
        for j, v in enumerate(basis_vecs):
            w = g.bracket(x, v)
            coords = solver.coords(w)
            if coords is None:
                raise DecompositionError("subspace is not invariant")
            for i, cval in enumerate(coords):
                m.data[i][j] = cval
        mats.append(m)
    return mats


def spin_up(actions, v, dim):
    """Smallest action-invariant subspace containing v (as an Echelon)."""
    ech = Echelon(dim)
    vecs = []
    if ech.add_list(v):
        vecs.append(v)
    idx = 0
    while idx < len(vecs):
        w = vecs[idx]
        idx += 1
        for m in actions:
            u = m.mul_vec(w)
            if ech.add_list(u):
                vecs.append(u)
    return span_from(vecs, dim)


def span_from(vecs, dim):
    return Subspace(dim, vecs)


def _restrict_actions(actions, basis, dim):
    solver = LinSolver(basis, dim)
    out = []
    for m in actions:
        r = Matrix(len(basis), len(basis))
        for j, v in enumerate(basis):
            coords = solver.coords(m.mul_vec(v))
            if coords is None:
                raise DecompositionError("splitting produced a non-invariant piece")
            for i, cval in enumerate(coords):
                r.data[i][j] = cval
        out.append(r)
    return out


def _lift(basis, vecs):
    out = []
    for v in vecs:
        w = vec_zero(len(basis[0]))
        for c, bv in zip(v, basis):
            if not c.is_zero():
                w = vec_add(w, vec_scale(c, bv))
        out.append(w)
    return out


def _invariant_complement(actions, wbasis, dim):
    """Invariant complement of an invariant subspace, by solving for an
    equivariant section of the quotient; None when none exists (the module
    is then not semisimple)."""
    ech = Echelon(dim)
    for v in wbasis:
        ech.add_list(v)
    kept = []
    for i in range(dim):
        e = vec_zero(dim)
        e[i] = ONE
        if ech.add_list(e):
            kept.append(i)
    q = len(kept)
    cols = list(wbasis) + [_unit(dim, i) for i in kept]
    solver = LinSolver(cols, dim)

    def project(v):
        return solver.coords(v)[len(wbasis):]

    qactions = []
    for m in actions:
        qm = Matrix(q, q)
        for j, i in enumerate(kept):
            col = project(m.mul_vec(_unit(dim, i)))
            for r in range(q):
                qm.data[r][j] = col[r]
        qactions.append(qm)
    # unknowns: section s as dim x q matrix; pi s = id, M s = s Mq
    nvar = dim * q

    def var(r, c):
        return r * q + c

    rows = []
    rhs = []
    for r in range(q):
        for c in range(q):
            row = {}
            # pi(s e_c)_r: pi is linear; express via project of unit vectors
            # build pi as a matrix once
            rows.append((r, c))
    pi = Matrix(q, dim)
    for i in range(dim):
        col = project(_unit(dim, i))
        for r in range(q):
            pi.data[r][i] = col[r]
    eqrows = []
    eqrhs = []
    for r in range(q):
        for c in range(q):
            row = vec_zero(nvar)
            for i in range(dim):
                if not pi.data[r][i].is_zero():
                    row[var(i, c)] = pi.data[r][i]
            eqrows.append(row)
            eqrhs.append(ONE if r == c else ZERO)
    for m, qm in zip(actions, qactions):
        for r in range(dim):
            for c in range(q):
                row = vec_zero(nvar)
                for i in range(dim):
                    if not m.data[r][i].is_zero():
                        row[var(i, c)] = row[var(i, c)] + m.data[r][i]
                for i in range(q):
                    if not qm.data[i][c].is_zero():
                        row[var(r, i)] = row[var(r, i)] - qm.data[i][c]
                eqrows.append(row)
                eqrhs.append(ZERO)
    res = solve(Matrix.from_rows(eqrows), eqrhs)
    if res is None:
        return None
    s = res[0]
    comp = []
    for c in range(q):
        v = vec_zero(dim)
        for r in range(dim):
            if not s[var(r, c)].is_zero():
                v[r] = s[var(r, c)]
        comp.append(v)
    return comp


def _unit(dim, i):
    v = vec_zero(dim)
    v[i] = ONE
    return v


class SplitBudget:
    def __init__(self, cap):
        self.left = cap


def split_module(actions, dim, rng, cap=SPLIT_CAP):
    """Decompose a semisimple module into simple pieces, exactly.

    Returns a list of (basis, certificate) pairs; the bases are lists of
    coordinate vectors.  Certificates record the commutant dimension, how
    many commutant candidates were tested without finding a zero divisor,
    and that spin-up from every basis vector fills the piece.
    """
    budget = SplitBudget(cap)
    return _split_rec(actions, [ _unit(dim, i) for i in range(dim)], dim, rng, budget)


def _split_by_invariant_subspace(actions, basis, ambient_dim, rng, budget, wbasis):
    dim = len(basis)
    sub_actions = _restrict_actions(actions, basis, ambient_dim)
    comp = _invariant_complement(sub_actions, wbasis, dim)
    if comp is None:
        raise DecompositionError("module is not semisimple",
                                 evidence={"invariant_dim": len(wbasis)})
    out = []
    out.extend(_split_rec(actions, _lift(basis, wbasis), ambient_dim, rng, budget))
    out.extend(_split_rec(actions, _lift(basis, comp), ambient_dim, rng, budget))
    return out


def _split_rec(actions, basis, ambient_dim, rng, budget):
    dim = len(basis)
    if dim == 0:
        return []
    sub_actions = _restrict_actions(actions, basis, ambient_dim)
    comm = module_commutant(sub_actions, dim)
    tested = 0
    for theta in _theta_candidates(comm, dim, rng):
        if budget.left <= 0:
            raise InconclusiveSplit([(basis, {"status": "cap"})])
        budget.left -= 1
        tested += 1
        if theta.is_zero():
            continue
        _, factors, _ = char_poly_and_rational_split(theta)
        pieces = []
        for f, e in factors:
            p = [Fraction(1)]
            for _ in range(e):
                p = pmul(p, f)
            pieces.append(p)
        if len(pieces) < 2:
            # a nonzero singular commutant element is a zero divisor: its
            # kernel is a proper invariant subspace even without a coprime
            # factor split
            ker = kernel(theta)
            if 0 < len(ker) < dim:
                return _split_by_invariant_subspace(
                    actions, basis, ambient_dim, rng, budget, ker)
            continue
        parts = []
        total = 0
        for p in pieces:
            ker = kernel(peval_matrix(p, theta))
            total += len(ker)
            parts.append(ker)
        if total != dim:
            raise DecompositionError("primary decomposition dimensions do not add up")
        out = []
        for ker in parts:
            out.extend(_split_rec(actions, _lift(basis, ker), ambient_dim,
                                  rng, budget))
        return out
    # no splitting element found: certify simplicity through spin-up
    for i in range(dim):
        w = spin_up(sub_actions, _unit(dim, i), dim)
        if w.dim < dim:
            return _split_by_invariant_subspace(
                actions, basis, ambient_dim, rng, budget, w.basis)
    cert = {
        "commutant_dim": len(comm),
        "candidates_tested": tested,
        "zero_divisor_found": False,
        "spin_up": "every basis vector generates the module",
    }
    return [(basis, cert)]


def _theta_candidates(comm, dim, rng):
    """Commutant basis first, then a few seeded rational combinations.

    The basis catches every non-isotypic split (central idempotents of the
    commutant reduce to elements with distinct rational eigenvalues under
    row reduction) and spin-up catches isotypic multiplicity, so the random
    combinations are only a cheap extra chance for an early split.
    """
    for m in comm:
        yield m
    if len(comm) <= 1:
        return
    for _ in range(8):
        acc = Matrix(dim, dim)
        for m in comm:
            c = random_rational(rng, 2, 1)
            if c:
                acc = acc + m.scale(Scalar(c))
        yield acc


# ---------------------------------------------------------------------------
# the odd-module decomposition
# ---------------------------------------------------------------------------

class ModuleDecomposition:
    def __init__(self, b, a, summands, certificates):
        self.b = b
        self.a = a
        self.summands = summands          # list of Subspace, canonical order
        self.certificates = certificates


def decompose_odd(g, core_even, rng, cap=SPLIT_CAP):
    """b + simple summands of the complementary odd module.

    core_even must be the generating even part; the complement a of b is
    computed as [even, odd] and the direct-sum check against b doubles as
    a semisimplicity test.
    """
    b = centralizer(g, core_even, g.odd_subspace())
    g1 = g.odd_subspace()
    a = bracket_span(g, core_even, g1)
    if b.intersection(a).dim != 0 or b.sum(a).dim != g1.dim:
        raise DecompositionError(
            "odd part is not the direct sum of b and [g0, g1]; module not semisimple",
            evidence={"b_dim": b.dim, "a_dim": a.dim, "d1": g1.dim})
    if a.dim == 0:
        return ModuleDecomposition(b, a, [], [])
    actions = module_actions(g, core_even.basis, a.basis)
    parts = split_module(actions, a.dim, rng, cap)
    summands = []
    for vecs, cert in parts:
        summands.append((Subspace(g.dim, _lift(a.basis, vecs), g.space), cert))
    summands.sort(key=lambda sc: sc[0].sort_key())
    return ModuleDecomposition(b, a, [s for s, _ in summands],
                               [c for _, c in summands])


# ---------------------------------------------------------------------------
# index classification and ideals
# ---------------------------------------------------------------------------

class IndexClassification:
    def __init__(self, js, ja, pairing):
        self.js = js                      # sorted list
        self.ja = ja
        self.pairing = pairing            # involution on js


def classify_indices(g, dec, require_eq39=True):
    """J_s membership via [[a_k, a_j], a_k] = a_k, with the unique partner;
    J_a is the complement and must satisfy [[b, a_k], a_k] = a_k when the
    algebra is generated by its odd part."""
    summands = dec.summands
    n = len(summands)
    pairing = {}
    js = []
    for k in range(n):
        ak = summands[k]
        partners = []
        for j in range(n):
            w = bracket_span(g, ak, summands[j])
            image = bracket_span(g, w, ak)
            if image == ak:
                partners.append(j)
        if partners:
            if len(partners) != 1:
                raise DecompositionError(
                    "partner index is not unique (contradicts pairing uniqueness)",
                    evidence={"k": k, "partners": partners})
            js.append(k)
            pairing[k] = partners[0]
    ja = [k for k in range(n) if k not in pairing]
    for k in js:
        kp = pairing[k]
        if kp not in pairing or pairing[kp] != k:
            raise DecompositionError("pairing is not an involution",
                                     evidence={"k": k, "partner": kp})
    z = center(g)
    for k in ja:
        ak = summands[k]
        if require_eq39:
            w = bracket_span(g, dec.b, ak)
            image = bracket_span(g, w, ak)
            if image != ak:
                raise DecompositionError(
                    "[[b, a_k], a_k] = a_k fails for a residue index",
                    evidence={"k": k, "image_dim": image.dim})
        sq = bracket_span(g, ak, ak)
        for v in sq.basis:
            if not z.contains(v):
                raise DecompositionError(
                    "[a_k, a_k] is not central for a residue index",
                    evidence={"k": k})
    # non-interacting pairs commute exactly
    for k in range(n):
        for s in range(n):
            if s == k:
                continue
            if k in pairing and pairing[k] == s:
                continue
            if k in ja or (k in pairing and s != pairing[k]):
                w = bracket_span(g, summands[k], summands[s])
                if w.dim != 0:
                    raise DecompositionError(
                        "summands expected to commute do not",
                        evidence={"k": k, "s": s})
    return IndexClassification(js, ja, pairing)


class IdealInfo:
    def __init__(self, kind, indices, span, algebra, vecs, fingerprint,
                 classification, checks, kk_dim=None):
        self.kind = kind                  # "Js" | "Ja"
        self.indices = indices            # (j, j') or (k,)
        self.span = span
        self.algebra = algebra
        self.vecs = vecs
        self.fingerprint = fingerprint
        self.classification = classification
        self.checks = checks
        self.kk_dim = kk_dim


def _center_of_subalgebra(g, span):
    return centralizer(g, span, span)


def build_g_ideal(g, dec, j, jp):
    """a_j + a_j' + all mutual brackets; verified ideal with the simple
    adjoint quotient checks."""
    aj, ajp = dec.summands[j], dec.summands[jp]
    span = aj.sum(ajp)
    for u, w in ((aj, aj), (aj, ajp), (ajp, ajp)):
        span = span.sum(bracket_span(g, u, w))
    if not is_ideal(g, span):
        raise DecompositionError("constructed subspace is not an ideal",
                                 evidence={"j": j})
    alg, vecs = subalgebra_from_subspace(g, span)
    checks = {}
    zg = center(g)
    zi = _center_of_subalgebra(g, span)
    checks["center_inside_ambient_center"] = all(zg.contains(v) for v in zi.basis)
    if not checks["center_inside_ambient_center"]:
        raise DecompositionError("z(g(j)) is not contained in z(g)",
                                 evidence={"j": j})
    # a_j stays simple over the ideal's own even part
    ideal_even, _ = span.parity_components(g.space.parities)
    acts = module_actions(g, ideal_even.basis, aj.basis)
    parts = split_module(acts, aj.dim, random.Random(0))
    checks["a_j_simple_over_ideal"] = len(parts) == 1
    if not checks["a_j_simple_over_ideal"]:
        raise DecompositionError("a_j fails to stay simple over g(j)",
                                 evidence={"j": j})
    # simple adjoint quotient: trivial center and perfectness
    quo, _ = quotient_by_central(alg, alg.subspace(
        [_coords_in(vecs, g, v) for v in zi.basis]))
    checks["quotient_center_trivial"] = center(quo).dim == 0
    checks["quotient_perfect"] = derived(quo).dim == quo.dim
    if not (checks["quotient_center_trivial"] and checks["quotient_perfect"]):
        raise DecompositionError("adjoint quotient of g(j) is not simple-like",
                                 evidence={"j": j})
    return span, alg, vecs, checks


def _coords_in(vecs, g, v):
    solver = LinSolver(vecs, g.dim)
    coords = solver.coords(v)
    if coords is None:
        raise DecompositionError("vector leaves the subalgebra span")
    return coords


def build_c_ideal(g, dec, k, rng):
    """a_k + [a_k, a_k] + [b, a_k] with the tangent-quotient certificate."""
    ak = dec.summands[k]
    kk = bracket_span(g, dec.b, ak)
    span = ak.sum(bracket_span(g, ak, ak)).sum(kk)
    if not is_ideal(g, span):
        raise DecompositionError("residue subspace is not an ideal",
                                 evidence={"k": k})
    alg, vecs = subalgebra_from_subspace(g, span)
    checks = {}
    if kk.dim == 0:
        raise DecompositionError("[b, a_k] vanishes for a residue index",
                                 evidence={"k": k})
    kk_alg, kk_vecs = subalgebra_from_subspace(g, kk)
    checks["kk_center_trivial"] = _center_of_subalgebra(g, kk).dim == 0
    acts = module_actions(g, kk.basis, kk.basis)
    parts = split_module(acts, kk.dim, rng)
    checks["kk_adjoint_simple"] = len(parts) == 1
    checks["kk_adjoint_commutant_dim"] = parts[0][1].get("commutant_dim") if parts else None
    if not (checks["kk_center_trivial"] and checks["kk_adjoint_simple"]):
        raise DecompositionError("[b, a_k] is not a simple Lie algebra",
                                 evidence={"k": k})
    # nilpotent ideal a_k + [a_k, a_k]
    nil = ak.sum(bracket_span(g, ak, ak))
    sq = bracket_span(g, nil, nil)
    z = center(g)
    checks["nilpotent_ideal"] = all(z.contains(v) for v in sq.basis)
    # quotient by the center is the tangent algebra over kk
    checks["tangent_quotient"] = _verify_tangent_quotient(g, dec, k, kk, kk_alg,
                                                          kk_vecs, ak)
    if not checks["tangent_quotient"]:
        raise DecompositionError("c(k)/z(c(k)) is not the expected tangent algebra",
                                 evidence={"k": k})
    return span, alg, vecs, checks, kk


def _pick_b0(g, b, ak):
    for u in b.basis:
        if bracket_span(g, Subspace(g.dim, [u], g.space), ak).dim != 0:
            return u
    combo = vec_zero(g.dim)
    for u in b.basis:
        combo = vec_add(combo, u)
        if bracket_span(g, Subspace(g.dim, [combo], g.space), ak).dim != 0:
            return combo
    raise DecompositionError("no element of b acts on a_k")


def _verify_tangent_quotient(g, dec, k, kk, kk_alg, kk_vecs, ak,
                             b0=None, hat=False):
    """Structure-constant isomorphism of c(k)/z with T kk (or hat c(k)/z
    with That kk), built on the canonical basis through ad b0."""
    b0 = b0 if b0 is not None else _pick_b0(g, dec.b, ak)
    tk = build_tangent_from_algebra(kk_alg, "T_hat" if hat else "T")
    d = kk_alg.dim
    solver_k = LinSolver(kk_vecs, g.dim)
    sources = list(kk_vecs)
    images = []
    for i in range(d):
        images.append(_unit(tk.dim, i))
    for u in ak.basis:
        w = g.bracket(b0, u)
        coords = solver_k.coords(w)
        if coords is None:
            return False
        img = vec_zero(tk.dim)
        for i, cval in enumerate(coords):
            img[d + i] = cval
        sources.append(u)
        images.append(img)
    if hat:
        sources.append(b0)
        images.append(_unit(tk.dim, 2 * d))
    # ad b0 must be bijective from a_k onto kk
    img_ech = Echelon(tk.dim)
    count = 0
    for img in images:
        if img_ech.add_list(img):
            count += 1
    if count != len(images):
        return False
    # central directions to quotient out
    zvecs = list(bracket_span(g, ak, ak).basis)
    if hat:
        bb = g.bracket(b0, b0)
        if not vec_is_zero(bb):
            zvecs.append(bb)
    zk = []
    ech = Echelon(g.dim)
    for v in zvecs:
        if ech.add_list(v):
            zk.append(v)
    for v in sources:
        if not ech.add_list(v):
            return False
    expand = LinSolver(zk + sources, g.dim)
    nz = len(zk)
    for p in range(len(sources)):
        for q in range(p, len(sources)):
            w = g.bracket(sources[p], sources[q])
            coords = expand.coords(w)
            if coords is None:
                return False
            want = vec_zero(tk.dim)
            for r, cval in enumerate(coords[nz:]):
                if not cval.is_zero():
                    want = vec_add(want, vec_scale(cval, images[r]))
            got = tk.bracket(images[p], images[q])
            if got != want:
                return False
    return True


def _indep(vecs, dim):
    ech = Echelon(dim)
    out = []
    for v in vecs:
        if ech.add_list(v):
            out.append(v)
    return out


def build_hat_c(g, dec, k, kk, kk_alg, kk_vecs):
    """hat c(k) = c(k) + K b0 + K [b0, b0]; subalgebra whose central
    quotient is the extended tangent algebra (semisimple by the
    isomorphism certificate)."""
    ak = dec.summands[k]
    b0 = _pick_b0(g, dec.b, ak)
    span = ak.sum(bracket_span(g, ak, ak)).sum(kk)
    span = span.sum(Subspace(g.dim, [b0], g.space))
    bb = g.bracket(b0, b0)
    if not vec_is_zero(bb):
        span = span.sum(Subspace(g.dim, [bb], g.space))
    alg, vecs = subalgebra_from_subspace(g, span)   # raises if not closed
    ok = _verify_tangent_quotient(g, dec, k, kk, kk_alg, kk_vecs, ak,
                                  b0=b0, hat=True)
    return span, alg, ok


# ---------------------------------------------------------------------------
# theorem flags and the full report
# ---------------------------------------------------------------------------

def _direct_summand_flag(g, span):
    comp = centralizer(g, span, g.full_subspace())
    return (comp.dim + span.dim == g.dim
            and comp.intersection(span).dim == 0)


def qhat_embedding_certificate(g, dec, k_index, ideal):
    """Subalgebra ideal + K b0 + K [b0, b0] matching the extended queer
    family: closure, dimensions, fingerprint, and the action certificates
    (ad b0 kills the ideal's even part and squares to zero)."""
    aj = dec.summands[k_index]
    b0 = _pick_b0(g, dec.b, aj)
    span = ideal.span
    span = span.sum(Subspace(g.dim, [b0], g.space))
    bb = g.bracket(b0, b0)
    if not vec_is_zero(bb):
        span = span.sum(Subspace(g.dim, [bb], g.space))
    try:
        alg, _ = subalgebra_from_subspace(g, span)
    except SuperAlgebraError:
        return {"verified": False, "reason": "not closed"}
    n = None
    for _, params in ideal.classification[1]:
        n = params[0]
    if n is None:
        return {"verified": False, "reason": "no queer parameter"}
    model = build_family("q_hat", n)
    cert = {
        "parameter": n,
        "dims_match": (alg.d0, alg.d1) == (model.d0, model.d1),
        "fingerprint_match": unitar.fingerprint(alg) == unitar.fingerprint(model),
        "hyperplane_ideal": is_ideal(alg, _map_span(ideal.span, g, span, alg)),
    }
    # ad b0 annihilates the ideal's even part and has square zero on it
    even_part = Subspace(g.dim, [v for v in ideal.span.basis
                                 if all(v[i].is_zero() for i in g.space.odd_indices())],
                         g.space)
    cert["kills_ideal_even_part"] = bracket_span(
        g, Subspace(g.dim, [b0], g.space), even_part).dim == 0
    sq_ok = True
    for u in ideal.span.basis:
        if not vec_is_zero(g.bracket(bb, u)):
            sq_ok = False
    cert["square_zero_on_ideal"] = sq_ok
    cert["verified"] = all(v is True for key, v in cert.items()
                           if key not in ("parameter",))
    return cert


def _map_span(sub, g, host_span, host_alg):
    """Express an ambient subspace in the coordinates of an extracted
    subalgebra (host)."""
    _, vecs = subalgebra_from_subspace(g, host_span)
    solver = LinSolver(vecs, g.dim)
    coords = []
    for v in sub.basis:
        c = solver.coords(v)
        if c is None:
            raise DecompositionError("subspace does not lie in the host")
        coords.append(c)
    return Subspace(host_alg.dim, coords, host_alg.space)


class DecompositionReport:
    def __init__(self, g, seed):
        self.g = g
        self.seed = seed
        self.reduction = None
        self.b = None
        self.center = None
        self.decomposition = None
        self.classification = None
        self.ideals = []                  # IdealInfo
        self.kernel_dim = None
        self.kernel_basis = None
        self.assertions = []
        self.gr = None                    # (z_b_a, b_r, g_r) dims
        self.hat_c = {}

    def record(self, name, ok, detail=None):
        self.assertions.append({"name": name, "ok": bool(ok),
                                **({"detail": str(detail)} if detail else {})})
        if not ok:
            raise DecompositionError("assertion failed: %s" % name,
                                     evidence=detail)

    def summand_entries(self):
        cls = self.classification
        dec = self.decomposition
        entries = []
        by_index = {}
        for info in self.ideals:
            for idx in info.indices:
                by_index[idx] = info
        for idx, summand in enumerate(dec.summands):
            info = by_index[idx]
            kind = info.kind
            pair = cls.pairing.get(idx, idx) if kind == "Js" else None
            entries.append({
                "dim": summand.dim,
                "kind": kind,
                "pair": pair,
                "fingerprint": info.fingerprint,
                "classification": info.classification[0],
                "theorem42_flags": info.checks.get("theorem42", {}),
            })
        return entries

    def to_json_dict(self):
        from . import __version__
        entries = []
        for e in self.summand_entries():
            flags = {}
            for key, val in e["theorem42_flags"].items():
                if isinstance(val, dict):
                    flags[key] = {k: (str(v) if not isinstance(v, bool) else v)
                                  for k, v in val.items()}
                else:
                    flags[key] = val
            entries.append({
                "dim": str(e["dim"]),
                "kind": e["kind"],
                "pair": str(e["pair"]) if e["pair"] is not None else None,
                "fingerprint": e["fingerprint"].to_json_dict(),
                "classification": e["classification"],
                "theorem42_flags": flags,
            })
        return {
            "version": __version__,
            "seed": str(self.seed),
            "input_dims": [str(self.g.d0), str(self.g.d1)],
            "even_complement_dim": str(self.reduction.complement.dim),
            "b_dim": str(self.b.dim),
            "center_dim": str(self.center.dim),
            "summands": entries,
            "kernel_dim": str(self.kernel_dim),
            "z_b_a_dim": str(self.gr[0]),
            "b_r_dim": str(self.gr[1]),
            "assertions": self.assertions,
        }


def structure_report(g, seed=0, cap=SPLIT_CAP):
    """Run the whole pipeline and certify the decomposition of [g, g]
    into the center and the constructed ideals, with central summation
    kernel."""
    rng = random.Random(seed)
    report = DecompositionReport(g, seed)
    if g.d1 == 0:
        raise DecompositionError("odd-generation precondition: the odd part is zero")
    zg = center(g)
    zev, zodd = zg.parity_components(g.space.parities)
    if zodd.dim != 0:
        raise DecompositionError(
            "central odd vectors are rejected; split them off first",
            evidence={"z_odd_dim": zodd.dim})
    red = reduce_to_odd_generated(g)
    report.reduction = red
    core_even = red.core_even
    # the center of the core (all pipeline statements refer to the core)
    zc = centralizer(g, red.core, red.core)
    czev, czodd = zc.parity_components(g.space.parities)
    if czodd.dim != 0:
        raise DecompositionError(
            "odd central vectors in the odd-generated core are rejected",
            evidence={"z_odd_dim": czodd.dim})
    report.center = zc
    dec = decompose_odd(g, core_even, rng, cap)
    report.decomposition = dec
    report.b = dec.b
    report.record("b_squares_central",
                  all(zc.contains(g.bracket(u, w))
                      for u in dec.b.basis for w in dec.b.basis))
    cls = classify_indices(g, dec)
    report.classification = cls
    seen = set()
    for j in cls.js:
        if j in seen:
            continue
        jp = cls.pairing[j]
        seen.add(j)
        seen.add(jp)
        span, alg, vecs, checks = build_g_ideal(g, dec, j, jp)
        fp = unitar.fingerprint(alg)
        classification = unitar.classify_fingerprint(alg)
        flags = {}
        tag = classification[0]
        if tag in ("su(n|m)", "c"):
            flags["direct_summand"] = _direct_summand_flag(g, span)
            report.record("theorem42a_direct_summand_%d" % j, flags["direct_summand"])
        if tag == "su(n|n)":
            flags["b_annihilates_ideal"] = bracket_span(g, dec.b, span).dim == 0
            report.record("theorem42b_b_annihilates_%d" % j,
                          flags["b_annihilates_ideal"])
        info = IdealInfo("Js", (j, jp), span, alg, vecs, fp, classification, checks)
        if tag == "q" and bracket_span(g, dec.b, dec.summands[j]).dim != 0:
            cert = qhat_embedding_certificate(g, dec, j, info)
            flags["qhat_embedding"] = cert
            report.record("theorem42c_qhat_embedding_%d" % j, cert["verified"])
        info.checks["theorem42"] = flags
        report.ideals.append(info)
    for k in cls.ja:
        span, alg, vecs, checks, kk = build_c_ideal(g, dec, k, rng)
        fp = unitar.fingerprint(alg)
        classification = unitar.classify_fingerprint(alg)
        info = IdealInfo("Ja", (k,), span, alg, vecs, fp, classification,
                         checks, kk_dim=kk.dim)
        info.checks["theorem42"] = {}
        report.ideals.append(info)
        kk_alg, kk_vecs = subalgebra_from_subspace(g, kk)
        hspan, halg, hok = build_hat_c(g, dec, k, kk, kk_alg, kk_vecs)
        report.record("hat_c_quotient_is_extended_tangent_%d" % k, hok)
        report.hat_c[k] = (hspan, halg)
    # theorem: [core, core] = z(core) + sum of ideals, as subspaces
    dcore = _derived_of_span(g, red.core)
    total = Subspace(g.dim, list(zc.basis), g.space)
    for info in report.ideals:
        total = total.sum(info.span)
    report.record("structure_sum_matches_derived", total == dcore)
    # vector-space splitting core = [core, core] + b
    inter = dcore.intersection(dec.b)
    report.record("core_splits_as_derived_plus_b",
                  inter.dim == 0 and dcore.sum(dec.b).dim == red.core.dim)
    # summation map kernel
    columns = []
    owners = []
    for info in report.ideals:
        for v in info.span.basis:
            columns.append(v)
            owners.append(info)
    if columns:
        mat = Matrix(g.dim, len(columns))
        for c, v in enumerate(columns):
            for r in range(g.dim):
                mat.data[r][c] = v[r]
        ker = kernel(mat)
    else:
        ker = []
    report.kernel_dim = len(ker)
    report.kernel_basis = ker
    for kv in ker:
        pos = 0
        for info in report.ideals:
            comp = vec_zero(g.dim)
            for v in info.span.basis:
                cval = kv[pos]
                pos += 1
                if not cval.is_zero():
                    comp = vec_add(comp, vec_scale(cval, v))
            if vec_is_zero(comp):
                continue
            central = all(vec_is_zero(g.bracket(comp, w)) for w in info.span.basis)
            report.record("kernel_component_central", central,
                          detail={"ideal": info.indices})
    # the splitting by the centraliser of a inside b
    zba = centralizer(g, dec.a, dec.b)
    b_r_dim = dec.b.dim - zba.dim
    gr = dcore.sum(_complement_in(g, zba, dec.b))
    report.record("z_b_a_central_mod_even_center",
                  all(zc.contains(g.bracket(u, w))
                      for u in zba.basis for w in dec.b.basis))
    inter2 = gr.intersection(zba)
    report.record("gr_split",
                  all(zc.contains(v) for v in inter2.basis)
                  and gr.sum(zba).dim == red.core.dim)
    report.gr = (zba.dim, b_r_dim, gr.dim)
    return report


def gr_split(g, seed=0, cap=SPLIT_CAP):
    """(z_b(a), b_r, g_r) of the splitting lemma: the centraliser of a in b,
    a fixed echelon complement, and the subalgebra [core, core] + b_r.

    Asserts exactly that z_b(a) brackets into the even center (so its image
    in the central quotient is a central ideal) and that g_r and z_b(a)
    split the odd-generated core up to that center.
    """
    rng = random.Random(seed)
    red = reduce_to_odd_generated(g)
    dec = decompose_odd(g, red.core_even, rng, cap)
    zc = centralizer(g, red.core, red.core)
    zba = centralizer(g, dec.a, dec.b)
    b_r = _complement_in(g, zba, dec.b)
    dcore = _derived_of_span(g, red.core)
    g_r = dcore.sum(b_r)
    for u in zba.basis:
        for w in dec.b.basis:
            if not zc.contains(g.bracket(u, w)):
                raise DecompositionError("z_b(a) does not bracket into the center")
    inter = g_r.intersection(zba)
    if not all(zc.contains(v) for v in inter.basis) \
            or g_r.sum(zba).dim != red.core.dim:
        raise DecompositionError("core does not split along z_b(a)")
    return zba, b_r, g_r


def _derived_of_span(g, span):
    vecs = []
    for u in span.basis:
        for w in span.basis:
            v = g.bracket(u, w)
            if not vec_is_zero(v):
                vecs.append(v)
    return Subspace(g.dim, vecs, g.space)


def _complement_in(g, small, big):
    ech = Echelon(g.dim)
    for v in small.basis:
        ech.add_list(v)
    out = []
    for v in big.basis:
        if ech.add_list(v):
            out.append(v)
    return Subspace(g.dim, out, g.space)
