"""Compactness and unitarity analysis.

Certificates, not heuristics: a "no" verdict always carries an exactly
re-checkable witness (trivial even center, a nonzero odd vector with
vanishing square, a sign-conflict pair, or an infeasible exact LP over the
full candidate space); a positive-definiteness witness always re-verifies
through the Sylvester criterion.  Anything else is reported inconclusive.

The positive-form search is a cutting-plane loop over exact rational LPs:
while the Sylvester test fails with witness vector v, the valid inequality
sum_i t_i (v^T G_i v) >= 1 is added and the LP is re-solved, up to an
iteration cap.
"""

from fractions import Fraction
import random

from .exact import (
    Echelon, Matrix, Scalar, ZERO, ONE,
    feasible_point, is_positive_definite, random_rational, vec_is_zero,
    vec_zero,
)
from .core import (
    bracket_span, center, centralizer, even_action_on_even,
    even_action_on_odd, invariant_symmetric_forms, is_perfect, killing_form,
    module_commutant,
)
from . import families

WITNESS_CAP = 200


class Fingerprint:
    """Isomorphism-type summary used by the classifier and the reports.

    odd_square_dim (the dimension of span [g1, g1]) is needed on top of the
    classical invariants: the queer family and tangent extensions can agree
    on every other field (q(2) and the central extension of T su(3) share
    dims, centers, Killing rank, commutant and perfectness).
    """

    FIELDS = ("d0", "d1", "dim_z", "dim_z0", "killing_rank",
              "odd_commutant_dim", "perfect", "odd_square_dim")

    def __init__(self, d0, d1, dim_z, dim_z0, killing_rank,
                 odd_commutant_dim, perfect, odd_square_dim):
        self.d0 = d0
        self.d1 = d1
        self.dim_z = dim_z
        self.dim_z0 = dim_z0
        self.killing_rank = killing_rank
        self.odd_commutant_dim = odd_commutant_dim
        self.perfect = perfect
        self.odd_square_dim = odd_square_dim

    def as_tuple(self):
        return (self.d0, self.d1, self.dim_z, self.dim_z0,
                self.killing_rank, self.odd_commutant_dim, self.perfect,
                self.odd_square_dim)

    def __eq__(self, other):
        return isinstance(other, Fingerprint) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "Fingerprint%s" % (self.as_tuple(),)

    def to_json_dict(self):
        return {
            "d0": str(self.d0), "d1": str(self.d1),
            "dim_z": str(self.dim_z), "dim_z0": str(self.dim_z0),
            "killing_rank": str(self.killing_rank),
            "odd_commutant_dim": str(self.odd_commutant_dim),
            "perfect": bool(self.perfect),
            "odd_square_dim": str(self.odd_square_dim),
        }


def even_center_dim(g):
    return centralizer(g, g.even_subspace(), g.even_subspace()).dim


def fingerprint(g):
    _, krank = killing_form(g)
    comm = module_commutant(even_action_on_odd(g), g.d1) if g.d1 else []
    odd = g.odd_subspace()
    return Fingerprint(
        g.d0, g.d1, center(g).dim, even_center_dim(g), krank,
        len(comm), is_perfect(g), bracket_span(g, odd, odd).dim)


# family table for the classifier: built lazily, only for parameter values
# whose dimension pair matches the query
_TABLE_SPECS = None


def _table_specs(max_dim):
    global _TABLE_SPECS
    if _TABLE_SPECS is not None:
        return _TABLE_SPECS
    specs = []
    for n in range(1, 9):
        for m in range(1, n + 1):
            if n > m:
                specs.append(("su", (n, m)))
        if n >= 2:
            # su(1|1) is the 3-dim Clifford-Heisenberg algebra (spin_h(1))
            # and is listed under that name instead
            specs.append(("su", (n, n)))
    for n in range(2, 7):
        specs.append(("psu", (n,)))
    # the queer family is simple only from n = 2 on (pq(1) degenerates to
    # the tangent algebra of su(2))
    for n in range(2, 6):
        specs.append(("q", (n,)))
        specs.append(("pq", (n,)))
    for n in range(2, 7):
        specs.append(("c", (n,)))
    ktags = [("su", 2), ("su", 3), ("su", 4), ("so", 3), ("so", 5), ("sp", 2)]
    for kt in ktags:
        for tag in ("T", "T_hat", "T_tilde"):
            specs.append((tag, kt))
    for v in range(1, 13):
        specs.append(("spin_h", (v,)))
    _TABLE_SPECS = specs
    return specs


CLASSIFIER_TAGS = {"su": None, "psu": None, "q": None, "pq": None, "c": None,
                   "T": None, "T_hat": None, "T_tilde": None, "spin_h": None}


def classify_fingerprint(g, max_dim=64):
    """Match against the family fingerprint table, built from the
    constructors themselves (never hardcoded).

    Returns (tag, matches) where tag distinguishes su(n|m) n>m from
    su(n|n); "unknown" comes with the nearest dimension-compatible
    candidates.
    """
    fp = fingerprint(g)
    dims = (g.d0, g.d1)
    matches = []
    near = []
    for tag, params in _table_specs(max_dim):
        want = families.expected_dims(tag, params)
        if want != dims or sum(want) > max_dim:
            continue
        cand = families.build_family(tag, *params)
        near.append((tag, params))
        if fingerprint(cand) == fp:
            matches.append((tag, params))
    if not matches:
        return "unknown", near
    tags = set()
    for tag, params in matches:
        if tag == "su":
            tags.add("su(n|m)" if params[0] > params[1] else "su(n|n)")
        else:
            tags.add(tag)
    if tags == {"su(n|m)", "c"}:
        # the exceptional coincidence: the compact forms of A(1,0) and C(2)
        # are isomorphic; report the su name and keep both matches
        return "su(n|m)", matches
    if len(tags) > 1:
        return "unknown", matches
    return tags.pop(), matches


# ---------------------------------------------------------------------------
# invariant functionals and the positive-definiteness witness search
# ---------------------------------------------------------------------------

def invariant_functional_basis(g):
    """Basis of the annihilator of [g0, g0] inside the even dual.

    Functionals are length-d0 rational vectors; they are exactly the
    even-invariant ones since invariance for a functional means vanishing
    on brackets.
    """
    d0 = g.d0
    ech = Echelon(d0)
    for i in range(d0):
        for j in range(i, d0):
            terms = g.bracket_pair(i, j)
            row = {k: v for k, v in terms.items() if k < d0}
            if row:
                ech.add(row)
    return ech.kernel_basis()


def gram_of_functional(g, omega):
    """kappa_omega(x, y) = omega([x, y]) on the odd part."""
    d0, d1 = g.d0, g.d1
    gram = Matrix(d1, d1)
    for a in range(d1):
        for bidx in range(a, d1):
            terms = g.bracket_pair(d0 + a, d0 + bidx)
            acc = ZERO
            for k, v in terms.items():
                if k < d0 and not omega[k].is_zero():
                    acc = acc + omega[k] * v
            gram.data[a][bidx] = acc
            gram.data[bidx][a] = acc
    return gram


class Witness:
    """omega in annihilator coordinates plus its verified Gram data."""

    def __init__(self, coords, functional, gram, minors, iterations):
        self.coords = coords                # in the annihilator basis
        self.functional = functional        # length-d0 vector
        self.gram = gram
        self.minors = minors
        self.iterations = iterations

    def to_json_dict(self):
        return {
            "functional": [[str(v.re.numerator), str(v.re.denominator)]
                           for v in self.functional],
            "iterations": str(self.iterations),
            "sylvester_minors": [[str(m.numerator), str(m.denominator)]
                                 for m in self.minors],
        }


class SearchOutcome:
    """found / none / inconclusive with certificate data."""

    def __init__(self, status, witness=None, reason=None, certificate=None):
        self.status = status
        self.witness = witness
        self.reason = reason
        self.certificate = certificate

    @property
    def found(self):
        return self.status == "found"


def _sign_patterns(n, limit=3):
    """Candidate coefficient vectors: unit vectors, then sign patterns."""
    out = []
    for i in range(n):
        for s in (1, -1):
            v = [Fraction(0)] * n
            v[i] = Fraction(s)
            out.append(v)
    if n <= 6:
        for mask in range(3 ** n):
            v = []
            mm = mask
            for _ in range(n):
                v.append(Fraction((1, -1, 0)[mm % 3]))
                mm //= 3
            if any(v):
                out.append(v)
    return out


def find_posdef_in_span(grams, rng, cap=WITNESS_CAP):
    """Search t with sum t_i G_i positive definite, exactly.

    Returns SearchOutcome; "none" only with a certificate (empty span,
    one-dimensional span with an indefinite generator, or an infeasible
    exact LP made of valid cutting planes).
    """
    n = len(grams)
    if n == 0:
        return SearchOutcome("none", reason="empty solution space")
    dim = grams[0].rows
    if dim == 0:
        return SearchOutcome("found", witness=([Fraction(0)] * n, [], 0))

    def gram_at(t):
        acc = Matrix(dim, dim)
        for ti, gi in zip(t, grams):
            if ti:
                acc = acc + gi.scale(Scalar(ti))
        return acc

    tested = 0
    for t in _sign_patterns(n):
        tested += 1
        res = is_positive_definite(gram_at(t))
        if res.ok:
            return SearchOutcome("found", witness=(t, res.minors, tested))
        if tested >= cap:
            break
    if n == 1:
        # +-G_1 both failed above: no positive multiple can work
        return SearchOutcome(
            "none", reason="one-dimensional solution space with no definite generator")
    cuts = []
    t = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for it in range(cap):
        res = is_positive_definite(gram_at(t))
        if res.ok:
            return SearchOutcome("found", witness=(t, res.minors, tested + it))
        v = res.witness
        cut = [sum((v[a].re * gi.data[a][b].re * v[b].re
                    for a in range(dim) for b in range(dim)
                    if v[a] and v[b] and gi.data[a][b]), Fraction(0))
               for gi in grams]
        cuts.append(cut)
        t = feasible_point(cuts, n)
        if t is None:
            return SearchOutcome("none",
                                 reason="exact LP over valid cutting planes is infeasible",
                                 certificate={"cuts": len(cuts)})
    return SearchOutcome("inconclusive", reason="iteration cap reached")


def find_witness(g, rng=None, cap=WITNESS_CAP):
    """Even-invariant functional with positive definite kappa_omega.

    no_witness is certified: either the even center is trivial (the
    annihilator is zero) or the exact LP proves no functional in the
    annihilator works.
    """
    rng = rng or random.Random(0)
    ann = invariant_functional_basis(g)
    if not ann:
        return SearchOutcome("none", reason="center of even part is trivial")
    grams = [gram_of_functional(g, w) for w in ann]
    out = find_posdef_in_span(grams, rng, cap)
    if not out.found:
        return out
    t, minors, iters = out.witness
    functional = vec_zero(g.d0)
    for ti, w in zip(t, ann):
        if ti:
            for k in range(g.d0):
                functional[k] = functional[k] + Scalar(ti) * w[k]
    gram = gram_of_functional(g, functional)
    res = is_positive_definite(gram)
    assert res.ok, "witness failed re-verification"
    # re-check annihilation of [g0, g0]
    for i in range(g.d0):
        for j in range(i, g.d0):
            acc = ZERO
            for k, v in g.bracket_pair(i, j).items():
                if k < g.d0:
                    acc = acc + functional[k] * v
            assert acc.is_zero(), "witness functional fails invariance"
    return SearchOutcome("found",
                         witness=Witness(t, functional, gram, res.minors, iters))


# ---------------------------------------------------------------------------
# cone pointedness
# ---------------------------------------------------------------------------

class ConeCertificate:
    """pointed / not_pointed / inconclusive, always re-verifiable."""

    def __init__(self, verdict, witness=None, pair=None, note=None):
        self.verdict = verdict
        self.witness = witness
        self.pair = pair                  # (x1, x2) odd with squares cancelling
        self.note = note


def _odd_square(g, x):
    return g.bracket(x, x)


def _square_map_is_zero(g):
    for i in g.space.odd_indices():
        for j in range(i, g.dim):
            if g.bracket_pair(i, j):
                return False
    return True


def _structured_odd_candidates(g, rng, extra=40):
    """Basis vectors, pair sums/differences, then seeded small samples."""
    n = g.dim
    odd = list(g.space.odd_indices())
    for i in odd:
        yield g.basis_vector(i)
    for ai in range(len(odd)):
        for bi in range(ai + 1, len(odd)):
            for s in (ONE, Scalar(-1)):
                v = vec_zero(n)
                v[odd[ai]] = ONE
                v[odd[bi]] = s
                yield v
    for _ in range(extra):
        v = vec_zero(n)
        while vec_is_zero(v):
            for i in odd:
                v[i] = Scalar(random_rational(rng, 2, 2))
        yield v


def cone_pointedness(g, rng=None, cap=WITNESS_CAP):
    """Certificate for the convex cone generated by the odd squares [X, X].

    A positive witness functional gives pointedness (the functional is
    strictly positive on every nonzero generator); a vanishing square map
    gives the trivial cone; otherwise a cancelling pair [X1,X1] = -[X2,X2]
    with both sides nonzero certifies not pointed.
    """
    rng = rng or random.Random(0)
    if _square_map_is_zero(g):
        return ConeCertificate("pointed", note="all odd squares vanish: trivial cone")
    res = find_witness(g, rng, cap)
    if res.found:
        return ConeCertificate("pointed", witness=res.witness)
    squares = []
    for x in _structured_odd_candidates(g, rng):
        s = _odd_square(g, x)
        if vec_is_zero(s):
            continue
        for (y, sy) in squares:
            total = [a + b for a, b in zip(s, sy)]
            if vec_is_zero(total):
                return ConeCertificate("not_pointed", pair=(x, y))
        squares.append((x, s))
        # scaled match: [X,X] = -c^2 [Y,Y] for a rational square c^2
        for (y, sy) in squares[:-1]:
            ratio = None
            ok = True
            for a, b in zip(s, sy):
                if a.is_zero() and b.is_zero():
                    continue
                if b.is_zero() or a.is_zero():
                    ok = False
                    break
                r = a / b
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ok = False
                    break
            if ok and ratio is not None and ratio.is_real() and ratio.re < 0:
                lam = -ratio.re
                num, den = lam.numerator, lam.denominator
                rn, rd = _int_sqrt(num), _int_sqrt(den)
                if rn is not None and rd is not None:
                    c = Scalar(Fraction(rn, rd))
                    y2 = [c * w for w in y]
                    s2 = _odd_square(g, y2)
                    if vec_is_zero([a + b for a, b in zip(s, s2)]):
                        return ConeCertificate("not_pointed", pair=(x, y2))
    return ConeCertificate("inconclusive")


def _int_sqrt(n):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


# ---------------------------------------------------------------------------
# compactness via invariant positive forms
# ---------------------------------------------------------------------------

class CompactnessResult:
    def __init__(self, verdict, even=None, odd=None, reason=None):
        self.verdict = verdict            # yes / no / inconclusive
        self.even = even
        self.odd = odd
        self.reason = reason


def _no_posdef_pair_certificate(g, grams, dim, actions):
    """Nonzero v, w with S(v,v) + S(w,w) = 0 for every S in the span.

    Looked for among basis vectors paired through commutant candidates
    (multiplication-by-i operators of complex type); certifies that no
    form in the span is positive definite.
    """
    if not grams:
        return None
    comm = module_commutant(actions, dim)
    cands = []
    for j in comm:
        cands.append(j)
    for vi in range(dim):
        v = [ONE if a == vi else ZERO for a in range(dim)]
        for j in cands:
            w = j.mul_vec(v)
            if vec_is_zero(w):
                continue
            ok = True
            for s in grams:
                acc = ZERO
                for a in range(dim):
                    for b in range(dim):
                        if not s.data[a][b].is_zero():
                            acc = acc + (v[a] * v[b] + w[a] * w[b]) * s.data[a][b]
                if not acc.is_zero():
                    ok = False
                    break
            if ok:
                return (v, w)
    return None


def compactness_check(g, rng=None, cap=WITNESS_CAP):
    """Invariant positive definite forms on the even and odd parts.

    yes needs certified positive forms on both; no needs a certificate
    that one of the two solution spaces admits none.
    """
    rng = rng or random.Random(0)
    results = {}
    for part, actions, dim in (
            ("even", even_action_on_even(g), g.d0),
            ("odd", even_action_on_odd(g), g.d1)):
        if dim == 0:
            results[part] = SearchOutcome("found", witness=([], [], 0))
            continue
        grams = invariant_symmetric_forms(actions, dim)
        out = find_posdef_in_span(grams, rng, cap)
        if out.status == "inconclusive":
            pair = _no_posdef_pair_certificate(g, grams, dim, actions)
            if pair is not None:
                out = SearchOutcome("none", reason="sign-conflict pair",
                                    certificate=pair)
        if out.status == "none" and out.reason == "empty solution space":
            pass
        results[part] = out
    if all(r.found for r in results.values()):
        return CompactnessResult("yes", results["even"], results["odd"])
    for part in ("even", "odd"):
        if results[part].status == "none":
            return CompactnessResult("no", results["even"], results["odd"],
                                     reason="%s part: %s" % (part, results[part].reason))
    return CompactnessResult("inconclusive", results["even"], results["odd"])


# ---------------------------------------------------------------------------
# the five necessary conditions
# ---------------------------------------------------------------------------

def _nonzero_square_check(g, witness_found, rng):
    """(ii): [X, X] != 0 for nonzero odd X.

    A positive witness settles it; otherwise search for an exact
    counterexample among structured candidates.
    """
    if g.d1 == 0:
        return ("pass", None)
    if witness_found:
        return ("pass", "positive definite kappa_omega forces nonzero squares")
    for x in _structured_odd_candidates(g, rng):
        if vec_is_zero(g.bracket(x, x)):
            return ("fail", x)
    return ("inconclusive", None)


class ConditionReport:
    def __init__(self, key, verdict, certificate=None, detail=None):
        self.key = key
        self.verdict = verdict            # pass / fail / inconclusive
        self.certificate = certificate
        self.detail = detail


def necessary_conditions_report(g, seed=0, cap=WITNESS_CAP):
    """All five necessary unitarity conditions with per-item verdicts.

    (i) compactness, (ii) nonzero odd squares, (iii) pointed cone,
    (iv) positive invariant functional, (v) nontrivial even center.
    """
    rng = random.Random(seed)
    items = []

    comp = compactness_check(g, rng, cap)
    items.append(ConditionReport(
        "i_compact", {"yes": "pass", "no": "fail"}.get(comp.verdict, "inconclusive"),
        certificate=comp.reason))

    wit = find_witness(g, rng, cap)
    cone = cone_pointedness(g, rng, cap)

    sq_verdict, sq_cert = _nonzero_square_check(g, wit.found, rng)
    if sq_verdict == "fail":
        items.append(ConditionReport("ii_nonzero_squares", sq_verdict,
                                     certificate=sq_cert))
    else:
        items.append(ConditionReport("ii_nonzero_squares", sq_verdict,
                                     detail=sq_cert))

    cone_verdict = {"pointed": "pass", "not_pointed": "fail"}.get(
        cone.verdict, "inconclusive")
    items.append(ConditionReport("iii_pointed_cone", cone_verdict,
                                 certificate=cone.pair, detail=cone.note))

    if wit.found:
        items.append(ConditionReport("iv_positive_functional", "pass",
                                     certificate=wit.witness))
    elif wit.status == "none":
        items.append(ConditionReport("iv_positive_functional", "fail",
                                     detail=wit.reason))
    else:
        items.append(ConditionReport("iv_positive_functional", "inconclusive",
                                     detail=wit.reason))

    ann_dim = len(invariant_functional_basis(g))
    dim_z0 = even_center_dim(g)
    items.append(ConditionReport(
        "v_even_center", "pass" if dim_z0 > 0 else "fail",
        detail="dim z(g0) = %d, annihilator dim = %d" % (dim_z0, ann_dim)))

    if any(it.verdict == "fail" for it in items):
        overall = "obstruction found"
    elif all(it.verdict == "pass" for it in items):
        overall = "all necessary conditions pass"
    else:
        overall = "inconclusive items listed"
    return NecessaryConditionsReport(items, overall, seed)


class NecessaryConditionsReport:
    def __init__(self, items, overall, seed):
        self.items = items
        self.overall = overall
        self.seed = seed

    def item(self, key):
        for it in self.items:
            if it.key == key:
                return it
        raise KeyError(key)

    def to_json_dict(self):
        from . import __version__

        def cert_json(c):
            if c is None:
                return None
            if isinstance(c, Witness):
                return c.to_json_dict()
            if isinstance(c, str):
                return c
            if isinstance(c, tuple) and len(c) == 2:
                return {"x1": _vec_json(c[0]), "x2": _vec_json(c[1])}
            if isinstance(c, list):
                return _vec_json(c)
            return str(c)

        return {
            "version": __version__,
            "seed": str(self.seed),
            "overall": self.overall,
            "conditions": [
                {"condition": it.key, "verdict": it.verdict,
                 **({"certificate": cert_json(it.certificate)}
                    if it.certificate is not None else {}),
                 **({"detail": str(it.detail)} if it.detail is not None else {})}
                for it in self.items],
        }


def _vec_json(v):
    return [[str(a.re.numerator), str(a.re.denominator)] for a in v]
