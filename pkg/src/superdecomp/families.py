"""Constructors for the named compact Lie superalgebra families.

Matrix families (u, su, psu, q, pq, qhat, c, gl) are built from explicit
anti-hermitian block realizations with Gaussian rational entries and turned
into structure constants by from_matrix_span; the coordinate map back to the
matrices is kept in meta["realization"].  Abstract families (spin_h, ch,
tangent algebras) are written down directly.

Conventions fixed here:
  * u(p|q):  even = antihermitian diagonal blocks, odd = [[0, B], [iB*, 0]].
  * q(n):    pairs [[a, b], [b, a]] with a* = -a and b in (1-i) su(n+1);
             qhat(n) drops the trace condition on b.
  * c(n):    osp(2|2n-2) for the form (identity on the even 2-block,
             standard symplectic J on the odd block) intersected with
             u(2|2n-2); the compact-form property is certified after the
             fact by the even-part checks, not assumed.
  * compact simple k: su(n) traceless antihermitian, so(n) real
    antisymmetric, sp(n) quaternionic antihermitian as 2n x 2n complex.
"""

from fractions import Fraction
from functools import lru_cache

from .exact import (
    Matrix, Scalar, ZERO, ONE, I, kernel, sc,
    vec_is_zero, vec_zero,
)
from .core import (
    BlockMatrix, InvariantForm, SuperAlgebra, SuperAlgebraError, SuperSpace,
    central_extension, from_matrix_span, killing_form,
    quotient_by_central, semidirect_by_derivation,
)

K_TAGS = ("su", "so", "sp")


class FamilySpec:
    """Validated family tag plus integer / k-tag parameters."""

    TAGS = ("gl", "u", "su", "psu", "q", "pq", "q_hat", "c", "ch",
            "spin_h", "spin_h_hat", "T", "T_hat", "T_tilde", "ch_indefinite")

    def __init__(self, tag, params):
        if tag not in self.TAGS:
            raise ValueError("unknown family tag %r" % (tag,))
        self.tag = tag
        self.params = tuple(params)
        _validate(tag, self.params)

    def name(self):
        return family_name(self.tag, self.params)


def _validate(tag, params):
    def ints(k):
        if len(params) != k or not all(isinstance(p, int) for p in params):
            raise ValueError("family %s needs %d integer parameter(s)" % (tag, k))

    if tag in ("gl", "u"):
        ints(2)
        if params[0] < 1 or params[1] < 1:
            raise ValueError("%s(p|q) needs p, q >= 1" % tag)
    elif tag == "su":
        ints(2)
        if not params[0] >= params[1] >= 1:
            raise ValueError("su(n|m) needs n >= m >= 1")
    elif tag == "psu":
        ints(1)
        if params[0] < 2:
            raise ValueError("psu(n|n) needs n >= 2")
    elif tag in ("q", "pq", "q_hat"):
        ints(1)
        if params[0] < 1:
            raise ValueError("%s(n) needs n >= 1" % tag)
    elif tag == "c":
        ints(1)
        if params[0] < 2:
            raise ValueError("c(n) needs n >= 2")
    elif tag in ("ch", "spin_h", "spin_h_hat"):
        ints(1)
        if params[0] < 1:
            raise ValueError("%s needs dim V >= 1" % tag)
    elif tag == "ch_indefinite":
        ints(2)
        if params[0] < 1 or params[1] < 1:
            raise ValueError("indefinite signature needs r, s >= 1")
    else:  # tangent families
        if len(params) != 2 or params[0] not in K_TAGS or not isinstance(params[1], int):
            raise ValueError("tangent families need a (su|so|sp, n) parameter pair")
        kind, n = params
        if (kind == "su" and n < 2) or (kind == "so" and n not in (3,) and n < 5) \
                or (kind == "sp" and n < 1):
            raise ValueError("%s(%d) is not a compact simple Lie algebra" % (kind, n))


def family_name(tag, params):
    if tag in ("gl", "u", "su"):
        return "%s(%d|%d)" % (tag, params[0], params[1])
    if tag == "psu":
        return "psu(%d|%d)" % (params[0], params[0])
    if tag == "q_hat":
        return "qhat(%d)" % params[0]
    if tag in ("q", "pq", "c", "ch", "spin_h", "spin_h_hat"):
        return "%s(%d)" % (tag, params[0])
    if tag == "ch_indefinite":
        return "ch_indef(%d,%d)" % params
    k = "%s%d" % params
    return {"T": "T(%s)", "T_hat": "That(%s)", "T_tilde": "Ttilde(%s)"}[tag] % k


def expected_dims(tag, params):
    """Closed-form (d0, d1) contract for each family."""
    if tag == "gl":
        p, q = params
        return 2 * (p * p + q * q), 4 * p * q
    if tag == "u":
        p, q = params
        return p * p + q * q, 2 * p * q
    if tag == "su":
        n, m = params
        return n * n + m * m - 1, 2 * n * m
    if tag == "psu":
        n = params[0]
        return 2 * n * n - 2, 2 * n * n
    if tag == "q":
        n = params[0]
        return (n + 1) ** 2, (n + 1) ** 2 - 1
    if tag == "pq":
        n = params[0]
        return (n + 1) ** 2 - 1, (n + 1) ** 2 - 1
    if tag == "q_hat":
        n = params[0]
        return (n + 1) ** 2, (n + 1) ** 2
    if tag == "c":
        n = params[0]
        return 1 + (n - 1) * (2 * n - 1), 4 * (n - 1)
    if tag == "ch":
        return 2, 4 * params[0]
    if tag == "spin_h":
        return 1, 2 * params[0]
    if tag == "spin_h_hat":
        return 2, 2 * params[0]
    if tag == "ch_indefinite":
        return 1, params[0] + params[1]
    kd = simple_dim(*params)
    if tag == "T":
        return kd, kd
    if tag == "T_hat":
        return kd, kd + 1
    return kd + 1, kd          # T_tilde


def simple_dim(kind, n):
    if kind == "su":
        return n * n - 1
    if kind == "so":
        return n * (n - 1) // 2
    return n * (2 * n + 1)     # sp


# ---------------------------------------------------------------------------
# matrix building blocks
# ---------------------------------------------------------------------------

def _eij(n, m, i, j, val=None):
    out = Matrix(n, m)
    out.data[i][j] = val if val is not None else ONE
    return out


def u_matrix_basis(n):
    """u(n, C): i E_jj, then E_jk - E_kj and i(E_jk + E_kj) for j < k."""
    out = []
    for j in range(n):
        out.append(_eij(n, n, j, j, I))
    for j in range(n):
        for k in range(j + 1, n):
            m = Matrix(n, n)
            m.data[j][k] = ONE
            m.data[k][j] = Scalar(-1)
            out.append(m)
            m = Matrix(n, n)
            m.data[j][k] = I
            m.data[k][j] = I
            out.append(m)
    return out


def su_matrix_basis(n):
    """su(n, C): traceless diagonal i(E_jj - E_{j+1,j+1}) then off-diagonals."""
    out = []
    for j in range(n - 1):
        m = Matrix(n, n)
        m.data[j][j] = I
        m.data[j + 1][j + 1] = Scalar(0, -1)
        out.append(m)
    for j in range(n):
        for k in range(j + 1, n):
            m = Matrix(n, n)
            m.data[j][k] = ONE
            m.data[k][j] = Scalar(-1)
            out.append(m)
            m = Matrix(n, n)
            m.data[j][k] = I
            m.data[k][j] = I
            out.append(m)
    return out


def so_matrix_basis(n):
    out = []
    for j in range(n):
        for k in range(j + 1, n):
            m = Matrix(n, n)
            m.data[j][k] = ONE
            m.data[k][j] = Scalar(-1)
            out.append(m)
    return out


def sp_matrix_basis(n):
    """Compact sp(n) as 2n x 2n complex: [[A, B], [-conj(B), conj(A)]],
    A antihermitian, B symmetric."""
    out = []
    for a in u_matrix_basis(n):
        m = Matrix(2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                m.data[i][j] = a.data[i][j]
                m.data[n + i][n + j] = a.data[i][j].conj()
        out.append(m)
    sym = []
    for j in range(n):
        sym.append(_eij(n, n, j, j))
        sym.append(_eij(n, n, j, j, I))
    for j in range(n):
        for k in range(j + 1, n):
            m = Matrix(n, n)
            m.data[j][k] = ONE
            m.data[k][j] = ONE
            sym.append(m)
            m = Matrix(n, n)
            m.data[j][k] = I
            m.data[k][j] = I
            sym.append(m)
    for b in sym:
        m = Matrix(2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                m.data[i][n + j] = b.data[i][j]
                m.data[n + i][j] = -b.data[i][j].conj()
        out.append(m)
    return out


def simple_matrix_basis(kind, n):
    if kind == "su":
        return su_matrix_basis(n), n
    if kind == "so":
        return so_matrix_basis(n), n
    if kind == "sp":
        return sp_matrix_basis(n), 2 * n
    raise ValueError("unknown compact simple tag %r" % (kind,))


def _u_odd_blocks(p, q):
    """Odd part of u(p|q): [[0, B], [iB*, 0]] for B = E_jk and iE_jk."""
    out = []
    for j in range(p):
        for k in range(q):
            for b in (_eij(p, q, j, k), _eij(p, q, j, k, I)):
                c = b.conj_transpose().scale(I)
                out.append(BlockMatrix.from_blocks(b=b, c=c))
    return out


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------

def build_gl(p, q):
    blocks = []
    units = []
    for j in range(p):
        for k in range(p):
            units.append(("a", j, k))
    for j in range(q):
        for k in range(q):
            units.append(("d", j, k))
    for which, j, k in units:
        for val in (ONE, I):
            m = Matrix(p + q, p + q)
            if which == "a":
                m.data[j][k] = val
            else:
                m.data[p + j][p + k] = val
            blocks.append(BlockMatrix(p, q, m, 0))
    for j in range(p):
        for k in range(q):
            for val in (ONE, I):
                blocks.append(BlockMatrix.from_blocks(b=_eij(p, q, j, k, val), p=p, q=q))
    for j in range(q):
        for k in range(p):
            for val in (ONE, I):
                blocks.append(BlockMatrix.from_blocks(c=_eij(q, p, j, k, val), p=p, q=q))
    return from_matrix_span(blocks)[0]


def build_u(p, q):
    blocks = [BlockMatrix.from_blocks(a=a, p=p, q=q) for a in u_matrix_basis(p)]
    blocks += [BlockMatrix.from_blocks(d=d, p=p, q=q) for d in u_matrix_basis(q)]
    blocks += _u_odd_blocks(p, q)
    return from_matrix_span(blocks)[0]


def build_su(n, m):
    blocks = [BlockMatrix.from_blocks(a=a, p=n, q=m) for a in su_matrix_basis(n)]
    blocks += [BlockMatrix.from_blocks(d=d, p=n, q=m) for d in su_matrix_basis(m)]
    z = Matrix(n + m, n + m)
    for j in range(n):
        z.data[j][j] = Scalar(0, m)
    for j in range(m):
        z.data[n + j][n + j] = Scalar(0, n)
    blocks.append(BlockMatrix(n, m, z, 0))
    blocks += _u_odd_blocks(n, m)
    return from_matrix_span(blocks)[0]


def build_psu(n):
    g = build(FamilySpec("su", (n, n)))
    # the supertraceless diagonal generator is the last even basis vector
    # and spans the center R i1 of su(n|n)
    zvec = g.basis_vector(g.d0 - 1)
    quo, qmap = quotient_by_central(g, g.subspace([zvec]))
    quo.meta["quotient_map"] = qmap
    quo.meta["extension_of"] = g
    return quo


def _q_blocks(n, traceless):
    N = n + 1
    blocks = []
    for a in u_matrix_basis(N):
        m = Matrix(2 * N, 2 * N)
        for i in range(N):
            for j in range(N):
                m.data[i][j] = a.data[i][j]
                m.data[N + i][N + j] = a.data[i][j]
        blocks.append(BlockMatrix(N, N, m, 0))
    factor = Scalar(1, -1)
    source = su_matrix_basis(N) if traceless else u_matrix_basis(N)
    for s in source:
        b = s.scale(factor)
        m = Matrix(2 * N, 2 * N)
        for i in range(N):
            for j in range(N):
                m.data[i][N + j] = b.data[i][j]
                m.data[N + i][j] = b.data[i][j]
        blocks.append(BlockMatrix(N, N, m, 1))
    return blocks


def build_q(n):
    return from_matrix_span(_q_blocks(n, traceless=True))[0]


def build_q_hat(n):
    return from_matrix_span(_q_blocks(n, traceless=False))[0]


def build_pq(n):
    g = build(FamilySpec("q", (n,)))
    # i1 = sum of the first n+1 even generators (the iE_jj diagonal ones)
    zvec = vec_zero(g.dim)
    for j in range(n + 1):
        zvec[j] = ONE
    quo, qmap = quotient_by_central(g, g.subspace([zvec]))
    quo.meta["quotient_map"] = qmap
    quo.meta["extension_of"] = g
    return quo


def _sympl_gram(size):
    half = size // 2
    jmat = Matrix(size, size)
    for i in range(half):
        jmat.data[i][half + i] = ONE
        jmat.data[half + i][i] = Scalar(-1)
    return jmat


def build_c(n):
    """Compact real form of osp(2|2n-2) for the Gram pair (I_2, J).

    Even part: so(2, R) plus compact sp(n-1).  The odd part of the complex
    osp is parametrised by B with lower block C = -J B^T; the naive
    intersection with the standard u(2|2n-2) is empty (the conditions
    C = -J B^T and C = iB* force B = 0 since the combined antilinear map
    squares to -1), so the compact form is cut out by the quaternionic
    involution instead: B = -J_2 conj(B) J_{2m}, which squares to +1 and
    commutes with the even action.  Correctness is certified after the
    fact: bracket closure is verified exactly, and the dimension, center
    and Killing checks pin the isomorphism type.
    """
    m = n - 1
    so2 = Matrix(2, 2)
    so2.data[0][1] = ONE
    so2.data[1][0] = Scalar(-1)
    blocks = [BlockMatrix.from_blocks(a=so2, p=2, q=2 * m)]
    for d in sp_matrix_basis(m):
        blocks.append(BlockMatrix.from_blocks(d=d, p=2, q=2 * m))
    j2 = _sympl_gram(2)
    jbig = _sympl_gram(2 * m)
    # unknowns: Re/Im of the 2 x 2m block B; condition B + J_2 conj(B) J = 0
    nb = 8 * m
    rows = []
    for r in range(2):
        for c in range(2 * m):
            coeff = {}
            var = 2 * (r * 2 * m + c)
            coeff[var] = ONE
            coeff[var + 1] = I
            # (J_2 conj(B) J)[r][c] = sum_{u,v} J2[r][u] conj(B[u][v]) J[v][c]
            for u in range(2):
                j2v = j2.data[r][u]
                if j2v.is_zero():
                    continue
                for v in range(2 * m):
                    jv = jbig.data[v][c]
                    if jv.is_zero():
                        continue
                    w = 2 * (u * 2 * m + v)
                    f = j2v * jv
                    coeff[w] = coeff.get(w, ZERO) + f            # Re part
                    coeff[w + 1] = coeff.get(w + 1, ZERO) - f * I  # conj: -i Im
            re_row = [ZERO] * nb
            im_row = [ZERO] * nb
            for var, val in coeff.items():
                re_row[var] = Scalar(val.re)
                im_row[var] = Scalar(val.im)
            rows.append(re_row)
            rows.append(im_row)
    ker = kernel(Matrix.from_rows(rows))
    for vvec in ker:
        b = Matrix(2, 2 * m)
        for r in range(2):
            for c in range(2 * m):
                var = 2 * (r * 2 * m + c)
                b.data[r][c] = Scalar(vvec[var].re, vvec[var + 1].re)
        cmat = (jbig @ b.transpose()).scale(Scalar(-1))
        blocks.append(BlockMatrix.from_blocks(b=b, c=cmat, p=2, q=2 * m))
    return from_matrix_span(blocks)[0]


def build_lie_algebra(kind, n):
    """Compact simple k as a purely even structure-constant algebra."""
    mats, size = simple_matrix_basis(kind, n)
    blocks = [BlockMatrix(size, 0, mat, 0) for mat in mats]
    return from_matrix_span(blocks)[0]


def build_tangent_from_algebra(k, variant):
    """T k, That k or Ttilde k from a purely even algebra k."""
    if k.d1 != 0:
        raise SuperAlgebraError("tangent construction needs a plain Lie algebra")
    d = k.dim
    space = SuperSpace.make(d, d)
    table = {}
    for (i, j), terms in k.table.items():
        table[(i, j)] = dict(terms)                     # [x o 1, y o 1]
    for i in range(d):
        for j in range(d):
            terms = k.bracket_pair(i, j)                # [x_i o 1, x_j o xi]
            if terms:
                table[(i, d + j)] = {d + kk: v for kk, v in terms.items()}
    # odd-odd brackets vanish
    tk = SuperAlgebra(space, table)
    if variant == "T":
        return tk
    if variant == "T_hat":
        dmat = Matrix(2 * d, 2 * d)
        for i in range(d):
            dmat.data[i][d + i] = ONE                     # d/dxi
        return semidirect_by_derivation(tk, dmat, parity=1)
    gram, _ = killing_form(k)
    neg = gram.scale(Scalar(-1))
    form = InvariantForm(list(range(d, 2 * d)), neg)
    return central_extension(tk, form)


def build_tangent(kind, n, variant):
    k = build_lie_algebra(kind, n)
    alg = build_tangent_from_algebra(k, variant)
    alg.meta["k_algebra"] = k
    alg.meta["k_tag"] = (kind, n)
    return alg


def build_spin_h(v):
    """Real Clifford-Heisenberg form: [X_j, X_j] = [Y_j, Y_j] = 2Z, Z central."""
    space = SuperSpace.make(1, 2 * v)
    table = {}
    two = sc(2)
    for j in range(v):
        table[(1 + j, 1 + j)] = {0: two}               # X_j
        table[(1 + v + j, 1 + v + j)] = {0: two}       # Y_j
    return SuperAlgebra(space, table)


def build_spin_h_hat(v):
    h = build_spin_h(v)
    n = h.dim
    dmat = Matrix(n, n)
    for j in range(v):
        dmat.data[1 + v + j][1 + j] = ONE              # D X_j = Y_j
        dmat.data[1 + j][1 + v + j] = Scalar(-1)       # D Y_j = -X_j
    return semidirect_by_derivation(h, dmat, parity=0)


def build_ch(v):
    """Complex Clifford-Heisenberg algebra realified, (e, ie) convention.

    Even: z, iz.  Odd: e_k, ie_k (the V side) then f_k, if_k (the dual side).
    """
    space = SuperSpace.make(2, 4 * v)
    table = {}
    for k in range(v):
        e_re = 2 + 2 * k
        e_im = 2 + 2 * k + 1
        f_re = 2 + 2 * v + 2 * k
        f_im = 2 + 2 * v + 2 * k + 1
        table[(e_re, f_re)] = {0: ONE}
        table[(e_re, f_im)] = {1: ONE}
        table[(e_im, f_re)] = {1: ONE}
        table[(e_im, f_im)] = {0: Scalar(-1)}
    return SuperAlgebra(space, table)


def build_ch_indefinite(r, s):
    """One-dimensional even center, odd form of signature (r, s)."""
    space = SuperSpace.make(1, r + s)
    table = {}
    for j in range(r):
        table[(1 + j, 1 + j)] = {0: ONE}
    for j in range(s):
        table[(1 + r + j, 1 + r + j)] = {0: Scalar(-1)}
    return SuperAlgebra(space, table)


_BUILDERS = {
    "gl": lambda p: build_gl(*p),
    "u": lambda p: build_u(*p),
    "su": lambda p: build_su(*p),
    "psu": lambda p: build_psu(*p),
    "q": lambda p: build_q(*p),
    "pq": lambda p: build_pq(*p),
    "q_hat": lambda p: build_q_hat(*p),
    "c": lambda p: build_c(*p),
    "ch": lambda p: build_ch(*p),
    "spin_h": lambda p: build_spin_h(*p),
    "spin_h_hat": lambda p: build_spin_h_hat(*p),
    "ch_indefinite": lambda p: build_ch_indefinite(*p),
    "T": lambda p: build_tangent(p[0], p[1], "T"),
    "T_hat": lambda p: build_tangent(p[0], p[1], "T_hat"),
    "T_tilde": lambda p: build_tangent(p[0], p[1], "T_tilde"),
}


@lru_cache(maxsize=None)
def _build_cached(tag, params):
    alg = _BUILDERS[tag](params)
    d0, d1 = expected_dims(tag, params)
    if (alg.d0, alg.d1) != (d0, d1):
        raise SuperAlgebraError(
            "dimension contract violated for %s: got (%d|%d), expected (%d|%d)"
            % (family_name(tag, params), alg.d0, alg.d1, d0, d1))
    alg.meta["family"] = tag
    alg.meta["params"] = params
    alg.meta["name"] = family_name(tag, params)
    return alg


def build(spec):
    """Build a family member from a FamilySpec (or tag, params pair)."""
    if not isinstance(spec, FamilySpec):
        raise TypeError("build expects a FamilySpec")
    return _build_cached(spec.tag, spec.params)


def build_family(tag, *params):
    return build(FamilySpec(tag, params))


# ---------------------------------------------------------------------------
# the square identity of the u-families
# ---------------------------------------------------------------------------

def square_identity_samples(alg, count, rng):
    """Check [X, X] = 2 X^2 = 2i X^* X != 0 on seeded nonzero odd samples.

    Needs a matrix realization whose odd part satisfies X^* = -iX (the
    u-families and their subfamilies).  Returns the number of samples that
    satisfied the identity; raises on the first failure.
    """
    real = alg.meta.get("realization")
    if real is None:
        raise SuperAlgebraError("algebra has no matrix realization")
    n = alg.dim
    ok = 0
    for _ in range(count):
        coords = vec_zero(n)
        while vec_is_zero(coords):
            for i in alg.space.odd_indices():
                coords[i] = Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
        x = real.to_matrix(coords)
        sq = x @ x
        two_sq = sq.scale(sc(2))
        star = x.conj_transpose() @ x
        if two_sq != star.scale(Scalar(0, 2)):
            raise SuperAlgebraError("2X^2 = 2iX*X violated")
        if two_sq.is_zero():
            raise SuperAlgebraError("odd sample with [X, X] = 0")
        lhs = alg.bracket(coords, coords)
        rhs = real.from_matrix(two_sq)
        if rhs is None or lhs != rhs:
            raise SuperAlgebraError("structure constants disagree with 2X^2")
        ok += 1
    return ok
