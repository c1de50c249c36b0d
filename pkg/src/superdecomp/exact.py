"""Exact scalar and linear algebra kernel.

Scalars are Gaussian rationals (a + bi with rational a, b); plain rationals
are the b = 0 case.  All operations are exact: there is no floating point
anywhere in this package.  Elimination is fraction-free (cross-multiplication
with content removal, Bareiss style) so intermediate entries stay integral
and small instead of accumulating denominators.

Everything here is a pure function on immutable values and safe to call
concurrently.
"""

from fractions import Fraction
from math import gcd

_F0 = Fraction(0)
_F1 = Fraction(1)


class Scalar:
    """Gaussian rational a + bi, always in lowest terms (Fraction invariant)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def _make(cls, re, im):
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    def __add__(self, other):
        return Scalar._make(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, _F0)
        return Scalar._make(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        if not d:
            return Scalar._make(a / c, b / c)
        n = c * c + d * d
        return Scalar._make((a * c + b * d) / n, (b * c - a * d) / n)

    def conj(self):
        return Scalar._make(self.re, -self.im)

    def is_zero(self):
        return not self.re and not self.im

    def is_real(self):
        return not self.im

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%si" % self.im
        return "(%s%+si)" % (self.re, self.im)

    def key(self):
        """Deterministic sort key."""
        return (self.re.numerator, self.re.denominator,
                self.im.numerator, self.im.denominator)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
MINUS_ONE = Scalar(-1)


def sc(re, im=0):
    """Scalar from anything Fraction accepts (ints, 'p/q' strings)."""
    return Scalar(Fraction(re), Fraction(im))


def ipow(k):
    """i**k for integer k, table driven."""
    return (ONE, I, MINUS_ONE, Scalar(0, -1))[k % 4]


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense matrix over Scalar.  Rows is a list of lists; never aliased."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[ZERO] * cols for _ in range(rows)]
        else:
            assert len(data) == rows and all(len(r) == cols for r in data)
            self.data = data

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        self.data[ij[0]][ij[1]] = v

    def copy(self):
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix(self.rows, self.cols,
                      [[-a for a in row] for row in self.data])

    def scale(self, s):
        return Matrix(self.rows, self.cols,
                      [[s * a for a in row] for row in self.data])

    def __matmul__(self, other):
        assert self.cols == other.rows, "dimension mismatch"
        out = Matrix(self.rows, other.cols)
        odata = out.data
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = odata[i]
            for k, a in enumerate(arow):
                if a.is_zero():
                    continue
                brow = bdata[k]
                for j, b in enumerate(brow):
                    if not b.is_zero():
                        orow[j] = orow[j] + a * b
        return out

    def mul_vec(self, v):
        assert self.cols == len(v)
        out = []
        for row in self.data:
            acc = ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def conj_transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j].conj() for i in range(self.rows)]
                       for j in range(self.cols)])

    def trace(self):
        assert self.rows == self.cols
        t = ZERO
        for i in range(self.rows):
            t = t + self.data[i][i]
        return t

    def is_zero(self):
        return all(a.is_zero() for row in self.data for a in row)

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        return all(self.data[i][j] == self.data[j][i]
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_real(self):
        return all(a.is_real() for row in self.data for a in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return "Matrix(%d,%d,%s)" % (self.rows, self.cols, self.data)


# vectors are plain lists of Scalar

def vec_zero(n):
    return [ZERO] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(s, v):
    return [s * a for a in v]


def vec_is_zero(v):
    return all(a.is_zero() for a in v)


def vec_eq(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# fraction-free elimination on sparse rows
# ---------------------------------------------------------------------------
#
# A sparse row is a dict {column: Scalar} with no zero values.  Rows fed to
# the echelon are first scaled to clear denominators and divided by their
# integer content, so the cross-multiplication update keeps entries integral.

def _row_from_list(v):
    return {j: a for j, a in enumerate(v) if not a.is_zero()}


def _row_content_reduce(row):
    """Scale a row so entries are Gaussian integers with content 1."""
    if not row:
        return row
    den = 1
    for a in row.values():
        den = den * a.re.denominator // gcd(den, a.re.denominator)
        den = den * a.im.denominator // gcd(den, a.im.denominator)
    num = 0
    for a in row.values():
        num = gcd(num, abs(a.re.numerator * (den // a.re.denominator)))
        num = gcd(num, abs(a.im.numerator * (den // a.im.denominator)))
    if num == 0:
        return row
    f = Scalar(Fraction(den, num))
    if f == ONE:
        return row
    return {j: f * a for j, a in row.items()}


def _row_cross(piv, pv, row, rv):
    """pv*row - rv*piv, skipping the pivot column (which cancels)."""
    out = {}
    for j, a in row.items():
        out[j] = pv * a
    for j, a in piv.items():
        b = rv * a
        c = out.get(j)
        c = b.__neg__() if c is None else c - b
        if c.is_zero():
            out.pop(j, None)
        else:
            out[j] = c
    return out


class Echelon:
    """Incremental row echelon form over the Gaussian rationals.

    Rows are kept fraction-free.  `add` reduces an incoming row by the
    current pivots and installs it if a new pivot survives; `residual`
    reduces without installing.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}          # pivot column -> row dict
        self._rref = None

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, row):
        row = _row_content_reduce(dict(row))
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return c, row
            row = _row_cross(piv, piv[c], row, row[c])
            row = _row_content_reduce(row)
        return None, row

    def add(self, row):
        c, red = self._reduce(row)
        if c is None:
            return False
        self.pivots[c] = red
        self._rref = None
        return True

    def add_list(self, vec):
        return self.add(_row_from_list(vec))

    def residual(self, row):
        return self._reduce(row)[1]

    def contains_list(self, vec):
        return not self.residual(_row_from_list(vec))

    def rref(self):
        """Fully reduced rows, pivots normalised to 1, sorted by pivot col."""
        if self._rref is not None:
            return self._rref
        cols = sorted(self.pivots)
        rows = {}
        for c in reversed(cols):
            row = dict(self.pivots[c])
            for c2 in cols:
                if c2 <= c or c2 not in row:
                    continue
                v = row.pop(c2)
                for j, a in rows[c2].items():
                    if j == c2:
                        continue
                    b = row.get(j, ZERO) - v * a
                    if b.is_zero():
                        row.pop(j, None)
                    else:
                        row[j] = b
            pv = row[c]
            rows[c] = {j: a / pv for j, a in row.items()}
        self._rref = [(c, rows[c]) for c in cols]
        return self._rref

    def basis_vectors(self):
        """RREF basis as dense vectors (canonical basis of the row space)."""
        out = []
        for _, row in self.rref():
            v = vec_zero(self.ncols)
            for j, a in row.items():
                v[j] = a
            out.append(v)
        return out

    def kernel_basis(self):
        """Basis of {v : row . v = 0 for all rows}."""
        rref = self.rref()
        pivset = {c for c, _ in rref}
        free = [j for j in range(self.ncols) if j not in pivset]
        out = []
        for f in free:
            v = vec_zero(self.ncols)
            v[f] = ONE
            for c, row in rref:
                a = row.get(f)
                if a is not None:
                    v[c] = -a
            out.append(v)
        return out


def kernel(m):
    """Exact basis of the null space of a Matrix (list of column vectors)."""
    ech = Echelon(m.cols)
    for row in m.data:
        ech.add_list(row)
    return ech.kernel_basis()


def rank(m):
    ech = Echelon(m.cols)
    for row in m.data:
        ech.add_list(row)
    return ech.rank


def solve(m, b):
    """One exact solution of m x = b plus kernel basis, or None if inconsistent.

    A solution row (pivot c) of the RREF of [m | b] expresses
    x_c + sum_{free j} a_j x_j - a_rhs = 0 against the vector (x, -1),
    so the particular solution with free variables zero is x_c = a_rhs.
    """
    assert m.rows == len(b), "dimension mismatch"
    n = m.cols
    ech = Echelon(n + 1)
    for row, bi in zip(m.data, b):
        r = _row_from_list(row)
        if not bi.is_zero():
            r[n] = bi
        ech.add(r)
    if n in ech.pivots:
        return None
    rref = ech.rref()
    x = vec_zero(n)
    for c, row in rref:
        a = row.get(n)
        if a is not None:
            x[c] = a
    ker = []
    pivset = {c for c, _ in rref}
    free = [j for j in range(n) if j not in pivset]
    for f in free:
        v = vec_zero(n)
        v[f] = ONE
        for c, row in rref:
            a = row.get(f)
            if a is not None:
                v[c] = -a
        ker.append(v)
    return x, ker


def span_basis(vectors, ncols):
    """Canonical (RREF) basis of the span of the given dense vectors."""
    ech = Echelon(ncols)
    for v in vectors:
        ech.add_list(v)
    return ech.basis_vectors()


class LinSolver:
    """Repeated exact solves of B x = v for a fixed column basis B.

    Stores the echelon of [B^T | I] so each solve is a single reduction.
    Columns must be linearly independent.  Fraction-free reduction rescales
    rows, so the query carries its own tracker column: the residual of the
    query row equals lam*(vec | 0 | 1) - sum mu_i*(col_i | e_i | 0), and a
    vanishing main part gives vec = sum (mu_i/lam) col_i exactly.
    """

    def __init__(self, columns, dim):
        self.dim = dim
        self.n = len(columns)
        self.ech = Echelon(dim + self.n + 1)
        self._cols = columns
        for i, col in enumerate(columns):
            row = {j: a for j, a in enumerate(col) if not a.is_zero()}
            row[dim + i] = ONE
            if not self.ech.add(row):
                raise ValueError("columns are linearly dependent")

    def coords(self, vec):
        """x with B x = vec, or None if vec is outside the span."""
        row = {j: a for j, a in enumerate(vec) if not a.is_zero()}
        row[self.dim + self.n] = ONE
        _, red = self.ech._reduce(row)
        if any(j < self.dim for j in red):
            return None
        lam = red[self.dim + self.n]
        out = vec_zero(self.n)
        for j, a in red.items():
            if j < self.dim + self.n:
                out[j - self.dim] = -a / lam
        return out


# ---------------------------------------------------------------------------
# characteristic polynomial and rational splitting
# ---------------------------------------------------------------------------
#
# Polynomials over Q are lists of Fractions, low degree first, no trailing
# zeros, zero polynomial is [].

def ptrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    return ptrim([(p[i] if i < len(p) else _F0) + (q[i] if i < len(q) else _F0)
                  for i in range(n)])


def pscale(c, p):
    if not c:
        return []
    return [c * a for a in p]


def pmul(p, q):
    if not p or not q:
        return []
    out = [_F0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return ptrim(out)


def pdivmod(p, q):
    assert q, "division by zero polynomial"
    p = p[:]
    quo = [_F0] * max(0, len(p) - len(q) + 1)
    qc = q[-1]
    while len(p) >= len(q):
        f = p[-1] / qc
        k = len(p) - len(q)
        quo[k] = f
        for i, b in enumerate(q):
            p[i + k] -= f * b
        ptrim(p)
        if not p:
            break
        while len(p) >= len(q) and not p[-1]:
            p.pop()
    return ptrim(quo), ptrim(p)


def pmonic(p):
    if not p:
        return p
    c = p[-1]
    return [a / c for a in p]


def pgcd(p, q):
    while q:
        p, q = q, pdivmod(p, q)[1]
    return pmonic(p)


def pderiv(p):
    return ptrim([Fraction(i) * a for i, a in enumerate(p)][1:])


def peval(p, x):
    acc = _F0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def peval_matrix(p, m):
    """p(m) by Horner; m square Matrix with rational entries."""
    n = m.rows
    acc = Matrix(n, n)
    for a in reversed(p):
        acc = m @ acc
        if a:
            s = Scalar(a)
            for i in range(n):
                acc.data[i][i] = acc.data[i][i] + s
    return acc


def char_poly(m):
    """Characteristic polynomial det(tI - m), Faddeev-LeVerrier, exact.

    Requires rational (im = 0) entries.
    """
    assert m.rows == m.cols, "square matrix required"
    assert m.is_real(), "rational entries required"
    n = m.rows
    coeffs = [_F1]                       # c_n
    aux = Matrix.identity(n)
    for k in range(1, n + 1):
        aux = m @ aux
        ck = -aux.trace().re / k
        coeffs.append(ck)
        s = Scalar(ck)
        for i in range(n):
            aux.data[i][i] = aux.data[i][i] + s
    coeffs.reverse()                     # low degree first
    return ptrim(coeffs)


def squarefree_decomposition(p):
    """Yun's algorithm: [(g_i, i)] with p = lc * prod g_i^i, g_i monic coprime."""
    p = pmonic(p)
    d = pderiv(p)
    g = pgcd(p, d)
    if len(g) <= 1:
        return [(p, 1)]
    c = pdivmod(p, g)[0]
    w = padd(pdivmod(d, g)[0], pscale(Fraction(-1), pderiv(c)))
    out = []
    i = 1
    while len(c) > 1:
        y = pgcd(c, w)
        if len(y) > 1:
            out.append((y, i))
        c = pdivmod(c, y)[0]
        w = padd(pdivmod(w, y)[0], pscale(Fraction(-1), pderiv(c)))
        i += 1
    return out


def _factor_int(n):
    """Prime factorisation by trial division + Pollard rho fallback."""
    n = abs(n)
    out = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 17
    while f * f <= n and f < 100000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if _is_probable_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return out


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    x, c = 2, 1
    while True:
        y, d = x, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1
        x = c + 1


def _divisors(n):
    fac = _factor_int(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p):
    """All rational roots of a squarefree rational polynomial."""
    if not p:
        return []
    den = 1
    for a in p:
        den = den * a.denominator // gcd(den, a.denominator)
    ip = [int(a * den) for a in p]
    roots = []
    # strip zero roots
    k = 0
    while k < len(ip) and ip[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        ip = ip[k:]
    if len(ip) <= 1:
        return roots
    a0, an = abs(ip[0]), abs(ip[-1])
    for num in _divisors(a0):
        for dq in _divisors(an):
            if gcd(num, dq) != 1:
                continue
            for r in (Fraction(num, dq), Fraction(-num, dq)):
                if not peval(p, r):
                    roots.append(r)
    return sorted(set(roots))


def char_poly_and_rational_split(m):
    """Characteristic polynomial with a coprime rational factorisation.

    Returns (poly, factors, roots) where factors is a list of (g, e) with
    the g pairwise coprime, poly == prod g^e, and roots lists the rational
    roots of poly with multiplicity (each rational root gets its own linear
    factor).  Full irreducible factorisation is deliberately not attempted.
    """
    p = char_poly(m)
    factors = []
    roots = []
    for g, e in squarefree_decomposition(p):
        rest = g
        for r in rational_roots(g):
            roots.append((r, e))
            rest = pdivmod(rest, [-r, _F1])[0]
            factors.append(([-r, _F1], e))
        if len(rest) > 1:
            factors.append((rest, e))
    return p, factors, roots


# ---------------------------------------------------------------------------
# positive definiteness with exact certificates
# ---------------------------------------------------------------------------

class PosDefResult:
    """Outcome of the Sylvester test.

    ok          -- True iff the matrix is positive definite
    minors      -- leading principal minors D_1..D_k computed along the way
    witness     -- on failure, exact v with v^T g v <= 0
    witness_value -- the value v^T g v
    """

    __slots__ = ("ok", "minors", "witness", "witness_value")

    def __init__(self, ok, minors, witness=None, witness_value=None):
        self.ok = ok
        self.minors = minors
        self.witness = witness
        self.witness_value = witness_value


def quad_form(g, v):
    """v^T g v for rational symmetric g."""
    acc = _F0
    for i, row in enumerate(g.data):
        if not v[i]:
            continue
        for j, a in enumerate(row):
            if a and v[j]:
                acc += v[i].re * a.re * v[j].re
    return acc


def is_positive_definite(g):
    """Sylvester criterion via symmetric elimination, exact witness on failure.

    g must be symmetric with rational entries; a non-symmetric or complex
    input raises ValueError.
    """
    if not g.is_real():
        raise ValueError("rational symmetric matrix required")
    if not g.is_symmetric():
        raise ValueError("non-symmetric input rejected")
    n = g.rows
    if n == 0:
        return PosDefResult(True, [])
    s = [[a.re for a in row] for row in g.data]
    # congruence transform T with T^T g T = s throughout; column k of T
    # carries the witness coordinates back to the original basis.
    t = [[_F1 if i == j else _F0 for j in range(n)] for i in range(n)]
    minors = []
    det = _F1

    def col_of_t(k):
        return [Scalar(t[i][k]) for i in range(n)]

    for k in range(n):
        p = s[k][k]
        if p > 0:
            det *= p
            minors.append(det)
            fs = [s[k][j] / p for j in range(k + 1, n)]
            for i in range(k + 1, n):
                fi = fs[i - k - 1]
                if not fi:
                    continue
                srow_k = s[k]
                srow_i = s[i]
                for j in range(k + 1, n):
                    if srow_k[j]:
                        srow_i[j] -= fi * srow_k[j]
            for j in range(k + 1, n):
                fj = fs[j - k - 1]
                s[k][j] = _F0
                s[j][k] = _F0
                if fj:
                    for i in range(n):
                        if t[i][k]:
                            t[i][j] -= fj * t[i][k]
            continue
        if p < 0:
            v = col_of_t(k)
            val = quad_form(g, v)
            assert val == p
            return PosDefResult(False, minors, v, val)
        # p == 0: degenerate direction, or a 2x2 indefinite block
        row_nz = None
        for j in range(k + 1, n):
            if s[k][j]:
                row_nz = j
                break
        if row_nz is None:
            v = col_of_t(k)
            val = quad_form(g, v)
            assert val == 0
            return PosDefResult(False, minors, v, val)
        j = row_nz
        sv = s[k][j]
        sigma = s[j][j]
        tt = (sigma + 1) / (2 * sv)
        v = [Scalar(tt * t[i][k] - t[i][j]) for i in range(n)]
        val = quad_form(g, v)
        assert val < 0
        return PosDefResult(False, minors, v, val)
    return PosDefResult(True, minors)


# ---------------------------------------------------------------------------
# exact feasibility LP:  find t with A t >= 1 componentwise
# ---------------------------------------------------------------------------

def feasible_point(rows, nvars):
    """Exact rational t with row . t >= 1 for every row, or None.

    rows are lists of Fractions.  Phase-1 simplex with Bland's rule; the
    outcome is exact, so None is a certificate of infeasibility of the
    system {A t >= 1} (equivalently: no positive scaling works either).
    """
    m = len(rows)
    if m == 0:
        return [_F0] * nvars
    # variables: u (nvars), w (nvars), slack s (m), artificial z (m)
    ncols = 2 * nvars + 2 * m
    tab = []
    for i, row in enumerate(rows):
        r = [_F0] * (ncols + 1)
        for j, a in enumerate(row):
            r[j] = Fraction(a)
            r[nvars + j] = -Fraction(a)
        r[2 * nvars + i] = Fraction(-1)          # surplus
        r[2 * nvars + m + i] = _F1               # artificial
        r[ncols] = _F1                           # rhs
        tab.append(r)
    basis = [2 * nvars + m + i for i in range(m)]
    # objective: minimise sum of artificials; reduced cost row
    obj = [_F0] * (ncols + 1)
    for r in tab:
        for j in range(ncols + 1):
            obj[j] += r[j]
    # columns of artificials cancel to 1 each; zero them in the cost row
    for i in range(m):
        obj[2 * nvars + m + i] = _F0

    for _ in range(20000):
        enter = -1
        for j in range(ncols):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        # ratio test, Bland tie-break on basis index
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            break                                  # unbounded improvement axis
        piv = tab[leave][enter]
        tab[leave] = [a / piv for a in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, tab[leave])]
        basis[leave] = enter
    if obj[ncols] != 0:
        return None                                # infeasible, exactly
    t = [_F0] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            t[b] += tab[i][ncols]
        elif b < 2 * nvars:
            t[b - nvars] -= tab[i][ncols]
    # exact re-check; simplex bookkeeping must never be trusted blindly
    for row in rows:
        if sum(a * x for a, x in zip(row, t)) < 1:
            return None
    return t


# ---------------------------------------------------------------------------
# seeded rational sampling
# ---------------------------------------------------------------------------

def random_rational(rng, num_bound=3, den_bound=2):
    return Fraction(rng.randint(-num_bound, num_bound),
                    rng.randint(1, den_bound))


def random_vector(rng, n, num_bound=3, den_bound=2, nonzero=False):
    while True:
        v = [Scalar(random_rational(rng, num_bound, den_bound)) for _ in range(n)]
        if not nonzero or not vec_is_zero(v):
            return v
