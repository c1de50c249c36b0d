"""Graded vector spaces, Lie superalgebras as structure constants, and the
bracket calculus built on them.

A superalgebra is stored as a sparse structure-constant table over the
rationals for basis pairs i <= j only; the remaining brackets follow from
super skew symmetry [x,y] = -(-1)^{|x||y|}[y,x].  Basis order is canonical:
even vectors first, then odd.  Complex matrix realizations are realified by
one fixed convention: a complex basis vector e contributes the real pair
(e, ie), in that order.

All values are immutable after construction; operations are pure.
"""

from fractions import Fraction

from .exact import (
    Echelon, LinSolver, Matrix, Scalar, ZERO, ONE,
    kernel, solve, span_basis, vec_add, vec_is_zero, vec_scale, vec_sub, vec_zero,
)


class SuperAlgebraError(Exception):
    pass


class NotClosedError(SuperAlgebraError):
    def __init__(self, i, j, residual):
        self.pair = (i, j)
        self.residual = residual
        super().__init__("span not closed under the bracket at pair (%d, %d)" % (i, j))


class Violation:
    """First failing identity found by verify_superalgebra."""

    def __init__(self, kind, indices, lhs=None, rhs=None):
        self.kind = kind
        self.indices = indices
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return "Violation(%s, %s)" % (self.kind, self.indices)


class SuperSpace:
    """Ordered graded basis; even labels precede odd labels."""

    __slots__ = ("labels", "parities", "d0", "d1")

    def __init__(self, labels, parities):
        assert len(labels) == len(set(labels)), "labels must be unique"
        assert len(labels) == len(parities)
        seen_odd = False
        for p in parities:
            assert p in (0, 1)
            if p == 1:
                seen_odd = True
            elif seen_odd:
                raise SuperAlgebraError("even basis vectors must precede odd ones")
        self.labels = tuple(labels)
        self.parities = tuple(parities)
        self.d1 = sum(parities)
        self.d0 = len(parities) - self.d1

    @classmethod
    def make(cls, d0, d1, prefix="e"):
        labels = ["%s%d" % (prefix, i) for i in range(d0 + d1)]
        return cls(labels, [0] * d0 + [1] * d1)

    @property
    def dim(self):
        return self.d0 + self.d1

    def parity(self, i):
        return self.parities[i]

    def even_indices(self):
        return range(self.d0)

    def odd_indices(self):
        return range(self.d0, self.dim)


class Subspace:
    """Subspace of a SuperSpace in canonical reduced echelon basis."""

    __slots__ = ("ambient_dim", "basis", "_ech", "space")

    def __init__(self, ambient_dim, vectors, space=None):
        self.ambient_dim = ambient_dim
        self.basis = span_basis(vectors, ambient_dim)
        self.space = space
        ech = Echelon(ambient_dim)
        for v in self.basis:
            ech.add_list(v)
        self._ech = ech

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return self._ech.contains_list(v)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def sum(self, other):
        return Subspace(self.ambient_dim, self.basis + other.basis, self.space)

    def intersection(self, other):
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim, [], self.space)
        # x = U a = W b: kernel of [U | -W] stacked columnwise
        cols = len(self.basis) + len(other.basis)
        rows = []
        for i in range(self.ambient_dim):
            row = [self.basis[a][i] for a in range(len(self.basis))]
            row += [-other.basis[b][i] for b in range(len(other.basis))]
            rows.append(row)
        ker = kernel(Matrix.from_rows(rows))
        vecs = []
        for combo in ker:
            v = vec_zero(self.ambient_dim)
            for a, c in enumerate(combo[:len(self.basis)]):
                if not c.is_zero():
                    v = vec_add(v, vec_scale(c, self.basis[a]))
            vecs.append(v)
        return Subspace(self.ambient_dim, vecs, self.space)

    def parity_components(self, parities):
        """(even part, odd part) of the subspace; they span it iff it is graded."""
        even, odd = [], []
        # solve for members supported on one parity only
        for keep in (0, 1):
            if not self.basis:
                break
            bad = [i for i, p in enumerate(parities) if p != keep]
            rows = [[self.basis[a][i] for a in range(len(self.basis))] for i in bad]
            if rows:
                ker = kernel(Matrix.from_rows(rows))
            else:
                ker = [[ONE if a == b else ZERO for a in range(len(self.basis))]
                       for b in range(len(self.basis))]
            vecs = []
            for combo in ker:
                v = vec_zero(self.ambient_dim)
                for a, c in enumerate(combo):
                    if not c.is_zero():
                        v = vec_add(v, vec_scale(c, self.basis[a]))
                vecs.append(v)
            (even if keep == 0 else odd).extend(vecs)
        return (Subspace(self.ambient_dim, even, self.space),
                Subspace(self.ambient_dim, odd, self.space))

    def is_graded(self, parities):
        ev, od = self.parity_components(parities)
        return ev.dim + od.dim == self.dim

    def sort_key(self):
        return (self.dim, tuple(tuple(a.key() for a in v) for v in self.basis))


class SuperAlgebra:
    """Real Lie superalgebra given by rational structure constants.

    table maps (i, j) with i <= j to {k: Scalar}; missing pairs bracket to
    zero.  Structure constants must be real (im = 0); complex realizations
    live in the attached metadata, not in the table.
    """

    __slots__ = ("space", "table", "meta")

    def __init__(self, space, table, meta=None):
        self.space = space
        clean = {}
        for (i, j), terms in table.items():
            assert i <= j, "store brackets for i <= j only"
            terms = {k: v for k, v in terms.items() if not v.is_zero()}
            if not terms:
                continue
            for k, v in terms.items():
                if not v.is_real():
                    raise SuperAlgebraError("structure constants must be rational")
            clean[(i, j)] = terms
        self.table = clean
        self.meta = meta or {}

    @property
    def dim(self):
        return self.space.dim

    @property
    def d0(self):
        return self.space.d0

    @property
    def d1(self):
        return self.space.d1

    def parity(self, i):
        return self.space.parities[i]

    def bracket_pair(self, i, j):
        """[e_i, e_j] as a sparse dict, any order of i and j."""
        if i <= j:
            return self.table.get((i, j), {})
        row = self.table.get((j, i))
        if not row:
            return {}
        if self.parity(i) and self.parity(j):
            return row                        # odd-odd brackets are symmetric
        return {k: -v for k, v in row.items()}

    def bracket(self, x, y):
        """[x, y] for dense coordinate vectors."""
        n = self.dim
        assert len(x) == n and len(y) == n, "dimension mismatch"
        out = vec_zero(n)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                for k, v in self.bracket_pair(i, j).items():
                    out[k] = out[k] + c * v
        return out

    def bracket_basis_vec(self, i, y):
        """[e_i, y] for a dense vector y."""
        out = vec_zero(self.dim)
        for j, yj in enumerate(y):
            if yj.is_zero():
                continue
            for k, v in self.bracket_pair(i, j).items():
                out[k] = out[k] + yj * v
        return out

    def basis_vector(self, i):
        v = vec_zero(self.dim)
        v[i] = ONE
        return v

    def adjoint_index(self, i):
        """Matrix of ad e_i (columns are [e_i, e_j])."""
        n = self.dim
        m = Matrix(n, n)
        for j in range(n):
            for k, v in self.bracket_pair(i, j).items():
                m.data[k][j] = v
        return m

    def adjoint(self, x):
        n = self.dim
        m = Matrix(n, n)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j in range(n):
                for k, v in self.bracket_pair(i, j).items():
                    m.data[k][j] = m.data[k][j] + xi * v
        return m

    def supertrace_of(self, m):
        """str of an operator on the algebra's graded space."""
        t = ZERO
        for i in range(self.dim):
            a = m.data[i][i]
            t = t + (-a if self.parity(i) else a)
        return t

    def subspace(self, vectors):
        return Subspace(self.dim, vectors, self.space)

    def full_subspace(self):
        return self.subspace([self.basis_vector(i) for i in range(self.dim)])

    def even_subspace(self):
        return self.subspace([self.basis_vector(i) for i in self.space.even_indices()])

    def odd_subspace(self):
        return self.subspace([self.basis_vector(i) for i in self.space.odd_indices()])


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_superalgebra(g):
    """Exact check of parity closure, super skew symmetry and graded Jacobi.

    Returns None when everything holds, otherwise the first Violation with
    both sides of the failing identity.
    """
    par = g.space.parities
    for (i, j), terms in g.table.items():
        want = (par[i] + par[j]) % 2
        for k, v in terms.items():
            if par[k] != want:
                return Violation("parity", (i, j, k))
        if i == j and par[i] == 0 and terms:
            return Violation("skew", (i, i))
    n = g.dim
    basis = [g.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = g.bracket(basis[i], basis[j])
            for k in range(n):
                lhs = g.bracket_basis_vec(i, g.bracket(basis[j], basis[k]))
                rhs = g.bracket(ij, basis[k])
                t2 = g.bracket_basis_vec(j, g.bracket(basis[i], basis[k]))
                if par[i] and par[j]:
                    rhs = vec_sub(rhs, t2)
                else:
                    rhs = vec_add(rhs, t2)
                if lhs != rhs:
                    return Violation("jacobi", (i, j, k), lhs, rhs)
    return None


# ---------------------------------------------------------------------------
# subspace calculus
# ---------------------------------------------------------------------------

def center(g):
    """{x : [x, g] = 0}, exact kernel computation."""
    n = g.dim
    ech_rows = []
    for j in range(n):
        eqs = {}
        for i in range(n):
            for k, v in g.bracket_pair(i, j).items():
                eqs.setdefault(k, {})[i] = v
        ech_rows.extend(eqs.values())
    ech = Echelon(n)
    for row in ech_rows:
        ech.add(dict(row))
    return Subspace(n, ech.kernel_basis(), g.space)


def centralizer(g, targets, inside):
    """{x in `inside` : [x, t] = 0 for all t in targets}.

    targets is a Subspace or a list of vectors; inside is a Subspace.
    """
    tv = targets.basis if isinstance(targets, Subspace) else targets
    if not inside.basis:
        return Subspace(g.dim, [], g.space)
    brackets = [[g.bracket(u, t) for t in tv] for u in inside.basis]
    ech = Echelon(len(inside.basis))
    for ti in range(len(tv)):
        for k in range(g.dim):
            row = {}
            for a in range(len(inside.basis)):
                v = brackets[a][ti][k]
                if not v.is_zero():
                    row[a] = v
            if row:
                ech.add(row)
    vecs = []
    for combo in ech.kernel_basis():
        v = vec_zero(g.dim)
        for a, c in enumerate(combo):
            if not c.is_zero():
                v = vec_add(v, vec_scale(c, inside.basis[a]))
        vecs.append(v)
    return Subspace(g.dim, vecs, g.space)


def derived(g):
    """Span of all brackets of basis pairs."""
    vecs = []
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            terms = g.table.get((i, j))
            if terms:
                v = vec_zero(n)
                for k, val in terms.items():
                    v[k] = val
                vecs.append(v)
    return Subspace(n, vecs, g.space)


def is_perfect(g):
    return derived(g).dim == g.dim


def bracket_span(g, u_sub, w_sub):
    """Span of [U, W] for two subspaces."""
    vecs = []
    for u in u_sub.basis:
        for w in w_sub.basis:
            v = g.bracket(u, w)
            if not vec_is_zero(v):
                vecs.append(v)
    return Subspace(g.dim, vecs, g.space)


def is_ideal(g, s):
    for i in range(g.dim):
        for u in s.basis:
            if not s.contains(g.bracket_basis_vec(i, u)):
                return False
    return True


def ideal_closure(g, s):
    cur = s
    while True:
        vecs = list(cur.basis)
        grew = False
        for i in range(g.dim):
            for u in cur.basis:
                v = g.bracket_basis_vec(i, u)
                if not cur.contains(v):
                    vecs.append(v)
                    grew = True
        if not grew:
            return cur
        cur = Subspace(g.dim, vecs, g.space)


def killing_form(g):
    """Gram matrix kappa(e_i, e_j) = str(ad e_i ad e_j) and its rank."""
    n = g.dim
    ads = [g.adjoint_index(i) for i in range(n)]
    gram = Matrix(n, n)
    for i in range(n):
        a = ads[i]
        for j in range(n):
            b = ads[j]
            acc = ZERO
            for k in range(n):
                arow = a.data[k]
                s = ZERO
                for l in range(n):
                    if not arow[l].is_zero():
                        bv = b.data[l][k]
                        if not bv.is_zero():
                            s = s + arow[l] * bv
                if not s.is_zero():
                    acc = acc + (-s if g.parity(k) else s)
            gram.data[i][j] = acc
    ech = Echelon(n)
    for row in gram.data:
        ech.add_list(row)
    return gram, ech.rank


# ---------------------------------------------------------------------------
# invariant bilinear forms
# ---------------------------------------------------------------------------

class InvariantForm:
    """Symmetric bilinear form on a stated index range of a superalgebra.

    `indices` are the ambient basis indices the Gram refers to (usually the
    odd ones); gram is a symmetric rational Matrix of matching size.
    """

    def __init__(self, indices, gram):
        self.indices = tuple(indices)
        assert gram.rows == gram.cols == len(self.indices)
        if not gram.is_symmetric() or not gram.is_real():
            raise SuperAlgebraError("symmetric rational Gram required")
        self.gram = gram
        self.pos = {i: r for r, i in enumerate(self.indices)}

    def value(self, a, b):
        """Form value on two ambient vectors restricted to the index range."""
        acc = ZERO
        for r, i in enumerate(self.indices):
            if a[i].is_zero():
                continue
            for s, j in enumerate(self.indices):
                if not b[j].is_zero() and not self.gram.data[r][s].is_zero():
                    acc = acc + a[i] * self.gram.data[r][s] * b[j]
        return acc

    def scaled(self, s):
        return InvariantForm(self.indices, self.gram.scale(s))


def check_even_invariance(g, form):
    """B([x,a],b) + B(a,[x,b]) = 0 for even basis x; None or Violation."""
    idx = form.indices
    pos = form.pos
    for x in g.space.even_indices():
        for r, i in enumerate(idx):
            bi = g.bracket_pair(x, i)
            for s, j in enumerate(idx):
                bj = g.bracket_pair(x, j)
                acc = ZERO
                for k, v in bi.items():
                    if k in pos:
                        acc = acc + v * form.gram.data[pos[k]][s]
                for k, v in bj.items():
                    if k in pos:
                        acc = acc + form.gram.data[r][pos[k]] * v
                if not acc.is_zero():
                    return Violation("invariance", (x, i, j))
    return None


def invariant_symmetric_forms(actions, dim):
    """Basis of symmetric B with M^T B + B M = 0 for every action matrix M.

    Unknowns are the upper-triangle entries; returns a list of Gram
    matrices spanning the solution space.
    """
    pos = {}
    for r in range(dim):
        for s in range(r, dim):
            pos[(r, s)] = len(pos)
    nvars = len(pos)

    def var(r, s):
        return pos[(r, s)] if r <= s else pos[(s, r)]

    ech = Echelon(nvars)
    for m in actions:
        for j in range(dim):
            for k in range(j, dim):
                row = {}
                for r in range(dim):
                    a = m.data[r][j]
                    if not a.is_zero():
                        v = var(r, k)
                        row[v] = row.get(v, ZERO) + a
                    b = m.data[r][k]
                    if not b.is_zero():
                        v = var(j, r)
                        row[v] = row.get(v, ZERO) + b
                row = {v: a for v, a in row.items() if not a.is_zero()}
                if row:
                    ech.add(row)
    out = []
    for combo in ech.kernel_basis():
        gram = Matrix(dim, dim)
        for (r, s), v in pos.items():
            gram.data[r][s] = combo[v]
            gram.data[s][r] = combo[v]
        out.append(gram)
    return out


def module_commutant(actions, dim):
    """Basis of {T : A T = T A for every action matrix A}, exact."""
    npos = dim * dim

    def var(r, s):
        return r * dim + s

    ech = Echelon(npos)
    for a in actions:
        for r in range(dim):
            for c in range(dim):
                row = {}
                for s in range(dim):
                    v = a.data[r][s]
                    if not v.is_zero():
                        key = var(s, c)
                        row[key] = row.get(key, ZERO) + v
                    w = a.data[s][c]
                    if not w.is_zero():
                        key = var(r, s)
                        row[key] = row.get(key, ZERO) - w
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    ech.add(row)
    out = []
    for combo in ech.kernel_basis():
        t = Matrix(dim, dim)
        for r in range(dim):
            for s in range(dim):
                t.data[r][s] = combo[var(r, s)]
        out.append(t)
    return out


def even_action_on_odd(g):
    """Matrices of ad e_x restricted to the odd part, for even basis x."""
    d0, d1 = g.d0, g.d1
    out = []
    for x in g.space.even_indices():
        m = Matrix(d1, d1)
        for j in range(d1):
            for k, v in g.bracket_pair(x, d0 + j).items():
                m.data[k - d0][j] = v
        out.append(m)
    return out


def even_action_on_even(g):
    d0 = g.d0
    out = []
    for x in g.space.even_indices():
        m = Matrix(d0, d0)
        for j in range(d0):
            for k, v in g.bracket_pair(x, j).items():
                m.data[k][j] = v
        out.append(m)
    return out


def invariant_odd_forms(g):
    """Basis of even-invariant symmetric forms on the odd part."""
    grams = invariant_symmetric_forms(even_action_on_odd(g), g.d1)
    idx = list(g.space.odd_indices())
    return [InvariantForm(idx, gr) for gr in grams]


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------

def direct_sum(g, h):
    """Blockwise direct sum with canonical even-first reordering.

    meta["embeddings"] holds the index maps of the two summands.
    """
    mg = {}
    mh = {}
    pos = 0
    for i in g.space.even_indices():
        mg[i] = pos
        pos += 1
    for i in h.space.even_indices():
        mh[i] = pos
        pos += 1
    for i in g.space.odd_indices():
        mg[i] = pos
        pos += 1
    for i in h.space.odd_indices():
        mh[i] = pos
        pos += 1
    n = g.dim + h.dim
    space = SuperSpace.make(g.d0 + h.d0, g.d1 + h.d1)
    table = {}
    for (i, j), terms in g.table.items():
        a, b = mg[i], mg[j]
        if a > b:
            a, b = b, a
            sign = ONE if (g.parity(i) and g.parity(j)) else Scalar(-1)
        else:
            sign = ONE
        table[(a, b)] = {mg[k]: sign * v for k, v in terms.items()}
    for (i, j), terms in h.table.items():
        a, b = mh[i], mh[j]
        if a > b:
            a, b = b, a
            sign = ONE if (h.parity(i) and h.parity(j)) else Scalar(-1)
        else:
            sign = ONE
        table[(a, b)] = {mh[k]: sign * v for k, v in terms.items()}
    return SuperAlgebra(space, table,
                        meta={"embeddings": (mg, mh), "summand_dims": (g.dim, h.dim)})


def embed_vector(v, index_map, n):
    out = vec_zero(n)
    for i, x in enumerate(v):
        if not x.is_zero():
            out[index_map[i]] = x
    return out


class QuotientMap:
    """Projection onto a quotient, with the chosen linear section."""

    def __init__(self, solver, kept, kdim, n):
        self._solver = solver
        self.kept = kept          # ambient indices of the section basis
        self._kdim = kdim         # dim of the central part
        self._n = n

    def project(self, v):
        coords = self._solver.coords(v)
        return coords[self._kdim:]

    def lift(self, w):
        v = vec_zero(self._n)
        for a, idx in enumerate(self.kept):
            if not w[a].is_zero():
                v[idx] = w[a]
        return v


def quotient_by_central(g, z):
    """g / z for a graded central subspace z; returns (quotient, QuotientMap)."""
    cen = center(g)
    if not cen.contains_subspace(z):
        raise SuperAlgebraError("subspace is not central")
    if not z.is_graded(g.space.parities):
        raise SuperAlgebraError("central subspace must be parity homogeneous")
    ech = Echelon(g.dim)
    for v in z.basis:
        ech.add_list(v)
    kept = []
    for i in range(g.dim):
        if ech.add_list(g.basis_vector(i)):
            kept.append(i)
    cols = list(z.basis) + [g.basis_vector(i) for i in kept]
    solver = LinSolver(cols, g.dim)
    qmap = QuotientMap(solver, kept, z.dim, g.dim)
    parities = [g.parity(i) for i in kept]
    space = SuperSpace(["e%d" % a for a in range(len(kept))], parities)
    table = {}
    for a, ia in enumerate(kept):
        for b, ib in enumerate(kept[a:], start=a):
            terms = g.bracket_pair(ia, ib)
            if not terms:
                continue
            v = vec_zero(g.dim)
            for k, val in terms.items():
                v[k] = val
            w = qmap.project(v)
            row = {c: val for c, val in enumerate(w) if not val.is_zero()}
            if row:
                table[(a, b)] = row
    return SuperAlgebra(space, table, meta={"quotient_of_dim": g.dim}), qmap


def check_derivation(g, dmat, parity):
    """D[x,y] = [Dx,y] + (-1)^{|D||x|}[x,Dy] on all basis pairs."""
    n = g.dim
    cols = [[dmat.data[k][j] for k in range(n)] for j in range(n)]
    for j, col in enumerate(cols):
        for k, v in enumerate(col):
            if v.is_zero():
                continue
            if (g.parity(k) + g.parity(j)) % 2 != parity % 2:
                return Violation("derivation parity", (j, k))
    for i in range(n):
        for j in range(n):
            bij = vec_zero(n)
            for k, v in g.bracket_pair(i, j).items():
                bij[k] = v
            lhs = dmat.mul_vec(bij)
            rhs = g.bracket(cols[i], g.basis_vector(j))
            t2 = g.bracket(g.basis_vector(i), cols[j])
            if parity % 2 and g.parity(i):
                rhs = vec_sub(rhs, t2)
            else:
                rhs = vec_add(rhs, t2)
            if lhs != rhs:
                return Violation("derivation", (i, j), lhs, rhs)
    return None


def semidirect_by_derivation(g, dmat, parity):
    """g extended by one generator d with [d, x] = Dx; [d, d] = 0.

    For odd D the square must vanish (D^2 = 0); inputs with D^2 != 0 are
    rejected rather than guessed at.
    """
    viol = check_derivation(g, dmat, parity)
    if viol is not None:
        raise SuperAlgebraError("not a derivation: %r" % viol)
    if parity % 2:
        if not (dmat @ dmat).is_zero():
            raise SuperAlgebraError("odd derivation with nonzero square rejected")
    n = g.dim
    pos = g.d0 if parity % 2 == 0 else n        # insert after evens / at end

    def shift(i):
        return i if i < pos else i + 1

    space = SuperSpace.make(g.d0 + (1 - parity % 2), g.d1 + (parity % 2))
    table = {}
    for (i, j), terms in g.table.items():
        table[(shift(i), shift(j))] = {shift(k): v for k, v in terms.items()}
    for j in range(n):
        col = {shift(k): dmat.data[k][j] for k in range(n)
               if not dmat.data[k][j].is_zero()}
        if not col:
            continue
        sj = shift(j)
        if pos <= sj:
            table[(pos, sj)] = col
        else:
            sign = ONE if (parity % 2 and g.parity(j)) else Scalar(-1)
            table[(sj, pos)] = {k: sign * v for k, v in col.items()}
    alg = SuperAlgebra(space, table, meta={"derivation_index": pos})
    return alg


def cocycle_from_form(g, form):
    """Check the form is symmetric and even-invariant; return it unchanged."""
    viol = check_even_invariance(g, form)
    if viol is not None:
        raise SuperAlgebraError("form is not invariant: %r" % viol)
    return form


def central_extension(g, form):
    """One-dimensional central extension by the cocycle w(x, y) = B(x1, y1).

    The new central generator sits at index 0; quotienting by it recovers g.
    """
    cocycle_from_form(g, form)
    pos = {i: r for r, i in enumerate(form.indices)}
    space = SuperSpace.make(g.d0 + 1, g.d1)
    table = {}
    for (i, j), terms in g.table.items():
        table[(i + 1, j + 1)] = {k + 1: v for k, v in terms.items()}
    for i in g.space.odd_indices():
        for j in g.space.odd_indices():
            if j < i:
                continue
            val = form.gram.data[pos[i]][pos[j]]
            if val.is_zero():
                continue
            key = (i + 1, j + 1)
            row = dict(table.get(key, {}))
            row[0] = row.get(0, ZERO) + val
            table[key] = row
    return SuperAlgebra(space, table, meta={"central_index": 0})


def is_trivial_cocycle(g, form):
    """Trivialising even functional lam with B(x1, y1) = lam([x1, y1]), or None.

    lam must also kill [g0, g0] so that the full cocycle is the coboundary
    of lam; when it exists the extension splits and the splitting is
    verified by construction.
    """
    cocycle_from_form(g, form)
    d0 = g.d0
    rows = []
    rhs = []
    for i in range(d0):
        for j in range(i, d0):
            terms = g.bracket_pair(i, j)
            if terms:
                rows.append({k: v for k, v in terms.items() if k < d0})
                rhs.append(ZERO)
    pos = {i: r for r, i in enumerate(form.indices)}
    for i in g.space.odd_indices():
        for j in g.space.odd_indices():
            if j < i:
                continue
            terms = {k: v for k, v in g.bracket_pair(i, j).items()}
            rows.append(terms)
            rhs.append(form.gram.data[pos[i]][pos[j]])
    mat = Matrix(len(rows), d0)
    for r, row in enumerate(rows):
        for k, v in row.items():
            mat.data[r][k] = v
    res = solve(mat, rhs)
    if res is None:
        return None
    lam = res[0]
    # verify the splitting x -> (lam(x_even), x) exactly
    ext = central_extension(g, form)
    for i in range(g.dim):
        for j in range(i, g.dim):
            want = g.bracket_pair(i, j)
            lam_val = ZERO
            for k, v in want.items():
                if k < d0:
                    lam_val = lam_val + lam[k] * v
            ext_terms = ext.bracket_pair(i + 1, j + 1)
            got0 = ext_terms.get(0, ZERO)
            if got0 != lam_val:
                raise SuperAlgebraError("cocycle splitting verification failed")
    return lam


# ---------------------------------------------------------------------------
# block matrices and matrix realizations
# ---------------------------------------------------------------------------

class BlockMatrix:
    """(p|q)-graded complex matrix with a parity tag.

    Even matrices have vanishing off-diagonal blocks, odd ones vanishing
    diagonal blocks; the supertrace is tr A - tr D.
    """

    __slots__ = ("p", "q", "full", "parity")

    def __init__(self, p, q, full, parity):
        assert full.rows == full.cols == p + q
        self.p = p
        self.q = q
        self.full = full
        self.parity = parity
        for r in range(p + q):
            for c in range(p + q):
                in_diag = (r < p) == (c < p)
                v = full.data[r][c]
                if parity == 0 and not in_diag and not v.is_zero():
                    raise SuperAlgebraError("even block matrix with odd block entries")
                if parity == 1 and in_diag and not v.is_zero():
                    raise SuperAlgebraError("odd block matrix with even block entries")

    @classmethod
    def from_blocks(cls, a=None, b=None, c=None, d=None, p=None, q=None):
        if a is not None:
            p = a.rows
        if d is not None:
            q = d.rows
        if b is not None:
            p, q = b.rows, b.cols
        full = Matrix(p + q, p + q)
        parity = 1 if (a is None and d is None) else 0
        if a is not None:
            for i in range(p):
                for j in range(p):
                    full.data[i][j] = a.data[i][j]
        if d is not None:
            for i in range(q):
                for j in range(q):
                    full.data[p + i][p + j] = d.data[i][j]
        if b is not None:
            parity = 1
            for i in range(p):
                for j in range(q):
                    full.data[i][p + j] = b.data[i][j]
        if c is not None:
            parity = 1
            for i in range(q):
                for j in range(p):
                    full.data[p + i][j] = c.data[i][j]
        return cls(p, q, full, parity)

    def block(self, which):
        p, q = self.p, self.q
        if which == "a":
            return Matrix(p, p, [row[:p] for row in self.full.data[:p]])
        if which == "b":
            return Matrix(p, q, [row[p:] for row in self.full.data[:p]])
        if which == "c":
            return Matrix(q, p, [row[:p] for row in self.full.data[p:]])
        return Matrix(q, q, [row[p:] for row in self.full.data[p:]])

    def supertrace(self):
        t = ZERO
        for i in range(self.p):
            t = t + self.full.data[i][i]
        for i in range(self.p, self.p + self.q):
            t = t - self.full.data[i][i]
        return t


def realify_matrix(m):
    """Flatten a complex matrix to rational coordinates, (e, ie) convention."""
    out = []
    for row in m.data:
        for a in row:
            out.append(Scalar(a.re))
            out.append(Scalar(a.im))
    return out


def supercommutator(x, y, px, py):
    xy = x @ y
    yx = y @ x
    if px and py:
        return xy + yx
    return xy - yx


class MatrixRealization:
    """Coordinate map between a structure-constant algebra and its matrices."""

    def __init__(self, mats, parities, p, q):
        self.mats = mats
        self.parities = parities
        self.p = p
        self.q = q
        n = p + q
        self.coord_dim = 2 * n * n
        self.solver = LinSolver([realify_matrix(m) for m in mats], self.coord_dim)

    def to_matrix(self, coords):
        n = self.p + self.q
        out = Matrix(n, n)
        for c, m in zip(coords, self.mats):
            if not c.is_zero():
                out = out + m.scale(c)
        return out

    def from_matrix(self, m):
        """Real coordinates of a matrix in the spanning basis, or None."""
        coords = self.solver.coords(realify_matrix(m))
        if coords is None:
            return None
        for c in coords:
            if not c.is_real():
                return None
        return coords


def from_matrix_span(blocks):
    """SuperAlgebra of a bracket-closed real span of block matrices.

    Input order must be even matrices first.  Returns (algebra, realization);
    raises NotClosedError when a supercommutator leaves the real span, and
    reports a parity violation when a bracket lands in wrong-parity
    coordinates.
    """
    parities = [bm.parity for bm in blocks]
    if any(p1 < p0 for p0, p1 in zip(parities, parities[1:])):
        raise SuperAlgebraError("even matrices must precede odd ones")
    p, q = blocks[0].p, blocks[0].q
    mats = [bm.full for bm in blocks]
    real = MatrixRealization(mats, parities, p, q)
    n = len(blocks)
    space = SuperSpace.make(n - sum(parities), sum(parities))
    table = {}
    for i in range(n):
        for j in range(i, n):
            if i == j and parities[i] == 0:
                continue
            m = supercommutator(mats[i], mats[j], parities[i], parities[j])
            if m.is_zero():
                continue
            coords = real.from_matrix(m)
            if coords is None:
                raise NotClosedError(i, j, m)
            want = (parities[i] + parities[j]) % 2
            terms = {}
            for k, c in enumerate(coords):
                if c.is_zero():
                    continue
                if parities[k] != want:
                    raise SuperAlgebraError(
                        "parity violation: bracket (%d,%d) meets basis %d" % (i, j, k))
                terms[k] = c
            if terms:
                table[(i, j)] = terms
    alg = SuperAlgebra(space, table, meta={"realization": real})
    return alg, real


# ---------------------------------------------------------------------------
# subalgebra extraction
# ---------------------------------------------------------------------------

def subalgebra_from_subspace(g, s):
    """Structure constants of a bracket-closed graded subspace.

    Returns (algebra, basis vectors in ambient coordinates, even first).
    """
    ev, od = s.parity_components(g.space.parities)
    if ev.dim + od.dim != s.dim:
        raise SuperAlgebraError("subspace is not graded")
    vecs = list(ev.basis) + list(od.basis)
    solver = LinSolver(vecs, g.dim)
    space = SuperSpace.make(ev.dim, od.dim)
    table = {}
    for a in range(len(vecs)):
        for b in range(a, len(vecs)):
            if a == b and a < ev.dim:
                continue
            w = g.bracket(vecs[a], vecs[b])
            if vec_is_zero(w):
                continue
            coords = solver.coords(w)
            if coords is None:
                raise SuperAlgebraError("subspace is not bracket closed")
            terms = {k: c for k, c in enumerate(coords) if not c.is_zero()}
            if terms:
                table[(a, b)] = terms
    return SuperAlgebra(space, table), vecs


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def algebra_to_json_dict(g, name):
    basis = [{"id": g.space.labels[i], "parity": g.parity(i)}
             for i in range(g.dim)]
    brackets = []
    for (i, j) in sorted(g.table):
        terms = [{"k": str(k), "num": str(v.re.numerator), "den": str(v.re.denominator)}
                 for k, v in sorted(g.table[(i, j)].items())]
        brackets.append({"i": str(i), "j": str(j), "terms": terms})
    return {"name": name, "basis": basis, "brackets": brackets}


def algebra_from_json_dict(obj):
    labels = [b["id"] for b in obj["basis"]]
    parities = [int(b["parity"]) for b in obj["basis"]]
    space = SuperSpace(labels, parities)
    table = {}
    for ent in obj["brackets"]:
        i, j = int(ent["i"]), int(ent["j"])
        terms = {}
        for t in ent["terms"]:
            terms[int(t["k"])] = Scalar(Fraction(int(t["num"]), int(t["den"])))
        table[(i, j)] = terms
    return SuperAlgebra(space, table, meta={"name": obj.get("name", "")})


def tables_equal(g, h):
    """Structure-constant identity on aligned bases."""
    if g.dim != h.dim or g.space.parities != h.space.parities:
        return False
    keys = set(g.table) | set(h.table)
    for key in keys:
        if g.table.get(key, {}) != h.table.get(key, {}):
            return False
    return True
