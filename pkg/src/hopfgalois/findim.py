"""Finite-dimensional algebras and exact linear maps.

FinDimAlg stores an algebra by structure constants over an exact field;
algebra_make validates associativity and the unit on all basis triples
and returns either the algebra or a failing Report with the first
witness. LinMap is a dense matrix tagged with domain and codomain tensor
words over named spaces, so compositions and tensor products are
dimension- and order-checked; the twist map is always an explicit
matrix, never an implicit reindexing.

Elimination divides once per pivot row; everything else is
multiply-and-subtract, keeping cyclotomic and rational-function entries
tame. Verifier-facing constructions refuse tensor words whose total
dimension exceeds 4096.
"""

from . import exprs
from .reports import Report

DIM_GUARD = 4096


class Space:
    def __init__(self, name, dim):
        self.name = name
        self.dim = dim

    def __eq__(self, other):
        return (isinstance(other, Space) and other.name == self.name
                and other.dim == self.dim)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.name, self.dim))

    def __repr__(self):
        return "%s[%d]" % (self.name, self.dim)


def word_dim(word):
    n = 1
    for sp in word:
        n *= sp.dim
    if n > DIM_GUARD:
        raise ValueError("tensor word dimension %d exceeds the %d guard"
                         % (n, DIM_GUARD))
    return n


# dense matrices: list of rows, each a list of field values


def zero_mat(field, rows, cols):
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def identity_mat(field, n):
    m = zero_mat(field, n, n)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_add(field, a, b):
    return [[field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(field, a, b):
    return [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(field, c, a):
    return [[field.mul(c, x) for x in row] for row in a]


def mat_mul(field, a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    zero = field.zero()
    out = []
    for i in range(rows):
        arow = a[i]
        row = [zero] * cols
        for k in range(inner):
            c = arow[k]
            if field.is_zero(c):
                continue
            brow = b[k]
            for j in range(cols):
                if not field.is_zero(brow[j]):
                    row[j] = field.add(row[j], field.mul(c, brow[j]))
        out.append(row)
    return out


def mat_apply(field, a, vec):
    zero = field.zero()
    out = []
    for row in a:
        acc = zero
        for x, v in zip(row, vec):
            if not (field.is_zero(x) or field.is_zero(v)):
                acc = field.add(acc, field.mul(x, v))
        out.append(acc)
    return out


def kron_mat(field, a, b):
    if not a or not b:
        return [[]]
    out = []
    for ra in a:
        for rb in b:
            row = []
            for x in ra:
                if field.is_zero(x):
                    row.extend([field.zero()] * len(rb))
                else:
                    row.extend(field.mul(x, y) for y in rb)
            out.append(row)
    return out


def rref(field, mat):
    """Reduced row echelon form, in place on a copy; returns (matrix,
    pivot column list). One division per pivot row."""
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not field.is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def mat_rank(field, mat):
    if not mat or not mat[0]:
        return 0
    return len(rref(field, mat)[1])


def kernel_basis(field, mat):
    """Basis of the right kernel as a list of dense vectors."""
    if not mat:
        return []
    cols = len(mat[0])
    r, pivots = rref(field, mat)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero()] * cols
        vec[fc] = field.one()
        for row_idx, pc in enumerate(pivots):
            vec[pc] = field.neg(r[row_idx][fc])
        basis.append(vec)
    return basis


def solve(field, mat, rhs):
    """One exact solution of mat. x = rhs, or None if inconsistent."""
    if not mat:
        return None if any(not field.is_zero(v) for v in rhs) else []
    cols = len(mat[0])
    aug = [list(row) + [v] for row, v in zip(mat, rhs)]
    r, pivots = rref(field, aug)
    for row_idx, pc in enumerate(pivots):
        if pc == cols:
            return None
    x = [field.zero()] * cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx][cols]
    return x


def mat_inverse(field, mat):
    n = len(mat)
    if n == 0:
        return []
    if any(len(row) != n for row in mat):
        return None
    aug = [list(row) + list(idr) for row, idr in zip(mat, identity_mat(field, n))]
    r, pivots = rref(field, aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in r[:n]]


class LinMap:
    """Exact matrix with typed domain and codomain tensor words."""

    def __init__(self, dom, cod, rows, field):
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.field = field
        dd, cd = word_dim(self.dom), word_dim(self.cod)
        if len(rows) != cd or any(len(r) != dd for r in rows):
            raise ValueError("matrix shape %dx%d does not match words %r -> %r"
                             % (len(rows), len(rows[0]) if rows else 0,
                                self.dom, self.cod))
        self.rows = rows

    @property
    def dom_dim(self):
        return word_dim(self.dom)

    @property
    def cod_dim(self):
        return word_dim(self.cod)

    def apply(self, vec):
        return mat_apply(self.field, self.rows, vec)

    def compose(self, other):
        # self after other
        if other.cod != self.dom:
            raise ValueError("composition mismatch: %r then %r" %
                             (other.cod, self.dom))
        return LinMap(other.dom, self.cod,
                      mat_mul(self.field, self.rows, other.rows), self.field)

    def tensor(self, other):
        return LinMap(self.dom + other.dom, self.cod + other.cod,
                      kron_mat(self.field, self.rows, other.rows), self.field)

    def add(self, other):
        if other.dom != self.dom or other.cod != self.cod:
            raise ValueError("sum shape mismatch")
        return LinMap(self.dom, self.cod,
                      mat_add(self.field, self.rows, other.rows), self.field)

    def sub(self, other):
        if other.dom != self.dom or other.cod != self.cod:
            raise ValueError("difference shape mismatch")
        return LinMap(self.dom, self.cod,
                      mat_sub(self.field, self.rows, other.rows), self.field)

    def __eq__(self, other):
        return (isinstance(other, LinMap) and other.dom == self.dom
                and other.cod == self.cod and other.rows == self.rows)

    def __ne__(self, other):
        return not self.__eq__(other)

    def rank(self):
        return mat_rank(self.field, self.rows)

    def is_zero(self):
        return all(self.field.is_zero(x) for row in self.rows for x in row)

    def __repr__(self):
        return "LinMap(%r -> %r)" % (list(self.dom), list(self.cod))


def identity_map(field, word):
    return LinMap(word, word, identity_mat(field, word_dim(word)), field)


def zero_map(field, dom, cod):
    return LinMap(dom, cod, zero_mat(field, word_dim(cod), word_dim(dom)), field)


def twist_map(field, sp1, sp2):
    """tau: V1 tensor V2 -> V2 tensor V1."""
    d1, d2 = sp1.dim, sp2.dim
    rows = zero_mat(field, d1 * d2, d1 * d2)
    one = field.one()
    for a in range(d1):
        for b in range(d2):
            rows[b * d1 + a][a * d2 + b] = one
    return LinMap((sp1, sp2), (sp2, sp1), rows, field)


class FinDimAlg:
    """Algebra by structure constants: mult[i][j] is a sparse vector
    {k: c} with e_i e_j = sum c e_k; unit is a sparse vector."""

    def __init__(self, field, labels, mult, unit, name="A"):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.mult = mult
        self.unit = dict(unit)
        self.name = name

    def space(self):
        return Space(self.name, self.dim)

    def basis_vec(self, i):
        return {i: self.field.one()}

    def mult_vec(self, u, v):
        field = self.field
        out = {}
        for i, ci in u.items():
            row = self.mult[i]
            for j, cj in v.items():
                c = field.mul(ci, cj)
                for k, ck in row[j].items():
                    acc = field.add(out.get(k, field.zero()), field.mul(c, ck))
                    if field.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def unit_vec(self):
        return dict(self.unit)

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i))

    def dense(self, sparse):
        vec = [self.field.zero()] * self.dim
        for i, c in sparse.items():
            vec[i] = c
        return vec

    def sparse(self, dense):
        return {i: c for i, c in enumerate(dense) if not self.field.is_zero(c)}

    def show_vec(self, vec):
        if isinstance(vec, list):
            vec = self.sparse(vec)
        if not vec:
            return "0"
        field = self.field
        parts = []
        for i in sorted(vec):
            cs = field.show(vec[i])
            if " " in cs:
                cs = "(%s)" % cs
            body = (self.labels[i] if cs == "1"
                    else "-" + self.labels[i] if cs == "-1"
                    else "%s*%s" % (cs, self.labels[i]))
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    def mult_map(self):
        sp = self.space()
        rows = zero_mat(self.field, self.dim, self.dim * self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.mult[i][j].items():
                    rows[k][i * self.dim + j] = c
        return LinMap((sp, sp), (sp,), rows, self.field)

    def unit_map(self):
        rows = [[self.unit.get(i, self.field.zero())] for i in range(self.dim)]
        return LinMap((), (self.space(),), rows, self.field)

    def left_mult_matrix(self, vec):
        rows = zero_mat(self.field, self.dim, self.dim)
        field = self.field
        for j in range(self.dim):
            out = self.mult_vec(vec, self.basis_vec(j))
            for k, c in out.items():
                rows[k][j] = c
        return rows

    def __repr__(self):
        return "FinDimAlg(%s, dim=%d)" % (self.name, self.dim)


def _normalize_mult(field, dim, mult):
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for (i, j), entry in mult.items():
        cell = {}
        items = entry.items() if isinstance(entry, dict) else enumerate(entry)
        for k, c in items:
            if not field.is_zero(c):
                cell[k] = c
        table[i][j] = cell
    return table


def algebra_validate(alg):
    rep = Report("algebra")
    field = alg.field
    witness = None
    for i in range(alg.dim):
        if witness:
            break
        for j in range(alg.dim):
            if witness:
                break
            ij = alg.mult_vec(alg.basis_vec(i), alg.basis_vec(j))
            for k in range(alg.dim):
                left = alg.mult_vec(ij, alg.basis_vec(k))
                right = alg.mult_vec(alg.basis_vec(i),
                                     alg.mult_vec(alg.basis_vec(j), alg.basis_vec(k)))
                if left != right:
                    witness = "(%s,%s,%s)" % (alg.labels[i], alg.labels[j],
                                              alg.labels[k])
                    break
    rep.add("associativity", witness is None, witness=witness)
    uw = None
    for i in range(alg.dim):
        e = alg.basis_vec(i)
        if alg.mult_vec(alg.unit, e) != e or alg.mult_vec(e, alg.unit) != e:
            uw = alg.labels[i]
            break
    rep.add("unit", uw is None, witness=uw)
    return rep


def algebra_make(field, labels, mult, unit, name="A"):
    """Validated algebra from structure constants, or the failing Report.

    mult maps basis index pairs (i, j) to the product's coordinates
    (sparse dict or dense list); missing pairs multiply to zero. unit is
    the coordinate vector of 1.
    """
    labels = tuple(labels)
    dim = len(labels)
    table = _normalize_mult(field, dim, mult)
    uvec = (unit if isinstance(unit, dict)
            else {i: c for i, c in enumerate(unit) if not field.is_zero(c)})
    alg = FinDimAlg(field, labels, table, uvec, name=name)
    rep = algebra_validate(alg)
    if not rep.ok:
        return rep
    return alg


def tensor_alg(a, b, name=None):
    """Structure constants of A tensor B on the product basis; skips
    revalidation since associativity and the unit are inherited."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    field = a.field
    labels = ["%s@%s" % (la, lb) for la in a.labels for lb in b.labels]
    dim = a.dim * b.dim
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for i1 in range(a.dim):
        for i2 in range(b.dim):
            i = i1 * b.dim + i2
            for j1 in range(a.dim):
                for j2 in range(b.dim):
                    j = j1 * b.dim + j2
                    cell = {}
                    for k1, c1 in a.mult[i1][j1].items():
                        for k2, c2 in b.mult[i2][j2].items():
                            cell[k1 * b.dim + k2] = field.mul(c1, c2)
                    table[i][j] = cell
    unit = {}
    for i1, c1 in a.unit.items():
        for i2, c2 in b.unit.items():
            unit[i1 * b.dim + i2] = field.mul(c1, c2)
    return FinDimAlg(field, labels, table, unit,
                     name=name or "%s@%s" % (a.name, b.name))


def opposite(a):
    table = [[a.mult[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return FinDimAlg(a.field, a.labels, table, dict(a.unit), name=a.name + "^op")


def convolution(f, g, delta, m):
    """m . (f tensor g) . delta, the convolution product of maps into an
    algebra from a coalgebra."""
    return m.compose(f.tensor(g)).compose(delta)


def convolution_inverse(f, delta, m, unit_counit):
    """Solve f * g = unit_counit = g * f exactly; None if no solution.

    The convolution monoid has at most one two-sided inverse, so any
    solution of the combined linear system is the inverse.
    """
    field = f.field
    nc = word_dim(f.dom)   # coalgebra dimension
    na = word_dim(f.cod)   # algebra dimension
    # unknowns: g[a][c] flattened as a * nc + c
    rows = []
    rhs = []
    mrows = m.rows
    drows = delta.rows
    frows = f.rows
    for j in range(nc):
        # delta(c_j) coefficients d[(p, q)]
        dcol = [drows[t][j] for t in range(nc * nc)]
        for b in range(na):
            row_fg = [field.zero()] * (na * nc)
            row_gf = [field.zero()] * (na * nc)
            for p in range(nc):
                for q in range(nc):
                    d = dcol[p * nc + q]
                    if field.is_zero(d):
                        continue
                    for a1 in range(na):
                        fa1 = frows[a1][p]
                        if not field.is_zero(fa1):
                            for a2 in range(na):
                                c = mrows[b][a1 * na + a2]
                                if not field.is_zero(c):
                                    row_fg[a2 * nc + q] = field.add(
                                        row_fg[a2 * nc + q],
                                        field.mul(d, field.mul(fa1, c)))
                    for a2 in range(na):
                        fa2 = frows[a2][q]
                        if not field.is_zero(fa2):
                            for a1 in range(na):
                                c = mrows[b][a1 * na + a2]
                                if not field.is_zero(c):
                                    row_gf[a1 * nc + p] = field.add(
                                        row_gf[a1 * nc + p],
                                        field.mul(d, field.mul(fa2, c)))
            target = unit_counit.rows[b][j]
            rows.append(row_fg)
            rhs.append(target)
            rows.append(row_gf)
            rhs.append(target)
    sol = solve(field, rows, rhs)
    if sol is None:
        return None
    g_rows = [[sol[a * nc + c] for c in range(nc)] for a in range(na)]
    return LinMap(f.dom, f.cod, g_rows, field)


def subspace_solve(constraint, targets=()):
    """Basis of {x : constraint(x) lies in span(targets)} with the rank of
    the constraint reported; empty targets give the kernel."""
    field = constraint.field
    mat = [list(row) for row in constraint.rows]
    cols = len(mat[0]) if mat else 0
    tlist = [list(t) for t in targets]
    if tlist:
        # augment columns with -targets; kernel rows restricted to x part
        aug = [row + [field.neg(t[i]) for t in tlist] for i, row in enumerate(mat)]
        ker = kernel_basis(field, aug)
        sols = [v[:cols] for v in ker]
        # reduce to an independent set in the x coordinates
        red, pivots = rref(field, sols) if sols else ([], [])
        basis = [red[i] for i in range(len(pivots))]
    else:
        basis = kernel_basis(field, mat)
    return basis, mat_rank(field, mat)


class _VecExprContext:
    """Evaluate element expressions over a tensor word of algebras.

    Values are segment lists; a segment is ('s', scalar) or
    ('w', [algebra factors], sparse vec over their product). '@'
    concatenates segments; '+', '-' and '*' force both sides onto a
    common concrete word; scalar segments resolve to unit multiples
    against whatever word the context supplies (the other operand, or
    the target word at the end).
    """

    def __init__(self, algs):
        self.algs = list(algs)
        self.field = self.algs[0].field

    def const(self, n):
        return [("s", self.field.from_int(n))]

    def sym(self, name):
        hits = [alg for alg in dict.fromkeys(self.algs) if name in alg.index]
        if not hits:
            raise exprs.ExprError("unknown basis label %r" % name)
        if len(hits) > 1:
            raise exprs.ExprError("ambiguous label %r" % name)
        alg = hits[0]
        return [("w", [alg], alg.basis_vec(alg.index[name]))]

    def tensor(self, a, b):
        return a + b

    def _word_or_none(self, segs):
        word = []
        for seg in segs:
            if seg[0] == "s":
                return None
            word.extend(seg[1])
        return word

    def _concretize(self, segs, word):
        """Kron the segments into one sparse vector over word, resolving
        scalar segments to scaled units (one factor each, or the whole
        word for a lone scalar)."""
        if len(segs) == 1 and segs[0][0] == "s":
            c = segs[0][1]
            vec = {0: c}
            for alg in word:
                nxt = {}
                for base, cv in vec.items():
                    for i, cu in alg.unit.items():
                        nxt[base * alg.dim + i] = self.field.mul(cv, cu)
                vec = nxt
            return vec
        pos = 0
        vecs, dims = [], []
        for seg in segs:
            if seg[0] == "s":
                if pos >= len(word):
                    raise exprs.ExprError("tensor expression too long")
                alg = word[pos]
                vecs.append({i: self.field.mul(seg[1], c)
                             for i, c in alg.unit.items()})
                dims.append(alg.dim)
                pos += 1
            else:
                sub = seg[1]
                if [x.name for x in word[pos:pos + len(sub)]] != [x.name for x in sub]:
                    raise exprs.ExprError("tensor factor word mismatch")
                vecs.append(seg[2])
                dims.append(1)
                for alg in sub:
                    dims[-1] *= alg.dim
                pos += len(sub)
        if pos != len(word):
            raise exprs.ExprError("tensor expression has the wrong number "
                                  "of factors")
        return _kron_sparse(self.field, vecs, dims)

    def _both(self, a, b):
        wa = self._word_or_none(a)
        wb = self._word_or_none(b)
        word = wa if wa is not None else wb
        if word is None:
            raise exprs.ExprError("cannot infer tensor factors of a scalar")
        if wa is not None and wb is not None:
            if [x.name for x in wa] != [x.name for x in wb]:
                raise exprs.ExprError("mismatched tensor words")
        return word, self._concretize(a, word), self._concretize(b, word)

    def add(self, a, b):
        if len(a) == 1 and len(b) == 1 and a[0][0] == "s" and b[0][0] == "s":
            return [("s", self.field.add(a[0][1], b[0][1]))]
        word, va, vb = self._both(a, b)
        for k, c in vb.items():
            acc = self.field.add(va.get(k, self.field.zero()), c)
            if self.field.is_zero(acc):
                va.pop(k, None)
            else:
                va[k] = acc
        return [("w", word, va)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return self._scale(self.field.neg(self.field.one()), a)

    def mul(self, a, b):
        if len(a) == 1 and a[0][0] == "s":
            return self._scale(a[0][1], b)
        if len(b) == 1 and b[0][0] == "s":
            return self._scale(b[0][1], a)
        word, va, vb = self._both(a, b)
        return [("w", word, _word_mult(self.field, word, va, vb))]

    def _scale(self, c, segs):
        if len(segs) == 1 and segs[0][0] == "s":
            return [("s", self.field.mul(c, segs[0][1]))]
        out = list(segs)
        for idx, seg in enumerate(out):
            if seg[0] == "s":
                out[idx] = ("s", self.field.mul(c, seg[1]))
                return out
        word, vec = out[0][1], out[0][2]
        out[0] = ("w", word, {k: self.field.mul(c, v) for k, v in vec.items()})
        return out

    def div(self, a, b):
        if len(b) == 1 and b[0][0] == "s":
            return self._scale(self.field.inv(b[0][1]), a)
        raise exprs.ExprError("division only by scalars")

    def pow(self, a, n):
        if len(a) == 1 and a[0][0] == "s":
            return [("s", self.field.pow(a[0][1], n))]
        if n < 0:
            raise exprs.ExprError("negative powers only for scalars")
        out = [("s", self.field.one())]
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def finish(self, segs, target):
        return self._concretize(segs, list(target))


def _kron_sparse(field, vecs, dims):
    out = {0: field.one()}
    for vec, d in zip(vecs, dims):
        nxt = {}
        for base, c in out.items():
            for i, v in vec.items():
                nxt[base * d + i] = field.mul(c, v)
        out = nxt
    return out


def _word_mult(field, word, u, v):
    dims = [a.dim for a in word]

    def split(flat):
        idx = []
        for d in reversed(dims):
            idx.append(flat % d)
            flat //= d
        return tuple(reversed(idx))

    def join(idx):
        flat = 0
        for i, d in zip(idx, dims):
            flat = flat * d + i
        return flat

    out = {}
    for fu, cu in u.items():
        iu = split(fu)
        for fv, cv in v.items():
            iv = split(fv)
            coef = field.mul(cu, cv)
            combos = [word[t].mult_vec({iu[t]: field.one()}, {iv[t]: field.one()})
                      for t in range(len(dims))]
            partial = {(): coef}
            for t, cell in enumerate(combos):
                nxt = {}
                for key, c in partial.items():
                    for k, ck in cell.items():
                        nxt[key + (k,)] = field.mul(c, ck)
                partial = nxt
            for key, c in partial.items():
                flat = join(key)
                accv = field.add(out.get(flat, field.zero()), c)
                if field.is_zero(accv):
                    out.pop(flat, None)
                else:
                    out[flat] = accv
    return out


def parse_element(algs, s):
    """Evaluate an element expression over the tensor word algs (a list of
    FinDimAlg factors); returns a sparse vector over the product basis."""
    ctx = _VecExprContext(algs)
    comps = exprs.evaluate(s, ctx)
    return ctx.finish(comps, list(algs))
