"""Named skew polynomial algebra constructions.

catalog(name, **params) builds a presentation for each of the stock
algebras: Weyl algebras, shift and mixed operator algebras, discrete
linear systems, quantum planes and quantum affine space, the additive
and multiplicative Weyl analogues, the q-Heisenberg and Hayashi
algebras, the dispin algebra, enveloping algebras of sl2 and its
quantum and so3 cousins, diffusion algebras, the three-variable
classification cases, and Sridharan enveloping algebras of Lie structure
data with a 2-cochain.

sridharan builds the presentation raw, without validating its inputs;
that is deliberate, so that pbw_check can detect Jacobi or cocycle
failures. lie_jacobi_ok and lie_cocycle_ok decide those conditions
directly.
"""

from .coeffring import DerivSpec, EndoSpec, ring_make
from .scalars import RationalFunctions, Rationals
from .skewpbw import PairRelation, Presentation

RAT = Rationals()


def _scalar(field, v):
    if isinstance(v, str):
        return field.parse(v)
    if isinstance(v, int):
        return field.from_int(v)
    return v


class LieData:
    """A finite-dimensional algebra-with-bracket presentation: basis names
    and structure constants brackets[(i, j)] = coordinates of [e_i, e_j]
    for i < j. Antisymmetry is built in; the Jacobi identity is not."""

    def __init__(self, field, names, brackets):
        self.field = field
        self.names = tuple(names)
        self.dim = len(self.names)
        self.brackets = {}
        for (i, j), coords in brackets.items():
            if not 0 <= i < j < self.dim:
                raise ValueError("bracket key (%d, %d) out of order" % (i, j))
            coords = tuple(_scalar(field, c) for c in coords)
            if len(coords) != self.dim:
                raise ValueError("bracket value needs %d coordinates" % self.dim)
            if any(not field.is_zero(c) for c in coords):
                self.brackets[(i, j)] = coords

    def bracket(self, i, j):
        zero = (self.field.zero(),) * self.dim
        if i == j:
            return zero
        if i < j:
            return self.brackets.get((i, j), zero)
        coords = self.brackets.get((j, i), zero)
        return tuple(self.field.neg(c) for c in coords)

    def bracket_vec(self, u, v):
        # bilinear extension to coordinate vectors
        field = self.field
        out = [field.zero()] * self.dim
        for i, ci in enumerate(u):
            if field.is_zero(ci):
                continue
            for j, cj in enumerate(v):
                if field.is_zero(cj):
                    continue
                w = self.bracket(i, j)
                for k in range(self.dim):
                    out[k] = field.add(out[k], field.mul(field.mul(ci, cj), w[k]))
        return tuple(out)


class LieCocycle:
    """Antisymmetric bilinear form on a LieData basis: values[(i, j)] =
    f(e_i, e_j) for i < j. The 2-cocycle identity is not assumed."""

    def __init__(self, lie, values=None):
        self.lie = lie
        self.values = {}
        for (i, j), v in (values or {}).items():
            if not 0 <= i < j < lie.dim:
                raise ValueError("cocycle key (%d, %d) out of order" % (i, j))
            v = _scalar(lie.field, v)
            if not lie.field.is_zero(v):
                self.values[(i, j)] = v

    def pair(self, i, j):
        field = self.lie.field
        if i == j:
            return field.zero()
        if i < j:
            return self.values.get((i, j), field.zero())
        return field.neg(self.values.get((j, i), field.zero()))

    def pair_vec(self, u, v):
        field = self.lie.field
        out = field.zero()
        for i, ci in enumerate(u):
            for j, cj in enumerate(v):
                out = field.add(out, field.mul(field.mul(ci, cj), self.pair(i, j)))
        return out


def lie_jacobi_ok(lie):
    """(witness triple or None): first basis triple violating Jacobi."""
    field = lie.field
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            for k in range(j + 1, lie.dim):
                ei = tuple(field.from_int(1 if t == i else 0) for t in range(lie.dim))
                ej = tuple(field.from_int(1 if t == j else 0) for t in range(lie.dim))
                ek = tuple(field.from_int(1 if t == k else 0) for t in range(lie.dim))
                acc = [field.zero()] * lie.dim
                for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                    w = lie.bracket_vec(lie.bracket_vec(a, b), c)
                    acc = [field.add(x, y) for x, y in zip(acc, w)]
                if any(not field.is_zero(x) for x in acc):
                    return (i, j, k)
    return None


def lie_cocycle_ok(lie, f):
    """(witness triple or None): first basis triple where the 2-cocycle
    identity f([x,y],z) + f([y,z],x) + f([z,x],y) = 0 fails."""
    field = lie.field
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            for k in range(j + 1, lie.dim):
                ei = tuple(field.from_int(1 if t == i else 0) for t in range(lie.dim))
                ej = tuple(field.from_int(1 if t == j else 0) for t in range(lie.dim))
                ek = tuple(field.from_int(1 if t == k else 0) for t in range(lie.dim))
                acc = field.zero()
                for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                    acc = field.add(acc, f.pair_vec(lie.bracket_vec(a, b), c))
                if not field.is_zero(acc):
                    return (i, j, k)
    return None


def lie_abelian(n, field=RAT, names=None):
    return LieData(field, names or ["x%d" % (i + 1) for i in range(n)], {})


def lie_heisenberg(field=RAT):
    # [x, y] = z central
    one = field.one()
    z = (field.zero(), field.zero(), one)
    return LieData(field, ["x", "y", "z"], {(0, 1): z})


def lie_sl2(field=RAT):
    # basis x, y, h with [x,y] = h, [h,x] = 2x, [h,y] = -2y
    zero, one = field.zero(), field.one()
    two = field.from_int(2)
    return LieData(field, ["x", "y", "h"], {
        (0, 1): (zero, zero, one),
        (0, 2): (field.neg(two), zero, zero),
        (1, 2): (zero, two, zero),
    })


def _weyl(n=1, field=RAT):
    if n < 1:
        raise ValueError("need at least one variable")
    tnames = ["t"] if n == 1 else ["t%d" % (i + 1) for i in range(n)]
    xnames = ["x"] if n == 1 else ["x%d" % (i + 1) for i in range(n)]
    ring = ring_make(field, tnames)
    delta = {}
    for i, xn in enumerate(xnames):
        images = {t: (ring.one() if k == i else ring.zero())
                  for k, t in enumerate(tnames)}
        delta[xn] = DerivSpec(ring, images)
    return Presentation(ring, xnames, delta=delta)


def _shift(h=1, field=RAT):
    ring = ring_make(field, ["t"])
    hval = _scalar(field, h)
    sigma = EndoSpec(ring, {"t": ring.gen("t") - ring.from_scalar(hval)})
    return Presentation(ring, ["x"], sigma={"x": sigma})


def _mixed(h=1, field=RAT):
    ring = ring_make(field, ["t"])
    hval = _scalar(field, h)
    delta = DerivSpec(ring, {"t": ring.one()})
    sigma_h = EndoSpec(ring, {"t": ring.gen("t") - ring.from_scalar(hval)})
    return Presentation(ring, ["x", "x_h"],
                        sigma={"x_h": sigma_h}, delta={"x": delta})


def _discrete_linear(n=2, field=RAT):
    if n < 1:
        raise ValueError("need at least one variable")
    tnames = ["t%d" % (i + 1) for i in range(n)]
    xnames = ["x%d" % (i + 1) for i in range(n)]
    ring = ring_make(field, tnames)
    sigma = {}
    for i, xn in enumerate(xnames):
        images = {t: (ring.gen(t) + ring.one() if k == i else ring.gen(t))
                  for k, t in enumerate(tnames)}
        sigma[xn] = EndoSpec(ring, images)
    return Presentation(ring, xnames, sigma=sigma)


def _quantum_plane(lam=None, field=None):
    field = field or RationalFunctions("q")
    lam = _scalar(field, lam) if lam is not None else field.parse("q^-2")
    if field.is_zero(lam):
        raise ValueError("twist parameter must be nonzero")
    ring = ring_make(field, [])
    rel = PairRelation(ring.from_scalar(lam))
    return Presentation(ring, ["x", "y"], pairs={("y", "x"): rel})


def _quantum_affine(n=2, lam=None, field=None):
    field = field or RationalFunctions("q")
    names = ["x%d" % (i + 1) for i in range(n)]
    ring = ring_make(field, [])
    q = field.gen() if isinstance(field, RationalFunctions) else field.from_int(2)
    pairs = {}
    for j in range(1, n):
        for i in range(j):
            v = (lam or {}).get((i + 1, j + 1), q)
            v = _scalar(field, v)
            if field.is_zero(v):
                raise ValueError("twist parameter must be nonzero")
            pairs[(names[j], names[i])] = PairRelation(ring.from_scalar(v))
    return Presentation(ring, names, pairs=pairs)


def _multiplicative_weyl(n=2, lam=None, field=None):
    return _quantum_affine(n, lam, field)


def _additive_weyl(qs=("q",), field=None):
    field = field or RationalFunctions("q")
    qvals = [_scalar(field, v) for v in qs]
    if any(field.is_zero(v) for v in qvals):
        raise ValueError("twist parameter must be nonzero")
    n = len(qvals)
    xnames = ["x%d" % (i + 1) for i in range(n)]
    ynames = ["y%d" % (i + 1) for i in range(n)]
    ring = ring_make(field, [])
    # same-index pair carries the twist and the +1; everything else commutes
    pairs = {(ynames[i], xnames[i]): PairRelation(ring.from_scalar(qvals[i]),
                                                  const=ring.one())
             for i in range(n)}
    return Presentation(ring, xnames + ynames, pairs=pairs)


def _q_heisenberg(q="q", n=1, field=None):
    field = field or RationalFunctions("q")
    qval = _scalar(field, q)
    if field.is_zero(qval):
        raise ValueError("twist parameter must be nonzero")
    ring = ring_make(field, [])
    names = []
    for i in range(n):
        suffix = "" if n == 1 else str(i + 1)
        names += ["x" + suffix, "y" + suffix, "z" + suffix]
    pairs = {}
    qinv = field.inv(qval)
    for i in range(n):
        x, y, z = names[3 * i], names[3 * i + 1], names[3 * i + 2]
        pairs[(y, x)] = PairRelation(ring.from_scalar(qval))
        pairs[(z, y)] = PairRelation(ring.from_scalar(qval))
        pairs[(z, x)] = PairRelation(ring.from_scalar(qinv),
                                     linear={y: ring.one()})
    return Presentation(ring, names, pairs=pairs)


def _hayashi(q="q", n=1, field=None):
    field = field or RationalFunctions("q")
    qval = _scalar(field, q)
    if field.is_zero(qval):
        raise ValueError("twist parameter must be nonzero")
    ynames = ["y%d" % (i + 1) for i in range(n)] if n > 1 else ["y"]
    xnames = ["x%d" % (i + 1) for i in range(n)] if n > 1 else ["x"]
    znames = ["z%d" % (i + 1) for i in range(n)] if n > 1 else ["z"]
    ring = ring_make(field, ynames, laurent=ynames)
    qinv = field.inv(qval)
    sigma = {}
    pairs = {}
    for i in range(n):
        # x y = q^-1 y x and z y = q y z, with z x = q x z + y^-1
        sigma[xnames[i]] = EndoSpec(ring, {
            yn: ring.gen(yn).scale(qinv) if k == i else ring.gen(yn)
            for k, yn in enumerate(ynames)})
        sigma[znames[i]] = EndoSpec(ring, {
            yn: ring.gen(yn).scale(qval) if k == i else ring.gen(yn)
            for k, yn in enumerate(ynames)})
        pairs[(znames[i], xnames[i])] = PairRelation(
            ring.from_scalar(qval), const=ring.gen(ynames[i]) ** -1)
    return Presentation(ring, xnames + znames, sigma=sigma, pairs=pairs)


def _dispin(field=RAT):
    ring = ring_make(field, [])
    one = ring.one()
    pairs = {
        ("y", "x"): PairRelation(one, linear={"x": -one}),
        ("z", "x"): PairRelation(-one, linear={"y": one}),
        ("z", "y"): PairRelation(one, linear={"z": -one}),
    }
    return Presentation(ring, ["x", "y", "z"], pairs=pairs)


def _u_sl2(field=RAT):
    ring = ring_make(field, [])
    one = ring.one()
    two = ring.from_int(2)
    pairs = {
        ("y", "x"): PairRelation(one, linear={"h": -one}),
        ("h", "x"): PairRelation(one, linear={"x": two}),
        ("h", "y"): PairRelation(one, linear={"y": -two}),
    }
    return Presentation(ring, ["x", "y", "h"], pairs=pairs)


def _uq_sl2(field=None):
    field = field or RationalFunctions("q")
    ring = ring_make(field, ["k"], laurent=["k"])
    q2 = field.parse("q^2")
    sigma_f = EndoSpec(ring, {"k": ring.gen("k").scale(q2)})
    sigma_e = EndoSpec(ring, {"k": ring.gen("k").scale(field.inv(q2))})
    w = (ring.gen("k") - ring.gen("k") ** -1).scale(
        field.inv(field.parse("q - q^-1")))
    pairs = {("e", "f"): PairRelation(ring.one(), const=w)}
    return Presentation(ring, ["f", "e"],
                        sigma={"f": sigma_f, "e": sigma_e}, pairs=pairs)


def _uq_so3(field=None):
    # built over Q(s) with q = s^2 so that the square root of q exists
    field = field or RationalFunctions("s")
    ring = ring_make(field, [])
    q = field.parse("s^2")
    qinv = field.inv(q)
    s = field.parse("s")
    sinv = field.inv(s)
    one = ring.one()
    pairs = {
        ("I2", "I1"): PairRelation(ring.from_scalar(q),
                                   linear={"I3": ring.from_scalar(field.neg(s))}),
        ("I3", "I1"): PairRelation(ring.from_scalar(qinv),
                                   linear={"I2": ring.from_scalar(sinv)}),
        ("I3", "I2"): PairRelation(ring.from_scalar(q),
                                   linear={"I1": ring.from_scalar(field.neg(s))}),
    }
    return Presentation(ring, ["I1", "I2", "I3"], pairs=pairs)


def _diffusion(n=2, a=None, b=None, r=None, field=RAT):
    names = ["x%d" % (i + 1) for i in range(n)]
    ring = ring_make(field, [])
    a = a or {}
    b = b or {}
    r = r or {}
    rvals = [_scalar(field, r.get(i + 1, 1)) for i in range(n)]
    pairs = {}
    for j in range(1, n):
        for i in range(j):
            aij = _scalar(field, a.get((i + 1, j + 1), 2))
            bij = _scalar(field, b.get((i + 1, j + 1), 1))
            if field.is_zero(aij) or field.is_zero(bij):
                raise ValueError("diffusion coefficients must be nonzero")
            binv = field.inv(bij)
            # from a_ij x_i x_j - b_ij x_j x_i = r_j x_i - r_i x_j
            pairs[(names[j], names[i])] = PairRelation(
                ring.from_scalar(field.mul(aij, binv)),
                linear={names[j]: ring.from_scalar(field.mul(rvals[i], binv)),
                        names[i]: ring.from_scalar(field.neg(field.mul(rvals[j], binv)))})
    return Presentation(ring, names, pairs=pairs)


_THREEDIM_CASES = {
    # case -> (alpha, beta, gamma, yz-zy rhs, zx-xz rhs, xy-yx rhs), with
    # string entries parsed over the field and parameter names substituted
    "a": (None, None, None, "0", "0", "0"),
    "b.i": (1, None, 1, "z", "y", "x"),
    "b.ii": (1, None, 1, "z", "{b}", "x"),
    "b.iii": (1, None, 1, "0", "y", "0"),
    "b.iv": (1, None, 1, "0", "{b}", "0"),
    "b.v": (1, None, 1, "{a}*z", "0", "x"),
    "b.vi": (1, None, 1, "z", "0", "0"),
    "c.i": (None, None, None, "0", "y + {b}", "0"),
    "c.ii": (None, None, None, "0", "{b}", "0"),
    "d": (None, None, None, "{a1}*x + {b1}", "{a2}*y + {b2}", "{a3}*z + {b3}"),
    "e.i": (1, 1, 1, "x", "y", "z"),
    "e.ii": (1, 1, 1, "0", "0", "z"),
    "e.iii": (1, 1, 1, "0", "0", "{b}"),
    "e.iv": (1, 1, 1, "-y", "x + y", "0"),
    "e.v": (1, 1, 1, "{a}*z", "z", "0"),
}


def _threedim(case="e.i", field=RAT, **params):
    """Three-variable skew polynomial algebra from the classification:
    yz - alpha zy = ..., zx - beta xz = ..., xy - gamma yx = ... ."""
    if case not in _THREEDIM_CASES:
        raise ValueError("unknown case %r" % case)
    alpha0, beta0, gamma0, rhs_yz, rhs_zx, rhs_xy = _THREEDIM_CASES[case]

    def pick(name, fixed):
        if fixed is not None:
            return field.from_int(fixed)
        if name not in params:
            raise ValueError("case %r needs parameter %s" % (case, name))
        return _scalar(field, params[name])

    alpha = pick("alpha", alpha0)
    if case in ("c.i", "c.ii"):
        beta = pick("beta", beta0)
        gamma = alpha
        if alpha == field.one() or beta == alpha:
            raise ValueError("case %r needs beta != alpha != 1" % case)
    elif case == "d":
        beta = gamma = alpha
        if alpha == field.one():
            raise ValueError("case 'd' needs alpha != 1")
    else:
        beta = pick("beta", beta0)
        gamma = pick("gamma", gamma0)
    if case == "a" and len({str(alpha), str(beta), str(gamma)}) != 3:
        raise ValueError("case 'a' needs three distinct twists")
    if case.startswith("b.") and beta == field.one():
        raise ValueError("case %r needs beta != 1" % case)
    for v in (alpha, beta, gamma):
        if field.is_zero(v):
            raise ValueError("twist parameters must be nonzero")

    ring = ring_make(field, [])
    pres = Presentation(ring, ["x", "y", "z"])  # for parsing the right sides

    def rhs(template):
        body = template
        for key, val in params.items():
            body = body.replace("{%s}" % key, "(%s)" % val)
        if "{" in body:
            missing = body[body.index("{") + 1:body.index("}")]
            raise ValueError("case %r needs parameter %s" % (case, missing))
        return pres.parse(body)

    w_yz, w_zx, w_xy = rhs(rhs_yz), rhs(rhs_zx), rhs(rhs_xy)

    def to_rel(w, lead):
        # x_j x_i = lead * x_i x_j + w, with w at most linear
        linear = {}
        const = ring.zero()
        for exps, coef in w.terms.items():
            if sum(exps) == 0:
                const = coef
            elif sum(exps) == 1:
                linear[pres.vars[exps.index(1)]] = coef
            else:
                raise ValueError("right side must be affine in the variables")
        return PairRelation(ring.from_scalar(lead), linear=linear, const=const)

    ainv, ginv = field.inv(alpha), field.inv(gamma)
    pairs = {
        # yz - alpha zy = w  =>  zy = alpha^-1 (yz - w)
        ("z", "y"): to_rel((-w_yz).scale(ainv), ainv),
        # zx - beta xz = w  =>  zx = beta xz + w
        ("z", "x"): to_rel(w_zx, beta),
        # xy - gamma yx = w  =>  yx = gamma^-1 (xy - w)
        ("y", "x"): to_rel((-w_xy).scale(ginv), ginv),
    }
    return Presentation(ring, ["x", "y", "z"], pairs=pairs)


def sridharan(g, f=None):
    """Presentation with relations x_j x_i = x_i x_j - [x_i, x_j] - f(x_i, x_j).

    Built raw from the structure data: no Jacobi or cocycle validation, so
    pbw_check is the arbiter of whether the monomials form a basis."""
    field = g.field
    if f is None:
        f = LieCocycle(g, {})
    if f.lie is not g:
        raise ValueError("cochain belongs to a different structure")
    ring = ring_make(field, [])
    pairs = {}
    for j in range(1, g.dim):
        for i in range(j):
            coords = g.bracket(i, j)
            linear = {g.names[k]: ring.from_scalar(field.neg(c))
                      for k, c in enumerate(coords) if not field.is_zero(c)}
            const = ring.from_scalar(field.neg(f.pair(i, j)))
            pairs[(g.names[j], g.names[i])] = PairRelation(
                ring.one(), linear=linear, const=const)
    return Presentation(ring, g.names, pairs=pairs)


_TABLE1 = {
    # type -> (xy - yx, yz - zy, zx - xz) as expressions in x, y, z and
    # the parameter alpha
    1: ("0", "0", "0"),
    2: ("0", "x", "0"),
    3: ("x", "0", "0"),
    4: ("0", "{alpha}*y", "-x"),
    5: ("0", "-y", "-(x + y)"),
    6: ("z", "-2*y", "-2*x"),
    7: ("1", "0", "0"),
    8: ("1", "x", "0"),
    9: ("x", "1", "0"),
    10: ("1", "y", "x"),
}


def sridharan_table1(kind, alpha=1, field=RAT):
    """The ten three-variable Sridharan presentations, by type number."""
    if kind not in _TABLE1:
        raise ValueError("type must be 1..10")
    e_xy, e_yz, e_zx = _TABLE1[kind]
    ring = ring_make(field, [])
    pres = Presentation(ring, ["x", "y", "z"])

    def parse(template):
        return pres.parse(template.replace("{alpha}", "(%s)" % alpha))

    w_xy, w_yz, w_zx = parse(e_xy), parse(e_yz), parse(e_zx)

    def to_rel(w):
        linear = {}
        const = ring.zero()
        for exps, coef in w.terms.items():
            if sum(exps) == 0:
                const = coef
            elif sum(exps) == 1:
                linear[pres.vars[exps.index(1)]] = coef
            else:
                raise ValueError("right side must be affine")
        return PairRelation(ring.one(), linear=linear, const=const)

    pairs = {
        # xy - yx = A  =>  yx = xy - A; yz - zy = B  =>  zy = yz - B;
        # zx - xz = C  =>  zx = xz + C
        ("y", "x"): to_rel(-w_xy),
        ("z", "y"): to_rel(-w_yz),
        ("z", "x"): to_rel(w_zx),
    }
    return Presentation(ring, ["x", "y", "z"], pairs=pairs)


_BUILDERS = {
    "weyl": _weyl,
    "shift": _shift,
    "mixed": _mixed,
    "discrete_linear": _discrete_linear,
    "quantum_plane": _quantum_plane,
    "quantum_affine": _quantum_affine,
    "additive_weyl": _additive_weyl,
    "multiplicative_weyl": _multiplicative_weyl,
    "q_heisenberg": _q_heisenberg,
    "hayashi": _hayashi,
    "dispin": _dispin,
    "u_sl2": _u_sl2,
    "uq_sl2": _uq_sl2,
    "uq_so3": _uq_so3,
    "diffusion": _diffusion,
    "threedim": _threedim,
    "sridharan": sridharan,
    "sridharan_table1": sridharan_table1,
}


def catalog_names():
    return sorted(_BUILDERS)


def catalog(name, *args, **params):
    if name not in _BUILDERS:
        raise ValueError("unknown catalog entry %r" % name)
    return _BUILDERS[name](*args, **params)
