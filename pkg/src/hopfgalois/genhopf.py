"""Generator-level Hopf structure on skew PBW presentations.

For infinite-dimensional algebras given by presentations, Hopf data is
specified on generators: comultiplication images in the tensor-square
presentation, counit scalars, antipode images. check_hopf_on_generators
verifies that the multiplicative (anti-multiplicative for S) extensions
respect every defining relation, and that the counit and antipode
convolution identities hold on all PBW basis monomials up to a degree
bound. The report is a generator-level, bounded-degree claim, not a
proof of Hopf-ness for the whole algebra.
"""

from . import exprs
from .reports import Report
from .coeffring import ring_make, EndoSpec, DerivSpec, RElem
from .skewpbw import Presentation, PairRelation, pbw_check


def _mangle(name, side):
    return "%s__%d" % (name, side)


class TensorSquare:
    """The presentation of A tensor A: two mangled copies of the ring and
    variable alphabets, with the two sides commuting strictly."""

    def __init__(self, pres):
        ring = pres.ring
        for name in tuple(ring.gens) + pres.vars:
            if "__" in name:
                raise ValueError("generator name %r collides with the tensor "
                                 "mangling scheme" % name)
        self.src = pres
        self.nring = len(ring.gens)
        self.nvars = pres.nvars
        gens2 = ([_mangle(g, 1) for g in ring.gens]
                 + [_mangle(g, 2) for g in ring.gens])
        laurent2 = []
        for i in ring.laurent:
            laurent2.append(_mangle(ring.gens[i], 1))
            laurent2.append(_mangle(ring.gens[i], 2))
        self.ring = ring_make(ring.field, gens2, tuple(laurent2))
        vars2 = ([_mangle(v, 1) for v in pres.vars]
                 + [_mangle(v, 2) for v in pres.vars])
        sigma = {}
        delta = {}
        for side in (1, 2):
            for vname in pres.vars:
                src_sigma = pres.sigma[vname]
                src_delta = pres.delta[vname]
                endo_images = {}
                deriv_images = {}
                for gname in ring.gens:
                    for gside in (1, 2):
                        target = _mangle(gname, gside)
                        if gside == side:
                            endo_images[target] = self._relem(
                                src_sigma(ring.gen(gname)), side)
                            deriv_images[target] = self._relem(
                                src_delta(ring.gen(gname)), side)
                        else:
                            endo_images[target] = self.ring.gen(target)
                            deriv_images[target] = self.ring.zero()
                endo = EndoSpec(self.ring, endo_images)
                sigma[_mangle(vname, side)] = endo
                delta[_mangle(vname, side)] = DerivSpec(self.ring, deriv_images,
                                                        twist=endo)
        pairs = {}
        for (j, i), rel in pres.pairs.items():
            for side in (1, 2):
                key = (_mangle(pres.vars[j], side), _mangle(pres.vars[i], side))
                linear = {_mangle(pres.vars[t], side): self._relem(c, side)
                          for t, c in rel.linear.items()}
                pairs[key] = PairRelation(self._relem(rel.lead, side), linear,
                                          self._relem(rel.const, side))
        self.pres = Presentation(self.ring, vars2, sigma, delta, pairs,
                                 flags=dict(pres.flags))

    def _relem(self, r, side):
        """Reinterpret a coefficient of the base ring on one tensor side."""
        shift = 0 if side == 1 else self.nring
        out = {}
        for exps, c in r.terms.items():
            new = [0] * (2 * self.nring)
            for pos, e in enumerate(exps):
                new[pos + shift] = e
            out[tuple(new)] = c
        return RElem(self.ring, out)

    def embed(self, poly, side):
        """A -> A tensor A onto the requested side."""
        shift = 0 if side == 1 else self.nvars
        out = self.pres.zero()
        for exps, relem in poly.terms.items():
            new = [0] * (2 * self.nvars)
            for pos, e in enumerate(exps):
                new[pos + shift] = e
            out = out + self.pres.monomial(tuple(new), self._relem(relem, side))
        return out

    def tensor_elem(self, a, b):
        return self.embed(a, 1) * self.embed(b, 2)

    def split_terms(self, poly):
        """Decompose a tensor-square element as a sum of p1 tensor p2 with
        monomial legs; yields (p1, p2) with the scalar carried on p1."""
        src = self.src
        ring = src.ring
        n, m = self.nvars, self.nring
        for exps, relem in poly.terms.items():
            v1, v2 = exps[:n], exps[n:]
            for rexps, c in relem.terms.items():
                r1 = ring.monomial(rexps[:m], c)
                r2 = ring.monomial(rexps[m:])
                yield (src.monomial(v1, r1), src.monomial(v2, r2))


def _pow_signed(poly, e):
    if e >= 0:
        return poly ** e
    if not poly.is_scalar_multiple_of_one():
        raise ValueError("negative power of a non-coefficient image")
    r = poly.constant_coefficient()
    return poly.pres.embed(r ** e)


class GenMap:
    """Multiplicative (or anti-multiplicative) extension of generator
    images to a presentation morphism; evaluation only, well-definedness
    is what the relation checks establish."""

    def __init__(self, src, dst, images, anti=False):
        need = set(src.ring.gens) | set(src.vars)
        fixed = {}
        for name, val in images.items():
            fixed[name] = dst.parse(val) if isinstance(val, str) else val
        if set(fixed) != need:
            missing = sorted(need - set(fixed))
            extra = sorted(set(fixed) - need)
            raise ValueError("image set mismatch: missing %s, extra %s"
                             % (missing, extra))
        self.src = src
        self.dst = dst
        self.images = fixed
        self.anti = anti

    def _ring_image(self, relem):
        dst = self.dst
        out = dst.zero()
        for exps, c in relem.terms.items():
            acc = dst.one().scale(c)
            for gname, e in zip(self.src.ring.gens, exps):
                if e:
                    acc = acc * _pow_signed(self.images[gname], e)
            out = out + acc
        return out

    def apply(self, poly):
        dst = self.dst
        out = dst.zero()
        for exps, relem in poly.terms.items():
            var_factors = [_pow_signed(self.images[vname], e)
                           for vname, e in zip(self.src.vars, exps) if e]
            acc = self._ring_image(relem)
            if self.anti:
                head = dst.one()
                for f in reversed(var_factors):
                    head = head * f
                acc = head * acc
            else:
                for f in var_factors:
                    acc = acc * f
            out = out + acc
        return out


def _eps_poly(field, pres, values, poly):
    """Counit extension: substitute the epsilon scalars multiplicatively."""
    total = field.zero()
    for exps, relem in poly.terms.items():
        vval = field.one()
        for vname, e in zip(pres.vars, exps):
            if e:
                vval = field.mul(vval, field.pow(values[vname], e))
        for rexps, c in relem.terms.items():
            rval = c
            for gname, e in zip(pres.ring.gens, rexps):
                if e:
                    try:
                        rval = field.mul(rval, field.pow(values[gname], e))
                    except ZeroDivisionError:
                        raise ValueError("counit value of %r is zero but its "
                                         "inverse appears" % gname)
            total = field.add(total, field.mul(rval, vval))
    return total


class _TensorExprContext:
    """Parse comultiplication images: '@' splits the two tensor legs,
    each leg an expression in the base presentation."""

    def __init__(self, square):
        self.square = square
        self.pres = square.src

    def const(self, n):
        return ("p", [self.pres.from_int(n)])

    def sym(self, name):
        try:
            return ("p", [self.pres.gen(name)])
        except (KeyError, ValueError):
            raise exprs.ExprError("unknown generator %r" % name)

    def tensor(self, a, b):
        if a[0] != "p" or b[0] != "p":
            raise exprs.ExprError("nested tensor expressions")
        return ("p", a[1] + b[1])

    def _resolve(self, v):
        if v[0] == "t":
            return v[1]
        legs = v[1]
        if len(legs) == 2:
            return self.square.tensor_elem(legs[0], legs[1])
        if len(legs) == 1 and legs[0].is_scalar_multiple_of_one():
            return self.square.embed(legs[0], 1)
        raise exprs.ExprError("tensor expression needs exactly two legs")

    def add(self, a, b):
        if a[0] == "p" and b[0] == "p" and len(a[1]) == 1 and len(b[1]) == 1:
            return ("p", [a[1][0] + b[1][0]])
        return ("t", self._resolve(a) + self._resolve(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if a[0] == "p":
            legs = list(a[1])
            legs[0] = -legs[0]
            return ("p", legs)
        return ("t", -a[1])

    def mul(self, a, b):
        if a[0] == "p" and b[0] == "p" and len(a[1]) == 1 and len(b[1]) == 1:
            return ("p", [a[1][0] * b[1][0]])
        return ("t", self._resolve(a) * self._resolve(b))

    def div(self, a, b):
        if b[0] == "p" and len(b[1]) == 1 and b[1][0].is_scalar_multiple_of_one():
            c = b[1][0].constant_coefficient()
            if a[0] == "p":
                legs = list(a[1])
                legs[0] = legs[0].coeff_mul(c.inverse())
                return ("p", legs)
            return ("t", self._resolve(a).coeff_mul(
                self.square._relem(c.inverse(), 1)))
        raise exprs.ExprError("division only by coefficient units")

    def pow(self, a, n):
        if a[0] == "p" and len(a[1]) == 1:
            from .skewpbw import _PresExprContext
            return ("p", [_PresExprContext(self.pres).pow(a[1][0], n)])
        base = self._resolve(a)
        if n < 0:
            raise exprs.ExprError("negative tensor powers")
        return ("t", base ** n)


def parse_tensor_square(square, s):
    ctx = _TensorExprContext(square)
    return ctx._resolve(exprs.evaluate(s, ctx))


class GenHopfSpec:
    """Per-generator Hopf data over a presentation: delta images (tensor
    expressions), epsilon scalars, antipode images."""

    def __init__(self, pres, delta, epsilon, antipode):
        self.pres = pres
        self.square = TensorSquare(pres)
        field = pres.ring.field
        names = tuple(pres.ring.gens) + tuple(pres.vars)
        self.delta_images = {}
        self.eps_values = {}
        self.s_images = {}
        for name in names:
            if name not in delta or name not in epsilon or name not in antipode:
                raise ValueError("missing Hopf data for generator %r" % name)
            d = delta[name]
            self.delta_images[name] = (parse_tensor_square(self.square, d)
                                       if isinstance(d, str) else d)
            e = epsilon[name]
            if isinstance(e, str):
                e = field.parse(e)
            elif isinstance(e, int):
                e = field.from_int(e)
            self.eps_values[name] = e
            s = antipode[name]
            self.s_images[name] = pres.parse(s) if isinstance(s, str) else s

    def eps(self, poly):
        return _eps_poly(self.pres.ring.field, self.pres, self.eps_values, poly)


def _monomials_up_to(pres, degree):
    """PBW basis monomials (nonnegative ring and variable exponents) of
    total degree at most the bound, as SkewPoly values."""
    ring = pres.ring
    nring = len(ring.gens)
    nall = nring + pres.nvars
    out = []

    def rec(pos, remaining, exps):
        if pos == nall:
            r = ring.monomial(tuple(exps[:nring]))
            out.append(pres.monomial(tuple(exps[nring:]), r))
            return
        for e in range(remaining + 1):
            exps.append(e)
            rec(pos + 1, remaining - e, exps)
            exps.pop()

    rec(0, degree, [])
    return out


def check_hopf_on_generators(spec, degree=3):
    """Relation compatibility of the delta/epsilon/antipode extensions,
    plus the counit and antipode convolution identities on all basis
    monomials up to the degree bound. Generator-level claim only."""
    pres = spec.pres
    field = pres.ring.field
    square = spec.square
    rep = Report("generator-level hopf check, degree %d" % degree)

    pb = pbw_check(pres)
    rep.add("pbw", pb.ok,
            witness=None if pb.ok else pb.failures()[0].name)

    dmap = GenMap(pres, square.pres, spec.delta_images)
    smap = GenMap(pres, pres, spec.s_images, anti=True)

    rels = []
    names = pres.vars
    for (j, i) in sorted(pres.pairs):
        rels.append(("%s*%s" % (names[j], names[i]),
                     pres.gen(names[j]), pres.gen(names[i])))
    for vname in names:
        for gname in pres.ring.gens:
            rels.append(("%s*%s" % (vname, gname),
                         pres.gen(vname), pres.gen(gname)))
    gens = pres.ring.gens
    for j in range(len(gens)):
        for i in range(j):
            rels.append(("%s*%s" % (gens[j], gens[i]),
                         pres.gen(gens[j]), pres.gen(gens[i])))
    for i in pres.ring.laurent:
        gname = gens[i]
        inv = pres.embed(pres.ring.gen(gname) ** -1)
        rels.append(("%s*%s^-1" % (gname, gname), pres.gen(gname), inv))

    wit_d = wit_e = wit_s = None
    for label, a, b in rels:
        nf = a * b
        if wit_d is None and dmap.apply(nf) != dmap.apply(a) * dmap.apply(b):
            wit_d = label
        if wit_e is None and spec.eps(nf) != field.mul(spec.eps(a), spec.eps(b)):
            wit_e = label
        if wit_s is None and smap.apply(nf) != smap.apply(b) * smap.apply(a):
            wit_s = label
    rep.add("delta_relations", wit_d is None, witness=wit_d)
    rep.add("epsilon_relations", wit_e is None, witness=wit_e)
    rep.add("antipode_relations", wit_s is None, witness=wit_s)

    def contract(t2poly, left_fn, right_fn):
        out = pres.zero()
        for p1, p2 in square.split_terms(t2poly):
            out = out + left_fn(p1) * right_fn(p2)
        return out

    def ident(p):
        return p

    def eps_fn(p):
        return pres.one().scale(spec.eps(p))

    wits = {"counit_left": None, "counit_right": None,
            "antipode_left": None, "antipode_right": None}
    for w in _monomials_up_to(pres, degree):
        ws = str(w)
        dw = dmap.apply(w)
        if wits["counit_left"] is None and contract(dw, eps_fn, ident) != w:
            wits["counit_left"] = ws
        if wits["counit_right"] is None and contract(dw, ident, eps_fn) != w:
            wits["counit_right"] = ws
        target = pres.one().scale(spec.eps(w))
        if wits["antipode_left"] is None and contract(dw, smap.apply, ident) != target:
            wits["antipode_left"] = ws
        if wits["antipode_right"] is None and contract(dw, ident, smap.apply) != target:
            wits["antipode_right"] = ws
    for name in ("counit_left", "counit_right", "antipode_left",
                 "antipode_right"):
        rep.add("%s_identity" % name, wits[name] is None,
                witness=wits[name], degree=degree)
    return rep
