"""Linked coaction systems: an algebra coacted on from the left and the
right by two Hopf algebras, with partner maps into a fourth algebra that
invert both canonical maps at once.

A system consists of algebras (A, B, Z, T) where A and B are Hopf, Z is
an (A, B)-bicomodule algebra, and algebra maps gamma: A -> Z (x) T and
delta: B -> T (x) Z together with a linear S: T -> Z satisfy five
compatibility identities.  The payoff is concrete: the two-sided
canonical maps on Z (x) Z are invertible with explicit inverses built
from gamma, delta and S, so Z is simultaneously a left A- and right
B-Galois extension of the base field.

Two representations are supported: finite-dimensional systems with all
maps as exact matrices, and generator-level systems over skew polynomial
presentations where every identity is checked on the monomial basis up
to a degree bound.  The main family of the second kind pairs the
enveloping algebra of a Lie structure with its two opposite twists by a
bilinear form.
"""

import itertools

from .reports import Report
from .findim import identity_map
from .hopf import HopfData, hopf_check
from .skewpbw import Presentation, pbw_check
from .catalog import (LieData, LieCocycle, lie_jacobi_ok, lie_cocycle_ok,
                      sridharan)


# --- finite-dimensional systems ---

class HGSData:
    """Finite-dimensional system: four algebras and five structure maps,
    shapes enforced here and the laws decided by check_hgs."""

    def __init__(self, a, b, z, t, alpha, beta, gamma, delta, smap):
        if not isinstance(a, HopfData) or not isinstance(b, HopfData):
            raise ValueError("the outer algebras must carry Hopf data")
        asp, bsp = a.space(), b.space()
        zsp, tsp = z.space(), t.space()
        shapes = [
            (alpha, (zsp,), (asp, zsp), "left coaction"),
            (beta, (zsp,), (zsp, bsp), "right coaction"),
            (gamma, (asp,), (zsp, tsp), "gamma"),
            (delta, (bsp,), (tsp, zsp), "delta"),
            (smap, (tsp,), (zsp,), "antipode map"),
        ]
        for m, dom, cod, what in shapes:
            if m.dom != dom or m.cod != cod:
                raise ValueError("%s has shape %r -> %r, expected %r -> %r"
                                 % (what, m.dom, m.cod, dom, cod))
        self.a = a
        self.b = b
        self.z = z
        self.t = t
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta
        self.smap = smap

    @property
    def field(self):
        return self.z.field

    def __repr__(self):
        return ("HGSData(%s, %s, %s, %s)"
                % (self.a.name, self.b.name, self.z.name, self.t.name))


def hopf_hgs(h):
    """The diagonal system on a single Hopf algebra: every structure map
    is the coproduct and the partner map is the antipode."""
    return HGSData(h, h, h.alg, h.alg, h.delta, h.delta, h.delta, h.delta,
                   h.antipode)


def _pair_mul(alg1, alg2, u, v):
    """Product of sparse pair tensors in A1 (x) A2."""
    field = alg1.field
    out = {}
    for (x1, x2), cu in u.items():
        for (y1, y2), cv in v.items():
            cc = field.mul(cu, cv)
            for p1, m1 in alg1.mult[x1][y1].items():
                c1 = field.mul(cc, m1)
                for p2, m2 in alg2.mult[x2][y2].items():
                    s = field.mul(c1, m2)
                    if field.is_zero(s):
                        continue
                    key = (p1, p2)
                    cur = out.get(key)
                    out[key] = s if cur is None else field.add(cur, s)
    return {k: c for k, c in out.items() if not field.is_zero(c)}


def _pair_cols(field, linmap, d2):
    """Columns of a map into a pair word as sparse pair tensors."""
    cols = []
    for j in range(linmap.dom_dim):
        cur = {}
        for flat in range(linmap.cod_dim):
            c = linmap.rows[flat][j]
            if not field.is_zero(c):
                cur[divmod(flat, d2)] = c
        cols.append(cur)
    return cols


def _pair_map_witness(src, cod1, cod2, linmap):
    """First product of basis elements the map fails to respect, or None;
    also covers the unit."""
    field = src.field
    cols = _pair_cols(field, linmap, cod2.dim)
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = {}
            for k, cm in src.mult[i][j].items():
                for key, cv in cols[k].items():
                    s = field.mul(cm, cv)
                    cur = lhs.get(key)
                    tot = s if cur is None else field.add(cur, s)
                    if field.is_zero(tot):
                        lhs.pop(key, None)
                    else:
                        lhs[key] = tot
            if lhs != _pair_mul(cod1, cod2, cols[i], cols[j]):
                return "(%s, %s)" % (src.labels[i], src.labels[j])
    unit_img = {}
    for u, cu in src.unit.items():
        for key, cv in cols[u].items():
            unit_img[key] = field.mul(cu, cv)
    expected = {}
    for u1, c1 in cod1.unit.items():
        for u2, c2 in cod2.unit.items():
            expected[(u1, u2)] = field.mul(c1, c2)
    if unit_img != expected:
        return "1"
    return None


def _first_diff(labels, f, g):
    for j in range(len(labels)):
        for i in range(len(f.rows)):
            if f.rows[i][j] != g.rows[i][j]:
                return labels[j]
    return None


def _check_hgs_findim(sys):
    field = sys.field
    a, b, z, t = sys.a, sys.b, sys.z, sys.t
    alpha, beta, gamma, delta, smap = (sys.alpha, sys.beta, sys.gamma,
                                       sys.delta, sys.smap)
    ida = identity_map(field, (a.space(),))
    idb = identity_map(field, (b.space(),))
    idz = identity_map(field, (z.space(),))
    idt = identity_map(field, (t.space(),))
    mz = z.mult_map()
    zl = z.labels
    zz_labels = ["%s|%s" % (l1, l2) for l1 in zl for l2 in zl]
    rep = Report("linked coaction system")

    ra = hopf_check(a)
    rep.add("a_hopf", ra.ok,
            witness=None if ra.ok else ra.failures()[0].name)
    rb = hopf_check(b)
    rep.add("b_hopf", rb.ok,
            witness=None if rb.ok else rb.failures()[0].name)

    rep.add("alpha_algebra_map",
            *_wn(_pair_map_witness(z, a.alg, z, alpha)))
    rep.add("beta_algebra_map",
            *_wn(_pair_map_witness(z, z, b.alg, beta)))
    rep.add("gamma_algebra_map",
            *_wn(_pair_map_witness(a.alg, z, t, gamma)))
    rep.add("delta_algebra_map",
            *_wn(_pair_map_witness(b.alg, t, z, delta)))

    lhs = a.delta.tensor(idz).compose(alpha)
    rhs = ida.tensor(alpha).compose(alpha)
    rep.add("alpha_coassociative", *_wn(_first_diff(zl, lhs, rhs)))
    lhs = a.counit.tensor(idz).compose(alpha)
    rep.add("alpha_counit", *_wn(_first_diff(zl, lhs, idz)))

    lhs = beta.tensor(idb).compose(beta)
    rhs = idz.tensor(b.delta).compose(beta)
    rep.add("beta_coassociative", *_wn(_first_diff(zl, lhs, rhs)))
    lhs = idz.tensor(b.counit).compose(beta)
    rep.add("beta_counit", *_wn(_first_diff(zl, lhs, idz)))

    lhs = ida.tensor(beta).compose(alpha)
    rhs = alpha.tensor(idb).compose(beta)
    rep.add("bicomodule", *_wn(_first_diff(zl, lhs, rhs)))

    lhs = gamma.tensor(idz).compose(alpha)
    rhs = idz.tensor(delta).compose(beta)
    rep.add("mixed_compatibility", *_wn(_first_diff(zl, lhs, rhs)))

    lhs = ida.tensor(gamma).compose(a.delta)
    rhs = alpha.tensor(idt).compose(gamma)
    rep.add("left_coproduct_compatibility",
            *_wn(_first_diff(a.alg.labels, lhs, rhs)))

    lhs = delta.tensor(idb).compose(b.delta)
    rhs = idt.tensor(beta).compose(delta)
    rep.add("right_coproduct_compatibility",
            *_wn(_first_diff(b.alg.labels, lhs, rhs)))

    lhs = mz.compose(idz.tensor(smap)).compose(gamma)
    rhs = z.unit_map().compose(a.counit)
    rep.add("left_antipode_identity",
            *_wn(_first_diff(a.alg.labels, lhs, rhs)))

    lhs = mz.compose(smap.tensor(idz)).compose(delta)
    rhs = z.unit_map().compose(b.counit)
    rep.add("right_antipode_identity",
            *_wn(_first_diff(b.alg.labels, lhs, rhs)))

    beta_l = ida.tensor(mz).compose(alpha.tensor(idz))
    eta_l = (idz.tensor(mz)
             .compose(idz.tensor(smap).tensor(idz))
             .compose(gamma.tensor(idz)))
    az_labels = ["%s|%s" % (l1, l2) for l1 in a.alg.labels for l2 in zl]
    idzz = identity_map(field, (z.space(), z.space()))
    idaz = identity_map(field, (a.space(), z.space()))
    rep.add("eta_left_retraction",
            *_wn(_first_diff(zz_labels, eta_l.compose(beta_l), idzz)))
    rep.add("eta_left_section",
            *_wn(_first_diff(az_labels, beta_l.compose(eta_l), idaz)))

    beta_r = mz.tensor(idb).compose(idz.tensor(beta))
    eta_r = (mz.tensor(idz)
             .compose(idz.tensor(smap).tensor(idz))
             .compose(idz.tensor(delta)))
    zb_labels = ["%s|%s" % (l1, l2) for l1 in zl for l2 in b.alg.labels]
    idzb = identity_map(field, (z.space(), b.space()))
    rep.add("eta_right_retraction",
            *_wn(_first_diff(zz_labels, eta_r.compose(beta_r), idzz)))
    rep.add("eta_right_section",
            *_wn(_first_diff(zb_labels, beta_r.compose(eta_r), idzb)))
    return rep


def _wn(witness):
    return (witness is None, witness)


# --- generator-level systems over presentations ---

def _mono_scalar_terms(poly):
    """Exponent tuple -> scalar for a polynomial over a bare ring."""
    field = poly.pres.ring.field
    out = {}
    for exps, relem in poly.terms.items():
        c = relem.terms.get((), field.zero())
        if not field.is_zero(c):
            out[exps] = c
    return out


def _elt_unit(field, legs):
    return {tuple((0,) * p.nvars for p in legs): field.one()}


def _elt_add(field, acc, key, c):
    if field.is_zero(c):
        return
    cur = acc.get(key)
    if cur is None:
        acc[key] = c
        return
    s = field.add(cur, c)
    if field.is_zero(s):
        del acc[key]
    else:
        acc[key] = s


def _elt_scale(field, elt, c):
    out = {}
    for key, cv in elt.items():
        _elt_add(field, out, key, field.mul(c, cv))
    return out


def _elt_sum(field, elts):
    out = {}
    for elt in elts:
        for key, c in elt.items():
            _elt_add(field, out, key, c)
    return out


def _elt_mul(field, legs, u, v):
    """Componentwise product of multi-leg tensors with monomial keys."""
    out = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            partial = {(): field.mul(cu, cv)}
            for pos, pres in enumerate(legs):
                prod = _mono_scalar_terms(
                    pres.monomial(ku[pos]) * pres.monomial(kv[pos]))
                grown = {}
                for pk, pc in partial.items():
                    for e, mc in prod.items():
                        _elt_add(field, grown, pk + (e,), field.mul(pc, mc))
                partial = grown
            for key, c in partial.items():
                _elt_add(field, out, key, c)
    return out


class GenAlgMap:
    """Multiplicative (or anti-multiplicative) extension of generator
    images into a tensor product of presented algebras."""

    def __init__(self, src, legs, images, anti=False):
        field = src.ring.field
        if len(images) != src.nvars:
            raise ValueError("need one image per generator")
        norm = []
        for img in images:
            cur = {}
            for key, c in img.items():
                if len(key) != len(legs):
                    raise ValueError("image key has %d legs, expected %d"
                                     % (len(key), len(legs)))
                for e, p in zip(key, legs):
                    if len(e) != p.nvars:
                        raise ValueError("leg exponent length mismatch")
                if isinstance(c, int):
                    c = field.from_int(c)
                _elt_add(field, cur, tuple(tuple(e) for e in key), c)
            norm.append(cur)
        self.src = src
        self.legs = list(legs)
        self.images = norm
        self.anti = anti
        self.field = field
        self._cache = {}

    def image_of_monomial(self, exps):
        exps = tuple(exps)
        cached = self._cache.get(exps)
        if cached is not None:
            return cached
        field = self.field
        out = _elt_unit(field, self.legs)
        order = range(len(exps))
        if self.anti:
            order = reversed(range(len(exps)))
        for v in order:
            for _ in range(exps[v]):
                out = _elt_mul(field, self.legs, out, self.images[v])
        self._cache[exps] = out
        return out

    def apply_linear(self, terms):
        """Linear extension to exponent-keyed scalar dicts."""
        field = self.field
        out = {}
        for exps, c in terms.items():
            for key, cv in self.image_of_monomial(exps).items():
                _elt_add(field, out, key, field.mul(c, cv))
        return out


def _apply_at(field, legs, elt, pos, gmap):
    """Replace one tensor leg by the image under a generator map."""
    if legs[pos] is not gmap.src:
        raise ValueError("map source does not match the leg")
    new_legs = legs[:pos] + gmap.legs + legs[pos + 1:]
    out = {}
    for key, c in elt.items():
        for mkey, mc in gmap.image_of_monomial(key[pos]).items():
            _elt_add(field, out, key[:pos] + mkey + key[pos + 1:],
                     field.mul(c, mc))
    return new_legs, out


def _mul_legs(field, legs, elt, pos):
    """Multiply two adjacent tensor legs over the same presentation."""
    if legs[pos] is not legs[pos + 1]:
        raise ValueError("adjacent legs live in different algebras")
    pres = legs[pos]
    new_legs = legs[:pos] + [pres] + legs[pos + 2:]
    out = {}
    for key, c in elt.items():
        prod = _mono_scalar_terms(
            pres.monomial(key[pos]) * pres.monomial(key[pos + 1]))
        for e, mc in prod.items():
            _elt_add(field, out, key[:pos] + (e,) + key[pos + 2:],
                     field.mul(c, mc))
    return new_legs, out


def _eps_at(field, legs, elt, pos, eps_values):
    """Apply a counit given by generator values to one leg."""
    new_legs = legs[:pos] + legs[pos + 1:]
    out = {}
    for key, c in elt.items():
        scalar = field.one()
        for v, e in enumerate(key[pos]):
            for _ in range(e):
                scalar = field.mul(scalar, eps_values[v])
        _elt_add(field, out, key[:pos] + key[pos + 1:],
                 field.mul(c, scalar))
    return new_legs, out


def _monomial_exps(pres, degree):
    """All exponent tuples of total degree at most the bound."""
    if pres.nvars == 0:
        return [()]
    out = []
    for total in range(degree + 1):
        for cuts in itertools.combinations(range(total + pres.nvars - 1),
                                           pres.nvars - 1):
            exps = []
            prev = -1
            for c in cuts:
                exps.append(c - prev - 1)
                prev = c
            exps.append(total + pres.nvars - 1 - prev - 1)
            out.append(tuple(exps))
    return out


def _relem_scalar(field, relem):
    return relem.terms.get((), field.zero())


class GenHGS:
    """Generator-level system: four presented algebras with all structure
    maps given on generators and extended multiplicatively."""

    def __init__(self, a, b, z, t, alpha, beta, gamma, delta, smap,
                 delta_a, delta_b, eps_a=None, eps_b=None, name=None):
        for p in (a, b, z, t):
            if not isinstance(p, Presentation):
                raise ValueError("the four algebras must be presentations")
            if p.ring.gens:
                raise ValueError("presentation rings must have no "
                                 "coefficient generators")
        field = z.ring.field
        self.field = field
        self.a, self.b, self.z, self.t = a, b, z, t
        self.alpha = GenAlgMap(z, [a, z], alpha)
        self.beta = GenAlgMap(z, [z, b], beta)
        self.gamma = GenAlgMap(a, [z, t], gamma)
        self.delta = GenAlgMap(b, [t, z], delta)
        self.smap = GenAlgMap(t, [z], smap, anti=True)
        self.delta_a = GenAlgMap(a, [a, a], delta_a)
        self.delta_b = GenAlgMap(b, [b, b], delta_b)
        zero = field.zero()
        self.eps_a = list(eps_a) if eps_a else [zero] * a.nvars
        self.eps_b = list(eps_b) if eps_b else [zero] * b.nvars
        self.name = name or "generator system"

    def __repr__(self):
        return "GenHGS(%s)" % self.name


def _gen_relation_witness(gmap):
    """First defining relation of the source the map fails to respect."""
    pres = gmap.src
    field = gmap.field
    legs = gmap.legs
    for (j, i), rel in pres.pairs.items():
        xi = gmap.images[i]
        xj = gmap.images[j]
        if gmap.anti:
            lhs = _elt_mul(field, legs, xi, xj)
            swap = _elt_mul(field, legs, xj, xi)
        else:
            lhs = _elt_mul(field, legs, xj, xi)
            swap = _elt_mul(field, legs, xi, xj)
        parts = [_elt_scale(field, swap, _relem_scalar(field, rel.lead))]
        for tidx, c in rel.linear.items():
            parts.append(_elt_scale(field, gmap.images[tidx],
                                    _relem_scalar(field, c)))
        cval = _relem_scalar(field, rel.const)
        parts.append(_elt_scale(field, _elt_unit(field, legs), cval))
        if lhs != _elt_sum(field, parts):
            return "%s*%s" % (pres.vars[j], pres.vars[i])
    return None


def _check_hgs_gen(sys, degree):
    field = sys.field
    a, b, z, t = sys.a, sys.b, sys.z, sys.t
    rep = Report("linked coaction system on generators, degree %d" % degree)

    for tag, pres in (("a", a), ("b", b), ("z", z), ("t", t)):
        pb = pbw_check(pres)
        rep.add("%s_basis" % tag, pb.ok,
                witness=None if pb.ok else pb.failures()[0].name)

    for tag, gmap in (("alpha", sys.alpha), ("beta", sys.beta),
                      ("gamma", sys.gamma), ("delta", sys.delta),
                      ("antipode_map", sys.smap),
                      ("a_coproduct", sys.delta_a),
                      ("b_coproduct", sys.delta_b)):
        rep.add("%s_relations" % tag, *_wn(_gen_relation_witness(gmap)))

    z_monos = _monomial_exps(z, degree)
    a_monos = _monomial_exps(a, degree)
    b_monos = _monomial_exps(b, degree)

    def mono_label(pres, exps):
        return str(pres.monomial(exps))

    def first_fail(monos, pres, lhs_fn, rhs_fn):
        for exps in monos:
            if lhs_fn(exps) != rhs_fn(exps):
                return mono_label(pres, exps)
        return None

    # coaction axioms for alpha
    def lhs_coassoc_a(exps):
        legs, elt = [a, z], sys.alpha.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.delta_a)[1]

    def rhs_coassoc_a(exps):
        legs, elt = [a, z], sys.alpha.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.alpha)[1]

    rep.add("alpha_coassociative",
            *_wn(first_fail(z_monos, z, lhs_coassoc_a, rhs_coassoc_a)))

    def lhs_counit_a(exps):
        legs, elt = [a, z], sys.alpha.image_of_monomial(exps)
        return _eps_at(field, legs, elt, 0, sys.eps_a)[1]

    rep.add("alpha_counit",
            *_wn(first_fail(z_monos, z, lhs_counit_a,
                            lambda e: {(e,): field.one()})))

    def lhs_coassoc_b(exps):
        legs, elt = [z, b], sys.beta.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.beta)[1]

    def rhs_coassoc_b(exps):
        legs, elt = [z, b], sys.beta.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.delta_b)[1]

    rep.add("beta_coassociative",
            *_wn(first_fail(z_monos, z, lhs_coassoc_b, rhs_coassoc_b)))

    def lhs_counit_b(exps):
        legs, elt = [z, b], sys.beta.image_of_monomial(exps)
        return _eps_at(field, legs, elt, 1, sys.eps_b)[1]

    rep.add("beta_counit",
            *_wn(first_fail(z_monos, z, lhs_counit_b,
                            lambda e: {(e,): field.one()})))

    def lhs_bico(exps):
        legs, elt = [a, z], sys.alpha.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.beta)[1]

    def rhs_bico(exps):
        legs, elt = [z, b], sys.beta.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.alpha)[1]

    rep.add("bicomodule", *_wn(first_fail(z_monos, z, lhs_bico, rhs_bico)))

    def lhs_mixed(exps):
        legs, elt = [a, z], sys.alpha.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.gamma)[1]

    def rhs_mixed(exps):
        legs, elt = [z, b], sys.beta.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.delta)[1]

    rep.add("mixed_compatibility",
            *_wn(first_fail(z_monos, z, lhs_mixed, rhs_mixed)))

    def lhs_left_cp(exps):
        legs, elt = [a, a], sys.delta_a.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.gamma)[1]

    def rhs_left_cp(exps):
        legs, elt = [z, t], sys.gamma.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.alpha)[1]

    rep.add("left_coproduct_compatibility",
            *_wn(first_fail(a_monos, a, lhs_left_cp, rhs_left_cp)))

    def lhs_right_cp(exps):
        legs, elt = [b, b], sys.delta_b.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 0, sys.delta)[1]

    def rhs_right_cp(exps):
        legs, elt = [t, z], sys.delta.image_of_monomial(exps)
        return _apply_at(field, legs, elt, 1, sys.beta)[1]

    rep.add("right_coproduct_compatibility",
            *_wn(first_fail(b_monos, b, lhs_right_cp, rhs_right_cp)))

    def eps_elt(pres, eps_values, exps):
        scalar = field.one()
        for v, e in enumerate(exps):
            for _ in range(e):
                scalar = field.mul(scalar, eps_values[v])
        out = {}
        _elt_add(field, out, ((0,) * z.nvars,), scalar)
        return out

    def lhs_left_anti(exps):
        legs, elt = [z, t], sys.gamma.image_of_monomial(exps)
        legs, elt = _apply_at(field, legs, elt, 1, sys.smap)
        return _mul_legs(field, legs, elt, 0)[1]

    rep.add("left_antipode_identity",
            *_wn(first_fail(a_monos, a, lhs_left_anti,
                            lambda e: eps_elt(a, sys.eps_a, e))))

    def lhs_right_anti(exps):
        legs, elt = [t, z], sys.delta.image_of_monomial(exps)
        legs, elt = _apply_at(field, legs, elt, 0, sys.smap)
        return _mul_legs(field, legs, elt, 0)[1]

    rep.add("right_antipode_identity",
            *_wn(first_fail(b_monos, b, lhs_right_anti,
                            lambda e: eps_elt(b, sys.eps_b, e))))

    # two-sided inverse identities for the canonical maps
    def beta_l(legs, elt):
        legs, elt = _apply_at(field, legs, elt, 0, sys.alpha)
        return _mul_legs(field, legs, elt, 1)

    def eta_l(legs, elt):
        legs, elt = _apply_at(field, legs, elt, 0, sys.gamma)
        legs, elt = _apply_at(field, legs, elt, 1, sys.smap)
        return _mul_legs(field, legs, elt, 1)

    def beta_r(legs, elt):
        legs, elt = _apply_at(field, legs, elt, 1, sys.beta)
        return _mul_legs(field, legs, elt, 0)

    def eta_r(legs, elt):
        legs, elt = _apply_at(field, legs, elt, 1, sys.delta)
        legs, elt = _apply_at(field, legs, elt, 1, sys.smap)
        return _mul_legs(field, legs, elt, 0)

    def pair_check(first_monos, first_pres, legs0, forward, backward):
        for e1 in first_monos:
            d1 = sum(e1)
            for e2 in z_monos:
                if d1 + sum(e2) > degree:
                    continue
                elt = {(e1, e2): field.one()}
                legs, mid = forward(list(legs0), elt)
                _, back = backward(legs, mid)
                if back != elt:
                    return "(%s, %s)" % (mono_label(first_pres, e1),
                                         mono_label(z, e2))
        return None

    rep.add("eta_left_retraction",
            *_wn(pair_check(z_monos, z, [z, z], beta_l, eta_l)))
    rep.add("eta_left_section",
            *_wn(pair_check(a_monos, a, [a, z], eta_l, beta_l)))
    rep.add("eta_right_retraction",
            *_wn(pair_check(z_monos, z, [z, z], beta_r, eta_r)))

    def pair_check_right_section():
        for e1 in z_monos:
            d1 = sum(e1)
            for e2 in b_monos:
                if d1 + sum(e2) > degree:
                    continue
                elt = {(e1, e2): field.one()}
                legs, mid = eta_r([z, b], elt)
                _, back = beta_r(legs, mid)
                if back != elt:
                    return "(%s, %s)" % (mono_label(z, e1),
                                         mono_label(b, e2))
        return None

    rep.add("eta_right_section", *_wn(pair_check_right_section()))
    return rep


def check_hgs(sys, degree=None):
    """Law suite for a linked coaction system.  Matrix systems are decided
    outright; generator-level systems need a degree bound and are checked
    on all monomials up to it."""
    if isinstance(sys, HGSData):
        return _check_hgs_findim(sys)
    if isinstance(sys, GenHGS):
        if degree is None:
            raise ValueError("generator-level systems need a degree bound")
        return _check_hgs_gen(sys, degree)
    raise ValueError("not a coaction system")


def sridharan_build(g, f=None):
    """The generator-level system attached to a bracket with a bilinear
    twist: the enveloping algebra coacts on both twisted envelopes, the
    partner algebra is the oppositely twisted one, and the antipode map
    negates generators.

    Validates the Jacobi and 2-cocycle identities up front and raises
    with a witness triple when either fails.
    """
    if not isinstance(g, LieData):
        raise ValueError("expected bracket structure data")
    field = g.field
    if f is None:
        f = LieCocycle(g, {})
    w = lie_jacobi_ok(g)
    if w is not None:
        raise ValueError("bracket fails the Jacobi identity at basis "
                         "triple %r" % (tuple(g.names[i] for i in w),))
    w = lie_cocycle_ok(g, f)
    if w is not None:
        raise ValueError("bilinear form fails the 2-cocycle identity at "
                         "basis triple %r" % (tuple(g.names[i] for i in w),))
    fneg = LieCocycle(g, {k: field.neg(v) for k, v in f.values.items()})
    env = sridharan(g)
    zf = sridharan(g, f)
    tneg = sridharan(g, fneg)

    n = g.dim
    one = field.one()

    def primitive(exp_len_first, exp_len_second, i):
        e1 = tuple(1 if v == i else 0 for v in range(exp_len_first))
        e2 = tuple(1 if v == i else 0 for v in range(exp_len_second))
        z1 = (0,) * exp_len_first
        z2 = (0,) * exp_len_second
        return {(e1, z2): one, (z1, e2): one}

    alpha = [primitive(n, n, i) for i in range(n)]
    beta = [primitive(n, n, i) for i in range(n)]
    gamma = [primitive(n, n, i) for i in range(n)]
    delta = [primitive(n, n, i) for i in range(n)]
    neg_one = field.neg(one)
    smap = [{(tuple(1 if v == i else 0 for v in range(n)),): neg_one}
            for i in range(n)]
    dup = [primitive(n, n, i) for i in range(n)]
    return GenHGS(env, env, zf, tneg, alpha, beta, gamma, delta, smap,
                  delta_a=dup, delta_b=dup,
                  name="twisted envelope system (%d generators)" % n)
