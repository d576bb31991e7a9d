"""Commutative coefficient rings.

Multivariate polynomial rings over an exact field, with selected
generators inverted (Laurent positions). Elements are dicts from integer
exponent vectors to nonzero scalars; exponents may go negative only at
Laurent positions. On top of that, ring endomorphisms given by generator
images and twisted derivations obeying

    delta(r*s) = sigma(r)*delta(s) + delta(r)*s

which is the product rule these rings need when they later feed skew
polynomial extensions.
"""

from . import exprs
from .reports import Report


def monomial_key(exps):
    # graded order, ties broken reverse-lexicographically; used for
    # display and leading-term extraction
    return (sum(exps), tuple(-e for e in reversed(exps)))


class CoeffRing:
    def __init__(self, field, gens, laurent=()):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        for name in gens:
            if not name.isidentifier():
                raise ValueError("generator name %r is not an identifier" % name)
        unknown = set(laurent) - set(gens)
        if unknown:
            raise ValueError("laurent names %s are not generators" % sorted(unknown))
        self.field = field
        self.gens = gens
        self.index = {name: i for i, name in enumerate(gens)}
        self.laurent = frozenset(self.index[name] for name in laurent)

    @property
    def nvars(self):
        return len(self.gens)

    def zero(self):
        return RElem(self, {})

    def one(self):
        return self.from_scalar(self.field.one())

    def from_scalar(self, c):
        if self.field.is_zero(c):
            return RElem(self, {})
        return RElem(self, {(0,) * self.nvars: c})

    def from_int(self, n):
        return self.from_scalar(self.field.from_int(n))

    def gen(self, name):
        i = self.index[name]
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return RElem(self, {exps: self.field.one()})

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        for i, e in enumerate(exps):
            if e < 0 and i not in self.laurent:
                raise ValueError("negative power of non-invertible generator %r"
                                 % self.gens[i])
        c = self.field.one() if coeff is None else coeff
        if self.field.is_zero(c):
            return RElem(self, {})
        return RElem(self, {exps: c})

    def parse(self, s):
        return exprs.evaluate(s, _RingExprContext(self))

    def identity_endo(self):
        return EndoSpec(self, {name: self.gen(name) for name in self.gens})

    def __eq__(self, other):
        return (isinstance(other, CoeffRing) and other.field == self.field
                and other.gens == self.gens and other.laurent == self.laurent)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field, self.gens, self.laurent))

    def __repr__(self):
        inv = sorted(self.gens[i] for i in self.laurent)
        tail = ", laurent=%s" % inv if inv else ""
        return "CoeffRing(%r, %s%s)" % (self.field, list(self.gens), tail)


def ring_make(field, gens, laurent=()):
    return CoeffRing(field, gens, laurent)


class RElem:
    """Element of a CoeffRing: exponent vector -> scalar, zeros dropped."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        zero_exps = (0,) * self.ring.nvars
        return all(e == zero_exps for e in self.terms)

    def scalar_part(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero())

    def is_unit_monomial(self):
        # single term supported on invertible generators
        if len(self.terms) != 1:
            return False
        exps, = self.terms
        return all(e == 0 or i in self.ring.laurent for i, e in enumerate(exps))

    def __add__(self, other):
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = field.add(out.get(exps, field.zero()), c)
            if field.is_zero(acc):
                out.pop(exps, None)
            else:
                out[exps] = acc
        return RElem(self.ring, out)

    def __neg__(self):
        field = self.ring.field
        return RElem(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        field = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = field.add(out.get(exps, field.zero()), field.mul(c1, c2))
                if field.is_zero(acc):
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return RElem(self.ring, out)

    def scale(self, c):
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return RElem(self.ring, {e: field.mul(c, v) for e, v in self.terms.items()})

    def inverse(self):
        if not self.is_unit_monomial():
            raise ZeroDivisionError("not an invertible monomial: %s" % self)
        exps, = self.terms
        c = self.terms[exps]
        return RElem(self.ring, {tuple(-e for e in exps): self.ring.field.inv(c)})

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, RElem) and other.ring == self.ring
                and other.terms == self.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    def _check(self, other):
        if not isinstance(other, RElem) or other.ring != self.ring:
            raise TypeError("mixed coefficient rings")

    def _mono_str(self, exps):
        pieces = []
        for name, e in zip(self.ring.gens, exps):
            if e == 0:
                continue
            pieces.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(pieces)

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for exps in sorted(self.terms, key=monomial_key, reverse=True):
            cs = field.show(self.terms[exps])
            if " " in cs:
                cs = "(%s)" % cs
            mono = self._mono_str(exps)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            else:
                body = "%s*%s" % (cs, mono)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    def __repr__(self):
        return "<RElem %s>" % self

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms)))


def leading_term(r):
    """(exponent vector, coefficient) of the largest monomial, or None."""
    if r.is_zero():
        return None
    exps = max(r.terms, key=monomial_key)
    return exps, r.terms[exps]


class _RingExprContext:
    def __init__(self, ring):
        self.ring = ring

    def const(self, n):
        return self.ring.from_int(n)

    def sym(self, name):
        if name in self.ring.index:
            return self.ring.gen(name)
        try:
            return self.ring.from_scalar(self.ring.field.symbol(name))
        except exprs.ExprError:
            raise exprs.ExprError("unknown symbol %r in %r" % (name, self.ring))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b.is_scalar():
            return a.scale(self.ring.field.inv(b.scalar_part()))
        return a * b.inverse()

    def pow(self, a, n):
        return a ** n

    def neg(self, a):
        return -a


class EndoSpec:
    """Ring endomorphism fixed by generator images.

    A polynomial ring is free on its generators, so any image choice
    extends uniquely; the only constraint is that invertible generators
    map to invertible monomials.
    """

    def __init__(self, ring, images):
        if set(images) != set(ring.gens):
            raise ValueError("images must cover exactly the generators")
        self.ring = ring
        self.images = {name: img for name, img in images.items()}

    def is_identity(self):
        return all(self.images[name] == self.ring.gen(name) for name in self.ring.gens)

    def __call__(self, r):
        return endo_apply(self, r)

    def compose(self, other):
        # self after other
        return EndoSpec(self.ring, {name: endo_apply(self, img)
                                    for name, img in other.images.items()})

    def __eq__(self, other):
        return (isinstance(other, EndoSpec) and other.ring == self.ring
                and other.images == self.images)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        body = ", ".join("%s->%s" % (n, self.images[n]) for n in self.ring.gens)
        return "EndoSpec(%s)" % body


def endo_apply(spec, r):
    ring = spec.ring
    out = ring.zero()
    for exps, c in r.terms.items():
        term = ring.from_scalar(c)
        for name, e in zip(ring.gens, exps):
            if e:
                term = term * spec.images[name] ** e
        out = out + term
    return out


def endo_validate(spec, inverse=None):
    """Certify an EndoSpec: unit images at invertible generators, and,
    when an inverse spec is supplied, that both composites fix every
    generator (a bijectivity certificate)."""
    ring = spec.ring
    report = Report("endomorphism")
    bad = [ring.gens[i] for i in sorted(ring.laurent)
           if not spec.images[ring.gens[i]].is_unit_monomial()]
    report.add("unit_images", not bad,
               witness=None if not bad else "sigma(%s) is not invertible" % bad[0])
    zero_img = [name for name in ring.gens if spec.images[name].is_zero()]
    report.add("nonzero_images", not zero_img,
               witness=None if not zero_img else "sigma(%s) = 0" % zero_img[0])
    if inverse is not None:
        fails = []
        for name in ring.gens:
            g = ring.gen(name)
            if endo_apply(spec, inverse.images[name]) != g:
                fails.append("sigma(tau(%s)) != %s" % (name, name))
            if endo_apply(inverse, spec.images[name]) != g:
                fails.append("tau(sigma(%s)) != %s" % (name, name))
        report.add("two_sided_inverse", not fails,
                   witness=fails[0] if fails else None)
    return report


class DerivSpec:
    """Twisted derivation fixed by generator images.

    twist is the EndoSpec sigma in the product rule; None means the
    identity, giving an ordinary derivation.
    """

    def __init__(self, ring, images, twist=None):
        if set(images) != set(ring.gens):
            raise ValueError("images must cover exactly the generators")
        self.ring = ring
        self.images = {name: img for name, img in images.items()}
        self.twist = twist if twist is not None else ring.identity_endo()

    def is_zero(self):
        return all(img.is_zero() for img in self.images.values())

    def __call__(self, r):
        return deriv_apply(self, r)

    def __eq__(self, other):
        return (isinstance(other, DerivSpec) and other.ring == self.ring
                and other.images == self.images and other.twist == self.twist)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        body = ", ".join("%s->%s" % (n, self.images[n]) for n in self.ring.gens)
        return "DerivSpec(%s)" % body


def deriv_validate(spec):
    """Certify a DerivSpec against the ring's commutativity.

    delta(gh) expanded through g first or h first must agree, which on
    generator pairs reads (sigma(g) - g) delta(h) = (sigma(h) - h) delta(g);
    that identity propagates to all products, so checking the pairs
    certifies the whole extension.
    """
    ring = spec.ring
    report = Report("derivation")
    witness = None
    for i, g in enumerate(ring.gens):
        for h in ring.gens[:i]:
            lhs = (endo_apply(spec.twist, ring.gen(g)) - ring.gen(g)) * spec.images[h]
            rhs = (endo_apply(spec.twist, ring.gen(h)) - ring.gen(h)) * spec.images[g]
            if lhs != rhs:
                witness = "pair (%s, %s): %s != %s" % (g, h, lhs, rhs)
                break
        if witness:
            break
    report.add("commutation_compatible", witness is None, witness=witness)
    return report


def _deriv_gen_power(spec, name, e):
    # delta(g^e) by the product rule; negative e goes through
    # delta(g^-1) = -sigma(g)^-1 delta(g) g^-1
    ring = spec.ring
    g = ring.gen(name)
    if e >= 0:
        base, dbase = g, spec.images[name]
    else:
        ginv = g.inverse()
        base = ginv
        dbase = -(endo_apply(spec.twist, g).inverse() * spec.images[name] * ginv)
        e = -e
    sbase = endo_apply(spec.twist, base)
    out = ring.zero()
    for k in range(e):
        out = out + sbase ** k * dbase * base ** (e - 1 - k)
    return out


def deriv_apply(spec, r):
    ring = spec.ring
    out = ring.zero()
    for exps, c in r.terms.items():
        # split the monomial as (g_i^e) * rest and recurse on the closed
        # form for generator powers
        parts = [(name, e) for name, e in zip(ring.gens, exps) if e]
        acc = ring.zero()
        prefix = ring.one()          # sigma applied to the part already passed
        tail = ring.monomial(exps)   # unprocessed suffix of the monomial
        for name, e in parts:
            factor = ring.gen(name) ** e
            tail = tail * factor.inverse() if factor.is_unit_monomial() else _strip(tail, name, e)
            acc = acc + prefix * _deriv_gen_power(spec, name, e) * tail
            prefix = prefix * endo_apply(spec.twist, factor)
        out = out + acc.scale(c)
    return out


def _strip(mono, name, e):
    # divide a single-term monomial by gen^e when plain inversion is not
    # available (non-Laurent position)
    ring = mono.ring
    (exps, c), = mono.terms.items()
    i = ring.index[name]
    new = list(exps)
    new[i] -= e
    return ring.monomial(tuple(new), c)
