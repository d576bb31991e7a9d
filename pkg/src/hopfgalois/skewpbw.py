"""Skew polynomial presentations and their normal forms.

A presentation is a coefficient ring R, an ordered list of variables
x_1 < ... < x_n, and rewrite data:

  * per variable, an endomorphism sigma_i and a sigma_i-derivation
    delta_i of R, giving   x_i r -> sigma_i(r) x_i + delta_i(r)
  * per pair j > i, a relation
        x_j x_i -> c x_i x_j + sum_k a_k x_k + d
    with c in R nonzero and a_k, d in R.

Elements are kept as R-linear combinations of ordered monomials
x_1^{e_1} ... x_n^{e_n}. Products are computed by rewriting words to
normal form; the rewriting always terminates (each step drops a variable,
removes an inversion, or moves a coefficient left), but the normal form
is well defined only when the presentation is confluent. pbw_check
decides confluence by comparing the two reductions of every minimal
overlap: the variable triples x_k x_j x_i and the words x_j x_i t with t
a coefficient generator.

word_sum_product is an independent closed form for products in one
variable: x^i r = sum_k W_k(r) x^{i-k} where W_k sums every composition
word in sigma and delta of length i containing delta exactly k times.
"""

from itertools import combinations

from . import exprs
from .coeffring import (
    DerivSpec, EndoSpec, RElem, deriv_apply, deriv_validate, endo_apply,
    endo_validate, monomial_key,
)
from .reports import Report


class PairRelation:
    """Right side of x_j x_i -> lead * x_i x_j + linear + const."""

    def __init__(self, lead, linear=None, const=None):
        self.lead = lead
        self.linear = dict(linear or {})
        self.const = const

    def __repr__(self):
        return "PairRelation(lead=%s, linear=%s, const=%s)" % (
            self.lead, {k: str(v) for k, v in self.linear.items()}, self.const)


class Presentation:
    def __init__(self, ring, names, sigma=None, delta=None, pairs=None, flags=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if set(names) & set(ring.gens):
            raise ValueError("variable names clash with coefficient generators")
        for name in names:
            if not name.isidentifier():
                raise ValueError("variable name %r is not an identifier" % name)
        self.ring = ring
        self.vars = names
        self.vindex = {name: i for i, name in enumerate(names)}
        sigma = sigma or {}
        delta = delta or {}
        self.sigma = {}
        self.delta = {}
        for name in names:
            sg = sigma.get(name)
            self.sigma[name] = sg if sg is not None else ring.identity_endo()
            dl = delta.get(name)
            if dl is None:
                dl = DerivSpec(ring, {g: ring.zero() for g in ring.gens},
                               twist=self.sigma[name])
            self.delta[name] = dl
        self.pairs = {}
        for j in range(len(names)):
            for i in range(j):
                key = (names[j], names[i])
                rel = (pairs or {}).get(key)
                if rel is None:
                    rel = PairRelation(ring.one())
                lead = rel.lead if rel.lead is not None else ring.one()
                if not isinstance(lead, RElem) or lead.is_zero():
                    raise ValueError("pair %s: lead coefficient must be nonzero" % (key,))
                linear = {}
                for vname, r in rel.linear.items():
                    if vname not in self.vindex:
                        raise ValueError("pair %s: unknown variable %r" % (key, vname))
                    if not r.is_zero():
                        linear[self.vindex[vname]] = r
                const = rel.const if rel.const is not None else ring.zero()
                self.pairs[(j, i)] = PairRelation(lead, linear, const)
        self.flags = dict(flags or {})

    @property
    def nvars(self):
        return len(self.vars)

    def zero(self):
        return SkewPoly(self, {})

    def one(self):
        return self.embed(self.ring.one())

    def from_int(self, n):
        return self.embed(self.ring.from_int(n))

    def embed(self, r):
        if r.is_zero():
            return SkewPoly(self, {})
        return SkewPoly(self, {(0,) * self.nvars: r})

    def gen(self, name):
        if name in self.vindex:
            i = self.vindex[name]
            exps = tuple(1 if j == i else 0 for j in range(self.nvars))
            return SkewPoly(self, {exps: self.ring.one()})
        return self.embed(self.ring.gen(name))

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad variable exponent vector %r" % (exps,))
        c = self.ring.one() if coeff is None else coeff
        if c.is_zero():
            return SkewPoly(self, {})
        return SkewPoly(self, {exps: c})

    def parse(self, s):
        return exprs.evaluate(s, _PresExprContext(self))

    def quasi_commutative(self):
        """True when every delta is zero and every pair relation is a pure
        scalar twist x_j x_i -> c x_i x_j."""
        if any(not self.delta[name].is_zero() for name in self.vars):
            return False
        return all(not rel.linear and rel.const.is_zero()
                   for rel in self.pairs.values())

    def bijectivity(self):
        """Certify the presentation's two-sidedness: every pair lead is an
        invertible element of R and every sigma has a verified inverse."""
        report = Report("bijectivity")
        bad = [key for key, rel in self.pairs.items()
               if not (rel.lead.is_unit_monomial() or
                       (rel.lead.is_scalar() and not rel.lead.is_zero()))]
        report.add("invertible_leads", not bad,
                   witness=None if not bad else "lead of %s is not a unit"
                   % (self._pair_name(bad[0]),))
        for name in self.vars:
            inv = try_invert_endo(self.sigma[name])
            if inv is None:
                report.add("sigma_%s_bijective" % name, False,
                           witness="no inverse found for sigma_%s" % name)
            else:
                sub = endo_validate(self.sigma[name], inverse=inv)
                report.add("sigma_%s_bijective" % name, sub.ok)
        return report

    def _pair_name(self, key):
        j, i = key
        return "%s*%s" % (self.vars[j], self.vars[i])

    def __repr__(self):
        return "Presentation(%r, vars=%s)" % (self.ring, list(self.vars))


def presentation_make(ring, names, sigma=None, delta=None, pairs=None, flags=None):
    return Presentation(ring, names, sigma, delta, pairs, flags)


class SkewPoly:
    """Element in normal form: ordered variable exponents -> coefficient."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_scalar_multiple_of_one(self):
        zero_exps = (0,) * self.pres.nvars
        return all(e == zero_exps for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.pres.nvars, self.pres.ring.zero())

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for exps, r in other.terms.items():
            acc = out.get(exps)
            acc = r if acc is None else acc + r
            if acc.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = acc
        return SkewPoly(self.pres, out)

    def __neg__(self):
        return SkewPoly(self.pres, {e: -r for e, r in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        words = []
        for e1, r1 in self.terms.items():
            for e2, r2 in other.terms.items():
                words.append([r1] + _exps_word(e1) + [r2] + _exps_word(e2))
        return SkewPoly(self.pres, _reduce(self.pres, words))

    def coeff_mul(self, r):
        # left action of R: r * (c x^e) = (rc) x^e, already normal
        out = {}
        for exps, c in self.terms.items():
            acc = r * c
            if not acc.is_zero():
                out[exps] = acc
        return SkewPoly(self.pres, out)

    def scale(self, c):
        return self.coeff_mul(self.pres.ring.from_scalar(c))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of skew polynomials")
        out = self.pres.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and other.pres is self.pres
                and other.terms == self.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def _check(self, other):
        if not isinstance(other, SkewPoly) or other.pres is not self.pres:
            raise TypeError("mixed presentations")

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=monomial_key, reverse=True):
            cs = str(self.terms[exps])
            if " " in cs:
                cs = "(%s)" % cs
            mono = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.pres.vars, exps) if e)
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
        return "<SkewPoly %s>" % self


class _PresExprContext:
    def __init__(self, pres):
        self.pres = pres

    def const(self, n):
        return self.pres.from_int(n)

    def sym(self, name):
        if name in self.pres.vindex or name in self.pres.ring.index:
            return self.pres.gen(name)
        return self.pres.embed(self.pres.ring.parse(name))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b.is_scalar_multiple_of_one():
            raise exprs.ExprError("division only by coefficient units")
        return a.coeff_mul(b.constant_coefficient().inverse())

    def pow(self, a, n):
        if n >= 0:
            return a ** n
        if not a.is_scalar_multiple_of_one():
            raise exprs.ExprError("negative powers only for coefficient units")
        return self.pres.embed(a.constant_coefficient() ** n)

    def neg(self, a):
        return -a


def _exps_word(exps):
    word = []
    for i, e in enumerate(exps):
        word.extend([i] * e)
    return word


def _find_redex(word):
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        ra = isinstance(a, RElem)
        rb = isinstance(b, RElem)
        if ra and rb:
            return p, "merge"
        if not ra and rb:
            return p, "commute"
        if not ra and not rb and a > b:
            return p, "pair"
    return None


def _expand(pres, word, p, kind):
    """Apply one rewrite step at position p; returns the successor words."""
    prefix, suffix = word[:p], word[p + 2:]
    a, b = word[p], word[p + 1]
    if kind == "merge":
        r = a * b
        return [prefix + [r] + suffix] if not r.is_zero() else []
    if kind == "commute":
        name = pres.vars[a]
        outs = []
        s = endo_apply(pres.sigma[name], b)
        if not s.is_zero():
            outs.append(prefix + [s, a] + suffix)
        d = deriv_apply(pres.delta[name], b)
        if not d.is_zero():
            outs.append(prefix + [d] + suffix)
        return outs
    if kind == "pair":
        rel = pres.pairs[(a, b)]
        outs = [prefix + [rel.lead, b, a] + suffix]
        for k, r in rel.linear.items():
            outs.append(prefix + [r, k] + suffix)
        if not rel.const.is_zero():
            outs.append(prefix + [rel.const] + suffix)
        return outs
    raise ValueError("unknown redex kind %r" % kind)


def _reduce(pres, words):
    """Rewrite a bag of words to normal form, summed as a terms dict."""
    out = {}
    stack = [list(w) for w in words]
    while stack:
        word = stack.pop()
        redex = _find_redex(word)
        if redex is not None:
            stack.extend(_expand(pres, word, *redex))
            continue
        coef = None
        exps = [0] * pres.nvars
        for atom in word:
            if isinstance(atom, RElem):
                coef = atom if coef is None else coef * atom
            else:
                exps[atom] += 1
        if coef is None:
            coef = pres.ring.one()
        if coef.is_zero():
            continue
        key = tuple(exps)
        acc = out.get(key)
        acc = coef if acc is None else acc + coef
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc
    return out


def normal_form(pres, x):
    """Normal form of an expression string or skew polynomial."""
    if isinstance(x, str):
        return pres.parse(x)
    return x


def multiply(pres, a, b):
    if isinstance(a, str):
        a = pres.parse(a)
    if isinstance(b, str):
        b = pres.parse(b)
    return a * b


def leading_data(poly):
    """(exponent vector, coefficient) of the highest monomial under the
    graded order, or None for zero."""
    if poly.is_zero():
        return None
    exps = max(poly.terms, key=monomial_key)
    return exps, poly.terms[exps]


def word_sum_product(pres, r, i, s, j):
    """Closed-form product (r x^i)(s x^j) in a one-variable presentation:
    sum over k of r * W_k(s) * x^{i+j-k}, W_k summing all length-i
    composition words with exactly k delta letters."""
    if pres.nvars != 1:
        raise ValueError("word sums need a single variable")
    name = pres.vars[0]
    sigma, delta = pres.sigma[name], pres.delta[name]
    out = {}
    for k in range(i + 1):
        acc = pres.ring.zero()
        for spots in combinations(range(i), k):
            chosen = set(spots)
            val = s
            for step in range(i):
                val = deriv_apply(delta, val) if step in chosen else endo_apply(sigma, val)
                if val.is_zero():
                    break
            acc = acc + val
        coef = r * acc
        if not coef.is_zero():
            key = (i + j - k,)
            prev = out.get(key)
            prev = coef if prev is None else prev + coef
            if prev.is_zero():
                out.pop(key, None)
            else:
                out[key] = prev
    return SkewPoly(pres, out)


def try_invert_endo(spec):
    """Invert an EndoSpec whose images are affine c*g + d in a single
    generator, or Laurent units c*g^-1, with the target generators forming
    a permutation. Returns the inverse EndoSpec or None."""
    ring = spec.ring
    field = ring.field
    mapping = {}
    for name in ring.gens:
        img = spec.images[name]
        c = d = None
        target = None
        exp = 0
        for exps, coef in img.terms.items():
            support = [(idx, e) for idx, e in enumerate(exps) if e]
            if not support:
                d = coef
            elif len(support) == 1 and support[0][1] in (1, -1):
                if target is not None:
                    return None
                target, exp = support[0]
                c = coef
            else:
                return None
        if target is None or c is None:
            return None
        if exp == -1 and d is not None:
            return None
        if ring.gens[target] in mapping:
            return None
        mapping[ring.gens[target]] = (name, c, d, exp)
    if len(mapping) != len(ring.gens):
        return None
    images = {}
    for tname, (name, c, d, exp) in mapping.items():
        g = ring.gen(name)
        if exp == 1:
            img = g if d is None else g - ring.from_scalar(d)
            images[tname] = img.scale(field.inv(c))
        else:
            images[tname] = g.inverse().scale(c)
    return EndoSpec(ring, images)


class ConfluenceReport(Report):
    """Report from pbw_check; overlap_failures lists each ambiguous
    overlap as (word, first normal form, second normal form)."""

    def __init__(self, title=None):
        super().__init__(title)
        self.overlap_failures = []


def _word_str(pres, word):
    parts = []
    for atom in word:
        parts.append(str(atom) if isinstance(atom, RElem) else pres.vars[atom])
    return "*".join(parts)


def pbw_check(pres):
    """Decide whether the ordered monomials form a basis, by confluence.

    Checks the validity of the sigma/delta data, then resolves every
    minimal overlap both ways and compares normal forms. Any mismatch is
    reported with the overlap word and the two distinct results.
    """
    rep = ConfluenceReport("pbw")
    for name in pres.vars:
        rep.extend(endo_validate(pres.sigma[name]), prefix="sigma." + name)
        rep.extend(deriv_validate(pres.delta[name]), prefix="delta." + name)

    triple_fails = []
    n = pres.nvars
    for k in range(2, n):
        for j in range(1, k):
            for i in range(j):
                word = [k, j, i]
                nf1 = _reduce(pres, _expand(pres, word, 0, "pair"))
                nf2 = _reduce(pres, _expand(pres, word, 1, "pair"))
                if nf1 != nf2:
                    triple_fails.append((_word_str(pres, word),
                                         str(SkewPoly(pres, nf1)),
                                         str(SkewPoly(pres, nf2))))
    rep.add("triple_overlaps", not triple_fails,
            witness=None if not triple_fails else
            "%s reduces to %s and to %s" % triple_fails[0],
            count=n * (n - 1) * (n - 2) // 6)

    coeff_fails = []
    for j in range(1, n):
        for i in range(j):
            for gname in pres.ring.gens:
                word = [j, i, pres.ring.gen(gname)]
                nf1 = _reduce(pres, _expand(pres, word, 0, "pair"))
                nf2 = _reduce(pres, _expand(pres, word, 1, "commute"))
                if nf1 != nf2:
                    coeff_fails.append((_word_str(pres, word),
                                        str(SkewPoly(pres, nf1)),
                                        str(SkewPoly(pres, nf2))))
    rep.add("coefficient_overlaps", not coeff_fails,
            witness=None if not coeff_fails else
            "%s reduces to %s and to %s" % coeff_fails[0],
            count=n * (n - 1) // 2 * len(pres.ring.gens))

    rep.overlap_failures = triple_fails + coeff_fails
    return rep
