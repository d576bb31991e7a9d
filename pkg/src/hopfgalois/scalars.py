"""Exact scalar arithmetic.

Three base fields, all with decidable equality and no floating point
anywhere:

  * rationals()                arbitrary-precision rationals
  * cyclotomic(n)              Q(zeta_n) = Q[z]/(Phi_n(z))
  * rational_functions(var)    Q(var), fractions of polynomials

Values are plain immutable data (mpq, or tuples of mpq); the field object
carries the operations. Every constructor returns canonical forms, so
value equality is ordinary ==.
"""

from . import exprs

try:
    from gmpy2 import mpq as QQ
except ImportError:
    from fractions import Fraction as QQ

Q0 = QQ(0)
Q1 = QQ(1)


# dense univariate polynomials over QQ: tuples of coefficients, low degree
# first, no trailing zeros, () is the zero polynomial

def _ptrim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else Q0) + (b[i] if i < len(b) else Q0)
                   for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Q0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Q0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for j, cb in enumerate(b):
            r[k + j] -= c * cb
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return _ptrim(q), _ptrim(r)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _pshow(coeffs, var):
    """Render a polynomial as an expression string, highest degree first."""
    if not coeffs:
        return "0"
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            mono = str(abs(c))
        else:
            head = var if deg == 1 else "%s^%d" % (var, deg)
            mono = head if abs(c) == 1 else "%s*%s" % (abs(c), head)
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts)


def cyclotomic_polynomial(n):
    """Coefficient tuple of Phi_n, computed by dividing x^n - 1 by the
    cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    num = _ptrim([-Q1] + [Q0] * (n - 1) + [Q1])
    for d in range(1, n):
        if n % d == 0:
            q, r = _pdivmod(num, cyclotomic_polynomial(d))
            if r:
                raise AssertionError("cyclotomic division left a remainder")
            num = q
    return num


class Field:
    """Common interface for the scalar fields."""

    kind = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def parse(self, s):
        return exprs.evaluate(s, _FieldExprContext(self))

    def __ne__(self, other):
        return not self.__eq__(other)


class _FieldExprContext:
    def __init__(self, field):
        self.field = field

    def const(self, n):
        return self.field.from_int(n)

    def sym(self, name):
        return self.field.symbol(name)

    def add(self, a, b):
        return self.field.add(a, b)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def div(self, a, b):
        return self.field.div(a, b)

    def pow(self, a, n):
        return self.field.pow(a, n)

    def neg(self, a):
        return self.field.neg(a)


class Rationals(Field):
    kind = "rationals"

    def zero(self):
        return Q0

    def one(self):
        return Q1

    def from_int(self, n):
        return QQ(n)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def symbol(self, name):
        raise exprs.ExprError("no symbol %r in the rational field" % name)

    def show(self, a):
        return str(a)

    def __repr__(self):
        return "rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(self.kind)


class Cyclotomic(Field):
    """Q(zeta_n) as Q[z] modulo the n-th cyclotomic polynomial.

    Elements are coefficient tuples of length deg Phi_n. The generator z
    is a primitive n-th root of unity; cyclotomic(1) and cyclotomic(2)
    are copies of Q with z = 1 and z = -1.
    """

    kind = "cyclotomic"

    def __init__(self, n):
        if n < 1:
            raise ValueError("cyclotomic order must be positive")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1

    def _reduce(self, coeffs):
        _, r = _pdivmod(coeffs, self.modulus)
        return tuple(r) + (Q0,) * (self.degree - len(r))

    def zero(self):
        return (Q0,) * self.degree

    def one(self):
        return self._reduce((Q1,))

    def from_int(self, n):
        return self._reduce((QQ(n),))

    def zeta(self):
        return self._reduce((Q0, Q1))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        return self._reduce(_pmul(_ptrim(a), _ptrim(b)))

    def neg(self, a):
        return tuple(-x for x in a)

    def inv(self, a):
        # extended Euclid in Q[z]; Phi_n is irreducible so any nonzero
        # element is coprime to the modulus
        pa = _ptrim(a)
        if not pa:
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = self.modulus, pa
        s0, s1 = (), (Q1,)
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if len(r0) != 1:
            raise AssertionError("modulus not coprime to element")
        scale = (Q1 / r0[0],)
        return self._reduce(_pmul(s0, scale))

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def symbol(self, name):
        if name == "z":
            return self.zeta()
        raise exprs.ExprError("unknown symbol %r in cyclotomic field" % name)

    def show(self, a):
        return _pshow(_ptrim(a), "z")

    def __repr__(self):
        return "cyclotomic(%d)" % self.n

    def __eq__(self, other):
        return isinstance(other, Cyclotomic) and other.n == self.n

    def __hash__(self):
        return hash((self.kind, self.n))


class RationalFunctions(Field):
    """Q(var): fractions num/den of polynomials over Q, stored coprime
    with monic denominator."""

    kind = "rational_functions"

    def __init__(self, var="q"):
        if not var.isidentifier():
            raise ValueError("variable name must be an identifier")
        self.var = var

    def _make(self, num, den):
        num, den = _ptrim(num), _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (Q1,))
        g = _pgcd(num, den)
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (num, den)

    def zero(self):
        return ((), (Q1,))

    def one(self):
        return ((Q1,), (Q1,))

    def from_int(self, n):
        return self._make((QQ(n),), (Q1,))

    def gen(self):
        return ((Q0, Q1), (Q1,))

    def add(self, a, b):
        return self._make(_padd(_pmul(a[0], b[1]), _pmul(b[0], a[1])),
                          _pmul(a[1], b[1]))

    def mul(self, a, b):
        return self._make(_pmul(a[0], b[0]), _pmul(a[1], b[1]))

    def neg(self, a):
        return (_pneg(a[0]), a[1])

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self._make(a[1], a[0])

    def is_zero(self, a):
        return not a[0]

    def symbol(self, name):
        if name == self.var:
            return self.gen()
        raise exprs.ExprError("unknown symbol %r in rational function field" % name)

    def show(self, a):
        num, den = a
        if den == (Q1,):
            return _pshow(num, self.var)
        return "(%s)/(%s)" % (_pshow(num, self.var), _pshow(den, self.var))

    def __repr__(self):
        return "rational_functions(%r)" % self.var

    def __eq__(self, other):
        return isinstance(other, RationalFunctions) and other.var == self.var

    def __hash__(self):
        return hash((self.kind, self.var))


def field_make(kind, n=None, var=None):
    """Construct a field by kind name: 'rationals', 'cyclotomic' (needs n),
    or 'rational_functions' (optional variable name, default 'q')."""
    if kind == "rationals":
        return Rationals()
    if kind == "cyclotomic":
        if n is None:
            raise ValueError("cyclotomic field needs the order n")
        return Cyclotomic(n)
    if kind == "rational_functions":
        return RationalFunctions(var or "q")
    raise ValueError("unknown field kind %r" % kind)


def scalar_arith(field, a, b, op):
    """Binary scalar arithmetic dispatch: op in '+', '-', '*', '/'."""
    if op == "+":
        return field.add(a, b)
    if op == "-":
        return field.sub(a, b)
    if op == "*":
        return field.mul(a, b)
    if op == "/":
        return field.div(a, b)
    raise ValueError("unknown operation %r" % op)


def root_of_unity(field, n):
    """A primitive n-th root of unity in cyclotomic(m): zeta_m^(m/n).
    Requires n to divide m."""
    if not isinstance(field, Cyclotomic):
        raise ValueError("roots of unity live in cyclotomic fields")
    if n < 1 or field.n % n != 0:
        raise ValueError("order %d does not divide %d" % (n, field.n))
    return field.pow(field.zeta(), field.n // n)


def scalar_order(field, a, bound=64):
    """Multiplicative order of a, or None if it exceeds the bound."""
    power = a
    for k in range(1, bound + 1):
        if power == field.one():
            return k
        power = field.mul(power, a)
    return None
