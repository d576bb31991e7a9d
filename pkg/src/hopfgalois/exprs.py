"""Small arithmetic-expression front end shared by scalar parsing and the
presentation-file reader.

The grammar is plain infix arithmetic with integer literals, named symbols,
and an optional tensor operator:

    expr   := term (('+' | '-') term)*
    term   := tens (('*' | '/') tens)*
    tens   := power ('@' power)*
    power  := atom ('^' signed-int)*
    atom   := INT | NAME | '(' expr ')' | '-' atom | '+' atom

so '^' binds tightest, then '@', then '*' and '/', then '+' and '-'.
Tensor factors containing products must be parenthesized: (x*y)@z.

Evaluation is delegated to a context object providing const, sym, add, sub,
mul, div, pow, neg, and (optionally) tensor. Contexts decide what division
means; most reject anything but scalar or unit divisors.
"""

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^|\*|/|\+|-|@|\(|\)))")


class ExprError(ValueError):
    pass


def tokenize(s):
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            rest = s[pos:].strip()
            if not rest:
                break
            raise ExprError("unexpected character %r at position %d" % (rest[0], pos))
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ExprError("expected %r, found %r" % (op, val))

    def parse_expr(self):
        kind, val = self.peek()
        value = self.parse_term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.next()
            rhs = self.parse_term()
            value = self.ctx.add(value, rhs) if op == "+" else self.ctx.sub(value, rhs)
        return value

    def parse_term(self):
        value = self.parse_tens()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            _, op = self.next()
            rhs = self.parse_tens()
            value = self.ctx.mul(value, rhs) if op == "*" else self.ctx.div(value, rhs)
        return value

    def parse_tens(self):
        value = self.parse_power()
        while self.peek() == ("op", "@"):
            self.next()
            rhs = self.parse_power()
            tensor = getattr(self.ctx, "tensor", None)
            if tensor is None:
                raise ExprError("tensor operator '@' not supported here")
            value = tensor(value, rhs)
        return value

    def parse_power(self):
        value = self.parse_atom()
        while self.peek() == ("op", "^"):
            self.next()
            sign = 1
            if self.peek() == ("op", "-"):
                self.next()
                sign = -1
            kind, val = self.next()
            if kind != "int":
                raise ExprError("exponent must be an integer literal")
            value = self.ctx.pow(value, sign * val)
        return value

    def parse_atom(self):
        kind, val = self.next()
        if kind == "int":
            return self.ctx.const(val)
        if kind == "name":
            return self.ctx.sym(val)
        if kind == "op" and val == "(":
            value = self.parse_expr()
            self.expect_op(")")
            return value
        if kind == "op" and val == "-":
            return self.ctx.neg(self.parse_atom_with_power())
        if kind == "op" and val == "+":
            return self.parse_atom_with_power()
        raise ExprError("unexpected token %r" % (val,))

    def parse_atom_with_power(self):
        # unary minus applies after exponentiation: -x^2 is -(x^2)
        value = self.parse_atom()
        while self.peek() == ("op", "^"):
            self.next()
            sign = 1
            if self.peek() == ("op", "-"):
                self.next()
                sign = -1
            kind, val = self.next()
            if kind != "int":
                raise ExprError("exponent must be an integer literal")
            value = self.ctx.pow(value, sign * val)
        return value


def evaluate(s, ctx):
    """Parse and evaluate the expression string under the given context."""
    parser = _Parser(tokenize(s), ctx)
    value = parser.parse_expr()
    kind, _ = parser.next()
    if kind != "end":
        raise ExprError("trailing input in expression %r" % s)
    return value
