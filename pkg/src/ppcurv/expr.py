"""Expression trees for the metric component language.

Grammar (whitespace-insensitive)::

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := primary ('^' exponent)?
    primary:= NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Numbers are exact (integers, fractions via '/', decimal literals).  Names
resolve against a :class:`SymbolTable`: coordinates, parameters, opaque
function names, and derivative shorthands such as ``h34`` (the function name
followed by 1-based coordinate digits).  ``exp(...)`` takes an exponent that
is linear in the coordinates with parameter coefficients.  ``name(x,x3,x4)``
is the explicit application form and must match the declared dependencies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .algebra import (
    Atom,
    LinForm,
    NormalForm,
    Poly,
    coord_atom,
    fn_atom,
    is_coord,
    is_fn,
    is_param,
    param_atom,
)


class ExprError(ValueError):
    """Problem with expression text or symbol resolution."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# ---------------------------------------------------------------------------
# Symbol table


@dataclass(frozen=True)
class FunctionDecl:
    """An opaque scalar function and the coordinates it may depend on."""

    name: str
    depends: tuple[int, ...]  # 1-based coordinate indices


@dataclass(frozen=True)
class SymbolTable:
    coordinates: tuple[str, ...]
    parameters: tuple[str, ...] = ()
    functions: tuple[FunctionDecl, ...] = ()

    def coord_index(self, name: str) -> int | None:
        try:
            return self.coordinates.index(name) + 1
        except ValueError:
            return None

    def function(self, name: str) -> FunctionDecl | None:
        for f in self.functions:
            if f.name == name:
                return f
        return None

    def with_parameters(self, *names: str) -> "SymbolTable":
        extra = tuple(n for n in names if n not in self.parameters)
        return SymbolTable(self.coordinates, self.parameters + extra, self.functions)


# ---------------------------------------------------------------------------
# Nodes


class Expression:
    """Immutable symbolic expression tree."""

    __slots__ = ()

    def normal(self, _cache={}) -> NormalForm:
        return _to_normal(self)

    def diff(self, coord_index: int) -> "Expression":
        return differentiate(self, coord_index)

    def __str__(self) -> str:
        return pprint(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({pprint(self)!r})"

    # convenience operators used heavily in tests and fixtures
    def __add__(self, other):
        return EAdd((self, _as_expr(other)))

    def __radd__(self, other):
        return EAdd((_as_expr(other), self))

    def __sub__(self, other):
        return EAdd((self, EMul((ERat(Fraction(-1)), _as_expr(other)))))

    def __rsub__(self, other):
        return EAdd((_as_expr(other), EMul((ERat(Fraction(-1)), self))))

    def __mul__(self, other):
        return EMul((self, _as_expr(other)))

    def __rmul__(self, other):
        return EMul((_as_expr(other), self))

    def __truediv__(self, other):
        return EDiv(self, _as_expr(other))

    def __rtruediv__(self, other):
        return EDiv(_as_expr(other), self)

    def __neg__(self):
        return EMul((ERat(Fraction(-1)), self))

    def __pow__(self, n: int):
        return EPow(self, int(n))


def _as_expr(v) -> Expression:
    if isinstance(v, Expression):
        return v
    return ERat(Fraction(v))


@dataclass(frozen=True, repr=False)
class ERat(Expression):
    value: Fraction


@dataclass(frozen=True, repr=False)
class ECoord(Expression):
    index: int
    name: str


@dataclass(frozen=True, repr=False)
class EParam(Expression):
    name: str


@dataclass(frozen=True, repr=False)
class EFn(Expression):
    """Derivative atom of an opaque function; didx is sorted (partials commute)."""

    name: str
    depends: tuple[int, ...]
    didx: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "didx", tuple(sorted(self.didx)))


@dataclass(frozen=True, repr=False)
class EExp(Expression):
    """exp of a linear-in-coordinates form with parameter coefficients."""

    form: LinForm


@dataclass(frozen=True, repr=False)
class EAdd(Expression):
    terms: tuple[Expression, ...]


@dataclass(frozen=True, repr=False)
class EMul(Expression):
    factors: tuple[Expression, ...]


@dataclass(frozen=True, repr=False)
class EPow(Expression):
    base: Expression
    power: int


@dataclass(frozen=True, repr=False)
class EDiv(Expression):
    num: Expression
    den: Expression


# ---------------------------------------------------------------------------
# Parser

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*/^(),]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
            break
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: SymbolTable):
        self.text = text
        self.table = table
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.advance()
        if val != value:
            raise ExprError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Expression:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected trailing {val!r}", pos)
        return e

    def expr(self) -> Expression:
        terms = [self.term()]
        while self.peek()[1] in ("+", "-"):
            op = self.advance()[1]
            t = self.term()
            terms.append(t if op == "+" else EMul((ERat(Fraction(-1)), t)))
        return terms[0] if len(terms) == 1 else EAdd(tuple(terms))

    def term(self) -> Expression:
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.advance()[1]
            rhs = self.unary()
            if isinstance(node, ERat) and isinstance(rhs, ERat):
                node = ERat(node.value * rhs.value if op == "*" else node.value / rhs.value)
            else:
                node = EMul((node, rhs)) if op == "*" else EDiv(node, rhs)
        return node

    def unary(self) -> Expression:
        if self.peek()[1] == "-":
            self.advance()
            inner = self.unary()
            if isinstance(inner, ERat):
                return ERat(-inner.value)
            return EMul((ERat(Fraction(-1)), inner))
        return self.power()

    def power(self) -> Expression:
        base = self.primary()
        if self.peek()[1] == "^":
            self.advance()
            return EPow(base, self.exponent())
        return base

    def exponent(self) -> int:
        kind, val, pos = self.peek()
        sign = 1
        if val == "-":
            self.advance()
            sign = -1
        elif val == "(":
            self.advance()
            n = self.exponent()
            self.expect(")")
            return n
        kind, val, pos = self.advance()
        if kind != "num" or "." in val:
            raise ExprError("exponent must be an integer", pos)
        return sign * int(val)

    def primary(self) -> Expression:
        kind, val, pos = self.advance()
        if kind == "num":
            if "." in val:
                return ERat(Fraction(val))
            return ERat(Fraction(int(val)))
        if val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind != "name":
            raise ExprError(f"unexpected {val or 'end of input'!r}", pos)
        if self.peek()[1] == "(":
            return self.application(val, pos)
        return self.symbol(val, pos)

    def application(self, name: str, pos: int) -> Expression:
        self.expect("(")
        args = [self.expr()]
        while self.peek()[1] == ",":
            self.advance()
            args.append(self.expr())
        self.expect(")")
        if name == "exp":
            if len(args) != 1:
                raise ExprError("exp takes a single argument", pos)
            return _exp_node(args[0], pos)
        decl = self.table.function(name)
        if decl is None:
            raise ExprError(f"unknown function {name!r}", pos)
        indices = []
        for a in args:
            if not isinstance(a, ECoord):
                raise ExprError(
                    f"{name}(...) arguments must be the declared coordinates", pos
                )
            indices.append(a.index)
        if tuple(indices) != decl.depends:
            raise ExprError(
                f"{name}(...) must be applied to its declared dependencies", pos
            )
        return EFn(decl.name, decl.depends)

    def symbol(self, name: str, pos: int) -> Expression:
        idx = self.table.coord_index(name)
        if idx is not None:
            return ECoord(idx, name)
        if name in self.table.parameters:
            return EParam(name)
        decl = self.table.function(name)
        if decl is not None:
            return EFn(decl.name, decl.depends)
        # derivative shorthand: function name followed by coordinate digits
        m = re.fullmatch(r"([A-Za-z_][A-Za-z_]*)(\d+)", name)
        if m:
            decl = self.table.function(m.group(1))
            if decl is not None:
                didx = tuple(int(ch) for ch in m.group(2))
                n = len(self.table.coordinates)
                bad = [i for i in didx if not 1 <= i <= n]
                if bad:
                    raise ExprError(
                        f"derivative index {bad[0]} outside 1..{n} in {name!r}", pos
                    )
                return EFn(decl.name, decl.depends, didx)
        raise ExprError(f"unknown symbol {name!r}", pos)


def _exp_node(arg: Expression, pos: int) -> Expression:
    nf = _to_normal(arg)
    if nf.den.constant_value() is None:
        raise ExprError("exp exponent must be polynomial", pos)
    scale = Fraction(1) / nf.den.constant_value()
    form: dict = {}
    for (vars_, expf), c in nf.num.terms.items():
        if expf:
            raise ExprError("nested exp in exponent", pos)
        cdeg = sum(e for a, e in vars_ if is_coord(a))
        if cdeg > 1 or any(is_fn(a) for a, _ in vars_):
            raise ExprError(
                "exp exponent must be linear in coordinates with parameter coefficients",
                pos,
            )
        form[vars_] = form.get(vars_, Fraction(0)) + c * scale
    lin = tuple(sorted((v, q) for v, q in form.items() if q))
    if not lin:
        return ERat(Fraction(1))
    return EExp(lin)


def parse(text: str, table: SymbolTable) -> Expression:
    """Parse expression text against the symbol table."""
    return _Parser(text, table).parse()


# ---------------------------------------------------------------------------
# Printer


def _print_linform(form: LinForm) -> str:
    bits = []
    for vars_, q in form:
        factors = []
        if q == -1 and vars_:
            prefix = "-"
        elif q != 1 or not vars_:
            factors.append(str(q))
            prefix = ""
        else:
            prefix = ""
        for a, e in vars_:
            from .algebra import atom_label

            factors.append(atom_label(a) + (f"^{e}" if e != 1 else ""))
        bits.append(prefix + "*".join(factors))
    out = " + ".join(bits)
    return out.replace("+ -", "- ")


def pprint(e: Expression) -> str:
    """Render to text that re-parses to an equal expression."""
    return _pp(e, 0)


def _pp(e: Expression, prec: int) -> str:
    # precedence levels: 0 sum, 1 product, 2 unary, 3 power/atom
    if isinstance(e, ERat):
        v = e.value
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if (v < 0 and prec > 1) or (v.denominator != 1 and prec > 1):
            return f"({s})"
        return s
    if isinstance(e, ECoord):
        return e.name
    if isinstance(e, EParam):
        return e.name
    if isinstance(e, EFn):
        return e.name + "".join(str(i) for i in e.didx)
    if isinstance(e, EExp):
        return f"exp({_print_linform(e.form)})"
    if isinstance(e, EAdd):
        s = " + ".join(_pp(t, 1) for t in e.terms).replace("+ -", "- ")
        return f"({s})" if prec > 0 else s
    if isinstance(e, EMul):
        factors = list(e.factors)
        sign = ""
        if factors and isinstance(factors[0], ERat) and factors[0].value < 0 and len(factors) > 1:
            sign = "-"
            if factors[0].value == -1:
                factors = factors[1:]
            else:
                factors[0] = ERat(-factors[0].value)
        s = sign + "*".join(_pp(f, 2) for f in factors)
        return f"({s})" if prec > 1 else s
    if isinstance(e, EPow):
        n = e.power
        exp = str(n) if n >= 0 else f"({n})"
        return _pp(e.base, 3) + "^" + exp
    if isinstance(e, EDiv):
        return _pp(e.num, 2) + "/" + _pp(e.den, 3)
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# Differentiation (tree level)


def differentiate(e: Expression, coord_index: int) -> Expression:
    """Exact partial derivative; total on well-formed trees."""
    if isinstance(e, (ERat, EParam)):
        return ERat(Fraction(0))
    if isinstance(e, ECoord):
        return ERat(Fraction(1 if e.index == coord_index else 0))
    if isinstance(e, EFn):
        if coord_index not in e.depends:
            return ERat(Fraction(0))
        return EFn(e.name, e.depends, e.didx + (coord_index,))
    if isinstance(e, EExp):
        dpoly = _linform_diff_expr(e.form, coord_index)
        if dpoly is None:
            return ERat(Fraction(0))
        return EMul((dpoly, e))
    if isinstance(e, EAdd):
        return EAdd(tuple(differentiate(t, coord_index) for t in e.terms))
    if isinstance(e, EMul):
        terms = []
        for i, f in enumerate(e.factors):
            df = differentiate(f, coord_index)
            terms.append(EMul(tuple(df if i == j else g for j, g in enumerate(e.factors))))
        return EAdd(tuple(terms))
    if isinstance(e, EPow):
        if e.power == 0:
            return ERat(Fraction(0))
        db = differentiate(e.base, coord_index)
        return EMul((ERat(Fraction(e.power)), EPow(e.base, e.power - 1), db))
    if isinstance(e, EDiv):
        dn = differentiate(e.num, coord_index)
        dd = differentiate(e.den, coord_index)
        return EDiv(
            EAdd((EMul((dn, e.den)), EMul((ERat(Fraction(-1)), e.num, dd)))),
            EPow(e.den, 2),
        )
    raise TypeError(f"not an expression node: {e!r}")


def _linform_diff_expr(form: LinForm, coord_index: int) -> Expression | None:
    from .algebra import linform_diff

    p = linform_diff(form, coord_index)
    if p.is_zero:
        return None
    return from_normal(NormalForm.from_poly(p))


# ---------------------------------------------------------------------------
# Normal form conversion


def _to_normal(e: Expression) -> NormalForm:
    if isinstance(e, ERat):
        return NormalForm.const(e.value)
    if isinstance(e, ECoord):
        return NormalForm.atom(coord_atom(e.index, e.name))
    if isinstance(e, EParam):
        return NormalForm.atom(param_atom(e.name))
    if isinstance(e, EFn):
        return NormalForm.atom(fn_atom(e.name, e.depends, e.didx))
    if isinstance(e, EExp):
        return NormalForm.from_poly(Poly.exponential(e.form))
    if isinstance(e, EAdd):
        out = NormalForm.zero()
        for t in e.terms:
            out = out + _to_normal(t)
        return out
    if isinstance(e, EMul):
        out = NormalForm.one()
        for f in e.factors:
            out = out * _to_normal(f)
        return out
    if isinstance(e, EPow):
        return _to_normal(e.base) ** e.power
    if isinstance(e, EDiv):
        return _to_normal(e.num) / _to_normal(e.den)
    raise TypeError(f"not an expression node: {e!r}")


def normalize(e: Expression) -> NormalForm:
    """Canonical fraction; normalize(a) == normalize(b) iff a - b vanishes."""
    return _to_normal(e)


def from_normal(nf: NormalForm) -> Expression:
    """Expression view of a normal form (expanded numerator/denominator)."""
    dc = nf.den.constant_value()
    if dc is not None:
        return _poly_to_expr(nf.num, Fraction(1) / dc)
    return EDiv(_poly_to_expr(nf.num), _poly_to_expr(nf.den))


def _poly_to_expr(p: Poly, scale: Fraction = Fraction(1)) -> Expression:
    from .algebra import mono_key

    if p.is_zero:
        return ERat(Fraction(0))
    terms = []
    for mono in sorted(p.terms, key=mono_key, reverse=True):
        c = p.terms[mono] * scale
        vars_, form = mono
        factors: list[Expression] = []
        if c != 1 or (not vars_ and not form):
            factors.append(ERat(c))
        for a, e in vars_:
            base: Expression
            if is_coord(a):
                base = ECoord(a[1], a[2])
            elif is_param(a):
                base = EParam(a[1])
            else:
                base = EFn(a[1], a[2], a[3])
            factors.append(base if e == 1 else EPow(base, e))
        if form:
            factors.append(EExp(form))
        terms.append(factors[0] if len(factors) == 1 else EMul(tuple(factors)))
    return terms[0] if len(terms) == 1 else EAdd(tuple(terms))


# ---------------------------------------------------------------------------
# Bindings: instantiation and evaluation


@dataclass
class Binding:
    """Point values for symbols and/or concrete expressions for functions."""

    values: dict[str, Union[Fraction, int, float]] = field(default_factory=dict)
    functions: dict[str, Expression] = field(default_factory=dict)


def instantiate(e: Expression, b: Binding) -> Expression:
    """Replace opaque-function atoms by the matching derivatives of their
    concrete instantiations; functions without a binding stay opaque."""
    if isinstance(e, EFn):
        inst = b.functions.get(e.name)
        if inst is None:
            return e
        out = inst
        for i in e.didx:
            out = differentiate(out, i)
        return instantiate(out, b) if _mentions_functions(out, b.functions, e.name) else out
    if isinstance(e, EAdd):
        return EAdd(tuple(instantiate(t, b) for t in e.terms))
    if isinstance(e, EMul):
        return EMul(tuple(instantiate(f, b) for f in e.factors))
    if isinstance(e, EPow):
        return EPow(instantiate(e.base, b), e.power)
    if isinstance(e, EDiv):
        return EDiv(instantiate(e.num, b), instantiate(e.den, b))
    return e


def _mentions_functions(e: Expression, fns: Mapping[str, Expression], skip: str) -> bool:
    if isinstance(e, EFn):
        return e.name in fns and e.name != skip
    if isinstance(e, EAdd):
        return any(_mentions_functions(t, fns, skip) for t in e.terms)
    if isinstance(e, EMul):
        return any(_mentions_functions(f, fns, skip) for f in e.factors)
    if isinstance(e, EPow):
        return _mentions_functions(e.base, fns, skip)
    if isinstance(e, EDiv):
        return _mentions_functions(e.num, fns, skip) or _mentions_functions(e.den, fns, skip)
    return False


def evaluate(e: Expression, b: Binding):
    """Evaluate at a point.  Exact (Fraction) when every binding is rational
    and the exponential part collapses; float when any binding is a float."""
    if b.functions:
        e = instantiate(e, b)
    nf = _to_normal(e)
    exact = all(not isinstance(v, float) for v in b.values.values())
    point = {}
    for atom in nf.atoms():
        if is_coord(atom):
            name = atom[2]
        elif is_param(atom):
            name = atom[1]
        else:
            raise ExprError(f"unbound opaque function {atom[1]!r} at evaluation")
        if name not in b.values:
            raise ExprError(f"no value bound for symbol {name!r}")
        v = b.values[name]
        point[atom] = Fraction(v) if exact else float(v)
    if exact:
        val = nf.eval_exact(point)
        frac = val.as_fraction()
        return frac if frac is not None else val.to_float()
    from math import exp as _exp

    return nf.eval_numeric(point, _exp)
