"""Exact multivariate arithmetic over the atom alphabet.

Atoms are coordinates, parameters and derivative atoms of opaque functions
(``h``, ``h3``, ``h34`` ...).  Exponentials of linear-in-coordinates forms are
carried inside monomials, so products of exponentials fold exactly.  On top of
the polynomial layer sits :class:`NormalForm`, a canonical fraction used as
the engine's notion of equality: two expressions denote the same rational
function iff their normal forms cross-multiply to the same polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping

# ---------------------------------------------------------------------------
# Atoms
#
# An atom is a plain tuple so that the default tuple ordering yields a fixed,
# content-based term order:
#   ("c", index, name)            coordinate
#   ("p", name)                   parameter (treated as transcendental)
#   ("f", name, deps, didx)       opaque function differentiated along didx
# ``deps`` and ``didx`` are tuples of 1-based coordinate indices; ``didx`` is
# kept sorted because mixed partials commute.

Atom = tuple


def coord_atom(index: int, name: str) -> Atom:
    return ("c", index, name)


def param_atom(name: str) -> Atom:
    return ("p", name)


def fn_atom(name: str, deps: tuple[int, ...], didx: tuple[int, ...] = ()) -> Atom:
    return ("f", name, tuple(deps), tuple(sorted(didx)))


def is_coord(atom: Atom) -> bool:
    return atom[0] == "c"


def is_param(atom: Atom) -> bool:
    return atom[0] == "p"


def is_fn(atom: Atom) -> bool:
    return atom[0] == "f"


def atom_label(atom: Atom) -> str:
    if atom[0] == "c":
        return atom[2]
    if atom[0] == "p":
        return atom[1]
    return atom[1] + "".join(str(i) for i in atom[3])


# ---------------------------------------------------------------------------
# Monomials
#
# A monomial is a pair (vars, expf):
#   vars  sorted tuple of (atom, positive int exponent)
#   expf  exponent of the exponential part: sorted tuple of (vars', Fraction)
#         where vars' is again a sorted power tuple over coordinate/parameter
#         atoms.  exp(E1) * exp(E2) = exp(E1 + E2), so multiplication adds
#         these forms; exp is a unit, hence expf coefficients may be negative.

Vars = tuple
LinForm = tuple
Monomial = tuple

MONO_ONE: Monomial = ((), ())


def _merge_vars(a: Vars, b: Vars) -> Vars:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for atom, e in b:
        n = d.get(atom, 0) + e
        if n:
            d[atom] = n
        else:
            del d[atom]
    return tuple(sorted(d.items()))


def _add_linforms(a: LinForm, b: LinForm) -> LinForm:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, q in b:
        n = d.get(v, Fraction(0)) + q
        if n:
            d[v] = n
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _neg_linform(a: LinForm) -> LinForm:
    return tuple((v, -q) for v, q in a)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (_merge_vars(a[0], b[0]), _add_linforms(a[1], b[1]))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m[0])


def mono_key(m: Monomial):
    """Graded-lexicographic sort key; any fixed total order would do."""
    return (mono_degree(m), m[0], m[1])


def mono_from_atom(atom: Atom, power: int = 1) -> Monomial:
    return (((atom, power),), ())


def linform_diff(form: LinForm, coord_index: int) -> "Poly":
    """Partial derivative of an exponent form along a coordinate."""
    out: dict[Monomial, Fraction] = {}
    for vars_, q in form:
        for atom, e in vars_:
            if is_coord(atom) and atom[1] == coord_index:
                rest = _merge_vars(vars_, ((atom, -1),))
                key = (rest, ())
                c = out.get(key, Fraction(0)) + q * e
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
    return Poly(out)


def linform_eval(form: LinForm, point: Mapping[Atom, Fraction]) -> Fraction:
    total = Fraction(0)
    for vars_, q in form:
        v = q
        for atom, e in vars_:
            v *= point[atom] ** e
        total += v
    return total


# ---------------------------------------------------------------------------
# Polynomials


class Poly:
    """Sparse polynomial over the atoms with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction]):
        self.terms = terms

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly({})

    @staticmethod
    def const(c) -> "Poly":
        c = Fraction(c)
        return Poly({MONO_ONE: c} if c else {})

    @staticmethod
    def atom(a: Atom, power: int = 1) -> "Poly":
        return Poly({mono_from_atom(a, power): Fraction(1)})

    @staticmethod
    def exponential(form: LinForm) -> "Poly":
        if not form:
            return Poly.const(1)
        return Poly({((), form): Fraction(1)})

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=mono_key)

    def constant_value(self) -> Fraction | None:
        """The value as a rational constant, or None if non-constant."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and MONO_ONE in self.terms:
            return self.terms[MONO_ONE]
        return None

    def atoms(self) -> set[Atom]:
        out: set[Atom] = set()
        for vars_, form in self.terms:
            for a, _ in vars_:
                out.add(a)
            for v2, _ in form:
                for a, _ in v2:
                    out.add(a)
        return out

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        d = dict(self.terms)
        for m, c in other.terms.items():
            n = d.get(m)
            if n is None:
                d[m] = c
            else:
                n = n + c
                if n:
                    d[m] = n
                else:
                    del d[m]
        return Poly(d)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly({})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = out.get(m)
                if c is None:
                    out[m] = c1 * c2
                else:
                    c = c + c1 * c2
                    if c:
                        out[m] = c
                    else:
                        del out[m]
        return Poly(out)

    def scale(self, c: Fraction) -> "Poly":
        if not c:
            return Poly({})
        return Poly({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, coeff: Fraction = Fraction(1)) -> "Poly":
        return Poly({mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power on a polynomial")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus -----------------------------------------------------------

    def diff(self, coord_index: int) -> "Poly":
        """Exact partial derivative along the coordinate with that index."""
        out = Poly({})
        for (vars_, form), c in self.terms.items():
            # product rule across the power part
            for pos, (atom, e) in enumerate(vars_):
                d = _atom_diff(atom, coord_index)
                if d is None:
                    continue
                rest = _merge_vars(vars_, ((atom, -1),))
                out = out + d.mul_monomial((rest, form), c * e)
            # chain rule through the exponential part
            if form:
                dform = linform_diff(form, coord_index)
                if not dform.is_zero:
                    out = out + dform.mul_monomial((vars_, form), c)
        return out

    # -- substitution and evaluation ----------------------------------------

    def subst(self, mapping: Mapping[Atom, "NormalForm"]) -> "NormalForm":
        """Replace atoms by normal forms (exponent-part atoms are kept)."""
        total = NormalForm.zero()
        for (vars_, form), c in self.terms.items():
            part = NormalForm.const(c)
            plain: Vars = ()
            for atom, e in vars_:
                nf = mapping.get(atom)
                if nf is None:
                    plain = _merge_vars(plain, ((atom, e),))
                else:
                    part = part * nf ** e
            part = part * NormalForm.from_poly(Poly({(plain, form): Fraction(1)}))
            total = total + part
        return total

    def eval_exact(self, point: Mapping[Atom, Fraction]) -> "ExpVal":
        out: dict[Fraction, Fraction] = {}
        for (vars_, form), c in self.terms.items():
            v = c
            for atom, e in vars_:
                v *= point[atom] ** e
            q = linform_eval(form, point) if form else Fraction(0)
            n = out.get(q, Fraction(0)) + v
            if n:
                out[q] = n
            else:
                out.pop(q, None)
        return ExpVal(out)

    def partial_eval(self, point: Mapping[Atom, Fraction]) -> "Poly":
        """Substitute rational values for every non-exponential atom; the
        exponential parts collapse to constant forms (pure e^q units)."""
        out: dict[Monomial, Fraction] = {}
        for (vars_, form), c in self.terms.items():
            v = c
            for atom, e in vars_:
                v *= point[atom] ** e
            if not v:
                continue
            q = linform_eval(form, point) if form else Fraction(0)
            key = ((), (((), q),) if q else ())
            n = out.get(key, Fraction(0)) + v
            if n:
                out[key] = n
            else:
                out.pop(key, None)
        return Poly(out)

    def eval_numeric(self, point: Mapping[Atom, object], exp_fn) -> object:
        total = 0
        for (vars_, form), c in self.terms.items():
            v = c.numerator / _as_numeric(c.denominator, point)
            for atom, e in vars_:
                v = v * point[atom] ** e
            if form:
                q = 0
                for vars2, coeff in form:
                    w = coeff.numerator / _as_numeric(coeff.denominator, point)
                    for atom, e in vars2:
                        w = w * point[atom] ** e
                    q = q + w
                v = v * exp_fn(q)
            total = total + v
        return total

    # -- normalisation helpers ----------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer, primitive coefficients."""
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def mono_content(self) -> Monomial:
        """Greatest common monomial factor (min exponents over all terms)."""
        it = iter(self.terms)
        first = next(it)
        common = dict(first[0])
        for vars_, _ in it:
            if not common:
                break
            d = dict(vars_)
            for atom in list(common):
                e = d.get(atom, 0)
                if e < common[atom]:
                    if e:
                        common[atom] = e
                    else:
                        del common[atom]
        return (tuple(sorted(common.items())), ())

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m in sorted(self.terms, key=mono_key, reverse=True):
            c = self.terms[m]
            vars_, form = m
            seg = [str(c)]
            seg += [
                atom_label(a) + (f"^{e}" if e != 1 else "") for a, e in vars_
            ]
            if form:
                seg.append(
                    "exp("
                    + " + ".join(
                        f"{q}*" + "*".join(atom_label(a) + (f"^{e}" if e != 1 else "") for a, e in v2)
                        if v2
                        else str(q)
                        for v2, q in form
                    )
                    + ")"
                )
            bits.append("*".join(seg))
        return "Poly(" + " + ".join(bits) + ")"


def _as_numeric(x, point):
    return x


def _atom_diff(atom: Atom, coord_index: int) -> Poly | None:
    """d(atom)/dx_i as a polynomial, or None when it vanishes."""
    kind = atom[0]
    if kind == "c":
        return Poly.const(1) if atom[1] == coord_index else None
    if kind == "p":
        return None
    # derivative atom of an opaque function
    _, name, deps, didx = atom
    if coord_index not in deps:
        return None
    return Poly.atom(fn_atom(name, deps, didx + (coord_index,)))


# ---------------------------------------------------------------------------
# Polynomial gcd (primitive PRS; exponential-free polynomials only)
#
# Multivariate PRS sequences can blow up, so all gcd work draws from an
# operation budget; when it runs out the caller simply keeps the fraction
# unreduced, which is always sound.


class GcdBudgetExceeded(Exception):
    pass


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left: int):
        self.left = left

    def spend(self, n: int):
        self.left -= n
        if self.left < 0:
            raise GcdBudgetExceeded


def _has_exp(p: Poly) -> bool:
    return any(m[1] for m in p.terms)


def _fold_exp_pair(num: Poly, den: Poly):
    """Rewrite exponential parts as integer powers of one synthetic atom.

    Works when every exponent form is an integer multiple of a single
    primitive form (true whenever the exponentials all arise as powers of one
    metric profile); returns None when the lattice has more generators.
    """
    forms = set()
    for p in (num, den):
        for _, form in p.terms:
            if form:
                forms.add(form)
    if not forms:
        return None
    base = min(forms, key=lambda f: (len(f), f))
    base_dict = dict(base)
    keys = tuple(base_dict)
    if not keys:
        return None
    multiples = {}
    for form in forms:
        d = dict(form)
        if set(d) != set(keys):
            return None
        ratio = None
        for k in keys:
            r = d[k] / base_dict[k]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        multiples[form] = ratio
    denom = 1
    for q in multiples.values():
        denom = denom * q.denominator // gcd(denom, q.denominator)
    primitive = tuple((v, q / denom) for v, q in base)
    ks = {form: int(q * denom) for form, q in multiples.items()}
    shift = min(0, min(ks.values()))
    atom = ("e", primitive)

    def fold(p: Poly) -> Poly:
        out = {}
        for (vars_, form), c in p.terms.items():
            k = ks.get(form, 0) - shift
            nv = _merge_vars(vars_, ((atom, k),)) if k else vars_
            out[(nv, ())] = c
        return Poly(out)

    def unfold(p: Poly) -> Poly:
        out = {}
        for (vars_, _), c in p.terms.items():
            k = shift
            nv = []
            for a, e in vars_:
                if a == atom:
                    k += e
                else:
                    nv.append((a, e))
            form = tuple((v, q * k) for v, q in primitive) if k else ()
            out[(tuple(nv), form)] = c
        return Poly(out)

    return fold(num), fold(den), unfold


def _degree_in(p: Poly, atom: Atom) -> int:
    d = 0
    for vars_, _ in p.terms:
        for a, e in vars_:
            if a == atom and e > d:
                d = e
    return d


def _coeffs_in(p: Poly, atom: Atom) -> dict[int, Poly]:
    """View as univariate in ``atom`` with polynomial coefficients."""
    out: dict[int, dict] = {}
    for (vars_, form), c in p.terms.items():
        deg = 0
        rest = []
        for a, e in vars_:
            if a == atom:
                deg = e
            else:
                rest.append((a, e))
        out.setdefault(deg, {})[(tuple(rest), form)] = c
    return {d: Poly(t) for d, t in out.items()}


def _from_coeffs(coeffs: dict[int, Poly], atom: Atom) -> Poly:
    total = Poly({})
    for d, c in coeffs.items():
        if c.is_zero:
            continue
        total = total + (c.mul_monomial(mono_from_atom(atom, d)) if d else c)
    return total


def divide_exact(a: Poly, b: Poly) -> Poly:
    """a / b when the division is exact; raises ValueError otherwise."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return a
    bc = b.constant_value()
    if bc is not None:
        return a.scale(Fraction(1) / bc)
    atom = max(b.atoms())
    ca = _coeffs_in(a, atom)
    cb = _coeffs_in(b, atom)
    db = max(cb)
    lead_b = cb[db]
    quot: dict[int, Poly] = {}
    while ca:
        da = max(ca)
        if da < db:
            raise ValueError("inexact polynomial division")
        q = divide_exact(ca[da], lead_b)
        quot[da - db] = q
        for d, c in cb.items():
            nd = da - db + d
            cur = ca.get(nd, Poly({}))
            cur = cur - q * c
            if cur.is_zero:
                ca.pop(nd, None)
            else:
                ca[nd] = cur
        if da in ca:
            raise ValueError("inexact polynomial division")
    return _from_coeffs(quot, atom)


def _poly_bits(p: Poly) -> int:
    """Rough coefficient magnitude (max bit length over a few coefficients)."""
    bits = 1
    for i, c in enumerate(p.terms.values()):
        b = c.numerator.bit_length() + c.denominator.bit_length()
        if b > bits:
            bits = b
        if i >= 7:
            break
    return bits


def _pseudo_rem(a: dict[int, Poly], b: dict[int, Poly], budget: _Budget) -> dict[int, Poly]:
    """Pseudo-remainder of univariate views (coefficients are polynomials)."""
    db = max(b)
    lead_b = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lead_r = r.pop(dr)
        # coefficient swell is the real cost driver, so charge for bit size
        weight = max(1, (_poly_bits(lead_b) + _poly_bits(lead_r)) // 64)
        # r = lead_b * r - lead_r * x^(dr-db) * b
        for d in list(r):
            budget.spend(len(lead_b.terms) * len(r[d].terms) * weight)
            r[d] = lead_b * r[d]
        for d, c in b.items():
            if d == db:
                continue
            nd = dr - db + d
            cur = r.get(nd, Poly({}))
            budget.spend(len(lead_r.terms) * len(c.terms) * weight)
            cur = cur - lead_r * c
            if cur.is_zero:
                r.pop(nd, None)
            else:
                r[nd] = cur
        r = {d: c for d, c in r.items() if not c.is_zero}
    return r


def poly_gcd(a: Poly, b: Poly, budget: _Budget | None = None) -> Poly:
    """GCD up to a rational unit; inputs must be exponential-free."""
    if budget is None:
        budget = _Budget(60000)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.constant_value() is not None or b.constant_value() is not None:
        return Poly.const(1)
    # common monomial factor first
    ma = dict(a.mono_content()[0])
    mb = dict(b.mono_content()[0])
    common = {
        atom: min(e, mb[atom]) for atom, e in ma.items() if atom in mb and min(e, mb[atom])
    }
    mono = (tuple(sorted(common.items())), ())
    if ma:
        a = a.mul_monomial((tuple((x, -e) for x, e in sorted(ma.items())), ()))
    if mb:
        b = b.mul_monomial((tuple((x, -e) for x, e in sorted(mb.items())), ()))
    g = _gcd_primitive(a, b, budget)
    if common:
        g = g.mul_monomial(mono)
    return g


def _gcd_primitive(a: Poly, b: Poly, budget: _Budget) -> Poly:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.constant_value() is not None or b.constant_value() is not None:
        return Poly.const(1)
    va = a.atoms()
    vb = b.atoms()
    shared = va & vb
    if not shared:
        return Poly.const(1)
    atom = max(shared)
    # strip variables present in only one operand down to coefficient gcds
    if _degree_in(a, atom) == 0 or _degree_in(b, atom) == 0:
        return Poly.const(1)
    ca = _coeffs_in(a, atom)
    cb = _coeffs_in(b, atom)
    cont_a = _content_of(ca, budget)
    cont_b = _content_of(cb, budget)
    prim_a = {d: divide_exact(c, cont_a) for d, c in ca.items()}
    prim_b = {d: divide_exact(c, cont_b) for d, c in cb.items()}
    if max(prim_a) < max(prim_b):
        prim_a, prim_b = prim_b, prim_a
    while True:
        if not prim_b:
            g_main = prim_a
            break
        r = _pseudo_rem(prim_a, prim_b, budget)
        if not r:
            g_main = prim_b
            break
        cont_r = _content_of(r, budget)
        prim_a = prim_b
        prim_b = {d: divide_exact(c, cont_r) for d, c in r.items()}
    if max(g_main) == 0:
        g_prim = Poly.const(1)
    else:
        g_prim = _from_coeffs(g_main, atom)
        cont = _content_of(_coeffs_in(g_prim, atom), budget)
        g_prim = divide_exact(g_prim, cont)
    cont_g = _gcd_primitive(cont_a, cont_b, budget)
    if cont_g.constant_value() is not None:
        return g_prim
    return g_prim * cont_g


def _content_of(coeffs: dict[int, Poly], budget: _Budget) -> Poly:
    it = iter(sorted(coeffs))
    g = coeffs[next(it)]
    for d in it:
        if g.constant_value() is not None:
            break
        g = _gcd_primitive(g, coeffs[d], budget)
    return g


# ---------------------------------------------------------------------------
# Exact point values


class ExpVal:
    """Exact value of a polynomial at a rational point: sum of c * e^q.

    Distinct rational exponents give linearly independent exponentials, so
    the zero test is exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Fraction, Fraction]):
        self.terms = terms

    @staticmethod
    def const(c) -> "ExpVal":
        c = Fraction(c)
        return ExpVal({Fraction(0): c} if c else {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpVal) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "ExpVal") -> "ExpVal":
        d = dict(self.terms)
        for q, c in other.terms.items():
            n = d.get(q, Fraction(0)) + c
            if n:
                d[q] = n
            else:
                del d[q]
        return ExpVal(d)

    def __neg__(self) -> "ExpVal":
        return ExpVal({q: -c for q, c in self.terms.items()})

    def __sub__(self, other: "ExpVal") -> "ExpVal":
        return self + (-other)

    def __mul__(self, other: "ExpVal") -> "ExpVal":
        out: dict[Fraction, Fraction] = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = q1 + q2
                n = out.get(q, Fraction(0)) + c1 * c2
                if n:
                    out[q] = n
                else:
                    del out[q]
        return ExpVal(out)

    def as_fraction(self) -> Fraction | None:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and Fraction(0) in self.terms:
            return self.terms[Fraction(0)]
        return None

    def invert(self) -> "ExpVal":
        if len(self.terms) != 1:
            raise ZeroDivisionError("cannot invert a mixed exponential value exactly")
        (q, c), = self.terms.items()
        return ExpVal({-q: Fraction(1) / c})

    def sign(self) -> int:
        """Exact sign when decidable cheaply, else a float estimate."""
        if not self.terms:
            return 0
        signs = {1 if c > 0 else -1 for c in self.terms.values()}
        if len(signs) == 1:
            return signs.pop()
        v = self.to_float()
        scale = sum(abs(float(c)) * 2.718281828459045 ** float(q) for q, c in self.terms.items())
        if abs(v) < 1e-9 * max(scale, 1.0):
            raise ResampleNeeded("sign of point value numerically ambiguous")
        return 1 if v > 0 else -1

    def to_float(self) -> float:
        from math import exp

        return float(sum(float(c) * exp(float(q)) for q, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "ExpVal(0)"
        return "ExpVal(" + " + ".join(
            f"{c}*e^{q}" if q else str(c) for q, c in sorted(self.terms.items())
        ) + ")"


class ResampleNeeded(Exception):
    """A sample point hit a zero denominator or degenerate configuration."""


# ---------------------------------------------------------------------------
# Normal forms


class NormalForm:
    """Canonical fraction of polynomials over the atom alphabet.

    Canonical scaling: the denominator's leading monomial carries no
    exponential part, numerator and denominator have integer coefficients
    whose contents are coprime, common monomial factors are cancelled and the
    denominator's leading coefficient is positive.  Zero is (0, 1).

    Equality is field equality, implemented by cross-multiplication, so it is
    exact even though fractions are not reduced by full polynomial gcds.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, _canonical: bool = False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if num.is_zero:
            self.num = Poly.zero()
            self.den = Poly.const(1)
            return
        # cancel the common monomial factor (includes exponential units)
        mg_n = num.mono_content()
        mg_d = den.mono_content()
        common = dict(mg_n[0])
        for atom in list(common):
            e = dict(mg_d[0]).get(atom, 0)
            common[atom] = min(common[atom], e)
            if not common[atom]:
                del common[atom]
        shift: Monomial = (tuple((a, -e) for a, e in sorted(common.items())), ())
        # strip the exponential unit carried by the denominator's lead term
        lead_form = den.leading_monomial()[1]
        if lead_form:
            shift = (shift[0], _neg_linform(lead_form))
        if shift != MONO_ONE:
            num = num.mul_monomial(shift)
            den = den.mul_monomial(shift)
        # cancel the full polynomial gcd when affordable; exponentials fold
        # into a synthetic atom when they form a one-generator lattice
        if len(den.terms) > 1:
            if _has_exp(num) or _has_exp(den):
                folded = _fold_exp_pair(num, den)
            else:
                folded = (num, den, None)
            if folded is not None:
                wnum, wden, unfold = folded
                changed = False
                try:
                    wnum = divide_exact(wnum, wden)
                    wden = Poly.const(1)
                    changed = True
                except ValueError:
                    if len(wnum.terms) * len(wden.terms) <= 4000:
                        try:
                            g = poly_gcd(wnum, wden)
                        except GcdBudgetExceeded:
                            g = Poly.const(1)
                        if g.constant_value() is None:
                            wnum = divide_exact(wnum, g)
                            wden = divide_exact(wden, g)
                            changed = True
                if changed:
                    if unfold is not None:
                        num, den = unfold(wnum), unfold(wden)
                    else:
                        num, den = wnum, wden
        # rational scaling: integer, coprime contents, positive lead in den
        c = num.content() * Fraction(1)
        cd = den.content()
        g_num = gcd(c.numerator * cd.denominator, cd.numerator * c.denominator)
        g_den = c.denominator * cd.denominator
        scale = Fraction(g_den, g_num) if g_num else Fraction(1)
        if den.terms[den.leading_monomial()] < 0:
            scale = -scale
        if scale != 1:
            num = num.scale(scale)
            den = den.scale(scale)
        # collapse proportional numerator/denominator to a constant
        if len(num.terms) == len(den.terms) and den.constant_value() is None:
            lead = den.leading_monomial()
            cn = num.terms.get(lead)
            if cn is not None:
                q = cn / den.terms[lead]
                if q and num == den.scale(q):
                    num = Poly.const(q)
                    den = Poly.const(1)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "NormalForm":
        return NormalForm(Poly.zero(), Poly.const(1), _canonical=True)

    @staticmethod
    def one() -> "NormalForm":
        return NormalForm.const(1)

    @staticmethod
    def const(c) -> "NormalForm":
        return NormalForm(Poly.const(c), Poly.const(1))

    @staticmethod
    def from_poly(p: Poly) -> "NormalForm":
        return NormalForm(p, Poly.const(1))

    @staticmethod
    def atom(a: Atom) -> "NormalForm":
        return NormalForm.from_poly(Poly.atom(a))

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        if self.num.is_zero:
            return other.num.is_zero
        return (self.num * other.den) == (other.num * self.den)

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def constant_value(self) -> Fraction | None:
        cn = self.num.constant_value()
        cd = self.den.constant_value()
        if cn is None or cd is None:
            return None
        return cn / cd

    def atoms(self) -> set[Atom]:
        return self.num.atoms() | self.den.atoms()

    # -- field operations ----------------------------------------------------

    def __add__(self, other: "NormalForm") -> "NormalForm":
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        if self.den == other.den:
            return NormalForm(self.num + other.num, self.den)
        return NormalForm(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "NormalForm":
        return NormalForm(-self.num, self.den, _canonical=True)

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return self + (-other)

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        if self.num.is_zero or other.num.is_zero:
            return NormalForm.zero()
        return NormalForm(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "NormalForm") -> "NormalForm":
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.num.is_zero:
            return NormalForm.zero()
        return NormalForm(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "NormalForm":
        if n == 0:
            return NormalForm.one()
        if n < 0:
            return NormalForm.one() / self ** (-n)
        return NormalForm(self.num ** n, self.den ** n)

    def scale(self, c) -> "NormalForm":
        return self * NormalForm.const(c)

    # -- calculus, substitution, evaluation ----------------------------------

    def diff(self, coord_index: int) -> "NormalForm":
        dn = self.num.diff(coord_index)
        dd = self.den.diff(coord_index)
        if dd.is_zero:
            return NormalForm(dn, self.den)
        return NormalForm(dn * self.den - self.num * dd, self.den * self.den)

    def subst(self, mapping: Mapping[Atom, "NormalForm"]) -> "NormalForm":
        if not mapping:
            return self
        return self.num.subst(mapping) / self.den.subst(mapping)

    def eval_exact(self, point: Mapping[Atom, Fraction]) -> ExpVal:
        dv = self.den.eval_exact(point)
        if dv.is_zero:
            raise ResampleNeeded("zero denominator at sample point")
        nv = self.num.eval_exact(point)
        if nv.is_zero:
            return ExpVal({})
        return nv * dv.invert()

    def partial_eval(self, point: Mapping[Atom, Fraction]) -> "NormalForm":
        den = self.den.partial_eval(point)
        if den.is_zero:
            raise ResampleNeeded("zero denominator at sample point")
        return NormalForm(self.num.partial_eval(point), den)

    def eval_pair(self, point: Mapping[Atom, Fraction]) -> tuple[ExpVal, ExpVal]:
        """Numerator/denominator values; avoids inverting mixed exponentials."""
        dv = self.den.eval_exact(point)
        if dv.is_zero:
            raise ResampleNeeded("zero denominator at sample point")
        return self.num.eval_exact(point), dv

    def is_zero_at(self, point: Mapping[Atom, Fraction]) -> bool:
        return self.eval_pair(point)[0].is_zero

    def eval_numeric(self, point: Mapping[Atom, object], exp_fn) -> object:
        dv = self.den.eval_numeric(point, exp_fn)
        if dv == 0:
            raise ResampleNeeded("zero denominator at sample point")
        return self.num.eval_numeric(point, exp_fn) / dv

    def __repr__(self) -> str:
        if self.den.constant_value() == 1:
            return f"NF({self.num!r})"
        return f"NF({self.num!r} / {self.den!r})"


NF_ZERO = NormalForm.zero()
NF_ONE = NormalForm.one()
