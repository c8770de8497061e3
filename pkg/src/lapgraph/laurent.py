"""Exact Laurent polynomials in one or two variables.

A polynomial is a sparse map from exponent vectors (tuples of length
``nvars``) to nonzero coefficients.  Coefficients are exact: Python ints,
Fractions, or ints reduced into a prime field.  The arithmetic operators
(+, -, *, **) use plain exact arithmetic and suit integer and rational
coefficients; the domain-aware operations (``normalize``, ``laurent_gcd``,
``divexact``, ``divides``) take an explicit coefficient domain from
:mod:`lapgraph.fields` and keep prime-field coefficients reduced.

Polynomials are immutable by convention: no public method mutates ``coeffs``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from .fields import Domain, IntegerRing, PrimeField, RationalField

Exponent = tuple[int, ...]

VAR_NAMES = ("x", "y")


class LaurentPoly:
    """A Laurent polynomial in ``nvars`` variables (1 or 2)."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict[Exponent, object] | None = None):
        if nvars not in (1, 2):
            raise ValueError("nvars must be 1 or 2")
        self.nvars = nvars
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong arity for {nvars} variables")
                if c != 0:
                    self.coeffs[tuple(e)] = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, c, exps: Exponent) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "LaurentPoly":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def min_exp(self, var: int) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(e[var] for e in self.coeffs)

    def max_exp(self, var: int) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(e[var] for e in self.coeffs)

    def degree_span(self) -> tuple[int, ...]:
        """Per-variable spread: max exponent minus min exponent of the support."""
        if not self.coeffs:
            raise ValueError("degree span of the zero polynomial is undefined")
        return tuple(self.max_exp(v) - self.min_exp(v) for v in range(self.nvars))

    # -- ring operations (plain exact arithmetic) ----------------------------

    def _check_compat(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nvars)
        self._check_compat(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.coeffs.items()})
        self._check_compat(other)
        out: dict[Exponent, object] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, offsets: Exponent) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, offsets)): c for e, c in self.coeffs.items()},
        )

    def reciprocal(self) -> "LaurentPoly":
        """Substitute every variable by its inverse."""
        return LaurentPoly(self.nvars, {tuple(-a for a in e): c for e, c in self.coeffs.items()})

    def evaluate(self, *points):
        """Evaluate at the given points (one per variable, nonzero)."""
        if len(points) != self.nvars:
            raise ValueError("wrong number of evaluation points")
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for v, a in zip(points, e):
                if a:
                    if a < 0 and isinstance(v, int):
                        v = Fraction(v)  # keep integer evaluation exact
                    term = term * v**a
            total = total + term
        return total

    def substitute_power(self, s: int) -> "LaurentPoly":
        """For a two-variable polynomial, substitute y = x^s (one variable out)."""
        if self.nvars != 2:
            raise ValueError("substitute_power needs a two-variable polynomial")
        out: dict[Exponent, object] = {}
        for (a, b), c in self.coeffs.items():
            e = (a + s * b,)
            v = out.get(e, 0) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return LaurentPoly(1, out)

    def map_coefficients(self, fn) -> "LaurentPoly":
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if v != 0:
                out[e] = v
        return LaurentPoly(self.nvars, out)

    def reduce_to(self, dom: Domain) -> "LaurentPoly":
        """Map every coefficient into the given domain (reduces mod p for GF(p))."""
        return self.map_coefficients(dom.of)

    def coefficient_list(self) -> list:
        """Dense coefficient list of a one-variable polynomial, lowest first.

        The list starts at the minimal exponent, so it represents the ordinary
        polynomial obtained by clearing the monomial content; index 0 is
        nonzero, as is the last entry.
        """
        if self.nvars != 1:
            raise ValueError("coefficient_list needs a one-variable polynomial")
        if not self.coeffs:
            return []
        lo = self.min_exp(0)
        hi = self.max_exp(0)
        out = [0] * (hi - lo + 1)
        for (a,), c in self.coeffs.items():
            out[a - lo] = c
        return out

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# -- normalization -----------------------------------------------------------


def normalize(f: LaurentPoly, dom: Domain) -> LaurentPoly:
    """Canonical representative of f's unit class in the Laurent ring.

    Shifts so each variable's minimal exponent is 0, then fixes the scale:
    over the integers the sign is chosen so the coefficient of the
    lexicographically least exponent is positive (content preserved); over the
    rationals denominators are cleared and content divided out, giving a
    primitive integer polynomial with that coefficient positive; over GF(p)
    that coefficient is scaled to 1.
    """
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    offs = tuple(-f.min_exp(v) for v in range(f.nvars))
    g = f.shift(offs)
    least = min(g.coeffs)
    c0 = g.coeffs[least]
    if isinstance(dom, PrimeField):
        inv = dom.inv(dom.of(c0))
        return g.map_coefficients(lambda c: dom.mul(dom.of(c), inv))
    if isinstance(dom, RationalField):
        fracs = {e: Fraction(c) for e, c in g.coeffs.items()}
        denom_lcm = int_lcm(*(c.denominator for c in fracs.values()))
        ints = {e: c.numerator * (denom_lcm // c.denominator) for e, c in fracs.items()}
        content = 0
        for c in ints.values():
            content = int_gcd(content, c)
        if ints[least] < 0:
            content = -content
        return LaurentPoly(g.nvars, {e: c // content for e, c in ints.items()})
    # integers: preserve content, fix sign only
    if c0 < 0:
        g = -g
    return g


# -- domain-aware internal arithmetic -----------------------------------------


def _dmul(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    out: dict[Exponent, object] = {}
    for e1, c1 in f.coeffs.items():
        for e2, c2 in g.coeffs.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = dom.add(out.get(e, dom.zero), dom.mul(c1, c2))
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
    return LaurentPoly(f.nvars, out)

def _dsub(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    out = dict(f.coeffs)
    for e, c in g.coeffs.items():
        s = dom.sub(out.get(e, dom.zero), c)
        if dom.is_zero(s):
            out.pop(e, None)
        else:
            out[e] = s
    return LaurentPoly(f.nvars, out)


def _scale(f: LaurentPoly, c, dom: Domain) -> LaurentPoly:
    if dom.is_zero(c):
        return LaurentPoly.zero(f.nvars)
    return f.map_coefficients(lambda a: dom.mul(a, c))


# -- exact division -----------------------------------------------------------


def _x_slices(f: LaurentPoly) -> dict[int, LaurentPoly]:
    """Decompose a 2-variable polynomial as sum of x^a * (poly in y)."""
    slices: dict[int, dict[Exponent, object]] = {}
    for (a, b), c in f.coeffs.items():
        slices.setdefault(a, {})[(b,)] = c
    return {a: LaurentPoly(1, d) for a, d in sorted(slices.items())}

def _from_x_slices(slices: dict[int, LaurentPoly]) -> LaurentPoly:
    out: dict[Exponent, object] = {}
    for a, p in slices.items():
        for (b,), c in p.coeffs.items():
            out[(a, b)] = c
    return LaurentPoly(2, out)


def try_divexact(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly | None:
    """Exact quotient f/g in the Laurent ring, or None if g does not divide f."""
    f = f.reduce_to(dom)
    g = g.reduce_to(dom)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero(f.nvars)
    f._check_compat(g)
    # Shift both to ordinary polynomials; track the net monomial.
    foffs = tuple(f.min_exp(v) for v in range(f.nvars))
    goffs = tuple(g.min_exp(v) for v in range(g.nvars))
    fo = f.shift(tuple(-a for a in foffs))
    go = g.shift(tuple(-a for a in goffs))
    q = _divexact_ordinary(fo, go, dom)
    if q is None:
        return None
    return q.shift(tuple(a - b for a, b in zip(foffs, goffs)))


def divexact(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    q = try_divexact(f, g, dom)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def divides(g: LaurentPoly, f: LaurentPoly, dom: Domain) -> bool:
    """Whether g divides f in the Laurent ring over the domain (units ignored)."""
    if f.is_zero():
        return True
    if g.is_zero():
        return False
    return try_divexact(f, g, dom) is not None


def _divexact_ordinary(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly | None:
    if f.nvars == 1:
        return _divexact_1(f, g, dom)
    fs = _x_slices(f)
    gs = _x_slices(g)
    gdeg = max(gs)
    glc = gs[gdeg]
    quot: dict[int, LaurentPoly] = {}
    rem = fs
    while rem:
        rdeg = max(rem)
        if rdeg < gdeg:
            return None
        qc = _divexact_1(rem[rdeg], glc, dom)
        if qc is None:
            return None
        quot[rdeg - gdeg] = qc
        new_rem: dict[int, LaurentPoly] = dict(rem)
        for a, gc in gs.items():
            t = _dmul(gc, qc, dom)
            cur = new_rem.get(a + rdeg - gdeg, LaurentPoly.zero(1))
            diff = _dsub(cur, t, dom)
            if diff.is_zero():
                new_rem.pop(a + rdeg - gdeg, None)
            else:
                new_rem[a + rdeg - gdeg] = diff
        rem = new_rem
    return _from_x_slices(quot)


def _divexact_1(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly | None:
    """Exact division of one-variable polynomials over the domain (Laurent ok).

    Standard long division from the top; if f = g*q exactly then every leading
    coefficient division is exact, so any failed step means g does not divide f.
    """
    if f.is_zero():
        return LaurentPoly.zero(1)
    if g.is_zero():
        return None
    gtop = g.max_exp(0)
    gspan = gtop - g.min_exp(0)
    glc = g.coeffs[(gtop,)]
    rem = dict(f.coeffs)
    quot: dict[Exponent, object] = {}
    while rem:
        rdeg = max(e[0] for e in rem)
        rlo = min(e[0] for e in rem)
        if rdeg - rlo < gspan:
            return None
        lc = rem[(rdeg,)]
        if isinstance(dom, IntegerRing):
            qc, r = divmod(lc, glc)
            if r:
                return None
        else:
            qc = dom.div(lc, glc)
        shift = rdeg - gtop
        quot[(shift,)] = qc
        for (b,), c in g.coeffs.items():
            e = (b + shift,)
            s = dom.sub(rem.get(e, dom.zero), dom.mul(c, qc))
            if dom.is_zero(s):
                rem.pop(e, None)
            else:
                rem[e] = s
    return LaurentPoly(1, quot)


# -- greatest common divisors --------------------------------------------------


def _content_int(f: LaurentPoly) -> int:
    c = 0
    for v in f.coeffs.values():
        c = int_gcd(c, v if isinstance(v, int) else int(v))
    return c


def _gcd1(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    """gcd of one-variable polynomials over the domain, up to units."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    f = f.shift((-f.min_exp(0),))
    g = g.shift((-g.min_exp(0),))
    if isinstance(dom, IntegerRing):
        cf, cg = _content_int(f), _content_int(g)
        c = int_gcd(cf, cg)
        pf = f.map_coefficients(lambda a: a // cf)
        pg = g.map_coefficients(lambda a: a // cg)
        from .fields import QQ

        h = _euclid1(pf.map_coefficients(Fraction), pg.map_coefficients(Fraction), QQ)
        h = normalize(h, QQ)  # primitive integer coefficients
        return h * c
    h = _euclid1(f, g, dom)
    return h


def _euclid1(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    a, b = f, g
    while not b.is_zero():
        a, b = b, _rem1(a, b, dom)
    return a

def _rem1(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    gdeg = g.max_exp(0)
    glc = g.coeffs[(gdeg,)]
    rem = LaurentPoly(1, dict(f.coeffs))
    while not rem.is_zero() and rem.max_exp(0) >= gdeg:
        rdeg = rem.max_exp(0)
        qc = dom.div(rem.coeffs[(rdeg,)], glc)
        t = _scale(g.shift((rdeg - gdeg,)), qc, dom)
        rem = _dsub(rem, t, dom)
    return rem


def _content_x(f: LaurentPoly, dom: Domain) -> LaurentPoly:
    """gcd (a 1-variable poly in y) of the x-slices of a 2-variable poly."""
    c = LaurentPoly.zero(1)
    for p in _x_slices(f).values():
        c = _gcd1(c, p, dom)
        if dom.is_field and not c.is_zero() and c.max_exp(0) == c.min_exp(0):
            break  # unit content over a field
    return c


def _primitive_x(f: LaurentPoly, dom: Domain) -> tuple[LaurentPoly, LaurentPoly]:
    """Split a 2-variable poly into (content in y, primitive part)."""
    cont = _content_x(f, dom)
    slices = _x_slices(f)
    prim = {a: divexact(p, cont, dom) for a, p in slices.items()}
    return cont, _from_x_slices(prim)


def _pseudo_rem_x(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    """Pseudo-remainder of 2-variable polys viewed in (dom[y])[x]."""
    gs = _x_slices(g)
    gdeg = max(gs)
    glc = gs[gdeg]
    rem = f
    while not rem.is_zero():
        rs = _x_slices(rem)
        rdeg = max(rs)
        if rdeg < gdeg:
            break
        rlc = rs[rdeg]
        # rem <- glc*rem - rlc*x^(rdeg-gdeg)*g
        glc2 = _from_x_slices({0: glc})
        rlc2 = _from_x_slices({rdeg - gdeg: rlc})
        rem = _dsub(_dmul(glc2, rem, dom), _dmul(rlc2, g, dom), dom)
    return rem


def laurent_gcd(f: LaurentPoly, g: LaurentPoly, dom: Domain) -> LaurentPoly:
    """gcd in the Laurent ring over the domain, returned in normalized form.

    One variable: Euclidean over fields, content/primitive-part over the
    integers.  Two variables: recursive content computation in (dom[y])[x]
    with a primitive pseudo-remainder sequence.
    """
    if f.is_zero() and g.is_zero():
        return LaurentPoly.zero(f.nvars)
    f = f.reduce_to(dom)
    g = g.reduce_to(dom)
    if f.is_zero():
        return normalize(g, dom)
    if g.is_zero():
        return normalize(f, dom)
    if f.nvars == 1:
        return normalize(_gcd1(f, g, dom), dom)
    # two variables: shift to ordinary, strip content
    f = f.shift(tuple(-f.min_exp(v) for v in range(2)))
    g = g.shift(tuple(-g.min_exp(v) for v in range(2)))
    cf, pf = _primitive_x(f, dom)
    cg, pg = _primitive_x(g, dom)
    c = _gcd1(cf, cg, dom)
    a, b = pf, pg
    while not b.is_zero():
        r = _pseudo_rem_x(a, b, dom)
        if r.is_zero():
            a = b
            b = r
        else:
            _, rp = _primitive_x(r, dom)
            a, b = b, rp
    _, a = _primitive_x(a, dom)
    result = _dmul(a, _from_x_slices({0: c}), dom)
    return normalize(result, dom)


def gcd_many(polys, dom: Domain) -> LaurentPoly:
    """gcd of an iterable of Laurent polynomials (zero if all are zero)."""
    acc: LaurentPoly | None = None
    for p in polys:
        if acc is None:
            acc = p
        else:
            acc = laurent_gcd(acc, p, dom)
    if acc is None:
        raise ValueError("gcd of an empty collection")
    if acc.is_zero():
        return acc
    return normalize(acc, dom)


# -- text form ----------------------------------------------------------------


def _term_sort_key(e: Exponent):
    return (sum(e), e)


def format_poly(f: LaurentPoly) -> str:
    """Render in the canonical text syntax, terms sorted by (total degree, lex)."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for e in sorted(f.coeffs, key=_term_sort_key):
        c = f.coeffs[e]
        neg = c < 0
        mag = -c if neg else c
        factors = []
        if all(a == 0 for a in e):
            factors.append(str(mag))
        else:
            if mag != 1:
                factors.append(str(mag))
            for name, a in zip(VAR_NAMES, e):
                if a == 1:
                    factors.append(name)
                elif a != 0:
                    factors.append(f"{name}^{a}")
        term = "*".join(factors)
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, nvars: int | None = None) -> LaurentPoly:
    """Parse the polynomial text syntax: terms like ``c``, ``c*x^a``, ``x^-1*y``.

    The ``*`` between coefficient and variables is optional; exponents may be
    negative.  The variable count is inferred (y present => 2) unless given.
    """
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial text")
    if nvars is None:
        nvars = 2 if "y" in s else 1
    # Split into signed terms at the top level.  A +/- directly after '^'
    # belongs to an exponent (as in x^-1), not to a new term.
    terms: list[tuple[int, str]] = []
    sign = 1
    buf = ""
    prev = ""
    for ch in s:
        if ch in "+-" and prev != "^":
            if buf.strip():
                terms.append((sign, buf.strip()))
                buf = ""
                sign = 1 if ch == "+" else -1
            else:
                sign *= 1 if ch == "+" else -1
        else:
            buf += ch
        if not ch.isspace():
            prev = ch
    if buf.strip():
        terms.append((sign, buf.strip()))
    if not terms:
        raise PolyParseError(f"no terms in {text!r}")

    coeffs: dict[Exponent, object] = {}
    for sgn, term in terms:
        c, exps = _parse_term(term, nvars)
        e = tuple(exps)
        v = coeffs.get(e, 0) + sgn * c
        if v == 0:
            coeffs.pop(e, None)
        else:
            coeffs[e] = v
    return LaurentPoly(nvars, coeffs)


def _parse_term(term: str, nvars: int):
    tokens = [t.strip() for t in term.replace("*", " ").split()]
    coeff = 1
    exps = [0] * nvars
    seen_coeff = False
    for tok in tokens:
        if not tok:
            continue
        pieces = _split_varruns(tok)
        for kind, val in pieces:
            if kind == "num":
                if seen_coeff:
                    coeff *= val
                else:
                    coeff = val
                    seen_coeff = True
            else:
                name, a = val
                idx = VAR_NAMES.index(name)
                if idx >= nvars:
                    raise PolyParseError(f"variable {name!r} not allowed here")
                exps[idx] += a
    return coeff, exps


def _split_varruns(tok: str):
    """Split a token like '3x^-2y' into numbers and variable powers."""
    out = []
    i = 0
    n = len(tok)
    while i < n:
        ch = tok[i]
        if ch.isdigit():
            j = i
            while j < n and tok[j].isdigit():
                j += 1
            out.append(("num", int(tok[i:j])))
            i = j
        elif ch in VAR_NAMES:
            name = ch
            i += 1
            a = 1
            if i < n and tok[i] == "^":
                i += 1
                j = i
                if j < n and tok[j] in "+-":
                    j += 1
                while j < n and tok[j].isdigit():
                    j += 1
                if j == i:
                    raise PolyParseError(f"missing exponent in {tok!r}")
                a = int(tok[i:j])
                i = j
            out.append(("var", (name, a)))
        else:
            raise PolyParseError(f"bad character {ch!r} in term {tok!r}")
    return out
