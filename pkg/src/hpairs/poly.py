"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero ``Fraction`` values,
tagged with an ordered tuple of variable names.  All arithmetic is exact.
Monomials are compared in graded-lex order with the first variable greatest.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...]


class PolySyntaxError(ValueError):
    """Raised by :func:`parse`; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class NotDivisible(ArithmeticError):
    pass


def grlex_key(m: Monomial) -> tuple:
    """Sort key; larger key means greater monomial."""
    return (sum(m), m)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial over Q.

    ``terms`` must not be mutated after construction.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = _as_fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "Poly":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> "Poly":
        vars = tuple(vars)
        c = _as_fraction(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, vars: Sequence[str], i: int) -> "Poly":
        vars = tuple(vars)
        if not 0 <= i < len(vars):
            raise IndexError(f"variable index {i} out of range")
        m = [0] * len(vars)
        m[i] = 1
        return cls._raw(vars, {tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Sequence[int], c=1) -> "Poly":
        return cls(vars, {tuple(exps): c})

    # -- basic queries ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def occurring(self) -> tuple[int, ...]:
        """Indices of variables that actually occur."""
        used = [False] * self.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(i for i, u in enumerate(used) if u)

    def coeff(self, m: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def leading(self) -> tuple[Monomial, Fraction]:
        """Greatest monomial in graded-lex order and its coefficient."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({render(self)!r}, vars={list(self.vars)})"

    def __str__(self) -> str:
        return render(self)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.vars, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.vars)
        return Poly._raw(self.vars, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            return exact_div(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps: Sequence[int]) -> "Poly":
        """Multiply by the monomial with exponent vector ``exps``."""
        exps = tuple(exps)
        return Poly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(m, exps)): c for m, c in self.terms.items()},
        )

    # -- calculus and structure ---------------------------------------------

    def derivative(self, i: int) -> "Poly":
        return derivative(self, i)

    def canonical(self) -> "Poly":
        """Scale so the graded-lex leading coefficient is 1 (zero stays zero)."""
        if not self.terms:
            return self
        _, lc = self.leading()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def integer_primitive(self) -> "Poly":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, int(c * den))
        factor = Fraction(den, num)
        if self.leading()[1] < 0:
            factor = -factor
        return self.scale(factor)

    def homogeneous_component(self, k: int) -> "Poly":
        return Poly._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) == k})

    def coefficient_in(self, i: int, j: int) -> "Poly":
        """Coefficient of ``vars[i]**j`` when viewed as a polynomial in ``vars[i]``."""
        out = {}
        for m, c in self.terms.items():
            if m[i] == j:
                out[m[:i] + (0,) + m[i + 1:]] = c
        return Poly._raw(self.vars, out)

    def monomial_content(self) -> Monomial:
        """Componentwise minimum of all exponent vectors."""
        if not self.terms:
            raise ValueError("zero polynomial")
        it = iter(self.terms)
        low = list(next(it))
        for m in it:
            for i, e in enumerate(m):
                if e < low[i]:
                    low[i] = e
        return tuple(low)

    def unshift(self, exps: Sequence[int]) -> "Poly":
        exps = tuple(exps)
        out = {}
        for m, c in self.terms.items():
            q = tuple(a - b for a, b in zip(m, exps))
            if any(e < 0 for e in q):
                raise NotDivisible("monomial does not divide")
            out[q] = c
        return Poly._raw(self.vars, out)

    def rename(self, vars: Sequence[str]) -> "Poly":
        vars = tuple(vars)
        if len(vars) != self.nvars:
            raise ValueError("rename needs the same number of variables")
        return Poly._raw(vars, self.terms)

    def embed(self, vars: Sequence[str]) -> "Poly":
        """Re-express over ``vars``; every occurring variable must be present by name."""
        vars = tuple(vars)
        index = {v: i for i, v in enumerate(vars)}
        occ = self.occurring()
        for i in occ:
            if self.vars[i] not in index:
                raise ValueError(f"variable {self.vars[i]!r} missing from target ring")
        out = {}
        for m, c in self.terms.items():
            t = [0] * len(vars)
            for i in occ:
                t[index[self.vars[i]]] = m[i]
            out[tuple(t)] = c
        return Poly._raw(vars, out)

    def drop_unused(self) -> "Poly":
        occ = self.occurring()
        return Poly._raw(
            tuple(self.vars[i] for i in occ),
            {tuple(m[i] for i in occ): c for m, c in self.terms.items()},
        )

    def substitute_linear(self, vars: Sequence[str], forms: Sequence["Poly"]) -> "Poly":
        """Substitute ``self.vars[i] -> forms[i]`` where every form lives over ``vars``."""
        vars = tuple(vars)
        if len(forms) != self.nvars:
            raise ValueError("need one form per variable")
        out = Poly.zero(vars)
        powers: dict = {}
        for m, c in self.terms.items():
            t = Poly.constant(vars, c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = forms[i] ** e
                    t = t * powers[key]
            out = out + t
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total


# -- module-level operations ----------------------------------------------


def _same_ring(f: Poly, g: Poly) -> None:
    if f.vars != g.vars:
        raise ValueError(f"variable mismatch: {f.vars} vs {g.vars}")


def mul(f: Poly, g: Poly) -> Poly:
    _same_ring(f, g)
    return f * g


def derivative(f: Poly, i: int) -> Poly:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for m, c in f.terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Poly._raw(f.vars, out)


def multinomial(mu: Sequence[int]) -> int:
    if any(e < 0 for e in mu):
        raise ValueError("negative entry")
    out = math.factorial(sum(mu))
    for e in mu:
        out //= math.factorial(e)
    return out


def exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient ``f / g``; raises :class:`NotDivisible` when g does not divide f."""
    _same_ring(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_monomial():
        (gm, gc), = g.terms.items()
        return f.unshift(gm).scale(1 / gc)
    lm, lc = g.leading()
    gterms = list(g.terms.items())
    rem = dict(f.terms)
    quo = {}
    while rem:
        m = max(rem, key=grlex_key)
        q = tuple(a - b for a, b in zip(m, lm))
        if any(e < 0 for e in q):
            raise NotDivisible(f"{render(g)} does not divide {render(f)}")
        c = rem[m] / lc
        quo[q] = c
        for gm, gc in gterms:
            t = tuple(a + b for a, b in zip(gm, q))
            s = rem.get(t, 0) - c * gc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Poly._raw(f.vars, quo)


def divides(g: Poly, f: Poly) -> bool:
    try:
        exact_div(f, g)
    except NotDivisible:
        return False
    return True


def _main_var(*polys: Poly) -> int:
    v = -1
    for p in polys:
        for m in p.terms:
            for i in range(len(m) - 1, v, -1):
                if m[i]:
                    v = i
                    break
    return v


def _content(f: Poly, v: int) -> Poly:
    """gcd of the coefficients of f viewed as a polynomial in variable v."""
    deg = f.degree_in(v)
    if deg <= 0:
        return f
    coeffs = [f.coefficient_in(v, j) for j in range(deg + 1)]
    coeffs = sorted((c for c in coeffs if c), key=lambda c: len(c.terms))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd_nonzero(g, c)
    if g.is_constant():
        return Poly.constant(f.vars, 1)
    return g.integer_primitive()


def _prem(a: Poly, b: Poly, v: int) -> Poly:
    db = b.degree_in(v)
    lc = b.coefficient_in(v, db)
    r = a
    while r and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lr = r.coefficient_in(v, dr)
        shift = [0] * a.nvars
        shift[v] = dr - db
        r = r * lc - (lr * b).shift(shift)
    return r


def _gcd_nonzero(f: Poly, g: Poly) -> Poly:
    # monomial content first: variables are irreducible
    mf, mg = f.monomial_content(), g.monomial_content()
    mono = tuple(min(a, b) for a, b in zip(mf, mg))
    f, g = f.unshift(mf), g.unshift(mg)
    core = _gcd_prs(f, g)
    return core.shift(mono) if any(mono) else core


def _gcd_prs(f: Poly, g: Poly) -> Poly:
    """Recursive primitive remainder sequence over the last occurring variable."""
    one = Poly.constant(f.vars, 1)
    if f.is_constant() or g.is_constant():
        return one
    if f == g or f.integer_primitive() == g.integer_primitive():
        return f.integer_primitive()
    v = _main_var(f, g)
    cf, cg = _content(f, v), _content(g, v)
    c = _gcd_nonzero(cf, cg) if not (cf.is_constant() or cg.is_constant()) else one
    pf = exact_div(f, cf).integer_primitive()
    pg = exact_div(g, cg).integer_primitive()
    if pf.degree_in(v) <= 0 or pg.degree_in(v) <= 0:
        return c
    a, b = (pf, pg) if pf.degree_in(v) >= pg.degree_in(v) else (pg, pf)
    while True:
        r = _prem(a, b, v)
        if not r:
            break
        if r.degree_in(v) == 0:
            return c
        r = exact_div(r, _content(r, v)).integer_primitive()
        a, b = b, r
    return (c * b).integer_primitive()


def gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, canonically scaled (graded-lex leading coefficient 1)."""
    _same_ring(f, g)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    return _gcd_nonzero(f, g).canonical()


def gcd_many(polys: Iterable[Poly]) -> Poly:
    result = None
    for p in polys:
        if not p:
            continue
        result = p if result is None else _gcd_nonzero(result, p)
        if result.is_constant():
            break
    if result is None:
        raise ValueError("gcd of only zero polynomials is undefined")
    return result.canonical()


def squarefree_quotient(f: Poly) -> Poly:
    """``f`` divided by the product of its distinct irreducible factors.

    Computed as gcd(f, df/dz_1, ..., df/dz_n); valid in characteristic zero.
    """
    if f.is_zero():
        raise ValueError("squarefree_quotient of the zero polynomial")
    return gcd_many([f] + [derivative(f, i) for i in f.occurring()])


def is_squarefree(f: Poly) -> bool:
    return squarefree_quotient(f).is_constant()


# -- text format ----------------------------------------------------------


def _render_monomial(vars: Sequence[str], m: Monomial) -> str:
    parts = []
    for v, e in zip(vars, m):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def render(f: Poly) -> str:
    """Canonical text: graded-lex descending terms, reduced fractions, unit coefficients omitted."""
    if not f.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _render_monomial(f.vars, m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        mt = _TOKEN.match(text, pos)
        if mt is None:  # only trailing whitespace left
            break
        start = mt.start(mt.lastindex) if mt.lastindex else mt.end()
        if mt.group(1) is not None:
            toks.append(("int", mt.group(1), start))
        elif mt.group(2) is not None:
            toks.append(("id", mt.group(2), start))
        elif mt.group(3) is not None:
            ch = mt.group(3)
            if ch not in "+-*/^":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        else:
            break
        pos = mt.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = tuple(vars)
        self.index = {v: k for k, v in enumerate(self.vars)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def posint(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise PolySyntaxError("expected an integer", pos)
        if int(val) == 0:
            raise PolySyntaxError("expected a positive integer", pos)
        return int(val)

    def expr(self) -> Poly:
        terms: dict = {}
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            m, c = self.term()
            s = terms.get(m, 0) + sign * c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise PolySyntaxError(f"unexpected {val!r}", pos)
        return Poly._raw(self.vars, terms)

    def term(self) -> tuple[Monomial, Fraction]:
        exps = [0] * len(self.vars)
        coeff = Fraction(1)
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(val)
            den = 1
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                den = self.posint()
            coeff = Fraction(num, den)
            k2, v2, _ = self.peek()
            if not (k2 == "op" and v2 == "*"):
                return tuple(exps), coeff
            self.take()
        self.factor(exps)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                self.factor(exps)
            else:
                break
        return tuple(exps), coeff

    def factor(self, exps: list) -> None:
        kind, val, pos = self.take()
        if kind != "id":
            raise PolySyntaxError("expected a variable", pos)
        if val not in self.index:
            raise PolySyntaxError(f"unknown variable {val!r}", pos)
        e = 1
        k2, v2, _ = self.peek()
        if k2 == "op" and v2 == "^":
            self.take()
            e = self.posint()
        exps[self.index[val]] += e


def parse(text: str, vars: Sequence[str]) -> Poly:
    """Parse ``text`` in the polynomial grammar over the declared variables."""
    return _Parser(text, vars).expr()


def identifiers(text: str) -> list[str]:
    """Variable names appearing in ``text``, in natural order (z2 before z10)."""
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text))

    def natural(s: str):
        return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]

    return sorted(names, key=natural)


def ring_vars(prefix: str, n: int, start: int = 0) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(start, start + n))
