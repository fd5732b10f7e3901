"""Sparse multivariate polynomials over a Ring.

A Poly stores a tuple of (packed monomial, coefficient) pairs sorted
descending in the ring order, with no zero coefficients.  All arithmetic is
exact and values are immutable after construction.

The text format uses `^` for powers and optional `*` between factors:
`x^2 + y^3 - 2*x*y` and `2x y - 3/4 z^2` both parse.  Printing is canonical
(terms descending, explicit `*` and `^`, rational coefficients as a/b), and
parse(print(f)) == f exactly.
"""

from __future__ import annotations

from .errors import ParseError, UnknownVariable, ZeroPolynomial
from .ring import Ring


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _sorted=False):
        """terms: iterable of (mono, coeff); zeros are dropped here."""
        self.ring = ring
        if not _sorted:
            merged = {}
            for m, c in terms:
                if m in merged:
                    merged[m] += c
                else:
                    merged[m] = c
            key = ring.sort_key
            terms = tuple(sorted(((m, c) for m, c in merged.items() if c != 0),
                                 key=lambda t: key(t[0]), reverse=True))
        else:
            terms = tuple(terms)
        self.terms = terms

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), _sorted=True)

    @classmethod
    def const(cls, ring, c):
        cc = ring.field.from_int(c) if isinstance(c, int) else c
        if cc == 0:
            return cls.zero(ring)
        return cls(ring, ((0, cc),), _sorted=True)

    @classmethod
    def variable(cls, ring, name):
        i = ring.index(name)
        return cls(ring, ((ring.var_mono(i), ring.field.one),), _sorted=True)

    @classmethod
    def monomial(cls, ring, exps, coeff=1):
        c = ring.field.from_int(coeff) if isinstance(coeff, int) else coeff
        if c == 0:
            return cls.zero(ring)
        return cls(ring, ((ring.pack(tuple(exps)), c),), _sorted=True)

    # -- basic queries ----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def lead_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no lead term")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no lead term")
        return self.terms[0][1]

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.degree(m) for m, _ in self.terms)

    def constant_coeff(self):
        if self.terms and self.terms[-1][0] == 0:
            return self.terms[-1][1]
        return self.ring.field.zero

    def num_terms(self):
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.ring, other)
        self._check(other)
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return Poly(self.ring, d.items())

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, tuple((m, -c) for m, c in self.terms), _sorted=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.ring, other)
        self._check(other)
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) - c
        return Poly(self.ring, d.items())

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        ring = self.ring
        if isinstance(other, int):
            c = ring.field.from_int(other)
            if c == 0:
                return Poly.zero(ring)
            return Poly(ring, tuple((m, cc * c) for m, cc in self.terms), _sorted=True)
        if not isinstance(other, Poly):
            # field element scalar
            if other == 0:
                return Poly.zero(ring)
            return Poly(ring, tuple((m, cc * other) for m, cc in self.terms), _sorted=True)
        self._check(other)
        if not self.terms or not other.terms:
            return Poly.zero(ring)
        p = ring.field.char
        d = {}
        hmask = ring.hmask
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = ma + mb
                if m & hmask:
                    ring.mono_mul(ma, mb)  # raises ResourceLimitExceeded
                d[m] = d.get(m, 0) + ca * cb
        if p:
            d = {m: c % p for m, c in d.items()}
        return Poly(ring, d.items())

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        p = self.ring.field.char
        if p:
            return Poly(self.ring, tuple((m, c * inv % p) for m, c in self.terms), _sorted=True)
        return Poly(self.ring, tuple((m, c * inv) for m, c in self.terms), _sorted=True)

    def normalized(self):
        """Canonical scalar multiple: monic over GF(p); over the rationals,
        integer coefficients with content 1 and positive lead."""
        if not self.terms:
            return self
        if self.ring.field.char:
            return self.monic()
        from gmpy2 import gcd, lcm, mpq, mpz

        den = mpz(1)
        for _m, c in self.terms:
            q = mpq(c)
            den = lcm(den, q.denominator)
        nums = [mpq(c) * den for _m, c in self.terms]
        nums = [q.numerator for q in nums]
        g = abs(nums[0])
        for c in nums[1:]:
            if g == 1:
                break
            g = gcd(g, c)
        if nums[0] < 0:
            g = -g
        if g != 1:
            nums = [c // g for c in nums]
        return Poly(self.ring, tuple((m, c) for (m, _), c in zip(self.terms, nums)),
                    _sorted=True)

    # -- calculus / evaluation ----------------------------------------------------

    def diff(self, var):
        """Partial derivative with respect to a variable name or index."""
        ring = self.ring
        i = ring.index(var) if isinstance(var, str) else var
        vm = ring.var_mono(i)
        sh = ring._shifts[i]
        out = []
        p = ring.field.char
        for m, c in self.terms:
            e = (m >> sh) & 0xFFFF
            if e:
                cc = c * e % p if p else c * e
                if cc != 0:
                    out.append((m - vm, cc))
        return Poly(ring, out)

    def eval_origin(self):
        return self.constant_coeff()

    def substitute(self, mapping, target=None):
        """Substitute variables by polynomials of the target ring.

        mapping: {name: Poly-in-target or int}.  Unmapped variables must exist
        in the target ring and map to themselves.
        """
        ring = self.ring
        if target is None:
            target = ring
        images = []
        for nm in ring.names:
            if nm in mapping:
                img = mapping[nm]
                if isinstance(img, int):
                    img = Poly.const(target, img)
                if img.ring != target:
                    raise ValueError(f"image of {nm} lives in the wrong ring")
            else:
                img = Poly.variable(target, nm)  # raises UnknownVariable if absent
            images.append(img)
        out = Poly.zero(target)
        powcache = [{} for _ in images]

        def power(i, e):
            cache = powcache[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        for m, c in self.terms:
            exps = ring.unpack(m)
            term = Poly.const(target, 1) * c
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def to_ring(self, target):
        """Re-interpret in a ring with the same variable names available."""
        return self.substitute({}, target=target)

    # -- identity -------------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- text -------------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        field = ring.field
        parts = []
        for m, c in self.terms:
            exps = ring.unpack(m)
            factors = []
            for nm, e in zip(ring.names, exps):
                if e == 1:
                    factors.append(nm)
                elif e > 1:
                    factors.append(f"{nm}^{e}")
            cs = field.coeff_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors:
                body = cs + "*" + "*".join(factors)
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


# -- parsing --------------------------------------------------------------------------


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(f"{msg} at position {self.pos}", self.pos)

    def peek(self):
        t = self.text
        n = len(t)
        i = self.pos
        while i < n and t[i].isspace():
            i += 1
        self.pos = i
        if i >= n:
            return ("end", None)
        ch = t[i]
        if ch.isdigit():
            j = i
            while j < n and t[j].isdigit():
                j += 1
            return ("int", t[i:j])
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (t[j].isalnum() or t[j] == "_"):
                j += 1
            return ("name", t[i:j])
        if ch in "+-*^()/":
            return (ch, ch)
        self.error(f"unexpected character {ch!r}")

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind}, found {tok[0]}")
        self.pos += len(tok[1]) if tok[1] else 0
        return tok


def parse_poly(text, ring):
    """Parse `text` into a Poly of `ring`.

    Grammar: expr = term (('+'|'-') term)*; term = factor (('*'? factor) | '/' int)*;
    factor = int | name ('^' int)? | '(' expr ')' | '-' factor.
    Division is only allowed by integer literals (rational coefficients).
    """
    tz = _Tokenizer(text)

    def parse_expr():
        tok = tz.peek()
        if tok[0] == "-":
            tz.take()
            acc = -parse_term()
        else:
            if tok[0] == "+":
                tz.take()
            acc = parse_term()
        while True:
            tok = tz.peek()
            if tok[0] == "+":
                tz.take()
                acc = acc + parse_term()
            elif tok[0] == "-":
                tz.take()
                acc = acc - parse_term()
            else:
                return acc

    def parse_term():
        acc = parse_factor()
        while True:
            tok = tz.peek()
            if tok[0] == "*":
                tz.take()
                acc = acc * parse_factor()
            elif tok[0] == "/":
                tz.take()
                den = tz.take("int")[1]
                acc = acc * ring.field.from_fraction(1, int(den))
            elif tok[0] in ("int", "name", "("):
                acc = acc * parse_factor()  # implicit multiplication
            else:
                return acc

    def parse_factor():
        tok = tz.take()
        if tok[0] == "-":
            return -parse_factor()
        if tok[0] == "int":
            base = Poly.const(ring, int(tok[1]))
        elif tok[0] == "name":
            try:
                base = Poly.variable(ring, tok[1])
            except UnknownVariable:
                tz.error(f"unknown variable {tok[1]!r}")
        elif tok[0] == "(":
            base = parse_expr()
            if tz.take()[0] != ")":
                tz.error("expected ')'")
        else:
            tz.error(f"unexpected token {tok[1]!r}")
        if tz.peek()[0] == "^":
            tz.take()
            e = tz.take("int")[1]
            base = base ** int(e)
        return base

    result = parse_expr()
    if tz.peek()[0] != "end":
        tz.error("trailing input")
    return result
