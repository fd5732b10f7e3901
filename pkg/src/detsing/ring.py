"""Polynomial ring contexts: variables, coefficient field, monomial order.

Monomials are packed into single Python integers, 16 bits per field, with the
total degree stored above the plain exponent fields:

    grevlex ring:        [ deg | e_{n-1} | ... | e_1 | e_0 ]
    elimination ring:    [ e_u | deg | e_{n-2} | ... | e_0 ]   (u = last variable)

With this layout the order comparison needs only two integer comparisons:
a > b in the monomial order iff the high parts differ and a > b as integers,
or the high parts are equal and a < b as integers (graded reverse
lexicographic on the low fields).  Monomial multiplication is integer
addition, and divisibility is one masked subtraction (every field carries a
spare high bit, so per-field comparisons cannot borrow across fields).

The elimination layout puts the dummy variable's exponent on top, giving the
product order (degree in u) x (grevlex in the rest); a Groebner basis element
whose lead is u-free is entirely u-free, which is what ideal intersection
needs.

Coefficient fields: exact rationals (gmpy2.mpq) or a prime field GF(p) for
modular runs.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpq, mpz

from .errors import ResourceLimitExceeded, UnknownVariable

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1  # spare high bit per field


_ONE_Q = mpq(1)


class RationalField:
    """Exact rationals; integers stay gmpy2.mpz, fractions are gmpy2.mpq."""

    kind = "qq"
    char = 0

    def __init__(self):
        self.zero = mpz(0)
        self.one = mpz(1)

    def from_int(self, n):
        return mpz(n)

    def from_fraction(self, num, den):
        if den == 0:
            raise ZeroDivisionError("denominator 0")
        q = mpq(num, den)
        return q.numerator if q.denominator == 1 else q

    def inv(self, a):
        return _ONE_Q / a

    def div(self, a, b):
        q = mpq(a) / b
        return q.numerator if q.denominator == 1 else q

    def coeff_str(self, a):
        q = mpq(a)
        if q.denominator == 1:
            return str(q.numerator)
        return f"{q.numerator}/{q.denominator}"

    def to_fraction(self, a):
        q = mpq(a)
        return Fraction(int(q.numerator), int(q.denominator))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with elements stored as ints in [0, p)."""

    kind = "gfp"

    def __init__(self, p):
        if p < 2 or not gmpy2.is_prime(mpz(p)):
            raise ValueError(f"modulus {p} is not prime")
        self.p = int(p)
        self.char = self.p
        self.zero = 0
        self.one = 1

    def from_int(self, n):
        return int(n) % self.p

    def from_fraction(self, num, den):
        d = int(den) % self.p
        if d == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return (int(num) % self.p) * pow(d, self.p - 2, self.p) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return int(a) * self.inv(b) % self.p

    def coeff_str(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gfp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


class Ring:
    """An ordered polynomial ring over QQ or GF(p).

    `elim_last=True` marks the last variable as an elimination dummy; it is
    only used internally (intersections, colon ideals).
    """

    __slots__ = (
        "names", "field", "elim_last", "nvars", "_index",
        "split_shift", "deg_shift", "hmask", "allmask", "_shifts",
        "_zero_mono", "_var_monos",
    )

    def __init__(self, names, field=QQ, elim_last=False):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if not names:
            raise ValueError("ring needs at least one variable")
        self.names = names
        self.field = field
        self.elim_last = bool(elim_last)
        self.nvars = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}

        # Field layout, least significant first.
        # grevlex: e_0 .. e_{n-1}, deg               (n+1 fields)
        # elim:    e_0 .. e_{n-2}, deg, e_{n-1}      (n+1 fields)
        n = self.nvars
        if self.elim_last:
            if n < 2:
                raise ValueError("elimination ring needs >= 2 variables")
            shifts = [i * FIELD_BITS for i in range(n - 1)]
            self.deg_shift = (n - 1) * FIELD_BITS
            shifts.append(n * FIELD_BITS)  # dummy var above the degree field
            self.split_shift = self.deg_shift
        else:
            shifts = [i * FIELD_BITS for i in range(n)]
            self.deg_shift = n * FIELD_BITS
            self.split_shift = self.deg_shift
        self._shifts = tuple(shifts)
        nfields = n + 1
        h = 0
        for i in range(nfields):
            h |= 1 << (i * FIELD_BITS + FIELD_BITS - 1)
        self.hmask = h
        self.allmask = (1 << (nfields * FIELD_BITS)) - 1
        self._zero_mono = 0
        self._var_monos = tuple(self.pack(tuple(1 if j == i else 0 for j in range(n)))
                                for i in range(n))

    # -- construction helpers -------------------------------------------------

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def pack(self, exps):
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        m = 0
        deg = 0
        for e, sh in zip(exps, self._shifts):
            if e < 0 or e > MAX_EXPONENT:
                raise ResourceLimitExceeded("monomial exponent", MAX_EXPONENT)
            m |= e << sh
            deg += e
        if deg > MAX_EXPONENT:
            raise ResourceLimitExceeded("monomial total degree", MAX_EXPONENT)
        return m | (deg << self.deg_shift)

    def unpack(self, mono):
        return tuple((mono >> sh) & FIELD_MASK for sh in self._shifts)

    def degree(self, mono):
        return (mono >> self.deg_shift) & FIELD_MASK

    def var_mono(self, i):
        return self._var_monos[i]

    # -- order primitives ------------------------------------------------------

    def mono_cmp(self, a, b):
        """-1 / 0 / +1 for a <,=,> b in the ring order."""
        if a == b:
            return 0
        sh = self.split_shift
        ha = a >> sh
        hb = b >> sh
        if ha != hb:
            return 1 if ha > hb else -1
        return 1 if a < b else -1

    def mono_gt(self, a, b):
        sh = self.split_shift
        ha = a >> sh
        hb = b >> sh
        if ha != hb:
            return ha > hb
        return a < b

    def sort_key(self, mono):
        """Key increasing in the monomial order."""
        return (mono >> self.split_shift, -mono)

    def mono_mul(self, a, b):
        m = a + b
        if m & self.hmask:
            raise ResourceLimitExceeded("monomial total degree", MAX_EXPONENT)
        return m

    def mono_divides(self, a, b):
        """True iff monomial a divides b (all exponent fields <=)."""
        return (b + self.hmask - a) & self.hmask == self.hmask

    def mono_div(self, a, b):
        """a / b, assuming b | a."""
        return a - b

    def mono_lcm(self, a, b):
        ea = self.unpack(a)
        eb = self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def mono_coprime(self, a, b):
        ea = self.unpack(a)
        eb = self.unpack(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    # -- derived rings ---------------------------------------------------------

    def elimination_ring(self):
        """This ring plus one dummy variable that dominates the order."""
        base = set(self.names)
        k = 0
        while f"@u{k}" in base:
            k += 1
        return Ring(self.names + (f"@u{k}",), field=self.field, elim_last=True)

    def drop_last(self):
        """Ring on all but the last variable (inverse of elimination_ring)."""
        return Ring(self.names[:-1], field=self.field, elim_last=False)

    def with_names(self, names):
        return Ring(names, field=self.field, elim_last=False)

    def with_field(self, field):
        return Ring(self.names, field=field, elim_last=self.elim_last)

    def extended(self, extra_names):
        return Ring(self.names + tuple(extra_names), field=self.field)

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.field == other.field and self.elim_last == other.elim_last)

    def __hash__(self):
        return hash((self.names, self.field, self.elim_last))

    def __repr__(self):
        kind = "elim" if self.elim_last else "grevlex"
        return f"Ring({','.join(self.names)}; {self.field!r}; {kind})"
