"""Ideals with cached Groebner data and the counting primitives.

Dimension comes from maximal independent variable sets modulo the lead-term
ideal; zero-dimensional solution counting (with multiplicity) is the number
of standard monomials; local multiplicity at the origin subtracts the count
of the part saturated away from the origin.  Saturation is iterated ideal
quotient until stabilization, with quotients and intersections computed
through one elimination variable.
"""

from __future__ import annotations

from itertools import combinations

from .errors import NotIsolated, NotZeroDimensional, ZeroPolynomial
from .groebner import DEFAULT_CAPS, buchberger, normal_form
from .poly import Poly


class Ideal:
    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens, gb=None):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, (int,)):
                g = Poly.const(ring, g)
            if g.ring != ring:
                raise ValueError("generator from the wrong ring")
            if not g.is_zero:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = tuple(gb) if gb is not None else None

    # -- basics -----------------------------------------------------------------

    def groebner(self, caps=None):
        if self._gb is None:
            self._gb = buchberger(self.gens, caps=caps or DEFAULT_CAPS)
        return self._gb

    @property
    def is_zero_ideal(self):
        return not self.groebner()

    @property
    def is_unit(self):
        gb = self.groebner()
        return bool(gb) and gb[0].is_constant

    def normal_form(self, f):
        return normal_form(f, list(self.groebner()), tail=True)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def equals(self, other):
        return self.groebner() == other.groebner()

    def add(self, *polys):
        """Ideal generated by self plus extra polynomials."""
        extra = []
        for f in polys:
            if isinstance(f, Ideal):
                extra.extend(f.gens)
            else:
                extra.append(f)
        return Ideal(self.ring, self.gens + tuple(extra))

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.groebner()]

    # -- dimension and counting ---------------------------------------------------

    def dimension(self):
        """Krull dimension of R/I; -1 for the unit ideal, nvars for the zero ideal."""
        gb = self.groebner()
        if not gb:
            return self.ring.nvars
        if gb[0].is_constant:
            return -1
        n = self.ring.nvars
        supports = []
        for m in self.lead_monomials():
            exps = self.ring.unpack(m)
            supports.append(sum(1 << i for i, e in enumerate(exps) if e))
        # largest S (bitmask) with no lead support contained in S
        for r in range(n, -1, -1):
            for combo in combinations(range(n), r):
                mask = sum(1 << i for i in combo)
                if all(s & ~mask for s in supports):
                    return r
        return 0

    def standard_monomials(self):
        """Monomials outside the lead-term ideal (packed), zero-dimensional only."""
        if self.dimension() > 0:
            raise NotZeroDimensional(f"ideal has dimension {self.dimension()}")
        gb = self.groebner()
        if gb and gb[0].is_constant:
            return []
        ring = self.ring
        leads = self.lead_monomials()

        def reducible(m):
            hmask = ring.hmask
            mh = m + hmask
            for l in leads:
                if (mh - l) & hmask == hmask:
                    return True
            return False

        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(ring.nvars):
                    m2 = m + ring.var_mono(i)
                    if m2 in seen or reducible(m2):
                        continue
                    seen.add(m2)
                    nxt.append(m2)
            frontier = nxt
        return sorted(seen, key=ring.sort_key)

    def quotient_count(self):
        """Vector-space dimension of R/I = number of solutions with multiplicity."""
        return len(self.standard_monomials())

    def local_count_at_origin(self):
        """Multiplicity of the origin-primary component of a zero-dimensional ideal."""
        total = self.quotient_count()
        if total == 0:
            return 0
        away = self.saturate(maximal_ideal(self.ring)).quotient_count()
        return total - away

    # -- ring changes ----------------------------------------------------------------

    def to_ring(self, target):
        return Ideal(target, [g.to_ring(target) for g in self.gens])

    def _to_elim(self, ering):
        out = []
        for g in self.gens:
            out.append(Poly(ering, tuple((_extend_mono(self.ring, ering, m), c)
                                         for m, c in g.terms)))
        return out

    # -- ideal operations ---------------------------------------------------------------

    def intersect(self, other):
        """I ∩ J via u*I + (1-u)*J and elimination of u."""
        ring = self.ring
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        ering = ring.elimination_ring()
        u = Poly.variable(ering, ering.names[-1])
        one = Poly.const(ering, 1)
        gens = [u * f for f in self._to_elim(ering)]
        gens += [(one - u) * g for g in other._to_elim(ering)]
        gb = buchberger(gens)
        kept = []
        sh = ering._shifts[-1]
        for g in gb:
            if (g.lead_monomial() >> sh) & 0xFFFF == 0:
                kept.append(Poly(ring, tuple((_restrict_mono(ering, ring, m), c)
                                             for m, c in g.terms), _sorted=True))
        # u-free subset of the reduced elimination basis is the reduced basis
        return Ideal(ring, kept, gb=kept)

    def colon_poly(self, g):
        """I : g for one polynomial."""
        if g.is_zero:
            return Ideal(self.ring, [Poly.const(self.ring, 1)])
        if g.is_constant or self.is_unit:
            return self
        inter = self.intersect(Ideal(self.ring, [g]))
        return Ideal(self.ring, [exact_div(f, g) for f in inter.gens])

    def colon(self, other):
        """I : J = ∩_j (I : g_j)."""
        gens = [g for g in other.gens if not g.is_zero]
        if not gens:
            return Ideal(self.ring, [Poly.const(self.ring, 1)])
        result = self.colon_poly(gens[0])
        for g in gens[1:]:
            result = result.intersect(self.colon_poly(g))
        return result

    def saturate(self, other):
        """I : J^∞, by iterated ideal quotient until stabilization."""
        current = self
        current.groebner()
        while True:
            nxt = current.colon(other)
            if nxt.equals(current):
                return current
            current = nxt


def maximal_ideal(ring):
    """The ideal of the origin, ⟨x_1, ..., x_n⟩."""
    return Ideal(ring, [Poly.variable(ring, nm) for nm in ring.names])


def _extend_mono(ring, ering, m):
    return ering.pack(ring.unpack(m) + (0,))


def _restrict_mono(ering, ring, m):
    exps = ering.unpack(m)
    return ring.pack(exps[:-1])


def exact_div(f, g):
    """f / g when g divides f exactly (used after intersecting with ⟨g⟩)."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    p = ring.field.char
    lg, cg = g.terms[0]
    rest = g.terms[1:]
    quot = {}
    work = dict(f.terms)
    key = ring.sort_key
    while work:
        m0 = max(work, key=key)
        c0 = work.pop(m0)
        if not ring.mono_divides(lg, m0):
            raise ValueError("exact division failed")
        qm = m0 - lg
        qc = c0 * ring.field.inv(cg)
        if p:
            qc %= p
        quot[qm] = qc
        for m, c in rest:
            mm = qm + m
            cc = work.get(mm, ring.field.zero) - qc * c
            if p:
                cc %= p
            if cc == 0:
                work.pop(mm, None)
            else:
                work[mm] = cc
    return Poly(ring, quot.items())


# -- hypersurface helpers (classical plumbing) -------------------------------------


def jacobian_ideal(f):
    ring = f.ring
    return Ideal(ring, [f.diff(i) for i in range(ring.nvars)])


def milnor_number_isolated_hypersurface(f):
    """Colength of the Jacobian ideal of f; NotIsolated if positive-dimensional."""
    if f.is_zero:
        raise ZeroPolynomial("Milnor number of the zero polynomial")
    J = jacobian_ideal(f)
    if J.dimension() > 0:
        raise NotIsolated("Jacobian ideal has positive dimension")
    return J.quotient_count()


def is_reduced_principal(f):
    """True iff f is squarefree.

    Over characteristic 0, f has a repeated factor iff the singular locus of
    V(f) has codimension 1, so one dimension computation on ⟨f, ∂f⟩ decides it
    (equivalent to gcd(f, all partials) being constant).
    """
    if f.is_zero:
        raise ZeroPolynomial("reducedness of the zero polynomial")
    ring = f.ring
    gens = [f] + [f.diff(i) for i in range(ring.nvars)]
    return Ideal(ring, gens).dimension() <= ring.nvars - 2
