"""Pure-Python reduction kernel (fallback for the compiled extension).

Same contract as the Cython module `detsing._kernel`:

  merge_shifted(am, ac, ashift, ascale, bm, bc, bshift, bscale, split, p)
      -> ascale * x^ashift * A  -  bscale * x^bshift * B   as (monos, coeffs)

  normal_form(monos, coeffs, leads, bmonos, bcoeffs, split, hmask, p,
              tail, max_steps)
      -> (monos, coeffs, steps)

Term lists are parallel: packed monomial ints descending in the ring order,
coefficients.  Monomial order: a > b iff (a >> split) > (b >> split), ties
broken by a < b as plain integers.

p == 0 selects exact rational mode, run fraction-free: coefficients are
gmpy2.mpz, every reduction step is  cur <- (lc_g/d)*cur - (lc_cur/d)*x^e*g
with d = gcd, and the content of the work polynomial is stripped as it grows,
so results are integer polynomials equal to the true normal form up to a
positive rational factor.  p > 0 selects GF(p); the basis must then be monic.
"""

from __future__ import annotations

from gmpy2 import gcd as _gcd

IS_COMPILED = False


def merge_shifted(am, ac, ashift, ascale, bm, bc, bshift, bscale, split, p):
    """ascale * x^ashift * A - bscale * x^bshift * B, inputs sorted descending."""
    la = len(am)
    lb = len(bm)
    rm = []
    rc = []
    i = 0
    j = 0
    while i < la and j < lb:
        ma = am[i] + ashift
        mb = bm[j] + bshift
        if ma == mb:
            cc = ascale * ac[i] - bscale * bc[j]
            if p:
                cc %= p
            if cc:
                rm.append(ma)
                rc.append(cc)
            i += 1
            j += 1
        else:
            ha = ma >> split
            hb = mb >> split
            if ha > hb or (ha == hb and ma < mb):
                cc = ascale * ac[i]
                if p:
                    cc %= p
                rm.append(ma)
                rc.append(cc)
                i += 1
            else:
                cc = -bscale * bc[j]
                if p:
                    cc %= p
                rm.append(mb)
                rc.append(cc)
                j += 1
    while i < la:
        cc = ascale * ac[i]
        if p:
            cc %= p
        rm.append(am[i] + ashift)
        rc.append(cc)
        i += 1
    while j < lb:
        cc = -bscale * bc[j]
        if p:
            cc %= p
        rm.append(bm[j] + bshift)
        rc.append(cc)
        j += 1
    return rm, rc


def _strip_content(coeffs):
    g = coeffs[0]
    if g < 0:
        g = -g
    for c in coeffs[1:]:
        if g == 1:
            return
        g = _gcd(g, c)
    if g > 1:
        for k in range(len(coeffs)):
            coeffs[k] //= g


def normal_form(monos, coeffs, leads, bmonos, bcoeffs, split, hmask, p,
                tail, max_steps):
    """Reduce (monos, coeffs) by the basis; see module docstring."""
    cur_m = list(monos)
    cur_c = list(coeffs)
    nb = len(leads)
    steps = 0
    i = 0
    while i < len(cur_m):
        m0 = cur_m[i]
        m0h = m0 + hmask
        hit = -1
        for k in range(nb):
            if (m0h - leads[k]) & hmask == hmask:
                hit = k
                break
        if hit < 0:
            i += 1
            if not tail:
                break
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("reduction step budget exhausted")
        shift = m0 - leads[hit]
        bm = bmonos[hit]
        bc = bcoeffs[hit]
        if p:
            rm, rc = merge_shifted(cur_m[i + 1:], cur_c[i + 1:], 0, 1,
                                   bm[1:], bc[1:], shift, cur_c[i], split, p)
            cur_m = cur_m[:i] + rm
            cur_c = cur_c[:i] + rc
        else:
            a0 = bc[0]
            b0 = cur_c[i]
            d = _gcd(a0, b0)
            alpha = a0 // d
            beta = b0 // d
            if alpha < 0:
                alpha = -alpha
                beta = -beta
            rm, rc = merge_shifted(cur_m[i + 1:], cur_c[i + 1:], 0, alpha,
                                   bm[1:], bc[1:], shift, beta, split, 0)
            cur_m = cur_m[:i] + rm
            if alpha == 1:
                cur_c = cur_c[:i] + rc
            else:
                cur_c = [c * alpha for c in cur_c[:i]] + rc
            if cur_c:
                _strip_content(cur_c)
    return cur_m, cur_c, steps
