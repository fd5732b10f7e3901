# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; contract documented in detsing._kernel_py.

Monomials are arbitrary-precision Python ints (packed exponent fields), so
they stay PyObject; the win over the pure-Python twin is loop/dispatch
overhead and C integer coefficient arithmetic on the GF(p) path.
"""

from gmpy2 import gcd as _gcd

IS_COMPILED = True


def merge_shifted(list am, list ac, object ashift, object ascale, list bm,
                  list bc, object bshift, object bscale, long split, long long p):
    cdef Py_ssize_t i = 0, j = 0, la = len(am), lb = len(bm)
    cdef list rm = [], rc = []
    cdef object ma, mb, ha, hb, cc
    cdef long long ci, cj, asc, bsc
    if p:
        asc = ascale
        bsc = bscale
        while i < la and j < lb:
            ma = am[i] + ashift
            mb = bm[j] + bshift
            if ma == mb:
                ci = ac[i]
                cj = bc[j]
                ci = (asc * ci - bsc * cj) % p
                if ci < 0:
                    ci += p
                if ci:
                    rm.append(ma)
                    rc.append(ci)
                i += 1
                j += 1
            else:
                ha = ma >> split
                hb = mb >> split
                if ha > hb or (ha == hb and ma < mb):
                    ci = ac[i]
                    ci = (asc * ci) % p
                    if ci < 0:
                        ci += p
                    rm.append(ma)
                    rc.append(ci)
                    i += 1
                else:
                    cj = bc[j]
                    cj = (-bsc * cj) % p
                    if cj < 0:
                        cj += p
                    rm.append(mb)
                    rc.append(cj)
                    j += 1
        while i < la:
            ci = ac[i]
            ci = (asc * ci) % p
            if ci < 0:
                ci += p
            rm.append(am[i] + ashift)
            rc.append(ci)
            i += 1
        while j < lb:
            cj = bc[j]
            cj = (-bsc * cj) % p
            if cj < 0:
                cj += p
            rm.append(bm[j] + bshift)
            rc.append(cj)
            j += 1
    else:
        while i < la and j < lb:
            ma = am[i] + ashift
            mb = bm[j] + bshift
            if ma == mb:
                cc = ascale * ac[i] - bscale * bc[j]
                if cc != 0:
                    rm.append(ma)
                    rc.append(cc)
                i += 1
                j += 1
            else:
                ha = ma >> split
                hb = mb >> split
                if ha > hb or (ha == hb and ma < mb):
                    rm.append(ma)
                    rc.append(ascale * ac[i])
                    i += 1
                else:
                    rm.append(mb)
                    rc.append(-bscale * bc[j])
                    j += 1
        while i < la:
            rm.append(am[i] + ashift)
            rc.append(ascale * ac[i])
            i += 1
        while j < lb:
            rm.append(bm[j] + bshift)
            rc.append(-bscale * bc[j])
            j += 1
    return rm, rc


cdef void _strip_content(list coeffs):
    cdef object g = coeffs[0]
    cdef Py_ssize_t k, n = len(coeffs)
    if g < 0:
        g = -g
    for k in range(1, n):
        if g == 1:
            return
        g = _gcd(g, coeffs[k])
    if g > 1:
        for k in range(n):
            coeffs[k] = coeffs[k] // g


def normal_form(list monos, list coeffs, list leads, list bmonos, list bcoeffs,
                long split, object hmask, long long p, bint tail, long max_steps):
    cdef list cur_m = list(monos), cur_c = list(coeffs)
    cdef list rm, rc, bm, bc
    cdef Py_ssize_t nb = len(leads), k, hit, i = 0
    cdef long steps = 0
    cdef object m0, m0h, shift, a0, b0, d, alpha, beta
    while i < len(cur_m):
        m0 = cur_m[i]
        m0h = m0 + hmask
        hit = -1
        for k in range(nb):
            if (m0h - <object> leads[k]) & hmask == hmask:
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
        shift = m0 - <object> leads[hit]
        bm = <list> bmonos[hit]
        bc = <list> bcoeffs[hit]
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
