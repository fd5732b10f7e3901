"""Buchberger's algorithm with Gebauer-Moeller pair pruning.

The reduction inner loop lives in a compiled Cython kernel when available
(detsing._kernel), with a pure-Python twin (detsing._kernel_py) selected at
import time; set DETSING_KERNEL=python to force the fallback.

Over the rationals everything runs fraction-free: polynomials are primitive
integer (content 1, positive lead), reduction steps are gcd-scaled, so a
normal form is the true one up to a positive rational factor -- which is all
that membership tests, lead-term data, and basis computations need.  Over
GF(p) bases are monic.  The public entry point returns the reduced Groebner
basis in canonical form (lead terms strictly descending), so equal ideals
yield identical bases.
"""

from __future__ import annotations

import heapq
import os

from gmpy2 import gcd as _gcd

from .errors import ResourceLimitExceeded
from .poly import Poly

if os.environ.get("DETSING_KERNEL", "").lower() == "python":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

KERNEL_NAME = "cython" if _impl.IS_COMPILED else "python"


def use_kernel(module):
    """Swap the reduction kernel (benchmarks and parity tests)."""
    global _impl, KERNEL_NAME
    _impl = module
    KERNEL_NAME = "cython" if module.IS_COMPILED else "python"


class _Caps:
    """Resource caps for one Groebner computation."""

    __slots__ = ("max_basis", "max_degree", "max_steps")

    def __init__(self, max_basis=20000, max_degree=2000, max_steps=100_000_000):
        self.max_basis = max_basis
        self.max_degree = max_degree
        self.max_steps = max_steps


DEFAULT_CAPS = _Caps(
    max_basis=int(os.environ.get("DETSING_MAX_BASIS", 20000)),
    max_degree=int(os.environ.get("DETSING_MAX_DEGREE", 2000)),
    max_steps=int(os.environ.get("DETSING_MAX_STEPS", 100_000_000)),
)


def _split(f):
    return [m for m, _ in f.terms], [c for _, c in f.terms]


def _join(ring, monos, coeffs):
    return Poly(ring, tuple(zip(monos, coeffs)), _sorted=True)


def _nf_lists(ring, fm, fc, leads, b_monos, b_coeffs, tail, caps):
    try:
        return _impl.normal_form(fm, fc, leads, b_monos, b_coeffs,
                                 ring.split_shift, ring.hmask, ring.field.char,
                                 tail, caps.max_steps)[:2]
    except RuntimeError:
        raise ResourceLimitExceeded("reduction steps", caps.max_steps) from None


def normal_form(f, basis, tail=True, caps=None):
    """Normal form of Poly f modulo monic/primitive reducers.

    Over the rationals the result is the canonical primitive-integer multiple
    of the true normal form (zero iff f is in the ideal of the reducers).
    """
    if f.is_zero or not basis:
        return f
    ring = f.ring
    caps = caps or DEFAULT_CAPS
    leads = []
    b_monos = []
    b_coeffs = []
    for g in basis:
        gm, gc = _split(g)
        leads.append(gm[0])
        b_monos.append(gm)
        b_coeffs.append(gc)
    fm, fc = _split(f.normalized())
    rm, rc = _nf_lists(ring, fm, fc, leads, b_monos, b_coeffs, tail, caps)
    if rm and ring.field.char == 0 and rc[0] < 0:
        rc = [-c for c in rc]
    return _join(ring, rm, rc)


def _gm_new_pairs(ring, leads, t):
    """Gebauer-Moeller: surviving new pairs (lcm, deg, i) against index t."""
    lt = leads[t]
    cands = [(ring.mono_lcm(lt, leads[i]), i) for i in range(t)]
    # chain criterion: drop i when another candidate lcm properly divides lcm_i
    kept = []
    for lcm_i, i in cands:
        ok = True
        for lcm_j, _j in cands:
            if lcm_j != lcm_i and ring.mono_divides(lcm_j, lcm_i):
                ok = False
                break
        if ok:
            kept.append((lcm_i, i))
    # one representative per lcm; coprime member kills the whole class
    groups = {}
    for lcm_i, i in kept:
        groups.setdefault(lcm_i, []).append(i)
    out = []
    for lcm_i in sorted(groups, key=ring.sort_key):
        idxs = groups[lcm_i]
        if any(ring.mono_coprime(lt, leads[i]) for i in idxs):
            continue
        out.append((lcm_i, ring.degree(lcm_i), min(idxs)))
    return out


def _prune_old_pairs(ring, leads, pairs, t):
    """Gebauer-Moeller B-criterion against the new lead leads[t]."""
    lt = leads[t]
    out = []
    for entry in pairs:
        _deg, _key, i, j, lcm = entry
        if ring.mono_divides(lt, lcm):
            if ring.mono_lcm(leads[i], lt) != lcm and ring.mono_lcm(lt, leads[j]) != lcm:
                continue
        out.append(entry)
    return out


def _spoly(ring, mi, ci, mj, cj, lcm):
    """S-polynomial term lists for two basis elements (heads cancel)."""
    p = ring.field.char
    if p:
        ascale = bscale = 1  # monic basis
    else:
        d = _gcd(ci[0], cj[0])
        ascale = cj[0] // d
        bscale = ci[0] // d
        if ascale < 0:
            ascale = -ascale
            bscale = -bscale
    return _impl.merge_shifted(mi, ci, lcm - mi[0], ascale,
                               mj, cj, lcm - mj[0], bscale,
                               ring.split_shift, p)


def buchberger(gens, caps=None):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Returns a tuple of normalized Poly, lead terms strictly descending.  The
    zero ideal gives (), the unit ideal gives (Poly 1,).
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return ()
    ring = gens[0].ring
    caps = caps or DEFAULT_CAPS

    work = interreduce_lists(ring, [_split(g.normalized()) for g in gens], caps)
    if not work:
        return ()
    if any(m[0] == 0 for m, _c in work):
        return (Poly.const(ring, 1),)

    leads = []
    b_monos = []
    b_coeffs = []
    pairs = []  # heap of (lcm_deg, lcm_key, i, j, lcm)

    def add_element(fm, fc):
        t = len(leads)
        if t >= caps.max_basis:
            raise ResourceLimitExceeded("basis size", caps.max_basis)
        if ring.degree(fm[0]) > caps.max_degree:
            raise ResourceLimitExceeded("basis lead degree", caps.max_degree)
        nonlocal pairs
        leads.append(fm[0])
        if t:
            pairs = _prune_old_pairs(ring, leads, pairs, t)
            for lcm, deg, i in _gm_new_pairs(ring, leads, t):
                heapq.heappush(pairs, (deg, ring.sort_key(lcm), i, t, lcm))
        b_monos.append(fm)
        b_coeffs.append(fc)

    for fm, fc in sorted(work, key=lambda e: ring.sort_key(e[0][0])):
        add_element(fm, fc)

    while pairs:
        _deg, _key, i, j, lcm = heapq.heappop(pairs)
        sm, sc = _spoly(ring, b_monos[i], b_coeffs[i], b_monos[j], b_coeffs[j], lcm)
        if not sm:
            continue
        rm, rc = _nf_lists(ring, sm, sc, leads, b_monos, b_coeffs, True, caps)
        if rm:
            if rm[0] == 0:
                return (Poly.const(ring, 1),)
            add_element(*_normalize_lists(ring, rm, rc))

    return _reduced(ring, list(zip(b_monos, b_coeffs)), caps)


def _normalize_lists(ring, monos, coeffs):
    """Monic over GF(p); primitive with positive lead over the rationals."""
    p = ring.field.char
    if p:
        if coeffs[0] != 1:
            inv = ring.field.inv(coeffs[0])
            coeffs = [c * inv % p for c in coeffs]
        return monos, coeffs
    # kernel output is content-stripped; fix the sign only
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return monos, coeffs


def _reduced(ring, work, caps):
    """Minimalize and tail-reduce a Groebner basis into canonical Poly tuple."""
    ordered = sorted(work, key=lambda e: ring.sort_key(e[0][0]))
    minimal = []
    for fm, fc in ordered:
        if not any(ring.mono_divides(gm[0], fm[0]) for gm, _gc in minimal):
            minimal.append((fm, fc))
    leads = [fm[0] for fm, _fc in minimal]
    b_monos = [fm for fm, _fc in minimal]
    b_coeffs = [fc for _fm, fc in minimal]
    out = []
    for k in range(len(minimal)):
        fm, fc = b_monos[k], b_coeffs[k]
        o_leads = leads[:k] + leads[k + 1:]
        o_monos = b_monos[:k] + b_monos[k + 1:]
        o_coeffs = b_coeffs[:k] + b_coeffs[k + 1:]
        if o_leads:
            fm, fc = _nf_lists(ring, fm, fc, o_leads, o_monos, o_coeffs, True, caps)
        out.append(_join(ring, *_normalize_lists(ring, fm, fc)))
    out.sort(key=lambda f: ring.sort_key(f.terms[0][0]), reverse=True)
    return tuple(out)


def interreduce_lists(ring, work, caps):
    """Mutually reduce a generating set given as (monos, coeffs) pairs."""
    work = [_normalize_lists(ring, m, c) for m, c in work if m]
    changed = True
    while changed and len(work) > 1:
        changed = False
        work.sort(key=lambda e: (ring.sort_key(e[0][0]), len(e[0])))
        result = []
        for k in range(len(work)):
            fm, fc = work[k]
            others = result + work[k + 1:]
            if not others:
                result.append((fm, fc))
                continue
            leads = [gm[0] for gm, _gc in others]
            o_monos = [gm for gm, _gc in others]
            o_coeffs = [gc for _gm, gc in others]
            rm, rc = _nf_lists(ring, fm, fc, leads, o_monos, o_coeffs, True, caps)
            if not rm:
                changed = True
                continue
            rm, rc = _normalize_lists(ring, rm, rc)
            if rm != fm or rc != fc:
                changed = True
            result.append((rm, rc))
        work = result
    return work


def interreduce(polys, caps=None):
    """Mutually reduce a list of Poly (same ideal, usually smaller set)."""
    polys = [g for g in polys if not g.is_zero]
    if not polys:
        return []
    ring = polys[0].ring
    caps = caps or DEFAULT_CAPS
    work = interreduce_lists(ring, [_split(g.normalized()) for g in polys], caps)
    return [_join(ring, m, c) for m, c in work]
