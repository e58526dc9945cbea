# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of _kernel_py: identical API, C-level term loops.

Coefficients stay arbitrary-precision Python ints; the win is in the
monomial handling and the reduction loop bookkeeping, which dominate on
polynomials with moderate coefficients.
"""

from heapq import heapify, heappop, heappush
from math import gcd

BACKEND_NAME = "c"


cpdef tuple order_key(tuple mono):
    """Grevlex key: (total degree, reversed negated exponents)."""
    cdef Py_ssize_t n = len(mono)
    cdef Py_ssize_t i
    cdef long total = 0
    cdef long e
    out = [0] * (n + 1)
    for i in range(n):
        e = mono[i]
        total += e
        out[n - i] = -e
    out[0] = total
    return tuple(out)


cdef tuple _neg_key_entry(tuple mono):
    # heap entry: negated order key then the monomial, for a max-heap
    cdef Py_ssize_t n = len(mono)
    cdef Py_ssize_t i
    cdef long total = 0
    cdef long e
    out = [0] * (n + 2)
    for i in range(n):
        e = mono[i]
        total += e
        out[n - i] = e
    out[0] = -total
    out[n + 1] = mono
    return tuple(out)


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cpdef bint mono_divides(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    for i in range(n):
        if <long long> a[i] > <long long> b[i]:
            return False
    return True


cpdef tuple mono_div(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]
    return tuple(out)


cpdef tuple leading_term(dict terms):
    best = None
    best_key = None
    for m in terms:
        k = order_key(<tuple> m)
        if best_key is None or k > best_key:
            best_key = k
            best = m
    return best, terms[best]


cpdef dict strip_content(dict terms):
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c if c >= 0 else -c)
        if g == 1:
            break
    lm_lc = leading_term(terms)
    if lm_lc[1] < 0:
        g = -g
    if g == 1:
        return terms
    return {m: c // g for m, c in terms.items()}


cpdef add_scaled(dict target, dict source, tuple mono, coef, heap=None):
    """target += coef * x^mono * source, pushing fresh monomials on heap."""
    cdef tuple mm
    for m, c in source.items():
        mm = mono_mul(<tuple> m, mono)
        if mm in target:
            s = target[mm] + coef * c
            if s:
                target[mm] = s
            else:
                del target[mm]
        else:
            target[mm] = coef * c
            if heap is not None:
                heappush(heap, _neg_key_entry(mm))


cpdef tuple reduce_full(dict f, reducers):
    """Total fraction-free normal form; see the pure twin for the contract."""
    cdef dict work = dict(f)
    cdef dict remainder = {}
    multiplier = 1
    cdef list heap = [_neg_key_entry(<tuple> m) for m in work]
    heapify(heap)
    cdef tuple m, lm
    cdef bint found
    while heap:
        entry = heappop(heap)
        m = <tuple> entry[len(entry) - 1]
        c = work.get(m)
        if c is None:
            continue
        found = False
        hit_lm = None
        hit_lc = None
        hit_terms = None
        for red in reducers:
            lm = <tuple> red[0]
            if mono_divides(lm, m):
                hit_lm = lm
                hit_lc = red[1]
                hit_terms = red[2]
                found = True
                break
        if not found:
            del work[m]
            remainder[m] = c
            continue
        g = gcd(c, hit_lc)
        scale = hit_lc // g
        if scale != 1:
            multiplier *= scale
            for k in work:
                work[k] = work[k] * scale
            for k in remainder:
                remainder[k] = remainder[k] * scale
        add_scaled(work, <dict> hit_terms, mono_div(m, hit_lm), -(c // g), heap)
    return remainder, multiplier


cpdef dict spoly(f_lm, f_lc, f_terms, g_lm, g_lc, g_terms):
    cdef tuple lcm = mono_lcm(<tuple> f_lm, <tuple> g_lm)
    gg = gcd(f_lc, g_lc)
    cf = g_lc // gg
    cg = f_lc // gg
    cdef dict out = {}
    add_scaled(out, <dict> f_terms, mono_div(lcm, <tuple> f_lm), cf)
    add_scaled(out, <dict> g_terms, mono_div(lcm, <tuple> g_lm), -cg)
    return out


cpdef dict dict_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple m
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(<tuple> ma, <tuple> mb)
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out
