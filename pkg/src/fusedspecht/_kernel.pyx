# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernel for sparse multivariate polynomial arithmetic.

Semantics are identical to ``fusedspecht._kernel_py`` (the pure-Python
twin); both are exercised by the backend-parity tests.  Terms are dicts
mapping exponent tuples to exact coefficients (int or Fraction); the
speedup comes from compiled loops over the dict items and from avoiding
interpreter overhead on tuple construction.
"""

import heapq

BACKEND = "cython"


cdef inline tuple _tuple_add(tuple ka, tuple kb):
    cdef Py_ssize_t n = len(ka)
    cdef Py_ssize_t i
    cdef list tmp = [0] * n
    for i in range(n):
        tmp[i] = ka[i] + kb[i]
    return tuple(tmp)


def poly_add(dict a, dict b):
    """Sum of two term dicts."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    cdef object k, c, acc
    for k, c in b.items():
        acc = out.get(k)
        if acc is None:
            out[k] = c
        else:
            acc = acc + c
            if acc:
                out[k] = acc
            else:
                del out[k]
    return out


def poly_axpy(dict acc, dict b, object c):
    """In-place accumulate ``acc += c * b`` (c a nonzero scalar)."""
    cdef object k, cb, old
    if c == 1:
        for k, cb in b.items():
            old = acc.get(k)
            if old is None:
                acc[k] = cb
            else:
                old = old + cb
                if old:
                    acc[k] = old
                else:
                    del acc[k]
    else:
        for k, cb in b.items():
            old = acc.get(k)
            if old is None:
                acc[k] = c * cb
            else:
                old = old + c * cb
                if old:
                    acc[k] = old
                else:
                    del acc[k]


def poly_scale(dict a, object c):
    """Scalar multiple (c may be zero)."""
    if not c:
        return {}
    if c == 1:
        return dict(a)
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        out[k] = c * v
    return out


def poly_mul(dict a, dict b):
    """Product of two term dicts."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef list items_b = list(b.items())
    cdef dict out = {}
    cdef object ka, ca, kb, cb, k, c, acc
    cdef tuple pair
    for ka, ca in a.items():
        for pair in items_b:
            kb = pair[0]
            cb = pair[1]
            k = _tuple_add(<tuple>ka, <tuple>kb)
            c = ca * cb
            acc = out.get(k)
            if acc is None:
                out[k] = c
            else:
                acc = acc + c
                if acc:
                    out[k] = acc
                else:
                    del out[k]
    return out


def poly_permute(dict a, tuple perm):
    """Variable substitution x_i -> x_perm[i]."""
    cdef Py_ssize_t n = len(perm)
    cdef Py_ssize_t i
    cdef dict out = {}
    cdef object k, c
    cdef list nk
    for k, c in a.items():
        nk = [0] * n
        for i in range(n):
            nk[<Py_ssize_t>perm[i]] = (<tuple>k)[i]
        out[tuple(nk)] = c
    return out


cdef inline tuple _grlex_heapkey(tuple k):
    cdef Py_ssize_t n = len(k)
    cdef Py_ssize_t i
    cdef long total = 0
    cdef list neg = [0] * n
    for i in range(n):
        total += <long>k[i]
        neg[i] = -k[i]
    return (-total, tuple(neg))


def binomial_divide(dict a, Py_ssize_t i, Py_ssize_t j):
    """Exact quotient of ``a`` by (x_j - x_i) with i < j, or None."""
    if not a:
        return {}
    cdef dict rem = dict(a)
    cdef list heap = [_grlex_heapkey(<tuple>k) for k in rem]
    heapq.heapify(heap)
    cdef dict quot = {}
    cdef object c, acc, old
    cdef tuple k, negk, qk, rk
    cdef list tmp
    while rem:
        entry = heapq.heappop(heap)
        negk = <tuple>entry[1]
        tmp = [0] * len(negk)
        for idx in range(len(negk)):
            tmp[idx] = -negk[idx]
        k = tuple(tmp)
        c = rem.get(k)
        if c is None:
            continue
        if k[i] == 0:
            return None
        del rem[k]
        tmp = list(k)
        tmp[i] = tmp[i] - 1
        qk = tuple(tmp)
        acc = quot.get(qk)
        if acc is None:
            quot[qk] = -c
        else:
            acc = acc - c
            if acc:
                quot[qk] = acc
            else:
                del quot[qk]
        tmp = list(k)
        tmp[i] = tmp[i] - 1
        tmp[j] = tmp[j] + 1
        rk = tuple(tmp)
        old = rem.get(rk)
        if old is None:
            rem[rk] = c
            heapq.heappush(heap, _grlex_heapkey(rk))
        else:
            old = old + c
            if old:
                rem[rk] = old
            else:
                del rem[rk]
    return quot


def project_blocks(dict a, tuple starts, Py_ssize_t d):
    """Collapse consecutive variable blocks by summing exponents."""
    cdef dict out = {}
    cdef object k, c, acc
    cdef tuple nk
    cdef list tmp
    cdef Py_ssize_t b, p, lo, hi
    cdef long s
    for k, c in a.items():
        tmp = [0] * d
        for b in range(d):
            lo = <Py_ssize_t>starts[b]
            hi = <Py_ssize_t>starts[b + 1]
            s = 0
            for p in range(lo, hi):
                s += <long>(<tuple>k)[p]
            tmp[b] = s
        nk = tuple(tmp)
        acc = out.get(nk)
        if acc is None:
            out[nk] = c
        else:
            acc = acc + c
            if acc:
                out[nk] = acc
            else:
                del out[nk]
    return out
