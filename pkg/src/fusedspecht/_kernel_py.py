"""Pure-Python kernel for sparse multivariate polynomial arithmetic.

A polynomial is a dict mapping exponent tuples (one entry per variable) to
nonzero coefficients.  Coefficients are exact: Python ints or Fractions.
The compiled twin of this module is ``fusedspecht._kernel`` (Cython); both
expose the same functions and are interchangeable -- see
``fusedspecht.backend``.

Nothing here validates arity; callers guarantee that all exponent tuples in
one dict have the same length.
"""

import heapq

BACKEND = "python"


def poly_add(a, b):
    """Sum of two term dicts."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
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


def poly_axpy(acc, b, c):
    """In-place accumulate ``acc += c * b`` (c a nonzero scalar)."""
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


def poly_scale(a, c):
    """Scalar multiple (c may be zero)."""
    if not c:
        return {}
    if c == 1:
        return dict(a)
    return {k: c * v for k, v in a.items()}


def poly_mul(a, b):
    """Product of two term dicts."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    items_b = list(b.items())
    out = {}
    for ka, ca in a.items():
        for kb, cb in items_b:
            k = tuple(x + y for x, y in zip(ka, kb))
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


def poly_permute(a, perm):
    """Variable substitution x_i -> x_perm[i]."""
    n = len(perm)
    out = {}
    for k, c in a.items():
        nk = [0] * n
        for i in range(n):
            nk[perm[i]] = k[i]
        out[tuple(nk)] = c
    return out


def _grlex_heapkey(k):
    # min-heap entry that pops the graded-lex largest monomial first
    return (-sum(k), tuple(-e for e in k))


def binomial_divide(a, i, j):
    """Exact quotient of ``a`` by (x_j - x_i) with i < j, or None.

    Graded-lex division: the divisor's leading term is -x_i, each step
    moves exponent weight from variable i to variable j, so the loop
    terminates.  Returns the quotient dict, or None if the division leaves
    a remainder.
    """
    if not a:
        return {}
    rem = dict(a)
    heap = [_grlex_heapkey(k) for k in rem]
    heapq.heapify(heap)
    seen = set(rem)
    quot = {}
    while rem:
        negd, negk = heapq.heappop(heap)
        k = tuple(-e for e in negk)
        c = rem.get(k)
        if c is None:
            continue
        if k[i] == 0:
            return None
        del rem[k]
        qk = list(k)
        qk[i] -= 1
        qk = tuple(qk)
        qc = -c
        acc = quot.get(qk)
        if acc is None:
            quot[qk] = qc
        else:
            acc = acc + qc
            if acc:
                quot[qk] = acc
            else:
                del quot[qk]
        # rem += c * x^(k - e_i + e_j)
        rk = list(k)
        rk[i] -= 1
        rk[j] += 1
        rk = tuple(rk)
        old = rem.get(rk)
        if old is None:
            rem[rk] = c
            if rk not in seen:
                seen.add(rk)
            heapq.heappush(heap, _grlex_heapkey(rk))
        else:
            old = old + c
            if old:
                rem[rk] = old
            else:
                del rem[rk]
    return quot


def project_blocks(a, starts, d):
    """Collapse consecutive variable blocks: block k covers
    starts[k] .. starts[k+1]-1 (starts has length d+1); exponents inside a
    block are summed.  Implements evaluation of each block at a single
    surviving variable."""
    out = {}
    for k, c in a.items():
        nk = tuple(sum(k[starts[b]:starts[b + 1]]) for b in range(d))
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
