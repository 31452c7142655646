"""Tabloid realization of the symmetric-group simple modules and their
images under the block antisymmetrizer.

A tabloid is a row-ordered tuple of entry sets (stored as sorted tuples);
vectors are dicts mapping tabloids to rational coefficients.  Vectors of
projected polytabloids indexed by row-strict tableaux give bases of the
corner-algebra simple modules; straightening into the standard polytabloid
basis is done by exact elimination over the full tabloid coordinates
rather than by Garnir relations.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from .polyalg import MPoly, perm_sign, solve_in_span
from .specht import specht_poly
from .tableaux import (
    Filling,
    check_content,
    content_offsets,
    content_sorted,
    dominance_geq,
    enumerate_tableaux,
    partitions,
    standard_tableaux,
    to_numbering,
    transpose_shape,
)

__all__ = [
    "tabloid",
    "polytabloid",
    "fused_polytabloid",
    "straighten",
    "simple_module_dims",
    "polynomial_isomorphism_ok",
    "tabloid_rank",
]


def tabloid(numbering):
    """Row-set equivalence class: rows with in-row order forgotten."""
    return tuple(tuple(sorted(r)) for r in numbering.rows)


def _apply_entry_map(rows, mapping):
    """Apply an entry permutation (dict or list, 1-indexed) to rows and
    return the tabloid."""
    return tuple(tuple(sorted(mapping[e] for e in r)) for r in rows)


def vec_add(acc, tab, coeff):
    old = acc.get(tab)
    if old is None:
        acc[tab] = coeff
    else:
        old = old + coeff
        if old:
            acc[tab] = old
        else:
            del acc[tab]


def vec_scale(v, c):
    if not c:
        return {}
    return {t: c * x for t, x in v.items()}


def vec_sub(a, b):
    out = dict(a)
    for t, c in b.items():
        vec_add(out, t, -c)
    return out


def polytabloid(numbering):
    """Signed sum of the tabloids of the column-permuted numbering over
    the column group."""
    if not numbering.is_numbering():
        raise ValueError("polytabloids are indexed by numberings")
    n = numbering.size
    cols = [tuple(col) for col in numbering.columns()]
    out = {}

    def walk(c, mapping, sign):
        if c == len(cols):
            vec_add(out, _apply_entry_map(numbering.rows, mapping), sign)
            return
        entries = cols[c]
        for img in permutations(entries):
            s = _arrangement_sign(entries, img)
            for e, t in zip(entries, img):
                mapping[e] = t
            walk(c + 1, mapping, sign * s)
        for e in entries:
            mapping[e] = e

    mapping = {e: e for e in range(1, n + 1)}
    walk(0, mapping, 1)
    return out


def _arrangement_sign(src, img):
    """Sign of the permutation sending the distinct entries src to img."""
    pos = {v: i for i, v in enumerate(src)}
    image = tuple(pos[v] for v in img)
    inv = sum(
        1
        for i in range(len(image))
        for j in range(i + 1, len(image))
        if image[i] > image[j]
    )
    return -1 if inv & 1 else 1


def act_on_vector(entry_perm, vec):
    """Entry permutation (1-indexed dict/list lookup) acting on a tabloid
    vector."""
    out = {}
    for tab, c in vec.items():
        vec_add(out, _apply_entry_map(tab, entry_perm), c)
    return out


def block_antisymmetrize_vector(content, vec):
    """Apply the product of block antisymmetrizer idempotents (blocks of
    consecutive entries given by ``content``) to a tabloid vector."""
    content = check_content(content)
    q = content_offsets(content)
    n = sum(content)
    for k, s in enumerate(content):
        if s == 1:
            continue
        block = list(range(q[k], q[k] + s))
        acc = {}
        for img in permutations(block):
            mapping = {e: e for e in range(1, n + 1)}
            for e, t in zip(block, img):
                mapping[e] = t
            sgn = _arrangement_sign(tuple(block), img)
            for tab, c in vec.items():
                vec_add(acc, _apply_entry_map(tab, mapping), sgn * c)
        vec = vec_scale(acc, Fraction(1, factorial(s)))
    return vec


def fused_polytabloid(tableau, content=None):
    """Projected polytabloid attached to a row-strict tableau: the block
    antisymmetrizer applied to the polytabloid of its refined numbering."""
    if content is None:
        content = tableau.content()
    if not tableau.is_row_strict():
        raise ValueError("fused polytabloids are indexed by row-strict tableaux")
    v = polytabloid(to_numbering(tableau))
    return block_antisymmetrize_vector(content, v)


def tabloid_rank(vectors):
    """Exact rank of a family of tabloid vectors."""
    pivots = {}
    rank = 0
    for v in vectors:
        row = dict(v)
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = Fraction(1, 1) / row[lead]
                pivots[lead] = {t: c * inv for t, c in row.items()}
                rank += 1
                break
            f = row[lead]
            for t, c in piv.items():
                vec_add(row, t, -f * c)
        # fully reduced to zero: dependent
    return rank


def straighten(vec, shape):
    """Coordinates of a tabloid vector in the standard polytabloid basis
    of its shape.  Returns a list of (standard tableau, coefficient) with
    nonzero coefficients, or raises if the vector lies outside the span."""
    basis_tabs = standard_tableaux(shape)
    basis_vecs = [polytabloid(t) for t in basis_tabs]
    # encode tabloid vectors as MPoly-like dicts for solve_in_span: give
    # each tabloid a fake exponent key by indexing
    tabloids = sorted({t for v in basis_vecs for t in v} | set(vec))
    index = {t: i for i, t in enumerate(tabloids)}
    m = len(tabloids)

    def encode(v):
        p = MPoly.zero(m)
        terms = {}
        for t, c in v.items():
            key = [0] * m
            key[index[t]] = 1
            terms[tuple(key)] = c
        return MPoly(m, terms)

    coords = solve_in_span([encode(v) for v in basis_vecs], encode(vec))
    if coords is None:
        raise ValueError("vector is outside the standard polytabloid span")
    return [(t, c) for t, c in zip(basis_tabs, coords) if c]


def simple_module_dims(content):
    """For every partition of n = sum(content): the rank of the projected
    polytabloid family, which is the number of row-strict tableaux and is
    nonzero exactly when the transpose shape dominates the sorted content.
    Returns {shape: dim}."""
    content = check_content(content)
    n = sum(content)
    out = {}
    for lam in partitions(n):
        tabs = enumerate_tableaux(lam, content, "row_strict")
        vecs = [fused_polytabloid(t, content) for t in tabs]
        dim = tabloid_rank(vecs)
        expected = len(tabs)
        nonzero_expected = dominance_geq(transpose_shape(lam), content_sorted(content))
        if dim != expected or (dim > 0) != nonzero_expected:
            raise AssertionError(
                f"module dimension mismatch at shape {lam}: rank {dim}, "
                f"row-strict count {expected}"
            )
        out[lam] = dim
    return out


def _entry_perm_from_tuple(perm):
    """0-indexed permutation tuple -> 1-indexed entry mapping dict."""
    return {i + 1: perm[i] + 1 for i in range(len(perm))}


def act_on_numbering(perm, numbering):
    """Entry permutation acting on a numbering (0-indexed perm tuple)."""
    mapping = _entry_perm_from_tuple(perm)
    return Filling([[mapping[e] for e in r] for r in numbering.rows])


def polynomial_isomorphism_ok(shape, perms):
    """Check that the matrix of each permutation on the span of the
    standard Specht polynomials equals its matrix on the span of the
    standard polytabloids."""
    tabs = standard_tableaux(shape)
    n = sum(shape)
    polys = [specht_poly(t) for t in tabs]
    vecs = [polytabloid(t) for t in tabs]
    tabloids = sorted({t for v in vecs for t in v})
    index = {t: i for i, t in enumerate(tabloids)}
    m = len(tabloids)

    def encode(v):
        terms = {}
        for t, c in v.items():
            key = [0] * m
            key[index[t]] = 1
            terms[tuple(key)] = c
        return MPoly(m, terms)

    enc_vecs = [encode(v) for v in vecs]
    for g in perms:
        for t, p, v in zip(tabs, polys, vecs):
            pcoords = solve_in_span(polys, p.act(g))
            vimg = act_on_vector(_entry_perm_from_tuple(g), v)
            vcoords = solve_in_span(enc_vecs, encode(vimg))
            if pcoords is None or vcoords is None or pcoords != vcoords:
                return False
    return True
