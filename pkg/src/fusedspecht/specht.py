"""Specht polynomials and their fused generalizations.

Two independent constructions of the fused polynomials are provided: the
limit form (antisymmetrize the refined Specht polynomial, divide out the
block difference products, collapse each block to one variable) and the
combinatorial form (a signed sum of monomials over the column-permutation
orbit, weighted by evaluations of Schur polynomials at all-ones).  Their
exact agreement on every filling is the central correctness property of
the library and is swept exhaustively in the test suite.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .polyalg import (
    MPoly,
    antisymmetrize,
    block_starts,
    exact_divide,
    perm_sign,
    poly_rank,
    project_eval,
    vandermonde,
)
from .tableaux import (
    check_content,
    check_partition,
    enumerate_tableaux,
    hecke_dimension,
    letter_row_data,
    signed_orbit,
    to_numbering,
)

__all__ = [
    "specht_poly",
    "specht_poly_monomial_form",
    "fused_specht_limit",
    "fused_specht_combinatorial",
    "fused_specht",
    "schur",
    "schur_combinatorial",
    "schur_ones",
    "leading_term_data",
    "rank",
    "hecke_dimension",
    "rsyt_basis_polynomials",
]

rank = poly_rank


def specht_poly(numbering, nvars=None):
    """Product over columns of the difference products on the column's
    entries listed bottom to top."""
    if not numbering.is_numbering():
        raise ValueError("Specht polynomials are indexed by numberings")
    n = numbering.size if nvars is None else nvars
    out = MPoly.const(n, 1)
    for col in numbering.columns():
        indices = [e - 1 for e in reversed(col)]
        out = out * vandermonde(indices, n)
    return out


def specht_poly_monomial_form(numbering):
    """The same polynomial as a signed sum over the column group applied
    to the row-exponent monomial (the polytabloid image).  Kept as an
    independent route for cross-checking :func:`specht_poly`."""
    if not numbering.is_numbering():
        raise ValueError("Specht polynomials are indexed by numberings")
    n = numbering.size
    row_of = {}
    for r, row in enumerate(numbering.rows):
        for e in row:
            row_of[e] = r
    cols = [tuple(e - 1 for e in col) for col in numbering.columns()]
    base = tuple(row_of[i + 1] for i in range(n))
    out = MPoly.zero(n)
    for images in _column_group(cols, n):
        sgn = perm_sign(images)
        exps = [0] * n
        for i in range(n):
            exps[images[i]] = base[i]
        out = out + MPoly.monomial(exps, sgn)
    return out


def _column_group(cols, n):
    """All permutations of {0..n-1} preserving each column's entry set."""
    def walk(c, current):
        if c == len(cols):
            yield tuple(current)
            return
        entries = cols[c]
        for img in permutations(entries):
            for e, t in zip(entries, img):
                current[e] = t
            yield from walk(c + 1, current)
        for e in entries:
            current[e] = e

    yield from walk(0, list(range(n)))


def block_difference_product(content, nvars):
    """prod_k prod_{q_k <= i < j < q_{k+1}} (x_j - x_i), 0-indexed pairs."""
    starts = block_starts(content)
    out = MPoly.const(nvars, 1)
    for b in range(len(content)):
        for i in range(starts[b], starts[b + 1]):
            for j in range(i + 1, starts[b + 1]):
                out = out * (MPoly.variable(j, nvars) - MPoly.variable(i, nvars))
    return out


def _divide_block_differences(p, content):
    starts = block_starts(content)
    for b in range(len(content)):
        for i in range(starts[b], starts[b + 1]):
            for j in range(i + 1, starts[b + 1]):
                divisor = MPoly.variable(j, p.nvars) - MPoly.variable(i, p.nvars)
                p = exact_divide(p, divisor)
    return p


def fused_specht_limit(filling):
    """Fused Specht polynomial via its defining limit: antisymmetrize the
    Specht polynomial of the refined numbering blockwise, divide out the
    block difference products exactly, then collapse each block."""
    content = filling.content()
    numbering = to_numbering(filling)
    p = specht_poly(numbering)
    p = antisymmetrize(content, p)
    p = _divide_block_differences(p, content)
    return project_eval(p, content)


def fused_specht_combinatorial(filling):
    """Fused Specht polynomial as the signed monomial sum over the
    column-permutation orbit (pruned of fillings with a repeated entry in
    a row), each monomial weighted by Schur evaluations at all-ones."""
    content = filling.content()
    d = len(content)
    stab_order, elements = signed_orbit(filling)
    out = MPoly.zero(d)
    for el in elements:
        coeff = Fraction(stab_order * el.sign)
        exps = [0] * d
        for k, s in enumerate(content):
            lam = el.lambdas[k]
            sign_k = (-1) ** (s * (s - 1) // 2) * el.tau_signs[k]
            coeff *= Fraction(sign_k, factorial(s)) * schur_ones(lam, s)
            exps[k] = sum(lam)
        out = out + MPoly.monomial(exps, coeff)
    return out


fused_specht = fused_specht_limit


def orbit_monomial(filling):
    """The single monomial a filling contributes to the combinatorial
    formula (no stabilizer or shortest-permutation sign)."""
    content = filling.content()
    d = len(content)
    tau_signs, lambdas = letter_row_data(filling)
    coeff = Fraction(1)
    exps = [0] * d
    for k, s in enumerate(content):
        sign_k = (-1) ** (s * (s - 1) // 2) * tau_signs[k]
        coeff *= Fraction(sign_k, factorial(s)) * schur_ones(lambdas[k], s)
        exps[k] = sum(lambdas[k])
    return MPoly.monomial(exps, coeff)


def leading_term_data(tableau):
    """(exponent tuple, coefficient) of the monomial prod_k x_k^{|lam^T(k)|}
    in the fused Specht polynomial of a row-strict tableau; the exponent
    vector is the lexicographic minimum over the orbit and the coefficient
    is nonzero."""
    if not tableau.is_row_strict():
        raise ValueError("leading-term data is for row-strict tableaux")
    content = tableau.content()
    stab_order, _ = signed_orbit(tableau)
    mono = orbit_monomial(tableau)
    (exps, coeff), = mono.terms.items()
    return exps, Fraction(stab_order) * coeff


# --- Schur polynomials ----------------------------------------------------


def _pad_partition(lam, s):
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a < 0 for a in lam):
        raise ValueError(f"not a partition: {lam}")
    if len(lam) > s:
        raise ValueError(f"partition {lam} too long for {s} variables")
    return lam + (0,) * (s - len(lam))


def schur(lam, var_indices, nvars):
    """Bialternant form on the given variables (0-indexed into an
    ``nvars``-variable polynomial ring)."""
    var_indices = tuple(var_indices)
    s = len(var_indices)
    lam = _pad_partition(lam, s)
    numerator = MPoly.zero(nvars)
    for sigma in permutations(range(s)):
        exps = [0] * nvars
        for j in range(s):
            exps[var_indices[sigma[j]]] = lam[j] + s - 1 - j
        numerator = numerator + MPoly.monomial(exps, perm_sign(sigma))
    # denominator prod_{i<j} (x_{v_i} - x_{v_j}), divided out factor by factor
    result = numerator
    sign = 1
    for i in range(s):
        for j in range(i + 1, s):
            a, b = var_indices[i], var_indices[j]
            if a < b:
                sign = -sign
                divisor = MPoly.variable(b, nvars) - MPoly.variable(a, nvars)
            else:
                divisor = MPoly.variable(a, nvars) - MPoly.variable(b, nvars)
            result = exact_divide(result, divisor)
    return result if sign == 1 else -result


def schur_combinatorial(lam, var_indices, nvars):
    """Sum of content monomials over column-strict tableaux of the shape
    with entries in {1..s} (any content)."""
    var_indices = tuple(var_indices)
    s = len(var_indices)
    lam = tuple(lam)
    if len(lam) > s:
        raise ValueError(f"partition {lam} too long for {s} variables")
    out = MPoly.zero(nvars)
    if not lam:
        return MPoly.const(nvars, 1)
    for t in _column_strict_any_content(lam, s):
        exps = [0] * nvars
        for v in t:
            exps[var_indices[v - 1]] += 1
        out = out + MPoly.monomial(exps, 1)
    return out


def _column_strict_any_content(lam, s):
    """Column-strict fillings of shape lam with entries <= s, as flat
    row-major entry tuples."""
    lam = tuple(lam)
    nrows = len(lam)
    boxes = [(r, c) for r in range(nrows) for c in range(lam[r])]
    grid = [[0] * lam[r] for r in range(nrows)]
    out = []

    def backtrack(pos):
        if pos == len(boxes):
            out.append(tuple(grid[r][c] for r, c in boxes))
            return
        r, c = boxes[pos]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, s + 1):
            grid[r][c] = v
            backtrack(pos + 1)
            grid[r][c] = 0

    backtrack(0)
    return out


@lru_cache(maxsize=None)
def schur_ones(lam, s):
    """Number of column-strict tableaux of shape lam with entries <= s,
    by the hook-content product; the empty shape counts 1."""
    lam = _pad_partition(tuple(lam), s)
    value = Fraction(1)
    for i in range(s):
        for j in range(i + 1, s):
            value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert value.denominator == 1
    return value.numerator


# --- span and rank checks ---------------------------------------------------


@lru_cache(maxsize=None)
def rsyt_basis_polynomials(shape, content):
    """The fused Specht polynomials of the row-strict tableaux of the
    given shape and content, paired with their tableaux."""
    shape = check_partition(shape)
    content = check_content(content)
    tabs = enumerate_tableaux(shape, content, "row_strict")
    return tuple((t, fused_specht_combinatorial(t)) for t in tabs)
