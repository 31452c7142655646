"""Exact sparse multivariate polynomials over the rationals.

MPoly stores a map from exponent tuples to nonzero coefficients (Python
ints where possible, Fractions otherwise -- both exact and mutually
comparable).  The canonical term order for display and leading-term
queries is graded lexicographic.  All arithmetic goes through the kernel
selected in :mod:`fusedspecht.backend`.

The module also provides the symmetric-group action on variables, the
block (anti)symmetrizers attached to a composition of the variable count,
exact division, the block-collapse evaluation map, and exact rank
computation for families of polynomials.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from .backend import (
    binomial_divide,
    poly_add,
    poly_axpy,
    poly_mul,
    poly_permute,
    poly_scale,
    project_blocks,
)


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(exps):
    """Sort key under which the graded-lex largest monomial is maximal."""
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: _norm_coeff(c) for k, c in terms.items() if c}

    @classmethod
    def _raw(cls, nvars, terms):
        # internal: terms already normalized, no copy
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = _norm_coeff(c)
        if not c:
            return cls.zero(nvars)
        return cls._raw(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        k = [0] * nvars
        k[i] = 1
        return cls._raw(nvars, {tuple(k): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    def _check_arity(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        self._check_arity(other)
        return MPoly._raw(self.nvars, poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, poly_scale(self.terms, -1))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly._raw(self.nvars, poly_scale(self.terms, _norm_coeff(other)))
        self._check_arity(other)
        return MPoly._raw(self.nvars, poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def leading_term(self):
        """Graded-lex leading (exponent tuple, coefficient)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        k = max(self.terms, key=grlex_key)
        return k, self.terms[k]

    def act(self, perm):
        """Permute variables: x_i -> x_{perm[i]} (0-indexed images)."""
        if len(perm) != self.nvars:
            raise ValueError("permutation degree does not match variable count")
        return MPoly._raw(self.nvars, poly_permute(self.terms, tuple(perm)))

    def derivative(self, i):
        out = {}
        for k, c in self.terms.items():
            e = k[i]
            if e:
                nk = list(k)
                nk[i] = e - 1
                out[tuple(nk)] = _norm_coeff(c * e)
        return MPoly._raw(self.nvars, out)

    def evaluate(self, point):
        """Exact evaluation at a tuple of rational values."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        total = Fraction(0)
        for k, c in self.terms.items():
            v = Fraction(c)
            for i, e in enumerate(k):
                if e:
                    v *= Fraction(point[i]) ** e
            total += v
        return total

    def evaluate_float(self, point):
        total = 0.0
        for k, c in self.terms.items():
            v = float(c)
            for i, e in enumerate(k):
                if e:
                    v *= float(point[i]) ** e
            total += v
        return total

    def subs_affine(self, a, b):
        """Substitute x_i -> a*x_i + b simultaneously in every variable."""
        shift = MPoly.const(self.nvars, b)
        images = [a * MPoly.variable(i, self.nvars) + shift for i in range(self.nvars)]
        out = MPoly.zero(self.nvars)
        for k, c in self.terms.items():
            term = MPoly.const(self.nvars, c)
            for i, e in enumerate(k):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    def compose_mobius(self, a, b, c, d):
        """Return (N, degs) with self((a x_i + b)/(c x_i + d)) equal to
        N / prod_i (c x_i + d)**degs[i], where degs[i] is the maximal
        exponent of x_i in self.  Exact; used for covariance checks."""
        n = self.nvars
        degs = [0] * n
        for k in self.terms:
            for i, e in enumerate(k):
                if e > degs[i]:
                    degs[i] = e
        num = [a * MPoly.variable(i, n) + MPoly.const(n, b) for i in range(n)]
        den = [c * MPoly.variable(i, n) + MPoly.const(n, d) for i in range(n)]
        # cache powers per variable
        numpow = [[MPoly.const(n, 1)] for _ in range(n)]
        denpow = [[MPoly.const(n, 1)] for _ in range(n)]
        for i in range(n):
            for _ in range(degs[i]):
                numpow[i].append(numpow[i][-1] * num[i])
                denpow[i].append(denpow[i][-1] * den[i])
        out = MPoly.zero(n)
        for k, cf in self.terms.items():
            term = MPoly.const(n, cf)
            for i, e in enumerate(k):
                term = term * numpow[i][e]
                term = term * denpow[i][degs[i] - e]
            out = out + term
        return out, tuple(degs)

    # --- serialization -------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def to_string(self):
        """Canonical string, e.g. ``1/2 * x1 - 1/2 * x3``; ``0`` for zero."""
        if not self.terms:
            return "0"
        pieces = []
        for k, c in self.sorted_terms():
            mono = " ".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(k)
                if e
            )
            cf = Fraction(c)
            sign = "-" if cf < 0 else "+"
            cf = abs(cf)
            if not mono:
                body = str(cf)
            elif cf == 1:
                body = mono
            else:
                body = f"{cf} * {mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json_terms(self):
        """Order-stable JSON-friendly term list: [[exponents, "coeff"], ...]."""
        return [[list(k), str(Fraction(c))] for k, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, nvars, items):
        return cls(nvars, {tuple(k): Fraction(c) for k, c in items})

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.to_string()!r})"


# --- permutations ------------------------------------------------------


def perm_identity(n):
    return tuple(range(n))

def perm_transposition(i, j, n):
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def perm_compose(g, h):
    """(g o h)(i) = g(h(i))."""
    return tuple(g[h[i]] for i in range(len(h)))


def perm_inverse(g):
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi] = i
    return tuple(inv)


def perm_sign(p):
    inv = 0
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv & 1 else 1


def act(perm, p):
    """Group action of a permutation on an MPoly (alias of MPoly.act)."""
    return p.act(perm)


# --- classical constructions ------------------------------------------


def vandermonde(indices, nvars):
    """prod_{j<k} (x_{i_j} - x_{i_k}) over the given 0-indexed sequence.

    A single index gives the constant 1; repeated indices are rejected.
    """
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("repeated variable index in Vandermonde factor")
    out = MPoly.const(nvars, 1)
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            out = out * (MPoly.variable(indices[a], nvars) - MPoly.variable(indices[b], nvars))
    return out


def block_starts(content):
    """0-indexed start offsets of the consecutive variable blocks of a
    composition, with a final sentinel: (0, s1, s1+s2, ..., n)."""
    starts = [0]
    for s in content:
        if s < 1:
            raise ValueError("composition entries must be positive")
        starts.append(starts[-1] + s)
    return tuple(starts)


def _block_transpositions(start, size, n):
    return [perm_transposition(start + t, start + t + 1, n) for t in range(size - 1)]


def _apply_block_average(p, start, size, signed):
    """Average of p over the symmetric group of one variable block,
    with signs when ``signed``.  Skips the sum when p is already
    (anti)symmetric in the block."""
    n = p.nvars
    if size == 1:
        return p
    want = -1 if signed else 1
    if all(
        poly_permute(p.terms, t) == poly_scale(p.terms, want)
        for t in _block_transpositions(start, size, n)
    ):
        return p
    acc = {}
    rest = list(range(start + size, n))
    head = list(range(start))
    for img in permutations(range(start, start + size)):
        perm = tuple(head + list(img) + rest)
        sgn = perm_sign(img) if signed else 1
        poly_axpy(acc, poly_permute(p.terms, perm), sgn)
    return MPoly._raw(n, poly_scale(acc, Fraction(1, factorial(size))))


def antisymmetrize(content, p):
    """Image of p under the product of block antisymmetrizer idempotents
    attached to the composition ``content`` of p.nvars."""
    starts = block_starts(content)
    if starts[-1] != p.nvars:
        raise ValueError("composition does not sum to the variable count")
    for k, s in enumerate(content):
        p = _apply_block_average(p, starts[k], s, signed=True)
    return p


def symmetrize(content, p):
    """Image of p under the product of block symmetrizer idempotents."""
    starts = block_starts(content)
    if starts[-1] != p.nvars:
        raise ValueError("composition does not sum to the variable count")
    for k, s in enumerate(content):
        p = _apply_block_average(p, starts[k], s, signed=False)
    return p


def exact_divide(p, q):
    """Exact quotient p / q; raises ExactDivisionError if q does not
    divide p.  Products of difference binomials take a fast path."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check_arity(q)
    if len(q.terms) == 1:
        # monomial divisor
        (kq, cq), = q.terms.items()
        out = {}
        for k, c in p.terms.items():
            nk = tuple(a - b for a, b in zip(k, kq))
            if any(e < 0 for e in nk):
                raise ExactDivisionError("monomial division failure", remainder=p)
            out[nk] = _norm_coeff(Fraction(c, 1) / cq)
        return MPoly(p.nvars, out)
    pair = _as_difference_binomial(q)
    if pair is not None:
        i, j, scale = pair
        quot = binomial_divide(p.terms, i, j)
        if quot is None:
            raise ExactDivisionError(
                f"(x{j + 1} - x{i + 1}) does not divide the polynomial", remainder=p
            )
        out = MPoly._raw(p.nvars, quot)
        return out if scale == 1 else out * scale
    return _general_divide(p, q)


def _as_difference_binomial(q):
    """Detect c*(x_j - x_i) with i < j; returns (i, j, 1/c) or None."""
    if len(q.terms) != 2:
        return None
    (k1, c1), (k2, c2) = q.terms.items()
    if sum(k1) != 1 or sum(k2) != 1 or c1 != -c2:
        return None
    i1 = k1.index(1)
    i2 = k2.index(1)
    if i1 > i2:
        i1, i2, c1, c2 = i2, i1, c2, c1
    # q = c1*x_{i1} + c2*x_{i2} = c2*(x_{i2} - x_{i1})
    return i1, i2, _norm_coeff(Fraction(1, 1) / c2)


def _general_divide(p, q):
    """Sparse graded-lex division by a single divisor; exact or error."""
    kq, cq = q.leading_term()
    rem = dict(p.terms)
    out = {}
    while rem:
        k = max(rem, key=grlex_key)
        c = rem[k]
        nk = tuple(a - b for a, b in zip(k, kq))
        if any(e < 0 for e in nk):
            raise ExactDivisionError(
                "division leaves a remainder", remainder=MPoly(p.nvars, rem)
            )
        qc = _norm_coeff(Fraction(c, 1) / cq)
        acc = out.get(nk)
        out[nk] = qc if acc is None else acc + qc
        if not out[nk]:
            del out[nk]
        poly_axpy(rem, poly_mul({nk: qc}, q.terms), -1)
    return MPoly(p.nvars, out)


def project_eval(p, content):
    """Evaluate the variables of each consecutive block of ``content`` at a
    single new variable: the result lives in len(content) variables."""
    starts = block_starts(content)
    if starts[-1] != p.nvars:
        raise ValueError("composition does not sum to the variable count")
    return MPoly._raw(len(content), project_blocks(p.terms, starts, len(content)))


# --- exact linear algebra ----------------------------------------------


def poly_rank(polys):
    """Rank over Q of a family of same-arity polynomials (coefficient
    vectors indexed by monomials), by incremental row reduction."""
    pivots = {}  # leading monomial -> reduced row (dict with coeff 1 there)
    rank = 0
    for p in polys:
        row = dict(p.terms) if isinstance(p, MPoly) else dict(p)
        while row:
            lead = max(row, key=grlex_key)
            piv = pivots.get(lead)
            if piv is None:
                c = row[lead]
                inv = Fraction(1, 1) / c
                pivots[lead] = {k: _norm_coeff(v * inv) for k, v in row.items()}
                rank += 1
                break
            poly_axpy(row, piv, -row[lead])
        # empty row: linearly dependent, contributes nothing
    return rank


def solve_in_span(basis, target):
    """Coordinates of ``target`` in the span of ``basis`` (lists of MPoly),
    or None if it lies outside.  Exact dense elimination over Q."""
    monomials = set()
    for p in basis:
        monomials.update(p.terms)
    monomials.update(target.terms)
    monomials = sorted(monomials, key=grlex_key, reverse=True)
    index = {m: r for r, m in enumerate(monomials)}
    rows = len(monomials)
    cols = len(basis)
    mat = [[Fraction(0)] * (cols + 1) for _ in range(rows)]
    for c, p in enumerate(basis):
        for k, v in p.terms.items():
            mat[index[k]][c] = Fraction(v)
    for k, v in target.terms.items():
        mat[index[k]][cols] = Fraction(v)
    # row reduce
    pivot_cols = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    coords = [Fraction(0)] * cols
    for i in range(rows):
        rhs = mat[i][cols]
        pc = next((c for c in range(cols) if mat[i][c]), None)
        if pc is None:
            if rhs:
                return None
        else:
            coords[pc] = rhs
    return coords
