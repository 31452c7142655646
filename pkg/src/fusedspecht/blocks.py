"""Conformal-block basis functions and Temperley-Lieb structure.

A FactoredFunction is the closed form ``poly * prod_{i<j} (x_j-x_i)^{m_ij/2}``
with integer matrix m (doubled exponents, so half-integer powers never
leave the representation) and an exact polynomial part.  The canonical
form pulls every difference-binomial factor of the polynomial into the
exponent matrix, which makes equality and zero-testing exact.

Block basis functions are indexed by column-strict tableaux of shape
(N, N); each stores, besides its function of d variables, the lift to 2N
variables on which the diagram-algebra actions are computed.
"""

from fractions import Fraction
from functools import lru_cache

from .polyalg import (
    MPoly,
    antisymmetrize,
    perm_transposition,
    poly_rank,
    project_eval,
    solve_in_span,
)
from .specht import (
    _divide_block_differences,
    fused_specht_limit,
    specht_poly,
)
from .tableaux import (
    check_content,
    enumerate_tableaux,
    to_numbering,
)

__all__ = [
    "FactoredFunction",
    "BlockElement",
    "block_unit",
    "block_general",
    "block_basis",
    "mobius_check",
    "tau_action",
    "valenced_action",
    "action_matrix",
    "tl_generator_matrices",
    "tau_matrices",
    "symmetrizer_matrix",
    "block_rank",
]


def _pair_key(i, j):
    return (i, j) if i < j else (j, i)


class FactoredFunction:
    """poly(x) * prod_{i<j} (x_j - x_i)^{half[(i,j)]/2}, exact and canonical."""

    __slots__ = ("nvars", "half", "poly")

    def __init__(self, nvars, half=None, poly=None, _canonical=False):
        self.nvars = nvars
        self.half = dict(half) if half else {}
        self.poly = poly if poly is not None else MPoly.const(nvars, 1)
        if self.poly.nvars != nvars:
            raise ValueError("polynomial arity does not match")
        for (i, j), m in list(self.half.items()):
            if not 0 <= i < j < nvars:
                raise ValueError(f"bad variable pair {(i, j)}")
            if m == 0:
                del self.half[(i, j)]
        if not _canonical:
            self._canonicalize()

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {}, MPoly.const(nvars, c), _canonical=True)

    @classmethod
    def from_poly(cls, poly):
        return cls(poly.nvars, {}, poly)

    def _canonicalize(self):
        if self.poly.is_zero():
            self.half = {}
            return
        from .backend import binomial_divide

        for i in range(self.nvars):
            for j in range(i + 1, self.nvars):
                while True:
                    q = binomial_divide(self.poly.terms, i, j)
                    if q is None:
                        break
                    self.poly = MPoly._raw(self.nvars, q)
                    self.half[(i, j)] = self.half.get((i, j), 0) + 2
                    if self.half[(i, j)] == 0:
                        del self.half[(i, j)]

    def is_zero(self):
        return self.poly.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FactoredFunction):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (
            self.nvars == other.nvars
            and self.half == other.half
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.half.items()), self.poly))

    def shifted(self, pair_shifts):
        """Multiply by prod (x_j-x_i)^{delta/2} for {(i,j): delta}."""
        half = dict(self.half)
        for (i, j), delta in pair_shifts.items():
            if i > j:
                raise ValueError("pairs must be ordered")
            m = half.get((i, j), 0) + delta
            if m:
                half[(i, j)] = m
            elif (i, j) in half:
                del half[(i, j)]
        return FactoredFunction(self.nvars, half, self.poly, _canonical=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFunction(
                self.nvars, self.half, self.poly * other, _canonical=True
            )
        if isinstance(other, MPoly):
            return FactoredFunction(self.nvars, self.half, self.poly * other)
        if not isinstance(other, FactoredFunction):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        half = dict(self.half)
        for k, m in other.half.items():
            half[k] = half.get(k, 0) + m
            if not half[k]:
                del half[k]
        # canonical parts have no binomial factors, so the product has none
        return FactoredFunction(
            self.nvars, half, self.poly * other.poly, _canonical=True
        )

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __add__(self, other):
        if not isinstance(other, FactoredFunction):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        pairs = set(self.half) | set(other.half)
        base = {}
        p1, p2 = self.poly, other.poly
        for k in sorted(pairs):
            m1 = self.half.get(k, 0)
            m2 = other.half.get(k, 0)
            if (m1 - m2) % 2:
                raise ValueError(
                    "summands lie in different half-integer classes at pair "
                    f"{k}: exponents {m1}/2 and {m2}/2"
                )
            m = min(m1, m2)
            if m:
                base[k] = m
            i, j = k
            binom = MPoly.variable(j, self.nvars) - MPoly.variable(i, self.nvars)
            if m1 > m:
                p1 = p1 * binom ** ((m1 - m) // 2)
            if m2 > m:
                p2 = p2 * binom ** ((m2 - m) // 2)
        return FactoredFunction(self.nvars, base, p1 + p2)

    def __sub__(self, other):
        return self + (-other)

    def derivative(self, i):
        """Exact partial derivative; stays in the closed form."""
        touching = sorted(k for k in self.half if i in k)
        n = self.nvars
        binoms = {
            k: MPoly.variable(k[1], n) - MPoly.variable(k[0], n) for k in touching
        }
        # common factor: every touching pair exponent drops by one unit
        poly = self.poly.derivative(i)
        for k in touching:
            poly = poly * binoms[k]
        for k in touching:
            a, b = k
            m = self.half[k]
            sgn = 1 if i == b else -1
            term = self.poly * Fraction(sgn * m, 2)
            for kk in touching:
                if kk != k:
                    term = term * binoms[kk]
            poly = poly + term
        half = dict(self.half)
        for k in touching:
            half[k] = half[k] - 2
            if not half[k]:
                del half[k]
        return FactoredFunction(n, half, poly)

    def square(self):
        """The square, with integer pair exponents."""
        half = {k: 2 * m for k, m in self.half.items()}
        return FactoredFunction(self.nvars, half, self.poly * self.poly, _canonical=True)

    def evaluate_float(self, point):
        """Float value at an ascending chamber point (all x_j - x_i > 0)."""
        value = self.poly.evaluate_float(point)
        for (i, j), m in self.half.items():
            base = float(point[j]) - float(point[i])
            if base <= 0:
                raise ValueError("point must be strictly ascending")
            value *= base ** (m / 2.0)
        return value

    def evaluate_square_exact(self, point):
        """Exact rational value of the square at a rational point."""
        value = self.poly.evaluate(point) ** 2
        for (i, j), m in self.half.items():
            base = Fraction(point[j]) - Fraction(point[i])
            if base == 0:
                raise ZeroDivisionError("point collides two variables")
            value *= base ** m
        return value

    def to_string(self):
        if self.is_zero():
            return "0"
        factors = " ".join(
            f"(x{j + 1}-x{i + 1})^({m}/2)" for (i, j), m in sorted(self.half.items())
        )
        body = f"[{self.poly.to_string()}]"
        return f"{body} * {factors}" if factors else body

    def to_json(self):
        return {
            "nvars": self.nvars,
            "half_exponents": [[i + 1, j + 1, m] for (i, j), m in sorted(self.half.items())],
            "poly": self.poly.to_json_terms(),
        }

    def __repr__(self):
        return f"FactoredFunction({self.to_string()})"


# --- block basis ------------------------------------------------------------


class BlockElement:
    """A block basis function together with its polynomial lift."""

    __slots__ = ("tableau", "content", "upstairs", "fused", "function")

    def __init__(self, tableau, content, upstairs, fused, function):
        self.tableau = tableau
        self.content = content
        self.upstairs = upstairs      # MPoly in sum(content) variables
        self.fused = fused            # MPoly in len(content) variables
        self.function = function      # FactoredFunction in len(content) variables

    def __repr__(self):
        label = self.tableau.to_text() if self.tableau is not None else "?"
        return f"BlockElement({label}, content={self.content})"


def _prefactor_half(content):
    d = len(content)
    return {
        (i, j): -content[i] * content[j]
        for i in range(d)
        for j in range(i + 1, d)
    }


def _assemble_block(tableau, content, upstairs):
    fused = project_eval(
        _divide_block_differences(upstairs, content), content
    )
    function = FactoredFunction(len(content), _prefactor_half(content), fused)
    return BlockElement(tableau, content, upstairs, fused, function)


def block_general(tableau, content):
    """Block basis function of a column-strict tableau of shape (N, N):
    the pair-power prefactor times the fused Specht polynomial of the
    transpose, with the 2N-variable lift kept for diagram actions."""
    content = check_content(content)
    n = sum(content)
    if n % 2:
        raise ValueError("total valence must be even")
    shape = tableau.shape
    if len(shape) != 2 or shape[0] != shape[1] or 2 * shape[0] != n:
        raise ValueError(f"tableau shape {shape} does not match content size {n}")
    if not tableau.is_column_strict():
        raise ValueError("block functions are indexed by column-strict tableaux")
    if tuple(tableau.content()) != content:
        raise ValueError("tableau content does not match")
    transpose = tableau.transpose()
    upstairs = antisymmetrize(content, specht_poly(to_numbering(transpose)))
    return _assemble_block(tableau, content, upstairs)


def block_unit(tableau):
    """Unit-valence block of a standard tableau of shape (N, N)."""
    if not tableau.is_standard():
        raise ValueError("unit-valence blocks are indexed by standard tableaux")
    return block_general(tableau, (1,) * tableau.size)


@lru_cache(maxsize=None)
def _basis_tableaux(content):
    n = sum(content)
    N = n // 2
    return tuple(enumerate_tableaux((N, N), content, "column_strict"))


def block_basis(content):
    content = check_content(content)
    return [block_general(t, content) for t in _basis_tableaux(content)]


def block_rank(blocks):
    """Rank of block functions over their common prefactor: the rank of
    the fused polynomial parts."""
    return poly_rank([b.fused for b in blocks])


# --- diagram-algebra actions -------------------------------------------------


def _sign_twisted_word_action(word, poly, n):
    """Apply the sign-twisted image of a word in the cap generators
    e_k = 1 - t_k to an upstairs polynomial: each letter acts as 1 + t_k."""
    out = poly
    for k in reversed(word):
        if not 1 <= k <= n - 1:
            raise ValueError(f"generator index {k} out of range")
        t = perm_transposition(k - 1, k, n)
        out = out + out.act(t)
    return out


def tau_action(k, block):
    """Transposition generator on a unit-valence block: acts on the lift
    by the sign-twisted permutation (variable swap and a global sign)."""
    n = sum(block.content)
    if any(s != 1 for s in block.content):
        raise ValueError("tau_action is defined on unit-valence blocks")
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range")
    t = perm_transposition(k - 1, k, n)
    upstairs = -block.upstairs.act(t)
    return _assemble_block(None, block.content, upstairs)


def valenced_action(word, block):
    """Word in the cap generators acting through the lift: sign-twist the
    word, apply it upstairs, reproject with the block antisymmetrizer."""
    n = sum(block.content)
    moved = _sign_twisted_word_action(word, block.upstairs, n)
    upstairs = antisymmetrize(block.content, moved)
    return _assemble_block(None, block.content, upstairs)


@lru_cache(maxsize=None)
def _basis_fused(content):
    return [block_general(t, content).fused for t in _basis_tableaux(content)]


def decompose(block, content):
    """Coordinates of a block element in the block basis of ``content``."""
    coords = solve_in_span(_basis_fused(content), block.fused)
    if coords is None:
        raise ValueError("block element is outside the basis span")
    return coords


def action_matrix(word, content):
    """Exact matrix (columns indexed by the block basis) of a word in the
    cap generators; the empty word gives the valenced unit."""
    content = check_content(content)
    basis = block_basis(content)
    cols = [decompose(valenced_action(tuple(word), b), content) for b in basis]
    dim = len(basis)
    return [[cols[c][r] for c in range(dim)] for r in range(dim)]


def tl_generator_matrices(n):
    """Matrices of the cap generators e_1..e_{n-1} on the unit-valence
    block basis of n points."""
    content = (1,) * n
    return [action_matrix((k,), content) for k in range(1, n)]


def tau_matrices(n):
    """Matrices of the transposition generators on the unit-valence basis."""
    content = (1,) * n
    basis = block_basis(content)
    out = []
    for k in range(1, n):
        cols = [decompose(tau_action(k, b), content) for b in basis]
        dim = len(basis)
        out.append([[cols[c][r] for c in range(dim)] for r in range(dim)])
    return out


def symmetrizer_matrix(content):
    """Matrix of the valenced symmetrizer (the product of in-block
    cap-killing idempotents) on the unit-valence block basis: realized on
    lifts by the block antisymmetrizer."""
    content = check_content(content)
    n = sum(content)
    unit = (1,) * n
    basis = block_basis(unit)
    cols = []
    for b in basis:
        upstairs = antisymmetrize(content, b.upstairs)
        cols.append(decompose(_assemble_block(None, unit, upstairs), unit))
    dim = len(basis)
    return [[cols[c][r] for c in range(dim)] for r in range(dim)]


# --- matrix helpers (exact, small) ------------------------------------------


def mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    inner = len(b)
    return [
        [sum(a[r][k] * b[k][c] for k in range(inner)) for c in range(m)]
        for r in range(n)
    ]


def mat_eq(a, b):
    return all(
        all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_identity(n):
    return [[1 if r == c else 0 for c in range(n)] for r in range(n)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_is_zero(a):
    return all(all(x == 0 for x in row) for row in a)


# --- covariance ---------------------------------------------------------------


def mobius_check(block, coeffs, point=None):
    """Exact covariance check for a fractional-linear map (a, b, c, d)
    with ad - bc > 0.

    The identity is verified on squares (both sides are rational
    functions), plus a positivity spot check of the unsquared polynomial
    part at one rational chamber point where the map preserves the
    ordering.
    """
    a, b, c, d = (Fraction(v) for v in coeffs)
    det = a * d - b * c
    if det <= 0:
        raise ValueError("map must be orientation preserving (ad - bc > 0)")
    content = block.content
    dvars = len(content)
    if point is None:
        point = tuple(Fraction(i + 1) for i in range(dvars))
    point = tuple(Fraction(p) for p in point)
    ws = [c * p + d for p in point]
    if any(w <= 0 for w in ws):
        raise ValueError("chamber point leaves the domain of the map")
    images = [(a * p + b) / (c * p + d) for p in point]
    if any(x >= y for x, y in zip(images, images[1:])):
        raise ValueError("map does not preserve the ordering at the point")

    sq = block.function.square()
    q = sq.poly
    n_q, degs = q.compose_mobius(a, b, c, d)

    # integer pair exponents of the square: M_ij = sq.half[(i,j)] / 2
    rowsum = [0] * dvars
    total_m = 0
    for (i, j), m in sq.half.items():
        assert m % 2 == 0
        rowsum[i] += m // 2
        rowsum[j] += m // 2
        total_m += m // 2
    exps = [degs[i] + rowsum[i] + content[i] ** 2 for i in range(dvars)]
    if sum(s * s for s in content) % 2:
        raise AssertionError("squared covariance exponent is not an integer")
    det_exp = total_m + sum(s * s for s in content) // 2
    # identity: N_q * det**(sum M_ij + sum s_i^2 / 2) == q * prod w_i**exps[i]
    lhs = n_q
    rhs = q
    if det_exp >= 0:
        lhs = lhs * (det ** det_exp)
    else:
        rhs = rhs * (det ** (-det_exp))
    for i in range(dvars):
        w = c * MPoly.variable(i, dvars) + MPoly.const(dvars, d)
        if exps[i] >= 0:
            rhs = rhs * w ** exps[i]
        else:
            lhs = lhs * w ** (-exps[i])
    if lhs != rhs:
        return False

    # positivity spot check: unsquared polynomial parts agree in sign
    base_sign = block.function.poly.evaluate(point)
    image_sign = block.function.poly.evaluate(images)
    if base_sign == 0 or image_sign == 0:
        raise ValueError("degenerate spot-check point")
    return (base_sign > 0) == (image_sign > 0)
