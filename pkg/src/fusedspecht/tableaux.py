"""Partitions, Young diagrams, fillings, and their orbit combinatorics.

Entries of a filling are positive integers ("letters"); the content of a
filling is the composition counting how often each letter occurs.  Shapes
and contents are plain tuples of ints; fillings are a small immutable
class.  Rows and columns are 0-indexed internally, 1-indexed in the format
produced for users (entry values are the same either way).

The deterministic enumeration order everywhere is lexicographic in the
column-reading word (read each column top to bottom, columns left to
right); this is a convention of this library, pinned by golden tests.
"""

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import NamedTuple


# --- partitions ---------------------------------------------------------


def is_partition(shape):
    return all(a >= b for a, b in zip(shape, shape[1:])) and all(a > 0 for a in shape)


def check_partition(shape):
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    return tuple(shape)


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n >= 1, each once, in reverse-lexicographic order
    (largest first): e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if n < 1:
        raise ValueError("n must be a positive integer")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def transpose_shape(shape):
    """Conjugate partition (columns become rows)."""
    if not shape:
        return ()
    out = []
    for c in range(shape[0]):
        out.append(sum(1 for r in shape if r > c))
    return tuple(out)


def dominance_geq(a, b):
    """True iff every prefix sum of a is >= the prefix sum of b
    (sequences zero-padded on the right)."""
    ta = sb = 0
    la, lb = list(a), list(b)
    m = max(len(la), len(lb))
    la += [0] * (m - len(la))
    lb += [0] * (m - len(lb))
    for x, y in zip(la, lb):
        ta += x
        sb += y
        if ta < sb:
            return False
    return True


# --- contents (valences) ------------------------------------------------


def check_content(content):
    content = tuple(content)
    if not content or any(s < 1 for s in content):
        raise ValueError(f"content entries must be positive integers: {content}")
    return content


def content_offsets(content):
    """1-indexed block offsets q_k = 1 + s_1 + ... + s_{k-1}."""
    q = [1]
    for s in check_content(content):
        q.append(q[-1] + s)
    return tuple(q[:-1])


def content_sorted(content):
    """The content rearranged decreasingly, as a partition."""
    return tuple(sorted(check_content(content), reverse=True))


# --- fillings ------------------------------------------------------------


class Filling:
    """An assignment of positive integers to the boxes of a Young diagram."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(not r for r in rows):
            raise ValueError("empty rows are not allowed")
        shape = tuple(len(r) for r in rows)
        if not is_partition(shape):
            raise ValueError(f"row lengths must form a partition: {shape}")
        if any(e < 1 for r in rows for e in r):
            raise ValueError("entries must be positive integers")
        self.rows = rows

    @classmethod
    def _raw(cls, rows):
        # internal: rows already a validated tuple of tuples
        f = cls.__new__(cls)
        f.rows = rows
        return f

    # -- structure --

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self):
        return sum(len(r) for r in self.rows)

    def content(self):
        """Counts of 1..max entry; every letter up to the maximum must occur."""
        counts = {}
        for r in self.rows:
            for e in r:
                counts[e] = counts.get(e, 0) + 1
        d = max(counts)
        out = tuple(counts.get(k, 0) for k in range(1, d + 1))
        if any(c == 0 for c in out):
            raise ValueError("filling skips a letter; content is not a composition")
        return out

    def columns(self):
        shape = self.shape
        ncols = shape[0]
        return tuple(
            tuple(self.rows[r][c] for r in range(len(shape)) if shape[r] > c)
            for c in range(ncols)
        )

    def transpose(self):
        return Filling(self.columns())

    def column_word(self):
        """Entries read down each column, columns left to right."""
        return tuple(e for col in self.columns() for e in col)

    # -- predicates --

    def is_numbering(self):
        return sorted(e for r in self.rows for e in r) == list(range(1, self.size + 1))

    def is_row_strict(self):
        """Strictly increasing along rows, weakly increasing down columns."""
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
        for col in self.columns():
            if any(a > b for a, b in zip(col, col[1:])):
                return False
        return True

    def is_column_strict(self):
        """Weakly increasing along rows, strictly increasing down columns."""
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for col in self.columns():
            if any(a >= b for a, b in zip(col, col[1:])):
                return False
        return True

    def is_standard(self):
        return self.is_numbering() and self.is_row_strict() and self.is_column_strict()

    # -- plumbing --

    def __eq__(self, other):
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Filling({self.to_text()!r})"

    # -- text format: rows separated by ';', entries by ',' --

    def to_text(self):
        return ";".join(",".join(str(e) for e in r) for r in self.rows)

    @classmethod
    def from_text(cls, text):
        try:
            rows = [[int(e) for e in row.split(",")] for row in text.split(";")]
        except ValueError as exc:
            raise ValueError(f"cannot parse filling {text!r}") from exc
        return cls(rows)

    def to_lists(self):
        return [list(r) for r in self.rows]


# --- enumeration ---------------------------------------------------------

TABLEAU_CLASSES = ("standard", "row_strict", "column_strict", "all_fillings")


def enumerate_tableaux(shape, content, kind):
    """All fillings of ``shape`` with ``content`` in the given class, in
    column-reading lexicographic order.

    kind is one of 'standard', 'row_strict', 'column_strict',
    'all_fillings'.  For 'standard' the content must be all ones.
    """
    shape = check_partition(shape)
    content = check_content(content)
    if sum(shape) != sum(content):
        raise ValueError(f"size mismatch: |{shape}| != |{content}|")
    if kind not in TABLEAU_CLASSES:
        raise ValueError(f"unknown tableau class {kind!r}")
    if kind == "standard":
        if any(s != 1 for s in content):
            raise ValueError("standard tableaux require content (1,...,1)")
        left_cmp, up_cmp = "lt", "lt"
    elif kind == "row_strict":
        left_cmp, up_cmp = "lt", "le"
    elif kind == "column_strict":
        left_cmp, up_cmp = "le", "lt"
    else:
        left_cmp = up_cmp = None

    nrows = len(shape)
    ncols = shape[0]
    # boxes in column-reading order
    boxes = [(r, c) for c in range(ncols) for r in range(nrows) if shape[r] > c]
    grid = [[0] * shape[r] for r in range(nrows)]
    remaining = list(content)
    out = []

    def ok(r, c, v):
        if c > 0 and len(grid[r]) > c - 1 and grid[r][c - 1]:
            left = grid[r][c - 1]
            if left_cmp == "lt" and not left < v:
                return False
            if left_cmp == "le" and not left <= v:
                return False
        if r > 0 and grid[r - 1][c]:
            up = grid[r - 1][c]
            if up_cmp == "lt" and not up < v:
                return False
            if up_cmp == "le" and not up <= v:
                return False
        return True

    def backtrack(pos):
        if pos == len(boxes):
            out.append(Filling([row[:] for row in grid]))
            return
        r, c = boxes[pos]
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if left_cmp is not None and not ok(r, c, v):
                continue
            grid[r][c] = v
            remaining[v - 1] -= 1
            backtrack(pos + 1)
            remaining[v - 1] += 1
            grid[r][c] = 0

    backtrack(0)
    out.sort(key=lambda f: f.column_word())
    return out

def standard_tableaux(shape):
    return enumerate_tableaux(shape, (1,) * sum(shape), "standard")


@lru_cache(maxsize=None)
def tableau_count(shape, content, kind):
    return len(enumerate_tableaux(shape, content, kind))


# --- the refinement map filling -> numbering -----------------------------


def to_numbering(filling):
    """Injective refinement of a filling with content s into a numbering.

    Each letter k is first relabeled by the offset q_k, then occurrences
    are disambiguated by adding per-letter counters in column-reading
    order.  Row-strict fillings map to standard Young tableaux.
    """
    content = filling.content()
    q = content_offsets(content)
    rows = [[q[e - 1] for e in r] for r in filling.rows]
    seen = {}
    shape = filling.shape
    for c in range(shape[0]):
        for r in range(len(shape)):
            if shape[r] > c:
                v = rows[r][c]
                u = seen.get(v, 0)
                seen[v] = u + 1
                rows[r][c] = v + u
    return Filling(rows)


# --- column-permutation orbits -------------------------------------------


class SignedOrbitElement(NamedTuple):
    filling: Filling
    sign: int          # sign of the shortest column permutation from the base
    tau_signs: tuple   # per letter k = 1..d
    lambdas: tuple     # per letter k = 1..d, a partition (possibly ())


def _distinct_arrangements(values):
    """All distinct orderings of a multiset, deterministically."""
    values = sorted(values)
    out = []

    def backtrack(prefix, pool):
        if not pool:
            out.append(tuple(prefix))
            return
        last = None
        for idx in range(len(pool)):
            v = pool[idx]
            if v == last:
                continue
            last = v
            backtrack(prefix + [v], pool[:idx] + pool[idx + 1:])

    backtrack([], values)
    return out


def _stable_match_sign(src, dst):
    """Sign of the shortest permutation of positions taking the column
    entries ``src`` to ``dst``: occurrences of equal entries are matched
    in order, and the sign is the inversion parity of that matching."""
    positions = {}
    for pos, v in enumerate(src):
        positions.setdefault(v, []).append(pos)
    counters = {v: 0 for v in positions}
    image = [0] * len(src)
    for pos_dst, v in enumerate(dst):
        i = counters[v]
        counters[v] = i + 1
        image[positions[v][i]] = pos_dst
    inv = sum(
        1
        for i in range(len(image))
        for j in range(i + 1, len(image))
        if image[i] > image[j]
    )
    return -1 if inv & 1 else 1


def _row_profile(columns, shape):
    """Rows (1-indexed) of each letter in column-reading order."""
    rows_of = {}
    for c, col in enumerate(columns):
        for r, v in enumerate(col):
            rows_of.setdefault(v, []).append(r + 1)
    return rows_of


def letter_row_data(filling, content=None):
    """(tau_signs, lambdas) for a filling with no repeated entry in a row:
    per letter, the sign of the permutation sorting its row profile
    decreasingly, and the partition obtained from the sorted profile."""
    if content is None:
        content = filling.content()
    rows_of = _row_profile(filling.columns(), filling.shape)
    tau_signs = []
    lambdas = []
    for k, s in enumerate(content, start=1):
        seq = rows_of[k]
        inv = sum(
            1
            for i in range(len(seq))
            for j in range(i + 1, len(seq))
            if seq[i] < seq[j]
        )
        tau_signs.append(-1 if inv & 1 else 1)
        ordered = sorted(seq, reverse=True)
        lam = [ordered[i] - s + i for i in range(s)]
        if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
            raise AssertionError(f"row profile of letter {k} is not a partition: {lam}")
        while lam and lam[-1] == 0:
            lam.pop()
        lambdas.append(tuple(lam))
    return tuple(tau_signs), tuple(lambdas)


def _profile_data(profiles, content):
    """(tau_signs, lambdas) from per-letter row profiles in column-reading
    order; profiles must have pairwise distinct rows per letter."""
    tau_signs = []
    lambdas = []
    for k, s in enumerate(content, start=1):
        seq = profiles[k]
        inv = sum(
            1
            for i in range(len(seq))
            for j in range(i + 1, len(seq))
            if seq[i] < seq[j]
        )
        tau_signs.append(-1 if inv & 1 else 1)
        ordered = sorted(seq, reverse=True)
        lam = [ordered[i] - s + i for i in range(s)]
        while lam and lam[-1] == 0:
            lam.pop()
        lambdas.append(tuple(lam))
    return tuple(tau_signs), tuple(lambdas)


def signed_orbit(filling):
    """Orbit of a filling under independent column permutations.

    Returns (stab_order, elements) where elements runs over the orbit
    members with no repeated entry inside a row, each carrying the sign of
    the shortest column permutation reaching it from ``filling``, its
    per-letter reordering signs, and its per-letter row-profile partitions.
    Elements are sorted by column word.
    """
    content = filling.content()
    cols = filling.columns()
    ncols = len(cols)
    stab_order = 1
    for col in cols:
        mult = {}
        for v in col:
            mult[v] = mult.get(v, 0) + 1
        for m in mult.values():
            stab_order *= factorial(m)

    # per column: the distinct arrangements with their matching signs and
    # per-letter row profiles, computed once and reused across the product
    choices = []
    for col in cols:
        options = []
        for arr in _distinct_arrangements(col):
            prof = {}
            for r, v in enumerate(arr):
                prof.setdefault(v, []).append(r + 1)
            options.append((arr, _stable_match_sign(col, arr), prof))
        choices.append(options)

    shape = filling.shape
    nrows = len(shape)
    elements = []
    row_sets = [set() for _ in range(nrows)]
    chosen = [None] * ncols

    def walk(c, sign):
        if c == ncols:
            profiles = {k: [] for k in range(1, len(content) + 1)}
            for arr, _, prof in chosen:
                for v, rr in prof.items():
                    profiles[v].extend(rr)
            tau_signs, lambdas = _profile_data(profiles, content)
            rows = tuple(
                tuple(chosen[cc][0][r] for cc in range(ncols) if shape[r] > cc)
                for r in range(nrows)
            )
            elements.append(
                SignedOrbitElement(Filling._raw(rows), sign, tau_signs, lambdas)
            )
            return
        for option in choices[c]:
            arr = option[0]
            placed = 0
            ok = True
            for r, v in enumerate(arr):
                if v in row_sets[r]:
                    ok = False
                    break
                row_sets[r].add(v)
                placed += 1
            if ok:
                chosen[c] = option
                walk(c + 1, sign * option[1])
            for r in range(placed):
                row_sets[r].discard(arr[r])

    walk(0, 1)
    elements.sort(key=lambda e: e.filling.column_word())
    return stab_order, elements


def orbit_canonical_rep(filling):
    """The orbit member whose columns are sorted increasingly."""
    return Filling._raw(
        tuple(
            tuple(col[r] for col in map(sorted, filling.columns()) if len(col) > r)
            for r in range(len(filling.shape))
        )
    )


def shortest_permutation_sign(a, b):
    """Sign of the shortest column permutation taking filling ``a`` to
    filling ``b`` (both in the same column-permutation orbit): the product
    over columns of the inversion parity of the in-order matching of equal
    entries.  Signs compose multiplicatively along the orbit."""
    cols_a = a.columns()
    cols_b = b.columns()
    if len(cols_a) != len(cols_b):
        raise ValueError("fillings are not in the same orbit")
    sign = 1
    for ca, cb in zip(cols_a, cols_b):
        if sorted(ca) != sorted(cb):
            raise ValueError("fillings are not in the same orbit")
        sign *= _stable_match_sign(ca, cb)
    return sign


def orbit_size(filling):
    """Number of fillings in the column-permutation orbit."""
    cols = filling.columns()
    total = 1
    for col in cols:
        mult = {}
        for v in col:
            mult[v] = mult.get(v, 0) + 1
        ways = factorial(len(col))
        for m in mult.values():
            ways //= factorial(m)
        total *= ways
    return total


def column_orbit_representatives(shape, content):
    """One filling per column-permutation orbit: entries of each column
    sorted increasingly.  Orbits are indexed by the splitting of the
    content multiset across columns."""
    shape = check_partition(shape)
    content = check_content(content)
    if sum(shape) != sum(content):
        raise ValueError("size mismatch")
    colshape = transpose_shape(shape)
    letters = [k for k, s in enumerate(content, start=1) for _ in range(s)]
    out = []

    def split(rest, cols):
        if not cols:
            if not rest:
                rows_by_col = [sorted(col) for col in split.current]
                nrows = max(len(c) for c in rows_by_col)
                rows = [
                    [col[r] for col in rows_by_col if len(col) > r]
                    for r in range(nrows)
                ]
                out.append(Filling(rows))
            return
        size = cols[0]
        seen = set()
        for idx in combinations(range(len(rest)), size):
            chosen = tuple(sorted(rest[i] for i in idx))
            if chosen in seen:
                continue
            seen.add(chosen)
            remaining = [rest[i] for i in range(len(rest)) if i not in set(idx)]
            split.current.append(chosen)
            split(remaining, cols[1:])
            split.current.pop()

    split.current = []
    split(letters, list(colshape))
    return out


# --- link patterns --------------------------------------------------------


def link_pattern(tableau):
    """The planar pair partition of {1..2N} attached to a standard tableau
    of shape (N, N): first-row entries open arcs, second-row entries close
    the most recent open arc.  Returns pairs (a, b), a < b, sorted by a."""
    shape = tableau.shape
    if len(shape) != 2 or shape[0] != shape[1]:
        raise ValueError(f"link patterns need shape (N, N), got {shape}")
    if not tableau.is_standard():
        raise ValueError("link patterns are defined for standard tableaux")
    openers = set(tableau.rows[0])
    stack = []
    pairs = []
    for pos in range(1, 2 * shape[0] + 1):
        if pos in openers:
            stack.append(pos)
        else:
            if not stack:
                raise AssertionError("closer with no open arc; tableau not standard?")
            pairs.append((stack.pop(), pos))
    pairs.sort()
    return tuple(pairs)


def tableau_from_link_pattern(pairs):
    """Inverse of :func:`link_pattern`."""
    openers = sorted(a for a, _ in pairs)
    closers = sorted(b for _, b in pairs)
    return Filling([openers, closers])


def catalan(n):
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def hecke_dimension(content):
    """Sum over partitions of |content| of the squared number of row-strict
    tableaux: the dimension of the corner algebra attached to ``content``."""
    content = check_content(content)
    n = sum(content)
    return sum(
        tableau_count(lam, content, "row_strict") ** 2 for lam in partitions(n)
    )
