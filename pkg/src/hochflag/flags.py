"""Brute-force ground truth: flags and unipotent matrices over prime fields.

A complete flag in an n-dimensional space over F_p is stored as an
invertible n x n matrix whose first i columns span the i-th subspace.
Scalars are plain integers in [0, p); the modulus is checked to be prime
whenever a flag or unipotent matrix is constructed.

Every flag has a unique canonical matrix, obtained by the column
operations that do not change the flag (scaling a column, adding a
multiple of an earlier column to a later one): in the canonical matrix
column j has its bottom-most nonzero entry equal to 1, in a row distinct
from the pivot rows of earlier columns, and zeros in those earlier pivot
rows.  Counting the free entries shows there are exactly [n]_p! canonical
matrices, the q-factorial evaluated at p, which is the number of flags.

Relative position of two flags is the permutation read off the rank table
d_ij = dim(F_i meet G_j) via unit jumps of d_ij - d_{i-1,j} - d_{i,j-1} +
d_{i-1,j-1}; ranks are computed by exact Gaussian elimination.

The counting routines at the bottom enumerate the configuration spaces
that the symbolic routes must reproduce: flags in prescribed relative
position to two fixed flags, and triples (a, b, u) of two flags and a
unipotent matrix with b opposite both a and u*a.
"""

from functools import lru_cache
from itertools import product as _product

from .errors import ResourceLimitError
from .weyl import (
    Permutation,
    all_permutations,
    check_window,
    identity,
    length,
    length_generating_function,
    longest_element,
)

#: Default ceiling on the size of any single enumeration.
DEFAULT_CAP = 10**6

_POSITION_CACHE_SIZE = 1 << 18


@lru_cache(maxsize=None)
def require_prime(p: int) -> int:
    """Return p if prime (trial division; moduli stay below 2^31)."""
    if not isinstance(p, int) or p < 2 or p >= 2**31:
        raise ValueError(f"modulus must be a prime below 2^31, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus {p} is not prime (divisible by {d})")
        d += 1
    return p


def _canonical_columns(columns, p: int) -> tuple[tuple[int, ...], ...]:
    n = len(columns)
    cols = [[x % p for x in c] for c in columns]
    if any(len(c) != n for c in cols):
        raise ValueError("flag matrix must be square")
    pivots: list[tuple[int, int]] = []  # (pivot row, column index), in column order
    for j in range(n):
        col = cols[j]
        # clearing in column order never disturbs already-cleared pivot rows,
        # because canonical earlier columns vanish in still-earlier pivot rows
        for r, jj in pivots:
            f = col[r]
            if f:
                prev = cols[jj]
                for k in range(n):
                    col[k] = (col[k] - f * prev[k]) % p
        row = -1
        for k in range(n - 1, -1, -1):
            if col[k]:
                row = k
                break
        if row < 0:
            raise ValueError("columns are linearly dependent, not a flag")
        if col[row] != 1:
            inv = pow(col[row], -1, p)
            for k in range(n):
                col[k] = col[k] * inv % p
        pivots.append((row, j))
    return tuple(tuple(c) for c in cols)


class Flag:
    """A complete flag, held in canonical matrix form.

    ``columns[j]`` is the (j+1)-st basis vector; the i-th subspace is the
    span of ``columns[:i]``.
    """

    __slots__ = ("columns", "p", "_hash")

    def __init__(self, columns, p: int):
        require_prime(p)
        object.__setattr__(self, "columns", _canonical_columns([tuple(c) for c in columns], p))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_hash", hash((self.columns, p)))

    @classmethod
    def _from_canonical(cls, columns: tuple[tuple[int, ...], ...], p: int) -> "Flag":
        f = cls.__new__(cls)
        object.__setattr__(f, "columns", columns)
        object.__setattr__(f, "p", p)
        object.__setattr__(f, "_hash", hash((columns, p)))
        return f

    def __setattr__(self, *args):
        raise AttributeError("Flag objects are immutable")

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row-major view of the canonical matrix."""
        n = self.n
        return tuple(tuple(self.columns[j][i] for j in range(n)) for i in range(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Flag):
            return NotImplemented
        return self.p == other.p and self.columns == other.columns

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rows = ", ".join(str(list(r)) for r in self.matrix)
        return f"Flag([{rows}] mod {self.p})"


class UnipotentMatrix:
    """Upper triangular n x n matrix over F_p with unit diagonal."""

    __slots__ = ("rows", "p", "_hash")

    def __init__(self, rows, p: int):
        require_prime(p)
        r = tuple(tuple(x % p for x in row) for row in rows)
        n = len(r)
        for i, row in enumerate(r):
            if len(row) != n:
                raise ValueError("unipotent matrix must be square")
            if row[i] != 1:
                raise ValueError("unipotent matrix needs a unit diagonal")
            if any(row[j] for j in range(i)):
                raise ValueError("unipotent matrix must be upper triangular")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_hash", hash((r, p)))

    def __setattr__(self, *args):
        raise AttributeError("UnipotentMatrix objects are immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, flag: Flag) -> Flag:
        """Left action on a flag: multiply each basis column."""
        if flag.p != self.p or flag.n != self.n:
            raise ValueError("dimension or field mismatch")
        p = self.p
        n = self.n
        cols = []
        for col in flag.columns:
            cols.append(
                tuple(sum(self.rows[i][k] * col[k] for k in range(i, n)) % p for i in range(n))
            )
        return Flag(cols, p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnipotentMatrix):
            return NotImplemented
        return self.p == other.p and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"UnipotentMatrix({[list(r) for r in self.rows]} mod {self.p})"


def standard_flag(n: int, p: int) -> Flag:
    """The flag of coordinate subspaces span(e_1, ..., e_i)."""
    return canonical_cell_point(identity(n), p)


def canonical_cell_point(w, p: int) -> Flag:
    """The permutation-matrix flag with columns e_{w(1)}, ..., e_{w(n)}.

    Its relative position from the standard flag is exactly w, so it is a
    convenient base point of the w-cell.
    """
    w = check_window(w)
    require_prime(p)
    n = len(w)
    cols = tuple(tuple(1 if i == w[j] - 1 else 0 for i in range(n)) for j in range(n))
    return Flag._from_canonical(cols, p)


def flag_count(n: int, p: int) -> int:
    """Number of complete flags over F_p: the q-factorial [n]_p!."""
    return length_generating_function(n).evaluate(p)


@lru_cache(maxsize=32)
def enumerate_flags(n: int, p: int, cap: int = DEFAULT_CAP) -> tuple[Flag, ...]:
    """All flags, in a deterministic order, directly in canonical form.

    Enumeration walks the canonical matrices: a permutation assigns pivot
    rows to columns, and the entries above each pivot in non-pivot rows
    run over F_p.
    """
    require_prime(p)
    total = flag_count(n, p)
    if total > cap:
        raise ResourceLimitError(f"flag enumeration needs {total} flags, cap is {cap}")
    out = []
    for w in all_permutations(n):
        pivot_rows = [x - 1 for x in w]
        free: list[tuple[int, int]] = []  # (column j, row k) of free entries
        for j in range(n):
            earlier = set(pivot_rows[:j])
            free.extend((j, k) for k in range(pivot_rows[j]) if k not in earlier)
        base = [[0] * n for _ in range(n)]
        for j in range(n):
            base[j][pivot_rows[j]] = 1
        if not free:
            out.append(Flag._from_canonical(tuple(tuple(c) for c in base), p))
            continue
        for values in _product(range(p), repeat=len(free)):
            cols = [list(c) for c in base]
            for (j, k), v in zip(free, values):
                cols[j][k] = v
            out.append(Flag._from_canonical(tuple(tuple(c) for c in cols), p))
    if len(out) != total:
        raise AssertionError(f"flag enumeration produced {len(out)} != {total}")
    return tuple(out)


def enumerate_unipotent(n: int, p: int, cap: int = DEFAULT_CAP) -> tuple[UnipotentMatrix, ...]:
    """All unit upper-triangular matrices, in a deterministic order."""
    require_prime(p)
    k = n * (n - 1) // 2
    total = p**k
    if total > cap:
        raise ResourceLimitError(f"unipotent enumeration needs {total} matrices, cap is {cap}")
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for values in _product(range(p), repeat=k):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(slots, values):
            rows[i][j] = v
        out.append(UnipotentMatrix(rows, p))
    return tuple(out)


def _insert_echelon(rows: list, vec: list, p: int) -> bool:
    """Reduce vec against echelon rows (sorted by pivot); insert if new.

    Returns True when the rank grew.  Rows are (pivot index, vector) with
    unit pivot and zeros before the pivot.
    """
    for piv, r in rows:
        f = vec[piv]
        if f:
            for k in range(piv, len(vec)):
                vec[k] = (vec[k] - f * r[k]) % p
    for piv in range(len(vec)):
        if vec[piv]:
            inv = pow(vec[piv], -1, p)
            if inv != 1:
                for k in range(piv, len(vec)):
                    vec[k] = vec[k] * inv % p
            rows.append((piv, vec))
            rows.sort(key=lambda t: t[0])
            return True
    return False


def _relative_position_uncached(f1: Flag, f2: Flag) -> Permutation:
    n = f1.n
    p = f1.p
    # ranks[i][j] = rank of [first i columns of f1 | first j columns of f2]
    ranks = [[0] * (n + 1) for _ in range(n + 1)]
    base: list = []
    for i in range(n + 1):
        if i:
            grew = _insert_echelon(base, list(f1.columns[i - 1]), p)
            if not grew:
                raise AssertionError("flag columns must be independent")
        rows = list(base)
        r = i
        for j in range(1, n + 1):
            if _insert_echelon(rows, list(f2.columns[j - 1]), p):
                r += 1
            ranks[i][j] = r
        ranks[i][0] = i
    def d(a: int, b: int) -> int:
        return a + b - ranks[a][b]

    window = [0] * n
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if d(i, j) - d(i - 1, j) - d(i, j - 1) + d(i - 1, j - 1) == 1:
                window[j - 1] = i
                break
    return check_window(window)


@lru_cache(maxsize=_POSITION_CACHE_SIZE)
def relative_position(f1: Flag, f2: Flag) -> Permutation:
    """The permutation w with w(j) = i exactly at the unit jumps of the
    intersection-dimension table d_ij = dim(f1_i meet f2_j)."""
    if not isinstance(f1, Flag) or not isinstance(f2, Flag):
        raise ValueError("relative_position expects two Flag values")
    if f1.n != f2.n or f1.p != f2.p:
        raise ValueError("dimension or field mismatch")
    return _relative_position_uncached(f1, f2)


def count_middle_flags(x1: Flag, x2: Flag, u, v, cap: int = DEFAULT_CAP) -> int:
    """#{flags y : pos(x1, y) = u and pos(y, x2) = v}, by full enumeration."""
    if x1.n != x2.n or x1.p != x2.p:
        raise ValueError("dimension or field mismatch")
    u = check_window(u)
    v = check_window(v)
    if len(u) != x1.n or len(v) != x1.n:
        raise ValueError("positions must match the flag rank")
    count = 0
    for y in enumerate_flags(x1.n, x1.p, cap):
        if relative_position(x1, y) == u and relative_position(y, x2) == v:
            count += 1
    return count


def _chunked_sum(fn, items, threads: int) -> int:
    """Deterministic sum of fn over items, optionally fanned out to a
    thread pool in contiguous chunks."""
    if threads <= 1 or len(items) < 2 * threads:
        return sum(fn(x) for x in items)
    from concurrent.futures import ThreadPoolExecutor

    size = (len(items) + threads - 1) // threads
    chunks = [items[k : k + size] for k in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = pool.map(lambda ch: sum(fn(x) for x in ch), chunks)
        return sum(partials)


def count_stratum_triples(
    n: int,
    p: int,
    w,
    level: str = "orbit",
    cap: int = DEFAULT_CAP,
    threads: int = 1,
) -> int:
    """Exact number of triples (a, b, u) over F_p with a in the w-cell,
    b opposite a, and b opposite u*a.

    level="full" enumerates all triples outright and is allowed only for
    n = 2.  level="orbit" fixes the canonical point a_w of the w-cell,
    sums over unipotent u the count of flags opposite to both a_w and
    u*a_w, and multiplies by the cell size p^length(w); translating a
    triple by a unipotent v (as (va, vb, v u v^-1)) preserves the
    conditions, so the two levels agree.
    """
    w = check_window(w)
    if len(w) != n:
        raise ValueError(f"stratum label {w} does not live in S_{n}")
    require_prime(p)
    w0 = longest_element(n)
    n_unipotent = p ** length(w0)
    n_flags = flag_count(n, p)

    if level == "full":
        if n != 2:
            raise ValueError("full triple enumeration is restricted to n = 2")
        budget = n_flags * n_flags * n_unipotent
        if budget > cap:
            raise ResourceLimitError(f"full enumeration needs {budget} triples, cap is {cap}")
        base = standard_flag(n, p)
        flags = enumerate_flags(n, p, cap)
        unipotents = enumerate_unipotent(n, p, cap)
        cell = [a for a in flags if relative_position(base, a) == w]

        def triples_for(a: Flag) -> int:
            total = 0
            for u in unipotents:
                ua = u.apply(a)
                for b in flags:
                    if relative_position(a, b) == w0 and relative_position(b, ua) == w0:
                        total += 1
            return total

        return _chunked_sum(triples_for, cell, threads)

    if level == "orbit":
        budget = n_unipotent * n_flags
        if budget > cap:
            raise ResourceLimitError(
                f"orbit enumeration needs {n_unipotent} x {n_flags} = {budget} position checks, "
                f"cap is {cap}"
            )
        a_w = canonical_cell_point(w, p)
        flags = enumerate_flags(n, p, cap)
        unipotents = enumerate_unipotent(n, p, cap)
        # flags opposite a_w; only these can satisfy both conditions
        opposite = [y for y in flags if relative_position(a_w, y) == w0]

        def opposite_both(u: UnipotentMatrix) -> int:
            ua = u.apply(a_w)
            return sum(1 for y in opposite if relative_position(y, ua) == w0)

        total = _chunked_sum(opposite_both, unipotents, threads)
        return p ** length(w) * total

    raise ValueError(f"unknown level {level!r}; use 'full' or 'orbit'")


def count_all_triples(n: int, p: int, cap: int = DEFAULT_CAP, threads: int = 1) -> int:
    """Total number of triples (a, b, u) with b opposite both a and u*a,
    by direct triple enumeration (restricted to n = 2)."""
    if n != 2:
        raise ValueError("full triple enumeration is restricted to n = 2")
    require_prime(p)
    w0 = longest_element(n)
    flags = enumerate_flags(n, p, cap)
    unipotents = enumerate_unipotent(n, p, cap)
    budget = len(flags) * len(flags) * len(unipotents)
    if budget > cap:
        raise ResourceLimitError(f"full enumeration needs {budget} triples, cap is {cap}")

    def triples_for(a: Flag) -> int:
        total = 0
        for u in unipotents:
            ua = u.apply(a)
            for b in flags:
                if relative_position(a, b) == w0 and relative_position(b, ua) == w0:
                    total += 1
        return total

    return _chunked_sum(triples_for, list(flags), threads)
