"""Hochschild cohomology of a finite-dimensional algebra given by an
integer multiplication table.

The algebra comes with a distinguished complete set of orthogonal
idempotents whose span S is a product of copies of the ground field, and
whose complement J (the span of the remaining basis elements) must be a
two-sided ideal with a vertex-graded basis: every non-idempotent basis
element b satisfies e_t b = b = b e_s for a single target vertex t and
source vertex s.  Quiver algebras with relations presented by their path
basis all look like this.

Cohomology is computed from the cochain complex relative to S:

    C^k = S-bimodule maps from the k-fold tensor power of J over S to A.

A basis of the tensor power is given by composable words (b_k, ..., b_1),
composable meaning source(b_{m+1}) = target(b_m); a cochain is determined
by one element of e_t A e_s per word, where t and s are the target and
source of the whole word.  C^0 is the sum of the diagonal components
e_i A e_i.  The differential is the usual alternating sum

    (df)(b_{k+1} x ... x b_1) = b_{k+1} f(b_k x ... x b_1)
        + sum_m (-1)^(k+1-m) f(... x b_{m+1} b_m x ...)
        + (-1)^(k+1) f(b_{k+1} x ... x b_2) b_1,

with interior products expanded inside J (ideal closure guarantees they
stay there).  Since S is separable this computes the same cohomology as
the full bar complex; `bar_hh_dimensions` implements the normalized bar
complex over the ground field up to a small degree as an independent
cross-check.

Ranks are taken exactly: fraction-free integer elimination on sparse rows,
with a second elimination modulo a large prime asserted to agree.
Dimensions are therefore dimensions over the rationals; passing to any
field of characteristic zero changes nothing.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from pathlib import Path

from .errors import PresentationError, ResourceLimitError

#: Large primes for the secondary modular rank checks.
_RANK_CHECK_PRIMES = (1073741789, 2147483647)

#: Default ceiling on the dimension of any single cochain space.
DEFAULT_COCHAIN_CAP = 10**5

Element = dict[int, int]  # basis index -> integer coefficient


@dataclass(frozen=True)
class AlgebraPresentation:
    """Finite-dimensional algebra with chosen idempotents and graded basis.

    table[i][j] lists (k, c) pairs meaning basis_i * basis_j contains
    c * basis_k.  source[i] and target[i] are vertex numbers (positions in
    the idempotent list) for non-idempotent i, and None for idempotents.
    """

    dim: int
    basis: tuple[str, ...]
    idempotents: tuple[int, ...]
    source: tuple[int | None, ...]
    target: tuple[int | None, ...]
    table: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.idempotents)

    @property
    def arrows(self) -> tuple[int, ...]:
        """Non-idempotent basis indices, in basis order."""
        idem = set(self.idempotents)
        return tuple(i for i in range(self.dim) if i not in idem)

    def product(self, i: int, j: int) -> Element:
        return {k: c for k, c in self.table[i][j] if c}

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for i, xc in x.items():
            if not xc:
                continue
            row = self.table[i]
            for j, yc in y.items():
                if not yc:
                    continue
                f = xc * yc
                for k, c in row[j]:
                    v = out.get(k, 0) + f * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def unit(self) -> Element:
        return {i: 1 for i in self.idempotents}


def make_presentation(dim, basis, idempotents, source, target, table) -> AlgebraPresentation:
    """Structural construction with shape checks (semantics are checked
    separately by `validate`)."""
    basis = tuple(str(b) for b in basis)
    if len(basis) != dim:
        raise PresentationError(f"dim is {dim} but {len(basis)} basis labels given")
    if len(set(basis)) != dim:
        raise PresentationError("basis labels must be distinct")
    idempotents = tuple(int(i) for i in idempotents)
    if not idempotents:
        raise PresentationError("at least one idempotent is required")
    if len(set(idempotents)) != len(idempotents):
        raise PresentationError("idempotent indices must be distinct")
    for i in idempotents:
        if not 0 <= i < dim:
            raise PresentationError(f"idempotent index {i} out of range")
    idem_set = set(idempotents)
    nv = len(idempotents)
    src = [None] * dim
    tgt = [None] * dim
    source = {int(k): int(v) for k, v in dict(source).items()}
    target = {int(k): int(v) for k, v in dict(target).items()}
    for name, mapping, slot in (("source", source, src), ("target", target, tgt)):
        for k, v in mapping.items():
            if not 0 <= k < dim or k in idem_set:
                raise PresentationError(f"{name} given for invalid index {k}")
            if not 0 <= v < nv:
                raise PresentationError(f"{name}[{k}] = {v} is not a vertex (0..{nv - 1})")
            slot[k] = v
        for k in range(dim):
            if k not in idem_set and slot[k] is None:
                raise PresentationError(f"non-idempotent index {k} is missing a {name} vertex")
    rows = []
    if len(table) != dim:
        raise PresentationError("table must have one row per basis element")
    for i, row in enumerate(table):
        if len(row) != dim:
            raise PresentationError(f"table row {i} must have {dim} entries")
        entries = []
        for j, cell in enumerate(row):
            clean = []
            seen = set()
            for pair in cell:
                k, c = int(pair[0]), int(pair[1])
                if not 0 <= k < dim:
                    raise PresentationError(f"table[{i}][{j}] refers to invalid index {k}")
                if k in seen:
                    raise PresentationError(f"table[{i}][{j}] repeats index {k}")
                seen.add(k)
                if c:
                    clean.append((k, c))
            entries.append(tuple(clean))
        rows.append(tuple(entries))
    return AlgebraPresentation(dim, basis, idempotents, tuple(src), tuple(tgt), tuple(rows))


# ---------------------------------------------------------------------------
# built-in presentations


def builtin(name: str) -> AlgebraPresentation:
    """Built-in presentations: ground-field, semisimple-2, sl2-catO.

    sl2-catO is the 5-dimensional endomorphism algebra of a minimal
    projective generator of the principal block of category O for sl_2:
    two vertices, arrows a: 1 -> 2 and b: 2 -> 1, the loop c = a*b at
    vertex 2, and all other products of arrows zero.
    """
    if name == "ground-field":
        return make_presentation(1, ["e1"], [0], {}, {}, [[[(0, 1)]]])
    if name == "semisimple-2":
        return make_presentation(
            2,
            ["e1", "e2"],
            [0, 1],
            {},
            {},
            [[[(0, 1)], []], [[], [(1, 1)]]],
        )
    if name == "sl2-catO":
        e1, e2, a, b, c = range(5)
        table = [[[] for _ in range(5)] for _ in range(5)]
        table[e1][e1] = [(e1, 1)]
        table[e2][e2] = [(e2, 1)]
        table[e2][a] = [(a, 1)]
        table[a][e1] = [(a, 1)]
        table[e1][b] = [(b, 1)]
        table[b][e2] = [(b, 1)]
        table[e2][c] = [(c, 1)]
        table[c][e2] = [(c, 1)]
        table[a][b] = [(c, 1)]
        return make_presentation(
            5,
            ["e1", "e2", "a", "b", "c"],
            [e1, e2],
            {a: 0, b: 1, c: 1},
            {a: 1, b: 0, c: 1},
            table,
        )
    raise ValueError(f"unknown builtin algebra {name!r}")


BUILTIN_NAMES = ("ground-field", "semisimple-2", "sl2-catO")


# ---------------------------------------------------------------------------
# validation


def validate(algebra: AlgebraPresentation) -> list[str]:
    """Check the semantic invariants, returning a list of violations
    (empty means the presentation is usable)."""
    violations = []
    A = algebra
    labels = A.basis
    idem = A.idempotents
    idem_set = set(idem)

    for i in idem:
        for j in idem:
            expected = {i: 1} if i == j else {}
            got = A.product(i, j)
            if got != expected:
                violations.append(
                    f"idempotent orthogonality fails for ({labels[i]}, {labels[j]}): "
                    f"product is {got}, expected {expected}"
                )

    unit = A.unit()
    for i in range(A.dim):
        x = {i: 1}
        if A.multiply(unit, x) != x or A.multiply(x, unit) != x:
            violations.append(f"sum of idempotents does not act as the unit on {labels[i]}")

    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.product(i, j)
            for k in range(A.dim):
                left = A.multiply(ij, {k: 1})
                right = A.multiply({i: 1}, A.product(j, k))
                if left != right:
                    violations.append(
                        f"associativity fails on ({labels[i]}, {labels[j]}, {labels[k]}): "
                        f"{left} != {right}"
                    )

    for bidx in A.arrows:
        et = {idem[A.target[bidx]]: 1}
        es = {idem[A.source[bidx]]: 1}
        x = {bidx: 1}
        if A.multiply(et, x) != x:
            violations.append(
                f"target idempotent {labels[idem[A.target[bidx]]]} does not fix {labels[bidx]}"
            )
        if A.multiply(x, es) != x:
            violations.append(
                f"source idempotent {labels[idem[A.source[bidx]]]} does not fix {labels[bidx]}"
            )

    for bidx in A.arrows:
        for j in range(A.dim):
            for prod, desc in (
                (A.product(bidx, j), f"{labels[bidx]}*{labels[j]}"),
                (A.product(j, bidx), f"{labels[j]}*{labels[bidx]}"),
            ):
                bad = [k for k in prod if k in idem_set]
                if bad:
                    violations.append(
                        f"ideal closure fails: {desc} has idempotent component "
                        f"{[labels[k] for k in bad]}"
                    )

    return violations


def require_valid(algebra: AlgebraPresentation) -> AlgebraPresentation:
    violations = validate(algebra)
    if violations:
        raise PresentationError("invalid presentation:\n" + "\n".join(violations))
    return algebra


# ---------------------------------------------------------------------------
# cochain spaces of the relative complex


@lru_cache(maxsize=None)
def _hom_basis_table(A: AlgebraPresentation) -> dict[tuple[int, int], tuple[int, ...]]:
    """Basis indices of e_t A e_s for every vertex pair (t, s)."""
    out: dict[tuple[int, int], list[int]] = {
        (t, s): [] for t in range(A.vertex_count) for s in range(A.vertex_count)
    }
    for v, i in enumerate(A.idempotents):
        out[(v, v)].append(i)
    for i in A.arrows:
        out[(A.target[i], A.source[i])].append(i)
    return {k: tuple(v) for k, v in out.items()}


@lru_cache(maxsize=None)
def cochain_words(A: AlgebraPresentation, k: int) -> tuple[tuple[int, ...], ...]:
    """Composable words (b_k, ..., b_1) of arrows, left factor first."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return ((),)
    if k == 1:
        return tuple((b,) for b in A.arrows)
    shorter = cochain_words(A, k - 1)
    out = []
    for word in shorter:
        t = A.target[word[0]]
        for b in A.arrows:
            if A.source[b] == t:
                out.append((b,) + word)
    return tuple(out)


def _word_target_source(A: AlgebraPresentation, word: tuple[int, ...]) -> tuple[int, int]:
    return A.target[word[0]], A.source[word[-1]]


@lru_cache(maxsize=None)
def cochain_basis(A: AlgebraPresentation, k: int):
    """Basis of C^k as (word, target basis index) pairs; for k = 0 the
    'word' slot holds the vertex."""
    hom = _hom_basis_table(A)
    if k == 0:
        return tuple((v, x) for v in range(A.vertex_count) for x in hom[(v, v)])
    out = []
    for word in cochain_words(A, k):
        for x in hom[_word_target_source(A, word)]:
            out.append((word, x))
    return tuple(out)


def cochain_dimension(A: AlgebraPresentation, k: int) -> int:
    return len(cochain_basis(A, k))


def _apply_relative_differential(A, k: int, word, x: int, wprime) -> Element:
    """(d f)(wprime) for the basis cochain f = x * delta_word in C^k."""
    out: Element = {}

    def add(el: Element, sign: int) -> None:
        for i, c in el.items():
            v = out.get(i, 0) + sign * c
            if v:
                out[i] = v
            elif i in out:
                del out[i]

    if k == 0:
        vertex = word
        (b,) = wprime
        if A.source[b] == vertex:
            add(A.product(b, x), 1)
        if A.target[b] == vertex:
            add(A.product(x, b), -1)
        return out

    if wprime[1:] == word:
        add(A.product(wprime[0], x), 1)
    for j in range(k):  # interior slot between storage positions j, j+1
        sign = -1 if j % 2 == 0 else 1  # (-1)^(j+1)
        prod = A.product(wprime[j], wprime[j + 1])
        for y, lam in prod.items():
            if wprime[:j] + (y,) + wprime[j + 2 :] == word:
                add({x: lam}, sign)
    if wprime[:-1] == word:
        sign = -1 if k % 2 == 0 else 1  # (-1)^(k+1)
        add(A.product(x, wprime[-1]), sign)
    return out


def differential_matrix(A: AlgebraPresentation, k: int) -> list[list[int]]:
    """Matrix of d^k: C^k -> C^(k+1) in the word bases, rows indexed by
    the C^(k+1) basis."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    dom = cochain_basis(A, k)
    cod = cochain_basis(A, k + 1)
    cod_index = {pair: r for r, pair in enumerate(cod)}
    hom = _hom_basis_table(A)
    words_out = cochain_words(A, k + 1)
    matrix = [[0] * len(dom) for _ in range(len(cod))]
    for col, (word, x) in enumerate(dom):
        for wprime in words_out:
            value = _apply_relative_differential(A, k, word, x, wprime)
            if not value:
                continue
            ts = _word_target_source(A, wprime)
            for i, c in value.items():
                if i not in hom[ts]:
                    raise AssertionError("differential image escaped its hom component")
                matrix[cod_index[(wprime, i)]][col] = c
    return matrix


# ---------------------------------------------------------------------------
# exact ranks


def _sparse_rows(matrix) -> list[dict[int, int]]:
    rows = []
    for r in matrix:
        row = {j: v for j, v in enumerate(r) if v}
        if row:
            rows.append(row)
    return rows


def _reduce_row(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def rank_fraction_free(matrix) -> int:
    """Rank over the rationals by fraction-free elimination on sparse
    integer rows, with gcd reduction to contain coefficient growth."""
    rows = [_reduce_row(r) for r in _sparse_rows(matrix)]
    rank = 0
    while rows:
        ridx = min(range(len(rows)), key=lambda t: len(rows[t]))
        pivot_row = rows.pop(ridx)
        col = min(pivot_row, key=lambda j: (abs(pivot_row[j]), j))
        pv = pivot_row[col]
        rank += 1
        nxt = []
        for row in rows:
            f = row.get(col)
            if not f:
                nxt.append(row)
                continue
            new: dict[int, int] = {}
            for j in row.keys() | pivot_row.keys():
                if j == col:
                    continue
                v = pv * row.get(j, 0) - f * pivot_row.get(j, 0)
                if v:
                    new[j] = v
            if new:
                nxt.append(_reduce_row(new))
        rows = nxt
    return rank


def rank_mod_prime(matrix, p: int) -> int:
    """Rank of the matrix reduced modulo p, same sparse elimination."""
    rows = []
    for r in _sparse_rows(matrix):
        row = {j: v % p for j, v in r.items() if v % p}
        if row:
            rows.append(row)
    rank = 0
    while rows:
        ridx = min(range(len(rows)), key=lambda t: len(rows[t]))
        pivot_row = rows.pop(ridx)
        col = min(pivot_row)
        inv = pow(pivot_row[col], -1, p)
        pivot_row = {j: v * inv % p for j, v in pivot_row.items()}
        rank += 1
        nxt = []
        for row in rows:
            f = row.get(col)
            if not f:
                nxt.append(row)
                continue
            new: dict[int, int] = {}
            for j in row.keys() | pivot_row.keys():
                if j == col:
                    continue
                v = (row.get(j, 0) - f * pivot_row.get(j, 0)) % p
                if v:
                    new[j] = v
            if new:
                nxt.append(new)
        rows = nxt
    return rank


def exact_rank(matrix) -> int:
    """Fraction-free integer rank, cross-checked modulo a large prime."""
    r = rank_fraction_free(matrix)
    r2 = rank_mod_prime(matrix, _RANK_CHECK_PRIMES[0])
    if r != r2:
        raise AssertionError(
            f"rank disagreement: {r} over Q vs {r2} mod {_RANK_CHECK_PRIMES[0]}"
        )
    return r


def _compose_is_zero(outer: list[list[int]], inner: list[list[int]]) -> bool:
    """Check outer @ inner == 0 using sparse rows of both factors."""
    inner_rows = [{j: v for j, v in enumerate(r) if v} for r in inner]
    for row in outer:
        acc: dict[int, int] = {}
        for m, c in enumerate(row):
            if not c:
                continue
            for j, v in inner_rows[m].items():
                acc[j] = acc.get(j, 0) + c * v
        if any(acc.values()):
            return False
    return True


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class HHReport:
    """Cohomology dimensions with the cochain data behind them."""

    dims: tuple[int, ...]
    max_degree: int
    cochain_dims: tuple[int, ...]
    ranks: tuple[int, ...]


def hh_dimensions(
    A: AlgebraPresentation,
    max_degree: int,
    cap: int = DEFAULT_COCHAIN_CAP,
) -> HHReport:
    """dim HH^0 .. dim HH^max_degree by exact ranks of the relative
    complex; every composite d(k+1) o d(k) is checked to vanish."""
    if max_degree < 0:
        raise ValueError("max degree must be nonnegative")
    require_valid(A)
    dims = []
    for k in range(max_degree + 2):
        d = cochain_dimension(A, k)
        if d > cap:
            raise ResourceLimitError(f"cochain space in degree {k} has dimension {d} > cap {cap}")
        dims.append(d)
    matrices = [differential_matrix(A, k) for k in range(max_degree + 1)]
    for k in range(max_degree):
        if not _compose_is_zero(matrices[k + 1], matrices[k]):
            raise AssertionError(f"d^{k + 1} o d^{k} != 0")
    ranks = [exact_rank(m) for m in matrices]
    hh = []
    for k in range(max_degree + 1):
        below = ranks[k - 1] if k else 0
        value = dims[k] - ranks[k] - below
        if value < 0:
            raise AssertionError("negative cohomology dimension, ranks are inconsistent")
        hh.append(value)
    return HHReport(tuple(hh), max_degree, tuple(dims[: max_degree + 1]), tuple(ranks))


def center_dimension(A: AlgebraPresentation) -> int:
    """Dimension of the center, from the commutation equations x*b = b*x
    for every basis element b (an independent check on HH^0)."""
    rows = []
    for j in range(A.dim):
        for k in range(A.dim):
            row = []
            for i in range(A.dim):
                cij = dict(A.table[i][j]).get(k, 0)
                cji = dict(A.table[j][i]).get(k, 0)
                row.append(cij - cji)
            rows.append(row)
    return A.dim - exact_rank(rows)


# ---------------------------------------------------------------------------
# normalized bar complex over the ground field (cross-check oracle)


def _bar_basis_indices(A: AlgebraPresentation) -> tuple[int, ...]:
    """Basis of A modulo the unit: all indices except the first idempotent
    (whose class is expressible through the unit and the others)."""
    dropped = A.idempotents[0]
    return tuple(i for i in range(A.dim) if i != dropped)


def _bar_project(A: AlgebraPresentation, x: Element) -> Element:
    """Rewrite x modulo nothing so its dropped-idempotent coefficient is 0
    (subtract that multiple of the unit), then restrict to kept indices."""
    dropped = A.idempotents[0]
    lam = x.get(dropped, 0)
    if not lam:
        return {i: c for i, c in x.items() if c}
    out = dict(x)
    for e in A.idempotents:
        v = out.get(e, 0) - lam
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def bar_hh_dimensions(
    A: AlgebraPresentation,
    max_degree: int = 3,
    cap: int = DEFAULT_COCHAIN_CAP,
) -> tuple[int, ...]:
    """Cohomology dimensions from the normalized bar complex over the
    ground field.  Independent of the relative complex; meant for small
    max_degree because cochain spaces grow like dim * (dim - 1)^k."""
    if max_degree < 0:
        raise ValueError("degree must be nonnegative")
    require_valid(A)
    kept = _bar_basis_indices(A)

    def bar_words(k: int):
        if k == 0:
            return ((),)
        words = [()]
        for _ in range(k):
            words = [w + (b,) for w in words for b in kept]
        return tuple(words)

    def bar_dim(k: int) -> int:
        return A.dim * (len(kept) ** k) if kept else (A.dim if k == 0 else 0)

    for k in range(max_degree + 2):
        if bar_dim(k) > cap:
            raise ResourceLimitError(f"bar cochain space in degree {k} exceeds cap {cap}")

    def bar_matrix(k: int) -> list[list[int]]:
        dom_words = bar_words(k)
        cod_words = bar_words(k + 1)
        dom = [(w, x) for w in dom_words for x in range(A.dim)]
        cod_index = {
            (w, x): r for r, (w, x) in enumerate((w, x) for w in cod_words for x in range(A.dim))
        }
        matrix = [[0] * len(dom) for _ in range(len(cod_words) * A.dim)]
        for col, (word, x) in enumerate(dom):
            xel = {x: 1}
            for wprime in cod_words:
                acc: Element = {}

                def add(el: Element, sign: int) -> None:
                    for i, c in el.items():
                        v = acc.get(i, 0) + sign * c
                        if v:
                            acc[i] = v
                        elif i in acc:
                            del acc[i]

                if wprime[1:] == word:
                    add(A.multiply({wprime[0]: 1}, xel), 1)
                for j in range(k):
                    sign = -1 if j % 2 == 0 else 1
                    prod = _bar_project(A, A.product(wprime[j], wprime[j + 1]))
                    for y, lam in prod.items():
                        if wprime[:j] + (y,) + wprime[j + 2 :] == word:
                            add({x: lam}, sign)
                if wprime[:-1] == word:
                    sign = -1 if k % 2 == 0 else 1
                    add(A.multiply(xel, {wprime[-1]: 1}), sign)
                for i, c in acc.items():
                    matrix[cod_index[(wprime, i)]][col] = c
        return matrix

    matrices = [bar_matrix(k) for k in range(max_degree + 1)]
    dims = [bar_dim(k) for k in range(max_degree + 1)]
    ranks = [exact_rank(m) for m in matrices]
    out = []
    for k in range(max_degree + 1):
        below = ranks[k - 1] if k else 0
        out.append(dims[k] - ranks[k] - below)
    return tuple(out)


# ---------------------------------------------------------------------------
# serialization


def to_json_dict(A: AlgebraPresentation) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.basis),
        "idempotents": list(A.idempotents),
        "source": {str(i): A.source[i] for i in A.arrows},
        "target": {str(i): A.target[i] for i in A.arrows},
        "table": [[[[k, c] for k, c in cell] for cell in row] for row in A.table],
    }


def from_json_dict(data: dict) -> AlgebraPresentation:
    try:
        return make_presentation(
            int(data["dim"]),
            data["basis"],
            data["idempotents"],
            data.get("source", {}),
            data.get("target", {}),
            data["table"],
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise PresentationError(f"malformed presentation data: {exc}") from exc


def load_presentation(path) -> AlgebraPresentation:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise PresentationError("presentation file must hold a JSON object")
    return from_json_dict(data)


def save_presentation(A: AlgebraPresentation, path) -> None:
    Path(path).write_text(json.dumps(to_json_dict(A), indent=2, sort_keys=True) + "\n")
