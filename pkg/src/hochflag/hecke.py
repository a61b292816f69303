"""The Iwahori-Hecke algebra of S_n over integer polynomials in q.

Elements are finitely supported linear combinations of the standard basis
{T_w} with coefficients in Z[q], multiplied through the quadratic relation

    T_w * T_{s_i} = T_{w s_i}                     if length(w s_i) > length(w),
                    (q-1) T_w + q T_{w s_i}       otherwise.

Under this normalization the structure coefficient c^w_{u,v}(q), the
coefficient of T_w in T_u * T_v, counts flag configurations over the field
with q = p elements: for flags x, z in relative position w,

    #{flags y : pos(x, y) = u and pos(y, z) = v}  =  c^w_{u,v}(p).

That identity is never assumed here; the test suite pins it against
exhaustive enumeration (see flags.count_middle_flags) for n = 2 and n = 3,
and the q = 1 specialization against plain group multiplication.  In
particular the coefficients of T_{longest} squared count, for each
relative position of a pair of flags, the flags opposite to both members
of the pair.

Internally elements are dicts mapping window tuples to coefficient tuples;
the `HeckeElement` wrapper presents them as `IntPolynomial` values.
"""

from functools import lru_cache

from .errors import ResourceLimitError
from .polynomial import Coeffs, IntPolynomial, padd, peval, pmul, pshift, psub
from .weyl import (
    MAX_ENUMERATION_N,
    Permutation,
    check_window,
    identity,
    longest_element,
    reduced_word,
)

RawTerms = dict[Permutation, Coeffs]


def _right_mul_gen(terms: RawTerms, i: int) -> RawTerms:
    """Multiply a raw element by T_{s_i} on the right; i is 1-indexed."""
    out: RawTerms = {}
    j = i - 1
    for w, c in terms.items():
        v = w[:j] + (w[j + 1], w[j]) + w[j + 2 :]
        if w[j] < w[j + 1]:
            acc = out.get(v)
            out[v] = padd(acc, c) if acc else c
        else:
            qc = pshift(c)
            d = psub(qc, c)
            acc = out.get(w)
            out[w] = padd(acc, d) if acc else d
            acc = out.get(v)
            out[v] = padd(acc, qc) if acc else qc
    return {w: c for w, c in out.items() if c}


def _left_mul_gen(terms: RawTerms, i: int) -> RawTerms:
    """Multiply a raw element by T_{s_i} on the left; i is 1-indexed."""
    out: RawTerms = {}
    for w, c in terms.items():
        v = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
        if w.index(i) < w.index(i + 1):
            acc = out.get(v)
            out[v] = padd(acc, c) if acc else c
        else:
            qc = pshift(c)
            d = psub(qc, c)
            acc = out.get(w)
            out[w] = padd(acc, d) if acc else d
            acc = out.get(v)
            out[v] = padd(acc, qc) if acc else qc
    return {w: c for w, c in out.items() if c}


def _raw_mul(terms1: RawTerms, terms2: RawTerms) -> RawTerms:
    """Bilinear product, expanding the right factor along reduced words."""
    out: RawTerms = {}
    for v, cv in terms2.items():
        prod = terms1
        for i in reduced_word(v):
            prod = _right_mul_gen(prod, i)
        for w, cw in prod.items():
            term = pmul(cw, cv)
            acc = out.get(w)
            out[w] = padd(acc, term) if acc else term
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _t_w0_squared_raw(n: int) -> RawTerms:
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > MAX_ENUMERATION_N:
        raise ResourceLimitError(
            f"T_w0 squared for n = {n} would have {n}! terms; cap is n <= {MAX_ENUMERATION_N}"
        )
    w0 = longest_element(n)
    terms: RawTerms = {w0: (1,)}
    for i in reduced_word(w0):
        terms = _right_mul_gen(terms, i)
    return terms


class HeckeElement:
    """Finitely supported map from permutations to integer polynomials."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[Permutation, IntPolynomial] = {}
        for w, c in (terms or {}).items():
            w = check_window(w)
            if len(w) != n:
                raise ValueError(f"term {w} does not live in S_{n}")
            if not isinstance(c, IntPolynomial):
                c = IntPolynomial(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls.basis_element(identity(n))

    @classmethod
    def basis_element(cls, w, coefficient: IntPolynomial | None = None) -> "HeckeElement":
        w = check_window(w)
        return cls(len(w), {w: coefficient if coefficient is not None else IntPolynomial.one()})

    @property
    def terms(self) -> dict[Permutation, IntPolynomial]:
        return dict(self._terms)

    def coefficient(self, w) -> IntPolynomial:
        return self._terms.get(tuple(w), IntPolynomial.zero())

    def support(self) -> list[Permutation]:
        return sorted(self._terms)

    def _raw(self) -> RawTerms:
        return {w: c.coefficients for w, c in self._terms.items()}

    @classmethod
    def _from_raw(cls, n: int, raw: RawTerms) -> "HeckeElement":
        el = cls.__new__(cls)
        el.n = n
        el._terms = {w: IntPolynomial(c) for w, c in raw.items() if c}
        return el

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return f"HeckeElement({self.n}, 0)"
        body = " + ".join(f"({c})*T{list(w)}" for w, c in sorted(self._terms.items()))
        return f"HeckeElement({self.n}, {body})"


def mul_by_generator(h: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication by T_{s_i} via the quadratic relation."""
    if not 1 <= i <= h.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{h.n - 1}")
    return HeckeElement._from_raw(h.n, _right_mul_gen(h._raw(), i))


def mul(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    if h1.n != h2.n:
        raise ValueError(f"size mismatch: S_{h1.n} vs S_{h2.n}")
    return HeckeElement._from_raw(h1.n, _raw_mul(h1._raw(), h2._raw()))


def structure_coefficient(u, v, w) -> IntPolynomial:
    """Coefficient c^w_{u,v}(q) of T_w in T_u * T_v (zero if absent)."""
    u, v, w = check_window(u), check_window(v), check_window(w)
    if not len(u) == len(v) == len(w):
        raise ValueError("permutations must share one rank")
    terms: RawTerms = {u: (1,)}
    for i in reduced_word(v):
        terms = _right_mul_gen(terms, i)
    return IntPolynomial(terms.get(w, ()))


def t_w0_squared(n: int) -> HeckeElement:
    """T_{w0} * T_{w0}: its coefficient at sigma counts the flags opposite
    to both members of a flag pair in relative position sigma."""
    return HeckeElement._from_raw(n, _t_w0_squared_raw(n))


def specialize(h: HeckeElement, q0: int) -> dict[Permutation, int]:
    """Evaluate every coefficient at q0, keeping zeros out of the map."""
    out = {}
    for w, c in h._terms.items():
        value = c.evaluate(q0)
        if value:
            out[w] = value
    return out


def specialize_full(h: HeckeElement, q0: int) -> dict[Permutation, int]:
    """Like specialize, but reports a value (possibly 0) for every
    permutation of S_n."""
    from .weyl import all_permutations

    out = {w: 0 for w in all_permutations(h.n)}
    for w, c in h._terms.items():
        out[w] = c.evaluate(q0)
    return out


def _raw_specialize(terms: RawTerms, q0: int) -> dict[Permutation, int]:
    return {w: peval(c, q0) for w, c in terms.items()}
