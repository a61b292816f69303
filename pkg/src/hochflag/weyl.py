"""Symmetric group combinatorics.

Permutations are tuples in one-line notation with 1-indexed values:
``w[i-1]`` is the image w(i), for positions i = 1..n.  They index Schubert
cells, relative positions of flags, and the standard basis of the Hecke
algebra.  Composition is function composition: ``compose(u, v)`` maps i to
u(v(i)).

>>> compose((2, 3, 1), (2, 3, 1))
(3, 1, 2)
>>> length((3, 2, 1))
3
>>> reduced_word((3, 2, 1))
(1, 2, 1)
"""

from itertools import permutations as _itertools_permutations

from .errors import ResourceLimitError
from .polynomial import IntPolynomial, pmul

Permutation = tuple[int, ...]

#: Enumeration guard; |S_8| = 40320 is the largest group handled in full.
MAX_ENUMERATION_N = 8


def check_window(w) -> Permutation:
    """Validate one-line notation, returning the tuple form."""
    t = tuple(w)
    n = len(t)
    if sorted(t) != list(range(1, n + 1)):
        raise ValueError(f"{t!r} is not a permutation of 1..{n}")
    return t


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("rank must be at least 1")
    return tuple(range(1, n + 1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Function composition: result(i) = u(v(i))."""
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w: Permutation) -> int:
    """Number of inversions, i.e. pairs i < j with w(i) > w(j)."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("rank must be at least 1")
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order on windows.

    >>> all_permutations(2)
    [(1, 2), (2, 1)]
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > MAX_ENUMERATION_N:
        raise ResourceLimitError(
            f"refusing to enumerate S_{n} ({n}! elements); cap is n <= {MAX_ENUMERATION_N}"
        )
    return list(_itertools_permutations(range(1, n + 1)))


def apply_right_generator(w: Permutation, i: int) -> Permutation:
    """w * s_i: swap the entries at positions i and i+1 (1-indexed)."""
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(w) - 1}")
    j = i - 1
    return w[:j] + (w[j + 1], w[j]) + w[j + 2 :]


def apply_left_generator(w: Permutation, i: int) -> Permutation:
    """s_i * w: swap the values i and i+1 wherever they occur."""
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(w) - 1}")
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def has_right_descent(w: Permutation, i: int) -> bool:
    """True when multiplying by s_i on the right shortens w."""
    return w[i - 1] > w[i]


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word for w: indices i_1..i_k with w = s_{i_1} ... s_{i_k}.

    Greedy descent-stripping: repeatedly remove the smallest right descent.
    The result has exactly length(w) entries.
    """
    word_rev = []
    cur = w
    n = len(w)
    while True:
        for i in range(1, n):
            if cur[i - 1] > cur[i]:
                word_rev.append(i)
                cur = apply_right_generator(cur, i)
                break
        else:
            break
    return tuple(reversed(word_rev))


def length_generating_function(n: int) -> IntPolynomial:
    """Sum of q^length(w) over S_n, i.e. the q-factorial [n]_q!.

    Its value at q = 1 is n!; its value at a prime p is the number of
    complete flags in an n-dimensional space over the p-element field.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > MAX_ENUMERATION_N:
        raise ResourceLimitError(f"cap is n <= {MAX_ENUMERATION_N}")
    coeffs = (1,)
    for k in range(2, n + 1):
        coeffs = pmul(coeffs, (1,) * k)
    return IntPolynomial(coeffs)
