"""Counting polynomials for the space of double-opposite triples.

The object counted here is the set of triples (a, b, u), where a and b are
complete flags and u is a unipotent upper-triangular matrix, subject to:
b is opposite a, and b is opposite u*a ("opposite" means relative position
equal to the longest element w0).  Its cardinality over F_q is a
polynomial in q, assembled one stratum at a time, where the stratum of w
collects the triples whose first flag lies in the w-cell.

Stratum factorization (each step is exercised directly by the test suite,
none is taken on faith):

  (i)   translating a triple by a unipotent v, as (va, vb, v u v^-1),
        preserves the conditions, so the count over the w-cell is
        q^length(w) times the sum over u of the opposite-to-both count at
        the fixed base point a_w of the cell;
  (ii)  the map u -> u * a_w surjects the unipotent group onto the w-cell
        with fibers of size q^(length(w0) - length(w)), turning the sum
        over u into a sum over flags y in the w-cell graded by the
        relative position t of (a_w, y);
  (iii) both remaining counts are Hecke structure coefficients: flags in
        the w-cell at position t^-1 from a_w number c^w_{w, t^-1}(q), and
        flags opposite both members of a pair at relative position t
        number N_t(q), the T_t-coefficient of T_w0 squared.

Hence   stratum(w) = q^length(w0) * sum_t c^w_{w, t^-1}(q) * N_t(q).

`stratum_polynomial_reference` evaluates that double sum literally.  The
fast path used everywhere else folds the sum into a single product: the
coefficients of T_w0 squared are invariant under inversion of the index
(N_t = N_{t^-1}, because reversing every factor of a product of
T_{w0}-terms fixes it), so sum_t N_t T_{t^-1} is T_w0 squared itself and

    stratum(w) = q^length(w0) * [coefficient of T_w in T_w * T_w0^2].

The elements T_w * T_w0^2 for all w are produced in one sweep over the
weak order, multiplying by one generator on the left per step.  The test
suite checks the fast path against the literal double sum (n <= 4), and
both against exhaustive enumeration over small prime fields.

The value of the total polynomial at q = 1 is the alternating-sum Euler
characteristic that the package exists to verify: it equals n!, matching
the Hochschild cohomology of the principal block of category O for sl_n,
and the q = 1 coefficients of T_w0 squared vanish away from the identity.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import flags as _flags
from .errors import ResourceLimitError
from .hecke import _left_mul_gen, _t_w0_squared_raw, structure_coefficient, t_w0_squared
from .polynomial import IntPolynomial, padd, pmul, pshift
from .weyl import (
    Permutation,
    all_permutations,
    apply_left_generator,
    check_window,
    identity,
    inverse,
    length,
    longest_element,
)

#: Symbolic assembly cap; n = 7 already runs the weak-order sweep over 5040
#: elements with 5040-term intermediates.
MAX_SYMBOLIC_N = 7


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > MAX_SYMBOLIC_N:
        raise ResourceLimitError(f"symbolic assembly cap is n <= {MAX_SYMBOLIC_N}")


def _min_left_descent(w: Permutation) -> int:
    """Smallest i with i+1 occurring before i in the window (0 if none)."""
    n = len(w)
    pos = [0] * (n + 1)
    for idx, val in enumerate(w):
        pos[val] = idx
    for i in range(1, n):
        if pos[i] > pos[i + 1]:
            return i
    return 0


@lru_cache(maxsize=8)
def _all_strata_raw(n: int) -> dict[Permutation, tuple[int, ...]]:
    """Coefficient tuples of q^length(w0) * [T_w](T_w * T_w0^2), for all w.

    Walks a spanning tree of the left weak order: the parent of w is
    s_i * w for the smallest left descent i, so each element T_w * T_w0^2
    is one generator multiplication away from its parent's.
    """
    _check_rank(n)
    shift = length(longest_element(n))
    root = identity(n)
    h = _t_w0_squared_raw(n)
    out = {root: pshift(h.get(root, ()), shift)}
    # stack of (node, element T_node * T_w0^2, iterator over generator indices)
    stack = [(root, h, iter(range(1, n)))]
    while stack:
        w, elem, gens = stack[-1]
        for i in gens:
            v = apply_left_generator(w, i)
            # child when s_i lengthens w and i is v's canonical descent
            if w.index(i) < w.index(i + 1) and _min_left_descent(v) == i:
                child_elem = _left_mul_gen(elem, i)
                out[v] = pshift(child_elem.get(v, ()), shift)
                stack.append((v, child_elem, iter(range(1, n))))
                break
        else:
            stack.pop()
    if len(out) != len(all_permutations(n)):
        raise AssertionError("weak-order sweep missed elements")
    return out


def stratum_polynomial(n: int, w) -> IntPolynomial:
    """Number of double-opposite triples with first flag in the w-cell,
    as a polynomial in the field size."""
    w = check_window(w)
    if len(w) != n:
        raise ValueError(f"stratum label {w} does not live in S_{n}")
    _check_rank(n)
    return IntPolynomial(_all_strata_raw(n)[w])


def all_stratum_polynomials(n: int) -> dict[Permutation, IntPolynomial]:
    """Stratum polynomials for every w, keyed by window."""
    _check_rank(n)
    return {w: IntPolynomial(c) for w, c in sorted(_all_strata_raw(n).items())}


def stratum_polynomial_reference(n: int, w) -> IntPolynomial:
    """The literal double sum of step (iii), one structure coefficient per
    relative position.  Quadratic in n! full Hecke products; used to pin
    the fast path, not for production runs."""
    w = check_window(w)
    _check_rank(n)
    w0 = longest_element(n)
    opposite_counts = t_w0_squared(n)
    acc: tuple[int, ...] = ()
    for t in all_permutations(n):
        n_t = opposite_counts.coefficient(t)
        if not n_t:
            continue
        c = structure_coefficient(w, inverse(t), w)
        if c:
            acc = padd(acc, pmul(c.coefficients, n_t.coefficients))
    return IntPolynomial(pshift(acc, length(w0)))


def total_polynomial(n: int) -> IntPolynomial:
    """Cardinality of the whole triple space over F_q, all strata summed."""
    _check_rank(n)
    acc: tuple[int, ...] = ()
    for c in _all_strata_raw(n).values():
        acc = padd(acc, c)
    return IntPolynomial(acc)


def euler_characteristic(n: int) -> int:
    """Value of the total counting polynomial at q = 1.

    This is the alternating sum of Betti numbers of the triple space, and
    the quantity that must come out to n!.
    """
    return total_polynomial(n).evaluate(1)


@dataclass(frozen=True)
class VanishingReport:
    """Values at q = 1 of the opposite-to-both counting polynomials.

    For each relative position sigma of a flag pair, `values[sigma]` is
    the q = 1 value of the polynomial counting flags opposite to both
    members.  The expected pattern is 1 at the identity (coincident pair)
    and 0 everywhere else.
    """

    n: int
    values: dict[Permutation, int]
    failures: tuple[Permutation, ...]
    passed: bool


def verify_vanishing(n: int) -> VanishingReport:
    """Check that the q = 1 opposite-to-both counts form the indicator of
    the identity.  Failures are reported, not raised."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    raw = _t_w0_squared_raw(n)
    values = {}
    failures = []
    ident = identity(n)
    for w in all_permutations(n):
        value = IntPolynomial(raw.get(w, ())).evaluate(1)
        values[w] = value
        expected = 1 if w == ident else 0
        if value != expected:
            failures.append(w)
    return VanishingReport(n, values, tuple(failures), not failures)


@dataclass(frozen=True)
class StratumReport:
    """Symbolic stratum polynomial next to its checks at sample primes."""

    n: int
    w: Permutation
    polynomial: IntPolynomial
    evaluations: dict[int, int]
    brute_force: dict[int, int] | None = None

    @property
    def consistent(self) -> bool:
        if self.brute_force is None:
            return True
        return all(self.brute_force.get(p) == v for p, v in self.evaluations.items())

    @property
    def degree_in_bounds(self) -> bool:
        d = self.polynomial.degree
        n = self.n
        return d is None or d <= 3 * (n * (n - 1) // 2)


@dataclass(frozen=True)
class CrossValidationReport:
    n: int
    primes: tuple[int, ...]
    strata: tuple[StratumReport, ...]
    passed: bool


def cross_validate(
    n: int,
    primes,
    cap: int = _flags.DEFAULT_CAP,
    threads: int = 1,
) -> CrossValidationReport:
    """Compare every stratum polynomial against exhaustive enumeration at
    the given primes.  Exact equality is required stratum by stratum; the
    enumeration budget bounds which (n, p) pairs are feasible."""
    _check_rank(n)
    primes = tuple(sorted(set(int(p) for p in primes)))
    for p in primes:
        _flags.require_prime(p)
    polys = all_stratum_polynomials(n)
    reports = []
    for w, poly in polys.items():
        evaluations = {p: poly.evaluate(p) for p in primes}
        brute = {
            p: _flags.count_stratum_triples(n, p, w, level="orbit", cap=cap, threads=threads)
            for p in primes
        }
        reports.append(StratumReport(n, w, poly, evaluations, brute))
    passed = all(r.consistent for r in reports)
    return CrossValidationReport(n, primes, tuple(reports), passed)
