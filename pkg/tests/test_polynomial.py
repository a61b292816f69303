import pytest

from hochflag.errors import NonIntegralInterpolationError
from hochflag.polynomial import IntPolynomial, lagrange_interpolate

from hochflag.flags import count_all_triples


def rand_poly(rng, max_degree=5, bound=9):
    return IntPolynomial([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_degree + 1))])


def test_canonical_form():
    assert IntPolynomial([0, 1, 0, 0]).coefficients == (0, 1)
    assert IntPolynomial([]).coefficients == ()
    assert IntPolynomial([0]).coefficients == ()
    assert not IntPolynomial.zero()


def test_degree():
    assert IntPolynomial.zero().degree is None
    assert IntPolynomial([5]).degree == 0
    assert IntPolynomial([0, 1, 0, 1]).degree == 3


def test_add_mul_scale_examples():
    q = IntPolynomial.q()
    one = IntPolynomial.one()
    assert (q + one) + (-(q + one)) == IntPolynomial.zero()
    assert (q - one) * (q + one) == IntPolynomial([-1, 0, 1])
    p = IntPolynomial([0, 1, 0, 1])
    assert p.scale(1) == p
    assert p.scale(0) == IntPolynomial.zero()


def test_rejects_non_integer_coefficients():
    with pytest.raises(ValueError):
        IntPolynomial([1.5])


def test_evaluate_examples():
    p = IntPolynomial([0, 1, 0, 1])  # q^3 + q
    # the value at 2 is the number of double-opposite triples over F_2
    assert count_all_triples(2, 2) == 10
    assert p.evaluate(2) == 10
    assert p.evaluate(1) == 2
    assert IntPolynomial.zero().evaluate(7) == 0


def test_ring_axioms(rng):
    for _ in range(120):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_evaluate_is_ring_morphism(rng):
    for _ in range(120):
        a, b = rand_poly(rng), rand_poly(rng)
        x = rng.randint(-12, 12)
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


def test_interpolate_examples():
    assert lagrange_interpolate([(1, 1), (2, 2)]) == IntPolynomial.q()
    assert lagrange_interpolate([(0, 5)]) == IntPolynomial([5])
    # brute-force totals of the n=2 triple space at four primes
    points = [(p, count_all_triples(2, p)) for p in (2, 3, 5, 7)]
    assert points == [(2, 10), (3, 30), (5, 130), (7, 350)]
    assert lagrange_interpolate(points) == IntPolynomial([0, 1, 0, 1])


def test_interpolate_roundtrip(rng):
    for _ in range(60):
        poly = rand_poly(rng, max_degree=6)
        degree = poly.degree if poly.degree is not None else 0
        xs = rng.sample(range(-30, 30), degree + 1)
        points = [(x, poly.evaluate(x)) for x in xs]
        assert lagrange_interpolate(points) == poly


def test_interpolate_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        lagrange_interpolate([])
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 1), (1, 2)])


def test_interpolate_non_integral():
    # through (0,0) and (2,1) the line has slope 1/2
    with pytest.raises(NonIntegralInterpolationError):
        lagrange_interpolate([(0, 0), (2, 1)])


def test_str_rendering():
    assert str(IntPolynomial([0, 1, 0, 1])) == "q^3 + q"
    assert str(IntPolynomial([-1, 1])) == "q - 1"
    assert str(IntPolynomial.zero()) == "0"
    assert str(IntPolynomial([2])) == "2"
