import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from regmaps.exactnum import (
    IntegralityError,
    as_integer,
    binomial,
    divisors,
    euler_phi,
    factorial,
    jordan_totient,
    mobius,
    multinomial,
)


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == 120
    product = 1
    for i in range(1, 21):
        product *= i
    assert factorial(20) == product == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@given(st.integers(min_value=0, max_value=300))
def test_factorial_recurrence(n):
    assert factorial(n + 1) == (n + 1) * factorial(n)


def test_large_magnitudes_stay_exact():
    assert len(str(factorial(40))) > 40
    assert factorial(40) // factorial(39) == 40


@pytest.mark.parametrize(
    "n, k, expected",
    [(4, 2, 6), (3, 5, 0), (2, 2, 1), (5, -1, 0), (-3, 2, 0), (0, 0, 1)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize(
    "n, parts, expected",
    [(3, [1, 1], 6), (2, [3], 0), (4, [2, 1], 12), (-1, [], 0), (5, [], 1)],
)
def test_multinomial(n, parts, expected):
    assert multinomial(n, parts) == expected


@given(st.lists(st.integers(min_value=0, max_value=6), max_size=4), st.integers(min_value=0, max_value=20))
def test_multinomial_inverts_factorials(parts, n):
    value = multinomial(n, parts)
    if value:
        denom = math.prod(math.factorial(p) for p in parts) * math.factorial(n - sum(parts))
        assert value * denom == math.factorial(n)
    else:
        assert sum(parts) > n


def _units(n):
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 4), (4, 2)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected == _units(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("fn", [euler_phi, mobius, lambda n: jordan_totient(2, n)])
def test_domain_errors(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_jordan_totient_examples():
    assert all(jordan_totient(k, 1) == 1 for k in range(6))
    assert jordan_totient(1, 12) == 4
    # pairs (a, b) mod 4 generating Z_4
    pairs = sum(1 for a in range(4) for b in range(4) if math.gcd(math.gcd(a, b), 4) == 1)
    assert jordan_totient(2, 4) == pairs == 12
    assert jordan_totient(0, 1) == 1
    assert jordan_totient(0, 5) == 0


def test_divisor_sums_up_to_1000():
    for n in range(1, 1001):
        divs = divisors(n)
        assert divs == [d for d in range(1, n + 1) if n % d == 0]
        assert sum(euler_phi(d) for d in divs) == n
        assert sum(mobius(d) for d in divs) == (1 if n == 1 else 0)
        assert jordan_totient(1, n) == euler_phi(n)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=4))
def test_jordan_totient_counts_generating_tuples(n, k):
    if n**k > 5000:
        return
    import itertools

    count = sum(
        1 for t in itertools.product(range(n), repeat=k) if math.gcd(n, *t) == 1
    ) if k else int(n == 1)
    assert jordan_totient(k, n) == count


@given(st.integers(), st.integers(min_value=1))
def test_fraction_is_normalized(a, b):
    x = Fraction(a, b) + Fraction(b, a or 1)
    assert x.denominator > 0
    assert math.gcd(abs(x.numerator), x.denominator) == 1


def test_as_integer():
    assert as_integer(Fraction(10, 2)) == 5
    assert as_integer(7) == 7
    with pytest.raises(IntegralityError):
        as_integer(Fraction(1, 3), "thing")
