"""Exact integer and rational kernels shared by all counting formulas.

Counts are plain Python ``int`` (arbitrary precision) and intermediate
quantities are :class:`fractions.Fraction`, which is always kept normalized.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Fraction",
    "IntegralityError",
    "as_integer",
    "binomial",
    "divisors",
    "euler_phi",
    "factorial",
    "factorize",
    "jordan_totient",
    "lcm",
    "mobius",
    "multinomial",
]


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), total: zero whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (p1! ... pj! (n - sum p)!), or 0 if the parts do not fit into n."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    rest = n - sum(parts)
    if n < 0 or rest < 0:
        return 0
    result = 1
    for p in parts:
        result *= math.comb(n, p)
        n -= p
    return result


def lcm(values: Iterable[int]) -> int:
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v)
    return result


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 by trial division, as ((p, e), ...)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi undefined for {n}")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius undefined for {n}")
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def jordan_totient(k: int, n: int) -> int:
    """J_k(n) = n^k prod_{p | n} (1 - p^-k); J_0(1) = 1 and J_0(n) = 0 for n > 1."""
    if n < 1:
        raise ValueError(f"jordan_totient undefined for n={n}")
    if k < 0:
        raise ValueError(f"jordan_totient undefined for k={k}")
    result = n**k
    for p, _ in factorize(n):
        result = result // p**k * (p**k - 1)
    return result


def as_integer(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising :class:`IntegralityError` if it is not one."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator
