"""Signatures of cyclic branched coverings and their epimorphism counts.

A signature ``(g, h, L, [m_1, ..., m_r])`` describes a genus-g surface as an
L-sheeted cyclic covering of a genus-h orbifold with branch indices m_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from regmaps.exactnum import as_integer, divisors, euler_phi, jordan_totient, lcm, mobius


@dataclass(frozen=True, order=True)
class OrbifoldSignature:
    g: int
    quotient_genus: int
    period: int
    branch: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "branch", tuple(sorted(self.branch)))

    @property
    def r(self) -> int:
        return len(self.branch)

    @property
    def m(self) -> int:
        return lcm(self.branch)

    @property
    def trivial(self) -> bool:
        return self.period == 1

    def multiplicity(self, index: int) -> int:
        return self.branch.count(index)

    def __str__(self) -> str:
        inner = ",".join(map(str, self.branch))
        return f"({self.g},{self.quotient_genus},{self.period},[{inner}])"


def riemann_hurwitz_holds(sig: OrbifoldSignature) -> bool:
    defect = sum((1 - Fraction(1, m) for m in sig.branch), Fraction(0))
    return 2 - 2 * sig.g == sig.period * (2 - 2 * sig.quotient_genus - defect)


def harvey_violations(sig: OrbifoldSignature, quotient_reading: bool = False) -> list[str]:
    """Reasons why ``sig`` is not realized by a Z_L action (empty list if admissible).

    The conditions on the number r of branch points are keyed on the covering
    genus by default.  ``quotient_reading`` keys them on the quotient genus
    instead (r != 1 over genus >= 2, r >= 3 over a sphere, r in {0,3,4} over a
    torus); that variant is kept for comparison only and loses the planar
    rotations (0, 0, L, [L, L]).
    """
    reasons = []
    if any(b < 2 for b in sig.branch):
        reasons.append("branch index below 2")
    if not riemann_hurwitz_holds(sig):
        reasons.append("Riemann-Hurwitz")
    m = sig.m
    if sig.period % m:
        reasons.append("lcm does not divide period")
    if sig.quotient_genus == 0 and m != sig.period:
        reasons.append("lcm differs from period on a sphere quotient")
    if any(sig.period % b for b in sig.branch):
        reasons.append("branch index does not divide period")
    for i in range(sig.r):
        if lcm(sig.branch[:i] + sig.branch[i + 1 :]) != m:
            reasons.append("lcm drops when one branch point is removed")
            break
    if m % 2 == 0:
        top = 1
        while m % (2 * top) == 0:
            top *= 2
        if sum(1 for b in sig.branch if b % top == 0) % 2:
            reasons.append("odd number of indices with the top power of two")
    r = sig.r
    if sig.period > 1 and quotient_reading:
        h = sig.quotient_genus
        if h >= 2 and r == 1:
            reasons.append("single branch point")
        if h == 0 and r < 3:
            reasons.append("fewer than three branch points over a sphere")
        if h == 1 and r not in (0, 3, 4):
            reasons.append("r outside {0,3,4} over a torus")
    elif sig.period > 1:
        if sig.g >= 2 and r == 1:
            reasons.append("single branch point")
        if sig.g >= 2 and sig.quotient_genus == 0 and r < 3:
            reasons.append("fewer than three branch points over a sphere")
        if sig.g == 1 and r not in (0, 3, 4):
            reasons.append("torus covered with r outside {0,3,4}")
        if sig.g == 0 and r != 2:
            reasons.append("sphere covered with r other than 2")
    if sig.g > 1 and sig.period > 4 * sig.g + 2:
        reasons.append("period exceeds 4g+2")
    return reasons


def _branch_multisets(indices: list[int], deficit: Fraction, start: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples over ``indices[start:]`` with sum(1 - 1/m) == deficit."""
    if deficit == 0:
        yield ()
        return
    for pos in range(start, len(indices)):
        m = indices[pos]
        step = 1 - Fraction(1, m)
        if step > deficit:
            break
        for tail in _branch_multisets(indices, deficit - step, pos):
            yield (m,) + tail


def raw_signatures(g: int, period: int) -> list[OrbifoldSignature]:
    """All solutions of Riemann-Hurwitz with branch indices dividing the period."""
    if g < 0 or period < 1:
        raise ValueError(f"need g >= 0 and period >= 1, got g={g}, L={period}")
    if period == 1:
        return [OrbifoldSignature(g, g, 1, ())]
    indices = [m for m in divisors(period) if m > 1]
    out = []
    h = 0
    while True:
        deficit = 2 - 2 * h - Fraction(2 - 2 * g, period)
        if deficit < 0:
            break
        for branch in _branch_multisets(indices, deficit, 0):
            out.append(OrbifoldSignature(g, h, period, branch))
        h += 1
    return out


@lru_cache(maxsize=None)
def _generate(g: int, period: int, quotient_reading: bool) -> tuple[OrbifoldSignature, ...]:
    found = [s for s in raw_signatures(g, period) if not harvey_violations(s, quotient_reading)]
    return tuple(sorted(set(found)))


def generate_orbifolds(g: int, period: int, quotient_reading: bool = False) -> list[OrbifoldSignature]:
    """Admissible Z_L-orbifold signatures covered by a genus-g surface, sorted."""
    return list(_generate(g, period, quotient_reading))


@lru_cache(maxsize=None)
def _phi_term(k_mod: int, m: int) -> Fraction:
    n = m // math.gcd(k_mod, m)
    return Fraction(euler_phi(m) * mobius(n), euler_phi(n))


def e_function(branch: tuple[int, ...] | list[int]) -> Fraction:
    """(1/m) sum_{k=1}^{m} prod_i phi(m_i)/phi(n_i) mu(n_i),  n_i = m_i / gcd(k, m_i)."""
    branch = tuple(branch)
    m = lcm(branch)
    total = Fraction(0)
    for k in range(1, m + 1):
        term = Fraction(1)
        for mi in branch:
            term *= _phi_term(k % mi, mi)
            if not term:
                break
        total += term
    return total / m


def epi0(sig: OrbifoldSignature) -> int:
    """Number of order-preserving epimorphisms of the orbifold group onto Z_L."""
    if sig.trivial:
        return 1
    m = sig.m
    h = sig.quotient_genus
    value = m ** (2 * h) * jordan_totient(2 * h, sig.period // m) * e_function(sig.branch)
    count = as_integer(value, f"Epi0{sig}")
    if count < 0:
        raise ArithmeticError(f"negative epimorphism count for {sig}: {count}")
    return count
