"""Unrooted one-face regular maps.

For prime d the only periods of a symmetry of a one-face d-regular map are
1, 2, d and 2d.  Each period contributes a sum over the quotient genus of
(epimorphism count) x (rooted quotient maps), where a quotient map is a
one-face map with k degree-d vertices and some leaves.  The total divided by
the dart count is the number of unrooted maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from regmaps.exactnum import as_integer, binomial, factorial
from regmaps.oneface import rooted_one_face, rooted_one_face_with_leaves
from regmaps.params import one_face_params


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def _require_prime(d: int) -> None:
    if d < 3 or not is_prime(d):
        raise ValueError(f"prime degree d >= 3 required, got {d}")


@dataclass(frozen=True)
class OneFaceContribution:
    period: int
    quotient_genus: int
    k: int
    r2: int
    rd: int
    weight: Fraction


def period2_terms(d: int, g: int) -> list[OneFaceContribution]:
    _require_prime(d)
    out: list[OneFaceContribution] = []
    if g < 1 or (2 * g - 1) % (d - 2):
        return out
    k = (2 * g - 1) // (d - 2)
    quotient_darts = d * k
    for h in range(g // 2 + 1):
        r = 2 * g + 2 - 4 * h
        half_edges = quotient_darts + r - 1
        count = rooted_one_face_with_leaves(d, h, k)
        weight = Fraction(4**h * quotient_darts * count, half_edges)
        out.append(OneFaceContribution(2, h, k, r, 0, weight))
    return out


def period_d_terms(d: int, g: int) -> list[OneFaceContribution]:
    _require_prime(d)
    out: list[OneFaceContribution] = []
    if g < 1:
        return out
    for h in range((2 * g + d - 1) // (2 * d) + 1):
        # 2 - 2g = 2d - 2dh - (d-1) r_d
        num = 2 * d - 2 * d * h - 2 + 2 * g
        if num % (d - 1) or num < d - 1:
            continue
        rd = num // (d - 1)
        k_num = (4 * g - 2) - (d - 2) * (rd - 1)
        if k_num % (d * (d - 2)):
            continue
        k = k_num // (d * (d - 2))
        if k < 0 or (d - 2) * k + 2 - 4 * h != rd - 1:
            continue
        epi = Fraction(d ** (2 * h)) / d * ((d - 1) * (-1) ** rd + (d - 1) ** rd)
        weight = epi * rooted_one_face_with_leaves(d, h, k)
        out.append(OneFaceContribution(d, h, k, 0, rd, weight))
    return out


def period_2d_terms(d: int, g: int) -> list[OneFaceContribution]:
    _require_prime(d)
    out: list[OneFaceContribution] = []
    if g < 1 or (2 * g - 1) % (d - 2):
        return out
    quotient_darts = (2 * g - 1) // (d - 2)
    # every quotient vertex has degree d, leaves aside: d k + rd = quotient_darts
    for k in range(quotient_darts // d + 1):
        rd = quotient_darts - d * k
        if rd < 1:
            continue
        h = 0
        while True:
            num = 2 * g + 2 * d - 1 - 4 * h * d - 2 * (d - 1) * rd
            if num < 0:
                break
            if num % d == 0 and (num // d) % 2 == 1:
                r2 = num // d
                if (d - 2) * k + 2 - 4 * h == r2 + rd:
                    epi = 2 * Fraction(2 * d) ** (2 * h - 1) * (d - 1) * ((d - 1) ** rd - (-1) ** rd)
                    weight = (
                        epi
                        * Fraction(quotient_darts, quotient_darts + r2)
                        * binomial(r2 + rd, r2)
                        * rooted_one_face_with_leaves(d, h, k)
                    )
                    out.append(OneFaceContribution(2 * d, h, k, r2, rd, weight))
            h += 1
    return out


def f2(d: int, g: int) -> Fraction:
    return sum((t.weight for t in period2_terms(d, g)), Fraction(0))


def fd(d: int, g: int) -> Fraction:
    return sum((t.weight for t in period_d_terms(d, g)), Fraction(0))


def f2d(d: int, g: int) -> Fraction:
    return sum((t.weight for t in period_2d_terms(d, g)), Fraction(0))


def burnside_total_prime(d: int, g: int) -> Fraction:
    """Undivided orbit-counting sum over periods 1, 2, d, 2d."""
    return rooted_one_face(d, g) + f2(d, g) + fd(d, g) + f2d(d, g)


def unrooted_one_face_prime(d: int, g: int) -> int:
    _require_prime(d)
    params = one_face_params(d, g)
    if params is None:
        return 0
    return as_integer(
        burnside_total_prime(d, g) / params.darts,
        f"unrooted one-face count (d={d}, g={g})",
    )


def _fact(n: int) -> int:
    """Factorial, or 0 for negative arguments so that the enclosing term vanishes."""
    return factorial(n) if n >= 0 else 0


def _ratio(num: int | Fraction, *den_args: int) -> Fraction:
    """num / prod(den_args!) with any negative factorial argument zeroing the term."""
    den = 1
    for a in den_args:
        if a < 0:
            return Fraction(0)
        den *= factorial(a)
    return Fraction(num) / den


def f2_cubic(g: int) -> Fraction:
    """Period-2 term for d = 3 in closed form."""
    total = Fraction(0)
    for h in range(g // 2 + 1):
        total += _ratio(_fact(4 * g - 2 - 2 * h), h, 2 * g - 1 - h, 2 * g - 4 * h + 1) / Fraction(3) ** (h - 1)
    return (2 * g - 1) * total


def f3_cubic(g: int) -> Fraction:
    """Period-3 term for d = 3 in closed form."""
    total = Fraction(0)
    for h in range((g + 1) // 3 + 1):
        top = g + 1 - 3 * h
        term = Fraction(3, 4) ** (h - 1) * (Fraction(2) ** top + (-1) ** (g + 2 - 3 * h))
        total += _ratio(term, h, top)
    return Fraction(_fact(2 * g - 1), factorial(g - 1)) * total


def f6_cubic(g: int) -> Fraction:
    """Period-6 term for d = 3 in closed form."""
    total = Fraction(0)
    for k in range(g // 2, (2 * g - 2) // 3 + 1):
        r3 = 2 * g - 1 - 3 * k
        for h in range(k - g // 2 + 1):
            num = Fraction(3) ** (h - 1) * (Fraction(2) ** r3 - (-1) ** r3) * _fact(2 * k - 2 * h)
            total += _ratio(num, h, k - h, 4 * k + 3 - 2 * g - 4 * h, r3)
    return 2 * (2 * g - 1) * total


def unrooted_one_face_closed3(g: int) -> int:
    """Closed form for unrooted cubic one-face maps of genus g >= 1."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    total = _ratio(_fact(6 * g - 4), g, 3 * g - 2) / 12**g
    for h in range(g // 2 + 1):
        total += _ratio(_fact(4 * g - 2 - 2 * h), h, 2 * g - 1 - h, 2 * g - 4 * h + 1) / (2 * 3**h)
    inner = Fraction(0)
    for h in range((g + 1) // 3 + 1):
        term = Fraction(3, 4) ** (h - 1) * (Fraction(2) ** (g + 1 - 3 * h) + (-1) ** (g - h))
        inner += _ratio(term, h, g + 1 - 3 * h)
    total += Fraction(_fact(2 * g - 2), 6 * factorial(g - 1)) * inner
    for k in range(g // 2, (2 * g - 2) // 3 + 1):
        for h in range(k - g // 2 + 1):
            r3 = 2 * g - 1 - 3 * k
            num = Fraction(3) ** (h - 2) * (Fraction(2) ** r3 + (-1) ** k) * _fact(2 * k - 2 * h)
            total += _ratio(num, h, k - h, 4 * k + 3 - 2 * g - 4 * h, r3)
    return as_integer(total, f"closed-form cubic count (g={g})")


def unrooted_one_face_closed4(g: int) -> int:
    """Closed form for unrooted 4-regular one-face maps of genus g >= 1."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    total = _ratio(_fact(4 * g - 3), g, g - 1) / 4**g
    total += _ratio(3 * _fact(4 * g - 3), 2 * g + 1, 2 * g - 2) / 2
    for h in range(1, g // 2 + 1):
        for k in range(2 * h - 1, g):
            total += _ratio(_fact(2 * g - 2 * h + k - 1), 2 * k - 4 * h + 2, h, k - h, 2 * g - 1 - 2 * k) / 2
    for h in range(g // 4 + 1):
        for r4 in range(2, 2 * (g + 3 - 4 * h) // 3 + 1, 2):
            for k in range(2 * h - 1 + r4 // 2, (2 * g + r4) // 4 + 1):
                num = Fraction(2) ** (2 * h - 3 + r4) * _fact(k - 2 * h + g - r4 // 2)
                total += _ratio(num, h, k - h, g - r4 // 2 - 2 * k, 2 * k + 3 - 4 * h - r4, r4 - 1)
    return as_integer(total, f"closed-form 4-regular count (g={g})")


def unrooted_one_face(d: int, g: int) -> int:
    """Unrooted one-face d-regular maps of genus g, for prime d or d = 4."""
    if one_face_params(d, g) is None:
        return 0
    if d == 4:
        return unrooted_one_face_closed4(g)
    return unrooted_one_face_prime(d, g)
