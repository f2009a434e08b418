"""Rooted one-face maps: regular ones, and ones with k degree-d vertices plus leaves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from regmaps.exactnum import as_integer, binomial, factorial
from regmaps.params import one_face_params


@dataclass(frozen=True)
class LeafMapSpec:
    """A one-face map with k vertices of degree d and s leaves on genus ``genus``."""

    d: int
    genus: int
    k: int

    @property
    def leaves(self) -> int:
        return (self.d - 2) * self.k + 2 - 4 * self.genus

    @property
    def half_edges(self) -> int:
        return self.d * self.k + self.leaves

    @property
    def feasible(self) -> bool:
        return self.genus >= 0 and self.k >= 0 and self.leaves >= 0


@lru_cache(maxsize=None)
def composition_sum(d: int, genus: int, k: int) -> Fraction:
    """Sum over i_1 + ... + i_k = genus (i_j >= 0) of prod_j C(d-1, 2 i_j) / (2 i_j + 1).

    Computed as the coefficient of x^genus in P(x)^k with
    P(x) = sum_i C(d-1, 2i)/(2i+1) x^i; P has degree floor((d-1)/2).
    """
    if k == 0:
        return Fraction(int(genus == 0))
    weights = [Fraction(binomial(d - 1, 2 * i), 2 * i + 1) for i in range(min(genus, (d - 1) // 2) + 1)]
    power = [Fraction(1)] + [Fraction(0)] * genus
    base = weights
    # binary powering of P, truncated at degree `genus`
    while k:
        if k & 1:
            power = _truncated_product(power, base, genus)
        k >>= 1
        if k:
            base = _truncated_product(base, base, genus)
    return power[genus]


def _truncated_product(a: list[Fraction], b: list[Fraction], top: int) -> list[Fraction]:
    out = [Fraction(0)] * (top + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b[: top + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def rooted_one_face(d: int, g: int) -> int:
    """Rooted d-regular one-face maps of genus g (0 when none exist)."""
    params = one_face_params(d, g)
    if params is None:
        return 0
    k = params.v
    value = Fraction(2 * factorial(k + 2 * g - 1), 4**g * factorial(k)) * composition_sum(d, g, k)
    return as_integer(value, f"rooted one-face count (d={d}, g={g})")


def rooted_one_face_with_leaves(d: int, genus: int, k: int) -> int:
    """Rooted one-face maps of genus ``genus`` with k degree-d vertices and only leaves otherwise."""
    spec = LeafMapSpec(d, genus, k)
    if not spec.feasible:
        return 0
    edges = (d - 1) * k + 1 - 2 * genus
    value = Fraction(
        2 * factorial(edges), 4**genus * factorial(k) * factorial(spec.leaves)
    ) * composition_sum(d, genus, k)
    return as_integer(value, f"rooted one-face leaf-map count (d={d}, genus={genus}, k={k})")


def rooted_one_face_with_leaves_d3(genus: int, k: int) -> int:
    """Closed form of :func:`rooted_one_face_with_leaves` for cubic vertices."""
    args = (2 * k - 2 * genus + 1, genus, k - genus, k + 2 - 4 * genus)
    if genus < 0 or min(args) < 0:
        return 0
    top, a, b, c = (factorial(x) for x in args)
    return as_integer(
        Fraction(2 * top, 12**genus * a * b * c),
        f"cubic leaf-map count (genus={genus}, k={k})",
    )
