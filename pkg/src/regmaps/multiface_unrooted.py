"""Unrooted d-regular maps by orbit counting over cyclic symmetries.

A map with 2E = d v darts that is invariant under a period-L rotation of the
surface projects to a quotient map with h = d v / L darts on the quotient
orbifold.  Branch points of the orbifold sit at quotient vertices (index i
dividing d, vertex degree d/i), at free ends of dangling half-edges (index 2),
or inside faces (at most one per face).  Summing the rooted quotient maps
weighted by the number of epimorphisms onto Z_L, over all periods and
orbifolds, and dividing by the dart count gives the number of unrooted maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from regmaps.exactnum import as_integer, divisors, factorial, multinomial
from regmaps.multiface import AlmostRegularCounter, counter_for
from regmaps.orbifolds import OrbifoldSignature, epi0, generate_orbifolds
from regmaps.params import multi_face_params


@dataclass(frozen=True)
class BranchDistribution:
    """How many branch points of each index sit on quotient vertices, plus
    how many index-2 points sit on dangling half-edge ends."""

    on_vertices: tuple[tuple[int, int], ...]
    s: int

    def count(self, index: int) -> int:
        return dict(self.on_vertices).get(index, 0)


def branch_distributions(d: int, sig: OrbifoldSignature) -> Iterator[BranchDistribution]:
    """Distributions with at least one branch point on a vertex (parity unchecked)."""
    multiplicity = {i: sig.multiplicity(i) for i in sorted(set(sig.branch))}
    vertex_indices = [i for i in multiplicity if d % i == 0]
    for counts in product(*(range(multiplicity[i] + 1) for i in vertex_indices)):
        if not any(counts):
            continue
        placed = tuple((i, c) for i, c in zip(vertex_indices, counts) if c)
        v2 = dict(placed).get(2, 0)
        for s in range(multiplicity.get(2, 0) - v2 + 1):
            yield BranchDistribution(placed, s)


def _face_multinomial(faces: int, sig: OrbifoldSignature, used: dict[int, int]) -> int:
    """Ways to put the remaining branch points into distinct faces."""
    leftover = [sig.multiplicity(i) - used.get(i, 0) for i in sorted(set(sig.branch))]
    return multinomial(faces, leftover)


def quotient_count(
    d: int, h: int, sig: OrbifoldSignature, counter: Optional[AlmostRegularCounter] = None
) -> Fraction:
    """Rooted quotient maps with h darts on the orbifold ``sig``."""
    if h < 1:
        raise ValueError(f"half-edge count must be positive, got {h}")
    counter = counter or counter_for(d)
    genus = sig.quotient_genus
    if sig.trivial:
        return Fraction(counter(genus, h // d - 1, d) if h % d == 0 else 0)

    r2 = sig.multiplicity(2)
    total = Fraction(0)
    if h % d == 0:
        for s in range(r2 + 1):
            if (h - s) % 2:
                continue
            faces = 2 - 2 * genus + (h - s) // 2 - h // d
            ways = _face_multinomial(faces, sig, {2: s})
            if ways:
                total += Fraction(counter(genus, h // d - 1, d, (1,) * s) * ways, factorial(s))

    for dist in branch_distributions(d, sig):
        s = dist.s
        if (h + s) % 2:
            continue
        special_darts = sum(c * (d // i) for i, c in dist.on_vertices)
        if special_darts > h or (h - special_darts) % d:
            continue
        plain = (h - special_darts) // d
        vd = dist.count(d)
        roots: list[int] = [1] * (s + vd)
        unorder = factorial(vd + s)
        for i, c in dist.on_vertices:
            if i != d:
                roots += [d // i] * c
                unorder *= (d // i) ** c * factorial(c)
        vertices = plain + sum(c for _, c in dist.on_vertices) + s
        faces = 2 - 2 * genus - vertices + (h + s) // 2
        used = dict(dist.on_vertices)
        used[2] = used.get(2, 0) + s
        ways = _face_multinomial(faces, sig, used)
        if not ways:
            continue
        roots.sort()
        first = roots.pop()
        rooted = counter(genus, plain, first, roots)
        if not rooted:
            continue
        # unorder the root vertices, re-root at any of the h + s darts, choose
        # which leaves are dangling ends, then discard roots on those ends
        total += (
            Fraction(rooted * (h + s), unorder)
            * math.comb(s + vd, s)
            * Fraction(h, h + s)
            * ways
        )
    return total


def burnside_terms(d: int, g: int, v: int) -> list[tuple[OrbifoldSignature, int, Fraction]]:
    """(orbifold, Epi0, quotient count) for every admissible period dividing d v."""
    darts = d * v
    out = []
    for period in divisors(darts):
        for sig in generate_orbifolds(g, period):
            count = quotient_count(d, darts // period, sig)
            if count:
                out.append((sig, epi0(sig), count))
    return out


def burnside_total(d: int, g: int, v: int) -> Fraction:
    return sum((e * c for _, e, c in burnside_terms(d, g, v)), Fraction(0))


def unrooted_regular(d: int, g: int, v: int) -> int:
    """Number of unrooted d-regular maps of genus g with v vertices."""
    if multi_face_params(d, g, v) is None:
        return 0
    return as_integer(
        burnside_total(d, g, v) / (d * v),
        f"unrooted regular count (d={d}, g={g}, v={v})",
    )
