"""Self-check suites run by ``regmaps verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from regmaps import oracle
from regmaps.multiface import rooted_regular
from regmaps.multiface_unrooted import burnside_total, unrooted_regular
from regmaps.oneface import rooted_one_face, rooted_one_face_with_leaves, rooted_one_face_with_leaves_d3
from regmaps.oneface_unrooted import (
    burnside_total_prime,
    f2,
    f2_cubic,
    f2d,
    f3_cubic,
    f6_cubic,
    fd,
    unrooted_one_face_closed3,
    unrooted_one_face_prime,
)
from regmaps.orbifolds import OrbifoldSignature, epi0
from regmaps.params import multi_face_params, one_face_params
from regmaps.tables import REFERENCE_TABLES, cell_function


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def table_checks() -> Iterator[Check]:
    for table in REFERENCE_TABLES:
        fn = cell_function(table.spec.kind)
        expected = table.expected()
        bad = []
        for (d, g, v), want in expected.items():
            got = fn(d, g, v)
            if got != want:
                bad.append(f"d={d} g={g}" + (f" v={v}" if v is not None else "") + f": got {got}, expected {want}")
        yield Check(f"table {table.number} ({table.spec.kind})", not bad, "; ".join(bad) or f"{len(expected)} cells")


def oracle_checks(max_product: int = 10) -> Iterator[Check]:
    for d in range(1, max_product + 1):
        for v in range(1, max_product // d + 1):
            if (d * v) % 2:
                continue
            census = oracle.labelled_census(d, v)
            genera = sorted(census.by_genus)
            for g in genera:
                got = (rooted_regular(d, g, v), unrooted_regular(d, g, v))
                want = (census.rooted(census.by_genus[g]), oracle.oracle_unrooted(d, v, g))
                yield Check(f"oracle d={d} v={v} g={g}", got == want, f"formula {got}, oracle {want}")
    for d in range(3, 8):
        for g in range(1, 7):
            params = one_face_params(d, g)
            if params is None or params.darts > max_product:
                continue
            got = rooted_one_face(d, g)
            want = oracle.oracle_one_face(d, g)
            yield Check(f"oracle one-face d={d} g={g}", got == want, f"formula {got}, oracle {want}")


def _equal(name: str, left: object, right: object) -> Check:
    return Check(name, left == right, "" if left == right else f"{left} != {right}")


def consistency_checks() -> Iterator[Check]:
    for g in range(1, 12):
        yield _equal(f"closed cubic form g={g}", unrooted_one_face_closed3(g), unrooted_one_face_prime(3, g))
    for h in range(4):
        for k in range(h, 9):
            yield _equal(
                f"cubic leaf maps genus={h} k={k}",
                rooted_one_face_with_leaves_d3(h, k),
                rooted_one_face_with_leaves(3, h, k),
            )
    for g in range(1, 9):
        yield _equal(f"f2 cubic g={g}", f2_cubic(g), f2(3, g))
        yield _equal(f"f3 cubic g={g}", f3_cubic(g), fd(3, g))
        yield _equal(f"f6 cubic g={g}", f6_cubic(g), f2d(3, g))
    for d in (3, 5, 7):
        for h in range(4):
            for name, sig, want in per_period_epimorphism_cases(d, h):
                yield _equal(f"epi0 {name}", epi0(sig), want)
    yield from integrality_checks()


def per_period_epimorphism_cases(d: int, h: int) -> Iterator[tuple[str, OrbifoldSignature, int]]:
    """Signatures of one-face symmetries with the epimorphism counts of the prime-d derivation."""
    for r in range(2, 7, 2):
        sig = _signature(h, 2, (2,) * r)
        if sig is not None:
            yield str(sig), sig, 4**h
    for rd in range(1, 6):
        sig = _signature(h, d, (d,) * rd)
        if sig is not None:
            value = Fraction(d) ** (2 * h - 1) * ((d - 1) * (-1) ** rd + (d - 1) ** rd)
            yield str(sig), sig, int(value)
    for rd in range(1, 6):
        for r2 in (1, 3, 5):
            sig = _signature(h, 2 * d, (2,) * r2 + (d,) * rd + (2 * d,))
            if sig is not None:
                value = 2 * Fraction(2 * d) ** (2 * h - 1) * (d - 1) * ((d - 1) ** rd - (-1) ** rd)
                yield str(sig), sig, int(value)


def _signature(h: int, period: int, branch: tuple[int, ...]) -> OrbifoldSignature | None:
    """Signature with the covering genus solved from Riemann-Hurwitz, if integral."""
    chi = period * (2 - 2 * h - sum((1 - Fraction(1, m) for m in branch), Fraction(0)))
    if chi.denominator != 1 or chi.numerator % 2 or chi > 2:
        return None
    return OrbifoldSignature((2 - chi.numerator) // 2, h, period, branch)


def integrality_checks() -> Iterator[Check]:
    for d in (3, 5):
        for g in range(1, 12):
            params = one_face_params(d, g)
            if params is None:
                continue
            total = burnside_total_prime(d, g)
            yield Check(
                f"one-face Burnside divisibility d={d} g={g}",
                (total / params.darts).denominator == 1,
                f"total {total} over {params.darts} darts",
            )
    for table in REFERENCE_TABLES:
        if table.spec.kind != "multi-unrooted":
            continue
        for d, g, v in table.spec.cells():
            if multi_face_params(d, g, v) is None:
                continue
            total = burnside_total(d, g, v)
            yield Check(
                f"multi-face Burnside divisibility d={d} g={g} v={v}",
                (total / (d * v)).denominator == 1,
                f"total {total} over {d * v} darts",
            )


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "tables": table_checks,
    "oracle": oracle_checks,
    "consistency": consistency_checks,
}
