"""Brute-force map enumeration on rotation systems, for small-case ground truth.

A map on 2n darts is a pair (sigma, alpha): sigma permutes the darts around
each vertex, alpha is a fixed-point-free involution pairing darts into
edges, and the faces are the cycles of sigma∘alpha.  Two independent routes
are provided:

* :func:`labelled_census` fixes sigma and runs through every perfect matching
  alpha; rooted counts follow from the orbit-stabilizer relation.
* :func:`rooted_maps` generates each rooted map exactly once, labelled in the
  breadth-first order of :func:`rooted_code`; unrooted classes are the maps
  whose root code is minimal over all choices of root.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from regmaps.exactnum import as_integer

DEFAULT_DART_LIMIT = 12

Profile = Union[int, Sequence[int]]


class OracleSizeError(ValueError):
    """The requested enumeration exceeds the dart bound."""


@dataclass(frozen=True)
class RotationSystem:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def edges(self) -> int:
        return len(self.sigma) // 2

    def vertices(self) -> list[tuple[int, ...]]:
        return cycles(self.sigma)

    def faces(self) -> list[tuple[int, ...]]:
        return cycles(tuple(self.sigma[self.alpha[x]] for x in range(len(self.sigma))))

    def is_connected(self) -> bool:
        return _connected(self.sigma, self.alpha)

    @property
    def genus(self) -> int:
        chi = len(self.vertices()) - self.edges + len(self.faces())
        if chi % 2 or chi > 2:
            raise ArithmeticError(f"Euler characteristic {chi} is not that of an orientable surface")
        return (2 - chi) // 2

    def census_line(self) -> str:
        vertex_part = " ".join("(" + " ".join(map(str, c)) + ")" for c in self.vertices())
        pairs = " ".join(f"{x}-{self.alpha[x]}" for x in range(self.dart_count) if x < self.alpha[x])
        return f"{vertex_part};{pairs};{self.genus};{len(self.faces())}"


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def _connected(sigma: Sequence[int], alpha: Sequence[int]) -> bool:
    parent = list(range(len(sigma)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(len(sigma)):
        for y in (sigma[x], alpha[x]):
            a, b = find(x), find(y)
            if a != b:
                parent[a] = b
    root = find(0)
    return all(find(x) == root for x in range(len(sigma)))


def _face_count(sigma: Sequence[int], alpha: Sequence[int]) -> int:
    n = len(sigma)
    seen = [False] * n
    faces = 0
    for start in range(n):
        if seen[start]:
            continue
        faces += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = sigma[alpha[x]]
    return faces


def normalize_profile(profile: Profile, vertices: Optional[int] = None) -> tuple[int, ...]:
    """Degree multiset as a sorted tuple; an int means ``vertices`` copies of it."""
    if isinstance(profile, int):
        if vertices is None:
            raise ValueError("vertex count required for a uniform degree")
        degrees = (profile,) * vertices
    else:
        degrees = tuple(profile)
    if not degrees or any(x < 1 for x in degrees):
        raise ValueError(f"bad degree profile {degrees}")
    if sum(degrees) % 2:
        raise ValueError(f"degree sum of {degrees} is odd")
    return tuple(sorted(degrees))


def _check_size(darts: int, limit: int) -> None:
    if darts > limit:
        raise OracleSizeError(f"{darts} darts exceeds the oracle bound of {limit}")


def _genus_of(vertex_count: int, darts: int, faces: int) -> int:
    chi = vertex_count - darts // 2 + faces
    return (2 - chi) // 2


# -- labelled route ---------------------------------------------------------


def _standard_sigma(degrees: Sequence[int]) -> tuple[int, ...]:
    sigma = []
    start = 0
    for k in degrees:
        sigma += [start + (j + 1) % k for j in range(k)]
        start += k
    return tuple(sigma)


def _matchings(free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    first = free[0]
    for i in range(1, len(free)):
        rest = free[1:i] + free[i + 1 :]
        for tail in _matchings(rest):
            yield [(first, free[i])] + tail


def centralizer_order(degrees: Sequence[int]) -> int:
    """z_lambda: size of the centralizer of a permutation with these cycle lengths."""
    out = 1
    for k, c in Counter(degrees).items():
        out *= k**c * math.factorial(c)
    return out


@dataclass(frozen=True)
class LabelledCensus:
    degrees: tuple[int, ...]
    transitive: int
    by_genus: dict[int, int]
    by_genus_one_face: dict[int, int]

    @property
    def darts(self) -> int:
        return sum(self.degrees)

    @property
    def sigma_count(self) -> int:
        return math.factorial(self.darts) // centralizer_order(self.degrees)

    def labelled(self, matchings: int) -> int:
        """Labelled (sigma, alpha) pairs, given matchings counted against the fixed sigma."""
        return self.sigma_count * matchings

    def rooted(self, matchings: int) -> int:
        labelled = self.labelled(matchings)
        return as_integer(Fraction(labelled, math.factorial(self.darts - 1)), "labelled pairs / (2n-1)!")


def labelled_census(profile: Profile, vertices: Optional[int] = None, max_darts: int = DEFAULT_DART_LIMIT) -> LabelledCensus:
    """Run through every matching against one fixed sigma of the given cycle type."""
    degrees = normalize_profile(profile, vertices)
    darts = sum(degrees)
    _check_size(darts, max_darts)
    sigma = _standard_sigma(degrees)
    by_genus: Counter[int] = Counter()
    one_face: Counter[int] = Counter()
    transitive = 0
    alpha = [0] * darts
    for matching in _matchings(list(range(darts))):
        for a, b in matching:
            alpha[a], alpha[b] = b, a
        if not _connected(sigma, alpha):
            continue
        transitive += 1
        faces = _face_count(sigma, alpha)
        genus = _genus_of(len(degrees), darts, faces)
        by_genus[genus] += 1
        if faces == 1:
            one_face[genus] += 1
    return LabelledCensus(degrees, transitive, dict(by_genus), dict(one_face))


# -- orderly generation of rooted maps --------------------------------------


def rooted_code(sigma: Sequence[int], alpha: Sequence[int], root: int) -> tuple[int, ...]:
    """Relabel darts in breadth-first order from ``root`` (sigma before alpha)."""
    label = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        for y in (sigma[x], alpha[x]):
            if y not in label:
                label[y] = len(order)
                order.append(y)
        i += 1
    code = []
    for x in order:
        code.append(label[sigma[x]])
        code.append(label[alpha[x]])
    return tuple(code)


def rooted_maps(profile: Profile, vertices: Optional[int] = None, max_darts: int = DEFAULT_DART_LIMIT) -> Iterator[RotationSystem]:
    """Every rooted map with the given vertex degrees, each exactly once, root = dart 0.

    Darts are labelled in the order :func:`rooted_code` visits them, so the
    choice sequence below is in bijection with rooted maps.
    """
    degrees = normalize_profile(profile, vertices)
    darts = sum(degrees)
    _check_size(darts, max_darts)
    remaining = Counter(degrees)
    # per vertex: list of dart labels by rotation position (None while unlabelled)
    vertex_slots: list[list[Optional[int]]] = []
    where: list[tuple[int, int]] = []  # dart -> (vertex, position)
    sigma: list[Optional[int]] = [None] * darts
    alpha: list[Optional[int]] = [None] * darts

    def new_dart(vertex: int, position: int) -> int:
        label = len(where)
        where.append((vertex, position))
        vertex_slots[vertex][position] = label
        return label

    def drop_dart() -> None:
        vertex, position = where.pop()
        vertex_slots[vertex][position] = None

    def open_vertex(degree: int) -> int:
        remaining[degree] -= 1
        vertex_slots.append([None] * degree)
        return new_dart(len(vertex_slots) - 1, 0)

    def close_vertex(degree: int) -> None:
        drop_dart()
        vertex_slots.pop()
        remaining[degree] += 1

    def step(x: int) -> Iterator[None]:
        if x == len(where):
            if x == darts:
                yield None
            return
        vertex, position = where[x]
        slots = vertex_slots[vertex]
        nxt = (position + 1) % len(slots)
        created = slots[nxt] is None
        if created:
            new_dart(vertex, nxt)
        sigma[x] = slots[nxt]
        yield from pair(x)
        sigma[x] = None
        if created:
            drop_dart()

    def pair(x: int) -> Iterator[None]:
        if alpha[x] is not None:
            yield from step(x + 1)
            return
        for y in range(x + 1, len(where)):
            if alpha[y] is None:
                alpha[x], alpha[y] = y, x
                yield from step(x + 1)
                alpha[x] = alpha[y] = None
        for vertex, slots in enumerate(vertex_slots):
            for position, label in enumerate(slots):
                if label is None:
                    y = new_dart(vertex, position)
                    alpha[x], alpha[y] = y, x
                    yield from step(x + 1)
                    alpha[x] = alpha[y] = None
                    drop_dart()
        for degree in sorted(k for k, c in remaining.items() if c):
            y = open_vertex(degree)
            alpha[x], alpha[y] = y, x
            yield from step(x + 1)
            alpha[x] = alpha[y] = None
            close_vertex(degree)

    for degree in sorted(remaining):
        open_vertex(degree)
        for _ in step(0):
            yield RotationSystem(tuple(sigma), tuple(alpha))  # type: ignore[arg-type]
        close_vertex(degree)


def is_canonical_root(m: RotationSystem) -> bool:
    """True when dart 0 gives the minimal root code of ``m`` (one rooting per class)."""
    base = rooted_code(m.sigma, m.alpha, 0)
    return all(rooted_code(m.sigma, m.alpha, r) >= base for r in range(1, m.dart_count))


@dataclass(frozen=True)
class MapCensus:
    degrees: tuple[int, ...]
    rooted: dict[tuple[int, int], int]  # (genus, faces) -> rooted maps
    unrooted: dict[tuple[int, int], int]

    def rooted_count(self, genus: Optional[int] = None, faces: Optional[int] = None) -> int:
        return _select(self.rooted, genus, faces)

    def unrooted_count(self, genus: Optional[int] = None, faces: Optional[int] = None) -> int:
        return _select(self.unrooted, genus, faces)


def _select(table: dict[tuple[int, int], int], genus: Optional[int], faces: Optional[int]) -> int:
    return sum(
        c for (g, f), c in table.items() if (genus is None or g == genus) and (faces is None or f == faces)
    )


def map_census(profile: Profile, vertices: Optional[int] = None, max_darts: int = DEFAULT_DART_LIMIT) -> MapCensus:
    degrees = normalize_profile(profile, vertices)
    rooted: Counter[tuple[int, int]] = Counter()
    unrooted: Counter[tuple[int, int]] = Counter()
    for m in rooted_maps(degrees, max_darts=max_darts):
        faces = _face_count(m.sigma, m.alpha)
        key = (_genus_of(len(degrees), m.dart_count, faces), faces)
        rooted[key] += 1
        if is_canonical_root(m):
            unrooted[key] += 1
    return MapCensus(degrees, dict(rooted), dict(unrooted))


# -- public oracle entry points ---------------------------------------------


def oracle_rooted(profile: Profile, g: int, vertices: Optional[int] = None, max_darts: int = DEFAULT_DART_LIMIT) -> int:
    """Rooted maps of genus g with the given degree profile, from the labelled census."""
    census = labelled_census(profile, vertices, max_darts)
    return census.rooted(census.by_genus.get(g, 0))


def oracle_unrooted(d: int, v: int, g: int, max_darts: int = DEFAULT_DART_LIMIT) -> int:
    """Isomorphism classes of d-regular maps of genus g with v vertices."""
    return map_census(d, v, max_darts).unrooted_count(genus=g)


def oracle_one_face(
    d: int,
    g: int,
    allow_leaves: bool = False,
    k: Optional[int] = None,
    unrooted: bool = False,
    max_darts: int = DEFAULT_DART_LIMIT,
) -> int:
    """One-face maps of genus g: d-regular, or k degree-d vertices plus leaves."""
    if allow_leaves:
        if k is None:
            raise ValueError("k is required when leaves are allowed")
        leaves = (d - 2) * k + 2 - 4 * g
        if leaves < 0 or k < 0 or (k == 0 and leaves == 0):
            return 0
        profile: tuple[int, ...] = (d,) * k + (1,) * leaves
    else:
        if d < 3 or (4 * g - 2) % (d - 2):
            return 0
        v = (4 * g - 2) // (d - 2)
        if (d * v) % 2:
            return 0
        profile = (d,) * v
    census = map_census(profile, max_darts=max_darts)
    if unrooted:
        return census.unrooted_count(genus=g, faces=1)
    return census.rooted_count(genus=g, faces=1)


def census_lines(profile: Profile, vertices: Optional[int] = None, max_darts: int = DEFAULT_DART_LIMIT) -> Iterable[str]:
    for m in rooted_maps(profile, vertices, max_darts):
        yield m.census_line()
