"""Rooted almost-regular maps via root-edge contraction.

``Q(d; g; n; d1, d2, ..., dk)`` counts genus-g maps with k distinguished
("root") vertices of degrees d1..dk, each carrying a marked incident dart,
plus n further vertices of degree d.  The first root edge is either
contracted (it joins two distinct vertices) or cut along (it is a loop),
which gives four families of smaller configurations:

* contraction into an ordinary vertex:   Q(g; n-1; d1+d-2, rest)
* contraction into another root vertex:  sum_i d_i Q(g; n; d1+d_i-2, rest - d_i)
* non-separating loop:                   sum_a Q(g-1; n; a, rest + {d1-2-a})
* separating loop:                       sum Q(g'; n'; a, I) Q(g-g'; n-n'; d1-2-a, rest - I)

with Q(d; 0; 0; 0) = 1 (the single vertex) as the only base case.
"""

from __future__ import annotations

import json
import math
import sys
import threading
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Union

from regmaps.params import multi_face_params

CACHE_FORMAT = "regmaps-q-cache/1"

Rest = tuple[int, ...]


@dataclass(frozen=True)
class AlmostRegularKey:
    d: int
    g: int
    n: int
    d1: int
    rest: Rest = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rest", tuple(sorted(self.rest)))

    def to_string(self) -> str:
        return f"{self.d}|{self.g}|{self.n}|{self.d1}|{','.join(map(str, self.rest))}"

    @classmethod
    def from_string(cls, text: str) -> "AlmostRegularKey":
        d, g, n, d1, rest = text.split("|")
        return cls(int(d), int(g), int(n), int(d1), tuple(int(x) for x in rest.split(",") if x))


def _group(rest: Rest) -> list[tuple[int, int]]:
    """Distinct values of a sorted tuple with their multiplicities."""
    out: list[tuple[int, int]] = []
    for x in rest:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def _remove_one(rest: Rest, value: int) -> Rest:
    i = rest.index(value)
    return rest[:i] + rest[i + 1 :]


def _insert(rest: Rest, value: int) -> Rest:
    return tuple(sorted(rest + (value,)))


_splits_cache: dict[Rest, list[tuple[Rest, Rest, int]]] = {}


def _splits(rest: Rest) -> list[tuple[Rest, Rest, int]]:
    """All (I, rest - I, weight) over sub-multisets I of ``rest``.

    The weight is the number of labelled position subsets realizing I, so the
    sum over sub-multisets equals the sum over subsets of root positions.
    """
    cached = _splits_cache.get(rest)
    if cached is not None:
        return cached
    groups = _group(rest)
    out = []
    for choice in product(*(range(c + 1) for _, c in groups)):
        inner: list[int] = []
        outer: list[int] = []
        weight = 1
        for (value, count), j in zip(groups, choice):
            inner += [value] * j
            outer += [value] * (count - j)
            weight *= math.comb(count, j)
        out.append((tuple(inner), tuple(outer), weight))
    _splits_cache[rest] = out
    return out


class AlmostRegularCounter:
    """Memoized evaluator of Q for one fixed vertex degree ``d``.

    One instance is not meant to be shared between threads while computing;
    :func:`counter_for` hands out a per-thread instance.
    """

    def __init__(self, d: int, memoize: bool = True) -> None:
        if d < 1:
            raise ValueError(f"degree must be positive, got {d}")
        self.d = d
        self.memoize = memoize
        self.memo: dict[tuple[int, int, int, Rest], int] = {}

    def __call__(self, g: int, n: int, d1: int, rest: Iterable[int] = ()) -> int:
        rest = tuple(sorted(rest))
        limit = 200 + 4 * (self.d * max(n, 0) + d1 + sum(rest))
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
        return self._q(g, n, d1, rest)

    def count(self, key: AlmostRegularKey) -> int:
        if key.d != self.d:
            raise ValueError(f"key degree {key.d} does not match counter degree {self.d}")
        return self(key.g, key.n, key.d1, key.rest)

    def _feasible(self, g: int, n: int, d1: int, rest: Rest) -> bool:
        if g < 0 or n < 0 or d1 < 0:
            return False
        if rest and rest[0] <= 0:
            return False
        darts = self.d * n + d1 + sum(rest)
        if darts % 2:
            return False
        vertices = n + 1 + len(rest)
        # at least one face: 2 - 2g - V + E >= 1
        return 2 * g <= darts // 2 - vertices + 1

    def _q(self, g: int, n: int, d1: int, rest: Rest) -> int:
        if d1 == 0:
            return 1 if (g == 0 and n == 0 and not rest) else 0
        if not self._feasible(g, n, d1, rest):
            return 0
        key = (g, n, d1, rest)
        if self.memoize:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        total = self._expand(g, n, d1, rest)
        if self.memoize:
            self.memo[key] = total
        return total

    def _expand(self, g: int, n: int, d1: int, rest: Rest) -> int:
        d = self.d
        q = self._q
        total = 0
        if n > 0:
            total += q(g, n - 1, d1 + d - 2, rest)
        for value, count in _group(rest):
            total += count * value * q(g, n, d1 + value - 2, _remove_one(rest, value))
        if d1 >= 2:
            inner = d1 - 2
            if g > 0:
                for a in range(1, inner):
                    total += q(g - 1, n, a, _insert(rest, inner - a))
            for sub, comp, weight in _splits(rest):
                sub_sum = sum(sub)
                for a in range(inner + 1):
                    b = inner - a
                    for n1 in range(n + 1):
                        if (d * n1 + a + sub_sum) % 2:
                            continue
                        for g1 in range(g + 1):
                            left = q(g1, n1, a, sub)
                            if left:
                                total += weight * left * q(g - g1, n - n1, b, comp)
        return total

    def save(self, path: Union[str, Path]) -> None:
        entries = {
            AlmostRegularKey(self.d, *key[:3], key[3]).to_string(): str(value)
            for key, value in self.memo.items()
        }
        payload = {"format": CACHE_FORMAT, "entries": entries}
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")

    def load(self, path: Union[str, Path]) -> int:
        """Merge cached entries for this degree; returns how many were loaded."""
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("format") != CACHE_FORMAT:
            raise ValueError(f"unsupported cache format {payload.get('format')!r}")
        loaded = 0
        for text, value in payload["entries"].items():
            key = AlmostRegularKey.from_string(text)
            if key.d == self.d:
                self.memo[(key.g, key.n, key.d1, key.rest)] = int(value)
                loaded += 1
        return loaded


_local = threading.local()


def counter_for(d: int) -> AlmostRegularCounter:
    """Shared memoized counter for degree d, confined to the calling thread."""
    counters = getattr(_local, "counters", None)
    if counters is None:
        counters = _local.counters = {}
    counter = counters.get(d)
    if counter is None:
        counter = counters[d] = AlmostRegularCounter(d)
    return counter


def reset_caches() -> None:
    """Drop this thread's memo tables and the shared split cache."""
    _local.counters = {}
    _splits_cache.clear()


def q_almost_regular(key: AlmostRegularKey, counter: Optional[AlmostRegularCounter] = None) -> int:
    counter = counter or counter_for(key.d)
    return counter.count(key)


def rooted_regular(d: int, g: int, v: int) -> int:
    """Number of rooted d-regular maps of genus g with v vertices."""
    if multi_face_params(d, g, v) is None:
        return 0
    return counter_for(d)(g, v - 1, d)
