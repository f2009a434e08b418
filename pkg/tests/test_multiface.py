import math
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from regmaps.multiface import (
    AlmostRegularCounter,
    AlmostRegularKey,
    counter_for,
    q_almost_regular,
    reset_caches,
    rooted_regular,
)
from regmaps.oracle import labelled_census, oracle_rooted
from regmaps.params import multi_face_params


@pytest.mark.parametrize(
    "d, g, v, expected",
    [(3, 0, 2, 4), (3, 1, 2, 1), (4, 0, 1, 2), (4, 1, 1, 1), (6, 2, 2, 795), (3, 5, 20, 30625920998400),
     (3, 0, 6, 336), (4, 1, 3, 198), (6, 0, 1, 5), (5, 5, 6, 1038647610)],
)
def test_table_examples(d, g, v, expected):
    assert rooted_regular(d, g, v) == expected


@pytest.mark.parametrize(
    "key, expected",
    [
        (AlmostRegularKey(5, 0, 0, 0), 1),
        (AlmostRegularKey(3, 0, 1, 3), 4),
        (AlmostRegularKey(3, 1, 1, 3), 1),
        (AlmostRegularKey(3, -1, 1, 3), 0),
        (AlmostRegularKey(3, 0, 1, 3, (0,)), 0),
    ],
)
def test_q_examples(key, expected):
    assert q_almost_regular(key, AlmostRegularCounter(key.d)) == expected


def test_infeasible_cells_are_zero():
    assert rooted_regular(3, 0, 3) == 0
    assert rooted_regular(4, 2, 1) == 0
    assert rooted_regular(5, 0, 1) == 0


def test_base_case():
    c = AlmostRegularCounter(3)
    assert c(0, 0, 0) == 1
    assert c(1, 0, 0) == 0
    assert c(0, 0, 2) == 1  # one loop at a degree-2 vertex
    assert c(0, 0, 1, (1,)) == 1  # a single edge


def _reference(d, g, n, roots):
    """Plain evaluation over an ordered tuple of roots, summing over labelled position subsets."""
    if g < 0 or n < 0:
        return 0
    d1, rest = roots[0], list(roots[1:])
    if d1 == 0:
        return 1 if (g == 0 and n == 0 and not rest) else 0
    if any(x <= 0 for x in rest) or (d * n + sum(roots)) % 2:
        return 0
    if 2 * g > (d * n + sum(roots)) // 2 - (n + len(roots)) + 1:
        return 0
    total = 0
    if n:
        total += _reference(d, g, n - 1, (d1 + d - 2, *rest))
    for i, x in enumerate(rest):
        total += x * _reference(d, g, n, (d1 + x - 2, *rest[:i], *rest[i + 1 :]))
    if d1 >= 2:
        inner = d1 - 2
        for a in range(1, inner):
            total += _reference(d, g - 1, n, (a, *rest, inner - a))
        idx = range(len(rest))
        for size in range(len(rest) + 1):
            for chosen in combinations(idx, size):
                left = tuple(rest[i] for i in chosen)
                right = tuple(rest[i] for i in idx if i not in chosen)
                for a in range(inner + 1):
                    for n1 in range(n + 1):
                        for g1 in range(g + 1):
                            total += _reference(d, g1, n1, (a, *left)) * _reference(
                                d, g - g1, n - n1, (inner - a, *right)
                            )
    return total


REFERENCE_CASES = [
    (3, 0, 1, 3, (1,)),
    (3, 0, 0, 2, (1, 1)),
    (3, 1, 1, 3, (3,)),
    (4, 0, 1, 2, (2, 2)),
    (4, 1, 0, 4, (2, 2)),
    (3, 0, 2, 1, (2, 1)),
    (5, 1, 1, 3, (2,)),
]


@pytest.mark.parametrize("d, g, n, d1, rest", REFERENCE_CASES)
def test_memoized_matches_reference(d, g, n, d1, rest):
    assert AlmostRegularCounter(d)(g, n, d1, rest) == _reference(d, g, n, (d1, *rest))


@pytest.mark.parametrize("d, g, n, d1, rest", REFERENCE_CASES)
def test_symmetric_in_other_roots(d, g, n, d1, rest):
    c = AlmostRegularCounter(d)
    assert c(g, n, d1, rest) == c(g, n, d1, tuple(reversed(rest)))
    assert _reference(d, g, n, (d1, *rest)) == _reference(d, g, n, (d1, *reversed(rest)))


def test_memo_and_plain_agree():
    for d in (3, 4):
        memo, plain = AlmostRegularCounter(d), AlmostRegularCounter(d, memoize=False)
        for n in range(0, 8 // d + 1):
            for d1 in range(1, 5):
                for rest in [(), (1,), (2,), (1, 2)]:
                    if d * n + d1 + sum(rest) > 9:
                        continue
                    for g in range(3):
                        assert memo(g, n, d1, rest) == plain(g, n, d1, rest)


ORACLE_CELLS = [
    (d, v) for d in range(1, 11) for v in range(1, 11) if d * v <= 10 and (d * v) % 2 == 0
]


@pytest.mark.parametrize("d, v", ORACLE_CELLS)
def test_rooted_regular_matches_oracle(d, v):
    census = labelled_census(d, v)
    total = 0
    for g in range(0, d * v // 4 + 1):
        want = census.rooted(census.by_genus.get(g, 0))
        assert rooted_regular(d, g, v) == want
        total += want
    assert total == census.rooted(census.transitive)


def _profile_q(g, n, d, roots):
    """Q recovered from rooted counts of the full degree profile."""
    profile = list(roots) + [d] * n
    darts = sum(profile)
    rooted = oracle_rooted(profile, g)
    have, need = Counter(profile), Counter(roots)
    ways = math.prod(math.perm(have[k], need[k]) for k in need) * math.prod(roots)
    return Fraction(rooted * ways, darts)


@pytest.mark.parametrize(
    "d, g, n, roots",
    [
        (3, 0, 2, (2, 2)),
        (3, 0, 1, (1, 2)),
        (3, 1, 1, (2, 2, 1)),
        (4, 0, 1, (1, 1, 2)),
        (3, 0, 2, (1, 1, 2)),
        (3, 0, 2, (3, 1)),
        (4, 1, 1, (3, 1)),
        (2, 0, 1, (1, 1, 1, 1)),
    ],
)
def test_multi_root_counts_match_oracle(d, g, n, roots):
    assert AlmostRegularCounter(d)(g, n, roots[0], roots[1:]) == _profile_q(g, n, d, roots)


def test_key_string_round_trip():
    key = AlmostRegularKey(3, 1, 4, 5, (2, 1, 2))
    assert key.rest == (1, 2, 2)
    assert key.to_string() == "3|1|4|5|1,2,2"
    assert AlmostRegularKey.from_string(key.to_string()) == key
    assert AlmostRegularKey.from_string("4|0|2|4|") == AlmostRegularKey(4, 0, 2, 4)


def test_cache_save_and_load(tmp_path):
    c = AlmostRegularCounter(4)
    value = c(2, 5, 4)
    path = tmp_path / "q.json"
    c.save(path)
    fresh = AlmostRegularCounter(4)
    assert fresh.load(path) == len(c.memo)
    assert fresh.memo == c.memo
    assert fresh(2, 5, 4) == value
    assert AlmostRegularCounter(3).load(path) == 0


def test_cache_rejects_foreign_format(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "other", "entries": {}}')
    with pytest.raises(ValueError):
        AlmostRegularCounter(3).load(path)


def test_counter_mismatch_and_shared_counter():
    with pytest.raises(ValueError):
        AlmostRegularCounter(3).count(AlmostRegularKey(4, 0, 0, 4))
    reset_caches()
    assert counter_for(3) is counter_for(3)
    assert q_almost_regular(AlmostRegularKey(3, 0, 1, 3)) == rooted_regular(3, 0, 2)


def test_params_gate():
    for d, g, v in [(3, 0, 2), (5, 1, 4), (6, 3, 4)]:
        assert multi_face_params(d, g, v) is not None
        assert rooted_regular(d, g, v) > 0
