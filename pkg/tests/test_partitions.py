from math import factorial

import pytest
from hypothesis import given, strategies as st

from involchar.errors import ContractError, ParseError, ResourceLimitError
from involchar.partitions import (
    Partition,
    centralizer_order,
    class_size,
    enumerate_partitions,
    from_multiplicity,
    parse_partition,
    to_multiplicity,
)
from involchar.permutations import Permutation, cycle_type
from itertools import permutations as all_perms


def pentagonal_p(n_max):
    """Partition numbers from Euler's pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_empty_partition():
    assert enumerate_partitions(0) == [Partition()]


def test_figure_order_n6():
    got = [p.compact() for p in enumerate_partitions(6)]
    assert got == ["6", "51", "42", "411", "33", "321", "3111", "222", "2211", "21111", "111111"]


def test_count_n16():
    assert len(enumerate_partitions(16)) == 231


def test_counts_match_pentagonal_recurrence():
    p = pentagonal_p(20)
    for n in range(21):
        parts = enumerate_partitions(n)
        assert len(parts) == p[n]
        assert len(set(parts)) == p[n]
        assert all(q.n == n for q in parts)


def test_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_partitions(41)
    assert len(enumerate_partitions(41, max_n=None)) == pentagonal_p(41)[41]


@pytest.mark.parametrize(
    "parts, mults",
    [((3, 2, 1, 1), {1: 2, 2: 1, 3: 1}), ((7,), {7: 1}), ((2, 2, 2), {2: 3})],
)
def test_to_multiplicity(parts, mults):
    assert to_multiplicity(Partition(parts)) == mults
    assert from_multiplicity(mults) == Partition(parts)


def test_multiplicity_round_trip():
    for n in range(13):
        for p in enumerate_partitions(n):
            m = to_multiplicity(p)
            assert sum(i * j for i, j in m.items()) == n
            assert from_multiplicity(m) == p


def brute_class_size(mu):
    n = sum(mu)
    return sum(1 for images in all_perms(range(1, n + 1)) if cycle_type(Permutation(images)) == mu)


@pytest.mark.parametrize("parts, z", [((1, 1, 1, 1), 24), ((2, 2, 1, 1), 16), ((6,), 6)])
def test_centralizer_order(parts, z):
    mu = Partition(parts)
    assert centralizer_order(mu) == z
    assert factorial(mu.n) // z == brute_class_size(mu)


def test_class_sizes_sum_to_group_order():
    for n in range(1, 11):
        assert sum(class_size(mu) for mu in enumerate_partitions(n)) == factorial(n)


def test_invalid_partitions():
    with pytest.raises(ContractError):
        Partition((1, 2))
    with pytest.raises(ContractError):
        Partition((2, 0))


@pytest.mark.parametrize(
    "text, parts",
    [
        ("3,2,1,1", (3, 2, 1, 1)),
        ("1^2,2,3", (3, 2, 1, 1)),
        (" 1 ^ 2 , 3 ,2 ", (3, 2, 1, 1)),
        ("1^6", (1,) * 6),
        ("7", (7,)),
        ("0", ()),
        ("10,12", (12, 10)),
    ],
)
def test_parse(text, parts):
    assert parse_partition(text) == Partition(parts)


@pytest.mark.parametrize("text", ["3,,1", "a", "3,-1", "2^", "0,0"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as exc:
        parse_partition(text)
    assert "token" in str(exc.value)


@given(st.lists(st.integers(1, 9), max_size=8))
def test_print_parse_round_trip(parts):
    p = Partition.from_parts(parts)
    assert parse_partition(str(p)) == p
    assert parse_partition(p.exponent_form().replace(" ", ",")) == p
