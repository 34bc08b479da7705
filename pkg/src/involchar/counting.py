"""Closed-form counts of factorizations into two involutions.

``r_poly(m, k)`` counts the ordered involution pairs whose product is a
fixed permutation with ``m`` cycles, all of length ``k``::

    R_m(k) = sum_{0 <= i <= m/2} k^(m-i) m! / (2^i i! (m-2i)!)

The ``i``-th term counts graphs in which ``i`` pairs of cycles are joined
and the remaining ``m - 2i`` stay isolated; each component can be drawn in
``k`` ways.  Cycles of different lengths never share a component, so the
count for a general cycle type is a product over part sizes.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import ContractError
from .partitions import Partition, to_multiplicity


@lru_cache(maxsize=4096)
def r_poly(m: int, k: int) -> int:
    if m < 0 or k < 1:
        raise ContractError(f"r_poly needs m >= 0 and k >= 1, got m={m}, k={k}")
    term = k**m  # i = 0
    total = term
    for i in range(m // 2):
        # ratio of consecutive terms is (m-2i)(m-2i-1) / (2 (i+1) k); the
        # numerator product is always divisible
        num = term * (m - 2 * i) * (m - 2 * i - 1)
        den = 2 * (i + 1) * k
        term, rem = divmod(num, den)
        assert rem == 0
        total += term
    return total


def count_decompositions(mu) -> int:
    """Number of ordered pairs of involutions whose product has cycle type ``mu``."""
    mu = Partition(mu)
    total = 1
    for size, mult in to_multiplicity(mu).items():
        total *= r_poly(mult, size)
    return total
