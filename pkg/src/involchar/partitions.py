"""Integer partitions.

A :class:`Partition` is an immutable, hashable tuple of positive parts in
nonincreasing order.  Partitions of ``n`` are enumerated in descending
lexicographic order, so for ``n = 6`` the order is::

    6, 51, 42, 411, 33, 321, 3111, 222, 2211, 21111, 111111
"""
from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, List, Mapping

from .errors import ContractError, ParseError, check_limit

MAX_PARTITION_N = 40


class Partition(tuple):
    """Nonincreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ContractError(f"partition parts must be positive integers, got {p!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ContractError(f"partition parts must be nonincreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def is_rectangular(self) -> bool:
        """True for ``k^m`` (all parts equal); the empty partition is not rectangular."""
        return bool(self) and self[0] == self[-1]

    def compact(self) -> str:
        """Figure-style label such as ``321``; parts >= 10 force comma separation."""
        if not self:
            return "0"
        if self[0] < 10:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def exponent_form(self) -> str:
        """Label such as ``1^2 2 4`` (ascending part sizes, exponent 1 suppressed)."""
        if not self:
            return "0"
        m = to_multiplicity(self)
        return " ".join(f"{i}^{j}" if j > 1 else str(i) for i, j in sorted(m.items()))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self))


def enumerate_partitions(n: int, max_n: int = MAX_PARTITION_N) -> List[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ContractError("n must be non-negative")
    check_limit("n", n, max_n)
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple:
    return tuple(Partition(p) for p in _gen(n, n))


def _gen(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def to_multiplicity(p: Partition) -> Dict[int, int]:
    """Map each part size ``i`` to its multiplicity ``j_i``."""
    return dict(sorted(Counter(p).items()))


def from_multiplicity(mults: Mapping[int, int]) -> Partition:
    parts = []
    for i, j in mults.items():
        if i < 1 or j < 0:
            raise ContractError(f"invalid multiplicity entry {i}:{j}")
        parts.extend([i] * j)
    return Partition.from_parts(parts)


def centralizer_order(p: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``p``."""
    z = 1
    for i, j in to_multiplicity(p).items():
        z *= i**j * factorial(j)
    return z


def class_size(p: Partition) -> int:
    return factorial(p.n) // centralizer_order(p)


_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1,1"`` or exponent form ``"1^2,2,3"``; whitespace is ignored.

    Parts are sorted nonincreasing.  An empty string (or ``"0"``) is the
    empty partition.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "0", "()", "[]"):
        return Partition()
    parts: List[int] = []
    pos = 0
    for token in compact.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise ParseError(f"bad partition token {token!r}", text, pos)
        size = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if size < 1:
            raise ParseError(f"bad partition token {token!r}: parts must be positive", text, pos)
        parts.extend([size] * count)
        pos += len(token) + 1
    if not parts:
        raise ParseError(f"bad partition {text!r}: no parts", text, 0)
    return Partition.from_parts(parts)
