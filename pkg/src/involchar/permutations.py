"""Permutations of ``{1..n}`` in cycle notation.

Products follow the right-to-left convention: ``sigma * tau`` applies
``tau`` first, so ``(sigma * tau)(i) == sigma(tau(i))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .errors import ContractError, ParseError, check_limit
from .partitions import Partition

MAX_INVOLUTION_N = 12


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i - 1]`` is the image of ``i``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ContractError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ContractError(f"point {a} out of range 1..{n}")
                if a in seen:
                    raise ContractError(f"point {a} repeated")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> List[Tuple[int, ...]]:
        """All cycles (fixed points included), each starting at its smallest
        point, sorted by smallest point."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def is_involution(self) -> bool:
        return is_involution(self)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, n={self.n})"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """The product ``sigma tau``: apply ``tau``, then ``sigma``."""
    if sigma.n != tau.n:
        raise ContractError(f"degree mismatch: {sigma.n} vs {tau.n}")
    s = sigma.images
    return Permutation(tuple(s[t - 1] for t in tau.images))


def cycle_type(p: Permutation) -> Partition:
    return Partition.from_parts(len(c) for c in p.cycles())


def is_involution(p: Permutation) -> bool:
    im = p.images
    return all(im[j - 1] == i for i, j in enumerate(im, 1))


def format_cycles(p: Permutation, fixed_points: bool = True) -> str:
    """Cycle notation with fixed points printed, e.g. ``(135)(26)(4)(7)``.

    Points are written without separators when ``n <= 9`` and separated by
    single spaces otherwise, so the output always re-parses to ``p``.
    """
    sep = "" if p.n <= 9 else " "
    cycles = [c for c in p.cycles() if fixed_points or len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(135)(26)"`` or ``"(1 12)(2,11)"``.

    Inside parentheses points are separated by whitespace or commas.  A run
    of digits is split into single-digit points only when ``n <= 9``.
    ``"()"`` (or an empty string) is the identity.
    """
    if n < 1:
        raise ContractError("degree must be positive")
    cycles: List[List[int]] = []
    seen = {}
    i = 0
    L = len(text)
    while i < L:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", text, i)
        i += 1
        cyc: List[int] = []
        while True:
            if i >= L:
                raise ParseError("unterminated cycle", text, i)
            ch = text[i]
            if ch == ")":
                i += 1
                break
            if ch.isspace() or ch == ",":
                i += 1
                continue
            if not ch.isdigit():
                raise ParseError(f"unexpected character {ch!r}", text, i)
            start = i
            while i < L and text[i].isdigit():
                i += 1
            digits = text[start:i]
            if n <= 9:
                points = [(int(d), start + k) for k, d in enumerate(digits)]
            else:
                points = [(int(digits), start)]
            for a, pos in points:
                if not 1 <= a <= n:
                    raise ParseError(f"point {a} out of range 1..{n}", text, pos)
                if a in seen:
                    raise ParseError(f"point {a} repeated", text, pos)
                seen[a] = pos
                cyc.append(a)
        if cyc:
            cycles.append(cyc)
    return Permutation.from_cycles(cycles, n)


def enumerate_involutions(n: int, max_n: int = MAX_INVOLUTION_N) -> Iterator[Permutation]:
    """Yield every involution of ``S_n`` once.

    Built recursively: the largest point is either fixed or swapped with one
    of the smaller points.
    """
    if n < 0:
        raise ContractError("n must be non-negative")
    check_limit("n", n, max_n)
    for images in _involution_images(n):
        yield Permutation(tuple(images))


def _involution_images(n: int) -> Iterator[List[int]]:
    if n == 0:
        yield []
        return
    for rest in _involution_images(n - 1):
        yield rest + [n]
    if n >= 2:
        for partner in range(1, n):
            # relabel the n-2 remaining points onto {1..n-1} minus partner
            others = [p for p in range(1, n) if p != partner]
            for rest in _involution_images(n - 2):
                images = [0] * n
                for a, b in zip(others, rest):
                    images[a - 1] = others[b - 1]
                images[partner - 1] = n
                images[n - 1] = partner
                yield images


def canonical_of_type(mu: Partition) -> Permutation:
    """Permutation whose cycles are consecutive blocks of sizes ``mu_1, mu_2, ...``."""
    mu = Partition(mu)
    cycles = []
    start = 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, mu.n)


def conjugate_by(g: Permutation, p: Permutation) -> Permutation:
    """``g p g^{-1}``."""
    return compose(compose(g, p), g.inverse())
