"""Irreducible characters of the symmetric group via border strips.

The character value at shape ``lam`` and class ``mu`` is the signed count of
rim-hook tableaux of shape ``lam`` and content ``mu``; a tableau's sign is
``(-1)**h`` with ``h`` the total number of row changes across its strips.
Values are computed by removing one border strip per part of ``mu``,
largest part first, memoizing on (remaining shape, remaining content).

Border strips are located through hook lengths: the cell ``(i, j)`` with
hook length ``r`` and leg ``l`` corresponds to the unique strip of size
``r`` running along the rim from the end of row ``i`` down to the bottom of
column ``j``; its height is ``l``.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import ContractError, check_limit
from .partitions import Partition, enumerate_partitions

MAX_TABLE_N = 20
MAX_TABLEAU_N = 14

Shape = Partition

_SHARED_MEMO: Dict[tuple, int] = {}
_SHARED_MEMO_LIMIT = 2_000_000


@dataclass(frozen=True)
class BorderStrip:
    cells: FrozenSet[Tuple[int, int]]
    height: int

    @property
    def size(self) -> int:
        return len(self.cells)

    def rows(self) -> int:
        return len({r for r, _ in self.cells})


@lru_cache(maxsize=1 << 16)
def _removals(shape: tuple, size: int) -> tuple:
    """``(remaining shape, height, hook cell)`` for every strip of ``size`` cells."""
    out = []
    rows = len(shape)
    if not rows or size > sum(shape):
        return ()
    conj = [0] * shape[0]
    for p in shape:
        for j in range(p):
            conj[j] += 1
    for i in range(rows):
        row_len = shape[i]
        for j in range(row_len):
            leg = conj[j] - 1 - i
            if row_len - j + leg == size:
                new = list(shape)
                for t in range(i, i + leg):
                    new[t] = shape[t + 1] - 1
                new[i + leg] = j
                out.append((tuple(x for x in new if x), leg, (i, j)))
    return tuple(out)


def border_strips(shape, size: int) -> List[Tuple[BorderStrip, Partition]]:
    """All border strips of exactly ``size`` cells removable from ``shape``."""
    shape = Partition(shape)
    if size < 1:
        raise ContractError("strip size must be positive")
    out = []
    for rest, leg, (i, _j) in _removals(tuple(shape), size):
        padded = list(rest) + [0] * (len(shape) - len(rest))
        cells = frozenset(
            (r, c) for r in range(i, i + leg + 1) for c in range(padded[r], shape[r])
        )
        out.append((BorderStrip(cells, leg), Partition(rest)))
    return out


def _mn(shape: tuple, content: tuple, memo: dict) -> int:
    if not content:
        return 1 if not shape else 0
    key = (shape, content)
    val = memo.get(key)
    if val is None:
        rest = content[1:]
        val = 0
        for sub, leg, _ in _removals(shape, content[0]):
            v = _mn(sub, rest, memo)
            val += -v if leg & 1 else v
        memo[key] = val
    return val


def mn_character(lam, mu, memo: Optional[dict] = None) -> int:
    """Character value at shape ``lam`` and cycle type ``mu``.

    ``mu`` may be given in any part order; the result does not depend on it.
    """
    lam = Partition(lam)
    content = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(content):
        raise ContractError(f"weight mismatch: |lambda|={sum(lam)} vs |mu|={sum(content)}")
    if memo is None:
        if len(_SHARED_MEMO) > _SHARED_MEMO_LIMIT:
            _SHARED_MEMO.clear()
        memo = _SHARED_MEMO
    return _mn(tuple(lam), content, memo)


def mn_character_ordered(lam, parts: Sequence[int]) -> int:
    """Character value removing strips in exactly the given part order."""
    lam = Partition(lam)
    if sum(lam) != sum(parts):
        raise ContractError("weight mismatch")
    return _mn(tuple(lam), tuple(parts), {})


@dataclass(frozen=True)
class RimHookTableau:
    """Tiling of ``shape`` by strips; strip ``t`` (innermost first) has ``content[t]`` cells."""

    shape: Partition
    content: Partition
    strips: Tuple[BorderStrip, ...]

    @property
    def height(self) -> int:
        return sum(s.height for s in self.strips)

    @property
    def sign(self) -> int:
        return -1 if self.height & 1 else 1

    def filling(self) -> List[List[int]]:
        """Row-by-row labels, 1-based strip numbers."""
        grid = [[0] * p for p in self.shape]
        for t, strip in enumerate(self.strips, 1):
            for r, c in strip.cells:
                grid[r][c] = t
        return grid


def rim_hook_tableaux(mu, shape=None, max_n: int = MAX_TABLEAU_N) -> Iterator[RimHookTableau]:
    """Every rim-hook tableau of content ``mu`` (optionally of one shape).

    Content parts are placed in nonincreasing order: strip 1 is the largest
    part and sits innermost.
    """
    content = Partition.from_parts(mu)
    check_limit("n", content.n, max_n)
    shapes = [Partition(shape)] if shape is not None else enumerate_partitions(content.n)
    for lam in shapes:
        if lam.n != content.n:
            raise ContractError("shape and content weights differ")
        for strips in _tableau_strips(lam, tuple(content)):
            yield RimHookTableau(lam, content, strips)


def _tableau_strips(shape: Partition, content: tuple) -> Iterator[tuple]:
    if not content:
        if not shape:
            yield ()
        return
    for strip, rest in border_strips(shape, content[-1]):
        for inner in _tableau_strips(rest, content[:-1]):
            yield inner + (strip,)


@lru_cache(maxsize=1 << 16)
def _signed_tableau_counts(shape: tuple, content: tuple) -> Tuple[int, int]:
    # (positive, negative) tableaux; outermost strip is content[-1]
    if not content:
        return (1, 0) if not shape else (0, 0)
    pos = neg = 0
    for sub, leg, _ in _removals(shape, content[-1]):
        p, q = _signed_tableau_counts(sub, content[:-1])
        if leg & 1:
            p, q = q, p
        pos += p
        neg += q
    return pos, neg


def signed_tableau_counts(lam, mu) -> Tuple[int, int]:
    """Numbers of positive and negative tableaux of shape ``lam``, content ``mu``."""
    return _signed_tableau_counts(tuple(Partition(lam)), tuple(Partition.from_parts(mu)))


def tableau_count(mu) -> int:
    """Total number of rim-hook tableaux of content ``mu`` over all shapes."""
    content = Partition.from_parts(mu)
    return sum(sum(signed_tableau_counts(lam, content)) for lam in enumerate_partitions(content.n))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    shapes: Tuple[Partition, ...]
    contents: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]  # values[row][col], rows indexed by shapes

    def value(self, lam, mu) -> int:
        return self.values[self.shapes.index(Partition(lam))][self.contents.index(Partition.from_parts(mu))]

    def column(self, mu) -> List[int]:
        c = self.contents.index(Partition.from_parts(mu))
        return [row[c] for row in self.values]

    def abs_column_sums(self) -> List[int]:
        return [sum(abs(row[c]) for row in self.values) for c in range(len(self.contents))]

    def rows_with_labels(self, extra_rows=()) -> List[List[str]]:
        out = [["lambda\\mu"] + [str(m) for m in self.contents]]
        for lam, row in zip(self.shapes, self.values):
            out.append([str(lam)] + [str(v) for v in row])
        for label, row in extra_rows:
            out.append([label] + [str(v) for v in row])
        return out

    def to_csv(self, extra_rows=()) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.rows_with_labels(extra_rows))
        return buf.getvalue()

    def to_json(self, extra_rows=()) -> str:
        doc = {
            "n": self.n,
            "lambda": [list(p) for p in self.shapes],
            "mu": [list(p) for p in self.contents],
            "values": [list(r) for r in self.values],
        }
        for label, row in extra_rows:
            doc[label] = list(row)
        return json.dumps(doc)

    def to_text(self, extra_rows=()) -> str:
        rows = [["lambda\\mu"] + [m.compact() for m in self.contents]]
        rows += [[lam.compact()] + [str(v) for v in row] for lam, row in zip(self.shapes, self.values)]
        rows += [[label] + [str(v) for v in row] for label, row in extra_rows]
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        lines = []
        for k, r in enumerate(rows):
            lines.append(" ".join(cell.rjust(w) if c else cell.ljust(w) for c, (cell, w) in enumerate(zip(r, widths))))
            if k == 0 or k == len(self.shapes):
                if extra_rows or k == 0:
                    lines.append("-" * len(lines[-1]))
        return "\n".join(lines) + "\n"


def _column_block(n: int, mus: Sequence[tuple]) -> List[List[int]]:
    memo: dict = {}
    shapes = [tuple(p) for p in enumerate_partitions(n)]
    return [[_mn(lam, mu, memo) for lam in shapes] for mu in mus]


def _default_threads() -> int:
    return os.cpu_count() or 1


def compute_columns(n: int, mus: Sequence[Partition], threads: int = 1) -> List[List[int]]:
    """Character columns (one list over shapes in canonical order per ``mu``).

    Columns are split into contiguous chunks evaluated in worker processes;
    results are reassembled in input order, so output is independent of the
    thread count.
    """
    mus = [tuple(m) for m in mus]
    if threads is None:
        threads = _default_threads()
    if threads <= 1 or len(mus) < 16:
        return _column_block(n, mus)
    chunks = [mus[i::threads] for i in range(threads)]
    cols: Dict[tuple, List[int]] = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for chunk, block in zip(chunks, pool.map(_column_block, [n] * len(chunks), chunks)):
            cols.update(zip(chunk, block))
    return [cols[m] for m in mus]


def char_table(n: int, threads: int = 1, max_n: int = MAX_TABLE_N) -> CharacterTable:
    """Full character table of ``S_n`` with rows and columns in canonical order."""
    if n < 1:
        raise ContractError("n must be positive")
    check_limit("n", n, max_n)
    parts = enumerate_partitions(n)
    cols = compute_columns(n, parts, threads)
    values = tuple(tuple(cols[c][r] for c in range(len(parts))) for r in range(len(parts)))
    return CharacterTable(n, tuple(parts), tuple(parts), values)


def abs_column_sum(mu, memo: Optional[dict] = None) -> int:
    mu = Partition.from_parts(mu)
    if memo is None:
        memo = {}
    return sum(abs(_mn(tuple(lam), tuple(mu), memo)) for lam in enumerate_partitions(mu.n))


@dataclass(frozen=True)
class CancellationReport:
    free: bool
    tableaux: int
    abs_sum: int
    witness: Optional[Partition]

    def __bool__(self):
        return self.free


def is_cancellation_free(mu, max_n: int = MAX_TABLEAU_N) -> CancellationReport:
    """Compare the unsigned tableau count of content ``mu`` with the column's absolute sum.

    When they differ, ``witness`` is the first shape (canonical order) that
    carries tableaux of both signs.
    """
    content = Partition.from_parts(mu)
    check_limit("n", content.n, max_n)
    total = 0
    witness = None
    for lam in enumerate_partitions(content.n):
        pos, neg = signed_tableau_counts(lam, content)
        total += pos + neg
        if pos and neg and witness is None:
            witness = lam
    abs_sum = abs_column_sum(content)
    return CancellationReport(total == abs_sum, total, abs_sum, witness)
