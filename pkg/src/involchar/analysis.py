"""Comparisons between involution-factorization counts and character sums.

For each cycle type ``mu`` the survey compares ``N(mu)``, the number of
ordered involution pairs with product of type ``mu``, against the absolute
column sum of the character table at ``mu``.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import asdict, dataclass
from typing import List, Sequence, Tuple

from .characters import compute_columns
from .counting import count_decompositions
from .errors import ContractError, check_limit
from .partitions import Partition, enumerate_partitions

MAX_SURVEY_N = 16

N_TOTAL = "n-total"
CHAR_TOTAL = "char-total"
OVERCOUNT = "overcount"
SEQUENCE_KINDS = (N_TOTAL, CHAR_TOTAL, OVERCOUNT)


@dataclass(frozen=True)
class SurveyRow:
    mu: Partition
    n_mu: int
    abs_sum: int

    @property
    def diff(self) -> int:
        # kept signed: a negative value would be a notable finding
        return self.n_mu - self.abs_sum

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "n_mu": self.n_mu, "abs_sum": self.abs_sum, "diff": self.diff}


@dataclass(frozen=True)
class SurveySummary:
    n: int
    discrepancies: int
    agreements: int
    known_agreements: int
    partitions: int
    negative_diffs: int = 0


def abs_sums(n: int, threads: int = 1) -> List[int]:
    """Absolute character column sums for every ``mu`` of ``n`` in canonical order."""
    cols = compute_columns(n, enumerate_partitions(n), threads)
    return [sum(abs(v) for v in col) for col in cols]


def survey(n: int, threads: int = 1, max_n: int = MAX_SURVEY_N) -> Tuple[List[SurveyRow], SurveySummary]:
    if n < 1:
        raise ContractError("n must be positive")
    check_limit("n", n, max_n)
    mus = enumerate_partitions(n)
    rows = [SurveyRow(mu, count_decompositions(mu), s) for mu, s in zip(mus, abs_sums(n, threads))]
    agree = sum(1 for r in rows if r.diff == 0)
    summary = SurveySummary(
        n=n,
        discrepancies=len(rows) - agree,
        agreements=agree,
        known_agreements=sum(1 for mu in mus if mu.is_rectangular()),
        partitions=len(rows),
        negative_diffs=sum(1 for r in rows if r.diff < 0),
    )
    return rows, summary


def row_sum_sequence(kind: str, n_max: int, threads: int = 1, max_n: int = MAX_SURVEY_N) -> List[int]:
    """Per-``n`` totals for ``n = 1..n_max``.

    ``n-total`` sums ``N(mu)`` over ``mu``; ``char-total`` sums the absolute
    values of the whole character table; ``overcount`` is their difference.
    """
    if kind not in SEQUENCE_KINDS:
        raise ContractError(f"unknown sequence kind {kind!r}; expected one of {SEQUENCE_KINDS}")
    if n_max < 1:
        raise ContractError("n_max must be positive")
    check_limit("n_max", n_max, max_n)
    out = []
    for n in range(1, n_max + 1):
        n_total = sum(count_decompositions(mu) for mu in enumerate_partitions(n))
        if kind == N_TOTAL:
            out.append(n_total)
            continue
        char_total = sum(abs_sums(n, threads))
        out.append(char_total if kind == CHAR_TOTAL else n_total - char_total)
    return out


@dataclass(frozen=True)
class DivergenceRow:
    mus: Tuple[Partition, ...]
    abs_sums: Tuple[int, ...]
    n_values: Tuple[int, ...]

    @property
    def identical(self) -> bool:
        return self.abs_sums == self.n_values

    def multiset_equal(self) -> bool:
        return Counter(self.abs_sums) == Counter(self.n_values)

    def differences(self) -> List[Tuple[Partition, int, int]]:
        """``(mu, N(mu), abs sum)`` at every position where the rows differ."""
        return [(m, nv, a) for m, a, nv in zip(self.mus, self.abs_sums, self.n_values) if a != nv]


def divergence_row(n: int, threads: int = 1, max_n: int = MAX_SURVEY_N) -> DivergenceRow:
    check_limit("n", n, max_n)
    rows, _ = survey(n, threads, max_n=max_n)
    return DivergenceRow(
        tuple(r.mu for r in rows), tuple(r.abs_sum for r in rows), tuple(r.n_mu for r in rows)
    )


def survey_to_csv(rows: Sequence[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["mu", "N", "abs_sum", "diff"])
    for r in rows:
        w.writerow([str(r.mu), r.n_mu, r.abs_sum, r.diff])
    return buf.getvalue()


def summaries_to_csv(summaries: Sequence[SurveySummary]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "discrepancies", "agreements", "known_agreements", "partitions"])
    for s in summaries:
        w.writerow([s.n, s.discrepancies, s.agreements, s.known_agreements, s.partitions])
    return buf.getvalue()


def survey_to_json(rows: Sequence[SurveyRow], summary: SurveySummary) -> str:
    return json.dumps({"rows": [r.to_json() for r in rows], "summary": asdict(summary)})


def to_bfile(values: Sequence[int], offset: int = 1) -> str:
    """OEIS b-file text: one ``n a(n)`` line per term."""
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, offset))


def parse_bfile(text: str) -> List[Tuple[int, int]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, v = line.split()
        out.append((int(i), int(v)))
    return out
