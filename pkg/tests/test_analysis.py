import json

import pytest

from involchar.analysis import (
    divergence_row,
    parse_bfile,
    row_sum_sequence,
    survey,
    survey_to_csv,
    survey_to_json,
    to_bfile,
)
from involchar.errors import ContractError, ResourceLimitError
from involchar.partitions import Partition

from tables import (
    CHAR_TOTAL_8_13,
    DIVERGENCE_8,
    FIGURE_2_N_ROW,
    N_TOTAL_8_13,
    OVERCOUNT_8_13,
    SEQUENCE_CHAR_TOTAL_1_7,
    TABLE_1,
    TABLE_2,
    mu,
)


def test_survey_examples():
    rows9 = {r.mu: r for r in survey(9)[0]}
    assert rows9[mu((1, 6), (3, 1))].diff == 20
    rows10 = {r.mu: r for r in survey(10)[0]}
    assert rows10[mu((1, 4), (2, 3))].diff == 28


def test_summary_8():
    _, s = survey(8)
    assert (s.discrepancies, s.agreements, s.known_agreements, s.partitions) == (6, 16, 4, 22)


def test_no_discrepancies_up_to_7():
    for n in range(1, 8):
        rows, s = survey(n)
        assert s.discrepancies == 0 and s.agreements == s.partitions
        assert all(r.diff == 0 for r in rows)


@pytest.mark.parametrize("n", [8, 9, 10])
def test_table_1(n):
    rows, _ = survey(n)
    assert {r.mu: r.diff for r in rows if r.diff > 0} == TABLE_1[n]
    assert all(r.diff >= 0 for r in rows)


def test_rectangular_rows_agree():
    for n in range(1, 11):
        for r in survey(n)[0]:
            if r.mu.is_rectangular():
                assert r.diff == 0


def test_sequences():
    assert row_sum_sequence("char-total", 7) == SEQUENCE_CHAR_TOTAL_1_7
    assert row_sum_sequence("n-total", 13)[7:] == N_TOTAL_8_13
    assert row_sum_sequence("char-total", 13)[7:] == CHAR_TOTAL_8_13
    assert row_sum_sequence("overcount", 13)[7:] == OVERCOUNT_8_13


def test_sequence_errors():
    with pytest.raises(ContractError):
        row_sum_sequence("bogus", 3)
    with pytest.raises(ResourceLimitError):
        row_sum_sequence("n-total", 17)


def test_divergence_8():
    d = divergence_row(8)
    assert 764 in d.n_values and 764 in d.abs_sums
    assert sorted((nv, a) for _, nv, a in d.differences()) == sorted(DIVERGENCE_8)
    assert not d.identical and not d.multiset_equal()


def test_divergence_6():
    d = divergence_row(6)
    assert d.identical and list(d.n_values) == FIGURE_2_N_ROW


def test_divergence_1():
    d = divergence_row(1)
    assert d.abs_sums == d.n_values == (1,)


def test_survey_limit():
    with pytest.raises(ResourceLimitError):
        survey(17)


def test_parallel_survey_matches_serial():
    assert survey(13, threads=1) == survey(13, threads=3)


def test_emitters():
    rows, s = survey(4)
    text = survey_to_csv(rows)
    assert text.splitlines()[0] == "mu,N,abs_sum,diff"
    assert text.splitlines()[1] == "4,4,4,0"
    doc = json.loads(survey_to_json(rows, s))
    assert doc["summary"]["partitions"] == 5
    assert doc["rows"][-1] == {"mu": [1, 1, 1, 1], "n_mu": 10, "abs_sum": 10, "diff": 0}


def test_bfile_round_trip():
    values = row_sum_sequence("n-total", 9)
    text = to_bfile(values)
    assert text.splitlines()[0] == "1 1"
    assert parse_bfile(text) == list(enumerate(values, 1))
