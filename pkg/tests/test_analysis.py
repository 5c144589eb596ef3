"""Report-producing checks: positivity, uniqueness witness, non-decomposability,
family scan."""

import pytest

from cycloeta.analysis import (
    CaseMargin,
    UniquenessWitness,
    case_margin,
    check_positivity,
    conjecture_scan,
    extended_case_failures,
    nondecomp_witness,
    uniqueness_hypotheses,
)
from cycloeta.etaprod import cyclotomic_spec, expand
from cycloeta.lseries import CoeffTable, c_table, coeff_table_from_series, expansion_values


def test_case_margin_frozen():
    assert case_margin(7, 1) == CaseMargin(7, 1, "ramified", 49, 7, True)
    assert case_margin(2, 2) == CaseMargin(2, 2, "split", 21, 5, True)
    # the tight inert corner: (73 - 9) * 10 = 640 against 80 * 8 - 2 = 638
    assert case_margin(3, 2) == CaseMargin(3, 2, "inert", 73, 9, True)


def test_case_margin_holds_extended():
    assert extended_case_failures(200, 10) == []


def test_check_positivity_small():
    report = check_positivity(500)
    assert report.verified
    assert report.failures == []
    assert report.inequality_failures == []
    assert all(m.ok for m in report.casewise)
    assert {m.case for m in report.casewise} == {"ramified", "split", "inert"}
    # one margin per prime power in range
    assert sum(1 for m in report.casewise if m.p == 2) == 8


def test_check_positivity_flags_injected_failure():
    values = [0, 0] + [1] * 9
    values[5] = -2
    report = check_positivity(10, CoeffTable("C", 10, values))
    assert report.failures == [5]
    assert not report.verified


def test_uniqueness_witness_validation():
    UniquenessWitness((2, 3, 5, 7, 11), (1, 1, 3, 7, 16))
    with pytest.raises(ValueError):
        UniquenessWitness((2, 3, 5, 7), (1, 1, 3, 7))
    with pytest.raises(ValueError):
        UniquenessWitness((2, 3, 5, 7, 11), (1, 0, 3, 7, 16))
    with pytest.raises(ValueError):
        UniquenessWitness((2, 3, 5, 7, 14), (1, 1, 3, 7, 28))


def test_uniqueness_hypotheses_canonical_witness():
    report = uniqueness_hypotheses(c_table(300))
    assert report.verified
    assert report.c1_zero
    assert report.witness.indices == (2, 3, 5, 7, 11)
    assert report.witness.coeffs == (1, 1, 3, 7, 16)
    assert report.searched_to == 300


def test_uniqueness_hypotheses_exhausted_search():
    report = uniqueness_hypotheses(c_table(300), search_bound=10)
    assert report.witness is None
    assert report.c1_zero
    assert not report.verified
    assert report.searched_to == 10


def test_uniqueness_hypotheses_raw_list():
    # h = 5 expansion starts at q^1, so the first hypothesis fails
    values = expansion_values(expand(cyclotomic_spec(5), 200), 200)
    report = uniqueness_hypotheses(values)
    assert not report.c1_zero
    assert not report.verified
    assert report.witness is not None


def test_nondecomp_witness_frozen():
    w11 = nondecomp_witness(11)
    assert (w11.bound, w11.m) == (5, 3)
    assert w11.valid
    w13 = nondecomp_witness(13)
    assert (w13.bound, w13.m) == (7, 5)
    assert w13.valid
    w17 = nondecomp_witness(17)
    assert (w17.bound, w17.m) == (12, 7)
    assert w17.valid


def test_nondecomp_witness_rejects_bad_p():
    with pytest.raises(ValueError):
        nondecomp_witness(7)
    with pytest.raises(ValueError):
        nondecomp_witness(12)


def test_nondecomp_witness_table_too_short():
    series = expand(cyclotomic_spec(11), 10)
    short = coeff_table_from_series(series, 10, "C")
    with pytest.raises(ValueError):
        nondecomp_witness(11, short)


def test_nondecomp_witness_supplied_table():
    series = expand(cyclotomic_spec(11), 40)
    table = coeff_table_from_series(series, 40, "C")
    assert nondecomp_witness(11, table).valid


def test_conjecture_scan_small():
    entries = conjecture_scan(7, 300)
    assert [e.h for e in entries] == [2, 3, 4, 5, 6, 7]
    assert all(e.first_negative_num24 is None for e in entries)
    assert all(e.truncation_limited for e in entries)
    assert [e.order24 for e in entries] == [3, 8, 9, 24, 10, 48]
    assert [e.exponent_integral for e in entries] == [
        False, False, False, True, False, True,
    ]
    with pytest.raises(ValueError):
        conjecture_scan(1, 50)
