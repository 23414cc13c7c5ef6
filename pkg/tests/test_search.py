from fractions import Fraction

import pytest

from fano3.basket import Basket
from fano3.search import ceil_display, run_search, step1, step3, verify_candidate
from fano3.tables import TABLE_EQ66, TABLE_MAIN


def test_ceil_display():
    assert ceil_display(Fraction(149, 2)) == "74.5"
    assert ceil_display(Fraction(6259, 84)) == "74.52"
    assert ceil_display(Fraction(135, 2)) == "67.5"
    assert ceil_display(Fraction(60)) == "60"


def test_step1_contains_known_rows():
    pairs = dict(step1(66))
    assert pairs[(5,)] == 96
    assert pairs[()] == 24
    assert ((2,) in pairs) == (4 * 45 > 66)


def test_step3_attaches_budget():
    cand = step3(Basket([(5, 1)]), 84, 84, 84, 96)
    assert cand is not None
    assert cand.lb_values == (5, 5, 5)
    assert cand.nabla == Fraction(6259, 84)


def test_table_main_regression(candidates_greater):
    assert len(candidates_greater) == 36
    table = {row.key: row for row in TABLE_MAIN}
    assert len(table) == 36
    for cand in candidates_greater:
        row = table.get(cand.key)
        assert row is not None, f"unexpected candidate {cand}"
        assert cand.r_x == row.r_x
        assert cand.rXc2c1 == row.rXc2c1
        assert cand.prime_powers == row.prime_powers
        assert cand.lb_values == row.lb_values
        assert cand.nabla_display == row.nabla_display


def test_rows_33_34_share_numerics_but_not_j_a(candidates_greater):
    pairs = [
        c for c in candidates_greater
        if (c.basket.as_tuples(), c.q, c.rXc13) in {
            (r.basket, r.q, r.rXc13) for r in TABLE_MAIN if r.no in (33, 34)
        }
    ]
    assert len(pairs) == 2
    assert pairs[0].j_a != pairs[1].j_a


def test_table_eq66_regression(candidates_equal):
    assert len(candidates_equal) == 7
    table = {row.key: row for row in TABLE_EQ66}
    for cand in candidates_equal:
        row = table.get(cand.key)
        assert row is not None, f"unexpected candidate {cand}"
        assert cand.nabla_display == row.nabla_display


def test_worker_determinism(candidates_greater):
    assert run_search(66, "greater", 4) == candidates_greater
    assert run_search(66, "greater", 8) == candidates_greater


def test_verify_candidate_rejects_tampering(candidates_greater):
    from dataclasses import replace

    good = candidates_greater[0]
    verify_candidate(good, 66, "greater")
    bad = replace(good, rXc2c1=good.rXc2c1 + 1)
    with pytest.raises(AssertionError):
        verify_candidate(bad, 66, "greater")


def test_bad_mode_rejected():
    with pytest.raises(ValueError):
        run_search(66, "sideways", 1)
