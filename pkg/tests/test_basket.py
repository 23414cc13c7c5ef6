from fractions import Fraction

import pytest

from fano3.basket import (
    BUDGET,
    Basket,
    OrbifoldPoint,
    enumerate_R,
    enumerate_baskets,
    gorenstein_index,
    n_count,
    r_budget,
    rX_c2c1,
    rr_fano_integral,
)


def test_orbifold_point_validation():
    OrbifoldPoint(5, 2)
    with pytest.raises(ValueError):
        OrbifoldPoint(1, 1)
    with pytest.raises(ValueError):
        OrbifoldPoint(4, 2)  # gcd
    with pytest.raises(ValueError):
        OrbifoldPoint(5, 3)  # b > r/2


def test_gorenstein_index():
    assert gorenstein_index(Basket([(2, 1), (3, 1), (5, 2), (11, 1)])) == 330
    assert gorenstein_index(Basket([])) == 1
    assert gorenstein_index(Basket([(5, 1), (5, 2)])) == 5


def test_rX_c2c1_values():
    assert rX_c2c1((5,)) == 96
    assert rX_c2c1((3, 3)) == 56
    assert rX_c2c1(()) == 24
    with pytest.raises(ValueError):
        rX_c2c1((16, 9))


def test_rX_c2c1_always_positive_integer():
    for R in enumerate_R():
        v = rX_c2c1(R)
        assert isinstance(v, int) and v > 0


def test_n_count():
    assert n_count((2, 4, 4, 7), 2, 2) == 2
    assert n_count((2, 4, 4, 7), 2, 1) == 1
    assert n_count((9, 3), 3, 2) == 1


def test_enumerate_R_membership():
    everything = set(enumerate_R())
    assert (24,) in everything
    assert (8, 16) in everything  # 7.875 + 15.9375 < 24
    assert (9, 16) not in everything
    assert () in everything


def test_enumerate_R_canonical_and_admissible():
    seen = set()
    max_len = 0
    for R in enumerate_R():
        assert R == tuple(sorted(R))
        assert R not in seen
        seen.add(R)
        assert r_budget(R) < BUDGET
        assert all(2 <= r <= 24 for r in R)
        max_len = max(max_len, len(R))
    assert max_len <= 15


def test_enumerate_baskets():
    five = sorted(b.as_tuples() for b in enumerate_baskets((5,)))
    assert five == [((5, 1),), ((5, 2),)]
    assert [b.as_tuples() for b in enumerate_baskets((2,))] == [((2, 1),)]
    assert [b.as_tuples() for b in enumerate_baskets((4, 4))] == [((4, 1), (4, 1))]
    # multiset dedup: {(5,1),(5,2)} appears once
    pairs = sorted(b.as_tuples() for b in enumerate_baskets((5, 5)))
    assert pairs == [
        (((5, 1), (5, 1))),
        (((5, 1), (5, 2))),
        (((5, 2), (5, 2))),
    ]


def test_basket_budget_enforced():
    with pytest.raises(ValueError):
        Basket([(16, 1), (9, 1)])


def test_rr_fano_integral():
    assert rr_fano_integral(Basket([(5, 1)]), Fraction(84, 5))
    assert rr_fano_integral(Basket([]), 2)
    assert not rr_fano_integral(Basket([(5, 1)]), Fraction(83, 5))
