import random
from math import gcd

from fano3.basket import r_budget
from fano3.lb import LBContext, f_p, lb
from fano3.tables import TABLE_MAIN


def test_f_p_examples():
    assert f_p(LBContext((5,)), 5, 3) == 5
    assert f_p(LBContext((2, 4, 4, 7)), 2, 3) == 2
    assert f_p(LBContext((3, 3)), 7, 10) == 1


def test_lb_examples():
    assert lb(LBContext((3, 3)), 5) == 3
    assert lb(LBContext((5,)), 7) == 5
    assert lb(LBContext((2, 4, 4, 7)), 3) == 14


def test_lb_table_regression():
    # every frozen table row's LB column is reproduced from its R alone
    for row in TABLE_MAIN:
        ctx = LBContext(tuple(r for r, _ in row.basket))
        computed = tuple(lb(ctx, pa) for pa in row.prime_powers)
        assert computed == row.lb_values, f"row {row.no}"


def _random_admissible_R(rng):
    R = []
    while True:
        r = rng.randint(2, 24)
        if r_budget(tuple(R + [r])) >= 24:
            break
        R.append(r)
        if rng.random() < 0.25:
            break
    return tuple(sorted(R))


def test_lb2_is_one_and_divides_rx():
    rng = random.Random(20230814)
    for _ in range(500):
        ctx = LBContext(_random_admissible_R(rng))
        assert lb(ctx, 2) == 1
        for N in (2, 3, 4, 7, 12, 24):
            assert ctx.r_x % lb(ctx, N) == 0


def test_lb_divisibility_monotone_random():
    rng = random.Random(99173)
    for _ in range(500):
        ctx = LBContext(_random_admissible_R(rng))
        values = [lb(ctx, N) for N in range(2, 25)]
        for i in range(len(values) - 1):
            assert values[i + 1] % values[i] == 0, (ctx.R, i + 2)


def test_lb4_for_coprime_squarefree():
    rng = random.Random(4451)
    squarefree = [r for r in range(2, 25) if all(r % (p * p) for p in (2, 3))]
    checked = 0
    while checked < 200:
        rng.shuffle(squarefree)
        R = []
        for r in squarefree:
            if all(gcd(r, x) == 1 for x in R) and r_budget(tuple(R + [r])) < 24:
                R.append(r)
        if not R:
            continue
        ctx = LBContext(tuple(sorted(R)))
        assert lb(ctx, 4) == ctx.r_x, ctx.R
        if ctx.r_x % 3:
            assert lb(ctx, 3) == ctx.r_x, ctx.R
        checked += 1
