"""Lower bounds for crepant-curve degrees.

LB(N) divides -r_X K.C for every crepant curve whose slice invariant e'
equals N; it is assembled from per-prime factors f_p read off the multiset
R of basket indices.  The case analysis below is a first-match cascade: the
guards overlap and earlier clauses win.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .arith import indicator
from .basket import n_count

__all__ = ["LBContext", "f_p", "lb", "SMALL_PRIMES"]

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


@dataclass(frozen=True)
class LBContext:
    """The multiset R of basket indices with its p-valuation counts cached."""

    R: tuple

    def __init__(self, R):
        object.__setattr__(self, "R", tuple(sorted(R)))
        counts = {}
        for p in SMALL_PRIMES:
            e = 1
            while p**e <= 24:
                counts[(p, e)] = n_count(self.R, p, e)
                e += 1
        object.__setattr__(self, "_counts", counts)

    def n(self, p: int, e: int) -> int:
        """Number of r in R with p-valuation exactly e."""
        return self._counts.get((p, e), 0)

    @property
    def r_x(self) -> int:
        return lcm(*self.R) if self.R else 1


def f_p(ctx: LBContext, p: int, N: int) -> int:
    if N < 2:
        raise ValueError("N must be at least 2")
    if p not in SMALL_PRIMES:
        raise ValueError(f"p must be a prime at most 23, got {p}")
    if p == 2:
        return _f2(ctx, N)
    if p == 3:
        return _f3(ctx, N)
    n_p = ctx.n(p, 1)
    if n_p > 0 and N - 1 >= n_p + 1 + indicator((n_p + 2) % p == 0):
        return p
    return 1


def _f3(ctx: LBContext, N: int) -> int:
    n9, n3 = ctx.n(3, 2), ctx.n(3, 1)
    if n9 > 0 and N - 1 >= 3:
        if N - 1 >= n3 + 1 + indicator((n3 + 2) % 3 == 0):
            return 9
        return 3
    if n9 == 0 and n3 > 0 and N - 1 >= n3 + 1 + indicator((n3 + 2) % 3 == 0):
        return 3
    return 1


def _f2(ctx: LBContext, N: int) -> int:
    e = 0
    r_x = ctx.r_x
    while r_x % 2 == 0:
        r_x //= 2
        e += 1
    if e == 0 or N == 2:
        return 1
    n16, n8, n4, n2 = ctx.n(2, 4), ctx.n(2, 3), ctx.n(2, 2), ctx.n(2, 1)
    # (a)
    if n16 == 1:
        if n8 != 0:
            return 2
        if n4 != 0:
            return 4
        return 8
    # (b)
    if n8 == 2:
        if n4 != 0:
            return 2
        if n2 != 0:
            return 4
        return 8
    # (c)
    if n16 == 0 and n8 <= 1 and n4 + n8 > 0 and N - 1 >= 2 * (n4 // 2) + 2:
        if n4 <= 1 and N - 1 >= 2 * ((n2 + n8) // 2) + 2:
            return 2**e
        if n4 == 2 and _contains(ctx.R, [4, 4]) and N - 1 >= 2 * ((n2 + n8 + 2) // 2) + 2:
            return 2**e
        if n4 == 3 and _contains(ctx.R, [4, 4, 4]) and n2 == 0 and n8 == 0:
            return 2**e
        return 2 ** (e - 1)
    # (d)
    if n16 == 0 and n8 == 0 and n4 == 2 and N - 1 in (2, 3):
        return 2
    # (e); silent when n2 > 2 with small N, which falls through to (f)
    if n16 == 0 and n8 == 0 and n4 == 0:
        if 0 < n2 <= 2:
            return 2
        if n2 > 2 and N - 1 >= 2 * (n2 // 2) + 2:
            return 2
    # (f)
    return 1


def _contains(R, needed) -> bool:
    pool = list(R)
    for x in needed:
        if x not in pool:
            return False
        pool.remove(x)
    return True


def lb(ctx: LBContext, N: int) -> int:
    """The degree lower bound LB(N) = product of the per-prime factors."""
    out = 1
    for p in SMALL_PRIMES:
        out *= f_p(ctx, p, N)
    return out
