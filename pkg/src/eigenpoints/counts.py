"""Closed-form counts and graded Betti data for generic eigenschemes.

The eigenscheme of a generic order-d tensor on P^n is a reduced set of
sum_{i=0}^{n} (d-1)^i points; deleting matrix columns gives determinantal
curves and surfaces whose degrees obey the same geometric sum one or two
steps shorter.  The minor ideal is resolved by an Eagon-Northcott complex
whose graded ranks are tabulated here, and the multiplicity can be
recovered independently from that table through the Hilbert-series
numerator: a useful exactness cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import unipoly
from .rationals import rational


def expected_count(n: int, d: int) -> int:
    """Length of a generic eigenscheme on P^n: sum_{i=0}^{n} (d-1)^i."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    return sum((d - 1) ** i for i in range(n + 1))


def eigencurve_degree(n: int, d: int) -> int:
    """Degree of the curve cut out after deleting one matrix column."""
    if n < 3 or d < 2:
        raise ValueError("need n >= 3 and d >= 2")
    return sum((d - 1) ** i for i in range(n))


def eigensurface_degree(n: int, d: int) -> int:
    """Degree of the surface cut out after deleting two matrix columns."""
    if n < 3 or d < 2:
        raise ValueError("need n >= 3 and d >= 2")
    return sum((d - 1) ** i for i in range(n - 1))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of the minor ideal, steps 1..n.

    steps[i-1] lists (twist, rank) pairs for homological step i, twists
    stored as the negative integers they are printed with.
    """

    n: int
    d: int
    steps: tuple

    def step(self, i: int):
        return self.steps[i - 1]

    def total_rank(self, i: int) -> int:
        return sum(rank for _, rank in self.steps[i - 1])


def eagon_northcott_betti(n: int, d: int) -> BettiTable:
    """Betti table of the Eagon-Northcott resolution of the minor ideal.

    Step i has rank binom(n+1, i+1) at each twist -d - a - b(d-1) with
    a + b = i - 1; coincident twists are collected.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    steps = []
    for i in range(1, n + 1):
        by_twist = {}
        rank = comb(n + 1, i + 1)
        for a in range(i):
            b = i - 1 - a
            twist = -d - a - b * (d - 1)
            by_twist[twist] = by_twist.get(twist, 0) + rank
        steps.append(tuple(sorted(by_twist.items(), reverse=True)))
    return BettiTable(n=n, d=d, steps=tuple(steps))


def multiplicity_from_betti(table: BettiTable, n: int) -> int:
    """Multiplicity of the scheme encoded by a Betti table on P^n.

    Forms the Hilbert-series numerator K(t) = 1 + sum_i (-1)^i sum_j
    rank_ij t^(-twist_ij), divides exactly by (1-t)^n and evaluates at 1.
    Raises ArithmeticError when K is not divisible by (1-t)^n, which
    signals a malformed table.
    """
    if len(table.steps) != n:
        raise ValueError(f"table has {len(table.steps)} steps, expected {n}")
    degree = max(-twist for step in table.steps for twist, _ in step)
    k = [rational(0)] * (degree + 1)
    k[0] = rational(1)
    sign = -1
    for step in table.steps:
        for twist, rank in step:
            k[-twist] = k[-twist] + sign * rank
        sign = -sign
    k = unipoly.trim(k)
    one_minus_t = [rational(1), rational(-1)]
    for _ in range(n):
        q, r = unipoly.divmod_exact(k, one_minus_t)
        if r:
            raise ArithmeticError("Hilbert numerator not divisible by (1-t)^n")
        k = q
    value = unipoly.evaluate(k, rational(1))
    if value.denominator != 1:
        raise ArithmeticError("multiplicity came out non-integral")
    return int(value)
