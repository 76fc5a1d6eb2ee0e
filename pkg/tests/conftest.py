"""Shared brute-force oracles, written independently of the package code.

Every numeric expectation in the suite either comes from one of these
oracles or is a frozen value that was computed with them (or taken from the
published value table where that table is consistent with the recurrence).
"""

from __future__ import annotations

from fractions import Fraction


def oracle_b(k: int, n_max: int) -> list[int]:
    """B_{k,0..n_max} straight from the defining recurrence."""
    values = [0, 1]
    while len(values) <= n_max:
        values.append(3 * k * values[-1] + (1 - k) * values[-2])
    return values[: n_max + 1]


def oracle_c(k: int, n_max: int) -> list[int]:
    """C_{k,0..n_max} straight from the defining recurrence."""
    values = [1, 3]
    while len(values) <= n_max:
        values.append(3 * k * values[-1] + (1 - k) * values[-2])
    return values[: n_max + 1]


def oracle_b_negative(k: int, n_max: int) -> dict[int, Fraction]:
    """B_{k,-1..-n_max} by running the recurrence backward with exact rationals.

    B_{m-2} = (B_m - 3k*B_{m-1}) / (1 - k), seeded from (B_0, B_1) = (0, 1).
    """
    assert k >= 2
    values = {0: Fraction(0), 1: Fraction(1)}
    for m in range(1, -n_max, -1):
        values[m - 2] = (values[m] - 3 * k * values[m - 1]) / (1 - k)
    return {-n: values[-n] for n in range(1, n_max + 1)}
