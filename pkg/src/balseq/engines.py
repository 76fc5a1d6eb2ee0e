"""Four independent engines for B_{k,n} and C_{k,n}.

B satisfies B_n = 3k*B_{n-1} + (1-k)*B_{n-2} with B_0 = 0, B_1 = 1; the
companion C shares the recurrence with seeds C_0 = 1, C_1 = 3.  Each engine
takes a different route to the same integers:

  iterative  - runs the recurrence (linear in n, capped to avoid accidental
               quadratic bignum blowups);
  matrix     - binary powers of A = [[3k, 1-k], [1, 0]], reading B_n off
               A^n and C_n off R*A^n with R = [[3, 1-k], [1, 3(1-k)]];
  binet      - coordinates of alpha^n in the quadratic ring (ring module);
  doubling   - the division-free index-doubling pair
               B_{2n} = 2*B_n*B_{n+1} - 3k*B_n^2,
               B_{2n+1} = B_{n+1}^2 + (1-k)*B_n^2.

The doubling pair state is (B_n, B_{n+1}) rather than the (B_{n-1}, B_n,
B_{n+1}) window, so no division by (1-k) is ever needed and k = 1 works
uniformly.  C reduces to B via C_n = B_{n+1} + 3(1-k)*B_n everywhere except
the matrix engine, which exercises the R*A^n representation directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .ring import SequenceParams, alpha_power_components

ITERATIVE_CAP_DEFAULT = 100_000


class IterativeCapError(ValueError):
    """Raised when the iterative engine is asked for an index over its cap."""


class Engine(enum.Enum):
    ITERATIVE = "iterative"
    MATRIX = "matrix"
    BINET = "binet"
    FAST_DOUBLING = "doubling"


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over the exact integers."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a11, self.a12), (self.a21, self.a22)


def mat_pow(m: Mat2, n: int) -> Mat2:
    if n < 0:
        raise ValueError("exponent must be >= 0")
    result = Mat2.identity()
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def a_matrix(params: SequenceParams) -> Mat2:
    k = params.k
    return Mat2(3 * k, 1 - k, 1, 0)


def r_base_matrix(params: SequenceParams) -> Mat2:
    k = params.k
    return Mat2(3, 1 - k, 1, 3 * (1 - k))


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0 (use term_b_negative for negative indices)")


def b_table(params: SequenceParams, n_max: int) -> list[int]:
    """B_{k,0..n_max} by the defining recurrence (the iterative engine in bulk)."""
    _check_n(n_max)
    k = params.k
    table = [0, 1]
    prev, cur = 0, 1
    for _ in range(n_max - 1):
        prev, cur = cur, 3 * k * cur + (1 - k) * prev
        table.append(cur)
    return table[: n_max + 1]


def c_table(params: SequenceParams, n_max: int) -> list[int]:
    """C_{k,0..n_max} by the defining recurrence."""
    _check_n(n_max)
    k = params.k
    table = [1, 3]
    prev, cur = 1, 3
    for _ in range(n_max - 1):
        prev, cur = cur, 3 * k * cur + (1 - k) * prev
        table.append(cur)
    return table[: n_max + 1]


def _doubling_pair(k: int, n: int) -> tuple[int, int]:
    """(B_n, B_{n+1}) by processing the bits of n from the top."""
    a, b = 0, 1
    for shift in range(n.bit_length() - 1, -1, -1):
        sq = a * a
        even = 2 * a * b - 3 * k * sq
        odd = b * b + (1 - k) * sq
        if (n >> shift) & 1:
            a, b = odd, 3 * k * odd + (1 - k) * even
        else:
            a, b = even, odd
    return a, b


def term_b(
    params: SequenceParams,
    n: int,
    engine: Engine = Engine.FAST_DOUBLING,
    iterative_cap: int = ITERATIVE_CAP_DEFAULT,
) -> int:
    """Exact B_{k,n} for n >= 0 via the chosen engine."""
    _check_n(n)
    if engine is Engine.ITERATIVE:
        if n > iterative_cap:
            raise IterativeCapError(f"n={n} exceeds iterative cap {iterative_cap}")
        return b_table(params, n)[n]
    if engine is Engine.MATRIX:
        return mat_pow(a_matrix(params), n).a21
    if engine is Engine.BINET:
        return alpha_power_components(params, n)[1]
    if engine is Engine.FAST_DOUBLING:
        return _doubling_pair(params.k, n)[0]
    raise ValueError(f"unknown engine {engine!r}")


def term_c(
    params: SequenceParams,
    n: int,
    engine: Engine = Engine.FAST_DOUBLING,
    iterative_cap: int = ITERATIVE_CAP_DEFAULT,
) -> int:
    """Exact C_{k,n} for n >= 0 via the chosen engine."""
    _check_n(n)
    k = params.k
    if engine is Engine.ITERATIVE:
        if n > iterative_cap:
            raise IterativeCapError(f"n={n} exceeds iterative cap {iterative_cap}")
        return c_table(params, n)[n]
    if engine is Engine.MATRIX:
        return (r_base_matrix(params) @ mat_pow(a_matrix(params), n)).a21
    if engine is Engine.BINET:
        # u + 3v = B_{n+1} + 3(1-k)*B_n via the recurrence
        u, v = alpha_power_components(params, n)
        return u + 3 * v
    if engine is Engine.FAST_DOUBLING:
        b_n, b_next = _doubling_pair(k, n)
        return b_next + 3 * (1 - k) * b_n
    raise ValueError(f"unknown engine {engine!r}")


def term_b_negative(params: SequenceParams, n: int) -> Fraction:
    """Exact B_{k,-n} = -B_{k,n} / (k-1)^n for n >= 1.

    Satisfies the backward recurrence B_{m-2} = (B_m - 3k*B_{m-1}) / (1-k);
    non-integral for k >= 3, equal to -B_{k,n} at k = 2.
    """
    if params.k == 1:
        raise ValueError("negative indices are undefined for k=1 (division by k-1)")
    if n < 1:
        raise ValueError("n must be >= 1 (term_b_negative returns B at index -n)")
    return Fraction(-term_b(params, n), (params.k - 1) ** n)


def power_sum(params: SequenceParams, n: int) -> int:
    """alpha^n + beta^n, read off the ring coordinates as 2u + 3k*v."""
    u, v = alpha_power_components(params, n)
    return 2 * u + params.trace * v


def matrix_power(params: SequenceParams, n: int) -> Mat2:
    """A^n for n >= 1; entries are [[B_{n+1}, (1-k)B_n], [B_n, (1-k)B_{n-1}]]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return mat_pow(a_matrix(params), n)


def r_matrix(params: SequenceParams, n: int) -> Mat2:
    """R*A^n for n >= 1; entries are [[C_{n+1}, (1-k)C_n], [C_n, (1-k)C_{n-1}]]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return r_base_matrix(params) @ mat_pow(a_matrix(params), n)
