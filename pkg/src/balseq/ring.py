"""Exact arithmetic in the quadratic ring Z[alpha], alpha^2 = 3k*alpha - (k-1).

Elements are integer coordinate pairs (u, v) standing for u + v*alpha, where
alpha is the dominant root of x^2 - 3kx + (k-1).  The root itself is never
evaluated as a radical or a float: powers of alpha are computed by reducing
alpha^2 back into the {1, alpha} basis, which keeps every value exact at any
size and makes the closed-form route a genuinely independent engine.  The
coordinates of alpha^n recover the sequence directly: v = B_{k,n}.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SequenceParams:
    """The family parameter k >= 1 plus the derived characteristic data."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def trace(self) -> int:
        """alpha + beta = 3k."""
        return 3 * self.k

    @property
    def norm(self) -> int:
        """alpha * beta = k - 1 (zero exactly in the degenerate case k = 1)."""
        return self.k - 1

    @property
    def discriminant(self) -> int:
        """trace^2 - 4*norm = 9k^2 - 4k + 4, positive for every k >= 1."""
        return 9 * self.k * self.k - 4 * self.k + 4


@dataclass(frozen=True)
class RingElement:
    """u + v*alpha with exact integer coordinates."""

    u: int
    v: int
    params: SequenceParams

    @classmethod
    def one(cls, params: SequenceParams) -> RingElement:
        return cls(1, 0, params)

    @classmethod
    def alpha(cls, params: SequenceParams) -> RingElement:
        return cls(0, 1, params)

    def conj(self) -> RingElement:
        """Map alpha to the other root beta = 3k - alpha."""
        return RingElement(self.u + self.params.trace * self.v, -self.v, self.params)

    def norm(self) -> int:
        """Product with the conjugate: u^2 + 3k*uv + (k-1)*v^2."""
        k = self.params.k
        return self.u * self.u + 3 * k * self.u * self.v + (k - 1) * self.v * self.v

    def __mul__(self, other: RingElement) -> RingElement:
        if not isinstance(other, RingElement):
            return NotImplemented
        return ring_mul(self, other)

    def __pow__(self, n: int) -> RingElement:
        return ring_pow(self, n)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Multiply, reducing alpha^2 = 3k*alpha - (k-1) back into the basis."""
    if a.params != b.params:
        raise ValueError(f"parameter mismatch: k={a.params.k} vs k={b.params.k}")
    k = a.params.k
    vv = a.v * b.v
    return RingElement(
        a.u * b.u - (k - 1) * vv,
        a.u * b.v + b.u * a.v + 3 * k * vv,
        a.params,
    )


def ring_pow_counted(a: RingElement, n: int) -> tuple[RingElement, int]:
    """a^n by binary exponentiation, returning the ring-multiplication count.

    The count is at most 2*ceil(log2(n+1)) + 2, which is what keeps the
    closed-form engine logarithmic in n.
    """
    if n < 0:
        raise ValueError("exponent must be >= 0")
    result = RingElement.one(a.params)
    base = a
    count = 0
    m = n
    while m:
        if m & 1:
            result = ring_mul(result, base)
            count += 1
        m >>= 1
        if m:
            base = ring_mul(base, base)
            count += 1
    return result, count


def ring_pow(a: RingElement, n: int) -> RingElement:
    """a^n with a^0 = (1, 0), valid for every k >= 1 including k = 1."""
    result, _ = ring_pow_counted(a, n)
    return result


def alpha_power_components(params: SequenceParams, n: int) -> tuple[int, int]:
    """Coordinates (u, v) of alpha^n in the basis {1, alpha}.

    v is B_{k,n}; u is (1-k)*B_{k,n-1} for n >= 1; and alpha^n + beta^n
    equals 2u + 3k*v because the conjugate power is u + v*beta.
    """
    if n < 0:
        raise ValueError("exponent must be >= 0")
    power = ring_pow(RingElement.alpha(params), n)
    return power.u, power.v
